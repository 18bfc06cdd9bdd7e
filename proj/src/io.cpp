#include "centropy/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "centropy/entropy.hpp"
#include "centropy/error.hpp"

namespace centropy::io {

std::string format_double(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string matrix_json(const Mat4& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < 4; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < 4; ++j) {
      if (j) out += ",";
      out += "[" + format_double(m(i, j).real(), 17) + "," + format_double(m(i, j).imag(), 17) + "]";
    }
    out += "]";
  }
  return out + "]";
}

std::string state_json(const Mat4& m) { return R"({"dim":[2,2],"matrix":)" + matrix_json(m) + "}"; }

std::string witness_json(const WitnessOperator& w) {
  return R"({"W":)" + matrix_json(w.W) + R"(,"tangent_point":)" + matrix_json(w.tangent_point.matrix()) +
         R"(,"t0":)" + format_double(w.t0, 17) + R"(,"target":)" + matrix_json(w.target.matrix()) + "}";
}

std::string orbit_report_json(const OrbitReport& r) {
  return R"({"S_total":)" + format_double(r.S_total, 17) + R"(,"min_cond_entropy":)" +
         format_double(r.min_cond_entropy, 17) + R"(,"negativity_reachable":)" +
         (r.negativity_reachable ? "true" : "false") + R"(,"achieving_unitary":)" +
         state_json(r.achieving_unitary.matrix()) + "}";
}

nlohmann::ordered_json to_json(const ClassReport& r) {
  return {
      {"S_total", r.S_total},
      {"cond_given_A", r.cond_given_A},
      {"cond_given_B", r.cond_given_B},
      {"M_value", r.M_value},
      {"is_cvenn", r.is_cvenn},
      {"is_acvenn", r.is_acvenn},
      {"is_ppt_separable", r.is_ppt_separable},
      {"is_abs_separable", r.is_abs_separable},
      {"is_bell_local", r.is_bell_local},
      {"distance_from_I4", r.distance_from_I4},
  };
}

nlohmann::ordered_json to_json(const SampleStats& s) {
  return {
      {"objective", std::string(to_string(s.objective))},
      {"n_samples", s.n_samples},
      {"n_accepted", s.n_accepted},
      {"extreme_value", s.extreme_value},
      {"extreme_state_spectrum", s.extreme_state_spectrum.values()},
      {"extreme_index", s.extreme_index},
      {"seed", s.seed},
  };
}

nlohmann::ordered_json to_json(const EntropyReport& r) {
  return {
      {"S_total", r.S_total},
      {"S_A", r.S_A},
      {"S_B", r.S_B},
      {"cond_given_A", r.cond_given_A},
      {"cond_given_B", r.cond_given_B},
  };
}

Mat4 matrix_from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::Parse, "matrix: " + why); };
  if (!j.is_array() || j.size() != 4) fail("expected 4 rows");
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != 4) fail("row " + std::to_string(i) + " must have 4 entries");
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& e = row[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        fail("entry (" + std::to_string(i) + "," + std::to_string(k) + ") must be [re, im]");
      }
      const double re = e[0].get<double>();
      const double im = e[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) fail("non-finite entry");
      m(i, k) = cplx(re, im);
    }
  }
  return m;
}

Mat4 state_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("matrix")) throw Error(ErrorCode::Parse, "state: missing \"matrix\"");
  if (j.contains("dim") && j["dim"] != nlohmann::json::array({2, 2})) {
    throw Error(ErrorCode::Parse, "state: \"dim\" must be [2,2]");
  }
  return matrix_from_json(j["matrix"]);
}

DensityMatrix state_from_json(const nlohmann::json& j, double psd_tol) {
  return DensityMatrix::from_matrix(state_matrix_from_json(j), psd_tol);
}

WitnessOperator witness_from_json(const nlohmann::json& j) {
  for (const char* key : {"W", "tangent_point", "t0", "target"}) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, std::string("witness: missing \"") + key + "\"");
  }
  if (!j["t0"].is_number()) throw Error(ErrorCode::Parse, "witness: \"t0\" must be a number");
  const Mat4 w = matrix_from_json(j["W"]);
  if (!is_hermitian(w, 1e-10)) throw Error(ErrorCode::NotHermitian, "witness operator is not Hermitian");
  return WitnessOperator{hermitian_part(w), DensityMatrix::from_matrix(matrix_from_json(j["tangent_point"])),
                         j["t0"].get<double>(), DensityMatrix::from_matrix(matrix_from_json(j["target"]))};
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

DensityMatrix read_state_file(const std::string& path, double psd_tol) {
  return state_from_json(read_json_file(path), psd_tol);
}

WitnessOperator read_witness_file(const std::string& path) { return witness_from_json(read_json_file(path)); }

}  // namespace centropy::io
