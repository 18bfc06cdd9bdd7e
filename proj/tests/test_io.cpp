#include <filesystem>
#include <fstream>

#include "centropy/error.hpp"
#include "centropy/io.hpp"
#include "support.hpp"

using namespace centropy;
using nlohmann::json;

namespace {

ErrorCode parse_error_code(const std::string& text) {
  try {
    io::state_from_json(json::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("format_double") {
  CHECK(io::format_double(0.25, 17) == "0.25");
  CHECK(io::format_double(1.0, 17) == "1");
  CHECK(io::format_double(1.0 / 3.0, 12) == "0.333333333333");
}

TEST_CASE("state JSON round-trips bit-exactly") {
  Philox4x64 rng(71);
  const Mat4 g = testing::random_matrix(rng);
  Mat4 rho = mul_adj(g, g);
  rho *= 1.0 / rho.trace().real();
  rho = hermitian_part(rho);
  const json j = json::parse(io::state_json(rho));
  CHECK(j["dim"] == json::array({2, 2}));
  CHECK(io::state_matrix_from_json(j) == rho);
}

TEST_CASE("malformed state documents are Parse errors") {
  CHECK(parse_error_code(R"({"dim":[2,2]})") == ErrorCode::Parse);
  CHECK(parse_error_code(R"({"dim":[2,3],"matrix":[]})") == ErrorCode::Parse);
  CHECK(parse_error_code(R"({"matrix":[[1,0,0,0]]})") == ErrorCode::Parse);
  CHECK(parse_error_code(R"({"matrix":[[[1,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],
                                      [[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],"x"]]})") == ErrorCode::Parse);
}

TEST_CASE("invalid states carry validation codes") {
  const std::string not_unit = R"({"matrix":[[[1,0],[0,0],[0,0],[0,0]],[[0,0],[1,0],[0,0],[0,0]],
                                             [[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]]]})";
  CHECK(parse_error_code(not_unit) == ErrorCode::NotUnitTrace);
  const std::string not_herm = R"({"matrix":[[[1,0],[0.5,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],
                                             [[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]]]})";
  CHECK(parse_error_code(not_herm) == ErrorCode::NotHermitian);
}

TEST_CASE("witness JSON round-trips") {
  const WitnessOperator w = build_witness(pure_state(bell_basis()[0]));
  const WitnessOperator back = io::witness_from_json(json::parse(io::witness_json(w)));
  CHECK(back.W == w.W);
  CHECK(back.t0 == w.t0);
  CHECK(back.target.matrix() == w.target.matrix());
  CHECK(eval_witness(back, maximally_mixed()) == eval_witness(w, maximally_mixed()));
}

TEST_CASE("report JSON field names") {
  const json c = io::to_json(classify(werner(0.5)));
  for (const char* key : {"S_total", "cond_given_A", "cond_given_B", "M_value", "is_cvenn", "is_acvenn",
                          "is_ppt_separable", "is_abs_separable", "is_bell_local", "distance_from_I4"}) {
    CHECK(c.contains(key));
  }
  const json s = io::to_json(estimate_extreme(Objective::MinEntropyInAs, 10, 42));
  CHECK(s["objective"] == "min-entropy-in-as");
  CHECK(s["n_accepted"] == 10);
  CHECK(s["extreme_state_spectrum"].size() == 4);
  const json o = json::parse(io::orbit_report_json(min_conditional_entropy(merging_example_state())));
  CHECK(o["negativity_reachable"] == true);
  CHECK(o["achieving_unitary"]["dim"] == json::array({2, 2}));
}

TEST_CASE("file errors") {
  try {
    io::read_state_file("/nonexistent/state.json");
    FAIL("expected Io");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
  const auto path = std::filesystem::temp_directory_path() / "centropy_io_bad.json";
  std::ofstream(path) << "{not json";
  try {
    io::read_state_file(path.string());
    FAIL("expected Parse");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
  std::filesystem::remove(path);
}
