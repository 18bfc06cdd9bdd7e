#pragma once

// File formats.
//
//   state / unitary : {"dim":[2,2],"matrix":[[[re,im] x4] x4]}
//   witness         : {"W":M,"tangent_point":M,"t0":x,"target":M}
//
// where M is the bare 4x4 [[[re,im],...],...] array. Matrix entries are
// written with 17 significant digits so files round-trip exactly.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "centropy/classes.hpp"
#include "centropy/entropy.hpp"
#include "centropy/mc.hpp"
#include "centropy/orbit.hpp"
#include "centropy/witness.hpp"

namespace centropy::io {

/// printf("%.{digits}g"); used for 17-digit JSON and 12-digit CSV output.
std::string format_double(double x, int digits);

std::string matrix_json(const Mat4& m);
std::string state_json(const Mat4& m);
std::string witness_json(const WitnessOperator& w);
std::string orbit_report_json(const OrbitReport& r);

nlohmann::ordered_json to_json(const ClassReport& r);
nlohmann::ordered_json to_json(const SampleStats& s);
nlohmann::ordered_json to_json(const EntropyReport& r);

/// Throws Parse on any shape or type mismatch.
Mat4 matrix_from_json(const nlohmann::json& j);

/// Accepts the state layout; "dim" must be [2,2] when present.
Mat4 state_matrix_from_json(const nlohmann::json& j);

DensityMatrix state_from_json(const nlohmann::json& j, double psd_tol = kPsdTol);
WitnessOperator witness_from_json(const nlohmann::json& j);

/// Io when the file cannot be opened, Parse when it is not JSON.
nlohmann::json read_json_file(const std::string& path);

DensityMatrix read_state_file(const std::string& path, double psd_tol = kPsdTol);
WitnessOperator read_witness_file(const std::string& path);

}  // namespace centropy::io
