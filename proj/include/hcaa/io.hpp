#pragma once

// JSON forms of the library objects. Rationals travel as strings "p/q"
// (plain JSON integers are accepted on input), matrices as row-major arrays.
//
//   algebra: {"dim": 4, "brackets": [{"i": 0, "j": 1, "coeffs": [{"k": 1, "c": "1"}]}]}
//   aaspec:  {"n": 2, "mu": "1", "v0": [...], "X": [[...]], "Y": ..., "Z": ..., "W": ...}
//   triple:  {"J1": [[...]], "J2": ..., "J3": ...}
//
// Malformed input raises ParseError; well-formed but inconsistent specs
// raise InvalidSpec.

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hcaa/connections.hpp"
#include "hcaa/lattices.hpp"

namespace hcaa {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json to_json(const RatMat& m);
RatMat matrix_from_json(const Json& j);
Json vector_to_json(const RatVec& v);
RatVec vector_from_json(const Json& j);

Json to_json(const LieAlgebra& l);
LieAlgebra algebra_from_json(const Json& j);

/// An optional "B" key (the full 4(n-1) square block) is accepted in place
/// of, or next to, X, Y, Z, W; it must have the quaternionic block shape.
Json to_json(const AlmostAbelianSpec& s);
AlmostAbelianSpec spec_from_json(const Json& j);

Json to_json(const HypercomplexTriple& t);
HypercomplexTriple triple_from_json(const Json& j);

/// {"kind": "two_pi_over", "m": 3}, {"kind": "hyperbolic_log", "m": 5},
/// {"kind": "rational", "t": "1/2"}, or the text forms of SpecialTime::parse.
SpecialTime time_from_json(const Json& j);
Json to_json(const SpecialTime& t);

Json to_json(const ThreeForm& c);
Json to_json(const AbelianizationResult& h);
Json to_json(const WitnessCertificate& w);

Json parse_json(std::string_view text);
/// Reads and parses a file; ParseError on failure.
Json read_json_file(const std::string& path);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t v);

}  // namespace hcaa
