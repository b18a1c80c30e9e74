#pragma once

#include "superorbit/envelope.hpp"
#include "superorbit/orbit.hpp"

#include <json.hpp>

#include <string>

namespace superorbit::io {

using nlohmann::json;

/// Term list: [{"even":[e1..eM],"odd":[i..],"coeff":"p/q"}, ...].
/// Odd indices are 1-based, matching the display names t<i>.
json poly_to_json(const SuperPolynomial& p);
SuperPolynomial poly_from_json(const json& j, const SigPtr& sig);

/// h-series coefficients as a string array ["a0","a1",...].
json hpoly_to_json(const HPolynomial& p);

/// {"m":..,"n":..,"entries":[[expr,...],...]} with entries in the text grammar.
json matrix_to_json(const SuperMatrix& a);
SuperMatrix matrix_from_json(const json& j, const SigPtr& ring, MatParity declared);

/// {"dim":d,"parity":[...],"c":[{"i":..,"j":..,"k":..,"v":"p/q"},...]}, 1-based.
json algebra_to_json(const LieSuperAlgebra& L);
std::shared_ptr<LieSuperAlgebra> algebra_from_json(const json& j);

/// {"kind":"sl","m":2,"n":1,"lambda":["1","2","3"]}.
json orbit_to_json(const OrbitSpec& spec);
OrbitSpec orbit_from_json(const json& j);

/// [{"word":[1-based indices],"coeff":["a0","a1",...]}, ...].
json env_to_json(const EnvElement& e);
EnvElement env_from_json(const json& j, const AlgebraPtr& L, int h_order);

/// Infers a ring from generator names appearing in matrix entry strings
/// (max x<i> / t<i> index used).
SigPtr infer_ring_from_matrix_json(const json& j);

} // namespace superorbit::io
