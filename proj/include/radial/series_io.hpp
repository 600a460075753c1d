#ifndef RADIAL_SERIES_IO_HPP
#define RADIAL_SERIES_IO_HPP

#include <string>

#include <json.hpp>

#include "radial/frobenius.hpp"
#include "radial/series.hpp"
#include "radial/spaces.hpp"

namespace radial {

using json = nlohmann::json;

// Series serialize as {ring, offset, order, coeffs}. Rationals are "p/q"
// strings; polynomial coefficients are arrays of "p/q" by degree; Float64
// coefficients are plain numbers.
json to_json(const Series<Rat>& s);
json to_json(const Series<LambdaPoly>& s);
json to_json(const Series<double>& s);
json to_json(const LambdaPoly& p);

Series<Rat> rat_series_from_json(const json& j);
Series<LambdaPoly> lambda_series_from_json(const json& j);

json to_json(const SingularSolution<LambdaPoly>& s);
json to_json(const SingularSolution<Rat>& s);
json to_json(const EigenBasis& basis);

// Parses {"m": int, "theta_tilde": series} or a bare series plus dimension.
ModelSpace custom_space_from_json(const json& j, int m_hint = 0);

} // namespace radial

#endif
