#ifndef SIGNREP_POLY_IO_HPP
#define SIGNREP_POLY_IO_HPP

#include "signrep/polynomial.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace signrep {

/// Canonical text form, terms in descending graded-lex order:
///   "4*x1*x2 - 2*x1 - 2*x2 + 1", "3/4*x1^2 - x1", "0".
std::string to_text(const SparsePoly& p);

/// Parses a signed sum of terms `c*x1^a*x2^b`. Coefficients are integers or p/q;
/// `*` between factors is optional, variable names are x1.. or X1.. (1-based).
/// The dimension is max(min_dimension, highest variable index used, 1).
/// Throws std::invalid_argument on malformed input.
SparsePoly parse_poly(std::string_view text, std::size_t min_dimension = 0);

/// {"dimension": n, "terms": [{"exponents": [...], "coeff": "p/q"}, ...]}, terms in descending graded-lex order.
nlohmann::json to_json(const SparsePoly& p);

/// Accepts the object above or a bare term list (dimension taken from the first term,
/// or from `min_dimension` when the list is empty).
SparsePoly poly_from_json(const nlohmann::json& j, std::size_t min_dimension = 0);

}  // namespace signrep

#endif  // SIGNREP_POLY_IO_HPP
