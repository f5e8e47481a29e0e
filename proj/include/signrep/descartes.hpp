#ifndef SIGNREP_DESCARTES_HPP
#define SIGNREP_DESCARTES_HPP

#include "signrep/polynomial.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace signrep {

/// Number of sign alternations among the nonzero entries.
std::size_t sign_variations(std::span<const Rational> seq);

/// Upper bound on the positive real roots (with multiplicity) of a nonzero univariate polynomial.
std::size_t descartes_bound(const SparsePoly& univariate);

/// Adjacent strict sign flips of P along ascending points. Throws if P vanishes at one of them.
std::size_t grid_sign_alternations(const SparsePoly& univariate, std::span<const std::int64_t> points);

/// Multiplicity of the rational root r of a nonzero univariate polynomial (0 if not a root).
unsigned root_multiplicity(const SparsePoly& univariate, const Rational& r);

/// Lower bound on the number of real roots, counted with multiplicity, in the half-open
/// interval (points.front(), points.back()], read off from the values at ascending integer points.
/// Zeros at the interior and right end points contribute their exact multiplicity; every gap
/// whose one-sided signs disagree contributes one more root. P must be nonzero.
std::size_t grid_root_lower_bound(const SparsePoly& univariate, std::span<const std::int64_t> points);

}  // namespace signrep

#endif  // SIGNREP_DESCARTES_HPP
