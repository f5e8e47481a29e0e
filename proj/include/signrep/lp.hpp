#ifndef SIGNREP_LP_HPP
#define SIGNREP_LP_HPP

#include "signrep/vandermonde.hpp"

#include <span>
#include <vector>

namespace signrep::lp {

/// Outcome of deciding the system A x >= b over the rationals.
struct Result {
    bool feasible = false;
    std::vector<Rational> solution;  ///< x with A x >= b, when feasible
    std::vector<Rational> ray;       ///< y >= 0 with A^T y = 0 and b^T y = 1, when infeasible
    std::size_t pivots = 0;
};

/// Exact decision of A x >= b with x free.
///
/// Runs phase-1 simplex with Bland's rule on the Farkas alternative
///   y >= 0,  A^T y = 0,  b^T y = 1.
/// A feasible alternative is returned as the infeasibility ray; otherwise the phase-1
/// simplex multipliers (u, t), t > 0, give the primal point x = -u / t.
/// Both outputs are re-checked exactly before returning (std::logic_error on failure).
Result solve(const RationalMatrix& a, std::span<const Rational> b);

/// A x >= b, row by row.
bool satisfies(const RationalMatrix& a, std::span<const Rational> b, std::span<const Rational> x);

/// y >= 0, A^T y = 0 and b^T y > 0.
bool is_farkas_ray(const RationalMatrix& a, std::span<const Rational> b, std::span<const Rational> y);

}  // namespace signrep::lp

#endif  // SIGNREP_LP_HPP
