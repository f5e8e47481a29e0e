#ifndef SIGNREP_CONSTRUCTIONS_HPP
#define SIGNREP_CONSTRUCTIONS_HPP

#include "signrep/polynomial.hpp"

#include <optional>
#include <vector>

namespace signrep {

/// prod_i (1 - 2 X_i): sign represents parity on {0,1}^n with sparsity 2^n.
SparsePoly construct_hypercube_parity(std::size_t n);

/// prod_i (-1)^(m-1) prod_{j=0}^{m-2} (X_i - alpha_j): sign represents parity on {0..m-1}^n.
/// alpha_j must lie strictly inside (j, j+1); default j + 1/2.
SparsePoly construct_mary_parity(std::size_t n, std::size_t m,
                                 const std::optional<std::vector<Rational>>& alphas = std::nullopt);

/// prod_{j=1}^n (X_1...X_n - alpha_j): sign represents parity on {1,2}^n with
/// sparsity n+1 and degree n^2. alpha_j must lie strictly inside (2^(j-1), 2^j);
/// default is the midpoint 3 * 2^(j-2).
SparsePoly construct_geometric_parity(std::size_t n, const std::optional<std::vector<Rational>>& alphas = std::nullopt);

/// The univariate factor used by construct_weak_low_sparsity: prod_{j=1}^{m-2} (2X - (2j+1)),
/// signed to be negative at 1. Sign represents parity on {1..m-1}, sparsity m-1, degree m-2.
SparsePoly low_sparsity_univariate(std::size_t m);

/// Q * X_1 ... X_n with Q = prod_i q(X_i): weakly represents parity on {0..m-1}^n
/// with sparsity (m-1)^n and deg_i <= m-1.
SparsePoly construct_weak_low_sparsity(std::size_t n, std::size_t m);

/// Distinct values of X_1...X_n on the grid, ascending.
std::vector<std::int64_t> product_values(const Grid& grid);

/// (-1)^(n a) prod_{s in S, s != a^n} (X_1...X_n - s), a the largest grid point and S = product_values.
/// Vanishes everywhere except at (a, ..., a); weakly represents parity.
SparsePoly construct_weak_product(const Grid& grid);

}  // namespace signrep

#endif  // SIGNREP_CONSTRUCTIONS_HPP
