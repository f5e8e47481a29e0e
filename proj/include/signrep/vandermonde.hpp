#ifndef SIGNREP_VANDERMONDE_HPP
#define SIGNREP_VANDERMONDE_HPP

#include "signrep/matrix.hpp"
#include "signrep/rational.hpp"

#include <optional>
#include <vector>

namespace signrep {

using RationalMatrix = Matrix<Rational>;
using SignMatrix = Matrix<int>;

/// Square matrix with entry (i, j) = points[i]^exponents[j]; 0^0 = 1.
struct GeneralizedVandermonde {
    std::vector<Rational> points;     ///< strictly increasing
    std::vector<unsigned> exponents;  ///< strictly increasing
    RationalMatrix entries;
};

/// Throws std::invalid_argument unless both sequences are strictly increasing and equally long.
GeneralizedVandermonde gvd_build(std::vector<Rational> points, std::vector<unsigned> exponents);

/// Fraction-free (Bareiss) elimination with row pivoting.
Rational det_exact(const RationalMatrix& m);
inline Rational det_exact(const GeneralizedVandermonde& v) { return det_exact(v.entries); }

/// Gauss-Jordan inverse; std::nullopt when singular.
std::optional<RationalMatrix> inverse_exact(const RationalMatrix& m);

/// Entrywise signs of the exact inverse. Throws std::domain_error when singular.
SignMatrix inverse_sign_pattern(const GeneralizedVandermonde& v);

/// sign(entry (i,j)) = (-1)^(i+j) everywhere.
bool is_checkerboard(const SignMatrix& s);

/// Row 0 is (+,0,...,0); every other entry has sign (-1)^(i+j).
bool is_anchored_checkerboard(const SignMatrix& s);

}  // namespace signrep

#endif  // SIGNREP_VANDERMONDE_HPP
