#ifndef SIGNREP_POLYNOMIAL_HPP
#define SIGNREP_POLYNOMIAL_HPP

#include "signrep/grid.hpp"
#include "signrep/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

namespace signrep {

/// Exponents of a monomial X1^e1 * ... * Xn^en.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : e_(n, 0) {}
    explicit ExponentVector(std::vector<unsigned> e) : e_(std::move(e)) {}
    ExponentVector(std::initializer_list<unsigned> e) : e_(e) {}

    [[nodiscard]] std::size_t size() const { return e_.size(); }
    [[nodiscard]] unsigned total_degree() const;
    [[nodiscard]] bool is_constant() const { return total_degree() == 0; }

    unsigned& operator[](std::size_t i) { return e_[i]; }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    [[nodiscard]] const std::vector<unsigned>& values() const { return e_; }
    [[nodiscard]] auto begin() const { return e_.begin(); }
    [[nodiscard]] auto end() const { return e_.end(); }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<unsigned> e_;
};

/// Graded lexicographic order: total degree first, then X1's exponent, then X2's, ...
struct GradedLex {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored, so sparsity() is the support size.
class SparsePoly {
public:
    using Terms = std::map<ExponentVector, Rational, GradedLex>;

    explicit SparsePoly(std::size_t dimension = 1) : dim_(dimension) {}

    static SparsePoly constant(std::size_t dimension, const Rational& c);
    static SparsePoly monomial(ExponentVector e, const Rational& c = Rational(1));
    /// X_i, 0-based index.
    static SparsePoly variable(std::size_t dimension, std::size_t i);
    /// Builds a univariate polynomial from ascending coefficients c0 + c1 X + ...
    static SparsePoly univariate(std::span<const Rational> ascending);

    [[nodiscard]] std::size_t dimension() const { return dim_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] std::size_t sparsity() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coefficient(const ExponentVector& e) const;

    /// Adds c * X^e, merging with an existing term and erasing it on cancellation.
    void add_term(const ExponentVector& e, const Rational& c);

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const Rational& c);

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
    friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    SparsePoly operator-() const;

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

private:
    void check_dim(const SparsePoly& o) const;
    void check_dim(const ExponentVector& e) const;

    std::size_t dim_;
    Terms terms_;
};

SparsePoly pow(const SparsePoly& p, unsigned exp);

/// Exact value at an integer point.
Rational evaluate(const SparsePoly& p, std::span<const std::int64_t> point);

struct Measures {
    std::size_t sparsity = 0;
    long degree = -1;                     ///< -1 for the zero polynomial
    std::vector<long> var_degree;         ///< deg_i, -1 when zero
    std::vector<std::size_t> var_sparsity;  ///< distinct powers of X_i in the support
};

Measures measures(const SparsePoly& p);

/// Replaces every exponent above 1 by 1 (values on {0,1}^n are unchanged).
SparsePoly multilinear_reduce(const SparsePoly& p);

/// prod_{a in points} (X - a) as a univariate polynomial.
SparsePoly vanishing_poly(std::span<const std::int64_t> points);

/// Reduces every variable modulo the grid's vanishing polynomial, in the given
/// variable order (ascending by default). Result has deg_i <= m-1.
SparsePoly grid_reduce(const SparsePoly& p, const Grid& grid);
SparsePoly grid_reduce(const SparsePoly& p, const Grid& grid, std::span<const std::size_t> order);

/// sum_i w_i P_i; every weight must be strictly positive.
SparsePoly conic_combine(std::span<const Rational> weights, std::span<const SparsePoly> polys);

/// Groups terms by the power of X_var: P = sum_d X_var^d Q_d, X_var absent from each Q_d.
std::map<unsigned, SparsePoly> decompose_by_var(const SparsePoly& p, std::size_t var);

/// Removes variable `var` (which must not occur) and lowers the dimension by one.
SparsePoly drop_variable(const SparsePoly& p, std::size_t var);

/// Composition P(inner) for a univariate P.
SparsePoly substitute(const SparsePoly& univariate, const SparsePoly& inner);

/// Ascending coefficient sequence c0..cd of a univariate polynomial, zeros included.
std::vector<Rational> coefficient_sequence(const SparsePoly& univariate);

}  // namespace signrep

#endif  // SIGNREP_POLYNOMIAL_HPP
