#include "signrep/constructions.hpp"

#include <set>
#include <stdexcept>

namespace signrep {

namespace {

SparsePoly linear(std::size_t dim, std::size_t var, const Rational& slope, const Rational& offset) {
    return SparsePoly::variable(dim, var) * slope + SparsePoly::constant(dim, offset);
}

SparsePoly product_monomial(std::size_t n) {
    return SparsePoly::monomial(ExponentVector(std::vector<unsigned>(n, 1)));
}

// Univariate prod_k (W - roots[k]) evaluated at W = X_1 ... X_n.
SparsePoly product_in_w(std::size_t n, const std::vector<Rational>& roots, const Rational& scale) {
    SparsePoly u = SparsePoly::constant(1, scale);
    for (const auto& r : roots) u = u * linear(1, 0, Rational(1), -r);
    return substitute(u, product_monomial(n));
}

}  // namespace

SparsePoly construct_hypercube_parity(std::size_t n) {
    if (n == 0) throw std::invalid_argument("dimension must be at least 1");
    SparsePoly p = SparsePoly::constant(n, Rational(1));
    for (std::size_t i = 0; i < n; ++i) p = p * linear(n, i, Rational(-2), Rational(1));
    return p;
}

SparsePoly construct_mary_parity(std::size_t n, std::size_t m, const std::optional<std::vector<Rational>>& alphas) {
    if (n == 0) throw std::invalid_argument("dimension must be at least 1");
    if (m < 2) throw std::invalid_argument("m must be at least 2");
    std::vector<Rational> roots;
    if (alphas) {
        if (alphas->size() != m - 1) throw std::invalid_argument("need m-1 alphas");
        roots = *alphas;
        for (std::size_t j = 0; j + 1 < m; ++j)
            if (!(Rational(static_cast<long>(j)) < roots[j] && roots[j] < Rational(static_cast<long>(j + 1))))
                throw std::invalid_argument("alpha_" + std::to_string(j) + " must lie in (" + std::to_string(j) +
                                            ", " + std::to_string(j + 1) + ")");
    } else {
        for (std::size_t j = 0; j + 1 < m; ++j) roots.push_back(Rational(static_cast<long>(2 * j + 1)) / Rational(2));
    }
    // prod_j (X - alpha_j) has sign (-1)^(m-1) at 0; flip so each factor is positive there
    const Rational lead((m - 1) % 2 == 0 ? 1 : -1);
    SparsePoly p = SparsePoly::constant(n, Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
        SparsePoly f = SparsePoly::constant(n, lead);
        for (const auto& a : roots) f = f * linear(n, i, Rational(1), -a);
        p = p * f;
    }
    return p;
}

SparsePoly construct_geometric_parity(std::size_t n, const std::optional<std::vector<Rational>>& alphas) {
    if (n == 0) throw std::invalid_argument("dimension must be at least 1");
    std::vector<Rational> roots;
    for (std::size_t j = 1; j <= n; ++j) {
        const Rational lo = pow(Rational(2), static_cast<unsigned>(j - 1));
        const Rational hi = lo * Rational(2);
        if (!alphas) {
            roots.push_back((lo + hi) / Rational(2));
            continue;
        }
        if (alphas->size() != n) throw std::invalid_argument("need n alphas");
        const auto& a = (*alphas)[j - 1];
        if (!(lo < a && a < hi))
            throw std::invalid_argument("alpha_" + std::to_string(j) + " must lie in (" + lo.str() + ", " + hi.str() + ")");
        roots.push_back(a);
    }
    return product_in_w(n, roots, Rational(1));
}

SparsePoly low_sparsity_univariate(std::size_t m) {
    if (m < 2) throw std::invalid_argument("m must be at least 2");
    // value at 1 is prod_j (1 - 2j), sign (-1)^(m-2); parity at 1 needs a negative value
    SparsePoly q = SparsePoly::constant(1, Rational(m % 2 == 0 ? -1 : 1));
    for (std::size_t j = 1; j + 2 <= m; ++j) q = q * linear(1, 0, Rational(2), Rational(-static_cast<long>(2 * j + 1)));
    return q;
}

SparsePoly construct_weak_low_sparsity(std::size_t n, std::size_t m) {
    if (n == 0) throw std::invalid_argument("dimension must be at least 1");
    const auto q = low_sparsity_univariate(m);
    SparsePoly p = product_monomial(n);
    for (std::size_t i = 0; i < n; ++i) {
        ExponentVector e(n);
        SparsePoly qi(n);
        for (const auto& [qe, c] : q.terms()) {
            e[i] = qe[0];
            qi.add_term(e, c);
        }
        p = p * qi;
    }
    return p;
}

std::vector<std::int64_t> product_values(const Grid& grid) {
    std::set<std::int64_t> values{1};
    for (std::size_t i = 0; i < grid.dimension(); ++i) {
        std::set<std::int64_t> next;
        for (auto v : values)
            for (auto a : grid.points()) {
                std::int64_t prod = 0;
                if (__builtin_mul_overflow(v, a, &prod)) throw std::overflow_error("grid products overflow 64 bits");
                next.insert(prod);
            }
        values = std::move(next);
    }
    return {values.begin(), values.end()};
}

SparsePoly construct_weak_product(const Grid& grid) {
    const auto n = grid.dimension();
    const auto a = grid.points().back();
    if (a <= 0) throw std::invalid_argument("largest grid point must be positive");
    const auto values = product_values(grid);
    std::vector<Rational> roots;
    for (std::size_t k = 0; k + 1 < values.size(); ++k) roots.push_back(Rational(static_cast<long>(values[k])));
    const bool odd = (static_cast<std::int64_t>(n % 2) * (a % 2)) == 1;
    return product_in_w(n, roots, Rational(odd ? -1 : 1));
}

}  // namespace signrep
