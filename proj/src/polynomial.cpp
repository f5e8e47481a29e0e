#include "signrep/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

namespace signrep {

unsigned ExponentVector::total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0U);
}

bool GradedLex::operator()(const ExponentVector& a, const ExponentVector& b) const {
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    if (da != db) return da < db;
    // plain lexicographic within a degree, so X1 ranks above X2
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SparsePoly SparsePoly::constant(std::size_t dimension, const Rational& c) {
    SparsePoly p(dimension);
    p.add_term(ExponentVector(dimension), c);
    return p;
}

SparsePoly SparsePoly::monomial(ExponentVector e, const Rational& c) {
    SparsePoly p(e.size());
    p.add_term(e, c);
    return p;
}

SparsePoly SparsePoly::variable(std::size_t dimension, std::size_t i) {
    if (i >= dimension) throw std::out_of_range("variable index out of range");
    ExponentVector e(dimension);
    e[i] = 1;
    return monomial(std::move(e));
}

SparsePoly SparsePoly::univariate(std::span<const Rational> ascending) {
    SparsePoly p(1);
    for (std::size_t d = 0; d < ascending.size(); ++d) p.add_term(ExponentVector{static_cast<unsigned>(d)}, ascending[d]);
    return p;
}

Rational SparsePoly::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::check_dim(const SparsePoly& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("polynomial dimension mismatch");
}

void SparsePoly::check_dim(const ExponentVector& e) const {
    if (e.size() != dim_) throw std::invalid_argument("exponent vector length does not match dimension");
}

void SparsePoly::add_term(const ExponentVector& e, const Rational& c) {
    check_dim(e);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    check_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    check_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_dim(b);
    SparsePoly out(a.dim_);
    ExponentVector e(a.dim_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

SparsePoly pow(const SparsePoly& p, unsigned exp) {
    SparsePoly result = SparsePoly::constant(p.dimension(), Rational(1));
    SparsePoly base = p;
    while (exp > 0) {
        if (exp & 1U) result = result * base;
        exp >>= 1U;
        if (exp > 0) base = base * base;
    }
    return result;
}

Rational evaluate(const SparsePoly& p, std::span<const std::int64_t> point) {
    if (point.size() != p.dimension()) throw std::invalid_argument("point dimension does not match polynomial");
    mpq_class total = 0;
    mpz_class mono;
    mpz_class factor;
    for (const auto& [e, c] : p.terms()) {
        mono = 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (point[i] == 0) {
                mono = 0;
                break;
            }
            mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(std::abs(point[i])), e[i]);
            if (point[i] < 0 && (e[i] & 1U)) factor = -factor;
            mono *= factor;
        }
        if (mono != 0) total += c.raw() * mono;
    }
    return Rational(total);
}

Measures measures(const SparsePoly& p) {
    const auto n = p.dimension();
    Measures m;
    m.sparsity = p.sparsity();
    m.var_degree.assign(n, -1);
    m.var_sparsity.assign(n, 0);
    std::vector<std::set<unsigned>> powers(n);
    for (const auto& [e, c] : p.terms()) {
        m.degree = std::max<long>(m.degree, e.total_degree());
        for (std::size_t i = 0; i < n; ++i) {
            m.var_degree[i] = std::max<long>(m.var_degree[i], e[i]);
            powers[i].insert(e[i]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) m.var_sparsity[i] = powers[i].size();
    return m;
}

SparsePoly multilinear_reduce(const SparsePoly& p) {
    SparsePoly out(p.dimension());
    for (const auto& [e, c] : p.terms()) {
        ExponentVector r = e;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(r[i], 1U);
        out.add_term(r, c);
    }
    return out;
}

SparsePoly vanishing_poly(std::span<const std::int64_t> points) {
    SparsePoly out = SparsePoly::constant(1, Rational(1));
    const SparsePoly x = SparsePoly::variable(1, 0);
    for (auto a : points) out = out * (x - SparsePoly::constant(1, Rational(static_cast<long>(a))));
    return out;
}

namespace {

// Ascending coefficients of X^d mod M(X) for d = 0..max_power, M monic of degree m.
std::vector<std::vector<Rational>> power_remainders(const std::vector<Rational>& monic, unsigned max_power) {
    const std::size_t m = monic.size() - 1;
    std::vector<std::vector<Rational>> rem;
    std::vector<Rational> cur(m, Rational(0));
    cur[0] = Rational(1);
    rem.push_back(cur);
    for (unsigned d = 1; d <= max_power; ++d) {
        // multiply by X, then eliminate X^m using X^m = -(c0 + ... + c_{m-1} X^{m-1})
        Rational top = cur[m - 1];
        for (std::size_t k = m - 1; k > 0; --k) cur[k] = cur[k - 1];
        cur[0] = Rational(0);
        if (!top.is_zero())
            for (std::size_t k = 0; k < m; ++k) cur[k] -= top * monic[k];
        rem.push_back(cur);
    }
    return rem;
}

}  // namespace

SparsePoly grid_reduce(const SparsePoly& p, const Grid& grid) {
    std::vector<std::size_t> order(p.dimension());
    std::iota(order.begin(), order.end(), 0);
    return grid_reduce(p, grid, order);
}

SparsePoly grid_reduce(const SparsePoly& p, const Grid& grid, std::span<const std::size_t> order) {
    if (grid.dimension() != p.dimension()) throw std::invalid_argument("grid dimension does not match polynomial");
    const auto monic = coefficient_sequence(vanishing_poly(grid.points()));
    const auto m = static_cast<unsigned>(grid.m());
    const auto meas = measures(p);
    const auto max_deg = static_cast<unsigned>(std::max<long>(0, meas.degree));
    const auto rem = power_remainders(monic, max_deg);

    SparsePoly cur = p;
    for (auto var : order) {
        SparsePoly next(p.dimension());
        for (const auto& [e, c] : cur.terms()) {
            if (e[var] < m) {
                next.add_term(e, c);
                continue;
            }
            ExponentVector r = e;
            const auto& row = rem[e[var]];
            for (unsigned k = 0; k < m; ++k) {
                if (row[k].is_zero()) continue;
                r[var] = k;
                next.add_term(r, c * row[k]);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

SparsePoly conic_combine(std::span<const Rational> weights, std::span<const SparsePoly> polys) {
    if (weights.size() != polys.size()) throw std::invalid_argument("weights and polynomials differ in count");
    if (polys.empty()) throw std::invalid_argument("conic combination of nothing");
    SparsePoly out(polys.front().dimension());
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (weights[i].sign() <= 0) throw std::invalid_argument("conic weights must be positive");
        out += polys[i] * weights[i];
    }
    return out;
}

std::map<unsigned, SparsePoly> decompose_by_var(const SparsePoly& p, std::size_t var) {
    if (var >= p.dimension()) throw std::out_of_range("variable index out of range");
    std::map<unsigned, SparsePoly> parts;
    for (const auto& [e, c] : p.terms()) {
        ExponentVector rest = e;
        rest[var] = 0;
        parts.try_emplace(e[var], p.dimension()).first->second.add_term(rest, c);
    }
    if (parts.empty()) parts.emplace(0, SparsePoly(p.dimension()));
    return parts;
}

SparsePoly drop_variable(const SparsePoly& p, std::size_t var) {
    if (var >= p.dimension() || p.dimension() < 2) throw std::out_of_range("cannot drop variable");
    SparsePoly out(p.dimension() - 1);
    for (const auto& [e, c] : p.terms()) {
        if (e[var] != 0) throw std::invalid_argument("dropped variable occurs in the polynomial");
        std::vector<unsigned> r;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var) r.push_back(e[i]);
        out.add_term(ExponentVector(std::move(r)), c);
    }
    return out;
}

SparsePoly substitute(const SparsePoly& univariate, const SparsePoly& inner) {
    if (univariate.dimension() != 1) throw std::invalid_argument("outer polynomial must be univariate");
    const auto coeffs = coefficient_sequence(univariate);
    SparsePoly out(inner.dimension());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        out = out * inner;
        out += SparsePoly::constant(inner.dimension(), *it);
    }
    return out;
}

std::vector<Rational> coefficient_sequence(const SparsePoly& univariate) {
    if (univariate.dimension() != 1) throw std::invalid_argument("expected a univariate polynomial");
    if (univariate.is_zero()) return {Rational(0)};
    const auto deg = univariate.terms().rbegin()->first[0];
    std::vector<Rational> seq(deg + 1, Rational(0));
    for (const auto& [e, c] : univariate.terms()) seq[e[0]] = c;
    return seq;
}

}  // namespace signrep
