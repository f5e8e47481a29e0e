#include "signrep/descartes.hpp"

#include <stdexcept>

namespace signrep {

std::size_t sign_variations(std::span<const Rational> seq) {
    std::size_t count = 0;
    int last = 0;
    for (const auto& c : seq) {
        const int s = c.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

std::size_t descartes_bound(const SparsePoly& univariate) {
    if (univariate.is_zero()) throw std::invalid_argument("Descartes bound of the zero polynomial");
    const auto seq = coefficient_sequence(univariate);
    return sign_variations(seq);
}

std::size_t grid_sign_alternations(const SparsePoly& univariate, std::span<const std::int64_t> points) {
    if (univariate.dimension() != 1) throw std::invalid_argument("expected a univariate polynomial");
    std::size_t flips = 0;
    int last = 0;
    for (auto a : points) {
        const std::int64_t pt[] = {a};
        const int s = evaluate(univariate, pt).sign();
        if (s == 0) throw std::invalid_argument("polynomial vanishes at grid point " + std::to_string(a));
        if (last != 0 && s != last) ++flips;
        last = s;
    }
    return flips;
}

namespace {

// Synthetic division by (X - r); returns the quotient, remainder must be zero.
std::vector<Rational> divide_root(const std::vector<Rational>& asc, const Rational& r) {
    const std::size_t d = asc.size() - 1;
    std::vector<Rational> q(d, Rational(0));
    Rational carry(0);
    for (std::size_t k = d; k > 0; --k) {
        carry = asc[k] + carry * r;
        q[k - 1] = carry;
    }
    return q;
}

Rational horner(const std::vector<Rational>& asc, const Rational& x) {
    Rational acc(0);
    for (auto it = asc.rbegin(); it != asc.rend(); ++it) acc = acc * x + *it;
    return acc;
}

struct LocalSign {
    int left;   // sign just left of the point
    int right;  // sign just right of the point
    unsigned multiplicity;
};

LocalSign local_sign(const std::vector<Rational>& asc, const Rational& x) {
    auto cur = asc;
    unsigned mult = 0;
    Rational v = horner(cur, x);
    while (v.is_zero()) {
        cur = divide_root(cur, x);
        ++mult;
        v = horner(cur, x);
    }
    const int right = v.sign();
    const int left = (mult % 2 == 0) ? right : -right;
    return {left, right, mult};
}

}  // namespace

unsigned root_multiplicity(const SparsePoly& univariate, const Rational& r) {
    if (univariate.is_zero()) throw std::invalid_argument("root multiplicity of the zero polynomial");
    return local_sign(coefficient_sequence(univariate), r).multiplicity;
}

std::size_t grid_root_lower_bound(const SparsePoly& univariate, std::span<const std::int64_t> points) {
    if (univariate.is_zero()) throw std::invalid_argument("root bound of the zero polynomial");
    if (points.size() < 2) return 0;
    const auto asc = coefficient_sequence(univariate);
    std::vector<LocalSign> local;
    local.reserve(points.size());
    for (auto a : points) local.push_back(local_sign(asc, Rational(static_cast<long>(a))));

    std::size_t roots = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        roots += local[i].multiplicity;
        if (local[i - 1].right != local[i].left) ++roots;
    }
    return roots;
}

}  // namespace signrep
