// Generators and brute-force oracles shared by the unit tests. Nothing here calls
// into the library's arithmetic beyond Rational itself.
#ifndef SIGNREP_TESTS_SUPPORT_HPP
#define SIGNREP_TESTS_SUPPORT_HPP

#include "signrep/polynomial.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testing_support {

using signrep::ExponentVector;
using signrep::Rational;
using signrep::SparsePoly;

inline Rational random_rational(std::mt19937_64& rng, long span = 9, long max_den = 4) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(signrep::BigInt(num(rng)), signrep::BigInt(den(rng)));
}

inline SparsePoly random_poly(std::mt19937_64& rng, std::size_t n, unsigned max_exp, std::size_t max_terms) {
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    std::uniform_int_distribution<std::size_t> terms(0, max_terms);
    SparsePoly p(n);
    const auto count = terms(rng);
    for (std::size_t t = 0; t < count; ++t) {
        ExponentVector e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = exp(rng);
        p.add_term(e, random_rational(rng));
    }
    return p;
}

/// Term-by-term evaluation with repeated multiplication.
inline Rational naive_eval(const SparsePoly& p, const std::vector<std::int64_t>& point) {
    Rational total(0);
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= Rational(static_cast<long>(point[i]));
        total += term;
    }
    return total;
}

/// All points of {values}^n, last coordinate fastest.
inline std::vector<std::vector<std::int64_t>> all_points(std::size_t n, const std::vector<std::int64_t>& values) {
    std::vector<std::vector<std::int64_t>> out{{}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& p : out)
            for (auto v : values) {
                auto q = p;
                q.push_back(v);
                next.push_back(q);
            }
        out = std::move(next);
    }
    return out;
}

inline int parity_of(const std::vector<std::int64_t>& point) {
    std::int64_t s = 0;
    for (auto v : point) s += v;
    return static_cast<int>(s % 2);
}

inline int sign_of(const Rational& r) { return r.sign(); }

}  // namespace testing_support

#endif  // SIGNREP_TESTS_SUPPORT_HPP
