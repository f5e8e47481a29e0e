#include <doctest.h>

#include "signrep/descartes.hpp"
#include "signrep/poly_io.hpp"
#include "signrep/vandermonde.hpp"
#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

using namespace signrep;
using namespace testing_support;

namespace {

SparsePoly P(const std::string& text) { return parse_poly(text, 1); }

Rational cofactor_det(const RationalMatrix& m) {
    const auto k = m.rows();
    if (k == 1) return m(0, 0);
    Rational total(0);
    for (std::size_t j = 0; j < k; ++j) {
        if (m(0, j).is_zero()) continue;
        RationalMatrix minor(k - 1, k - 1);
        for (std::size_t r = 1; r < k; ++r)
            for (std::size_t c = 0, cc = 0; c < k; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        const auto term = m(0, j) * cofactor_det(minor);
        total += j % 2 == 0 ? term : -term;
    }
    return total;
}

std::vector<long> sample_sorted(std::mt19937_64& rng, long lo, long hi, std::size_t count) {
    std::vector<long> all(static_cast<std::size_t>(hi - lo + 1));
    std::iota(all.begin(), all.end(), lo);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(count);
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<Rational> to_rationals(const std::vector<long>& v) { return {v.begin(), v.end()}; }
std::vector<unsigned> to_exponents(const std::vector<long>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("sign_variations") {
    auto seq = [](std::initializer_list<long> v) { return std::vector<Rational>(v.begin(), v.end()); };
    CHECK(sign_variations(seq({2, -3, 1})) == 2);
    CHECK(sign_variations(seq({1, 1, 1})) == 0);
    CHECK(sign_variations(seq({1, 0, -1, 0, 1})) == 2);
    CHECK(sign_variations(seq({})) == 0);
}

TEST_CASE("descartes_bound") {
    CHECK(descartes_bound(P("x1^2 - 3*x1 + 2")) == 2);
    CHECK(descartes_bound(P("x1^2 + x1 + 1")) == 0);
    // binomial expansion of (X - 1)^3
    CHECK(P("x1^3 - 3*x1^2 + 3*x1 - 1") == pow(P("x1 - 1"), 3));
    CHECK(descartes_bound(P("x1^3 - 3*x1^2 + 3*x1 - 1")) == 3);
    CHECK_THROWS_AS(descartes_bound(SparsePoly(1)), std::invalid_argument);

    SUBCASE("bound dominates the known positive roots and stays below the sparsity") {
        std::mt19937_64 rng(31);
        std::uniform_int_distribution<int> count(0, 6);
        std::uniform_int_distribution<long> num(1, 20), den(1, 5), neg(1, 9);
        for (int t = 0; t < 1000; ++t) {
            SparsePoly p = SparsePoly::constant(1, random_rational(rng));
            if (p.is_zero()) p = SparsePoly::constant(1, Rational(3));
            std::size_t positive_roots = 0;
            const int k = count(rng);
            for (int i = 0; i < k; ++i) {
                p = p * (P("x1") - SparsePoly::constant(1, Rational(num(rng), den(rng))));
                ++positive_roots;
            }
            // negative roots do not count toward the positive ones
            if (t % 3 == 0) p = p * (P("x1") + SparsePoly::constant(1, Rational(neg(rng))));
            const auto bound = descartes_bound(p);
            CHECK(bound >= positive_roots);
            CHECK(bound + 1 <= p.sparsity());
        }
    }
}

TEST_CASE("grid_sign_alternations") {
    const std::vector<std::int64_t> three{0, 1, 2};
    CHECK(grid_sign_alternations(P("x1^2 - 2*x1 + 3/4"), three) == 2);
    CHECK(grid_sign_alternations(P("1"), std::vector<std::int64_t>{0, 1, 2, 3, 4, 5}) == 0);
    CHECK(grid_sign_alternations(P("2*x1 - 3"), std::vector<std::int64_t>{1, 2}) == 1);
    CHECK_THROWS_AS(grid_sign_alternations(P("x1 - 1"), three), std::invalid_argument);
}

TEST_CASE("root counting from grid values") {
    CHECK(root_multiplicity(pow(P("x1 - 2"), 3) * P("x1 + 1"), Rational(2)) == 3);
    CHECK(root_multiplicity(P("x1^2 + 1"), Rational(1)) == 0);
    const std::vector<std::int64_t> pts{0, 1, 2, 3};
    // roots 1/2, 2 (double) and 5/2 inside (0, 3]
    const auto p = P("2*x1 - 1") * pow(P("x1 - 2"), 2) * P("2*x1 - 5");
    CHECK(grid_root_lower_bound(p, pts) == 4);
    // x^2 - 2x on {0,1,2}: only the root at 2 lies in (0, 2]
    CHECK(grid_root_lower_bound(P("x1^2 - 2*x1"), std::vector<std::int64_t>{0, 1, 2}) == 1);
    CHECK(grid_root_lower_bound(P("x1^2 - 2*x1"), std::vector<std::int64_t>{0, 1, 2}) <=
          descartes_bound(P("x1^2 - 2*x1")));
}

TEST_CASE("gvd_build") {
    auto v = gvd_build({Rational(1), Rational(2)}, {0, 1});
    CHECK(v.entries(0, 0) == Rational(1));
    CHECK(v.entries(1, 1) == Rational(2));
    v = gvd_build({Rational(0), Rational(1), Rational(2)}, {0, 1, 2});
    const std::vector<long> expected{1, 0, 0, 1, 1, 1, 1, 2, 4};
    for (std::size_t i = 0; i < 9; ++i) CHECK(v.entries(i / 3, i % 3) == Rational(expected[i]));
    v = gvd_build({Rational(1), Rational(2)}, {0, 3});
    CHECK(v.entries(1, 1) == Rational(8));
    CHECK_THROWS_AS(gvd_build({Rational(2), Rational(1)}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gvd_build({Rational(1), Rational(2)}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gvd_build({Rational(1)}, {0, 1}), std::invalid_argument);
}

TEST_CASE("det_exact and inverse") {
    CHECK(det_exact(gvd_build({Rational(1), Rational(2)}, {0, 1})) == Rational(1));
    const auto w = gvd_build({Rational(0), Rational(1), Rational(2)}, {0, 1, 2});
    CHECK(det_exact(w) == cofactor_det(w.entries));
    CHECK(det_exact(w) == Rational(2));
    CHECK(det_exact(gvd_build({Rational(1), Rational(2), Rational(3)}, {0, 2, 5})).sign() > 0);

    const auto inv = inverse_exact(w.entries);
    REQUIRE(inv);
    const std::vector<Rational> expected{Rational(1),     Rational(0),  Rational(0),
                                         Rational(-3, 2), Rational(2),  Rational(-1, 2),
                                         Rational(1, 2),  Rational(-1), Rational(1, 2)};
    for (std::size_t i = 0; i < 9; ++i) CHECK((*inv)(i / 3, i % 3) == expected[i]);
    const auto s = inverse_sign_pattern(w);
    CHECK(is_anchored_checkerboard(s));
    CHECK_FALSE(is_checkerboard(s));

    const auto two = inverse_sign_pattern(gvd_build({Rational(1), Rational(2)}, {0, 1}));
    CHECK(two(0, 0) == 1);
    CHECK(two(0, 1) == -1);
    CHECK(two(1, 0) == -1);
    CHECK(two(1, 1) == 1);
    CHECK(inverse_sign_pattern(gvd_build({Rational(7, 3)}, {5}))(0, 0) == 1);

    RationalMatrix singular(2, 2);
    singular(0, 0) = 1;
    singular(0, 1) = 2;
    singular(1, 0) = 2;
    singular(1, 1) = 4;
    CHECK(det_exact(singular).is_zero());
    CHECK_FALSE(inverse_exact(singular));
}

TEST_CASE("random generalized Vandermonde suite") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<std::size_t> size(1, 6);

    SUBCASE("positive points: positive determinant, checkerboard inverse, exact identity") {
        for (int t = 0; t < 1000; ++t) {
            const auto k = size(rng);
            const auto v = gvd_build(to_rationals(sample_sorted(rng, 1, 25, k)), to_exponents(sample_sorted(rng, 0, 30, k)));
            const auto det = det_exact(v);
            CHECK(det.sign() > 0);
            if (k <= 5) CHECK(det == cofactor_det(v.entries));
            const auto inv = inverse_exact(v.entries);
            REQUIRE(inv);
            CHECK(v.entries * *inv == identity<Rational>(k));
            CHECK(is_checkerboard(inverse_sign_pattern(v)));
        }
    }

    SUBCASE("anchored at zero: (+,0,...,0) first row then alternating") {
        for (int t = 0; t < 1000; ++t) {
            const auto k = size(rng);
            auto pts = sample_sorted(rng, 1, 25, k - 1);
            auto exps = sample_sorted(rng, 1, 30, k - 1);
            pts.insert(pts.begin(), 0);
            exps.insert(exps.begin(), 0);
            const auto v = gvd_build(to_rationals(pts), to_exponents(exps));
            CHECK(is_anchored_checkerboard(inverse_sign_pattern(v)));
        }
    }

    SUBCASE("rational points") {
        std::uniform_int_distribution<long> den(1, 7);
        for (int t = 0; t < 200; ++t) {
            const auto k = size(rng);
            std::vector<Rational> pts;
            for (auto p : sample_sorted(rng, 1, 40, k)) pts.push_back(Rational(p, 1) / Rational(8));
            const auto v = gvd_build(pts, to_exponents(sample_sorted(rng, 0, 12, k)));
            CHECK(det_exact(v).sign() > 0);
            CHECK(is_checkerboard(inverse_sign_pattern(v)));
        }
    }
}
