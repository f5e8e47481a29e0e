#include <doctest.h>

#include "signrep/errors.hpp"
#include "signrep/feasibility.hpp"
#include "signrep/poly_io.hpp"
#include "signrep/search.hpp"
#include "support.hpp"

#include <stdexcept>

using namespace signrep;
using namespace testing_support;

namespace {

FeasibilityProblem problem(std::vector<ExponentVector> support, const TargetFunction& f, RepKind kind,
                           std::optional<Point> witness = std::nullopt) {
    return FeasibilityProblem{std::move(support), f, kind, std::move(witness)};
}

// Recomputes the ray combination with naive evaluation.
bool independent_ray_check(const FeasibilityProblem& pr, const std::vector<Rational>& y) {
    const auto points = pr.target.grid().enumerate(kDefaultGridCap);
    if (y.size() != points.size()) return false;
    for (const auto& v : y)
        if (v.sign() < 0) return false;
    for (const auto& e : pr.support) {
        Rational s(0);
        for (std::size_t r = 0; r < points.size(); ++r) {
            const auto v = naive_eval(SparsePoly::monomial(e), points[r]) * y[r];
            s += pr.target(points[r]) ? -v : v;
        }
        if (!s.is_zero()) return false;
    }
    if (pr.kind == RepKind::Sign) {
        Rational total(0);
        for (const auto& v : y) total += v;
        return total.sign() > 0;
    }
    for (const auto& v : y)
        if (v.sign() <= 0) return false;
    return true;
}

TargetFunction random_table(std::mt19937_64& rng, const Grid& grid) {
    std::bernoulli_distribution bit(0.5);
    std::vector<std::uint8_t> values(grid.size());
    for (auto& v : values) v = bit(rng) ? 1 : 0;
    return TargetFunction::truth_table(grid, values);
}

struct BruteResult {
    std::optional<std::size_t> k;
    std::vector<ExponentVector> support;
};

// Size order then lexicographic, one fresh LP decision per subset.
BruteResult brute_min_sparsity(const TargetFunction& f, RepKind kind, const std::vector<ExponentVector>& pool) {
    const auto size = pool.size();
    for (std::size_t k = 1; k <= size; ++k) {
        std::vector<std::size_t> c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = i;
        while (true) {
            std::vector<ExponentVector> support;
            for (auto j : c) support.push_back(pool[j]);
            const auto cert = decide(problem(support, f, kind));
            if (cert.status == Status::Feasible) return {k, support};
            std::size_t i = k;
            while (i > 0 && c[i - 1] == size - k + i - 1) --i;
            if (i == 0) break;
            ++c[i - 1];
            for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
        }
    }
    return {};
}

SearchConfig config(unsigned degree_cap) {
    SearchConfig c;
    c.degree_cap = degree_cap;
    return c;
}

}  // namespace

TEST_CASE("sign feasibility examples") {
    const auto par1 = TargetFunction::parity(Grid(1, {0, 1}));
    const auto par2 = TargetFunction::parity(Grid(2, {0, 1}));

    auto pr = problem({ExponentVector{0}, ExponentVector{1}}, par1, RepKind::Sign);
    auto cert = feasible_sign_rep(pr);
    REQUIRE(cert.status == Status::Feasible);
    CHECK(check_certificate(pr, cert));
    // b > 0 and a < -b
    const auto& c = *cert.coefficients;
    CHECK(c.coefficient(ExponentVector{0}).sign() > 0);
    CHECK(c.coefficient(ExponentVector{1}) < -c.coefficient(ExponentVector{0}));

    pr = problem({ExponentVector{0}}, par1, RepKind::Sign);
    cert = feasible_sign_rep(pr);
    CHECK(cert.status == Status::Infeasible);
    CHECK(check_certificate(pr, cert));
    CHECK(independent_ray_check(pr, *cert.dual_ray));

    pr = problem({ExponentVector{0, 0}, ExponentVector{1, 0}, ExponentVector{0, 1}}, par2, RepKind::Sign);
    cert = feasible_sign_rep(pr);
    CHECK(cert.status == Status::Infeasible);
    CHECK(independent_ray_check(pr, *cert.dual_ray));

    CHECK_THROWS_AS(feasible_sign_rep(problem({ExponentVector{0, 0}}, par1, RepKind::Sign)), std::invalid_argument);
    CHECK_THROWS_AS(feasible_sign_rep(problem({ExponentVector{0}, ExponentVector{0}}, par1, RepKind::Sign)),
                    std::invalid_argument);
    CHECK_THROWS_AS(feasible_sign_rep(problem({ExponentVector{0}}, par1, RepKind::WeakSign)), std::invalid_argument);
}

TEST_CASE("weak feasibility examples") {
    const auto par1 = TargetFunction::parity(Grid(1, {0, 1}));
    auto pr = problem({ExponentVector{1}}, par1, RepKind::WeakSign);
    auto cert = feasible_weak_rep(pr);
    REQUIRE(cert.status == Status::Feasible);
    CHECK(cert.coefficients->coefficient(ExponentVector{1}).sign() < 0);
    CHECK(check_certificate(pr, cert));

    pr = problem({ExponentVector{0}}, par1, RepKind::WeakSign);
    cert = feasible_weak_rep(pr);
    CHECK(cert.status == Status::Infeasible);
    CHECK(independent_ray_check(pr, *cert.dual_ray));

    pr = problem({ExponentVector{1}, ExponentVector{2}}, TargetFunction::parity(Grid(1, {0, 1, 2})), RepKind::WeakSign);
    cert = feasible_weak_rep(pr);
    REQUIRE(cert.status == Status::Feasible);
    CHECK(check_certificate(pr, cert));

    // X1 vanishes at 0, so that point cannot be the nonzero witness
    pr = problem({ExponentVector{1}}, par1, RepKind::WeakSign, Point{0});
    cert = feasible_weak_rep(pr);
    CHECK(cert.status == Status::Infeasible);
    CHECK(check_certificate(pr, cert));
    CHECK(feasible_weak_rep(problem({ExponentVector{1}}, par1, RepKind::WeakSign, Point{1})).status == Status::Feasible);
    CHECK_THROWS_AS(feasible_weak_rep(problem({ExponentVector{1}}, par1, RepKind::WeakSign, Point{3})),
                    std::invalid_argument);
}

TEST_CASE("certificates are sound, scale invariant and monotone") {
    std::mt19937_64 rng(41);
    const std::vector<Grid> grids{Grid(2, {0, 1}), Grid(1, {0, 1, 2, 3}), Grid(2, {0, 1, 2}), Grid(2, {1, 2})};
    std::uniform_int_distribution<long> num(1, 30);
    int feasible = 0, infeasible = 0;
    for (int t = 0; t < 300; ++t) {
        const auto& grid = grids[static_cast<std::size_t>(t) % grids.size()];
        const auto pool = monomial_pool(grid.dimension(), static_cast<unsigned>(grid.m() - 1));
        const auto f = t % 2 == 0 ? TargetFunction::parity(grid) : random_table(rng, grid);
        std::vector<ExponentVector> support, rest;
        std::bernoulli_distribution take(0.5);
        for (const auto& e : pool) (take(rng) ? support : rest).push_back(e);
        if (support.empty()) continue;
        for (const auto kind : {RepKind::Sign, RepKind::WeakSign}) {
            const auto pr = problem(support, f, kind);
            const auto cert = decide(pr);
            CHECK(check_certificate(pr, cert));
            if (cert.status == Status::Infeasible) {
                ++infeasible;
                CHECK(independent_ray_check(pr, *cert.dual_ray));
                continue;
            }
            ++feasible;
            CHECK(verify(*cert.coefficients, f, kind).pass);
            CHECK(verify(*cert.coefficients * Rational(num(rng), num(rng)), f, kind).pass);
            if (!rest.empty()) {
                auto bigger = support;
                bigger.push_back(rest.front());
                CHECK(decide(problem(bigger, f, kind)).status == Status::Feasible);
            }
        }
    }
    CHECK(feasible > 20);
    CHECK(infeasible > 20);
}

TEST_CASE("monomial pool") {
    const auto pool = monomial_pool(2, 1);
    REQUIRE(pool.size() == 4);
    CHECK(pool[0] == ExponentVector{0, 0});
    CHECK(pool[1] == ExponentVector{0, 1});
    CHECK(pool[2] == ExponentVector{1, 0});
    CHECK(pool[3] == ExponentVector{1, 1});
    CHECK(monomial_pool(3, 2).size() == 27);
    CHECK(monomial_pool(1, 0).size() == 1);
}

TEST_CASE("min_sparsity examples") {
    auto r = min_sparsity(TargetFunction::parity(Grid(2, {0, 1})), RepKind::Sign, config(1));
    CHECK(r.k == 4);

    r = min_sparsity(TargetFunction::parity(Grid(2, {1, 2})), RepKind::Sign, config(2));
    REQUIRE(r.k == 3);
    // geometric form: a polynomial in the product x1*x2
    for (const auto& [e, c] : r.witness->terms()) CHECK(e[0] == e[1]);

    r = min_sparsity(TargetFunction::parity(Grid(1, {0, 1, 2})), RepKind::WeakSign, config(2));
    CHECK(r.k == 2);
    CHECK(verify(*r.witness, TargetFunction::parity(Grid(1, {0, 1, 2})), RepKind::WeakSign).pass);

    SearchConfig limited = config(1);
    limited.max_support = 3;
    r = min_sparsity(TargetFunction::parity(Grid(2, {0, 1})), RepKind::Sign, limited);
    CHECK_FALSE(r.k);
    CHECK_FALSE(r.witness);
    CHECK(r.stats.subsets_enumerated == 4 + 6 + 4);
}

TEST_CASE("min_sparsity agrees with brute force on random truth tables") {
    std::mt19937_64 rng(43);
    const std::vector<std::pair<Grid, unsigned>> setups{
        {Grid(2, {0, 1}), 1}, {Grid(1, {0, 1, 2, 3}), 3}, {Grid(2, {0, 1, 2}), 1}, {Grid(2, {0, 1, 2}), 2}};
    for (int t = 0; t < 24; ++t) {
        const auto& [grid, cap] = setups[static_cast<std::size_t>(t) % setups.size()];
        const auto f = random_table(rng, grid);
        const auto pool = monomial_pool(grid.dimension(), cap);
        for (const auto kind : {RepKind::Sign, RepKind::WeakSign}) {
            const auto expected = brute_min_sparsity(f, kind, pool);
            const auto got = min_sparsity(f, kind, config(cap));
            CHECK(got.k == expected.k);
            CHECK(got.support == expected.support);
        }
    }
}

TEST_CASE("search results do not depend on workers or symmetry pruning") {
    struct Setup {
        TargetFunction f;
        RepKind kind;
        unsigned cap;
    };
    const std::vector<Setup> setups{
        {TargetFunction::parity(Grid(3, {1, 2})), RepKind::Sign, 3},
        {TargetFunction::parity(Grid(2, {0, 1, 2})), RepKind::Sign, 2},
        {TargetFunction::parity(Grid(2, {0, 1, 2})), RepKind::WeakSign, 2},
        {TargetFunction::inner_product(1), RepKind::Sign, 1},
    };
    for (const auto& s : setups) {
        const auto base = min_sparsity(s.f, s.kind, config(s.cap));
        for (unsigned workers : {2U, 5U}) {
            auto c = config(s.cap);
            c.workers = workers;
            const auto r = min_sparsity(s.f, s.kind, c);
            CHECK(r.k == base.k);
            CHECK(r.support == base.support);
            CHECK(r.witness == base.witness);
            CHECK(to_json(r.stats) == to_json(base.stats));
        }
        auto c = config(s.cap);
        c.symmetry = true;
        c.workers = 3;
        const auto pruned = min_sparsity(s.f, s.kind, c);
        CHECK(pruned.k == base.k);
        CHECK(pruned.support == base.support);
        CHECK(pruned.stats.subsets_enumerated == base.stats.subsets_enumerated);
        if (s.f.kind() == TargetKind::Parity && s.f.grid().dimension() == 3) CHECK(pruned.stats.symmetry_pruned > 0);
    }
}

TEST_CASE("min_degree examples") {
    auto r = min_degree(TargetFunction::parity(Grid(2, {0, 1})), RepKind::Sign, config(1));
    CHECK(r.degree == 2);
    r = min_degree(TargetFunction::parity(Grid(3, {0, 1})), RepKind::WeakSign, config(1));
    CHECK(r.degree == 3);
    r = min_degree(TargetFunction::parity(Grid(2, {0, 1, 2})), RepKind::Sign, config(2));
    CHECK(r.degree == 4);
    REQUIRE(r.witness);
    CHECK(verify(*r.witness, TargetFunction::parity(Grid(2, {0, 1, 2})), RepKind::Sign).pass);
    // capped too low: no degree works
    r = min_degree(TargetFunction::parity(Grid(1, {0, 1, 2})), RepKind::Sign, config(1));
    CHECK_FALSE(r.degree);
}

TEST_CASE("coefficient sign census") {
    const auto one = coefficient_sign_census(1);
    REQUIRE(one.size() == 2);
    CHECK(one[0].monomial == ExponentVector{0});
    CHECK(one[0].verdict == 1);
    CHECK(one[0].ray_verified);

    for (std::size_t n = 2; n <= 3; ++n) {
        const auto census = coefficient_sign_census(n);
        CHECK(census.size() == (std::size_t{1} << n));
        const auto f = TargetFunction::parity(Grid(n, {0, 1}));
        for (const auto& e : census) {
            CHECK(e.verdict == e.expected_sign);
            CHECK(e.expected_sign == (e.monomial.total_degree() % 2 == 0 ? 1 : -1));
            REQUIRE(e.wrong_sign_ray);
            CHECK(e.ray_verified);
            // grid rows, then the appended sign row: the grid part kills every coefficient except c_S,
            // which the appended row then cancels
            const auto& y = *e.wrong_sign_ray;
            const auto points = f.grid().enumerate(kDefaultGridCap);
            REQUIRE(y.size() == points.size() + 1);
            Rational rhs(0);
            for (std::size_t r = 0; r < points.size(); ++r) rhs += y[r];
            CHECK(rhs.sign() > 0);
            for (const auto& m : monomial_pool(n, 1)) {
                Rational s(0);
                for (std::size_t r = 0; r < points.size(); ++r) {
                    const auto v = naive_eval(SparsePoly::monomial(m), points[r]) * y[r];
                    s += f(points[r]) ? -v : v;
                }
                if (m == e.monomial) s -= Rational(e.expected_sign) * y.back();
                CHECK(s.is_zero());
            }
        }
    }
}

TEST_CASE("caps are refused explicitly") {
    auto c = config(1);
    c.subset_cap = 5;
    CHECK_THROWS_AS(min_sparsity(TargetFunction::parity(Grid(2, {0, 1})), RepKind::Sign, c), CapExceeded);
    c = config(3);
    c.pool_cap = 63;
    CHECK_THROWS_AS(min_sparsity(TargetFunction::parity(Grid(3, {1, 2})), RepKind::Sign, c), CapExceeded);
    c = config(1);
    c.grid_cap = 7;
    CHECK_THROWS_AS(min_sparsity(TargetFunction::parity(Grid(3, {0, 1})), RepKind::Sign, c), CapExceeded);
    CHECK_THROWS_AS(min_sparsity(TargetFunction::parity(Grid(1, {0, 1})), RepKind::Exact, config(1)),
                    std::invalid_argument);
    // a cap reached after the answer is found does not matter
    c = config(1);
    c.subset_cap = 4 + 6 + 4 + 1;
    CHECK(min_sparsity(TargetFunction::parity(Grid(2, {0, 1})), RepKind::Sign, c).k == 4);
}
