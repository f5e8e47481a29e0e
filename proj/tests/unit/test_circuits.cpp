#include <doctest.h>

#include "signrep/circuits.hpp"
#include "signrep/errors.hpp"
#include "signrep/poly_io.hpp"
#include "support.hpp"

#include <stdexcept>

using namespace signrep;
using namespace testing_support;

namespace {

AndGateTerm gate(std::vector<std::size_t> pos, std::vector<std::size_t> neg) { return AndGateTerm::from_sets(pos, neg); }

// Direct literal product, no polynomial expansion.
Rational oracle_eval(const ThrAndCircuit& c, const std::vector<std::int64_t>& x) {
    Rational total = c.bias;
    for (std::size_t g = 0; g < c.gates.size(); ++g) {
        bool on = true;
        for (auto i : c.gates[g].positive_set()) on = on && x[i] == 1;
        for (auto j : c.gates[g].negated_set()) on = on && x[j] == 0;
        if (on) total += c.weights[g];
    }
    return total;
}

bool oracle_represents(const ThrAndCircuit& c, const TargetFunction& f) {
    for (const auto& x : all_points(c.n, {0, 1})) {
        const int s = oracle_eval(c, x).sign();
        if (s == 0 || (s < 0) != (f(x) == 1)) return false;
    }
    return true;
}

// Smallest gate subset admitting a sign representation, straight from the LP decision.
std::size_t brute_spr_B(const TargetFunction& f) {
    const auto n = f.grid().dimension();
    const auto basis = enumerate_basis(n);
    const auto points = all_points(n, {0, 1});
    for (std::size_t k = 1; k <= basis.size(); ++k) {
        std::vector<std::size_t> c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = i;
        while (true) {
            RationalMatrix g(points.size(), k);
            for (std::size_t r = 0; r < points.size(); ++r)
                for (std::size_t j = 0; j < k; ++j) {
                    const int v = gate_value(basis[c[j]], points[r]);
                    g(r, j) = Rational(f(points[r]) ? -v : v);
                }
            if (decide_sign(g).feasible) return k;
            std::size_t i = k;
            while (i > 0 && c[i - 1] == basis.size() - k + i - 1) --i;
            if (i == 0) break;
            ++c[i - 1];
            for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
        }
    }
    return 0;
}

}  // namespace

TEST_CASE("gate terms") {
    const auto g = gate({0}, {1});
    CHECK(g.str() == "x1*(1-x2)");
    CHECK(g.width() == 2);
    CHECK(gate({}, {}).str() == "1");
    CHECK(gate_poly(g, 2) == parse_poly("x1 - x1*x2", 2));
    CHECK(gate_poly(gate({}, {0, 1}), 2) == parse_poly("1 - x1 - x2 + x1*x2", 2));
    CHECK(gate_poly(gate({}, {}), 3) == SparsePoly::constant(3, Rational(1)));
    CHECK(gate_value(g, std::vector<std::int64_t>{1, 0}) == 1);
    CHECK(gate_value(g, std::vector<std::int64_t>{1, 1}) == 0);
    CHECK_THROWS_AS(gate({0}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(gate({64}, {}), std::invalid_argument);
    CHECK_THROWS_AS(gate_poly(gate({2}, {}), 2), std::invalid_argument);

    std::mt19937_64 rng(53);
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& t : enumerate_basis(n))
            for (const auto& x : all_points(n, {0, 1})) {
                ThrAndCircuit single{n, {t}, {Rational(1)}};
                CHECK(naive_eval(gate_poly(t, n), x) == oracle_eval(single, x));
                CHECK(Rational(gate_value(t, x)) == oracle_eval(single, x));
            }
}

TEST_CASE("basis order") {
    CHECK(enumerate_basis(0) == std::vector<AndGateTerm>{gate({}, {})});
    CHECK(enumerate_basis(1) == std::vector<AndGateTerm>{gate({}, {}), gate({0}, {}), gate({}, {0})});
    const std::vector<AndGateTerm> two{gate({}, {}),    gate({0}, {}),   gate({}, {0}),
                                       gate({1}, {}),   gate({}, {1}),   gate({0, 1}, {}),
                                       gate({0}, {1}),  gate({1}, {0}),  gate({}, {0, 1})};
    CHECK(enumerate_basis(2) == two);
    CHECK(enumerate_basis(5).size() == 243);
    CHECK_THROWS_AS(enumerate_basis(8, 4096), CapExceeded);
    const auto five = enumerate_basis(5);
    for (std::size_t i = 1; i < five.size(); ++i) {
        CHECK(basis_less(five[i - 1], five[i]));
        CHECK_FALSE(basis_less(five[i], five[i - 1]));
    }
}

TEST_CASE("circuit evaluation and verification") {
    const auto xor2 = TargetFunction::parity(Grid(2, {0, 1}));
    ThrAndCircuit c{2, {gate({0}, {1}), gate({1}, {0})}, {Rational(-2), Rational(-2)}, Rational(1)};
    CHECK(circuit_verify(c, xor2).pass);
    CHECK(circuit_poly(c) == parse_poly("1 - 2*x1 - 2*x2 + 4*x1*x2", 2));
    for (const auto& x : all_points(2, {0, 1})) CHECK(circuit_eval(c, x) == oracle_eval(c, x));

    ThrAndCircuit constant{2, {}, {}, Rational(1)};
    const auto report = circuit_verify(constant, xor2);
    CHECK_FALSE(report.pass);
    REQUIRE(report.counterexample);
    CHECK(report.counterexample->target == 1);

    ThrAndCircuit dup{2, {gate({0}, {}), gate({0}, {})}, {Rational(1), Rational(1)}};
    CHECK_THROWS_AS(circuit_poly(dup), std::invalid_argument);
    ThrAndCircuit mismatched{2, {gate({0}, {})}, {}};
    CHECK_THROWS_AS(circuit_poly(mismatched), std::invalid_argument);
    CHECK_THROWS_AS(circuit_verify(c, TargetFunction::parity(Grid(2, {0, 1, 2}))), std::invalid_argument);

    SUBCASE("circuit_verify agrees with verify of the expanded polynomial") {
        std::mt19937_64 rng(59);
        std::uniform_int_distribution<long> w(-3, 3);
        std::bernoulli_distribution take(0.3);
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
            ThrAndCircuit r{n, {}, {}, Rational(w(rng))};
            for (const auto& g : enumerate_basis(n))
                if (take(rng)) {
                    r.gates.push_back(g);
                    r.weights.push_back(Rational(w(rng)));
                }
            const auto f = TargetFunction::parity(Grid(n, {0, 1}));
            const bool expected = oracle_represents(r, f);
            CHECK(circuit_verify(r, f).pass == expected);
            CHECK(verify(circuit_poly(r), f, RepKind::Sign).pass == expected);
        }
    }
}

TEST_CASE("min_spr_B") {
    CHECK(min_spr_B(TargetFunction::parity(Grid(1, {0, 1}))).k == 2);
    const auto two = min_spr_B(TargetFunction::parity(Grid(2, {0, 1})));
    CHECK(two.k == 3);
    REQUIRE(two.witness);
    CHECK(two.witness->size() == 3);
    CHECK(oracle_represents(*two.witness, TargetFunction::parity(Grid(2, {0, 1}))));

    SearchConfig sym;
    sym.symmetry = true;
    const auto three = min_spr_B(TargetFunction::parity(Grid(3, {0, 1})), sym);
    CHECK(three.k == 5);
    CHECK(oracle_represents(*three.witness, TargetFunction::parity(Grid(3, {0, 1}))));

    CHECK(min_spr_B(TargetFunction::inner_product(1)).k == 2);
    const auto ip2 = min_spr_B(TargetFunction::inner_product(2), sym);
    CHECK(ip2.k == 4);
    CHECK(oracle_represents(*ip2.witness, TargetFunction::inner_product(2)));

    SUBCASE("agrees with brute force on random two-variable tables") {
        std::mt19937_64 rng(61);
        std::bernoulli_distribution bit(0.5);
        for (int t = 0; t < 16; ++t) {
            std::vector<std::uint8_t> values(4);
            for (auto& v : values) v = bit(rng) ? 1 : 0;
            const auto f = TargetFunction::truth_table(Grid(2, {0, 1}), values);
            const auto r = min_spr_B(f);
            CHECK(r.k == brute_spr_B(f));
            CHECK(oracle_represents(*r.witness, f));
        }
    }

    SUBCASE("workers and symmetry do not change the answer") {
        SearchConfig c;
        c.workers = 3;
        const auto a = min_spr_B(TargetFunction::parity(Grid(3, {0, 1})), c);
        c.symmetry = true;
        const auto b = min_spr_B(TargetFunction::parity(Grid(3, {0, 1})), c);
        CHECK(a.k == three.k);
        CHECK(b.k == three.k);
        CHECK(to_json(*a.witness) == to_json(*b.witness));
        CHECK(to_json(*a.witness) == to_json(*three.witness));
    }
}

TEST_CASE("constructions") {
    const auto p3 = construct_parity_5_circuit(3);
    CHECK(p3.size() == 5);
    CHECK(p3.bias.is_zero());
    CHECK(std::find(p3.gates.begin(), p3.gates.end(), gate({0, 1, 2}, {})) != p3.gates.end());
    CHECK(oracle_represents(p3, TargetFunction::parity(Grid(3, {0, 1}))));
    // exact on the +-1 scale
    for (const auto& x : all_points(3, {0, 1})) CHECK(oracle_eval(p3, x) == Rational(parity_of(x) ? -1 : 1));

    const auto p6 = construct_parity_5_circuit(6);
    CHECK(p6.size() == 25);
    CHECK(circuit_verify(p6, TargetFunction::parity(Grid(6, {0, 1}))).pass);
    CHECK(oracle_represents(p6, TargetFunction::parity(Grid(6, {0, 1}))));
    CHECK_THROWS_AS(construct_parity_5_circuit(4), std::invalid_argument);

    for (std::size_t pairs : {2U, 4U}) {
        const auto ip = construct_ip_circuit(pairs);
        CHECK(ip.size() == (std::size_t{1} << pairs));
        CHECK(ip.n == 2 * pairs);
        for (const auto& g : ip.gates) CHECK(g.negated == 0);
        CHECK(oracle_represents(ip, TargetFunction::inner_product(pairs)));
    }
    CHECK_THROWS_AS(construct_ip_circuit(3), std::invalid_argument);
}

TEST_CASE("splitting on the last variable") {
    std::vector<ThrAndCircuit> circuits{construct_parity_5_circuit(3)};
    for (std::size_t n = 2; n <= 3; ++n) circuits.push_back(*min_spr_B(TargetFunction::parity(Grid(n, {0, 1}))).witness);
    for (const auto& c : circuits) {
        const auto split = split_on_last_variable(c);
        const auto lower = TargetFunction::parity(Grid(c.n - 1, {0, 1}));
        CHECK(verify(split.with_negated + split.without, lower, RepKind::Sign).pass);
        CHECK(verify(split.with_positive + split.without, lower.complement(), RepKind::Sign).pass);
        CHECK(verify(split.with_negated - split.with_positive, lower, RepKind::Sign).pass);
        // reassembly
        const auto x = parse_poly("x" + std::to_string(c.n), c.n);
        auto lift = [&](const SparsePoly& p) {
            SparsePoly out(c.n);
            for (const auto& [e, v] : p.terms()) {
                auto values = e.values();
                values.push_back(0);
                out.add_term(ExponentVector(values), v);
            }
            return out;
        };
        const auto one = SparsePoly::constant(c.n, Rational(1));
        CHECK(x * lift(split.with_positive) + (one - x) * lift(split.with_negated) + lift(split.without) ==
              circuit_poly(c));
    }
    CHECK_THROWS_AS(split_on_last_variable(ThrAndCircuit{1, {}, {}, Rational(1)}), std::invalid_argument);
}

TEST_CASE("circuit json round trip") {
    for (const auto& c : {construct_parity_5_circuit(3), construct_ip_circuit(2)}) {
        const auto j = to_json(c);
        const auto back = circuit_from_json(j);
        CHECK(back.n == c.n);
        CHECK(back.gates == c.gates);
        CHECK(back.weights == c.weights);
        CHECK(back.bias == c.bias);
        CHECK(to_json(back) == j);
    }
    const auto j = nlohmann::json::parse(R"({"n": 2, "bias": 1, "gates": [{"I": [1], "J": [2], "w": "-2"}, {"I": [2], "J": [1], "w": -2}]})");
    CHECK(circuit_verify(circuit_from_json(j), TargetFunction::parity(Grid(2, {0, 1}))).pass);
}
