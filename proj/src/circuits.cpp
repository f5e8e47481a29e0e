#include "signrep/circuits.hpp"

#include "signrep/errors.hpp"
#include "signrep/poly_io.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace signrep {

namespace {

using Literal = std::pair<std::size_t, int>;  // (variable, 0 positive / 1 negated)

std::vector<Literal> literals(const AndGateTerm& g) {
    std::vector<Literal> out;
    for (std::size_t i = 0; i < 64; ++i) {
        if ((g.positive >> i) & 1U) out.emplace_back(i, 0);
        if ((g.negated >> i) & 1U) out.emplace_back(i, 1);
    }
    return out;
}

std::uint64_t mask_below(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void check_gate(const AndGateTerm& g, std::size_t n) {
    if (g.positive & g.negated) throw std::invalid_argument("gate " + g.str() + " has overlapping I and J");
    if ((g.positive | g.negated) & ~mask_below(n))
        throw std::invalid_argument("gate " + g.str() + " uses a variable beyond n = " + std::to_string(n));
}

std::uint64_t permute_mask(std::uint64_t mask, const std::vector<std::size_t>& perm) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if ((mask >> i) & 1U) out |= std::uint64_t{1} << perm[i];
    return out;
}

Rational parse_weight(const nlohmann::json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("circuit weight must be a \"p/q\" string or an integer");
}

std::vector<std::size_t> parse_index_list(const nlohmann::json& j, std::size_t n) {
    std::vector<std::size_t> out;
    for (const auto& v : j) {
        const auto i = v.get<long>();
        if (i < 1 || static_cast<std::size_t>(i) > n)
            throw std::invalid_argument("gate variable index " + std::to_string(i) + " outside 1.." + std::to_string(n));
        out.push_back(static_cast<std::size_t>(i - 1));
    }
    return out;
}

// Cartesian product of circuits on disjoint variables; weights multiply, gates take unions.
ThrAndCircuit product_of_blocks(std::size_t n, const std::vector<std::vector<std::pair<AndGateTerm, Rational>>>& blocks) {
    std::vector<std::pair<AndGateTerm, Rational>> acc{{AndGateTerm{}, Rational(1)}};
    for (const auto& block : blocks) {
        std::vector<std::pair<AndGateTerm, Rational>> next;
        next.reserve(acc.size() * block.size());
        for (const auto& [g, w] : acc)
            for (const auto& [h, v] : block)
                next.emplace_back(AndGateTerm{g.positive | h.positive, g.negated | h.negated}, w * v);
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return basis_less(a.first, b.first); });
    ThrAndCircuit c;
    c.n = n;
    for (auto& [g, w] : acc) {
        c.gates.push_back(g);
        c.weights.push_back(std::move(w));
    }
    return c;
}

}  // namespace

AndGateTerm AndGateTerm::from_sets(const std::vector<std::size_t>& positive, const std::vector<std::size_t>& negated) {
    AndGateTerm g;
    for (auto i : positive) {
        if (i >= 64) throw std::invalid_argument("gate variable index too large");
        g.positive |= std::uint64_t{1} << i;
    }
    for (auto j : negated) {
        if (j >= 64) throw std::invalid_argument("gate variable index too large");
        g.negated |= std::uint64_t{1} << j;
    }
    if (g.positive & g.negated) throw std::invalid_argument("gate has overlapping I and J");
    return g;
}

std::vector<std::size_t> AndGateTerm::positive_set() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 64; ++i)
        if ((positive >> i) & 1U) out.push_back(i);
    return out;
}

std::vector<std::size_t> AndGateTerm::negated_set() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 64; ++i)
        if ((negated >> i) & 1U) out.push_back(i);
    return out;
}

std::size_t AndGateTerm::width() const {
    return static_cast<std::size_t>(std::popcount(positive) + std::popcount(negated));
}

std::string AndGateTerm::str() const {
    std::string s;
    for (const auto& [v, neg] : literals(*this)) {
        if (!s.empty()) s += "*";
        s += neg ? "(1-x" + std::to_string(v + 1) + ")" : "x" + std::to_string(v + 1);
    }
    return s.empty() ? "1" : s;
}

bool basis_less(const AndGateTerm& a, const AndGateTerm& b) {
    if (a.width() != b.width()) return a.width() < b.width();
    const auto la = literals(a);
    const auto lb = literals(b);
    return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
}

SparsePoly gate_poly(const AndGateTerm& term, std::size_t n) {
    check_gate(term, n);
    auto p = SparsePoly::constant(n, Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
        if ((term.positive >> i) & 1U) p = p * SparsePoly::variable(n, i);
        if ((term.negated >> i) & 1U) p = p * (SparsePoly::constant(n, Rational(1)) - SparsePoly::variable(n, i));
    }
    return p;
}

int gate_value(const AndGateTerm& term, std::span<const std::int64_t> point) {
    for (std::size_t i = 0; i < point.size(); ++i) {
        if ((term.positive >> i) & 1U && point[i] == 0) return 0;
        if ((term.negated >> i) & 1U && point[i] != 0) return 0;
    }
    return 1;
}

std::vector<AndGateTerm> enumerate_basis(std::size_t n, std::size_t cap) {
    if (n > 40) throw CapExceeded("basis for n = " + std::to_string(n) + " exceeds the cap");
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        count *= 3;
        if (count > cap)
            throw CapExceeded("basis of 3^" + std::to_string(n) + " gates exceeds the cap of " + std::to_string(cap));
    }
    std::vector<AndGateTerm> out;
    out.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
        AndGateTerm g;
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= 3) {
            if (c % 3 == 1) g.positive |= std::uint64_t{1} << i;
            if (c % 3 == 2) g.negated |= std::uint64_t{1} << i;
        }
        out.push_back(g);
    }
    std::sort(out.begin(), out.end(), basis_less);
    return out;
}

SparsePoly circuit_poly(const ThrAndCircuit& c) {
    if (c.weights.size() != c.gates.size()) throw std::invalid_argument("circuit weight count differs from gate count");
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    auto p = SparsePoly::constant(c.n, c.bias);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        if (!seen.emplace(c.gates[i].positive, c.gates[i].negated).second)
            throw std::invalid_argument("duplicate gate " + c.gates[i].str());
        p += gate_poly(c.gates[i], c.n) * c.weights[i];
    }
    return p;
}

Rational circuit_eval(const ThrAndCircuit& c, std::span<const std::int64_t> point) {
    if (point.size() != c.n) throw std::invalid_argument("point dimension does not match the circuit");
    Rational v = c.bias;
    for (std::size_t i = 0; i < c.gates.size(); ++i)
        if (gate_value(c.gates[i], point)) v += c.weights[i];
    return v;
}

VerificationReport circuit_verify(const ThrAndCircuit& c, const TargetFunction& f, std::size_t grid_cap) {
    if (f.grid().points() != std::vector<std::int64_t>{0, 1})
        throw std::invalid_argument("circuits are verified over {0,1}^n");
    return verify(circuit_poly(c), f, RepKind::Sign, grid_cap);
}

CircuitSearchResult min_spr_B(const TargetFunction& f, const SearchConfig& config) {
    const auto n = f.grid().dimension();
    if (f.grid().points() != std::vector<std::int64_t>{0, 1})
        throw std::invalid_argument("gate basis search runs over {0,1}^n");
    const auto basis = enumerate_basis(n, config.pool_cap);
    const auto points = f.grid().enumerate(config.grid_cap);

    SignedPool pool(points.size(), basis.size());
    for (std::size_t r = 0; r < points.size(); ++r) {
        const int sign = f(points[r]) == 1 ? -1 : 1;
        for (std::size_t j = 0; j < basis.size(); ++j) pool(r, j) = sign * gate_value(basis[j], points[r]);
    }

    SubsetSearchJob job;
    job.pool = &pool;
    job.kind = RepKind::Sign;
    job.symmetry = config.symmetry;
    job.subset_cap = config.subset_cap;
    job.workers = config.workers;
    if (config.symmetry) {
        std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> index;
        for (std::size_t j = 0; j < basis.size(); ++j) index.emplace(std::pair{basis[j].positive, basis[j].negated}, j);
        for (const auto& perm : f.symmetries()) {
            std::vector<std::size_t> img(basis.size());
            for (std::size_t j = 0; j < basis.size(); ++j)
                img[j] = index.at({permute_mask(basis[j].positive, perm), permute_mask(basis[j].negated, perm)});
            job.pool_symmetries.push_back(std::move(img));
        }
    }

    CircuitSearchResult result;
    const auto max_k = config.max_support == 0 ? basis.size() : std::min(config.max_support, basis.size());
    for (std::size_t k = 1; k <= max_k; ++k) {
        job.size = k;
        job.already_enumerated = result.stats.subsets_enumerated;
        auto r = search_subsets(job);
        result.stats += r.stats;
        if (!r.hit) continue;
        ThrAndCircuit c;
        c.n = n;
        for (auto j : r.hit->subset) c.gates.push_back(basis[j]);
        c.weights = std::move(r.hit->weights);
        if (!circuit_verify(c, f, config.grid_cap).pass)
            throw std::logic_error("circuit witness failed independent verification");
        result.k = k;
        result.witness = std::move(c);
        return result;
    }
    return result;
}

ThrAndCircuit construct_parity_5_circuit(std::size_t n) {
    if (n == 0 || n % 3 != 0) throw std::invalid_argument("parity circuit needs n divisible by 3");
    std::vector<std::vector<std::pair<AndGateTerm, Rational>>> blocks;
    for (std::size_t b = 0; b < n / 3; ++b) {
        const std::size_t x = 3 * b, y = x + 1, z = x + 2;
        blocks.push_back({
            {AndGateTerm{}, Rational(1)},
            {AndGateTerm::from_sets({x, y, z}, {}), Rational(-2)},
            {AndGateTerm::from_sets({x}, {y, z}), Rational(-2)},
            {AndGateTerm::from_sets({y}, {x, z}), Rational(-2)},
            {AndGateTerm::from_sets({z}, {x, y}), Rational(-2)},
        });
    }
    return product_of_blocks(n, blocks);
}

ThrAndCircuit construct_ip_circuit(std::size_t pairs) {
    if (pairs == 0 || pairs % 2 != 0) throw std::invalid_argument("inner product circuit needs an even number of pairs");
    std::vector<std::vector<std::pair<AndGateTerm, Rational>>> blocks;
    for (std::size_t b = 0; b < pairs / 2; ++b) {
        const std::size_t x1 = 2 * b, x2 = x1 + 1, y1 = pairs + x1, y2 = pairs + x2;
        blocks.push_back({
            {AndGateTerm{}, Rational(1)},
            {AndGateTerm::from_sets({x1, y1}, {}), Rational(-2)},
            {AndGateTerm::from_sets({x2, y2}, {}), Rational(-2)},
            {AndGateTerm::from_sets({x1, y1, x2, y2}, {}), Rational(4)},
        });
    }
    return product_of_blocks(2 * pairs, blocks);
}

VariableSplit split_on_last_variable(const ThrAndCircuit& c) {
    if (c.n < 2) throw std::invalid_argument("splitting needs at least two variables");
    if (c.weights.size() != c.gates.size()) throw std::invalid_argument("circuit weight count differs from gate count");
    const auto last = c.n - 1;
    const auto bit = std::uint64_t{1} << last;
    VariableSplit s{SparsePoly(last), SparsePoly(last), SparsePoly::constant(last, c.bias)};
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const AndGateTerm rest{c.gates[i].positive & ~bit, c.gates[i].negated & ~bit};
        auto term = gate_poly(rest, last) * c.weights[i];
        if (c.gates[i].positive & bit)
            s.with_positive += term;
        else if (c.gates[i].negated & bit)
            s.with_negated += term;
        else
            s.without += term;
    }
    return s;
}

nlohmann::json to_json(const ThrAndCircuit& c) {
    nlohmann::json gates = nlohmann::json::array();
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        std::vector<std::size_t> pos, neg;
        for (auto v : c.gates[i].positive_set()) pos.push_back(v + 1);
        for (auto v : c.gates[i].negated_set()) neg.push_back(v + 1);
        nlohmann::json g;
        g["I"] = pos;
        g["J"] = neg;
        g["w"] = c.weights[i].str();
        gates.push_back(g);
    }
    nlohmann::json j;
    j["n"] = c.n;
    j["size"] = c.gates.size();
    j["bias"] = c.bias.str();
    j["gates"] = gates;
    return j;
}

ThrAndCircuit circuit_from_json(const nlohmann::json& j) {
    ThrAndCircuit c;
    c.n = j.at("n").get<std::size_t>();
    if (c.n == 0 || c.n > 64) throw std::invalid_argument("circuit n must be in 1..64");
    if (j.contains("bias")) c.bias = parse_weight(j.at("bias"));
    for (const auto& g : j.at("gates")) {
        const auto pos = parse_index_list(g.value("I", nlohmann::json::array()), c.n);
        const auto neg = parse_index_list(g.value("J", nlohmann::json::array()), c.n);
        c.gates.push_back(AndGateTerm::from_sets(pos, neg));
        c.weights.push_back(parse_weight(g.at("w")));
    }
    return c;
}

nlohmann::json to_json(const CircuitSearchResult& r) {
    nlohmann::json j;
    j["k"] = r.k ? nlohmann::json(*r.k) : nlohmann::json(nullptr);
    j["witness"] = r.witness ? to_json(*r.witness) : nlohmann::json(nullptr);
    j["polynomial"] = r.witness ? nlohmann::json(to_text(circuit_poly(*r.witness))) : nlohmann::json(nullptr);
    j["certificates_checked"] = r.stats.certificates_checked;
    j["stats"] = to_json(r.stats);
    return j;
}

}  // namespace signrep
