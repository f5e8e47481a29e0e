#include "signrep/presets.hpp"

#include "signrep/circuits.hpp"
#include "signrep/constructions.hpp"
#include "signrep/descartes.hpp"
#include "signrep/vandermonde.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iomanip>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace signrep {

namespace {

using nlohmann::json;

std::optional<Rational> as_rational(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

bool holds(const json& computed, const std::string& relation, const json& expected) {
    const auto c = as_rational(computed);
    const auto e = as_rational(expected);
    if (relation == "=") return c && e ? *c == *e : computed == expected;
    if (!c || !e) return false;
    if (relation == ">=") return *c >= *e;
    if (relation == ">") return *c > *e;
    if (relation == "<=") return *c <= *e;
    throw std::invalid_argument("unknown relation " + relation);
}

std::int64_t ipow(std::int64_t base, std::size_t exp) {
    std::int64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

Grid span_grid(std::size_t n, std::int64_t lo, std::int64_t hi) { return Grid::range(n, lo, hi); }

// Sparsity of a construction when it verifies, otherwise a description of the failure.
json checked_sparsity(const SparsePoly& p, const TargetFunction& f, RepKind kind, std::size_t grid_cap) {
    const auto report = verify(p, f, kind, grid_cap);
    if (!report.pass) return "fails " + to_string(kind) + " verification";
    return p.sparsity();
}

json checked_gates(const ThrAndCircuit& c, const TargetFunction& f, std::size_t grid_cap) {
    if (!circuit_verify(c, f, grid_cap).pass) return "fails verification";
    return c.size();
}

class ReportBuilder {
public:
    ReportBuilder(RunReport& report, const PresetOptions& options) : report_(report), options_(options) {}

    [[nodiscard]] SearchConfig config(unsigned degree_cap) const {
        SearchConfig c;
        c.degree_cap = degree_cap;
        c.symmetry = options_.symmetry;
        c.subset_cap = options_.subset_cap;
        c.grid_cap = options_.grid_cap;
        c.workers = options_.workers;
        return c;
    }

    void add(std::string label, json parameters, std::string quantity, std::string relation, json expected,
             std::string claim, const std::function<json(SearchStats&)>& compute) {
        PresetCase c;
        c.label = std::move(label);
        c.parameters = std::move(parameters);
        c.quantity = std::move(quantity);
        c.relation = std::move(relation);
        c.expected = std::move(expected);
        c.claim = std::move(claim);
        try {
            c.computed = compute(report_.stats);
            c.pass = holds(c.computed, c.relation, c.expected);
        } catch (const std::exception& e) {
            c.computed = nullptr;
            c.error = e.what();
            c.pass = false;
        }
        report_.cases.push_back(std::move(c));
    }

    [[nodiscard]] const PresetOptions& options() const { return options_; }

private:
    RunReport& report_;
    const PresetOptions& options_;
};

json sparsity_of(const SparsityResult& r) { return r.k ? json(*r.k) : json("none within the pool"); }

void preset_dsp2(ReportBuilder& b) {
    for (std::size_t n = 1; n <= 3; ++n)
        b.add("n=" + std::to_string(n), {{"n", n}, {"grid", "0..1"}, {"D", 1}, {"kind", "sign"}}, "min sparsity", "=",
              ipow(2, n), "parity on the hypercube needs all 2^n multilinear monomials", [&](SearchStats& s) {
                  auto r = min_sparsity(TargetFunction::parity(span_grid(n, 0, 1)), RepKind::Sign, b.config(1));
                  s += r.stats;
                  return sparsity_of(r);
              });
}

void preset_degree(ReportBuilder& b) {
    auto degree_case = [&](std::size_t n, std::int64_t hi, unsigned cap, RepKind kind, json expected,
                           std::string claim) {
        b.add("n=" + std::to_string(n) + " grid 0.." + std::to_string(hi) + " " + to_string(kind),
              {{"n", n}, {"grid", "0.." + std::to_string(hi)}, {"D", cap}, {"kind", to_string(kind)}}, "min degree",
              "=", std::move(expected), std::move(claim), [=, &b](SearchStats& s) -> json {
                  auto r = min_degree(TargetFunction::parity(span_grid(n, 0, hi)), kind, b.config(cap));
                  s += r.stats;
                  return r.degree ? json(*r.degree) : json("none within the pool");
              });
    };
    for (std::size_t n = 1; n <= 3; ++n)
        degree_case(n, 1, 1, RepKind::Sign, n, "sign representations of hypercube parity have degree n");
    degree_case(2, 2, 2, RepKind::Sign, 4, "degree at least n(m-1) over {0..m-1}^n");
    for (std::size_t n = 1; n <= 3; ++n)
        degree_case(n, 1, 1, RepKind::WeakSign, n, "weak representations of hypercube parity have degree n");
}

void preset_sign2(ReportBuilder& b) {
    for (std::size_t n = 1; n <= 3; ++n)
        b.add("n=" + std::to_string(n), {{"n", n}, {"grid", "0..1"}, {"D", 1}}, "monomials with forced sign (-1)^|S|",
              "=", ipow(2, n), "every coefficient c_S of a sign representation has sign (-1)^|S|",
              [&](SearchStats& s) {
                  const auto census = coefficient_sign_census(n, b.config(1));
                  std::size_t forced = 0;
                  for (const auto& e : census) {
                      s.lps_solved += e.lps_solved;
                      if (e.verdict == e.expected_sign && e.ray_verified) ++forced;
                  }
                  return json(forced);
              });
}

void preset_dspm(ReportBuilder& b) {
    for (std::size_t n = 1; n <= 2; ++n)
        b.add("search n=" + std::to_string(n), {{"n", n}, {"grid", "0..2"}, {"D", 2}, {"kind", "sign"}},
              "min sparsity", "=", ipow(3, n), "parity over {0..m-1}^n needs m^n monomials", [&](SearchStats& s) {
                  auto r = min_sparsity(TargetFunction::parity(span_grid(n, 0, 2)), RepKind::Sign, b.config(2));
                  s += r.stats;
                  return sparsity_of(r);
              });
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t m = 2; m <= 4; ++m)
            b.add("construction n=" + std::to_string(n) + " m=" + std::to_string(m),
                  {{"n", n}, {"m", m}, {"grid", "0.." + std::to_string(m - 1)}, {"kind", "sign"}},
                  "m-ary construction sparsity", "=", ipow(static_cast<std::int64_t>(m), n),
                  "the m-ary product construction has sparsity m^n", [&, n, m](SearchStats&) {
                      return checked_sparsity(construct_mary_parity(n, m),
                                              TargetFunction::parity(span_grid(n, 0, static_cast<std::int64_t>(m) - 1)),
                                              RepKind::Sign, b.options().grid_cap);
                  });
}

void preset_general_lower(ReportBuilder& b) {
    for (std::size_t n = 1; n <= 3; ++n) {
        b.add("search n=" + std::to_string(n), {{"n", n}, {"m", 2}, {"grid", "1..2"}, {"D", n}, {"kind", "sign"}},
              "min sparsity", "=", n + 1, "over {1..m}^n sparsity is at least n(m-1)+1, met by the geometric construction",
              [&, n](SearchStats& s) {
                  auto r = min_sparsity(TargetFunction::parity(span_grid(n, 1, 2)), RepKind::Sign,
                                        b.config(static_cast<unsigned>(n)));
                  s += r.stats;
                  return sparsity_of(r);
              });
        b.add("geometric n=" + std::to_string(n), {{"n", n}, {"grid", "1..2"}, {"kind", "sign"}},
              "geometric construction sparsity", "=", n + 1, "the geometric construction has sparsity n+1",
              [&, n](SearchStats&) {
                  return checked_sparsity(construct_geometric_parity(n), TargetFunction::parity(span_grid(n, 1, 2)),
                                          RepKind::Sign, b.options().grid_cap);
              });
    }
    b.add("search n=2 m=3", {{"n", 2}, {"m", 3}, {"grid", "1..3"}, {"D", 3}, {"kind", "sign"}}, "min sparsity", ">=", 5,
          "over {1..m}^n sparsity is at least n(m-1)+1", [&](SearchStats& s) {
              auto r = min_sparsity(TargetFunction::parity(span_grid(2, 1, 3)), RepKind::Sign, b.config(3));
              s += r.stats;
              return sparsity_of(r);
          });
}

void preset_weak(ReportBuilder& b) {
    const std::vector<std::pair<std::size_t, std::size_t>> low{{2, 1}, {2, 2}, {3, 1}, {3, 2}};
    for (const auto& [m, n] : low)
        b.add("grid 0.." + std::to_string(m - 1) + " n=" + std::to_string(n),
              {{"n", n}, {"m", m}, {"grid", "0.." + std::to_string(m - 1)}, {"D", m - 1}, {"kind", "weak"}},
              "min sparsity", "=", ipow(static_cast<std::int64_t>(m) - 1, n),
              "weak representations over {0..m-1}^n need (m-1)^n monomials, and that many suffice",
              [&, m = m, n = n](SearchStats& s) {
                  auto r = min_sparsity(TargetFunction::parity(span_grid(n, 0, static_cast<std::int64_t>(m) - 1)),
                                        RepKind::WeakSign, b.config(static_cast<unsigned>(m - 1)));
                  s += r.stats;
                  return sparsity_of(r);
              });
    const std::vector<std::pair<std::size_t, std::size_t>> shifted{{2, 1}, {2, 2}};
    for (const auto& [m, n] : shifted)
        b.add("grid 1.." + std::to_string(m) + " n=" + std::to_string(n),
              {{"n", n}, {"m", m}, {"grid", "1.." + std::to_string(m)}, {"D", m - 1}, {"kind", "weak"}},
              "min sparsity", "=", ipow(static_cast<std::int64_t>(m), n),
              "weak representations over {1..m}^n need m^n monomials", [&, m = m, n = n](SearchStats& s) {
                  auto r = min_sparsity(TargetFunction::parity(span_grid(n, 1, static_cast<std::int64_t>(m))),
                                        RepKind::WeakSign, b.config(static_cast<unsigned>(m - 1)));
                  s += r.stats;
                  return sparsity_of(r);
              });
}

struct UnivariateWitnesses {
    std::vector<SparsePoly> witnesses;
    std::size_t lps = 0;
};

// Weak witnesses for univariate parity on {0..m-1}, one per feasible support of x^0..x^(m-1).
UnivariateWitnesses univariate_weak_witnesses(std::size_t m) {
    UnivariateWitnesses out;
    const auto target = TargetFunction::parity(Grid::range(1, 0, static_cast<std::int64_t>(m) - 1));
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        FeasibilityProblem problem{{}, target, RepKind::WeakSign, std::nullopt};
        for (std::size_t d = 0; d < m; ++d)
            if ((mask >> d) & 1U) problem.support.push_back(ExponentVector{static_cast<unsigned>(d)});
        const auto cert = feasible_weak_rep(problem);
        out.lps += cert.lps_solved;
        if (cert.status == Status::Feasible) out.witnesses.push_back(*cert.coefficients);
    }
    return out;
}

void preset_weak_roots(ReportBuilder& b) {
    for (std::size_t m = 2; m <= 5; ++m) {
        const json params{{"m", m}, {"grid", "0.." + std::to_string(m - 1)}, {"kind", "weak"}};
        const auto expected = static_cast<std::int64_t>(m) - 2;
        auto run = [m](SearchStats& s, bool descartes) -> json {
            auto found = univariate_weak_witnesses(m);
            s.lps_solved += found.lps;
            if (found.witnesses.empty()) return "no weak witness found";
            std::vector<std::int64_t> points(m);
            std::iota(points.begin(), points.end(), 0);
            std::size_t least = SIZE_MAX;
            for (const auto& w : found.witnesses) {
                const auto roots = grid_root_lower_bound(w, points);
                const auto bound = descartes_bound(w);
                if (bound < roots) return "Descartes bound below the root count for " + std::to_string(m);
                least = std::min(least, descartes ? bound : roots);
            }
            return least;
        };
        b.add("roots m=" + std::to_string(m), params, "fewest roots in (0, m-1] over all witnesses", ">=", expected,
              "a univariate weak representation has m-2 roots in the interval",
              [run](SearchStats& s) { return run(s, false); });
        b.add("descartes m=" + std::to_string(m), params, "smallest Descartes bound over all witnesses", ">=",
              expected, "sign changes in the coefficients bound the positive roots",
              [run](SearchStats& s) { return run(s, true); });
    }
}

std::vector<long> sorted_sample(std::mt19937_64& rng, long lo, long hi, std::size_t count) {
    std::vector<long> all(static_cast<std::size_t>(hi - lo + 1));
    std::iota(all.begin(), all.end(), lo);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(count);
    std::sort(all.begin(), all.end());
    return all;
}

void preset_vandermonde(ReportBuilder& b) {
    const auto seed = b.options().seed;
    const auto count = b.options().instances;
    b.add("positive points", {{"instances", count}, {"seed", seed}, {"k", "1..6"}, {"exponents", "0..30"}},
          "instances with det > 0 and checkerboard inverse", "=", count,
          "a generalized Vandermonde matrix with positive points has positive determinant", [&](SearchStats&) {
              std::mt19937_64 rng(seed);
              std::uniform_int_distribution<std::size_t> size(1, 6);
              std::size_t good = 0;
              for (std::size_t t = 0; t < count; ++t) {
                  const auto k = size(rng);
                  const auto pts = sorted_sample(rng, 1, 30, k);
                  const auto exps = sorted_sample(rng, 0, 30, k);
                  std::vector<Rational> points(pts.begin(), pts.end());
                  std::vector<unsigned> exponents(exps.begin(), exps.end());
                  const auto v = gvd_build(points, exponents);
                  if (det_exact(v).sign() > 0 && is_checkerboard(inverse_sign_pattern(v))) ++good;
              }
              return json(good);
          });
    b.add("zero anchored", {{"instances", count}, {"seed", seed}, {"k", "1..6"}, {"exponents", "0..30"}},
          "instances with anchored checkerboard inverse", "=", count,
          "with first point 0 and first exponent 0 the inverse has row (+,0,...,0) then alternating signs",
          [&](SearchStats&) {
              std::mt19937_64 rng(seed + 1);
              std::uniform_int_distribution<std::size_t> size(1, 6);
              std::size_t good = 0;
              for (std::size_t t = 0; t < count; ++t) {
                  const auto k = size(rng);
                  auto pts = sorted_sample(rng, 1, 30, k - 1);
                  auto exps = sorted_sample(rng, 1, 30, k - 1);
                  pts.insert(pts.begin(), 0);
                  exps.insert(exps.begin(), 0);
                  std::vector<Rational> points(pts.begin(), pts.end());
                  std::vector<unsigned> exponents(exps.begin(), exps.end());
                  if (is_anchored_checkerboard(inverse_sign_pattern(gvd_build(points, exponents)))) ++good;
              }
              return json(good);
          });
}

void preset_size_parity(ReportBuilder& b) {
    const std::vector<std::int64_t> minima{2, 3, 5};
    for (std::size_t n = 1; n <= 3; ++n) {
        // both rows read one search result
        auto cached = std::make_shared<std::optional<json>>();
        auto search = [&, n, cached](SearchStats& s) -> json {
            if (!*cached) {
                auto r = min_spr_B(TargetFunction::parity(span_grid(n, 0, 1)), b.config(1));
                s += r.stats;
                *cached = r.k ? json(*r.k) : json("none");
            }
            return **cached;
        };
        b.add("n=" + std::to_string(n), {{"n", n}}, "min gate count", "=", minima[n - 1],
              "exhaustive search over subsets of the 3^n gate basis", search);
        b.add("bound n=" + std::to_string(n), {{"n", n}}, "min gate count", ">",
              Rational(ipow(3, n), ipow(2, n)).str(), "parity circuits need more than (3/2)^n gates", search);
    }
    b.add("five-gate block n=3", {{"n", 3}}, "gates", "=", 5, "three-bit parity has a 5-gate circuit",
          [&](SearchStats&) {
              return checked_gates(construct_parity_5_circuit(3), TargetFunction::parity(span_grid(3, 0, 1)),
                                   b.options().grid_cap);
          });
    b.add("five-gate product n=6", {{"n", 6}}, "gates", "=", 25, "products of blocks give 5^(n/3) gates",
          [&](SearchStats&) {
              return checked_gates(construct_parity_5_circuit(6), TargetFunction::parity(span_grid(6, 0, 1)),
                                   b.options().grid_cap);
          });
}

void preset_size_ip(ReportBuilder& b) {
    for (std::size_t pairs = 1; pairs <= 2; ++pairs)
        b.add("pairs=" + std::to_string(pairs), {{"pairs", pairs}}, "min gate count", "=", ipow(2, pairs),
              "inner product circuits need 2^n gates", [&, pairs](SearchStats& s) -> json {
                  auto r = min_spr_B(TargetFunction::inner_product(pairs), b.config(1));
                  s += r.stats;
                  return r.k ? json(*r.k) : json("none");
              });
    for (std::size_t pairs : {2, 4})
        b.add("construction pairs=" + std::to_string(pairs), {{"pairs", pairs}}, "gates", "=", ipow(2, pairs),
              "the product construction uses 2^n gates", [&, pairs](SearchStats&) {
                  return checked_gates(construct_ip_circuit(pairs), TargetFunction::inner_product(pairs),
                                       b.options().grid_cap);
              });
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void preset_constructors(ReportBuilder& b) {
    const auto cap = b.options().grid_cap;
    for (std::size_t n = 1; n <= 4; ++n)
        b.add("hypercube n=" + std::to_string(n), {{"family", "hypercube"}, {"n", n}, {"grid", "0..1"}}, "sparsity", "=",
              ipow(2, n), "the hypercube product has sparsity 2^n", [=](SearchStats&) {
                  return checked_sparsity(construct_hypercube_parity(n), TargetFunction::parity(span_grid(n, 0, 1)),
                                          RepKind::Sign, cap);
              });
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = 2; m <= 4; ++m) {
            const auto hi = static_cast<std::int64_t>(m) - 1;
            b.add("mary n=" + std::to_string(n) + " m=" + std::to_string(m),
                  {{"family", "mary"}, {"n", n}, {"m", m}, {"grid", "0.." + std::to_string(hi)}}, "sparsity", "=",
                  ipow(static_cast<std::int64_t>(m), n), "the m-ary product has sparsity m^n", [=](SearchStats&) {
                      return checked_sparsity(construct_mary_parity(n, m), TargetFunction::parity(span_grid(n, 0, hi)),
                                              RepKind::Sign, cap);
                  });
        }
    for (std::size_t n = 1; n <= 4; ++n)
        b.add("geometric n=" + std::to_string(n), {{"family", "geometric"}, {"n", n}, {"grid", "1..2"}}, "sparsity", "=",
              n + 1, "the geometric construction has sparsity n+1", [=](SearchStats&) {
                  return checked_sparsity(construct_geometric_parity(n), TargetFunction::parity(span_grid(n, 1, 2)),
                                          RepKind::Sign, cap);
              });
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = 2; m <= 4; ++m) {
            const auto hi = static_cast<std::int64_t>(m) - 1;
            b.add("weak-sparse n=" + std::to_string(n) + " m=" + std::to_string(m),
                  {{"family", "weak-sparse"}, {"n", n}, {"m", m}, {"grid", "0.." + std::to_string(hi)}}, "sparsity",
                  "=", ipow(hi, n), "the low-sparsity weak construction has sparsity (m-1)^n", [=](SearchStats&) {
                      return checked_sparsity(construct_weak_low_sparsity(n, m),
                                              TargetFunction::parity(span_grid(n, 0, hi)), RepKind::WeakSign, cap);
                  });
        }
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = 2; m <= 4; ++m)
            for (std::int64_t lo : {1, 0}) {
                const auto hi = lo + static_cast<std::int64_t>(m) - 1;
                const auto grid = span_grid(n, lo, hi);
                const auto values = static_cast<std::int64_t>(product_values(grid).size());
                const auto bound = binomial(static_cast<std::int64_t>(n + m) - 1, static_cast<std::int64_t>(n));
                const json params{{"family", "weak-product"}, {"n", n}, {"m", m}, {"grid", grid.points()}};
                const std::string tag = " n=" + std::to_string(n) + " grid " + std::to_string(lo) + ".." +
                                        std::to_string(hi);
                // a zero grid point makes 0 a product value, and the factor for it has no constant term
                b.add("weak-product" + tag, params, "sparsity", "=", lo == 0 ? values - 1 : values,
                      lo == 0 ? "one less than the number of product values (the constant term vanishes)"
                              : "equals the number of distinct product values",
                      [=](SearchStats&) {
                          return checked_sparsity(construct_weak_product(grid), TargetFunction::parity(grid),
                                                  RepKind::WeakSign, cap);
                      });
                b.add("product values" + tag, params, "distinct product values", "<=", bound,
                      "at most C(n+m-1, n) product values", [=](SearchStats&) { return json(values); });
            }
}

const std::vector<std::pair<std::string, std::pair<std::string, void (*)(ReportBuilder&)>>>& registry() {
    static const std::vector<std::pair<std::string, std::pair<std::string, void (*)(ReportBuilder&)>>> r{
        {"dsp2", {"AC1", preset_dsp2}},
        {"degree", {"AC1 AC4 AC6", preset_degree}},
        {"sign2", {"AC2", preset_sign2}},
        {"dspm", {"AC3", preset_dspm}},
        {"general-lower", {"AC5", preset_general_lower}},
        {"weak", {"AC6", preset_weak}},
        {"weak-roots", {"AC7", preset_weak_roots}},
        {"vandermonde", {"AC8", preset_vandermonde}},
        {"size-parity", {"AC9", preset_size_parity}},
        {"size-ip", {"AC9", preset_size_ip}},
        {"constructors", {"AC10", preset_constructors}},
    };
    return r;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string plain(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, entry] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

RunReport run_preset(const std::string& name, const PresetOptions& options) {
    const auto& reg = registry();
    const auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.first == name; });
    if (it == reg.end()) throw std::invalid_argument("unknown preset '" + name + "'");
    RunReport report;
    report.preset = name;
    report.criterion = it->second.first;
    const auto start = std::chrono::steady_clock::now();
    ReportBuilder builder(report, options);
    it->second.second(builder);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.pass = !report.cases.empty() &&
                  std::all_of(report.cases.begin(), report.cases.end(), [](const PresetCase& c) { return c.pass; });
    return report;
}

OutputFormat parse_output_format(const std::string& text) {
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "table") return OutputFormat::Table;
    throw std::invalid_argument("unknown format '" + text + "' (expected json, csv or table)");
}

json to_json(const RunReport& r, bool timing) {
    json cases = json::array();
    for (const auto& c : r.cases) {
        json j;
        j["case"] = c.label;
        j["parameters"] = c.parameters;
        j["quantity"] = c.quantity;
        j["computed"] = c.computed;
        j["relation"] = c.relation;
        j["expected"] = c.expected;
        j["pass"] = c.pass;
        j["claim"] = c.claim;
        if (!c.error.empty()) j["error"] = c.error;
        cases.push_back(j);
    }
    json j;
    j["preset"] = r.preset;
    j["criterion"] = r.criterion;
    j["cases"] = cases;
    j["pass"] = r.pass;
    j["stats"] = to_json(r.stats);
    if (timing) j["wall_time"] = r.wall_seconds;
    return j;
}

void emit(const RunReport& r, OutputFormat format, std::ostream& os, bool timing) {
    emit(std::vector<RunReport>{r}, format, os, timing);
}

void emit(const std::vector<RunReport>& reports, OutputFormat format, std::ostream& os, bool timing) {
    switch (format) {
        case OutputFormat::Json: {
            if (reports.size() == 1) {
                os << to_json(reports.front(), timing).dump(2) << "\n";
            } else {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(to_json(r, timing));
                os << arr.dump(2) << "\n";
            }
            return;
        }
        case OutputFormat::Csv: {
            os << "preset,case,quantity,parameters,computed,relation,expected,pass\n";
            for (const auto& r : reports)
                for (const auto& c : r.cases)
                    os << csv_field(r.preset) << ',' << csv_field(c.label) << ',' << csv_field(c.quantity) << ','
                       << csv_field(c.parameters.dump()) << ','
                       << csv_field(c.error.empty() ? plain(c.computed) : "error: " + c.error) << ','
                       << csv_field(c.relation) << ',' << csv_field(plain(c.expected)) << ','
                       << (c.pass ? "pass" : "FAIL") << '\n';
            return;
        }
        case OutputFormat::Table: {
            for (const auto& r : reports) {
                std::vector<std::array<std::string, 5>> rows{{"case", "quantity", "computed", "expected", "result"}};
                for (const auto& c : r.cases)
                    rows.push_back({c.label, c.quantity, c.error.empty() ? plain(c.computed) : "error: " + c.error,
                                    c.relation + " " + plain(c.expected), c.pass ? "pass" : "FAIL"});
                std::array<std::size_t, 5> width{};
                for (const auto& row : rows)
                    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
                os << r.preset << " (" << r.criterion << "): " << (r.pass ? "pass" : "FAIL");
                if (timing) os << " in " << std::fixed << std::setprecision(3) << r.wall_seconds << "s";
                os << "\n";
                for (const auto& row : rows) {
                    for (std::size_t i = 0; i < row.size(); ++i) {
                        os << "  " << row[i];
                        if (i + 1 < row.size()) os << std::string(width[i] - row[i].size(), ' ');
                    }
                    os << "\n";
                }
            }
            return;
        }
    }
}

}  // namespace signrep
