#include "signrep/circuits.hpp"
#include "signrep/constructions.hpp"
#include "signrep/descartes.hpp"
#include "signrep/poly_io.hpp"
#include "signrep/presets.hpp"
#include "signrep/vandermonde.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace signrep;

namespace {

struct Common {
    std::string format = "json";
    unsigned parallel = 1;
    bool timing = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inline text, or a file holding text or the structured JSON form.
SparsePoly load_poly(const std::string& arg, std::size_t min_dimension) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(arg, ec)) return parse_poly(arg, min_dimension);
    const auto text = read_file(arg);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '['))
        return poly_from_json(json::parse(text), min_dimension);
    return parse_poly(text, min_dimension);
}

TargetFunction make_target(const std::string& name, const std::string& grid, std::size_t n) {
    if (name.rfind("table:", 0) == 0) return TargetFunction::from_json(json::parse(read_file(name.substr(6))));
    return parse_target(name, grid, n);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else {
        out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

void print(const json& j, const Common& common) {
    const auto format = parse_output_format(common.format);
    if (format == OutputFormat::Json) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    if (format == OutputFormat::Csv) {
        std::cout << "field,value\n";
        for (const auto& [k, v] : rows) {
            std::string quoted = v;
            if (v.find_first_of(",\"\n") != std::string::npos) {
                quoted = "\"";
                for (char c : v) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
                quoted += "\"";
            }
            std::cout << k << ',' << quoted << "\n";
        }
        return;
    }
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows) std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

class Stopwatch {
public:
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& s : split_list(text)) out.push_back(Rational::parse(s));
    return out;
}

json matrix_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

json poly_summary(const SparsePoly& p) {
    const auto m = measures(p);
    return {{"polynomial", to_text(p)}, {"sparsity", m.sparsity}, {"degree", m.degree}, {"var_degree", m.var_degree}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact sign representations of parity and inner product over integer grids"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--format", common.format, "Output format: json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--parallel", common.parallel, "Worker threads for subset searches")->check(CLI::PositiveNumber);
    app.add_flag("--timing", common.timing, "Add wall-clock time to the output (breaks byte-identical output)");

    int exit_code = 0;

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a polynomial against a target on a grid");
    std::string poly_arg, target_arg = "parity", grid_arg = "0..1", kind_arg = "sign";
    std::size_t n_arg = 0;
    verify_cmd->add_option("--poly", poly_arg, "Polynomial text or a file (text or JSON)")->required();
    verify_cmd->add_option("--target", target_arg, "parity, ip or table:<file>");
    verify_cmd->add_option("--grid", grid_arg, "Point set: a..b or a comma list");
    verify_cmd->add_option("--n", n_arg, "Dimension (default: the polynomial's)");
    verify_cmd->add_option("--kind", kind_arg, "exact, sign or weak")->check(CLI::IsMember({"exact", "sign", "weak"}));
    verify_cmd->callback([&] {
        const auto p = load_poly(poly_arg, n_arg);
        const auto n = n_arg == 0 ? p.dimension() : n_arg;
        const auto f = make_target(target_arg, grid_arg, n);
        const auto report = verify(p, f, parse_rep_kind(kind_arg));
        auto j = to_json(report);
        j["target"] = f.name();
        j["grid"] = f.grid().str();
        print(j, common);
        exit_code = report.pass ? 0 : 1;
    });

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "Build one of the explicit constructions");
    std::string family, alphas_arg, construct_grid;
    std::size_t cn = 1, cm = 2;
    construct_cmd->add_option("--family", family, "hypercube, mary, geometric, weak-sparse or weak-product")
        ->required()
        ->check(CLI::IsMember({"hypercube", "mary", "geometric", "weak-sparse", "weak-product"}));
    construct_cmd->add_option("--n", cn, "Dimension")->check(CLI::PositiveNumber);
    construct_cmd->add_option("--m", cm, "Points per coordinate (mary, weak-sparse; weak-product uses 0..m-1)");
    construct_cmd->add_option("--alphas", alphas_arg, "Comma list of roots (mary, geometric)");
    construct_cmd->add_option("--grid", construct_grid, "Point set for weak-product");
    construct_cmd->callback([&] {
        std::optional<std::vector<Rational>> alphas;
        if (!alphas_arg.empty()) alphas = parse_rationals(alphas_arg);
        SparsePoly p;
        std::string grid_text;
        if (family == "hypercube") {
            p = construct_hypercube_parity(cn);
            grid_text = "0..1";
        } else if (family == "mary") {
            p = construct_mary_parity(cn, cm, alphas);
            grid_text = "0.." + std::to_string(cm - 1);
        } else if (family == "geometric") {
            p = construct_geometric_parity(cn, alphas);
            grid_text = "1..2";
        } else if (family == "weak-sparse") {
            p = construct_weak_low_sparsity(cn, cm);
            grid_text = "0.." + std::to_string(cm - 1);
        } else {
            grid_text = construct_grid.empty() ? "0.." + std::to_string(cm - 1) : construct_grid;
            p = construct_weak_product(Grid::parse(cn, grid_text));
        }
        const auto grid = Grid::parse(cn, grid_text);
        if (parse_output_format(common.format) == OutputFormat::Table) {
            std::cout << to_text(p) << "\n";
            return;
        }
        auto j = poly_summary(p);
        j["family"] = family;
        j["grid"] = grid.str();
        j["terms"] = to_json(p)["terms"];
        print(j, common);
    });

    // minsparsity / mindegree
    struct SearchArgs {
        std::string target = "parity", grid = "0..1", kind = "sign";
        std::size_t n = 1, max_support = 0;
        unsigned degcap = 1;
        bool symmetry = false;
        std::uint64_t subset_cap = std::uint64_t{1} << 20;
    };
    SearchArgs sa;
    auto add_search_options = [&](CLI::App* cmd) {
        cmd->add_option("--target", sa.target, "parity, ip or table:<file>");
        cmd->add_option("--grid", sa.grid, "Point set: a..b or a comma list");
        cmd->add_option("--n", sa.n, "Dimension")->check(CLI::PositiveNumber);
        cmd->add_option("--degcap", sa.degcap, "Per-variable degree cap D of the monomial pool");
        cmd->add_option("--kind", sa.kind, "sign or weak")->check(CLI::IsMember({"sign", "weak"}));
        cmd->add_flag("--symmetry", sa.symmetry, "Skip supports that are not minimal in their symmetry orbit");
        cmd->add_option("--subset-cap", sa.subset_cap, "Refuse after enumerating this many supports");
    };
    auto search_config = [&] {
        SearchConfig c;
        c.degree_cap = sa.degcap;
        c.max_support = sa.max_support;
        c.symmetry = sa.symmetry;
        c.subset_cap = sa.subset_cap;
        c.workers = common.parallel;
        return c;
    };

    auto* minsparsity_cmd = app.add_subcommand("minsparsity", "Smallest support admitting a representation");
    add_search_options(minsparsity_cmd);
    minsparsity_cmd->add_option("--max-support", sa.max_support, "Largest support size tried (0: whole pool)");
    minsparsity_cmd->callback([&] {
        Stopwatch clock;
        const auto f = make_target(sa.target, sa.grid, sa.n);
        const auto r = min_sparsity(f, parse_rep_kind(sa.kind), search_config());
        auto j = to_json(r);
        j["target"] = f.name();
        j["grid"] = f.grid().str();
        j["kind"] = sa.kind;
        if (common.timing) j["wall_time"] = clock.seconds();
        print(j, common);
    });

    auto* mindegree_cmd = app.add_subcommand("mindegree", "Smallest total degree admitting a representation");
    add_search_options(mindegree_cmd);
    mindegree_cmd->callback([&] {
        Stopwatch clock;
        const auto f = make_target(sa.target, sa.grid, sa.n);
        const auto r = min_degree(f, parse_rep_kind(sa.kind), search_config());
        auto j = to_json(r);
        j["target"] = f.name();
        j["grid"] = f.grid().str();
        j["kind"] = sa.kind;
        if (common.timing) j["wall_time"] = clock.seconds();
        print(j, common);
    });

    // census
    auto* census_cmd = app.add_subcommand("census", "Forced coefficient signs of hypercube parity representations");
    std::size_t census_n = 2;
    census_cmd->add_option("--n", census_n, "Dimension")->check(CLI::PositiveNumber);
    census_cmd->callback([&] {
        const auto census = coefficient_sign_census(census_n);
        bool all_forced = true;
        for (const auto& e : census) all_forced = all_forced && e.verdict == e.expected_sign && e.ray_verified;
        json j{{"n", census_n}, {"monomials", to_json(census)}, {"all_forced", all_forced}};
        exit_code = all_forced ? 0 : 1;
        if (parse_output_format(common.format) == OutputFormat::Table) {
            for (const auto& e : census) {
                std::string s;
                for (std::size_t i = 0; i < e.monomial.size(); ++i)
                    if (e.monomial[i]) s += (s.empty() ? "x" : "*x") + std::to_string(i + 1);
                std::cout << (s.empty() ? "1" : s) << "  expected " << (e.expected_sign > 0 ? "+" : "-") << "  "
                          << (e.verdict == 0 ? "unconstrained" : e.verdict > 0 ? "forced +" : "forced -")
                          << (e.ray_verified ? "  ray verified" : "") << "\n";
            }
            return;
        }
        print(j, common);
    });

    // circuit
    auto* circuit_cmd = app.add_subcommand("circuit", "Threshold-of-AND circuits");
    std::string op, circuit_file, circuit_target = "parity";
    std::size_t circuit_n = 1;
    bool circuit_symmetry = false;
    circuit_cmd->add_option("--op", op, "minsize, build-parity, build-ip or verify")
        ->required()
        ->check(CLI::IsMember({"minsize", "build-parity", "build-ip", "verify"}));
    circuit_cmd->add_option("--n", circuit_n, "Variables (parity) or pairs (ip)")->check(CLI::PositiveNumber);
    circuit_cmd->add_option("--target", circuit_target, "parity or ip")->check(CLI::IsMember({"parity", "ip"}));
    circuit_cmd->add_option("--circuit", circuit_file, "Circuit JSON file (verify)");
    circuit_cmd->add_flag("--symmetry", circuit_symmetry, "Skip gate sets that are not minimal in their orbit");
    circuit_cmd->callback([&] {
        auto target_for = [&](std::size_t n_vars) {
            return circuit_target == "ip" ? TargetFunction::inner_product(n_vars / 2)
                                          : TargetFunction::parity(Grid(n_vars, {0, 1}));
        };
        if (op == "minsize") {
            Stopwatch clock;
            const auto f = circuit_target == "ip" ? TargetFunction::inner_product(circuit_n)
                                                  : TargetFunction::parity(Grid(circuit_n, {0, 1}));
            SearchConfig c;
            c.symmetry = circuit_symmetry;
            c.workers = common.parallel;
            auto j = to_json(min_spr_B(f, c));
            j["target"] = f.name();
            if (common.timing) j["wall_time"] = clock.seconds();
            print(j, common);
            return;
        }
        ThrAndCircuit c;
        if (op == "build-parity") {
            c = construct_parity_5_circuit(circuit_n);
            circuit_target = "parity";
        } else if (op == "build-ip") {
            c = construct_ip_circuit(circuit_n);
            circuit_target = "ip";
        } else {
            if (circuit_file.empty()) throw std::invalid_argument("verify needs --circuit <file>");
            c = circuit_from_json(json::parse(read_file(circuit_file)));
        }
        const auto f = target_for(c.n);
        const auto report = circuit_verify(c, f);
        auto j = to_json(c);
        j["target"] = f.name();
        j["verification"] = to_json(report);
        print(j, common);
        exit_code = report.pass ? 0 : 1;
    });

    // vandermonde
    auto* vandermonde_cmd = app.add_subcommand("vandermonde", "Generalized Vandermonde determinant and inverse signs");
    std::string points_arg, exponents_arg;
    vandermonde_cmd->add_option("--points", points_arg, "Strictly increasing comma list")->required();
    vandermonde_cmd->add_option("--exponents", exponents_arg, "Strictly increasing comma list")->required();
    vandermonde_cmd->callback([&] {
        std::vector<unsigned> exponents;
        for (const auto& s : split_list(exponents_arg)) exponents.push_back(static_cast<unsigned>(std::stoul(s)));
        const auto v = gvd_build(parse_rationals(points_arg), exponents);
        const auto det = det_exact(v);
        json j;
        j["matrix"] = matrix_json(v.entries);
        j["determinant"] = det.str();
        if (det.is_zero()) {
            j["inverse"] = nullptr;
            j["sign_pattern"] = nullptr;
        } else {
            j["inverse"] = matrix_json(*inverse_exact(v.entries));
            const auto signs = inverse_sign_pattern(v);
            json rows = json::array();
            for (std::size_t r = 0; r < signs.rows(); ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < signs.cols(); ++c) row.push_back(signs(r, c));
                rows.push_back(row);
            }
            j["sign_pattern"] = rows;
            j["checkerboard"] = is_checkerboard(signs);
            j["anchored_checkerboard"] = is_anchored_checkerboard(signs);
        }
        print(j, common);
    });

    // descartes
    auto* descartes_cmd = app.add_subcommand("descartes", "Sign variations and the positive-root bound");
    std::string dpoly, dpoints;
    descartes_cmd->add_option("--poly", dpoly, "Univariate polynomial text")->required();
    descartes_cmd->add_option("--points", dpoints, "Ascending integer points for sign alternations");
    descartes_cmd->callback([&] {
        const auto p = parse_poly(dpoly, 1);
        if (p.dimension() != 1) throw std::invalid_argument("descartes needs a univariate polynomial in x1");
        const auto seq = coefficient_sequence(p);
        json coeffs = json::array();
        for (const auto& c : seq) coeffs.push_back(c.str());
        json j{{"polynomial", to_text(p)},
               {"coefficients", coeffs},
               {"sign_variations", sign_variations(seq)},
               {"descartes_bound", descartes_bound(p)},
               {"sparsity", p.sparsity()}};
        if (!dpoints.empty()) {
            std::vector<std::int64_t> pts;
            for (const auto& s : split_list(dpoints)) pts.push_back(std::stoll(s));
            j["root_lower_bound"] = grid_root_lower_bound(p, pts);
            bool vanishes = false;
            for (auto a : pts) vanishes = vanishes || evaluate(p, std::vector<std::int64_t>{a}).is_zero();
            j["grid_sign_alternations"] = vanishes ? json(nullptr) : json(grid_sign_alternations(p, pts));
        }
        print(j, common);
    });

    // preset
    auto* preset_cmd = app.add_subcommand("preset", "Run a named experiment and compare with the expected values");
    std::string preset_name;
    PresetOptions preset_options;
    preset_cmd->add_option("name", preset_name, "Preset name or 'all'")->required();
    preset_cmd->add_option("--seed", preset_options.seed, "Seed for randomized suites");
    preset_cmd->add_option("--instances", preset_options.instances, "Instances for randomized suites");
    preset_cmd->add_flag("--symmetry", preset_options.symmetry, "Symmetry pruning in searches");
    preset_cmd->add_option("--subset-cap", preset_options.subset_cap, "Refuse after enumerating this many supports");
    preset_cmd->callback([&] {
        preset_options.workers = common.parallel;
        std::vector<RunReport> reports;
        if (preset_name == "all") {
            for (const auto& name : preset_names()) reports.push_back(run_preset(name, preset_options));
        } else {
            reports.push_back(run_preset(preset_name, preset_options));
        }
        emit(reports, parse_output_format(common.format), std::cout, common.timing);
        for (const auto& r : reports)
            if (!r.pass) exit_code = 1;
    });

    auto* list_cmd = app.add_subcommand("presets", "List preset names");
    list_cmd->callback([&] {
        for (const auto& name : preset_names()) std::cout << name << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
