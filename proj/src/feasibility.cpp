#include "signrep/feasibility.hpp"

#include "signrep/poly_io.hpp"

#include <set>
#include <stdexcept>

namespace signrep {

namespace {

void check_problem(const FeasibilityProblem& problem) {
    const auto n = problem.target.grid().dimension();
    std::set<std::vector<unsigned>> seen;
    for (const auto& e : problem.support) {
        if (e.size() != n) throw std::invalid_argument("support monomial dimension does not match the grid");
        if (!seen.insert(e.values()).second) throw std::invalid_argument("support entries must be distinct");
    }
    if (problem.witness_point && !problem.target.grid().contains(*problem.witness_point))
        throw std::invalid_argument("witness point is not on the grid");
}

std::size_t point_row(const Grid& grid, const Point& p) {
    std::size_t row = 0;
    std::size_t found = grid.size();
    grid.for_each_point([&](const Point& q) {
        if (q == p) found = row;
        ++row;
    });
    return found;
}

SparsePoly poly_from_weights(const std::vector<ExponentVector>& support, const std::vector<Rational>& w,
                             std::size_t n) {
    SparsePoly p(n);
    for (std::size_t j = 0; j < support.size(); ++j) p.add_term(support[j], w[j]);
    return p;
}

Certificate to_certificate(const FeasibilityProblem& problem, SystemDecision d) {
    Certificate c;
    c.lps_solved = d.lps_solved;
    c.pivots = d.pivots;
    if (d.feasible) {
        c.status = Status::Feasible;
        c.coefficients = poly_from_weights(problem.support, d.weights, problem.target.grid().dimension());
    } else {
        c.status = Status::Infeasible;
        c.dual_ray = std::move(d.ray);
    }
    return c;
}

}  // namespace

RationalMatrix signed_rows(const std::vector<ExponentVector>& support, const TargetFunction& target,
                           std::size_t grid_cap) {
    const auto points = target.grid().enumerate(grid_cap);
    RationalMatrix g(points.size(), support.size());
    for (std::size_t r = 0; r < points.size(); ++r) {
        const bool negate = target(points[r]) == 1;
        for (std::size_t j = 0; j < support.size(); ++j) {
            Rational v = evaluate(SparsePoly::monomial(support[j]), points[r]);
            g(r, j) = negate ? -v : v;
        }
    }
    return g;
}

SystemDecision decide_sign(const RationalMatrix& g) {
    const std::vector<Rational> ones(g.rows(), Rational(1));
    auto res = lp::solve(g, ones);
    SystemDecision d;
    d.lps_solved = 1;
    d.pivots = res.pivots;
    d.feasible = res.feasible;
    d.weights = std::move(res.solution);
    d.ray = std::move(res.ray);
    return d;
}

SystemDecision decide_weak(const RationalMatrix& g, std::optional<std::size_t> witness_row,
                           const std::vector<Rational>* known_ray) {
    SystemDecision d;
    const auto rows = g.rows();
    std::vector<Rational> total(rows, Rational(0));
    if (known_ray) total = *known_ray;

    std::vector<std::size_t> candidates;
    if (witness_row) {
        if (*witness_row >= rows) throw std::out_of_range("witness row out of range");
        candidates.push_back(*witness_row);
    } else {
        for (std::size_t r = 0; r < rows; ++r) candidates.push_back(r);
    }

    std::vector<Rational> rhs(rows, Rational(0));
    for (auto w : candidates) {
        if (total[w].sign() > 0) continue;  // already refuted by an earlier ray
        rhs[w] = Rational(1);
        auto res = lp::solve(g, rhs);
        rhs[w] = Rational(0);
        ++d.lps_solved;
        d.pivots += res.pivots;
        if (res.feasible) {
            d.feasible = true;
            d.weights = std::move(res.solution);
            return d;
        }
        for (std::size_t r = 0; r < rows; ++r) total[r] += res.ray[r];
    }
    d.ray = std::move(total);
    return d;
}

Certificate feasible_sign_rep(const FeasibilityProblem& problem, std::size_t grid_cap) {
    if (problem.kind != RepKind::Sign) throw std::invalid_argument("feasible_sign_rep needs kind Sign");
    check_problem(problem);
    return to_certificate(problem, decide_sign(signed_rows(problem.support, problem.target, grid_cap)));
}

Certificate feasible_weak_rep(const FeasibilityProblem& problem, std::size_t grid_cap) {
    if (problem.kind != RepKind::WeakSign) throw std::invalid_argument("feasible_weak_rep needs kind WeakSign");
    check_problem(problem);
    const auto g = signed_rows(problem.support, problem.target, grid_cap);
    std::optional<std::size_t> row;
    if (problem.witness_point) row = point_row(problem.target.grid(), *problem.witness_point);
    return to_certificate(problem, decide_weak(g, row));
}

Certificate decide(const FeasibilityProblem& problem, std::size_t grid_cap) {
    switch (problem.kind) {
        case RepKind::Sign: return feasible_sign_rep(problem, grid_cap);
        case RepKind::WeakSign: return feasible_weak_rep(problem, grid_cap);
        case RepKind::Exact: break;
    }
    throw std::invalid_argument("feasibility search supports sign and weak representations only");
}

bool check_certificate(const FeasibilityProblem& problem, const Certificate& cert, std::size_t grid_cap) {
    if (cert.status == Status::Feasible) {
        if (!cert.coefficients) return false;
        for (const auto& [e, c] : cert.coefficients->terms()) {
            bool in_support = false;
            for (const auto& s : problem.support) in_support = in_support || s == e;
            if (!in_support) return false;
        }
        const auto report = verify(*cert.coefficients, problem.target, problem.kind, grid_cap);
        if (!report.pass) return false;
        if (problem.witness_point) {
            return evaluate(*cert.coefficients, *problem.witness_point).sign() != 0;
        }
        return true;
    }

    if (!cert.dual_ray) return false;
    const auto& y = *cert.dual_ray;
    const auto points = problem.target.grid().enumerate(grid_cap);
    if (y.size() != points.size()) return false;
    for (const auto& v : y)
        if (v.sign() < 0) return false;

    // sum_a y_a (-1)^f(a) a^M must vanish for every monomial M of the support
    for (const auto& e : problem.support) {
        const auto mono = SparsePoly::monomial(e);
        Rational s(0);
        for (std::size_t r = 0; r < points.size(); ++r) {
            if (y[r].is_zero()) continue;
            const Rational v = evaluate(mono, points[r]) * y[r];
            s += problem.target(points[r]) == 1 ? -v : v;
        }
        if (!s.is_zero()) return false;
    }

    if (problem.kind == RepKind::Sign) {
        Rational total(0);
        for (const auto& v : y) total += v;
        return total.sign() > 0;
    }
    if (problem.witness_point) {
        const auto row = point_row(problem.target.grid(), *problem.witness_point);
        return y[row].sign() > 0;
    }
    for (const auto& v : y)
        if (v.sign() <= 0) return false;
    return true;
}

nlohmann::json to_json(const Certificate& cert) {
    nlohmann::json j;
    j["status"] = cert.status == Status::Feasible ? "feasible" : "infeasible";
    j["coefficients"] = cert.coefficients ? to_json(*cert.coefficients) : nlohmann::json(nullptr);
    if (cert.dual_ray) {
        nlohmann::json ray = nlohmann::json::array();
        for (const auto& v : *cert.dual_ray) ray.push_back(v.str());
        j["dual_ray"] = ray;
    } else {
        j["dual_ray"] = nullptr;
    }
    return j;
}

}  // namespace signrep
