#ifndef SIGNREP_FEASIBILITY_HPP
#define SIGNREP_FEASIBILITY_HPP

#include "signrep/lp.hpp"
#include "signrep/polynomial.hpp"
#include "signrep/target.hpp"
#include "signrep/verify.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace signrep {

/// Which coefficient vectors over a fixed support represent the target?
struct FeasibilityProblem {
    std::vector<ExponentVector> support;  ///< distinct exponent vectors
    TargetFunction target;
    RepKind kind = RepKind::Sign;        ///< Sign or WeakSign
    std::optional<Point> witness_point;  ///< WeakSign only: the point required to be nonzero
};

enum class Status { Feasible, Infeasible };

struct Certificate {
    Status status = Status::Infeasible;
    /// Feasible: the representing polynomial (coefficients over the support).
    std::optional<SparsePoly> coefficients;
    /// Infeasible: non-negative multipliers over the grid points (for_each_point order)
    /// whose combination of signed rows is zero. For WeakSign the ray is strictly positive
    /// (or positive at the supplied witness point).
    std::optional<std::vector<Rational>> dual_ray;
    std::size_t lps_solved = 0;
    std::size_t pivots = 0;
};

/// Signed evaluation matrix of a support: row a, column j holds (-1)^f(a) * a^support[j].
RationalMatrix signed_rows(const std::vector<ExponentVector>& support, const TargetFunction& target,
                           std::size_t grid_cap = kDefaultGridCap);

/// Outcome of a sign or weak decision on a signed matrix, with weights over its columns.
struct SystemDecision {
    bool feasible = false;
    std::vector<Rational> weights;
    std::vector<Rational> ray;
    std::size_t lps_solved = 0;
    std::size_t pivots = 0;
};

/// Exists c with G c >= 1? (Equivalent to G c > 0 by scaling.)
SystemDecision decide_sign(const RationalMatrix& g);

/// Exists c with G c >= 0 and (G c)_w >= 1 for some witness row w (or the given one)?
/// `known_ray`, when given, is an already established y >= 0 with G^T y = 0; witnesses
/// where it is positive are skipped.
SystemDecision decide_weak(const RationalMatrix& g, std::optional<std::size_t> witness_row = std::nullopt,
                           const std::vector<Rational>* known_ray = nullptr);

Certificate feasible_sign_rep(const FeasibilityProblem& problem, std::size_t grid_cap = kDefaultGridCap);
Certificate feasible_weak_rep(const FeasibilityProblem& problem, std::size_t grid_cap = kDefaultGridCap);
/// Dispatches on problem.kind.
Certificate decide(const FeasibilityProblem& problem, std::size_t grid_cap = kDefaultGridCap);

/// Independent audit: Feasible certificates are re-verified by exhaustive evaluation,
/// Infeasible ones by recomputing the ray combination exactly.
bool check_certificate(const FeasibilityProblem& problem, const Certificate& cert,
                       std::size_t grid_cap = kDefaultGridCap);

nlohmann::json to_json(const Certificate& cert);

}  // namespace signrep

#endif  // SIGNREP_FEASIBILITY_HPP
