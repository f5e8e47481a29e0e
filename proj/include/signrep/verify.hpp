#ifndef SIGNREP_VERIFY_HPP
#define SIGNREP_VERIFY_HPP

#include "signrep/polynomial.hpp"
#include "signrep/target.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace signrep {

enum class RepKind { Exact, Sign, WeakSign };

std::string to_string(RepKind kind);
/// "exact" | "sign" | "weak"
RepKind parse_rep_kind(const std::string& text);

struct Counterexample {
    Point point;
    Rational value;
    int target = 0;
};

struct VerificationReport {
    RepKind kind = RepKind::Sign;
    bool pass = false;
    std::optional<Counterexample> counterexample;  ///< set iff !pass
    std::size_t zero_count = 0;                    ///< grid points where P vanishes
    std::size_t points_checked = 0;
};

inline constexpr std::size_t kDefaultGridCap = 1'000'000;

/// Exhaustive check of P against f on every grid point.
///  - Exact: P(a) = f(a).
///  - Sign: sign P(a) = (-1)^f(a), never zero.
///  - WeakSign: sign P(a) in {0, (-1)^f(a)}, and P is not zero on the whole grid.
/// Throws CapExceeded when the grid has more than `grid_cap` points.
VerificationReport verify(const SparsePoly& p, const TargetFunction& f, RepKind kind,
                          std::size_t grid_cap = kDefaultGridCap);

nlohmann::json to_json(const VerificationReport& r);

}  // namespace signrep

#endif  // SIGNREP_VERIFY_HPP
