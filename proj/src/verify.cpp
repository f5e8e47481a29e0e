#include "signrep/verify.hpp"

#include "signrep/errors.hpp"

#include <stdexcept>

namespace signrep {

std::string to_string(RepKind kind) {
    switch (kind) {
        case RepKind::Exact: return "exact";
        case RepKind::Sign: return "sign";
        case RepKind::WeakSign: return "weak";
    }
    return "?";
}

RepKind parse_rep_kind(const std::string& text) {
    if (text == "exact") return RepKind::Exact;
    if (text == "sign") return RepKind::Sign;
    if (text == "weak") return RepKind::WeakSign;
    throw std::invalid_argument("unknown representation kind '" + text + "'");
}

VerificationReport verify(const SparsePoly& p, const TargetFunction& f, RepKind kind, std::size_t grid_cap) {
    const auto& grid = f.grid();
    if (p.dimension() != grid.dimension())
        throw std::invalid_argument("polynomial has dimension " + std::to_string(p.dimension()) +
                                    " but the grid has dimension " + std::to_string(grid.dimension()));
    if (grid.size() > grid_cap)
        throw CapExceeded("grid " + grid.str() + " exceeds the verification cap of " + std::to_string(grid_cap) +
                          " points");

    VerificationReport report;
    report.kind = kind;
    // a strictly wrong sign is reported in preference to a zero
    std::optional<Counterexample> first_wrong;
    std::optional<Counterexample> first_zero;
    grid.for_each_point([&](const Point& a) {
        ++report.points_checked;
        const Rational v = evaluate(p, a);
        const int want = f(a);
        const int s = v.sign();
        if (s == 0) {
            ++report.zero_count;
            if (!first_zero) first_zero = Counterexample{a, v, want};
        }
        if (first_wrong) return;
        const bool wrong = kind == RepKind::Exact ? v != Rational(want) : s == (want ? 1 : -1);
        if (wrong) first_wrong = Counterexample{a, v, want};
    });
    if (first_wrong)
        report.counterexample = first_wrong;
    else if (kind == RepKind::Sign && report.zero_count > 0)
        report.counterexample = first_zero;
    else if (kind == RepKind::WeakSign && report.zero_count == report.points_checked)
        report.counterexample = first_zero;
    report.pass = !report.counterexample.has_value();
    return report;
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j = {{"kind", to_string(r.kind)},
                        {"pass", r.pass},
                        {"points_checked", r.points_checked},
                        {"zero_count", r.zero_count}};
    if (r.counterexample)
        j["counterexample"] = {{"point", r.counterexample->point},
                               {"value", r.counterexample->value.str()},
                               {"target", r.counterexample->target}};
    else
        j["counterexample"] = nullptr;
    return j;
}

}  // namespace signrep
