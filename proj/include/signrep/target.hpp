#ifndef SIGNREP_TARGET_HPP
#define SIGNREP_TARGET_HPP

#include "signrep/grid.hpp"

#include <json.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace signrep {

enum class TargetKind { Parity, InnerProduct, TruthTable };

/// A Boolean function f : A^n -> {0,1}.
///
/// InnerProduct uses the variable layout (X1..Xk, Y1..Yk) on {0,1}^(2k) and computes
/// sum_i Xi*Yi mod 2. A complemented target returns 1 - f.
class TargetFunction {
public:
    static TargetFunction parity(Grid grid);
    /// Inner product over `pairs` (X, Y) pairs; the grid is {0,1}^(2*pairs).
    static TargetFunction inner_product(std::size_t pairs);
    /// `values` in Grid::for_each_point order, each 0 or 1.
    static TargetFunction truth_table(Grid grid, std::vector<std::uint8_t> values);
    /// {"n": .., "grid": "a..b" | [..], "values": [..]} or with "entries": [{"point": [..], "value": v}].
    static TargetFunction from_json(const nlohmann::json& j);

    [[nodiscard]] TargetKind kind() const { return kind_; }
    [[nodiscard]] const Grid& grid() const { return grid_; }
    [[nodiscard]] bool complemented() const { return complemented_; }
    [[nodiscard]] std::size_t pairs() const { return grid_.dimension() / 2; }

    /// f(point); throws std::out_of_range when the point is not on the grid.
    [[nodiscard]] int operator()(std::span<const std::int64_t> point) const;

    [[nodiscard]] TargetFunction complement() const;

    /// Coordinate permutations under which f is invariant (identity included).
    /// Empty for truth tables, where no symmetry is assumed.
    [[nodiscard]] std::vector<std::vector<std::size_t>> symmetries() const;

    [[nodiscard]] std::string name() const;

private:
    TargetFunction(TargetKind kind, Grid grid) : kind_(kind), grid_(std::move(grid)) {}
    [[nodiscard]] std::size_t index_of(std::span<const std::int64_t> point) const;

    TargetKind kind_;
    Grid grid_;
    std::vector<std::uint8_t> table_;
    bool complemented_ = false;
};

/// "parity" over Grid::parse(n, grid), or "ip" over {0,1}^n with n even.
TargetFunction parse_target(const std::string& name, const std::string& grid, std::size_t n);

}  // namespace signrep

#endif  // SIGNREP_TARGET_HPP
