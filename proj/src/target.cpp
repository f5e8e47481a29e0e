#include "signrep/target.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace signrep {

TargetFunction TargetFunction::parity(Grid grid) { return {TargetKind::Parity, std::move(grid)}; }

TargetFunction TargetFunction::inner_product(std::size_t pairs) {
    if (pairs == 0) throw std::invalid_argument("inner product needs at least one pair");
    return {TargetKind::InnerProduct, Grid(2 * pairs, {0, 1})};
}

TargetFunction TargetFunction::truth_table(Grid grid, std::vector<std::uint8_t> values) {
    if (values.size() != grid.size()) throw std::invalid_argument("truth table must list every grid point exactly once");
    for (auto v : values)
        if (v > 1) throw std::invalid_argument("truth table values must be 0 or 1");
    TargetFunction f(TargetKind::TruthTable, std::move(grid));
    f.table_ = std::move(values);
    return f;
}

TargetFunction TargetFunction::from_json(const nlohmann::json& j) {
    const auto n = j.at("n").get<std::size_t>();
    const auto& g = j.at("grid");
    Grid grid = g.is_string() ? Grid::parse(n, g.get<std::string>()) : Grid(n, g.get<std::vector<std::int64_t>>());
    if (j.contains("values")) return truth_table(grid, j.at("values").get<std::vector<std::uint8_t>>());

    TargetFunction probe(TargetKind::TruthTable, grid);
    std::vector<int> values(grid.size(), -1);
    for (const auto& e : j.at("entries")) {
        const auto p = e.at("point").get<Point>();
        if (!grid.contains(p)) throw std::invalid_argument("truth table point outside the grid");
        auto& slot = values[probe.index_of(p)];
        if (slot != -1) throw std::invalid_argument("truth table lists a point twice");
        slot = e.at("value").get<int>();
    }
    std::vector<std::uint8_t> out;
    for (auto v : values) {
        if (v < 0) throw std::invalid_argument("truth table misses a grid point");
        out.push_back(static_cast<std::uint8_t>(v));
    }
    return truth_table(std::move(grid), std::move(out));
}

std::size_t TargetFunction::index_of(std::span<const std::int64_t> point) const {
    const auto& a = grid_.points();
    std::size_t idx = 0;
    for (auto v : point) {
        auto it = std::lower_bound(a.begin(), a.end(), v);
        idx = idx * a.size() + static_cast<std::size_t>(it - a.begin());
    }
    return idx;
}

int TargetFunction::operator()(std::span<const std::int64_t> point) const {
    if (!grid_.contains(point)) throw std::out_of_range("point is not on the grid " + grid_.str());
    int v = 0;
    switch (kind_) {
        case TargetKind::Parity: {
            std::int64_t s = 0;
            for (auto a : point) s += a;
            v = static_cast<int>(s & 1);
            break;
        }
        case TargetKind::InnerProduct: {
            const auto k = pairs();
            std::int64_t s = 0;
            for (std::size_t i = 0; i < k; ++i) s += point[i] * point[k + i];
            v = static_cast<int>(s & 1);
            break;
        }
        case TargetKind::TruthTable:
            v = table_[index_of(point)];
            break;
    }
    return complemented_ ? 1 - v : v;
}

TargetFunction TargetFunction::complement() const {
    TargetFunction f = *this;
    f.complemented_ = !complemented_;
    return f;
}

std::vector<std::vector<std::size_t>> TargetFunction::symmetries() const {
    std::vector<std::vector<std::size_t>> out;
    const auto n = grid_.dimension();
    if (kind_ == TargetKind::Parity) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do out.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
    } else if (kind_ == TargetKind::InnerProduct) {
        const auto k = pairs();
        std::vector<std::size_t> order(k);
        std::iota(order.begin(), order.end(), 0);
        do {
            for (std::size_t flips = 0; flips < (std::size_t{1} << k); ++flips) {
                std::vector<std::size_t> perm(n);
                for (std::size_t i = 0; i < k; ++i) {
                    const bool swap = (flips >> i) & 1U;
                    perm[i] = swap ? k + order[i] : order[i];
                    perm[k + i] = swap ? order[i] : k + order[i];
                }
                out.push_back(std::move(perm));
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return out;
}

std::string TargetFunction::name() const {
    std::string base;
    switch (kind_) {
        case TargetKind::Parity: base = "parity"; break;
        case TargetKind::InnerProduct: base = "ip"; break;
        case TargetKind::TruthTable: base = "table"; break;
    }
    return complemented_ ? "not-" + base : base;
}

TargetFunction parse_target(const std::string& name, const std::string& grid, std::size_t n) {
    if (name == "parity") return TargetFunction::parity(Grid::parse(n, grid));
    if (name == "ip") {
        if (n % 2 != 0) throw std::invalid_argument("inner product needs an even dimension");
        if (Grid::parse(n, grid).points() != std::vector<std::int64_t>{0, 1})
            throw std::invalid_argument("inner product is defined over {0,1}");
        return TargetFunction::inner_product(n / 2);
    }
    throw std::invalid_argument("unknown target '" + name + "' (expected parity or ip)");
}

}  // namespace signrep
