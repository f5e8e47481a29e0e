#ifndef SIGNREP_GRID_HPP
#define SIGNREP_GRID_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace signrep {

using Point = std::vector<std::int64_t>;

/// The product set A^n for a strictly increasing list A of non-negative integers.
class Grid {
public:
    Grid(std::size_t dimension, std::vector<std::int64_t> points);

    /// {lo, lo+1, ..., hi}^n
    static Grid range(std::size_t dimension, std::int64_t lo, std::int64_t hi);

    /// Parses "a..b" or a comma list "0,1,3".
    static Grid parse(std::size_t dimension, const std::string& text);

    [[nodiscard]] std::size_t dimension() const { return n_; }
    [[nodiscard]] const std::vector<std::int64_t>& points() const { return a_; }
    [[nodiscard]] std::size_t m() const { return a_.size(); }

    /// m^n, saturating at SIZE_MAX.
    [[nodiscard]] std::size_t size() const;

    [[nodiscard]] bool contains(std::span<const std::int64_t> p) const;

    /// Same point set in another dimension.
    [[nodiscard]] Grid with_dimension(std::size_t dimension) const { return {dimension, a_}; }

    /// Visits all points in odometer order (last coordinate fastest).
    void for_each_point(const std::function<void(const Point&)>& visit) const;

    /// All points, same order as for_each_point. Throws if size() exceeds cap.
    [[nodiscard]] std::vector<Point> enumerate(std::size_t cap) const;

    [[nodiscard]] std::string str() const;

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t n_;
    std::vector<std::int64_t> a_;
};

}  // namespace signrep

#endif  // SIGNREP_GRID_HPP
