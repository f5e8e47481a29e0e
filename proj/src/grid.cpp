#include "signrep/grid.hpp"

#include "signrep/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace signrep {

Grid::Grid(std::size_t dimension, std::vector<std::int64_t> points) : n_(dimension), a_(std::move(points)) {
    if (n_ == 0) throw std::invalid_argument("grid dimension must be at least 1");
    if (a_.size() < 2) throw std::invalid_argument("grid needs at least two points");
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] < 0) throw std::invalid_argument("grid points must be non-negative");
        if (i > 0 && a_[i] <= a_[i - 1]) throw std::invalid_argument("grid points must be strictly increasing");
    }
}

Grid Grid::range(std::size_t dimension, std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> pts;
    for (std::int64_t v = lo; v <= hi; ++v) pts.push_back(v);
    return {dimension, std::move(pts)};
}

Grid Grid::parse(std::size_t dimension, const std::string& text) {
    const auto dots = text.find("..");
    std::vector<std::int64_t> pts;
    try {
        if (dots != std::string::npos) {
            const auto lo = std::stoll(text.substr(0, dots));
            const auto hi = std::stoll(text.substr(dots + 2));
            for (auto v = lo; v <= hi; ++v) pts.push_back(v);
        } else {
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) pts.push_back(std::stoll(item));
        }
    } catch (const std::logic_error&) {
        throw std::invalid_argument("cannot parse grid '" + text + "'");
    }
    return {dimension, std::move(pts)};
}

std::size_t Grid::size() const {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n_; ++i) {
        if (total > std::numeric_limits<std::size_t>::max() / a_.size())
            return std::numeric_limits<std::size_t>::max();
        total *= a_.size();
    }
    return total;
}

bool Grid::contains(std::span<const std::int64_t> p) const {
    if (p.size() != n_) return false;
    for (auto v : p)
        if (!std::binary_search(a_.begin(), a_.end(), v)) return false;
    return true;
}

void Grid::for_each_point(const std::function<void(const Point&)>& visit) const {
    std::vector<std::size_t> idx(n_, 0);
    Point p(n_, a_[0]);
    while (true) {
        visit(p);
        std::size_t k = n_;
        while (k > 0) {
            --k;
            if (++idx[k] < a_.size()) {
                p[k] = a_[idx[k]];
                break;
            }
            idx[k] = 0;
            p[k] = a_[0];
            if (k == 0) return;
        }
    }
}

std::vector<Point> Grid::enumerate(std::size_t cap) const {
    const auto total = size();
    if (total > cap)
        throw CapExceeded("grid " + str() + " has " + std::to_string(total) + " points, cap is " +
                          std::to_string(cap));
    std::vector<Point> out;
    out.reserve(total);
    for_each_point([&](const Point& p) { out.push_back(p); });
    return out;
}

std::string Grid::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < a_.size(); ++i) os << (i ? "," : "") << a_[i];
    os << "}^" << n_;
    return os.str();
}

}  // namespace signrep
