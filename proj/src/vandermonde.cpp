#include "signrep/vandermonde.hpp"

#include <stdexcept>

namespace signrep {

GeneralizedVandermonde gvd_build(std::vector<Rational> points, std::vector<unsigned> exponents) {
    if (points.size() != exponents.size()) throw std::invalid_argument("points and exponents differ in count");
    if (points.empty()) throw std::invalid_argument("empty Vandermonde matrix");
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i - 1] < points[i])) throw std::invalid_argument("points must be strictly increasing");
        if (!(exponents[i - 1] < exponents[i])) throw std::invalid_argument("exponents must be strictly increasing");
    }
    const auto k = points.size();
    RationalMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = pow(points[i], exponents[j]);
    return {std::move(points), std::move(exponents), std::move(m)};
}

Rational det_exact(const RationalMatrix& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const auto k = input.rows();
    if (k == 0) return Rational(1);
    RationalMatrix a = input;
    Rational prev(1);
    int sign = 1;
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (a(p, p).is_zero()) {
            std::size_t r = p + 1;
            while (r < k && a(r, p).is_zero()) ++r;
            if (r == k) return Rational(0);
            a.swap_rows(p, r);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j) a(i, j) = (a(i, j) * a(p, p) - a(i, p) * a(p, j)) / prev;
            a(i, p) = Rational(0);
        }
        prev = a(p, p);
    }
    return sign > 0 ? a(k - 1, k - 1) : -a(k - 1, k - 1);
}

std::optional<RationalMatrix> inverse_exact(const RationalMatrix& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const auto k = input.rows();
    RationalMatrix a = input;
    RationalMatrix inv = identity<Rational>(k);
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t r = c;
        while (r < k && a(r, c).is_zero()) ++r;
        if (r == k) return std::nullopt;
        a.swap_rows(c, r);
        inv.swap_rows(c, r);
        const Rational piv = a(c, c);
        for (std::size_t j = 0; j < k; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < k; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

SignMatrix inverse_sign_pattern(const GeneralizedVandermonde& v) {
    const auto inv = inverse_exact(v.entries);
    if (!inv) throw std::domain_error("singular generalized Vandermonde matrix");
    SignMatrix s(inv->rows(), inv->cols());
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) s(i, j) = (*inv)(i, j).sign();
    return s;
}

bool is_checkerboard(const SignMatrix& s) {
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j)
            if (s(i, j) != ((i + j) % 2 == 0 ? 1 : -1)) return false;
    return true;
}

bool is_anchored_checkerboard(const SignMatrix& s) {
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) {
            const int want = (i == 0 && j > 0) ? 0 : ((i + j) % 2 == 0 ? 1 : -1);
            if (s(i, j) != want) return false;
        }
    return true;
}

}  // namespace signrep
