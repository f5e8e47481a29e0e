#include "signrep/lp.hpp"

#include <stdexcept>

namespace signrep::lp {

namespace {

// Dense phase-1 tableau over mpq_class for  M y + s = r,  y, s >= 0,  minimize sum(s).
class Phase1 {
public:
    Phase1(const RationalMatrix& a, std::span<const Rational> b)
        : rows_(a.cols() + 1), structural_(a.rows()), cols_(structural_ + rows_),
          t_(rows_ * cols_), rhs_(rows_), cost_(cols_), basis_(rows_) {
        // rows 0..k-1: column j of A; row k: b
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t y = 0; y < structural_; ++y)
                at(r, y) = r + 1 < rows_ ? a(y, r).raw() : b[y].raw();
            at(r, structural_ + r) = 1;
            basis_[r] = structural_ + r;
        }
        rhs_[rows_ - 1] = 1;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j >= structural_) continue;
            mpq_class s = 0;
            for (std::size_t r = 0; r < rows_; ++r) s += at(r, j);
            cost_[j] = -s;
        }
        objective_ = -1;  // reduced objective row: -(sum of rhs)
    }

    void run() {
        while (true) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j)
                if (sgn(cost_[j]) < 0) {
                    enter = j;
                    break;
                }
            if (enter == cols_) return;

            std::size_t leave = rows_;
            mpq_class best;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (sgn(at(r, enter)) <= 0) continue;
                mpq_class ratio = rhs_[r] / at(r, enter);
                if (leave == rows_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = std::move(ratio);
                }
            }
            // phase 1 is bounded below by zero, so some row must qualify
            if (leave == rows_) throw std::logic_error("unbounded phase-1 simplex");
            pivot(leave, enter);
            ++pivots_;
        }
    }

    [[nodiscard]] bool optimum_is_zero() const { return sgn(objective_) == 0; }

    [[nodiscard]] std::vector<Rational> structural_values() const {
        std::vector<Rational> y(structural_, Rational(0));
        for (std::size_t r = 0; r < rows_; ++r)
            if (basis_[r] < structural_) y[basis_[r]] = Rational(rhs_[r]);
        return y;
    }

    /// Simplex multiplier of constraint row r: 1 - reduced cost of its artificial column.
    [[nodiscard]] Rational multiplier(std::size_t r) const { return Rational(mpq_class(1 - cost_[structural_ + r])); }

    [[nodiscard]] std::size_t pivots() const { return pivots_; }

private:
    mpq_class& at(std::size_t r, std::size_t c) { return t_[r * cols_ + c]; }

    void pivot(std::size_t pr, std::size_t pc) {
        const mpq_class piv = at(pr, pc);
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(at(pr, j)) != 0) at(pr, j) /= piv;
        rhs_[pr] /= piv;
        mpq_class f;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr || sgn(at(r, pc)) == 0) continue;
            f = at(r, pc);
            for (std::size_t j = 0; j < cols_; ++j)
                if (sgn(at(pr, j)) != 0) at(r, j) -= f * at(pr, j);
            rhs_[r] -= f * rhs_[pr];
        }
        if (sgn(cost_[pc]) != 0) {
            f = cost_[pc];
            for (std::size_t j = 0; j < cols_; ++j)
                if (sgn(at(pr, j)) != 0) cost_[j] -= f * at(pr, j);
            objective_ -= f * rhs_[pr];
        }
        basis_[pr] = pc;
    }

    std::size_t rows_;
    std::size_t structural_;
    std::size_t cols_;
    std::vector<mpq_class> t_;
    std::vector<mpq_class> rhs_;
    std::vector<mpq_class> cost_;
    mpq_class objective_;
    std::vector<std::size_t> basis_;
    std::size_t pivots_ = 0;
};

}  // namespace

Result solve(const RationalMatrix& a, std::span<const Rational> b) {
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length does not match row count");
    Phase1 simplex(a, b);
    simplex.run();

    Result res;
    res.pivots = simplex.pivots();
    if (simplex.optimum_is_zero()) {
        res.feasible = false;
        res.ray = simplex.structural_values();
        if (!is_farkas_ray(a, b, res.ray)) throw std::logic_error("simplex produced an invalid Farkas ray");
        return res;
    }
    const auto k = a.cols();
    const Rational t = simplex.multiplier(k);
    if (t.sign() <= 0) throw std::logic_error("phase-1 optimum without a positive multiplier");
    res.feasible = true;
    res.solution.reserve(k);
    for (std::size_t j = 0; j < k; ++j) res.solution.push_back(-simplex.multiplier(j) / t);
    if (!satisfies(a, b, res.solution)) throw std::logic_error("simplex produced an infeasible point");
    return res;
}

bool satisfies(const RationalMatrix& a, std::span<const Rational> b, std::span<const Rational> x) {
    if (x.size() != a.cols() || b.size() != a.rows()) return false;
    mpq_class s;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        s = 0;
        for (std::size_t c = 0; c < a.cols(); ++c) s += a(r, c).raw() * x[c].raw();
        if (s < b[r].raw()) return false;
    }
    return true;
}

bool is_farkas_ray(const RationalMatrix& a, std::span<const Rational> b, std::span<const Rational> y) {
    if (y.size() != a.rows() || b.size() != a.rows()) return false;
    for (const auto& v : y)
        if (v.sign() < 0) return false;
    mpq_class s;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        s = 0;
        for (std::size_t r = 0; r < a.rows(); ++r) s += a(r, c).raw() * y[r].raw();
        if (sgn(s) != 0) return false;
    }
    s = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) s += b[r].raw() * y[r].raw();
    return sgn(s) > 0;
}

}  // namespace signrep::lp
