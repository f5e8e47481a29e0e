#ifndef SIGNREP_RATIONAL_HPP
#define SIGNREP_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace signrep {

using BigInt = mpz_class;

/// Exact fraction, always kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& value) : value_(value) {}
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Accepts "p", "-p", "p/q" (q != 0). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    [[nodiscard]] BigInt num() const { return value_.get_num(); }
    [[nodiscard]] BigInt den() const { return value_.get_den(); }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    /// "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string str() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_;
};

/// base^exp with 0^0 = 1.
Rational pow(const Rational& base, unsigned exp);
BigInt pow(const BigInt& base, unsigned exp);

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace signrep

#endif  // SIGNREP_RATIONAL_HPP
