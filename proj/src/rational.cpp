#include "signrep/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace signrep {

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i == text.size()) return false;
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
    std::string digits(text);
    if (digits.front() == '+') digits.erase(0, 1);
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    BigInt num;
    BigInt den = 1;
    const bool ok = slash == std::string_view::npos
                        ? parse_integer(text, num)
                        : parse_integer(text.substr(0, slash), num) &&
                              parse_integer(text.substr(slash + 1), den);
    if (!ok) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return {num, den};
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational pow(const Rational& base, unsigned exp) {
    BigInt n;
    BigInt d;
    mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exp);
    mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exp);
    return {n, d};
}

BigInt pow(const BigInt& base, unsigned exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

}  // namespace signrep
