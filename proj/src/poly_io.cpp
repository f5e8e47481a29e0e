#include "signrep/poly_io.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace signrep {

namespace {

std::string monomial_text(const ExponentVector& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + 1);
        if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    std::vector<std::pair<std::vector<unsigned>, Rational>> terms() {
        std::vector<std::pair<std::vector<unsigned>, Rational>> out;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto term = parse_term();
            if (sign < 0) term.second = -term.second;
            out.push_back(std::move(term));
            first = false;
            skip_ws();
        }
        return out;
    }

private:
    std::pair<std::vector<unsigned>, Rational> parse_term() {
        Rational coeff(1);
        std::vector<unsigned> exps;
        bool any = false;
        while (true) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parse_number();
            } else if (c == 'x' || c == 'X') {
                ++pos_;
                const auto idx = parse_uint();
                if (idx == 0) fail("variables are numbered from 1");
                unsigned power = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    power = parse_uint();
                }
                if (exps.size() < idx) exps.resize(idx, 0);
                exps[idx - 1] += power;
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            any = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            if (at_end() || peek() == '+' || peek() == '-') break;
        }
        if (!any) fail("empty term");
        return {std::move(exps), coeff};
    }

    Rational parse_number() {
        const auto start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            const auto den_start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (den_start == pos_) fail("missing denominator");
            std::string text(s_.substr(start, den_start - start));
            std::erase_if(text, [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
            text += s_.substr(den_start, pos_ - den_start);
            return Rational::parse(text);
        }
        std::string text(s_.substr(start, pos_ - start));
        std::erase_if(text, [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
        return Rational::parse(text);
    }

    unsigned parse_uint() {
        const auto start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected a number");
        return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[nodiscard]] bool at_end() const { return pos_ >= s_.size(); }
    [[nodiscard]] char peek() const { return s_[pos_]; }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c.sign() < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const Rational mag = abs(c);
        const auto mono = monomial_text(e);
        if (mono.empty())
            out += mag.str();
        else if (mag == Rational(1))
            out += mono;
        else
            out += mag.str() + "*" + mono;
        first = false;
    }
    return out;
}

SparsePoly parse_poly(std::string_view text, std::size_t min_dimension) {
    auto raw = Parser(text).terms();
    std::size_t dim = std::max<std::size_t>(min_dimension, 1);
    for (const auto& [e, c] : raw) dim = std::max(dim, e.size());
    SparsePoly p(dim);
    for (auto& [e, c] : raw) {
        e.resize(dim, 0);
        p.add_term(ExponentVector(e), c);
    }
    return p;
}

nlohmann::json to_json(const SparsePoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back({{"exponents", it->first.values()}, {"coeff", it->second.str()}});
    return {{"dimension", p.dimension()}, {"terms", terms}};
}

SparsePoly poly_from_json(const nlohmann::json& j, std::size_t min_dimension) {
    const nlohmann::json* terms = &j;
    std::size_t dim = min_dimension;
    if (j.is_object()) {
        terms = &j.at("terms");
        if (j.contains("dimension")) dim = std::max(dim, j.at("dimension").get<std::size_t>());
    }
    if (!terms->is_array()) throw std::invalid_argument("polynomial JSON must be a term list");
    for (const auto& t : *terms) dim = std::max(dim, t.at("exponents").size());
    SparsePoly p(std::max<std::size_t>(dim, 1));
    for (const auto& t : *terms) {
        auto e = t.at("exponents").get<std::vector<unsigned>>();
        e.resize(p.dimension(), 0);
        const auto& c = t.at("coeff");
        p.add_term(ExponentVector(std::move(e)),
                   c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<long>()));
    }
    return p;
}

}  // namespace signrep
