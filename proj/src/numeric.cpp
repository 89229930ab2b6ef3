#include <isobaric/numeric.hpp>

#include <cctype>

namespace isobaric {

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
    if (v.get_den() == 1) {
        return v.get_num().get_str();
    }
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

Int parse_int(std::string_view text) {
    auto s = trim(text);
    if (!is_integer_literal(s)) {
        throw DomainError("not an integer: '" + std::string(text) + "'");
    }
    if (s[0] == '+') s.remove_prefix(1);
    return Int(std::string(s), 10);
}

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(s));
    }
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) {
        throw DomainError("zero denominator: '" + std::string(text) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::vector<Int> parse_int_list(std::string_view text) {
    std::vector<Int> out;
    if (trim(text).empty()) return out;
    for (auto part : split(text, ',')) out.push_back(parse_int(part));
    return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    if (trim(text).empty()) return out;
    for (auto part : split(text, ',')) out.push_back(parse_rational(part));
    return out;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int pow(const Int& base, unsigned long exponent) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Int divide_exact(const Int& num, const Int& den) {
    if (den == 0) {
        throw NotInvertibleError("division by zero");
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw ConsistencyError(num.get_str() + " is not divisible by " + den.get_str());
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace isobaric
