#ifndef ISOBARIC_NUMERIC_HPP
#define ISOBARIC_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isobaric {

using Int = mpz_class;
using Rational = mpq_class;

// Error taxonomy. Every failure the library reports is one of these.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SizeLimitError : std::length_error {
    using std::length_error::length_error;
};
struct NotInvertibleError : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotRepresentableError : std::domain_error {
    using std::domain_error::domain_error;
};

std::string to_string(const Int& v);
// Renders integral rationals without a denominator, otherwise "a/b".
std::string to_string(const Rational& v);

Int parse_int(std::string_view text);
Rational parse_rational(std::string_view text);
std::vector<Int> parse_int_list(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text);

Int factorial(unsigned long n);
Int binomial(long n, long k);
Int pow(const Int& base, unsigned long exponent);

// Exact division; throws ConsistencyError when `den` does not divide `num`.
Int divide_exact(const Int& num, const Int& den);

inline Int to_int(const Rational& r) {
    if (r.get_den() != 1) {
        throw ConsistencyError("expected an integer, got " + to_string(r));
    }
    return r.get_num();
}

// Ring helpers used by the templated matrix and series kernels.
inline Int exact_quotient(const Int& a, const Int& b) { return divide_exact(a, b); }
inline Rational exact_quotient(const Rational& a, const Rational& b) {
    if (b == 0) {
        throw NotInvertibleError("division by zero");
    }
    return Rational(a / b);
}

}  // namespace isobaric

#endif
