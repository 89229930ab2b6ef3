#ifndef ISOBARIC_ISOPOLY_HPP
#define ISOBARIC_ISOPOLY_HPP

#include <isobaric/numeric.hpp>
#include <isobaric/partitions.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace isobaric {

// Numeric core t_1..t_k of X^k - t_1 X^(k-1) - ... - t_k.
//
// A truncated core is a prefix of a power-series core: entries past the
// stored prefix are unknown rather than zero.
class Core {
public:
    Core() = default;
    explicit Core(std::vector<Int> coefficients, bool truncated = false);
    static Core truncated_series(std::vector<Int> prefix) { return Core(std::move(prefix), true); }
    static Core parse(const std::string& text);

    std::size_t degree() const { return t_.size(); }
    bool truncated() const { return truncated_; }
    bool invertible() const { return !truncated_ && !t_.empty() && t_.back() != 0; }
    std::span<const Int> coefficients() const { return t_; }

    // t_j for j >= 1. Finite cores read zero past k; truncated cores throw.
    Int t(std::size_t j) const;
    // t_1..t_n padded with zeros (finite) or checked against the prefix (truncated).
    std::vector<Int> padded(std::size_t n) const;

    std::string to_string() const;

    friend bool operator==(const Core&, const Core&) = default;

private:
    std::vector<Int> t_;
    bool truncated_ = false;
};

// Sparse polynomial in t_1, t_2, ... with integer coefficients, keyed by Alpha.
class IsobaricPoly {
public:
    using Terms = std::map<Alpha, Int>;

    IsobaricPoly() = default;
    IsobaricPoly(const Int& constant);  // NOLINT: polynomial ring embeds the integers
    IsobaricPoly(int constant) : IsobaricPoly(Int(constant)) {}  // NOLINT

    static IsobaricPoly variable(std::size_t j);
    static IsobaricPoly monomial(const Alpha& alpha, const Int& coefficient = 1);

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Int coefficient(const Alpha& alpha) const;

    // Common isobaric degree of all terms; nullopt for zero or mixed-degree polynomials.
    std::optional<unsigned long> grade() const;
    bool is_homogeneous() const { return is_zero() || grade().has_value(); }
    // Largest j with t_j present.
    std::size_t max_variable() const;

    IsobaricPoly& operator+=(const IsobaricPoly& other);
    IsobaricPoly& operator-=(const IsobaricPoly& other);
    IsobaricPoly& operator*=(const IsobaricPoly& other);
    IsobaricPoly& operator*=(const Int& scalar);
    friend IsobaricPoly operator+(IsobaricPoly a, const IsobaricPoly& b) { return a += b; }
    friend IsobaricPoly operator-(IsobaricPoly a, const IsobaricPoly& b) { return a -= b; }
    friend IsobaricPoly operator*(const IsobaricPoly& a, const IsobaricPoly& b);
    friend IsobaricPoly operator*(IsobaricPoly a, const Int& s) { return a *= s; }
    friend IsobaricPoly operator*(const Int& s, IsobaricPoly a) { return a *= s; }
    IsobaricPoly operator-() const;

    // Divides every coefficient by d; ConsistencyError if any is not divisible.
    IsobaricPoly divide_exact(const Int& d) const;

    friend bool operator==(const IsobaricPoly&, const IsobaricPoly&) = default;

    // Canonical rendering, e.g. "t1^4 + 3 t1^2 t2 + t2^2 + 2 t1 t3 + t4".
    std::string to_string() const;

private:
    void add_term(const Alpha& alpha, const Int& coefficient);

    Terms terms_;
};

IsobaricPoly poly_add(const IsobaricPoly& p, const IsobaricPoly& q);
IsobaricPoly poly_mul(const IsobaricPoly& p, const IsobaricPoly& q);

// Exact value at the core; DomainError if p uses a t_j the core lacks.
Int evaluate(const IsobaricPoly& p, const Core& core);
// Value reduced into [0, modulus).
Int evaluate(const IsobaricPoly& p, const Core& core, const Int& modulus);

// Symbolic core (t_1, ..., t_k) as polynomials.
std::vector<IsobaricPoly> symbolic_core(std::size_t k);

inline IsobaricPoly exact_quotient(const IsobaricPoly& a, const IsobaricPoly& b) {
    if (b.size() != 1 || !b.terms().begin()->first.empty()) {
        throw DomainError("polynomial division is only supported by integer constants");
    }
    return a.divide_exact(b.terms().begin()->second);
}

}  // namespace isobaric

#endif
