#ifndef ISOBARIC_TRANSFORM_HPP
#define ISOBARIC_TRANSFORM_HPP

#include <isobaric/isopoly.hpp>
#include <isobaric/series.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace isobaric {

// Convolution (P*Q)_n = sum_{j=0}^{n} P_{n-j} Q_j, n = 0..N.
template <class T>
std::vector<T> convolve(std::span<const T> p, std::span<const T> q, std::size_t N) {
    return series_multiply(p, q, N);
}

// Q with P*Q = delta through index N.
template <class T>
std::vector<T> conv_inverse(std::span<const T> p, std::size_t N) {
    return series_inverse(p, N);
}

// (1, 0, ..., 0) of length N + 1.
std::vector<Rational> delta(std::size_t N);

// Isobaric logarithm on indices 1..N:
//   L_n(P) = n P_n - sum_{j=1}^{n-1} j t_{n-j} P_j.
// `t` holds t_1..t_N (zero past k). Index 0 of the result is `index0`.
template <class T>
std::vector<T> iso_log(std::span<const T> t, std::span<const T> p, std::size_t N, T index0) {
    if (p.size() <= N || t.size() < N) throw DomainError("iso_log: inputs shorter than N");
    std::vector<T> out(N + 1, T(0));
    out[0] = std::move(index0);
    for (std::size_t n = 1; n <= N; ++n) {
        T acc = p[n] * T(static_cast<int>(n));
        for (std::size_t j = 1; j < n; ++j) acc -= t[n - j - 1] * p[j] * T(static_cast<int>(j));
        out[n] = std::move(acc);
    }
    return out;
}

// Isobaric exponential on indices 1..N:
//   E_n(P) = (sum_{j=1}^{n-1} F_{n-j} P_j + P_n) / n.
// `f` holds F_0..F_N of the core. Index 0 of the result is `index0`.
template <class T>
std::vector<T> iso_exp(std::span<const T> f, std::span<const T> p, std::size_t N, T index0) {
    if (p.size() <= N || f.size() <= N) throw DomainError("iso_exp: inputs shorter than N");
    std::vector<T> out(N + 1, T(0));
    out[0] = std::move(index0);
    for (std::size_t n = 1; n <= N; ++n) {
        T acc = p[n];
        for (std::size_t j = 1; j < n; ++j) acc += f[n - j] * p[j];
        out[n] = exact_quotient(acc, T(static_cast<int>(n)));
    }
    return out;
}

// Numeric operators at a core. The log's index 0 defaults to G_0 = k, the
// exp's to F_0 = 1.
std::vector<Rational> iso_log(const Core& core, std::span<const Rational> p, std::size_t N,
                              std::optional<Rational> index0 = std::nullopt);
std::vector<Rational> iso_exp(const Core& core, std::span<const Rational> p, std::size_t N,
                              std::optional<Rational> index0 = std::nullopt);

// Symbolic operators in t_1..t_k.
std::vector<IsobaricPoly> iso_log(std::size_t k, std::span<const IsobaricPoly> p, std::size_t N);
std::vector<IsobaricPoly> iso_exp(std::size_t k, std::span<const IsobaricPoly> p, std::size_t N);

struct IsoTrig {
    std::vector<Rational> sine;
    std::vector<Rational> cosine;
};

// Closed forms S_n = (F_n + t_n)/2, C_n = (F_n - t_n)/2, S_0 = 0, C_0 = 1.
IsoTrig isotrig(const Core& core, std::size_t N);
// From the definition: E(G) and its convolution inverse.
IsoTrig isotrig_from_glp(const Core& core, std::span<const Rational> g, std::size_t N);

// Core c with 1 - p_c(y) = (1 - p_a(y)) (1 - p_b(y)).
Core core_product(const Core& a, const Core& b);

// L applied to column j of the companion window, each entry indexed by its
// isobaric degree n + (k - j). Entry n (1..N) is comparable with row n of
// the different window; entry 0 is unused.
std::vector<Rational> iso_log_column(const Core& core, std::size_t column, std::size_t N);

std::vector<Rational> to_rationals(std::span<const Int> v);

}  // namespace isobaric

#endif
