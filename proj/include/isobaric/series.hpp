#ifndef ISOBARIC_SERIES_HPP
#define ISOBARIC_SERIES_HPP

#include <isobaric/numeric.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace isobaric {

// Truncated power-series kernels over an exact ring T (Int, Rational or
// IsobaricPoly). Sequences are coefficient lists indexed from 0.

// c_n = sum_{j=0}^{n} a_{n-j} b_j for n = 0..N.
template <class T>
std::vector<T> series_multiply(std::span<const T> a, std::span<const T> b, std::size_t N) {
    if (a.size() <= N || b.size() <= N) {
        throw DomainError("convolution needs both sequences on 0.." + std::to_string(N) +
                          " (got lengths " + std::to_string(a.size()) + " and " +
                          std::to_string(b.size()) + ")");
    }
    std::vector<T> c(N + 1, T(0));
    for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t j = 0; j <= n; ++j) {
            c[n] += a[n - j] * b[j];
        }
    }
    return c;
}

// b with a*b = (1, 0, 0, ...) through index N, by the triangular solve
// b_n = -(sum_{j=1}^{n} a_j b_{n-j}) / a_0.
template <class T>
std::vector<T> series_inverse(std::span<const T> a, std::size_t N) {
    if (a.size() <= N) {
        throw DomainError("inverse needs the sequence on 0.." + std::to_string(N));
    }
    if (a[0] == T(0)) {
        throw NotInvertibleError("sequence with zero constant term has no convolution inverse");
    }
    std::vector<T> b(N + 1, T(0));
    b[0] = exact_quotient(T(1), a[0]);
    for (std::size_t n = 1; n <= N; ++n) {
        T acc(0);
        for (std::size_t j = 1; j <= n; ++j) acc += a[j] * b[n - j];
        b[n] = exact_quotient(T(0) - acc, a[0]);
    }
    return b;
}

}  // namespace isobaric

#endif
