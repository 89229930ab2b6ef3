#include <isobaric/series.hpp>
#include <isobaric/wip.hpp>

#include <algorithm>

namespace isobaric {

IsobaricPoly wip_explicit(const WeightVector& omega, std::size_t k, unsigned n) {
    if (k == 0) throw DomainError("wip_explicit: k must be positive");
    if (n == 0) return IsobaricPoly(1);
    IsobaricPoly p;
    for (const Alpha& alpha : enumerate_partitions(n, static_cast<unsigned>(k))) {
        p += IsobaricPoly::monomial(alpha, wip_coefficient(alpha, omega));
    }
    return p;
}

PolySeq wip_recursive(const WeightVector& omega, std::size_t k, unsigned n_max) {
    if (k == 0) throw DomainError("wip_recursive: k must be positive");
    PolySeq seq{omega, k, {}};
    seq.polys.reserve(n_max + 1);
    seq.polys.emplace_back(1);
    const auto t = symbolic_core(k);
    for (unsigned n = 1; n <= n_max; ++n) {
        IsobaricPoly p;
        for (std::size_t j = 1; j <= std::min<std::size_t>(n - 1, k); ++j) {
            p += t[j - 1] * seq.polys[n - j];
        }
        if (n <= k) p += t[n - 1] * omega(n);
        seq.polys.push_back(std::move(p));
    }
    return seq;
}

IsobaricPoly wip_convolution_form(const WeightVector& omega, std::size_t k, unsigned n) {
    if (n == 0) throw DomainError("wip_convolution_form: n must be positive");
    const PolySeq f = gfp(k, n);
    const auto t = symbolic_core(k);
    IsobaricPoly p;
    for (std::size_t j = 1; j <= std::min<std::size_t>(n, k); ++j) {
        p += (t[j - 1] * omega(j)) * f[n - j];
    }
    return p;
}

namespace {

// Coefficients 0..N of 1 + numer(y)/denom(y), numer/denom as coefficient lists.
template <class T>
std::vector<T> generating_series(const std::vector<T>& numer, const std::vector<T>& denom,
                                 std::size_t N) {
    auto inverse = series_inverse<T>(denom, N);
    auto quotient = series_multiply<T>(numer, inverse, N);
    quotient[0] += T(1);
    return quotient;
}

}  // namespace

std::vector<IsobaricPoly> series_coefficients(const WeightVector& omega, std::size_t k,
                                              std::size_t N) {
    if (k == 0) throw DomainError("series_coefficients: k must be positive");
    const auto t = symbolic_core(k);
    std::vector<IsobaricPoly> numer(N + 1), denom(N + 1);
    denom[0] = IsobaricPoly(1);
    for (std::size_t j = 1; j <= std::min(N, k); ++j) {
        numer[j] = t[j - 1] * omega(j);
        denom[j] = -t[j - 1];
    }
    return generating_series(numer, denom, N);
}

std::vector<Int> series_coefficients(const WeightVector& omega, const Core& core, std::size_t N) {
    std::vector<Int> numer(N + 1, 0), denom(N + 1, 0);
    denom[0] = 1;
    std::size_t top = core.truncated() ? N : std::min(N, core.degree());
    for (std::size_t j = 1; j <= top; ++j) {
        numer[j] = omega(j) * core.t(j);
        denom[j] = -core.t(j);
    }
    return generating_series(numer, denom, N);
}

PolySeq gfp(std::size_t k, unsigned n_max) { return wip_recursive(WeightVector::all_ones(), k, n_max); }

PolySeq glp(std::size_t k, unsigned n_max) {
    PolySeq seq = wip_recursive(WeightVector::identity(), k, n_max);
    seq.polys[0] = IsobaricPoly(Int(static_cast<unsigned long>(k)));
    return seq;
}

std::vector<Int> wip_values(const WeightVector& omega, const Core& core, std::size_t N) {
    std::vector<Int> v(N + 1, 0);
    v[0] = 1;
    const std::size_t k = core.degree();
    for (std::size_t n = 1; n <= N; ++n) {
        Int acc = 0;
        // Truncated cores have no known end, so every t_j up to n participates.
        std::size_t top = core.truncated() ? n - 1 : std::min(n - 1, k);
        for (std::size_t j = 1; j <= top; ++j) acc += core.t(j) * v[n - j];
        if (core.truncated() || n <= k) acc += omega(n) * core.t(n);
        v[n] = std::move(acc);
    }
    return v;
}

std::vector<Int> gfp_values(const Core& core, std::size_t N) {
    return wip_values(WeightVector::all_ones(), core, N);
}

std::vector<Int> glp_values(const Core& core, std::size_t N) {
    auto v = wip_values(WeightVector::identity(), core, N);
    v[0] = core.truncated() ? Int(0) : Int(static_cast<unsigned long>(core.degree()));
    return v;
}

}  // namespace isobaric
