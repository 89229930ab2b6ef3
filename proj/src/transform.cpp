#include <isobaric/matrixops.hpp>
#include <isobaric/transform.hpp>
#include <isobaric/wip.hpp>

namespace isobaric {

std::vector<Rational> delta(std::size_t N) {
    std::vector<Rational> d(N + 1, 0);
    d[0] = 1;
    return d;
}

std::vector<Rational> to_rationals(std::span<const Int> v) {
    return {v.begin(), v.end()};
}

std::vector<Rational> iso_log(const Core& core, std::span<const Rational> p, std::size_t N,
                              std::optional<Rational> index0) {
    auto t = to_rationals(core.padded(N));
    Rational zero = index0.value_or(Rational(static_cast<unsigned long>(core.degree())));
    return iso_log<Rational>(t, p, N, zero);
}

std::vector<Rational> iso_exp(const Core& core, std::span<const Rational> p, std::size_t N,
                              std::optional<Rational> index0) {
    auto f = to_rationals(gfp_values(core, N));
    return iso_exp<Rational>(f, p, N, index0.value_or(Rational(1)));
}

std::vector<IsobaricPoly> iso_log(std::size_t k, std::span<const IsobaricPoly> p, std::size_t N) {
    auto t = symbolic_core(k);
    t.resize(std::max(N, k), IsobaricPoly());
    return iso_log<IsobaricPoly>(t, p, N, IsobaricPoly(Int(static_cast<unsigned long>(k))));
}

std::vector<IsobaricPoly> iso_exp(std::size_t k, std::span<const IsobaricPoly> p, std::size_t N) {
    auto f = gfp(k, static_cast<unsigned>(N)).polys;
    return iso_exp<IsobaricPoly>(f, p, N, IsobaricPoly(1));
}

IsoTrig isotrig(const Core& core, std::size_t N) {
    auto f = gfp_values(core, N);
    IsoTrig out{std::vector<Rational>(N + 1), std::vector<Rational>(N + 1)};
    out.sine[0] = 0;
    out.cosine[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        Int tn = core.t(n);
        out.sine[n] = Rational(f[n] + tn, 2);
        out.cosine[n] = Rational(f[n] - tn, 2);
        out.sine[n].canonicalize();
        out.cosine[n].canonicalize();
    }
    return out;
}

IsoTrig isotrig_from_glp(const Core& core, std::span<const Rational> g, std::size_t N) {
    auto e = iso_exp(core, g, N);
    auto inv = conv_inverse<Rational>(e, N);
    IsoTrig out{std::vector<Rational>(N + 1), std::vector<Rational>(N + 1)};
    for (std::size_t n = 0; n <= N; ++n) {
        out.sine[n] = (e[n] - inv[n]) / 2;
        out.cosine[n] = (e[n] + inv[n]) / 2;
    }
    return out;
}

Core core_product(const Core& a, const Core& b) {
    if (a.truncated() || b.truncated()) throw DomainError("core_product needs finite cores");
    const std::size_t ka = a.degree(), kb = b.degree();
    std::vector<Int> c(ka + kb, 0);
    for (std::size_t j = 1; j <= ka + kb; ++j) {
        Int v = a.t(j) + b.t(j);
        for (std::size_t i = 1; i < j; ++i) v -= a.t(i) * b.t(j - i);
        c[j - 1] = v;
    }
    return Core(std::move(c));
}

std::vector<Rational> iso_log_column(const Core& core, std::size_t column, std::size_t N) {
    const std::size_t k = core.degree();
    if (column == 0 || column > k) throw DomainError("iso_log_column: column out of range");
    const long shift = static_cast<long>(k - column);
    auto w = companion_window(core, -shift, static_cast<long>(N));
    // y_m = entry at row m - shift, m = 0..N + shift; y_0 = 1 is the unit row.
    std::vector<Rational> y;
    for (long m = 0; m <= static_cast<long>(N) + shift; ++m) y.push_back(w.entry(m - shift, column));
    const std::size_t M = N + static_cast<std::size_t>(shift);
    auto t = to_rationals(core.padded(M));
    auto logged = iso_log<Rational>(t, y, M, Rational(0));
    std::vector<Rational> out(N + 1, 0);
    for (std::size_t n = 1; n <= N; ++n) out[n] = logged[n + static_cast<std::size_t>(shift)];
    return out;
}

}  // namespace isobaric
