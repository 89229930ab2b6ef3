#include <isobaric/families.hpp>
#include <isobaric/identities.hpp>
#include <isobaric/matrixops.hpp>
#include <isobaric/parallel.hpp>
#include <isobaric/transform.hpp>
#include <isobaric/wip.hpp>

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace isobaric {

void IdentityResult::fail(std::string message) {
    ++failure_count;
    if (failures.size() < 5) failures.push_back(std::move(message));
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Core random_core(std::mt19937_64& rng, std::size_t k, int bound) {
    std::vector<Int> t(k);
    for (auto& x : t) x = uniform(rng, -bound, bound);
    while (t.back() == 0) t.back() = uniform(rng, -bound, bound);
    return Core(std::move(t));
}

WeightVector random_weights(std::mt19937_64& rng, std::size_t n, int bound) {
    std::vector<Int> w(n);
    for (auto& x : w) x = uniform(rng, -bound, bound);
    return WeightVector(std::move(w));
}

template <class T>
std::string show(const std::vector<T>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

template <class T>
bool prefix_equal(const std::vector<T>& a, const std::vector<T>& b, std::size_t from, std::size_t to) {
    for (std::size_t n = from; n <= to; ++n)
        if (!(a.at(n) == b.at(n))) return false;
    return true;
}

void absorb(IdentityResult& r, std::size_t cells,
            const std::vector<std::pair<std::size_t, std::string>>& failures) {
    r.cells += cells;
    for (const auto& [i, msg] : failures) r.fail(msg);
}

template <class Body>
IdentityResult timed(std::string name, Body&& body) {
    IdentityResult r;
    r.name = std::move(name);
    auto start = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<Core> window_cores() {
    return {Core({1, 1}), Core({2, -1}), Core({2, 1}), Core({0, 1, 1}), Core({1, -2, 3}),
            Core({3, -3, 1}), Core({1, 0, 0, 2})};
}

FamilyParams catalog_params(const std::string& name) {
    FamilyParams p;
    if (name == "sigma" || name == "totient") p.p = 3;
    if (name == "jordan") {
        p.p = 3;
        p.k = 2;
    }
    if (name == "stirling2_col") p.k = 3;
    if (name == "chebyshev_u") p.x = 2;
    if (name == "fibonacci_bivariate") {
        p.x = 2;
        p.y = 3;
    }
    return p;
}

}  // namespace

std::vector<Core> random_cores(std::size_t count, std::size_t k_max, int bound, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Core> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_core(rng, static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(k_max))), bound));
    return out;
}

IdentityResult check_wip_three_way(unsigned k_max, unsigned n_max, std::uint64_t seed) {
    return timed("wip.three_way", [&](IdentityResult& r) {
        std::mt19937_64 rng(seed);
        std::vector<WeightVector> weights{WeightVector::all_ones(), WeightVector::identity()};
        for (int i = 0; i < 3; ++i) weights.push_back(random_weights(rng, n_max, 4));
        for (const auto& omega : weights) {
            for (unsigned k = 1; k <= k_max; ++k) {
                auto rec = wip_recursive(omega, k, n_max);
                for (unsigned n = 1; n <= n_max; ++n) {
                    ++r.cells;
                    auto ex = wip_explicit(omega, k, n);
                    auto conv = wip_convolution_form(omega, k, n);
                    auto perm = permanent_hessenberg(hessenberg(HessenbergSign::plus, omega, k, n));
                    if (!(ex == rec[n] && ex == conv && ex == perm)) {
                        r.fail("omega=" + omega.describe() + " k=" + std::to_string(k) + " n=" +
                               std::to_string(n) + ": explicit " + ex.to_string() + ", recursion " +
                               rec[n].to_string() + ", convolution " + conv.to_string() +
                               ", permanent " + perm.to_string());
                    }
                }
            }
        }
    });
}

IdentityResult check_weight_additivity(unsigned k_max, unsigned n_max, std::uint64_t seed) {
    return timed("wip.weight_additivity", [&](IdentityResult& r) {
        std::mt19937_64 rng(seed ^ 0x5eedULL);
        for (int trial = 0; trial < 4; ++trial) {
            auto a = random_weights(rng, n_max, 5), b = random_weights(rng, n_max, 5);
            for (unsigned k = 1; k <= k_max; ++k) {
                for (unsigned n = 1; n <= n_max; ++n) {
                    ++r.cells;
                    if (wip_explicit(a + b, k, n) != wip_explicit(a, k, n) + wip_explicit(b, k, n)) {
                        r.fail("P(w+w') != P(w)+P(w') for w=" + a.describe() + " w'=" + b.describe() +
                               " k=" + std::to_string(k) + " n=" + std::to_string(n));
                    }
                }
            }
        }
    });
}

IdentityResult check_hessenberg_grid(unsigned k_max, unsigned n_max, unsigned samples,
                                     std::uint64_t seed, bool parallel) {
    return timed("hessenberg.grid", [&](IdentityResult& r) {
        const std::size_t count = std::size_t{k_max} * n_max * samples;
        auto failures = collect_failures(
            count,
            [&](std::size_t cell) -> std::string {
                const std::size_t k = cell / (std::size_t{n_max} * samples) + 1;
                const std::size_t n = (cell / samples) % n_max + 1;
                std::mt19937_64 rng(seed + 7919 * cell);
                auto omega = random_weights(rng, n, 5);
                auto core = random_core(rng, k, 4);
                auto hp = hessenberg(HessenbergSign::plus, omega, core, n);
                auto hm = hessenberg(HessenbergSign::minus, omega, core, n);
                Int naive = permanent_naive(hp);
                Int fast = permanent_hessenberg(hp);
                Int det_minus = determinant_hessenberg(hm);
                Int explicit_value = evaluate(wip_explicit(omega, k, static_cast<unsigned>(n)), core);
                Int det_plus = determinant_hessenberg(hp);
                Int det_plus_leibniz = determinant_leibniz(hp);
                Int perm_minus = permanent_hessenberg(hm);
                Int perm_minus_naive = permanent_naive(hm);
                if (naive == fast && fast == det_minus && det_minus == explicit_value &&
                    det_plus == perm_minus && det_plus == det_plus_leibniz && perm_minus == perm_minus_naive) {
                    return {};
                }
                std::ostringstream os;
                os << "core " << core.to_string() << " omega " << omega.describe() << " n=" << n
                   << ": perm_naive(H+)=" << naive << " perm(H+)=" << fast << " det(H-)=" << det_minus
                   << " explicit=" << explicit_value << " det(H+)=" << det_plus
                   << " perm(H-)=" << perm_minus;
                return os.str();
            },
            parallel);
        absorb(r, count, failures);
    });
}

IdentityResult check_weight_form() {
    return timed("hessenberg.weight_form", [&](IdentityResult& r) {
        const std::string expected = "w1 t1^4 + (2 w1 + w2) t1^2 t2 + w2 t2^2 + (w1 + w3) t1 t3 + w4 t4";
        for (bool permanent : {true, false}) {
            ++r.cells;
            auto sign = permanent ? HessenbergSign::plus : HessenbergSign::minus;
            auto form = hessenberg_weight_form(sign, 4, 4, permanent);
            if (form.to_string() != expected) {
                r.fail(std::string(permanent ? "perm(H+)" : "det(H-)") + " = " + form.to_string());
            }
            for (const auto& omega : {WeightVector::all_ones(), WeightVector::identity()}) {
                ++r.cells;
                if (form.at(omega) != wip_explicit(omega, 4, 4)) {
                    r.fail("weight form at " + omega.describe() + " differs from the explicit formula");
                }
            }
        }
    });
}

IdentityResult check_log_exp_inverse(unsigned samples, unsigned depth, std::uint64_t seed) {
    return timed("transform.log_exp_inverse", [&](IdentityResult& r) {
        std::mt19937_64 rng(seed ^ 0x10cULL);
        for (unsigned s = 0; s < samples; ++s) {
            auto core = random_core(rng, static_cast<std::size_t>(uniform(rng, 1, 4)), 3);
            std::vector<Rational> p(depth + 1, 0);
            for (unsigned n = 1; n <= depth; ++n) {
                p[n] = Rational(uniform(rng, -9, 9), uniform(rng, 1, 6));
                p[n].canonicalize();
            }
            ++r.cells;
            auto le = iso_log(core, iso_exp(core, p, depth, Rational(0)), depth, Rational(0));
            auto el = iso_exp(core, iso_log(core, p, depth, Rational(0)), depth, Rational(0));
            if (!prefix_equal(le, p, 1, depth) || !prefix_equal(el, p, 1, depth)) {
                r.fail("core " + core.to_string() + " P=" + show(p) + ": L(E(P))=" + show(le) +
                       " E(L(P))=" + show(el));
            }
        }
    });
}

IdentityResult check_log_of_gfp(unsigned depth, std::uint64_t seed) {
    return timed("transform.log_of_gfp", [&](IdentityResult& r) {
        std::vector<Core> cores;
        for (const auto& name : family_names()) cores.push_back(family(name, catalog_params(name), depth).core);
        for (auto& c : random_cores(10, 5, 4, seed ^ 0x6f9ULL)) cores.push_back(std::move(c));
        for (const auto& core : cores) {
            ++r.cells;
            auto f = to_rationals(gfp_values(core, depth));
            auto g = to_rationals(glp_values(core, depth));
            auto logged = iso_log(core, f, depth);
            auto exped = iso_exp(core, g, depth);
            if (!prefix_equal(logged, g, 1, depth)) r.fail("L(F) != G at core " + core.to_string() + ": " + show(logged));
            if (!prefix_equal(exped, f, 0, depth)) r.fail("E(G) != F at core " + core.to_string() + ": " + show(exped));
        }
    });
}

IdentityResult check_trig(unsigned pairs, unsigned depth, std::uint64_t seed) {
    return timed("transform.trig", [&](IdentityResult& r) {
        std::mt19937_64 rng(seed ^ 0x7a1ULL);
        auto d = delta(depth);
        auto conv = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
            return convolve<Rational>(a, b, depth);
        };
        auto add = [](std::vector<Rational> a, const std::vector<Rational>& b) {
            for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
            return a;
        };
        auto sub = [](std::vector<Rational> a, const std::vector<Rational>& b) {
            for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
            return a;
        };
        for (unsigned i = 0; i < pairs; ++i) {
            auto a = random_core(rng, static_cast<std::size_t>(uniform(rng, 1, 4)), 3);
            auto b = random_core(rng, static_cast<std::size_t>(uniform(rng, 1, 4)), 3);
            auto c = core_product(a, b);
            const std::string tag = "cores " + a.to_string() + " x " + b.to_string();
            for (const auto* core : {&a, &b, &c}) {
                ++r.cells;
                auto tr = isotrig(*core, depth);
                auto g = to_rationals(glp_values(*core, depth));
                auto def = isotrig_from_glp(*core, g, depth);
                if (tr.sine != def.sine || tr.cosine != def.cosine) {
                    r.fail("closed-form trig differs from E(G) definition at " + core->to_string());
                }
                auto cc = conv(tr.cosine, tr.cosine), ss = conv(tr.sine, tr.sine);
                if (sub(cc, ss) != d) r.fail("C*C - S*S != delta at " + core->to_string());
                if (cc[0] != 1 || !prefix_equal(cc, ss, 1, depth)) {
                    r.fail("(C*C)_n != (S*S)_n for n > 0 at " + core->to_string());
                }
            }
            ++r.cells;
            auto ta = isotrig(a, depth), tb = isotrig(b, depth), tc = isotrig(c, depth);
            if (tc.cosine != add(conv(ta.cosine, tb.cosine), conv(ta.sine, tb.sine))) {
                r.fail(tag + ": C(G+G') != C*C' + S*S'");
            }
            if (tc.sine != add(conv(ta.sine, tb.cosine), conv(ta.cosine, tb.sine))) {
                r.fail(tag + ": S(G+G') != S*C' + C*S'");
            }
            auto ga = glp_values(a, depth), gb = glp_values(b, depth), gc = glp_values(c, depth);
            for (unsigned n = 1; n <= depth; ++n) {
                if (gc[n] != ga[n] + gb[n]) {
                    r.fail(tag + ": GLP of the product core is not additive at n=" + std::to_string(n));
                    break;
                }
            }
        }
    });
}

IdentityResult check_window(long lo, long hi, std::uint64_t seed) {
    return timed("window.powers", [&](IdentityResult& r) {
        auto cores = window_cores();
        std::mt19937_64 rng(seed ^ 0x3a11ULL);
        for (int i = 0; i < 3; ++i) cores.push_back(random_core(rng, static_cast<std::size_t>(uniform(rng, 2, 4)), 3));
        for (const auto& core : cores) {
            const std::size_t k = core.degree();
            const long kk = static_cast<long>(k);
            const std::string tag = "core " + core.to_string();
            auto w = companion_window(core, lo - kk + 1, hi);
            auto a = companion_matrix(core).map([](const Int& x) { return Rational(x); });
            auto a_inv = inverse(a);
            auto power = [&](long n) { return n >= 0 ? matrix_power(a, n) : matrix_power(a_inv, -n); };
            for (long n = lo; n <= hi; ++n) {
                ++r.cells;
                if (!(w.block(n) == power(n))) r.fail(tag + ": block(" + std::to_string(n) + ") != A^n");
            }
            for (long m = lo; m <= hi; ++m) {
                for (long n = lo; n <= hi; ++n) {
                    if (m + n < lo || m + n > hi) continue;
                    ++r.cells;
                    if (!(w.block(m) * w.block(n) == w.block(m + n))) {
                        r.fail(tag + ": A^" + std::to_string(m) + " A^" + std::to_string(n) + " != A^" +
                               std::to_string(m + n));
                    }
                }
            }
            const auto N = static_cast<std::size_t>(std::max(hi, 1L));
            auto f = gfp_values(core, N);
            auto g = glp_values(core, N);
            auto dw = different_window(core, 0, hi);
            for (long n = 0; n <= hi; ++n) {
                ++r.cells;
                if (w.entry(n, k) != f[n]) r.fail(tag + ": right column at row " + std::to_string(n) + " is not F_n");
                if (w.trace(n) != g[n]) r.fail(tag + ": trace(A^" + std::to_string(n) + ") != G_n");
                if (n >= 1 && dw.entry(n, k) != g[n]) {
                    r.fail(tag + ": different window right column at row " + std::to_string(n) + " is not G_n");
                }
            }
            for (std::size_t j = 1; j <= k; ++j) {
                for (long n = w.lo() + kk; n <= hi; ++n) {
                    ++r.cells;
                    Rational acc = 0;
                    for (std::size_t i = 1; i <= k; ++i) acc += core.t(i) * w.entry(n - static_cast<long>(i), j);
                    if (acc != w.entry(n, j)) {
                        r.fail(tag + ": column " + std::to_string(j) + " breaks the recursion at row " +
                               std::to_string(n));
                    }
                }
            }
        }
    });
}

IdentityResult check_log_window(unsigned depth) {
    return timed("window.log_different", [&](IdentityResult& r) {
        const std::vector<Core> cores{Core({1, 1}), Core({2, -1}), Core({3, 2}),
                                      Core({0, 1, 1}), Core({1, -2, 3}), Core({2, 1, -1})};
        for (const auto& core : cores) {
            auto dw = different_window(core, 1, depth);
            for (std::size_t j = 1; j <= core.degree(); ++j) {
                ++r.cells;
                auto logged = iso_log_column(core, j, depth);
                for (unsigned n = 1; n <= depth; ++n) {
                    if (logged[n] != dw.entry(n, j)) {
                        r.fail("core " + core.to_string() + " column " + std::to_string(j) + " row " +
                               std::to_string(n) + ": L gives " + to_string(logged[n]) +
                               ", different window has " + to_string(dw.entry(n, j)));
                        break;
                    }
                }
            }
        }
    });
}

IdentityResult check_ramification_grid(int bound, unsigned p_max, bool parallel) {
    return timed("ramification.grid", [&](IdentityResult& r) {
        std::vector<unsigned> primes;
        for (unsigned p = 2; p <= p_max; ++p)
            if (is_prime(Int(p))) primes.push_back(p);
        std::vector<std::pair<Core, unsigned>> cells;
        for (std::size_t k = 2; k <= 3; ++k) {
            std::vector<int> t(k, -bound);
            while (true) {
                if (t.back() != 0) {
                    std::vector<Int> coeffs(t.begin(), t.end());
                    for (unsigned p : primes)
                        if (t.back() % static_cast<int>(p) != 0) cells.emplace_back(Core(coeffs), p);
                }
                std::size_t i = 0;
                while (i < k && t[i] == bound) t[i++] = -bound;
                if (i == k) break;
                ++t[i];
            }
        }
        auto failures = collect_failures(
            cells.size(),
            [&](std::size_t i) -> std::string {
                const auto& [core, p] = cells[i];
                auto rep = ramification_check(core, Int(p));
                if (rep.agree.value_or(true)) return {};
                std::ostringstream os;
                os << "core " << core.to_string() << " p=" << p << ": Delta=" << rep.delta
                   << (rep.divides ? " (p divides)" : " (p does not divide)") << ", c_p=" << rep.f_period.period
                   << ", c'_p=" << rep.g_period.period;
                return os.str();
            },
            parallel);
        absorb(r, cells.size(), failures);
    });
}

IdentityResult check_catalog(unsigned depth) {
    return timed("catalog.round_trip", [&](IdentityResult& r) {
        for (const auto& name : family_names()) {
            ++r.cells;
            auto e = family(name, catalog_params(name), depth);
            const std::string tag = "family " + name;
            auto ffit = fit_core_f(e.f_values, depth - 1);
            auto regen_f = gfp_values(ffit.as_core(), depth);
            if (regen_f != e.f_values) r.fail(tag + ": F round trip differs");
            if (ffit.terminating == e.core.truncated()) r.fail(tag + ": F-fit termination disagrees with the core");
            auto coeffs = e.core.coefficients();
            if (!std::equal(ffit.core.begin(), ffit.core.end(), coeffs.begin(), coeffs.begin() + std::min(coeffs.size(), ffit.core.size())) ||
                (!e.core.truncated() && ffit.core.size() != coeffs.size())) {
                r.fail(tag + ": F-fit recovered " + ffit.as_core().to_string() + ", expected " + e.core.to_string());
            }
            std::vector<Int> g(e.g_values.begin() + 1, e.g_values.end());
            auto gfit = fit_core_g(g, depth - 2);
            auto regen_g = glp_values(gfit.as_core(), depth);
            if (!std::equal(g.begin(), g.end(), regen_g.begin() + 1)) r.fail(tag + ": G round trip differs");
            if (!std::equal(gfit.core.begin(), gfit.core.end(), coeffs.begin(), coeffs.begin() + std::min(coeffs.size(), gfit.core.size()))) {
                r.fail(tag + ": G-fit recovered " + gfit.as_core().to_string());
            }
            auto glp = glp_values(e.core, depth);
            if (!std::equal(g.begin(), g.end(), glp.begin() + 1)) r.fail(tag + ": companion sequence differs from GLP values");
        }
    });
}

IdentityResult check_local_representation(unsigned depth) {
    return timed("arith.local_representation", [&](IdentityResult& r) {
        const std::vector<ArithFn> fns{divisor_count(), divisor_sum(), euler_totient(), jordan_totient(2)};
        for (const auto& f : fns) {
            ++r.cells;
            auto m = is_multiplicative(f, 60);
            if (!m.multiplicative) r.fail(f.name() + " is reported non-multiplicative");
            for (unsigned p : {2u, 3u, 5u, 7u}) {
                ++r.cells;
                try {
                    auto fit = local_representation(f, Int(p), depth, depth - 1);
                    auto values = gfp_values(fit.as_core(), depth);
                    Int power = 1;
                    for (unsigned n = 0; n <= depth; ++n, power *= p) {
                        if (values[n] != f(power.get_ui())) {
                            r.fail(f.name() + " at p=" + std::to_string(p) + ": F_" + std::to_string(n) +
                                   " differs from f(p^n)");
                            break;
                        }
                    }
                } catch (const std::exception& e) {
                    r.fail(f.name() + " at p=" + std::to_string(p) + ": " + e.what());
                }
            }
        }
    });
}

IdentityResult check_stirling(unsigned depth) {
    return timed("stirling.relations", [&](IdentityResult& r) {
        for (unsigned k = 2; k <= 8; ++k) {
            ++r.cells;
            auto rep = stirling_relation_check(k, std::max(depth, k + 1));
            if (!rep.passed()) {
                r.fail("k=" + std::to_string(k) + ": core " + show(rep.core) + " falling factorial " +
                       show(rep.falling_factorial) + " Stirling-1 row " + show(rep.stirling1_row));
            }
        }
    });
}

std::vector<IdentityResult> run_identities(const IdentityOptions& o) {
    const unsigned d = std::max(o.depth, 3u);
    std::vector<IdentityResult> out;
    out.push_back(check_wip_three_way(5, std::min(d, 10u), o.seed));
    out.push_back(check_weight_additivity(4, std::min(d, 8u), o.seed));
    out.push_back(check_hessenberg_grid(4, std::min(d, 7u), 25, o.seed, o.parallel));
    out.push_back(check_weight_form());
    out.push_back(check_log_exp_inverse(25, d, o.seed));
    out.push_back(check_log_of_gfp(d, o.seed));
    out.push_back(check_trig(5, d, o.seed));
    out.push_back(check_window(-3, static_cast<long>(d), o.seed));
    out.push_back(check_log_window(d));
    out.push_back(check_catalog(d));
    out.push_back(check_local_representation(std::min(d, 8u)));
    out.push_back(check_stirling(d));
    out.push_back(check_ramification_grid(3, 13, o.parallel));
    return out;
}

}  // namespace isobaric
