#include <isobaric/arith.hpp>
#include <isobaric/matrixops.hpp>
#include <isobaric/transform.hpp>
#include <isobaric/wip.hpp>

#include <memory>
#include <numeric>

namespace isobaric {

ArithFn::ArithFn(std::string name, Rule rule, std::optional<std::uint64_t> bound)
    : name_(std::move(name)), rule_(std::move(rule)), bound_(bound) {}

ArithFn ArithFn::from_values(std::vector<Int> values, std::string name) {
    const auto n = static_cast<std::uint64_t>(values.size());
    auto table = std::make_shared<std::vector<Int>>(std::move(values));
    return ArithFn(std::move(name), [table](std::uint64_t m) { return (*table)[m - 1]; }, n);
}

Int ArithFn::operator()(std::uint64_t n) const {
    if (n == 0) throw DomainError(name_ + ": arithmetic functions start at 1");
    if (bound_ && n > *bound_) {
        throw DomainError(name_ + " is only known on 1.." + std::to_string(*bound_) + "; f(" +
                          std::to_string(n) + ") requested");
    }
    return rule_(n);
}

std::vector<Int> ArithFn::table(std::uint64_t N) const {
    std::vector<Int> out;
    out.reserve(N);
    for (std::uint64_t n = 1; n <= N; ++n) out.push_back((*this)(n));
    return out;
}

namespace {

// Prime factorisation by trial division; inputs here stay small.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace

ArithFn divisor_count() {
    return ArithFn("tau", [](std::uint64_t n) {
        Int r = 1;
        for (auto [p, e] : factorize(n)) r *= e + 1;
        return r;
    });
}

ArithFn divisor_sum() {
    return ArithFn("sigma", [](std::uint64_t n) {
        Int r = 1;
        for (auto [p, e] : factorize(n)) r *= (pow(Int(p), e + 1) - 1) / (Int(p) - 1);
        return r;
    });
}

ArithFn euler_totient() { return jordan_totient(1); }

ArithFn jordan_totient(unsigned order) {
    if (order == 0) throw DomainError("Jordan totient order must be positive");
    return ArithFn("J" + std::to_string(order), [order](std::uint64_t n) {
        Int r = 1;
        for (auto [p, e] : factorize(n)) {
            Int pk = pow(Int(p), order);
            r *= pow(pk, e - 1) * (pk - 1);
        }
        return r;
    });
}

ArithFn dirichlet_unit() {
    return ArithFn("epsilon", [](std::uint64_t n) { return Int(n == 1 ? 1 : 0); });
}

ArithFn constant_one() {
    return ArithFn("one", [](std::uint64_t) { return Int(1); });
}

ArithFn identity_fn() {
    return ArithFn("id", [](std::uint64_t n) { return Int(static_cast<unsigned long>(n)); });
}

namespace {

void finish_fit(FitResult& fit, std::vector<Int> solved, std::size_t max_k) {
    std::size_t last = 0;
    for (std::size_t j = 1; j <= solved.size(); ++j)
        if (solved[j - 1] != 0) last = j;
    fit.terminating = last <= max_k;
    if (fit.terminating) {
        solved.resize(last);
        fit.k = last;
    } else {
        fit.k = solved.size();
    }
    fit.core = std::move(solved);
}

std::optional<bool> hankel_nonsingular(std::span<const Int> v, std::size_t k) {
    if (k == 0) return true;
    if (v.size() < 2 * k - 1) return std::nullopt;
    Matrix<Int> h(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) h(i, j) = v[i + j];
    return determinant_bareiss(h) != 0;
}

}  // namespace

FitResult fit_core_f(std::span<const Int> values, std::size_t max_k) {
    if (values.empty() || values[0] != 1) {
        throw DomainError("fit_core_f: the sequence must start with v_0 = 1");
    }
    if (values.size() < max_k + 2) {
        throw DomainError("fit_core_f: need at least max_k + 2 = " + std::to_string(max_k + 2) +
                          " values, got " + std::to_string(values.size()));
    }
    const std::size_t L = values.size();
    std::vector<Int> t(L - 1, 0);
    for (std::size_t n = 1; n < L; ++n) {
        Int acc = values[n];
        for (std::size_t j = 1; j < n; ++j) acc -= t[j - 1] * values[n - j];
        t[n - 1] = acc;
    }
    FitResult fit;
    fit.kind = FitKind::f;
    finish_fit(fit, std::move(t), max_k);

    auto replay = gfp_values(fit.as_core(), L - 1);
    for (std::size_t n = 0; n < L; ++n) {
        if (replay[n] != values[n]) {
            throw ConsistencyError("fit_core_f: replay diverges at index " + std::to_string(n));
        }
    }
    fit.verified_length = L;
    if (fit.terminating) fit.minimal = hankel_nonsingular(values, fit.k);
    return fit;
}

FitResult fit_core_g(std::span<const Int> values, std::size_t max_k) {
    if (values.size() < max_k + 2) {
        throw DomainError("fit_core_g: need at least max_k + 2 = " + std::to_string(max_k + 2) +
                          " values, got " + std::to_string(values.size()));
    }
    const std::size_t L = values.size();
    auto G = [&](std::size_t n) -> const Int& { return values[n - 1]; };
    std::vector<Int> t(L, 0);
    for (std::size_t n = 1; n <= L; ++n) {
        Int acc = G(n);
        for (std::size_t j = 1; j < n; ++j) acc -= t[j - 1] * G(n - j);
        Int nn = static_cast<unsigned long>(n);
        if (!mpz_divisible_p(acc.get_mpz_t(), nn.get_mpz_t())) {
            throw NotRepresentableError("fit_core_g: t_" + std::to_string(n) + " = " +
                                        acc.get_str() + "/" + nn.get_str() +
                                        " is not an integer");
        }
        t[n - 1] = divide_exact(acc, nn);
    }
    FitResult fit;
    fit.kind = FitKind::g;
    finish_fit(fit, std::move(t), max_k);

    auto replay = wip_values(WeightVector::identity(), fit.as_core(), L);
    for (std::size_t n = 1; n <= L; ++n) {
        if (replay[n] != G(n)) {
            throw ConsistencyError("fit_core_g: replay diverges at index " + std::to_string(n));
        }
    }
    fit.verified_length = L;
    return fit;
}

ArithFn dirichlet_convolve(const ArithFn& f, const ArithFn& g, std::uint64_t N) {
    std::vector<Int> out(N, 0);
    for (std::uint64_t d = 1; d <= N; ++d) {
        Int gd = g(d);
        if (gd == 0) continue;
        for (std::uint64_t m = d; m <= N; m += d) out[m - 1] += f(m / d) * gd;
    }
    return ArithFn::from_values(std::move(out), f.name() + "*" + g.name());
}

MultiplicativityReport is_multiplicative(const ArithFn& f, std::uint64_t N) {
    MultiplicativityReport report;
    for (std::uint64_t m = 2; m * (m + 1) <= N; ++m) {
        for (std::uint64_t n = m + 1; m * n <= N; ++n) {
            if (std::gcd(m, n) != 1) continue;
            Int lhs = f(m * n);
            Int rhs = f(m) * f(n);
            if (lhs != rhs) {
                report.multiplicative = false;
                report.witness = std::make_pair(m, n);
                report.product_value = lhs;
                report.factor_value = rhs;
                return report;
            }
        }
    }
    if (f(1) != 1) {
        report.multiplicative = false;
        report.witness = std::make_pair(std::uint64_t{1}, std::uint64_t{1});
        report.product_value = f(1);
        report.factor_value = f(1) * f(1);
    }
    return report;
}

FitResult local_representation(const ArithFn& f, const Int& p, unsigned depth, std::size_t max_k) {
    if (!is_prime(p)) throw DomainError("local_representation: " + p.get_str() + " is not prime");
    std::vector<Int> values;
    Int power = 1;
    for (unsigned n = 0; n <= depth; ++n) {
        if (!power.fits_ulong_p()) throw DomainError("local_representation: p^depth too large");
        values.push_back(f(power.get_ui()));
        power *= p;
    }
    return fit_core_f(values, max_k);
}

IndexZero IndexZero::parse(const std::string& text) {
    if (text == "omit") return omit();
    if (text == "degree" || text == "k") return core_degree();
    return fixed(parse_int(text));
}

CompanionSequence companion_sequence(const Core& core, std::size_t N, IndexZero index0) {
    auto f = to_rationals(gfp_values(core, N));
    auto logged = iso_log(core, f, N, Rational(0));
    auto recursion = wip_values(WeightVector::identity(), core, N);
    CompanionSequence out;
    out.values.assign(N + 1, 0);
    for (std::size_t n = 1; n <= N; ++n) {
        Int g = to_int(logged[n]);
        if (g != recursion[n]) {
            throw ConsistencyError("companion_sequence: iso_log and the GLP recursion disagree at n = " +
                                   std::to_string(n));
        }
        out.values[n] = g;
    }
    switch (index0.kind) {
        case IndexZero::Kind::omit:
            break;
        case IndexZero::Kind::core_degree:
            if (core.truncated()) {
                throw DomainError("companion_sequence: a series core has no degree for G_0; "
                                  "pass an explicit index-0 value or omit it");
            }
            out.g0 = Int(static_cast<unsigned long>(core.degree()));
            break;
        case IndexZero::Kind::value:
            out.g0 = index0.value;
            break;
    }
    if (out.g0) out.values[0] = *out.g0;
    return out;
}

bool is_prime(const Int& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

namespace {

using State = std::vector<std::uint64_t>;

struct Stepper {
    std::vector<std::uint64_t> t;  // t_1..t_k mod p
    std::uint64_t p;

    void operator()(State& s) const {
        const std::size_t k = t.size();
        unsigned __int128 acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            acc += static_cast<unsigned __int128>(t[j - 1]) * s[k - j];
            acc %= p;
        }
        for (std::size_t i = 0; i + 1 < k; ++i) s[i] = s[i + 1];
        s[k - 1] = static_cast<std::uint64_t>(acc);
    }
};

std::uint64_t reduce(const Int& v, const Int& p) {
    Int r = v % p;
    if (r < 0) r += p;
    return r.get_ui();
}

}  // namespace

PeriodReport period_mod(const Core& core, const Int& p, SequenceKind which) {
    if (!is_prime(p)) throw DomainError("period_mod: " + p.get_str() + " is not prime");
    if (core.truncated() || core.degree() == 0) throw DomainError("period_mod needs a finite core");
    if (!p.fits_ulong_p() || p > Int(1UL << 32)) throw DomainError("period_mod: prime too large");
    const std::size_t k = core.degree();
    PeriodReport report;
    report.which = which;
    report.prime = p;
    report.invertible = core.t(k) % p != 0;

    Stepper step{{}, p.get_ui()};
    for (std::size_t j = 1; j <= k; ++j) step.t.push_back(reduce(core.t(j), p));
    auto initial_values = which == SequenceKind::f ? gfp_values(core, k - 1) : glp_values(core, k - 1);
    State start;
    for (const Int& v : initial_values) start.push_back(reduce(v, p));

    // Brent's cycle detection on the state sequence.
    std::uint64_t power = 1, lambda = 1;
    State tortoise = start, hare = start;
    step(hare);
    while (tortoise != hare) {
        if (power == lambda) {
            tortoise = hare;
            power *= 2;
            lambda = 0;
        }
        step(hare);
        ++lambda;
    }
    std::uint64_t mu = 0;
    tortoise = start;
    hare = start;
    for (std::uint64_t i = 0; i < lambda; ++i) step(hare);
    while (tortoise != hare) {
        step(tortoise);
        step(hare);
        ++mu;
    }
    report.period = lambda;
    report.preperiod = mu;
    if (report.invertible && mu != 0) {
        throw ConsistencyError("period_mod: invertible recursion with a preperiod");
    }
    return report;
}

RamificationReport ramification_check(const Core& core, const Int& p) {
    if (!is_prime(p)) throw DomainError("ramification_check: " + p.get_str() + " is not prime");
    if (core.degree() < 2) throw DomainError("ramification_check: core degree must be at least 2");
    RamificationReport r;
    r.prime = p;
    r.delta = different_det(core);
    r.divides = r.delta % p == 0;
    r.f_period = period_mod(core, p, SequenceKind::f);
    r.g_period = period_mod(core, p, SequenceKind::g);
    r.degenerate = !r.f_period.invertible;
    r.period_relation = Int(static_cast<unsigned long>(r.f_period.period)) ==
                        p * static_cast<unsigned long>(r.g_period.period);
    if (!r.degenerate) r.agree = r.divides == r.period_relation;
    return r;
}

}  // namespace isobaric
