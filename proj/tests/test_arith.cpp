#include <doctest.h>

#include <isobaric/arith.hpp>
#include <isobaric/wip.hpp>

using namespace isobaric;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) {
    std::vector<Int> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

ArithFn n_plus_one() {
    return ArithFn("n+1", [](std::uint64_t n) { return Int(static_cast<unsigned long>(n + 1)); });
}

// Brute-force period of x_n mod p from the defining recursion.
std::uint64_t brute_period(std::vector<long> t, std::vector<long> start, long p) {
    const std::size_t k = t.size();
    auto state = start;
    for (auto& x : state) x = ((x % p) + p) % p;
    auto first = state;
    for (std::uint64_t step = 1; step < 100000; ++step) {
        long next = 0;
        for (std::size_t j = 1; j <= k; ++j) next += t[j - 1] * state[k - j];
        next = ((next % p) + p) % p;
        state.erase(state.begin());
        state.push_back(next);
        if (state == first) return step;
    }
    return 0;
}

}  // namespace

TEST_SUITE("arith") {
    TEST_CASE("F-fit") {
        auto tau = fit_core_f(ints({1, 2, 3, 4, 5, 6}), 4);
        CHECK(tau.core == ints({2, -1}));
        CHECK(tau.terminating);
        CHECK(tau.k == 2);
        CHECK(tau.verified_length == 6);
        CHECK(tau.minimal == true);

        auto sigma = fit_core_f(ints({1, 4, 13, 40}), 2);
        CHECK(sigma.core == ints({4, -3}));
        CHECK(sigma.terminating);

        auto catalan = fit_core_f(ints({1, 1, 2, 5, 14, 42}), 4);
        CHECK_FALSE(catalan.terminating);
        CHECK(catalan.core == ints({1, 1, 2, 5, 14}));
        CHECK(catalan.as_core().truncated());
    }

    TEST_CASE("F-fit preconditions") {
        CHECK_THROWS_AS(fit_core_f(ints({2, 4, 8}), 1), DomainError);
        CHECK_THROWS_AS(fit_core_f(ints({1, 2, 3}), 2), DomainError);
    }

    TEST_CASE("G-fit") {
        auto perrin = fit_core_g(ints({0, 2, 3, 2, 5, 5, 7}), 4);
        CHECK(perrin.core == ints({0, 1, 1}));
        CHECK(perrin.terminating);
        CHECK(fit_core_g(ints({1, 3, 4, 7, 11}), 3).core == ints({1, 1}));
        CHECK(fit_core_g(ints({3, 3, 3, 3, 3, 3}), 4).core == ints({3, -3, 1}));
        CHECK_THROWS_AS(fit_core_g(ints({1, 2, 4, 8}), 2), NotRepresentableError);
    }

    TEST_CASE("Dirichlet convolution") {
        auto one = constant_one();
        CHECK(dirichlet_convolve(one, one, 6)(6) == 4);
        CHECK(dirichlet_convolve(identity_fn(), one, 4)(4) == 7);
        auto f = n_plus_one();
        auto fe = dirichlet_convolve(f, dirichlet_unit(), 30);
        for (std::uint64_t n = 1; n <= 30; ++n) CHECK(fe(n) == f(n));
        auto tau = divisor_count();
        auto conv = dirichlet_convolve(one, one, 60);
        for (std::uint64_t n = 1; n <= 60; ++n) CHECK(conv(n) == tau(n));
        CHECK_THROWS_AS(conv(61), DomainError);
    }

    TEST_CASE("classical functions") {
        CHECK(divisor_count()(12) == 6);
        CHECK(divisor_sum()(12) == 28);
        CHECK(euler_totient()(36) == 12);
        CHECK(jordan_totient(2)(6) == 24);
        CHECK(ArithFn::from_values(ints({1, 3, 5}))(3) == 5);
        CHECK_THROWS_AS(ArithFn::from_values(ints({1, 3}))(3), DomainError);
    }

    TEST_CASE("multiplicativity") {
        CHECK(is_multiplicative(divisor_count(), 60).multiplicative);
        CHECK(is_multiplicative(dirichlet_unit(), 60).multiplicative);
        auto bad = is_multiplicative(n_plus_one(), 60);
        CHECK_FALSE(bad.multiplicative);
        REQUIRE(bad.witness);
        CHECK(bad.witness->first == 2);
        CHECK(bad.witness->second == 3);
        CHECK(bad.product_value == 7);
        CHECK(bad.factor_value == 12);
        auto doubled = is_multiplicative(ArithFn("2", [](std::uint64_t) { return Int(2); }), 1);
        CHECK_FALSE(doubled.multiplicative);
        CHECK(doubled.witness->first == 1);
    }

    TEST_CASE("local representation") {
        auto phi = local_representation(euler_totient(), 5, 4, 3);
        CHECK_FALSE(phi.terminating);
        CHECK(phi.core == ints({4, 4, 4, 4}));
        auto j2 = local_representation(jordan_totient(2), 3, 5, 4);
        CHECK(j2.core == ints({8, 8, 8, 8, 8}));
        auto tau = local_representation(divisor_count(), 2, 5, 4);
        CHECK(tau.core == ints({2, -1}));
        CHECK_THROWS_AS(local_representation(divisor_count(), 4, 5, 4), DomainError);
    }

    TEST_CASE("companion sequences") {
        std::vector<Int> cat(8);
        for (std::size_t j = 1; j <= 8; ++j) cat[j - 1] = binomial(2 * (j - 1), j - 1) / Int(j);
        auto c = companion_sequence(Core::truncated_series(cat), 4, IndexZero::omit());
        CHECK(std::vector<Int>(c.values.begin() + 1, c.values.end()) == ints({1, 3, 10, 35}));
        CHECK_FALSE(c.g0);

        auto phi = companion_sequence(Core::truncated_series(std::vector<Int>(6, 6)), 6, IndexZero::fixed(2));
        CHECK(*phi.g0 == 2);
        for (unsigned n = 1; n <= 6; ++n) CHECK(phi.values[n] == pow(Int(7), n) - 1);

        auto st = companion_sequence(Core({6, -11, 6}), 3);
        CHECK(*st.g0 == 3);
        CHECK(std::vector<Int>(st.values.begin() + 1, st.values.end()) == ints({6, 14, 36}));
        CHECK_THROWS_AS(companion_sequence(Core::truncated_series({1, 1}), 2, IndexZero::core_degree()), DomainError);
        CHECK(IndexZero::parse("omit").kind == IndexZero::Kind::omit);
        CHECK(IndexZero::parse("2").value == 2);
    }

    TEST_CASE("periods") {
        CHECK(period_mod(Core({1, 1}), 5, SequenceKind::f).period == 20);
        CHECK(period_mod(Core({1, 1}), 5, SequenceKind::g).period == 4);
        CHECK(period_mod(Core({2, -1}), 7, SequenceKind::f).period == 7);
        auto degenerate = period_mod(Core({4, -3}), 3, SequenceKind::f);
        CHECK_FALSE(degenerate.invertible);
        auto pre = period_mod(Core({0, 2}), 2, SequenceKind::f);
        CHECK_FALSE(pre.invertible);
        CHECK(pre.preperiod == 1);
        CHECK(pre.period == 1);
        CHECK_THROWS_AS(period_mod(Core({1, 1}), 4, SequenceKind::f), DomainError);
    }

    TEST_CASE("periods match brute force") {
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
            for (const auto& t : std::vector<std::vector<long>>{{1, 1}, {2, 1}, {1, -1}, {0, 1, 1}, {3, -2, 1}}) {
                if (t.back() % p == 0) continue;
                std::vector<Int> coeffs(t.begin(), t.end());
                Core core(coeffs);
                auto f = gfp_values(core, t.size() - 1), g = glp_values(core, t.size() - 1);
                std::vector<long> fs, gs;
                for (auto& x : f) fs.push_back(x.get_si());
                for (auto& x : g) gs.push_back(x.get_si());
                CHECK(period_mod(core, p, SequenceKind::f).period == brute_period(t, fs, p));
                CHECK(period_mod(core, p, SequenceKind::g).period == brute_period(t, gs, p));
            }
        }
    }

    TEST_CASE("ramification") {
        auto fib5 = ramification_check(Core({1, 1}), 5);
        CHECK(fib5.delta == -5);
        CHECK(fib5.divides);
        CHECK(fib5.f_period.period == 20);
        CHECK(fib5.g_period.period == 4);
        CHECK(fib5.agree == true);

        auto fib3 = ramification_check(Core({1, 1}), 3);
        CHECK_FALSE(fib3.divides);
        CHECK(fib3.f_period.period == 8);
        CHECK(fib3.g_period.period == 8);
        CHECK_FALSE(fib3.period_relation);
        CHECK(fib3.agree == true);

        auto tau7 = ramification_check(Core({2, -1}), 7);
        CHECK(tau7.delta == 0);
        CHECK(tau7.f_period.period == 7);
        CHECK(tau7.g_period.period == 1);
        CHECK(tau7.agree == true);

        auto sigma3 = ramification_check(Core({4, -3}), 3);
        CHECK(sigma3.degenerate);
        CHECK_FALSE(sigma3.agree.has_value());
    }
}
