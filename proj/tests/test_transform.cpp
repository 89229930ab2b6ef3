#include <doctest.h>

#include <isobaric/matrixops.hpp>
#include <isobaric/transform.hpp>
#include <isobaric/wip.hpp>

#include <random>

using namespace isobaric;

namespace {

std::vector<Rational> q(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

std::vector<Rational> sub(std::vector<Rational> a, const std::vector<Rational>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

std::vector<Rational> add(std::vector<Rational> a, const std::vector<Rational>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Core random_core(std::mt19937_64& rng, std::size_t k) {
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<Int> t(k);
    for (auto& x : t) x = d(rng);
    while (t.back() == 0) t.back() = d(rng);
    return Core(t);
}

}  // namespace

TEST_SUITE("transform") {
    TEST_CASE("convolution") {
        CHECK(convolve<Rational>(q({1, 1, 2, 3, 5}), q({1, -1, -1, 0, 0}), 4) == q({1, 0, 0, 0, 0}));
        auto f = to_rationals(gfp_values(Core({1, 1}), 3));
        CHECK(convolve<Rational>(f, f, 3)[3] == 10);
        std::vector<Rational> p{Rational(1, 2), 3, Rational(-7, 3), 2};
        CHECK(convolve<Rational>(p, delta(3), 3) == p);
        CHECK_THROWS_AS(convolve<Rational>(q({1, 2}), q({1, 2, 3}), 2), DomainError);
    }

    TEST_CASE("convolution is commutative, associative and distributive") {
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<int> d(-9, 9);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rational> a(8), b(8), c(8);
            for (std::size_t i = 0; i < 8; ++i) {
                a[i] = Rational(d(rng)) / 2;
                b[i] = d(rng);
                c[i] = Rational(d(rng)) / 3;
            }
            auto ab = convolve<Rational>(a, b, 7);
            CHECK(ab == convolve<Rational>(b, a, 7));
            CHECK(convolve<Rational>(ab, c, 7) == convolve<Rational>(a, convolve<Rational>(b, c, 7), 7));
            CHECK(convolve<Rational>(a, add(b, c), 7) == add(ab, convolve<Rational>(a, c, 7)));
        }
    }

    TEST_CASE("convolution inverse") {
        auto f = to_rationals(gfp_values(Core({1, 1}), 5));
        CHECK(conv_inverse<Rational>(f, 5) == q({1, -1, -1, 0, 0, 0}));
        CHECK(conv_inverse<Rational>(delta(4), 4) == delta(4));
        CHECK(conv_inverse<Rational>(q({1, 2, 3, 4}), 3) == q({1, -2, 1, 0}));
        CHECK_THROWS_AS(conv_inverse<Rational>(q({0, 1}), 1), NotInvertibleError);
        auto half = conv_inverse<Rational>(q({2, 1, 0}), 2);
        CHECK(half == std::vector<Rational>{Rational(1, 2), Rational(-1, 4), Rational(1, 8)});
    }

    TEST_CASE("isobaric log and exp") {
        Core fib({1, 1});
        auto f = to_rationals(gfp_values(fib, 5));
        auto g = to_rationals(glp_values(fib, 5));
        auto l = iso_log(fib, f, 5);
        CHECK(std::vector<Rational>(l.begin() + 1, l.end()) == q({1, 3, 4, 7, 11}));
        CHECK(l[0] == 2);
        CHECK(iso_exp(fib, g, 5) == f);
        std::vector<Rational> p{0, Rational(5, 7), 2};
        CHECK(iso_log(fib, p, 2, Rational(0))[1] == Rational(5, 7));
    }

    TEST_CASE("symbolic log of GFP is GLP") {
        auto f = gfp(4, 8);
        auto g = glp(4, 8);
        auto l = iso_log(4, f.polys, 8);
        auto e = iso_exp(4, g.polys, 8);
        for (unsigned n = 1; n <= 8; ++n) {
            CHECK(l[n] == g[n]);
            CHECK(e[n] == f[n]);
        }
    }

    TEST_CASE("log and exp are mutually inverse") {
        std::mt19937_64 rng(23);
        std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
        for (int trial = 0; trial < 25; ++trial) {
            auto core = random_core(rng, 1 + trial % 4);
            std::vector<Rational> p(26, 0);
            for (std::size_t n = 1; n <= 25; ++n) {
                p[n] = Rational(num(rng), den(rng));
                p[n].canonicalize();
            }
            auto le = iso_log(core, iso_exp(core, p, 25, Rational(0)), 25, Rational(0));
            auto el = iso_exp(core, iso_log(core, p, 25, Rational(0)), 25, Rational(0));
            CHECK(le == p);
            CHECK(el == p);
        }
    }

    TEST_CASE("isosine and isocosine") {
        auto t = isotrig(Core({1, 1}), 4);
        CHECK(t.sine[0] == 0);
        CHECK(t.cosine[0] == 1);
        CHECK(t.sine[1] == 1);
        CHECK(t.cosine[1] == 0);
        CHECK(t.cosine[2] == Rational(1, 2));
        CHECK(t.sine[2] == Rational(3, 2));
        auto def = isotrig_from_glp(Core({1, 1}), to_rationals(glp_values(Core({1, 1}), 4)), 4);
        CHECK(def.sine == t.sine);
        CHECK(def.cosine == t.cosine);
    }

    TEST_CASE("C*C - S*S = delta on random cores") {
        std::mt19937_64 rng(29);
        for (int trial = 0; trial < 8; ++trial) {
            auto core = random_core(rng, 1 + trial % 4);
            auto t = isotrig(core, 20);
            auto cc = convolve<Rational>(t.cosine, t.cosine, 20);
            auto ss = convolve<Rational>(t.sine, t.sine, 20);
            CHECK(sub(cc, ss) == delta(20));
            CHECK(cc[0] == 1);
            for (std::size_t n = 1; n <= 20; ++n) CHECK(cc[n] == ss[n]);
        }
    }

    TEST_CASE("core product") {
        auto c = core_product(Core({1, 1}), Core({2, 1}));
        CHECK(c == Core({3, 0, -3, -1}));
        CHECK(core_product(Core({4, -1, 2}), Core(std::vector<Int>{})) == Core({4, -1, 2}));
        auto g = glp_values(c, 3);
        CHECK(std::vector<Int>(g.begin() + 1, g.end()) == std::vector<Int>{3, 9, 18});
        CHECK_THROWS_AS(core_product(Core::truncated_series({1}), Core({1})), DomainError);
    }

    TEST_CASE("addition formulas") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 5; ++trial) {
            auto a = random_core(rng, 1 + trial % 3), b = random_core(rng, 1 + (trial + 1) % 4);
            auto c = core_product(a, b);
            auto ta = isotrig(a, 15), tb = isotrig(b, 15), tc = isotrig(c, 15);
            auto conv = [](const std::vector<Rational>& x, const std::vector<Rational>& y) {
                return convolve<Rational>(x, y, 15);
            };
            CHECK(tc.cosine == add(conv(ta.cosine, tb.cosine), conv(ta.sine, tb.sine)));
            CHECK(tc.sine == add(conv(ta.sine, tb.cosine), conv(ta.cosine, tb.sine)));
        }
    }

    TEST_CASE("column-wise log of the companion window is the different window") {
        for (const Core& core : {Core({1, 1}), Core({2, -1}), Core({3, 2}), Core({0, 1, 1}), Core({1, -2, 3})}) {
            auto dw = different_window(core, 1, 10);
            for (std::size_t j = 1; j <= core.degree(); ++j) {
                auto l = iso_log_column(core, j, 10);
                for (long n = 1; n <= 10; ++n) CHECK(l[n] == dw.entry(n, j));
            }
        }
        CHECK_THROWS_AS(iso_log_column(Core({1, 1}), 3, 4), DomainError);
    }
}
