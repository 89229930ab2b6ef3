#include <doctest.h>

#include "support.hpp"

#include <isobaric/matrixops.hpp>
#include <isobaric/wip.hpp>

#include <random>

using namespace isobaric;
using isobaric::testing::parse_poly;

namespace {

std::vector<Int> eval_seq(const PolySeq& s, const Core& c) {
    std::vector<Int> out;
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(evaluate(s[i], c));
    return out;
}

std::vector<Int> ints(std::initializer_list<long> v) {
    std::vector<Int> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

// Signed elementary symmetric values: t_j = (-1)^(j-1) e_j(roots).
Core core_from_roots(const std::vector<long>& roots) {
    std::vector<Int> e{1};
    for (long r : roots) {
        std::vector<Int> next(e.size() + 1, 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            next[i] += e[i];
            next[i + 1] += e[i] * r;
        }
        e = std::move(next);
    }
    std::vector<Int> t;
    for (std::size_t j = 1; j < e.size(); ++j) t.push_back(j % 2 ? e[j] : Int(-e[j]));
    return Core(std::move(t));
}

// Complete homogeneous h_n by summing over exponent tuples.
Int complete_homogeneous(const std::vector<long>& roots, unsigned n, std::size_t i = 0) {
    if (i + 1 == roots.size()) return pow(Int(roots[i]), n);
    Int s = 0;
    for (unsigned e = 0; e <= n; ++e) s += pow(Int(roots[i]), e) * complete_homogeneous(roots, n - e, i + 1);
    return s;
}

}  // namespace

TEST_SUITE("wip") {
    TEST_CASE("explicit formula") {
        CHECK(wip_explicit(WeightVector::all_ones(), 4, 4).to_string() == "t1^4 + 3 t1^2 t2 + t2^2 + 2 t1 t3 + t4");
        CHECK(wip_explicit(WeightVector::identity(), 3, 3).to_string() == "t1^3 + 3 t1 t2 + 3 t3");
        CHECK(wip_explicit(WeightVector::all_ones(), 3, 3).to_string() == "t1^3 + 2 t1 t2 + t3");
        CHECK(wip_explicit(WeightVector::identity(), 5, 0) == IsobaricPoly(1));
        CHECK(wip_explicit(WeightVector::identity(), 2, 4) == parse_poly("t1^4 + 4 t1^2 t2 + 2 t2^2"));
    }

    TEST_CASE("recursion") {
        CHECK(eval_seq(wip_recursive(WeightVector::all_ones(), 2, 6), Core({1, 1})) == ints({1, 1, 2, 3, 5, 8, 13}));
        auto g = eval_seq(wip_recursive(WeightVector::identity(), 2, 6), Core({1, 1}));
        CHECK(std::vector<Int>(g.begin() + 1, g.end()) == ints({1, 3, 4, 7, 11, 18}));
        WeightVector w({Int(5), Int(-2), Int(9)});
        CHECK(wip_recursive(w, 3, 1)[1] == IsobaricPoly(5) * IsobaricPoly::variable(1));
    }

    TEST_CASE("convolution form") {
        WeightVector w({Int(3), Int(-7)});
        CHECK(wip_convolution_form(w, 2, 2).to_string() == "3 t1^2 - 7 t2");
        CHECK(wip_convolution_form(WeightVector::all_ones(), 4, 4) == gfp(4, 4)[4]);
        CHECK(wip_convolution_form(WeightVector::unit(1), 3, 3).to_string() == "t1^3 + t1 t2");
    }

    TEST_CASE("generating series") {
        CHECK(series_coefficients(WeightVector::all_ones(), Core({1, 1}), 5) == ints({1, 1, 2, 3, 5, 8}));
        CHECK(series_coefficients(WeightVector::identity(), Core({1, 1}), 4) == ints({1, 1, 3, 4, 7}));
        CHECK(series_coefficients(WeightVector::unit(1), Core({7}), 3) == ints({1, 7, 49, 343}));
        auto sym = series_coefficients(WeightVector::identity(), 3, 6);
        auto g = glp(3, 6);
        CHECK(sym[0] == IsobaricPoly(1));
        for (unsigned n = 1; n <= 6; ++n) CHECK(sym[n] == g[n]);
    }

    TEST_CASE("named sequences") {
        CHECK(glp(3, 2)[0] == IsobaricPoly(3));
        CHECK(gfp(3, 2)[0] == IsobaricPoly(1));
        CHECK(glp_values(Core({1, 1}), 4) == ints({2, 1, 3, 4, 7}));
        CHECK(gfp_values(Core::truncated_series({1, 1, 2, 5, 14}), 5) == ints({1, 1, 2, 5, 14, 42}));
    }

    TEST_CASE("three-way agreement with random weights") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<int> d(-6, 6);
        std::vector<WeightVector> weights{WeightVector::all_ones(), WeightVector::identity(), WeightVector::constant(3)};
        for (int i = 0; i < 5; ++i) {
            std::vector<Int> w(12);
            for (auto& x : w) x = d(rng);
            weights.emplace_back(std::move(w));
        }
        for (const auto& omega : weights) {
            for (std::size_t k = 1; k <= 5; ++k) {
                auto rec = wip_recursive(omega, k, 12);
                auto ser = series_coefficients(omega, k, 12);
                for (unsigned n = 1; n <= 12; ++n) {
                    auto ex = wip_explicit(omega, k, n);
                    CHECK(ex == rec[n]);
                    CHECK(ex == wip_convolution_form(omega, k, n));
                    CHECK(ex == ser[n]);
                    CHECK(ex.grade() == n);
                }
            }
        }
    }

    TEST_CASE("weight additivity") {
        WeightVector a({Int(2), Int(-3), Int(1), Int(4), Int(0), Int(6)});
        WeightVector b({Int(-1), Int(5), Int(5), Int(-2), Int(3), Int(1)});
        for (std::size_t k = 1; k <= 5; ++k)
            for (unsigned n = 1; n <= 6; ++n)
                CHECK(wip_explicit(a + b, k, n) == poly_add(wip_explicit(a, k, n), wip_explicit(b, k, n)));
    }

    TEST_CASE("root oracle: power sums and complete homogeneous values") {
        const std::vector<std::vector<long>> root_sets{{2}, {1, -3}, {2, 2, -1}, {1, 2, 3, -2}, {-1, 0, 4}};
        for (const auto& roots : root_sets) {
            auto core = core_from_roots(roots);
            auto f = gfp_values(core, 8);
            auto g = glp_values(core, 8);
            for (unsigned n = 1; n <= 8; ++n) {
                Int power_sum = 0;
                for (long r : roots) power_sum += pow(Int(r), n);
                CHECK(g[n] == power_sum);
                CHECK(f[n] == complete_homogeneous(roots, n));
            }
        }
    }

    TEST_CASE("weights out of range are reported") {
        WeightVector w({Int(1), Int(2)});
        CHECK_THROWS_AS(wip_explicit(w, 3, 3), DomainError);
        CHECK(WeightVector::parse("glp")(5) == 5);
        CHECK(WeightVector::parse("const:4")(9) == 4);
        CHECK(WeightVector::parse("1,2,3")(3) == 3);
    }
}
