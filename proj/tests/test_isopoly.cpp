#include <doctest.h>

#include <isobaric/isopoly.hpp>
#include <isobaric/wip.hpp>

#include <random>

using namespace isobaric;

namespace {

IsobaricPoly t(std::size_t j) { return IsobaricPoly::variable(j); }

IsobaricPoly random_poly(std::mt19937_64& rng, std::size_t k, unsigned grade) {
    std::uniform_int_distribution<int> c(-5, 5);
    IsobaricPoly p;
    for (const auto& a : enumerate_partitions(grade, static_cast<unsigned>(k)))
        p += IsobaricPoly::monomial(a, c(rng));
    return p;
}

}  // namespace

TEST_SUITE("isopoly") {
    TEST_CASE("rendering") {
        CHECK(IsobaricPoly().to_string() == "0");
        CHECK(IsobaricPoly(Int(-3)).to_string() == "-3");
        CHECK((t(1) * t(1) * t(1) * t(1) + IsobaricPoly(3) * t(1) * t(1) * t(2) + t(2) * t(2) + IsobaricPoly(2) * t(1) * t(3) + t(4)).to_string() ==
              "t1^4 + 3 t1^2 t2 + t2^2 + 2 t1 t3 + t4");
        CHECK((-t(1) * t(2) - t(3)).to_string() == "-t1 t2 - t3");
    }

    TEST_CASE("addition") {
        CHECK((t(1) * t(1) + (-(t(1) * t(1)))).is_zero());
        IsobaricPoly f2 = t(1) * t(1) + t(2), g2 = t(1) * t(1) + IsobaricPoly(2) * t(2);
        CHECK(poly_add(f2, g2).to_string() == "2 t1^2 + 3 t2");
        CHECK(poly_add(f2, IsobaricPoly()) == f2);
        CHECK(poly_add(f2, g2).grade() == 2u);
    }

    TEST_CASE("multiplication") {
        CHECK(poly_mul(t(1), t(1)).to_string() == "t1^2");
        CHECK(poly_mul(t(1), t(1)).grade() == 2u);
        CHECK(poly_mul(t(1) * t(1) + t(2), t(2)).to_string() == "t1^2 t2 + t2^2");
        IsobaricPoly f2 = t(1) * t(1) + t(2);
        CHECK(poly_mul(f2, f2).to_string() == "t1^4 + 2 t1^2 t2 + t2^2");
    }

    TEST_CASE("evaluation") {
        auto f = gfp(2, 4);
        auto g = glp(2, 4);
        CHECK(evaluate(f[4], Core({1, 1})) == 5);
        CHECK(evaluate(g[4], Core({1, 1})) == 7);
        CHECK(evaluate(gfp(2, 3)[3], Core({2, -1})) == 4);
        CHECK(evaluate(f[4], Core({1, 1}), 3) == 2);
        CHECK(evaluate(-t(1), Core({1}), 7) == 6);
        CHECK_THROWS_AS(evaluate(t(3), Core({1, 1})), DomainError);
    }

    TEST_CASE("grading") {
        CHECK_FALSE((t(1) + t(2)).grade().has_value());
        CHECK_FALSE((t(1) + t(2)).is_homogeneous());
        CHECK((t(1) * t(2)).max_variable() == 2);
        CHECK(IsobaricPoly().is_homogeneous());
    }

    TEST_CASE("cores") {
        auto c = Core::parse("[2,-1]");
        CHECK(c == Core({2, -1}));
        CHECK(c.to_string() == "[2,-1]");
        CHECK(Core::parse("4,4").degree() == 2);
        CHECK(Core::truncated_series({4, 4}).to_string() == "[4,4,...]");
        CHECK(c.t(5) == 0);
        CHECK_THROWS_AS(Core::truncated_series({4, 4}).t(3), DomainError);
        CHECK(c.invertible());
        CHECK_FALSE(Core({1, 0}).invertible());
    }

    TEST_CASE("ring axioms by evaluation at random points") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> v(-4, 4);
        for (int trial = 0; trial < 20; ++trial) {
            auto p = random_poly(rng, 3, 2), q = random_poly(rng, 3, 3), r = random_poly(rng, 3, 1);
            CHECK((p + q) + r == p + (q + r));
            CHECK(p * q == q * p);
            CHECK((p * q) * r == p * (q * r));
            CHECK(p * (q + r) == p * q + p * r);
            CHECK((p * q).is_homogeneous());
            if (!(p * q).is_zero()) CHECK((p * q).grade() == 5u);
            for (int point = 0; point < 3; ++point) {
                Core c({v(rng), v(rng), v(rng)});
                CHECK(evaluate(p + q, c) == evaluate(p, c) + evaluate(q, c));
                CHECK(evaluate(p * q, c) == evaluate(p, c) * evaluate(q, c));
            }
        }
    }
}
