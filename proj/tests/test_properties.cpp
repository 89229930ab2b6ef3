#include <doctest.h>

#include <isobaric/arith.hpp>
#include <isobaric/identities.hpp>
#include <isobaric/transform.hpp>
#include <isobaric/wip.hpp>

using namespace isobaric;

namespace {

void require_green(const IdentityResult& r) {
    INFO(r.name << ": " << (r.failures.empty() ? std::string() : r.failures.front()));
    CHECK(r.cells > 0);
    CHECK(r.passed());
}

}  // namespace

TEST_SUITE("properties") {
    TEST_CASE("identity checks hold across seeds") {
        for (std::uint64_t seed : {1ULL, 7ULL, 12345ULL}) {
            CAPTURE(seed);
            require_green(check_wip_three_way(4, 7, seed));
            require_green(check_weight_additivity(3, 6, seed));
            require_green(check_hessenberg_grid(3, 6, 5, seed, false));
            require_green(check_log_exp_inverse(6, 12, seed));
            require_green(check_log_of_gfp(10, seed));
            require_green(check_trig(3, 10, seed));
            require_green(check_window(-3, 8, seed));
        }
    }

    TEST_CASE("fits recover random cores") {
        for (const auto& core : random_cores(40, 5, 6, 2024)) {
            CAPTURE(core.to_string());
            const std::size_t k = core.degree();
            auto f = gfp_values(core, 2 * k + 4);
            auto ffit = fit_core_f(f, k + 2);
            CHECK(ffit.terminating);
            CHECK(ffit.as_core() == core);
            CHECK(ffit.minimal == true);

            auto g = glp_values(core, 2 * k + 4);
            std::vector<Int> g1(g.begin() + 1, g.end());
            auto gfit = fit_core_g(g1, k + 2);
            CHECK(gfit.as_core() == core);

            auto cs = companion_sequence(core, 2 * k + 4);
            CHECK(cs.values == g);
        }
    }

    TEST_CASE("L(F) = G and E(G) = F at random cores") {
        for (const auto& core : random_cores(20, 4, 5, 77)) {
            const std::size_t N = 14;
            auto f = to_rationals(gfp_values(core, N));
            auto g = to_rationals(glp_values(core, N));
            CHECK(iso_log(core, f, N) == g);
            CHECK(iso_exp(core, g, N) == f);
        }
    }

    TEST_CASE("core product adds Lucas sequences") {
        auto cores = random_cores(12, 3, 4, 99);
        for (std::size_t i = 0; i + 1 < cores.size(); i += 2) {
            auto c = core_product(cores[i], cores[i + 1]);
            auto ga = glp_values(cores[i], 12), gb = glp_values(cores[i + 1], 12), gc = glp_values(c, 12);
            for (std::size_t n = 1; n <= 12; ++n) CHECK(gc[n] == ga[n] + gb[n]);
        }
    }
}
