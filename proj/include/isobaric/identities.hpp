#ifndef ISOBARIC_IDENTITIES_HPP
#define ISOBARIC_IDENTITIES_HPP

#include <isobaric/arith.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace isobaric {

struct IdentityResult {
    std::string name;
    std::size_t cells = 0;
    std::size_t failure_count = 0;
    std::vector<std::string> failures;  // first few, verbatim
    double seconds = 0;

    bool passed() const { return failure_count == 0; }
    void fail(std::string message);
};

struct IdentityOptions {
    unsigned depth = 12;
    std::uint64_t seed = 20240611;
    bool parallel = true;
};

// Random cores with entries in [-bound, bound] and t_k != 0.
std::vector<Core> random_cores(std::size_t count, std::size_t k_max, int bound, std::uint64_t seed);

// Explicit formula = recursion = convolution form = symbolic Hessenberg permanent.
IdentityResult check_wip_three_way(unsigned k_max, unsigned n_max, std::uint64_t seed);
// P(w + w') = P(w) + P(w').
IdentityResult check_weight_additivity(unsigned k_max, unsigned n_max, std::uint64_t seed);
// perm_naive(H+) = perm_hess(H+) = det(H-) = explicit value, det(H+) = perm(H-).
IdentityResult check_hessenberg_grid(unsigned k_max, unsigned n_max, unsigned samples,
                                     std::uint64_t seed, bool parallel);
// Symbolic 4 x 4 H+ permanent in weight-linear form.
IdentityResult check_weight_form();
// E(L(P)) = P and L(E(P)) = P on random rational sequences.
IdentityResult check_log_exp_inverse(unsigned samples, unsigned depth, std::uint64_t seed);
// L(F) = G on catalog cores and random cores.
IdentityResult check_log_of_gfp(unsigned depth, std::uint64_t seed);
// C*C - S*S = delta, (C*C)_n = (S*S)_n, addition formulas on product cores.
IdentityResult check_trig(unsigned pairs, unsigned depth, std::uint64_t seed);
// Blocks are matrix powers, group law, right column F, traces G, column recursion.
IdentityResult check_window(long lo, long hi, std::uint64_t seed);
// Column-wise iso_log of the companion window equals the different window.
IdentityResult check_log_window(unsigned depth);
// p | Delta_k  <=>  c_p = p c'_p over all k in {2,3}, |t_j| <= bound, p <= p_max, p not | t_k.
IdentityResult check_ramification_grid(int bound, unsigned p_max, bool parallel);
// Catalog round trip through the fits and companion consistency.
IdentityResult check_catalog(unsigned depth);
// Multiplicative functions are locally F-representable.
IdentityResult check_local_representation(unsigned depth);
IdentityResult check_stirling(unsigned depth);

std::vector<IdentityResult> run_identities(const IdentityOptions& options);

}  // namespace isobaric

#endif
