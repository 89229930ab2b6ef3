#ifndef ISOBARIC_WIP_HPP
#define ISOBARIC_WIP_HPP

#include <isobaric/isopoly.hpp>
#include <isobaric/weights.hpp>

#include <cstddef>
#include <vector>

namespace isobaric {

// P_0..P_N for one weight vector and core degree k.
struct PolySeq {
    WeightVector weight;
    std::size_t k = 0;
    std::vector<IsobaricPoly> polys;

    const IsobaricPoly& operator[](std::size_t n) const { return polys.at(n); }
    std::size_t size() const { return polys.size(); }
};

// Weighted isobaric polynomial from the partition sum. n = 0 gives 1.
IsobaricPoly wip_explicit(const WeightVector& omega, std::size_t k, unsigned n);

// P_0 = 1, P_n = sum_{j=1}^{min(n-1,k)} t_j P_{n-j} + omega_n t_n with t_m = 0 for m > k.
PolySeq wip_recursive(const WeightVector& omega, std::size_t k, unsigned n_max);

// sum_{j=1}^{min(n,k)} omega_j t_j F_{n-j}.
IsobaricPoly wip_convolution_form(const WeightVector& omega, std::size_t k, unsigned n);

// Coefficients of y^0..y^N of 1 + (sum omega_j t_j y^j) / (1 - p(y)), by
// series inversion of 1 - p(y) followed by a series product.
std::vector<IsobaricPoly> series_coefficients(const WeightVector& omega, std::size_t k,
                                              std::size_t N);
// Same series evaluated at a numeric core.
std::vector<Int> series_coefficients(const WeightVector& omega, const Core& core, std::size_t N);

// Generalized Fibonacci (all-ones weights) and Lucas (identity weights) sequences.
// Stored GLP sequences carry G_0 = k.
PolySeq gfp(std::size_t k, unsigned n_max);
PolySeq glp(std::size_t k, unsigned n_max);

// Numeric recursion at a core: index 0 holds 1, indices 1..N the evaluated WIPs.
std::vector<Int> wip_values(const WeightVector& omega, const Core& core, std::size_t N);
std::vector<Int> gfp_values(const Core& core, std::size_t N);
// Index 0 holds G_0 = k; meaningless for truncated cores, where it is left at 0.
std::vector<Int> glp_values(const Core& core, std::size_t N);

}  // namespace isobaric

#endif
