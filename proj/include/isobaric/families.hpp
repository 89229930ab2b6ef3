#ifndef ISOBARIC_FAMILIES_HPP
#define ISOBARIC_FAMILIES_HPP

#include <isobaric/arith.hpp>

#include <optional>
#include <string>
#include <vector>

namespace isobaric {

struct FamilyParams {
    std::optional<Int> p;
    std::optional<unsigned> k;
    std::optional<Int> x;
    std::optional<Int> y;
};

enum class Representability { local_f, global_f, global_g };
std::string to_string(Representability r);

struct FamilyEntry {
    std::string name;
    Core core;
    Representability representability = Representability::global_f;
    std::vector<Int> f_values;  // F_0..F_N
    std::vector<Int> g_values;  // G_1..G_N at indices 1..N
    std::optional<Int> g0;
    std::string closed_form;
};

const std::vector<std::string>& family_names();

// Core and first N values, regenerated from the core and checked against the closed form.
FamilyEntry family(const std::string& name, const FamilyParams& params, std::size_t N);

Int stirling2(unsigned n, unsigned k);
Int stirling1_unsigned(unsigned n, unsigned k);
Int triangular_number(unsigned k);

struct StirlingReport {
    unsigned k = 0;
    std::vector<Int> core;
    std::vector<Int> falling_factorial;   // signed coefficients t_j of prod (X - j)
    std::vector<Int> stirling1_row;       // c(k+1, 1..k+1)
    bool core_matches = false;
    bool stirling1_matches = false;
    bool t1_is_triangular = false;
    bool tk_is_factorial = false;
    bool passed() const { return core_matches && stirling1_matches && t1_is_triangular && tk_is_factorial; }
};

StirlingReport stirling_relation_check(unsigned k, unsigned depth);

}  // namespace isobaric

#endif
