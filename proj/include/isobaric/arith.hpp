#ifndef ISOBARIC_ARITH_HPP
#define ISOBARIC_ARITH_HPP

#include <isobaric/isopoly.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace isobaric {

// Arithmetic function f: N -> Z, either tabulated on 1..N or given by a rule.
class ArithFn {
public:
    using Rule = std::function<Int(std::uint64_t)>;

    ArithFn(std::string name, Rule rule, std::optional<std::uint64_t> bound = std::nullopt);
    static ArithFn from_values(std::vector<Int> values, std::string name = "f");

    Int operator()(std::uint64_t n) const;
    std::optional<std::uint64_t> bound() const { return bound_; }
    const std::string& name() const { return name_; }
    // f(1)..f(N)
    std::vector<Int> table(std::uint64_t N) const;

private:
    std::string name_;
    Rule rule_;
    std::optional<std::uint64_t> bound_;
};

ArithFn divisor_count();
ArithFn divisor_sum();
ArithFn euler_totient();
ArithFn jordan_totient(unsigned order);
ArithFn dirichlet_unit();
ArithFn constant_one();
ArithFn identity_fn();

enum class FitKind { f, g };

struct FitResult {
    FitKind kind = FitKind::f;
    // Recovered t_1..t_k when terminating, else every t_j the data determines.
    std::vector<Int> core;
    bool terminating = false;
    std::size_t k = 0;
    // Number of input values reproduced by replaying the recursion.
    std::size_t verified_length = 0;
    // Nonsingular k x k Hankel block of the data, when there is enough of it.
    std::optional<bool> minimal;

    Core as_core() const { return Core(core, !terminating); }
};

// Sequential solve t_n = v_n - sum_{j<n} t_j v_{n-j}; values start at v_0 = 1.
FitResult fit_core_f(std::span<const Int> values, std::size_t max_k);
// Sequential solve t_n = (G_n - sum_{j<n} t_j G_{n-j}) / n; values start at G_1.
FitResult fit_core_g(std::span<const Int> values, std::size_t max_k);

// (f*g)(n) = sum_{d|n} f(n/d) g(d) on 1..N.
ArithFn dirichlet_convolve(const ArithFn& f, const ArithFn& g, std::uint64_t N);

struct MultiplicativityReport {
    bool multiplicative = true;
    // First violating coprime pair (m, n) with f(mn) != f(m) f(n).
    std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
    Int product_value;  // f(mn)
    Int factor_value;   // f(m) f(n)
};
MultiplicativityReport is_multiplicative(const ArithFn& f, std::uint64_t N);

// fit_core_f on f(p^0), ..., f(p^depth).
FitResult local_representation(const ArithFn& f, const Int& p, unsigned depth, std::size_t max_k);

// How the index-0 entry of a companion sequence is reported.
struct IndexZero {
    enum class Kind { omit, core_degree, value } kind = Kind::core_degree;
    Int value = 0;

    static IndexZero omit() { return {Kind::omit, 0}; }
    static IndexZero core_degree() { return {Kind::core_degree, 0}; }
    static IndexZero fixed(Int v) { return {Kind::value, std::move(v)}; }
    static IndexZero parse(const std::string& text);
};

struct CompanionSequence {
    std::vector<Int> values;  // G_1..G_N at indices 1..N; index 0 mirrors g0 or 0
    std::optional<Int> g0;
};

// G-values by iso_log of the F-values, cross-checked against the GLP recursion.
CompanionSequence companion_sequence(const Core& core, std::size_t N,
                                     IndexZero index0 = IndexZero::core_degree());

enum class SequenceKind { f, g };

struct PeriodReport {
    SequenceKind which = SequenceKind::f;
    Int prime;
    bool invertible = true;  // p does not divide t_k
    std::uint64_t preperiod = 0;
    std::uint64_t period = 0;
};

// Period of the F (or G, with G_0 = k) sequence mod p via the k-window state.
PeriodReport period_mod(const Core& core, const Int& p, SequenceKind which);

struct RamificationReport {
    Int prime;
    Int delta;
    bool divides = false;      // p | Delta_k
    bool degenerate = false;   // p | t_k; the period relation is not asserted
    PeriodReport f_period;
    PeriodReport g_period;
    bool period_relation = false;  // c_p == p * c'_p
    std::optional<bool> agree;     // divides <=> period_relation, unless degenerate
};

RamificationReport ramification_check(const Core& core, const Int& p);

bool is_prime(const Int& n);

}  // namespace isobaric

#endif
