#include <isobaric/families.hpp>
#include <isobaric/wip.hpp>

#include <algorithm>
#include <functional>

namespace isobaric {

std::string to_string(Representability r) {
    switch (r) {
        case Representability::local_f: return "locally F-representable";
        case Representability::global_f: return "globally F-representable";
        case Representability::global_g: return "globally G-representable";
    }
    return "";
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names{
        "tau",  "sigma",    "totient", "jordan",     "catalan",
        "chebyshev_u", "stirling2_col", "triangular", "pell", "pell_lucas",
        "fibonacci_bivariate", "perrin", "perrin_exponential"};
    return names;
}

Int stirling2(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int sum = 0;
    for (unsigned i = 0; i <= k; ++i) {
        Int term = binomial(k, i) * pow(Int(k - i), n);
        if (i % 2) sum -= term;
        else sum += term;
    }
    return divide_exact(sum, factorial(k));
}

Int stirling1_unsigned(unsigned n, unsigned k) {
    std::vector<Int> row{1};
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<Int> next(m + 1, 0);
        for (unsigned j = 1; j <= m; ++j) {
            next[j] = row[j - 1];
            if (j < m) next[j] += Int(m - 1) * row[j];
        }
        row = std::move(next);
    }
    return k <= n ? row[k] : Int(0);
}

Int triangular_number(unsigned k) { return Int(k) * (k + 1) / 2; }

namespace {

using ValueFn = std::function<Int(unsigned)>;

Int prime_param(const FamilyParams& params, const std::string& family) {
    Int p = params.p.value_or(2);
    if (!is_prime(p)) throw DomainError("family " + family + ": p = " + p.get_str() + " is not prime");
    return p;
}

// Coefficients t_1..t_k of prod_{j=1}^k (X - j) written as X^k - t_1 X^{k-1} - ... - t_k.
std::vector<Int> falling_factorial_core(unsigned k) {
    std::vector<Int> poly{1};  // ascending coefficients of prod (X - j)
    for (unsigned j = 1; j <= k; ++j) {
        std::vector<Int> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= Int(j) * poly[i];
        }
        poly = std::move(next);
    }
    std::vector<Int> t(k);
    for (unsigned j = 1; j <= k; ++j) t[j - 1] = -poly[k - j];
    return t;
}

// Z[sqrt 2]: (a + b sqrt2)^n.
std::pair<Int, Int> sqrt2_power(const Int& a, const Int& b, unsigned n) {
    Int x = 1, y = 0;
    for (unsigned i = 0; i < n; ++i) {
        Int nx = x * a + 2 * y * b;
        Int ny = x * b + y * a;
        x = nx;
        y = ny;
    }
    return {x, y};
}

void check(const std::vector<Int>& got, const ValueFn& expected, std::size_t from,
           const std::string& family, const char* which) {
    for (std::size_t n = from; n < got.size(); ++n) {
        Int want = expected(static_cast<unsigned>(n));
        if (got[n] != want) {
            throw ConsistencyError("family " + family + ": " + which + "_" + std::to_string(n) +
                                   " = " + got[n].get_str() + " but the closed form gives " +
                                   want.get_str());
        }
    }
}

}  // namespace

FamilyEntry family(const std::string& name, const FamilyParams& params, std::size_t N) {
    FamilyEntry e;
    e.name = name;
    ValueFn f_closed, g_closed;
    IndexZero index0 = IndexZero::core_degree();

    if (name == "tau") {
        e.core = Core({2, -1});
        e.representability = Representability::local_f;
        f_closed = [](unsigned n) -> Int { return Int(n + 1); };
        g_closed = [](unsigned) -> Int { return Int(2); };
        e.closed_form = "tau(p^n) = n+1; G_n = 2";
    } else if (name == "sigma") {
        Int p = prime_param(params, name);
        e.core = Core({p + 1, -p});
        e.representability = Representability::local_f;
        f_closed = [p](unsigned n) -> Int { return (pow(p, n + 1) - 1) / (p - 1); };
        g_closed = [p](unsigned n) -> Int { return pow(p, n) + 1; };
        e.closed_form = "sigma(p^n) = 1 + p + ... + p^n; G_n = p^n + 1";
    } else if (name == "totient" || name == "jordan") {
        Int p = prime_param(params, name);
        unsigned order = name == "totient" ? 1 : params.k.value_or(2);
        if (order == 0) throw DomainError("family jordan: k must be positive");
        Int pk = pow(p, order);
        e.core = Core::truncated_series(std::vector<Int>(N, pk - 1));
        e.representability = Representability::local_f;
        f_closed = [pk](unsigned n) -> Int { return n == 0 ? Int(1) : pow(pk, n - 1) * (pk - 1); };
        g_closed = [pk](unsigned n) -> Int { return pow(pk, n) - 1; };
        index0 = IndexZero::omit();
        e.closed_form = "J_k(p^n) = p^(k(n-1)) (p^k - 1); G_n = p^(kn) - 1";
    } else if (name == "catalan") {
        std::vector<Int> t(N);
        for (std::size_t j = 1; j <= N; ++j) t[j - 1] = binomial(2 * (j - 1), j - 1) / Int(j);
        e.core = Core::truncated_series(std::move(t));
        f_closed = [](unsigned n) -> Int { return binomial(2 * n, n) / Int(n + 1); };
        g_closed = [](unsigned n) -> Int { return binomial(2 * n - 1, n); };
        index0 = IndexZero::omit();
        e.closed_form = "C_n = binom(2n,n)/(n+1); G_n = binom(2n-1,n)";
    } else if (name == "chebyshev_u") {
        Int x = params.x.value_or(1);
        e.core = Core({2 * x, -1});
        Int d = x * x - 1;
        f_closed = [x, d](unsigned n) -> Int {
            Int s = 0;
            for (unsigned m = 0; 2 * m <= n; ++m) s += binomial(n + 1, 2 * m + 1) * pow(d, m) * pow(x, n - 2 * m);
            return s;
        };
        g_closed = [x, d](unsigned n) -> Int {
            Int s = 0;
            for (unsigned m = 0; 2 * m <= n; ++m) s += binomial(n, 2 * m) * pow(d, m) * pow(x, n - 2 * m);
            return 2 * s;
        };
        e.closed_form = "F_n = U_n(x); G_n = 2 T_n(x)";
    } else if (name == "stirling2_col") {
        unsigned k = params.k.value_or(2);
        if (k == 0) throw DomainError("family stirling2_col: k must be positive");
        e.core = Core(falling_factorial_core(k));
        f_closed = [k](unsigned n) -> Int { return stirling2(n + k, k); };
        g_closed = [k](unsigned n) -> Int {
            Int s = 0;
            for (unsigned j = 1; j <= k; ++j) s += pow(Int(j), n);
            return s;
        };
        e.closed_form = "F_n = S(n+k, k); G_n = 1^n + ... + k^n";
    } else if (name == "triangular") {
        e.core = Core({3, -3, 1});
        f_closed = [](unsigned n) -> Int { return Int(n + 1) * (n + 2) / 2; };
        g_closed = [](unsigned) -> Int { return Int(3); };
        e.closed_form = "F_n = (n+1)(n+2)/2; G_n = 3";
    } else if (name == "pell" || name == "pell_lucas") {
        e.core = Core({2, 1});
        e.representability = name == "pell" ? Representability::global_f : Representability::global_g;
        // (1 + sqrt2)^n = a_n + b_n sqrt2: Pell P_n = b_n, Pell-Lucas Q_n = 2 a_n.
        f_closed = [](unsigned n) -> Int { return sqrt2_power(1, 1, n + 1).second; };
        g_closed = [](unsigned n) -> Int { return 2 * sqrt2_power(1, 1, n).first; };
        e.closed_form = "(1+sqrt2)^n = a_n + b_n sqrt2; F_n = b_(n+1); G_n = 2 a_n";
    } else if (name == "fibonacci_bivariate") {
        Int x = params.x.value_or(1), y = params.y.value_or(1);
        e.core = Core({x, y});
        f_closed = [x, y](unsigned n) -> Int {
            Int s = 0;
            for (unsigned j = 0; 2 * j <= n; ++j) s += binomial(n - j, j) * pow(x, n - 2 * j) * pow(y, j);
            return s;
        };
        g_closed = [x, y](unsigned n) -> Int {
            Int s = 0;
            for (unsigned j = 0; 2 * j <= n; ++j) {
                s += divide_exact(Int(n) * binomial(n - j, j), Int(n - j)) * pow(x, n - 2 * j) * pow(y, j);
            }
            return s;
        };
        e.closed_form = "F_n = sum binom(n-j,j) x^(n-2j) y^j; G_n = sum n/(n-j) binom(n-j,j) x^(n-2j) y^j";
    } else if (name == "perrin" || name == "perrin_exponential") {
        e.core = Core({0, 1, 1});
        e.representability = name == "perrin" ? Representability::global_g : Representability::global_f;
        auto by_recurrence = [](Int a0, Int a1, Int a2) {
            return [=](unsigned n) -> Int {
                std::vector<Int> a{a0, a1, a2};
                while (a.size() <= n) a.push_back(a[a.size() - 2] + a[a.size() - 3]);
                return a[n];
            };
        };
        f_closed = by_recurrence(1, 0, 1);
        g_closed = by_recurrence(3, 0, 2);
        e.closed_form = "a(n) = a(n-2) + a(n-3); G: 3,0,2; F: 1,0,1";
    } else {
        throw DomainError("unknown family '" + name + "'");
    }

    e.f_values = gfp_values(e.core, N);
    auto companion = companion_sequence(e.core, N, index0);
    e.g_values = std::move(companion.values);
    e.g0 = companion.g0;
    check(e.f_values, f_closed, 0, name, "F");
    check(e.g_values, g_closed, 1, name, "G");
    return e;
}

StirlingReport stirling_relation_check(unsigned k, unsigned depth) {
    if (k < 2 || k > 8) throw DomainError("stirling_relation_check: k must lie in 2..8");
    if (depth < k + 1) throw DomainError("stirling_relation_check: depth must be at least k + 1");
    StirlingReport r;
    r.k = k;
    std::vector<Int> column;
    for (unsigned n = 0; n <= depth; ++n) column.push_back(stirling2(n + k, k));
    auto fit = fit_core_f(column, k);
    r.core = fit.core;
    r.falling_factorial = falling_factorial_core(k);
    r.core_matches = fit.terminating && r.core == r.falling_factorial;
    for (unsigned j = 1; j <= k + 1; ++j) r.stirling1_row.push_back(stirling1_unsigned(k + 1, j));
    // c(k+1, j) = |t_{k+1-j}| with t_0 = 1.
    r.stirling1_matches = r.core.size() == k && r.stirling1_row[k] == 1;
    for (unsigned j = 1; r.stirling1_matches && j <= k; ++j)
        r.stirling1_matches = r.stirling1_row[j - 1] == abs(r.core[k - j]);
    r.t1_is_triangular = !r.core.empty() && r.core[0] == triangular_number(k);
    r.tk_is_factorial = r.core.size() == k && abs(r.core[k - 1]) == factorial(k);
    return r;
}

}  // namespace isobaric
