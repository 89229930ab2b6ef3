#include <isobaric/isopoly.hpp>

#include <algorithm>
#include <sstream>

namespace isobaric {

Core::Core(std::vector<Int> coefficients, bool truncated)
    : t_(std::move(coefficients)), truncated_(truncated) {}

Core Core::parse(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '[') body.erase(body.begin());
    if (!body.empty() && body.back() == ']') body.pop_back();
    return Core(parse_int_list(body));
}

Int Core::t(std::size_t j) const {
    if (j == 0) throw DomainError("core indices start at 1");
    if (j <= t_.size()) return t_[j - 1];
    if (truncated_) {
        throw DomainError("truncated core knows t_1..t_" + std::to_string(t_.size()) +
                          "; t_" + std::to_string(j) + " was requested");
    }
    return 0;
}

std::vector<Int> Core::padded(std::size_t n) const {
    std::vector<Int> out;
    out.reserve(n);
    for (std::size_t j = 1; j <= n; ++j) out.push_back(t(j));
    return out;
}

std::string Core::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < t_.size(); ++i) {
        if (i) out += ',';
        out += t_[i].get_str();
    }
    if (truncated_) out += t_.empty() ? "..." : ",...";
    return out + "]";
}

IsobaricPoly::IsobaricPoly(const Int& constant) {
    if (constant != 0) terms_.emplace(Alpha{}, constant);
}

IsobaricPoly IsobaricPoly::variable(std::size_t j) {
    if (j == 0) throw DomainError("variables are t_1, t_2, ...");
    std::vector<unsigned> mult(j, 0);
    mult[j - 1] = 1;
    return monomial(Alpha(std::move(mult)));
}

IsobaricPoly IsobaricPoly::monomial(const Alpha& alpha, const Int& coefficient) {
    IsobaricPoly p;
    p.add_term(alpha, coefficient);
    return p;
}

Int IsobaricPoly::coefficient(const Alpha& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Int(0) : it->second;
}

std::optional<unsigned long> IsobaricPoly::grade() const {
    if (terms_.empty()) return std::nullopt;
    unsigned long g = terms_.begin()->first.degree();
    for (const auto& [alpha, c] : terms_) {
        if (alpha.degree() != g) return std::nullopt;
    }
    return g;
}

std::size_t IsobaricPoly::max_variable() const {
    std::size_t m = 0;
    for (const auto& [alpha, c] : terms_) m = std::max(m, alpha.largest_part());
    return m;
}

void IsobaricPoly::add_term(const Alpha& alpha, const Int& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(alpha, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

IsobaricPoly& IsobaricPoly::operator+=(const IsobaricPoly& other) {
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
    return *this;
}

IsobaricPoly& IsobaricPoly::operator-=(const IsobaricPoly& other) {
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
    return *this;
}

IsobaricPoly operator*(const IsobaricPoly& a, const IsobaricPoly& b) {
    IsobaricPoly out;
    for (const auto& [alpha, ca] : a.terms_) {
        for (const auto& [beta, cb] : b.terms_) {
            std::size_t n = std::max(alpha.largest_part(), beta.largest_part());
            std::vector<unsigned> mult(n);
            for (std::size_t j = 1; j <= n; ++j) {
                mult[j - 1] = alpha.multiplicity(j) + beta.multiplicity(j);
            }
            out.add_term(Alpha(std::move(mult)), ca * cb);
        }
    }
    return out;
}

IsobaricPoly& IsobaricPoly::operator*=(const IsobaricPoly& other) {
    *this = *this * other;
    return *this;
}

IsobaricPoly& IsobaricPoly::operator*=(const Int& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, c] : terms_) c *= scalar;
    return *this;
}

IsobaricPoly IsobaricPoly::operator-() const {
    IsobaricPoly out = *this;
    for (auto& [alpha, c] : out.terms_) c = -c;
    return out;
}

IsobaricPoly IsobaricPoly::divide_exact(const Int& d) const {
    IsobaricPoly out = *this;
    for (auto& [alpha, c] : out.terms_) c = isobaric::divide_exact(c, d);
    return out;
}

std::string IsobaricPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [alpha, c] : terms_) {
        Int magnitude = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (magnitude != 1 || alpha.empty()) {
            os << magnitude.get_str();
            wrote = true;
        }
        for (std::size_t j = 1; j <= alpha.largest_part(); ++j) {
            unsigned e = alpha.multiplicity(j);
            if (e == 0) continue;
            if (wrote) os << ' ';
            os << 't' << j;
            if (e > 1) os << '^' << e;
            wrote = true;
        }
    }
    return os.str();
}

IsobaricPoly poly_add(const IsobaricPoly& p, const IsobaricPoly& q) { return p + q; }
IsobaricPoly poly_mul(const IsobaricPoly& p, const IsobaricPoly& q) { return p * q; }

namespace {

void require_variables(const IsobaricPoly& p, const Core& core) {
    if (p.max_variable() > core.degree()) {
        throw DomainError("evaluate: polynomial uses t_" + std::to_string(p.max_variable()) +
                          " but the core " + core.to_string() + " only supplies t_1..t_" +
                          std::to_string(core.degree()));
    }
}

}  // namespace

Int evaluate(const IsobaricPoly& p, const Core& core) {
    require_variables(p, core);
    Int total = 0;
    for (const auto& [alpha, c] : p.terms()) {
        Int term = c;
        for (std::size_t j = 1; j <= alpha.largest_part(); ++j) {
            if (alpha.multiplicity(j)) term *= pow(core.t(j), alpha.multiplicity(j));
        }
        total += term;
    }
    return total;
}

Int evaluate(const IsobaricPoly& p, const Core& core, const Int& modulus) {
    if (modulus <= 0) throw DomainError("evaluate: modulus must be positive");
    require_variables(p, core);
    Int total = 0;
    for (const auto& [alpha, c] : p.terms()) {
        Int term = c % modulus;
        for (std::size_t j = 1; j <= alpha.largest_part(); ++j) {
            if (!alpha.multiplicity(j)) continue;
            Int base = core.t(j);
            Int power;
            mpz_powm_ui(power.get_mpz_t(), base.get_mpz_t(), alpha.multiplicity(j),
                        modulus.get_mpz_t());
            term = (term * power) % modulus;
        }
        total = (total + term) % modulus;
    }
    if (total < 0) total += modulus;
    return total;
}

std::vector<IsobaricPoly> symbolic_core(std::size_t k) {
    std::vector<IsobaricPoly> t;
    t.reserve(k);
    for (std::size_t j = 1; j <= k; ++j) t.push_back(IsobaricPoly::variable(j));
    return t;
}

}  // namespace isobaric
