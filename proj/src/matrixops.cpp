#include <isobaric/matrixops.hpp>

namespace isobaric {

namespace {

std::vector<Rational> rational_core(const Core& core) {
    if (core.truncated()) throw DomainError("matrix constructions need a finite core");
    if (core.degree() == 0) throw DomainError("core degree must be positive");
    std::vector<Rational> t;
    for (const Int& v : core.coefficients()) t.emplace_back(v);
    return t;
}

std::vector<Int> integer_core(const Core& core) {
    if (core.truncated()) throw DomainError("matrix constructions need a finite core");
    if (core.degree() == 0) throw DomainError("core degree must be positive");
    return {core.coefficients().begin(), core.coefficients().end()};
}

template <class T>
MatrixWindow<T> companion_window_impl(std::vector<T> t, long lo, long hi) {
    const std::size_t k = t.size();
    // Rows -(k-1)..0 are e_1..e_k.
    std::deque<std::vector<T>> seed;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<T> e(k, T(0));
        e[i] = T(1);
        seed.push_back(std::move(e));
    }
    auto core = t;
    MatrixWindow<T> w(std::move(t), 1 - static_cast<long>(k), std::move(seed));
    if (lo > hi) throw DomainError("window bounds must satisfy lo <= hi");
    while (w.hi() < hi) w.push_south();
    while (w.lo() > lo) w.push_north();
    std::deque<std::vector<T>> rows;
    for (long n = lo; n <= hi; ++n) rows.push_back(w.row(n));
    return MatrixWindow<T>(std::move(core), lo, std::move(rows));
}

template <class T>
MatrixWindow<T> different_window_impl(std::vector<T> t, long lo, long hi) {
    const std::size_t k = t.size();
    if (k < 2) throw DomainError("different window: k must be at least 2");
    if (lo > hi) throw DomainError("window bounds must satisfy lo <= hi");
    std::deque<std::vector<T>> seed{different_vector<T>(t)};
    auto core = t;
    MatrixWindow<T> w(std::move(t), 0, std::move(seed));
    // Need k rows before the northward recursion can run.
    while (w.hi() < std::max(hi, static_cast<long>(k) - 1)) w.push_south();
    while (w.lo() > lo) w.push_north();
    std::deque<std::vector<T>> rows;
    for (long n = lo; n <= hi; ++n) rows.push_back(w.row(n));
    return MatrixWindow<T>(std::move(core), lo, std::move(rows));
}

}  // namespace

Matrix<Int> companion_matrix(const Core& core) {
    auto t = integer_core(core);
    return companion_matrix<Int>(t);
}

Matrix<IsobaricPoly> companion_matrix(std::size_t k) {
    auto t = symbolic_core(k);
    return companion_matrix<IsobaricPoly>(t);
}

MatrixWindow<Rational> companion_window(const Core& core, long lo, long hi) {
    auto t = rational_core(core);
    if (lo <= -static_cast<long>(t.size()) && t.back() == 0) {
        throw NotInvertibleError("companion window rows <= -k need t_k != 0 (core " +
                                 core.to_string() + ")");
    }
    return companion_window_impl(std::move(t), lo, hi);
}

MatrixWindow<IsobaricPoly> companion_window(std::size_t k, long lo, long hi) {
    if (k == 0) throw DomainError("core degree must be positive");
    if (lo <= -static_cast<long>(k)) {
        throw DomainError("symbolic windows stop at row " + std::to_string(1 - static_cast<long>(k)) +
                          "; northward rows need a numeric invertible core");
    }
    return companion_window_impl(symbolic_core(k), lo, hi);
}

MatrixWindow<Rational> different_window(const Core& core, long lo, long hi) {
    auto t = rational_core(core);
    if (lo < 0 && t.back() == 0) {
        throw NotInvertibleError("different window rows < 0 need t_k != 0 (core " +
                                 core.to_string() + ")");
    }
    return different_window_impl(std::move(t), lo, hi);
}

MatrixWindow<IsobaricPoly> different_window(std::size_t k, long lo, long hi) {
    if (lo < 0) throw DomainError("symbolic different windows start at row 0");
    return different_window_impl(symbolic_core(k), lo, hi);
}

IsobaricPoly schur_hook(std::size_t k, unsigned n, std::size_t leg) {
    if (k == 0) throw DomainError("schur_hook: k must be positive");
    if (leg >= k) {
        throw DomainError("schur_hook: leg " + std::to_string(leg) + " outside [0, " +
                          std::to_string(k - 1) + "]");
    }
    auto w = companion_window(k, static_cast<long>(n), static_cast<long>(n));
    IsobaricPoly entry = w.entry(static_cast<long>(n), k - leg);
    return leg % 2 ? -entry : entry;
}

Matrix<Int> different_matrix(const Core& core) {
    auto t = integer_core(core);
    return different_matrix<Int>(t);
}

Matrix<IsobaricPoly> different_matrix(std::size_t k) {
    auto t = symbolic_core(k);
    return different_matrix<IsobaricPoly>(t);
}

Int different_det(const Core& core) { return determinant_bareiss(different_matrix(core)); }

IsobaricPoly different_det(std::size_t k) { return determinant_leibniz(different_matrix(k)); }

Matrix<Int> hessenberg(HessenbergSign sign, const WeightVector& omega, const Core& core,
                       std::size_t n) {
    auto t = core.truncated() ? core.padded(n) : integer_core(core);
    return hessenberg<Int>(sign, omega, t, n);
}

Matrix<IsobaricPoly> hessenberg(HessenbergSign sign, const WeightVector& omega, std::size_t k,
                                std::size_t n) {
    auto t = symbolic_core(k);
    return hessenberg<IsobaricPoly>(sign, omega, t, n);
}

namespace {

template <class T>
T bareiss(Matrix<T> m) {
    if (!m.square()) throw ShapeError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    T sign(1);
    T prev(1);
    for (std::size_t c = 0; c + 1 < n; ++c) {
        if (m(c, c) == 0) {
            std::size_t r = c + 1;
            while (r < n && m(r, c) == 0) ++r;
            if (r == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(r, j));
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                T num = m(i, j) * m(c, c) - m(i, c) * m(c, j);
                m(i, j) = exact_quotient(num, prev);
            }
            m(i, c) = 0;
        }
        prev = m(c, c);
    }
    return T(sign * m(n - 1, n - 1));
}

}  // namespace

Int determinant_bareiss(Matrix<Int> m) { return bareiss(std::move(m)); }
Rational determinant_bareiss(Matrix<Rational> m) { return bareiss(std::move(m)); }

Matrix<Rational> inverse(const Matrix<Rational>& a) {
    if (!a.square()) throw ShapeError("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix<Rational> m = a;
    Matrix<Rational> inv = Matrix<Rational>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = c;
        while (r < n && m(r, c) == 0) ++r;
        if (r == n) throw NotInvertibleError("matrix is singular");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(m(c, j), m(r, j));
            std::swap(inv(c, j), inv(r, j));
        }
        Rational pivot = m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) /= pivot;
            inv(c, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::string WeightLinearPoly::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [alpha, coeffs] : terms) {
        // Render the weight form sum_i c_i w_i.
        std::vector<std::pair<Int, std::size_t>> parts;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) parts.emplace_back(coeffs[i], i + 1);
        std::string form;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            const auto& [c, i] = parts[p];
            Int mag = abs(c);
            if (p == 0) {
                if (c < 0) form += '-';
            } else {
                form += c < 0 ? " - " : " + ";
            }
            if (mag != 1) form += mag.get_str() + " ";
            form += "w" + std::to_string(i);
        }
        bool single = parts.size() == 1;
        bool negative_single = single && parts[0].first < 0;
        if (!first) out += negative_single ? " - " : " + ";
        else if (negative_single) out += "-";
        first = false;
        if (single) {
            Int mag = abs(parts[0].first);
            if (mag != 1) out += mag.get_str() + " ";
            out += "w" + std::to_string(parts[0].second);
        } else {
            out += "(" + form + ")";
        }
        std::string mono = IsobaricPoly::monomial(alpha).to_string();
        if (mono != "1") out += " " + mono;
    }
    return out;
}

IsobaricPoly WeightLinearPoly::at(const WeightVector& omega) const {
    IsobaricPoly p;
    for (const auto& [alpha, coeffs] : terms) {
        Int c = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) c += coeffs[i] * omega(i + 1);
        p += IsobaricPoly::monomial(alpha, c);
    }
    return p;
}

WeightLinearPoly hessenberg_weight_form(HessenbergSign sign, std::size_t k, std::size_t n,
                                        bool permanent) {
    WeightLinearPoly form;
    form.weights = n;
    for (std::size_t i = 1; i <= n; ++i) {
        auto h = hessenberg(sign, WeightVector::unit(i), k, n);
        IsobaricPoly value = permanent ? permanent_hessenberg(h) : determinant_hessenberg(h);
        for (const auto& [alpha, c] : value.terms()) {
            auto& coeffs = form.terms[alpha];
            coeffs.resize(n, 0);
            coeffs[i - 1] = c;
        }
    }
    return form;
}

}  // namespace isobaric
