#ifndef ISOBARIC_MATRIXOPS_HPP
#define ISOBARIC_MATRIXOPS_HPP

#include <isobaric/isopoly.hpp>
#include <isobaric/matrix.hpp>
#include <isobaric/weights.hpp>

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace isobaric {

// ---------------------------------------------------------------------------
// Companion matrix and its orbit windows.

// k x k matrix with superdiagonal ones and bottom row (t_k, ..., t_1).
template <class T>
Matrix<T> companion_matrix(std::span<const T> t) {
    const std::size_t k = t.size();
    if (k == 0) throw DomainError("companion_matrix: core degree must be positive");
    Matrix<T> a(k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) a(i, i + 1) = T(1);
    for (std::size_t j = 0; j < k; ++j) a(k - 1, j) = t[k - 1 - j];
    return a;
}
Matrix<Int> companion_matrix(const Core& core);
Matrix<IsobaricPoly> companion_matrix(std::size_t k);

// Rows lo..hi of the orbit of a start row under right multiplication by A;
// row n is start * A^n. Each row has k entries, columns numbered 1..k.
template <class T>
class MatrixWindow {
public:
    MatrixWindow(std::vector<T> t, long first, std::deque<std::vector<T>> rows)
        : t_(std::move(t)), lo_(first), rows_(std::move(rows)) {}

    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(rows_.size()) - 1; }
    std::size_t k() const { return t_.size(); }

    const std::vector<T>& row(long n) const {
        if (n < lo() || n > hi()) {
            throw DomainError("row " + std::to_string(n) + " is outside the window [" +
                              std::to_string(lo()) + ", " + std::to_string(hi()) + "]");
        }
        return rows_[static_cast<std::size_t>(n - lo_)];
    }
    const T& entry(long n, std::size_t column) const { return row(n).at(column - 1); }

    // Column j (1-based) over rows lo..hi.
    std::vector<T> column(std::size_t j) const {
        std::vector<T> out;
        for (const auto& r : rows_) out.push_back(r.at(j - 1));
        return out;
    }

    // k x k contiguous block whose last row is row n.
    Matrix<T> block(long n) const {
        const std::size_t k = t_.size();
        Matrix<T> m(k, k);
        for (std::size_t i = 0; i < k; ++i) {
            const auto& r = row(n - static_cast<long>(k - 1 - i));
            for (std::size_t j = 0; j < k; ++j) m(i, j) = r[j];
        }
        return m;
    }

    T trace(long n) const {
        const std::size_t k = t_.size();
        T acc(0);
        for (std::size_t i = 0; i < k; ++i) acc += row(n - static_cast<long>(k - 1 - i))[i];
        return acc;
    }

    // Grows the window southward by one row: next = row(hi) * A.
    void push_south() {
        const std::size_t k = t_.size();
        const auto& last = rows_.back();
        std::vector<T> next(k, T(0));
        for (std::size_t j = 0; j < k; ++j) {
            if (j > 0) next[j] = last[j - 1];
            next[j] += last[k - 1] * t_[k - 1 - j];
        }
        rows_.push_back(std::move(next));
    }

    // Grows the window northward by one row using the column recursion
    // x_{n-k} = (x_n - sum_{j=1}^{k-1} t_j x_{n-j}) / t_k.
    void push_north() {
        const std::size_t k = t_.size();
        if (rows_.size() < k) throw DomainError("window too short to extend northward");
        if (t_[k - 1] == T(0)) {
            throw NotInvertibleError("northward rows need t_k != 0 (companion matrix is singular)");
        }
        std::vector<T> prev(k, T(0));
        for (std::size_t c = 0; c < k; ++c) {
            T acc = rows_[k - 1][c];
            for (std::size_t j = 1; j < k; ++j) acc -= t_[j - 1] * rows_[k - 1 - j][c];
            prev[c] = exact_quotient(acc, t_[k - 1]);
        }
        rows_.push_front(std::move(prev));
        --lo_;
    }

private:
    std::vector<T> t_;
    long lo_;
    std::deque<std::vector<T>> rows_;
};

// Rows lo..hi of A^inf. Row n is the last row of A^n; rows -k < n <= 0 are
// unit vectors. Rows n <= -k need t_k != 0.
MatrixWindow<Rational> companion_window(const Core& core, long lo, long hi);
// Symbolic variant; lo must exceed -k.
MatrixWindow<IsobaricPoly> companion_window(std::size_t k, long lo, long hi);

// Rows lo..hi of D^inf, row n = d_k A^n with d_k = (-t_{k-1}, ..., -(k-1) t_1, k).
MatrixWindow<Rational> different_window(const Core& core, long lo, long hi);
MatrixWindow<IsobaricPoly> different_window(std::size_t k, long lo, long hi);

// Schur hook S_(n, 1^leg), read from column k - leg of the symbolic window
// with the sign (-1)^leg removed. leg = 0 gives F_n.
IsobaricPoly schur_hook(std::size_t k, unsigned n, std::size_t leg);

// ---------------------------------------------------------------------------
// Different matrix.

template <class T>
std::vector<T> different_vector(std::span<const T> t) {
    const std::size_t k = t.size();
    std::vector<T> d(k, T(0));
    for (std::size_t i = 1; i < k; ++i) {
        // entry i (1-based) is -i * t_{k-i}
        d[i - 1] = T(0) - t[k - i - 1] * T(static_cast<int>(i));
    }
    d[k - 1] = T(static_cast<int>(k));
    return d;
}

template <class T>
Matrix<T> different_matrix(std::span<const T> t) {
    const std::size_t k = t.size();
    if (k < 2) throw DomainError("different_matrix: k must be at least 2");
    Matrix<T> a = companion_matrix(t);
    Matrix<T> d(k, k);
    Matrix<T> r(1, k);
    auto dv = different_vector(t);
    for (std::size_t j = 0; j < k; ++j) r(0, j) = dv[j];
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) d(i, j) = r(0, j);
        r = r * a;
    }
    return d;
}
Matrix<Int> different_matrix(const Core& core);
Matrix<IsobaricPoly> different_matrix(std::size_t k);

// Delta_k = det D_k.
Int different_det(const Core& core);
IsobaricPoly different_det(std::size_t k);

// ---------------------------------------------------------------------------
// Hessenberg matrices, permanents and determinants.

enum class HessenbergSign { plus, minus };

// n x n lower Hessenberg matrix: superdiagonal +-1, entry (i,j) = t_{i-j+1}
// for j <= i < n, last row omega_{n-j+1} t_{n-j+1}; t_m = 0 for m > k.
template <class T>
Matrix<T> hessenberg(HessenbergSign sign, const WeightVector& omega, std::span<const T> t,
                     std::size_t n) {
    if (n == 0) throw DomainError("hessenberg: n must be positive");
    auto tm = [&](std::size_t m) { return m >= 1 && m <= t.size() ? t[m - 1] : T(0); };
    Matrix<T> h(n, n);
    for (std::size_t i = 1; i <= n; ++i) {
        if (i < n) h(i - 1, i) = T(sign == HessenbergSign::plus ? 1 : -1);
        for (std::size_t j = 1; j <= i; ++j) {
            const std::size_t m = i - j + 1;
            if (i < n) {
                h(i - 1, j - 1) = tm(m);
            } else if (m <= t.size()) {
                h(i - 1, j - 1) = t[m - 1] * T(omega(m));
            }
        }
    }
    return h;
}
Matrix<Int> hessenberg(HessenbergSign sign, const WeightVector& omega, const Core& core,
                       std::size_t n);
Matrix<IsobaricPoly> hessenberg(HessenbergSign sign, const WeightVector& omega, std::size_t k,
                                std::size_t n);

template <class T>
bool is_lower_hessenberg(const Matrix<T>& m) {
    if (!m.square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 2; j < m.cols(); ++j)
            if (!(m(i, j) == T(0))) return false;
    return true;
}

namespace detail {

// Leading-principal recursion for lower Hessenberg matrices:
// q_0 = 1, q_i = sum_{j<=i} h_{i,j} (prod_{m=j}^{i-1} s_m) q_{j-1},
// with s_m the superdiagonal, negated for determinants.
template <class T>
T hessenberg_expand(const Matrix<T>& h, bool negate_superdiagonal) {
    if (!is_lower_hessenberg(h)) {
        throw ShapeError("expected a square lower Hessenberg matrix");
    }
    const std::size_t n = h.rows();
    std::vector<T> q(n + 1, T(0));
    q[0] = T(1);
    for (std::size_t i = 1; i <= n; ++i) {
        T acc(0);
        T chain(1);  // prod_{m=j}^{i-1} s_m, built as j walks down from i
        for (std::size_t j = i; j >= 1; --j) {
            if (j < i) {
                T s = h(j - 1, j);
                chain *= negate_superdiagonal ? T(0) - s : s;
            }
            acc += h(i - 1, j - 1) * chain * q[j - 1];
        }
        q[i] = std::move(acc);
    }
    return q[n];
}

template <class T>
T permutation_sum(const Matrix<T>& m, bool signed_sum, std::size_t max_size) {
    if (!m.square()) throw ShapeError("expected a square matrix");
    const std::size_t n = m.rows();
    if (n > max_size) {
        throw SizeLimitError("factorial expansion limited to n <= " + std::to_string(max_size) +
                             " (got " + std::to_string(n) + ")");
    }
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    T total(0);
    do {
        T prod(1);
        for (std::size_t i = 0; i < n && !(prod == T(0)); ++i) prod *= m(i, sigma[i]);
        if (signed_sum) {
            std::size_t inversions = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) inversions += sigma[i] > sigma[j];
            if (inversions % 2) prod = T(0) - prod;
        }
        total += prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

}  // namespace detail

template <class T>
T permanent_hessenberg(const Matrix<T>& h) {
    return detail::hessenberg_expand(h, false);
}

template <class T>
T determinant_hessenberg(const Matrix<T>& h) {
    return detail::hessenberg_expand(h, true);
}

inline constexpr std::size_t kNaiveLimit = 8;

// Sum over all permutations; the reference oracle for the fast routines.
template <class T>
T permanent_naive(const Matrix<T>& m) {
    return detail::permutation_sum(m, false, kNaiveLimit);
}

// Signed permutation sum; used for small symbolic determinants.
template <class T>
T determinant_leibniz(const Matrix<T>& m) {
    return detail::permutation_sum(m, true, kNaiveLimit);
}

// Fraction-free elimination with row pivoting.
Int determinant_bareiss(Matrix<Int> m);
Rational determinant_bareiss(Matrix<Rational> m);

// Polynomial that is linear in the weights: for each monomial, the
// coefficients of omega_1..omega_n.
struct WeightLinearPoly {
    std::size_t weights = 0;
    std::map<Alpha, std::vector<Int>> terms;

    // e.g. "w1 t1^4 + (2 w1 + w2) t1^2 t2 + w2 t2^2 + (w1 + w3) t1 t3 + w4 t4"
    std::string to_string() const;
    // Specializes the symbolic weights to concrete ones.
    IsobaricPoly at(const WeightVector& omega) const;
};

// perm/det of the symbolic-weight Hessenberg matrix, using linearity of
// the last row in omega.
WeightLinearPoly hessenberg_weight_form(HessenbergSign sign, std::size_t k, std::size_t n,
                                        bool permanent);

}  // namespace isobaric

#endif
