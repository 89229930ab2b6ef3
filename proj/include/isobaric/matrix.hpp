#ifndef ISOBARIC_MATRIX_HPP
#define ISOBARIC_MATRIX_HPP

#include <isobaric/numeric.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace isobaric {

// Dense row-major matrix over an exact ring. Indices are 0-based.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ShapeError("matrix product: inner dimensions differ");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t l = 0; l < a.cols_; ++l) {
                if (a(i, l) == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, l) * b(l, j);
            }
        }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> matrix_power(const Matrix<T>& a, unsigned long e) {
    if (!a.square()) throw ShapeError("matrix_power: matrix is not square");
    Matrix<T> result = Matrix<T>::identity(a.rows());
    Matrix<T> base = a;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

// Gauss-Jordan inverse over the rationals.
Matrix<Rational> inverse(const Matrix<Rational>& a);

template <class T>
std::string render_rows(const Matrix<T>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            if constexpr (requires(const T& v) { v.to_string(); }) {
                out += m(i, j).to_string();
            } else {
                out += to_string(m(i, j));
            }
        }
        out += "]\n";
    }
    return out;
}

}  // namespace isobaric

#endif
