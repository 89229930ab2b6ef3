#ifndef ISOBARIC_PARALLEL_HPP
#define ISOBARIC_PARALLEL_HPP

#include <isobaric/matrixops.hpp>

#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <omp.h>

namespace isobaric {

// Permanent by permutation sum, split over the column used by the first row.
template <class T>
T permanent_naive_parallel(const Matrix<T>& m) {
    if (!m.square()) throw ShapeError("permanent: expected a square matrix");
    const std::size_t n = m.rows();
    if (n > kNaiveLimit) throw SizeLimitError("permanent_naive_parallel: n exceeds the naive limit");
    if (n == 0) return T(1);
    std::vector<T> partial(n, T(0));
#pragma omp parallel for schedule(dynamic)
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == T(0)) continue;
        Matrix<T> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = m(i, j);
        partial[c] = m(0, c) * detail::permutation_sum(minor, false, kNaiveLimit);
    }
    T total(0);
    for (auto& p : partial) total += p;
    return total;
}

// Runs check(i) for i in [0, count); a non-empty result or an exception marks cell i failed.
template <class Check>
std::vector<std::pair<std::size_t, std::string>> collect_failures(std::size_t count, Check&& check,
                                                                  bool parallel = true) {
    std::vector<std::optional<std::string>> result(count);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::size_t i = 0; i < count; ++i) {
        try {
            std::string msg = check(i);
            if (!msg.empty()) result[i] = std::move(msg);
        } catch (const std::exception& e) {
            result[i] = std::string("exception: ") + e.what();
        }
    }
    std::vector<std::pair<std::size_t, std::string>> failures;
    for (std::size_t i = 0; i < count; ++i)
        if (result[i]) failures.emplace_back(i, std::move(*result[i]));
    return failures;
}

}  // namespace isobaric

#endif
