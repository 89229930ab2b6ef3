#ifndef ISOBARIC_WEIGHTS_HPP
#define ISOBARIC_WEIGHTS_HPP

#include <isobaric/numeric.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace isobaric {

// Weight vector omega_1, omega_2, ... indexed from 1.
//
// Stored as an explicit prefix followed by an optional affine tail
// omega_j = a + b*j, which covers the named rules (all-ones, identity,
// constant) and is closed under pointwise addition.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<Int> entries);

    static WeightVector all_ones();
    static WeightVector identity();
    static WeightVector constant(Int c);
    // Unit vector e_j (omega_j = 1, every other entry 0).
    static WeightVector unit(std::size_t j);

    // omega_j for j >= 1; DomainError where the vector is undefined.
    Int operator()(std::size_t j) const;
    bool defined(std::size_t j) const;
    // Largest index with a value, or nullopt when the vector extends forever.
    std::optional<std::size_t> bound() const;

    WeightVector operator+(const WeightVector& other) const;

    // "ones", "identity", "const:c" or a comma list.
    std::string describe() const;
    static WeightVector parse(const std::string& text);

private:
    struct Affine {
        Int offset;
        Int slope;
    };

    std::vector<Int> prefix_;
    std::optional<Affine> tail_;
};

}  // namespace isobaric

#endif
