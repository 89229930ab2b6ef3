#ifndef ISOBARIC_PARTITIONS_HPP
#define ISOBARIC_PARTITIONS_HPP

#include <isobaric/numeric.hpp>
#include <isobaric/weights.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace isobaric {

// Partition in multiplicity form: alpha_j copies of the part j.
// Trailing zero multiplicities are trimmed so equal partitions compare equal.
class Alpha {
public:
    Alpha() = default;
    explicit Alpha(std::vector<unsigned> multiplicities);
    Alpha(std::initializer_list<unsigned> multiplicities);

    // Multiplicity of part j (1-based); zero beyond the largest part.
    unsigned multiplicity(std::size_t part) const {
        return part >= 1 && part <= mult_.size() ? mult_[part - 1] : 0;
    }
    std::span<const unsigned> multiplicities() const { return mult_; }
    std::size_t largest_part() const { return mult_.size(); }

    unsigned long degree() const { return degree_; }
    unsigned long length() const { return length_; }
    bool empty() const { return mult_.empty(); }

    friend bool operator==(const Alpha& a, const Alpha& b) { return a.mult_ == b.mult_; }
    // Graded reverse-lexicographic: lower isobaric degree first, then the
    // partition with fewer copies of its largest differing part first.
    friend std::strong_ordering operator<=>(const Alpha& a, const Alpha& b);

private:
    std::vector<unsigned> mult_;
    unsigned long degree_ = 0;
    unsigned long length_ = 0;
};

// All alpha with sum j*alpha_j = n and no part larger than k, in Alpha order.
std::vector<Alpha> enumerate_partitions(unsigned n, unsigned k);

// |alpha|! / (alpha_1! ... alpha_k!)
Int multinomial(const Alpha& alpha);

// multinomial(alpha) * (sum_j omega_j alpha_j) / |alpha|, exact.
Int wip_coefficient(const Alpha& alpha, const WeightVector& omega);

}  // namespace isobaric

#endif
