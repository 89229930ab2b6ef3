#include <isobaric/partitions.hpp>

#include <algorithm>

namespace isobaric {

Alpha::Alpha(std::vector<unsigned> multiplicities) : mult_(std::move(multiplicities)) {
    while (!mult_.empty() && mult_.back() == 0) mult_.pop_back();
    for (std::size_t j = 0; j < mult_.size(); ++j) {
        degree_ += static_cast<unsigned long>(j + 1) * mult_[j];
        length_ += mult_[j];
    }
}

Alpha::Alpha(std::initializer_list<unsigned> multiplicities)
    : Alpha(std::vector<unsigned>(multiplicities)) {}

std::strong_ordering operator<=>(const Alpha& a, const Alpha& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    for (std::size_t j = std::max(a.mult_.size(), b.mult_.size()); j >= 1; --j) {
        if (auto c = a.multiplicity(j) <=> b.multiplicity(j); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

namespace {

// Chooses multiplicities from the largest allowed part downwards.
void enumerate_into(unsigned remaining, unsigned part, std::vector<unsigned>& mult,
                    std::vector<Alpha>& out) {
    if (part == 1) {
        mult[0] = remaining;
        out.emplace_back(mult);
        mult[0] = 0;
        return;
    }
    for (unsigned copies = 0; copies * part <= remaining; ++copies) {
        mult[part - 1] = copies;
        enumerate_into(remaining - copies * part, part - 1, mult, out);
    }
    mult[part - 1] = 0;
}

}  // namespace

std::vector<Alpha> enumerate_partitions(unsigned n, unsigned k) {
    if (k == 0) throw DomainError("enumerate_partitions: k must be positive");
    if (n == 0) return {Alpha{}};
    unsigned top = std::min(n, k);
    std::vector<unsigned> mult(top, 0);
    std::vector<Alpha> out;
    enumerate_into(n, top, mult, out);
    std::sort(out.begin(), out.end());
    return out;
}

Int multinomial(const Alpha& alpha) {
    Int result = factorial(alpha.length());
    for (unsigned m : alpha.multiplicities()) {
        result /= factorial(m);
    }
    return result;
}

Int wip_coefficient(const Alpha& alpha, const WeightVector& omega) {
    if (alpha.empty()) {
        throw DomainError("wip_coefficient: the empty partition has no weighted coefficient");
    }
    Int weighted = 0;
    for (std::size_t j = 1; j <= alpha.largest_part(); ++j) {
        if (alpha.multiplicity(j) != 0) {
            weighted += omega(j) * alpha.multiplicity(j);
        }
    }
    Int numerator = multinomial(alpha) * weighted;
    Int length = static_cast<unsigned long>(alpha.length());
    if (!mpz_divisible_p(numerator.get_mpz_t(), length.get_mpz_t())) {
        throw ConsistencyError("non-integral weighted isobaric coefficient " + numerator.get_str() +
                               "/" + length.get_str());
    }
    return divide_exact(numerator, length);
}

}  // namespace isobaric
