#include <isobaric/weights.hpp>

#include <algorithm>

namespace isobaric {

WeightVector::WeightVector(std::vector<Int> entries) : prefix_(std::move(entries)) {}

WeightVector WeightVector::all_ones() {
    WeightVector w;
    w.tail_ = Affine{1, 0};
    return w;
}

WeightVector WeightVector::identity() {
    WeightVector w;
    w.tail_ = Affine{0, 1};
    return w;
}

WeightVector WeightVector::constant(Int c) {
    WeightVector w;
    w.tail_ = Affine{std::move(c), 0};
    return w;
}

WeightVector WeightVector::unit(std::size_t j) {
    if (j == 0) throw DomainError("weight indices start at 1");
    std::vector<Int> entries(j, 0);
    entries[j - 1] = 1;
    WeightVector w(std::move(entries));
    w.tail_ = Affine{0, 0};
    return w;
}

bool WeightVector::defined(std::size_t j) const {
    return j >= 1 && (j <= prefix_.size() || tail_.has_value());
}

std::optional<std::size_t> WeightVector::bound() const {
    if (tail_) return std::nullopt;
    return prefix_.size();
}

Int WeightVector::operator()(std::size_t j) const {
    if (j == 0) throw DomainError("weight indices start at 1");
    if (j <= prefix_.size()) return prefix_[j - 1];
    if (!tail_) {
        throw DomainError("weight vector has " + std::to_string(prefix_.size()) +
                          " entries; omega_" + std::to_string(j) + " is undefined");
    }
    return tail_->offset + tail_->slope * Int(static_cast<unsigned long>(j));
}

WeightVector WeightVector::operator+(const WeightVector& other) const {
    WeightVector sum;
    std::size_t n = std::max(prefix_.size(), other.prefix_.size());
    if (!tail_ || !other.tail_) {
        n = std::min(bound().value_or(n), other.bound().value_or(n));
    }
    for (std::size_t j = 1; j <= n; ++j) {
        sum.prefix_.push_back((*this)(j) + other(j));
    }
    if (tail_ && other.tail_) {
        sum.tail_ = Affine{tail_->offset + other.tail_->offset, tail_->slope + other.tail_->slope};
    }
    return sum;
}

std::string WeightVector::describe() const {
    if (prefix_.empty() && tail_) {
        if (tail_->offset == 1 && tail_->slope == 0) return "ones";
        if (tail_->offset == 0 && tail_->slope == 1) return "identity";
        if (tail_->slope == 0) return "const:" + tail_->offset.get_str();
    }
    std::string out;
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
        if (i) out += ',';
        out += prefix_[i].get_str();
    }
    if (tail_) out += ",...";
    return out;
}

WeightVector WeightVector::parse(const std::string& text) {
    if (text == "ones" || text == "gfp") return all_ones();
    if (text == "identity" || text == "glp") return identity();
    if (text.rfind("const:", 0) == 0) return constant(parse_int(text.substr(6)));
    auto entries = parse_int_list(text);
    if (entries.empty()) throw DomainError("empty weight list");
    return WeightVector(std::move(entries));
}

}  // namespace isobaric
