#include "tiercomb/weak_composition.hpp"

#include <numeric>
#include <stdexcept>

namespace tiercomb {

WeakComposition::WeakComposition(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
        if (e < 0) throw std::invalid_argument("weak composition entry must be >= 0");
    }
    while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

WeakComposition WeakComposition::counting(const std::vector<int>& values) {
    std::vector<int> counts;
    for (int v : values) {
        if (v < 1) throw std::invalid_argument("counted values must be positive");
        if (v > static_cast<int>(counts.size())) counts.resize(v, 0);
        ++counts[v - 1];
    }
    return WeakComposition(std::move(counts));
}

int WeakComposition::at(int i) const {
    if (i < 1 || i > static_cast<int>(entries_.size())) return 0;
    return entries_[i - 1];
}

int WeakComposition::support_min() const {
    for (int i = 0; i < static_cast<int>(entries_.size()); ++i) {
        if (entries_[i] != 0) return i + 1;
    }
    return 0;
}

int WeakComposition::support_max() const {
    // trailing zeros are trimmed, so the last entry is nonzero
    return static_cast<int>(entries_.size());
}

int WeakComposition::weight() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

std::vector<int> WeakComposition::padded(int length) const {
    if (length < static_cast<int>(entries_.size())) {
        throw std::invalid_argument("composition support exceeds requested length");
    }
    std::vector<int> out(entries_);
    out.resize(length, 0);
    return out;
}

std::string WeakComposition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries_[i]);
    }
    s += ')';
    return s;
}

WeakComposition rev(const WeakComposition& beta) {
    if (beta.empty()) return beta;
    const int s = beta.support_min();
    const int l = beta.support_max();
    std::vector<int> out(l, 0);
    for (int i = s; i <= l; ++i) out[i - 1] = beta.at(s + l - i);
    return WeakComposition(std::move(out));
}

}  // namespace tiercomb
