#pragma once

#include <compare>
#include <string>
#include <vector>

namespace tiercomb {

// Weak composition: a finitely supported sequence of natural numbers,
// indexed from 1. Interior zeros are allowed; trailing zeros are trimmed
// on construction so that equal compositions compare equal.
class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> entries);

    // Counting composition of a list of positive values: entry i is the
    // number of occurrences of i.
    static WeakComposition counting(const std::vector<int>& values);

    // 1-based access; indices outside the stored range read as 0.
    int at(int i) const;

    int support_min() const;  // smallest index with a nonzero entry, 0 if empty
    int support_max() const;  // largest index with a nonzero entry, 0 if empty
    int weight() const;       // sum of all entries

    bool empty() const { return entries_.empty(); }
    const std::vector<int>& entries() const { return entries_; }

    // Dense exponent vector of the given length; throws std::invalid_argument
    // if the support does not fit.
    std::vector<int> padded(int length) const;

    std::string to_string() const;  // "(1,3,1,3)", "()" when empty

    bool operator==(const WeakComposition&) const = default;
    auto operator<=>(const WeakComposition&) const = default;

private:
    std::vector<int> entries_;  // entries_[k] is the count at index k+1
};

// Reflection of the composition within its support interval [s, l]:
// rev(b)_i = b_{s+l-i} for i in [s, l], zero elsewhere. An involution;
// the empty composition maps to itself.
WeakComposition rev(const WeakComposition& beta);

}  // namespace tiercomb
