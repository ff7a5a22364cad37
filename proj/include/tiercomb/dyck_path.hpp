#pragma once

#include <string>
#include <vector>

#include "tiercomb/weak_composition.hpp"

namespace tiercomb {

// Lattice path from (0,0) to (n,n) over steps {N, E}, staying weakly above
// the diagonal, with two label sequences on the north steps (bottom to top).
// Row condition: for each i < n, the number of east steps on the line y = i
// is at least [pix(i+1) <= pix(i)] + [piy(i+1) <= piy(i)].
struct LabelledDyckPath2 {
    std::string steps;     // word over {'N', 'E'}, length 2n
    std::vector<int> pix;  // left labels
    std::vector<int> piy;  // right labels

    int size() const { return static_cast<int>(pix.size()); }
    bool operator==(const LabelledDyckPath2&) const = default;
};

// Order used by the enumerator: step word with N before E, then pix, then piy.
bool path_canonical_less(const LabelledDyckPath2& a, const LabelledDyckPath2& b);

// Area-0 normal form: two positive sequences such that at each cut either
// the left or the right sequence strictly increases.
struct SequencePair {
    std::vector<int> a;
    std::vector<int> b;

    int size() const { return static_cast<int>(a.size()); }
    bool operator==(const SequencePair&) const = default;
    auto operator<=>(const SequencePair&) const = default;
};

struct PathViolation {
    enum class Kind {
        Structure,  // malformed word, length mismatch, nonpositive label
        Row,        // too few east steps on line y = row for the labels
    };
    Kind kind;
    int row = 0;
    std::string detail;
};

struct PathValidity {
    bool ok = true;
    std::vector<PathViolation> violations;
    explicit operator bool() const { return ok; }
};

PathValidity validate_path(const LabelledDyckPath2& p);
bool is_valid_path(const LabelledDyckPath2& p);

PathValidity validate_sequence_pair(const SequencePair& sp);
bool is_valid_sequence_pair(const SequencePair& sp);

// Column of the i-th north step (1-based): number of east steps before it.
int north_step_column(const LabelledDyckPath2& p, int i);

// Number of east steps on the line y = i, i in 0..n.
int east_steps_on_row(const LabelledDyckPath2& p, int i);

// Whole squares between the path and the diagonal.
int area(const LabelledDyckPath2& p);

WeakComposition x_composition(const LabelledDyckPath2& p);
WeakComposition y_composition(const LabelledDyckPath2& p);

// Mutually inverse identification of area-0 paths with sequence pairs.
// to_sequence_pair throws std::domain_error when area > 0;
// from_sequence_pair throws std::invalid_argument on an invalid pair.
SequencePair to_sequence_pair(const LabelledDyckPath2& p);
LabelledDyckPath2 from_sequence_pair(const SequencePair& sp);

}  // namespace tiercomb
