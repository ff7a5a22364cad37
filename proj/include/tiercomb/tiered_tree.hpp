#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tiercomb/weak_composition.hpp"

namespace tiercomb {

// Rooted tree on vertices 0..n where vertex 0 is the root. Vertex i in 1..n
// has parent parent[i-1] (value 0 means child of the root), label w[i-1] and
// level lv[i-1], both positive. The root carries no label or level of its
// own; where a formal value is needed it reads as (0, 0).
//
// Validity (see validate_tree):
//   1. on every edge not touching the root, labels differ and levels differ;
//   2. on every such edge, label order and level order agree;
//   3. siblings never share the same (label, level) pair (children of the
//      root included).
struct TieredRootedTree {
    std::vector<int> parent;
    std::vector<int> w;
    std::vector<int> lv;

    int size() const { return static_cast<int>(parent.size()); }

    bool operator==(const TieredRootedTree&) const = default;
    // Lexicographic on (parent, w, lv); the canonical enumeration order.
    auto operator<=>(const TieredRootedTree&) const = default;
};

// The (label, level) data of one vertex; the root reads as {0, 0}.
struct VertexData {
    int w = 0;
    int lv = 0;
    bool operator==(const VertexData&) const = default;
    auto operator<=>(const VertexData&) const = default;
};

struct TreeViolation {
    enum class Kind {
        Structure,   // malformed arrays, out-of-range parent, cycle
        Condition1,  // edge with equal labels or equal levels
        Condition2,  // edge whose label order and level order disagree
        Condition3,  // siblings sharing the same (label, level) pair
    };
    Kind kind;
    int u = 0;  // offending vertices (storage ids, 0 where not applicable)
    int v = 0;
    std::string detail;
};

struct TreeValidity {
    bool ok = true;
    std::vector<TreeViolation> violations;
    explicit operator bool() const { return ok; }
};

TreeValidity validate_tree(const TieredRootedTree& t);
bool is_valid_tree(const TieredRootedTree& t);

// Vertex ids run 0..n, with 0 the root. Throws std::out_of_range on others.
VertexData vertex_data(const TieredRootedTree& t, int v);

// Strict agreement of label order and level order. The root's formal (0, 0)
// makes every labelled vertex compatible with the root.
bool compatible(VertexData a, VertexData b);

// True iff v is a strict descendant of u (u, v in 1..n).
bool is_descendant(const TieredRootedTree& t, int v, int u);

// Inversion pair (u, v): v a descendant of u, v compatible with the parent
// of u, and v before u in the (label, reversed level) sense.
bool is_inversion(const TieredRootedTree& t, int u, int v);

// Number of inversion pairs. Computed by a single walk with an ancestor
// stack, independent of the pair predicate above.
int inv_count(const TieredRootedTree& t);

WeakComposition label_composition(const TieredRootedTree& t);
WeakComposition level_composition(const TieredRootedTree& t);

// Extreme levels over non-root vertices; throw std::domain_error when n = 0.
int min_level(const TieredRootedTree& t);
int max_level(const TieredRootedTree& t);

// Reversed level L + l - lv(v) where L, l are the extreme levels.
int reverse_level(const TieredRootedTree& t, int v);

// Strict total order on non-root vertices: smaller label first; on equal
// labels, larger level first; on equal (label, level), ancestors first;
// across branches, decided by comparing the children of the least common
// ancestor (siblings, so label/level alone settle it).
bool precedes(const TieredRootedTree& t, int u, int v);

// Forest: the same arrays with the artificial root removed. parent value 0
// marks a component root; `roots` lists those vertices in storage order.
struct TieredRootedForest {
    std::vector<int> roots;
    std::vector<int> parent;
    std::vector<int> w;
    std::vector<int> lv;

    int size() const { return static_cast<int>(parent.size()); }
    bool operator==(const TieredRootedForest&) const = default;
};

// Root-attachment correspondence; mutually inverse.
TieredRootedTree to_tree(const TieredRootedForest& f);
TieredRootedForest to_forest(const TieredRootedTree& t);

}  // namespace tiercomb
