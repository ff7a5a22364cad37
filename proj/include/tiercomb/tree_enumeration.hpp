#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tiercomb/tiered_tree.hpp"
#include "tiercomb/weak_composition.hpp"

namespace tiercomb {

enum class TreeFilter { All, ZeroInversion };

struct TreeEnumOptions {
    int n = 0;
    int max_label = 1;
    int max_level = 1;
    TreeFilter filter = TreeFilter::All;
    // When set, only trees with exactly this label / level composition are
    // produced (label and level budgets prune the search).
    std::optional<WeakComposition> label_content;
    std::optional<WeakComposition> level_content;
};

// Visits every tiered rooted tree with n non-root vertices, labels in
// [1, max_label] and levels in [1, max_level], exactly once per isomorphism
// class. Each tree is produced in canonical storage: vertex ids follow the
// depth-first exploration order (children by decreasing label, ties by
// increasing level), so the parent array satisfies parent[i] < i+1 and
// sibling blocks are contiguous in depth-first position.
//
// Emission order is lexicographic on (parent, w, lv). Partial trees that
// already violate a tier condition, overrun a content budget, or (under
// ZeroInversion) already contain an inversion are pruned, never completed.
void enumerate_trees(const TreeEnumOptions& opt,
                     const std::function<void(const TieredRootedTree&)>& visit);

void enumerate_trees(int n, int max_label, int max_level, TreeFilter filter,
                     const std::function<void(const TieredRootedTree&)>& visit);

std::vector<TieredRootedTree> collect_trees(int n, int max_label, int max_level,
                                            TreeFilter filter = TreeFilter::All);

long long count_trees(const TreeEnumOptions& opt);

}  // namespace tiercomb
