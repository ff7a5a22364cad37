#pragma once

#include <map>
#include <string>
#include <vector>

#include "tiercomb/dyck_path.hpp"
#include "tiercomb/tiered_tree.hpp"

// Independent reference implementations used to pin expected values. These
// deliberately avoid the library's validation, enumeration, canonicalization
// and area code paths: plain generate-then-filter sweeps and direct
// restatements of the defining conditions.
namespace oracle {

bool tree_valid(const tiercomb::TieredRootedTree& t);

int tree_inversions(const tiercomb::TieredRootedTree& t);

// Storage-independent signature of a tiered tree: recursively sorted child
// blocks. Two storages carry the same tree iff their signatures are equal.
std::string tree_signature(const tiercomb::TieredRootedTree& t);

// Sweeps every parent function and every label/level assignment, keeps the
// valid ones, and deduplicates by signature. Returns one representative
// storage per class, keyed by signature.
std::map<std::string, tiercomb::TieredRootedTree> all_trees(int n, int max_label,
                                                            int max_level,
                                                            bool zero_only = false);

bool path_valid(const tiercomb::LabelledDyckPath2& p);

// Sweeps every Dyck word and every label assignment, keeps the valid ones.
std::vector<tiercomb::LabelledDyckPath2> all_paths(int n, int max_label,
                                                   bool zero_only = false);

// Whole squares between the path and the diagonal, computed from the
// shoelace formula for the enclosed polygon.
int path_area_by_shoelace(const tiercomb::LabelledDyckPath2& p);

}  // namespace oracle
