#pragma once

#include <string>

#include "tiercomb/dyck_path.hpp"
#include "tiercomb/tiered_tree.hpp"

namespace tiercomb {

// Deterministic drawings. Trees place their children right-to-left in
// exploration order (first explored child rightmost), vertices annotated
// "(w, lv)"; paths are drawn on a square grid with both labels in the cell
// right of each north step.

std::string tree_to_dot(const TieredRootedTree& t);
std::string tree_to_svg(const TieredRootedTree& t);
std::string path_to_svg(const LabelledDyckPath2& p);

}  // namespace tiercomb
