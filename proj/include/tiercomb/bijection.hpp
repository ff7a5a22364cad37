#pragma once

#include <vector>

#include "tiercomb/dyck_path.hpp"
#include "tiercomb/tiered_tree.hpp"

namespace tiercomb {

// Depth-first visit order of the non-root vertices: at each vertex the
// children are taken from the largest to the smallest label, ties from the
// lowest to the highest level. Returns vertex ids, visit order.
std::vector<int> exploration_order(const TieredRootedTree& t);

// True iff storage order already equals the exploration order.
bool is_canonical(const TieredRootedTree& t);

// Relabels storage so that vertex ids follow the exploration order. Two
// valid trees describe the same tiered tree iff their canonical forms are
// equal.
TieredRootedTree canonicalize(const TieredRootedTree& t);

// Reads labels and reversed levels along the exploration order, last visited
// vertex first: a_i = w(v_{n+1-i}), b_i = lv'(v_{n+1-i}). Defined on trees
// with no inversions; throws std::domain_error otherwise.
SequencePair tree_to_pair(const TieredRootedTree& t);

// Inverse construction. Vertices are created right-to-left from the pair
// (w(v_i) = a_{n+1-i}, lv(v_i) = L + l - b_{n+1-i}) and each new vertex is
// attached to the deepest admissible ancestor on the current rightmost
// branch: parent(v_{k+1}) = v_{i_m} with
//   m = min({ 0 <= j < s : v_{k+1} compatible with v_{i_j} and
//             v_{k+1} strictly before v_{i_{j+1}} } U { s }),
// "before" meaning smaller label, or equal label and larger level (a later
// construction index never wins a tie). The result is a valid tree with no
// inversions, in canonical storage. Throws std::invalid_argument when the
// input violates the sequence-pair condition.
TieredRootedTree pair_to_tree(const SequencePair& d);

// True iff the order (label, then larger level, then smaller storage index)
// agrees with precedes() on all vertex pairs of t.
bool orders_agree(const TieredRootedTree& t);

}  // namespace tiercomb
