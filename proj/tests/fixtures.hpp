#pragma once

#include "tiercomb/dyck_path.hpp"
#include "tiercomb/tiered_tree.hpp"

// Objects shared across the test suites.
namespace fixtures {

// Root with children (2,1) and (4,3); (2,1)->(4,2)->(3,1)->(4,3);
// (4,3) -> {(2,2)->(1,1), (2,1)}. Has exactly five inversion pairs and
// compositions ((1,3,1,3), (4,2,2)).
inline tiercomb::TieredRootedTree inv5_tree() {
    return {{0, 0, 1, 3, 4, 2, 6, 2},
            {2, 4, 4, 3, 4, 2, 1, 2},
            {1, 3, 2, 1, 3, 2, 1, 1}};
}

// Nine-vertex inversion-free tree stored in exploration order; its image
// under the map is explored_pair9().
inline tiercomb::TieredRootedTree explored_tree9() {
    return {{0, 0, 0, 0, 4, 5, 5, 5, 8},
            {3, 2, 1, 1, 4, 3, 2, 2, 4},
            {3, 2, 2, 3, 4, 3, 2, 3, 4}};
}

inline tiercomb::SequencePair explored_pair9() {
    return {{4, 2, 2, 3, 4, 1, 1, 2, 3}, {2, 3, 4, 3, 2, 3, 4, 4, 3}};
}

// Size-8 labelled path with area 7 and compositions ((3,1,2,1,1),(1,2,0,3,2)).
inline tiercomb::LabelledDyckPath2 area7_path() {
    return {"NNENEENNNEENENEE",
            {1, 2, 4, 1, 3, 5, 1, 3},
            {1, 4, 2, 2, 4, 5, 4, 5}};
}

// (NE)^n with strictly increasing labels 1..n.
inline tiercomb::LabelledDyckPath2 staircase(int n) {
    tiercomb::LabelledDyckPath2 p;
    for (int i = 1; i <= n; ++i) {
        p.steps += "NE";
        p.pix.push_back(i);
        p.piy.push_back(i);
    }
    return p;
}

}  // namespace fixtures
