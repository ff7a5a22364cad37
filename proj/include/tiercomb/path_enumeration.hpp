#pragma once

#include <functional>
#include <vector>

#include "tiercomb/dyck_path.hpp"

namespace tiercomb {

enum class PathFilter { All, AreaZero };

// Visits every 2-labelled Dyck path of size n with labels in [1, max_label]
// exactly once, ordered by (step word with N before E, pix, piy). Partial
// label assignments that already break a row condition are pruned.
// With AreaZero the paths are produced through sequence pairs directly.
void enumerate_paths(int n, int max_label, PathFilter filter,
                     const std::function<void(const LabelledDyckPath2&)>& visit);

std::vector<LabelledDyckPath2> collect_paths(int n, int max_label,
                                             PathFilter filter = PathFilter::All);

long long count_paths(int n, int max_label, PathFilter filter);

}  // namespace tiercomb
