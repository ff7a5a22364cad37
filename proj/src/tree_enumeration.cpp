#include "tiercomb/tree_enumeration.hpp"

#include <stdexcept>

namespace tiercomb {

namespace {

// Generates canonical storages directly: the parent array grows in
// depth-first order (each new vertex attaches somewhere on the rightmost
// branch) and sibling blocks are forced into visit order (labels weakly
// decreasing, levels strictly increasing on label ties). Every isomorphism
// class is reached through exactly one such storage.
//
// The three assignment phases are nested shape -> labels -> levels so that
// complete trees appear in lexicographic (parent, w, lv) order.
class TreeEnumerator {
public:
    TreeEnumerator(const TreeEnumOptions& opt,
                   const std::function<void(const TieredRootedTree&)>& visit)
        : opt_(opt), visit_(visit), n_(opt.n) {
        if (n_ < 0) throw std::invalid_argument("tree size must be >= 0");
        if (opt_.max_label < 1 || opt_.max_level < 1) {
            throw std::invalid_argument("label/level bounds must be >= 1");
        }
        parent_.resize(n_);
        w_.resize(n_);
        lv_.resize(n_);
        prev_sib_.assign(n_, 0);
        last_child_.assign(n_ + 1, 0);
    }

    void run() {
        if (opt_.label_content) {
            if (opt_.label_content->weight() != n_ ||
                opt_.label_content->support_max() > opt_.max_label) {
                return;  // constraint unsatisfiable within the bounds
            }
            label_budget_ = opt_.label_content->padded(opt_.max_label);
        }
        if (opt_.level_content) {
            if (opt_.level_content->weight() != n_ ||
                opt_.level_content->support_max() > opt_.max_level) {
                return;
            }
            level_budget_ = opt_.level_content->padded(opt_.max_level);
        }
        if (n_ == 0) {
            visit_(TieredRootedTree{});
            return;
        }
        std::vector<int> root_line{0};
        grow_shape(1, root_line);
    }

private:
    // line = ancestry line of vertex k-1, root first (for k = 1, just {0});
    // indices along the line increase, so iterating it keeps the parent
    // array lexicographically ordered.
    void grow_shape(int k, const std::vector<int>& line) {
        if (k > n_) {
            assign_labels(1);
            return;
        }
        for (size_t j = 0; j < line.size(); ++j) {
            const int p = line[j];
            parent_[k - 1] = p;
            prev_sib_[k - 1] = last_child_[p];
            const int saved = last_child_[p];
            last_child_[p] = k;
            std::vector<int> next_line(line.begin(), line.begin() + j + 1);
            next_line.push_back(k);
            grow_shape(k + 1, next_line);
            last_child_[p] = saved;
        }
    }

    void assign_labels(int k) {
        if (k > n_) {
            assign_levels(1);
            return;
        }
        const int p = parent_[k - 1];
        const int sib = prev_sib_[k - 1];
        int hi = opt_.max_label;
        if (sib != 0) hi = std::min(hi, w_[sib - 1]);  // visit order: labels weakly decrease
        for (int x = 1; x <= hi; ++x) {
            if (p != 0 && w_[p - 1] == x) continue;  // condition 1 (labels)
            if (!label_budget_.empty()) {
                if (label_budget_[x - 1] == 0) continue;
                --label_budget_[x - 1];
            }
            w_[k - 1] = x;
            assign_labels(k + 1);
            if (!label_budget_.empty()) ++label_budget_[x - 1];
        }
    }

    void assign_levels(int k) {
        if (k > n_) {
            visit_(TieredRootedTree{parent_, w_, lv_});
            return;
        }
        const int p = parent_[k - 1];
        const int sib = prev_sib_[k - 1];
        for (int y = 1; y <= opt_.max_level; ++y) {
            // label tie among siblings: the later one sits on a strictly
            // higher level (this is both the visit order and condition 3)
            if (sib != 0 && w_[sib - 1] == w_[k - 1] && y <= lv_[sib - 1]) continue;
            if (p != 0) {
                if (lv_[p - 1] == y) continue;                         // condition 1 (levels)
                if ((w_[p - 1] < w_[k - 1]) != (lv_[p - 1] < y)) continue;  // condition 2
            }
            if (!level_budget_.empty() && level_budget_[y - 1] == 0) continue;
            if (opt_.filter == TreeFilter::ZeroInversion && creates_inversion(k, y)) continue;
            lv_[k - 1] = y;
            if (!level_budget_.empty()) --level_budget_[y - 1];
            assign_levels(k + 1);
            if (!level_budget_.empty()) ++level_budget_[y - 1];
        }
    }

    // Would vertex k at level y close an inversion with one of its proper
    // ancestors? All ancestor data is already assigned (parents precede
    // children in storage), so a partial tree free of inversions stays so.
    bool creates_inversion(int k, int y) const {
        const VertexData dk{w_[k - 1], y};
        int u = parent_[k - 1];
        while (u != 0) {
            const int pu = parent_[u - 1];
            const VertexData dpu =
                pu == 0 ? VertexData{0, 0} : VertexData{w_[pu - 1], lv_[pu - 1]};
            if (compatible(dk, dpu)) {
                if (dk.w < w_[u - 1] || (dk.w == w_[u - 1] && y > lv_[u - 1])) return true;
            }
            u = pu;
        }
        return false;
    }

    const TreeEnumOptions& opt_;
    const std::function<void(const TieredRootedTree&)>& visit_;
    const int n_;
    std::vector<int> parent_, w_, lv_;
    std::vector<int> prev_sib_;    // previous sibling of each vertex, 0 if none
    std::vector<int> last_child_;  // most recent child per vertex in the prefix
    std::vector<int> label_budget_;
    std::vector<int> level_budget_;
};

}  // namespace

void enumerate_trees(const TreeEnumOptions& opt,
                     const std::function<void(const TieredRootedTree&)>& visit) {
    TreeEnumerator(opt, visit).run();
}

void enumerate_trees(int n, int max_label, int max_level, TreeFilter filter,
                     const std::function<void(const TieredRootedTree&)>& visit) {
    TreeEnumOptions opt;
    opt.n = n;
    opt.max_label = max_label;
    opt.max_level = max_level;
    opt.filter = filter;
    enumerate_trees(opt, visit);
}

std::vector<TieredRootedTree> collect_trees(int n, int max_label, int max_level,
                                            TreeFilter filter) {
    std::vector<TieredRootedTree> out;
    enumerate_trees(n, max_label, max_level, filter,
                    [&out](const TieredRootedTree& t) { out.push_back(t); });
    return out;
}

long long count_trees(const TreeEnumOptions& opt) {
    long long count = 0;
    enumerate_trees(opt, [&count](const TieredRootedTree&) { ++count; });
    return count;
}

}  // namespace tiercomb
