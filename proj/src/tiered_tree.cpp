#include "tiercomb/tiered_tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace tiercomb {

namespace {

std::string vertex_str(const TieredRootedTree& t, int v) {
    return "v" + std::to_string(v) + "=(" + std::to_string(t.w[v - 1]) + "," +
           std::to_string(t.lv[v - 1]) + ")";
}

void check_vertex_range(const TieredRootedTree& t, int v) {
    if (v < 1 || v > t.size()) {
        throw std::out_of_range("vertex id " + std::to_string(v) + " out of range 1.." +
                                std::to_string(t.size()));
    }
}

}  // namespace

TreeValidity validate_tree(const TieredRootedTree& t) {
    TreeValidity res;
    auto flag = [&res](TreeViolation::Kind k, int u, int v, std::string detail) {
        res.ok = false;
        res.violations.push_back({k, u, v, std::move(detail)});
    };

    const int n = t.size();
    if (static_cast<int>(t.w.size()) != n || static_cast<int>(t.lv.size()) != n) {
        flag(TreeViolation::Kind::Structure, 0, 0, "parent/w/lv lengths differ");
        return res;
    }
    bool arrays_ok = true;
    for (int i = 1; i <= n; ++i) {
        if (t.parent[i - 1] < 0 || t.parent[i - 1] > n || t.parent[i - 1] == i) {
            flag(TreeViolation::Kind::Structure, i, 0,
                 "parent of v" + std::to_string(i) + " out of range");
            arrays_ok = false;
        }
        if (t.w[i - 1] < 1 || t.lv[i - 1] < 1) {
            flag(TreeViolation::Kind::Structure, i, 0,
                 "label/level of v" + std::to_string(i) + " must be positive");
            arrays_ok = false;
        }
    }
    if (!arrays_ok) return res;

    // every vertex must reach the root
    for (int i = 1; i <= n; ++i) {
        int cur = i;
        int steps = 0;
        while (cur != 0 && steps <= n) {
            cur = t.parent[cur - 1];
            ++steps;
        }
        if (cur != 0) {
            flag(TreeViolation::Kind::Structure, i, 0,
                 "v" + std::to_string(i) + " does not reach the root (cycle)");
            return res;
        }
    }

    // conditions 1-2 on edges not touching the root
    for (int v = 1; v <= n; ++v) {
        const int u = t.parent[v - 1];
        if (u == 0) continue;
        if (t.w[u - 1] == t.w[v - 1] || t.lv[u - 1] == t.lv[v - 1]) {
            flag(TreeViolation::Kind::Condition1, u, v,
                 "edge " + vertex_str(t, u) + "-" + vertex_str(t, v) +
                     " repeats a label or a level");
        } else if ((t.w[u - 1] < t.w[v - 1]) != (t.lv[u - 1] < t.lv[v - 1])) {
            flag(TreeViolation::Kind::Condition2, u, v,
                 "edge " + vertex_str(t, u) + "-" + vertex_str(t, v) +
                     " orders label and level oppositely");
        }
    }

    // condition 3: siblings (children of the root included) carry distinct pairs
    std::map<std::pair<int, VertexData>, int> seen;  // (parent, data) -> vertex
    for (int v = 1; v <= n; ++v) {
        const std::pair<int, VertexData> key{t.parent[v - 1], {t.w[v - 1], t.lv[v - 1]}};
        auto [it, inserted] = seen.emplace(key, v);
        if (!inserted) {
            flag(TreeViolation::Kind::Condition3, it->second, v,
                 "siblings " + vertex_str(t, it->second) + " and " + vertex_str(t, v) +
                     " share the same (label, level)");
        }
    }
    return res;
}

bool is_valid_tree(const TieredRootedTree& t) { return validate_tree(t).ok; }

VertexData vertex_data(const TieredRootedTree& t, int v) {
    if (v == 0) return {0, 0};
    check_vertex_range(t, v);
    return {t.w[v - 1], t.lv[v - 1]};
}

bool compatible(VertexData a, VertexData b) {
    return (a.lv < b.lv && a.w < b.w) || (a.lv > b.lv && a.w > b.w);
}

bool is_descendant(const TieredRootedTree& t, int v, int u) {
    check_vertex_range(t, v);
    check_vertex_range(t, u);
    int cur = t.parent[v - 1];
    int steps = 0;
    while (cur != 0 && steps <= t.size()) {
        if (cur == u) return true;
        cur = t.parent[cur - 1];
        ++steps;
    }
    return false;
}

bool is_inversion(const TieredRootedTree& t, int u, int v) {
    check_vertex_range(t, u);
    check_vertex_range(t, v);
    if (!is_descendant(t, v, u)) return false;
    if (!compatible(vertex_data(t, v), vertex_data(t, t.parent[u - 1]))) return false;
    const VertexData du = vertex_data(t, u);
    const VertexData dv = vertex_data(t, v);
    return dv.w < du.w || (dv.w == du.w && dv.lv > du.lv);
}

int inv_count(const TieredRootedTree& t) {
    const int n = t.size();
    std::vector<std::vector<int>> children(n + 1);
    for (int v = 1; v <= n; ++v) children[t.parent[v - 1]].push_back(v);

    int count = 0;
    std::vector<int> chain;  // proper ancestors of the vertex being visited
    auto walk = [&](auto&& self, int v) -> void {
        const VertexData dv = vertex_data(t, v);
        for (int u : chain) {
            const VertexData du = vertex_data(t, u);
            if (!compatible(dv, vertex_data(t, t.parent[u - 1]))) continue;
            if (dv.w < du.w || (dv.w == du.w && dv.lv > du.lv)) ++count;
        }
        chain.push_back(v);
        for (int c : children[v]) self(self, c);
        chain.pop_back();
    };
    for (int r : children[0]) walk(walk, r);
    return count;
}

WeakComposition label_composition(const TieredRootedTree& t) {
    return WeakComposition::counting(t.w);
}

WeakComposition level_composition(const TieredRootedTree& t) {
    return WeakComposition::counting(t.lv);
}

int min_level(const TieredRootedTree& t) {
    if (t.size() == 0) throw std::domain_error("no levels: tree has no non-root vertices");
    int m = t.lv[0];
    for (int x : t.lv) m = std::min(m, x);
    return m;
}

int max_level(const TieredRootedTree& t) {
    if (t.size() == 0) throw std::domain_error("no levels: tree has no non-root vertices");
    int m = t.lv[0];
    for (int x : t.lv) m = std::max(m, x);
    return m;
}

int reverse_level(const TieredRootedTree& t, int v) {
    check_vertex_range(t, v);
    return max_level(t) + min_level(t) - t.lv[v - 1];
}

namespace {

// path root -> v as vertex ids, starting with 0
std::vector<int> root_path(const TieredRootedTree& t, int v) {
    std::vector<int> path;
    int cur = v;
    int steps = 0;
    while (cur != 0 && steps <= t.size()) {
        path.push_back(cur);
        cur = t.parent[cur - 1];
        ++steps;
    }
    path.push_back(0);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

bool precedes(const TieredRootedTree& t, int u, int v) {
    check_vertex_range(t, u);
    check_vertex_range(t, v);
    if (u == v) return false;
    const VertexData du = vertex_data(t, u);
    const VertexData dv = vertex_data(t, v);
    if (du.w != dv.w) return du.w < dv.w;
    if (du.lv != dv.lv) return du.lv > dv.lv;
    if (is_descendant(t, v, u)) return true;
    if (is_descendant(t, u, v)) return false;

    // different branches: compare the children of the least common ancestor,
    // reversed. Those two are siblings, so labels/levels alone decide.
    const std::vector<int> pu = root_path(t, u);
    const std::vector<int> pv = root_path(t, v);
    size_t k = 0;
    while (k + 1 < pu.size() && k + 1 < pv.size() && pu[k + 1] == pv[k + 1]) ++k;
    const VertexData cu = vertex_data(t, pu[k + 1]);
    const VertexData cv = vertex_data(t, pv[k + 1]);
    if (cv.w != cu.w) return cv.w < cu.w;
    if (cv.lv != cu.lv) return cv.lv > cu.lv;
    return false;  // unreachable on valid trees: siblings never tie
}

TieredRootedTree to_tree(const TieredRootedForest& f) {
    return {f.parent, f.w, f.lv};
}

TieredRootedForest to_forest(const TieredRootedTree& t) {
    TieredRootedForest f{{}, t.parent, t.w, t.lv};
    for (int v = 1; v <= t.size(); ++v) {
        if (t.parent[v - 1] == 0) f.roots.push_back(v);
    }
    return f;
}

}  // namespace tiercomb
