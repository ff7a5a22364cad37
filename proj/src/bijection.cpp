#include "tiercomb/bijection.hpp"

#include <algorithm>
#include <stdexcept>

namespace tiercomb {

std::vector<int> exploration_order(const TieredRootedTree& t) {
    const int n = t.size();
    std::vector<std::vector<int>> children(n + 1);
    for (int v = 1; v <= n; ++v) children[t.parent[v - 1]].push_back(v);
    for (auto& kids : children) {
        std::sort(kids.begin(), kids.end(), [&t](int a, int b) {
            if (t.w[a - 1] != t.w[b - 1]) return t.w[a - 1] > t.w[b - 1];
            if (t.lv[a - 1] != t.lv[b - 1]) return t.lv[a - 1] < t.lv[b - 1];
            return a < b;  // valid trees never get here: siblings never tie
        });
    }
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> stack(children[0].rbegin(), children[0].rend());
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        stack.insert(stack.end(), children[v].rbegin(), children[v].rend());
    }
    return order;
}

bool is_canonical(const TieredRootedTree& t) {
    const std::vector<int> order = exploration_order(t);
    for (int k = 0; k < t.size(); ++k) {
        if (order[k] != k + 1) return false;
    }
    return true;
}

TieredRootedTree canonicalize(const TieredRootedTree& t) {
    const int n = t.size();
    const std::vector<int> order = exploration_order(t);
    std::vector<int> rank(n + 1, 0);  // old id -> new id, root fixed
    for (int k = 0; k < n; ++k) rank[order[k]] = k + 1;
    TieredRootedTree out;
    out.parent.resize(n);
    out.w.resize(n);
    out.lv.resize(n);
    for (int k = 0; k < n; ++k) {
        const int old = order[k];
        out.parent[k] = rank[t.parent[old - 1]];
        out.w[k] = t.w[old - 1];
        out.lv[k] = t.lv[old - 1];
    }
    return out;
}

SequencePair tree_to_pair(const TieredRootedTree& t) {
    if (inv_count(t) != 0) {
        throw std::domain_error("the map is defined only on trees without inversions");
    }
    const int n = t.size();
    if (n == 0) return {};
    const std::vector<int> order = exploration_order(t);
    const int hi = max_level(t), lo = min_level(t);
    SequencePair d;
    d.a.resize(n);
    d.b.resize(n);
    for (int i = 0; i < n; ++i) {
        const int v = order[n - 1 - i];  // last visited vertex first
        d.a[i] = t.w[v - 1];
        d.b[i] = hi + lo - t.lv[v - 1];
    }
    return d;
}

TieredRootedTree pair_to_tree(const SequencePair& d) {
    const PathValidity val = validate_sequence_pair(d);
    if (!val.ok) {
        throw std::invalid_argument("invalid sequence pair: " + val.violations[0].detail);
    }
    const int n = d.size();
    TieredRootedTree t;
    if (n == 0) return t;

    int hi = d.b[0], lo = d.b[0];
    for (int x : d.b) {
        hi = std::max(hi, x);
        lo = std::min(lo, x);
    }
    t.parent.resize(n);
    t.w.resize(n);
    t.lv.resize(n);
    for (int i = 1; i <= n; ++i) {
        t.w[i - 1] = d.a[n - i];
        t.lv[i - 1] = hi + lo - d.b[n - i];
    }

    // strictly before in the construction order; the new vertex always has
    // the larger index, so ties in (label, level) never go its way
    auto new_before = [&t](VertexData nv, int x) {
        return nv.w < t.w[x - 1] || (nv.w == t.w[x - 1] && nv.lv > t.lv[x - 1]);
    };

    std::vector<int> line{0};  // ancestry line of the last placed vertex
    for (int k = 1; k <= n; ++k) {
        const VertexData nv{t.w[k - 1], t.lv[k - 1]};
        const size_t s = line.size() - 1;
        size_t m = s;
        for (size_t j = 0; j < s; ++j) {
            const VertexData dj =
                line[j] == 0 ? VertexData{0, 0}
                             : VertexData{t.w[line[j] - 1], t.lv[line[j] - 1]};
            if (compatible(nv, dj) && new_before(nv, line[j + 1])) {
                m = j;
                break;
            }
        }
        t.parent[k - 1] = line[m];
        line.resize(m + 1);
        line.push_back(k);
    }
    return t;
}

bool orders_agree(const TieredRootedTree& t) {
    const int n = t.size();
    auto index_order = [&t](int i, int j) {
        if (t.w[i - 1] != t.w[j - 1]) return t.w[i - 1] < t.w[j - 1];
        if (t.lv[i - 1] != t.lv[j - 1]) return t.lv[i - 1] > t.lv[j - 1];
        return i < j;
    };
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (index_order(i, j) != precedes(t, i, j)) return false;
        }
    }
    return true;
}

}  // namespace tiercomb
