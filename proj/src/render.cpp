#include "tiercomb/render.hpp"

#include <algorithm>
#include <vector>

#include "tiercomb/bijection.hpp"

namespace tiercomb {

namespace {

std::string node_label(const TieredRootedTree& t, int v) {
    return "(" + std::to_string(t.w[v - 1]) + ", " + std::to_string(t.lv[v - 1]) + ")";
}

int depth_of(const TieredRootedTree& t, int v) {
    int d = 0;
    while (v != 0) {
        v = t.parent[v - 1];
        ++d;
    }
    return d;
}

}  // namespace

std::string tree_to_dot(const TieredRootedTree& t) {
    const int n = t.size();
    const std::vector<int> order = exploration_order(t);
    std::vector<std::vector<int>> children(n + 1);
    for (int v : order) children[t.parent[v - 1]].push_back(v);

    std::string out;
    out += "digraph tiered_tree {\n";
    out += "  graph [ordering=out];\n";
    out += "  node [shape=circle];\n";
    out += "  v0 [label=\"r\", style=filled, fillcolor=gray];\n";
    for (int v = 1; v <= n; ++v) {
        out += "  v" + std::to_string(v) + " [label=\"" + node_label(t, v) + "\"];\n";
    }
    // children right-to-left in exploration order: emit them reversed so the
    // first explored child lands rightmost
    for (int p = 0; p <= n; ++p) {
        for (auto it = children[p].rbegin(); it != children[p].rend(); ++it) {
            out += "  v" + std::to_string(p) + " -> v" + std::to_string(*it) + ";\n";
        }
    }
    out += "}\n";
    return out;
}

std::string tree_to_svg(const TieredRootedTree& t) {
    const int n = t.size();
    const std::vector<int> order = exploration_order(t);

    // x: exploration rank counted from the right (root rightmost);
    // y: depth, root at the bottom. Subtrees occupy disjoint x ranges, so
    // the drawing is planar.
    const int dx = 70, dy = 70, r = 22, margin = 40;
    std::vector<int> xs(n + 1), ys(n + 1);
    xs[0] = margin + n * dx;
    int max_depth = 0;
    for (int k = 0; k < n; ++k) {
        const int v = order[k];
        xs[v] = margin + (n - 1 - k) * dx;
        max_depth = std::max(max_depth, depth_of(t, v));
    }
    ys[0] = margin + max_depth * dy;
    for (int v = 1; v <= n; ++v) ys[v] = margin + (max_depth - depth_of(t, v)) * dy;

    const int width = 2 * margin + (n + 1) * dx;
    const int height = 2 * margin + (max_depth + 1) * dy;
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\">\n";
    for (int v = 1; v <= n; ++v) {
        const int p = t.parent[v - 1];
        out += "<line x1=\"" + std::to_string(xs[p]) + "\" y1=\"" + std::to_string(ys[p]) +
               "\" x2=\"" + std::to_string(xs[v]) + "\" y2=\"" + std::to_string(ys[v]) +
               "\" stroke=\"black\"/>\n";
    }
    for (int v = 0; v <= n; ++v) {
        out += "<circle cx=\"" + std::to_string(xs[v]) + "\" cy=\"" + std::to_string(ys[v]) +
               "\" r=\"" + std::to_string(r) + "\" fill=\"" +
               (v == 0 ? std::string("lightgray") : std::string("white")) +
               "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + std::to_string(xs[v]) + "\" y=\"" + std::to_string(ys[v] + 4) +
               "\" text-anchor=\"middle\" font-size=\"12\">" +
               (v == 0 ? std::string("r") : node_label(t, v)) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string path_to_svg(const LabelledDyckPath2& p) {
    const int n = p.size();
    const int cell = 40, margin = 20;
    const int side = n * cell;
    const int width = side + 2 * margin, height = side + 2 * margin;
    auto X = [&](int gx) { return margin + gx * cell; };
    auto Y = [&](int gy) { return margin + side - gy * cell; };  // y axis upwards

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\">\n";
    for (int i = 0; i <= n; ++i) {
        out += "<line x1=\"" + std::to_string(X(0)) + "\" y1=\"" + std::to_string(Y(i)) +
               "\" x2=\"" + std::to_string(X(n)) + "\" y2=\"" + std::to_string(Y(i)) +
               "\" stroke=\"lightgray\"/>\n";
        out += "<line x1=\"" + std::to_string(X(i)) + "\" y1=\"" + std::to_string(Y(0)) +
               "\" x2=\"" + std::to_string(X(i)) + "\" y2=\"" + std::to_string(Y(n)) +
               "\" stroke=\"lightgray\"/>\n";
    }
    out += "<line x1=\"" + std::to_string(X(0)) + "\" y1=\"" + std::to_string(Y(0)) +
           "\" x2=\"" + std::to_string(X(n)) + "\" y2=\"" + std::to_string(Y(n)) +
           "\" stroke=\"gray\"/>\n";

    std::string points;
    int gx = 0, gy = 0;
    points += std::to_string(X(0)) + "," + std::to_string(Y(0));
    for (char c : p.steps) {
        if (c == 'N') ++gy;
        else ++gx;
        points += " " + std::to_string(X(gx)) + "," + std::to_string(Y(gy));
    }
    out += "<polyline points=\"" + points +
           "\" fill=\"none\" stroke=\"blue\" stroke-width=\"3\"/>\n";

    int col = 0, row = 0;
    for (char c : p.steps) {
        if (c == 'N') {
            out += "<text x=\"" + std::to_string(X(col) + cell / 2) + "\" y=\"" +
                   std::to_string(Y(row + 1) + cell / 2 + 4) +
                   "\" text-anchor=\"middle\" font-size=\"12\">" +
                   std::to_string(p.pix[row]) + "," + std::to_string(p.piy[row]) + "</text>\n";
            ++row;
        } else {
            ++col;
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace tiercomb
