#include "tiercomb/dyck_path.hpp"

#include <stdexcept>

namespace tiercomb {

bool path_canonical_less(const LabelledDyckPath2& a, const LabelledDyckPath2& b) {
    // step letters ordered N < E, which is not their character order
    const size_t m = std::min(a.steps.size(), b.steps.size());
    for (size_t i = 0; i < m; ++i) {
        if (a.steps[i] != b.steps[i]) return a.steps[i] == 'N';
    }
    if (a.steps.size() != b.steps.size()) return a.steps.size() < b.steps.size();
    if (a.pix != b.pix) return a.pix < b.pix;
    return a.piy < b.piy;
}

namespace {

// columns of the n north steps; empty optional when the word is malformed
bool step_columns(const LabelledDyckPath2& p, std::vector<int>& cols) {
    const int n = p.size();
    if (static_cast<int>(p.steps.size()) != 2 * n) return false;
    cols.clear();
    int north = 0, east = 0;
    for (char c : p.steps) {
        if (c == 'N') {
            cols.push_back(east);
            ++north;
        } else if (c == 'E') {
            ++east;
            if (east > north) return false;  // dips below the diagonal
        } else {
            return false;
        }
    }
    return north == n && east == n;
}

}  // namespace

PathValidity validate_path(const LabelledDyckPath2& p) {
    PathValidity res;
    auto flag = [&res](PathViolation::Kind k, int row, std::string detail) {
        res.ok = false;
        res.violations.push_back({k, row, std::move(detail)});
    };

    const int n = p.size();
    if (static_cast<int>(p.piy.size()) != n) {
        flag(PathViolation::Kind::Structure, 0, "pix/piy lengths differ");
        return res;
    }
    std::vector<int> cols;
    if (!step_columns(p, cols)) {
        flag(PathViolation::Kind::Structure, 0,
             "step word is not a Dyck word of matching size");
        return res;
    }
    for (int i = 0; i < n; ++i) {
        if (p.pix[i] < 1 || p.piy[i] < 1) {
            flag(PathViolation::Kind::Structure, i + 1, "labels must be positive");
            return res;
        }
    }
    for (int i = 1; i < n; ++i) {
        const int east = cols[i] - cols[i - 1];
        const int need = (p.pix[i] <= p.pix[i - 1] ? 1 : 0) + (p.piy[i] <= p.piy[i - 1] ? 1 : 0);
        if (east < need) {
            flag(PathViolation::Kind::Row, i,
                 "row " + std::to_string(i) + ": " + std::to_string(east) +
                     " east step(s), labels need " + std::to_string(need));
        }
    }
    return res;
}

bool is_valid_path(const LabelledDyckPath2& p) { return validate_path(p).ok; }

PathValidity validate_sequence_pair(const SequencePair& sp) {
    PathValidity res;
    auto flag = [&res](PathViolation::Kind k, int row, std::string detail) {
        res.ok = false;
        res.violations.push_back({k, row, std::move(detail)});
    };
    const int n = sp.size();
    if (static_cast<int>(sp.b.size()) != n) {
        flag(PathViolation::Kind::Structure, 0, "a/b lengths differ");
        return res;
    }
    for (int i = 0; i < n; ++i) {
        if (sp.a[i] < 1 || sp.b[i] < 1) {
            flag(PathViolation::Kind::Structure, i + 1, "entries must be positive");
            return res;
        }
    }
    for (int i = 1; i < n; ++i) {
        if (sp.a[i] <= sp.a[i - 1] && sp.b[i] <= sp.b[i - 1]) {
            flag(PathViolation::Kind::Row, i,
                 "position " + std::to_string(i) + ": neither sequence increases");
        }
    }
    return res;
}

bool is_valid_sequence_pair(const SequencePair& sp) { return validate_sequence_pair(sp).ok; }

int north_step_column(const LabelledDyckPath2& p, int i) {
    if (i < 1 || i > p.size()) throw std::out_of_range("north step index out of range");
    std::vector<int> cols;
    if (!step_columns(p, cols)) throw std::invalid_argument("malformed step word");
    return cols[i - 1];
}

int east_steps_on_row(const LabelledDyckPath2& p, int i) {
    const int n = p.size();
    if (i < 0 || i > n) throw std::out_of_range("row index out of range");
    std::vector<int> cols;
    if (!step_columns(p, cols)) throw std::invalid_argument("malformed step word");
    if (n == 0) return 0;
    if (i == 0) return cols[0];
    if (i == n) return n - cols[n - 1];
    return cols[i] - cols[i - 1];
}

int area(const LabelledDyckPath2& p) {
    std::vector<int> cols;
    if (!step_columns(p, cols)) throw std::invalid_argument("malformed step word");
    int total = 0;
    for (int i = 0; i < p.size(); ++i) total += i - cols[i];
    return total;
}

WeakComposition x_composition(const LabelledDyckPath2& p) {
    return WeakComposition::counting(p.pix);
}

WeakComposition y_composition(const LabelledDyckPath2& p) {
    return WeakComposition::counting(p.piy);
}

SequencePair to_sequence_pair(const LabelledDyckPath2& p) {
    if (area(p) != 0) throw std::domain_error("path has positive area");
    return SequencePair{p.pix, p.piy};
}

LabelledDyckPath2 from_sequence_pair(const SequencePair& sp) {
    const PathValidity v = validate_sequence_pair(sp);
    if (!v.ok) throw std::invalid_argument("invalid sequence pair: " + v.violations[0].detail);
    LabelledDyckPath2 p;
    p.steps.reserve(2 * sp.size());
    for (int i = 0; i < sp.size(); ++i) p.steps += "NE";
    p.pix = sp.a;
    p.piy = sp.b;
    return p;
}

}  // namespace tiercomb
