#include "tiercomb/verification.hpp"

#include <set>

#include "tiercomb/bijection.hpp"
#include "tiercomb/dyck_path.hpp"
#include "tiercomb/path_enumeration.hpp"
#include "tiercomb/tiered_tree.hpp"
#include "tiercomb/tree_enumeration.hpp"

namespace tiercomb {

GenPolynomial tree_polynomial(int n, int max_label, int max_level, bool zero_only) {
    GenPolynomial p(max_label, max_level);
    enumerate_trees(n, max_label, max_level,
                    zero_only ? TreeFilter::ZeroInversion : TreeFilter::All,
                    [&p, zero_only](const TieredRootedTree& t) {
                        p.add_monomial(zero_only ? 0 : inv_count(t), label_composition(t),
                                       level_composition(t));
                    });
    return p;
}

GenPolynomial tree_polynomial(int n, bool zero_only) {
    return tree_polynomial(n, n, n, zero_only);
}

GenPolynomial path_polynomial(int n, int max_label, bool zero_only) {
    GenPolynomial p(max_label, max_label);
    enumerate_paths(n, max_label, zero_only ? PathFilter::AreaZero : PathFilter::All,
                    [&p, zero_only](const LabelledDyckPath2& path) {
                        p.add_monomial(zero_only ? 0 : area(path), x_composition(path),
                                       y_composition(path));
                    });
    return p;
}

GenPolynomial path_polynomial(int n, bool zero_only) {
    return path_polynomial(n, n, zero_only);
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["mode"] = mode;
    j["status"] = pass ? "pass" : "fail";
    j["witness"] = witness;
    j["counts"] = counts;
    j["note"] = note;
    return j;
}

namespace {

std::string tuple_notation(const nlohmann::json& arr) {
    std::string s = "(";
    for (size_t i = 0; i < arr.size(); ++i) {
        if (i) s += ',';
        s += arr[i].dump();
    }
    return s + ")";
}

}  // namespace

std::string VerificationReport::to_text() const {
    std::string s;
    s += "mode: " + mode + "\n";
    s += "n: " + std::to_string(n) + "\n";
    s += std::string("status: ") + (pass ? "pass" : "fail") + "\n";
    s += "counts: " + counts.dump() + "\n";
    if (!witness.is_null()) {
        if (witness.contains("alpha") && witness.contains("beta")) {
            s += "witness: alpha=" + tuple_notation(witness.at("alpha")) +
                 " beta=" + tuple_notation(witness.at("beta")) +
                 " tree_count=" + witness.at("tree_count").dump() +
                 " path_count=" + witness.at("path_count").dump() + "\n";
        } else {
            s += "witness: " + witness.dump() + "\n";
        }
    }
    if (!note.empty()) s += "note: " + note + "\n";
    return s;
}

CompositionCounts composition_counts(const GenPolynomial& q0) {
    CompositionCounts counts;
    for (const auto& [key, coeff] : q0.terms()) {
        const CompositionPair pair{WeakComposition(key.x), WeakComposition(key.y)};
        counts[pair] = checked_add(counts[pair], coeff);
    }
    return counts;
}

namespace {

long long count_or_zero(const CompositionCounts& m, const CompositionPair& key) {
    auto it = m.find(key);
    return it == m.end() ? 0 : it->second;
}

nlohmann::json composition_json(const WeakComposition& c) {
    return nlohmann::json(c.entries());
}

long long counts_total(const CompositionCounts& m) {
    long long total = 0;
    for (const auto& [key, c] : m) total = checked_add(total, c);
    return total;
}

}  // namespace

VerificationReport compare_q0_counts(int n, const CompositionCounts& tree_counts,
                                     const CompositionCounts& path_counts) {
    VerificationReport report;
    report.n = n;
    report.mode = "q0_theorem";
    report.counts = {{"tree_pairs", tree_counts.size()},
                     {"path_pairs", path_counts.size()},
                     {"tree_total", counts_total(tree_counts)},
                     {"path_total", counts_total(path_counts)}};

    std::set<CompositionPair> keys;
    for (const auto& [key, c] : tree_counts) keys.insert(key);
    for (const auto& [key, c] : path_counts) keys.insert({key.first, rev(key.second)});

    for (const auto& key : keys) {
        const long long t = count_or_zero(tree_counts, key);
        const long long p = count_or_zero(path_counts, {key.first, rev(key.second)});
        if (t != p) {
            report.pass = false;
            report.witness = {{"alpha", composition_json(key.first)},
                              {"beta", composition_json(key.second)},
                              {"tree_count", t},
                              {"path_count", p}};
            return report;
        }
    }
    report.pass = true;
    return report;
}

VerificationReport compare_polynomials(int n, const GenPolynomial& tree_side,
                                       const GenPolynomial& path_side) {
    VerificationReport report;
    report.n = n;
    report.mode = "full_conjecture";
    report.counts = {{"tree_terms", tree_side.terms().size()},
                     {"path_terms", path_side.terms().size()},
                     {"tree_total", tree_side.total()},
                     {"path_total", path_side.total()}};

    std::set<GenPolynomial::Term> keys;
    for (const auto& [key, c] : tree_side.terms()) keys.insert(key);
    for (const auto& [key, c] : path_side.terms()) keys.insert(key);
    for (const auto& key : keys) {
        const long long t = tree_side.coefficient(key);
        const long long p = path_side.coefficient(key);
        if (t != p) {
            report.pass = false;
            report.witness = {{"q", key.q},
                              {"x", key.x},
                              {"y", key.y},
                              {"tree_coefficient", t},
                              {"path_coefficient", p}};
            return report;
        }
    }
    report.pass = true;
    return report;
}

VerificationReport verify_q0_theorem(int n) {
    const GenPolynomial t0 = tree_polynomial(n, n, n, true);
    const GenPolynomial p0 = path_polynomial(n, n, true);
    return compare_q0_counts(n, composition_counts(t0), composition_counts(p0));
}

VerificationReport verify_full_conjecture(int n) {
    VerificationReport report =
        compare_polynomials(n, tree_polynomial(n, n, n, false), path_polynomial(n, n, false));
    report.note =
        "equality of the two generating polynomials is conjectural; "
        "a fail is an empirical finding, not a software defect";
    return report;
}

VerificationReport verify_symmetry(int n) {
    const GenPolynomial p = path_polynomial(n, n, false);
    VerificationReport report;
    report.n = n;
    report.mode = "symmetry";
    report.counts = {{"terms", p.terms().size()}, {"total", p.total()}};
    for (const VarFamily family : {VarFamily::X, VarFamily::Y}) {
        const int len = family == VarFamily::X ? p.nx() : p.ny();
        for (int i = 0; i + 1 < len; ++i) {
            GenPolynomial swapped(p.nx(), p.ny());
            for (const auto& [key, coeff] : p.terms()) {
                GenPolynomial::Term k = key;
                auto& e = family == VarFamily::X ? k.x : k.y;
                std::swap(e[i], e[i + 1]);
                swapped.add(k, coeff);
            }
            if (!(swapped == p)) {
                report.pass = false;
                report.witness = {{"family", family == VarFamily::X ? "x" : "y"},
                                  {"positions", {i + 1, i + 2}}};
                return report;
            }
        }
    }
    report.pass = true;
    return report;
}

}  // namespace tiercomb
