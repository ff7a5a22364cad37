#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "tiercomb/gen_polynomial.hpp"
#include "tiercomb/weak_composition.hpp"

namespace tiercomb {

// Sum of q^inv x^alpha(T) y^beta(T) over all trees of size n with labels in
// [1, max_label] and levels in [1, max_level] (inversion-free trees only
// when zero_only). Variable counts are max_label and max_level.
GenPolynomial tree_polynomial(int n, int max_label, int max_level, bool zero_only);
GenPolynomial tree_polynomial(int n, bool zero_only = false);  // bounds (n, n)

// Sum of q^area x^alpha(p) y^beta(p) over all 2-labelled Dyck paths of size
// n with labels in [1, max_label].
GenPolynomial path_polynomial(int n, int max_label, bool zero_only);
GenPolynomial path_polynomial(int n, bool zero_only = false);  // labels <= n

struct VerificationReport {
    int n = 0;
    std::string mode;  // "q0_theorem" | "full_conjecture" | "symmetry"
    bool pass = false;
    nlohmann::json witness;  // null, or the first mismatch found
    nlohmann::json counts;   // summary figures
    std::string note;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

using CompositionPair = std::pair<WeakComposition, WeakComposition>;
using CompositionCounts = std::map<CompositionPair, long long>;

// Per-(alpha, beta) coefficients of a q^0 part.
CompositionCounts composition_counts(const GenPolynomial& q0);

// Comparator behind verify_q0_theorem, exposed so the failure path can be
// exercised with injected counts: checks tree[(alpha, beta)] equals
// path[(alpha, rev(beta))] over the union of supports.
VerificationReport compare_q0_counts(int n, const CompositionCounts& tree_counts,
                                     const CompositionCounts& path_counts);

// Comparator behind verify_full_conjecture: exact polynomial equality with
// the first mismatching monomial as witness.
VerificationReport compare_polynomials(int n, const GenPolynomial& tree_side,
                                       const GenPolynomial& path_side);

// Counting identity at statistic zero: the inversion-free trees with
// compositions (alpha, beta) are equinumerous with the area-0 paths with
// compositions (alpha, rev(beta)), for all supports in [n].
VerificationReport verify_q0_theorem(int n);

// Conjectured identity of the two full generating polynomials with labels
// and levels in [n]. A fail is an empirical finding about the conjectured
// identity, reported with a witness monomial.
VerificationReport verify_full_conjecture(int n);

// Invariance of the path polynomial under adjacent transpositions in both
// variable families.
VerificationReport verify_symmetry(int n);

}  // namespace tiercomb
