#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "tiercomb/bijection.hpp"
#include "tiercomb/gen_polynomial.hpp"
#include "tiercomb/path_enumeration.hpp"
#include "tiercomb/tree_enumeration.hpp"
#include "tiercomb/verification.hpp"

using namespace tiercomb;

TEST_CASE("polynomial term bookkeeping") {
    GenPolynomial p(2, 2);
    const GenPolynomial::Term key{1, {1, 0}, {0, 1}};
    p.add(key, 2);
    p.add(key, 3);
    CHECK(p.coefficient(key) == 5);
    p.add(key, -5);
    CHECK(p.coefficient(key) == 0);
    CHECK(p.terms().empty());
    CHECK_THROWS_AS(p.add(GenPolynomial::Term{0, {1}, {0, 1}}, 1), std::invalid_argument);
}

TEST_CASE("addition is commutative and associative") {
    const std::vector<GenPolynomial::Term> keys{
        {0, {1, 0}, {1, 0}}, {0, {0, 1}, {1, 0}}, {2, {1, 0}, {0, 1}}};
    GenPolynomial a(2, 2), b(2, 2), c(2, 2);
    a.add(keys[0], 1);
    a.add(keys[1], 2);
    b.add(keys[1], 5);
    b.add(keys[2], -1);
    c.add(keys[0], 7);

    GenPolynomial ab = a;
    ab.add(b);
    GenPolynomial ba = b;
    ba.add(a);
    CHECK(ab == ba);

    GenPolynomial ab_c = ab;
    ab_c.add(c);
    GenPolynomial bc = b;
    bc.add(c);
    GenPolynomial a_bc = a;
    a_bc.add(bc);
    CHECK(ab_c == a_bc);
}

TEST_CASE("coefficient overflow raises instead of wrapping") {
    GenPolynomial p(1, 1);
    const GenPolynomial::Term key{0, {1}, {1}};
    p.add(key, 0x7fffffffffffffff);
    CHECK_THROWS_AS(p.add(key, 1), std::overflow_error);
}

TEST_CASE("size-1 polynomials are the single monomial x1 y1") {
    GenPolynomial expected(1, 1);
    expected.add(GenPolynomial::Term{0, {1}, {1}}, 1);
    CHECK(tree_polynomial(1) == expected);
    CHECK(path_polynomial(1) == expected);
    CHECK(tree_polynomial(1).to_text() == "1 q^0 x^[1] y^[1]\n");
}

TEST_CASE("tree polynomial matches the sweep for small sizes") {
    for (int n = 1; n <= 3; ++n) {
        GenPolynomial swept(n, n);
        for (const auto& [sig, rep] : oracle::all_trees(n, n, n)) {
            swept.add_monomial(oracle::tree_inversions(rep),
                               WeakComposition::counting(rep.w),
                               WeakComposition::counting(rep.lv));
        }
        CHECK(tree_polynomial(n) == swept);
        CHECK(tree_polynomial(n, true) == tree_polynomial(n).q_part(0));
    }
}

TEST_CASE("path polynomial matches the sweep for small sizes") {
    for (int n = 1; n <= 3; ++n) {
        GenPolynomial swept(n, n);
        for (const auto& p : oracle::all_paths(n, n)) {
            swept.add_monomial(oracle::path_area_by_shoelace(p),
                               WeakComposition::counting(p.pix),
                               WeakComposition::counting(p.piy));
        }
        CHECK(path_polynomial(n) == swept);
    }
}

TEST_CASE("totals count the underlying families") {
    for (int n = 1; n <= 3; ++n) {
        CHECK(tree_polynomial(n).total() ==
              static_cast<long long>(collect_trees(n, n, n).size()));
        CHECK(path_polynomial(n).total() == count_paths(n, n, PathFilter::All));
        CHECK(tree_polynomial(n, true).total() ==
              static_cast<long long>(collect_trees(n, n, n, TreeFilter::ZeroInversion).size()));
    }
}

TEST_CASE("statistic-zero coefficients count constrained fibers") {
    // coefficient of q^0 x^(1,2) y^(2,1) at n=3 against constrained enumeration
    const WeakComposition alpha({1, 2});
    const WeakComposition beta({2, 1});
    const GenPolynomial q0 = tree_polynomial(3, true);
    TreeEnumOptions opt;
    opt.n = 3;
    opt.max_label = 3;
    opt.max_level = 3;
    opt.filter = TreeFilter::ZeroInversion;
    opt.label_content = alpha;
    opt.level_content = beta;
    CHECK(q0.coefficient(GenPolynomial::Term{0, alpha.padded(3), beta.padded(3)}) ==
          count_trees(opt));
}

TEST_CASE("constrained fibers agree across the bijection at n=8") {
    // zero-inversion trees with compositions ((1,3,1,3),(4,2,2)) against
    // sequence pairs with contents ((1,3,1,3), rev((4,2,2))) = (2,2,4);
    // 3605 frozen from both routes
    TreeEnumOptions opt;
    opt.n = 8;
    opt.max_label = 4;
    opt.max_level = 3;
    opt.filter = TreeFilter::ZeroInversion;
    opt.label_content = WeakComposition({1, 3, 1, 3});
    opt.level_content = WeakComposition({4, 2, 2});
    CHECK(count_trees(opt) == 3605);

    std::vector<int> a{1, 2, 2, 2, 3, 4, 4, 4};
    std::vector<int> b{1, 1, 2, 2, 3, 3, 3, 3};
    std::vector<std::vector<int>> bs;
    do bs.push_back(b);
    while (std::next_permutation(b.begin(), b.end()));
    long long pairs = 0;
    do {
        for (const auto& bb : bs) {
            bool fits = true;
            for (int i = 1; i < 8 && fits; ++i) {
                if (a[i] <= a[i - 1] && bb[i] <= bb[i - 1]) fits = false;
            }
            if (fits) ++pairs;
        }
    } while (std::next_permutation(a.begin(), a.end()));
    CHECK(pairs == 3605);
}

TEST_CASE("statistic-zero support of the path polynomial is the pair support") {
    for (int n = 1; n <= 3; ++n) {
        const GenPolynomial q0 = path_polynomial(n).q_part(0);
        std::set<GenPolynomial::Term> from_pairs;
        enumerate_paths(n, n, PathFilter::AreaZero, [&](const LabelledDyckPath2& p) {
            from_pairs.insert(GenPolynomial::Term{0, x_composition(p).padded(n),
                                                  y_composition(p).padded(n)});
        });
        std::set<GenPolynomial::Term> from_poly;
        for (const auto& [key, coeff] : q0.terms()) from_poly.insert(key);
        CHECK(from_poly == from_pairs);
    }
}

TEST_CASE("counting identity holds for small sizes") {
    for (int n = 1; n <= 3; ++n) {
        const VerificationReport r = verify_q0_theorem(n);
        CHECK(r.pass);
        CHECK(r.mode == "q0_theorem");
        CHECK(r.witness.is_null());
    }
}

TEST_CASE("a corrupted count fails with the composition pair as witness") {
    const GenPolynomial t0 = tree_polynomial(2, true);
    const GenPolynomial p0 = path_polynomial(2, true);
    CompositionCounts tree_counts = composition_counts(t0);
    CompositionCounts path_counts = composition_counts(p0);
    REQUIRE(compare_q0_counts(2, tree_counts, path_counts).pass);

    const CompositionPair bumped = path_counts.begin()->first;
    ++path_counts.begin()->second;
    const VerificationReport r = compare_q0_counts(2, tree_counts, path_counts);
    CHECK_FALSE(r.pass);
    REQUIRE_FALSE(r.witness.is_null());
    // the witness names the tree-side pair matching the corrupted path pair
    const WeakComposition walpha(r.witness.at("alpha").get<std::vector<int>>());
    const WeakComposition wbeta(r.witness.at("beta").get<std::vector<int>>());
    CHECK(walpha == bumped.first);
    CHECK(rev(wbeta) == bumped.second);
    CHECK(r.witness.at("tree_count").get<long long>() !=
          r.witness.at("path_count").get<long long>());
    // the text report prints the witness pair in tuple notation
    const std::string text = r.to_text();
    CHECK(text.find("status: fail") != std::string::npos);
    CHECK(text.find("witness: alpha=" + walpha.to_string() + " beta=" + wbeta.to_string()) !=
          std::string::npos);
}

TEST_CASE("the conjectured identity verifies for small sizes") {
    for (int n = 1; n <= 3; ++n) {
        const VerificationReport r = verify_full_conjecture(n);
        CHECK(r.pass);
        CHECK(r.mode == "full_conjecture");
        CHECK_FALSE(r.note.empty());
        // its statistic-0 restriction is the counting identity
        CHECK(tree_polynomial(n, n, n, false).q_part(0) == tree_polynomial(n, true));
        CHECK(verify_q0_theorem(n).pass);
    }
}

TEST_CASE("a mismatching monomial becomes the witness") {
    GenPolynomial a(1, 1), b(1, 1);
    a.add(GenPolynomial::Term{0, {1}, {1}}, 1);
    b.add(GenPolynomial::Term{0, {1}, {1}}, 2);
    const VerificationReport r = compare_polynomials(1, a, b);
    CHECK_FALSE(r.pass);
    CHECK(r.witness.at("tree_coefficient").get<long long>() == 1);
    CHECK(r.witness.at("path_coefficient").get<long long>() == 2);
}

TEST_CASE("path polynomials are symmetric in both variable families") {
    for (int n = 1; n <= 3; ++n) {
        const GenPolynomial p = path_polynomial(n);
        CHECK(check_variable_symmetry(p, VarFamily::X));
        CHECK(check_variable_symmetry(p, VarFamily::Y));
        const VerificationReport r = verify_symmetry(n);
        CHECK(r.pass);
    }
}

TEST_CASE("an asymmetric monomial is caught") {
    GenPolynomial p(2, 2);
    p.add(GenPolynomial::Term{0, {2, 0}, {1, 1}}, 1);  // x1^2 y1 y2
    CHECK_FALSE(check_variable_symmetry(p, VarFamily::X));
    CHECK(check_variable_symmetry(p, VarFamily::Y));
}

TEST_CASE("statistic-zero parts have equal mass on both sides") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(tree_polynomial(n).q_part(0).total() == path_polynomial(n).q_part(0).total());
    }
}
