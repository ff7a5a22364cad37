#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>
#include <string>

#include "oracles.hpp"
#include "tiercomb/bijection.hpp"
#include "tiercomb/path_enumeration.hpp"
#include "tiercomb/tiered_tree.hpp"
#include "tiercomb/tree_enumeration.hpp"

using namespace tiercomb;

TEST_CASE("one tree of size 1 within bounds (1,1)") {
    const auto trees = collect_trees(1, 1, 1);
    REQUIRE(trees.size() == 1);
    CHECK(trees[0] == TieredRootedTree{{0}, {1}, {1}});
}

TEST_CASE("size-2 counts within bounds (2,2)") {
    // frozen from the generate-then-filter sweep: 8 trees, 7 inversion-free
    CHECK(collect_trees(2, 2, 2, TreeFilter::All).size() == 8);
    CHECK(collect_trees(2, 2, 2, TreeFilter::ZeroInversion).size() == 7);
    CHECK(oracle::all_trees(2, 2, 2).size() == 8);
    CHECK(oracle::all_trees(2, 2, 2, true).size() == 7);
}

TEST_CASE("every emitted tree is valid, canonical, and in lexicographic order") {
    for (int n = 1; n <= 3; ++n) {
        const auto trees = collect_trees(n, 3, 3);
        for (size_t i = 0; i < trees.size(); ++i) {
            CHECK(validate_tree(trees[i]).ok);
            CHECK(is_canonical(trees[i]));
            if (i > 0) CHECK(trees[i - 1] < trees[i]);
        }
    }
}

TEST_CASE("pruned tree enumeration equals the sweep, as sets of trees") {
    for (int n = 0; n <= 3; ++n) {
        const auto sweep = oracle::all_trees(n, 3, 3);
        std::set<std::string> enumerated;
        enumerate_trees(n, 3, 3, TreeFilter::All, [&enumerated](const TieredRootedTree& t) {
            CHECK(enumerated.insert(oracle::tree_signature(t)).second);  // no repeats
        });
        std::set<std::string> expected;
        for (const auto& [sig, rep] : sweep) expected.insert(sig);
        CHECK(enumerated == expected);
    }
}

TEST_CASE("inversion generating function matches the sweep at n=3") {
    std::map<int, long long> pruned;
    enumerate_trees(3, 3, 3, TreeFilter::All, [&pruned](const TieredRootedTree& t) {
        ++pruned[inv_count(t)];
    });
    std::map<int, long long> swept;
    for (const auto& [sig, rep] : oracle::all_trees(3, 3, 3)) {
        ++swept[oracle::tree_inversions(rep)];
    }
    CHECK(pruned == swept);
}

TEST_CASE("zero-inversion filter equals filtering after the fact") {
    for (int n = 1; n <= 3; ++n) {
        std::set<std::string> filtered;
        enumerate_trees(n, n, n, TreeFilter::All, [&filtered](const TieredRootedTree& t) {
            if (inv_count(t) == 0) filtered.insert(oracle::tree_signature(t));
        });
        std::set<std::string> direct;
        enumerate_trees(n, n, n, TreeFilter::ZeroInversion,
                        [&direct](const TieredRootedTree& t) {
                            CHECK(inv_count(t) == 0);
                            direct.insert(oracle::tree_signature(t));
                        });
        CHECK(filtered == direct);
    }
}

TEST_CASE("content-constrained enumeration matches filtering on compositions") {
    TreeEnumOptions opt;
    opt.n = 3;
    opt.max_label = 3;
    opt.max_level = 3;
    opt.label_content = WeakComposition({1, 1, 1});
    opt.level_content = WeakComposition({2, 0, 1});
    std::set<std::string> constrained;
    enumerate_trees(opt, [&](const TieredRootedTree& t) {
        constrained.insert(oracle::tree_signature(t));
    });
    std::set<std::string> filtered;
    enumerate_trees(3, 3, 3, TreeFilter::All, [&](const TieredRootedTree& t) {
        if (label_composition(t) == *opt.label_content &&
            level_composition(t) == *opt.level_content) {
            filtered.insert(oracle::tree_signature(t));
        }
    });
    CHECK(constrained == filtered);
    CHECK_FALSE(constrained.empty());
}

TEST_CASE("unsatisfiable content constraints yield an empty stream") {
    TreeEnumOptions opt;
    opt.n = 3;
    opt.max_label = 3;
    opt.max_level = 3;
    opt.label_content = WeakComposition({1, 1});  // weight 2 != 3
    CHECK(count_trees(opt) == 0);

    opt.label_content = WeakComposition({0, 0, 0, 3});  // support beyond the bound
    CHECK(count_trees(opt) == 0);
}

TEST_CASE("constrained fiber at n=6 matches the pair count") {
    // frozen from both routes: 224 trees with compositions ((2,2,2),(3,2,1)),
    // 224 sequence pairs with contents ((2,2,2), rev((3,2,1))) = (1,2,3)
    TreeEnumOptions opt;
    opt.n = 6;
    opt.max_label = 3;
    opt.max_level = 3;
    opt.filter = TreeFilter::ZeroInversion;
    opt.label_content = WeakComposition({2, 2, 2});
    opt.level_content = WeakComposition({3, 2, 1});
    CHECK(count_trees(opt) == 224);
}

TEST_CASE("one path of size 1 with labels in [1]") {
    const auto paths = collect_paths(1, 1);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0] == LabelledDyckPath2{"NE", {1}, {1}});
}

TEST_CASE("size-2 path counts with labels in [2]") {
    // frozen from the sweep: 8 paths, 7 of area 0
    CHECK(collect_paths(2, 2, PathFilter::All).size() == 8);
    CHECK(collect_paths(2, 2, PathFilter::AreaZero).size() == 7);
    CHECK(oracle::all_paths(2, 2).size() == 8);
    CHECK(oracle::all_paths(2, 2, true).size() == 7);
}

namespace {

std::string path_key(const LabelledDyckPath2& p) {
    std::string key = p.steps + "|";
    for (int x : p.pix) key += std::to_string(x) + ",";
    key += "|";
    for (int y : p.piy) key += std::to_string(y) + ",";
    return key;
}

}  // namespace

TEST_CASE("path enumeration equals the sweep, as sets, and keeps its order") {
    for (int n = 1; n <= 3; ++n) {
        const auto pruned = collect_paths(n, 3);
        std::set<std::string> pruned_keys;
        for (size_t i = 0; i < pruned.size(); ++i) {
            CHECK(validate_path(pruned[i]).ok);
            if (i > 0) CHECK(path_canonical_less(pruned[i - 1], pruned[i]));
            CHECK(pruned_keys.insert(path_key(pruned[i])).second);  // no repeats
        }
        std::set<std::string> swept_keys;
        for (const auto& p : oracle::all_paths(n, 3)) swept_keys.insert(path_key(p));
        CHECK(pruned_keys == swept_keys);
    }
}

TEST_CASE("area generating function matches the sweep at n=3") {
    std::map<int, long long> pruned;
    enumerate_paths(3, 3, PathFilter::All, [&pruned](const LabelledDyckPath2& p) {
        ++pruned[area(p)];
    });
    std::map<int, long long> swept;
    for (const auto& p : oracle::all_paths(3, 3)) ++swept[oracle::path_area_by_shoelace(p)];
    CHECK(pruned == swept);
}

TEST_CASE("area-zero enumeration equals filtering the full stream") {
    for (int n = 1; n <= 3; ++n) {
        std::vector<LabelledDyckPath2> filtered;
        enumerate_paths(n, n, PathFilter::All, [&filtered](const LabelledDyckPath2& p) {
            if (area(p) == 0) filtered.push_back(p);
        });
        const auto direct = collect_paths(n, n, PathFilter::AreaZero);
        CHECK(filtered == direct);
    }
}
