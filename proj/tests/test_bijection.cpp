#include <map>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permdl/bijection.hpp"
#include "permdl/minimal.hpp"

using namespace permdl;

namespace {

NonIntervalSubset subset(int d, std::vector<int> elems) { return NonIntervalSubset(d, std::move(elems)); }

std::vector<std::string> level_strings(const std::vector<EcoNode>& level) {
    std::vector<std::string> out;
    for (const auto& node : level) out.push_back(to_compact_string(node.permutation));
    return out;
}

}  // namespace

TEST(Dyck, WorkedExample) {
    const auto path = parse_dyck("UUDUUDDDUD");
    EXPECT_EQ(to_string(dyck_to_perm(path)), "3 1 6 2 7 4 8 5 10 9");
    EXPECT_EQ(to_string(perm_to_dyck(parse_permutation("3 1 6 2 7 4 8 5 10 9"))), "UUDUUDDDUD");
}

TEST(Dyck, SmallCases) {
    EXPECT_EQ(dyck_to_perm(parse_dyck("UD")).vec(), (std::vector<int>{2, 1}));
    EXPECT_EQ(dyck_to_perm(parse_dyck("UUDD")).vec(), (std::vector<int>{3, 1, 4, 2}));
    EXPECT_EQ(dyck_to_perm(parse_dyck("UDUD")).vec(), (std::vector<int>{2, 1, 4, 3}));
    EXPECT_EQ(to_string(perm_to_dyck(Permutation({2, 1}))), "UD");
}

TEST(Dyck, RejectsMalformed) {
    EXPECT_THROW(parse_dyck("DU"), ParseError);
    EXPECT_THROW(parse_dyck("UUD"), ParseError);
    EXPECT_THROW(parse_dyck("UXD"), ParseError);
    EXPECT_THROW(parse_dyck(""), ParseError);
    EXPECT_THROW(perm_to_dyck(Permutation({1, 2})), std::invalid_argument);
    EXPECT_THROW(perm_to_dyck(Permutation({3, 2, 1})), std::invalid_argument);
}

TEST(Dyck, BijectionOntoSizeTwoD) {
    const auto cat = oracle::catalan_table(8);
    for (int d = 1; d <= 7; ++d) {
        const auto paths = all_dyck_paths(d);
        ASSERT_EQ(paths.size(), cat[d]);
        std::vector<Permutation> image;
        for (const auto& path : paths) {
            const auto p = dyck_to_perm(path);
            ASSERT_EQ(perm_to_dyck(p), path);
            image.push_back(p);
        }
        std::sort(image.begin(), image.end());
        if (d <= 6) {
            ASSERT_EQ(image, enumerate_basis(d, 2 * d).members) << d;
        }
        for (const auto& p : enumerate_basis(d, 2 * d).members) ASSERT_EQ(dyck_to_perm(perm_to_dyck(p)), p);
    }
}

TEST(Eco, ChildrenExamples) {
    const auto root = eco_root();
    EXPECT_EQ(root.eco_label, 2);
    const auto kids = eco_children(root);
    ASSERT_EQ(kids.size(), 2u);
    EXPECT_EQ(to_compact_string(kids[0].permutation), "2143");
    EXPECT_EQ(to_compact_string(kids[1].permutation), "3142");

    const auto grand = eco_children(kids[0]);
    EXPECT_EQ(level_strings(grand), (std::vector<std::string>{"214365", "215364"}));

    const auto node = make_eco_node(Permutation({4, 1, 5, 2, 6, 3}));
    EXPECT_EQ(node.eco_label, 4);
    const auto four = eco_children(node);
    ASSERT_EQ(four.size(), 4u);
    EXPECT_EQ(four[0].permutation.vec(), (std::vector<int>{4, 1, 5, 2, 6, 3, 8, 7}));
    EXPECT_EQ(four[1].permutation.vec(), (std::vector<int>{4, 1, 5, 2, 7, 3, 8, 6}));
    EXPECT_EQ(four[2].permutation.vec(), (std::vector<int>{4, 1, 6, 2, 7, 3, 8, 5}));
    EXPECT_EQ(four[3].permutation.vec(), (std::vector<int>{5, 1, 6, 2, 7, 3, 8, 4}));
}

TEST(Eco, FirstFourLevels) {
    const auto levels = generating_tree(4);
    EXPECT_EQ(level_strings(levels[0]), (std::vector<std::string>{"21"}));
    EXPECT_EQ(level_strings(levels[1]), (std::vector<std::string>{"2143", "3142"}));
    EXPECT_EQ(level_strings(levels[2]), (std::vector<std::string>{"214365", "215364", "314265", "315264", "415263"}));
    EXPECT_EQ(level_strings(levels[3]),
              (std::vector<std::string>{"21436587", "21437586", "21536487", "21537486", "21637485", "31426587",
                                        "31427586", "31526487", "31527486", "31627485", "41526387", "41527386",
                                        "41627385", "51627384"}));
}

TEST(Eco, LevelsAreTheSizeTwoDSlice) {
    const auto cat = oracle::catalan_table(8);
    const auto levels = generating_tree(7);
    for (int d = 1; d <= 7; ++d) {
        const auto& level = levels[d - 1];
        ASSERT_EQ(level.size(), cat[d]);
        std::vector<Permutation> perms;
        for (const auto& node : level) {
            ASSERT_GE(node.eco_label, 2);
            ASSERT_LE(node.eco_label, d + 1);
            perms.push_back(node.permutation);
            const auto kids = eco_children(node);
            ASSERT_EQ(static_cast<int>(kids.size()), node.eco_label);
            for (std::size_t c = 0; c < kids.size(); ++c) ASSERT_EQ(kids[c].eco_label, static_cast<int>(c) + 2);
        }
        std::sort(perms.begin(), perms.end());
        ASSERT_TRUE(std::adjacent_find(perms.begin(), perms.end()) == perms.end());
        ASSERT_EQ(perms, enumerate_basis(d, 2 * d).members) << d;
    }
}

TEST(Eco, LabelDistributionFollowsRule) {
    // expand (2), (k) -> (2)..(k+1) on labels alone
    std::map<int, std::uint64_t> dist{{2, 1}};
    const auto levels = generating_tree(8);
    for (int d = 1; d <= 8; ++d) {
        std::map<int, std::uint64_t> seen;
        for (const auto& node : levels[d - 1]) ++seen[node.eco_label];
        ASSERT_EQ(seen, dist) << d;
        std::map<int, std::uint64_t> next;
        for (auto [k, count] : dist)
            for (int c = 2; c <= k + 1; ++c) next[c] += count;
        dist = next;
    }
}

TEST(NonInterval, Examples) {
    const auto s3 = non_interval_subsets(3);
    std::vector<std::string> got;
    for (const auto& s : s3) got.push_back(to_string(s));
    EXPECT_EQ(got, (std::vector<std::string>{"1,3", "1,4", "2,4", "1,2,4", "1,3,4"}));
    EXPECT_TRUE(non_interval_subsets(1).empty());
    EXPECT_EQ(non_interval_subsets(5).size(), 42u);
    EXPECT_EQ(subset(7, {3, 4, 5, 8}).holes(), (std::vector<int>{1, 2, 6, 7}));
    EXPECT_THROW(subset(3, {2, 3}), std::invalid_argument);
    EXPECT_THROW(subset(3, {1, 5}), std::invalid_argument);
    EXPECT_THROW(parse_subset(3, "2,3"), ParseError);
}

TEST(NonInterval, CountMatchesFormulaAndBitmask) {
    for (int d = 1; d <= 12; ++d) {
        EXPECT_EQ(non_interval_count_formula(d), oracle::count_non_interval_subsets(d)) << d;
        EXPECT_EQ(non_interval_count_formula(d), non_interval_subsets(d).size()) << d;
    }
    EXPECT_EQ(non_interval_count_formula(1), 0);
    EXPECT_EQ(non_interval_count_formula(2), 1);
    EXPECT_EQ(non_interval_count_formula(3), 5);
}

TEST(Phi1, Examples) {
    EXPECT_EQ(to_string(phi1(subset(7, {3, 4, 5, 8}))), "8 5 4 3 9 7 6 2 1");
    const auto p = phi1(subset(2, {1, 3}));
    EXPECT_EQ(p.vec(), (std::vector<int>{3, 1, 4, 2}));
    EXPECT_TRUE(is_minimal(p, 2).is_minimal);
    EXPECT_TRUE(is_in_s1(p));
}

TEST(Phi2, SizeSevenTable) {
    struct Row {
        std::vector<int> s;
        std::string perm;
        char type;
    };
    const std::vector<Row> rows{
        {{1, 2, 4, 5, 6}, "3 2 7 6 5 4 1", 'A'}, {{1, 5, 6}, "7 4 3 2 6 5 1", 'E'},
        {{1, 3, 4, 6}, "7 5 2 6 4 3 1", 'E'},    {{1, 2, 5}, "7 6 2 1 5 4 3", 'D'},
        {{1, 3, 4, 5}, "3 2 1 7 6 5 4", 'C'},    {{1, 2, 4, 5}, "4 3 2 7 6 5 1", 'C'},
        {{1, 2, 3, 5}, "5 4 3 7 6 2 1", 'B'},
    };
    for (const auto& row : rows) {
        const auto s = subset(5, row.s);
        const auto p = phi2(s);
        EXPECT_EQ(to_string(p), row.perm) << to_string(s);
        EXPECT_EQ(to_char(classify_s2(p).type_tag), row.type) << to_string(s);
        EXPECT_EQ(phi2_inverse(p), s);
    }
}

TEST(Classify, Examples) {
    EXPECT_EQ(classify_s2(Permutation({7, 4, 3, 2, 6, 5, 1})).type_tag, S2Type::E);
    const auto a = classify_s2(Permutation({3, 2, 7, 6, 5, 4, 1}));
    EXPECT_EQ(a.type_tag, S2Type::A);
    EXPECT_EQ(a.ascent_position, 2);
    EXPECT_EQ(a.j, 3);
    EXPECT_EQ(a.i, 2);
    EXPECT_EQ(a.k, 7);
    EXPECT_EQ(a.h, 6);
    EXPECT_THROW(classify_s2(Permutation({3, 1, 4, 2})), std::invalid_argument);
}

TEST(Phi, PartitionOfSizeDPlusTwo) {
    for (int d = 2; d <= 9; ++d) {
        const auto subsets = non_interval_subsets(d);
        std::set<Permutation> image1, image2;
        std::map<char, int> types;
        for (const auto& s : subsets) {
            const auto p1 = phi1(s);
            const auto p2 = phi2(s);
            ASSERT_TRUE(is_in_s1(p1)) << to_string(s);
            ASSERT_FALSE(is_in_s1(p2)) << to_string(s);
            ASSERT_EQ(phi1_inverse(p1), s);
            ASSERT_EQ(phi2_inverse(p2), s) << to_string(s) << " -> " << to_string(p2);
            ASSERT_TRUE(image1.insert(p1).second);
            ASSERT_TRUE(image2.insert(p2).second) << to_string(s);
            const auto c = classify_s2(p2);
            ASSERT_LT(c.j, c.k);
            ASSERT_LT(c.i, c.h);
            ASSERT_GT(c.j, c.i);
            ASSERT_GT(c.k, c.h);
            ++types[to_char(c.type_tag)];
        }
        std::set<Permutation> both = image1;
        both.insert(image2.begin(), image2.end());
        ASSERT_EQ(both.size(), image1.size() + image2.size());
        const auto slice = enumerate_basis(d, d + 2, 4).members;
        ASSERT_EQ(std::vector<Permutation>(both.begin(), both.end()), slice) << d;
        if (d >= 4) {
            for (char t : {'A', 'B', 'C', 'D', 'E'}) EXPECT_GT(types[t], 0) << d << " " << t;
        }
    }
}
