#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permdl/permutation.hpp"

using namespace permdl;

TEST(Parse, WorkedExample) {
    const auto p = parse_permutation("6 9 8 4 1 3 7 2 5");
    EXPECT_EQ(p.vec(), (std::vector<int>{6, 9, 8, 4, 1, 3, 7, 2, 5}));
}

TEST(Parse, CommasAndSingleton) {
    EXPECT_EQ(parse_permutation("3,1, 2").vec(), (std::vector<int>{3, 1, 2}));
    EXPECT_EQ(parse_permutation("1").vec(), (std::vector<int>{1}));
}

TEST(Parse, ReportsOffendingToken) {
    try {
        parse_permutation("1 1 2");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.token(), "1");
        EXPECT_NE(std::string(e.what()).find("duplicate value 1"), std::string::npos);
    }
    try {
        parse_permutation("1 4 2");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.token(), "4");
    }
    try {
        parse_permutation("1 x 2");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.token(), "x");
    }
    EXPECT_THROW(parse_permutation("   "), ParseError);
    EXPECT_THROW(parse_permutation("0 1"), ParseError);
    EXPECT_THROW(parse_permutation("-1 1"), ParseError);
}

TEST(Permutation, RejectsNonBijection) {
    EXPECT_THROW(Permutation({}), std::invalid_argument);
    EXPECT_THROW(Permutation({1, 3}), std::invalid_argument);
    EXPECT_THROW(Permutation({2, 2}), std::invalid_argument);
}

TEST(Descents, Examples) {
    const auto ds = descents(parse_permutation("6 9 8 4 1 3 7 2 5"));
    EXPECT_EQ(ds.positions, (std::vector<int>{2, 3, 4, 7}));
    EXPECT_EQ(ds.count(), 4);
    EXPECT_EQ(descents(Permutation({1, 2, 3})).count(), 0);
    EXPECT_EQ(descents(Permutation({3, 2, 1})).positions, (std::vector<int>{1, 2}));
}

TEST(Runs, WorkedExample) {
    const auto r = maximal_runs(parse_permutation("6 9 8 4 1 3 7 2 5"));
    const std::vector<std::vector<int>> expected{{6, 9}, {8}, {4}, {1, 3, 7}, {2, 5}};
    EXPECT_EQ(r.runs, expected);
    EXPECT_EQ(maximal_runs(Permutation({1, 2, 3, 4})).count(), 1);
}

TEST(Runs, CountIsDescentsPlusOneExhaustive) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& w : oracle::all_permutations(n)) {
            const Permutation p(w);
            const auto r = maximal_runs(p);
            ASSERT_EQ(r.count(), descents(p).count() + 1) << to_string(p);
            std::vector<int> concat;
            for (const auto& run : r.runs) {
                ASSERT_TRUE(std::is_sorted(run.begin(), run.end()));
                concat.insert(concat.end(), run.begin(), run.end());
            }
            ASSERT_EQ(concat, w);
        }
}

TEST(Runs, CountIsDescentsPlusOneSampled) {
    std::mt19937_64 rng(7);
    for (int n : {8, 9, 12}) {
        for (int t = 0; t < 500; ++t) {
            const Permutation p(oracle::random_permutation(n, rng));
            ASSERT_EQ(maximal_runs(p).count(), descent_count(p) + 1);
        }
    }
}

TEST(Remove, WorkedExample) {
    const auto sigma = parse_permutation("8 6 1 3 2 4 11 9 5 10 7");
    // values 1 and 4 sit at positions 3 and 6; drop the later one first
    const auto pi = remove_element(remove_element(sigma, 6), 3);
    EXPECT_EQ(to_string(pi), "6 4 2 1 9 7 3 8 5");
}

TEST(Remove, EdgeCases) {
    EXPECT_THROW(remove_element(Permutation({1}), 1), std::invalid_argument);
    EXPECT_EQ(remove_element(Permutation({2, 1, 3}), 3).vec(), (std::vector<int>{2, 1}));
    EXPECT_THROW(remove_element(Permutation({2, 1, 3}), 0), std::out_of_range);
    EXPECT_THROW(remove_element(Permutation({2, 1, 3}), 4), std::out_of_range);
}

TEST(Remove, DescentChangeBounded) {
    // Deleting one entry loses at most one descent and never creates one.
    for (int n = 2; n <= 7; ++n)
        for (const auto& w : oracle::all_permutations(n)) {
            const Permutation p(w);
            const int d = descent_count(p);
            for (int i = 1; i <= n; ++i) {
                const int after = descent_count(remove_element(p, i));
                ASSERT_LE(after, d);
                ASSERT_GE(after, d - 1);
                ASSERT_EQ(after, descents_after_removal(p.values(), i));
            }
        }
}

TEST(Standardize, Examples) {
    EXPECT_EQ(standardize(std::vector<int>{1, 5, 6, 3}).vec(), (std::vector<int>{1, 3, 4, 2}));
    EXPECT_EQ(standardize(std::vector<int>{10, 20, 30}).vec(), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(standardize(std::vector<int>{7}).vec(), (std::vector<int>{1}));
    EXPECT_THROW(standardize(std::vector<int>{4, 2, 4}), std::invalid_argument);
}

TEST(Standardize, IdempotentAndOrderIsomorphic) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> val(-1000, 1000);
    for (int t = 0; t < 2000; ++t) {
        std::vector<int> w;
        const int len = 1 + t % 12;
        while (static_cast<int>(w.size()) < len) {
            int v = val(rng);
            if (std::find(w.begin(), w.end(), v) == w.end()) w.push_back(v);
        }
        const auto s = standardize(w);
        ASSERT_EQ(standardize(s.values()), s);
        ASSERT_EQ(s.vec(), oracle::standardize(w));
    }
}

TEST(Permutation, OrderingIsLexicographic) {
    EXPECT_LT(Permutation({2, 1, 4, 3}), Permutation({3, 1, 4, 2}));
    EXPECT_EQ(Permutation::reverse_identity(4).vec(), (std::vector<int>{4, 3, 2, 1}));
    EXPECT_TRUE(Permutation::identity(5).is_identity());
}
