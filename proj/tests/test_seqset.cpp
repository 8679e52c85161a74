#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sumsets/constructions.hpp"
#include "sumsets/fuzz.hpp"
#include "sumsets/seqset.hpp"

using namespace sumsets;

namespace {

const GroupModel Z = GroupModel::integers();

SetSequence seq_of(const GroupModel& g, std::vector<std::vector<std::int64_t>> v)
{
    std::vector<GSet> sets;
    for (const auto& s : v) {
        std::vector<Element> e;
        for (auto x : s)
            e.push_back(g.make(x));
        sets.emplace_back(g, e);
    }
    return SetSequence(g, sets);
}

Element w(std::initializer_list<Syllable> s)
{
    return Element(Word(s));
}

} // namespace

TEST(SeqSet, ExampleProfileFollowsTheDefinition)
{
    // μ = min(ℓ, incidence) evaluated literally; see the acceptance notes for
    // the printed totals.
    const auto ex = named_example("example-1.1");
    const auto p = multiplicity_profile(ex, 3);
    const auto oracle_total = oracle::mu_total(oracle::raw(ex.sets()), 3);
    EXPECT_EQ(p.mu_total(), oracle_total);
    EXPECT_EQ(p.mu_total(), 19);
    EXPECT_EQ(p.M, make_set(Z, {8, 9, 10}));
    for (std::int64_t x : {0, 1, 2, 3, 6, 12})
        EXPECT_EQ(p.mu_of(Element(x)), 1);
    EXPECT_EQ(p.mu_of(Element(7)), 2);
    EXPECT_EQ(p.mu_of(Element(11)), 2);
    EXPECT_EQ(p.mu_of(Element(9)), 3);
    // Capping at 2 reproduces the printed per-element values.
    EXPECT_EQ(multiplicity_profile(ex, 2).mu_total(), 16);
}

TEST(SeqSet, ProfileTrivialCases)
{
    const auto disjoint = seq_of(Z, {{0, 1}, {5}, {9, 10, 11}});
    const auto p = multiplicity_profile(disjoint, 3);
    EXPECT_EQ(p.mu_total(), disjoint.total_size());
    for (int v : p.mu)
        EXPECT_EQ(v, 1);

    const auto same = seq_of(Z, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
    const auto q = multiplicity_profile(same, 2);
    for (int v : q.mu)
        EXPECT_EQ(v, 2);
    EXPECT_EQ(q.M, make_set(Z, {0, 1}));
}

TEST(SeqSet, EtaAndTau)
{
    const auto s = seq_of(Z, {{0, 1}, {1, 2}, {1, 3}, {1, 2}, {1}});
    const auto p = multiplicity_profile(s, 2);
    EXPECT_EQ(p.eta_of(Element(1)), 2);
    EXPECT_EQ(p.tau_of(Element(1)), 2); // three tail occurrences, capped
    EXPECT_EQ(p.eta_of(Element(3)), 0);
    EXPECT_EQ(p.tau_of(Element(3)), 1);
    EXPECT_EQ(p.tau_of(Element(0)), 0);
}

TEST(SeqSet, ExampleSumset)
{
    const auto ex = named_example("example-1.1");
    EXPECT_EQ(generalized_sumset(ex, 3), interval(Z, 13, 33));
    const auto mirrored = named_example("example-1.1", true);
    EXPECT_EQ(generalized_product_set(mirrored, 3).size(), 21u);
}

TEST(SeqSet, EdgeCasesOfEll)
{
    const auto s = seq_of(Z, {{0, 1}, {0, 5}, {2}});
    EXPECT_EQ(generalized_sumset(s, 3), make_set(Z, {2, 3, 7, 8}));
    EXPECT_EQ(generalized_sumset(s, 1), s.union_set());
    EXPECT_THROW(generalized_sumset(s, 4), std::invalid_argument);
    EXPECT_THROW(generalized_sumset(s, 0), std::invalid_argument);
}

TEST(SeqSet, FreeProductSetUsesEveryOrder)
{
    const auto f2 = GroupModel::free(2);
    const SetSequence s(f2, {GSet(f2, {w({{0, 1}})}), GSet(f2, {w({{1, 1}})})});
    EXPECT_EQ(generalized_product_set(s, 2), GSet(f2, {w({{0, 1}, {1, 1}}), w({{1, 1}, {0, 1}})}));
}

TEST(SeqSet, SubsequenceSums)
{
    EXPECT_EQ(subsequence_sumset(ElementSequence(Z, {Element(1), Element(1), Element(1)}), 2), make_set(Z, {2}));
    EXPECT_EQ(subsequence_sumset(ElementSequence(Z, {Element(0), Element(1), Element(2), Element(4)}), 2),
              make_set(Z, {1, 2, 3, 4, 5, 6}));
    const auto f2 = GroupModel::free(2);
    EXPECT_EQ(subsequence_sumset(ElementSequence(f2, {w({{0, 1}}), w({{1, 1}})}), 2),
              GSet(f2, {w({{0, 1}, {1, 1}}), w({{1, 1}, {0, 1}})}));
}

TEST(SeqSet, BudgetIsEnforced)
{
    const auto f2 = GroupModel::free(2);
    Rng rng(3);
    FuzzLimits lim;
    lim.word_length = 4;
    std::vector<GSet> sets;
    for (int i = 0; i < 6; ++i)
        sets.push_back(random_set(f2, rng, 8, 8, lim));
    Budget tight;
    tight.max_elements = 100;
    EXPECT_THROW(generalized_product_set(SetSequence(f2, sets), 4, tight), BudgetExceeded);
}

TEST(SeqSet, MatchesOracleAcrossModels)
{
    Rng rng(5);
    FuzzLimits lim;
    lim.max_m = 5;
    lim.max_set = 4;
    for (const auto& g : standard_models()) {
        for (int i = 0; i < 150; ++i) {
            const auto s = random_sequence(g, rng, lim);
            const int ell = uniform(rng, 1, s.m());
            const auto expect = oracle::product_set(g, oracle::raw(s.sets()), ell);
            ASSERT_EQ(oracle::to_set(generalized_product_set(s, ell)), expect) << g.name();
            if (g.is_abelian())
                ASSERT_EQ(generalized_sumset(s, ell), generalized_product_set(s, ell));
            const auto p = multiplicity_profile(s, ell);
            ASSERT_EQ(p.mu_total(), oracle::mu_total(oracle::raw(s.sets()), ell));

            const auto a = random_elements(g, rng, lim);
            const int l2 = uniform(rng, 1, a.m());
            ASSERT_EQ(oracle::to_set(subsequence_sumset(a, l2)), oracle::subsequence_sums(g, a.terms(), l2));
        }
    }
}
