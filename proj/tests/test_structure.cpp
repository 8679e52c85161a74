#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sumsets/fuzz.hpp"
#include "sumsets/structure.hpp"
#include "sumsets/verify.hpp"

using namespace sumsets;

namespace {

const GroupModel Z = GroupModel::integers();
const GroupModel F2 = GroupModel::free(2);

Element w(std::initializer_list<Syllable> s)
{
    return Element(Word(s));
}

const Element X = w({{0, 1}});
const Element Y = w({{1, 1}});

} // namespace

TEST(Structure, Realize)
{
    EXPECT_EQ(realize(Z, {Element(0), Element(2), Element(1), 3}), make_set(Z, {1, 3, 5}));
    EXPECT_EQ(realize(F2, {X, Y, Y, 2}), GSet(F2, {w({{0, 1}, {1, 1}}), w({{0, 1}, {1, 2}})}));
    const auto z5 = GroupModel::cyclic(5);
    EXPECT_EQ(realize(z5, {Element(0), Element(2), Element(0), 3}), make_set(z5, {0, 2, 4}));
    EXPECT_THROW(realize(z5, {Element(0), Element(1), Element(0), 6}), ModelError);
    EXPECT_THROW(realize(Z, {Element(0), Element(0), Element(0), 2}), ModelError);
}

TEST(Structure, DetectIntegerProgressions)
{
    const auto ds = detect_progressions(make_set(Z, {1, 3, 5}));
    ASSERT_EQ(ds.size(), 2u);
    EXPECT_EQ(ds[0].a, Element(1));
    EXPECT_EQ(ds[0].g, Element(2));
    EXPECT_EQ(ds[1].a, Element(5));
    EXPECT_EQ(ds[1].g, Element(-2));
    EXPECT_TRUE(detect_progressions(make_set(Z, {0, 1, 3})).empty());
    const auto single = detect_progressions(make_set(Z, {4}));
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0].length, 1);
}

TEST(Structure, DetectFreeProgressions)
{
    const GSet s(F2, {X, w({{0, 1}, {1, 1}}), w({{0, 1}, {1, 2}})});
    const auto ds = detect_progressions(s);
    ASSERT_EQ(ds.size(), 2u);
    EXPECT_EQ(ds[0], (ProgressionType{X, Y, F2.identity(), 3}));
    EXPECT_EQ(ds[1].g, F2.inverse(Y));
    EXPECT_EQ(realize(F2, ds[1]), s);
}

TEST(Structure, DetectAgreesWithOracleOnCyclicSets)
{
    for (std::int64_t n : {7, 11, 12}) {
        const auto g = GroupModel::cyclic(n);
        for (std::uint32_t mask = 1; mask < (1u << n); mask += 7) {
            std::set<std::int64_t> raw;
            std::vector<Element> e;
            for (std::int64_t i = 0; i < n; ++i)
                if (mask >> i & 1u) {
                    raw.insert(i);
                    e.push_back(Element(i));
                }
            const GSet s(g, e);
            EXPECT_EQ(!detect_progressions(s).empty(), oracle::is_ap(raw, n)) << format_set(s);
        }
    }
}

TEST(Structure, SameRatioFamily)
{
    auto fam = same_ratio_family({interval(Z, 0, 3), interval(Z, 6, 9)});
    ASSERT_TRUE(fam);
    EXPECT_EQ(fam->g, Element(1));
    EXPECT_FALSE(same_ratio_family({make_set(Z, {0, 2, 4}), make_set(Z, {0, 3, 6})}));

    fam = same_ratio_family({GSet(F2, {X, w({{0, 1}, {1, 1}})}), GSet(F2, {F2.inverse(Y), F2.identity()})});
    ASSERT_TRUE(fam);
    EXPECT_EQ(fam->g, Y);
    EXPECT_EQ(fam->types[0], (ProgressionType{X, Y, F2.identity(), 2}));
    EXPECT_EQ(fam->types[1], (ProgressionType{F2.inverse(Y), Y, F2.identity(), 2}));
}

TEST(Structure, SameRatioFamilyUpToConjugacy)
{
    // {x·y^j} and {z·(x⁻¹yx)^j} share the ratio y after conjugation.
    const auto c = X;
    const auto h = F2.op(F2.op(F2.inverse(c), Y), c);
    const auto a = realize(F2, {F2.identity(), Y, F2.identity(), 3});
    const auto b = realize(F2, {Y, h, F2.identity(), 2});
    const auto fam = same_ratio_family({a, b});
    ASSERT_TRUE(fam);
    for (std::size_t i = 0; i < 2; ++i)
        EXPECT_EQ(realize(F2, fam->types[i]), i == 0 ? a : b);
}

TEST(Structure, LinkedChains)
{
    const std::vector<ProgressionType> ok{{Element(0), Element(1), Element(0), 2},
                                          {Element(0), Element(1), Element(0), 3}};
    EXPECT_TRUE(linked_chain_check(Z, ok));
    EXPECT_EQ(realize(Z, chain_progression(ok)), interval(Z, 0, 3));

    const auto zz = w({{0, 1}, {1, 1}, {0, -1}});
    const auto ww = w({{1, 2}});
    EXPECT_TRUE(linked_chain_check(F2, {{X, Y, zz, 2}, {F2.inverse(zz), Y, ww, 3}}));
    EXPECT_FALSE(linked_chain_check(Z, {{Element(0), Element(1), Element(5), 2}, {Element(0), Element(1), Element(0), 2}}));
}

TEST(Structure, LinkedChainProductMatchesProductSet)
{
    Rng rng(31);
    FuzzLimits lim;
    for (int i = 0; i < 200; ++i) {
        const auto g = random_element(F2, rng, lim);
        if (g == F2.identity())
            continue;
        std::vector<ProgressionType> types;
        Element beta_prev = F2.identity();
        for (int j = 0; j < 3; ++j) {
            const auto alpha = j == 0 ? random_element(F2, rng, lim) : F2.inverse(beta_prev);
            const auto beta = random_element(F2, rng, lim);
            types.push_back({alpha, g, beta, uniform(rng, 1, 3)});
            beta_prev = beta;
        }
        ASSERT_TRUE(linked_chain_check(F2, types));
        GSet prod = realize(F2, types[0]);
        std::int64_t total = types[0].length;
        for (std::size_t j = 1; j < types.size(); ++j) {
            prod = product(prod, realize(F2, types[j]));
            total += types[j].length;
        }
        EXPECT_EQ(prod, realize(F2, chain_progression(types)));
        EXPECT_EQ(static_cast<std::int64_t>(prod.size()), total - 2);
    }
}

TEST(Structure, UnionProgression)
{
    EXPECT_EQ(realize(Z, *union_progression(make_set(Z, {0, 1, 2}), make_set(Z, {2, 3}), Element(1))),
              interval(Z, 0, 3));
    EXPECT_EQ(realize(Z, *union_progression(make_set(Z, {0, 2, 4}), make_set(Z, {4, 6}), Element(2))),
              make_set(Z, {0, 2, 4, 6}));
    EXPECT_FALSE(union_progression(make_set(Z, {0, 1}), make_set(Z, {5, 6}), Element(1)));
}

TEST(Structure, SubprogressionForm)
{
    const ProgressionType whole{Element(0), Element(1), Element(0), 10};
    auto f = subprogression_form(make_set(Z, {1, 4, 7}), whole);
    ASSERT_TRUE(f);
    EXPECT_EQ(*f, std::make_pair(std::int64_t{3}, std::int64_t{1}));
    f = subprogression_form(interval(Z, 0, 9), whole);
    ASSERT_TRUE(f);
    EXPECT_EQ(*f, std::make_pair(std::int64_t{1}, std::int64_t{0}));
    EXPECT_FALSE(subprogression_form(make_set(Z, {0, 1, 3}), {Element(0), Element(1), Element(0), 6}));
}

TEST(Structure, ConjugatorSearch)
{
    const auto c = w({{0, 1}, {1, -1}});
    const auto g = w({{1, 1}, {0, 2}});
    const auto h = F2.op(F2.op(F2.inverse(c), g), c);
    const auto found = find_conjugator(F2, g, h);
    ASSERT_TRUE(found);
    EXPECT_EQ(F2.op(F2.op(F2.inverse(*found), g), *found), h);
    EXPECT_FALSE(find_conjugator(F2, X, Y));
    EXPECT_FALSE(find_conjugator(F2, X, w({{0, 2}})));
}

TEST(Structure, RepresentationRelation)
{
    // The same set written as (a, g, b) and as (ab, b⁻¹gb, 1).
    const ProgressionType t{X, Y, w({{0, 1}}), 3};
    const ProgressionType u{F2.op(t.a, t.b), F2.op(F2.op(F2.inverse(t.b), t.g), t.b), F2.identity(), 3};
    ASSERT_EQ(realize(F2, t), realize(F2, u));
    const auto rel = relate_representations(F2, t, u);
    ASSERT_TRUE(rel);
    EXPECT_FALSE(rel->reversed);
    EXPECT_EQ(rel->c, F2.op(F2.inverse(u.a), t.a));

    const ProgressionType flip{t.a, F2.inverse(t.g), F2.op(F2.pow(t.g, 2), t.b), 3};
    ASSERT_EQ(realize(F2, t), realize(F2, flip));
    const auto r2 = relate_representations(F2, t, flip);
    ASSERT_TRUE(r2);
    EXPECT_TRUE(r2->reversed);
}

TEST(Structure, DoubleRepresentationsInFreeGroups)
{
    // Every detected witness of a realized set is related to the original by the dichotomy.
    Rng rng(41);
    FuzzLimits lim;
    const auto f3 = GroupModel::free(3);
    for (int i = 0; i < 300; ++i) {
        const auto t = random_progression(f3, rng, lim);
        if (t.length < 2)
            continue;
        const auto s = realize(f3, t);
        for (const auto& d : detect_progressions(s)) {
            const auto rel = relate_representations(f3, t, d);
            ASSERT_TRUE(rel);
            EXPECT_EQ(t.a, f3.op(d.a, rel->c));
        }
    }
}

TEST(Structure, RepresentationIdentitiesFuzzed)
{
    Rng rng(43);
    FuzzLimits lim;
    for (const auto& g : {Z, F2, GroupModel::free(3)})
        for (int i = 0; i < 400; ++i) {
            const auto t = random_progression(g, rng, lim);
            const auto c = random_element(g, rng, lim);
            EXPECT_TRUE(progression_identity_failures(g, t, c).empty());
        }
}
