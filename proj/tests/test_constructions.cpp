#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sumsets/constructions.hpp"

using namespace sumsets;

namespace {

const GroupModel Z = GroupModel::integers();

std::int64_t oracle_size(const SetSequence& s, int ell)
{
    return static_cast<std::int64_t>(oracle::product_set(s.model(), oracle::raw(s.sets()), ell).size());
}

} // namespace

TEST(Constructions, FirstVariant)
{
    const ConstructionParams p{Variant::C1, 2, {2, 2, 3}, {}, 2};
    const auto s = construct(p);
    EXPECT_EQ(s.sets(), (std::vector<GSet>{interval(Z, 1, 2), interval(Z, 1, 2), interval(Z, 3, 5)}));
    EXPECT_EQ(expected_equality_value(p), 6);
    EXPECT_EQ(generalized_sumset(s, 2), interval(Z, 2, 7));
    EXPECT_TRUE(check_construction(p).ok());
}

TEST(Constructions, SecondVariant)
{
    const ConstructionParams p{Variant::C2, 2, {2, 2, 2}, {1}, 0};
    const auto s = construct(p);
    // A_3 = [k_1 - n_1 + 1, k_3 + k_1 - n_1].
    EXPECT_EQ(s.sets(), (std::vector<GSet>{interval(Z, 1, 2), interval(Z, 1, 2), interval(Z, 2, 3)}));
    EXPECT_EQ(expected_equality_value(p), 4);
    EXPECT_EQ(oracle_size(s, 2), 4);
    const auto c = check_construction(p);
    EXPECT_TRUE(c.ok());
    EXPECT_GT(c.max_incidence, 2);
}

TEST(Constructions, ThirdVariantSmallest)
{
    const ConstructionParams p{Variant::C3, 2, {2, 2, 2, 2, 2}, {1, 1}, 0};
    const auto s = construct(p);
    EXPECT_EQ(s.sets(), (std::vector<GSet>{interval(Z, 1, 2), interval(Z, 1, 2), interval(Z, 2, 3),
                                           interval(Z, 2, 3), interval(Z, 4, 5)}));
    EXPECT_EQ(expected_equality_value(p), 7);
    EXPECT_EQ(oracle_size(s, 2), 7);
    EXPECT_TRUE(check_construction(p).ok());
}

TEST(Constructions, UnitLengths)
{
    for (int m = 3; m <= 6; ++m)
        for (int l = 2; l < m; ++l) {
            const ConstructionParams p{Variant::C1, l, std::vector<std::int64_t>(static_cast<std::size_t>(m), 1), {},
                                       (m + l - 1) / l};
            EXPECT_EQ(expected_equality_value(p), m - l + 1);
            EXPECT_EQ(oracle_size(construct(p), l), m - l + 1);
        }
}

TEST(Constructions, Validation)
{
    EXPECT_THROW(validate({Variant::C1, 2, {2, 2}, {}, 1}), std::invalid_argument);       // ℓ = m
    EXPECT_THROW(validate({Variant::C1, 2, {3, 2, 2}, {}, 2}), std::invalid_argument);    // decreasing
    EXPECT_THROW(validate({Variant::C1, 2, {1, 2, 2}, {}, 1}), std::invalid_argument);    // nℓ < m
    EXPECT_THROW(validate({Variant::C2, 2, {1, 2, 2}, {1}, 0}), std::invalid_argument);   // k_1 = 1
    EXPECT_THROW(validate({Variant::C2, 2, {2, 2, 2}, {2}, 0}), std::invalid_argument);   // n_1 = k_1
    EXPECT_THROW(validate({Variant::C2, 2, {2, 2, 2, 2, 2}, {1, 1, 1}, 0}), std::invalid_argument);
    EXPECT_THROW(validate({Variant::C3, 2, {2, 2, 2, 2}, {1, 1}, 0}), std::invalid_argument);
    EXPECT_THROW(validate({Variant::C2, 3, {3, 3, 3, 4, 5}, {1, 2}, 0}), std::invalid_argument); // n increasing
    EXPECT_NO_THROW(validate({Variant::C2, 3, {3, 3, 3, 4, 5}, {2, 1}, 0}));
    EXPECT_EQ(variant_from_string("C2"), Variant::C2);
    EXPECT_THROW(variant_from_string("c4"), std::invalid_argument);
}

TEST(Constructions, AgainstOracle)
{
    std::int64_t n = 0;
    for_each_params(14, 5, [&](const ConstructionParams& p) {
        const auto s = construct(p);
        ASSERT_EQ(oracle_size(s, p.ell), expected_equality_value(p)) << to_string(p.variant);
        const auto c = check_construction(p);
        ASSERT_TRUE(c.ok()) << to_string(p.variant);
        ASSERT_EQ(c.mu_bound, oracle::mu_total(oracle::raw(s.sets()), p.ell) - p.ell + 1);
        ++n;
    });
    EXPECT_GT(n, 100);
}

TEST(Constructions, IncidenceProperty)
{
    for_each_params(16, 6, [&](const ConstructionParams& p) {
        const auto c = check_construction(p);
        if (p.variant == Variant::C1)
            ASSERT_LE(c.max_incidence, p.ell);
        else
            ASSERT_GT(c.max_incidence, p.ell);
        ASSERT_EQ(c.auxiliary_ok.has_value(), p.variant != Variant::C1);
    });
}

TEST(Constructions, FreeMirror)
{
    const ConstructionParams p{Variant::C3, 2, {2, 2, 3, 3, 4}, {1, 1}, 0};
    const auto z = construct(p);
    const auto f = construct(p, true);
    EXPECT_EQ(f.model(), GroupModel::free(1));
    EXPECT_EQ(generalized_product_set(f, 2).size(), generalized_sumset(z, 2).size());
    EXPECT_EQ(oracle_size(f, 2), expected_equality_value(p));
}

TEST(Constructions, NamedExample)
{
    const auto ex = named_example("example-1.1");
    EXPECT_EQ(ex.sets(), (std::vector<GSet>{interval(Z, 0, 3), interval(Z, 6, 9), interval(Z, 7, 10),
                                            interval(Z, 8, 11), interval(Z, 9, 12)}));
    EXPECT_EQ(named_example_ell("example-1.1"), 3);
    EXPECT_THROW(named_example("example-9"), std::invalid_argument);
}
