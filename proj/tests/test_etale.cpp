#include <gtest/gtest.h>

#include "wildmass/errors.hpp"
#include "wildmass/masses.hpp"
#include "wildmass/padic/etale.hpp"

using namespace wildmass;
using namespace wildmass::padic;

namespace {

EtaleOptions slow()
{
    EtaleOptions o;
    o.slow = true;
    return o;
}

}  // namespace

TEST(Fields, SmallCounts)
{
    EXPECT_EQ(enumerate_fields(2, 1).size(), 1u);
    EXPECT_EQ(enumerate_fields(2, 2).size(), 7u);
    EXPECT_EQ(enumerate_fields(5, 2).size(), 3u);
    // published counts of 2-adic and 3-adic fields of degree 3 and 4
    EXPECT_EQ(enumerate_fields(2, 3).size(), 2u);
    EXPECT_EQ(enumerate_fields(3, 3).size(), 10u);
    EXPECT_EQ(enumerate_fields(2, 4, slow()).size(), 59u);
    EXPECT_EQ(enumerate_fields(3, 4).size(), 5u);
}

TEST(Fields, UnramifiedAutomorphisms)
{
    for (int m = 1; m <= 4; ++m)
        for (auto const& fld : enumerate_fields(3, m))
            if (fld.e() == 1) {
                EXPECT_EQ(fld.f, m);
                EXPECT_EQ(fld.aut_count, m);
                EXPECT_EQ(fld.disc_exponent(), 0);
            }
}

TEST(Fields, FrobeniusOrbitsPreserveMass)
{
    // sum over Q_p-classes of 1/aut equals (1/f) times the sum over classes over the base
    for (long p : {2L, 3L}) {
        auto opts = p == 2 ? slow() : EtaleOptions{};
        Rat over_qp = 0, over_base = 0;
        for (auto const& fld : enumerate_fields(p, 4, opts))
            if (fld.f == 2 && fld.e() == 2)
                over_qp += Rat(1, fld.aut_count);
        for (auto const& x : enumerate_extensions(p, 2, 2))
            over_base += Rat(1, x.aut_count);
        over_qp.canonicalize();
        over_base.canonicalize();
        EXPECT_EQ(over_qp, over_base / 2) << p;
    }
}

TEST(Fields, TowerFormulaForDiscriminants)
{
    for (long p : {2L, 3L})
        for (int m = 1; m <= 4; ++m)
            for (auto const& fld : enumerate_fields(p, m, slow()))
                EXPECT_EQ(absolute_disc_valuation(fld), fld.disc_exponent()) << fld.label;
}

TEST(Etale, Counts)
{
    EXPECT_EQ(enumerate_etale_algebras(2, 2).size(), 8u);
    EXPECT_EQ(enumerate_etale_algebras(5, 2).size(), 4u);
    for (long p : {2L, 3L, 7L}) {
        auto one = enumerate_etale_algebras(p, 1);
        ASSERT_EQ(one.size(), 1u);
        EXPECT_EQ(one[0].a, 0);
        EXPECT_EQ(one[0].aut_count, 1);
    }
}

TEST(Etale, DerivedInvariants)
{
    for (auto [p, n] : {std::pair{2L, 3}, {3L, 3}, {3L, 4}}) {
        for (auto const& alg : enumerate_etale_algebras(p, n)) {
            int sum_f = 0, degree = 0;
            for (auto const& fac : alg.factors) {
                sum_f += fac.multiplicity * fac.field.f;
                degree += fac.multiplicity * fac.field.degree();
            }
            EXPECT_EQ(degree, n);
            EXPECT_EQ(alg.n, n);
            EXPECT_GE(alg.a, 0);
            EXPECT_GE(alg.t, 0);
            EXPECT_EQ(alg.t, n - sum_f);
            EXPECT_EQ(alg.w2sigma, 2 * alg.t - alg.a);
            EXPECT_NO_THROW(validate_partition(alg.partition, n));
            EXPECT_EQ(alg.partition.length(), sum_f);
        }
    }
    // split algebra Q_p^3 has 3! automorphisms
    auto algs = enumerate_etale_algebras(3, 3);
    EXPECT_EQ(algs.front().aut_count, 6);
    EXPECT_EQ(algs.front().a, 0);
}

TEST(Etale, BhargavaExamples)
{
    auto c22 = bhargava_check(2, 2);
    EXPECT_TRUE(c22.ok);
    EXPECT_EQ(c22.lhs, Rat(3, 2));
    auto c33 = bhargava_check(3, 3);
    EXPECT_TRUE(c33.ok);
    EXPECT_EQ(c33.lhs, Rat(13, 9));
    EXPECT_EQ(bhargava_check(11, 1).lhs, 1);
    for (auto [p, n] : {std::pair{3L, 2}, {2L, 3}, {5L, 3}, {7L, 3}, {3L, 4}, {5L, 4}})
        EXPECT_TRUE(bhargava_check(p, n).ok) << p << " " << n;
}

TEST(Etale, PerPartition)
{
    for (long p : {2L, 3L})
        for (int n = 1; n <= 3; ++n) {
            auto algs = enumerate_etale_algebras(p, n);
            for (auto const& pt : enumerate_partitions(n)) {
                auto c = per_partition_mass(algs, p, n, pt);
                EXPECT_TRUE(c.ok) << p << " " << n;
            }
            auto ones = per_partition_mass(algs, p, n, Partition{std::vector<int>(n, 1)});
            EXPECT_EQ(ones.lhs, 1);
        }
    EXPECT_EQ(per_partition_mass(2, 2, Partition{{2}}).lhs, Rat(1, 2));
    EXPECT_THROW(per_partition_mass(2, 3, Partition{{2}}), domain_error);
}

TEST(Etale, WildHilbert)
{
    auto c22 = wild_hilb_mass(2, 2);
    EXPECT_TRUE(c22.ok);
    EXPECT_EQ(c22.lhs, 3);
    auto c33 = wild_hilb_mass(3, 3);
    EXPECT_TRUE(c33.ok);
    EXPECT_EQ(c33.lhs, 13);
    EXPECT_EQ(wild_hilb_mass(5, 1).lhs, 1);
    EXPECT_TRUE(wild_hilb_mass(2, 3).ok);
    EXPECT_TRUE(wild_hilb_mass(3, 2).ok);
}

TEST(Etale, TameConsistency)
{
    // p does not divide n!: the p-adic and tame pipelines must agree
    for (auto [p, n] : {std::pair{5L, 3}, {7L, 3}, {5L, 4}, {7L, 4}}) {
        auto sigma = defining_rep(GroupModel::symmetric(n));
        Rat tame = tame_mass(direct_sum(sigma, sigma), {Counting::weight, +1}, p).eval_at(p);
        EXPECT_EQ(wild_hilb_mass(p, n).lhs, tame) << p << " " << n;
    }
}

TEST(Etale, SlowFlag)
{
    EXPECT_THROW(enumerate_etale_algebras(2, 4), budget_exceeded);
    auto algs = enumerate_etale_algebras(2, 4, slow());
    EXPECT_TRUE(bhargava_check(algs, 2, 4).ok);
    EXPECT_TRUE(wild_hilb_mass(algs, 2, 4).ok);
}
