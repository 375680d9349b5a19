#include <gtest/gtest.h>

#include "wildmass/errors.hpp"
#include "wildmass/rep_zoo.hpp"
#include "wildmass/reps.hpp"

using namespace wildmass;

namespace {

std::size_t class_with_type(ClassTable const& t, std::vector<int> parts)
{
    for (std::size_t c = 0; c < t.size(); ++c)
        if (t[c].cycle_type && t[c].cycle_type->parts == parts)
            return c;
    throw std::logic_error("no such class");
}

std::vector<Rat> rats(std::initializer_list<char const*> xs)
{
    std::vector<Rat> out;
    for (auto x : xs)
        out.push_back(parse_rat(x));
    return out;
}

GroupModel c3()
{
    return GroupModel::from_group(FiniteGroup::cyclic(3));
}

std::size_t c3_generator_class(GroupModel const& m)
{
    return m.elements().class_of(m.elements().generator_indices()[0]);
}

/* diag(zeta_3, zeta_3) */
TameRep double_cube_root(GroupModel const& m)
{
    return diagonal_rep(m, {rats({"1/3"}), rats({"1/3"})});
}

}  // namespace

TEST(TameRep, PermutationExamples)
{
    auto s2 = GroupModel::symmetric(2);
    auto sigma2 = defining_rep(s2);
    EXPECT_EQ(sigma2.exponents(class_with_type(*s2.table, {2})),
              rats({"0", "1/2"}));
    EXPECT_EQ(sigma2.exponents(0), rats({"0", "0"}));
    auto s3 = GroupModel::symmetric(3);
    EXPECT_EQ(defining_rep(s3).exponents(class_with_type(*s3.table, {3})), rats({"0", "1/3", "2/3"}));
}

TEST(TameRep, AbstractSymmetricMatchesExplicit)
{
    for (int n = 2; n <= 6; ++n) {
        auto explicit_model = GroupModel::symmetric(n);
        ASSERT_TRUE(explicit_model.has_elements());
        auto abstract_model = GroupModel{nullptr, std::make_shared<ClassTable const>(ClassTable::symmetric(n))};
        auto a = defining_rep(explicit_model);
        auto b = defining_rep(abstract_model);
        for (std::size_t c = 0; c < b.table().size(); ++c) {
            auto ca = class_with_type(a.table(), b.table()[c].cycle_type->parts);
            EXPECT_EQ(a.exponents(ca), b.exponents(c));
        }
    }
}

TEST(TameRep, NotAHomomorphism)
{
    auto m = c3();
    // a transposition cannot be the image of an element of order 3
    EXPECT_THROW(permutation_rep(m, {Permutation::from_cycles(2, {{0, 1}})}), not_a_homomorphism);
    EXPECT_NO_THROW(permutation_rep(m, {Permutation::from_cycles(3, {{0, 1, 2}})}));
}

TEST(TameRep, SumDualRegular)
{
    auto m = c3();
    auto g = c3_generator_class(m);
    auto reg = regular_rep(m);
    EXPECT_EQ(reg.exponents(g), rats({"0", "1/3", "2/3"}));
    auto x = double_cube_root(m);
    EXPECT_EQ(dual(dual(x)).exponents(g), x.exponents(g));
    EXPECT_EQ(dual(x).exponents(g), rats({"2/3", "2/3"}));

    auto s2 = GroupModel::symmetric(2);
    auto sigma = defining_rep(s2);
    EXPECT_EQ(direct_sum(sigma, sigma).exponents(class_with_type(*s2.table, {2})), rats({"0", "0", "1/2", "1/2"}));
    EXPECT_THROW(direct_sum(sigma, reg), group_mismatch);
}

TEST(TameRep, RejectsInconsistentData)
{
    auto m = c3();
    // exponent 1/3 on a generator forces 2/3 on its square: a single one is fine
    EXPECT_NO_THROW(diagonal_rep(m, {rats({"1/3"})}));
    // nonzero exponent on the identity class
    std::vector<std::vector<Rat>> bad(m.table->size(), rats({"0"}));
    bad[0] = rats({"1/2"});
    EXPECT_THROW(TameRep(m, 1, bad), domain_error);
    // 1/2 is not a cube root of unity
    std::vector<std::vector<Rat>> wrong_order(m.table->size(), rats({"1/2"}));
    wrong_order[0] = rats({"0"});
    EXPECT_THROW(TameRep(m, 1, wrong_order), domain_error);
}

TEST(Invariants, Examples)
{
    auto s2 = GroupModel::symmetric(2);
    auto sigma = defining_rep(s2);
    auto t = class_with_type(*s2.table, {2});
    EXPECT_EQ(age_weight(sigma, 0), 0);
    EXPECT_EQ(age_weight(sigma, t), Rat(1, 2));
    EXPECT_EQ(v_tame(sigma, 0), 0);
    EXPECT_EQ(v_tame(sigma, t), Rat(1, 2));

    auto m = c3();
    auto x = double_cube_root(m);
    auto g = c3_generator_class(m);
    EXPECT_EQ(age_weight(x, g), Rat(4, 3));
    EXPECT_EQ(v_tame(x, g), Rat(2, 3));
    EXPECT_EQ(artin_tame(x, g), 2);
    EXPECT_EQ(artin_tame(x, 0), 0);

    auto s5 = GroupModel::symmetric(5);
    auto sig5 = defining_rep(s5);
    for (std::size_t c = 0; c < s5.table->size(); ++c)
        EXPECT_EQ(artin_tame(sig5, c), 5 - (*s5.table)[c].cycle_type->length());
}

TEST(Invariants, BalancedAndPseudoReflection)
{
    auto m = c3();
    auto x = double_cube_root(m);
    EXPECT_FALSE(is_balanced(x));
    EXPECT_TRUE(is_balanced(direct_sum(x, dual(x))));
    EXPECT_FALSE(has_pseudo_reflection(x));
    for (auto const& z : small_group_zoo())
        EXPECT_TRUE(is_balanced(regular_rep(z.model))) << z.name;
    for (int n = 2; n <= 9; ++n) {
        auto s = GroupModel::symmetric(n);
        auto sigma = defining_rep(s);
        EXPECT_TRUE(is_balanced(sigma));
        EXPECT_TRUE(has_pseudo_reflection(sigma));
        EXPECT_FALSE(has_pseudo_reflection(direct_sum(sigma, sigma)));
    }
}

TEST(Invariants, AdditivityAndTrivial)
{
    RepSampler sampler(11);
    for (auto const& z : small_group_zoo()) {
        auto a = sampler.general(z.model);
        auto b = sampler.general(z.model);
        auto s = direct_sum(a, b);
        auto triv = trivial_rep(z.model, 2);
        for (std::size_t c = 0; c < s.table().size(); ++c) {
            EXPECT_EQ(age_weight(s, c), age_weight(a, c) + age_weight(b, c));
            EXPECT_EQ(v_tame(s, c), v_tame(a, c) + v_tame(b, c));
            EXPECT_EQ(artin_tame(s, c), artin_tame(a, c) + artin_tame(b, c));
            EXPECT_EQ(age_weight(triv, c), 0);
            EXPECT_EQ(v_tame(triv, c), 0);
            EXPECT_EQ(artin_tame(triv, c), 0);
        }
    }
}

TEST(Invariants, SignRepresentation)
{
    auto s4 = GroupModel::symmetric(4);
    auto sign = sign_rep(s4);
    for (std::size_t c = 0; c < s4.table->size(); ++c) {
        int odd = (4 - (*s4.table)[c].cycle_type->length()) % 2;
        EXPECT_EQ(artin_tame(sign, c), odd);
    }
}

TEST(Restriction, S2IntoS3)
{
    auto s3 = GroupModel::symmetric(3);
    auto s2_in_s3 = GroupModel::from_group(FiniteGroup({Permutation::from_cycles(3, {{0, 1}})}));
    auto restricted = restrict_rep(defining_rep(s3), s2_in_s3);
    // the restriction of the defining rep of S_3 is the permutation action on 3 points
    auto direct = permutation_rep(s2_in_s3, {Permutation::from_cycles(3, {{0, 1}})});
    for (std::size_t c = 0; c < restricted.table().size(); ++c) {
        EXPECT_EQ(restricted.exponents(c), direct.exponents(c));
        EXPECT_EQ(age_weight(restricted, c), age_weight(direct, c));
    }
}

TEST(ExactMatrix, FixedSpaceCodim)
{
    EXPECT_EQ(fixed_space_codim(ExactMatrix::identity(4)), 0);
    for (long p : {2L, 3L, 5L, 7L})
        for (int n = 2; n <= p; ++n)
            EXPECT_EQ(fixed_space_codim(ExactMatrix::jordan_block(n, 1, p)), n - 1);
    EXPECT_EQ(fixed_space_codim(ExactMatrix::diagonal({1, -1})), 1);
    // over F_2, -1 = 1
    EXPECT_EQ(fixed_space_codim(ExactMatrix::diagonal({1, -1}, 2)), 0);
}

TEST(Conductors, FromFiltration)
{
    auto tame = conductors_from_filtration(RamFiltration(3, {{1, 2}}));
    EXPECT_EQ(tame.artin, 2);
    EXPECT_EQ(tame.swan, 0);
    EXPECT_EQ(tame.tame, 2);
    auto zero = conductors_from_filtration(RamFiltration(3, {{1, 0}}));
    EXPECT_EQ(zero.artin, 0);
    EXPECT_EQ(zero.tame, 0);
    for (int j = 1; j <= 10; ++j)
        for (int n = 2; n <= 7; ++n) {
            auto c = conductors_from_filtration(RamFiltration(n, std::vector<RamStep>(j + 1, RamStep{1, n - 1})));
            EXPECT_EQ(c.artin, (j + 1) * (n - 1));
            EXPECT_EQ(c.artin, c.swan + c.tame);
        }
    // a filtration with index growth: (G_0 : G_1) = 2
    auto mixed = conductors_from_filtration(RamFiltration(2, {{1, 1}, {2, 1}}));
    EXPECT_EQ(mixed.artin, Rat(3, 2));
    EXPECT_EQ(mixed.swan, Rat(1, 2));
    EXPECT_THROW(RamFiltration(2, {{2, 1}}), domain_error);
    EXPECT_THROW(RamFiltration(2, {{1, 1}, {1, 2}}), domain_error);
    EXPECT_THROW(RamFiltration(2, {{1, 3}}), domain_error);
}

TEST(JordanBlock, Examples)
{
    auto a = wild_cyclic_jordan(2, 2, 1);
    EXPECT_EQ(a.artin, 2);
    EXPECT_EQ(a.tame, 1);
    EXPECT_EQ(a.weight, 0);
    ASSERT_TRUE(a.doubled);
    EXPECT_EQ(a.doubled->first, 0);
    EXPECT_EQ(a.doubled->second, 0);
    auto b = wild_cyclic_jordan(2, 3, 4);
    EXPECT_EQ(b.doubled->first, -3);
    EXPECT_EQ(b.doubled->second, -2);
    EXPECT_EQ(wild_cyclic_jordan(2, 5, 1).weight, 0);
    EXPECT_FALSE(wild_cyclic_jordan(3, 5, 2).doubled);
    EXPECT_THROW(wild_cyclic_jordan(4, 3, 1), domain_error);
    EXPECT_THROW(wild_cyclic_jordan(2, 4, 1), domain_error);
}
