#include "wildmass/rep_zoo.hpp"

#include <numeric>

#include "wildmass/errors.hpp"

namespace wildmass {

namespace {

Permutation cyc(int degree, std::vector<std::vector<int>> const& cycles)
{
    return Permutation::from_cycles(degree, cycles);
}

}  // namespace

std::vector<ZooGroup> small_group_zoo()
{
    std::vector<ZooGroup> zoo;
    for (int l = 1; l <= 12; ++l)
        zoo.push_back({"C" + std::to_string(l), GroupModel::from_group(FiniteGroup::cyclic(l))});
    zoo.push_back({"S3", GroupModel::symmetric(3)});
    zoo.push_back({"S4", GroupModel::symmetric(4)});
    zoo.push_back({"A4", GroupModel::from_group(FiniteGroup({cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1}, {2, 3}})}))});
    zoo.push_back({"A5", GroupModel::from_group(FiniteGroup({cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})}))});
    zoo.push_back({"D4", GroupModel::from_group(FiniteGroup({cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}})}))});
    zoo.push_back({"D5", GroupModel::from_group(FiniteGroup({cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 4}, {2, 3}})}))});
    zoo.push_back({"D6", GroupModel::from_group(FiniteGroup({cyc(6, {{0, 1, 2, 3, 4, 5}}), cyc(6, {{1, 5}, {2, 4}})}))});
    zoo.push_back({"C2xC2", GroupModel::from_group(FiniteGroup({cyc(4, {{0, 1}}), cyc(4, {{2, 3}})}))});
    zoo.push_back({"C2xC4", GroupModel::from_group(FiniteGroup({cyc(6, {{0, 1}}), cyc(6, {{2, 3, 4, 5}})}))});
    zoo.push_back({"C3xC3", GroupModel::from_group(FiniteGroup({cyc(6, {{0, 1, 2}}), cyc(6, {{3, 4, 5}})}))});
    // quaternion group via left multiplication on {1,-1,i,-i,j,-j,k,-k}
    zoo.push_back({"Q8", GroupModel::from_group(FiniteGroup(
                             {Permutation(std::vector<std::uint16_t>{2, 3, 1, 0, 6, 7, 5, 4}),
                              Permutation(std::vector<std::uint16_t>{4, 5, 7, 6, 1, 0, 2, 3})}))});
    zoo.push_back({"C2xS3", GroupModel::from_group(
                                FiniteGroup({cyc(5, {{0, 1}}), cyc(5, {{2, 3, 4}}), cyc(5, {{2, 3}})}))});
    zoo.push_back({"F20", GroupModel::from_group(FiniteGroup({cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 2, 4, 3}})}))});
    zoo.push_back({"S3xS3", GroupModel::from_group(FiniteGroup(
                                {cyc(6, {{0, 1}}), cyc(6, {{0, 1, 2}}), cyc(6, {{3, 4}}), cyc(6, {{3, 4, 5}})}))});
    return zoo;
}

TameRep coset_rep(GroupModel const& model, std::size_t generator)
{
    auto const& g = model.elements();
    // subgroup H = <x>
    std::vector<std::size_t> sub;
    for (std::size_t y = 0;;) {
        sub.push_back(y);
        y = g.multiply(generator, y);
        if (y == 0)
            break;
    }
    // coset id of each element: aH
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> coset(g.order(), none);
    std::size_t count = 0;
    for (std::size_t a = 0; a < g.order(); ++a) {
        if (coset[a] != none)
            continue;
        for (std::size_t h : sub)
            coset[g.multiply(a, h)] = count;
        ++count;
    }
    std::vector<std::size_t> first(count, none);
    for (std::size_t a = 0; a < g.order(); ++a)
        if (first[coset[a]] == none)
            first[coset[a]] = a;
    std::vector<Permutation> images;
    for (std::size_t s : g.generator_indices()) {
        std::vector<std::uint16_t> img(count);
        for (std::size_t c = 0; c < count; ++c)
            img[c] = static_cast<std::uint16_t>(coset[g.multiply(s, first[c])]);
        images.emplace_back(std::move(img));
    }
    return permutation_rep(model, images);
}

TameRep RepSampler::permutation_piece(GroupModel const& model)
{
    switch (uniform(0, 3)) {
    case 0:
        if (model.table->permutation_degree() > 0)
            return defining_rep(model);
        [[fallthrough]];
    case 1:
        if (model.table->group_order() <= 24)
            return regular_rep(model);
        [[fallthrough]];
    case 2:
        if (model.has_elements()) {
            auto const& g = model.elements();
            std::size_t x = static_cast<std::size_t>(uniform(0, static_cast<int>(g.order()) - 1));
            return coset_rep(model, x);
        }
        [[fallthrough]];
    default:
        return trivial_rep(model, uniform(1, 2));
    }
}

TameRep RepSampler::permutation(GroupModel const& model, int max_pieces)
{
    TameRep rep = permutation_piece(model);
    for (int k = uniform(1, max_pieces); k > 1; --k)
        rep = direct_sum(rep, permutation_piece(model));
    return rep;
}

TameRep RepSampler::character(GroupModel const& model)
{
    if (!model.has_elements())
        return trivial_rep(model, 1);
    auto const& g = model.elements();
    for (int attempt = 0; attempt < 24; ++attempt) {
        std::vector<Rat> values;
        for (std::size_t s : g.generator_indices()) {
            int l = g.element_order(s);
            values.emplace_back(uniform(0, l - 1), l);
            values.back().canonicalize();
        }
        try {
            return diagonal_rep(model, {values});
        } catch (not_a_homomorphism const&) {
        }
    }
    return trivial_rep(model, 1);
}

TameRep RepSampler::general(GroupModel const& model, int max_pieces)
{
    auto piece = [&]() {
        TameRep r = uniform(0, 2) == 0 ? permutation_piece(model) : character(model);
        if (uniform(0, 1) == 0)
            r = dual(r);
        return r;
    };
    TameRep rep = piece();
    for (int k = uniform(1, max_pieces); k > 1; --k)
        rep = direct_sum(rep, piece());
    return rep;
}

}  // namespace wildmass
