#pragma once

// A fixed zoo of small permutation groups and a seeded sampler of
// representations on them, shared by the property suites of the CLI and
// the tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wildmass/reps.hpp"

namespace wildmass {

struct ZooGroup {
    std::string name;
    GroupModel model;
};

/* Cyclic groups up to order 12 and assorted non-abelian groups, all of
 * order <= 60. */
std::vector<ZooGroup> small_group_zoo();

/* Left action on the cosets of the cyclic subgroup generated by element
 * `generator`. */
TameRep coset_rep(GroupModel const& model, std::size_t generator);

class RepSampler {
  public:
    explicit RepSampler(std::uint64_t seed) : rng_(seed) {}

    /* direct sum of permutation pieces: defining, regular, trivial, cosets */
    TameRep permutation(GroupModel const& model, int max_pieces = 3);
    /* permutation pieces plus characters and duals; often unbalanced */
    TameRep general(GroupModel const& model, int max_pieces = 3);
    /* a one-dimensional character, trivial if none was found */
    TameRep character(GroupModel const& model);

    std::mt19937_64& engine() { return rng_; }

  private:
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    TameRep permutation_piece(GroupModel const& model);

    std::mt19937_64 rng_;
};

}  // namespace wildmass
