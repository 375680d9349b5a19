#pragma once

// Representations through eigenvalue data of the inertia generator, the
// counting functions built from it (Artin conductor, v, weight), and the
// conductor of a ramification filtration.
//
// An exponent x in [0,1) stands for the eigenvalue exp(2 pi i x); its
// denominator divides the order of the class representative.

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "wildmass/groups.hpp"
#include "wildmass/qlaurent.hpp"

namespace wildmass {

/* A group as seen by the representation code: always a class table,
 * plus the explicit permutation group when one has been materialized. */
struct GroupModel {
    std::shared_ptr<FiniteGroup const> group;
    std::shared_ptr<ClassTable const> table;

    static GroupModel from_group(FiniteGroup g);
    /* S_n by cycle type; the explicit group is attached when n! fits
     * under FiniteGroup::default_max_order. */
    static GroupModel symmetric(int n);

    bool has_elements() const { return group != nullptr; }
    FiniteGroup const& elements() const;
};

class TameRep {
  public:
    /* exponents[c] is the multiset for class c; validated on construction */
    TameRep(GroupModel model, int dimension, std::vector<std::vector<Rat>> exponents);

    GroupModel const& model() const { return model_; }
    ClassTable const& table() const { return *model_.table; }
    int dimension() const { return dimension_; }
    std::vector<Rat> const& exponents(std::size_t c) const { return exponents_.at(c); }

    friend bool operator==(TameRep const& a, TameRep const& b)
    {
        return a.model_.table == b.model_.table && a.dimension_ == b.dimension_ &&
               a.exponents_ == b.exponents_;
    }

  private:
    GroupModel model_;
    int dimension_;
    std::vector<std::vector<Rat>> exponents_;
};

/* Action given by the images of the group's generators.  Throws
 * not_a_homomorphism if they do not define one. */
TameRep permutation_rep(GroupModel const& model, std::vector<Permutation> const& generator_images);

/* The group's own permutation action (defining representation of S_n). */
TameRep defining_rep(GroupModel const& model);

/* Left translation on the group. Needs only the class table. */
TameRep regular_rep(GroupModel const& model);

TameRep trivial_rep(GroupModel const& model, int dimension);

/* Sum of one-dimensional characters; characters[i][s] is the value of
 * character i on generator s, as an element of Q/Z. */
TameRep diagonal_rep(GroupModel const& model, std::vector<std::vector<Rat>> const& characters);

/* Sign character of a permutation group. */
TameRep sign_rep(GroupModel const& model);

TameRep direct_sum(TameRep const& a, TameRep const& b);
TameRep dual(TameRep const& a);

/* Restriction along an inclusion of permutation groups acting on the same
 * set: each class of `sub` is sent to the class of the same permutation. */
TameRep restrict_rep(TameRep const& rep, GroupModel const& sub);

/* n - (1/l) sum b_i with exponents b_i/l, 1 <= b_i <= l */
Rat age_weight(TameRep const& rep, std::size_t c);
/* (1/l) sum a_i with exponents a_i/l, 0 <= a_i < l */
Rat v_tame(TameRep const& rep, std::size_t c);
/* number of nonzero exponents */
int artin_tame(TameRep const& rep, std::size_t c);

bool is_balanced(TameRep const& rep);
bool has_pseudo_reflection(TameRep const& rep);

/* Square matrix over Q (characteristic 0) or F_p. */
class ExactMatrix {
  public:
    ExactMatrix(int n, long characteristic = 0);

    static ExactMatrix identity(int n, long characteristic = 0);
    /* n x n upper Jordan block with the given eigenvalue */
    static ExactMatrix jordan_block(int n, Rat const& eigenvalue, long characteristic = 0);
    static ExactMatrix diagonal(std::vector<Rat> const& entries, long characteristic = 0);

    int size() const { return n_; }
    long characteristic() const { return characteristic_; }
    Rat const& at(int i, int j) const { return entries_[i * n_ + j]; }
    void set(int i, int j, Rat value);

    int rank() const;
    ExactMatrix operator-(ExactMatrix const& rhs) const;
    ExactMatrix operator*(ExactMatrix const& rhs) const;

  private:
    int n_;
    long characteristic_;
    std::vector<Rat> entries_;
};

/* n - dim ker(M - I) */
int fixed_space_codim(ExactMatrix const& m);

struct RamStep {
    long ram_index;  // (G_0 : G_i)
    int codim;       // codim of the fixed space of G_i
};

/* Steps i = 0..j; trivial beyond.  Validated on construction. */
class RamFiltration {
  public:
    RamFiltration(int dimension, std::vector<RamStep> steps);

    int dimension() const { return dimension_; }
    std::vector<RamStep> const& steps() const { return steps_; }

  private:
    int dimension_;
    std::vector<RamStep> steps_;
};

struct Conductors {
    Rat artin;
    Rat swan;
    int tame = 0;
};

Conductors conductors_from_filtration(RamFiltration const& f);

/* Z/p acting on k^n through an n x n unipotent Jordan block, lower
 * ramification break j. */
struct JordanBlockInvariants {
    int artin = 0;
    int tame = 0;
    int weight = 0;
    /* n = 2 only: (2t - a, w of the doubled representation) */
    std::optional<std::pair<int, int>> doubled;
};

JordanBlockInvariants wild_cyclic_jordan(int n, int p, int j);

}  // namespace wildmass
