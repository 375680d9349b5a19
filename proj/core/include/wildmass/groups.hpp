#pragma once

// Finite permutation groups, their conjugacy classes and power maps, and a
// class-level view (ClassTable) that also covers S_n by cycle type without
// materializing n! elements.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wildmass/partitions.hpp"
#include "wildmass/qlaurent.hpp"

namespace wildmass {

class Permutation {
  public:
    Permutation() = default;
    /* 0-based images; throws domain_error unless a bijection */
    explicit Permutation(std::vector<std::uint16_t> images);

    static Permutation identity(int degree);
    static Permutation from_one_based(std::vector<int> const& images);
    /* 0-based cycles, e.g. {{0,1,2}} */
    static Permutation from_cycles(int degree, std::vector<std::vector<int>> const& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    std::vector<std::uint16_t> const& images() const { return images_; }

    /* (a * b)(i) = a(b(i)) */
    Permutation operator*(Permutation const& rhs) const;
    Permutation inverse() const;
    Permutation pow(long k) const;
    bool is_identity() const;
    int order() const;
    /* cycle lengths including fixed points, descending */
    Partition cycle_type() const;

    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

    struct hash {
        std::size_t operator()(Permutation const& p) const noexcept;
    };

  private:
    std::vector<std::uint16_t> images_;
};

struct ConjClass {
    /* element index in the owning FiniteGroup; unset for abstract tables */
    std::optional<std::size_t> representative;
    BigInt size;
    BigInt centralizer_order;
    int element_order = 1;
    /* set for the symmetric-group table and for permutation groups */
    std::optional<Partition> cycle_type;
};

class FiniteGroup {
  public:
    static constexpr std::size_t default_max_order = 10000;

    /* Closure of the generators.  Throws group_too_large past max_order. */
    explicit FiniteGroup(std::vector<Permutation> generators,
                         std::size_t max_order = default_max_order);

    static FiniteGroup symmetric(int n, std::size_t max_order = default_max_order);
    static FiniteGroup cyclic(int l);

    std::size_t order() const { return elements_.size(); }
    int degree() const { return degree_; }
    long exponent() const { return exponent_; }

    std::vector<Permutation> const& generators() const { return generators_; }
    std::vector<std::size_t> const& generator_indices() const { return generator_index_; }

    /* element 0 is the identity */
    Permutation const& element(std::size_t i) const { return elements_[i]; }
    std::optional<std::size_t> find(Permutation const& g) const;
    std::size_t index_of(Permutation const& g) const;

    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::size_t power(std::size_t a, long k) const;
    int element_order(std::size_t a) const { return order_[a]; }

    std::vector<ConjClass> const& classes() const { return classes_; }
    std::size_t class_of(std::size_t element) const { return class_of_[element]; }

    /* asserts closure, identity, inverses and associativity on the table */
    void check_group_laws() const;

  private:
    void compute_classes();

    int degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<std::size_t> generator_index_;
    std::vector<Permutation> elements_;
    std::unordered_map<Permutation, std::size_t, Permutation::hash> index_;
    std::vector<std::size_t> inverse_;
    std::vector<int> order_;
    long exponent_ = 1;
    std::vector<ConjClass> classes_;
    std::vector<std::size_t> class_of_;
};

/* Classes ordered by minimal element index, which is also the
 * representative. */
std::vector<ConjClass> const& conjugacy_classes(FiniteGroup const& g);

/* index of the class of g^k for g in class c */
std::size_t power_class(FiniteGroup const& g, std::size_t c, long k);

/* C_{G,q} = { [g] : [g] = [g^q] }, as class indices */
std::vector<std::size_t> frobenius_stable_classes(FiniteGroup const& g, long q);

/* #{(g,h) : h g h^-1 = g^q}, via sum over C_{G,q} of size * centralizer */
BigInt frobenius_pair_count(FiniteGroup const& g, long q);

/* Same count by enumerating all pairs.  Throws group_too_large above
 * max_order. */
BigInt frobenius_pair_count_bruteforce(FiniteGroup const& g, long q, std::size_t max_order = 2000);

/* S_n classes by cycle type, one per partition (enumeration order). */
struct SymmetricClass {
    Partition cycle_type;
    BigInt size;
    BigInt centralizer_order;
};
std::vector<SymmetricClass> sn_classes(int n);

/* z_lambda = prod_i i^{m_i} m_i! */
BigInt centralizer_order(Partition const& cycle_type);

/* cycle type of g^k for g of the given cycle type */
Partition power_cycle_type(Partition const& cycle_type, long k);

/* Class-level data of a group: class sizes, element orders and the power
 * map.  Everything the tame mass computations need. */
class ClassTable {
  public:
    static ClassTable from_group(FiniteGroup const& g);
    static ClassTable symmetric(int n);

    BigInt const& group_order() const { return order_; }
    long exponent() const { return exponent_; }
    std::size_t size() const { return classes_.size(); }
    ConjClass const& operator[](std::size_t c) const { return classes_[c]; }
    std::vector<ConjClass> const& classes() const { return classes_; }
    std::size_t identity_class() const { return 0; }

    /* class of g^k, g in class c */
    std::size_t power(std::size_t c, long k) const;
    std::vector<std::size_t> frobenius_stable(long q) const;
    std::string label(std::size_t c) const;

    /* degree of the natural permutation action, 0 if none */
    int permutation_degree() const { return permutation_degree_; }

  private:
    BigInt order_;
    long exponent_ = 1;
    int permutation_degree_ = 0;
    std::vector<ConjClass> classes_;
    // powers_[c][k mod order of c]
    std::vector<std::vector<std::size_t>> powers_;
};

}  // namespace wildmass
