#pragma once

#include <vector>

#include "wildmass/qlaurent.hpp"

namespace wildmass {

/* A partition of n: parts in weakly decreasing order. */
struct Partition {
    std::vector<int> parts;

    int total() const;
    int length() const { return static_cast<int>(parts.size()); }
    /* multiplicity of each part size, indexed by size (index 0 unused) */
    std::vector<int> multiplicities() const;

    friend bool operator==(Partition const&, Partition const&) = default;
    friend auto operator<=>(Partition const&, Partition const&) = default;
};

/* Throws domain_error unless parts are positive, sorted descending and
 * sum to n. */
void validate_partition(Partition const& p, int n);

/* All partitions of n, in lexicographically descending order. */
std::vector<Partition> enumerate_partitions(int n);

/* P(n, r): partitions of n into exactly r parts.  Uses the recurrence
 * P(n, r) = P(n-1, r-1) + P(n-r, r). */
BigInt count_partitions_into_parts(int n, int r);

/* p(n) = sum_r P(n, r) */
BigInt partition_count(int n);

/* sum_{m=0}^{n-1} P(n, n-m) q^{-m} */
MassPoly bhargava_rhs(int n);

/* sum_{m=0}^{n-1} P(n, n-m) q^{m} */
MassPoly hilbert_origin_count(int n);

}  // namespace wildmass
