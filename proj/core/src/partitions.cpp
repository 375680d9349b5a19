#include "wildmass/partitions.hpp"

#include <numeric>

#include "wildmass/errors.hpp"

namespace wildmass {

int Partition::total() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<int> Partition::multiplicities() const
{
    std::vector<int> m(parts.empty() ? 1 : parts.front() + 1, 0);
    for (int x : parts)
        ++m[x];
    return m;
}

void validate_partition(Partition const& p, int n)
{
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i] <= 0)
            throw domain_error("partition parts must be positive");
        if (i > 0 && p.parts[i] > p.parts[i - 1])
            throw domain_error("partition parts must be weakly decreasing");
    }
    if (p.total() != n)
        throw domain_error("partition does not sum to " + std::to_string(n));
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(Partition{prefix});
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        extend(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 1)
        throw domain_error("enumerate_partitions requires n >= 1");
    std::vector<Partition> out;
    std::vector<int> prefix;
    extend(n, n, prefix, out);
    return out;
}

BigInt count_partitions_into_parts(int n, int r)
{
    if (n < 0 || r < 0)
        throw domain_error("count_partitions_into_parts requires n, r >= 0");
    if (r > n)
        return 0;
    if (n == 0)
        return r == 0 ? 1 : 0;
    // table[i][j] = P(i, j) for i <= n, j <= r
    std::vector<std::vector<BigInt>> table(n + 1, std::vector<BigInt>(r + 1, 0));
    table[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, r); ++j)
            table[i][j] = table[i - 1][j - 1] + table[i - j][j];
    return table[n][r];
}

BigInt partition_count(int n)
{
    BigInt total = 0;
    for (int r = 1; r <= n; ++r)
        total += count_partitions_into_parts(n, r);
    return total;
}

MassPoly bhargava_rhs(int n)
{
    if (n < 1)
        throw domain_error("bhargava_rhs requires n >= 1");
    MassPoly m;
    for (int k = 0; k < n; ++k)
        m.add_term(Rat(count_partitions_into_parts(n, n - k)), Rat(-k));
    return m;
}

MassPoly hilbert_origin_count(int n)
{
    if (n < 1)
        throw domain_error("hilbert_origin_count requires n >= 1");
    MassPoly m;
    for (int k = 0; k < n; ++k)
        m.add_term(Rat(count_partitions_into_parts(n, n - k)), Rat(k));
    return m;
}

}  // namespace wildmass
