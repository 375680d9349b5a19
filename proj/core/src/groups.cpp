#include "wildmass/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "wildmass/errors.hpp"

namespace wildmass {

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (auto x : images_) {
        if (x >= images_.size() || seen[x])
            throw domain_error("not a permutation");
        seen[x] = true;
    }
}

Permutation Permutation::identity(int degree)
{
    std::vector<std::uint16_t> img(degree);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::from_one_based(std::vector<int> const& images)
{
    std::vector<std::uint16_t> img;
    img.reserve(images.size());
    for (int x : images) {
        if (x < 1 || x > static_cast<int>(images.size()))
            throw domain_error("permutation image out of range");
        img.push_back(static_cast<std::uint16_t>(x - 1));
    }
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int degree, std::vector<std::vector<int>> const& cycles)
{
    std::vector<std::uint16_t> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (auto const& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (from < 0 || from >= degree || to < 0 || to >= degree)
                throw domain_error("cycle entry out of range");
            img[from] = static_cast<std::uint16_t>(to);
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::operator*(Permutation const& rhs) const
{
    if (rhs.degree() != degree())
        throw domain_error("permutation degrees differ");
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        out.images_[i] = images_[rhs.images_[i]];
    return out;
}

Permutation Permutation::inverse() const
{
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        out.images_[images_[i]] = static_cast<std::uint16_t>(i);
    return out;
}

Permutation Permutation::pow(long k) const
{
    long ord = order();
    k %= ord;
    if (k < 0)
        k += ord;
    Permutation result = identity(degree());
    for (long i = 0; i < k; ++i)
        result = *this * result;
    return result;
}

bool Permutation::is_identity() const
{
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i)
            return false;
    return true;
}

Partition Permutation::cycle_type() const
{
    std::vector<bool> seen(images_.size(), false);
    Partition p;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        p.parts.push_back(len);
    }
    std::sort(p.parts.begin(), p.parts.end(), std::greater<>());
    return p;
}

int Permutation::order() const
{
    int ord = 1;
    for (int c : cycle_type().parts)
        ord = std::lcm(ord, c);
    return ord;
}

std::size_t Permutation::hash::operator()(Permutation const& p) const noexcept
{
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : p.images_) {
        h ^= x;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

FiniteGroup::FiniteGroup(std::vector<Permutation> generators, std::size_t max_order)
    : generators_(std::move(generators))
{
    if (generators_.empty())
        throw domain_error("a group needs at least one generator");
    degree_ = generators_.front().degree();
    for (auto const& g : generators_)
        if (g.degree() != degree_)
            throw domain_error("generators act on different sets");

    elements_.push_back(Permutation::identity(degree_));
    index_.emplace(elements_.front(), 0);
    for (std::size_t head = 0; head < elements_.size(); ++head) {
        for (auto const& s : generators_) {
            Permutation y = s * elements_[head];
            if (index_.contains(y))
                continue;
            if (elements_.size() >= max_order)
                throw group_too_large("group order exceeds " + std::to_string(max_order));
            index_.emplace(y, elements_.size());
            elements_.push_back(std::move(y));
        }
    }
    for (auto const& s : generators_)
        generator_index_.push_back(index_.at(s));

    inverse_.resize(elements_.size());
    order_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        inverse_[i] = index_of(elements_[i].inverse());
        order_[i] = elements_[i].order();
        exponent_ = std::lcm(exponent_, static_cast<long>(order_[i]));
    }
    check_group_laws();
    compute_classes();
}

FiniteGroup FiniteGroup::symmetric(int n, std::size_t max_order)
{
    if (n < 1)
        throw domain_error("S_n requires n >= 1");
    if (n == 1)
        return FiniteGroup({Permutation::identity(1)}, max_order);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return FiniteGroup({Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {all})},
                       max_order);
}

FiniteGroup FiniteGroup::cyclic(int l)
{
    if (l < 1)
        throw domain_error("cyclic group order must be >= 1");
    std::vector<int> all(l);
    std::iota(all.begin(), all.end(), 0);
    return FiniteGroup({Permutation::from_cycles(l, {all})});
}

std::optional<std::size_t> FiniteGroup::find(Permutation const& g) const
{
    auto it = index_.find(g);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t FiniteGroup::index_of(Permutation const& g) const
{
    auto i = find(g);
    if (!i)
        throw domain_error("permutation is not an element of the group");
    return *i;
}

std::size_t FiniteGroup::multiply(std::size_t a, std::size_t b) const
{
    return index_of(elements_[a] * elements_[b]);
}

std::size_t FiniteGroup::power(std::size_t a, long k) const
{
    return index_of(elements_[a].pow(k));
}

void FiniteGroup::check_group_laws() const
{
    if (!elements_.front().is_identity())
        throw domain_error("identity missing");
    // associativity on a deterministic sample of triples
    std::size_t n = elements_.size();
    std::size_t step = std::max<std::size_t>(1, n / 7);
    for (std::size_t a = 0; a < n; a += step)
        for (std::size_t b = 0; b < n; b += step)
            for (std::size_t c = 0; c < n; c += step)
                if ((elements_[a] * elements_[b]) * elements_[c] !=
                    elements_[a] * (elements_[b] * elements_[c]))
                    throw domain_error("associativity fails");
    for (std::size_t a = 0; a < n; ++a)
        if (!(elements_[a] * elements_[inverse_[a]]).is_identity())
            throw domain_error("inverse law fails");
}

void FiniteGroup::compute_classes()
{
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    class_of_.assign(elements_.size(), unassigned);
    std::vector<Permutation> gen_inv;
    for (auto const& s : generators_)
        gen_inv.push_back(s.inverse());

    for (std::size_t x = 0; x < elements_.size(); ++x) {
        if (class_of_[x] != unassigned)
            continue;
        std::size_t c = classes_.size();
        std::deque<std::size_t> queue{x};
        class_of_[x] = c;
        std::size_t size = 0;
        while (!queue.empty()) {
            std::size_t y = queue.front();
            queue.pop_front();
            ++size;
            for (std::size_t s = 0; s < generators_.size(); ++s) {
                std::size_t z = index_of(generators_[s] * elements_[y] * gen_inv[s]);
                if (class_of_[z] == unassigned) {
                    class_of_[z] = c;
                    queue.push_back(z);
                }
            }
        }
        ConjClass cls;
        cls.representative = x;
        cls.size = static_cast<unsigned long>(size);
        cls.centralizer_order = static_cast<unsigned long>(elements_.size() / size);
        cls.element_order = order_[x];
        cls.cycle_type = elements_[x].cycle_type();
        classes_.push_back(std::move(cls));
    }
}

std::vector<ConjClass> const& conjugacy_classes(FiniteGroup const& g)
{
    return g.classes();
}

std::size_t power_class(FiniteGroup const& g, std::size_t c, long k)
{
    if (k < 0)
        throw domain_error("power_class requires k >= 0");
    return g.class_of(g.power(*g.classes().at(c).representative, k));
}

std::vector<std::size_t> frobenius_stable_classes(FiniteGroup const& g, long q)
{
    return ClassTable::from_group(g).frobenius_stable(q);
}

BigInt frobenius_pair_count(FiniteGroup const& g, long q)
{
    BigInt total = 0;
    for (std::size_t c : frobenius_stable_classes(g, q))
        total += g.classes()[c].size * g.classes()[c].centralizer_order;
    return total;
}

BigInt frobenius_pair_count_bruteforce(FiniteGroup const& g, long q, std::size_t max_order)
{
    if (g.order() > max_order)
        throw group_too_large("brute-force pair count limited to order " + std::to_string(max_order));
    long qr = q % g.exponent();
    if (qr < 0)
        qr += g.exponent();
    unsigned long count = 0;
    for (std::size_t x = 0; x < g.order(); ++x) {
        Permutation const target = g.element(x).pow(qr);
        for (std::size_t h = 0; h < g.order(); ++h)
            if (g.element(h) * g.element(x) * g.element(g.inverse(h)) == target)
                ++count;
    }
    return BigInt(count);
}

BigInt centralizer_order(Partition const& cycle_type)
{
    BigInt z = 1;
    auto mult = cycle_type.multiplicities();
    for (std::size_t i = 1; i < mult.size(); ++i) {
        for (int j = 0; j < mult[i]; ++j)
            z *= static_cast<unsigned long>(i);
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(mult[i]));
        z *= f;
    }
    return z;
}

Partition power_cycle_type(Partition const& cycle_type, long k)
{
    if (k < 0)
        throw domain_error("power_cycle_type requires k >= 0");
    Partition out;
    for (int c : cycle_type.parts) {
        long g = std::gcd(static_cast<long>(c), k);
        if (g == 0)
            g = c;  // k == 0: every cycle becomes fixed points
        for (long i = 0; i < g; ++i)
            out.parts.push_back(static_cast<int>(c / g));
    }
    std::sort(out.parts.begin(), out.parts.end(), std::greater<>());
    return out;
}

std::vector<SymmetricClass> sn_classes(int n)
{
    if (n < 1 || n > 30)
        throw domain_error("sn_classes requires 1 <= n <= 30");
    BigInt nfact;
    mpz_fac_ui(nfact.get_mpz_t(), static_cast<unsigned long>(n));
    auto parts = enumerate_partitions(n);
    std::reverse(parts.begin(), parts.end());
    std::vector<SymmetricClass> out;
    for (auto& p : parts) {
        BigInt z = centralizer_order(p);
        out.push_back({std::move(p), nfact / z, z});
    }
    return out;
}

ClassTable ClassTable::from_group(FiniteGroup const& g)
{
    ClassTable t;
    t.order_ = static_cast<unsigned long>(g.order());
    t.exponent_ = g.exponent();
    t.permutation_degree_ = g.degree();
    t.classes_ = g.classes();
    for (auto const& cls : t.classes_) {
        std::vector<std::size_t> row;
        for (int k = 0; k < cls.element_order; ++k)
            row.push_back(g.class_of(g.power(*cls.representative, k)));
        t.powers_.push_back(std::move(row));
    }
    return t;
}

ClassTable ClassTable::symmetric(int n)
{
    ClassTable t;
    auto classes = sn_classes(n);
    mpz_fac_ui(t.order_.get_mpz_t(), static_cast<unsigned long>(n));
    t.permutation_degree_ = n;
    std::vector<Partition> types;
    for (auto& sc : classes) {
        ConjClass cls;
        cls.size = sc.size;
        cls.centralizer_order = sc.centralizer_order;
        int ord = 1;
        for (int c : sc.cycle_type.parts)
            ord = std::lcm(ord, c);
        cls.element_order = ord;
        t.exponent_ = std::lcm(t.exponent_, static_cast<long>(ord));
        cls.cycle_type = sc.cycle_type;
        types.push_back(sc.cycle_type);
        t.classes_.push_back(std::move(cls));
    }
    for (auto const& cls : t.classes_) {
        std::vector<std::size_t> row;
        for (int k = 0; k < cls.element_order; ++k) {
            auto it = std::find(types.begin(), types.end(), power_cycle_type(*cls.cycle_type, k));
            row.push_back(static_cast<std::size_t>(it - types.begin()));
        }
        t.powers_.push_back(std::move(row));
    }
    return t;
}

std::size_t ClassTable::power(std::size_t c, long k) const
{
    auto const& row = powers_.at(c);
    long l = static_cast<long>(row.size());
    long r = k % l;
    if (r < 0)
        r += l;
    return row[r];
}

std::vector<std::size_t> ClassTable::frobenius_stable(long q) const
{
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < classes_.size(); ++c)
        if (power(c, q) == c)
            out.push_back(c);
    return out;
}

std::string ClassTable::label(std::size_t c) const
{
    std::ostringstream out;
    auto const& cls = classes_.at(c);
    if (cls.representative)
        out << "c" << c;
    if (cls.cycle_type) {
        out << "(";
        for (std::size_t i = 0; i < cls.cycle_type->parts.size(); ++i)
            out << (i ? "," : "") << cls.cycle_type->parts[i];
        out << ")";
    }
    return out.str();
}

}  // namespace wildmass
