#include "wildmass/padic/extensions.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <thread>

#include "wildmass/errors.hpp"

namespace wildmass::padic {

namespace {

int vp_int(long x, long p)
{
    int v = 0;
    while (x != 0 && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

std::int64_t ipow(long p, int k)
{
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) {
        if (r > (std::int64_t{1} << 62) / p)
            throw budget_exceeded("coefficient range exceeds the word size");
        r *= p;
    }
    return r;
}

/* A class representative with a lazily grown working ring. */
class FieldHandle {
  public:
    FieldHandle(EisensteinPoly poly, int start) : poly_(std::move(poly)), precision_(start) { rebuild(); }

    EisensteinPoly const& poly() const { return poly_; }
    int precision() const { return precision_; }

    int count(BasePoly const& h, bool stop_at_first)
    {
        for (;;) {
            try {
                return count_roots(*ring_, to_ring_poly(*base_, h), stop_at_first);
            } catch (precision_exhausted const&) {
                precision_ *= 2;
                rebuild();
            }
        }
    }

  private:
    void rebuild()
    {
        base_.emplace(poly_.p, poly_.f, precision_);
        ring_.emplace(*base_, poly_);
    }

    EisensteinPoly poly_;
    int precision_;
    std::optional<UnramifiedRing> base_;
    std::optional<RamifiedRing> ring_;
};

struct PartialClass {
    FieldHandle handle;
    int d;
};

void absorb(std::vector<PartialClass>& classes, EisensteinPoly const& cand, int d, int start)
{
    auto h = cand.as_base_poly();
    for (auto& cls : classes)
        if (cls.d == d && cls.handle.count(h, true) > 0)
            return;
    classes.push_back({FieldHandle(cand, start), d});
}

struct Inventory {
    std::vector<std::pair<int, int>> entries;  // (d, aut)
    friend bool operator==(Inventory const&, Inventory const&) = default;
};

std::vector<LocalFieldExt> enumerate_once(long p, int f, int e, EnumerationOptions const& options)
{
    int const start = starting_precision(p, e);
    if (e == 1) {
        LocalFieldExt ext;
        ext.p = p;
        ext.f = f;
        ext.e = 1;
        ext.d = 0;
        ext.aut_count = 1;
        ext.defining = EisensteinPoly{p, f, {std::vector<std::int64_t>(f, 0)}};
        ext.defining.coeffs[0][0] = p;
        ext.precision = start;
        ext.label = std::to_string(p) + "." + std::to_string(f) + ".1.0.1";
        return {ext};
    }

    std::vector<std::pair<EisensteinPoly, int>> candidates;
    std::uint64_t total = 0;
    for (int d = e - 1; d <= max_disc_exponent(p, e); ++d) {
        auto cands = eisenstein_candidates(p, f, e, d, options);
        total += cands.size();
        if (total > options.budget)
            throw budget_exceeded("more than " + std::to_string(options.budget) + " candidates");
        for (auto& c : cands)
            candidates.emplace_back(std::move(c), d);
    }
    std::sort(candidates.begin(), candidates.end());

    // contiguous chunks split at changes of a_0
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::size_t> cuts{0};
    if (threads > 1) {
        std::size_t step = (candidates.size() + threads - 1) / threads;
        for (std::size_t i = step; i < candidates.size(); i += step) {
            std::size_t j = i;
            while (j < candidates.size() && candidates[j].first.coeffs[0] == candidates[j - 1].first.coeffs[0])
                ++j;
            if (j < candidates.size() && j > cuts.back())
                cuts.push_back(j);
        }
    }
    cuts.push_back(candidates.size());

    auto work = [&](std::size_t lo, std::size_t hi) {
        std::vector<PartialClass> local;
        for (std::size_t i = lo; i < hi; ++i)
            absorb(local, candidates[i].first, candidates[i].second, start);
        return local;
    };
    std::vector<std::vector<PartialClass>> partial;
    if (cuts.size() <= 2) {
        partial.push_back(work(cuts[0], cuts[1]));
    } else {
        std::vector<std::future<std::vector<PartialClass>>> jobs;
        for (std::size_t c = 0; c + 1 < cuts.size(); ++c)
            jobs.push_back(std::async(std::launch::async, work, cuts[c], cuts[c + 1]));
        for (auto& j : jobs)
            partial.push_back(j.get());
    }

    // single-threaded merge, chunk order preserves minimal representatives
    std::vector<PartialClass> classes;
    for (auto& chunk : partial)
        for (auto& cls : chunk)
            absorb(classes, cls.handle.poly(), cls.d, start);

    std::vector<LocalFieldExt> out;
    std::map<int, int> per_d;
    for (auto& cls : classes) {
        LocalFieldExt ext;
        ext.p = p;
        ext.f = f;
        ext.e = e;
        ext.defining = cls.handle.poly();
        ext.d = disc_exponent_by_resultant(ext.defining);
        if (ext.d != cls.d)
            throw error("discriminant exponent mismatch between resultant and valuation formula");
        ext.aut_count = cls.handle.count(ext.defining.as_base_poly(), false);
        ext.precision = options.uniform_precision ? start : krasner_digits(cls.d, e, 0) + options.extra_digits;
        out.push_back(std::move(ext));
    }
    std::sort(out.begin(), out.end(), [](LocalFieldExt const& a, LocalFieldExt const& b) {
        return std::tie(a.d, a.defining) < std::tie(b.d, b.defining);
    });
    for (auto& ext : out)
        ext.label = std::to_string(p) + "." + std::to_string(f) + "." + std::to_string(e) + "." +
                    std::to_string(ext.d) + "." + std::to_string(++per_d[ext.d]);
    return out;
}

Inventory inventory_of(std::vector<LocalFieldExt> const& exts)
{
    Inventory inv;
    for (auto const& x : exts)
        inv.entries.emplace_back(x.d, x.aut_count);
    std::sort(inv.entries.begin(), inv.entries.end());
    return inv;
}

}  // namespace

long LocalFieldExt::q() const
{
    long q = 1;
    for (int i = 0; i < f; ++i)
        q *= p;
    return q;
}

int max_disc_exponent(long p, int e)
{
    return e - 1 + e * vp_int(e, p);
}

int starting_precision(long p, int e)
{
    int dmax = max_disc_exponent(p, e);
    return (2 * dmax + e - 1) / e + 2;
}

int krasner_digits(int d, int e, int i)
{
    return (2 * d - i) / e + 1;
}

std::vector<EisensteinPoly> eisenstein_candidates(long p, int f, int e, int d, EnumerationOptions const& options)
{
    if (!is_prime(p))
        throw domain_error("p must be prime");
    if (e < 2 || e > max_ramification)
        throw domain_error("candidate enumeration needs 2 <= e <= " + std::to_string(max_ramification));
    if (f < 1 || f > max_residue_degree)
        throw domain_error("residue degree out of range");

    // coordinate j of a_i is p * x with x in [0, p^{k_i - 1})
    std::vector<std::int64_t> radix;
    std::uint64_t count = 1;
    for (int i = 0; i < e; ++i) {
        int k = options.uniform_precision ? starting_precision(p, e) : krasner_digits(d, e, i);
        k += options.extra_digits;
        std::int64_t r = ipow(p, k - 1);
        for (int j = 0; j < f; ++j) {
            radix.push_back(r);
            if (count > options.budget / static_cast<std::uint64_t>(r) + 1)
                throw budget_exceeded("candidate count exceeds the budget");
            count *= static_cast<std::uint64_t>(r);
        }
    }
    if (count > options.budget)
        throw budget_exceeded("candidate count exceeds the budget");

    std::vector<EisensteinPoly> out;
    std::vector<std::int64_t> digits(radix.size(), 0);
    EisensteinPoly g{p, f, std::vector<std::vector<std::int64_t>>(e, std::vector<std::int64_t>(f, 0))};
    for (std::uint64_t n = 0; n < count; ++n) {
        bool unit = false;
        for (int j = 0; j < f; ++j)
            unit = unit || digits[j] % p != 0;
        if (unit) {
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < f; ++j)
                    g.coeffs[i][j] = p * digits[i * f + j];
            if (ore_disc_exponent(g) == d)
                out.push_back(g);
        }
        for (std::size_t pos = radix.size(); pos-- > 0;) {
            if (++digits[pos] < radix[pos])
                break;
            digits[pos] = 0;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LocalFieldExt> enumerate_extensions(long p, int f, int e, EnumerationOptions const& options)
{
    if (e < 1)
        throw domain_error("degree must be positive");
    auto result = enumerate_once(p, f, e, options);
    if (options.verify_stability && e > 1) {
        EnumerationOptions finer = options;
        finer.extra_digits += 1;
        finer.verify_stability = false;
        if (inventory_of(enumerate_once(p, f, e, finer)) != inventory_of(result))
            throw precision_exhausted("extension inventory did not stabilize");
    }
    return result;
}

std::vector<LocalFieldExt> enumerate_extensions(UnramifiedRing const& base, int e, EnumerationOptions const& options)
{
    return enumerate_extensions(base.p(), base.f(), e, options);
}

int panayi_root_count(BasePoly const& g, LocalFieldExt const& field)
{
    return count_roots_adaptive(field.defining, g, std::max(field.precision, starting_precision(field.p, field.e)));
}

bool isomorphic(LocalFieldExt const& a, LocalFieldExt const& b)
{
    if (a.p != b.p || a.f != b.f || a.e != b.e || a.d != b.d)
        return false;
    return count_roots_adaptive(a.defining, b.defining.as_base_poly(), starting_precision(a.p, a.e), true) > 0;
}

int disc_exponent_by_resultant(EisensteinPoly const& g)
{
    for (int n = max_disc_exponent(g.p, g.degree()) + 2;; n *= 2) {
        UnramifiedRing ring(g.p, g.f, n);
        if (auto v = poly_disc_valuation(ring, to_ring_poly(ring, g.as_base_poly())))
            return *v;
    }
}

IdentityCheck serre_mass_check(std::vector<LocalFieldExt> const& extensions, long p, int f, int e)
{
    long q = 1;
    for (int i = 0; i < f; ++i)
        q *= p;
    IdentityCheck out;
    for (auto const& x : extensions) {
        if (x.p != p || x.f != f || x.e != e)
            throw domain_error("extension list does not match the base and degree");
        MassPoly term = MassPoly::monomial(Rat(1, x.aut_count), Rat(-x.d));
        out.lhs += term.eval_at(Rat(q));
    }
    out.rhs = MassPoly::monomial(1, Rat(1 - e)).eval_at(Rat(q));
    out.ok = out.lhs == out.rhs;
    return out;
}

}  // namespace wildmass::padic
