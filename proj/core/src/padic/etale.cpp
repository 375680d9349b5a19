#include "wildmass/padic/etale.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "wildmass/errors.hpp"

namespace wildmass::padic {

namespace {

Rat rat_pow(long p, long k)
{
    Rat r = 1;
    Rat base = k >= 0 ? Rat(p) : Rat(1, p);
    r.canonicalize();
    base.canonicalize();
    for (long i = 0; i < (k >= 0 ? k : -k); ++i)
        r *= base;
    return r;
}

EnumerationOptions effective(EtaleOptions const& options)
{
    EnumerationOptions o = options.enumeration;
    if (options.slow)
        o.budget = std::max(o.budget, slow_budget);
    return o;
}

/* g^{sigma^s}, coefficients reduced mod p^precision */
BasePoly conjugate(EisensteinPoly const& g, int s, int precision)
{
    UnramifiedRing ring(g.p, g.f, precision);
    BasePoly out;
    for (auto const& c : g.as_base_poly()) {
        auto x = ring.from_coords(c);
        for (int i = 0; i < s; ++i)
            x = ring.frobenius(x);
        out.emplace_back(x.c.begin(), x.c.begin() + g.f);
    }
    return out;
}

std::vector<PadicField> fields_with_residue_degree(long p, int f, int e, EtaleOptions const& options)
{
    auto exts = enumerate_extensions_cached(p, f, e, effective(options), options.cache);
    std::vector<PadicField> out;
    if (e == 1 || f == 1) {
        for (auto const& x : exts)
            out.push_back({p, f, x, e == 1 ? f : x.aut_count, {}});
        return out;
    }

    // fields over Q_p are Frobenius orbits of the classes over the base
    int const precision = starting_precision(p, e) + 4;
    std::vector<bool> seen(exts.size(), false);
    for (std::size_t i = 0; i < exts.size(); ++i) {
        if (seen[i])
            continue;
        seen[i] = true;
        int aut = exts[i].aut_count;
        for (int s = 1; s < f; ++s) {
            BasePoly conj = conjugate(exts[i].defining, s, precision);
            aut += panayi_root_count(conj, exts[i]);
            for (std::size_t j = i + 1; j < exts.size(); ++j)
                if (!seen[j] && exts[j].d == exts[i].d &&
                    count_roots_adaptive(exts[j].defining, conj, starting_precision(p, e), true) > 0)
                    seen[j] = true;
        }
        out.push_back({p, f, exts[i], aut, {}});
    }
    return out;
}

ZqPoly poly_mul(UnramifiedRing const& r, ZqPoly const& a, ZqPoly const& b)
{
    ZqPoly out(a.size() + b.size() - 1, r.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = r.add(out[i + j], r.mul(a[i], b[j]));
    return out;
}

/* g(x - c) */
ZqPoly shift(UnramifiedRing const& r, ZqPoly const& g, UnramifiedRing::Element const& c)
{
    ZqPoly out{r.zero()};
    ZqPoly lin{r.neg(c), r.one()};
    for (std::size_t i = g.size(); i-- > 0;) {
        out = poly_mul(r, out, lin);
        out[0] = r.add(out[0], g[i]);
    }
    while (out.size() > 1 && r.is_zero(out.back()))
        out.pop_back();
    return out;
}

std::string algebra_label(std::vector<EtaleFactor> const& factors)
{
    std::string s;
    for (auto const& fac : factors) {
        if (!s.empty())
            s += "+";
        s += fac.field.label;
        if (fac.multiplicity > 1)
            s += "^" + std::to_string(fac.multiplicity);
    }
    return s;
}

}  // namespace

std::vector<PadicField> enumerate_fields(long p, int m, EtaleOptions const& options)
{
    if (!is_prime(p))
        throw domain_error("p must be prime");
    if (m < 1)
        throw domain_error("degree must be positive");
    std::vector<PadicField> out;
    for (int f = 1; f <= m; ++f) {
        if (m % f != 0)
            continue;
        if (f > max_residue_degree || m / f > max_ramification)
            throw budget_exceeded("degree " + std::to_string(m) + " is outside the supported range");
        auto part = fields_with_residue_degree(p, f, m / f, options);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end(), [](PadicField const& a, PadicField const& b) {
        return std::tuple(a.disc_exponent(), a.f, std::cref(a.ext.defining)) <
               std::tuple(b.disc_exponent(), b.f, std::cref(b.ext.defining));
    });
    std::map<int, int> per_c;
    for (auto& x : out)
        x.label = std::to_string(p) + "." + std::to_string(m) + "." + std::to_string(x.disc_exponent()) + "." +
                  std::to_string(++per_c[x.disc_exponent()]);
    return out;
}

std::vector<EtaleAlgebra> enumerate_etale_algebras(long p, int n, EtaleOptions const& options)
{
    if (n < 1)
        throw domain_error("degree must be positive");
    std::vector<PadicField> fields;
    for (int m = 1; m <= n; ++m) {
        auto part = enumerate_fields(p, m, options);
        fields.insert(fields.end(), part.begin(), part.end());
    }

    std::vector<EtaleAlgebra> out;
    std::vector<int> counts(fields.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int remaining) {
        if (remaining == 0) {
            EtaleAlgebra alg;
            alg.n = n;
            int sum_f = 0;
            for (std::size_t i = 0; i < fields.size(); ++i) {
                if (counts[i] == 0)
                    continue;
                auto const& fld = fields[i];
                int mult = counts[i];
                alg.factors.push_back({fld, mult});
                alg.a += mult * fld.disc_exponent();
                sum_f += mult * fld.f;
                for (int k = 0; k < mult * fld.f; ++k)
                    alg.partition.parts.push_back(fld.e());
                BigInt fact = 1;
                for (int k = 2; k <= mult; ++k)
                    fact *= k;
                BigInt aut_pow = 1;
                for (int k = 0; k < mult; ++k)
                    aut_pow *= fld.aut_count;
                alg.aut_count *= fact * aut_pow;
            }
            alg.t = n - sum_f;
            alg.w2sigma = 2 * alg.t - alg.a;
            std::sort(alg.partition.parts.begin(), alg.partition.parts.end(), std::greater<>());
            alg.label = algebra_label(alg.factors);
            out.push_back(std::move(alg));
            return;
        }
        for (std::size_t i = from; i < fields.size(); ++i) {
            if (fields[i].degree() > remaining)
                continue;
            ++counts[i];
            rec(i, remaining - fields[i].degree());
            --counts[i];
        }
    };
    rec(0, n);
    return out;
}

MassCheck bhargava_check(std::vector<EtaleAlgebra> const& algebras, long p, int n)
{
    MassCheck out;
    for (auto const& alg : algebras)
        out.lhs += rat_pow(p, -alg.a) / Rat(alg.aut_count);
    out.rhs = bhargava_rhs(n).eval_at(Rat(p));
    out.ok = out.lhs == out.rhs;
    return out;
}

MassCheck bhargava_check(long p, int n, EtaleOptions const& options)
{
    return bhargava_check(enumerate_etale_algebras(p, n, options), p, n);
}

MassCheck per_partition_mass(std::vector<EtaleAlgebra> const& algebras, long p, int n, Partition const& pt)
{
    validate_partition(pt, n);
    MassCheck out;
    for (auto const& alg : algebras)
        if (alg.partition == pt)
            out.lhs += rat_pow(p, -alg.a) / Rat(alg.aut_count);
    out.rhs = rat_pow(p, -(n - pt.length()));
    out.ok = out.lhs == out.rhs;
    return out;
}

MassCheck per_partition_mass(long p, int n, Partition const& pt, EtaleOptions const& options)
{
    validate_partition(pt, n);
    return per_partition_mass(enumerate_etale_algebras(p, n, options), p, n, pt);
}

MassCheck wild_hilb_mass(std::vector<EtaleAlgebra> const& algebras, long p, int n)
{
    MassCheck out;
    for (auto const& alg : algebras)
        out.lhs += rat_pow(p, alg.w2sigma) / Rat(alg.aut_count);
    out.rhs = hilbert_origin_count(n).eval_at(Rat(p));
    out.ok = out.lhs == out.rhs;
    return out;
}

MassCheck wild_hilb_mass(long p, int n, EtaleOptions const& options)
{
    return wild_hilb_mass(enumerate_etale_algebras(p, n, options), p, n);
}

int absolute_disc_valuation(PadicField const& field)
{
    auto const& g = field.ext.defining;
    int const f = field.f;
    for (int precision = max_disc_exponent(g.p, field.degree()) + 4;; precision *= 2) {
        UnramifiedRing ring(g.p, f, precision);
        ZqPoly g_ring = to_ring_poly(ring, g.as_base_poly());
        auto zeta = ring.generator();
        if (f == 1)
            zeta = ring.zero();
        ZqPoly h{ring.one()};
        for (int s = 0; s < f; ++s) {
            h = poly_mul(ring, h, shift(ring, g_ring, zeta));
            for (auto& c : g_ring)
                c = ring.frobenius(c);
            zeta = ring.frobenius(zeta);
        }
        UnramifiedRing zp(g.p, 1, precision);
        ZqPoly h_zp;
        for (auto const& c : h) {
            for (int i = 1; i < f; ++i)
                if (c.c[i] != 0)
                    throw error("minimal polynomial is not defined over Z_p");
            h_zp.push_back(zp.from_int(c.c[0]));
        }
        if (auto v = poly_disc_valuation(zp, h_zp))
            return *v;
    }
}

}  // namespace wildmass::padic
