#include "wildmass/padic/zq.hpp"

#include <algorithm>
#include <string>

#include "wildmass/errors.hpp"

namespace wildmass::padic {

bool is_prime(long p)
{
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

namespace {

/* remainder of a by monic b over F_p */
std::vector<long> poly_rem(std::vector<long> a, std::vector<long> const& b, long p)
{
    int db = static_cast<int>(b.size()) - 1;
    for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
        long t = a[k] % p;
        if (t == 0)
            continue;
        for (int i = 0; i <= db; ++i)
            a[k - db + i] = ((a[k - db + i] - t * b[i]) % p + p) % p;
    }
    a.resize(std::max(db, 0));
    while (!a.empty() && a.back() % p == 0)
        a.pop_back();
    return a;
}

std::vector<long> decode_monic(long code, int degree, long p)
{
    std::vector<long> poly(degree + 1, 0);
    for (int i = 0; i < degree; ++i) {
        poly[i] = code % p;
        code /= p;
    }
    poly[degree] = 1;
    return poly;
}

long ipow(long base, int k)
{
    long r = 1;
    for (int i = 0; i < k; ++i)
        r *= base;
    return r;
}

}  // namespace

bool is_irreducible_mod_p(std::vector<long> const& poly, long p)
{
    int n = static_cast<int>(poly.size()) - 1;
    if (n < 1 || poly.back() % p != 1)
        throw domain_error("irreducibility test expects a monic polynomial of positive degree");
    for (int d = 1; 2 * d <= n; ++d) {
        long count = ipow(p, d);
        for (long code = 0; code < count; ++code)
            if (poly_rem(poly, decode_monic(code, d, p), p).empty())
                return false;
    }
    return true;
}

std::vector<long> least_irreducible(long p, int f)
{
    if (!is_prime(p))
        throw domain_error("p must be prime");
    if (f < 1)
        throw domain_error("residue degree must be positive");
    long count = ipow(p, f);
    for (long code = 0; code < count; ++code) {
        auto poly = decode_monic(code, f, p);
        if (is_irreducible_mod_p(poly, p))
            return poly;
    }
    throw domain_error("no irreducible polynomial found");  // unreachable
}

UnramifiedRing::UnramifiedRing(long p, int f, int precision) : p_(p), f_(f), n_(precision)
{
    if (!is_prime(p))
        throw domain_error("p must be prime");
    if (f < 1 || f > max_residue_degree)
        throw domain_error("residue degree must lie in [1, " + std::to_string(max_residue_degree) + "]");
    if (precision < 1)
        throw domain_error("precision must be positive");
    constexpr std::int64_t limit = std::int64_t{1} << 62;
    for (int i = 0; i < precision; ++i) {
        if (modulus_ > limit / p)
            throw precision_exhausted("p^N exceeds the word size");
        modulus_ *= p;
    }
    q_ = ipow(p, f);
    defining_ = least_irreducible(p, f);

    // Frobenius lift of z: the root of the defining polynomial congruent to z^p
    Element z = pow(generator(), static_cast<std::uint64_t>(p));
    for (int iter = 0, prec = 1; prec < 2 * n_ + 2 && iter < 80; ++iter, prec *= 2) {
        Element fz = zero(), dfz = zero();
        for (int i = f_; i >= 0; --i) {
            fz = add(mul(fz, z), from_int(defining_[i]));
            if (i > 0)
                dfz = add(mul(dfz, z), from_int(defining_[i] * i));
        }
        z = sub(z, mul(fz, inverse(dfz)));
    }
    frob_z_ = z;
}

std::int64_t UnramifiedRing::reduce(__int128 x) const
{
    __int128 r = x % modulus_;
    if (r < 0)
        r += modulus_;
    return static_cast<std::int64_t>(r);
}

UnramifiedRing::Element UnramifiedRing::from_int(std::int64_t x) const
{
    Element e;
    e.c[0] = reduce(x);
    return e;
}

UnramifiedRing::Element UnramifiedRing::from_coords(std::span<std::int64_t const> coords) const
{
    if (static_cast<int>(coords.size()) > f_)
        throw domain_error("too many coordinates for the residue degree");
    Element e;
    for (std::size_t i = 0; i < coords.size(); ++i)
        e.c[i] = reduce(coords[i]);
    return e;
}

UnramifiedRing::Element UnramifiedRing::generator() const
{
    Element e;
    if (f_ == 1)
        e.c[0] = reduce(-defining_[0]);
    else
        e.c[1] = 1;
    return e;
}

UnramifiedRing::Element UnramifiedRing::add(Element const& a, Element const& b) const
{
    Element r;
    for (int i = 0; i < f_; ++i) {
        std::int64_t s = a.c[i] + b.c[i];
        r.c[i] = s >= modulus_ ? s - modulus_ : s;
    }
    return r;
}

UnramifiedRing::Element UnramifiedRing::sub(Element const& a, Element const& b) const
{
    Element r;
    for (int i = 0; i < f_; ++i) {
        std::int64_t s = a.c[i] - b.c[i];
        r.c[i] = s < 0 ? s + modulus_ : s;
    }
    return r;
}

UnramifiedRing::Element UnramifiedRing::neg(Element const& a) const
{
    return sub(zero(), a);
}

UnramifiedRing::Element UnramifiedRing::mul(Element const& a, Element const& b) const
{
    if (f_ == 1) {
        Element r;
        r.c[0] = reduce(static_cast<__int128>(a.c[0]) * b.c[0]);
        return r;
    }
    std::array<std::int64_t, 2 * max_residue_degree> t{};
    for (int i = 0; i < f_; ++i) {
        if (a.c[i] == 0)
            continue;
        for (int j = 0; j < f_; ++j)
            t[i + j] = reduce(t[i + j] + static_cast<__int128>(a.c[i]) * b.c[j]);
    }
    for (int k = 2 * f_ - 2; k >= f_; --k) {
        std::int64_t top = t[k];
        if (top == 0)
            continue;
        for (int i = 0; i < f_; ++i)
            t[k - f_ + i] = reduce(t[k - f_ + i] - static_cast<__int128>(top) * defining_[i]);
        t[k] = 0;
    }
    Element r;
    std::copy(t.begin(), t.begin() + f_, r.c.begin());
    return r;
}

UnramifiedRing::Element UnramifiedRing::scale(Element const& a, std::int64_t k) const
{
    Element r;
    std::int64_t kk = reduce(k);
    for (int i = 0; i < f_; ++i)
        r.c[i] = reduce(static_cast<__int128>(a.c[i]) * kk);
    return r;
}

UnramifiedRing::Element UnramifiedRing::pow(Element a, std::uint64_t k) const
{
    Element r = one();
    while (k) {
        if (k & 1)
            r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

bool UnramifiedRing::is_zero(Element const& a) const
{
    for (int i = 0; i < f_; ++i)
        if (a.c[i] != 0)
            return false;
    return true;
}

int UnramifiedRing::valuation(Element const& a) const
{
    int v = n_;
    for (int i = 0; i < f_; ++i) {
        std::int64_t x = a.c[i];
        if (x == 0)
            continue;
        int vi = 0;
        while (x % p_ == 0) {
            x /= p_;
            ++vi;
        }
        v = std::min(v, vi);
    }
    return v;
}

UnramifiedRing::Element UnramifiedRing::div_p_pow(Element const& a, int k) const
{
    std::int64_t d = 1;
    for (int i = 0; i < k; ++i)
        d *= p_;
    Element r;
    for (int i = 0; i < f_; ++i) {
        if (a.c[i] % d != 0)
            throw domain_error("element not divisible by p^k");
        r.c[i] = a.c[i] / d;
    }
    return r;
}

UnramifiedRing::Element UnramifiedRing::inverse(Element const& a) const
{
    // a^{q-2} inverts the residue; Newton lifts it
    Element x = residue(pow(a, static_cast<std::uint64_t>(q_ - 2)));
    if (residue(mul(a, x)) != one())
        throw domain_error("element is not a unit");
    for (int prec = 1; prec < n_; prec *= 2)
        x = mul(x, sub(from_int(2), mul(a, x)));
    return x;
}

UnramifiedRing::Element UnramifiedRing::residue(Element const& a) const
{
    Element r;
    for (int i = 0; i < f_; ++i)
        r.c[i] = a.c[i] % p_;
    return r;
}

UnramifiedRing::Element UnramifiedRing::residue_element(long index) const
{
    if (index < 0 || index >= q_)
        throw domain_error("residue index out of range");
    Element r;
    for (int i = 0; i < f_; ++i) {
        r.c[i] = index % p_;
        index /= p_;
    }
    return r;
}

UnramifiedRing::Element UnramifiedRing::frobenius(Element const& a) const
{
    if (f_ == 1)
        return a;
    Element r = zero();
    for (int i = f_ - 1; i >= 0; --i)
        r = add(mul(r, frob_z_), from_int(a.c[i]));
    return r;
}

std::optional<int> det_valuation(UnramifiedRing const& ring, std::vector<std::vector<UnramifiedRing::Element>> m)
{
    std::size_t n = m.size();
    int total = 0;
    for (std::size_t step = 0; step < n; ++step) {
        int best = ring.precision();
        std::size_t br = step, bc = step;
        for (std::size_t r = step; r < n; ++r)
            for (std::size_t c = step; c < n; ++c) {
                int v = ring.valuation(m[r][c]);
                if (v < best) {
                    best = v;
                    br = r;
                    bc = c;
                }
            }
        if (best >= ring.precision())
            return std::nullopt;
        std::swap(m[step], m[br]);
        for (auto& row : m)
            std::swap(row[step], row[bc]);
        total += best;
        auto const unit_inv = ring.inverse(ring.div_p_pow(m[step][step], best));
        for (std::size_t r = step + 1; r < n; ++r) {
            if (ring.is_zero(m[r][step]))
                continue;
            auto factor = ring.mul(ring.div_p_pow(m[r][step], best), unit_inv);
            for (std::size_t c = step; c < n; ++c)
                m[r][c] = ring.sub(m[r][c], ring.mul(factor, m[step][c]));
        }
    }
    if (total >= ring.precision())
        return std::nullopt;
    return total;
}

std::optional<int> poly_disc_valuation(UnramifiedRing const& ring, ZqPoly const& g)
{
    int n = static_cast<int>(g.size()) - 1;
    if (n < 1 || g.back() != ring.one())
        throw domain_error("poly_disc_valuation expects a monic polynomial of positive degree");
    if (n == 1)
        return 0;
    ZqPoly dg;
    for (int i = 1; i <= n; ++i)
        dg.push_back(ring.scale(g[i], i));
    // Sylvester matrix of g (degree n) and g' (degree n-1), size 2n-1
    int size = 2 * n - 1;
    std::vector<std::vector<UnramifiedRing::Element>> m(size, std::vector<UnramifiedRing::Element>(size));
    for (int r = 0; r < n - 1; ++r)
        for (int i = 0; i <= n; ++i)
            m[r][r + (n - i)] = g[i];
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= n - 1; ++i)
            m[n - 1 + r][r + (n - 1 - i)] = dg[i];
    return det_valuation(ring, std::move(m));
}

}  // namespace wildmass::padic
