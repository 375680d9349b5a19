#include "wildmass/reps.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "wildmass/errors.hpp"

namespace wildmass {

namespace {

std::vector<Rat> cycle_exponents(Partition const& cycle_type)
{
    std::vector<Rat> out;
    for (int c : cycle_type.parts)
        for (int k = 0; k < c; ++k) {
            Rat x(k, c);
            x.canonicalize();
            out.push_back(x);
        }
    return out;
}

long as_long(BigInt const& x, char const* what)
{
    if (!x.fits_slong_p())
        throw domain_error(std::string(what) + " too large");
    return x.get_si();
}

/* Values of a function on group elements propagated along the Cayley
 * graph from the identity: value(s * x) = combine(image(s), value(x)).
 * Every edge is checked, so a consistent result is a homomorphism. */
template <typename T, typename Combine>
std::vector<T> propagate(FiniteGroup const& g, std::vector<T> const& generator_values, T identity_value,
                         Combine combine)
{
    std::vector<std::optional<T>> value(g.order());
    value[0] = identity_value;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t s = 0; s < g.generator_indices().size(); ++s) {
            std::size_t y = g.multiply(g.generator_indices()[s], x);
            T v = combine(generator_values[s], *value[x]);
            if (!value[y]) {
                value[y] = std::move(v);
                queue.push_back(y);
            } else if (!(*value[y] == v)) {
                throw not_a_homomorphism("generator images do not define a homomorphism");
            }
        }
    }
    std::vector<T> out;
    out.reserve(value.size());
    for (auto& v : value)
        out.push_back(std::move(*v));
    return out;
}

}  // namespace

GroupModel GroupModel::from_group(FiniteGroup g)
{
    GroupModel m;
    auto group = std::make_shared<FiniteGroup const>(std::move(g));
    m.table = std::make_shared<ClassTable const>(ClassTable::from_group(*group));
    m.group = std::move(group);
    return m;
}

GroupModel GroupModel::symmetric(int n)
{
    BigInt nfact;
    mpz_fac_ui(nfact.get_mpz_t(), static_cast<unsigned long>(std::max(n, 1)));
    if (nfact <= static_cast<unsigned long>(FiniteGroup::default_max_order))
        return from_group(FiniteGroup::symmetric(n));
    GroupModel m;
    m.table = std::make_shared<ClassTable const>(ClassTable::symmetric(n));
    return m;
}

FiniteGroup const& GroupModel::elements() const
{
    if (!group)
        throw domain_error("this operation needs an explicit group");
    return *group;
}

TameRep::TameRep(GroupModel model, int dimension, std::vector<std::vector<Rat>> exponents)
    : model_(std::move(model)), dimension_(dimension), exponents_(std::move(exponents))
{
    if (!model_.table)
        throw domain_error("representation without a group");
    auto const& table = *model_.table;
    if (dimension_ < 0)
        throw domain_error("negative dimension");
    if (exponents_.size() != table.size())
        throw domain_error("need eigenvalue data for every conjugacy class");
    for (std::size_t c = 0; c < table.size(); ++c) {
        auto& xs = exponents_[c];
        if (static_cast<int>(xs.size()) != dimension_)
            throw domain_error("class " + table.label(c) + " has the wrong number of eigenvalues");
        for (auto& x : xs) {
            x.canonicalize();
            if (x < 0 || x >= 1)
                throw domain_error("eigenvalue exponents must lie in [0,1)");
            if (table[c].element_order % as_long(x.get_den(), "denominator") != 0)
                throw domain_error("eigenvalue order does not divide the element order");
        }
        std::sort(xs.begin(), xs.end());
    }
    for (auto const& x : exponents_[table.identity_class()])
        if (x != 0)
            throw domain_error("identity must act trivially");
    // Galois stability: g^k conjugate to g forces the multiset to be stable
    // under multiplication by k.
    for (std::size_t c = 0; c < table.size(); ++c) {
        int l = table[c].element_order;
        for (int k = 2; k < l; ++k) {
            if (std::gcd(k, l) != 1 || table.power(c, k) != c)
                continue;
            std::vector<Rat> scaled;
            for (auto const& x : exponents_[c])
                scaled.push_back(frac_part(x * k));
            std::sort(scaled.begin(), scaled.end());
            if (scaled != exponents_[c])
                throw domain_error("eigenvalue data of class " + table.label(c) +
                                   " is not stable under its power map");
        }
    }
}

TameRep permutation_rep(GroupModel const& model, std::vector<Permutation> const& generator_images)
{
    auto const& g = model.elements();
    if (generator_images.size() != g.generators().size())
        throw domain_error("need one image per generator");
    int degree = generator_images.empty() ? 0 : generator_images.front().degree();
    for (auto const& p : generator_images)
        if (p.degree() != degree)
            throw domain_error("generator images act on different sets");
    auto images = propagate<Permutation>(g, generator_images, Permutation::identity(degree),
                                         [](Permutation const& s, Permutation const& x) { return s * x; });
    auto const& table = *model.table;
    std::vector<std::vector<Rat>> exps;
    for (std::size_t c = 0; c < table.size(); ++c)
        exps.push_back(cycle_exponents(images[*table[c].representative].cycle_type()));
    return TameRep(model, degree, std::move(exps));
}

TameRep defining_rep(GroupModel const& model)
{
    auto const& table = *model.table;
    if (table.permutation_degree() == 0)
        throw domain_error("group has no natural permutation action");
    std::vector<std::vector<Rat>> exps;
    for (std::size_t c = 0; c < table.size(); ++c)
        exps.push_back(cycle_exponents(*table[c].cycle_type));
    return TameRep(model, table.permutation_degree(), std::move(exps));
}

TameRep regular_rep(GroupModel const& model)
{
    auto const& table = *model.table;
    long order = as_long(table.group_order(), "group order");
    std::vector<std::vector<Rat>> exps;
    for (std::size_t c = 0; c < table.size(); ++c) {
        int l = table[c].element_order;
        std::vector<Rat> xs;
        for (long copy = 0; copy < order / l; ++copy)
            for (int k = 0; k < l; ++k) {
                Rat x(k, l);
                x.canonicalize();
                xs.push_back(x);
            }
        exps.push_back(std::move(xs));
    }
    return TameRep(model, static_cast<int>(order), std::move(exps));
}

TameRep trivial_rep(GroupModel const& model, int dimension)
{
    std::vector<std::vector<Rat>> exps(model.table->size(), std::vector<Rat>(dimension, Rat(0)));
    return TameRep(model, dimension, std::move(exps));
}

TameRep diagonal_rep(GroupModel const& model, std::vector<std::vector<Rat>> const& characters)
{
    auto const& g = model.elements();
    auto const& table = *model.table;
    std::vector<std::vector<Rat>> exps(table.size());
    for (auto const& chi : characters) {
        if (chi.size() != g.generators().size())
            throw domain_error("a character needs one value per generator");
        std::vector<Rat> gen_values;
        for (auto const& v : chi)
            gen_values.push_back(frac_part(v));
        auto values = propagate<Rat>(g, gen_values, Rat(0),
                                     [](Rat const& s, Rat const& x) { return frac_part(s + x); });
        for (std::size_t c = 0; c < table.size(); ++c)
            exps[c].push_back(values[*table[c].representative]);
    }
    return TameRep(model, static_cast<int>(characters.size()), std::move(exps));
}

TameRep sign_rep(GroupModel const& model)
{
    auto const& table = *model.table;
    std::vector<std::vector<Rat>> exps;
    for (std::size_t c = 0; c < table.size(); ++c) {
        if (!table[c].cycle_type)
            throw domain_error("sign character needs a permutation group");
        int odd = 0;
        for (int len : table[c].cycle_type->parts)
            odd += len - 1;
        exps.push_back({odd % 2 ? Rat(1, 2) : Rat(0)});
    }
    return TameRep(model, 1, std::move(exps));
}

TameRep direct_sum(TameRep const& a, TameRep const& b)
{
    if (a.model().table != b.model().table)
        throw group_mismatch("direct_sum of representations of different groups");
    std::vector<std::vector<Rat>> exps;
    for (std::size_t c = 0; c < a.table().size(); ++c) {
        auto xs = a.exponents(c);
        xs.insert(xs.end(), b.exponents(c).begin(), b.exponents(c).end());
        exps.push_back(std::move(xs));
    }
    return TameRep(a.model(), a.dimension() + b.dimension(), std::move(exps));
}

TameRep dual(TameRep const& a)
{
    std::vector<std::vector<Rat>> exps;
    for (std::size_t c = 0; c < a.table().size(); ++c) {
        std::vector<Rat> xs;
        for (auto const& x : a.exponents(c))
            xs.push_back(frac_part(-x));
        exps.push_back(std::move(xs));
    }
    return TameRep(a.model(), a.dimension(), std::move(exps));
}

TameRep restrict_rep(TameRep const& rep, GroupModel const& sub)
{
    auto const& big = rep.model().elements();
    auto const& small = sub.elements();
    if (small.degree() != big.degree())
        throw group_mismatch("subgroup acts on a different set");
    std::vector<std::vector<Rat>> exps;
    for (auto const& cls : sub.table->classes()) {
        auto idx = big.find(small.element(*cls.representative));
        if (!idx)
            throw group_mismatch("not a subgroup");
        exps.push_back(rep.exponents(big.class_of(*idx)));
    }
    return TameRep(sub, rep.dimension(), std::move(exps));
}

Rat age_weight(TameRep const& rep, std::size_t c)
{
    long l = rep.table()[c].element_order;
    BigInt sum_b = 0;
    for (auto const& x : rep.exponents(c)) {
        Rat scaled = x * l;
        BigInt a = scaled.get_num();  // integral: denominators divide l
        sum_b += (a == 0) ? BigInt(l) : a;
    }
    Rat w = Rat(rep.dimension()) - Rat(sum_b, BigInt(l));
    w.canonicalize();
    return w;
}

Rat v_tame(TameRep const& rep, std::size_t c)
{
    long l = rep.table()[c].element_order;
    BigInt sum_a = 0;
    for (auto const& x : rep.exponents(c)) {
        Rat scaled = x * l;
        sum_a += scaled.get_num();
    }
    Rat v(sum_a, BigInt(l));
    v.canonicalize();
    return v;
}

int artin_tame(TameRep const& rep, std::size_t c)
{
    auto const& xs = rep.exponents(c);
    return static_cast<int>(std::count_if(xs.begin(), xs.end(), [](Rat const& x) { return x != 0; }));
}

bool is_balanced(TameRep const& rep)
{
    for (std::size_t c = 0; c < rep.table().size(); ++c) {
        std::vector<Rat> neg;
        for (auto const& x : rep.exponents(c))
            neg.push_back(frac_part(-x));
        std::sort(neg.begin(), neg.end());
        if (neg != rep.exponents(c))
            return false;
    }
    return true;
}

bool has_pseudo_reflection(TameRep const& rep)
{
    for (std::size_t c = 0; c < rep.table().size(); ++c) {
        if (c == rep.table().identity_class())
            continue;
        int fixed = rep.dimension() - artin_tame(rep, c);
        // exactly a hyperplane: an element acting trivially is not a reflection
        if (fixed == rep.dimension() - 1)
            return true;
    }
    return false;
}

ExactMatrix::ExactMatrix(int n, long characteristic)
    : n_(n), characteristic_(characteristic), entries_(static_cast<std::size_t>(n) * n, Rat(0))
{
    if (n < 0)
        throw domain_error("negative matrix size");
    if (characteristic < 0)
        throw domain_error("negative characteristic");
    if (characteristic > 0 && mpz_probab_prime_p(BigInt(characteristic).get_mpz_t(), 30) == 0)
        throw domain_error("characteristic must be 0 or a prime");
}

ExactMatrix ExactMatrix::identity(int n, long characteristic)
{
    ExactMatrix m(n, characteristic);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

ExactMatrix ExactMatrix::jordan_block(int n, Rat const& eigenvalue, long characteristic)
{
    ExactMatrix m(n, characteristic);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, eigenvalue);
        if (i + 1 < n)
            m.set(i, i + 1, 1);
    }
    return m;
}

ExactMatrix ExactMatrix::diagonal(std::vector<Rat> const& entries, long characteristic)
{
    ExactMatrix m(static_cast<int>(entries.size()), characteristic);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.set(static_cast<int>(i), static_cast<int>(i), entries[i]);
    return m;
}

void ExactMatrix::set(int i, int j, Rat value)
{
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw domain_error("matrix index out of range");
    if (characteristic_ > 0) {
        BigInt p = characteristic_;
        BigInt num = value.get_num(), den = value.get_den(), inv, r;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw domain_error("denominator not invertible mod p");
        mpz_mul(r.get_mpz_t(), num.get_mpz_t(), inv.get_mpz_t());
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        value = Rat(r);
    }
    entries_[static_cast<std::size_t>(i) * n_ + j] = std::move(value);
}

ExactMatrix ExactMatrix::operator-(ExactMatrix const& rhs) const
{
    if (rhs.n_ != n_ || rhs.characteristic_ != characteristic_)
        throw domain_error("matrix shapes differ");
    ExactMatrix out(n_, characteristic_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out.set(i, j, at(i, j) - rhs.at(i, j));
    return out;
}

ExactMatrix ExactMatrix::operator*(ExactMatrix const& rhs) const
{
    if (rhs.n_ != n_ || rhs.characteristic_ != characteristic_)
        throw domain_error("matrix shapes differ");
    ExactMatrix out(n_, characteristic_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Rat s = 0;
            for (int k = 0; k < n_; ++k)
                s += at(i, k) * rhs.at(k, j);
            out.set(i, j, s);
        }
    return out;
}

int ExactMatrix::rank() const
{
    std::vector<Rat> a = entries_;
    BigInt p = characteristic_;
    auto reduce = [&](Rat x) {
        if (characteristic_ == 0)
            return x;
        BigInt r = x.get_num();
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        return Rat(r);
    };
    auto inverse = [&](Rat const& x) -> Rat {
        if (characteristic_ == 0)
            return Rat(1) / x;
        BigInt inv, num = x.get_num();
        mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        return Rat(inv);
    };
    int rank = 0;
    for (int col = 0; col < n_ && rank < n_; ++col) {
        int pivot = -1;
        for (int r = rank; r < n_; ++r)
            if (a[r * n_ + col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        for (int j = 0; j < n_; ++j)
            std::swap(a[pivot * n_ + j], a[rank * n_ + j]);
        Rat inv = inverse(a[rank * n_ + col]);
        for (int r = rank + 1; r < n_; ++r) {
            Rat factor = reduce(a[r * n_ + col] * inv);
            if (factor == 0)
                continue;
            for (int j = col; j < n_; ++j)
                a[r * n_ + j] = reduce(a[r * n_ + j] - factor * a[rank * n_ + j]);
        }
        ++rank;
    }
    return rank;
}

int fixed_space_codim(ExactMatrix const& m)
{
    return (m - ExactMatrix::identity(m.size(), m.characteristic())).rank();
}

RamFiltration::RamFiltration(int dimension, std::vector<RamStep> steps)
    : dimension_(dimension), steps_(std::move(steps))
{
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        auto const& s = steps_[i];
        if (i == 0 && s.ram_index != 1)
            throw domain_error("(G_0 : G_0) must be 1");
        if (s.ram_index < 1 || (i > 0 && s.ram_index < steps_[i - 1].ram_index))
            throw domain_error("ramification indices must be positive and nondecreasing");
        if (s.codim < 0 || s.codim > dimension_)
            throw domain_error("codimension out of range");
        if (i > 0 && s.codim > steps_[i - 1].codim)
            throw domain_error("codimensions must be nonincreasing");
    }
}

Conductors conductors_from_filtration(RamFiltration const& f)
{
    Conductors out;
    for (std::size_t i = 0; i < f.steps().size(); ++i) {
        Rat term(f.steps()[i].codim, f.steps()[i].ram_index);
        term.canonicalize();
        out.artin += term;
        if (i > 0)
            out.swan += term;
    }
    out.tame = f.steps().empty() ? 0 : f.steps().front().codim;
    return out;
}

JordanBlockInvariants wild_cyclic_jordan(int n, int p, int j)
{
    if (p < 2 || mpz_probab_prime_p(BigInt(p).get_mpz_t(), 30) == 0)
        throw domain_error("p must be prime");
    if (n < 2 || n > p)
        throw domain_error("need 2 <= n <= p");
    if (j < 1)
        throw domain_error("need j >= 1");

    // G_0 = ... = G_j = Z/p, trivial afterwards; the generator acts by J.
    int codim = fixed_space_codim(ExactMatrix::jordan_block(n, 1, p));
    RamFiltration filt(n, std::vector<RamStep>(static_cast<std::size_t>(j) + 1, RamStep{1, codim}));
    Conductors cond = conductors_from_filtration(filt);

    JordanBlockInvariants out;
    out.artin = static_cast<int>(cond.artin.get_num().get_si());
    out.tame = cond.tame;
    for (int a = 1; a < n; ++a)
        out.weight -= (j * a) / p;
    if (n == 2)
        out.doubled = std::pair{2 * out.tame - out.artin, -2 * (j / p)};
    return out;
}

}  // namespace wildmass
