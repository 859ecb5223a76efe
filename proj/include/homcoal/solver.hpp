#ifndef HOMCOAL_SOLVER_HPP
#define HOMCOAL_SOLVER_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <homcoal/constructions.hpp>
#include <homcoal/structures.hpp>

namespace homcoal {

// ---------------------------------------------------------------------------
// (Co)derivation spaces as kernels
// ---------------------------------------------------------------------------

// Basis of a linear operator space inside the n x n matrices; every element
// satisfies the defining identity exactly and the elements are independent
// (they come out of one reduced echelon kernel).
struct OperatorSpaceBasis {
    int n = 0;
    std::string identity_tag;
    std::vector<LinMap> basis;

    std::size_t dimension() const { return basis.size(); }
};

namespace detail {

// Unknown matrices are vectorized entry (r, c) -> r*n + c; operator outputs
// are flattened the same way. Kernel vectors reshape back to matrices.
inline OperatorSpaceBasis kernel_of_matrix_operator(
    int n, const std::string& tag,
    const std::function<LinMap(const LinMap&)>& op_of_elementary) {
    const TensorSpace Ln = TensorSpace::line(n);
    std::vector<std::vector<Rational>> columns;
    long long out_dim = -1;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            LinMap e = LinMap::zero(Ln, Ln);
            e.set_entry(r, c, Rational(1));
            const LinMap image = op_of_elementary(e);
            if (out_dim < 0) out_dim = image.codomain().dim() * image.domain().dim();
            std::vector<Rational> col(static_cast<std::size_t>(out_dim), Rational(0));
            for (long long j = 0; j < image.domain().dim(); ++j)
                for (const auto& [row, x] : image.column(j))
                    col[static_cast<std::size_t>(row * image.domain().dim() + j)] = x;
            columns.push_back(std::move(col));
        }
    const LinMap op = LinMap::from_columns(TensorSpace::line(n * n),
                                           TensorSpace::line(static_cast<int>(out_dim)),
                                           columns);
    OperatorSpaceBasis out{n, tag, {}};
    for (const auto& v : kernel_basis(op)) {
        LinMap m = LinMap::zero(Ln, Ln);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (v[static_cast<std::size_t>(r * n + c)] != 0)
                    m.set_entry(r, c, v[static_cast<std::size_t>(r * n + c)]);
        out.basis.push_back(std::move(m));
    }
    return out;
}

} // namespace detail

// Kernel of phi |-> delta.phi - (phi (x) alpha).delta - (alpha (x) phi).delta.
inline OperatorSpaceBasis coderivation_basis(const HomCoalgebra& c) {
    return detail::kernel_of_matrix_operator(c.n, "coderivation", [&](const LinMap& e) {
        return c.delta * e - tensor(e, c.alpha) * c.delta - tensor(c.alpha, e) * c.delta;
    });
}

// Kernel of phi |-> phi.mu - mu.(phi (x) alpha) - mu.(alpha (x) phi).
inline OperatorSpaceBasis derivation_basis(const HomAlgebra& a) {
    return detail::kernel_of_matrix_operator(a.n, "derivation", [&](const LinMap& e) {
        return e * a.mu - a.mu * tensor(e, a.alpha) - a.mu * tensor(a.alpha, e);
    });
}

// Coderivations that also commute with the twist: the joint kernel of the
// coderivation operator and phi |-> phi.alpha - alpha.phi. The adjoint
// comodule construction needs exactly this subspace (all of CoDer when
// alpha = id).
inline OperatorSpaceBasis coderivation_basis_commuting(const HomCoalgebra& c) {
    const int n = c.n;
    const TensorSpace Ln = TensorSpace::line(n);
    std::vector<std::vector<Rational>> columns;
    for (int r = 0; r < n; ++r)
        for (int col = 0; col < n; ++col) {
            LinMap e = LinMap::zero(Ln, Ln);
            e.set_entry(r, col, Rational(1));
            const LinMap coder =
                c.delta * e - tensor(e, c.alpha) * c.delta - tensor(c.alpha, e) * c.delta;
            const LinMap comm = e * c.alpha - c.alpha * e;
            std::vector<Rational> flat(static_cast<std::size_t>(n * n * n + n * n),
                                       Rational(0));
            for (long long j = 0; j < n; ++j)
                for (const auto& [row, x] : coder.column(j))
                    flat[static_cast<std::size_t>(row * n + j)] = x;
            for (long long j = 0; j < n; ++j)
                for (const auto& [row, x] : comm.column(j))
                    flat[static_cast<std::size_t>(n * n * n + row * n + j)] = x;
            columns.push_back(std::move(flat));
        }
    const LinMap op = LinMap::from_columns(TensorSpace::line(n * n),
                                           TensorSpace::line(n * n * n + n * n), columns);
    OperatorSpaceBasis out{n, "coderivation_commuting", {}};
    for (const auto& v : kernel_basis(op)) {
        LinMap m = LinMap::zero(Ln, Ln);
        for (int r = 0; r < n; ++r)
            for (int col = 0; col < n; ++col)
                if (v[static_cast<std::size_t>(r * n + col)] != 0)
                    m.set_entry(r, col, v[static_cast<std::size_t>(r * n + col)]);
        out.basis.push_back(std::move(m));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force operator search at toy dimension
// ---------------------------------------------------------------------------

enum class OperatorKind { rota_baxter, endo };

inline constexpr std::size_t kSearchGuard = 10'000'000;

// All n x n matrices over the grid satisfying the defining identity plus the
// alpha-commutation, in lexicographic order of the entry vector (row-major).
// The identities are quadratic in the unknown, so enumeration is the honest
// mechanism; the guard caps the candidate count before any work happens.
inline std::vector<LinMap> search_operators(const HomCoalgebra& c, OperatorKind kind,
                                            const Rational& lambda,
                                            std::vector<Rational> grid,
                                            std::size_t guard = kSearchGuard) {
    if (grid.empty()) throw argument_error("search_operators: empty grid");
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    const int cells = c.n * c.n;
    double estimate = 1;
    for (int i = 0; i < cells; ++i) estimate *= static_cast<double>(grid.size());
    if (estimate > static_cast<double>(guard)) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.0f", estimate);
        throw argument_error("search_operators: " + std::string(buf) +
                             " candidates exceed the guard of " + std::to_string(guard));
    }
    const TensorSpace Ln = TensorSpace::line(c.n);
    std::vector<std::size_t> odo(static_cast<std::size_t>(cells), 0);
    std::vector<LinMap> found;
    while (true) {
        LinMap t = LinMap::zero(Ln, Ln);
        for (int i = 0; i < cells; ++i)
            t.set_entry(i / c.n, i % c.n, grid[odo[static_cast<std::size_t>(i)]]);
        const bool ok = kind == OperatorKind::rota_baxter
                            ? check_rota_baxter(c, RotaBaxterData{t, lambda}).passed
                            : check_endo_op(c, EndoOp{t, false, false}).passed;
        if (ok) found.push_back(std::move(t));
        int i = cells - 1;
        for (; i >= 0; --i) {
            if (++odo[static_cast<std::size_t>(i)] < grid.size()) break;
            odo[static_cast<std::size_t>(i)] = 0;
        }
        if (i < 0) break;
    }
    return found;
}

// ---------------------------------------------------------------------------
// Deterministic generation of valid instances
// ---------------------------------------------------------------------------

enum class Strategy { zero, classical_dual, twist, sum_closure, semidirect_closure };

inline std::string strategy_name(Strategy s) {
    switch (s) {
    case Strategy::zero: return "zero";
    case Strategy::classical_dual: return "classical_dual";
    case Strategy::twist: return "twist";
    case Strategy::sum_closure: return "sum_closure";
    case Strategy::semidirect_closure: return "semidirect_closure";
    }
    return "?";
}

// Every emitted bundle passes its flavor's full checker suite before being
// returned; a strategy that cannot produce the requested dimension or flavor
// fails loudly instead.
struct GenerationRecipe {
    Strategy strategy = Strategy::classical_dual;
    std::uint64_t seed = 0;
    int dim = 2;
    BundleFlavor flavor = BundleFlavor::lie;
};

namespace gen_detail {

using Rng = std::mt19937_64;

// gen() % k is portable across standard libraries, unlike the distributions.
inline std::size_t pick(Rng& rng, std::size_t k) { return static_cast<std::size_t>(rng() % k); }

inline Rational small_rational(Rng& rng, bool nonzero = false) {
    static const int nums[] = {-3, -2, -1, 0, 1, 1, 2, 3};
    static const int dens[] = {1, 1, 1, 2, 3};
    Rational x;
    do {
        x = Rational(nums[pick(rng, 8)], dens[pick(rng, 5)]);
    } while (nonzero && x == 0);
    return x;
}

// Dual of the unique non-abelian 2-dim Lie algebra [e0,e1] = e1.
inline HomCoalgebra l2_dual() {
    const TensorSpace L = TensorSpace::line(2);
    LinMap delta = LinMap::zero(L, L.tensor(L));
    delta.set_entry(1, 1, Rational(1));
    delta.set_entry(2, 1, Rational(-1));
    return HomCoalgebra{2, delta, LinMap::identity(L), CoalgebraFlavor::lie};
}

// Dual of the 3-dim Heisenberg algebra [e0,e1] = e2.
inline HomCoalgebra heisenberg_dual() {
    const TensorSpace L = TensorSpace::line(3);
    LinMap delta = LinMap::zero(L, L.tensor(L));
    delta.set_entry(0 * 3 + 1, 2, Rational(1));
    delta.set_entry(1 * 3 + 0, 2, Rational(-1));
    return HomCoalgebra{3, delta, LinMap::identity(L), CoalgebraFlavor::lie};
}

inline HomCoalgebra abelian(int n, CoalgebraFlavor flavor) {
    const TensorSpace L = TensorSpace::line(n);
    return HomCoalgebra{n, LinMap::zero(L, L.tensor(L)), LinMap::identity(L), flavor};
}

// Dual of the pointwise-product algebra K^n: every basis vector is group-like.
inline HomCoalgebra group_like(int n) {
    const TensorSpace L = TensorSpace::line(n);
    LinMap delta = LinMap::zero(L, L.tensor(L));
    for (int i = 0; i < n; ++i) delta.set_entry(static_cast<long long>(i) * n + i, i, Rational(1));
    return HomCoalgebra{n, delta, LinMap::identity(L), CoalgebraFlavor::coassociative};
}

// Dual of the truncated polynomial algebra K[x]/(x^n).
inline HomCoalgebra divided_power(int n) {
    const TensorSpace L = TensorSpace::line(n);
    LinMap delta = LinMap::zero(L, L.tensor(L));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i <= k; ++i)
            delta.set_entry(static_cast<long long>(i) * n + (k - i), k, Rational(1));
    return HomCoalgebra{n, delta, LinMap::identity(L), CoalgebraFlavor::coassociative};
}

// n = 2 coassociative instance with a one-sided coproduct on e1.
inline HomCoalgebra corner2() {
    const TensorSpace L = TensorSpace::line(2);
    LinMap delta = LinMap::zero(L, L.tensor(L));
    delta.set_entry(0, 0, Rational(1));
    delta.set_entry(1, 1, Rational(1));
    return HomCoalgebra{2, delta, LinMap::identity(L), CoalgebraFlavor::coassociative};
}

inline LinMap seeded_coderivation(const HomCoalgebra& c, Rng& rng) {
    const OperatorSpaceBasis basis = coderivation_basis(c);
    LinMap phi = LinMap::zero(c.space(), c.space());
    for (const auto& b : basis.basis) phi = phi + small_rational(rng) * b;
    return phi;
}

// Seeded invertible change of basis, assembled from elementary matrices so
// the inverse is exact and free.
inline std::pair<LinMap, LinMap> seeded_basis_change(int n, Rng& rng) {
    const TensorSpace L = TensorSpace::line(n);
    LinMap p = LinMap::identity(L), pinv = LinMap::identity(L);
    const std::size_t steps = 1 + pick(rng, 3);
    for (std::size_t s = 0; s < steps; ++s) {
        const int i = static_cast<int>(pick(rng, static_cast<std::size_t>(n)));
        const int j = static_cast<int>(pick(rng, static_cast<std::size_t>(n)));
        if (i == j) continue;
        const Rational c = small_rational(rng, true);
        LinMap e = LinMap::identity(L), einv = LinMap::identity(L);
        e.set_entry(i, j, c);
        einv.set_entry(i, j, -c);
        p = e * p;
        pinv = pinv * einv;
    }
    return {p, pinv};
}

inline CoDerPair conjugated(const CoDerPair& p, Rng& rng) {
    const auto [t, tinv] = seeded_basis_change(p.coalg.n, rng);
    const LinMap delta = tensor(t, t) * p.coalg.delta * tinv;
    return CoDerPair{HomCoalgebra{p.coalg.n, delta, t * p.coalg.alpha * tinv, p.coalg.flavor},
                     t * p.phi * tinv};
}

inline CoDerPair scaled(const CoDerPair& p, Rng& rng) {
    const Rational c = small_rational(rng, true);
    return CoDerPair{HomCoalgebra{p.coalg.n, c * p.coalg.delta, p.coalg.alpha, p.coalg.flavor},
                     p.phi};
}

enum class SeedKind { abelian, l2, heisenberg, divided_power, group_like, corner };

struct ClassicalSeed {
    HomCoalgebra coalg;
    SeedKind kind;
};

inline ClassicalSeed classical_seed(BundleFlavor flavor, int dim, Rng& rng) {
    if (flavor == BundleFlavor::lie) {
        if (dim == 2) return {l2_dual(), SeedKind::l2};
        if (dim == 3) return {heisenberg_dual(), SeedKind::heisenberg};
        return {abelian(dim, CoalgebraFlavor::lie), SeedKind::abelian};
    }
    // coassociative seeds back both coassociative and pre_lie requests
    std::vector<ClassicalSeed> pool;
    pool.push_back({divided_power(dim), SeedKind::divided_power});
    pool.push_back({group_like(dim), SeedKind::group_like});
    if (dim == 2) pool.push_back({corner2(), SeedKind::corner});
    return pool[pick(rng, pool.size())];
}

// Hand-derived coalgebra-morphism family for each classical seed, solved from
// (alpha (x) alpha).delta = delta.alpha in that basis. Emission re-validates
// every twisted bundle, so these are never trusted blindly.
inline LinMap seeded_morphism(const ClassicalSeed& seed, Rng& rng) {
    const int n = seed.coalg.n;
    LinMap a = LinMap::zero(seed.coalg.space(), seed.coalg.space());
    switch (seed.kind) {
    case SeedKind::abelian: // any matrix works against delta = 0
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.set_entry(i, j, small_rational(rng));
        return a;
    case SeedKind::l2: // e0 -> e0, e1 -> b.e0 + d.e1 (delta.alpha(e0) must stay 0)
        a.set_entry(0, 0, Rational(1));
        a.set_entry(0, 1, small_rational(rng));
        a.set_entry(1, 1, small_rational(rng, true));
        return a;
    case SeedKind::heisenberg: {
        // block [[A, *], [0, det A]] over the grading e0,e1 | e2
        const Rational a00 = small_rational(rng), a01 = small_rational(rng);
        const Rational a10 = small_rational(rng), a11 = small_rational(rng, true);
        a.set_entry(0, 0, a00);
        a.set_entry(0, 1, a01);
        a.set_entry(1, 0, a10);
        a.set_entry(1, 1, a11);
        a.set_entry(0, 2, small_rational(rng));
        a.set_entry(1, 2, small_rational(rng));
        a.set_entry(2, 2, a00 * a11 - a01 * a10);
        return a;
    }
    case SeedKind::divided_power: { // diag(1, c, c^2, ...): dual of x -> c.x
        const Rational base = small_rational(rng, true);
        Rational acc(1);
        for (int i = 0; i < n; ++i) {
            a.set_entry(i, i, acc);
            acc *= base;
        }
        return a;
    }
    case SeedKind::group_like: { // permutation of the group-like basis
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[static_cast<std::size_t>(i)],
                      perm[pick(rng, static_cast<std::size_t>(i + 1))]);
        for (int i = 0; i < n; ++i) a.set_entry(perm[static_cast<std::size_t>(i)], i, Rational(1));
        return a;
    }
    case SeedKind::corner: // e0 -> e0, e1 -> b.e0 + d.e1
        a.set_entry(0, 0, Rational(1));
        a.set_entry(0, 1, small_rational(rng));
        a.set_entry(1, 1, small_rational(rng));
        return a;
    }
    return LinMap::identity(seed.coalg.space());
}

inline CoDerPair rb_twisted_pre_lie(const CoDerPair& ass_pair, Rng& rng) {
    const LinMap id = LinMap::identity(ass_pair.coalg.space());
    std::vector<RotaBaxterData> pool{{id, Rational(-1)},
                                     {LinMap::zero(ass_pair.coalg.space(),
                                                   ass_pair.coalg.space()),
                                      Rational(0)}};
    if (ass_pair.coalg.n <= 2) {
        for (const Rational lam : {Rational(-1), Rational(0)})
            for (auto& r : search_operators(ass_pair.coalg, OperatorKind::rota_baxter, lam,
                                            {Rational(-1), Rational(0), Rational(1)}))
                if (r * ass_pair.phi == ass_pair.phi * r)
                    pool.push_back(RotaBaxterData{std::move(r), lam});
    }
    while (!pool.empty()) {
        const std::size_t i = pick(rng, pool.size());
        try {
            return rb_twist(ass_pair, pool[i]);
        } catch (const refused_error&) {
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }
    // associative pairs are pre-Lie pairs (zero associator defect)
    return CoDerPair{HomCoalgebra{ass_pair.coalg.n, ass_pair.coalg.delta,
                                  ass_pair.coalg.alpha, CoalgebraFlavor::pre_lie},
                     ass_pair.phi};
}

inline CoDerPair generate_pair(const GenerationRecipe& r);

// Pure classical structure in its canonical basis, alpha = id; the seed only
// varies the choice of coderivation (and which coassociative seed backs a
// pre-Lie request).
inline CoDerPair base_instance(BundleFlavor flavor, int dim, Rng& rng) {
    const BundleFlavor seed_flavor =
        flavor == BundleFlavor::pre_lie ? BundleFlavor::coassociative : flavor;
    const ClassicalSeed seed = classical_seed(seed_flavor, dim, rng);
    CoDerPair p{seed.coalg, seeded_coderivation(seed.coalg, rng)};
    if (flavor == BundleFlavor::pre_lie) p = rb_twisted_pre_lie(p, rng);
    return p;
}

// Classical seed twisted along a seeded coalgebra morphism (delta.alpha with
// twist alpha), then optionally conjugated and rescaled for variety.
inline CoDerPair twisted_instance(BundleFlavor flavor, int dim, Rng& rng) {
    const BundleFlavor seed_flavor =
        flavor == BundleFlavor::pre_lie ? BundleFlavor::coassociative : flavor;
    const ClassicalSeed seed = classical_seed(seed_flavor, dim, rng);
    const LinMap a = seeded_morphism(seed, rng);
    HomCoalgebra c{seed.coalg.n, seed.coalg.delta * a, a, seed.coalg.flavor};
    CoDerPair p{c, seeded_coderivation(c, rng)};
    if (pick(rng, 2) == 0) p = conjugated(p, rng);
    if (pick(rng, 2) == 0) p = scaled(p, rng);
    if (flavor == BundleFlavor::pre_lie) p = rb_twisted_pre_lie(p, rng);
    return p;
}

inline CoDerPair generate_pair(const GenerationRecipe& r) {
    if (r.dim < 1 || r.dim > 6)
        throw argument_error("generate: dimension " + std::to_string(r.dim) +
                             " outside the supported range 1..6");
    if (!is_coalgebra_flavor(r.flavor) || r.flavor == BundleFlavor::coder_comodule)
        throw argument_error("generate: flavor " + flavor_name(r.flavor) +
                             " is not generatable");
    Rng rng(r.seed);
    switch (r.strategy) {
    case Strategy::zero: {
        const HomCoalgebra c = abelian(r.dim, coalgebra_flavor(r.flavor));
        return CoDerPair{c, LinMap::zero(c.space(), c.space())};
    }
    case Strategy::classical_dual:
        return base_instance(r.flavor, r.dim, rng);
    case Strategy::twist:
        return twisted_instance(r.flavor, r.dim, rng);
    case Strategy::sum_closure: {
        if (r.dim < 2)
            throw argument_error("generate: sum_closure needs dimension >= 2");
        const int left = 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(r.dim - 1)));
        GenerationRecipe r1{pick(rng, 2) ? Strategy::classical_dual : Strategy::twist,
                            rng(), left, r.flavor};
        GenerationRecipe r2{pick(rng, 2) ? Strategy::classical_dual : Strategy::twist,
                            rng(), r.dim - left, r.flavor};
        return direct_sum_coder_pairs(generate_pair(r1), generate_pair(r2));
    }
    case Strategy::semidirect_closure: {
        if (r.flavor != BundleFlavor::lie)
            throw argument_error("generate: semidirect_closure only emits lie bundles");
        int base = -1;
        for (int n = 1; n <= 6; ++n)
            if (n + n * n == r.dim) base = n;
        if (base < 0)
            throw argument_error("generate: semidirect_closure cannot produce dimension " +
                                 std::to_string(r.dim) + " (needs n + n^2)");
        GenerationRecipe rb{pick(rng, 2) ? Strategy::classical_dual : Strategy::twist,
                            rng(), base, BundleFlavor::lie};
        CoDerPair p = generate_pair(rb);
        // the adjoint comodule needs a coderivation commuting with the twist
        LinMap phi = LinMap::zero(p.coalg.space(), p.coalg.space());
        for (const auto& b : coderivation_basis_commuting(p.coalg).basis)
            phi = phi + small_rational(rng) * b;
        p = CoDerPair{p.coalg, phi};
        return semidirect_coalgebra(p, adjoint_comodule(p));
    }
    }
    throw argument_error("generate: unknown strategy");
}

} // namespace gen_detail

inline StructureBundle generate(const GenerationRecipe& recipe) {
    const CoDerPair p = gen_detail::generate_pair(recipe);
    StructureBundle b = bundle_from_pair(p, recipe.flavor);
    b.metadata["origin"] = "generate:" + strategy_name(recipe.strategy) +
                           " seed=" + std::to_string(recipe.seed);
    const auto reports = check_bundle(b);
    if (!all_passed(reports))
        throw argument_error("generate: strategy " + strategy_name(recipe.strategy) +
                             " produced an invalid bundle (post-validation failed)");
    return b;
}

} // namespace homcoal

#endif // HOMCOAL_SOLVER_HPP
