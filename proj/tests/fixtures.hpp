#ifndef HOMCOAL_TESTS_FIXTURES_HPP
#define HOMCOAL_TESTS_FIXTURES_HPP

#include <homcoal/structures.hpp>

namespace homcoal::fixtures {

// Dual of the non-abelian 2-dim Lie algebra: delta(e1) = e0^e1, delta(e0) = 0.
inline HomCoalgebra l2(const Rational& alpha_scale = Rational(1)) {
    const TensorSpace L = TensorSpace::line(2);
    LinMap delta = LinMap::zero(L, L.tensor(L));
    delta.set_entry(1, 1, Rational(1));
    delta.set_entry(2, 1, Rational(-1));
    LinMap alpha = LinMap::identity(L);
    alpha.set_entry(1, 1, alpha_scale);
    return HomCoalgebra{2, delta, alpha, CoalgebraFlavor::lie};
}

// phi(e1) = e0, phi(e0) = 0: a coderivation of l2 for every diagonal twist.
// It does not commute with a non-identity diagonal twist.
inline CoDerPair l2_pair(const Rational& alpha_scale = Rational(1)) {
    const HomCoalgebra c = l2(alpha_scale);
    LinMap phi = LinMap::zero(c.space(), c.space());
    phi.set_entry(0, 1, Rational(1));
    return CoDerPair{c, phi};
}

// phi = diag(0, 1): the coderivation of l2 that commutes with diag twists.
inline CoDerPair l2_pair_commuting(const Rational& alpha_scale = Rational(1)) {
    const HomCoalgebra c = l2(alpha_scale);
    LinMap phi = LinMap::zero(c.space(), c.space());
    phi.set_entry(1, 1, Rational(1));
    return CoDerPair{c, phi};
}

// Dual of the Heisenberg algebra [e0,e1] = e2.
inline HomCoalgebra heisenberg() {
    const TensorSpace L = TensorSpace::line(3);
    LinMap delta = LinMap::zero(L, L.tensor(L));
    delta.set_entry(0 * 3 + 1, 2, Rational(1));
    delta.set_entry(1 * 3 + 0, 2, Rational(-1));
    return HomCoalgebra{3, delta, LinMap::identity(L), CoalgebraFlavor::lie};
}

// n = 2 coassociative: delta(e0) = e0 (x) e0, delta(e1) = e0 (x) e1.
inline HomCoalgebra corner2() {
    const TensorSpace L = TensorSpace::line(2);
    LinMap delta = LinMap::zero(L, L.tensor(L));
    delta.set_entry(0, 0, Rational(1));
    delta.set_entry(1, 1, Rational(1));
    return HomCoalgebra{2, delta, LinMap::identity(L), CoalgebraFlavor::coassociative};
}

// corner2 with phi(e1) = e1 (commutes with diag endomorphisms).
inline CoDerPair corner2_pair_diag() {
    const HomCoalgebra c = corner2();
    LinMap phi = LinMap::zero(c.space(), c.space());
    phi.set_entry(1, 1, Rational(1));
    return CoDerPair{c, phi};
}

// corner2 with phi(e1) = e0 (the other coderivation basis direction).
inline CoDerPair corner2_pair_off() {
    const HomCoalgebra c = corner2();
    LinMap phi = LinMap::zero(c.space(), c.space());
    phi.set_entry(0, 1, Rational(1));
    return CoDerPair{c, phi};
}

// Dual of K[x]/(x^n): delta(e_k) = sum_{i+j=k} e_i (x) e_j.
inline HomCoalgebra divided_power(int n) {
    const TensorSpace L = TensorSpace::line(n);
    LinMap delta = LinMap::zero(L, L.tensor(L));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i <= k; ++i)
            delta.set_entry(static_cast<long long>(i) * n + (k - i), k, Rational(1));
    return HomCoalgebra{n, delta, LinMap::identity(L), CoalgebraFlavor::coassociative};
}

// Non-abelian 2-dim Lie algebra [e0,e1] = e1 with diagonal twist diag(1, t).
inline DerPair nonabelian2_der_pair(const Rational& t = Rational(1)) {
    const TensorSpace L = TensorSpace::line(2);
    LinMap mu = LinMap::zero(L.tensor(L), L);
    mu.set_entry(1, 0 * 2 + 1, Rational(1));
    mu.set_entry(1, 1 * 2 + 0, Rational(-1));
    LinMap alpha = LinMap::identity(L);
    alpha.set_entry(1, 1, t);
    LinMap phi = LinMap::zero(L, L);
    phi.set_entry(1, 1, Rational(1)); // phi = diag(0, 1)
    return DerPair{HomAlgebra{2, mu, alpha, AlgebraFlavor::lie}, phi};
}

} // namespace homcoal::fixtures

#endif // HOMCOAL_TESTS_FIXTURES_HPP
