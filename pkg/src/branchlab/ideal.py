"""Generators of the annihilator of the highest weight vector in U(k).

For each simple root the highest vector is killed by an explicit
polynomial in a single element of k: for a compact simple root the
(n_i+1)-st power of the lowering vector, for a restricted simple root a
monic polynomial in the folded vector z_i = e_{-a_i} + theta(e_{-a_i}).
The polynomial has simple integer roots n_i, n_i-2, ..., -n_i when the
root is real (z_i semisimple) and is a pure power otherwise (z_i
nilpotent).  Together with the Cartan conditions and the raising vectors
of m these generate the full annihilator left ideal; this module builds
the generators and certifies the annihilation identities by exact matrix
arithmetic.
"""

from __future__ import annotations

from .errors import IdentityViolation, NormalizationFailure
from .hwmodule import HWModule
from .linalg import (apply_poly, from_roots, minimal_polynomial, pmonic,
                     vec_eq)
from .realform import RealFormData
from .scalars import ONE, ZERO, qq


class QPolynomial:
    """Monic one-variable polynomial attached to (weight, simple root)."""

    def __init__(self, index, coeffs, semisimple):
        self.index = index
        self.coeffs = list(coeffs)      # low degree first, monic
        self.semisimple = semisimple

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def roots(self):
        if not self.semisimple:
            return [ZERO] if len(self.coeffs) > 1 else []
        n = self.degree - 1
        return [qq(n - 2 * j) for j in range(n + 1)]

    def __repr__(self):
        return "QPolynomial(i=%d, deg=%d)" % (self.index, self.degree)


_COEFF_CACHE = {}


def q_polynomial(rf: RealFormData, lam, i) -> QPolynomial:
    """Annihilating polynomial for the i-th simple root at weight lam."""
    n = int(lam[i])
    if n < 0:
        raise IdentityViolation("weight coefficient must be nonnegative")
    semisimple = i in rf.real_simple_idx
    key = (n, semisimple)
    coeffs = _COEFF_CACHE.get(key)
    if coeffs is None:
        if semisimple:
            coeffs = from_roots([qq(n - 2 * j) for j in range(n + 1)])
        else:
            coeffs = [ZERO] * (n + 1) + [ONE]
        _COEFF_CACHE[key] = coeffs
    return QPolynomial(i, coeffs, semisimple)


def z_vector(rf: RealFormData, i):
    """Folded lowering vector z_i of a restricted simple root, certified.

    Checks the defining properties: fixed by the involution; for a real
    simple root the Killing square equals that of the coroot; for the
    nilpotent case the two summands commute and the vector is ad
    nilpotent.
    """
    if i not in rf.restricted_simple_idx:
        raise IdentityViolation(
            "simple root %d has its vector inside m; no folded vector" % i)
    g = rf.g
    z = dict(rf.folded_lowering[i])
    if not vec_eq(rf.theta_apply(z), z):
        raise IdentityViolation("folded vector is not fixed by the involution")
    simple = tuple(1 if k == i else 0 for k in range(rf.rank))
    neg = tuple(-c for c in simple)
    if i in rf.real_simple_idx:
        hi = {g.h_index(i): ONE}
        if g.killing(z, z) != g.killing(hi, hi):
            raise NormalizationFailure(
                "folded vector of real simple root %d has wrong Killing "
                "square" % i)
    else:
        low = {g.e_index(neg): ONE}
        if g.bracket(low, rf.theta_apply(low)):
            raise IdentityViolation(
                "lowering vector and its image fail to commute for "
                "nilpotent simple root %d" % i)
        ad = g.ad(z)
        mat = ad
        for _ in range(g.dim):
            mat = mat.matmul(ad)
        if not mat.is_zero():
            raise IdentityViolation(
                "folded vector of simple root %d is not nilpotent" % i)
    return z


class GeneratorSet:
    """The generating family of the annihilator ideal at a weight.

    m_powers: (index, power) pairs - lowering vectors of compact simple
    roots raised to n_i+1; cartan: (element, value) pairs - h - lam(h)
    over the h_m basis; m_raising: indices of compact simple roots;
    folded: (index, QPolynomial) pairs for the restricted simple roots.
    """

    def __init__(self, rf: RealFormData, lam):
        lam = tuple(int(x) for x in lam)
        self.rf = rf
        self.lam = lam
        self.m_powers = [(i, lam[i] + 1) for i in rf.compact_simple_idx]
        self.cartan = [(dict(y), rf.weight_on_element(
            tuple(qq(x) for x in lam), y)) for y in rf.hm_basis]
        self.m_raising = list(rf.compact_simple_idx)
        self.folded = [(i, q_polynomial(rf, lam, i))
                       for i in rf.restricted_simple_idx]


def generator_set(rf: RealFormData, lam) -> GeneratorSet:
    return GeneratorSet(rf, lam)


def verify_annihilator(module: HWModule, rf: RealFormData):
    """Certify that every generator kills the highest vector.

    Also runs degree-minimality probes: removing any root from the
    polynomial of a real simple root, or lowering the exponent in the
    nilpotent case, must leave the highest vector alive.  Returns a
    report dict; raises IdentityViolation when an identity fails.
    """
    g = rf.g
    lam = tuple(int(x.re) for x in module.lam)
    gens = generator_set(rf, lam)
    v = module.highest_vector()
    report = {"weight": lam, "checked": 0, "minimality_witnesses": 0}

    for i, power in gens.m_powers:
        simple = tuple(1 if k == i else 0 for k in range(rf.rank))
        fmat = module.matrix_of({g.e_index(tuple(-c for c in simple)): ONE})
        cur = dict(v)
        for _ in range(power):
            cur = fmat.apply(cur)
        if cur:
            raise IdentityViolation(
                "compact lowering power fails to kill the highest vector "
                "(simple root %d)" % i)
        report["checked"] += 1

    for y, val in gens.cartan:
        ymat = module.matrix_of(y)
        img = ymat.apply(v)
        expect = {k: val * c for k, c in v.items() if val * c}
        if not vec_eq(img, expect):
            raise IdentityViolation(
                "Cartan generator does not act by the prescribed scalar")
        report["checked"] += 1

    for i in gens.m_raising:
        simple = tuple(1 if k == i else 0 for k in range(rf.rank))
        emat = module.matrix_of({g.e_index(simple): ONE})
        if emat.apply(v):
            raise IdentityViolation(
                "raising vector of m fails to kill the highest vector")
        report["checked"] += 1

    for i, q in gens.folded:
        z = z_vector(rf, i)
        zmat = module.matrix_of(z)
        if apply_poly(zmat, q.coeffs, v):
            raise IdentityViolation(
                "annihilating polynomial fails on the highest vector "
                "(simple root %d)" % i)
        report["checked"] += 1
        n = lam[i]
        if i in rf.real_simple_idx:
            if n <= 24:
                for r in q.roots():
                    reduced = _divide_root(q.coeffs, r)
                    if not apply_poly(zmat, reduced, v):
                        raise IdentityViolation(
                            "polynomial with root %s removed still kills "
                            "the highest vector (simple root %d)" % (r, i))
                    report["minimality_witnesses"] += 1
            else:
                # equivalent certificate at scale: the local minimal
                # polynomial of the folded vector on the highest vector
                # must be the full polynomial, so no root is removable
                local = minimal_polynomial(zmat, seeds=[v])
                if pmonic(local) != pmonic(list(q.coeffs)):
                    raise IdentityViolation(
                        "local minimal polynomial drops a root "
                        "(simple root %d)" % i)
                report["minimality_witnesses"] += q.degree
        elif n >= 1:
            cur = dict(v)
            for _ in range(n):
                cur = zmat.apply(cur)
            if not cur:
                raise IdentityViolation(
                    "folded vector power %d already kills the highest "
                    "vector (simple root %d)" % (n, i))
            report["minimality_witnesses"] += 1
    return report


def _divide_root(coeffs, r):
    """coeffs / (t - r), exact (r must be a root)."""
    out = [ZERO] * (len(coeffs) - 1)
    carry = ZERO
    for k in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[k] + carry * r
        out[k - 1] = carry
    rem = coeffs[0] + carry * r
    if rem:
        raise IdentityViolation("polynomial division left a remainder")
    return out
