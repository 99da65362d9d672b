"""Principal-series parameters and the finite-dimensional embedding facts.

Every irreducible module embeds in a unique principal series; the
parameter pair is computable from the highest weight alone: the
character/restriction label of the dual weight (with the restriction
dualized inside m) and the linear form on the split part by which a acts
on the coinvariants V/nV.  The embedding forces exact annihilation
identities on the dual highest vector and an upper bound on each k-type
multiplicity by an isotypic dimension; this module verifies both.
"""

from __future__ import annotations

from .branching import KType, branch_oracle, build_k_structure
from .errors import IdentityViolation
from .hwmodule import HWModule, build_irrep
from .ideal import q_polynomial, z_vector
from .linalg import (LinearSolver, SpMat, apply_poly, column_space_echelon,
                     integer_roots, minimal_polynomial, nullspace,
                     reduces_to_zero, restrict_operator, span_closure,
                     split_semisimple, vec_axpy)
from .mstruct import FiberLabel, lambda_Me_membership
from .realform import RealFormData
from .scalars import ONE, qq


def dual_weight(rs, lam):
    """Highest weight of the dual module: minus the longest-element image."""
    lam = tuple(int(x) for x in lam)
    img = rs.longest_element_action(tuple(qq(x) for x in lam))
    out = []
    for v in img:
        if not v.is_integer():
            raise IdentityViolation("dual weight fell off the lattice")
        out.append(-int(v.re))
    out = tuple(out)
    if any(x < 0 for x in out):
        raise IdentityViolation("dual weight is not dominant")
    return out


def dualize_on_m(rf: RealFormData, nu):
    """Dominant form of the negated restriction, under the Weyl group of m.

    This recovers the highest weight of the dual m-module from the
    highest weight of the original, using the same basis of h_m.
    """
    nu = tuple(qq(x) for x in nu)
    cur = tuple(-x for x in nu)
    ncomp = len(rf.compact_simple_idx)
    alpha_on_basis = {}
    for pos, i in enumerate(rf.compact_simple_idx):
        s = tuple(1 if k == i else 0 for k in range(rf.rank))
        alpha_on_basis[pos] = [rf.root_on_element(s, b) for b in rf.hm_basis]
    moved = True
    guard = 0
    while moved:
        moved = False
        guard += 1
        if guard > 10000:
            raise IdentityViolation("dualization inside m does not terminate")
        for pos in range(ncomp):
            v = cur[pos]
            if v.re < 0:
                row = alpha_on_basis[pos]
                cur = tuple(c - v * row[j] for j, c in enumerate(cur))
                moved = True
    return cur


class PrincipalSeriesParams:
    """The unique parameter pair whose principal series contains V."""

    def __init__(self, source, delta: FiberLabel, xi, dual):
        self.source = tuple(int(x) for x in source)
        self.delta = delta
        self.xi = tuple(xi)
        self.dual = tuple(int(x) for x in dual)

    def __repr__(self):
        return "PrincipalSeriesParams(delta=%r, xi=%s)" % (
            self.delta, tuple(str(x) for x in self.xi))


def ps_params(lam, rf: RealFormData) -> PrincipalSeriesParams:
    """Parameters (delta, xi) of the principal series containing V."""
    lam = tuple(int(x) for x in lam)
    lamc = dual_weight(rf.rs, lam)
    lamcq = tuple(qq(x) for x in lamc)
    zeta = tuple(1 if lamc[i] % 2 == 0 else -1 for i in rf.real_simple_idx)
    nu_c = rf.lam_on_hm(lamcq)
    nu = dualize_on_m(rf, nu_c)
    if not lambda_Me_membership(nu, rf):
        raise IdentityViolation(
            "dualized restriction is not an integrated form on h_m")
    if dualize_on_m(rf, nu) != nu_c:
        raise IdentityViolation("dualization inside m is not involutive")
    delta = FiberLabel(rf, zeta, nu)
    # xi two ways: the longest-element image restricted to a, and minus
    # the dual weight restricted to a
    kappa_lam = rf.rs.longest_element_action(tuple(qq(x) for x in lam))
    xi1 = tuple(rf.weight_on_element(kappa_lam, x) for x in rf.a_basis)
    xi2 = tuple(-v for v in rf.lam_on_a(lamcq))
    if xi1 != xi2:
        raise IdentityViolation(
            "the two descriptions of the split-part parameter disagree")
    return PrincipalSeriesParams(lam, delta, xi1, lamc)


def verify_xi_eigenvalue(module: HWModule, rf: RealFormData,
                         params: PrincipalSeriesParams = None):
    """Third description of xi: the split part acts by xi on V/nV."""
    lam = tuple(int(x.re) for x in module.lam)
    if params is None:
        params = ps_params(lam, rf)
    g = rf.g
    nmats = [module.matrix_of({g.e_index(r): ONE}) for r in rf.n_roots]
    ech = column_space_echelon(nmats)
    for j, x in enumerate(rf.a_basis):
        shifted = module.matrix_of(x).shift(params.xi[j])
        for col in shifted.cols:
            if col and not reduces_to_zero(ech, col):
                raise IdentityViolation(
                    "split part does not act by xi on the coinvariants")
    return params


def verify_nilradical_coinvariants(lam, rf: RealFormData, cap=None,
                                   module=None, dual_module=None):
    """dim V/nV equals the dimension of the cyclic m-span of the dual
    highest vector; both sides computed exactly."""
    g = rf.g
    lam = tuple(int(x) for x in lam)
    if module is None:
        module = build_irrep(g, lam, cap=cap)
    nmats = [module.matrix_of({g.e_index(r): ONE}) for r in rf.n_roots]
    ech = column_space_echelon(nmats)
    co_dim = module.dim - len(ech)
    lamc = dual_weight(rf.rs, lam)
    dualmod = dual_module
    if dualmod is None:
        dualmod = build_irrep(g, lamc, cap=cap)
    mmats = [dualmod.matrix_of(x) for _, _, x in rf.m_basis_elements()]
    span = span_closure(mmats, [dualmod.highest_vector()], dualmod.dim)
    if co_dim != len(span):
        raise IdentityViolation(
            "coinvariant dimension %d differs from the cyclic m-span "
            "dimension %d" % (co_dim, len(span)))
    return co_dim


def verify_borel_weil_annihilation(lam, rf: RealFormData, cap=None,
                                   dual_module=None):
    """Annihilation identities on the dual highest vector.

    The polynomial of the dual weight in each folded vector kills the
    dual highest vector, and for compact simple roots the corresponding
    lowering power does.
    """
    g = rf.g
    lam = tuple(int(x) for x in lam)
    lamc = dual_weight(rf.rs, lam)
    dualmod = dual_module
    if dualmod is None:
        dualmod = build_irrep(g, lamc, cap=cap)
    vstar = dualmod.highest_vector()
    checked = 0
    for i in rf.restricted_simple_idx:
        q = q_polynomial(rf, lamc, i)
        zmat = dualmod.matrix_of(z_vector(rf, i))
        if apply_poly(zmat, q.coeffs, vstar):
            raise IdentityViolation(
                "dual-weight polynomial fails on the dual highest vector "
                "(simple root %d)" % i)
        checked += 1
    for i in rf.compact_simple_idx:
        s = tuple(1 if k == i else 0 for k in range(rf.rank))
        fmat = dualmod.matrix_of({g.e_index(tuple(-c for c in s)): ONE})
        cur = dict(vstar)
        for _ in range(lamc[i] + 1):
            cur = fmat.apply(cur)
        if cur:
            raise IdentityViolation(
                "compact lowering power of the dual weight fails on the "
                "dual highest vector (simple root %d)" % i)
        checked += 1
    return {"weight": lam, "dual": lamc, "checked": checked}


# ---------------------------------------------------------------------------
# parity operators and isotypic bounds
# ---------------------------------------------------------------------------

def folded_spectrum(ktype: KType, rf: RealFormData, i):
    """Integer spectrum of a folded vector on a k-type; certified.

    The minimal polynomial must split into distinct integer roots.
    Cached on the k-type, which is itself cached per label.
    """
    if i not in rf.real_simple_idx:
        raise IdentityViolation("parity data only exists for real simple "
                                "roots")
    cache = getattr(ktype, "_spectrum_cache", None)
    if cache is None:
        cache = ktype._spectrum_cache = {}
    if i in cache:
        return cache[i]
    zmat = ktype.matrix_for(rf.folded_lowering[i])
    p = minimal_polynomial(zmat)
    roots, remainder = integer_roots(p)
    if remainder or len(set(roots)) != len(roots):
        raise IdentityViolation(
            "folded vector spectrum on a k-type is not simple integral")
    cache[i] = roots
    return roots


def parity_operator(ktype: KType, rf: RealFormData, i):
    """The order-two operator acting as the parity of the folded spectrum.

    Interpolates (-1)^m over the integer eigenvalues m of the folded
    vector, then certifies the square is the identity and that the
    operator commutes with the action of m.  Cached on the k-type.
    """
    cache = getattr(ktype, "_parity_cache", None)
    if cache is None:
        cache = ktype._parity_cache = {}
    if i in cache:
        return cache[i]
    spectrum = folded_spectrum(ktype, rf, i)
    zmat = ktype.matrix_for(rf.folded_lowering[i])
    # assemble the operator from the exact eigendecomposition: +1 on even
    # eigenspaces, -1 on odd ones
    eig = []
    for ev, vecs in split_semisimple(zmat, candidates=spectrum):
        sign = ONE if int(ev.re) % 2 == 0 else -ONE
        eig.extend((sign, v) for v in vecs)
    solver = LinearSolver([v for _, v in eig], ktype.dim)
    cols = []
    for j in range(ktype.dim):
        coords = solver.solve({j: ONE})
        col = {}
        for k, c in coords.items():
            vec_axpy(col, eig[k][1], c * eig[k][0])
        cols.append(col)
    emat = SpMat(ktype.dim, ktype.dim, cols)
    if not (emat.matmul(emat) == SpMat.identity(ktype.dim)):
        raise IdentityViolation("parity operator does not square to one")
    for _, _, x in rf.m_basis_elements():
        if not (emat.commutator(ktype.matrix_for(x)).is_zero()):
            raise IdentityViolation(
                "parity operator does not centralize the action of m")
    cache[i] = (emat, spectrum)
    return emat, spectrum


def m_primary_dimension(ktype: KType, delta: FiberLabel, rf: RealFormData):
    """Dimension of the delta-isotypic subspace of a k-type.

    The primary component for the restriction is the m-span of the
    highest vectors of that weight; the parity conditions then cut it by
    the character on the 2-group part.  Cached per (type, label).
    """
    cache = getattr(ktype, "_isotypic_cache", None)
    if cache is None:
        cache = ktype._isotypic_cache = {}
    key = delta.key()
    if key in cache:
        return cache[key]
    g = rf.g
    rows = []
    for j, y in enumerate(rf.hm_basis):
        ymat = ktype.matrix_for(y)
        rows.extend(r for r in ymat.shift(delta.nu[j]).rows() if r)
    for i in rf.compact_simple_idx:
        s = tuple(1 if k == i else 0 for k in range(rf.rank))
        emat = ktype.matrix_for({g.e_index(s): ONE})
        rows.extend(r for r in emat.rows() if r)
    top = nullspace(rows, ktype.dim)
    if not top:
        cache[key] = 0
        return 0
    lower = []
    for i in rf.compact_simple_idx:
        s = tuple(1 if k == i else 0 for k in range(rf.rank))
        lower.append(ktype.matrix_for(
            {g.e_index(tuple(-c for c in s)): ONE}))
    primary = span_closure(lower, top, ktype.dim)
    if not rf.real_simple_idx:
        cache[key] = len(primary)
        return len(primary)
    rows = []
    pos_of_real = {i: k for k, i in enumerate(rf.real_simple_idx)}
    for i in rf.real_simple_idx:
        emat, _ = parity_operator(ktype, rf, i)
        sub = restrict_operator(emat, primary)
        want = qq(delta.zeta[pos_of_real[i]])
        rows.extend(r for r in sub.shift(want).rows() if r)
    out = len(nullspace(rows, len(primary)))
    cache[key] = out
    return out


def ps_ktype_bound(lam, rf: RealFormData, report=None, cap=None):
    """Each multiplicity is bounded by the isotypic dimension in the
    principal series; returns the per-type comparison."""
    g = rf.g
    lam = tuple(int(x) for x in lam)
    params = ps_params(lam, rf)
    if report is None:
        module = build_irrep(g, lam, cap=cap)
        report = branch_oracle(module, rf)
    ks = build_k_structure(rf)
    out = []
    for label, dim, mult in report.entries:
        ktype = ks.k_type(label)
        bound = m_primary_dimension(ktype, params.delta, rf)
        if mult > bound:
            raise IdentityViolation(
                "multiplicity %d exceeds the isotypic bound %d for a "
                "k-type of dimension %d" % (mult, bound, dim))
        out.append({"label": tuple(str(x) for x in label), "dim": dim,
                    "multiplicity": mult, "isotypic_bound": bound})
    return {"weight": lam, "params": params, "types": out}
