"""The exact identity suite: every structural fact the theory promises.

Each check returns a CheckResult; run_verify bundles the whole suite for
one real form with a weight/bound budget.  All checks are exact - a
failure means a construction bug, never numerical noise.
"""

from __future__ import annotations

from .branching import branch_kostant, branch_oracle, build_k_structure
from .errors import BranchlabError, IdentityViolation, StructureViolation
from .hwmodule import build_irrep, verify_prv_annihilation
from .ideal import verify_annihilator
from .linalg import LinearSolver, rank, vec_axpy, vec_eq, vec_scale
from .mstruct import (fiber_enumerate, fiber_label, is_spherical,
                      minimal_fiber_element, weights_up_to)
from .psembed import (dual_weight, folded_spectrum, parity_operator,
                      ps_ktype_bound, ps_params, verify_borel_weil_annihilation,
                      verify_nilradical_coinvariants, verify_xi_eigenvalue)
from .realform import RealFormData
from .scalars import ONE, qq


class CheckResult:
    def __init__(self, name, passed, detail=""):
        self.name = name
        self.passed = bool(passed)
        self.detail = detail

    def as_dict(self):
        return {"name": self.name, "passed": self.passed,
                "detail": self.detail}

    def __repr__(self):
        return "[%s] %s%s" % ("pass" if self.passed else "FAIL", self.name,
                              " - " + self.detail if self.detail else "")


def _guard(name, fn):
    try:
        detail = fn()
        return CheckResult(name, True, detail if isinstance(detail, str)
                           else "")
    except BranchlabError as exc:
        return CheckResult(name, False, str(exc))


# ---------------------------------------------------------------------------
# structural identities of the real form
# ---------------------------------------------------------------------------

def check_decomposition_dims(rf: RealFormData):
    def run():
        dim_n = len(rf.n_roots)
        total = rf.k_dim + rf.split_rank + dim_n
        if total != rf.g.dim:
            raise StructureViolation(
                "dim k + dim a + dim n = %d, dim g = %d" % (total, rf.g.dim))
        return "dim %d = %d + %d + %d" % (rf.g.dim, rf.k_dim, rf.split_rank,
                                          dim_n)
    return _guard("iwasawa-dimensions", run)


def check_lowering_brackets(rf: RealFormData):
    """Bracket of a lowering root vector with its involution image."""
    def run():
        g = rf.g
        a_span = LinearSolver(rf.a_basis, g.dim) if rf.a_basis else None
        for r in rf.rs.positive_roots:
            phi = tuple(-c for c in r)
            e = {g.e_index(phi): ONE}
            br = g.bracket(e, rf.theta_apply(e))
            timg = rf.theta_root(phi)
            total = tuple(x + y for x, y in zip(phi, timg))
            if rf.rs.is_root(total):
                raise StructureViolation(
                    "a root plus its involution image is a root")
            if br:
                if a_span is None or a_span.solve(br, check=True) is None:
                    raise StructureViolation(
                        "bracket with the involution image left the split "
                        "part")
                if timg != tuple(-c for c in phi):
                    raise StructureViolation(
                        "nonzero bracket for a non-real root")
            elif timg == tuple(-c for c in phi):
                raise StructureViolation("real root with vanishing bracket")
        return "all %d lowering roots" % len(rf.rs.positive_roots)
    return _guard("involution-bracket-split", run)


def _w_gamma(rf: RealFormData, gamma):
    """Element of the split part dual to a restricted root."""
    g = rf.g
    n = rf.split_rank
    gram = [{i: g.killing(rf.a_basis[i], rf.a_basis[j]) for i in range(n)
             if g.killing(rf.a_basis[i], rf.a_basis[j])} for j in range(n)]
    solver = LinearSolver(gram, n)
    sol = solver.solve({i: gamma[i] for i in range(n) if gamma[i]})
    out = {}
    for j, c in sol.items():
        vec_axpy(out, rf.a_basis[j], c)
    return out


def check_scaled_bracket_normalization(rf: RealFormData):
    """[theta(e), e] = -B(theta(e), e) w_gamma on basis root vectors."""
    def run():
        g = rf.g
        count = 0
        for gamma in rf.restricted_positive:
            for sign in (1, -1):
                gm = tuple(qq(sign) * x for x in gamma)
                w = _w_gamma(rf, gm)
                for r in rf.g_gamma_roots(gm):
                    e = {g.e_index(r): ONE}
                    lhs = g.bracket(rf.theta_apply(e), e)
                    scale = -g.killing(rf.theta_apply(e), e)
                    rhs = vec_scale(w, scale)
                    if not vec_eq(lhs, rhs):
                        raise StructureViolation(
                            "scaled bracket identity fails on %s" % (r,))
                    count += 1
        return "%d root vectors" % count
    return _guard("restricted-bracket-scaling", run)


def _component_roots(rf: RealFormData, gamma):
    """Partition of the roots of g(gamma) into m-submodule components."""
    roots = set(rf.g_gamma_roots(gamma))
    comps = []
    for psi in rf.lowest_weights(gamma):
        comp = {psi}
        frontier = [psi]
        while frontier:
            nxt = []
            for r in frontier:
                for mu in rf.m_pos_roots:
                    up = tuple(a + b for a, b in zip(r, mu))
                    if up in roots and up not in comp:
                        comp.add(up)
                        nxt.append(up)
            frontier = nxt
        comps.append(comp)
    return comps


def check_weight_negation(rf: RealFormData):
    """h_m weight sets of restricted root spaces are symmetric."""
    def run():
        for gamma in rf.restricted_positive:
            comps = _component_roots(rf, gamma)
            union = set().union(*comps)
            if union != set(rf.g_gamma_roots(gamma)) or \
                    sum(len(c) for c in comps) != len(union):
                raise StructureViolation(
                    "components do not partition a restricted root space")
            weights = [sorted(
                tuple(rf.root_on_element(r, y).sort_key()
                      for y in rf.hm_basis) for r in comp)
                for comp in comps]
            neg = [sorted(
                tuple((-rf.root_on_element(r, y)).sort_key()
                      for y in rf.hm_basis) for r in comp)
                for comp in comps]
            if len(comps) == 1:
                if weights[0] != neg[0]:
                    raise StructureViolation(
                        "weight set of an irreducible space is not "
                        "symmetric")
            else:
                if weights[0] != neg[1] or weights[1] != neg[0]:
                    raise StructureViolation(
                        "weight sets of a reducible space are not mutual "
                        "negatives")
        return "%d positive restricted roots" % len(rf.restricted_positive)
    return _guard("restricted-weight-negation", run)


def check_counts_and_basis(rf: RealFormData):
    def run():
        if len(rf.restricted_simple_idx) != rf.split_rank + rf.center_dim:
            raise StructureViolation("restricted simple count is wrong")
        if len(rf.reducible_j) != rf.center_dim:
            raise StructureViolation("reducible count is wrong")
        # projections of the restricted coroots span center + split part
        g = rf.g
        proj_basis = rf.center_basis + rf.a_basis
        if proj_basis:
            solver = LinearSolver(proj_basis, g.dim)
            vecs = []
            for i in rf.restricted_simple_idx:
                x = {g.h_index(i): ONE}
                # orthogonal projection: solve the Gram system
                n = len(proj_basis)
                gram = [{a: g.killing(proj_basis[a], proj_basis[b])
                         for a in range(n)
                         if g.killing(proj_basis[a], proj_basis[b])}
                        for b in range(n)]
                gsolver = LinearSolver(gram, n)
                target = {a: g.killing(proj_basis[a], x) for a in range(n)
                          if g.killing(proj_basis[a], x)}
                sol = gsolver.solve(target)
                vecs.append(dict(sol))
            if rank(vecs) != len(proj_basis):
                raise StructureViolation(
                    "projected restricted coroots do not span center + "
                    "split part")
        return ("split rank %d, center %d, restricted simples %d"
                % (rf.split_rank, rf.center_dim,
                   len(rf.restricted_simple_idx)))
    return _guard("classification-counts", run)


def structure_checks(rf: RealFormData):
    return [
        check_decomposition_dims(rf),
        check_lowering_brackets(rf),
        check_scaled_bracket_normalization(rf),
        check_weight_negation(rf),
        check_counts_and_basis(rf),
    ]


# ---------------------------------------------------------------------------
# module-level identities
# ---------------------------------------------------------------------------

def check_n_invariants(module, rf: RealFormData):
    """The n-annihilated subspace equals the cyclic m-span of the highest
    vector."""
    from .linalg import kernel_of_operators, span_closure
    g = rf.g
    mats = [module.matrix_of({g.e_index(r): ONE}) for r in rf.n_roots]
    inv = kernel_of_operators(mats, module.dim)
    mmats = [module.matrix_of(x) for _, _, x in rf.m_basis_elements()]
    span = span_closure(mmats, [module.highest_vector()], module.dim)
    if len(inv) != len(span):
        raise IdentityViolation(
            "n-invariants dimension %d, cyclic m-span dimension %d"
            % (len(inv), len(span)))
    if rank([dict(v) for v in inv + span]) != len(inv):
        raise IdentityViolation(
            "n-invariants and the cyclic m-span differ as subspaces")
    return len(inv)


def branching_suite(rf: RealFormData, lambdas, cap=None):
    """Oracle equality, annihilation, and sl2-string facts per weight."""
    results = []
    for lam in lambdas:
        def run(lam=lam):
            module = build_irrep(rf.g, lam, cap=cap)
            verify_prv_annihilation(module)
            verify_annihilator(module, rf)
            check_n_invariants(module, rf)
            ro = branch_oracle(module, rf)
            rk = branch_kostant(module, rf)
            if ro != rk:
                raise IdentityViolation(
                    "branching reports disagree at %s: %s vs %s"
                    % (lam, ro.signature(), rk.signature()))
            return "dim %d, %d types" % (module.dim, len(ro.entries))
        results.append(_guard("branching-%s" % (tuple(lam),), run))
    return results


def fiber_suite(rf: RealFormData, bound):
    """Fibers are spherical translates of their unique minimal elements."""
    def run():
        groups = {}
        for lam in weights_up_to(bound, rf.rank):
            groups.setdefault(fiber_label(lam, rf), []).append(lam)
        for label, members in groups.items():
            enum = fiber_enumerate(label, bound, rf)
            if enum != sorted(members):
                raise IdentityViolation("fiber enumeration mismatch")
            base = minimal_fiber_element(label, rf)
            for lam in members:
                diff = tuple(a - b for a, b in zip(lam, base))
                if any(x < 0 for x in diff) or not is_spherical(diff, rf):
                    raise IdentityViolation(
                        "fiber member %s minus the minimal element is not "
                        "spherical" % (lam,))
        return "%d fibers, %d weights" % (
            len(groups), sum(len(v) for v in groups.values()))
    return _guard("fiber-translates", run)


def domination_suite(rf: RealFormData, bound, cap=None, max_dim=200):
    """Multiplicities along a fiber dominate the minimal member."""
    def run():
        groups = {}
        for lam in weights_up_to(bound, rf.rank):
            groups.setdefault(fiber_label(lam, rf), []).append(lam)
        tested = 0
        for label, members in groups.items():
            if len(members) < 2:
                continue
            base = minimal_fiber_element(label, rf)
            tri = rf.g.triangular()
            if tri.weyl_dim(tuple(qq(x) for x in base)) > max_dim:
                continue
            base_rep = branch_oracle(build_irrep(rf.g, base, cap=cap), rf)
            for lam in members:
                if lam == base:
                    continue
                if tri.weyl_dim(tuple(qq(x) for x in lam)) > max_dim:
                    continue
                rep = branch_oracle(build_irrep(rf.g, lam, cap=cap), rf)
                for lbl, _, mult in base_rep.entries:
                    if rep.multiplicity_of(lbl) < mult:
                        raise IdentityViolation(
                            "multiplicity of a k-type drops from %s to %s"
                            % (base, lam))
                tested += 1
        return "%d dominations" % tested
    return _guard("fiber-domination", run)


def ps_suite(rf: RealFormData, lambdas, cap=None):
    results = []
    for lam in lambdas:
        def run(lam=lam):
            lamc = dual_weight(rf.rs, lam)
            if dual_weight(rf.rs, lamc) != tuple(lam):
                raise IdentityViolation("duality is not involutive")
            module = build_irrep(rf.g, lam, cap=cap)
            params = ps_params(lam, rf)
            verify_xi_eigenvalue(module, rf, params)
            verify_nilradical_coinvariants(lam, rf, cap=cap)
            verify_borel_weil_annihilation(lam, rf, cap=cap)
            report = branch_oracle(module, rf)
            ps_ktype_bound(lam, rf, report=report, cap=cap)
            return "dual %s" % (lamc,)
        results.append(_guard("principal-series-%s" % (tuple(lam),), run))
    return results


def parity_suite(rf: RealFormData, lambdas, cap=None):
    """Integrality and parity of folded-vector spectra on all k-types."""
    def run():
        if not rf.real_simple_idx:
            return "no real simple roots"
        ks = build_k_structure(rf)
        seen = set()
        checked = 0
        for lam in lambdas:
            module = build_irrep(rf.g, lam, cap=cap)
            for label, _, _ in branch_oracle(module, rf).entries:
                if label in seen:
                    continue
                seen.add(label)
                ktype = ks.k_type(label)
                for i in rf.real_simple_idx:
                    spec = folded_spectrum(ktype, rf, i)
                    parity_operator(ktype, rf, i)
                    checked += 1
        return "%d (type, root) pairs" % checked
    return _guard("folded-spectrum-parity", run)


# ---------------------------------------------------------------------------
# the bundled verify command
# ---------------------------------------------------------------------------

def run_verify(rf: RealFormData, weight=None, bound=3, cap=None,
               max_dim=120):
    """Full identity suite on one real form, within a work budget."""
    if weight is not None:
        lambdas = [tuple(int(x) for x in weight)]
    else:
        tri = rf.g.triangular()
        lambdas = [lam for lam in weights_up_to(bound, rf.rank)
                   if tri.weyl_dim(tuple(qq(x) for x in lam)) <= max_dim]
    results = list(structure_checks(rf))
    results.extend(branching_suite(rf, lambdas, cap=cap))
    results.append(fiber_suite(rf, bound))
    results.append(domination_suite(rf, bound, cap=cap, max_dim=max_dim))
    results.extend(ps_suite(rf, lambdas, cap=cap))
    results.append(parity_suite(rf, lambdas, cap=cap))
    return results
