"""Finite-dimensional irreducible highest-weight modules with exact matrices.

The construction is the classical one: a degree-truncated Verma module
spanned by ordered monomials in the lowering operators, with the maximal
submodule cut out weight space by weight space as the radical of the
contravariant pairing against raising monomials.  The engine is generic
over any "triangular" algebra (a reductive algebra with a chosen Cartan,
positive root vectors and lowering vectors), so the same code builds
modules for a semisimple Lie algebra and for the derived algebra of a
symmetric subalgebra.

Weights are tuples of exact scalars: entry j is the value on the j-th
Cartan basis element of the triangular data.
"""

from __future__ import annotations

import os

from .errors import IdentityViolation, NotDominant, ResourceLimit
from .linalg import (LinearSolver, SpMat, rref, vec_axpy)
from .scalars import ONE, ZERO, qq

DEFAULT_DIM_CAP = 5000


def dim_cap(explicit=None):
    if explicit is not None:
        return explicit
    env = os.environ.get("BRANCHLAB_DIM_CAP")
    if env:
        return int(env)
    return DEFAULT_DIM_CAP


def wadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def wsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def wneg(a):
    return tuple(-x for x in a)


def wzero(n):
    return tuple(ZERO for _ in range(n))


class TriangularData:
    """A reductive Lie algebra presented with a triangular decomposition.

    Basis indexing: 0..npos-1 raising vectors (one per positive root, in
    a fixed order of nondecreasing height), npos..npos+cartan_dim-1 the
    Cartan basis, then the lowering vectors mirroring the raising order.

    pos_roots[k] is the k-th positive root as a weight tuple (its values
    on the Cartan basis); simple_coroots[s] gives the coroot of the s-th
    simple root in Cartan coordinates; cartan_gram is the Gram matrix of
    an invariant form on the Cartan (the trace form), used to transport
    the form to weight space.
    """

    def __init__(self, npos, cartan_dim, pos_roots, heights, simple_idx,
                 simple_coroots, bracket, cartan_gram):
        self.npos = npos
        self.cartan_dim = cartan_dim
        self.dim = 2 * npos + cartan_dim
        self.pos_roots = [tuple(qq(x) for x in r) for r in pos_roots]
        self.heights = [qq(h) for h in heights]
        self.simple_idx = list(simple_idx)
        self.simple_coroots = [tuple(qq(x) for x in c) for c in simple_coroots]
        self.bracket = bracket
        self.cartan_gram = [[qq(x) for x in row] for row in cartan_gram]
        self._gram_solver = None
        self._simple_solver = None
        self.rho = self._half_sum()

    # -- index helpers ------------------------------------------------------

    def e_index(self, k):
        return k

    def h_index(self, j):
        return self.npos + j

    def f_index(self, k):
        return self.npos + self.cartan_dim + k

    def weight_of_basis(self, idx):
        if idx < self.npos:
            return self.pos_roots[idx]
        if idx < self.npos + self.cartan_dim:
            return wzero(self.cartan_dim)
        return wneg(self.pos_roots[idx - self.npos - self.cartan_dim])

    # -- weight geometry ------------------------------------------------------

    def _half_sum(self):
        acc = wzero(self.cartan_dim)
        for r in self.pos_roots:
            acc = wadd(acc, r)
        half = qq(1) / qq(2)
        return tuple(x * half for x in acc)

    def pair_coroot(self, weight, s):
        """Value of a weight on the coroot of the s-th simple root."""
        co = self.simple_coroots[s]
        acc = ZERO
        for x, c in zip(weight, co):
            if c:
                acc = acc + x * c
        return acc

    def form(self, mu, nu):
        """Invariant form on weight space, via the Cartan Gram matrix."""
        if self._gram_solver is None:
            n = self.cartan_dim
            cols = [{i: self.cartan_gram[i][j] for i in range(n)
                     if self.cartan_gram[i][j]} for j in range(n)]
            self._gram_solver = LinearSolver(cols, n)
        x = self._gram_solver.solve(
            {i: v for i, v in enumerate(nu) if v})
        acc = ZERO
        for i, v in x.items():
            if mu[i]:
                acc = acc + mu[i] * v
        return acc

    def simple_coeffs(self, diff):
        """Coordinates of a root-lattice element over the simple roots."""
        if self._simple_solver is None:
            cols = [{i: v for i, v in enumerate(self.pos_roots[s]) if v}
                    for s in self.simple_idx]
            self._simple_solver = LinearSolver(cols, self.cartan_dim)
        sol = self._simple_solver.solve(
            {i: v for i, v in enumerate(diff) if v}, check=True)
        if sol is None:
            return None
        return tuple(sol.get(s, ZERO) for s in range(len(self.simple_idx)))

    def level(self, diff):
        """Height of a root-lattice element (sum of simple coordinates)."""
        coeffs = self.simple_coeffs(diff)
        if coeffs is None:
            return None
        acc = ZERO
        for c in coeffs:
            acc = acc + c
        return acc

    def reflect(self, weight, s):
        c = self.pair_coroot(weight, s)
        if not c:
            return tuple(weight)
        root = self.pos_roots[self.simple_idx[s]]
        return tuple(w - c * r for w, r in zip(weight, root))

    def is_dominant_integral(self, weight):
        for s in range(len(self.simple_idx)):
            v = self.pair_coroot(weight, s)
            if not v.is_integer() or v.re < 0:
                return False
        return True

    def dominant_conjugate(self, weight):
        w = tuple(weight)
        moved = True
        while moved:
            moved = False
            for s in range(len(self.simple_idx)):
                if self.pair_coroot(w, s).re < 0:
                    w = self.reflect(w, s)
                    moved = True
        return w

    def weyl_orbit(self, weight):
        start = tuple(weight)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for w in frontier:
                for s in range(len(self.simple_idx)):
                    w2 = self.reflect(w, s)
                    if w2 not in seen:
                        seen.add(w2)
                        nxt.append(w2)
            frontier = nxt
        return seen

    # -- dimension and multiplicities -----------------------------------------

    def weyl_dim(self, lam):
        num = ONE
        den = ONE
        for r in self.pos_roots:
            num = num * self.form(wadd(lam, self.rho), r)
            den = den * self.form(self.rho, r)
        val = num / den
        if not val.is_integer():
            raise IdentityViolation("Weyl dimension is not an integer")
        return int(val.re)

    def dominant_weights(self, lam):
        """Dominant weights below lam in the root-lattice cone."""
        lam = tuple(qq(x) for x in lam)
        seen = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for w in frontier:
                for r in self.pos_roots:
                    w2 = wsub(w, r)
                    if w2 in seen:
                        continue
                    if self.is_dominant_integral(w2):
                        seen.add(w2)
                        nxt.append(w2)
            frontier = nxt
        return seen

    def freudenthal(self, lam):
        """Weight multiplicities of the irreducible module, full map."""
        lam = tuple(qq(x) for x in lam)
        if not self.is_dominant_integral(lam):
            raise NotDominant("highest weight must be dominant integral")
        dom = sorted(self.dominant_weights(lam),
                     key=lambda w: tuple(x.sort_key() for x in w),
                     reverse=True)
        # order by decreasing level of lam - mu so dependencies come first
        dom.sort(key=lambda w: self.level(wsub(lam, w)).re)
        mult = {lam: 1}
        norm_top = self.form(wadd(lam, self.rho), wadd(lam, self.rho))
        for mu in dom:
            if mu == lam:
                continue
            acc = ZERO
            for r in self.pos_roots:
                k = 1
                while True:
                    up = wadd(mu, tuple(x * k for x in r))
                    m = mult.get(self.dominant_conjugate(up), 0)
                    if m == 0:
                        break
                    acc = acc + qq(2 * m) * self.form(up, r)
                    k += 1
            denom = norm_top - self.form(wadd(mu, self.rho),
                                         wadd(mu, self.rho))
            if not denom:
                if acc:
                    raise IdentityViolation("degenerate Freudenthal step")
                continue
            v = acc / denom
            if not v.is_integer():
                raise IdentityViolation("non-integer weight multiplicity")
            if int(v.re):
                mult[mu] = int(v.re)
        full = {}
        for mu, m in mult.items():
            for w in self.weyl_orbit(mu):
                full[w] = m
        return full


# ---------------------------------------------------------------------------
# the Verma engine
# ---------------------------------------------------------------------------

class VermaEngine:
    """Left action of the algebra on a truncated Verma module.

    Monomials are exponent tuples over the ordered positive roots and
    stand for the corresponding product of lowering operators applied to
    the highest vector.
    """

    def __init__(self, tri: TriangularData, lam):
        self.tri = tri
        self.lam = tuple(qq(x) for x in lam)
        self._act_memo = {}
        self._lmul_memo = {}
        self._unit = tuple(0 for _ in range(tri.npos))

    def lmul_f(self, j, mono):
        """Lowering generator j times a monomial, as a monomial combination."""
        lead = next((idx for idx, a in enumerate(mono) if a), None)
        if lead is None or j <= lead:
            out = list(mono)
            out[j] += 1
            return {tuple(out): ONE}
        key = (j, mono)
        got = self._lmul_memo.get(key)
        if got is not None:
            return got
        rest = list(mono)
        rest[lead] -= 1
        rest = tuple(rest)
        out = {}
        for m, c in self.lmul_f(j, rest).items():
            for m2, c2 in self.lmul_f(lead, m).items():
                _acc(out, m2, c * c2)
        br = self.tri.bracket(self.tri.f_index(j), self.tri.f_index(lead))
        if br:
            for idx, c in br.items():
                k = idx - self.tri.npos - self.tri.cartan_dim
                if k < 0:
                    raise IdentityViolation(
                        "lowering bracket left the lowering algebra")
                for m2, c2 in self.lmul_f(k, rest).items():
                    _acc(out, m2, c * c2)
        out = {m: c for m, c in out.items() if c}
        self._lmul_memo[key] = out
        return out

    def act(self, idx, mono):
        """Basis element idx applied to a monomial; sparse combination."""
        lead = next((k for k, a in enumerate(mono) if a), None)
        if lead is None:
            npos, cd = self.tri.npos, self.tri.cartan_dim
            if idx < npos:
                return {}
            if idx < npos + cd:
                v = self.lam[idx - npos]
                return {mono: v} if v else {}
            out = list(mono)
            out[idx - npos - cd] += 1
            return {tuple(out): ONE}
        key = (idx, mono)
        got = self._act_memo.get(key)
        if got is not None:
            return got
        rest = list(mono)
        rest[lead] -= 1
        rest = tuple(rest)
        out = {}
        for m, c in self.act(idx, rest).items():
            for m2, c2 in self.lmul_f(lead, m).items():
                _acc(out, m2, c * c2)
        br = self.tri.bracket(idx, self.tri.f_index(lead))
        for idx2, c in br.items():
            for m2, c2 in self.act(idx2, rest).items():
                _acc(out, m2, c * c2)
        out = {m: c for m, c in out.items() if c}
        self._act_memo[key] = out
        return out

    def mono_weight(self, mono):
        w = self.lam
        for k, a in enumerate(mono):
            if a:
                w = wsub(w, tuple(x * a for x in self.tri.pos_roots[k]))
        return w


def _acc(d, k, v):
    w = d.get(k)
    if w is None:
        d[k] = v
    else:
        d[k] = w + v


class HWModule:
    """An irreducible highest-weight module with exact operator matrices."""

    def __init__(self, tri: TriangularData, lam, cap=None):
        lam = tuple(qq(x) for x in lam)
        if not tri.is_dominant_integral(lam):
            raise NotDominant("highest weight %s is not dominant integral"
                              % (tuple(str(x) for x in lam),))
        self.tri = tri
        self.lam = lam
        self.weyl_dim = tri.weyl_dim(lam)
        cap = dim_cap(cap)
        if self.weyl_dim > cap:
            raise ResourceLimit(
                "module dimension %d exceeds cap %d" % (self.weyl_dim, cap))
        self.engine = VermaEngine(tri, lam)
        self.multiplicities = tri.freudenthal(lam)
        self._mono_memo = {}
        self._pairing_memo = {}
        self._build()

    # -- Verma combinatorics -------------------------------------------------

    def monomials_at(self, mu):
        """Exponent tuples with lam - (monomial weight) = lam - mu."""
        key = tuple(mu)
        got = self._mono_memo.get(key)
        if got is not None:
            return got
        tri = self.tri
        diff = wsub(self.lam, key)
        coeffs = tri.simple_coeffs(diff)
        out = []
        if coeffs is not None and all(
                c.is_integer() and c.re >= 0 for c in coeffs):
            level = sum(int(c.re) for c in coeffs)
            expo = [0] * tri.npos

            def descend(pos, rem, rem_level):
                if rem_level == 0:
                    if all(not x for x in rem):
                        out.append(tuple(expo))
                    return
                if pos >= tri.npos:
                    return
                root = tri.pos_roots[pos]
                h = int(tri.heights[pos].re)
                cur = rem
                for a in range(rem_level // h + 1):
                    if a:
                        cur = wsub(cur, root)
                    expo[pos] = a
                    descend(pos + 1, cur, rem_level - a * h)
                expo[pos] = 0

            descend(0, diff, level)
        out.sort()
        self._mono_memo[key] = out
        return out

    def pairing(self, mu):
        """Matrix of <raising monomial a, lowering monomial b> at weight mu.

        Entry [a][b] is the coefficient of the highest vector in
        e^a f^b v, computed by peeling one raising factor and reusing the
        pairing one weight higher.
        """
        key = tuple(mu)
        got = self._pairing_memo.get(key)
        if got is not None:
            return got
        monos = self.monomials_at(key)
        if key == self.lam:
            unit = self.engine._unit
            table = {unit: {unit: ONE}}
            self._pairing_memo[key] = table
            return table
        table = {}
        lifted = {}  # leading raising index -> {col mono: {upper mono: c}}
        for a in monos:
            k = next(idx for idx, x in enumerate(a) if x)
            up_key = wadd(key, self.tri.pos_roots[k])
            upper = self.pairing(up_key)
            if k not in lifted:
                lifts = {}
                for b in monos:
                    lifts[b] = self.engine.act(self.tri.e_index(k), b)
                lifted[k] = lifts
            a_rest = list(a)
            a_rest[k] -= 1
            a_rest = tuple(a_rest)
            row_upper = upper.get(a_rest, {})
            row = {}
            for b in monos:
                acc = ZERO
                for m, c in lifted[k][b].items():
                    v = row_upper.get(m)
                    if v is not None:
                        acc = acc + c * v
                if acc:
                    row[b] = acc
            table[a] = row
        self._pairing_memo[key] = table
        return table

    # -- assembly -------------------------------------------------------------

    def _build(self):
        tri = self.tri
        weights = sorted(
            self.multiplicities,
            key=lambda w: (self.tri.level(wsub(self.lam, w)).re,
                           tuple(x.sort_key() for x in w)))
        self.weights = weights
        self.weight_offset = {}
        self.basis_monos = []      # (weight, monomial) per global index
        self.weight_basis = {}     # weight -> list of basis monomials
        self._coord = {}           # weight -> (row monos, solver)
        offset = 0
        for mu in weights:
            monos = self.monomials_at(mu)
            table = self.pairing(mu)
            index_of = {b: i for i, b in enumerate(monos)}
            rows = []
            for a in monos:
                row = table.get(a, {})
                rows.append({index_of[b]: v for b, v in row.items()})
            pivcols, reduced = rref(rows)
            mult = self.multiplicities[mu]
            if len(pivcols) != mult:
                raise IdentityViolation(
                    "contravariant pairing rank %d != multiplicity %d at a "
                    "weight space" % (len(pivcols), mult))
            # a maximal independent set of row functionals
            echelon = {}
            chosen_rows = []
            for a in monos:
                vec = {index_of[b]: v
                       for b, v in table.get(a, {}).items() if v}
                r = dict(vec)
                while r:
                    c = min(r)
                    p = echelon.get(c)
                    if p is None:
                        lead = r[c]
                        if lead != ONE:
                            inv = ONE / lead
                            r = {k: v * inv for k, v in r.items()}
                        echelon[c] = r
                        chosen_rows.append(a)
                        break
                    coef = r.pop(c)
                    vec_axpy(r, p, -coef)
                    r.pop(c, None)
                if len(chosen_rows) == mult:
                    break
            basis_cols = [monos[c] for c in pivcols]
            # coordinates: solve P[R, C] x = (pairings of rows R against v)
            col_vectors = []
            for b in basis_cols:
                col_vectors.append({
                    i: table[a].get(b, ZERO)
                    for i, a in enumerate(chosen_rows)
                    if table[a].get(b)})
            solver = LinearSolver(col_vectors, len(chosen_rows))
            self._coord[mu] = (chosen_rows, solver)
            self.weight_offset[mu] = offset
            self.weight_basis[mu] = basis_cols
            for b in basis_cols:
                self.basis_monos.append((mu, b))
            offset += mult
        self.dim = offset
        if self.dim != self.weyl_dim:
            raise IdentityViolation(
                "weight multiplicities sum to %d, Weyl dimension is %d"
                % (self.dim, self.weyl_dim))
        self.highest_index = self.weight_offset[self.lam]
        self.action = [self._action_matrix(i) for i in range(tri.dim)]
        # the engine memos are only needed during assembly
        self.engine._act_memo.clear()
        self.engine._lmul_memo.clear()
        self._pairing_memo.clear()
        self._coord.clear()

    def coords_at(self, mu, verma_vec):
        """Coordinates of the class of a Verma vector at module weight mu."""
        chosen_rows, solver = self._coord[mu]
        table = self.pairing(tuple(mu))
        target = {}
        for i, a in enumerate(chosen_rows):
            row = table.get(a, {})
            acc = ZERO
            for m, c in verma_vec.items():
                v = row.get(m)
                if v is not None:
                    acc = acc + c * v
            if acc:
                target[i] = acc
        return solver.solve(target)

    def _action_matrix(self, idx):
        tri = self.tri
        shift = tri.weight_of_basis(idx)
        mat = SpMat(self.dim, self.dim)
        for col, (mu, mono) in enumerate(self.basis_monos):
            img = self.engine.act(idx, mono)
            if not img:
                continue
            target = wadd(mu, shift)
            if target not in self.weight_offset:
                continue  # class is zero: quotient has no such weight space
            coeffs = self.coords_at(target, img)
            off = self.weight_offset[target]
            for j, v in coeffs.items():
                mat.cols[col][off + j] = v
        return mat

    # -- public surface --------------------------------------------------------

    def matrix_of(self, vec):
        """Action matrix of a sparse algebra element."""
        out = SpMat(self.dim, self.dim)
        for idx, c in vec.items():
            for j, col in enumerate(self.action[idx].cols):
                if col:
                    vec_axpy(out.cols[j], col, c)
        return out

    def highest_vector(self):
        return {self.highest_index: ONE}

    def weight_spaces(self):
        return {mu: list(range(self.weight_offset[mu],
                               self.weight_offset[mu]
                               + len(self.weight_basis[mu])))
                for mu in self.weights}

    def weight_of_index(self, i):
        return self.basis_monos[i][0]


def build_irrep(g, lam, cap=None) -> HWModule:
    """Irreducible g-module of the given dominant integral highest weight."""
    tri = g.triangular() if hasattr(g, "triangular") else g
    return HWModule(tri, lam, cap=cap)


def weight_multiplicities(g, lam):
    """Map weight -> multiplicity for the irreducible of highest weight lam."""
    tri = g.triangular() if hasattr(g, "triangular") else g
    return tri.freudenthal(tuple(qq(x) for x in lam))


def verify_prv_annihilation(module: HWModule):
    """Check the sl2-string facts for the highest vector, simple root by root.

    For each simple root: the (n_i+1)-st power of the lowering generator
    kills the highest vector and the n_i-th power does not.
    """
    tri = module.tri
    v = module.highest_vector()
    report = {}
    for s, k in enumerate(tri.simple_idx):
        n = tri.pair_coroot(module.lam, s)
        if not n.is_integer():
            raise IdentityViolation("non-integral highest weight")
        n = int(n.re)
        fmat = module.action[tri.f_index(k)]
        cur = dict(v)
        for _ in range(n):
            cur = fmat.apply(cur)
        if not cur:
            raise IdentityViolation(
                "lowering power %d already kills the highest vector at "
                "simple root %d" % (n, s))
        nxt = fmat.apply(cur)
        if nxt:
            raise IdentityViolation(
                "lowering power %d fails to kill the highest vector at "
                "simple root %d" % (n + 1, s))
        report[s] = n
    return report
