"""Complex semisimple Lie algebras in a Chevalley basis.

The basis is {e_phi : phi a root} together with the simple coroots
{h_1..h_l}; all structure constants are integers.  Signs are fixed by a
deterministic choice of extraspecial pairs (the minimal decomposition of
each positive root gets a positive constant), so repeated builds give
identical constants.  Algebra elements are sparse coordinate vectors
{basis index: GQ}.
"""

from __future__ import annotations

from .linalg import SpMat, vec_axpy
from .rootsys import RootSystem
from .scalars import ONE, ZERO, qq


def trace_form(dim, ad_matrices):
    """Gram matrix of the trace form B(x,y) = tr(ad x ad y)."""
    gram = [[ZERO] * dim for _ in range(dim)]
    for i in range(dim):
        ai = ad_matrices[i]
        for j in range(i, dim):
            aj = ad_matrices[j]
            acc = ZERO
            for col, entries in enumerate(aj.cols):
                for row, v in entries.items():
                    w = ai.cols[row].get(col)
                    if w is not None:
                        acc = acc + v * w
            gram[i][j] = acc
            gram[j][i] = acc
    return gram


class LieAlgebra:
    """Chevalley-basis realization attached to a RootSystem.

    Basis order: raising vectors for the positive roots (by height, then
    lexicographically), the simple coroots, then lowering vectors in the
    mirrored order.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.npos = len(rs.positive_roots)
        self.rank = rs.rank
        self.dim = 2 * self.npos + self.rank
        self.pos_index = {r: k for k, r in enumerate(rs.positive_roots)}
        self._nconst_table = {}
        self._build_special_constants()
        self._brackets = {}
        self._build_bracket_table()
        self._ad = [self._ad_matrix(i) for i in range(self.dim)]
        self._killing = trace_form(self.dim, self._ad)

    # -- basis bookkeeping --------------------------------------------------

    def e_index(self, root):
        root = tuple(root)
        if sum(root) > 0:
            return self.pos_index[root]
        neg = tuple(-c for c in root)
        return self.npos + self.rank + self.pos_index[neg]

    def h_index(self, i):
        return self.npos + i

    def root_of_index(self, idx):
        """Root of a basis index, or None for Cartan elements."""
        if idx < self.npos:
            return self.rs.positive_roots[idx]
        if idx < self.npos + self.rank:
            return None
        neg = self.rs.positive_roots[idx - self.npos - self.rank]
        return tuple(-c for c in neg)

    def basis_weight(self, idx):
        """Weight of a basis vector in fundamental coordinates."""
        root = self.root_of_index(idx)
        if root is None:
            return tuple(ZERO for _ in range(self.rank))
        return self.rs.root_to_weight(root)

    def coroot_vector(self, root):
        """h_phi as a sparse element of the algebra."""
        coords = self.rs.coroot_of_root(root)
        return {self.h_index(i): c for i, c in enumerate(coords) if c}

    # -- structure constants -------------------------------------------------

    def _string_down(self, alpha, beta):
        """Largest p with beta - p*alpha a root."""
        p = 0
        cur = tuple(b - a for a, b in zip(alpha, beta))
        while self.rs.is_root(cur):
            p += 1
            cur = tuple(c - a for a, c in zip(alpha, cur))
        return p

    def _build_special_constants(self):
        """Constants N[a,b] for ordered pairs of positive roots, by height."""
        rs = self.rs
        order = {r: k for k, r in enumerate(rs.positive_roots)}
        for gamma in rs.positive_roots:
            if sum(gamma) < 2:
                continue
            pairs = []
            for a in rs.positive_roots:
                b = tuple(g - x for x, g in zip(a, gamma))
                if sum(b) > 0 and rs.is_root(b) and order[a] < order[b]:
                    pairs.append((a, b))
            pairs.sort(key=lambda ab: order[ab[0]])
            a1, b1 = pairs[0]
            self._nconst_table[(a1, b1)] = qq(self._string_down(a1, b1) + 1)
            for a, b in pairs[1:]:
                # Jacobi identity on (e_{b1}, e_{-a}, e_{-b}), coefficient of
                # the lowering vector for a1, determines the new constant.
                t = ZERO
                d1 = tuple(x - y for x, y in zip(b1, a))
                if rs.is_root(d1):
                    t = t + self.nconst(b1, tuple(-c for c in a)) * \
                        self.nconst(d1, tuple(-c for c in b))
                d2 = tuple(x - y for x, y in zip(b1, b))
                if rs.is_root(d2):
                    t = t + self.nconst(tuple(-c for c in b), b1) * \
                        self.nconst(d2, tuple(-c for c in a))
                c = self.nconst(tuple(-g for g in gamma), b1)
                n_negneg = -t / c
                val = -n_negneg
                if not val.is_integer():
                    raise ArithmeticError(
                        "non-integer structure constant for %s + %s" % (a, b))
                self._nconst_table[(a, b)] = val

    def nconst(self, phi, psi):
        """Constant N with [e_phi, e_psi] = N e_{phi+psi}, roots phi, psi."""
        rs = self.rs
        total = tuple(x + y for x, y in zip(phi, psi))
        if not rs.is_root(total):
            return ZERO
        key = (phi, psi)
        got = self._nconst_table.get(key)
        if got is not None:
            return got
        pos_phi = sum(phi) > 0
        pos_psi = sum(psi) > 0
        if pos_phi and pos_psi:
            val = -self._nconst_table[(psi, phi)]
        elif not pos_phi and not pos_psi:
            val = -self.nconst(tuple(-c for c in phi), tuple(-c for c in psi))
        elif not pos_phi:
            val = -self.nconst(psi, phi)
        else:
            # phi > 0 > psi: rotate the triple (phi, psi, -phi-psi) with the
            # Killing-invariance identity until both arguments share a sign
            neg_total = tuple(-c for c in total)
            if sum(total) > 0:
                val = self.nconst(psi, neg_total) * rs.form(total, total) \
                    / rs.form(phi, phi)
            else:
                val = self.nconst(neg_total, phi) * rs.form(total, total) \
                    / rs.form(psi, psi)
        self._nconst_table[key] = val
        return val

    def _build_bracket_table(self):
        rs = self.rs
        roots = rs.roots
        for phi in roots:
            i = self.e_index(phi)
            # [h_j, e_phi]
            for j in range(self.rank):
                v = rs.pairing_root(phi, j)
                if v:
                    self._set_bracket(self.h_index(j), i, {i: qq(v)})
            for psi in roots:
                j = self.e_index(psi)
                if i >= j:
                    continue
                total = tuple(x + y for x, y in zip(phi, psi))
                if all(c == 0 for c in total):
                    pos = phi if sum(phi) > 0 else psi
                    h = self.coroot_vector(pos)
                    if sum(phi) > 0:
                        self._set_bracket(i, j, dict(h))
                    else:
                        self._set_bracket(i, j, {k: -v for k, v in h.items()})
                elif rs.is_root(total):
                    n = self.nconst(phi, psi)
                    self._set_bracket(i, j, {self.e_index(total): n})

    def _set_bracket(self, i, j, value):
        value = {k: v for k, v in value.items() if v}
        if not value:
            return
        if i < j:
            self._brackets[(i, j)] = value
        elif i > j:
            self._brackets[(j, i)] = {k: -v for k, v in value.items()}

    def bracket_basis(self, i, j):
        """[x_i, x_j] for basis indices, as a sparse vector."""
        if i == j:
            return {}
        if i < j:
            return self._brackets.get((i, j), {})
        got = self._brackets.get((j, i))
        if not got:
            return {}
        return {k: -v for k, v in got.items()}

    def bracket(self, x, y):
        """Bilinear bracket of sparse algebra elements."""
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                br = self.bracket_basis(i, j)
                if br:
                    vec_axpy(out, br, a * b)
        return out

    def _ad_matrix(self, i):
        cols = []
        for j in range(self.dim):
            cols.append(self.bracket_basis(i, j))
        return SpMat(self.dim, self.dim, cols)

    def ad(self, x):
        """Adjoint action matrix of a sparse element."""
        out = SpMat(self.dim, self.dim)
        for i, c in x.items():
            for j, col in enumerate(self._ad[i].cols):
                if col:
                    vec_axpy(out.cols[j], col, c)
        return out

    # -- Killing form --------------------------------------------------------

    def killing_basis(self, i, j):
        return self._killing[i][j]

    def killing(self, x, y):
        acc = ZERO
        for i, a in x.items():
            row = self._killing[i]
            for j, b in y.items():
                v = row[j]
                if v:
                    acc = acc + a * b * v
        return acc

    # -- bridge to module construction ----------------------------------------

    def triangular(self):
        """Triangular data consumed by the highest-weight module engine."""
        from .hwmodule import TriangularData
        rs = self.rs
        pos_roots = [rs.root_to_weight(r) for r in rs.positive_roots]
        heights = [qq(sum(r)) for r in rs.positive_roots]
        simple_idx = []
        simple_coroots = []
        for i in range(self.rank):
            simple = tuple(1 if k == i else 0 for k in range(self.rank))
            simple_idx.append(self.pos_index[simple])
            simple_coroots.append(tuple(
                ONE if k == i else ZERO for k in range(self.rank)))

        def bracket(i, j, _self=self):
            return _self.bracket_basis(i, j)

        gram = [[self._killing[self.h_index(i)][self.h_index(j)]
                 for j in range(self.rank)] for i in range(self.rank)]
        return TriangularData(
            npos=self.npos,
            cartan_dim=self.rank,
            pos_roots=pos_roots,
            heights=heights,
            simple_idx=simple_idx,
            simple_coroots=simple_coroots,
            bracket=bracket,
            cartan_gram=gram,
        )


def build_lie_algebra(rs: RootSystem) -> LieAlgebra:
    return LieAlgebra(rs)


def killing_form(g: LieAlgebra, x, y):
    """Killing form of two sparse algebra elements."""
    return g.killing(x, y)
