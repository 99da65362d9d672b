"""Sparse exact linear algebra over Gaussian rationals.

Vectors are dicts {index: GQ} holding only nonzero entries; matrices store
sparse columns.  Everything here is elimination-based and exact — no
pivoting heuristics beyond sparsity, no floating point anywhere.
"""

from __future__ import annotations

from .scalars import ONE, ZERO, qq

Vec = dict


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------

def vec_axpy(dst, src, c):
    """dst += c*src in place, dropping entries that cancel."""
    if not c:
        return dst
    for k, v in src.items():
        w = dst.get(k)
        if w is None:
            dst[k] = c * v
        else:
            w = w + c * v
            if w:
                dst[k] = w
            else:
                del dst[k]
    return dst


def vec_scale(v, c):
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vec_dot(a, b):
    """Plain (non-conjugated) dot product."""
    if len(a) > len(b):
        a, b = b, a
    s = ZERO
    for k, x in a.items():
        y = b.get(k)
        if y is not None:
            s = s + x * y
    return s


def vec_sub(a, b):
    out = dict(a)
    vec_axpy(out, b, -ONE)
    return out


def vec_eq(a, b):
    return not vec_sub(a, b)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class SpMat:
    """Sparse matrix stored column-major: cols[j] = {i: entry}."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows, ncols, cols=None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols if cols is not None else [{} for _ in range(ncols)]

    @classmethod
    def identity(cls, n):
        return cls(n, n, [{i: ONE} for i in range(n)])

    @classmethod
    def from_entries(cls, nrows, ncols, entries):
        m = cls(nrows, ncols)
        for i, j, v in entries:
            if v:
                m.cols[j][i] = qq(v)
        return m

    @classmethod
    def from_columns(cls, nrows, columns):
        return cls(nrows, len(columns), [dict(c) for c in columns])

    def entry(self, i, j):
        return self.cols[j].get(i, ZERO)

    def set_entry(self, i, j, v):
        if v:
            self.cols[j][i] = v
        else:
            self.cols[j].pop(i, None)

    def apply(self, vec):
        """Matrix times coordinate vector."""
        out = {}
        for j, x in vec.items():
            col = self.cols[j]
            if col:
                vec_axpy(out, col, x)
        return out

    def matmul(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        return SpMat(self.nrows, other.ncols,
                     [self.apply(c) for c in other.cols])

    def add(self, other):
        cols = [dict(c) for c in self.cols]
        for j, c in enumerate(other.cols):
            vec_axpy(cols[j], c, ONE)
        return SpMat(self.nrows, self.ncols, cols)

    def scale(self, c):
        return SpMat(self.nrows, self.ncols,
                     [vec_scale(col, c) for col in self.cols])

    def sub(self, other):
        return self.add(other.scale(-ONE))

    def shift(self, c):
        """self - c*I."""
        out = SpMat(self.nrows, self.ncols, [dict(col) for col in self.cols])
        for j in range(min(self.nrows, self.ncols)):
            out.set_entry(j, j, out.entry(j, j) - c)
        return out

    def rows(self):
        rows = [dict() for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def transpose(self):
        return SpMat(self.ncols, self.nrows, self.rows())

    def is_zero(self):
        return all(not c for c in self.cols)

    def nnz(self):
        return sum(len(c) for c in self.cols)

    def __eq__(self, other):
        return (isinstance(other, SpMat) and self.nrows == other.nrows
                and self.ncols == other.ncols
                and all(vec_eq(a, b) for a, b in zip(self.cols, other.cols)))

    def __hash__(self):  # pragma: no cover - matrices used as values only
        raise TypeError("SpMat is unhashable")

    def commutator(self, other):
        return self.matmul(other).sub(other.matmul(self))


def apply_poly(mat, coeffs, vec):
    """Evaluate (sum_k coeffs[k] * mat**k) applied to vec, by Horner."""
    out = {}
    for c in reversed(coeffs):
        out = mat.apply(out)
        if c:
            vec_axpy(out, vec, c)
    return out


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------

def rref(rows):
    """Reduced row echelon form of a list of sparse rows.

    Returns (pivots, reduced) where pivots is the sorted list of pivot
    column indices and reduced the corresponding normalized rows (one per
    pivot, fully back-substituted).  Input rows are not modified.
    """
    piv = {}  # col -> row dict with leading 1 at col
    for row in rows:
        r = dict(row)
        while r:
            c = min(r)
            p = piv.get(c)
            if p is None:
                lead = r.pop(c)
                if len(r) and lead != ONE:
                    inv = ONE / lead
                    r = {k: v * inv for k, v in r.items()}
                r[c] = ONE
                piv[c] = r
                break
            neg = -r.pop(c)
            for k, v in p.items():
                if k == c:
                    continue
                w = r.get(k)
                if w is None:
                    r[k] = neg * v
                else:
                    w = w + neg * v
                    if w:
                        r[k] = w
                    else:
                        del r[k]
    cols = sorted(piv)
    # back substitution for full reduction
    for idx in range(len(cols) - 1, -1, -1):
        c = cols[idx]
        row = piv[c]
        for c2 in [k for k in row if k != c and k in piv]:
            vec_axpy(row, piv[c2], -row[c2])
            row.pop(c2, None)
        row[c] = ONE
    return cols, [piv[c] for c in cols]


def shifted_rows(mat, c):
    """Rows of mat - c*I, built in one pass."""
    rows = [dict() for _ in range(mat.nrows)]
    for j, col in enumerate(mat.cols):
        for i, v in col.items():
            rows[i][j] = v
    for j in range(min(mat.nrows, mat.ncols)):
        r = rows[j]
        w = r.get(j, ZERO) - c
        if w:
            r[j] = w
        else:
            r.pop(j, None)
    return rows


def rank(rows):
    return len(rref(rows)[0])


def nullspace(rows, ncols):
    """Basis of {x : row . x = 0 for every row}, as sparse vectors."""
    pivots, reduced = rref(rows)
    pivset = set(pivots)
    basis = []
    lookup = dict(zip(pivots, reduced))
    for f in range(ncols):
        if f in pivset:
            continue
        v = {f: ONE}
        for p in pivots:
            coef = lookup[p].get(f)
            if coef:
                v[p] = -coef
        basis.append(v)
    return basis


def kernel_of_operators(mats, dim):
    """Joint kernel of a family of operators on coordinate space of dim."""
    rows = []
    for m in mats:
        rows.extend(r for r in m.rows() if r)
    return nullspace(rows, dim)


class LinearSolver:
    """Solves  sum_j c_j * basis[j] = target  for c, given fixed basis.

    The basis vectors must be linearly independent.  Build cost is one
    elimination; each solve is a sparse substitution.
    """

    def __init__(self, basis, nrows):
        self.k = len(basis)
        self.nrows = nrows
        # equations: for each coordinate i, sum_j basis[j][i] c_j = t_i.
        # Augment with symbolic right-hand side slots k + i.
        eq = {}
        for j, b in enumerate(basis):
            for i, v in b.items():
                eq.setdefault(i, {})[j] = v
        rows = []
        for i, r in eq.items():
            r = dict(r)
            r[self.k + i] = ONE
            rows.append(r)
        self.covered = set(eq)
        pivots, reduced = rref(rows)
        self.expr = {}       # var j -> {i: coeff} meaning c_j = sum coeff*t_i
        self.consistency = []  # rows with no variable part: sum coeff*t_i = 0
        for p, row in zip(pivots, reduced):
            rhs = {c - self.k: -v for c, v in row.items() if c >= self.k}
            if p < self.k:
                self.expr[p] = {i: -v for i, v in rhs.items()}
            else:
                self.consistency.append(rhs)
        if len(self.expr) != self.k:
            raise ValueError("basis vectors are linearly dependent")

    def solve(self, target, check=False):
        out = {}
        for j, row in self.expr.items():
            c = vec_dot(row, target)
            if c:
                out[j] = c
        if check:
            for i, v in target.items():
                if v and i not in self.covered:
                    return None
            for row in self.consistency:
                if vec_dot(row, target):
                    return None
        return out


def in_span(basis, vec, nrows):
    """Coefficients expressing vec in the span of basis, or None."""
    if not vec:
        return {}
    try:
        solver = LinearSolver(basis, nrows)
    except ValueError:
        raise ValueError("in_span requires an independent basis")
    sol = solver.solve(vec, check=True)
    return sol


def span_closure(mats, seeds, dim):
    """Basis of the smallest subspace containing seeds, stable under mats."""
    echelon = {}
    basis = []
    queue = [dict(s) for s in seeds]
    while queue:
        r = queue.pop()
        while r:
            c = min(r)
            p = echelon.get(c)
            if p is None:
                lead = r[c]
                if lead != ONE:
                    inv = ONE / lead
                    r = {k: v * inv for k, v in r.items()}
                echelon[c] = r
                basis.append(r)
                queue.extend(m.apply(r) for m in mats)
                break
            vec_axpy(r, p, -r[c])
            r.pop(c, None)
    return basis


def column_space_echelon(mats):
    """Echelon rows spanning the union of the column spaces."""
    echelon = {}
    for m in mats:
        for col in m.cols:
            r = dict(col)
            while r:
                c = min(r)
                p = echelon.get(c)
                if p is None:
                    lead = r[c]
                    if lead != ONE:
                        inv = ONE / lead
                        r = {k: v * inv for k, v in r.items()}
                    echelon[c] = r
                    break
                vec_axpy(r, p, -r[c])
                r.pop(c, None)
    return echelon


def reduces_to_zero(echelon, vec):
    r = dict(vec)
    while r:
        c = min(r)
        p = echelon.get(c)
        if p is None:
            return False
        vec_axpy(r, p, -r[c])
        r.pop(c, None)
    return True


def restrict_operator(mat, basis):
    """Matrix of mat on the span of basis, in basis coordinates.

    The span must be invariant; raises ValueError otherwise.
    """
    solver = LinearSolver(basis, mat.nrows)
    cols = []
    for b in basis:
        img = mat.apply(b)
        sol = solver.solve(img, check=True)
        if sol is None:
            raise ValueError("subspace is not invariant under the operator")
        cols.append(sol)
    return SpMat(len(basis), len(basis), cols)


# ---------------------------------------------------------------------------
# polynomials over GQ (dense coefficient lists, low degree first)
# ---------------------------------------------------------------------------

def pnorm(p):
    while p and not p[-1]:
        p.pop()
    return p


def padd(p, q):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else ZERO
        b = q[i] if i < len(q) else ZERO
        out.append(a + b)
    return pnorm(out)


def pmul(p, q):
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return pnorm(out)


def pdivmod(p, q):
    q = pnorm(list(q))
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quo = [ZERO] * max(0, len(r) - len(q) + 1)
    while len(r) >= len(q) and pnorm(r):
        shift = len(r) - len(q)
        c = r[-1] / q[-1]
        quo[shift] = c
        for i, b in enumerate(q):
            r[shift + i] = r[shift + i] - c * b
        pnorm(r)
    return pnorm(quo), pnorm(r)


def pmonic(p):
    p = pnorm(list(p))
    if p and p[-1] != ONE:
        inv = ONE / p[-1]
        p = [c * inv for c in p]
    return p


def pgcd(p, q):
    p, q = pnorm(list(p)), pnorm(list(q))
    while q:
        p, q = q, pdivmod(p, q)[1]
    return pmonic(p)


def plcm(p, q):
    if not p or not q:
        return []
    g = pgcd(p, q)
    return pmonic(pdivmod(pmul(p, q), g)[0])


def pderiv(p):
    return pnorm([p[i] * i for i in range(1, len(p))])


def peval(p, x):
    out = ZERO
    for c in reversed(p):
        out = out * x + c
    return out


def from_roots(roots):
    p = [ONE]
    for r in roots:
        p = pmul(p, [-qq(r), ONE])
    return p


def is_squarefree(p):
    return len(pgcd(p, pderiv(p))) <= 1


def minimal_polynomial(mat, dim=None, seeds=None):
    """Monic minimal polynomial of a square sparse matrix.

    Krylov iteration per seed vector, combining local annihilators by lcm.
    """
    n = mat.nrows
    if dim is None:
        dim = n
    if seeds is None:
        seeds = [{i: ONE} for i in range(n)]
    minpoly = [ONE]
    # space of already-annihilated seed directions, to skip redundant work
    seen_rows = []
    seen_pivs = {}
    for seed in seeds:
        if len(minpoly) - 1 >= dim:
            break
        v = apply_poly(mat, minpoly, seed)
        if not v:
            continue
        # Krylov chain with coefficient tracking in columns n..n+deg
        chain = []
        w = dict(v)
        deg = 0
        piv = {}
        local = None
        while True:
            aug = dict(w)
            aug[n + deg] = ONE
            r = aug
            while True:
                c = min(r)
                if c >= n:
                    # dependence found: polynomial in augmented part
                    local = [r.get(n + i, ZERO) for i in range(deg + 1)]
                    break
                p = piv.get(c)
                if p is None:
                    lead = r[c]
                    if lead != ONE:
                        inv = ONE / lead
                        r = {k: val * inv for k, val in r.items()}
                    piv[c] = r
                    break
                vec_axpy(r, p, -r[c])
                r.pop(c, None)
            if local is not None:
                break
            chain.append(w)
            w = mat.apply(w)
            deg += 1
        minpoly = plcm(minpoly, pmonic(local))
    return pmonic(minpoly)


def integer_roots(p, cap=10 ** 6):
    """All integer roots of p with multiplicity, by deflation.

    Scans integers of growing magnitude (0, 1, -1, 2, -2, ...), dividing
    out each root found, so the scan never walks a large coefficient
    bound when the polynomial splits over small integers.  Returns
    (sorted roots, remainder_degree); remainder_degree is 0 exactly when
    p splits over the integers within the cap.
    """
    work = pnorm(list(p))
    roots = []
    r = 0
    while len(work) > 1:
        x = qq(r)
        if not peval(work, x):
            roots.append(r)
            work = pdivmod(work, [-x, ONE])[0]
            continue
        r = -r if r > 0 else -r + 1
        if r > cap or r > integer_root_bound(work):
            break
    return sorted(roots), len(work) - 1


def roots_among(p, candidates):
    """Roots of p found in the candidate iterable (each tested exactly)."""
    out = []
    seen = set()
    for c in candidates:
        c = qq(c)
        if c in seen:
            continue
        seen.add(c)
        if not peval(p, c):
            out.append(c)
    return out


def integer_root_bound(p):
    """Cauchy-style bound: every root r has |r| <= 1 + max|c_i/c_top|.

    Uses the rational absolute-value bound |a+bi| <= |a| + |b|.
    """
    p = pnorm(list(p))
    if len(p) <= 1:
        return 0
    top = p[-1]
    best = 0
    for c in p[:-1]:
        q = c / top
        m = abs(q.re) + abs(q.im)
        num = int(m.numerator)
        den = int(m.denominator)
        best = max(best, -(-num // den))
    return best + 1


def split_semisimple(mat, candidates=None, require_full=True):
    """Eigenspace decomposition of a semisimple sparse matrix.

    candidates, when given, must contain every eigenvalue; otherwise
    integer candidates are scanned up to a root bound of the minimal
    polynomial.  Returns a list of (eigenvalue, [basis vectors]) sorted by
    eigenvalue.  Raises ValueError if the spaces do not fill the dimension
    (operator not semisimple or candidate list incomplete).
    """
    n = mat.nrows
    if candidates is None:
        p = minimal_polynomial(mat)
        roots, remainder = integer_roots(p)
        if remainder:
            raise ValueError(
                "minimal polynomial does not split over the integers")
        candidates = roots
    out = []
    total = 0
    for c in candidates:
        c = qq(c)
        if any(c == e for e, _ in out):
            continue
        vecs = nullspace(shifted_rows(mat, c), n)
        if vecs:
            out.append((c, vecs))
            total += len(vecs)
        if total == n:
            break
    if require_full and total != n:
        raise ValueError("eigenspaces fill %d of %d dimensions" % (total, n))
    out.sort(key=lambda t: t[0].sort_key())
    return out
