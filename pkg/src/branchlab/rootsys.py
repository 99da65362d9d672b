"""Root-system combinatorics for finite-type Cartan matrices.

Conventions used throughout the package:

* the Cartan matrix entry ``a[i][j]`` is the value of the simple root
  ``alpha_i`` on the simple coroot ``h_j``;
* roots are stored as integer tuples of simple-root coordinates;
* weights are stored as tuples of exact scalars in *fundamental
  coordinates*, i.e. entry j is the value on the coroot ``h_j``.  A weight
  is in the lattice iff all entries are integers, dominant iff they are
  also nonnegative.

The symmetric bilinear form on weight space is induced by the genuine
Killing form (computed from the root enumeration itself), not by any
"long root squared length 2" convention.
"""

from __future__ import annotations

from itertools import combinations

from .errors import NotDominant, NotFiniteType, NotIntegral
from .scalars import ONE, ZERO, qq


def _int_det(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in m[1:]]
        sign = -1 if j % 2 else 1
        total += sign * m[0][j] * _int_det(minor)
    return total


class CartanMatrix:
    """A finite-type generalized Cartan matrix."""

    def __init__(self, entries):
        entries = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(entries)
        if any(len(row) != n for row in entries):
            raise NotFiniteType("Cartan matrix must be square")
        for i in range(n):
            if entries[i][i] != 2:
                raise NotFiniteType("diagonal entries must equal 2")
            for j in range(n):
                if i != j:
                    if entries[i][j] > 0:
                        raise NotFiniteType("off-diagonal entries must be <= 0")
                    if (entries[i][j] == 0) != (entries[j][i] == 0):
                        raise NotFiniteType("zero pattern must be symmetric")
        for r in range(1, n + 1):
            for subset in combinations(range(n), r):
                minor = [[entries[i][j] for j in subset] for i in subset]
                if _int_det(minor) <= 0:
                    raise NotFiniteType(
                        "principal minor %s is not positive" % (subset,))
        self.entries = entries
        self.rank = n

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def __eq__(self, other):
        return isinstance(other, CartanMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "CartanMatrix(%r)" % (list(map(list, self.entries)),)


_NAMED = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "B2": [[2, -2], [-1, 2]],
    "C2": [[2, -1], [-2, 2]],
    "G2": [[2, -1], [-3, 2]],
}


def named_cartan_matrix(name):
    key = name.strip().upper()
    if key not in _NAMED:
        raise NotFiniteType("unknown Cartan matrix name %r" % name)
    return CartanMatrix(_NAMED[key])


class RootSystem:
    """All roots, coroots and fundamental weights of a finite-type matrix."""

    def __init__(self, cm: CartanMatrix):
        self.cm = cm
        self.rank = cm.rank
        self.positive_roots = self._close_positive_roots()
        self.roots = self.positive_roots + [
            tuple(-c for c in r) for r in self.positive_roots]
        self._root_set = set(self.roots)
        self._killing_h = self._killing_on_cartan()
        self._form_simple = self._form_on_simple_roots()
        self._kappa = None
        self._weyl = None

    # -- construction ------------------------------------------------------

    def _close_positive_roots(self):
        n = self.rank
        simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        layers = [simple]
        found = set(simple)
        while layers[-1]:
            nxt = []
            for phi in layers[-1]:
                for i in range(n):
                    pairing = sum(phi[k] * self.cm[k, i] for k in range(n))
                    p = 0
                    while True:
                        down = tuple(
                            phi[k] - (p + 1) * simple[i][k] for k in range(n))
                        if down in found:
                            p += 1
                        else:
                            break
                    if p - pairing > 0:
                        up = tuple(phi[k] + simple[i][k] for k in range(n))
                        if up not in found:
                            found.add(up)
                            nxt.append(up)
            layers.append(sorted(set(nxt)))
        out = [r for layer in layers[:-1] for r in layer]
        out.sort(key=lambda r: (sum(r), r))
        return out

    def _killing_on_cartan(self):
        """Matrix of the Killing form on the coroot basis, B(h_i, h_j)."""
        n = self.rank
        mat = [[0] * n for _ in range(n)]
        for phi in self.roots:
            vals = [self.pairing_root(phi, j) for j in range(n)]
            for i in range(n):
                if vals[i]:
                    for j in range(n):
                        mat[i][j] += vals[i] * vals[j]
        return tuple(tuple(qq(x) for x in row) for row in mat)

    def _form_on_simple_roots(self):
        """(alpha_i, alpha_j) for the Killing-form-induced form on h*.

        eta identifies h with h* through the Killing form; the preimage of
        alpha_i solves B x = a_i with a_i[j] = <alpha_i, h_j>, and then
        (alpha_i, alpha_j) = <alpha_i, x_j>.
        """
        from .linalg import LinearSolver
        n = self.rank
        bcols = [{i: self._killing_h[i][j] for i in range(n)
                  if self._killing_h[i][j]} for j in range(n)]
        solver = LinearSolver(bcols, n)
        inv_a = []
        for i in range(n):
            target = {j: qq(self.cm[i, j]) for j in range(n) if self.cm[i, j]}
            inv_a.append(solver.solve(target, check=True))
        form = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                acc = ZERO
                for k, v in inv_a[j].items():
                    if self.cm[i, k]:
                        acc = acc + qq(self.cm[i, k]) * v
                form[i][j] = acc
        return tuple(tuple(row) for row in form)

    # -- basic queries -----------------------------------------------------

    def is_root(self, coords):
        return tuple(coords) in self._root_set

    def height(self, root):
        return sum(root)

    def pairing_root(self, root, j):
        """Value of a root (simple-root coords) on the coroot h_j."""
        return sum(root[k] * self.cm[k, j] for k in range(self.rank))

    def root_to_weight(self, root):
        """Fundamental coordinates of an integer root-coordinate vector."""
        return tuple(qq(self.pairing_root(root, j)) for j in range(self.rank))

    def weight_to_root_coords(self, weight):
        """Simple-root coordinates of a weight given in fundamental coords."""
        from .linalg import LinearSolver
        n = self.rank
        cols = [{j: qq(self.cm[i, j]) for j in range(n) if self.cm[i, j]}
                for i in range(n)]
        solver = LinearSolver(cols, n)
        sol = solver.solve({j: qq(weight[j]) for j in range(n) if weight[j]},
                           check=True)
        return tuple(sol.get(i, ZERO) for i in range(n))

    def form(self, mu, nu):
        """Killing-induced symmetric form of two weights in root coords."""
        acc = ZERO
        for i, a in enumerate(mu):
            if not a:
                continue
            for j, b in enumerate(nu):
                if b:
                    acc = acc + qq(a) * qq(b) * self._form_simple[i][j]
        return acc

    def form_weights(self, mu, nu):
        """Same form, arguments in fundamental coordinates."""
        return self.form(self.weight_to_root_coords(mu),
                         self.weight_to_root_coords(nu))

    def killing_cartan(self, i, j):
        return self._killing_h[i][j]

    def coroot_of_root(self, root):
        """Coordinates of h_phi in the basis h_1..h_l.

        h_phi corresponds to 2*phi/(phi,phi) under eta; its coordinates c
        solve <alpha_j, sum c_i h_i> = 2(alpha_j, phi)/(phi, phi) for all j.
        """
        from .linalg import LinearSolver
        n = self.rank
        cols = [{j: qq(self.cm[j, i]) for j in range(n) if self.cm[j, i]}
                for i in range(n)]
        solver = LinearSolver(cols, n)
        norm = self.form(root, root)
        target = {}
        for j in range(n):
            v = (qq(2) * self.form(
                tuple(1 if k == j else 0 for k in range(n)), root)) / norm
            if v:
                target[j] = v
        sol = solver.solve(target, check=True)
        return tuple(sol.get(i, ZERO) for i in range(n))

    # -- dominance ---------------------------------------------------------

    def decompose_dominant(self, root_coords):
        """Write a lattice weight as integer coefficients of fundamentals.

        Input in simple-root coordinates.  Raises NotIntegral off the
        lattice; negative coefficients are returned as-is (callers that
        need dominance check it).
        """
        vals = []
        for j in range(self.rank):
            v = ZERO
            for k, c in enumerate(root_coords):
                if c:
                    v = v + qq(c) * qq(self.cm[k, j])
            if not v.is_integer():
                raise NotIntegral("weight is not in the weight lattice")
            vals.append(int(v.re))
        return tuple(vals)

    def check_dominant(self, n_coeffs):
        n_coeffs = tuple(int(x) for x in n_coeffs)
        if len(n_coeffs) != self.rank:
            raise NotDominant("weight has wrong rank")
        if any(x < 0 for x in n_coeffs):
            raise NotDominant("weight %s is not dominant" % (n_coeffs,))
        return n_coeffs

    # -- Weyl group --------------------------------------------------------

    def reflect_root(self, root, i):
        p = self.pairing_root(root, i)
        return tuple(c - p if k == i else c for k, c in enumerate(root))

    def reflect_weight(self, weight, i):
        """Simple reflection on fundamental coordinates."""
        c = weight[i]
        if not c:
            return tuple(weight)
        return tuple(qq(weight[j]) - c * qq(self.cm[i, j])
                     for j in range(self.rank))

    def apply_word(self, word, weight):
        for i in reversed(word):
            weight = self.reflect_weight(weight, i)
        return weight

    def weyl_words(self):
        """Reduced-word representatives of the full Weyl group (rank <= 4)."""
        if self.rank > 4:
            raise NotFiniteType("full Weyl enumeration is limited to rank 4")
        if self._weyl is not None:
            return self._weyl
        n = self.rank
        fund = [tuple(ONE if j == i else ZERO for j in range(n))
                for i in range(n)]

        def key_of(word):
            return tuple(self.apply_word(word, f) for f in fund)

        seen = {key_of(()): ()}
        frontier = [()]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(n):
                    w2 = w + (i,)
                    k = key_of(w2)
                    if k not in seen:
                        seen[k] = w2
                        nxt.append(w2)
            frontier = nxt
        self._weyl = sorted(seen.values(), key=lambda w: (len(w), w))
        return self._weyl

    def apply_word_root(self, word, root):
        for i in reversed(word):
            root = self.reflect_root(root, i)
        return root

    def longest_word(self):
        """Word for the unique element sending every positive root negative."""
        if self._kappa is None:
            simple = [tuple(1 if k == i else 0 for k in range(self.rank))
                      for i in range(self.rank)]
            for w in self.weyl_words():
                if all(sum(self.apply_word_root(w, s)) < 0 for s in simple):
                    self._kappa = w
                    break
            else:
                raise NotFiniteType("no longest element found")
        return self._kappa

    def longest_element_action(self, weight):
        """Image of a weight (fundamental coords) under the longest element."""
        return self.apply_word(self.longest_word(), tuple(qq(x) for x in weight))

    def weyl_orbit(self, weight):
        """Orbit of a weight (fundamental coords) under the Weyl group."""
        start = tuple(qq(x) for x in weight)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    w2 = self.reflect_weight(w, i)
                    if w2 not in seen:
                        seen.add(w2)
                        nxt.append(w2)
            frontier = nxt
        return seen


def build_root_system(cm) -> RootSystem:
    """Construct the root system of a finite-type Cartan matrix."""
    if not isinstance(cm, CartanMatrix):
        cm = CartanMatrix(cm)
    return RootSystem(cm)
