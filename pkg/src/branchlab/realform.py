"""Involutions of g and their Iwasawa data.

A real form enters as a ThetaSpec: an involutive linear map of the Cartan
preserving the roots plus a sign for the image of each simple root vector
(and each lowering simple root vector).  The map is extended
multiplicatively to all of g, verified to be an involutive automorphism,
and the derived objects are computed exactly: the fixed subalgebra k, the
split part a, the nilpotent radicals n and n-, the centralizer m of a,
the restricted root system with its fiber modules g(gamma), and the
classification of simple roots that drives the branching machinery
(compact / restricted, real / nilpotent, paired / unpaired).
"""

from __future__ import annotations

import json
from importlib import resources

from .chevalley import LieAlgebra
from .errors import (InconsistentSigns, NormalizationFailure,
                     NotInvolution, NotMaximallySplit, ParseError,
                     StructureViolation)
from .linalg import (LinearSolver, SpMat, nullspace, rank, rref, vec_axpy,
                     vec_eq, vec_scale)
from .rootsys import CartanMatrix
from .scalars import IMAG, ONE, ZERO, qq

_SIGN_VALUES = {"1": ONE, "-1": -ONE, "i": IMAG, "-i": -IMAG}


class ThetaSpec:
    """Input data for an involution: root map plus simple-root signs."""

    def __init__(self, cartan_matrix, root_map, signs_plus, signs_minus,
                 name=None):
        self.cm = (cartan_matrix if isinstance(cartan_matrix, CartanMatrix)
                   else CartanMatrix(cartan_matrix))
        n = self.cm.rank
        self.root_map = tuple(tuple(int(x) for x in row) for row in root_map)
        if len(self.root_map) != n or any(len(r) != n for r in self.root_map):
            raise ParseError("root map must be a %dx%d integer matrix" % (n, n))
        self.signs_plus = [_parse_sign(s) for s in signs_plus]
        self.signs_minus = [_parse_sign(s) for s in signs_minus]
        if len(self.signs_plus) != n or len(self.signs_minus) != n:
            raise ParseError("need one sign per simple root, each direction")
        self.name = name

    def map_root(self, root):
        n = self.cm.rank
        return tuple(sum(self.root_map[i][j] * root[j] for j in range(n))
                     for i in range(n))

    @classmethod
    def from_dict(cls, doc):
        if "preset" in doc:
            return preset_theta_spec(doc["preset"])
        try:
            return cls(doc["cartan_matrix"], doc["root_map"],
                       doc["signs_plus"], doc["signs_minus"],
                       name=doc.get("name"))
        except KeyError as exc:
            raise ParseError("missing field %s in involution document" % exc)

    @classmethod
    def from_file(cls, path):
        try:
            with open(path) as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError("cannot read involution document: %s" % exc)
        return cls.from_dict(doc)

    def to_dict(self):
        inv = {v: k for k, v in _SIGN_VALUES.items()}
        doc = {
            "cartan_matrix": [list(r) for r in self.cm.entries],
            "root_map": [list(r) for r in self.root_map],
            "signs_plus": [inv[s] for s in self.signs_plus],
            "signs_minus": [inv[s] for s in self.signs_minus],
        }
        if self.name:
            doc["name"] = self.name
        return doc


def _parse_sign(s):
    s = str(s).strip()
    if s not in _SIGN_VALUES:
        raise ParseError("sign must be one of 1, -1, i, -i; got %r" % s)
    return _SIGN_VALUES[s]


def preset_names():
    return sorted(_PRESET_FILES)


def preset_theta_spec(name):
    key = name.strip().lower()
    if key not in _PRESET_FILES:
        raise ParseError("unknown real-form preset %r (have: %s)"
                         % (name, ", ".join(preset_names())))
    text = resources.files("branchlab.data").joinpath(
        _PRESET_FILES[key]).read_text()
    doc = json.loads(text)
    doc.setdefault("name", key)
    return ThetaSpec.from_dict(doc)


_PRESET_FILES = {
    "sl2r": "sl2r.json",
    "sl3r": "sl3r.json",
    "sp4r": "sp4r.json",
    "g2s": "g2s.json",
    "su21": "su21.json",
    "su31": "su31.json",
}


class RealFormData:
    """An involution together with all derived Iwasawa structure."""

    def __init__(self, g: LieAlgebra, spec: ThetaSpec):
        if g.rs.cm != spec.cm:
            raise StructureViolation(
                "involution document is for a different Cartan matrix")
        self.g = g
        self.rs = g.rs
        self.spec = spec
        self.rank = g.rank
        self._check_root_map()
        self._extend_theta()
        self._split_cartan()
        self._iwasawa()
        self._restricted_roots()
        self._classify()
        self._center_structure()
        self._normalize_real_simples()
        self._fold_lowerings()
        self._assemble_k_basis()

    # -- involution ----------------------------------------------------------

    def _check_root_map(self):
        spec, rs = self.spec, self.rs
        n = self.rank
        ident = tuple(tuple(1 if i == j else 0 for j in range(n))
                      for i in range(n))
        sq = tuple(tuple(sum(spec.root_map[i][k] * spec.root_map[k][j]
                             for k in range(n)) for j in range(n))
                   for i in range(n))
        if sq != ident:
            raise NotInvolution("root map squared is not the identity")
        for r in rs.roots:
            if not rs.is_root(spec.map_root(r)):
                raise NotInvolution("root map does not preserve the roots")

    def theta_root(self, root):
        return self.spec.map_root(root)

    def _extend_theta(self):
        g, rs, spec = self.g, self.rs, self.spec
        n = self.rank
        cols = [None] * g.dim
        # Cartan part: h_i goes to the coroot of the image root
        for i in range(n):
            img = spec.map_root(tuple(1 if k == i else 0 for k in range(n)))
            cols[g.h_index(i)] = dict(g.coroot_vector(img))
        # simple root vectors from the sign data
        for i in range(n):
            simple = tuple(1 if k == i else 0 for k in range(n))
            timg = spec.map_root(simple)
            cols[g.e_index(simple)] = {g.e_index(timg): spec.signs_plus[i]}
            neg = tuple(-c for c in simple)
            cols[g.e_index(neg)] = {
                g.e_index(tuple(-c for c in timg)): spec.signs_minus[i]}
        # extend by multiplicativity along the minimal decomposition
        for phi in rs.positive_roots:
            if sum(phi) < 2:
                continue
            j = next(i for i in range(n)
                     if phi[i] and rs.is_root(
                         tuple(c - (1 if k == i else 0)
                               for k, c in enumerate(phi)))
                     and sum(phi) > 1)
            simple = tuple(1 if k == j else 0 for k in range(n))
            psi = tuple(c - s for c, s in zip(phi, simple))
            nconst = g.nconst(psi, simple)
            img = g.bracket(cols[g.e_index(psi)], cols[g.e_index(simple)])
            cols[g.e_index(phi)] = vec_scale(img, ONE / nconst)
            nconst_neg = g.nconst(tuple(-c for c in psi),
                                  tuple(-c for c in simple))
            img = g.bracket(cols[g.e_index(tuple(-c for c in psi))],
                            cols[g.e_index(tuple(-c for c in simple))])
            cols[g.e_index(tuple(-c for c in phi))] = vec_scale(
                img, ONE / nconst_neg)
        theta = SpMat(g.dim, g.dim, cols)
        # every root vector must land on the predicted root line
        for r in rs.roots:
            col = theta.cols[g.e_index(r)]
            target = g.e_index(spec.map_root(r))
            if len(col) != 1 or target not in col or not col[target]:
                raise InconsistentSigns(
                    "image of a root vector is not a multiple of the root "
                    "vector for the mapped root")
        if not (theta.matmul(theta) == SpMat.identity(g.dim)):
            raise NotInvolution("extended map is not an involution")
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                lhs = g.bracket(theta.cols[i], theta.cols[j])
                rhs = theta.apply(g.bracket_basis(i, j))
                if not vec_eq(lhs, rhs):
                    raise InconsistentSigns(
                        "extended map is not an automorphism")
        self.theta_mat = theta

    def theta_apply(self, vec):
        return self.theta_mat.apply(vec)

    # -- Cartan split and Iwasawa pieces ---------------------------------------

    def _split_cartan(self):
        g = self.g
        n = self.rank
        # theta restricted to the Cartan, in coroot coordinates
        rows = []
        for i in range(n):
            col = self.theta_mat.cols[g.h_index(i)]
            rows.append({j: col.get(g.h_index(j), ZERO) for j in range(n)})
        tmat = SpMat(n, n, [
            {j: rows[i].get(j) for j in range(n) if rows[i].get(j)}
            for i in range(n)])
        plus = nullspace(tmat.shift(ONE).rows(), n)     # theta = +1
        minus = nullspace(tmat.shift(-ONE).rows(), n)   # theta = -1
        self.a_coords = minus
        self.hm_coords = plus
        self.split_rank = len(minus)
        self.a_basis = [self._h_from_coords(c) for c in minus]
        self.hm_eigenbasis = [self._h_from_coords(c) for c in plus]
        # maximal split: the centralizer of a inside the -1 part of g is a
        gdim = g.dim
        rows = []
        shifted = self.theta_mat.shift(-ONE)
        rows.extend(r for r in shifted.rows() if r)
        for x in self.a_basis:
            rows.extend(r for r in g.ad(x).rows() if r)
        cent = nullspace(rows, gdim)
        if len(cent) != self.split_rank:
            raise NotMaximallySplit(
                "centralizer of the split part in the -1 eigenspace has "
                "dimension %d, expected %d" % (len(cent), self.split_rank))

    def _h_from_coords(self, coords):
        return {self.g.h_index(i): v for i, v in coords.items() if v}

    def root_on_element(self, root, x):
        """Value of a root on a Cartan element (sparse over coroot indices)."""
        acc = ZERO
        for idx, c in x.items():
            i = idx - self.g.h_index(0)
            v = self.rs.pairing_root(root, i)
            if v:
                acc = acc + c * qq(v)
        return acc

    def weight_on_element(self, weight, x):
        """Value of a weight (fundamental coords) on a Cartan element."""
        acc = ZERO
        for idx, c in x.items():
            i = idx - self.g.h_index(0)
            if weight[i]:
                acc = acc + c * qq(weight[i])
        return acc

    def restrict_root(self, root):
        """Restriction of a root to the split part, as values on a_basis."""
        return tuple(self.root_on_element(root, x) for x in self.a_basis)

    def _iwasawa(self):
        rs = self.rs
        n = self.rank
        zero_a = tuple(ZERO for _ in range(self.split_rank))
        self.p_map = {}
        for r in rs.roots:
            res = self.restrict_root(r)
            if res != zero_a:
                self.p_map[r] = res
        self.m_roots = [r for r in rs.roots if r not in self.p_map]
        self.m_pos_roots = [r for r in self.m_roots if sum(r) > 0]
        self.restricted_simple_idx = []  # I_n
        self.compact_simple_idx = []     # I_m
        for i in range(n):
            simple = tuple(1 if k == i else 0 for k in range(n))
            if simple in self.p_map:
                self.restricted_simple_idx.append(i)
            else:
                self.compact_simple_idx.append(i)
        # deterministic regular element w of a: the distinct simple
        # restrictions get the values 1, 2, ... in order of first occurrence
        classes = []
        class_of = {}
        for i in self.restricted_simple_idx:
            simple = tuple(1 if k == i else 0 for k in range(n))
            res = self.p_map[simple]
            if res not in class_of:
                class_of[res] = len(classes) + 1
                classes.append(res)
        cols = [{j: res[j] for j in range(self.split_rank) if res[j]}
                for res in classes]
        # solve res_c(w) = value_c for w in a-coordinates
        eqs = []
        for c, res in enumerate(classes):
            row = {j: res[j] for j in range(self.split_rank) if res[j]}
            row[self.split_rank] = -qq(c + 1)
            eqs.append(row)
        sol = nullspace(eqs, self.split_rank + 1)
        w_coords = None
        for v in sol:
            t = v.get(self.split_rank, ZERO)
            if t:
                w_coords = {j: x / t for j, x in v.items()
                            if j < self.split_rank}
                break
        if w_coords is None:
            raise StructureViolation(
                "no regular element separates the simple restrictions")
        self.w_vec = {}
        for j, c in w_coords.items():
            vec_axpy(self.w_vec, self.a_basis[j], c)
        # positivity from w must agree with the ambient positive system
        self.n_roots = []
        self.n_minus_roots = []
        for r, res in self.p_map.items():
            val = self.root_on_element(r, self.w_vec)
            if not val:
                raise StructureViolation("regular element vanishes on a root")
            if not val.is_rational():
                raise StructureViolation("regular element is not real on roots")
            if val.re > 0:
                self.n_roots.append(r)
            else:
                self.n_minus_roots.append(r)
        if any(sum(r) < 0 for r in self.n_roots) or any(
                sum(r) > 0 for r in self.n_minus_roots):
            raise StructureViolation(
                "induced positivity disagrees with the Borel subalgebra")
        # involution swaps the two nilradicals and fixes the m-roots
        for r in self.n_minus_roots:
            if self.theta_root(r) not in set(self.n_roots):
                raise StructureViolation(
                    "involution does not map n- onto n on root level")
        for r in self.m_roots:
            if self.theta_root(r) != r:
                raise StructureViolation(
                    "involution moves a root of the centralizer m")
            col = self.theta_mat.cols[self.g.e_index(r)]
            if col.get(self.g.e_index(r)) != ONE:
                raise StructureViolation(
                    "involution is not the identity on m root vectors")
        self.n_roots.sort(key=lambda r: (sum(r), r))
        self.n_minus_roots.sort(key=lambda r: (sum(r), r))
        if len(self.m_roots) + 2 * len(self.n_roots) != len(self.rs.roots):
            raise StructureViolation("split of roots into m and s failed")

    # -- restricted root system -------------------------------------------------

    def _restricted_roots(self):
        self.restricted_positive = []
        seen = set()
        for r in self.n_roots:
            res = self.p_map[r]
            if res not in seen:
                seen.add(res)
                self.restricted_positive.append(res)
        self.restricted_all = set(self.restricted_positive) | {
            tuple(-x for x in res) for res in self.restricted_positive}
        pos_set = set(self.restricted_positive)
        simple = []
        for beta in self.restricted_positive:
            decomposable = False
            for g1 in self.restricted_positive:
                g2 = tuple(b - x for b, x in zip(beta, g1))
                if g2 in pos_set:
                    decomposable = True
                    break
            if not decomposable:
                simple.append(beta)
        # order the simple restricted roots by the least simple root index
        # restricting onto them
        order = []
        for beta in simple:
            idx = None
            for i in self.restricted_simple_idx:
                s = tuple(1 if k == i else 0 for k in range(self.rank))
                if self.p_map[s] == beta:
                    idx = i
                    break
            if idx is None:
                raise StructureViolation(
                    "a simple restricted root is not the restriction of a "
                    "simple root")
            order.append((idx, beta))
        order.sort()
        self.simple_restricted = [beta for _, beta in order]
        if len(self.simple_restricted) != self.split_rank:
            raise StructureViolation(
                "%d simple restricted roots for split rank %d"
                % (len(self.simple_restricted), self.split_rank))

    def g_gamma_roots(self, gamma):
        """Roots of the ad-a weight space for a restricted root."""
        gamma = tuple(gamma)
        if gamma not in self.restricted_all:
            raise StructureViolation("%s is not a restricted root" % (gamma,))
        return [r for r, res in sorted(self.p_map.items()) if res == gamma]

    def m_basis_elements(self):
        """Basis of m: raising m-root vectors, Cartan part, lowering."""
        basis = []
        for r in self.m_pos_roots:
            basis.append(("e+", r, {self.g.e_index(r): ONE}))
        for k, x in enumerate(self.hm_basis):
            basis.append(("h", k, x))
        for r in self.m_pos_roots:
            neg = tuple(-c for c in r)
            basis.append(("e-", neg, {self.g.e_index(neg): ONE}))
        return basis

    def lowest_weights(self, gamma):
        """Roots in g(gamma) killed by the lowering part of m."""
        roots = self.g_gamma_roots(gamma)
        out = []
        for psi in roots:
            vec = {self.g.e_index(psi): ONE}
            killed = True
            for mu in self.m_pos_roots:
                neg = tuple(-c for c in mu)
                if self.g.bracket({self.g.e_index(neg): ONE}, vec):
                    killed = False
                    break
            if killed:
                out.append(psi)
        if len(out) not in (1, 2):
            raise StructureViolation(
                "restricted root %s has %d lowest weights; expected 1 or 2"
                % (gamma, len(out)))
        return out

    # -- classification -----------------------------------------------------------

    def _classify(self):
        n = self.rank
        self.real_simple_idx = []    # theta(alpha) = -alpha
        for i in range(n):
            s = tuple(1 if k == i else 0 for k in range(n))
            if self.theta_root(s) == tuple(-c for c in s):
                self.real_simple_idx.append(i)
        if any(i in self.compact_simple_idx for i in self.real_simple_idx):
            raise StructureViolation("a real simple root sits inside m")
        self.nilpotent_simple_idx = [i for i in self.restricted_simple_idx
                                     if i not in self.real_simple_idx]
        # lowest-weight data per simple restricted root
        self.low_by_j = []
        covered = []
        for beta in self.simple_restricted:
            low = self.lowest_weights(beta)
            self.low_by_j.append(low)
            covered.extend(low)
        simple_n = [tuple(1 if k == i else 0 for k in range(n))
                    for i in self.restricted_simple_idx]
        if sorted(covered) != sorted(simple_n):
            raise StructureViolation(
                "the lowest weights of the simple restricted roots do not "
                "partition the restricted simple roots")
        self.reducible_j = [j for j, low in enumerate(self.low_by_j)
                            if len(low) == 2]
        self.irreducible_j = [j for j, low in enumerate(self.low_by_j)
                              if len(low) == 1]
        self.pairs = []          # (i, i') with i < i', one per reducible j
        self.paired_idx = []     # I_2
        self.unpaired_idx = []   # I_1
        for j, low in enumerate(self.low_by_j):
            idxs = sorted(next(k for k, c in enumerate(r) if c) for r in low)
            if len(low) == 2:
                self.pairs.append((idxs[0], idxs[1]))
                self.paired_idx.extend(idxs)
            else:
                self.unpaired_idx.extend(idxs)
        if any(i in self.paired_idx for i in self.real_simple_idx):
            raise StructureViolation("a real simple root is paired")

    def _center_structure(self):
        g = self.g
        n = self.rank
        # center of m inside its Cartan: kill all m-roots
        rows = []
        for r in self.m_roots:
            row = {}
            for k in range(len(self.hm_eigenbasis)):
                v = self.root_on_element(r, self.hm_eigenbasis[k])
                if v:
                    row[k] = v
            if row:
                rows.append(row)
        cent_coords = nullspace(rows, len(self.hm_eigenbasis))
        self.center_basis = []
        for c in cent_coords:
            x = {}
            for k, v in c.items():
                vec_axpy(x, self.hm_eigenbasis[k], v)
            self.center_basis.append(x)
        self.center_dim = len(self.center_basis)
        if len(self.restricted_simple_idx) != self.split_rank + self.center_dim:
            raise StructureViolation(
                "restricted simple count does not equal split rank plus "
                "center dimension")
        if len(self.reducible_j) != self.center_dim:
            raise StructureViolation(
                "reducible restricted simple count does not equal the "
                "center dimension of m")
        # the elements h_i (i compact) + the pair differences span h_m
        basis = []
        for i in self.compact_simple_idx:
            basis.append({g.h_index(i): ONE})
        for (i, ip) in self.pairs:
            basis.append({g.h_index(i): ONE, g.h_index(ip): -ONE})
        if basis:
            mat_rows = [dict(b) for b in basis]
            if len(rref(mat_rows)[0]) != len(basis):
                raise StructureViolation("pair-difference basis is dependent")
        if len(basis) != len(self.hm_eigenbasis):
            raise StructureViolation(
                "pair-difference basis has wrong cardinality for h_m")
        joint = [dict(b) for b in basis] + [dict(b) for b in self.hm_eigenbasis]
        if rank(joint) != len(self.hm_eigenbasis):
            raise StructureViolation("pair-difference basis does not span h_m")
        self.hm_basis = basis
        self.hm_dim = len(basis)
        # orthogonal projection onto the center for the sign identity
        self._check_center_signs()

    def _proj_center(self, x):
        """Projection of a Cartan element onto Cent m along its complement.

        The decomposition h = h_m^s + c + a is orthogonal for the Killing
        form, so the projection solves a small Gram system on c.
        """
        g = self.g
        if not self.center_basis:
            return {}
        gram_cols = []
        for b in self.center_basis:
            gram_cols.append({i: g.killing(self.center_basis[i], b)
                              for i in range(self.center_dim)
                              if g.killing(self.center_basis[i], b)})
        solver = LinearSolver(gram_cols, self.center_dim)
        target = {i: g.killing(self.center_basis[i], x)
                  for i in range(self.center_dim)
                  if g.killing(self.center_basis[i], x)}
        sol = solver.solve(target)
        out = {}
        for j, c in sol.items():
            vec_axpy(out, self.center_basis[j], c)
        return out

    def _check_center_signs(self):
        g = self.g
        for (i, ip) in self.pairs:
            pi = self._proj_center({g.h_index(i): ONE})
            pip = self._proj_center({g.h_index(ip): ONE})
            if not vec_eq(pi, vec_scale(pip, -ONE)):
                raise StructureViolation(
                    "center projections of a paired coroot difference are "
                    "not opposite")

    # -- gauges ---------------------------------------------------------------

    def _normalize_real_simples(self):
        """Rescale lowering vectors of real simple roots to the fixed gauge.

        For a real simple root the involution sends the lowering vector to
        d times the raising vector with d = +/-1; replacing e- by c e- and
        e+ by e+/c with c*c = 1/d makes the image exactly the raising
        vector, and then the folded vector has the same Killing square as
        the coroot.
        """
        g = self.g
        self.real_lowering = {}
        self.real_raising = {}
        for i in self.real_simple_idx:
            s = tuple(1 if k == i else 0 for k in range(self.rank))
            neg = tuple(-c for c in s)
            col = self.theta_mat.cols[g.e_index(neg)]
            d = col.get(g.e_index(s), ZERO)
            if d == ONE:
                c = ONE
            elif d == -ONE:
                c = IMAG
            else:
                raise NormalizationFailure(
                    "no Gaussian-rational gauge for simple root %d (image "
                    "coefficient %s)" % (i, d))
            low = {g.e_index(neg): c}
            self.real_lowering[i] = low
            self.real_raising[i] = {g.e_index(s): ONE / c}
            z = dict(low)
            vec_axpy(z, self.theta_apply(low), ONE)
            hi = {g.h_index(i): ONE}
            if g.killing(z, z) != g.killing(hi, hi):
                raise NormalizationFailure(
                    "folded vector for simple root %d has the wrong Killing "
                    "square" % i)

    def _fold_lowerings(self):
        g = self.g
        self.folded_lowering = {}
        for i in self.restricted_simple_idx:
            s = tuple(1 if k == i else 0 for k in range(self.rank))
            neg = tuple(-c for c in s)
            if i in self.real_simple_idx:
                low = self.real_lowering[i]
            else:
                low = {g.e_index(neg): ONE}
            z = dict(low)
            vec_axpy(z, self.theta_apply(low), ONE)
            if not vec_eq(self.theta_apply(z), z):
                raise StructureViolation("folded vector is not fixed")
            self.folded_lowering[i] = z

    def normalized_folded(self, root):
        """Folded fixed vector for any real positive root, or None.

        Returns z = c e_{-root} + theta(c e_{-root}) with the same Killing
        square as the coroot; None when the gauge scalar is not Gaussian
        rational or the root is not real.
        """
        g = self.g
        if self.theta_root(root) != tuple(-c for c in root):
            return None
        neg = tuple(-c for c in root)
        col = self.theta_mat.cols[g.e_index(neg)]
        d = col.get(g.e_index(root), ZERO)
        if d == ONE:
            c = ONE
        elif d == -ONE:
            c = IMAG
        else:
            return None
        low = {g.e_index(neg): c}
        z = dict(low)
        vec_axpy(z, self.theta_apply(low), ONE)
        return z

    # -- k ---------------------------------------------------------------------

    def _assemble_k_basis(self):
        g = self.g
        labels = []
        vecs = []
        for r in self.rs.positive_roots:
            neg = tuple(-c for c in r)
            if r in self.p_map:
                z = {g.e_index(neg): ONE}
                vec_axpy(z, self.theta_apply({g.e_index(neg): ONE}), ONE)
                labels.append(("z", neg))
                vecs.append(z)
            else:
                labels.append(("e-", neg))
                vecs.append({g.e_index(neg): ONE})
        for k, x in enumerate(self.hm_basis):
            labels.append(("h", k))
            vecs.append(dict(x))
        for r in self.m_pos_roots:
            labels.append(("e+", r))
            vecs.append({g.e_index(r): ONE})
        if rank([dict(v) for v in vecs]) != len(vecs):
            raise StructureViolation("candidate basis of k is dependent")
        fixed_dim = len(nullspace(self.theta_mat.shift(ONE).rows(), g.dim))
        if len(vecs) != fixed_dim:
            raise StructureViolation(
                "basis of k has size %d but the fixed space has dimension %d"
                % (len(vecs), fixed_dim))
        for v in vecs:
            if not vec_eq(self.theta_apply(v), v):
                raise StructureViolation("a candidate k basis vector moves")
        self.k_labels = labels
        self.k_basis = vecs
        self.k_dim = len(vecs)
        self.nstar_basis = [v for lbl, v in zip(labels, vecs)
                            if lbl[0] == "z"]

    # -- small conveniences ------------------------------------------------------

    def n_basis(self):
        """Root vectors spanning the nilradical n."""
        return [{self.g.e_index(r): ONE} for r in self.n_roots]

    def n_minus_basis(self):
        return [{self.g.e_index(r): ONE} for r in self.n_minus_roots]

    def m_basis(self):
        """Basis of m: raising part, Cartan part, lowering part."""
        return [x for _, _, x in self.m_basis_elements()]

    def b_m_basis(self):
        """Basis of the Borel subalgebra of m: h_m plus the raising part."""
        out = [dict(x) for x in self.hm_basis]
        out.extend({self.g.e_index(r): ONE} for r in self.m_pos_roots)
        return out

    def lam_on_hm(self, lam):
        """Values of a weight (fundamental coords) on the h_m basis."""
        return tuple(self.weight_on_element(lam, x) for x in self.hm_basis)

    def lam_on_a(self, lam):
        return tuple(self.weight_on_element(lam, x) for x in self.a_basis)

    def summary(self):
        return {
            "name": self.spec.name or "custom",
            "rank": self.rank,
            "split_rank": self.split_rank,
            "dim_g": self.g.dim,
            "dim_k": self.k_dim,
            "dim_m": 2 * len(self.m_pos_roots) + self.hm_dim,
            "center_dim": self.center_dim,
            "compact_simple": [i + 1 for i in self.compact_simple_idx],
            "restricted_simple": [i + 1 for i in self.restricted_simple_idx],
            "real_simple": [i + 1 for i in self.real_simple_idx],
            "nilpotent_simple": [i + 1 for i in self.nilpotent_simple_idx],
            "paired": [(i + 1, j + 1) for i, j in self.pairs],
            "restricted_root_count": len(self.restricted_all),
        }


def build_real_form(g: LieAlgebra, spec: ThetaSpec) -> RealFormData:
    return RealFormData(g, spec)


class RestrictedRootModule:
    """The m-action on one restricted-root space g(gamma)."""

    def __init__(self, rf: RealFormData, gamma):
        self.gamma = tuple(gamma)
        self.roots = rf.g_gamma_roots(self.gamma)
        index = {r: k for k, r in enumerate(self.roots)}
        self.dim = len(self.roots)
        self.action = {}
        g = rf.g
        for label, tag, x in rf.m_basis_elements():
            cols = []
            for r in self.roots:
                img = g.bracket(x, {g.e_index(r): ONE})
                col = {}
                for idx, v in img.items():
                    root = g.root_of_index(idx)
                    if root is None or root not in index:
                        raise StructureViolation(
                            "m action leaves the restricted root space")
                    col[index[root]] = v
                cols.append(col)
            self.action[(label, tag)] = SpMat(self.dim, self.dim, cols)
        # all h_m weights of the space are multiplicity free
        self.hm_weights = [tuple(rf.root_on_element(r, y) for y in rf.hm_basis)
                           for r in self.roots]
        if len(set(self.hm_weights)) != self.dim:
            raise StructureViolation(
                "h_m weights of a restricted root space are not "
                "multiplicity free")


def restricted_root_module(rf: RealFormData, gamma) -> RestrictedRootModule:
    return RestrictedRootModule(rf, gamma)


def lowest_weights(rf: RealFormData, gamma):
    """Roots in g(gamma) killed by the lowering part of m (one or two)."""
    return rf.lowest_weights(gamma)


def classify_simple_restricted(rf: RealFormData):
    """(unpaired J_1, paired J_2, pairing list), 0-based restricted indices."""
    return (list(rf.irreducible_j), list(rf.reducible_j), list(rf.pairs))


def h_m_basis_153(rf: RealFormData):
    """The coroot/pair-difference basis of h_m (already verified)."""
    return [dict(x) for x in rf.hm_basis]
