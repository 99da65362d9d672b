"""Component-group data and the fiber theory of highest weights.

The centralizer group M of the split part is a direct product of its
identity component with a 2-group generated by one order-two element per
real simple root.  Everything this package needs from M is decidable
from weight coefficients: the parity character on the 2-group, the
restriction to the Cartan of m, sphericity, and the unique minimal
weight mapping to a given pair (character, restriction).
"""

from __future__ import annotations

from .errors import IdentityViolation, InvalidLabel, NotDominant
from .realform import RealFormData
from .scalars import qq


class MStructureData:
    """Decision-relevant shadow of the component structure of M."""

    def __init__(self, rf: RealFormData):
        self.rf = rf
        self.two_rank = len(rf.real_simple_idx)
        self.center_dim = rf.center_dim
        self.split_rank = rf.split_rank
        self.parity_generators = [i + 1 for i in rf.real_simple_idx]

    def parity_of(self, lam):
        """Sign action of each order-two generator on the weight's line."""
        return tuple(1 if int(lam[i]) % 2 == 0 else -1
                     for i in self.rf.real_simple_idx)

    def describe(self):
        return "M = Z2^%d x M_e (M_e of rank %d, center dim %d)" % (
            self.two_rank, self.rf.hm_dim, self.center_dim)


def m_structure(rf: RealFormData) -> MStructureData:
    return MStructureData(rf)


class FiberLabel:
    """A character of the 2-group plus a dominant integral form on h_m.

    zeta: signs indexed by the real simple roots in increasing order.
    nu: values on the h_m basis, i.e. on the compact simple coroots
    followed by the paired coroot differences.
    """

    def __init__(self, rf: RealFormData, zeta, nu):
        self.rf = rf
        self.zeta = tuple(int(z) for z in zeta)
        if any(z not in (1, -1) for z in self.zeta):
            raise InvalidLabel("character values must be +-1")
        if len(self.zeta) != len(rf.real_simple_idx):
            raise InvalidLabel(
                "character needs %d signs" % len(rf.real_simple_idx))
        self.nu = tuple(qq(x) for x in nu)
        if len(self.nu) != rf.hm_dim:
            raise InvalidLabel("form needs %d coordinates" % rf.hm_dim)
        ncomp = len(rf.compact_simple_idx)
        for j in range(ncomp):
            v = self.nu[j]
            if not v.is_integer() or v.re < 0:
                raise InvalidLabel(
                    "value on a compact simple coroot must be a "
                    "nonnegative integer")
        for j in range(ncomp, rf.hm_dim):
            if not self.nu[j].is_integer():
                raise InvalidLabel(
                    "value on a paired coroot difference must be an integer")

    def key(self):
        return (self.zeta, tuple(x.sort_key() for x in self.nu))

    def __eq__(self, other):
        return isinstance(other, FiberLabel) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "FiberLabel(zeta=%s, nu=%s)" % (
            self.zeta, tuple(str(x) for x in self.nu))


def lambda_Me_membership(nu, rf: RealFormData) -> bool:
    """Does a form on h_m integrate to the identity component of M."""
    nu = tuple(qq(x) for x in nu)
    if len(nu) != rf.hm_dim:
        raise InvalidLabel("form needs %d coordinates" % rf.hm_dim)
    ncomp = len(rf.compact_simple_idx)
    for j in range(ncomp):
        if not nu[j].is_integer() or nu[j].re < 0:
            return False
    for j in range(ncomp, rf.hm_dim):
        if not nu[j].is_integer():
            return False
    return True


def fiber_label(lam, rf: RealFormData) -> FiberLabel:
    """The pair (parity character, restriction to h_m) of a weight."""
    lam = tuple(int(x) for x in lam)
    zeta = tuple(1 if lam[i] % 2 == 0 else -1 for i in rf.real_simple_idx)
    lamq = tuple(qq(x) for x in lam)
    nu = rf.lam_on_hm(lamq)
    return FiberLabel(rf, zeta, nu)


def m_trivial(lam, rf: RealFormData) -> bool:
    """Does the weight restrict to zero on h_m (two redundant routes)."""
    lam = tuple(int(x) for x in lam)
    by_coeffs = all(lam[i] == 0 for i in rf.compact_simple_idx) and all(
        lam[i] == lam[ip] for i, ip in rf.pairs)
    lamq = tuple(qq(x) for x in lam)
    by_basis = all(not rf.weight_on_element(lamq, y) for y in rf.hm_basis)
    if by_coeffs != by_basis:
        raise IdentityViolation(
            "coefficient and basis tests for m-triviality disagree")
    return by_coeffs


def is_spherical(lam, rf: RealFormData) -> bool:
    """Does the trivial k-type occur in the module of this highest weight."""
    lam = tuple(int(x) for x in lam)
    if any(x < 0 for x in lam):
        raise NotDominant("weight %s is not dominant" % (lam,))
    if any(lam[i] % 2 for i in rf.real_simple_idx):
        return False
    if any(lam[i] for i in rf.compact_simple_idx):
        return False
    if any(lam[i] != lam[ip] for i, ip in rf.pairs):
        return False
    return True


def minimal_fiber_element(label: FiberLabel, rf: RealFormData):
    """The unique minimal weight with the given label."""
    lam = [0] * rf.rank
    ncomp = len(rf.compact_simple_idx)
    pos_of_real = {i: k for k, i in enumerate(rf.real_simple_idx)}
    for i in rf.real_simple_idx:
        lam[i] = 0 if label.zeta[pos_of_real[i]] == 1 else 1
    for j, i in enumerate(rf.compact_simple_idx):
        lam[i] = int(label.nu[j].re)
    for j, (i, ip) in enumerate(rf.pairs):
        d = int(label.nu[ncomp + j].re)
        if d >= 0:
            lam[i], lam[ip] = d, 0
        else:
            lam[i], lam[ip] = 0, -d
    lam = tuple(lam)
    if fiber_label(lam, rf) != label:
        raise IdentityViolation(
            "minimal element does not map back to its label")
    return lam


def spherical_weights(bound, rf: RealFormData):
    """All spherical dominant weights with coefficient sum at most bound."""
    return [lam for lam in weights_up_to(bound, rf.rank)
            if is_spherical(lam, rf)]


def weights_up_to(bound, rank):
    """Dominant weights with coefficient sum at most bound, sorted."""
    out = []

    def rec(prefix, rem):
        if len(prefix) == rank:
            out.append(tuple(prefix))
            return
        for v in range(rem + 1):
            rec(prefix + [v], rem - v)

    rec([], int(bound))
    out.sort()
    return out


def fiber_enumerate(label: FiberLabel, bound, rf: RealFormData):
    """All weights with the given label and coefficient sum at most bound.

    Verified against the translate description: the result must coincide
    with the minimal element plus the spherical weights, within the bound.
    """
    if bound < 0:
        raise InvalidLabel("bound must be nonnegative")
    direct = [lam for lam in weights_up_to(bound, rf.rank)
              if fiber_label(lam, rf) == label]
    base = minimal_fiber_element(label, rf)
    translated = []
    for sph in spherical_weights(bound, rf):
        cand = tuple(b + s for b, s in zip(base, sph))
        if sum(cand) <= bound:
            translated.append(cand)
    translated.sort()
    if direct != translated:
        raise IdentityViolation(
            "fiber does not match its spherical translate")
    return direct
