"""The binary octahedral group over Q(zeta_8) and its diagonal scalar actions.

Everything is exact: elements of the cyclotomic field Q(zeta_8) are stored as
four rational coordinates in the basis {1, z, z^2, z^3} with z^4 = -1, which
contains both i = z^2 and 1/sqrt(2) = (z - z^3)/2.  Group elements are 2x2
matrices of determinant 1 over this field.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .codes import BinaryCode, dual_code
from . import lattices as _lat


class GroupError(RuntimeError):
    pass


# --- Q(zeta_8) arithmetic --------------------------------------------------

@dataclass(frozen=True)
class Cyc8:
    """An element a0 + a1 z + a2 z^2 + a3 z^3 of Q(zeta_8), z = e^(2 pi i/8)."""

    coords: tuple

    @staticmethod
    def of(a0=0, a1=0, a2=0, a3=0):
        return Cyc8((Fraction(a0), Fraction(a1), Fraction(a2), Fraction(a3)))

    def __add__(self, other):
        return Cyc8(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Cyc8(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Cyc8(tuple(-a for a in self.coords))

    def __mul__(self, other):
        out = [Fraction(0)] * 4
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(other.coords):
                if not b:
                    continue
                k = i + j
                if k >= 4:
                    out[k - 4] -= a * b  # z^4 = -1
                else:
                    out[k] += a * b
        return Cyc8(tuple(out))

    def conjugate(self):
        """Complex conjugation, z -> z^(-1) = -z^3."""
        a0, a1, a2, a3 = self.coords
        return Cyc8((a0, -a3, -a2, -a1))

    def is_zero(self):
        return not any(self.coords)


C_ZERO = Cyc8.of()
C_ONE = Cyc8.of(1)
C_I = Cyc8.of(0, 0, 1)           # i = z^2
C_SQRT2_INV = Cyc8.of(0, Fraction(1, 2), 0, Fraction(-1, 2))  # 1/sqrt(2)


# --- 2x2 matrices ----------------------------------------------------------

def _mat_mul(a, b):
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(2)),
                           start=C_ZERO) for j in range(2)) for i in range(2))


def _mat_neg(a):
    return tuple(tuple(-x for x in row) for row in a)


def _mat_det(a):
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


MAT_ONE = ((C_ONE, C_ZERO), (C_ZERO, C_ONE))
# the quaternions i, j, k as SU(2) matrices
MAT_I = ((C_I, C_ZERO), (C_ZERO, -C_I))
MAT_J = ((C_ZERO, C_ONE), (-C_ONE, C_ZERO))
MAT_K = _mat_mul(MAT_I, MAT_J)
# (1 + i)/sqrt(2) = diag(z, -z^3)
MAT_OCT = ((Cyc8.of(0, 1), C_ZERO), (C_ZERO, Cyc8.of(0, 0, 0, -1)))


def _half(m):
    h = Fraction(1, 2)
    return tuple(tuple(Cyc8(tuple(h * c for c in x.coords)) for x in row)
                 for row in m)


def _mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


# the Hurwitz unit (1 + i + j + k)/2, of order 6
MAT_HURWITZ = _half(_mat_add(_mat_add(MAT_ONE, MAT_I),
                             _mat_add(MAT_J, MAT_K)))


@lru_cache(maxsize=None)
def binary_octahedral_group():
    """The 48-element closure of i, j, (1+i+j+k)/2 and (1+i)/sqrt(2)."""
    gens = [MAT_I, MAT_J, MAT_HURWITZ, MAT_OCT]
    seen = {MAT_ONE}
    queue = [MAT_ONE]
    while queue:
        m = queue.pop()
        for g in gens:
            p = _mat_mul(m, g)
            if p not in seen:
                seen.add(p)
                queue.append(p)
    if len(seen) != 48:
        raise GroupError("closure has %d elements, expected 48" % len(seen))
    for m in seen:
        if _mat_det(m) != C_ONE:
            raise GroupError("non-unimodular element in closure")
    return frozenset(seen)


def _element_order(m, modulo_center=False):
    p = m
    for k in range(1, 49):
        if p == MAT_ONE or (modulo_center and p == _mat_neg(MAT_ONE)):
            return k
        p = _mat_mul(p, m)
    raise GroupError("order computation did not terminate")


def quotient_order_profile() -> dict:
    """Element-order histogram of 2O/{+-1}; S4 gives {1:1, 2:9, 3:8, 4:6}."""
    group = binary_octahedral_group()
    reps = {}
    for m in group:
        key = frozenset((m, _mat_neg(m)))
        reps.setdefault(key, m)
    if len(reps) != 24:
        raise GroupError("quotient has %d elements, expected 24" % len(reps))
    profile = {}
    for m in reps.values():
        o = _element_order(m, modulo_center=True)
        profile[o] = profile.get(o, 0) + 1
    return profile


def images_conjugate_in_quotient() -> bool:
    """Whether the images of i, j, k in 2O/{+-1} are pairwise conjugate."""
    group = binary_octahedral_group()
    targets = [MAT_I, MAT_J, MAT_K]
    for a in targets:
        for b in targets:
            if a is b:
                continue
            for g in group:
                # g a g^-1 up to sign; g^-1 = conjugate transpose for SU(2)
                ginv = ((g[1][1], -g[0][1]), (-g[1][0], g[0][0]))
                c = _mat_mul(_mat_mul(g, a), ginv)
                if c == b or c == _mat_neg(b):
                    break
            else:
                return False
    return True


# --- diagonal scalar actions ----------------------------------------------

@dataclass(frozen=True)
class RootOfUnityScalar:
    """The number e^(2 pi i e) for an exact rational exponent e mod 1."""

    exponent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "exponent", Fraction(self.exponent) % 1)

    def is_one(self):
        return self.exponent == 0

    def __mul__(self, other):
        return RootOfUnityScalar(self.exponent + other.exponent)


SCALAR_GENERATORS = ("i", "j", "k", "-1")


def scalar_action(generator: str, coords, lattice) -> RootOfUnityScalar:
    """Scalar by which the diagonal quaternion generator acts on the
    module component indexed by a vector of the scale-2 frame lattice."""
    if generator not in SCALAR_GENERATORS:
        raise GroupError("unknown generator %r" % (generator,))
    if lattice.scale != 2:
        raise GroupError("scalar actions are defined in the scale-2 frame")
    if not _lat.lattice_contains(lattice, coords):
        raise GroupError("vector %r is not in the lattice" % (coords,))
    total = sum(coords)
    if generator == "-1":
        return RootOfUnityScalar(Fraction(total, 2))
    return RootOfUnityScalar(Fraction(total, 4))


def kernel_of_i_action(lattice):
    """The index-2 sublattice on which the i-generator acts trivially."""
    if lattice.scale != 2:
        raise GroupError("expected a scale-2 frame lattice")

    def phi(row):
        s = sum(row)
        if s % 2:
            raise GroupError("lattice has a generator of odd coordinate sum")
        return (s // 2) % 2

    gens = _lat._kernel_sublattice(lattice.generators, phi)
    return _lat.ScaledLattice(lattice.rank, lattice.scale,
                              tuple(tuple(r) for r in gens))


def torus_trivial_subgroup(code: BinaryCode) -> BinaryCode:
    """Sign vectors in {+-1}^n acting trivially on every module component
    indexed by the coordinate-frame lattice of the code: the dual code."""
    return dual_code(code)


# --- exact integer facts ---------------------------------------------------

SUPERSINGULAR_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71)

ORDER_LOWER_BOUND_FACTORS = {2: 46, 3: 20, 5: 9, 7: 6, 11: 1, 13: 3, 23: 1,
                             29: 1, 31: 1, 41: 1, 47: 1, 59: 1, 71: 1}


def arithmetic_facts() -> dict:
    """Named exact integer identities used throughout, with verdicts."""
    bound_primes = set(ORDER_LOWER_BOUND_FACTORS)
    facts = {
        "196883 = 47*59*71": 47 * 59 * 71 == 196883,
        "196883 = 299 + 98280 + 24*2^12": 299 + 98280 + 24 * 2 ** 12 == 196883,
        "98280 = 196560/2": 196560 // 2 == 98280 and 196560 % 2 == 0,
        "299 = traceless part of Sym^2 of a 24-dim space":
            24 * 25 // 2 - 1 == 299,
        "order bound primes are supersingular":
            bound_primes <= set(SUPERSINGULAR_PRIMES),
        "order bound valuations 2^46 3^20 5^9 7^6 13^3":
            all(ORDER_LOWER_BOUND_FACTORS[p] == e
                for p, e in ((2, 46), (3, 20), (5, 9), (7, 6), (13, 3))),
    }
    return facts
