"""Desk-scale kernel for the rank-d Heisenberg vertex algebra.

States live in the vacuum Fock module: exact rational combinations of
monomials a^{i_1}(n_1)...a^{i_k}(n_k)|0> with all n_j < 0, stored in the
canonical order (modes weakly increasing, colors increasing on ties).
Fields are degree-graded operator families with an explicit mode window and
degree cutoff; asking for an unavailable mode fails loudly instead of
silently truncating.
"""

import math
from dataclasses import dataclass
from fractions import Fraction


class FieldError(RuntimeError):
    pass


class WindowError(FieldError):
    """A computation touched a mode outside a field's declared window."""


DEFAULT_WINDOW = (-16, 16)
DEFAULT_CUTOFF = 24


def binom(m: int, i: int) -> int:
    """Binomial coefficient with arbitrary integer top index."""
    if i < 0:
        return 0
    if m >= 0:
        return math.comb(m, i)
    num = 1
    for j in range(i):
        num *= m - j
    return num // math.factorial(i)


# --- states ---------------------------------------------------------------

def _canonical(pairs):
    return tuple(sorted(pairs))


class FockState:
    """Exact rational combination of canonical creation monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[mono] = c
        self.terms = clean

    @staticmethod
    def vacuum():
        return FockState({(): Fraction(1)})

    @staticmethod
    def monomial(pairs, coeff=1):
        for n, _i in pairs:
            if n >= 0:
                raise ValueError("creation modes must be negative")
        return FockState({_canonical(pairs): Fraction(coeff)})

    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        """Largest monomial degree present (0 for the zero state)."""
        if not self.terms:
            return 0
        return max(sum(-n for n, _ in mono) for mono in self.terms)

    def is_homogeneous(self):
        degs = {sum(-n for n, _ in mono) for mono in self.terms}
        return len(degs) <= 1

    def __add__(self, other):
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return FockState(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        return FockState({m: Fraction(scalar) * c for m, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, FockState) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            body = "".join("a%d(%d)" % (i, n) for n, i in mono) or "1"
            bits.append("%s*%s|0>" % (c, body))
        return " + ".join(bits)


ZERO = FockState()


def apply_mode(color: int, n: int, state: FockState) -> FockState:
    """Action of the Heisenberg mode a^color(n) on a state.

    Negative n creates; positive n contracts against matching creation
    modes via [a^i(m), a^j(n)] = m (e^i,e^j) delta_{m,-n}; n = 0 kills.
    """
    if n == 0:
        return ZERO
    out = {}
    for mono, c in state.terms.items():
        if n < 0:
            new = _canonical(mono + ((n, color),))
            out[new] = out.get(new, Fraction(0)) + c
        else:
            for idx, (m, i) in enumerate(mono):
                if (m, i) == (-n, color):
                    rest = list(mono)
                    rest.pop(idx)
                    rest = tuple(rest)
                    out[rest] = out.get(rest, Fraction(0)) + c * n
    return FockState(out)


def basis_states(d: int, max_degree: int):
    """All canonical monomial basis states of degree <= max_degree."""
    for deg in range(max_degree + 1):
        for mono in _monomials(d, deg):
            yield FockState.monomial(mono)


def _monomials(d, deg, min_mode=None, min_color=1):
    if deg == 0:
        yield ()
        return
    start = min_mode if min_mode is not None else -deg
    for n in range(start, 0):
        if -n > deg:
            continue
        c0 = min_color if (min_mode is not None and n == min_mode) else 1
        for i in range(c0, d + 1):
            for rest in _monomials(d, deg + n, n, i):
                yield ((n, i),) + rest


def graded_dimension(d: int, n: int) -> int:
    """Number of d-colored partitions of n."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    # coefficient of q^n in prod (1-q^k)^(-d)
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    for k in range(1, n + 1):
        for _ in range(d):
            for j in range(k, n + 1):
                coeffs[j] += coeffs[j - k]
    return coeffs[n]


def translation(state: FockState) -> FockState:
    """The translation operator T (= L_{-1}), acting as a derivation."""
    out = ZERO
    for mono, c in state.terms.items():
        for idx, (n, i) in enumerate(mono):
            shifted = list(mono)
            shifted[idx] = (n - 1, i)
            out = out + FockState({_canonical(shifted): c * (-n)})
    return out


# --- fields ---------------------------------------------------------------

def _graded(field, n, state):
    """Apply a field mode with the grading shortcut and cutoff guard.

    Used for internal recursion, where intermediate modes may legitimately
    fall outside the user-facing window.
    """
    if state.is_zero():
        return ZERO
    deg = state.degree
    if deg > field.cutoff:
        raise FieldError("state degree %d exceeds cutoff %d"
                         % (deg, field.cutoff))
    if deg + field.weight - n - 1 < 0:
        return ZERO  # target degree would be negative
    return field._mode(n, state)


class Field:
    """Base class: a degree-graded mode family with window and cutoff."""

    weight = 0
    window = DEFAULT_WINDOW
    cutoff = DEFAULT_CUTOFF

    def mode(self, n: int, state: FockState) -> FockState:
        lo, hi = self.window
        if not lo <= n <= hi:
            raise WindowError("mode %d outside window [%d, %d]" % (n, lo, hi))
        return _graded(self, n, state)

    def _mode(self, n, state):
        raise NotImplementedError


class IdentityField(Field):
    """I(z) = id z^0, so I_n = delta_{n,-1} id."""

    def __init__(self, window=DEFAULT_WINDOW, cutoff=DEFAULT_CUTOFF):
        self.weight = 0
        self.window = window
        self.cutoff = cutoff

    def _mode(self, n, state):
        return state if n == -1 else ZERO


class GeneratorField(Field):
    """Y(a^i(-1)|0>, z): mode n acts as a^i(n)."""

    def __init__(self, color, window=DEFAULT_WINDOW, cutoff=DEFAULT_CUTOFF):
        self.color = color
        self.weight = 1
        self.window = window
        self.cutoff = cutoff

    def _mode(self, n, state):
        return apply_mode(self.color, n, state)


class LinearField(Field):
    """Rational combination of fields of a common weight."""

    def __init__(self, terms):
        terms = [(Fraction(c), f) for c, f in terms if c]
        if not terms:
            raise FieldError("empty linear combination")
        weights = {f.weight for _, f in terms}
        if len(weights) != 1:
            raise FieldError("mixed-weight combinations are not graded")
        self.terms = terms
        self.weight = weights.pop()
        self.window = (max(f.window[0] for _, f in terms),
                       min(f.window[1] for _, f in terms))
        self.cutoff = min(f.cutoff for _, f in terms)

    def _mode(self, n, state):
        out = ZERO
        for c, f in self.terms:
            out = out + c * _graded(f, n, state)
        return out


class RProductField(Field):
    """The m-th residue product A(z)_m B(z).

    Modes follow the binomial double sum; the i-sums are truncated exactly
    using the grading of the Fock module (an annihilating mode beyond the
    state's degree gives zero).
    """

    def __init__(self, a, b, m):
        self.a = a
        self.b = b
        self.m = m
        self.weight = a.weight + b.weight - m - 1
        self.window = (max(a.window[0], b.window[0]),
                       min(a.window[1], b.window[1]))
        self.cutoff = min(a.cutoff, b.cutoff)

    def _mode(self, n, state):
        a, b, m = self.a, self.b, self.m
        deg = state.degree
        out = ZERO
        i1 = deg + b.weight - 1 - n
        if m >= 0:
            i1 = min(i1, m)
        for i in range(i1 + 1):
            c = binom(m, i)
            if not c:
                continue
            t = _graded(b, n + i, state)
            if t.is_zero():
                continue
            out = out + Fraction((-1) ** i * c) * _graded(a, m - i, t)
        i2 = deg + a.weight - 1
        if m >= 0:
            i2 = min(i2, m)
        sign_m = -1 if m % 2 else 1
        for i in range(i2 + 1):
            c = binom(m, i)
            if not c:
                continue
            t = _graded(a, i, state)
            if t.is_zero():
                continue
            out = out + Fraction(-sign_m * (-1) ** i * c) * _graded(b, m + n - i, t)
        return out


def residue_product(a: Field, b: Field, m: int) -> Field:
    return RProductField(a, b, m)


def field_of_state(state: FockState, window=DEFAULT_WINDOW,
                   cutoff=DEFAULT_CUTOFF) -> Field:
    """The field attached to a (homogeneous) state via reconstruction."""
    if not state.is_homogeneous():
        raise FieldError("state-field correspondence needs a homogeneous state")
    ident = IdentityField(window, cutoff)
    terms = []
    for mono, c in state.terms.items():
        f = ident
        for n, i in reversed(mono):
            f = RProductField(GeneratorField(i, window, cutoff), f, n)
        terms.append((c, f))
    if not terms:
        raise FieldError("the zero state has no attached field")
    return terms[0][1] if len(terms) == 1 and terms[0][0] == 1 \
        else LinearField(terms)


def state_mode(u: FockState, n: int, v: FockState,
               window=DEFAULT_WINDOW, cutoff=DEFAULT_CUTOFF) -> FockState:
    """u_n v computed through the field attached to u."""
    return field_of_state(u, window, cutoff).mode(n, v)


# --- checks ---------------------------------------------------------------

def locality_order(a: Field, b: Field, nmax: int, max_degree: int, d: int,
                   mode_lo: int = -3):
    """Smallest N <= nmax with (z-w)^N [A(z),B(w)] = 0 on states of
    degree <= max_degree, or None."""
    states = list(basis_states(d, max_degree))
    for cand in range(nmax + 1):
        if _locality_holds(a, b, cand, states, mode_lo):
            return cand
    return None


def _locality_holds(a, b, n_ord, states, mode_lo):
    for s in states:
        deg = s.degree
        top = deg + a.weight + b.weight - n_ord - 2
        for p in range(mode_lo, top - mode_lo + 1):
            for q in range(mode_lo, top - p + 1):
                acc = ZERO
                for i in range(n_ord + 1):
                    c = Fraction((-1) ** i * math.comb(n_ord, i))
                    am, bm = p + n_ord - i, q + i
                    acc = acc + c * (a.mode(am, b.mode(bm, s))
                                     - b.mode(bm, a.mode(am, s)))
                if not acc.is_zero():
                    return False
    return True


def check_borcherds(a: Field, b: Field, c: Field, p: int, q: int, r: int,
                    state: FockState, vanish_ab: int = 2, vanish_bc: int = 2,
                    vanish_ac: int = 2, mode_lo: int = -3) -> bool:
    """Evaluate both sides of the residue-product master identity on a state.

    vanish_* bound the locality orders: X(z)_n Y(z) = 0 for n >= vanish_xy,
    which makes the i-sums with negative binomial top index terminate.
    """
    lhs_terms = []
    ilim = p if p >= 0 else vanish_ab - r - 1
    for i in range(max(ilim + 1, 0)):
        cf = binom(p, i)
        if cf:
            lhs_terms.append((Fraction(cf),
                              RProductField(RProductField(a, b, r + i), c,
                                            p + q - i)))
    rhs_terms = []
    ilim1 = r if r >= 0 else vanish_bc - q - 1
    for i in range(max(ilim1 + 1, 0)):
        cf = binom(r, i)
        if cf:
            rhs_terms.append((Fraction((-1) ** i * cf),
                              RProductField(a, RProductField(b, c, q + i),
                                            p + r - i)))
    sign_r = -1 if r % 2 else 1
    ilim2 = r if r >= 0 else vanish_ac - p - 1
    for i in range(max(ilim2 + 1, 0)):
        cf = binom(r, i)
        if cf:
            rhs_terms.append((Fraction(-((-1) ** i) * sign_r * cf),
                              RProductField(b, RProductField(a, c, p + i),
                                            q + r - i)))

    w = a.weight + b.weight + c.weight - p - q - r - 2
    top = state.degree + w - 1
    for n in range(mode_lo, top + 1):
        lhs = ZERO
        for cf, f in lhs_terms:
            lhs = lhs + cf * f.mode(n, state)
        rhs = ZERO
        for cf, f in rhs_terms:
            rhs = rhs + cf * f.mode(n, state)
        if lhs != rhs:
            return False
    return True


# --- Virasoro structure ---------------------------------------------------

def conformal_vector(d: int) -> FockState:
    out = ZERO
    for i in range(1, d + 1):
        out = out + FockState.monomial(((-1, i), (-1, i)), Fraction(1, 2))
    return out


def virasoro_field(d: int, window=DEFAULT_WINDOW,
                   cutoff=DEFAULT_CUTOFF) -> Field:
    """Y(omega, z) built from generator fields by residue products."""
    return field_of_state(conformal_vector(d), window, cutoff)


def virasoro_mode(vir: Field, n: int, state: FockState) -> FockState:
    """L_n = omega_{n+1}."""
    return vir.mode(n + 1, state)


def check_virasoro(m: int, n: int, state: FockState, d: int,
                   window=DEFAULT_WINDOW, cutoff=DEFAULT_CUTOFF) -> bool:
    """[L_m, L_n] = (m-n) L_{m+n} + binom(m+1,3) delta_{m,-n} (d/2)."""
    vir = virasoro_field(d, window, cutoff)
    lhs = (virasoro_mode(vir, m, virasoro_mode(vir, n, state))
           - virasoro_mode(vir, n, virasoro_mode(vir, m, state)))
    rhs = (m - n) * virasoro_mode(vir, m + n, state)
    if m == -n:
        rhs = rhs + Fraction(binom(m + 1, 3) * d, 2) * state
    return lhs == rhs


# --- lattice double-cover cocycle -----------------------------------------

@dataclass(frozen=True)
class LatticeCocycle:
    """Bimultiplicative sign function realizing the double-cover commutator.

    B is the upper-triangular mod 2 lift of the Gram matrix on a fixed
    basis; eps(a,b) = (-1)^(a^T B b) in basis coordinates.
    """

    gram: tuple
    lift: tuple

    def bilinear(self, a, b) -> int:
        total = 0
        for i, ai in enumerate(a):
            if ai:
                row = self.lift[i]
                total += ai * sum(row[j] * bj for j, bj in enumerate(b))
        return total % 2

    def epsilon(self, a, b) -> int:
        return -1 if self.bilinear(a, b) else 1

    def pairing(self, a, b) -> int:
        return sum(ai * sum(self.gram[i][j] * bj for j, bj in enumerate(b))
                   for i, ai in enumerate(a))


def lattice_cocycle(lat) -> LatticeCocycle:
    from . import lattices as lat_mod
    gram = lat_mod.gram_matrix(lat)
    n = lat.rank
    for i in range(n):
        if gram[i][i] % 2 != 0:
            raise ValueError("cocycle needs an even lattice")
    igram = tuple(tuple(int(gram[i][j]) for j in range(n)) for i in range(n))
    lift = []
    for i in range(n):
        row = []
        for j in range(n):
            if i < j:
                row.append(igram[i][j] % 2)
            elif i == j:
                row.append((igram[i][i] // 2) % 2)
            else:
                row.append(0)
        lift.append(tuple(row))
    return LatticeCocycle(igram, tuple(lift))


def verify_commutator(coc: LatticeCocycle, trials: int, seed: int = 0) -> bool:
    """eps(a,b) eps(b,a) = (-1)^(a,b) on all basis pairs and random pairs."""
    import random
    n = len(coc.gram)
    basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    pairs = [(a, b) for a in basis for b in basis]
    rng = random.Random(seed)
    for _ in range(trials):
        a = tuple(rng.randint(-4, 4) for _ in range(n))
        b = tuple(rng.randint(-4, 4) for _ in range(n))
        pairs.append((a, b))
    for a, b in pairs:
        expect = -1 if coc.pairing(a, b) % 2 else 1
        if coc.epsilon(a, b) * coc.epsilon(b, a) != expect:
            return False
    return True
