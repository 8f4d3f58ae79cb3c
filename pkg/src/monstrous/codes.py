"""Binary linear codes over GF(2), and the extended Golay code.

Codewords of length n are stored as Python ints, bit ``i`` (``1 << i``)
being coordinate ``i``.  For the Golay code the coordinates are indexed by
Z/23Z together with a point at infinity: positions 0..22 are the residues
0..22 and position 23 is the infinite point.
"""

from dataclasses import dataclass
from functools import lru_cache


class CodeError(ValueError):
    pass


ENUM_DIMENSION_LIMIT = 28


def weight(word: int) -> int:
    return word.bit_count()


def _rref(rows, length):
    """Reduced row echelon form over GF(2), columns scanned 0..length-1.

    Returns the canonical sorted tuple of nonzero rows.
    """
    rows = [r for r in rows if r]
    basis = []  # list of (pivot, row)
    for row in rows:
        for p, b in basis:
            if (row >> p) & 1:
                row ^= b
        if row == 0:
            continue
        pivot = (row & -row).bit_length() - 1
        # reduce existing rows by the new one
        basis = [(p, b ^ row if (b >> pivot) & 1 else b) for p, b in basis]
        basis.append((pivot, row))
    basis.sort()
    return tuple(b for _, b in basis)


@dataclass(frozen=True)
class BinaryCode:
    """A GF(2) linear code held as a reduced (canonical) generator matrix."""

    length: int
    generators: tuple

    @staticmethod
    def from_rows(length, rows):
        for r in rows:
            if r < 0 or r >> length:
                raise CodeError("word does not fit in the declared length")
        return BinaryCode(length, _rref(rows, length))

    @property
    def dimension(self) -> int:
        return len(self.generators)

    def contains(self, word: int) -> bool:
        if word < 0 or word >> self.length:
            return False
        for g in self.generators:
            p = (g & -g).bit_length() - 1
            if (word >> p) & 1:
                word ^= g
        return word == 0

    def words(self):
        """Iterate over all codewords (Gray-code order)."""
        if self.dimension > ENUM_DIMENSION_LIMIT:
            raise CodeError(
                "refusing to enumerate a code of dimension %d" % self.dimension)
        w = 0
        yield w
        gens = self.generators
        for i in range(1, 1 << len(gens)):
            w ^= gens[(i & -i).bit_length() - 1]
            yield w


def weight_enumerator(code: BinaryCode) -> dict:
    """Exact weight distribution {weight: count}; counts sum to 2^dim."""
    counts = {}
    for w in code.words():
        k = weight(w)
        counts[k] = counts.get(k, 0) + 1
    return counts


def min_weight(code: BinaryCode) -> int:
    """Minimum nonzero codeword weight (0 for the zero code)."""
    if code.dimension == 0:
        return 0
    return min(weight(w) for w in code.words() if w)


def is_doubly_even(code: BinaryCode) -> bool:
    return all(weight(w) % 4 == 0 for w in code.words())


def dual_code(code: BinaryCode) -> BinaryCode:
    """Kernel of the generator matrix: all words orthogonal to the code."""
    pivots = [(g & -g).bit_length() - 1 for g in code.generators]
    pivot_set = set(pivots)
    rows = []
    for f in range(code.length):
        if f in pivot_set:
            continue
        w = 1 << f
        for p, g in zip(pivots, code.generators):
            if (g >> f) & 1:
                w |= 1 << p
        rows.append(w)
    return BinaryCode.from_rows(code.length, rows)


def is_self_dual(code: BinaryCode) -> bool:
    return dual_code(code) == code


# --- the extended Golay code ---------------------------------------------

_INF = 23
_P = 23


def _lf_translate(pt):
    # tau -> tau + 1, fixing infinity
    return pt if pt == _INF else (pt + 1) % _P


def _lf_invert(pt):
    # tau -> -1/tau with 1/0 = infinity
    if pt == _INF:
        return 0
    if pt == 0:
        return _INF
    return (-pow(pt, -1, _P)) % _P


def _orbit_span(seed_set):
    seen = {frozenset(seed_set)}
    queue = [frozenset(seed_set)]
    while queue:
        s = queue.pop()
        for f in (_lf_translate, _lf_invert):
            t = frozenset(f(p) for p in s)
            if t not in seen:
                seen.add(t)
                queue.append(t)
    rows = [sum(1 << p for p in s) for s in seen]
    return BinaryCode.from_rows(24, rows)


@lru_cache(maxsize=None)
def _build_golay():
    residues = {(i * i) % _P for i in range(1, _P)}
    for completion, extra in (("zero", 0), ("infinity", _INF)):
        qr = residues | {extra}
        assert len(qr) == 12
        code = _orbit_span(qr)
        if code.dimension == 12 and is_doubly_even(code) and min_weight(code) == 8:
            return code, completion
    raise CodeError("quadratic-residue construction failed for both completions")


def golay_code() -> BinaryCode:
    """The extended binary Golay code: (24, 12), doubly even, min weight 8."""
    return _build_golay()[0]


def golay_qr_completion() -> str:
    """Which 12th element ('zero' or 'infinity') completed the residue set."""
    return _build_golay()[1]


# --- text format ----------------------------------------------------------

def code_to_text(code: BinaryCode) -> str:
    lines = ["%d %d" % (code.length, code.dimension)]
    for g in code.generators:
        lines.append("".join("1" if (g >> i) & 1 else "0"
                             for i in range(code.length)))
    return "\n".join(lines) + "\n"


def code_from_text(text: str) -> BinaryCode:
    parts = text.split()
    if len(parts) < 2:
        raise CodeError("malformed code text")
    length, dim = int(parts[0]), int(parts[1])
    rows = []
    for tok in parts[2:2 + dim]:
        if len(tok) != length or set(tok) - {"0", "1"}:
            raise CodeError("malformed generator row %r" % tok)
        rows.append(sum(1 << i for i, ch in enumerate(tok) if ch == "1"))
    if len(rows) != dim:
        raise CodeError("expected %d generator rows" % dim)
    code = BinaryCode.from_rows(length, rows)
    if code.dimension != dim:
        raise CodeError("generators are not linearly independent")
    return code
