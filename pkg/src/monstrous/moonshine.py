"""Assembly of the genus-zero modular function J = q^-1 + 196884 q + ...
from exact lattice and eta-quotient characters, its fourfold component
decomposition, and complete-replicability checking for families of
q^-1 + O(q) series.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import qseries as qs
from .groups import SUPERSINGULAR_PRIMES, ORDER_LOWER_BOUND_FACTORS


class MoonshineError(ValueError):
    pass


# --- building-block characters --------------------------------------------

def theta_leech(prec):
    """Theta series of the Leech lattice via the weight-12 form with
    coefficients 1, 0."""
    return qs.weight12_match(1, 0, prec)


def theta_niemeier(prec):
    """Theta series of the root-ful neighbor (48 roots) via coefficients
    1, 48."""
    return qs.weight12_match(1, 48, prec)


def trace_theta(prec):
    """eta(tau)^24 / eta(2 tau)^24: the signed trace on the scale-2 frame
    module."""
    return qs.eta_quotient([(1, 24), (2, -24)], prec)


def twisted_character(prec):
    """2^12 eta(tau)^24 / eta(tau/2)^24, supported on half-integer powers."""
    return 4096 * qs.eta_quotient([(1, 24), (Fraction(1, 2), -24)], prec)


def assemble_j(prec):
    """J = q^-1 + 196884 q + ..., built from the orbifold pieces.

    The untwisted half is (theta/eta^24 + eta^24/eta(2tau)^24)/2; the
    twisted half is the integer-exponent eigencomponent of the twisted
    character, with the eigenspace sign fixed by requiring a vanishing
    constant term.
    """
    if prec < 3:
        raise MoonshineError("precision must be at least 3")
    char_leech = qs.char_lattice_voa(theta_leech(prec), 24)
    untwisted = Fraction(1, 2) * (char_leech + trace_theta(prec))
    tw = twisted_character(prec).integral_part().normalized().with_denom(
        untwisted.denom)
    for sign in (1, -1):
        j = untwisted + sign * tw
        if j.coeff(0) == 0:
            return j.normalized()
    raise MoonshineError(
        "neither eigenspace sign gives a vanishing constant term")


@dataclass(frozen=True)
class CharacterBundle:
    j: qs.FracQSeries
    char_untwisted: qs.FracQSeries
    trace: qs.FracQSeries
    v00: qs.FracQSeries
    v01: qs.FracQSeries
    v10: qs.FracQSeries
    v11: qs.FracQSeries


def triality_components(prec) -> CharacterBundle:
    """Split J into the four components fixed or permuted by the quaternion
    four-group action; the fixed component averages the frame character
    with three equal signed traces."""
    j = assemble_j(prec)
    char_n = qs.char_lattice_voa(theta_niemeier(prec), 24)
    tr = trace_theta(prec)
    v00 = Fraction(1, 4) * (char_n + 3 * tr)
    rest = Fraction(1, 3) * (j - v00)
    for name, s in (("v00", v00), ("twisted component", rest)):
        for k, c in s.coeffs.items():
            if c.denominator != 1 or c < 0:
                raise MoonshineError(
                    "%s has a bad coefficient %s at index %d" % (name, c, k))
    return CharacterBundle(j=j, char_untwisted=char_n, trace=tr,
                           v00=v00, v01=rest, v10=rest, v11=rest)


# --- replicability ---------------------------------------------------------

def faber_polynomial(f: qs.FracQSeries, k: int):
    """Coefficients c_0..c_k with sum c_j f^j = q^-k + O(q), for a series
    f = q^-1 + O(1) with integer exponents."""
    if k < 1:
        raise MoonshineError("degree must be at least 1")
    if f.denom != 1 or f.leading_exponent() != -1 or f.coeff(-1) != 1:
        raise MoonshineError("need a series of the form q^-1 + O(1)")
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[k] = Fraction(1)
    try:
        cur = f ** k
        for j in range(k - 1, -1, -1):
            a = cur.coeff(-j)
            if a:
                coeffs[j] = -a
                cur = cur - a * (f ** j)
    except qs.PrecisionError:
        raise MoonshineError("insufficient precision for degree %d" % k)
    return coeffs


def evaluate_polynomial(coeffs, f: qs.FracQSeries) -> qs.FracQSeries:
    out = qs.constant(coeffs[0], f.denom, f.trunc - (len(coeffs) - 1))
    for j in range(1, len(coeffs)):
        if coeffs[j]:
            out = out + coeffs[j] * (f ** j)
    return out


@dataclass(frozen=True)
class ReplicableFamily:
    """Series T_a indexed by exponents a >= 1, with a declared order.

    Lookup falls back from a to gcd(a, order), so only exponents dividing
    the order need to be supplied.
    """

    order: int
    series: dict = field(default_factory=dict)

    def series_for(self, a: int) -> qs.FracQSeries:
        if a in self.series:
            return self.series[a]
        g = math.gcd(a, self.order)
        if g in self.series:
            return self.series[g]
        raise MoonshineError("family provides no series for exponent %d" % a)

    @staticmethod
    def identity(f: qs.FracQSeries):
        return ReplicableFamily(order=1, series={1: f})


def hecke_sum(family: ReplicableFamily, k: int, prec: int) -> qs.FracQSeries:
    """sum over a*d = k, 0 <= b < d of T_a((a tau + b)/d), collapsed exactly:
    the b-sum kills every coefficient whose index is not divisible by d."""
    if k < 1:
        raise MoonshineError("k must be at least 1")
    out = {}
    trunc = prec
    for a in range(1, k + 1):
        if k % a:
            continue
        d = k // a
        s = family.series_for(a)
        if s.denom != 1:
            s = s.normalized()
            if s.denom != 1:
                raise MoonshineError(
                    "series for exponent %d has fractional q-powers" % a)
        trunc = min(trunc, (s.trunc * a) // d)
        for n, c in s.coeffs.items():
            if n % d == 0:
                e = (n // d) * a
                out[e] = out.get(e, Fraction(0)) + c * d
    return qs.FracQSeries(1, out, trunc)


def check_completely_replicable(family: ReplicableFamily, kmax: int,
                                prec: int):
    """Per-k verdicts for hecke_sum(family, k) = F_k(T_1), with the first
    differing coefficient reported on failure."""
    if prec < kmax + 2:
        raise MoonshineError("need precision at least kmax + 2")
    t1 = family.series_for(1)
    report = []
    for k in range(1, kmax + 1):
        entry = {"check": "replicable", "k": k, "status": "pass",
                 "first_discrepancy": None}
        try:
            lhs = hecke_sum(family, k, prec)
            rhs = evaluate_polynomial(faber_polynomial(t1, k), t1)
            horizon = min(lhs.trunc, rhs.trunc)
            for e in range(-k, horizon):
                a = lhs.coeffs.get(e, Fraction(0))
                b = rhs.coeffs.get(e, Fraction(0))
                if a != b:
                    entry["status"] = "fail"
                    entry["first_discrepancy"] = {
                        "exponent": e, "expected": str(a), "actual": str(b)}
                    break
        except MoonshineError as exc:
            entry["status"] = "fail"
            entry["first_discrepancy"] = {"error": str(exc)}
        report.append(entry)
    return report


def order_two_family(prec, shift=24) -> ReplicableFamily:
    """The order-2 family with T_1 the signed frame trace (plus a constant
    making the q^0 term vanish) and T_2 = J."""
    t1 = trace_theta(prec) + shift
    return ReplicableFamily(order=2, series={1: t1, 2: assemble_j(prec)})


# --- static arithmetic checks ----------------------------------------------

def supersingular_primes():
    return list(SUPERSINGULAR_PRIMES)


def check_order_bound():
    """Cross-checks between the divisibility bound and the supersingular
    list, as exact integer facts."""
    bound_primes = sorted(ORDER_LOWER_BOUND_FACTORS)
    missing = [p for p in SUPERSINGULAR_PRIMES
               if p not in ORDER_LOWER_BOUND_FACTORS]
    return {
        "supersingular_count": len(SUPERSINGULAR_PRIMES),
        "bound_primes_supersingular":
            set(bound_primes) <= set(SUPERSINGULAR_PRIMES),
        "primes_missing_from_bound": missing,
        "missing_is_17_19": missing == [17, 19],
        "valuations": {str(p): ORDER_LOWER_BOUND_FACTORS[p]
                       for p in (2, 3, 5, 7, 13)},
        "valuations_expected": {"2": 46, "3": 20, "5": 9, "7": 6, "13": 3},
    }


# --- family file format ----------------------------------------------------

def family_to_text(family: ReplicableFamily, kmax: int) -> str:
    denoms = {s.denom for s in family.series.values()}
    if len(denoms) != 1:
        raise MoonshineError("family series must share an exponent "
                             "denominator")
    lines = ["%d %d %d" % (family.order, kmax, denoms.pop())]
    for a in sorted(family.series):
        lines.append("a %d" % a)
        lines.append(qs.series_to_text(family.series[a]).rstrip("\n"))
    return "\n".join(lines) + "\n"


def family_from_text(text: str) -> ReplicableFamily:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MoonshineError("empty family file")
    head = lines[0].split()
    if len(head) != 3:
        raise MoonshineError("malformed family header")
    order = int(head[0])
    blocks = {}
    cur_a = None
    cur_lines = []
    for ln in lines[1:]:
        if ln.startswith("a "):
            if cur_a is not None:
                blocks[cur_a] = qs.series_from_text("\n".join(cur_lines))
            cur_a = int(ln.split()[1])
            cur_lines = []
        else:
            cur_lines.append(ln)
    if cur_a is not None:
        blocks[cur_a] = qs.series_from_text("\n".join(cur_lines))
    if not blocks:
        raise MoonshineError("family file has no series blocks")
    return ReplicableFamily(order=order, series=blocks)
