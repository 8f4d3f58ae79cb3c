"""Truncated formal series in fractional powers of q with exact rational
coefficients.

A series holds a global exponent denominator N, a sparse coefficient map
{k: c} meaning c * q^(k/N), and a truncation index T: coefficients are known
exactly for all exponents k/N with k < T, and unknown beyond.  Arithmetic
propagates the truncation pessimistically so tail garbage can never leak.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

MAX_DENOM = 48


class QSeriesError(ValueError):
    pass


class PrecisionError(QSeriesError):
    pass


def _lcm(a, b):
    return a * b // math.gcd(a, b)


@dataclass(frozen=True)
class FracQSeries:
    denom: int
    coeffs: dict
    trunc: int

    def __post_init__(self):
        clean = {k: Fraction(c) for k, c in self.coeffs.items()
                 if k < self.trunc and c != 0}
        object.__setattr__(self, "coeffs", clean)

    # -- basics -----------------------------------------------------------

    def leading_exponent(self):
        if not self.coeffs:
            return None
        return Fraction(min(self.coeffs), self.denom)

    def _lead_index(self):
        # for truncation bookkeeping an empty series "leads" at its horizon
        return min(self.coeffs) if self.coeffs else self.trunc

    def coeff(self, e) -> Fraction:
        """Coefficient of q^e; raises PrecisionError past the truncation."""
        k = Fraction(e) * self.denom
        if k.denominator != 1:
            if Fraction(e) * self.denom >= self.trunc:
                raise PrecisionError("exponent %s beyond truncation" % e)
            return Fraction(0)
        k = int(k)
        if k >= self.trunc:
            raise PrecisionError("exponent %s beyond truncation" % e)
        return self.coeffs.get(k, Fraction(0))

    def with_denom(self, denom):
        if denom == self.denom:
            return self
        if denom % self.denom:
            raise QSeriesError("cannot coarsen exponent denominator")
        if denom > MAX_DENOM:
            raise QSeriesError("exponent denominator %d exceeds cap %d"
                               % (denom, MAX_DENOM))
        f = denom // self.denom
        return FracQSeries(denom, {k * f: c for k, c in self.coeffs.items()},
                           self.trunc * f)

    def normalized(self):
        """Reduce the exponent denominator as far as the support allows."""
        g = self.denom
        for k in self.coeffs:
            g = math.gcd(g, k)
        if g <= 1:
            return self
        return FracQSeries(self.denom // g,
                           {k // g: c for k, c in self.coeffs.items()},
                           -((-self.trunc) // g))

    def integral_part(self):
        """Terms with integer exponents, at the same truncation horizon."""
        n = self.denom
        return FracQSeries(n, {k: c for k, c in self.coeffs.items()
                               if k % n == 0}, self.trunc)

    # -- ring operations --------------------------------------------------

    def _align(self, other):
        n = _lcm(self.denom, other.denom)
        return self.with_denom(n), other.with_denom(n)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = constant(other, self.denom, self.trunc)
        a, b = self._align(other)
        t = min(a.trunc, b.trunc)
        out = dict(a.coeffs)
        for k, c in b.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + c
        return FracQSeries(a.denom, out, t)

    __radd__ = __add__

    def __neg__(self):
        return FracQSeries(self.denom, {k: -c for k, c in self.coeffs.items()},
                           self.trunc)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = constant(other, self.denom, self.trunc)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FracQSeries(self.denom,
                               {k: c * other for k, c in self.coeffs.items()},
                               self.trunc)
        a, b = self._align(other)
        t = min(a.trunc + b._lead_index(), b.trunc + a._lead_index())
        out = {}
        for ka, ca in a.coeffs.items():
            for kb, cb in b.coeffs.items():
                k = ka + kb
                if k < t:
                    out[k] = out.get(k, Fraction(0)) + ca * cb
        return FracQSeries(a.denom, out, t)

    __rmul__ = __mul__

    def invert(self):
        """Multiplicative inverse; needs a nonzero leading coefficient."""
        if not self.coeffs:
            raise QSeriesError("cannot invert a series with no known terms")
        lead = min(self.coeffs)
        c0 = self.coeffs[lead]
        prec = self.trunc - lead  # relative precision
        # self = c0 q^(lead/N) (1 + u), u of positive valuation
        u = {k - lead: c / c0 for k, c in self.coeffs.items() if k != lead}
        inv = {0: Fraction(1)}
        term = {0: Fraction(1)}
        while True:
            nxt = {}
            for ka, ca in term.items():
                for kb, cb in u.items():
                    k = ka + kb
                    if k < prec:
                        nxt[k] = nxt.get(k, Fraction(0)) - ca * cb
            nxt = {k: c for k, c in nxt.items() if c}
            if not nxt:
                break
            for k, c in nxt.items():
                inv[k] = inv.get(k, Fraction(0)) + c
            term = nxt
        out = {k - lead: c / c0 for k, c in inv.items()}
        return FracQSeries(self.denom, out, prec - lead)

    def __pow__(self, n):
        if not isinstance(n, int):
            raise QSeriesError("powers must be integers")
        if n < 0:
            return self.invert() ** (-n)
        result = one(self.denom, self.trunc - self._lead_index())
        base = self
        e = n
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def rescale_q(self, m):
        """Substitute q -> q^m for a positive rational m (tau -> m tau)."""
        m = Fraction(m)
        if m <= 0:
            raise QSeriesError("rescale factor must be positive")
        denom = self.denom * m.denominator
        if denom > MAX_DENOM:
            raise QSeriesError("exponent denominator %d exceeds cap %d"
                               % (denom, MAX_DENOM))
        p = m.numerator
        out = {k * p: c for k, c in self.coeffs.items()}
        return FracQSeries(denom, out, self.trunc * p).normalized()

    # -- rendering --------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "O(q^%s)" % Fraction(self.trunc, self.denom)
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            e = Fraction(k, self.denom)
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append("%s*q" % c)
            else:
                parts.append("%s*q^%s" % (c, e))
        parts.append("O(q^%s)" % Fraction(self.trunc, self.denom))
        return " + ".join(parts)


def constant(c, denom=1, trunc=None):
    if trunc is None:
        raise QSeriesError("a bare constant needs an explicit truncation")
    return FracQSeries(denom, {0: Fraction(c)}, trunc)


def one(denom=1, trunc=10):
    return FracQSeries(denom, {0: Fraction(1)}, trunc)


def monomial(exponent, denom, trunc, c=1):
    e = Fraction(exponent) * denom
    if e.denominator != 1:
        raise QSeriesError("exponent %s not representable with denom %d"
                           % (exponent, denom))
    return FracQSeries(denom, {int(e): Fraction(c)}, trunc)


# --- named series ---------------------------------------------------------

def eta_quotient(factors, prec):
    """Product of eta(m*tau)^r over (m, r) pairs, to relative precision prec.

    m may be a positive integer or a half-integer (denominator 2); prec is
    counted in integer powers of q beyond the leading exponent.
    """
    if prec <= 0:
        raise QSeriesError("precision must be positive")
    factors = [(Fraction(m), int(r)) for m, r in factors]
    for m, _ in factors:
        if m <= 0 or m.denominator not in (1, 2):
            raise QSeriesError("only integer and half-integer arguments "
                               "are supported, got %s" % m)
    denom = 48 if any(m.denominator == 2 for m, _ in factors) else 24
    t = prec * denom
    result = one(denom, t)
    for m, r in factors:
        unit = one(denom, t)
        n = 1
        while True:
            step = m * n * denom
            if step >= t:
                break
            unit = unit * FracQSeries(denom, {0: Fraction(1),
                                              int(step): Fraction(-1)}, t)
            n += 1
        result = result * (unit ** r)
    shift = sum(m * r for m, r in factors) / 24
    return (result * monomial(shift, denom, t)).normalized()


def eisenstein_e4(prec):
    """E4 = 1 + 240 sum sigma_3(n) q^n."""
    if prec <= 0:
        raise QSeriesError("precision must be positive")
    coeffs = {0: Fraction(1)}
    for n in range(1, prec):
        s3 = sum(d ** 3 for d in range(1, n + 1) if n % d == 0)
        coeffs[n] = Fraction(240 * s3)
    return FracQSeries(1, coeffs, prec)


def discriminant_delta(prec):
    """Delta = q * prod (1-q^n)^24."""
    return eta_quotient([(1, 24)], prec + 1)


def weight12_match(c0, c1, prec):
    """The weight 12 level 1 form with constant term c0 and q-coefficient c1."""
    c0 = Fraction(c0)
    c1 = Fraction(c1)
    e4cubed = eisenstein_e4(prec) ** 3
    delta = discriminant_delta(prec).with_denom(1)
    return c0 * e4cubed + (c1 - 720 * c0) * delta


def char_lattice_voa(theta, d):
    """theta_L / eta^d, including the q^(-d/24) prefactor."""
    if theta.coeff(0) != 1:
        raise QSeriesError("theta series must have constant term 1")
    eta_inv = eta_quotient([(1, -d)], max(theta.trunc // theta.denom + 2, 3))
    return theta * eta_inv


# --- text format ----------------------------------------------------------

def series_to_text(s: FracQSeries) -> str:
    lines = ["%d %d" % (s.denom, s.trunc)]
    for k in sorted(s.coeffs):
        c = s.coeffs[k]
        lines.append("%d %d/%d" % (k, c.numerator, c.denominator))
    return "\n".join(lines) + "\n"


def series_from_text(text: str) -> FracQSeries:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    denom, trunc = (int(t) for t in lines[0].split())
    coeffs = {}
    for ln in lines[1:]:
        k_str, frac = ln.split()
        coeffs[int(k_str)] = Fraction(frac)
    return FracQSeries(denom, coeffs, trunc)
