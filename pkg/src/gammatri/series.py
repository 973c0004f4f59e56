"""Truncated formal power series in t with exact bivariate coefficients,
and the generating-series identities they verify.

A TruncSeries knows its coefficients for t^0 .. t^(order-1) and nothing
beyond; every operation propagates the honestly-known order (multiplying
by t gains one, d/dt loses one). Rational scalars appear inside square
roots and inverses, and integrality is asserted wherever the target series
is integral.

Series (all with polynomial-in-x coefficients):
  g    = sqrt((1-t)^2 - 4xt^2)
  gA   = (1 + t - g) / (2t(tx+1))      or its defining double sum
  gB   = (2tx + g - t + 1) / (2g(tx+1))
  gD   = (g-1)(g-1+t) / (2g)
  GA, GB = triple sums generating the type A / type B triangles
  GD   = triangle generating series of type D, assembled rank by rank
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .coxeter import gamma_triangle_D, gamma_triangle_diagram, standard_diagram
from .poly import Poly2, binom
from .report import Check


class TruncSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=None):
        if order < 1:
            raise ValueError("order must be >= 1")
        self.order = order
        cs = list(coeffs or [])
        if len(cs) > order:
            raise ValueError("more coefficients than the stated order")
        cs += [Poly2.zero()] * (order - len(cs))
        self.coeffs = [c if isinstance(c, Poly2) else Poly2({(0, 0): c})
                       for c in cs]

    @classmethod
    def from_map(cls, mapping: dict, order: int) -> "TruncSeries":
        cs = [Poly2.zero()] * order
        for n, c in mapping.items():
            if n < order:
                cs[n] = c if isinstance(c, Poly2) else Poly2({(0, 0): c})
        return cls(order, cs)

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls.from_map({0: 1}, order)

    def coeff(self, n: int) -> Poly2:
        if n >= self.order:
            raise ValueError(f"coefficient of t^{n} unknown at order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(order, self.coeffs[:order])

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, (int, Fraction, Poly2)):
            return TruncSeries.from_map({0: other}, self.order)
        return None

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __neg__(self):
        return TruncSeries(self.order, [-c for c in self.coeffs])

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return TruncSeries(n, [self.coeffs[k] + o.coeffs[k] for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly2)):
            return TruncSeries(self.order, [c * other for c in self.coeffs])
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [Poly2.zero()] * n
        for i, a in enumerate(self.coeffs[:n]):
            if a.is_zero():
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(n, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def shift_t(self, k: int = 1) -> "TruncSeries":
        """Multiply by t^k; the known order grows by k."""
        return TruncSeries(self.order + k, [Poly2.zero()] * k + self.coeffs)

    def div_t(self, k: int = 1) -> "TruncSeries":
        """Divide by t^k; the first k coefficients must vanish."""
        for n in range(k):
            if not self.coeffs[n].is_zero():
                raise ValueError(f"coefficient of t^{n} is nonzero, cannot divide by t^{k}")
        if self.order - k < 1:
            raise ValueError("nothing left after dividing by t")
        return TruncSeries(self.order - k, self.coeffs[k:])

    def d_dt(self) -> "TruncSeries":
        if self.order < 2:
            raise ValueError("need order >= 2 to differentiate")
        return TruncSeries(self.order - 1,
                           [self.coeffs[n + 1] * (n + 1)
                            for n in range(self.order - 1)])

    def euler_theta(self) -> "TruncSeries":
        """t d/dt: multiply the t^n coefficient by n."""
        return TruncSeries(self.order,
                           [c * n for n, c in enumerate(self.coeffs)])

    def _constant_term_value(self):
        c0 = self.coeffs[0]
        if c0.deg_x() > 0 or c0.deg_y() > 0:
            raise ValueError(f"constant term {c0} is not a scalar")
        return c0.coeff(0, 0)

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; the constant term must be a nonzero scalar."""
        v = self._constant_term_value()
        if not v:
            raise ValueError("constant term is zero, not invertible")
        inv0 = Fraction(1) / v
        out = [Poly2({(0, 0): inv0})]
        for n in range(1, self.order):
            acc = Poly2.zero()
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * out[n - k]
            out.append(acc.scale(-inv0))
        return TruncSeries(self.order, out)

    def sqrt(self) -> "TruncSeries":
        """Square root with constant term 1, by coefficient recursion."""
        if self._constant_term_value() != 1:
            raise ValueError("square root needs constant term 1")
        half = Fraction(1, 2)
        out = [Poly2.one()]
        for n in range(1, self.order):
            acc = self.coeffs[n]
            for k in range(1, n):
                acc = acc - out[k] * out[n - k]
            out.append(acc.scale(half))
        return TruncSeries(self.order, out)

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.coeffs)

    def assert_integral(self, what: str) -> "TruncSeries":
        for n, c in enumerate(self.coeffs):
            if not c.is_integral():
                raise ArithmeticError(
                    f"{what}: non-integral coefficient {c} at t^{n}")
        return self

    def first_nonzero(self, through: int):
        """(n, coefficient) of the first nonzero term with n <= through,
        or None; raises if the series is not known that far."""
        if through >= self.order:
            raise ValueError(
                f"series only known through t^{self.order - 1}, asked t^{through}")
        for n in range(through + 1):
            if not self.coeffs[n].is_zero():
                return n, self.coeffs[n]
        return None

    def is_zero_through(self, through: int) -> bool:
        return self.first_nonzero(through) is None

    def agrees_through(self, other: "TruncSeries", through: int) -> bool:
        return (self - other).is_zero_through(through)

    def __str__(self):
        parts = [f"({c})*t^{n}" for n, c in enumerate(self.coeffs)
                 if not c.is_zero()]
        head = " + ".join(parts[:6]) if parts else "0"
        return f"{head} + O(t^{self.order})"

    def __repr__(self):
        return f"TruncSeries(order={self.order}, {self!s})"


def substitute_x_over_t_times_t(s: TruncSeries) -> TruncSeries:
    """t * s(x/t, t): the monomial x^k t^n moves to x^k t^(n-k+1).

    Requires n >= 2k on every monomial (asserted; in particular the t-power
    never goes negative, and no y may appear). Under that support condition
    the result is complete through t^j exactly when the source is known
    through t^(2j-2), which the returned order reflects."""
    new_order = (s.order + 1) // 2 + 1
    out = [Poly2.zero()] * new_order
    for n, c in enumerate(s.coeffs):
        if c.deg_y() > 0:
            raise ValueError("substitution defined for y-free series only")
        for (k, _), v in c.items():
            if n < 2 * k:
                raise ArithmeticError(
                    f"monomial x^{k} t^{n} violates the n >= 2k support "
                    "condition of the substitution")
            target = n - k + 1
            if target < new_order:
                out[target] = out[target] + Poly2.term(v, k, 0)
    return TruncSeries(new_order, out)


def substitute_x_to_xt(s: TruncSeries) -> TruncSeries:
    """s(xt, t): the monomial x^k t^n moves to x^k t^(n+k)."""
    out = [Poly2.zero()] * s.order
    for n, c in enumerate(s.coeffs):
        if c.deg_y() > 0:
            raise ValueError("substitution defined for y-free series only")
        for (k, _), v in c.items():
            if n + k < s.order:
                out[n + k] = out[n + k] + Poly2.term(v, k, 0)
    return TruncSeries(s.order, out)


def _x_poly(mapping: dict) -> Poly2:
    return Poly2({(k, 0): c for k, c in mapping.items()})


def g_base(order: int) -> TruncSeries:
    """g = sqrt((1-t)^2 - 4xt^2); all coefficients integral."""
    radicand = TruncSeries.from_map(
        {0: 1, 1: -2, 2: _x_poly({0: 1, 1: -4})}, order)
    return radicand.sqrt().assert_integral("g")


def g_base_alt(order: int) -> TruncSeries:
    """The same series computed as (1-t) sqrt(1 - 4x (t/(1-t))^2)."""
    one_minus_t = TruncSeries.from_map({0: 1, 1: -1}, order)
    u = TruncSeries.from_map({1: 1}, order) * one_minus_t.inverse()
    radicand = TruncSeries.one(order) - (u * u) * _x_poly({1: 4})
    return (one_minus_t * radicand.sqrt()).assert_integral("g (alternate route)")


def g_closed(kind: str, order: int) -> TruncSeries:
    """Closed forms of gA, gB, gD as algebraic expressions in g."""
    if kind == "A":
        g = g_base(order + 1)
        num = TruncSeries.from_map({0: 1, 1: 1}, order + 1) - g
        den = TruncSeries.from_map({0: 2, 1: _x_poly({1: 2})}, order)
        return (num.div_t() * den.inverse()).assert_integral("gA")
    if kind == "B":
        g = g_base(order)
        num = g + TruncSeries.from_map({0: 1, 1: _x_poly({0: -1, 1: 2})}, order)
        den = g * TruncSeries.from_map({0: 2, 1: _x_poly({1: 2})}, order)
        return (num * den.inverse()).assert_integral("gB")
    if kind == "D":
        g = g_base(order)
        gm1 = g - 1
        num = gm1 * (gm1 + TruncSeries.from_map({1: 1}, order))
        return (num * (g * 2).inverse()).assert_integral("gD")
    raise ValueError(f"unknown series kind {kind!r}")


# coefficient formulas of the defining sums (exact rationals; the totals
# are integral and asserted so on assembly)

def a_local_coeff(k: int, m: int) -> Fraction:
    return Fraction(binom(2 * k + m, k) * binom(k + m - 1, k - 1), k + m + 1)


def b_local_coeff(k: int, m: int) -> int:
    return binom(2 * k + m, k) * binom(k + m - 1, k - 1)


def d_local_coeff(k: int, m: int) -> Fraction:
    return Fraction((2 * k + m - 2) * binom(2 * k - 2, k - 1)
                    * binom(2 * k + m - 2, 2 * k - 2), k)


def a_triangle_coeff(k: int, m: int, l: int) -> Fraction:
    return Fraction((l + 1) * binom(l + 2 * k + m, k) * binom(k + m - 1, k - 1),
                    l + k + m + 1)


def b_triangle_coeff(k: int, m: int, l: int) -> int:
    return binom(2 * k + l + m, k) * binom(k + m - 1, k - 1)


def g_sum(kind: str, order: int) -> TruncSeries:
    """gA, gB, gD from their defining double sums over x^k t^(2k+m)."""
    coeff = {"A": a_local_coeff, "B": b_local_coeff, "D": d_local_coeff}[kind]
    kmin = 1 if kind == "D" else 0
    out = []
    for n in range(order):
        c = {}
        for k in range(kmin, n // 2 + 1):
            v = coeff(k, n - 2 * k)
            if v:
                c[k] = v
        out.append(_x_poly(c))
    return TruncSeries(order, out).assert_integral(f"g{kind} (sum route)")


def G_sum(kind: str, order: int) -> TruncSeries:
    """GA, GB from their defining triple sums over x^k y^l t^(2k+m+l)."""
    coeff = {"A": a_triangle_coeff, "B": b_triangle_coeff}[kind]
    out = []
    for n in range(order):
        c = {}
        for k in range(n // 2 + 1):
            for l in range(n - 2 * k + 1):
                v = coeff(k, n - 2 * k - l, l)
                if v:
                    c[(k, l)] = v
        out.append(Poly2(c))
    return TruncSeries(order, out).assert_integral(f"G{kind} (sum route)")


def G_D_assembled(order: int) -> TruncSeries:
    """sum over n >= 2 of the type D rank n triangle times t^n (rank 2 is
    the disconnected convention y^2, rank 3 matches type A rank 3)."""
    out = {n: gamma_triangle_D(n).to_poly2() for n in range(3, order)}
    if order > 2:
        out[2] = Poly2({(0, 2): 1})
    return TruncSeries.from_map(out, order)


def G_closed(kind: str, order: int) -> TruncSeries:
    """GA and GB solved out of the recursive relations
    G = g + yt gA G, i.e. G = g / (1 - yt gA); GD via yt (GB - 1) + gD."""
    if kind in ("A", "B"):
        gA = g_closed("A", order)
        g = gA if kind == "A" else g_closed("B", order)
        yt_gA = (gA * Poly2({(0, 1): 1})).shift_t().truncate(order)
        return (g * (TruncSeries.one(order) - yt_gA).inverse()
                ).assert_integral(f"G{kind} (closed route)")
    if kind == "D":
        GB = G_closed("B", order)
        gD = g_closed("D", order)
        return (((GB - 1) * Poly2({(0, 1): 1})).shift_t().truncate(order)
                + gD).assert_integral("GD (closed route)")
    raise ValueError(f"unknown series kind {kind!r}")


def eq_c_series(order: int) -> TruncSeries:
    """1 - t - 2 sum_(n>=1) sum_i binom(2i-2, i-1) binom(n-2, 2i-2)/i x^i t^n,
    the fully expanded double-sum form of g."""
    out = [Poly2.one(), Poly2({(0, 0): -1})]
    for n in range(2, order):
        c = {}
        for i in range(1, n // 2 + 1):
            c[i] = Fraction(-2 * comb(2 * i - 2, i - 1) * comb(n - 2, 2 * i - 2), i)
        out.append(_x_poly(c))
    return TruncSeries(order, out[:order]).assert_integral("g (double-sum route)")


def two_minus_theta(s: TruncSeries) -> TruncSeries:
    """(2 - theta_t) applied to a series, theta_t being the Euler derivation."""
    return s * 2 - s.euler_theta()


def gB_via_substitution(order: int) -> TruncSeries:
    """gB recovered from gA alone: differentiate t*gA(x/t, t) in t, then
    substitute x -> xt."""
    gA = g_sum("A", 2 * order + 2)
    h = substitute_x_over_t_times_t(gA)
    return substitute_x_to_xt(h.d_dt())


ODE_NAME = "ode_g"

IDENTITY_NAMES = (
    "conjA", "conjB", "conjD", "eqC",
    "petitA_grandA", "petitB_grandB_1", "petitB_grandB_2",
    "petitD_grandD", "mini_D", "bizarre_B_D",
    ODE_NAME, "euler_gD", "gB_from_gA_substitution",
)


def verify_identities(order: int) -> list[Check]:
    """Evaluate every generating-series identity as LHS - RHS and report
    whether the residual vanishes through t^order."""
    N = order
    y = Poly2({(0, 1): 1})
    g = g_base(N + 2)
    gA, gB, gD = (g_sum(k, N + 1) for k in "ABD")
    GA, GB = (G_sum(k, N + 1) for k in "AB")
    GD = G_D_assembled(N + 1)

    def yt(s):
        return (s * y).shift_t()

    residuals = {
        "conjA": gA - g_closed("A", N + 1),
        "conjB": gB - g_closed("B", N + 1),
        "conjD": gD - g_closed("D", N + 1),
        "eqC": g.truncate(N + 1) - eq_c_series(N + 1),
        "petitA_grandA": GA - gA - yt(gA * GA),
        "petitB_grandB_1": GB - gB - yt(gA * GB),
        "petitB_grandB_2": GB - gB - yt(gB * GA),
        "petitD_grandD": (GD - gD - 2 * yt(gA - 1)
                          - ((gA * y * y).shift_t(2)) - yt(gA * GD)),
        "mini_D": (gB - 1) - 2 * (gA - 1) - gA * gD,
        "bizarre_B_D": GD - yt(GB - 1) - gD,
        ODE_NAME: ((g * g.d_dt()).shift_t() - g * g
                   + TruncSeries.from_map({0: 1, 1: -1}, N + 2)),
        "euler_gD": gD - two_minus_theta(
            (g + TruncSeries.from_map({0: -1, 1: 1}, N + 2)) * Fraction(1, 2)),
        "gB_from_gA_substitution": gB_via_substitution(N) - gB.truncate(N + 1),
    }
    checks = []
    for name in IDENTITY_NAMES:
        res = residuals[name]
        hit = res.first_nonzero(N)
        if hit is None:
            checks.append(Check(name, True, f"residual 0 through t^{N}"))
        else:
            checks.append(Check(name, False,
                                f"first nonzero residual at t^{hit[0]}: {hit[1]}"))
    return checks


def carlitz_convolution_check(kmax: int, mmax: int, lmax: int) -> list[Check]:
    """The two convolution sums used to prove the type A and type B
    triangle relations, each against its closed-form right-hand side,
    exhaustively for 1 <= k <= kmax, 0 <= m <= mmax, 0 <= l <= lmax."""
    if min(kmax, mmax, lmax) < 1:
        raise ValueError("bounds must be >= 1")
    failures_a = []
    failures_b = []
    for k in range(1, kmax + 1):
        for m in range(mmax + 1):
            for l in range(lmax + 1):
                conv_a = sum(a_local_coeff(k1, m1) * a_triangle_coeff(k - k1, m - m1, l)
                             for k1 in range(k + 1) for m1 in range(m + 1))
                rhs_a = Fraction((l + 2) * k * comb(2 * k + m + l + 2, k)
                                 * comb(k + m, m),
                                 (2 * k + m + l + 2) * (k + m))
                if conv_a != rhs_a:
                    failures_a.append((k, m, l, conv_a, rhs_a))
                conv_b = sum(a_local_coeff(k1, m1) * b_triangle_coeff(k - k1, m - m1, l)
                             for k1 in range(k + 1) for m1 in range(m + 1))
                rhs_b = comb(2 * k + m + l + 1, k) * binom(k + m - 1, m)
                if conv_b != rhs_b:
                    failures_b.append((k, m, l, conv_b, rhs_b))
    rng = f"k <= {kmax}, m <= {mmax}, l <= {lmax}"
    return [
        Check("carlitz_convolution_A", not failures_a,
              f"all equal for {rng}" if not failures_a
              else f"mismatches: {failures_a[:3]}"),
        Check("carlitz_convolution_B", not failures_b,
              f"all equal for {rng}" if not failures_b
              else f"mismatches: {failures_b[:3]}"),
    ]


def binomial_identity_check(nmax: int) -> list[Check]:
    """(binom(n-2,i-1)binom(n-i-2,i-2) + binom(n-1,i)binom(n-i-2,i-1))/(n-i)
    = binom(2i-2,i-1)binom(n-2,2i-2)/i for 2 <= n <= nmax, 1 <= i <= n/2."""
    if nmax < 2:
        raise ValueError("nmax must be >= 2")
    failures = []
    for n in range(2, nmax + 1):
        for i in range(1, n // 2 + 1):
            lhs = Fraction(binom(n - 2, i - 1) * binom(n - i - 2, i - 2)
                           + binom(n - 1, i) * binom(n - i - 2, i - 1), n - i)
            rhs = Fraction(binom(2 * i - 2, i - 1) * binom(n - 2, 2 * i - 2), i)
            if lhs != rhs:
                failures.append((n, i, lhs, rhs))
    return [Check("binomial_identity", not failures,
                  f"exact for all n <= {nmax}" if not failures
                  else f"mismatches: {failures[:3]}")]
