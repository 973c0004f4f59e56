"""Sparse exact polynomial arithmetic in one and two variables.

Coefficients are Python ints (arbitrary precision). Fractions are accepted
too, because the power-series code needs exact division; a Fraction whose
denominator reduces to 1 is stored back as an int, so integral results
compare equal to pure-int polynomials. Zero coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def binom(a: int, b: int) -> int:
    """Binomial coefficient with the edge rules used everywhere in this
    package: 0 whenever b < 0 or a < b, with the single exception
    binom(-1, -1) = 1 (needed so the k = 0 terms of the triple sums
    collapse to the geometric series in y*t)."""
    if a == -1 and b == -1:
        return 1
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def _store(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Poly1:
    """Sparse univariate polynomial, exponent -> coefficient."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            items = coeffs.items() if hasattr(coeffs, "items") else coeffs
            for e, c in items:
                if e < 0:
                    raise ValueError(f"negative exponent {e}")
                c = data.get(e, 0) + c
                if c:
                    data[e] = c
                else:
                    data.pop(e, None)
        self._c = {e: _store(c) for e, c in data.items()}

    @classmethod
    def zero(cls) -> "Poly1":
        return cls()

    @classmethod
    def one(cls) -> "Poly1":
        return cls({0: 1})

    @classmethod
    def term(cls, c, e: int) -> "Poly1":
        return cls({e: c})

    def coeff(self, e: int):
        return self._c.get(e, 0)

    def items(self):
        return sorted(self._c.items())

    def degree(self) -> int:
        """Maximum stored exponent; -1 for the zero polynomial."""
        return max(self._c) if self._c else -1

    def min_degree(self) -> int:
        return min(self._c) if self._c else -1

    def is_zero(self) -> bool:
        return not self._c

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._c.values())

    def evaluate(self, v):
        return sum(c * v**e for e, c in self._c.items())

    def shift(self, k: int) -> "Poly1":
        """Multiply by x^k."""
        return Poly1({e + k: c for e, c in self._c.items()})

    def shift_down(self, k: int) -> "Poly1":
        """Divide by x^k; every stored exponent must be >= k."""
        if self._c and min(self._c) < k:
            raise ValueError(f"not divisible by x^{k}")
        return Poly1({e - k: c for e, c in self._c.items()})

    def scale(self, s) -> "Poly1":
        if not s:
            return Poly1()
        return Poly1({e: c * s for e, c in self._c.items()})

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, Poly1):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == Poly1({0: other})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __neg__(self):
        return Poly1({e: -c for e, c in self._c.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly1({0: other})
        if not isinstance(other, Poly1):
            return NotImplemented
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return Poly1(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly1({0: other})
        if not isinstance(other, Poly1):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly1):
            return NotImplemented
        out = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return Poly1(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Poly1.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def to_poly2(self) -> "Poly2":
        """Embed as a polynomial in x (no y)."""
        return Poly2({(e, 0): c for e, c in self._c.items()})

    def to_pairs(self):
        """Serialization: sorted [exponent, decimal-string] pairs."""
        if not self.is_integral():
            raise ValueError("cannot serialize non-integral coefficients")
        return [[e, str(c)] for e, c in self.items()]

    @classmethod
    def from_pairs(cls, pairs) -> "Poly1":
        return cls({int(e): int(c) for e, c in pairs})

    def __str__(self):
        return _render(self.items(), _mono1)

    def __repr__(self):
        return f"Poly1({self!s})"


class Poly2:
    """Sparse bivariate polynomial in x and y, (i, j) -> coefficient."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            items = coeffs.items() if hasattr(coeffs, "items") else coeffs
            for (i, j), c in items:
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent pair ({i}, {j})")
                key = (i, j)
                c = data.get(key, 0) + c
                if c:
                    data[key] = c
                else:
                    data.pop(key, None)
        self._c = {k: _store(c) for k, c in data.items()}

    @classmethod
    def zero(cls) -> "Poly2":
        return cls()

    @classmethod
    def one(cls) -> "Poly2":
        return cls({(0, 0): 1})

    @classmethod
    def term(cls, c, i: int, j: int) -> "Poly2":
        return cls({(i, j): c})

    def coeff(self, i: int, j: int):
        return self._c.get((i, j), 0)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._c.values())

    def deg_x(self) -> int:
        return max((i for i, _ in self._c), default=-1)

    def deg_y(self) -> int:
        return max((j for _, j in self._c), default=-1)

    def coeff_of_y(self, j: int) -> Poly1:
        """The x-polynomial multiplying y^j."""
        return Poly1({i: c for (i, jj), c in self._c.items() if jj == j})

    def substitute_y(self, value) -> Poly1:
        """Specialize y to 0, 1 or x; y := x sends x^i y^j to x^(i+j)."""
        if value == 0:
            return self.coeff_of_y(0)
        if value == 1:
            out = {}
            for (i, _), c in self._c.items():
                out[i] = out.get(i, 0) + c
            return Poly1(out)
        if value == "x":
            out = {}
            for (i, j), c in self._c.items():
                out[i + j] = out.get(i + j, 0) + c
            return Poly1(out)
        raise ValueError("y can only be specialized to 0, 1 or 'x'")

    def shift(self, i: int, j: int) -> "Poly2":
        """Multiply by x^i y^j."""
        return Poly2({(a + i, b + j): c for (a, b), c in self._c.items()})

    def scale(self, s) -> "Poly2":
        if not s:
            return Poly2()
        return Poly2({k: c * s for k, c in self._c.items()})

    def as_int(self) -> "Poly2":
        if not self.is_integral():
            raise ValueError(f"non-integral coefficients in {self}")
        return self

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, Poly2):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == Poly2({(0, 0): other})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __neg__(self):
        return Poly2({k: -c for k, c in self._c.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly2({(0, 0): other})
        if not isinstance(other, Poly2):
            return NotImplemented
        out = dict(self._c)
        for k, c in other._c.items():
            out[k] = out.get(k, 0) + c
        return Poly2(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly2({(0, 0): other})
        if not isinstance(other, Poly2):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        out = {}
        for (i1, j1), c1 in self._c.items():
            for (i2, j2), c2 in other._c.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return Poly2(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Poly2.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def to_triples(self):
        """Serialization: [i, j, decimal-string] sorted lexicographically."""
        if not self.is_integral():
            raise ValueError("cannot serialize non-integral coefficients")
        return [[i, j, str(c)] for (i, j), c in self.items()]

    @classmethod
    def from_triples(cls, triples) -> "Poly2":
        return cls({(int(i), int(j)): int(c) for i, j, c in triples})

    def __str__(self):
        return _render(self.items(), _mono2)

    def __repr__(self):
        return f"Poly2({self!s})"


# expansions of the binomial-power building blocks used by the transforms

def one_plus_x(n: int) -> Poly1:
    """(1+x)^n."""
    return Poly1({k: comb(n, k) for k in range(n + 1)})


def one_minus_x(n: int) -> Poly1:
    """(1-x)^n."""
    return Poly1({k: (-1) ** k * comb(n, k) for k in range(n + 1)})


def one_plus_x2(n: int) -> Poly2:
    return Poly2({(k, 0): comb(n, k) for k in range(n + 1)})


def one_minus_x2(n: int) -> Poly2:
    return Poly2({(k, 0): (-1) ** k * comb(n, k) for k in range(n + 1)})


def one_plus_xy(n: int) -> Poly2:
    """(1+xy)^n."""
    return Poly2({(k, k): comb(n, k) for k in range(n + 1)})


def one_plus_2x(n: int) -> Poly2:
    """(1+2x)^n."""
    return Poly2({(k, 0): comb(n, k) * 2**k for k in range(n + 1)})


def one_plus_x_plus_y(n: int) -> Poly2:
    """(1+x+y)^n."""
    out = {}
    for a in range(n + 1):
        for b in range(n + 1 - a):
            out[(a, b)] = comb(n, a) * comb(n - a, b)
    return Poly2(out)


def _mono1(e):
    if e == 0:
        return ""
    return "x" if e == 1 else f"x^{e}"


def _mono2(key):
    i, j = key
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def _render(items, mono):
    if not items:
        return "0"
    chunks = []
    for key, c in items:
        m = mono(key)
        if not m:
            body = str(abs(c))
        elif abs(c) == 1:
            body = m
        else:
            body = f"{abs(c)}*{m}"
        neg = c < 0
        if not chunks:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)
