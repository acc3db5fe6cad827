"""Exact Laurent polynomials in one variable with Python-int coefficients."""
from collections import defaultdict


class LaurentPolynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, coeffs=None):
        if isinstance(coeffs, LaurentPolynomial):
            items = coeffs._terms
        elif isinstance(coeffs, dict):
            items = coeffs.items()
        elif coeffs is None:
            items = ()
        else:
            items = coeffs
        acc = defaultdict(int)
        for e, c in items:
            acc[int(e)] += int(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = None

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    # --- structure
    def terms(self):
        return self._terms

    def as_dict(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def min_degree(self):
        return self._terms[0][0] if self._terms else None

    def max_degree(self):
        return self._terms[-1][0] if self._terms else None

    def span(self):
        return self.max_degree() - self.min_degree() if self._terms else 0

    def __len__(self):
        return len(self._terms)

    # --- arithmetic
    def __add__(self, other):
        other = _lift(other)
        return LaurentPolynomial(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        acc = defaultdict(int)
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] += c1 * c2
        return LaurentPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have inverses")
            (e, c), = self._terms
            if abs(c) != 1:
                raise ValueError("coefficient is not a unit")
            return LaurentPolynomial({e * k: c ** -k})
        out, base = LaurentPolynomial.constant(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k):
        return LaurentPolynomial((e + k, c) for e, c in self._terms)

    def scale_exponents(self, k):
        """Substitute x -> x**k (k may be negative)."""
        return LaurentPolynomial((e * k, c) for e, c in self._terms)

    def invert(self):
        """Substitute x -> 1/x."""
        return self.scale_exponents(-1)

    def exact_divide(self, divisor):
        """Division that must leave no remainder."""
        divisor = _lift(divisor)
        rem = dict(self._terms)
        quot = defaultdict(int)
        de, dc = divisor._terms[-1]
        floor = (self.min_degree() or 0) - divisor.min_degree()
        while rem and max(rem) - de >= floor:
            e = max(rem)
            q, r = divmod(rem[e], dc)
            if r:
                raise ArithmeticError("inexact division")
            quot[e - de] += q
            for f, g in divisor._terms:
                key = f + e - de
                rem[key] = rem.get(key, 0) - q * g
                if rem[key] == 0:
                    del rem[key]
        if rem:
            raise ArithmeticError("inexact division")
        return LaurentPolynomial(quot)

    # --- evaluation
    def evaluate(self, x):
        return sum(c * x ** e for e, c in self._terms)

    def evaluate_mod(self, x, p):
        total = 0
        for e, c in self._terms:
            total += c * pow(x, e, p)
        return total % p

    # --- comparison and printing
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __lt__(self, other):
        return self._terms < other._terms

    def __repr__(self):
        return f"LaurentPolynomial({list(self._terms)})"

    def to_string(self, var="A"):
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {b}" for s, b in parts[1:])

    __str__ = to_string


def _lift(x):
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


A = LaurentPolynomial.monomial(1)
DELTA = LaurentPolynomial({2: -1, -2: -1})
