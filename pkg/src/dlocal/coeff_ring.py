"""Exact arithmetic in Z[p, 1/p][g_1, ..., g_{n-1}].

The Gauss-sum symbols g_k stay formal: g_0 is identified with the constant
-1, indices reduce mod n when a symbol is constructed, and no further
relations among the g_k are imposed.  An element is a finite sum of terms

    (Laurent polynomial in p) * g_1^{e_1} * ... * g_{n-1}^{e_{n-1}},

stored as a map from the g-exponent vector (a tuple of length n-1) to a
sparse Laurent polynomial {p-exponent: integer coefficient}.  Canonical
form keeps no zero coefficients and no empty polynomials, so equality of
canonical forms is exact equality in the ring.  For n = 1 the g-exponent
vector is empty and elements are plain Laurent polynomials in p.

Instances are immutable by convention: every operation returns a fresh
element and nothing mutates ``terms`` after construction.
"""

from __future__ import annotations

from fractions import Fraction


class RingElem:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError(f"cover degree n must be >= 1, got {n}")
        canonical: dict[tuple[int, ...], dict[int, int]] = {}
        for gmono, poly in (terms or {}).items():
            gmono = tuple(gmono)
            if len(gmono) != n - 1:
                raise ValueError(
                    f"g-exponent vector {gmono} has length {len(gmono)}, expected {n - 1}"
                )
            cleaned = {int(e): int(c) for e, c in poly.items() if c != 0}
            if cleaned:
                canonical[gmono] = cleaned
        self.n = n
        self.terms = canonical

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "RingElem":
        return cls(n)

    @classmethod
    def integer(cls, c: int, n: int) -> "RingElem":
        return cls(n, {(0,) * (n - 1): {0: c}})

    @classmethod
    def one(cls, n: int) -> "RingElem":
        return cls.integer(1, n)

    @classmethod
    def p_power(cls, e: int, n: int) -> "RingElem":
        """The monomial p^e (e may be negative)."""
        return cls(n, {(0,) * (n - 1): {int(e): 1}})

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "RingElem":
        if isinstance(other, int):
            return RingElem.integer(other, self.n)
        if isinstance(other, RingElem):
            if other.n != self.n:
                raise ValueError(f"modulus mismatch: {self.n} vs {other.n}")
            return other
        return NotImplemented

    def __add__(self, other) -> "RingElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {g: dict(poly) for g, poly in self.terms.items()}
        for g, poly in other.terms.items():
            acc = out.setdefault(g, {})
            for e, c in poly.items():
                acc[e] = acc.get(e, 0) + c
        return RingElem(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "RingElem":
        return RingElem(
            self.n, {g: {e: -c for e, c in poly.items()} for g, poly in self.terms.items()}
        )

    def __sub__(self, other) -> "RingElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RingElem":
        return (-self) + other

    def __mul__(self, other) -> "RingElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, ...], dict[int, int]] = {}
        for g1, poly1 in self.terms.items():
            for g2, poly2 in other.terms.items():
                g = tuple(a + b for a, b in zip(g1, g2))
                acc = out.setdefault(g, {})
                for e1, c1 in poly1.items():
                    for e2, c2 in poly2.items():
                        e = e1 + e2
                        acc[e] = acc.get(e, 0) + c1 * c2
        return RingElem(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RingElem":
        if k < 0:
            raise ValueError("only nonnegative powers are defined")
        result = RingElem.one(self.n)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    @property
    def is_zero(self) -> bool:
        return not self.terms

    # -- evaluation --------------------------------------------------------

    def evaluate(self, p_value, g_values=()) -> Fraction:
        """Substitute rational values for p and every g_k."""
        p_value = Fraction(p_value)
        if p_value == 0:
            raise ValueError("p must be nonzero")
        g_values = tuple(Fraction(v) for v in g_values)
        if len(g_values) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} g-values, got {len(g_values)}")
        total = Fraction(0)
        for gmono, poly in self.terms.items():
            factor = Fraction(1)
            for gv, e in zip(g_values, gmono):
                factor *= gv**e
            total += factor * sum(c * p_value**e for e, c in poly.items())
        return total

    def eval_p(self, p_value) -> dict[tuple[int, ...], Fraction]:
        """Substitute a rational p only, keeping the g-monomials formal."""
        p_value = Fraction(p_value)
        if p_value == 0:
            raise ValueError("p must be nonzero")
        out = {}
        for gmono, poly in sorted(self.terms.items()):
            value = sum((c * p_value**e for e, c in poly.items()), Fraction(0))
            if value:
                out[gmono] = value
        return out

    # -- serialization -----------------------------------------------------

    def to_json_obj(self):
        return {
            "n": self.n,
            "terms": [
                {"g": list(g), "p": [[c, e] for e, c in sorted(poly.items())]}
                for g, poly in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "RingElem":
        return cls(
            obj["n"],
            {tuple(t["g"]): {e: c for c, e in t["p"]} for t in obj["terms"]},
        )

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for gmono, poly in sorted(self.terms.items()):
            gstr = _gmono_str(gmono)
            lstr = _laurent_str(poly)
            if not gstr:
                parts.append(lstr)
            elif lstr == "1":
                parts.append(gstr)
            elif lstr == "-1":
                parts.append("-" + gstr)
            elif len(poly) == 1:
                parts.append(f"{lstr}*{gstr}")
            else:
                parts.append(f"({lstr})*{gstr}")
        out = parts[0]
        for part in parts[1:]:
            out += part if part.startswith("-") else "+" + part
        return out

    def __repr__(self) -> str:
        return f"RingElem(n={self.n}, {self})"


def _laurent_str(poly: dict[int, int]) -> str:
    chunks = []
    for e, c in sorted(poly.items(), reverse=True):
        if e == 0:
            body = str(abs(c))
        else:
            pe = "p" if e == 1 else f"p^{e}"
            body = pe if abs(c) == 1 else f"{abs(c)}*{pe}"
        sign = "-" if c < 0 else ("+" if chunks else "")
        chunks.append(sign + body)
    return "".join(chunks)


def _gmono_str(gmono: tuple[int, ...]) -> str:
    pieces = []
    for idx, e in enumerate(gmono):
        if e == 0:
            continue
        pieces.append(f"g{idx + 1}" if e == 1 else f"g{idx + 1}^{e}")
    return "*".join(pieces)


def gauss_symbol(k: int, n: int) -> RingElem:
    """The symbol g_{k mod n}, with g_0 eliminated as the constant -1."""
    if n < 1:
        raise ValueError(f"cover degree n must be >= 1, got {n}")
    if k < 0:
        raise ValueError(f"Gauss symbol index must be >= 0, got {k}")
    k = k % n
    if k == 0:
        return RingElem.integer(-1, n)
    gmono = tuple(1 if idx == k - 1 else 0 for idx in range(n - 1))
    return RingElem(n, {gmono: {0: 1}})
