"""Integer Laurent polynomials in one formal variable.

This is the value space for bracket-style state sums: coefficients are exact
Python ints and exponents may be negative.  Only the operations those sums
need are provided (ring arithmetic, monomial shifts, exact division, span
bookkeeping, exponent substitutions).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class LaurentPoly:
    """A Laurent polynomial with integer coefficients, stored sparsely.

    Instances are immutable; zero coefficients are never stored, so the
    degree span of a nonzero polynomial is always well defined.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for exp, coef in items:
            if coef:
                acc[exp] = acc.get(exp, 0) + coef
                if not acc[exp]:
                    del acc[exp]
        self._coeffs = acc

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, coef: int, exp: int) -> "LaurentPoly":
        return cls({exp: coef})

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._coeffs.items()))

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_one(self) -> bool:
        return self._coeffs == {0: 1}

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree data")
        return min(self._coeffs)

    @property
    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree data")
        return max(self._coeffs)

    @property
    def span(self) -> int:
        """Difference between the largest and smallest exponent."""
        return self.max_exp - self.min_exp

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        out = LaurentPoly()
        out._coeffs = acc
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        acc: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                s = acc.get(e, 0) + c1 * c2
                if s:
                    acc[e] = s
                else:
                    acc.pop(e, None)
        out = LaurentPoly()
        out._coeffs = acc
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not defined for polynomials")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by the monomial x**k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def substitute_inverse(self) -> "LaurentPoly":
        """Substitute x -> x**-1 (negate every exponent)."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def reexponent(self, divisor: int) -> "LaurentPoly":
        """Substitute x = y**divisor, i.e. divide every exponent by ``divisor``.

        Every exponent must be divisible by ``divisor`` (which may be
        negative); used to pass between bracket and Jones variables.
        """
        if divisor == 0:
            raise ValueError("divisor must be nonzero")
        out: dict[int, int] = {}
        for e, c in self._coeffs.items():
            if e % divisor:
                raise ValueError(f"exponent {e} is not a multiple of {divisor}")
            out[e // divisor] = c
        return LaurentPoly(out)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Divide by ``other``, raising if the division is not exact."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._coeffs)
        quo: dict[int, int] = {}
        lead = other.max_exp
        lead_c = other._coeffs[lead]
        while rem:
            e = max(rem)
            c = rem[e]
            if c % lead_c:
                raise ValueError("division is not exact")
            qe, qc = e - lead, c // lead_c
            quo[qe] = qc
            for oe, oc in other._coeffs.items():
                t = oe + qe
                s = rem.get(t, 0) - oc * qc
                if s:
                    rem[t] = s
                else:
                    rem.pop(t, None)
        return LaurentPoly(quo)

    def format(self, var: str = "A") -> str:
        """Deterministic text form, terms in descending exponent order."""
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for e in sorted(self._coeffs, reverse=True):
            c = self._coeffs[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                pow_txt = var if e == 1 else f"{var}^{e}"
                body = pow_txt if mag == 1 else f"{mag}*{pow_txt}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()})"
