"""Integer Laurent polynomials in one variable, as exponent -> coefficient maps."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["LaurentPolynomial"]


@dataclass(frozen=True)
class LaurentPolynomial:
    """Immutable Laurent polynomial with integer coefficients.

    Zero coefficients are never stored; the zero polynomial has an empty map.
    """

    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(e): int(c) for e, c in self.coeffs.items() if c}
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def monomial(cls, coefficient: int, exponent: int) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = LaurentPolynomial.one()
        for _ in range(n):
            result = result * self
        return result

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def mirror(self) -> "LaurentPolynomial":
        """Exponent negation, the effect of mirroring on bracket and Jones."""
        return LaurentPolynomial({-e: c for e, c in self.coeffs.items()})

    def is_palindromic(self) -> bool:
        return self.coeffs == {-e: c for e, c in self.coeffs.items()}

    def at_minus_one(self) -> int:
        """Evaluation at -1 (all exponents treated as integers)."""
        return sum(c * (-1 if e % 2 else 1) for e, c in self.coeffs.items())

    def substitute_power(self, k: int) -> "LaurentPolynomial":
        """The polynomial p(x^k), exponents multiplied by k."""
        return LaurentPolynomial({e * k: c for e, c in self.coeffs.items()})

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self.coeffs.items())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.terms():
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*t" if abs(c) != 1 else ("t" if c > 0 else "-t"))
            else:
                parts.append(
                    f"{c}*t^{e}" if abs(c) != 1 else (f"t^{e}" if c > 0 else f"-t^{e}")
                )
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def canonical_text(self) -> str:
        """Stable ascending-exponent serialization, e.g. '-4:1;-3:-1;0:2'."""
        return ";".join(f"{e}:{c}" for e, c in self.terms())

    @classmethod
    def from_canonical_text(cls, text: str) -> "LaurentPolynomial":
        text = text.strip()
        if not text:
            return cls({})
        out = {}
        for item in text.split(";"):
            e, c = item.split(":")
            out[int(e)] = int(c)
        return cls(out)
