"""Sparse multivariate polynomials with exact rational coefficients.

Variables are identified by position in a ``names`` tuple.  For Hurwitz
functions the convention is ``m1..mk`` followed by ``n1..nl``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


def hurwitz_names(k: int, l: int) -> tuple[str, ...]:
    return tuple(f"m{i}" for i in range(1, k + 1)) + tuple(f"n{j}" for j in range(1, l + 1))


class LinearForm:
    """Homogeneous integer linear form: a map from variable index to coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for var, c in items:
            acc[var] = acc.get(var, 0) + int(c)
        self.coeffs = {v: c for v, c in sorted(acc.items()) if c != 0}

    @classmethod
    def from_subsets(cls, k: int, I: Iterable[int], J: Iterable[int]) -> "LinearForm":
        """sum_{i in I} mu_i - sum_{j in J} nu_j, with 1-based I, J."""
        return cls([(i - 1, 1) for i in I] + [(k + j - 1, -1) for j in J])

    def __add__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(list(self.coeffs.items()) + list(other.coeffs.items()))

    def __neg__(self) -> "LinearForm":
        return LinearForm({v: -c for v, c in self.coeffs.items()})

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearForm) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def evaluate(self, point: Sequence) -> Fraction:
        return sum((Fraction(point[v]) * c for v, c in self.coeffs.items()), Fraction(0))

    def to_polynomial(self, names: Sequence[str]) -> "Polynomial":
        n = len(names)
        if any(v >= n for v in self.coeffs):
            raise ValueError("linear form uses a variable outside the ring")
        terms = {}
        for v, c in self.coeffs.items():
            e = [0] * n
            e[v] = 1
            terms[tuple(e)] = Fraction(c)
        return Polynomial(names, terms)

    def text(self, names: Sequence[str]) -> str:
        return self.to_polynomial(names).to_text()

    def __repr__(self) -> str:
        return f"LinearForm({self.coeffs})"


class Polynomial:
    """Immutable sparse polynomial over Q.

    ``terms`` maps exponent vectors to nonzero Fractions.
    """

    __slots__ = ("names", "terms")

    def __init__(self, names: Sequence[str], terms: Mapping[Exponent, Fraction] | None = None):
        self.names = tuple(names)
        n = len(self.names)
        clean: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} does not match {n} variables")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # construction ---------------------------------------------------------
    @classmethod
    def zero(cls, names: Sequence[str]) -> "Polynomial":
        return cls(names)

    @classmethod
    def constant(cls, names: Sequence[str], c) -> "Polynomial":
        return cls(names, {(0,) * len(names): Fraction(c)})

    @classmethod
    def variable(cls, names: Sequence[str], index: int) -> "Polynomial":
        e = [0] * len(names)
        e[index] = 1
        return cls(names, {tuple(e): Fraction(1)})

    # ring operations ------------------------------------------------------
    def _check_ring(self, other: "Polynomial") -> None:
        if self.names != other.names:
            raise ValueError(f"variable sets differ: {self.names} vs {other.names}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_ring(other)
            return other
        if isinstance(other, LinearForm):
            return other.to_polynomial(self.names)
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.names, other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Polynomial(self.names, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(self.names, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.names, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        result = Polynomial.constant(self.names, 1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.names, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.names == other.names and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.names, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    # evaluation and substitution -------------------------------------------
    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != len(self.names):
            raise ValueError(f"expected {len(self.names)} values, got {len(point)}")
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(pt, e):
                if k:
                    term *= x**k
            total += term
        return total

    def substitute(
        self,
        mapping: Mapping[int, "Polynomial | LinearForm"],
        target_names: Sequence[str] | None = None,
    ) -> "Polynomial":
        """Replace variable ``i`` by ``mapping[i]``.

        Without ``target_names`` the result stays in this ring and unmapped
        variables are kept.  With ``target_names`` every variable that occurs
        must be mapped, and each image must live in the target ring.
        """
        target = self.names if target_names is None else tuple(target_names)
        images: dict[int, Polynomial] = {}
        for i, img in mapping.items():
            if not 0 <= i < len(self.names):
                raise ValueError(f"no variable with index {i}")
            if isinstance(img, LinearForm):
                img = img.to_polynomial(target)
            if img.names != target:
                raise ValueError(
                    f"substitution for {self.names[i]} lives in {img.names}, expected {target}"
                )
            images[i] = img
        if target_names is not None:
            used = {i for e in self.terms for i, k in enumerate(e) if k}
            missing = used - images.keys()
            if missing:
                raise ValueError(
                    "unmapped variables: " + ", ".join(self.names[i] for i in sorted(missing))
                )
        result = Polynomial.zero(target)
        for e, c in self.terms.items():
            term = Polynomial.constant(target, c)
            for i, k in enumerate(e):
                if not k:
                    continue
                base = images[i] if i in images else Polynomial.variable(target, i)
                term = term * base**k
            result = result + term
        return result

    def homogeneous_degree(self) -> int | None:
        """Common total degree of all terms, or None if not homogeneous (or zero)."""
        degrees = {sum(e) for e in self.terms}
        if len(degrees) != 1:
            return None
        return degrees.pop()

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    # text -------------------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for idx, (e, c) in enumerate(self.sorted_terms()):
            monomial = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(self.names, e) if k
            )
            mag = abs(c)
            if monomial:
                body = monomial if mag == 1 else f"{_frac_text(mag)}*{monomial}"
            else:
                body = _frac_text(mag)
            if idx == 0:
                chunks.append(("-" if c < 0 else "") + body)
            else:
                chunks.append(("- " if c < 0 else "+ ") + body)
        return " ".join(chunks)

    @classmethod
    def from_text(cls, text: str, names: Sequence[str]) -> "Polynomial":
        names = tuple(names)
        index = {name: i for i, name in enumerate(names)}
        text = text.strip()
        if text == "0":
            return cls.zero(names)
        terms: dict[Exponent, Fraction] = {}
        for sign, body in _TERM_RE.findall(_normalize_signs(text)):
            coeff = Fraction(1)
            e = [0] * len(names)
            for factor in body.split("*"):
                factor = factor.strip()
                if not factor:
                    raise ValueError(f"malformed term {body!r}")
                if factor[0].isdigit():
                    coeff *= Fraction(factor)
                    continue
                name, _, power = factor.partition("^")
                if name not in index:
                    raise ValueError(f"unknown variable {name!r}")
                e[index[name]] += int(power) if power else 1
            if sign == "-":
                coeff = -coeff
            terms[tuple(e)] = terms.get(tuple(e), Fraction(0)) + coeff
        return cls(names, terms)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"


_TERM_RE = re.compile(r"([+-])([^+-]+)")


def _normalize_signs(text: str) -> str:
    text = text.replace(" ", "")
    if not text.startswith(("+", "-")):
        text = "+" + text
    return text


def _frac_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def rational_text(c) -> str:
    """Render an exact rational as ``p/q`` (or ``p`` when integral)."""
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
