"""Integer partitions and the counting functions built on them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Partition:
    """A partition of ``degree`` stored as a nonincreasing tuple of parts.

    Any iterable of positive integers is accepted; it is sorted on
    construction, so ``Partition([1, 2]) == Partition([2, 1])``.
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"2,2,1"`` (whitespace tolerated)."""
        text = text.strip()
        if not text:
            raise ValueError("empty partition")
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"invalid partition {text!r}: {exc}") from None

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def multiplicities(self) -> Counter:
        return Counter(self.parts)


def partitions_of(d: int) -> list[Partition]:
    """All partitions of ``d`` in reverse lexicographic order."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    out: list[Partition] = []

    def rec(remaining: int, largest: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(acc))
            return
        for p in range(min(remaining, largest), 0, -1):
            acc.append(p)
            rec(remaining - p, p, acc)
            acc.pop()

    rec(d, d, [])
    return out


def aut_count(p: Partition) -> int:
    """Order of the group permuting equal parts: prod over values of mult!."""
    return prod(factorial(m) for m in p.multiplicities().values())


def cycle_type_count(p: Partition) -> int:
    """Number of permutations in S_d with cycle type ``p``."""
    d = p.degree
    denom = aut_count(p) * prod(p.parts)
    count, rem = divmod(factorial(d), denom)
    assert rem == 0
    return count


def riemann_hurwitz_s(g: int, eta: Partition, nu: Partition) -> int:
    """Number of simple branch points of a genus ``g`` cover with profiles eta, nu."""
    if eta.degree != nu.degree:
        raise ValueError(
            f"degree mismatch: eta has degree {eta.degree}, nu has degree {nu.degree}"
        )
    s = 2 * g - 2 + len(eta) + len(nu)
    if s < 0:
        raise ValueError(f"no cover configuration: s = {s} < 0")
    return s


@dataclass(frozen=True)
class HurwitzInput:
    """Genus plus the two special ramification profiles of a double Hurwitz number."""

    g: int
    eta: Partition
    nu: Partition

    def __post_init__(self):
        if not isinstance(self.eta, Partition):
            object.__setattr__(self, "eta", Partition(self.eta))
        if not isinstance(self.nu, Partition):
            object.__setattr__(self, "nu", Partition(self.nu))
        if self.g < 0:
            raise ValueError(f"genus must be nonnegative, got {self.g}")
        if not self.eta.parts or not self.nu.parts:
            raise ValueError("profiles must be nonempty partitions")
        riemann_hurwitz_s(self.g, self.eta, self.nu)

    @property
    def d(self) -> int:
        return self.eta.degree

    @property
    def s(self) -> int:
        return riemann_hurwitz_s(self.g, self.eta, self.nu)

    @property
    def k(self) -> int:
        return len(self.eta)

    @property
    def l(self) -> int:
        return len(self.nu)

    def swapped(self) -> "HurwitzInput":
        return HurwitzInput(self.g, self.nu, self.eta)

    def __str__(self) -> str:
        return f"g={self.g}, eta=({self.eta}), nu=({self.nu})"


def all_inputs(dmax: int, gmax: int, dmin: int = 1) -> list[HurwitzInput]:
    """Every (eta, nu, g) with dmin <= d <= dmax and g <= gmax, in a fixed order."""
    out = []
    for d in range(dmin, dmax + 1):
        parts = partitions_of(d)
        for g in range(gmax + 1):
            for eta in parts:
                for nu in parts:
                    out.append(HurwitzInput(g, eta, nu))
    return out
