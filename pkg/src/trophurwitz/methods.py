"""One entry point for the four ways of computing a double Hurwitz number."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .cutjoin import hurwitz_cutjoin
from .exactmath import HurwitzInput
from .monodromy import hurwitz_graphsum
from .symoracle import hurwitz_bruteforce
from .tropical import hurwitz_tropical

METHODS: dict[str, Callable[..., Fraction]] = {
    "bruteforce": hurwitz_bruteforce,
    "cutjoin": hurwitz_cutjoin,
    "graphsum": hurwitz_graphsum,
    "tropical": hurwitz_tropical,
}


def hurwitz(inp: HurwitzInput, method: str = "cutjoin", *, max_degree: int | None = None,
            jobs: int = 1) -> Fraction:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(METHODS)}")
    if method == "bruteforce":
        return hurwitz_bruteforce(inp, max_degree=max_degree, workers=jobs)
    return METHODS[method](inp)


def hurwitz_all(inp: HurwitzInput, *, max_degree: int | None = None, jobs: int = 1) -> dict[str, Fraction]:
    return {m: hurwitz(inp, m, max_degree=max_degree, jobs=jobs) for m in METHODS}
