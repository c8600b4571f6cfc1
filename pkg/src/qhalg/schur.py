"""Partition combinatorics for regular blocks of Schur algebras.

For a partition with ``n`` tracked parts and a prime ``p``,

    d(lam) = sum_{i<j} floor((lam_i - lam_j - i + j - 1) / p),

and ``lam`` is ``p``-regular when ``lam_i - lam_j`` is never congruent to
``i - j`` mod ``p``.  Trailing zeros matter: ``(6, 0)`` and ``(6, 0, 0)``
are different inputs.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        if any(x < 0 for x in parts):
            raise ValueError("parts must be non-negative")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self):
        return len(self.parts)

    @property
    def size(self):
        return sum(self.parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return cls(tuple(int(t) for t in text.replace(" ", "").split(",") if t != ""))

    def shift(self, c: int) -> "Partition":
        return Partition(tuple(x + c for x in self.parts))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def _check_prime(p):
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")


def d_lambda(lam: Partition, p: int) -> int:
    _check_prime(p)
    x = lam.parts
    n = len(x)
    # indices are 1-based in the formula, but only differences i - j enter
    return sum((x[i] - x[j] - i + j - 1) // p for i in range(n) for j in range(i + 1, n))


def is_regular(lam: Partition, p: int) -> bool:
    _check_prime(p)
    x = lam.parts
    n = len(x)
    return all((x[i] - x[j] - (i - j)) % p for i in range(n) for j in range(i + 1, n))
