"""Partitions, diagram containment, box characters and fixed-point enumeration.

Torus-fixed points of S^[n] on a toric surface are assignments of one
partition per fixed point of S (``MultiPartition``); fixed points of the
nested Hilbert scheme are chains of such assignments with pointwise
diagram containment (``NestedChain``).

Nesting direction, pinned once and inherited everywhere: a larger
subscheme corresponds to a larger diagram and a smaller ideal, so a chain
with sizes n_1 >= ... >= n_k has diagrams shrinking along the chain.

Box convention, pinned once and inherited everywhere:
``Q_lambda = sum_{i >= 0} sum_{0 <= j < lambda_{i+1}} u1^i u2^j``
(u1 indexes the part, u2 the column inside the part).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .characters import LaurentPoly
from .toric import ToricSurface


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive integers; () is the empty partition."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        for i, part in enumerate(self.parts):
            if part <= 0:
                raise ValueError(f"parts must be positive, got {self.parts}")
            if i and self.parts[i - 1] < part:
                raise ValueError(f"parts must weakly decrease, got {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for part in self.parts:
            for j in range(part):
                cols[j] += 1
        return Partition(tuple(cols))

    def boxes(self):
        """Boxes (i, j): i the part index, j < parts[i]."""
        for i, part in enumerate(self.parts):
            for j in range(part):
                yield (i, j)

    def to_text(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"malformed partition {text!r}")
        inner = body[1:-1].strip()
        if not inner:
            return cls()
        return cls(tuple(int(p) for p in inner.split(",")))

    def __repr__(self) -> str:
        return f"Partition({self.to_text()})"


EMPTY = Partition()


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(parts) for parts in gen(n, n))


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff the diagram of mu fits inside the diagram of lam."""
    if len(mu.parts) > len(lam.parts):
        return False
    return all(m <= l for l, m in zip(lam.parts, mu.parts))


@lru_cache(maxsize=None)
def subpartitions(lam: Partition, m: int) -> tuple[Partition, ...]:
    """All mu contained in lam with |mu| = m, deterministic order."""

    def gen(parts: tuple[int, ...], remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        if not parts:
            return
        head = min(parts[0], cap, remaining)
        for first in range(head, 0, -1):
            for rest in gen(parts[1:], remaining - first, first):
                yield (first,) + rest
        # mu may stop before lam does, covered by first reaching 0 -> remaining>0 fails

    return tuple(Partition(p) for p in gen(lam.parts, m, lam.size))


@lru_cache(maxsize=None)
def box_character(lam: Partition) -> LaurentPoly:
    """Character of O/I_lambda on the chart: one unit monomial per box."""
    return LaurentPoly({(i, j): 1 for i, j in lam.boxes()})


@dataclass(frozen=True)
class MultiPartition:
    """One partition per fixed point of a toric surface, in chart order."""

    parts: tuple[Partition, ...]

    @property
    def total(self) -> int:
        return sum(p.size for p in self.parts)

    def to_text(self) -> str:
        return "[" + ",".join(p.to_text() for p in self.parts) + "]"

    def __repr__(self) -> str:
        return f"MultiPartition({self.to_text()})"


@lru_cache(maxsize=None)
def multipartitions(surface: ToricSurface, n: int) -> tuple[MultiPartition, ...]:
    """All fixed points of S^[n]: assignments of total size n, deterministic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    points = surface.euler_number

    def gen(slot: int, remaining: int):
        if slot == points - 1:
            for lam in partitions_of(remaining):
                yield (lam,)
            return
        for k in range(remaining, -1, -1):
            for head in partitions_of(k):
                for tail in gen(slot + 1, remaining - k):
                    yield (head,) + tail

    return tuple(MultiPartition(t) for t in gen(0, n))


def mp_contains(big: MultiPartition, small: MultiPartition) -> bool:
    """Pointwise diagram containment (small's diagrams inside big's)."""
    return all(contains(l, m) for l, m in zip(big.parts, small.parts))


@dataclass(frozen=True)
class NestedChain:
    """Fixed point of a nested Hilbert scheme: pointwise shrinking diagrams."""

    steps: tuple[MultiPartition, ...]

    def __post_init__(self):
        for a, b in zip(self.steps, self.steps[1:]):
            if len(a.parts) != len(b.parts):
                raise ValueError("chain steps indexed by different surfaces")
            if not mp_contains(a, b):
                raise ValueError(f"chain violates containment: {a} !> {b}")

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(mp.total for mp in self.steps)

    def to_text(self) -> str:
        return "[" + ",".join(mp.to_text() for mp in self.steps) + "]"

    def __repr__(self) -> str:
        return f"NestedChain({self.to_text()})"


@lru_cache(maxsize=None)
def nested_chains(surface: ToricSurface, sizes: tuple[int, ...]) -> tuple[NestedChain, ...]:
    """All fixed points of S^[n_1,...,n_k]; sizes must weakly decrease."""
    if not sizes:
        raise ValueError("need at least one size")
    if any(n < 0 for n in sizes):
        raise ValueError(f"sizes must be nonnegative, got {sizes}")
    if any(a < b for a, b in zip(sizes, sizes[1:])):
        raise ValueError(f"sizes must weakly decrease, got {sizes}")

    def refine(mp: MultiPartition, m: int):
        """All multipartitions of total m pointwise contained in mp."""

        def gen(slot: int, remaining: int):
            if slot == len(mp.parts):
                if remaining == 0:
                    yield ()
                return
            lam = mp.parts[slot]
            for k in range(min(lam.size, remaining), -1, -1):
                for head in subpartitions(lam, k):
                    for tail in gen(slot + 1, remaining - k):
                        yield (head,) + tail

        return (MultiPartition(t) for t in gen(0, m))

    def build(prefix: tuple[MultiPartition, ...], level: int):
        if level == len(sizes):
            yield NestedChain(prefix)
            return
        source = (
            multipartitions(surface, sizes[0])
            if level == 0
            else refine(prefix[-1], sizes[level])
        )
        for mp in source:
            yield from build(prefix + (mp,), level + 1)

    return tuple(build((), 0))
