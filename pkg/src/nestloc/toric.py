"""Combinatorial fixed-point data of smooth projective toric surfaces.

A surface is a list of torus-fixed charts, each carrying an ordered pair
of tangent weights in Z^2; smoothness means every pair is a lattice basis
(determinant +-1).  Equivariant line bundles assign one character per
fixed point.

Conventions (pinned by the hrr checks in :mod:`nestloc.integrals`):

* tangent weights are the geometric point-movement weights of the torus
  action on T_p S;
* line-bundle weights are the induced fiber weights; for O(d) on P^2 the
  fiber weight at the chart where the section x_i^d survives is -d times
  that chart's homogeneous-coordinate weight.

Only ``p2`` and ``p1xp1`` are provided; surfaces are closed data, not
user-extensible configuration.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Weight = tuple[int, int]


@dataclass(frozen=True)
class ToricSurface:
    """Fixed points with tangent weight pairs, identified by name."""

    name: str
    charts: tuple[tuple[Weight, Weight], ...]

    def __post_init__(self):
        if not self.charts:
            raise ValueError("a toric surface needs at least one fixed point")
        for w1, w2 in self.charts:
            det = w1[0] * w2[1] - w1[1] * w2[0]
            if det not in (1, -1):
                raise ValueError(f"tangent weights {w1}, {w2} are not a lattice basis")

    @property
    def euler_number(self) -> int:
        return len(self.charts)

    def __repr__(self) -> str:
        return f"ToricSurface({self.name!r}, {self.euler_number} fixed points)"


@dataclass(frozen=True)
class EqLineBundle:
    """Equivariant line bundle: one character per fixed point."""

    label: str
    weights: tuple[Weight, ...]

    def __repr__(self) -> str:
        return f"EqLineBundle({self.label!r})"


@lru_cache(maxsize=None)
def p2() -> ToricSurface:
    """P^2 with the action [x0 : t1 x1 : t2 x2]; three fixed points."""
    return ToricSurface(
        name="p2",
        charts=(
            ((1, 0), (0, 1)),
            ((-1, 0), (-1, 1)),
            ((0, -1), (1, -1)),
        ),
    )


@lru_cache(maxsize=None)
def p1xp1() -> ToricSurface:
    """P^1 x P^1 with the product action; four fixed points 00, 01, 10, 11."""
    return ToricSurface(
        name="p1xp1",
        charts=(
            ((1, 0), (0, 1)),
            ((1, 0), (0, -1)),
            ((-1, 0), (0, 1)),
            ((-1, 0), (0, -1)),
        ),
    )


_SURFACES = {"p2": p2, "p1xp1": p1xp1}


def surface_by_name(name: str) -> ToricSurface:
    try:
        return _SURFACES[name]()
    except KeyError:
        raise ValueError(f"unknown surface {name!r}; choose from {sorted(_SURFACES)}") from None


def line_bundle(surface: ToricSurface, *degrees: int) -> EqLineBundle:
    """O(d) on P^2 or O(a,b) on P^1 x P^1 with its fiber weights.

    The weight data is the d-dilated standard simplex (resp. the (a,b) box)
    read off in the chart-adapted basis; the overall sign is the one pinned
    by hrr_check.
    """
    if surface.name == "p2":
        if len(degrees) != 1:
            raise ValueError("p2 line bundles take a single degree d")
        d = degrees[0]
        label = "O" if d == 0 else f"O({d})"
        return EqLineBundle(label, ((0, 0), (-d, 0), (0, -d)))
    if surface.name == "p1xp1":
        if len(degrees) != 2:
            raise ValueError("p1xp1 line bundles take a bidegree (a, b)")
        a, b = degrees
        label = "O" if a == b == 0 else f"O({a},{b})"
        return EqLineBundle(label, ((0, 0), (0, -b), (-a, 0), (-a, -b)))
    raise ValueError(f"unknown surface family {surface.name!r}")


def bundle_by_label(surface: ToricSurface, label: str) -> EqLineBundle:
    """Parse labels like ``O``, ``O(2)``, ``O(1,0)`` for the given surface."""
    label = label.strip()
    if label == "O":
        degrees = (0,) if surface.name == "p2" else (0, 0)
        return line_bundle(surface, *degrees)
    if label.startswith("O(") and label.endswith(")"):
        try:
            degrees = tuple(int(part) for part in label[2:-1].split(","))
        except ValueError:
            raise ValueError(f"malformed bundle label {label!r}") from None
        return line_bundle(surface, *degrees)
    raise ValueError(f"malformed bundle label {label!r}")
