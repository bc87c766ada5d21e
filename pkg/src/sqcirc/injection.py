"""The injection from nonempty squares to small circuits.

Each square class maps into circuits of its own root, at orders computed from
the member coordinates (index at least 2) or from the members' lexicographic
ranks (index 1). Images across classes stay distinct because a circuit
determines its root class and its order.
"""
from __future__ import annotations

from dataclasses import dataclass

from .circuits import SmallCircuit, all_small_circuits
from .squares import Square, SquareClass, square_classes, square_coordinates


@dataclass(frozen=True)
class InjectionReport:
    assignments: tuple[tuple[Square, SmallCircuit], ...]
    injective: bool
    all_images_exist: bool
    square_count: int
    circuit_count: int


def inject_class(w: str, cls: SquareClass) -> list[tuple[Square, SmallCircuit]]:
    """Map the members of one class to small circuits.

    Index >= 2: the member with coordinates (i, j) goes to C(v, j*l + i - 1).
    Index 1: members sorted lexicographically receive ranks i = 1..t and go
    to C(v, l + i - 1); the rank pairing is a convention, any bijection onto
    those circuits preserves the counting argument.
    """
    l = len(cls.root)
    if cls.index >= 2:
        pairs = []
        for sq in sorted(cls.members):
            co = square_coordinates(sq, cls)
            pairs.append((sq, SmallCircuit(cls.root, co.j * l + co.i - 1)))
        return pairs
    ordered = sorted(cls.members, key=lambda s: s.word)
    return [(sq, SmallCircuit(cls.root, l + i - 1))
            for i, sq in enumerate(ordered, 1)]


def build_injection(w: str) -> InjectionReport:
    """The full map over every class, with its health flags.

    A missing image or a collision would falsify the bound, so both are
    reported rather than raised.
    """
    existing = all_small_circuits(w)
    assignments: list[tuple[Square, SmallCircuit]] = []
    for cls in square_classes(w):
        assignments.extend(inject_class(w, cls))
    images = [c for _, c in assignments]
    return InjectionReport(
        assignments=tuple(assignments),
        injective=len(set(images)) == len(images),
        all_images_exist=all(c in existing for c in images),
        square_count=len(assignments),
        circuit_count=len(existing),
    )
