"""Partitions, d-partitions, boxes, standard d-tableaux and character sums.

Conventions: a partition is a weakly decreasing tuple of positive ints; a box
is a triple (row, col, comp), all 1-based; components of a d-partition are
indexed 1..d in text and box coordinates.

Enumeration orders are fixed so that outputs are reproducible byte for byte:
partitions of n are listed largest part first, ending at (1,...,1), and
d-partitions are ordered by decreasing size of component 1, then the partition
order on component 1, then recursively on the remaining components.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

Partition = tuple[int, ...]


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(isinstance(p, int) and p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n with parts bounded by max_part, largest part first."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


class BoxCoord(NamedTuple):
    row: int
    col: int
    comp: int


def content(box: BoxCoord) -> int:
    """col - row, the usual diagonal content of a box."""
    return box.col - box.row


@dataclass(frozen=True)
class DPartition:
    """A d-tuple of partitions; indexes an irreducible character of G(d,1,n)."""

    components: tuple[Partition, ...]

    def __post_init__(self):
        if not self.components:
            raise ValueError("a d-partition needs at least one component")
        for comp in self.components:
            if not is_partition(comp):
                raise ValueError(f"invalid partition component {comp!r}")

    @property
    def d(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(sum(c) for c in self.components)

    def boxes(self) -> tuple[BoxCoord, ...]:
        out = []
        for ci, comp in enumerate(self.components, start=1):
            for a, row_len in enumerate(comp, start=1):
                for b in range(1, row_len + 1):
                    out.append(BoxCoord(a, b, ci))
        return tuple(out)

    def with_component(self, comp_index: int, parts: Partition) -> "DPartition":
        comps = list(self.components)
        comps[comp_index - 1] = tuple(parts)
        return DPartition(tuple(comps))

    def text(self) -> str:
        return "|".join(
            ".".join(str(p) for p in comp) if comp else "∅"
            for comp in self.components
        )

    def __repr__(self):
        return f"DPartition({self.text()})"


def empty_dpartition(d: int) -> DPartition:
    return DPartition(((),) * d)


def parse_dpartition(text: str) -> DPartition:
    """Inverse of DPartition.text; accepts "" as well as the empty-set sign."""
    comps = []
    for chunk in text.strip().split("|"):
        chunk = chunk.strip()
        if chunk in ("", "∅"):
            comps.append(())
        else:
            comps.append(tuple(int(p) for p in chunk.split(".")))
    return DPartition(tuple(comps))


def dpartition_sort_key(dp: DPartition):
    """Total order matching enumerate_dpartitions: big first components first."""
    return tuple((-sum(c), tuple(-p for p in c)) for c in dp.components)


@lru_cache(maxsize=None)
def enumerate_dpartitions(d: int, n: int) -> tuple[DPartition, ...]:
    """All d-partitions of n, in the documented deterministic order."""
    if d < 1:
        raise ValueError("d must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(DPartition(comps) for comps in _dpartition_components(d, n))


def _dpartition_components(d: int, n: int) -> Iterator[tuple[Partition, ...]]:
    if d == 1:
        for lam in partitions(n):
            yield (lam,)
        return
    for first_size in range(n, -1, -1):
        for lam in partitions(first_size):
            for rest in _dpartition_components(d - 1, n - first_size):
                yield (lam,) + rest


def addable_boxes(dp: DPartition) -> tuple[BoxCoord, ...]:
    """Boxes whose addition yields a valid Young diagram, ordered by (comp, row)."""
    out = []
    for ci, comp in enumerate(dp.components, start=1):
        for a in range(1, len(comp) + 2):
            row_len = comp[a - 1] if a <= len(comp) else 0
            above = comp[a - 2] if a >= 2 else None
            if above is None or above > row_len:
                out.append(BoxCoord(a, row_len + 1, ci))
    return tuple(out)


def removable_boxes(dp: DPartition) -> tuple[BoxCoord, ...]:
    """Boxes whose removal yields a valid Young diagram, ordered by (comp, row)."""
    out = []
    for ci, comp in enumerate(dp.components, start=1):
        for a in range(1, len(comp) + 1):
            below = comp[a] if a < len(comp) else 0
            if comp[a - 1] > below:
                out.append(BoxCoord(a, comp[a - 1], ci))
    return tuple(out)


def remove_box(dp: DPartition, box: BoxCoord) -> DPartition:
    comp = dp.components[box.comp - 1]
    new = list(comp)
    new[box.row - 1] -= 1
    while new and new[-1] == 0:
        new.pop()
    return dp.with_component(box.comp, tuple(new))


def add_box(dp: DPartition, box: BoxCoord) -> DPartition:
    comp = dp.components[box.comp - 1]
    new = list(comp)
    if box.row == len(new) + 1:
        new.append(1)
    else:
        new[box.row - 1] += 1
    return dp.with_component(box.comp, tuple(new))


@dataclass(frozen=True)
class StandardTableau:
    """A standard d-tableau, stored as the sequence box(1), ..., box(n)."""

    shape: DPartition
    boxes: tuple[BoxCoord, ...]

    @property
    def n(self) -> int:
        return len(self.boxes)

    def shape_chain(self) -> tuple[DPartition, ...]:
        """The chain of shapes [lambda(0), ..., lambda(n)] grown box by box."""
        chain = [empty_dpartition(self.shape.d)]
        for box in self.boxes:
            chain.append(add_box(chain[-1], box))
        return tuple(chain)

    def text(self) -> str:
        return " -> ".join(f"({b.row},{b.col},{b.comp})" for b in self.boxes)


@lru_cache(maxsize=None)
def standard_tableaux(shape: DPartition) -> tuple[StandardTableau, ...]:
    """All standard d-tableaux of the given shape, deterministically ordered."""
    if shape.size == 0:
        return (StandardTableau(shape, ()),)
    out = []
    for box in removable_boxes(shape):
        for sub in standard_tableaux(remove_box(shape, box)):
            out.append(StandardTableau(shape, sub.boxes + (box,)))
    return tuple(out)


@lru_cache(maxsize=None)
def tableau_count(shape: DPartition) -> int:
    """Number of standard tableaux, via the branching recursion."""
    if shape.size == 0:
        return 1
    return sum(tableau_count(remove_box(shape, box)) for box in removable_boxes(shape))


@dataclass(frozen=True)
class CharacterSum:
    """A formal nonnegative-integer combination of irreducible characters.

    Keys are d-partitions of one fixed n; entries are sorted by the canonical
    d-partition order and never carry zero multiplicities, so equal sums
    compare and hash equal.
    """

    entries: tuple[tuple[DPartition, int], ...]

    def __post_init__(self):
        seen_dn = None
        prev_key = None
        for dp, mult in self.entries:
            if mult <= 0:
                raise ValueError("multiplicities must be positive")
            dn = (dp.d, dp.size)
            if seen_dn is None:
                seen_dn = dn
            elif dn != seen_dn:
                raise ValueError("mixed (d, n) in one character sum")
            key = dpartition_sort_key(dp)
            if prev_key is not None and key <= prev_key:
                raise ValueError("entries must be strictly sorted")
            prev_key = key

    @classmethod
    def from_counts(cls, counts: dict[DPartition, int]) -> "CharacterSum":
        items = [(dp, m) for dp, m in counts.items() if m]
        items.sort(key=lambda it: dpartition_sort_key(it[0]))
        return cls(tuple(items))

    def counts(self) -> dict[DPartition, int]:
        return dict(self.entries)

    def multiplicity(self, dp: DPartition) -> int:
        return dict(self.entries).get(dp, 0)

    def support(self) -> tuple[DPartition, ...]:
        return tuple(dp for dp, _ in self.entries)

    def __add__(self, other: "CharacterSum") -> "CharacterSum":
        counts = self.counts()
        for dp, m in other.entries:
            counts[dp] = counts.get(dp, 0) + m
        return CharacterSum.from_counts(counts)

    def scale(self, factor: int) -> "CharacterSum":
        if factor < 0:
            raise ValueError("character sums have nonnegative multiplicities")
        return CharacterSum.from_counts({dp: factor * m for dp, m in self.entries})

    def is_zero(self) -> bool:
        return not self.entries

    def text(self) -> str:
        if not self.entries:
            return "0"
        return " + ".join(
            dp.text() if m == 1 else f"{m}*{dp.text()}" for dp, m in self.entries
        )

    def to_json_obj(self) -> dict[str, int]:
        return {dp.text(): m for dp, m in self.entries}

    @classmethod
    def from_json_obj(cls, obj: dict[str, int]) -> "CharacterSum":
        return cls.from_counts({parse_dpartition(k): v for k, v in obj.items()})

    def sort_key(self):
        return tuple((dpartition_sort_key(dp), m) for dp, m in self.entries)

    def __repr__(self):
        return f"CharacterSum({self.text()})"
