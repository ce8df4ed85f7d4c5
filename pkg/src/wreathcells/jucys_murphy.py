"""Jucys-Murphy spectra of G(d,1,n) and the cells they cut out.

The commuting Jucys-Murphy elements act diagonally on the standard-tableau
basis; the element J_p acts on a tableau line through the box holding p by
d * (ksharp(c) - c0 * content), with c the box's component.  Grouping tableaux
by their full spectrum yields the JM cells.  These equal the Calogero-Moser
cells when the parameters are generic and are unions of them otherwise, which
callers should surface when reporting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import (
    BoxCoord,
    CharacterSum,
    DPartition,
    StandardTableau,
    content,
    enumerate_dpartitions,
    standard_tableaux,
)


@dataclass(frozen=True)
class CMParams:
    """Reflection parameters (c0; k_0..k_{d-1}), exact rationals, k read mod d."""

    d: int
    c0: Fraction
    k: tuple[Fraction, ...]

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be positive")
        if len(self.k) != self.d:
            raise ValueError(f"need exactly {self.d} values k_0..k_{self.d - 1}")

    def ksharp(self, i: int) -> Fraction:
        """ksharp(i) = k_{(1-i) mod d} for i in 1..d."""
        return self.k[(1 - i) % self.d]

    @classmethod
    def from_ksharp(cls, d: int, c0, ksharp) -> "CMParams":
        c0 = Fraction(c0)
        ksharp = [Fraction(x) for x in ksharp]
        if len(ksharp) != d:
            raise ValueError(f"need exactly {d} ksharp values")
        k = [Fraction(0)] * d
        for i in range(1, d + 1):
            k[(1 - i) % d] = ksharp[i - 1]
        return cls(d, c0, tuple(k))

    def ksharp_vector(self) -> tuple[Fraction, ...]:
        return tuple(self.ksharp(i) for i in range(1, self.d + 1))

    def scaled(self, factor) -> "CMParams":
        factor = Fraction(factor)
        return CMParams(self.d, self.c0 * factor, tuple(x * factor for x in self.k))


def jm_eigenvalue(params: CMParams, box: BoxCoord) -> Fraction:
    """Eigenvalue of the Jucys-Murphy element through this box."""
    if not 1 <= box.comp <= params.d:
        raise ValueError(f"component {box.comp} out of range 1..{params.d}")
    return params.d * (params.ksharp(box.comp) - params.c0 * content(box))


def tableau_spectrum(params: CMParams, tab: StandardTableau) -> tuple[Fraction, ...]:
    """(J_1, ..., J_n) eigenvalues on the tableau line."""
    return tuple(jm_eigenvalue(params, box) for box in tab.boxes)


def euler_value(params: CMParams, dp: DPartition) -> Fraction:
    """Scalar action of the Euler element on the irreducible labelled by dp."""
    if dp.d != params.d:
        raise ValueError("d-partition and parameters disagree on d")
    comp_sizes = sum(
        params.ksharp(c) * sum(dp.components[c - 1]) for c in range(1, dp.d + 1)
    )
    contents = sum(content(box) for box in dp.boxes())
    return params.d * comp_sizes - params.d * params.c0 * contents


@dataclass(frozen=True)
class GenericityReport:
    generic: bool
    c0_zero: bool = False
    witness: tuple[int, int, int] | None = None

    def to_json_obj(self):
        return {
            "generic": self.generic,
            "c0_zero": self.c0_zero,
            "witness": list(self.witness) if self.witness else None,
        }


def is_generic(params: CMParams, n: int) -> GenericityReport:
    """Check c0 != 0 and (k_p - k_q) != c0*j for all p != q and |j| < n.

    The witness (p, q, j) uses the storage indices 0..d-1 of the k vector.
    """
    if params.c0 == 0:
        return GenericityReport(generic=False, c0_zero=True)
    for p in range(params.d):
        for qi in range(params.d):
            if p == qi:
                continue
            for j in range(-(n - 1), n):
                if params.k[p] - params.k[qi] == params.c0 * j:
                    return GenericityReport(generic=False, witness=(p, qi, j))
    return GenericityReport(generic=True)


@dataclass(frozen=True)
class CellDecomposition:
    """JM cells: distinct spectra with their tableau-counting characters."""

    d: int
    n: int
    cells: tuple[tuple[tuple[Fraction, ...], CharacterSum], ...]
    report: GenericityReport

    def character_set(self) -> frozenset[CharacterSum]:
        return frozenset(cs for _, cs in self.cells)

    def character_multiset(self) -> tuple[CharacterSum, ...]:
        return tuple(sorted((cs for _, cs in self.cells), key=lambda c: c.sort_key()))

    def to_json_obj(self):
        return {
            "cells": [
                {
                    "spectrum": [str(x) for x in spec],
                    "character": cs.to_json_obj(),
                }
                for spec, cs in self.cells
            ],
            "generic": self.report.generic,
            "witness": self.report.to_json_obj()["witness"],
        }


def jm_cellular_characters(params: CMParams, n: int) -> CellDecomposition:
    """Group every standard tableau of every shape by its JM spectrum."""
    groups: dict[tuple[Fraction, ...], dict[DPartition, int]] = {}
    for shape in enumerate_dpartitions(params.d, n):
        for tab in standard_tableaux(shape):
            spec = tableau_spectrum(params, tab)
            counts = groups.setdefault(spec, {})
            counts[shape] = counts.get(shape, 0) + 1
    cells = tuple(
        (spec, CharacterSum.from_counts(groups[spec])) for spec in sorted(groups)
    )
    return CellDecomposition(params.d, n, cells, is_generic(params, n))
