"""Parameter dictionary between reflection parameters and charges, and the
end-to-end comparison of the two character pipelines.

The dictionary sets ksharp_i = -c0 * r_i.  At n = 2 the Calogero-Moser side is
computed from the exact closed forms; for larger n it is replaced by the JM
cells, which are exact when the parameters are generic and an upper bound
(cells may merge) otherwise.  Comparison is primarily as sets, with multisets
reported alongside.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import CharacterSum
from .fock import lm_constructible
from .gd12 import cm_cells_n2, cm_cells_n2_family
from .jucys_murphy import CMParams, jm_cellular_characters


class InvalidParam(ValueError):
    """A parameter violates a precondition (for instance c0 = 0)."""


class NonIntegralRatio(ValueError):
    """-ksharp_i / c0 is not an integer, so no charge vector corresponds."""


class UnsortedParameters(ValueError):
    """Charges (or ksharp/c0 ratios) are not weakly sorted as required."""


def params_from_r(r, c0) -> CMParams:
    """Reflection parameters matching a charge vector: ksharp_i = -c0 * r_i."""
    c0 = Fraction(c0)
    if c0 == 0:
        raise InvalidParam("c0 must be nonzero")
    r = tuple(int(x) for x in r)
    if any(r[i] < r[i + 1] for i in range(len(r) - 1)):
        raise UnsortedParameters(f"charges must be weakly decreasing, got {r}")
    return CMParams.from_ksharp(len(r), c0, [-c0 * ri for ri in r])


def r_from_params(params: CMParams, shift: int = 0) -> tuple[int, ...]:
    """Charge vector r_i = -ksharp_i / c0 (+ an optional common integer shift).

    Cell partitions on both sides are invariant under common integer shifts of
    the charges, so the shift is a labelling convenience only.
    """
    if params.c0 == 0:
        raise InvalidParam("c0 must be nonzero")
    ratios = [-params.ksharp(i) / params.c0 for i in range(1, params.d + 1)]
    if any(ratios[i] < ratios[i + 1] for i in range(len(ratios) - 1)):
        raise UnsortedParameters(
            "ksharp_i / c0 must be weakly increasing, got ratios "
            + ", ".join(str(x) for x in ratios)
        )
    out = []
    for x in ratios:
        shifted = x + shift
        if shifted.denominator != 1:
            raise NonIntegralRatio(
                f"-ksharp/c0 ratio {x} is not an integer (shift {shift})"
            )
        out.append(int(shifted))
    return tuple(out)


@dataclass(frozen=True)
class ConjectureVerdict:
    mode: str  # "exact-n2" | "generic" | "jm-upper-bound"
    n: int
    charges: tuple[int, ...]
    equal: bool
    cm_set: frozenset[CharacterSum]
    lm_set: frozenset[CharacterSum]
    cm_only: tuple[CharacterSum, ...]
    lm_only: tuple[CharacterSum, ...]
    cm_multiset: tuple[CharacterSum, ...]
    lm_multiset: tuple[CharacterSum, ...]
    note: str = ""

    def to_json_obj(self):
        def charlist(chars):
            return [cs.to_json_obj() for cs in chars]

        return {
            "mode": self.mode,
            "n": self.n,
            "charges": list(self.charges),
            "equal": self.equal,
            "cm_set": charlist(_sorted_chars(self.cm_set)),
            "lm_set": charlist(_sorted_chars(self.lm_set)),
            "diff": {
                "cm_only": charlist(self.cm_only),
                "lm_only": charlist(self.lm_only),
            },
            "cm_multiset": charlist(self.cm_multiset),
            "lm_multiset": charlist(self.lm_multiset),
            "note": self.note,
        }


def _sorted_chars(chars) -> tuple[CharacterSum, ...]:
    return tuple(sorted(chars, key=lambda cs: cs.sort_key()))


def check_conjecture(
    n: int,
    *,
    r=None,
    c0=None,
    params: CMParams | None = None,
    shift: int = 0,
) -> ConjectureVerdict:
    """Compare the Calogero-Moser and constructible character sets at size n.

    Provide either a charge vector r with c0, or reflection parameters (from
    which charges are derived; the dictionary preconditions then apply).
    """
    if params is None:
        if r is None or c0 is None:
            raise InvalidParam("need either params or both r and c0")
        params = params_from_r(r, c0)
        charges = tuple(int(x) for x in r)
    else:
        charges = r_from_params(params, shift)

    lm = lm_constructible(charges, n)
    lm_set = lm.character_set()
    lm_multiset = lm.character_multiset()

    note = ""
    if n == 2:
        mode = "exact-n2"
        cm_set = cm_cells_n2(params)
        cm_multiset = _sorted_chars(cs for _, cs in cm_cells_n2_family(params))
    else:
        decomposition = jm_cellular_characters(params, n)
        cm_set = decomposition.character_set()
        cm_multiset = decomposition.character_multiset()
        if decomposition.report.generic:
            mode = "generic"
        else:
            mode = "jm-upper-bound"

    cm_only = _sorted_chars(cm_set - lm_set)
    lm_only = _sorted_chars(lm_set - cm_set)
    equal = not cm_only and not lm_only
    if mode == "jm-upper-bound" and not equal:
        note = "inconclusive (JM cells may merge CM cells)"

    return ConjectureVerdict(
        mode=mode,
        n=n,
        charges=charges,
        equal=equal,
        cm_set=cm_set,
        lm_set=lm_set,
        cm_only=cm_only,
        lm_only=lm_only,
        cm_multiset=cm_multiset,
        lm_multiset=lm_multiset,
        note=note,
    )
