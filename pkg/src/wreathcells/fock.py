"""Level-d Fock space over U_q(sl_infinity).

Symbols are charged bead sequences stored finitely: each row keeps its charge
r_i together with the partition of bead displacements, the bead at position k
of row i having value k + lambda_{r_i - k + 1} (zero displacement beyond the
partition).  Chevalley operators act through the comultiplication
Delta(F) = F (x) K + 1 (x) F and Delta(E) = E (x) 1 + K^-1 (x) E, so F at node
m picks up q^(sum of K-weights of the later rows) and E the inverse weights of
the earlier rows.

Standardness of a symbol is taken operationally: the crystal component of the
highest-weight symbol under the signature-rule operator `crystal_f`.  The
canonical basis is computed by the Leclerc-Toffin correction algorithm on top
of the intermediate basis of divided-power monomials.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import chain

from .combinatorics import (
    CharacterSum,
    DPartition,
    Partition,
    dpartition_sort_key,
    is_partition,
)
from .laurent import LaurentPoly, bar_symmetric_head, one, q_factorial, zero


class LeadingTermMismatch(ArithmeticError):
    """A divided-power monomial failed to have unit leading coefficient."""


class NonTerminating(RuntimeError):
    """The canonical-basis correction loop exceeded its cap or found a cycle."""


class PositivityWarning(UserWarning):
    """A canonical-basis coefficient fell outside N[q]."""


@dataclass(frozen=True)
class Symbol:
    """A d-row symbol: weakly decreasing charges plus displacement partitions."""

    charges: tuple[int, ...]
    rows: tuple[Partition, ...]

    def __post_init__(self):
        if len(self.charges) != len(self.rows) or not self.charges:
            raise ValueError("need one displacement partition per charge")
        if any(self.charges[i] < self.charges[i + 1] for i in range(len(self.charges) - 1)):
            raise ValueError("charges must be weakly decreasing")
        for parts in self.rows:
            if not is_partition(parts):
                raise ValueError(f"invalid displacement partition {parts!r}")

    @property
    def d(self) -> int:
        return len(self.charges)

    @property
    def height(self) -> int:
        return sum(sum(parts) for parts in self.rows)

    def beta(self, i: int, k: int) -> int:
        """Bead value at position k of row i (i is 1-based, k <= r_i)."""
        r = self.charges[i - 1]
        if k > r:
            raise ValueError(f"row {i} has no position {k} (charge {r})")
        parts = self.rows[i - 1]
        j = r - k  # 0-based index into the displacement partition
        return k + (parts[j] if j < len(parts) else 0)

    def with_row(self, idx: int, parts: Partition) -> "Symbol":
        rows = list(self.rows)
        rows[idx] = tuple(parts)
        return Symbol(self.charges, tuple(rows))

    def weight(self) -> tuple[tuple[int, int], ...]:
        """Finite fingerprint of the sl_infinity weight.

        Maps each bead value v to (number of rows containing v) minus the same
        count for the highest-weight symbol; only nonzero differences are kept.
        """
        delta: dict[int, int] = {}
        for r, parts in zip(self.charges, self.rows):
            s = len(parts)
            for j in range(1, s + 1):
                val = r - j + 1 + parts[j - 1]
                baseline = r - j + 1
                delta[val] = delta.get(val, 0) + 1
                delta[baseline] = delta.get(baseline, 0) - 1
        return tuple(sorted((v, c) for v, c in delta.items() if c))

    def text(self) -> str:
        return DPartition(self.rows).text()

    def __repr__(self):
        return f"Symbol(r={','.join(map(str, self.charges))}; {self.text()})"


def highest_weight_symbol(charges: tuple[int, ...]) -> Symbol:
    return Symbol(tuple(charges), ((),) * len(charges))


def symbol_from_dpartition(dp: DPartition, charges: tuple[int, ...]) -> Symbol:
    """Attach charges to a d-partition of displacements."""
    return Symbol(tuple(charges), dp.components)


def dpartition_from_symbol(sym: Symbol) -> DPartition:
    return DPartition(sym.rows)


def symbol_sort_key(sym: Symbol):
    return dpartition_sort_key(DPartition(sym.rows))


# Row-local bead mechanics.  A row is (charge, parts); the window of displaced
# beads sits at positions charge-s+1..charge where s = len(parts).


def _row_contains(charge: int, parts: Partition, value: int) -> bool:
    s = len(parts)
    if value <= charge - s:
        return True
    return any(charge - j + 1 + parts[j - 1] == value for j in range(1, s + 1))


def _row_lowerable(charge: int, parts: Partition, m: int) -> bool:
    return _row_contains(charge, parts, m) and not _row_contains(charge, parts, m + 1)


def _row_raiseable(charge: int, parts: Partition, m: int) -> bool:
    return not _row_contains(charge, parts, m) and _row_contains(charge, parts, m + 1)


def _row_eps(charge: int, parts: Partition, m: int) -> int:
    """K_m weight of the row: +1, -1 or 0."""
    has_m = _row_contains(charge, parts, m)
    has_m1 = _row_contains(charge, parts, m + 1)
    if has_m and not has_m1:
        return 1
    if has_m1 and not has_m:
        return -1
    return 0


def _row_move_up(charge: int, parts: Partition, m: int) -> Partition:
    """Move the bead m -> m+1; caller guarantees the row is lowerable at m."""
    s = len(parts)
    if m == charge - s:
        return parts + (1,)
    for j in range(1, s + 1):
        if charge - j + 1 + parts[j - 1] == m:
            new = list(parts)
            new[j - 1] += 1
            return tuple(new)
    raise ValueError(f"bead {m} not movable in row (charge {charge}, {parts})")


def _row_move_down(charge: int, parts: Partition, m: int) -> Partition:
    """Move the bead m+1 -> m; caller guarantees the row is raiseable at m."""
    s = len(parts)
    for j in range(1, s + 1):
        if charge - j + 1 + parts[j - 1] == m + 1:
            new = list(parts)
            new[j - 1] -= 1
            while new and new[-1] == 0:
                new.pop()
            return tuple(new)
    raise ValueError(f"bead {m + 1} not movable in row (charge {charge}, {parts})")


class FockVector:
    """Finitely supported map Symbol -> LaurentPoly, one charge vector throughout."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        trimmed = {}
        if terms:
            for sym, poly in terms.items():
                if not poly.is_zero():
                    trimmed[sym] = poly
        self.terms = trimmed

    @classmethod
    def unit(cls, sym: Symbol) -> "FockVector":
        return cls({sym: one()})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, sym: Symbol) -> LaurentPoly:
        return self.terms.get(sym, zero())

    def support(self) -> tuple[Symbol, ...]:
        return tuple(sorted(self.terms, key=symbol_sort_key))

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.terms)
        for sym, poly in other.terms.items():
            out[sym] = out.get(sym, zero()) + poly
        return FockVector(out)

    def __sub__(self, other: "FockVector") -> "FockVector":
        out = dict(self.terms)
        for sym, poly in other.terms.items():
            out[sym] = out.get(sym, zero()) - poly
        return FockVector(out)

    def scale(self, poly: LaurentPoly) -> "FockVector":
        return FockVector({sym: c * poly for sym, c in self.terms.items()})

    def exact_div_scalar(self, poly: LaurentPoly) -> "FockVector":
        return FockVector({sym: c.exact_div(poly) for sym, c in self.terms.items()})

    def eval_at_one(self) -> dict[Symbol, int]:
        return {sym: c.eval_at_one() for sym, c in self.terms.items()}

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "FockVector(0)"
        body = " + ".join(
            f"({self.terms[s].text()})[{s.text()}]" for s in self.support()
        )
        return f"FockVector({body})"


def f_action(m: int, vec: FockVector) -> FockVector:
    """Chevalley lowering operator F_m on the Fock space.

    On a symbol it moves the bead m -> m+1 in every row where that is possible,
    the row-j term weighted by q to the sum of K_m-weights of the rows below j.
    """
    out: dict[Symbol, LaurentPoly] = {}
    for sym, coeff in vec.terms.items():
        eps = [_row_eps(r, parts, m) for r, parts in zip(sym.charges, sym.rows)]
        for j in range(sym.d):
            if _row_lowerable(sym.charges[j], sym.rows[j], m):
                n_exp = sum(eps[j + 1 :])
                target = sym.with_row(j, _row_move_up(sym.charges[j], sym.rows[j], m))
                out[target] = out.get(target, zero()) + coeff * LaurentPoly({n_exp: 1})
    return FockVector(out)


def e_action(m: int, vec: FockVector) -> FockVector:
    """Chevalley raising operator E_m, mirror of f_action on the earlier rows."""
    out: dict[Symbol, LaurentPoly] = {}
    for sym, coeff in vec.terms.items():
        eps = [_row_eps(r, parts, m) for r, parts in zip(sym.charges, sym.rows)]
        for j in range(sym.d):
            if _row_raiseable(sym.charges[j], sym.rows[j], m):
                n_exp = -sum(eps[:j])
                target = sym.with_row(j, _row_move_down(sym.charges[j], sym.rows[j], m))
                out[target] = out.get(target, zero()) + coeff * LaurentPoly({n_exp: 1})
    return FockVector(out)


def divided_power_f(m: int, mult: int, vec: FockVector) -> FockVector:
    """F_m^(mult) = F_m^mult / [mult]!, exact division required."""
    if mult < 1:
        raise ValueError("divided power needs mult >= 1")
    out = vec
    for _ in range(mult):
        out = f_action(m, out)
    if mult == 1:
        return out
    return out.exact_div_scalar(q_factorial(mult))


def crystal_f(m: int, sym: Symbol) -> Symbol | None:
    """Kashiwara lowering at node m via the signature rule.

    Rows are read 1..d and marked '-' when lowerable at m, '+' when raiseable.
    Adjacent '+-' pairs (a raiseable row immediately before a lowerable one,
    after iterated cancellation) cancel; the operator moves the bead in the
    rightmost surviving '-' row, or returns None when none survives.  This is
    the tensor-product crystal rule matching the comultiplication behind
    f_action: the survivor's f_action exponent is minus the number of
    surviving '+' rows, zero whenever no raiseable row survives.
    """
    survivors: list[int] = []
    pending_plus = 0
    for j in range(sym.d):
        r, parts = sym.charges[j], sym.rows[j]
        if _row_lowerable(r, parts, m):
            if pending_plus:
                pending_plus -= 1
            else:
                survivors.append(j)
        elif _row_raiseable(r, parts, m):
            pending_plus += 1
    if not survivors:
        return None
    j = survivors[-1]
    return sym.with_row(j, _row_move_up(sym.charges[j], sym.rows[j], m))


def crystal_signature(m: int, sym: Symbol) -> tuple[int | None, int]:
    """(surviving row index or None, count of surviving '+' rows) at node m."""
    survivors: list[int] = []
    pending_plus = 0
    for j in range(sym.d):
        r, parts = sym.charges[j], sym.rows[j]
        if _row_lowerable(r, parts, m):
            if pending_plus:
                pending_plus -= 1
            else:
                survivors.append(j)
        elif _row_raiseable(r, parts, m):
            pending_plus += 1
    return (survivors[-1] if survivors else None, pending_plus)


def _candidate_nodes(sym: Symbol) -> list[int]:
    nodes = set()
    for r, parts in zip(sym.charges, sym.rows):
        s = len(parts)
        if _row_lowerable(r, parts, r - s):
            nodes.add(r - s)
        for j in range(1, s + 1):
            v = r - j + 1 + parts[j - 1]
            if not _row_contains(r, parts, v + 1):
                nodes.add(v)
    return sorted(nodes)


@dataclass(frozen=True)
class CrystalComponent:
    """Standard symbols: the crystal component of the highest-weight symbol."""

    charges: tuple[int, ...]
    by_height: tuple[frozenset[Symbol], ...]

    def all_symbols(self) -> frozenset[Symbol]:
        return frozenset().union(*self.by_height)

    def __contains__(self, sym: Symbol) -> bool:
        h = sym.height
        return h < len(self.by_height) and sym in self.by_height[h]


def enumerate_standard_symbols(charges: tuple[int, ...], n: int) -> CrystalComponent:
    """Breadth-first closure of the highest-weight symbol under crystal_f."""
    charges = tuple(charges)
    start = highest_weight_symbol(charges)
    layers = [frozenset([start])]
    for h in range(n):
        nxt = set()
        for sym in layers[h]:
            for m in _candidate_nodes(sym):
                child = crystal_f(m, sym)
                if child is not None:
                    nxt.add(child)
        layers.append(frozenset(nxt))
    return CrystalComponent(charges, tuple(layers))


def lt_monomial(sym: Symbol) -> tuple[tuple[int, int], ...]:
    """Peeling word (node, multiplicity), outermost factor first.

    Each step locates the smallest displaced bead value v, lowers every bead of
    value v simultaneously (their count is the divided-power multiplicity) and
    records the node v-1.  The peel strictly reduces the height, so it reaches
    the highest-weight symbol; a cap guards against invariant breaches.
    """
    word = []
    rows = list(sym.rows)
    guard = sym.height + 1
    for _ in range(guard + 1):
        displaced = []
        for idx, parts in enumerate(rows):
            r = sym.charges[idx]
            for j in range(1, len(parts) + 1):
                if parts[j - 1] > 0:
                    displaced.append((r - j + 1 + parts[j - 1], idx, j))
        if not displaced:
            return tuple(word)
        vmin = min(v for v, _, _ in displaced)
        hits = [(idx, j) for v, idx, j in displaced if v == vmin]
        word.append((vmin - 1, len(hits)))
        for idx, j in hits:
            parts = list(rows[idx])
            parts[j - 1] -= 1
            while parts and parts[-1] == 0:
                parts.pop()
            rows[idx] = tuple(parts)
    raise NonTerminating(f"peeling of {sym!r} did not reach the highest weight")


def intermediate_A(sym: Symbol) -> FockVector:
    """Divided-power monomial applied to the highest-weight vector.

    Bar-invariant by construction; its coefficient at sym must have constant
    term one, which is asserted.
    """
    vec = FockVector.unit(highest_weight_symbol(sym.charges))
    for m, mult in reversed(lt_monomial(sym)):
        vec = divided_power_f(m, mult, vec)
    if vec.coefficient(sym).constant_term() != 1:
        raise LeadingTermMismatch(
            f"monomial for {sym!r} has leading coefficient "
            f"{vec.coefficient(sym).text()}"
        )
    return vec


def _concat_key(sym: Symbol) -> tuple[int, ...]:
    return tuple(chain.from_iterable(sym.rows))


def _pick_violator(violators: list[Symbol], reverse_ties: bool) -> Symbol:
    best_key = max(_concat_key(s) for s in violators)
    tied = [s for s in violators if _concat_key(s) == best_key]
    tied.sort(key=lambda s: s.rows)
    return tied[0] if reverse_ties else tied[-1]


def canonical_basis(
    charges: tuple[int, ...], n: int, *, reverse_ties: bool = False
) -> dict[Symbol, FockVector]:
    """Canonical basis vectors b for every standard symbol of height <= n.

    Each b is bar-invariant and congruent to its standard basis vector modulo
    q times the standard lattice.  Vectors are produced from the intermediate
    monomials by repeatedly clearing, largest symbol first, every standard
    coefficient not lying in qZ[q] with the bar-symmetric correction it
    determines.  `reverse_ties` flips the tie-break between symbols whose
    concatenated displacement partitions coincide; the result must not change.
    """
    component = enumerate_standard_symbols(charges, n)
    standard = component.all_symbols()
    per_height = [len(layer) for layer in component.by_height]

    basis: dict[Symbol, FockVector] = {}
    in_progress: set[Symbol] = set()

    def compute(sym: Symbol) -> FockVector:
        if sym in basis:
            return basis[sym]
        if sym in in_progress:
            raise NonTerminating(f"cyclic correction dependency at {sym!r}")
        in_progress.add(sym)
        cur = intermediate_A(sym)
        cap = max(1, per_height[sym.height]) ** 2
        for _ in range(cap + 1):
            violators = [
                s
                for s, c in cur.terms.items()
                if s != sym and s in standard and not c.in_q_zq()
            ]
            if not violators:
                break
            vio = _pick_violator(violators, reverse_ties)
            gamma = bar_symmetric_head(cur.coefficient(vio))
            cur = cur - compute(vio).scale(gamma)
        else:
            raise NonTerminating(f"correction loop for {sym!r} exceeded {cap} steps")
        _check_lattice(sym, cur)
        in_progress.discard(sym)
        basis[sym] = cur
        return cur

    order = sorted(standard, key=lambda s: (s.height, _concat_key(s), s.rows))
    for sym in order:
        compute(sym)
    return basis


def _check_lattice(sym: Symbol, vec: FockVector) -> None:
    for s, c in vec.terms.items():
        if s == sym:
            ok = c.constant_term() == 1 and (c - one()).in_q_zq()
        else:
            ok = c.in_q_zq()
        assert ok, (
            f"lattice property violated: coefficient {c.text()} at {s!r} "
            f"in the vector for {sym!r}"
        )
    if any(v < 0 for c in vec.terms.values() for v in c.coeffs.values()):
        warnings.warn(
            f"canonical basis vector for {sym!r} has a negative coefficient",
            PositivityWarning,
            stacklevel=2,
        )


@dataclass(frozen=True)
class ConstructibleCharacters:
    """Constructible characters of height n, keyed by standard symbol."""

    charges: tuple[int, ...]
    n: int
    by_symbol: dict

    def character_set(self) -> frozenset:
        return frozenset(self.by_symbol.values())

    def character_multiset(self) -> tuple:
        return tuple(sorted(self.by_symbol.values(), key=lambda cs: cs.sort_key()))


def lm_constructible(charges: tuple[int, ...], n: int) -> ConstructibleCharacters:
    """Leclerc-Miyachi constructible characters for G(d,1,n) at these charges.

    Evaluates every canonical basis vector of height n at q = 1 and reads the
    result as a character sum through the symbol / d-partition bijection.
    """
    basis = canonical_basis(charges, n)
    out = {}
    for sym, vec in basis.items():
        if sym.height != n:
            continue
        counts = {}
        for s, value in vec.eval_at_one().items():
            if value:
                counts[dpartition_from_symbol(s)] = value
        out[sym] = CharacterSum.from_counts(counts)
    return ConstructibleCharacters(tuple(charges), n, out)
