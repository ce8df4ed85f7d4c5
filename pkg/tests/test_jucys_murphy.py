import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wreathcells.combinatorics import (
    BoxCoord,
    DPartition,
    enumerate_dpartitions,
    standard_tableaux,
    tableau_count,
)
from wreathcells.jucys_murphy import (
    CMParams,
    euler_value,
    is_generic,
    jm_cellular_characters,
    jm_eigenvalue,
    tableau_spectrum,
)


def dp(*comps):
    return DPartition(tuple(tuple(c) for c in comps))


P_GAP1 = CMParams.from_ksharp(2, 1, (-1, 0))


def test_eigenvalue_examples():
    assert jm_eigenvalue(P_GAP1, BoxCoord(1, 1, 1)) == -2
    p = CMParams.from_ksharp(3, 7, (5, 0, -3))
    assert jm_eigenvalue(p, BoxCoord(1, 1, 2)) == 0
    p1 = CMParams.from_ksharp(1, 1, (0,))
    assert jm_eigenvalue(p1, BoxCoord(2, 4, 1)) == -2  # -(b - a) = -(4 - 2)


# Matrix oracle: represent J_2 and J_3 on the regular module of the symmetric
# group on three letters and read off the joint spectrum by exact linear
# algebra; compare with the eigenvalue formula applied to tableaux.


def _compose(g, h):
    # (g h)(x) = g(h(x)); permutations as tuples, g[i-1] = image of i
    return tuple(g[h[i] - 1] for i in range(3))


def _transposition(i, j):
    img = [1, 2, 3]
    img[i - 1], img[j - 1] = img[j - 1], img[i - 1]
    return tuple(img)


def _right_mult_matrix(element):
    """Matrix of v -> v * element on the regular module, element = {perm: coeff}."""
    basis = sorted(itertools.permutations((1, 2, 3)))
    index = {g: i for i, g in enumerate(basis)}
    mat = [[Fraction(0)] * 6 for _ in range(6)]
    for col, g in enumerate(basis):
        for perm, coeff in element.items():
            mat[index[_compose(g, perm)]][col] += coeff
    return mat


def _nullity(rows):
    mat = [row[:] for row in rows]
    cols = len(mat[0])
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = mat[rank][col]
        mat[rank] = [x / inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return cols - rank


def test_symmetric_group_matrix_oracle():
    c0 = Fraction(1)
    j2 = _right_mult_matrix({_transposition(1, 2): -c0})
    j3 = _right_mult_matrix(
        {_transposition(1, 3): -c0, _transposition(2, 3): -c0}
    )

    def joint_multiplicity(a, b):
        stacked = []
        for r in range(6):
            stacked.append([j2[r][c] - (a if r == c else 0) for c in range(6)])
        for r in range(6):
            stacked.append([j3[r][c] - (b if r == c else 0) for c in range(6)])
        return _nullity(stacked)

    # scan a grid wide enough to contain every possible integer eigenvalue
    grid = [Fraction(v) for v in range(-3, 4)]
    observed = {
        (a, b): joint_multiplicity(a, b)
        for a in grid
        for b in grid
        if joint_multiplicity(a, b)
    }
    assert sum(observed.values()) == 6  # the full regular module is accounted for

    params = CMParams.from_ksharp(1, c0, (0,))
    predicted = {}
    for shape in enumerate_dpartitions(1, 3):
        mult = tableau_count(shape)
        for tab in standard_tableaux(shape):
            spec = tableau_spectrum(params, tab)
            key = (spec[1], spec[2])
            predicted[key] = predicted.get(key, 0) + mult
    assert observed == predicted


def test_spectrum_examples():
    tab = standard_tableaux(dp((2,), ()))[0]
    assert tableau_spectrum(P_GAP1, tab) == (-2, -4)
    shape = dp((1,), (1,))
    specs = {tableau_spectrum(P_GAP1, t) for t in standard_tableaux(shape)}
    assert specs == {(Fraction(-2), Fraction(0)), (Fraction(0), Fraction(-2))}


def test_euler_examples():
    assert euler_value(P_GAP1, dp((), ())) == 0
    assert euler_value(P_GAP1, dp((1,), (1,))) == -2


PARAM_BATTERY = [
    CMParams.from_ksharp(1, 1, (0,)),
    CMParams.from_ksharp(2, 1, (-1, 0)),
    CMParams.from_ksharp(2, Fraction(2, 3), (Fraction(1, 2), 0)),
    CMParams.from_ksharp(3, 1, (-2, -1, 0)),
    CMParams.from_ksharp(3, Fraction(-1, 2), (1, 1, 0)),
]


@pytest.mark.parametrize("params", PARAM_BATTERY)
def test_spectrum_telescopes_to_euler(params):
    for n in range(5 if params.d < 3 else 4):
        for shape in enumerate_dpartitions(params.d, n):
            ev = euler_value(params, shape)
            for tab in standard_tableaux(shape):
                assert sum(tableau_spectrum(params, tab)) == ev


def test_is_generic_examples():
    report = is_generic(P_GAP1, 2)
    assert not report.generic
    p, q, j = report.witness
    assert P_GAP1.k[p] - P_GAP1.k[q] == P_GAP1.c0 * j

    wide = CMParams.from_ksharp(3, 1, (-14, -7, 0))
    assert is_generic(wide, 3).generic

    zero_c0 = CMParams.from_ksharp(2, 0, (-1, 0))
    report = is_generic(zero_c0, 2)
    assert not report.generic and report.c0_zero


def test_cells_gap_one():
    dec = jm_cellular_characters(P_GAP1, 2)
    chars = {cs.text() for _, cs in dec.cells}
    assert chars == {
        "2|∅",
        "1.1|∅ + 1|1",
        "1|1 + ∅|2",
        "∅|1.1",
    }
    spectra = [spec for spec, _ in dec.cells]
    assert len(spectra) == 4 and len(set(spectra)) == 4


def test_cells_generic_all_singletons():
    params = CMParams.from_ksharp(3, 1, (-14, -7, 0))
    dec = jm_cellular_characters(params, 3)
    assert dec.report.generic
    for _, cs in dec.cells:
        assert len(cs.entries) == 1 and cs.entries[0][1] == 1
    # one cell per tableau, one distinct character per shape
    assert len(dec.cells) == sum(
        tableau_count(shape) for shape in enumerate_dpartitions(3, 3)
    )
    assert len(dec.character_set()) == len(enumerate_dpartitions(3, 3))
    # distinct spectra across all tableaux is the content of genericity
    all_specs = [
        tableau_spectrum(params, t)
        for shape in enumerate_dpartitions(3, 3)
        for t in standard_tableaux(shape)
    ]
    assert len(all_specs) == len(set(all_specs))


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_generic_spectra_pairwise_distinct(d, n):
    # gaps of size n between consecutive ksharp values are generic for size n
    params = CMParams.from_ksharp(d, 1, [-n * i for i in range(d)])
    assert is_generic(params, n).generic
    specs = [
        tableau_spectrum(params, tab)
        for shape in enumerate_dpartitions(d, n)
        for tab in standard_tableaux(shape)
    ]
    assert len(specs) == len(set(specs))


def test_cells_collapse_when_constant():
    params = CMParams.from_ksharp(2, 0, (5, 5))
    dec = jm_cellular_characters(params, 2)
    assert len(dec.cells) == 1
    total = sum(m for _, cs in dec.cells for _, m in cs.entries)
    assert total == sum(
        tableau_count(shape) for shape in enumerate_dpartitions(2, 2)
    )


@pytest.mark.parametrize("params", PARAM_BATTERY)
@pytest.mark.parametrize("n", [2, 3])
def test_partition_of_unity(params, n):
    dec = jm_cellular_characters(params, n)
    for shape in enumerate_dpartitions(params.d, n):
        total = sum(cs.multiplicity(shape) for _, cs in dec.cells)
        assert total == tableau_count(shape)


nonzero_rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
).filter(lambda x: x != 0)


@given(nonzero_rationals)
def test_scaling_covariance(factor):
    params = CMParams.from_ksharp(2, 1, (-1, 0))
    scaled = params.scaled(factor)
    base = jm_cellular_characters(params, 2)
    other = jm_cellular_characters(scaled, 2)
    assert base.character_set() == other.character_set()
    base_specs = {tuple(factor * x for x in spec) for spec, _ in base.cells}
    assert base_specs == {spec for spec, _ in other.cells}


def test_json_shape():
    obj = jm_cellular_characters(P_GAP1, 2).to_json_obj()
    assert obj["generic"] is False
    assert len(obj["cells"]) == 4
    assert all(
        isinstance(cell["spectrum"], list) and isinstance(cell["character"], dict)
        for cell in obj["cells"]
    )
