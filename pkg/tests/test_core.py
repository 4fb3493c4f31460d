import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conceptq.core import (
    DisjunctionDataset,
    Projector,
    as_vector,
    inner_product,
    matrix_element,
    norm,
    project_probability,
    validate_dataset,
)
from conceptq.errors import (
    DimensionMismatch,
    DuplicateLabel,
    LengthMismatch,
    NegativeWeight,
    SumOutOfTolerance,
)


def basis(k, dim):
    v = np.zeros(dim, dtype=complex)
    v[k] = 1
    return v


def test_table1_accepted_and_renormalized(table1):
    assert len(table1) == 24
    for col in (table1.mu_a, table1.mu_b, table1.mu_a_or_b):
        assert col.total() == pytest.approx(1.0, abs=1e-15)
    # raw columns sum to 1.0001, 1.0001, 0.9999
    assert table1.mu_a["Almond"] == pytest.approx(0.0359 / 1.0001, rel=1e-12)


def test_already_normalized_dataset_unchanged():
    raw = DisjunctionDataset.from_columns(["x", "y"], [0.5, 0.5], [0.5, 0.5], [0.5, 0.5])
    ds = validate_dataset(raw)
    assert ds.mu_a.weights.tolist() == [0.5, 0.5]
    assert ds.mu_a_or_b.weights.tolist() == [0.5, 0.5]


def test_sum_out_of_tolerance():
    raw = DisjunctionDataset.from_columns(["x", "y"], [0.7, 0.7], [0.5, 0.5], [0.5, 0.5])
    with pytest.raises(SumOutOfTolerance):
        validate_dataset(raw, tolerance=0.01)


def test_negative_weight():
    raw = DisjunctionDataset.from_columns(["x", "y"], [1.1, -0.1], [0.5, 0.5], [0.5, 0.5])
    with pytest.raises(NegativeWeight):
        validate_dataset(raw)


def test_duplicate_label():
    raw = DisjunctionDataset.from_columns(["x", "x"], [0.5, 0.5], [0.5, 0.5], [0.5, 0.5])
    with pytest.raises(DuplicateLabel):
        validate_dataset(raw)


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        DisjunctionDataset.from_columns(["x", "y"], [0.5, 0.5], [1.0], [0.5, 0.5])


def test_inner_product_examples():
    assert inner_product(basis(0, 3), basis(0, 3)) == 1 + 0j
    assert inner_product(basis(0, 3), basis(1, 3)) == 0
    s = 1 / math.sqrt(2)
    assert abs(inner_product([s, s], [s, -s])) < 1e-15
    # conjugate-linear in the first slot
    assert inner_product([1j, 0], [1, 0]) == -1j


def test_inner_product_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        inner_product([1, 0], [1, 0, 0])


def test_project_probability_examples():
    e3 = basis(2, 6)
    assert project_probability(e3, Projector({2})) == 1
    assert project_probability(e3, Projector({4})) == 0
    v = as_vector([1 / math.sqrt(2), 1j / math.sqrt(2)])
    assert project_probability(v, Projector({0})) == pytest.approx(0.5, abs=1e-15)


def test_projector_dimension_checked():
    with pytest.raises(DimensionMismatch):
        project_probability([1, 0], Projector({2}))


def test_matrix_element_matches_definition():
    u = as_vector([1, 1j, 2])
    v = as_vector([3, -1j, 1 + 1j])
    p = Projector({0, 2})
    assert matrix_element(u, p, v) == pytest.approx(inner_product(u, p.apply(v)))


complex_st = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)


def unit(vals):
    v = np.array(vals, dtype=complex)
    n = norm(v)
    return v / n if n > 1e-6 else None


@given(st.lists(complex_st, min_size=1, max_size=12), st.data())
def test_complete_family_sums_to_one(vals, data):
    v = unit(vals)
    if v is None:
        return
    labels = data.draw(st.lists(st.integers(0, 3), min_size=len(v), max_size=len(v)))
    family = [Projector({i for i, lab in enumerate(labels) if lab == g}) for g in set(labels)]
    assert abs(sum(project_probability(v, p) for p in family) - 1) <= 1e-12


@given(st.lists(st.tuples(complex_st, complex_st), min_size=1, max_size=12))
def test_inner_product_hermitian(pairs):
    u = np.array([a for a, _ in pairs])
    v = np.array([b for _, b in pairs])
    lhs = inner_product(u, v)
    rhs = inner_product(v, u).conjugate()
    assert abs(lhs - rhs) <= 1e-15 * max(1.0, abs(lhs))


@given(
    st.lists(complex_st, min_size=2, max_size=12),
    st.floats(0, 2 * math.pi),
    st.sets(st.integers(0, 11), max_size=6),
)
def test_probability_invariant_under_global_phase(vals, gamma, idx):
    v = unit(vals)
    if v is None:
        return
    p = Projector({i for i in idx if i < len(v)})
    rotated = cmath.exp(1j * gamma) * v
    assert abs(project_probability(v, p) - project_probability(rotated, p)) <= 1e-12
