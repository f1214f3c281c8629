"""Orbit stratification, simultaneous kernels, and stratum closures."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from entrywise.strata import (
    GroupTag,
    IndexPartition,
    closure_probe,
    generate_in_stratum,
    kernel_for_partition,
    rank_bound_check,
    refinement_leq,
    simultaneous_kernel,
    single_block_partition,
    singleton_partition,
    stratify,
    subspace_max_angle,
    verify_offdiagonal_structure,
)

A2 = np.array(
    [[5.0, -5.0, 1.0], [-5.0, 5.0, -1.0], [1.0, -1.0, 2.0]], dtype=complex
)


def test_index_partition_canonical_form():
    pi = IndexPartition(((2,), (0, 1)))
    assert pi.blocks == ((0, 1), (2,))
    assert pi.size == 3
    assert IndexPartition(((1, 0), (2,))) == pi


def test_index_partition_validation():
    with pytest.raises(ValueError):
        IndexPartition(((0, 1), (1, 2)))  # overlap
    with pytest.raises(ValueError):
        IndexPartition(((0,), (2,)))  # gap
    with pytest.raises(ValueError):
        IndexPartition(((0,), ()))


def test_refinement_order():
    fine = singleton_partition(3)
    coarse = single_block_partition(3)
    mid = IndexPartition(((0, 1), (2,)))
    assert refinement_leq(fine, mid)
    assert refinement_leq(mid, coarse)
    assert refinement_leq(fine, coarse)
    assert not refinement_leq(coarse, mid)
    assert not refinement_leq(mid, IndexPartition(((0,), (1, 2))))


def test_stratify_sign_flip_example():
    # u = (1, -1) block under the unit circle, separate under the trivial group
    assert stratify(A2, GroupTag.UNIT_CIRCLE).blocks == ((0, 1), (2,))
    assert stratify(A2, GroupTag.TRIVIAL).blocks == ((0,), (1,), (2,))
    assert stratify(A2, GroupTag.NONZERO_COMPLEX).blocks == ((0, 1), (2,))


def test_stratify_constant_block():
    A = np.ones((3, 3), dtype=complex) * 0.7
    assert stratify(A, GroupTag.TRIVIAL).blocks == ((0, 1, 2),)


def test_stratify_zero_matrix_single_block():
    assert stratify(np.zeros((4, 4)), GroupTag.TRIVIAL).blocks == ((0, 1, 2, 3),)


def test_stratify_identity_is_singletons():
    for g in GroupTag:
        assert stratify(np.eye(3), g).singletons()


def test_stratify_rejects_non_psd():
    bad = np.array([[1.0, 3.0], [3.0, 1.0]])
    with pytest.raises(ValueError, match="eigenvalue"):
        stratify(bad, GroupTag.TRIVIAL)


def test_stratify_scaling_invariance_cx():
    # multiplying a block vector by a nonzero scalar keeps the cx partition
    pi = IndexPartition(((0, 1), (2,)))
    A = generate_in_stratum(pi, GroupTag.NONZERO_COMPLEX, seed=3)
    D = np.diag([2.0, 2.0, 1.0])
    assert stratify(D @ A @ D, GroupTag.NONZERO_COMPLEX) == pi


def test_offdiagonal_structure_follows_diagonal():
    pi = IndexPartition(((0, 1, 2), (3, 4)))
    for g in GroupTag:
        A = generate_in_stratum(pi, g, seed=11)
        assert verify_offdiagonal_structure(A, stratify(A, g), g)


def test_generate_roundtrip_all_groups():
    partitions = [
        IndexPartition(((0,), (1,), (2,))),
        IndexPartition(((0, 1), (2,))),
        IndexPartition(((0, 2), (1,))),
        IndexPartition(((0, 1, 2),)),
        IndexPartition(((0, 1), (2, 3), (4,))),
    ]
    for k, pi in enumerate(partitions):
        for g in GroupTag:
            A = generate_in_stratum(pi, g, seed=5 * k + 1)
            assert stratify(A, g) == pi


def test_kernel_for_partition_helmert():
    pi = IndexPartition(((0, 1, 2), (3,)))
    K = kernel_for_partition(pi)
    assert K.dim == 2
    B = K.basis
    # orthonormal, block zero-sum, vanishes on singleton
    assert np.max(np.abs(B.conj().T @ B - np.eye(2))) < 1e-12
    assert np.max(np.abs(B[:3].sum(axis=0))) < 1e-12
    assert np.max(np.abs(B[3])) == 0.0


def test_simultaneous_kernel_matches_block_kernel():
    for seed, blocks in enumerate([((0, 1), (2,)), ((0, 1, 2),), ((0, 1), (2, 3))]):
        pi = IndexPartition(blocks)
        A = generate_in_stratum(pi, GroupTag.TRIVIAL, seed=20 + seed)
        K = simultaneous_kernel(A)
        Kpi = kernel_for_partition(pi)
        assert K.dim == Kpi.dim
        assert subspace_max_angle(K.basis, Kpi.basis) <= 1e-8


def test_simultaneous_kernel_full_rank_pd():
    rng = np.random.default_rng(7)
    B = rng.standard_normal((4, 4))
    A = B @ B.T + 0.5 * np.eye(4)
    assert simultaneous_kernel(A).dim == 0


def test_subspace_angle_requires_equal_dims():
    with pytest.raises(ValueError):
        subspace_max_angle(np.eye(3)[:, :1], np.eye(3)[:, :2])


def test_rank_bound():
    rng = np.random.default_rng(8)
    for _ in range(10):
        B = rng.standard_normal((4, 2))
        assert rank_bound_check(B @ B.T)
    assert rank_bound_check(np.ones((3, 3)))
    assert rank_bound_check(np.zeros((3, 3)))


def test_closure_probe_path_and_limit():
    target = IndexPartition(((0, 1), (2,)))
    source = singleton_partition(3)
    rows = closure_probe(target, source, steps=6, group=GroupTag.TRIVIAL, seed=0)
    assert len(rows) == 7
    dists = [d for d, _ in rows]
    assert all(dists[i] > dists[i + 1] for i in range(len(dists) - 1))
    assert all(label == source for _, label in rows[:-1])
    assert rows[-1] == (0.0, target)


def test_closure_probe_unit_circle_group():
    target = single_block_partition(3)
    source = IndexPartition(((0, 1), (2,)))
    rows = closure_probe(target, source, steps=5, group=GroupTag.UNIT_CIRCLE, seed=1)
    assert rows[-1][1] == target
    assert all(label == source for _, label in rows[:-1])


def test_closure_probe_rejects_non_refining():
    with pytest.raises(ValueError):
        closure_probe(singleton_partition(3), single_block_partition(3))
    with pytest.raises(ValueError):
        closure_probe(single_block_partition(3), single_block_partition(3))


@given(st.integers(2, 6), st.data())
def test_stratify_monotone_in_group(n, data):
    # trivial-orbit blocks are unit-circle blocks are cx blocks
    blocks = []
    remaining = list(range(n))
    while remaining:
        size = data.draw(st.integers(1, len(remaining)))
        blocks.append(tuple(remaining[:size]))
        remaining = remaining[size:]
    pi = IndexPartition(tuple(blocks))
    A = generate_in_stratum(pi, GroupTag.TRIVIAL, seed=data.draw(st.integers(0, 50)))
    p_triv = stratify(A, GroupTag.TRIVIAL)
    p_s1 = stratify(A, GroupTag.UNIT_CIRCLE)
    p_cx = stratify(A, GroupTag.NONZERO_COMPLEX)
    assert refinement_leq(p_triv, p_s1)
    assert refinement_leq(p_s1, p_cx)
