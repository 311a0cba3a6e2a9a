"""Bijections: worked examples, exhaustive round-trips, target membership,
and the disjoint-coverage properties the maps promise."""

from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qpart.bijections import (
    AKY_SKETCH,
    RANK,
    SOURCE_DK,
    SOURCE_DK_MINUS_1,
    BijectionError,
    SketchMembershipError,
    akdk_inverse,
    akdk_map,
    base_bc_inverse,
    base_bc_map,
    bkck_inverse,
    bkck_map,
    dk_recurrence_inverse,
    dk_recurrence_map,
    dk_recurrence_subrange,
    ef_shift,
    glaisher_merge,
    glaisher_split,
    sketch_harness,
)
from qpart.counting import enumerate_class
from qpart.partitions import AnchoredPartition, ClassSpec, Partition, is_member

P = Partition.from_parts


# ---------------------------------------------------------------------------
# binary merge / split
# ---------------------------------------------------------------------------


def test_glaisher_worked_example():
    assert glaisher_merge(P([1, 1, 1, 1])) == P([4])
    assert glaisher_split(P([4])) == P([1, 1, 1, 1])
    assert glaisher_merge(P([3, 3, 3, 1])) == P([6, 3, 1])


def test_glaisher_rejects_bad_input():
    with pytest.raises(BijectionError):
        glaisher_merge(P([4, 1]))


def test_glaisher_round_trips_exhaustively():
    for n in range(0, 26):
        for p in enumerate_class(ClassSpec("B"), n):
            merged = glaisher_merge(p)
            assert is_member(ClassSpec("A"), merged)
            assert merged.weight == n
            assert glaisher_split(merged) == p
        for p in enumerate_class(ClassSpec("A"), n):
            if p.parts:
                split = glaisher_split(p)
                assert is_member(ClassSpec("B"), split)
                assert glaisher_merge(split) == p


@given(st.lists(st.integers(0, 8), min_size=1, max_size=6),
       st.lists(st.integers(1, 5), min_size=1, max_size=6))
def test_glaisher_merge_properties(halves, mults):
    odd_parts = []
    for h, m in zip(halves, mults):
        odd_parts.extend([2 * h + 1] * m)
    p = P(odd_parts)
    merged = glaisher_merge(p)
    assert merged.weight == p.weight
    assert len(set(merged.parts)) == len(merged.parts)
    assert glaisher_split(merged) == p


# ---------------------------------------------------------------------------
# smallest-part subtraction onto the four distinct-part classes
# ---------------------------------------------------------------------------

AKDK_TABLE_K4_W8 = {
    (8, 0, 0, 0, 0): ((7,), "P2"),
    (6, 2, 0, 0, 0, 0): ((6, 1), "P2"),
    (7, 1, 0, 0, 0, 0): ((7,), "P1"),
    (5, 3, 0, 0, 0, 0): ((5, 2), "P2"),
    (5, 2, 1, 0, 0, 0, 0): ((5, 2), "P1"),
    (4, 3, 1, 0, 0, 0, 0): ((4, 3), "P1"),
    (4, 1, 1, 1, 1): ((4, 1, 1, 1), "Pprime"),
    (2, 2, 2, 2): ((2, 2, 2, 1), "Pdprime"),
}


def test_akdk_worked_table():
    for source, (image, cid) in AKDK_TABLE_K4_W8.items():
        out = akdk_map(4, Partition(source))
        assert out.image.parts == image
        assert out.target_class.class_id == cid
        assert akdk_inverse(4, out) == Partition(source)


def test_akdk_rejects_non_members():
    with pytest.raises(BijectionError):
        akdk_map(2, P([4, 2]))  # smallest part not repeated twice
    with pytest.raises(BijectionError):
        akdk_map(2, P([1, 0, 0]))  # weight below 2


def test_akdk_round_trip_and_tagged_coverage():
    # images, tagged by target class, hit each target exactly once
    for k in (1, 2, 3, 4, 5):
        for n in range(2, 26 if k < 4 else 21):
            images = []
            for p in enumerate_class(ClassSpec("Dk", k), n):
                out = akdk_map(k, p)
                assert out.image.weight == n - 1
                assert is_member(out.target_class, out.image)
                assert akdk_inverse(k, out) == p
                images.append((out.target_class.class_id, out.image.parts))
            assert len(images) == len(set(images))
            by_class = Counter(cid for cid, _ in images)
            for cid in ("P1", "P2", "Pprime", "Pdprime"):
                spec = ClassSpec(cid) if cid in ("P1", "P2") else ClassSpec(cid, k)
                expected = {m.parts for m in enumerate_class(spec, n - 1)}
                got = {parts for c, parts in images if c == cid}
                assert got == expected, (k, n, cid)
                assert by_class[cid] == len(expected)


# ---------------------------------------------------------------------------
# recurrence map between neighbouring smallest-part multiplicities
# ---------------------------------------------------------------------------


def test_dk_recurrence_case_examples():
    out = dk_recurrence_map(3, P([4, 3, 1, 1, 1]), SOURCE_DK)
    assert out.image == P([4, 3, 1, 0, 0])
    assert dk_recurrence_subrange(3, out.image) == "a"
    out = dk_recurrence_map(3, P([5, 1, 1]), SOURCE_DK_MINUS_1)
    assert out.image == P([5, 0, 0])
    assert dk_recurrence_subrange(3, out.image) == "c"
    out = dk_recurrence_map(3, P([4, 2, 2, 2]), SOURCE_DK)
    assert out.image == P([4, 2, 1, 1])
    assert dk_recurrence_subrange(3, out.image) == "b"
    out = dk_recurrence_map(3, P([5, 4, 0, 0]), SOURCE_DK_MINUS_1)
    assert out.image == P([5, 4])
    assert out.target_class.class_id == "A"


def test_dk_recurrence_round_trip_and_coverage():
    for k in (2, 3, 4, 5):
        cap = 26 if k < 4 else 21
        for n in range(k, cap):
            images = []
            for source, mult in ((SOURCE_DK, k), (SOURCE_DK_MINUS_1, k - 1)):
                for p in enumerate_class(ClassSpec("Dk", mult), n):
                    out = dk_recurrence_map(k, p, source)
                    back, back_source = dk_recurrence_inverse(k, out)
                    assert (back, back_source) == (p, source)
                    images.append(out)
            shifted = Counter(o.image.parts for o in images
                              if o.target_class.class_id == "Dk")
            expected = Counter(p.parts
                               for p in enumerate_class(ClassSpec("Dk", k - 1), n - k + 1))
            assert shifted == expected, (k, n)
            unchanged = Counter(o.image.parts for o in images
                                if o.target_class.class_id == "A")
            expected_a = Counter(p.parts for p in enumerate_class(ClassSpec("A"), n))
            assert unchanged == Counter({key: 2 * v for key, v in expected_a.items()})


def test_dk_recurrence_rejects_bad_input():
    with pytest.raises(BijectionError):
        dk_recurrence_map(1, P([2, 1, 1]), SOURCE_DK)
    with pytest.raises(BijectionError):
        dk_recurrence_map(3, P([2, 1, 1]), "mystery")
    with pytest.raises(BijectionError):
        dk_recurrence_map(3, P([1, 1]), SOURCE_DK)


# ---------------------------------------------------------------------------
# base map between all-odd and anchored classes
# ---------------------------------------------------------------------------


def test_base_map_round_trips_rank():
    for n in range(1, 31):
        for p in enumerate_class(ClassSpec("B"), n):
            ap = base_bc_map(p)
            assert ap.weight == n + 1
            assert is_member(ClassSpec("C"), ap)
            assert base_bc_inverse(ap) == p


def test_base_map_is_anchor_compatible():
    # the anchor of the image is one more than the largest odd part; the
    # windowed recursion depends on this alignment
    for n in range(1, 31):
        for p in enumerate_class(ClassSpec("B"), n):
            largest_odd = max(v for v in p.parts if v % 2)
            assert base_bc_map(p).anchor == largest_odd + 1


def test_base_map_rank_equals_global_canonical_pairing():
    b_sorted = sorted(p.parts for p in enumerate_class(ClassSpec("B"), 8))
    c_sorted = sorted(ap.partition.parts for ap in enumerate_class(ClassSpec("C"), 9))
    assert len(b_sorted) == len(c_sorted)
    for b_parts, c_parts in zip(b_sorted, c_sorted):
        assert base_bc_map(Partition(b_parts)).partition.parts == c_parts


def test_base_map_sketch_worked_example():
    ap = base_bc_map(P([3, 1, 1, 1, 1]), AKY_SKETCH)
    assert ap == AnchoredPartition(4, P([4, 4]))
    assert base_bc_inverse(ap, AKY_SKETCH) == P([3, 1, 1, 1, 1])


def test_base_map_sketch_flags_overshoot():
    with pytest.raises(SketchMembershipError):
        base_bc_map(P([1] * 8), AKY_SKETCH)
    report = sketch_harness(8)
    assert report.attempted == 6 and report.succeeded == 5
    (source, candidate), = report.failures
    assert source == P([1] * 8)
    assert candidate.partition == P([4, 2, 2, 1])
    assert not report.all_ok
    assert sketch_harness(4).all_ok


def test_base_map_rejects_bad_strategy_and_input():
    with pytest.raises(BijectionError):
        base_bc_map(P([2, 1]))
    with pytest.raises(BijectionError):
        base_bc_map(P([3, 1]), "magic")


# ---------------------------------------------------------------------------
# windowed recursion
# ---------------------------------------------------------------------------


def test_bkck_sketch_worked_example():
    ap = AnchoredPartition(4, P([8, 6, 4, 4]))
    out = bkck_inverse(3, "e", ap, AKY_SKETCH)
    assert out.image == P([8, 6, 3, 1, 1, 1, 1])
    assert out.case_tag[:2] == ("strip:8", "strip:6")
    back = bkck_map(3, "e", out.image, AKY_SKETCH)
    assert back.image == ap
    assert back.case_tag == out.case_tag


def test_bkck_forced_pair_at_small_weight():
    for strategy in (RANK, AKY_SKETCH):
        out = bkck_map(3, "o", P([4, 1, 1, 1]), strategy)
        assert out.image == AnchoredPartition(2, P([4, 2, 2]))


def test_bkck_base_case_equals_base_map():
    for n in range(1, 21):
        for p in enumerate_class(ClassSpec("B"), n):
            out = bkck_map(1, "e", p)
            assert out.image == base_bc_map(p)
            out2 = bkck_map(2, "e", p)
            assert out2.image == base_bc_map(p)


def test_bkck_round_trip_exhaustive_small():
    for k in (1, 2, 3):
        for parity in ("e", "o"):
            for n in range(1, 19):
                forward_images = []
                for p in enumerate_class(ClassSpec(f"Bk_{parity}", k), n):
                    out = bkck_map(k, parity, p)
                    assert out.image.weight == n + 1
                    back = bkck_inverse(k, parity, out.image)
                    assert back.image == p
                    forward_images.append(out.image)
                # forward images exhaust the anchored class
                expected = set(enumerate_class(ClassSpec(f"Ck_{parity}", k), n + 1))
                assert set(forward_images) == expected
                assert len(forward_images) == len(expected)


def test_bkck_strip_tags_alternate_parity():
    out = bkck_map(3, "e", P([8, 6, 3, 1, 1, 1, 1]))
    strips = [t for t in out.case_tag if t.startswith("strip:")]
    assert [int(t.split(":")[1]) for t in strips] == [8, 6]


def test_bkck_rejects_non_members():
    with pytest.raises(BijectionError):
        bkck_map(2, "o", P([3, 1]))  # no window part, so parity cannot be odd
    with pytest.raises(BijectionError):
        bkck_map(2, "q", P([3, 1]))


# ---------------------------------------------------------------------------
# largest-part shifts
# ---------------------------------------------------------------------------


def test_ef_shift_worked_examples():
    assert ef_shift("B->F", P([3, 3])) == P([4, 3])
    assert ef_shift("B->E", P([3, 3])) == P([5, 3])
    assert ef_shift("F->B", P([4, 3])) == P([3, 3])
    assert ef_shift("E->B", P([5, 3])) == P([3, 3])


def test_ef_shift_round_trips_exhaustively():
    for n in range(1, 26):
        for p in enumerate_class(ClassSpec("B"), n):
            f_img = ef_shift("B->F", p)
            assert is_member(ClassSpec("F"), f_img) and f_img.weight == n + 1
            assert ef_shift("F->B", f_img) == p
            e_img = ef_shift("B->E", p)
            assert is_member(ClassSpec("E"), e_img) and e_img.weight == n + 2
            assert ef_shift("E->B", e_img) == p
        for p in enumerate_class(ClassSpec("E"), n):
            if p.parts[0] >= 3:
                assert ef_shift("B->E", ef_shift("E->B", p)) == p
        for p in enumerate_class(ClassSpec("F"), n):
            assert ef_shift("B->F", ef_shift("F->B", p)) == p


def test_ef_shift_rejects_bad_input():
    with pytest.raises(BijectionError):
        ef_shift("B->F", P([4, 1]))
    with pytest.raises(BijectionError):
        ef_shift("E->B", P([1]))
    with pytest.raises(BijectionError):
        ef_shift("sideways", P([3]))
