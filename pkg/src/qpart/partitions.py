"""Canonical partition values and membership predicates for every class.

A partition is a weakly decreasing tuple of non-negative integers.  Zero
parts are meaningful only in the repeated-smallest-part family Dk, where
the smallest part may be 0 and is stored explicitly (k zeros); every other
class lives on strictly positive parts.

The C family is counted over *anchored* partitions: the same part multiset
can decompose around different even anchors (witness 4+2 with k=2, which is
an even-extras configuration anchored at 4 and an odd-extras configuration
anchored at 2), so an :class:`AnchoredPartition` carries the chosen anchor
alongside the multiset.  :func:`anchor_decompositions` lists every valid
anchor of a raw multiset for diagnostics.

Class identifiers
-----------------

==============  ==============================================================
A               distinct positive parts
B               all parts odd
C               anchored: even anchor 2l, no part above it, parts <= l distinct
Dk              smallest part exactly k times, all other parts distinct,
                non-negative parts (k explicit zeros when the smallest is 0)
Dk_e / Dk_o     Dk members with an even / odd number of parts above the
                smallest
Bk_e / Bk_o     all parts odd except an even / odd number of distinct even
                parts inside [2l+2, 2l+2k-2], with 2l-1 the largest odd part
Ck_e / Ck_o     anchored C with up to k-1 distinct even parts above the
                anchor inside [2l+2, 2l+2k-2], of even / odd count
E               all parts odd, largest part unique
F               largest part even and unique, all other parts odd
P1              distinct parts, smallest part >= 2
P2              distinct parts, gap >= 2 between the two smallest parts
                (single-part partitions qualify vacuously)
Pprime          distinct parts except the part 1 appears exactly k-1 times
                (k=1: distinct parts, none equal to 1)
Pdprime         distinct parts except the second smallest appears exactly
                k-1 times at distance 1 above the smallest (k=1: same as P2)
Pe_d / Po_d     distinct parts, even / odd number of parts
Pe_bounded /    distinct parts not exceeding k-1, even / odd number of parts
Po_bounded
SptKd           positive smallest part exactly k times, other parts distinct
==============  ==============================================================
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass


class PartitionError(ValueError):
    """Malformed partition input (ordering, sign, or representation kind)."""


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of non-negative integer parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        prev = None
        for p in self.parts:
            if p < 0:
                raise PartitionError(f"negative part {p}")
            if prev is not None and p > prev:
                raise PartitionError("parts must be weakly decreasing")
            prev = p

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        """Sort any iterable of parts into canonical descending order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "(empty)"
        return "+".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class AnchoredPartition:
    """A partition together with the even anchor part 2l that fixes its
    decomposition into core (parts <= 2l) and window extras (parts > 2l)."""

    anchor: int
    partition: Partition

    def __post_init__(self) -> None:
        if self.anchor <= 0 or self.anchor % 2:
            raise PartitionError(f"anchor must be a positive even part, got {self.anchor}")
        if self.anchor not in self.partition.parts:
            raise PartitionError(f"anchor {self.anchor} is not a part of {self.partition}")

    @property
    def weight(self) -> int:
        return self.partition.weight

    def to_json(self) -> dict:
        return {"anchor": self.anchor, "parts": self.partition.to_json()}

    def __str__(self) -> str:
        return f"[{self.anchor}] {self.partition}"


# class_id -> (requires k, counted over anchored partitions)
CLASS_INFO: dict[str, tuple[bool, bool]] = {
    "A": (False, False),
    "B": (False, False),
    "C": (False, True),
    "Dk": (True, False),
    "Dk_e": (True, False),
    "Dk_o": (True, False),
    "Bk_e": (True, False),
    "Bk_o": (True, False),
    "Ck_e": (True, True),
    "Ck_o": (True, True),
    "E": (False, False),
    "F": (False, False),
    "P1": (False, False),
    "P2": (False, False),
    "Pprime": (True, False),
    "Pdprime": (True, False),
    "Pe_d": (False, False),
    "Po_d": (False, False),
    "Pe_bounded": (True, False),
    "Po_bounded": (True, False),
    "SptKd": (True, False),
}


@dataclass(frozen=True)
class ClassSpec:
    """A partition class identifier plus its k parameter where required."""

    class_id: str
    k: int | None = None

    def __post_init__(self) -> None:
        if self.class_id not in CLASS_INFO:
            raise PartitionError(f"unknown class id {self.class_id!r}")
        requires_k, _ = CLASS_INFO[self.class_id]
        if requires_k:
            if self.k is None or self.k < 1:
                raise PartitionError(f"class {self.class_id} needs a positive k")
        elif self.k is not None:
            raise PartitionError(f"class {self.class_id} takes no k parameter")

    @property
    def anchored(self) -> bool:
        return CLASS_INFO[self.class_id][1]

    def __str__(self) -> str:
        return self.class_id if self.k is None else f"{self.class_id}(k={self.k})"


def smallest_part_profile(p: Partition) -> tuple[int, int, bool]:
    """(smallest part, its multiplicity, whether all larger parts are distinct)."""
    if not p.parts:
        raise PartitionError("empty partition has no smallest part")
    smallest = p.parts[-1]
    mult = 0
    for v in reversed(p.parts):
        if v != smallest:
            break
        mult += 1
    counts = Counter(p.parts[: len(p.parts) - mult])
    rest_distinct = all(c == 1 for c in counts.values())
    return smallest, mult, rest_distinct


# ---------------------------------------------------------------------------
# membership predicates
# ---------------------------------------------------------------------------

def _all_positive(p: Partition) -> bool:
    return not p.parts or p.parts[-1] >= 1


def _is_distinct(parts: tuple[int, ...]) -> bool:
    return all(parts[i] > parts[i + 1] for i in range(len(parts) - 1))


def _member_a(p: Partition) -> bool:
    return _all_positive(p) and _is_distinct(p.parts)


def _member_b(p: Partition) -> bool:
    # Counts partitions with at least one part; the empty partition is not
    # a B member even though the all-odd condition is vacuous on it.
    return bool(p.parts) and p.parts[-1] >= 1 and all(v % 2 for v in p.parts)


def _member_dk(p: Partition, k: int) -> bool:
    if not p.parts:
        return False
    smallest, mult, rest_distinct = smallest_part_profile(p)
    del smallest
    return mult == k and rest_distinct


def _parts_above_smallest(p: Partition, k: int) -> int:
    return len(p.parts) - k


def _member_dk_parity(p: Partition, k: int, want_even: bool) -> bool:
    if not _member_dk(p, k):
        return False
    return (_parts_above_smallest(p, k) % 2 == 0) == want_even


def _member_sptkd(p: Partition, k: int) -> bool:
    return _member_dk(p, k) and p.parts[-1] >= 1


def _window(l: int, k: int) -> tuple[int, int]:
    return 2 * l + 2, 2 * l + 2 * k - 2


def _member_bk(p: Partition, k: int, want_even: bool) -> bool:
    if not p.parts or p.parts[-1] < 1:
        return False
    odds = [v for v in p.parts if v % 2]
    evens = [v for v in p.parts if v % 2 == 0]
    if not odds:
        return False
    l = (max(odds) + 1) // 2
    lo, hi = _window(l, k)
    if len(evens) > k - 1 or len(set(evens)) != len(evens):
        return False
    if any(not lo <= v <= hi for v in evens):
        return False
    return (len(evens) % 2 == 0) == want_even


def _anchored_ok(ap: AnchoredPartition, k: int) -> tuple[bool, int]:
    """Validity of one anchored decomposition; returns (ok, extras count)."""
    parts = ap.partition.parts
    if parts and parts[-1] < 1:
        return False, 0
    l = ap.anchor // 2
    lo, hi = _window(l, k)
    extras = [v for v in parts if v > ap.anchor]
    if len(extras) > k - 1 or len(set(extras)) != len(extras):
        return False, 0
    if any(v % 2 or not lo <= v <= hi for v in extras):
        return False, 0
    small = [v for v in parts if v <= l]
    if len(set(small)) != len(small):
        return False, 0
    return True, len(extras)


def _member_ck(ap: AnchoredPartition, k: int, want_even: bool) -> bool:
    ok, extras = _anchored_ok(ap, k)
    return ok and (extras % 2 == 0) == want_even


def _member_e(p: Partition) -> bool:
    if not p.parts or p.parts[-1] < 1:
        return False
    if any(v % 2 == 0 for v in p.parts):
        return False
    return len(p.parts) == 1 or p.parts[0] > p.parts[1]


def _member_f(p: Partition) -> bool:
    if not p.parts or p.parts[-1] < 1:
        return False
    if p.parts[0] % 2:
        return False
    if len(p.parts) > 1 and p.parts[1] == p.parts[0]:
        return False
    return all(v % 2 for v in p.parts[1:])


def _member_p1(p: Partition) -> bool:
    return bool(p.parts) and _is_distinct(p.parts) and p.parts[-1] >= 2


def _member_p2(p: Partition) -> bool:
    if not p.parts or p.parts[-1] < 1 or not _is_distinct(p.parts):
        return False
    return len(p.parts) == 1 or p.parts[-2] - p.parts[-1] >= 2


def _member_pprime(p: Partition, k: int) -> bool:
    if k == 1:
        # Degenerate case: distinct parts, none equal to 1.
        return _is_distinct(p.parts) and (not p.parts or p.parts[-1] >= 2)
    ones = sum(1 for v in p.parts if v == 1)
    if ones != k - 1 or not p.parts or p.parts[-1] < 1:
        return False
    rest = tuple(v for v in p.parts if v > 1)
    return _is_distinct(rest)


def _member_pdprime(p: Partition, k: int) -> bool:
    if k == 1:
        return _member_p2(p)
    if len(p.parts) < k or p.parts[-1] < 1:
        return False
    s = p.parts[-1]
    if p.parts.count(s) != 1 or p.parts.count(s + 1) != k - 1:
        return False
    rest = tuple(v for v in p.parts if v > s + 1)
    return _is_distinct(rest) and len(rest) + k == len(p.parts)


def _member_pe_po(p: Partition, want_even: bool) -> bool:
    if not _member_a(p):
        return False
    return (len(p.parts) % 2 == 0) == want_even


def _member_p_bounded(p: Partition, k: int, want_even: bool) -> bool:
    if not _member_a(p):
        return False
    if p.parts and p.parts[0] > k - 1:
        return False
    return (len(p.parts) % 2 == 0) == want_even


def is_member(spec: ClassSpec, p: Partition | AnchoredPartition) -> bool:
    """Decide membership of a canonical value in the given class.

    C-family classes take an :class:`AnchoredPartition`; every other class
    takes a plain :class:`Partition`.  Supplying the wrong representation
    raises :class:`PartitionError`.
    """
    if spec.anchored:
        if not isinstance(p, AnchoredPartition):
            raise PartitionError(f"class {spec} is counted over anchored partitions")
    elif isinstance(p, AnchoredPartition):
        raise PartitionError(f"class {spec} takes a plain partition, not an anchored one")

    cid, k = spec.class_id, spec.k
    if cid == "A":
        return _member_a(p)
    if cid == "B":
        return _member_b(p)
    if cid == "C":
        return _member_ck(p, 1, True)
    if cid == "Dk":
        return _member_dk(p, k)
    if cid == "Dk_e":
        return _member_dk_parity(p, k, True)
    if cid == "Dk_o":
        return _member_dk_parity(p, k, False)
    if cid == "Bk_e":
        return _member_bk(p, k, True)
    if cid == "Bk_o":
        return _member_bk(p, k, False)
    if cid == "Ck_e":
        return _member_ck(p, k, True)
    if cid == "Ck_o":
        return _member_ck(p, k, False)
    if cid == "E":
        return _member_e(p)
    if cid == "F":
        return _member_f(p)
    if cid == "P1":
        return _member_p1(p)
    if cid == "P2":
        return _member_p2(p)
    if cid == "Pprime":
        return _member_pprime(p, k)
    if cid == "Pdprime":
        return _member_pdprime(p, k)
    if cid == "Pe_d":
        return _member_pe_po(p, True)
    if cid == "Po_d":
        return _member_pe_po(p, False)
    if cid == "Pe_bounded":
        return _member_p_bounded(p, k, True)
    if cid == "Po_bounded":
        return _member_p_bounded(p, k, False)
    if cid == "SptKd":
        return _member_sptkd(p, k)
    raise PartitionError(f"unhandled class id {cid!r}")


def anchor_decompositions(k: int, p: Partition) -> list[AnchoredPartition]:
    """Every valid anchor of a raw multiset for the C family at parameter k.

    An anchor 2l qualifies when all parts above 2l are distinct even window
    extras in [2l+2, 2l+2k-2] (at most k-1 of them) and all parts <= l are
    distinct.  The list is empty when no anchor works; more than one entry
    is exactly the raw-counting ambiguity the anchored representation
    resolves.
    """
    if k < 1:
        raise PartitionError("k must be positive")
    out = []
    for anchor in sorted({v for v in p.parts if v % 2 == 0 and v > 0}):
        ap = AnchoredPartition(anchor, p)
        ok, _ = _anchored_ok(ap, k)
        if ok:
            out.append(ap)
    return out
