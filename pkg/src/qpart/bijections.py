"""Executable, invertible maps between the partition classes.

Every map ships with its inverse; round-trip identity and target-class
membership are both machine-checked by the test suite over exhaustive
weight ranges.  Outcomes carry a case-tag chain recording which branch of
the case analysis fired, which is what makes the piecewise inverses
well-defined (several branches can produce the same raw multiset in
different target classes).

The base map between all-odd partitions of n and anchored even-largest
partitions of n+1 comes in two strategies:

``rank``
    Pair the i-th member of each side in canonical order.  Partitions with
    largest odd part 2l-1 are paired with partitions anchored at 2l; the
    per-anchor counts agree (both sides reduce to the same odd-part product
    per anchor), so the pairing is total and, crucially, anchor-compatible,
    which the windowed recursion below relies on when re-attaching stripped
    window parts.  Default.

``aky-sketch``
    The sketched construction: add 1 to the largest odd part to create the
    anchor, then binary-merge the remaining odd multiplicities.  The merge
    can overshoot the anchor (1+1+...+1 of weight 8 produces a part 4 above
    anchor 2), so this strategy is run under a harness that records
    membership failures instead of asserting success.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .counting import _c_core, _odd_multiset
from .partitions import (
    AnchoredPartition,
    ClassSpec,
    Partition,
    is_member,
)

RANK = "rank"
AKY_SKETCH = "aky-sketch"
STRATEGIES = (RANK, AKY_SKETCH)


class BijectionError(ValueError):
    """Input outside a map's domain, or an image outside its target class."""


class SketchMembershipError(BijectionError):
    """The sketched base map produced a multiset outside the target class."""

    def __init__(self, source: Partition, candidate: AnchoredPartition):
        super().__init__(
            f"sketch image {candidate} of {source} is not an anchored member"
        )
        self.source = source
        self.candidate = candidate


@dataclass(frozen=True)
class BijectionOutcome:
    """Image of one map application plus its target class and case trace."""

    image: Partition | AnchoredPartition
    target_class: ClassSpec
    case_tag: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "image": self.image.to_json(),
            "target_class": str(self.target_class),
            "case_tag": list(self.case_tag),
        }


def _sorted_parts(parts) -> tuple[int, ...]:
    return tuple(sorted(parts, reverse=True))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise BijectionError(message)


# ---------------------------------------------------------------------------
# binary merge/split between odd-part and distinct-part partitions
# ---------------------------------------------------------------------------


def glaisher_merge(p: Partition) -> Partition:
    """Odd parts to distinct parts: an odd value a of multiplicity
    f = sum 2^e_i (binary digits) becomes the parts a * 2^e_i."""
    _require(all(v % 2 for v in p.parts), "merge needs all parts odd")
    out = []
    for a in set(p.parts):
        f = p.parts.count(a)
        e = 0
        while f:
            if f & 1:
                out.append(a << e)
            f >>= 1
            e += 1
    return Partition(_sorted_parts(out))


def glaisher_split(p: Partition) -> Partition:
    """Distinct parts back to odd parts: m = 2^e * a (a odd) becomes 2^e
    copies of a.  Defined on any all-positive partition."""
    _require(bool(p.parts) is not None and all(v >= 1 for v in p.parts),
             "split needs positive parts")
    out = []
    for m in p.parts:
        a = m
        copies = 1
        while a % 2 == 0:
            a //= 2
            copies *= 2
        out.extend([a] * copies)
    return Partition(_sorted_parts(out))


# ---------------------------------------------------------------------------
# repeated-smallest-part family onto the four distinct-part classes
# ---------------------------------------------------------------------------


def akdk_map(k: int, p: Partition) -> BijectionOutcome:
    """Subtract 1 from the smallest part of a Dk member of weight n >= 2.

    The four-way case split (smallest zero or repeated, equal to 1 or not)
    lands in exactly one of P2, P1, Pdprime, Pprime at weight n-1.
    """
    _require(is_member(ClassSpec("Dk", k), p), f"{p} is not a Dk member (k={k})")
    _require(p.weight >= 2, "map defined for weight >= 2")
    parts = p.parts
    if parts[-1] == 0:
        positives = parts[:-k]
        t = positives[-1]
        if t > 1:
            image = Partition(positives[:-1] + (t - 1,))
            target, tag = ClassSpec("P2"), "distinct,smallest>1"
        else:
            image = Partition(positives[:-1])
            target, tag = ClassSpec("P1"), "distinct,smallest=1"
    else:
        s = parts[-1]
        if s > 1:
            image = Partition(parts[:-1] + (s - 1,))
            target, tag = ClassSpec("Pdprime", k), "repeated,smallest>1"
        else:
            image = Partition(parts[:-1])
            target, tag = ClassSpec("Pprime", k), "repeated,smallest=1"
    _require(is_member(target, image), f"image {image} is not in {target}")
    return BijectionOutcome(image, target, (tag,))


def akdk_inverse(k: int, outcome: BijectionOutcome) -> Partition:
    """Add 1 back to the appropriate part and restore the Dk form."""
    image = outcome.image
    _require(isinstance(image, Partition), "akdk images are plain partitions")
    cid = outcome.target_class.class_id
    parts = image.parts
    if cid == "P2":
        result = Partition(_sorted_parts(parts[:-1] + (parts[-1] + 1,) + (0,) * k))
    elif cid == "P1":
        result = Partition(parts + (1,) + (0,) * k)
    elif cid == "Pdprime":
        result = Partition(_sorted_parts(parts[:-1] + (parts[-1] + 1,)))
    elif cid == "Pprime":
        result = Partition(_sorted_parts(parts + (1,)))
    else:
        raise BijectionError(f"unexpected target class {outcome.target_class}")
    _require(is_member(ClassSpec("Dk", k), result),
             f"inverse image {result} is not a Dk member")
    return result


# ---------------------------------------------------------------------------
# Dk + Dk-1 recurrence map
# ---------------------------------------------------------------------------

SOURCE_DK = "Dk"
SOURCE_DK_MINUS_1 = "Dk-1"


def dk_recurrence_map(k: int, p: Partition, source: str) -> BijectionOutcome:
    """Subtract 1 from each of the k-1 smallest parts.

    Input is a Dk(n) or Dk-1(n) member (tagged by `source`); zero-smallest
    inputs instead drop their zeros and land in one of two copies of the
    distinct-parts class at weight n.  The other images fill four disjoint
    sub-ranges of Dk-1(n-k+1) distinguished by the smallest part and the
    gap above it.
    """
    _require(k >= 2, "recurrence needs k >= 2")
    _require(source in (SOURCE_DK, SOURCE_DK_MINUS_1), f"unknown source tag {source!r}")
    mult = k if source == SOURCE_DK else k - 1
    _require(is_member(ClassSpec("Dk", mult), p),
             f"{p} is not a D-member with smallest multiplicity {mult}")
    _require(p.weight > k - 1, "weight must exceed k-1")
    parts = p.parts
    if parts[-1] == 0:
        image = Partition(parts[:-mult])
        tag = f"zeros,{source}"
        out = BijectionOutcome(image, ClassSpec("A"), (tag,))
        _require(is_member(ClassSpec("A"), image), f"{image} not distinct")
        return out
    s = parts[-1]
    image = Partition(parts[: len(parts) - (k - 1)] + (s - 1,) * (k - 1))
    tag = f"shift,{source},{'smallest=1' if s == 1 else 'smallest>1'}"
    target = ClassSpec("Dk", k - 1)
    _require(is_member(target, image), f"image {image} is not in {target}")
    return BijectionOutcome(image, target, (tag,))


def dk_recurrence_subrange(k: int, image: Partition) -> str:
    """Which of the four Dk-1 sub-ranges a shifted image belongs to.

    a: smallest 0, smallest positive part 1        (from Dk, s=1)
    b: smallest s>=1 with a part s+1 present       (from Dk, s>1)
    c: smallest 0, smallest positive part > 1      (from Dk-1, s=1)
    d: smallest s>=1, no part s+1                  (from Dk-1, s>1)
    """
    parts = image.parts
    s = parts[-1]
    if s == 0:
        positives = [v for v in parts if v > 0]
        _require(bool(positives), "zero-weight image has no sub-range")
        return "a" if positives[-1] == 1 else "c"
    return "b" if s + 1 in parts else "d"


def dk_recurrence_inverse(k: int, outcome: BijectionOutcome) -> tuple[Partition, str]:
    """Recover (source partition, source tag) from a tagged image."""
    image = outcome.image
    _require(isinstance(image, Partition), "recurrence images are plain partitions")
    if outcome.target_class.class_id == "A":
        source = SOURCE_DK if outcome.case_tag[0].endswith(SOURCE_DK) else SOURCE_DK_MINUS_1
        zeros = k if source == SOURCE_DK else k - 1
        return Partition(image.parts + (0,) * zeros), source
    sub = dk_recurrence_subrange(k, image)
    parts = image.parts
    s = parts[-1]
    raised = _sorted_parts(parts[: len(parts) - (k - 1)] + (s + 1,) * (k - 1))
    source = SOURCE_DK if sub in ("a", "b") else SOURCE_DK_MINUS_1
    return Partition(raised), source


# ---------------------------------------------------------------------------
# base map: all-odd partitions of n to anchored partitions of n+1
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _odd_block(l: int, weight: int) -> tuple[tuple[int, ...], ...]:
    """All-odd partitions of `weight` whose largest part is exactly 2l-1,
    in canonical (lexicographic) order."""
    base = 2 * l - 1
    if weight < base:
        return ()
    members = [_sorted_parts((base,) + fill) for fill in _odd_multiset(weight - base, base)]
    return tuple(sorted(members))


@lru_cache(maxsize=None)
def _anchored_block(l: int, weight: int) -> tuple[tuple[int, ...], ...]:
    """Extras-free anchored partitions of `weight` with anchor 2l, in
    canonical (lexicographic) order."""
    anchor = 2 * l
    if weight < anchor:
        return ()
    members = [_sorted_parts((anchor,) + core) for core in _c_core(weight - anchor, anchor, l)]
    return tuple(sorted(members))


def _largest_odd_half(p: Partition) -> int:
    odds = [v for v in p.parts if v % 2]
    _require(bool(odds), f"{p} has no odd part")
    return (max(odds) + 1) // 2


def base_bc_map(p: Partition, strategy: str = RANK) -> AnchoredPartition:
    """Map an all-odd partition of n to an anchored partition of n+1."""
    _require(is_member(ClassSpec("B"), p), f"{p} is not an all-odd partition")
    l = _largest_odd_half(p)
    if strategy == RANK:
        b_block = _odd_block(l, p.weight)
        c_block = _anchored_block(l, p.weight + 1)
        _require(len(b_block) == len(c_block),
                 f"block size mismatch at l={l}, weight={p.weight}")
        idx = b_block.index(p.parts)
        return AnchoredPartition(2 * l, Partition(c_block[idx]))
    if strategy == AKY_SKETCH:
        rest = list(p.parts)
        rest.remove(2 * l - 1)
        merged = glaisher_merge(Partition(_sorted_parts(rest)))
        candidate = AnchoredPartition(
            2 * l, Partition(_sorted_parts(merged.parts + (2 * l,))))
        if not is_member(ClassSpec("C"), candidate):
            raise SketchMembershipError(p, candidate)
        return candidate
    raise BijectionError(f"unknown strategy {strategy!r}")


def base_bc_inverse(ap: AnchoredPartition, strategy: str = RANK) -> Partition:
    """Map an anchored partition of n+1 back to an all-odd partition of n."""
    _require(is_member(ClassSpec("C"), ap), f"{ap} is not an anchored member")
    l = ap.anchor // 2
    if strategy == RANK:
        c_block = _anchored_block(l, ap.weight)
        b_block = _odd_block(l, ap.weight - 1)
        _require(len(b_block) == len(c_block),
                 f"block size mismatch at l={l}, weight={ap.weight - 1}")
        idx = c_block.index(ap.partition.parts)
        return Partition(b_block[idx])
    if strategy == AKY_SKETCH:
        rest = list(ap.partition.parts)
        rest.remove(ap.anchor)
        split = glaisher_split(Partition(_sorted_parts(rest))) if rest else Partition(())
        result = Partition(_sorted_parts(split.parts + (ap.anchor - 1,)))
        _require(is_member(ClassSpec("B"), result),
                 f"sketch inverse image {result} is not all-odd")
        return result
    raise BijectionError(f"unknown strategy {strategy!r}")


@dataclass(frozen=True)
class SketchReport:
    """Outcome of running the sketched base map over one weight class."""

    weight: int
    attempted: int
    succeeded: int
    failures: tuple[tuple[Partition, AnchoredPartition], ...]

    @property
    def all_ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "weight": self.weight,
            "attempted": self.attempted,
            "succeeded": self.succeeded,
            "failures": [
                {"source": src.to_json(), "candidate": cand.to_json()}
                for src, cand in self.failures
            ],
        }


def sketch_harness(n: int) -> SketchReport:
    """Run the sketched base map over every all-odd partition of n, flagging
    membership failures instead of raising."""
    from .counting import enumerate_class

    attempted = succeeded = 0
    failures = []
    for p in enumerate_class(ClassSpec("B"), n):
        attempted += 1
        try:
            image = base_bc_map(p, AKY_SKETCH)
        except SketchMembershipError as err:
            failures.append((p, err.candidate))
            continue
        succeeded += 1
        roundtrip = base_bc_inverse(image, AKY_SKETCH)
        if roundtrip != p:
            failures.append((p, image))
    return SketchReport(n, attempted, succeeded, tuple(failures))


# ---------------------------------------------------------------------------
# windowed families: strip the largest window part and recurse
# ---------------------------------------------------------------------------


def _parity_flip(parity: str) -> str:
    return "o" if parity == "e" else "e"


def _remove_one(parts: tuple[int, ...], value: int) -> tuple[int, ...]:
    out = list(parts)
    out.remove(value)
    return tuple(out)


def bkck_map(k: int, parity: str, p: Partition,
             strategy: str = RANK) -> BijectionOutcome:
    """Windowed family map, odd side of weight n to anchored side of n+1.

    Strips the largest window part m, recurses one window level down with
    flipped parity, and re-attaches m; with no window parts it is exactly
    the base map.
    """
    _require(parity in ("e", "o"), "parity must be 'e' or 'o'")
    spec = ClassSpec(f"Bk_{parity}", k)
    _require(is_member(spec, p), f"{p} is not a member of {spec}")
    evens = [v for v in p.parts if v % 2 == 0]
    if not evens:
        image = base_bc_map(p, strategy)
        outcome = BijectionOutcome(image, ClassSpec(f"Ck_{parity}", k),
                                   (f"base[{strategy}]:anchor={image.anchor}",))
    else:
        m = max(evens)
        stripped = Partition(_remove_one(p.parts, m))
        sub = bkck_map(k - 1, _parity_flip(parity), stripped, strategy)
        lifted = AnchoredPartition(
            sub.image.anchor,
            Partition(_sorted_parts(sub.image.partition.parts + (m,))))
        outcome = BijectionOutcome(lifted, ClassSpec(f"Ck_{parity}", k),
                                   (f"strip:{m}",) + sub.case_tag)
    _require(is_member(outcome.target_class, outcome.image),
             f"image {outcome.image} is not in {outcome.target_class}")
    return outcome


def bkck_inverse(k: int, parity: str, ap: AnchoredPartition,
                 strategy: str = RANK) -> BijectionOutcome:
    """Inverse direction: anchored side of weight n+1 to odd side of n."""
    _require(parity in ("e", "o"), "parity must be 'e' or 'o'")
    spec = ClassSpec(f"Ck_{parity}", k)
    _require(is_member(spec, ap), f"{ap} is not a member of {spec}")
    extras = [v for v in ap.partition.parts if v > ap.anchor]
    if not extras:
        image = base_bc_inverse(ap, strategy)
        outcome = BijectionOutcome(image, ClassSpec(f"Bk_{parity}", k),
                                   (f"base[{strategy}]:anchor={ap.anchor}",))
    else:
        m = max(extras)
        stripped = AnchoredPartition(ap.anchor,
                                     Partition(_remove_one(ap.partition.parts, m)))
        sub = bkck_inverse(k - 1, _parity_flip(parity), stripped, strategy)
        lifted = Partition(_sorted_parts(sub.image.parts + (m,)))
        outcome = BijectionOutcome(lifted, ClassSpec(f"Bk_{parity}", k),
                                   (f"strip:{m}",) + sub.case_tag)
    _require(is_member(outcome.target_class, outcome.image),
             f"image {outcome.image} is not in {outcome.target_class}")
    return outcome


# ---------------------------------------------------------------------------
# largest-part shifts between the odd-parts class and E / F
# ---------------------------------------------------------------------------

_EF_DIRECTIONS = ("B->F", "F->B", "B->E", "E->B")


def ef_shift(direction: str, p: Partition) -> Partition:
    """Add or remove 1 (F directions) or 2 (E directions) on the largest
    part, moving between the all-odd class and the unique-largest classes."""
    _require(direction in _EF_DIRECTIONS,
             f"direction must be one of {_EF_DIRECTIONS}")
    parts = p.parts
    if direction == "B->F":
        _require(is_member(ClassSpec("B"), p), f"{p} is not all-odd")
        return Partition((parts[0] + 1,) + parts[1:])
    if direction == "F->B":
        _require(is_member(ClassSpec("F"), p), f"{p} has no unique even largest part")
        return Partition((parts[0] - 1,) + parts[1:])
    if direction == "B->E":
        _require(is_member(ClassSpec("B"), p), f"{p} is not all-odd")
        return Partition((parts[0] + 2,) + parts[1:])
    _require(is_member(ClassSpec("E"), p), f"{p} is not odd with unique largest part")
    _require(parts[0] >= 3, "largest part must be at least 3 to shift down")
    return Partition((parts[0] - 2,) + parts[1:])
