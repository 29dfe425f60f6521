"""Sets of boolean vectors, their composition, and the map from multitildes.

A boolean vector of length ``n`` is packed into an ``int`` whose most
significant of ``n`` bits is position 1.  With that packing the integer order
coincides with the lexicographic order of the vectors (``0 < 1``), so a
sorted tuple of ints is the canonical form of a vector set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .errors import CompositionIndexError, InputError
from .tilde import Multitilde, Pair


def pack(bits: Sequence[int]) -> int:
    value = 0
    for b in bits:
        value = (value << 1) | (1 if b else 0)
    return value


def unpack(value: int, n: int) -> Tuple[int, ...]:
    return tuple((value >> (n - 1 - i)) & 1 for i in range(n))


def interval_mask(x: int, y: int, n: int) -> int:
    """Packed vector with ones exactly on positions ``x..y``."""
    return ((1 << (y - x + 1)) - 1) << (n - y)


@dataclass(frozen=True)
class BoolVectorSet:
    """A set of length-``arity`` boolean vectors, stored packed and sorted."""

    arity: int
    masks: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.arity < 1:
            raise InputError(f"arity must be >= 1, got {self.arity}", "arity")
        limit = 1 << self.arity
        for m in self.masks:
            if not 0 <= m < limit:
                raise InputError(f"vector {m} does not fit arity {self.arity}", "vectors")
        object.__setattr__(self, "masks", tuple(sorted(set(self.masks))))

    @classmethod
    def from_vectors(cls, arity: int, vectors: Iterable[Sequence[int]]) -> "BoolVectorSet":
        masks = []
        for v in vectors:
            if len(v) != arity:
                raise InputError(f"vector {list(v)} has length {len(v)}, expected {arity}", "vectors")
            if any(b not in (0, 1, True, False) for b in v):
                raise InputError(f"vector {list(v)} has non-boolean entries", "vectors")
            masks.append(pack(v))
        return cls(arity, tuple(masks))

    @property
    def vectors(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(unpack(m, self.arity) for m in self.masks)

    def __contains__(self, vector) -> bool:
        return len(vector) == self.arity and pack(vector) in self.masks

    def __len__(self) -> int:
        return len(self.masks)

    def to_json(self) -> dict:
        return {"arity": self.arity, "vectors": [list(v) for v in self.vectors]}

    @classmethod
    def from_json(cls, obj) -> "BoolVectorSet":
        if not isinstance(obj, dict) or "arity" not in obj:
            raise InputError("vector set must be an object with 'arity'", "arity")
        vectors = obj.get("vectors", [])
        if not isinstance(vectors, list) or not all(isinstance(v, list) for v in vectors):
            raise InputError("'vectors' must be a list of lists", "vectors")
        return cls.from_vectors(obj["arity"], vectors)


def unit() -> BoolVectorSet:
    """The identity ``{[1]}``."""
    return BoolVectorSet(1, (1,))


def free_subsets(t: Multitilde) -> List[Tuple[Pair, ...]]:
    """All subsets of ``t.pairs`` whose intervals are pairwise disjoint.

    Backtracks over pairs sorted by left end.  A chosen subset listed in that
    order is free iff every interval starts after the previous one ends, so
    only the last right end has to be remembered.  The empty subset comes
    first.
    """
    pairs = sorted(t.pairs)
    out: List[Tuple[Pair, ...]] = []
    chosen: List[Pair] = []

    def extend(start: int, last_end: int) -> None:
        out.append(tuple(chosen))
        for i in range(start, len(pairs)):
            x, y = pairs[i]
            if x > last_end:
                chosen.append(pairs[i])
                extend(i + 1, y)
                chosen.pop()

    extend(0, 0)
    return out


def subset_vector(subset: Iterable[Pair], n: int) -> int:
    """Packed vector with 0 on every position covered by ``subset``."""
    covered = 0
    for x, y in subset:
        covered |= interval_mask(x, y, n)
    return ((1 << n) - 1) & ~covered


def vectorize(t: Multitilde) -> BoolVectorSet:
    """Boolean vectors of the free subsets of ``t``."""
    n = t.arity
    full = (1 << n) - 1
    pairs = sorted(t.pairs)
    masks = [interval_mask(x, y, n) for x, y in pairs]
    seen = set()

    # Same walk as free_subsets, carrying only the covered mask.
    def extend(start: int, last_end: int, covered: int) -> None:
        seen.add(full & ~covered)
        for i in range(start, len(pairs)):
            x, y = pairs[i]
            if x > last_end:
                extend(i + 1, y, covered | masks[i])

    extend(0, 0, 0)
    return BoolVectorSet(n, tuple(seen))


def bool_compose_partial(e: BoolVectorSet, k: int, f: BoolVectorSet) -> BoolVectorSet:
    """Replace position ``k`` of every ``e`` vector by ``e_k AND f``."""
    m, n = e.arity, f.arity
    if not 1 <= k <= m:
        raise CompositionIndexError(f"slot {k} outside 1..{m}")
    tail_width = m - k
    tail_mask = (1 << tail_width) - 1
    out = set()
    for ev in e.masks:
        head = ev >> (tail_width + 1)
        tail = ev & tail_mask
        ek = (ev >> tail_width) & 1
        base = (head << (n + tail_width)) | tail
        if ek:
            for fv in f.masks:
                out.add(base | (fv << tail_width))
        elif f.masks:
            out.add(base)
    return BoolVectorSet(m + n - 1, tuple(out))
