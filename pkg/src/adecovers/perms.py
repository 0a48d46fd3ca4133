"""Permutations of {1..d} and the group-theoretic primitives used everywhere else.

Conventions, fixed globally:

- permutations store their 1-based image tuple: ``images[x-1]`` is the image of x;
- composition is LEFT-TO-RIGHT: ``compose(p, q)`` applies p first, then q,
  and ``p * q`` means the same thing;
- conjugation relabels points: ``p`` conjugated by ``g`` sends g(x) to g(p(x)).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

from .errors import (
    BlocksNotPreserved,
    DegreeMismatch,
    DegreeTooLargeForCanonicalization,
    GroupTooLarge,
    NotSemiregular,
)

CANONICAL_DEGREE_CAP = 8
GROUP_CLOSURE_CAP = 10**6


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..d}, stored as the tuple of 1-based images.

    >>> p = Permutation((2, 1, 3))       # the transposition (1 2)
    >>> p.apply(1), p.apply(3)
    (2, 3)
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        d = len(images)
        if d < 1:
            raise ValueError("degree must be at least 1")
        if sorted(images) != list(range(1, d + 1)):
            raise ValueError(f"not a bijection of 1..{d}: {images!r}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(tuple(range(1, degree + 1)))

    @staticmethod
    def from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build a permutation from disjoint cycles given in 1-based points.

        >>> Permutation.from_cycles(3, [(1, 2, 3)]).images
        (2, 3, 1)
        """
        out = list(range(1, degree + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= degree:
                    raise ValueError(f"point {x} outside 1..{degree}")
                if x in seen:
                    raise ValueError(f"point {x} repeated across cycles")
                seen.add(x)
            for i, x in enumerate(cyc):
                out[x - 1] = cyc[(i + 1) % len(cyc)]
        return Permutation(tuple(out))

    def apply(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        return Permutation(_inverse_t(self.images))

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def cycles(self, include_fixed: bool = False) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles, each starting at its minimum, ordered by minimum."""
        out = []
        seen = [False] * self.degree
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = []
            x = start
            while not seen[x - 1]:
                seen[x - 1] = True
                cyc.append(x)
                x = self.images[x - 1]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return tuple(out)

    def to_json(self) -> list[int]:
        return list(self.images)

    @staticmethod
    def from_json(data) -> "Permutation":
        if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
            raise ValueError("permutation JSON must be a list of integers")
        return Permutation(tuple(data))


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths of a permutation, fixed points included."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted(self.parts, reverse=True))
        object.__setattr__(self, "parts", parts)
        if not parts or any(p < 1 for p in parts):
            raise ValueError(f"cycle-type parts must be positive: {parts!r}")

    @property
    def count(self) -> int:
        return len(self.parts)

    @property
    def degree(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class BlockSystem:
    """A partition of {1..d} into equal-size blocks, ordered by minimal element."""

    degree: int
    blocks: tuple[tuple[int, ...], ...]
    block_size: int

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        blocks = tuple(sorted(blocks, key=lambda b: b[0]))
        object.__setattr__(self, "blocks", blocks)
        covered = [x for b in blocks for x in b]
        if sorted(covered) != list(range(1, self.degree + 1)):
            raise ValueError("blocks do not partition 1..degree")
        if any(len(b) != self.block_size for b in blocks):
            raise ValueError("blocks are not all of the stated size")

    @property
    def block_count(self) -> int:
        return len(self.blocks)


# -- raw tuple helpers (shared with the homomorphism search engine) --

def _identity_t(d: int) -> tuple[int, ...]:
    return tuple(range(1, d + 1))


def _compose_t(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # left-to-right: x -> q(p(x))
    return tuple(q[v - 1] for v in p)


def _inverse_t(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def _conj_t(p: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for x in range(len(p)):
        out[g[x] - 1] = g[p[x] - 1]
    return tuple(out)


@lru_cache(maxsize=None)
def _symmetric_elements(d: int) -> tuple[tuple[int, ...], ...]:
    """All elements of the degree-d symmetric group in lexicographic order."""
    return tuple(itertools.permutations(range(1, d + 1)))


@lru_cache(maxsize=100_000)
def _min_conjugate(d: int, p: tuple[int, ...]):
    """Lexicographically minimal conjugate of p and all conjugators realizing it."""
    best = None
    argmin: list[tuple[int, ...]] = []
    for g in _symmetric_elements(d):
        c = _conj_t(p, g)
        if best is None or c < best:
            best = c
            argmin = [g]
        elif c == best:
            argmin.append(g)
    return best, tuple(argmin)


def _canonical_raw(ts: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Canonical form of a tuple of image tuples under simultaneous conjugation.

    The minimum is taken lexicographically; the first component therefore ends
    up at its class-minimal form, and only conjugators realizing that minimum
    need to be scanned for the remaining components.
    """
    d = len(ts[0])
    m1, conjugators = _min_conjugate(d, ts[0])
    if len(ts) == 1:
        return (m1,)
    best = None
    for g in conjugators:
        cand = tuple(_conj_t(p, g) for p in ts[1:])
        if best is None or cand < best:
            best = cand
    return (m1, *best)


def _shared_degree(ps: Sequence[Permutation]) -> int:
    d = ps[0].degree
    for p in ps[1:]:
        if p.degree != d:
            raise DegreeMismatch(f"degrees differ: {d} vs {p.degree}")
    return d


# -- operations --

def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: the result sends x to q(p(x)).

    >>> compose(Permutation((2, 1, 3)), Permutation((3, 2, 1))).images
    (2, 3, 1)
    """
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees differ: {p.degree} vs {q.degree}")
    return Permutation(_compose_t(p.images, q.images))


def cycle_type(p: Permutation) -> CycleType:
    return CycleType(tuple(len(c) for c in p.cycles(include_fixed=True)))


def orbits(gens: Sequence[Permutation], degree: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Orbit partition of <gens> acting on {1..d}, ordered by minimal element."""
    gens = list(gens)
    if gens:
        d = _shared_degree(gens)
        if degree is not None and degree != d:
            raise DegreeMismatch(f"stated degree {degree} != generator degree {d}")
    elif degree is None:
        raise ValueError("degree is required for an empty generating set")
    else:
        d = degree
    out = []
    seen = [False] * d
    for start in range(1, d + 1):
        if seen[start - 1]:
            continue
        orbit = {start}
        frontier = [start]
        seen[start - 1] = True
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = g.images[x - 1]
                if not seen[y - 1]:
                    seen[y - 1] = True
                    orbit.add(y)
                    frontier.append(y)
        out.append(tuple(sorted(orbit)))
    return tuple(out)


def is_transitive(gens: Sequence[Permutation], degree: int | None = None) -> bool:
    return len(orbits(gens, degree=degree)) == 1


def group_elements(
    gens: Sequence[Permutation],
    cap: int = GROUP_CLOSURE_CAP,
    degree: int | None = None,
) -> frozenset[Permutation]:
    """Breadth-first closure of <gens> under composition (naive, capped).

    All target groups here have order at most a few thousand, so no
    stabilizer-chain machinery is used.
    """
    gens = list(gens)
    if gens:
        d = _shared_degree(gens)
    elif degree is None:
        raise ValueError("degree is required for an empty generating set")
    else:
        d = degree
    idt = _identity_t(d)
    raw_gens = [g.images for g in gens]
    els = {idt}
    frontier = [idt]
    while frontier:
        new = []
        for a in frontier:
            for g in raw_gens:
                c = _compose_t(a, g)
                if c not in els:
                    els.add(c)
                    if len(els) > cap:
                        raise GroupTooLarge(f"closure exceeded cap {cap}")
                    new.append(c)
        frontier = new
    return frozenset(Permutation(t) for t in els)


def is_central(z: Permutation, gens: Sequence[Permutation]) -> bool:
    """True iff z commutes with every generator (hence with the whole group)."""
    for g in gens:
        if z.degree != g.degree:
            raise DegreeMismatch(f"degrees differ: {z.degree} vs {g.degree}")
        if _compose_t(z.images, g.images) != _compose_t(g.images, z.images):
            return False
    return True


def is_semiregular(z: Permutation) -> bool:
    """True iff all cycles of z (fixed points included) have one common length."""
    lengths = {len(c) for c in z.cycles(include_fixed=True)}
    return len(lengths) == 1


def blocks_from_central(z: Permutation) -> BlockSystem:
    """The <z>-orbit block system of a semiregular permutation."""
    if not is_semiregular(z):
        raise NotSemiregular(f"cycle lengths of {z.images!r} are not all equal")
    blocks = tuple(z.cycles(include_fixed=True))
    size = len(blocks[0])
    return BlockSystem(degree=z.degree, blocks=blocks, block_size=size)


def action_on_blocks(p: Permutation, bs: BlockSystem) -> Permutation:
    """The permutation induced on block indices (blocks numbered by minimum)."""
    if p.degree != bs.degree:
        raise DegreeMismatch(f"degrees differ: {p.degree} vs {bs.degree}")
    index = {b: i + 1 for i, b in enumerate(bs.blocks)}
    out = []
    for b in bs.blocks:
        img = tuple(sorted(p.images[x - 1] for x in b))
        if img not in index:
            raise BlocksNotPreserved(f"{p.images!r} maps block {b} off the partition")
        out.append(index[img])
    return Permutation(tuple(out))


def canonical_tuple(ps: Sequence[Permutation]) -> tuple[Permutation, ...]:
    """Lexicographically minimal simultaneous conjugate of a permutation tuple.

    Two tuples are equivalent under relabeling of points iff their canonical
    forms are equal.  Brute force over conjugators; restricted to degree <= 8.
    """
    ps = tuple(ps)
    if not ps:
        raise ValueError("canonical_tuple needs at least one permutation")
    d = _shared_degree(ps)
    if d > CANONICAL_DEGREE_CAP:
        raise DegreeTooLargeForCanonicalization(
            f"degree {d} exceeds the canonicalization cap {CANONICAL_DEGREE_CAP}"
        )
    raw = _canonical_raw(tuple(p.images for p in ps))
    return tuple(Permutation(t) for t in raw)
