"""Finitely presented groups: words, relator checking, homomorphism search
into symmetric groups, and abelianization via integer Smith normal form.

No word problem is solved here.  Group equality is only ever probed through
invariants (homomorphism counts, abelian invariants); the search engine is a
plain backtracking over generator images with early relator pruning.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, gcd
from typing import Iterable, Mapping, Sequence

from .errors import (
    DegreeTooLargeForCanonicalization,
    SearchSpaceTooLarge,
    UnknownGenerator,
)
from .perms import (
    CANONICAL_DEGREE_CAP,
    Permutation,
    _canonical_raw,
    _compose_t,
    _identity_t,
    _inverse_t,
    _symmetric_elements,
)

# naive-search guard for hom_count; raised above the literal spec bound so the
# 7-generator Mumford presentations at degree 4 stay computable
HOM_COUNT_SPACE_CAP = 10**10
_TABLE_DEGREE_CAP = 6

Assignment = Mapping[str, Permutation]

_LETTER_RE = re.compile(r"^([A-Za-z][A-Za-z0-9]*?)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class Word:
    """A word in named generators: a sequence of (generator, +1/-1) letters.

    The empty word is the identity.  Powers are stored expanded, one letter
    per factor, e.g. ``e3^-2`` becomes two ``("e3", -1)`` letters.
    """

    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        letters = tuple((str(n), int(s)) for n, s in self.letters)
        object.__setattr__(self, "letters", letters)
        for name, sign in letters:
            if sign not in (-1, 1):
                raise ValueError(f"letter sign must be +-1, got {sign}")
            if not name:
                raise ValueError("empty generator name")

    @staticmethod
    def gen(name: str, exponent: int = 1) -> "Word":
        sign = 1 if exponent > 0 else -1
        return Word(((name, sign),) * abs(exponent))

    @staticmethod
    def parse(text: str) -> "Word":
        """Parse a whitespace-separated word like ``"e3^-1 b1 b2^2"``.

        >>> Word.parse("e3^-1 b1 b2").letters
        (('e3', -1), ('b1', 1), ('b2', 1))
        """
        letters: list[tuple[str, int]] = []
        for token in text.split():
            m = _LETTER_RE.match(token)
            if not m:
                raise ValueError(f"cannot parse word token {token!r}")
            name, exp = m.group(1), int(m.group(2) or 1)
            if exp != 0:
                letters.extend([(name, 1 if exp > 0 else -1)] * abs(exp))
        return Word(tuple(letters))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        if k >= 0:
            return Word(self.letters * k)
        return self.inverse() ** (-k)

    def inverse(self) -> "Word":
        return Word(tuple((n, -s) for n, s in reversed(self.letters)))

    def generator_names(self) -> frozenset[str]:
        return frozenset(n for n, _ in self.letters)

    def exponent_sum(self, name: str) -> int:
        return sum(s for n, s in self.letters if n == name)

    def __len__(self) -> int:
        return len(self.letters)

    def to_json(self) -> list[list]:
        return [[n, s] for n, s in self.letters]

    @staticmethod
    def from_json(data) -> "Word":
        return Word(tuple((str(n), int(s)) for n, s in data))


def commutator(a: Word, b: Word) -> Word:
    """[a, b] = a^-1 b^-1 a b."""
    return a.inverse() * b.inverse() * a * b


@dataclass(frozen=True)
class Presentation:
    """Ordered generator names plus relator words (each relator = identity)."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        gens = tuple(str(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(self.relators))
        if len(set(gens)) != len(gens):
            raise ValueError(f"duplicate generator names: {gens!r}")
        declared = set(gens)
        for rel in self.relators:
            stray = rel.generator_names() - declared
            if stray:
                raise UnknownGenerator(f"relator uses undeclared generators {sorted(stray)}")

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [r.to_json() for r in self.relators],
        }

    @staticmethod
    def from_json(data) -> "Presentation":
        return Presentation(
            generators=tuple(data["generators"]),
            relators=tuple(Word.from_json(r) for r in data.get("relators", [])),
        )


def evaluate_word(word: Word, assignment: Assignment, degree: int | None = None) -> Permutation:
    """Left-to-right product of the assigned images; empty word -> identity."""
    if degree is None:
        if not assignment:
            raise ValueError("degree is required to evaluate against an empty assignment")
        degree = next(iter(assignment.values())).degree
    t = _identity_t(degree)
    for name, sign in word.letters:
        if name not in assignment:
            raise UnknownGenerator(f"no image assigned for generator {name!r}")
        img = assignment[name].images
        t = _compose_t(t, img if sign > 0 else _inverse_t(img))
    return Permutation(t)


def check_homomorphism(pres: Presentation, assignment: Assignment) -> bool:
    """True iff every relator of the presentation evaluates to the identity."""
    for name in pres.generators:
        if name not in assignment:
            raise UnknownGenerator(f"no image assigned for generator {name!r}")
    if not pres.generators:
        return True
    degree = assignment[pres.generators[0]].degree
    return all(evaluate_word(r, assignment, degree).is_identity() for r in pres.relators)


# -- search engine ------------------------------------------------------------

class _TableOps:
    """Multiplication-table arithmetic on element indices (small degrees)."""

    def __init__(self, d: int):
        self.d = d
        self.elements = _symmetric_elements(d)
        index = {p: i for i, p in enumerate(self.elements)}
        self.identity = 0  # lexicographically first element is the identity
        self.inv = [index[_inverse_t(p)] for p in self.elements]
        self.mul = [
            [index[_compose_t(p, q)] for q in self.elements] for p in self.elements
        ]
        self.index = index

    def as_tuple(self, x: int) -> tuple[int, ...]:
        return self.elements[x]

    def candidates(self):
        return range(len(self.elements))


class _TupleOps:
    """Direct tuple arithmetic (degrees above the table cap)."""

    def __init__(self, d: int):
        self.d = d
        self.elements = _symmetric_elements(d)
        self.identity = _identity_t(d)

    def as_tuple(self, x):
        return x

    def candidates(self):
        return self.elements


@lru_cache(maxsize=None)
def _ops_for(d: int):
    return _TableOps(d) if d <= _TABLE_DEGREE_CAP else _TupleOps(d)


@lru_cache(maxsize=None)
def _class_reps(d: int) -> tuple[tuple[int, ...], ...]:
    """Lexicographically minimal representative of each conjugacy class."""
    def ctype(p):
        seen = [False] * d
        parts = []
        for i in range(d):
            if not seen[i]:
                n = 0
                j = i
                while not seen[j]:
                    seen[j] = True
                    n += 1
                    j = p[j] - 1
                parts.append(n)
        return tuple(sorted(parts))

    reps: dict[tuple[int, ...], tuple[int, ...]] = {}
    for p in _symmetric_elements(d):
        t = ctype(p)
        if t not in reps:
            reps[t] = p  # lex iteration order makes the first hit minimal
    return tuple(sorted(reps.values()))


@lru_cache(maxsize=None)
def _class_sizes(d: int) -> dict:
    """Class size per representative: d! / (prod l^m_l * m_l!) over cycle lengths."""
    sizes: dict[tuple[int, ...], int] = {}
    for rep in _class_reps(d):
        lengths: dict[int, int] = {}
        seen = [False] * d
        for i in range(d):
            if not seen[i]:
                n = 0
                j = i
                while not seen[j]:
                    seen[j] = True
                    n += 1
                    j = rep[j] - 1
                lengths[n] = lengths.get(n, 0) + 1
        centralizer = 1
        for length, mult in lengths.items():
            centralizer *= length**mult * factorial(mult)
        sizes[rep] = factorial(d) // centralizer
    return sizes


def _compile(pres: Presentation):
    pos = {g: i for i, g in enumerate(pres.generators)}
    compiled = [tuple((pos[n], s) for n, s in r.letters) for r in pres.relators]
    sched: list[list] = [[] for _ in pres.generators]
    for rc in compiled:
        if rc:
            sched[max(i for i, _ in rc)].append(rc)
    return sched


def _search(
    pres: Presentation,
    d: int,
    *,
    transitive: bool = False,
    nontrivial: frozenset[str] = frozenset(),
    first_gen_class_reps: bool = False,
    visit=None,
):
    """Backtracking over generator images with relator pruning at completion depth."""
    gens = pres.generators
    k = len(gens)
    if k == 0:
        if not transitive or d == 1:
            visit(())
        return
    ops = _ops_for(d)
    table = isinstance(ops, _TableOps)
    sched = _compile(pres)
    imgs = [ops.identity] * k

    if table:
        mul_rows = ops.mul
        inv = ops.inv
        ident = 0

        def relator_value(rc):
            x = ident
            for pos, s in rc:
                y = imgs[pos]
                x = mul_rows[x][y if s > 0 else inv[y]]
            return x
    else:
        ident = ops.identity

        def relator_value(rc):
            x = ident
            for pos, s in rc:
                y = imgs[pos]
                x = _compose_t(x, y if s > 0 else _inverse_t(y))
            return x

    def leaf_ok():
        if not transitive:
            return True
        tuples = [ops.as_tuple(x) for x in imgs]
        seen = [False] * d
        seen[0] = True
        frontier = [1]
        n = 1
        while frontier:
            a = frontier.pop()
            for t in tuples:
                b = t[a - 1]
                if not seen[b - 1]:
                    seen[b - 1] = True
                    n += 1
                    frontier.append(b)
        return n == d

    base_candidates = list(ops.candidates())
    rep_candidates = None
    if first_gen_class_reps:
        reps = _class_reps(d)
        rep_candidates = [ops.index[r] for r in reps] if table else list(reps)

    def rec(j: int):
        if j == 0 and rep_candidates is not None:
            cands = rep_candidates
        else:
            cands = base_candidates
        skip_identity = gens[j] in nontrivial
        for cand in cands:
            if skip_identity and cand == ident:
                continue
            imgs[j] = cand
            ok = True
            for rc in sched[j]:
                if relator_value(rc) != ident:
                    ok = False
                    break
            if not ok:
                continue
            if j + 1 == k:
                if leaf_ok():
                    visit(tuple(ops.as_tuple(x) for x in imgs))
            else:
                rec(j + 1)

    rec(0)


def enumerate_homs(
    pres: Presentation,
    degree: int,
    *,
    transitive: bool = False,
    nontrivial: Iterable[str] = (),
    up_to_conjugacy: bool = False,
) -> list[dict[str, Permutation]]:
    """All homomorphisms of the presentation into the degree-d symmetric group.

    With ``up_to_conjugacy`` the result holds exactly one representative per
    simultaneous-conjugacy class, namely the canonical form itself, sorted; the
    raw enumeration is in lexicographic order of image tuples either way.
    """
    nontrivial = frozenset(nontrivial)
    stray = nontrivial - set(pres.generators)
    if stray:
        raise UnknownGenerator(f"nontrivial constraint names unknown generators {sorted(stray)}")
    if up_to_conjugacy and degree > CANONICAL_DEGREE_CAP:
        raise DegreeTooLargeForCanonicalization(
            f"degree {degree} exceeds the canonicalization cap {CANONICAL_DEGREE_CAP}"
        )

    found: list[tuple] = []
    if up_to_conjugacy:
        seen: set[tuple] = set()

        def visit(imgs):
            canon = _canonical_raw(imgs) if imgs else ()
            if canon not in seen:
                seen.add(canon)
                found.append(canon)
    else:
        def visit(imgs):
            found.append(imgs)

    _search(
        pres,
        degree,
        transitive=transitive,
        nontrivial=nontrivial,
        first_gen_class_reps=up_to_conjugacy,
        visit=visit,
    )
    if up_to_conjugacy:
        found.sort()
    return [
        {name: Permutation(t) for name, t in zip(pres.generators, imgs)}
        for imgs in found
    ]


def hom_count(pres: Presentation, degree: int, space_cap: int = HOM_COUNT_SPACE_CAP) -> int:
    """Number of ALL homomorphisms into the degree-d symmetric group.

    This count is presentation-independent, which makes it the workhorse
    oracle for checking that two presentations define the same group.  The
    first generator only runs over conjugacy-class representatives; each
    completion count is multiplied by the class size.
    """
    if factorial(degree) ** max(len(pres.generators), 1) > space_cap:
        raise SearchSpaceTooLarge(
            f"{factorial(degree)}^{len(pres.generators)} exceeds cap {space_cap}"
        )
    if not pres.generators:
        return 1

    sizes = _class_sizes(degree)
    total = 0
    for rep, cls_size in sizes.items():
        sub = _CountVisitor()
        _search_with_fixed_first(pres, degree, rep, sub)
        total += cls_size * sub.count
    return total


class _CountVisitor:
    def __init__(self):
        self.count = 0

    def __call__(self, imgs):
        self.count += 1


def _search_with_fixed_first(pres: Presentation, d: int, first: tuple[int, ...], visit):
    """Run the backtracking with the first generator image pinned to ``first``."""
    ops = _ops_for(d)
    table = isinstance(ops, _TableOps)
    gens = pres.generators
    k = len(gens)
    sched = _compile(pres)
    imgs = [ops.identity] * k
    imgs[0] = ops.index[first] if table else first

    if table:
        mul_rows = ops.mul
        inv = ops.inv
        ident = 0

        def relator_value(rc):
            x = ident
            for pos, s in rc:
                y = imgs[pos]
                x = mul_rows[x][y if s > 0 else inv[y]]
            return x
    else:
        ident = ops.identity

        def relator_value(rc):
            x = ident
            for pos, s in rc:
                y = imgs[pos]
                x = _compose_t(x, y if s > 0 else _inverse_t(y))
            return x

    for rc in sched[0]:
        if relator_value(rc) != ident:
            return
    if k == 1:
        visit((ops.as_tuple(imgs[0]),))
        return

    base_candidates = list(ops.candidates())

    def rec(j: int):
        for cand in base_candidates:
            imgs[j] = cand
            ok = True
            for rc in sched[j]:
                if relator_value(rc) != ident:
                    ok = False
                    break
            if not ok:
                continue
            if j + 1 == k:
                visit(tuple(ops.as_tuple(x) for x in imgs))
            else:
                rec(j + 1)

    rec(1)


# -- abelianization -----------------------------------------------------------

@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant-factor form of a finitely generated abelian group."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"torsion {self.torsion!r} is not a divisibility chain")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion entries must be >= 2")


def smith_normal_diagonal(rows: Sequence[Sequence[int]]) -> list[int]:
    """Nonnegative diagonal of the Smith normal form, divisibility enforced.

    Plain elementary row/column operations over Python integers; the matrices
    here are tiny exponent-sum tables.
    """
    m = [list(map(int, r)) for r in rows]
    if not m or not m[0]:
        return []
    nrows, ncols = len(m), len(m[0])
    diag: list[int] = []
    top = 0
    left = 0
    while top < nrows and left < ncols:
        # locate a pivot of minimal absolute value
        pivot = None
        for i in range(top, nrows):
            for j in range(left, ncols):
                v = abs(m[i][j])
                if v and (pivot is None or v < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        m[top], m[i] = m[i], m[top]
        for r in m:
            r[left], r[j] = r[j], r[left]
        # clear the pivot row and column; restart if a remainder shrinks the pivot
        while True:
            p = m[top][left]
            done = True
            for i in range(top + 1, nrows):
                q = m[i][left] // p
                if q:
                    for j in range(left, ncols):
                        m[i][j] -= q * m[top][j]
                if m[i][left]:
                    m[top], m[i] = m[i], m[top]
                    done = False
                    break
            if not done:
                continue
            for j in range(left + 1, ncols):
                q = m[top][j] // p
                if q:
                    for i in range(top, nrows):
                        m[i][j] -= q * m[i][left]
                if m[top][j]:
                    for i in range(top, nrows):
                        m[i][left], m[i][j] = m[i][j], m[i][left]
                    done = False
                    break
            if done:
                break
        diag.append(abs(m[top][left]))
        top += 1
        left += 1
    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if a and b % a != 0:
                g = gcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
    return diag


def abelianization(pres: Presentation) -> AbelianInvariants:
    """Invariant factors of the abelianized group (Smith normal form of the
    relator exponent-sum matrix)."""
    gens = pres.generators
    if not pres.relators or not gens:
        return AbelianInvariants(free_rank=len(gens))
    rows = [[r.exponent_sum(g) for g in gens] for r in pres.relators]
    diag = [d for d in smith_normal_diagonal(rows) if d != 0]
    free_rank = len(gens) - len(diag)
    torsion = tuple(d for d in diag if d > 1)
    return AbelianInvariants(free_rank=free_rank, torsion=torsion)
