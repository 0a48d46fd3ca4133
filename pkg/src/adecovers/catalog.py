"""The ADE universe: resolution graphs, the generic presentation read off a
graph, the per-family simplified presentations, and the distinguished words
(the central last-blowup loop e and the loops around its neighbor vertices).

Vertex names follow the figures: branch vertices b1.., exceptional vertices
numbered so indices increase along shortest paths from the root (the first
exceptional vertex).  Weights are self-intersections; branch vertices carry 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidType, MalformedGraph, NoExceptionalCurve
from .fpgroups import Presentation, Word, commutator

BRANCH = "branch"
EXCEPTIONAL = "exceptional"


@dataclass(frozen=True)
class SingularityType:
    family: str
    index: int

    def __post_init__(self):
        fam, idx = self.family, self.index
        if fam == "A":
            ok = idx >= 0
        elif fam == "D":
            ok = idx >= 4
        elif fam == "E":
            ok = idx in (6, 7, 8)
        else:
            ok = False
        if not ok:
            raise InvalidType(f"no ADE type {fam}{idx}")

    @staticmethod
    def parse(name: str) -> "SingularityType":
        name = name.strip()
        if len(name) < 2 or name[0] not in "ADE" or not name[1:].isdigit():
            raise InvalidType(f"cannot parse singularity type {name!r}")
        return SingularityType(name[0], int(name[1:]))

    @property
    def name(self) -> str:
        return f"{self.family}{self.index}"

    def __str__(self) -> str:
        return self.name


def branch_count(t: SingularityType) -> int:
    """Number of irreducible branches of the germ (the m of the graph)."""
    if t.family == "A":
        return 2 if t.index % 2 == 1 else 1
    if t.family == "D":
        return 3 if t.index % 2 == 0 else 2
    return {6: 1, 7: 2, 8: 1}[t.index]


@dataclass(frozen=True)
class GraphVertex:
    name: str
    kind: str
    weight: int

    def __post_init__(self):
        if self.kind not in (BRANCH, EXCEPTIONAL):
            raise ValueError(f"bad vertex kind {self.kind!r}")


def _vkey(name: str):
    i = 0
    while i < len(name) and not name[i].isdigit():
        i += 1
    return (name[:i], int(name[i:]) if i < len(name) else -1, name)


@dataclass(frozen=True)
class ResolutionGraph:
    vertices: tuple[GraphVertex, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        verts = tuple(self.vertices)
        names = [v.name for v in verts]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate vertex names: {names!r}")
        named = set(names)
        edges = []
        for u, v in self.edges:
            if u not in named or v not in named:
                raise ValueError(f"edge ({u},{v}) references unknown vertex")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            edges.append(tuple(sorted((u, v), key=_vkey)))
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate edges")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(sorted(edges, key=lambda e: (_vkey(e[0]), _vkey(e[1])))))

    def vertex(self, name: str) -> GraphVertex:
        for v in self.vertices:
            if v.name == name:
                return v
        raise KeyError(name)

    def neighbors(self, name: str) -> tuple[str, ...]:
        out = [v if u == name else u for u, v in self.edges if name in (u, v)]
        return tuple(sorted(out, key=_vkey))

    def branch_names(self) -> tuple[str, ...]:
        return tuple(sorted((v.name for v in self.vertices if v.kind == BRANCH), key=_vkey))

    def exceptional_names(self) -> tuple[str, ...]:
        return tuple(sorted((v.name for v in self.vertices if v.kind == EXCEPTIONAL), key=_vkey))

    def is_tree(self) -> bool:
        names = [v.name for v in self.vertices]
        if len(self.edges) != len(names) - 1:
            return False
        if not names:
            return False
        seen = {names[0]}
        frontier = [names[0]]
        while frontier:
            x = frontier.pop()
            for y in self.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return len(seen) == len(names)

    def to_json(self) -> dict:
        return {
            "vertices": [
                {"name": v.name, "kind": v.kind, "weight": v.weight} for v in self.vertices
            ],
            "edges": [[u, v] for u, v in self.edges],
        }

    @staticmethod
    def from_json(data) -> "ResolutionGraph":
        return ResolutionGraph(
            vertices=tuple(
                GraphVertex(d["name"], d["kind"], int(d["weight"])) for d in data["vertices"]
            ),
            edges=tuple((u, v) for u, v in data["edges"]),
        )


def _graph(branches: Iterable[str], excs: Iterable[tuple[str, int]], edges) -> ResolutionGraph:
    vs = [GraphVertex(b, BRANCH, 0) for b in branches]
    vs += [GraphVertex(name, EXCEPTIONAL, w) for name, w in excs]
    return ResolutionGraph(vertices=tuple(vs), edges=tuple(edges))


def resolution_graph(t: SingularityType) -> ResolutionGraph:
    """The parametric weighted resolution tree of the given type."""
    fam, k = t.family, t.index
    if fam == "A" and k == 0:
        return _graph(["b1"], [], [])
    if fam == "A" and k % 2 == 1:
        n = (k - 1) // 2
        if n == 0:  # A1: the single exceptional vertex has weight -1
            return _graph(["b1", "b2"], [("e3", -1)], [("b1", "e3"), ("b2", "e3")])
        excs = [(f"e{i}", -2) for i in range(3, n + 3)] + [(f"e{n+3}", -1)]
        edges = [(f"e{i}", f"e{i+1}") for i in range(3, n + 3)]
        edges += [("b1", f"e{n+3}"), ("b2", f"e{n+3}")]
        return _graph(["b1", "b2"], excs, edges)
    if fam == "A":
        n = k // 2
        excs = [(f"e{i}", -2) for i in range(2, n + 1)]
        excs += [(f"e{n+1}", -3), (f"e{n+2}", -1), (f"e{n+3}", -2)]
        edges = [(f"e{i}", f"e{i+1}") for i in range(2, n + 2)]
        edges += [("b1", f"e{n+2}"), (f"e{n+2}", f"e{n+3}")]
        return _graph(["b1"], excs, edges)
    if fam == "D" and k % 2 == 0:
        n = (k - 2) // 2
        excs = [(f"e{i}", -2) for i in range(4, n + 3)] + [(f"e{n+3}", -1)]
        edges = [("b1", "e4")]
        edges += [(f"e{i}", f"e{i+1}") for i in range(4, n + 3)]
        edges += [("b2", f"e{n+3}"), ("b3", f"e{n+3}")]
        return _graph(["b1", "b2", "b3"], excs, edges)
    if fam == "D":
        n = (k - 3) // 2
        excs = [(f"e{i}", -2) for i in range(3, n + 2)]
        excs += [(f"e{n+2}", -3), (f"e{n+3}", -1), (f"e{n+4}", -2)]
        edges = [("b1", "e3")]
        edges += [(f"e{i}", f"e{i+1}") for i in range(3, n + 3)]
        edges += [("b2", f"e{n+3}"), (f"e{n+3}", f"e{n+4}")]
        return _graph(["b1", "b2"], excs, edges)
    if t.name == "E6":
        return _graph(
            ["b1"],
            [("e2", -4), ("e3", -1), ("e4", -2), ("e5", -2)],
            [("e2", "e3"), ("b1", "e3"), ("e3", "e4"), ("e4", "e5")],
        )
    if t.name == "E7":
        return _graph(
            ["b1", "b2"],
            [("e3", -3), ("e4", -1), ("e5", -2)],
            [("e3", "e4"), ("b2", "e4"), ("e4", "e5"), ("b1", "e5")],
        )
    # E8
    return _graph(
        ["b1"],
        [("e2", -3), ("e3", -2), ("e4", -1), ("e5", -3)],
        [("e2", "e3"), ("e3", "e4"), ("b1", "e4"), ("e4", "e5")],
    )


def _check_graph(g: ResolutionGraph) -> None:
    if not g.vertices:
        raise MalformedGraph("empty graph")
    if not g.is_tree():
        raise MalformedGraph("graph is not a tree")
    for v in g.vertices:
        if v.kind == BRANCH and v.weight != 0:
            raise MalformedGraph(f"branch vertex {v.name} must have weight 0")
        if v.kind == EXCEPTIONAL and v.weight >= 0:
            raise MalformedGraph(f"exceptional vertex {v.name} must have negative weight")
    excs = g.exceptional_names()
    if not excs:
        return
    # the exceptional curves form a connected subtree and indices must
    # increase along shortest paths from the root (first exceptional vertex)
    root = excs[0]
    seen = {root}
    frontier = [root]
    while frontier:
        x = frontier.pop()
        for y in g.neighbors(x):
            if g.vertex(y).kind != EXCEPTIONAL or y in seen:
                continue
            if _vkey(y) < _vkey(x):
                raise MalformedGraph(
                    f"vertex numbering decreases from {x} to {y} along the tree"
                )
            seen.add(y)
            frontier.append(y)
    if seen != set(excs):
        raise MalformedGraph("exceptional vertices do not form a connected subtree")


def mumford_presentation(g: ResolutionGraph) -> Presentation:
    """One generator per vertex; per exceptional vertex e the relation
    e^w * (adjacent branches ascending) * (adjacent exceptionals ascending) = 1,
    plus one commutator relator per edge meeting an exceptional vertex."""
    _check_graph(g)
    branches = g.branch_names()
    excs = g.exceptional_names()
    relators = []
    for e in excs:
        word = Word.gen(e, g.vertex(e).weight)
        for nb in g.neighbors(e):
            if g.vertex(nb).kind == BRANCH:
                word = word * Word.gen(nb)
        for nb in g.neighbors(e):
            if g.vertex(nb).kind == EXCEPTIONAL:
                word = word * Word.gen(nb)
        relators.append(word)
    for u, v in g.edges:
        ku, kv = g.vertex(u).kind, g.vertex(v).kind
        if ku == kv == BRANCH:
            continue
        if ku == BRANCH or kv == BRANCH:
            b, e = (u, v) if ku == BRANCH else (v, u)
            relators.append(commutator(Word.gen(b), Word.gen(e)))
        else:
            relators.append(commutator(Word.gen(u), Word.gen(v)))
    return Presentation(generators=branches + excs, relators=tuple(relators))


def _eq(lhs: Word, rhs: Word) -> Word:
    """Relator for the relation lhs = rhs, emitted as lhs^-1 * rhs."""
    return lhs.inverse() * rhs


def simplified_presentation(t: SingularityType) -> Presentation:
    """The few-generator presentation of the local fundamental group.

    The D-odd family follows the elimination of the chain generators from the
    generic presentation (central word e3^{2n+1} b1^{1-2n}); see the notes on
    distinguished_words for the full derived-word tables.
    """
    fam, k = t.family, t.index
    b1, b2, b3 = Word.gen("b1"), Word.gen("b2"), Word.gen("b3")
    if fam == "A" and k == 0:
        return Presentation(generators=("b1",))
    if fam == "A" and k % 2 == 1:
        n = (k - 1) // 2
        e3 = Word.gen("e3")
        return Presentation(
            generators=("b1", "b2", "e3"),
            relators=(
                _eq(e3, b1 * b2),
                commutator(b1, e3 ** (n + 1)),
                commutator(b2, e3 ** (n + 1)),
            ),
        )
    if fam == "A":
        n = k // 2
        e2 = Word.gen("e2")
        return Presentation(
            generators=("b1", "e2"),
            relators=(
                _eq(e2 ** (n + 1), b1 * e2**n * b1),
                commutator(b1, e2 ** (2 * n + 1)),
            ),
        )
    if fam == "D" and k % 2 == 0:
        n = (k - 2) // 2
        central = b1 * (b2 * b3) ** n
        return Presentation(
            generators=("b1", "b2", "b3"),
            relators=(
                commutator(b1, b2 * b3),
                commutator(b2, central),
                commutator(b3, central),
            ),
        )
    if fam == "D":
        n = (k - 3) // 2
        e3 = Word.gen("e3")
        central = e3 ** (2 * n + 1) * b1 ** (1 - 2 * n)
        half = e3 ** (n + 1) * b1 ** (-n) * b2.inverse()
        return Presentation(
            generators=("b1", "b2", "e3"),
            relators=(
                _eq(central, half * half),
                commutator(e3, b1),
                commutator(b2, central),
            ),
        )
    if t.name == "E6":
        e2 = Word.gen("e2")
        return Presentation(
            generators=("b1", "e2"),
            relators=(
                _eq(e2**3, (b1 * e2) ** 2 * b1),
                commutator(e2**4, b1),
            ),
        )
    if t.name == "E7":
        e3 = Word.gen("e3")
        return Presentation(
            generators=("b1", "b2", "e3"),
            relators=(
                _eq(e3**2, b1 * b2 * e3 * b2),
                commutator(b1, b2 * e3),
                commutator(e3**3, b1),
                commutator(e3**3, b2),
            ),
        )
    # E8
    e2 = Word.gen("e2")
    return Presentation(
        generators=("b1", "e2"),
        relators=(
            _eq((e2**2 * b1.inverse()) ** 2, b1 * e2**3),
            commutator(e2**5, b1),
        ),
    )


@dataclass(frozen=True)
class DistinguishedWords:
    """The central last-blowup word e and the words of the vertices adjacent
    to the -1 vertex, in vertex-relation order (branches ascending, then
    exceptionals ascending).  A1 has only two neighbors, so gamma is a pair."""

    e_word: Word
    gamma_words: tuple[Word, ...]


def distinguished_words(t: SingularityType) -> DistinguishedWords:
    """Words in the simplified presentation's generators for e and its
    neighbors.  The product of the gamma words equals e in the group.

    Derived-word tables (elimination of the chain generators):
      A_{2n+1}: e_{2+i} = e3^i,                e = (b1 b2)^{n+1}
      A_{2n}:   e_{1+i} = e2^i,                e = e2^{2n+1},  e_{n+3} = b1 e2^n
      D_{2n+2}: e_{3+i} = b1 (b2 b3)^i,        e = b1 (b2 b3)^n
      D_{2n+3}: e_{i+2} = e3^i b1^{1-i},       e = e3^{2n+1} b1^{1-2n},
                e_{n+4} = e3^{n+1} b1^{-n} b2^-1
      E6: e3 = e2^4 (= e), e4 = (b1 e2)^2, e5 = b1 e2
      E7: e4 = e3^3 (= e), e5 = b1 b2 e3
      E8: e3 = e2^3, e4 = e2^5 (= e), e5 = e2^2 b1^-1
    """
    fam, k = t.family, t.index
    b1, b2, b3 = Word.gen("b1"), Word.gen("b2"), Word.gen("b3")
    if fam == "A" and k == 0:
        raise NoExceptionalCurve("A0 has no exceptional curve")
    if fam == "A" and k == 1:
        return DistinguishedWords(e_word=b1 * b2, gamma_words=(b1, b2))
    if fam == "A" and k % 2 == 1:
        n = (k - 1) // 2
        return DistinguishedWords(
            e_word=(b1 * b2) ** (n + 1),
            gamma_words=(b1, b2, (b1 * b2) ** n),
        )
    if fam == "A":
        n = k // 2
        e2 = Word.gen("e2")
        return DistinguishedWords(
            e_word=e2 ** (2 * n + 1),
            gamma_words=(b1, e2**n, b1 * e2**n),
        )
    if fam == "D" and k == 4:
        return DistinguishedWords(e_word=b1 * b2 * b3, gamma_words=(b1, b2, b3))
    if fam == "D" and k % 2 == 0:
        n = (k - 2) // 2
        return DistinguishedWords(
            e_word=b1 * (b2 * b3) ** n,
            gamma_words=(b2, b3, b1 * (b2 * b3) ** (n - 1)),
        )
    if fam == "D":
        n = (k - 3) // 2
        e3 = Word.gen("e3")
        return DistinguishedWords(
            e_word=e3 ** (2 * n + 1) * b1 ** (1 - 2 * n),
            gamma_words=(
                b2,
                e3**n * b1 ** (1 - n),
                e3 ** (n + 1) * b1 ** (-n) * b2.inverse(),
            ),
        )
    if t.name == "E6":
        e2 = Word.gen("e2")
        return DistinguishedWords(
            e_word=e2**4,
            gamma_words=(b1, e2, (b1 * e2) ** 2),
        )
    if t.name == "E7":
        e3 = Word.gen("e3")
        return DistinguishedWords(
            e_word=e3**3,
            gamma_words=(b2, e3, b1 * b2 * e3),
        )
    # E8
    e2 = Word.gen("e2")
    return DistinguishedWords(
        e_word=e2**5,
        gamma_words=(b1, e2**3, e2**2 * b1.inverse()),
    )


def _encode_rooted(g: ResolutionGraph, root: str, parent: str | None) -> tuple:
    v = g.vertex(root)
    children = sorted(
        _encode_rooted(g, nb, root) for nb in g.neighbors(root) if nb != parent
    )
    return (v.kind, v.weight, tuple(children))


def graphs_isomorphic(g1: ResolutionGraph, g2: ResolutionGraph) -> bool:
    """Kind/weight-preserving tree isomorphism, by canonical rooted encodings
    minimized over the choice of root."""
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False
    if not (g1.is_tree() and g2.is_tree()):
        raise MalformedGraph("isomorphism test expects trees")

    def canon(g: ResolutionGraph):
        return min(_encode_rooted(g, v.name, None) for v in g.vertices)

    return canon(g1) == canon(g2)


def catalog_types(max_index: int) -> list[SingularityType]:
    """All catalog types with index bounded by max_index, in a fixed order."""
    out = [SingularityType("A", i) for i in range(0, max_index + 1)]
    out += [SingularityType("D", i) for i in range(4, max_index + 1)]
    out += [SingularityType("E", i) for i in (6, 7, 8) if i <= max_index]
    return out
