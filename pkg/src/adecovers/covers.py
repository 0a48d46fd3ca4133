"""Germ covers as monodromy assignments: validation, enumeration up to sheet
relabeling, the central subgroup generated by the last-blowup loop, the map
onto Belyi triples cut out on the last exceptional curve, and its inverse
degree-n^2 construction over the three-branch ordinary singularity."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Mapping

from .catalog import SingularityType, distinguished_words, simplified_presentation
from .dessins import BelyiClass, BelyiTriple, classify, genus
from .errors import (
    BlocksNotPreserved,
    CentralityViolated,
    DegreeTooLargeForCanonicalization,
    GroupTooLarge,
    NonZeroGenus,
    NotBel3,
    NotGenusZero,
    NotTransitive,
)
from .fpgroups import check_homomorphism, enumerate_homs, evaluate_word
from .perms import (
    Permutation,
    action_on_blocks,
    blocks_from_central,
    compose,
    group_elements,
    is_central,
    is_transitive,
)

COVER_DEGREE_CAP = 7
VERIFY_GROUP_CAP = 1000


@dataclass(frozen=True)
class GermCover:
    """A monodromy assignment for the simplified presentation of one type."""

    singularity: SingularityType
    degree: int
    images: Mapping[str, Permutation]
    meta: Mapping[str, str] | None = None

    def presentation(self):
        return simplified_presentation(self.singularity)

    def image_tuple(self) -> tuple[Permutation, ...]:
        """Generator images in presentation order."""
        return tuple(self.images[g] for g in self.presentation().generators)

    def branch_names(self) -> tuple[str, ...]:
        return tuple(g for g in self.presentation().generators if g.startswith("b"))

    def monodromy_group(self, cap: int = 10**6) -> frozenset[Permutation]:
        return group_elements(list(self.image_tuple()), cap=cap, degree=self.degree)

    def to_json(self) -> dict:
        doc = {
            "singularity": self.singularity.name,
            "degree": self.degree,
            "images": {g: p.to_json() for g, p in sorted(self.images.items())},
        }
        if self.meta:
            doc["meta"] = dict(self.meta)
        return doc

    @staticmethod
    def from_json(data) -> "GermCover":
        t = SingularityType.parse(data["singularity"])
        images = {g: Permutation.from_json(v) for g, v in data["images"].items()}
        return GermCover(
            singularity=t,
            degree=int(data["degree"]),
            images=images,
            meta=data.get("meta"),
        )


def validate_cover(cover: GermCover) -> list[str]:
    """Every violated invariant, as one message each; an empty list is valid."""
    problems = []
    pres = cover.presentation()
    missing = [g for g in pres.generators if g not in cover.images]
    if missing:
        return [f"missing images for generators {missing}"]
    for name, p in cover.images.items():
        if p.degree != cover.degree:
            problems.append(f"image of {name} has degree {p.degree}, expected {cover.degree}")
    if problems:
        return problems
    if not check_homomorphism(pres, cover.images):
        problems.append("relators do not evaluate to the identity")
    if not is_transitive(list(cover.image_tuple()), degree=cover.degree):
        problems.append("the generated group is not transitive")
    for name in cover.branch_names():
        if cover.images[name].is_identity():
            problems.append(f"branch generator {name} has the identity image")
    return problems


@dataclass(frozen=True)
class CenterData:
    """Image z of the central word, its order, and the induced block count."""

    z: Permutation
    order: int
    block_count: int


def center_subgroup(cover: GermCover) -> CenterData:
    """Evaluate the central word; its cyclic image cuts the sheets into blocks.

    For the smooth type the central subgroup is trivial by convention.
    """
    if cover.singularity.name == "A0":
        return CenterData(
            z=Permutation.identity(cover.degree), order=1, block_count=cover.degree
        )
    words = distinguished_words(cover.singularity)
    z = evaluate_word(words.e_word, cover.images, cover.degree)
    if not is_central(z, list(cover.image_tuple())):
        raise CentralityViolated(
            "the distinguished word does not evaluate to a central permutation; "
            "the input is not a valid cover"
        )
    order = z.order()
    return CenterData(z=z, order=order, block_count=cover.degree // order)


@dataclass(frozen=True)
class PowerMapBeta:
    """Beta value for the smooth and nodal types: the power map x^k."""

    k: int
    group_order_mismatch: bool = False

    @property
    def degree(self) -> int:
        return self.k

    def to_json(self) -> dict:
        doc = {"variant": "power-map", "k": self.k}
        if self.group_order_mismatch:
            doc["warning"] = "group order differs from the product of branch orders"
        return doc


@dataclass(frozen=True)
class TripleBeta:
    """Beta value for all other types: a Belyi triple on the sheet blocks."""

    triple: BelyiTriple
    genus: int

    @property
    def degree(self) -> int:
        return self.triple.degree

    def to_json(self) -> dict:
        return {
            "variant": "triple",
            "degree": self.triple.degree,
            "sigma0": self.triple.sigma0.to_json(),
            "sigma1": self.triple.sigma1.to_json(),
            "sigma_inf": self.triple.sigma_inf.to_json(),
            "genus": self.genus,
        }


BetaDescriptor = PowerMapBeta | TripleBeta


def beta(cover: GermCover, strict: bool = False) -> BetaDescriptor:
    """The Belyi datum cut out on the last exceptional curve.

    - A0: the identity power map.
    - A1: the power map x^k with k = gcd of the two branch-image orders
      (order reading of the nodal rule; a flag marks covers where the group
      order differs from the product of the two orders).
    - otherwise: act the three neighbor words on the blocks of the central
      image; the first two block actions form the triple (the third is the
      inverse of the derived sigma_inf).

    With ``strict`` a triple of positive genus raises NonZeroGenus: such an
    exceptional curve cannot be rational, so no smooth-total-space germ
    realizes the monodromy.
    """
    name = cover.singularity.name
    if name == "A0":
        return PowerMapBeta(k=1)
    if name == "A1":
        n1 = cover.images["b1"].order()
        n2 = cover.images["b2"].order()
        group = cover.monodromy_group()
        return PowerMapBeta(
            k=gcd(n1, n2), group_order_mismatch=(len(group) != n1 * n2)
        )
    center = center_subgroup(cover)
    blocks = blocks_from_central(center.z)
    words = distinguished_words(cover.singularity)
    taus = [
        action_on_blocks(evaluate_word(w, cover.images, cover.degree), blocks)
        for w in words.gamma_words
    ]
    t1, t2, t3 = taus
    assert compose(compose(t1, t2), t3).is_identity(), "gamma block product is not trivial"
    triple = BelyiTriple(t1, t2)
    g = genus(triple)
    if strict and g > 0:
        raise NonZeroGenus(f"exceptional Belyi triple has genus {g}")
    return TripleBeta(triple=triple, genus=g)


def enumerate_covers(
    t: SingularityType, degree: int, rational_only: bool = False
) -> list[GermCover]:
    """All valid covers of one type and degree, one per sheet-relabeling class,
    in canonical order.  ``rational_only`` keeps covers whose exceptional
    triple has genus 0 (a necessary condition for a smooth total space)."""
    if degree > COVER_DEGREE_CAP:
        raise DegreeTooLargeForCanonicalization(
            f"degree {degree} exceeds the cover enumeration cap {COVER_DEGREE_CAP}"
        )
    pres = simplified_presentation(t)
    branch = tuple(g for g in pres.generators if g.startswith("b"))
    out = []
    for asg in enumerate_homs(
        pres, degree, transitive=True, nontrivial=branch, up_to_conjugacy=True
    ):
        cover = GermCover(singularity=t, degree=degree, images=asg)
        if rational_only:
            b = beta(cover)
            if isinstance(b, TripleBeta) and b.genus > 0:
                continue
        out.append(cover)
    return out


def construct_d4_from_belyi(t: BelyiTriple) -> GermCover:
    """The degree-n^2 three-branch cover over a strict genus-0 triple.

    Sheets are pairs (i, k) with i in 1..n and k in Z_n, linearized as
    k*n + i.  The three branch loops act by

        b1: (i, k) -> (sigma0(i), k + 1)
        b2: (i, k) -> (sigma1(i), k)
        b3: (i, k) -> (sigma_inf^-1(i), k)

    so their product is the deck shift (i, k) -> (i, k + 1), central of order
    n, and the block action on {i} x Z_n returns the input triple.  The shift
    cocycle rides on b1 alone; any cocycle summing to 1 mod n would do.
    """
    if not t.is_transitive():
        raise NotTransitive("the triple does not generate a transitive group")
    if classify(t) is not BelyiClass.BEL3:
        raise NotBel3("all of sigma0, sigma1, sigma_inf must be nontrivial")
    if genus(t) != 0:
        raise NotGenusZero(f"triple has genus {genus(t)}")
    n = t.degree
    s0 = t.sigma0.images
    s1 = t.sigma1.images
    sinf_inv = t.sigma_inf.inverse().images

    def build(sigma, shift):
        images = [0] * (n * n)
        for k in range(n):
            for i in range(1, n + 1):
                x = k * n + i
                images[x - 1] = ((k + shift) % n) * n + sigma[i - 1]
        return Permutation(tuple(images))

    cover = GermCover(
        singularity=SingularityType("D", 4),
        degree=n * n,
        images={
            "b1": build(s0, 1),
            "b2": build(s1, 0),
            "b3": build(sinf_inv, 0),
        },
        meta={"construction": "d4-from-belyi", "cocycle": "shift-on-b1"},
    )
    assert not validate_cover(cover)
    return cover


@dataclass(frozen=True)
class TheoremCheck:
    """Checks of the divisor and epimorphism claims for one enumerated cover."""

    cover_index: int
    beta_degree: int
    divides: bool
    triple_product_identity: bool | None = None
    triple_transitive: bool | None = None
    epimorphism_onto_triple_group: bool | None = None
    multiplication_respected: bool | None = None
    note: str = ""


@dataclass(frozen=True)
class TheoremReport:
    singularity: str
    degree: int
    checks: tuple[TheoremCheck, ...]
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "singularity": self.singularity,
            "degree": self.degree,
            "cover_count": len(self.checks),
            "violations": list(self.violations),
            "passed": self.passed,
            "checks": [
                {
                    "cover": c.cover_index,
                    "beta_degree": c.beta_degree,
                    "divides": c.divides,
                    "triple_product_identity": c.triple_product_identity,
                    "triple_transitive": c.triple_transitive,
                    "epimorphism_onto_triple_group": c.epimorphism_onto_triple_group,
                    "multiplication_respected": c.multiplication_respected,
                    "note": c.note,
                }
                for c in self.checks
            ],
        }


def verify_theorem2(
    t: SingularityType, degree: int, group_cap: int = VERIFY_GROUP_CAP
) -> TheoremReport:
    """Check, for every enumerated cover: the beta degree divides the cover
    degree; and for triple-valued beta, that the block action is a surjective
    homomorphism onto the triple's group (generator surjectivity always; the
    full multiplication table only while the group order stays under the cap).
    """
    covers = enumerate_covers(t, degree)
    checks = []
    violations = []
    for idx, cover in enumerate(covers):
        b = beta(cover)
        divides = degree % b.degree == 0
        if not divides:
            violations.append(f"cover {idx}: beta degree {b.degree} does not divide {degree}")
        if isinstance(b, PowerMapBeta):
            checks.append(
                TheoremCheck(cover_index=idx, beta_degree=b.degree, divides=divides,
                             note="power-map")
            )
            continue
        center = center_subgroup(cover)
        blocks = blocks_from_central(center.z)
        triple = b.triple
        prod_ok = compose(triple.sigma0, triple.sigma1) == triple.sigma_inf
        trans_ok = triple.is_transitive()
        gens = list(cover.image_tuple())
        try:
            block_gens = [action_on_blocks(g, blocks) for g in gens]
            image_group = group_elements(block_gens, degree=blocks.block_count)
            triple_group = group_elements([triple.sigma0, triple.sigma1])
            epi_ok = image_group == triple_group
        except BlocksNotPreserved as exc:  # would falsify the theorem
            epi_ok = False
            violations.append(f"cover {idx}: block action failed: {exc}")
        mult_ok: bool | None = None
        note = ""
        try:
            full = group_elements(gens, cap=group_cap, degree=cover.degree)
        except GroupTooLarge:
            full = None
            note = f"group order above {group_cap}; multiplication table skipped"
        if full is not None:
            try:
                act = {g: action_on_blocks(g, blocks) for g in full}
                mult_ok = all(
                    act[compose(x, y)] == compose(act[x], act[y])
                    for x in full
                    for y in full
                )
            except BlocksNotPreserved:
                mult_ok = False
        if not prod_ok:
            violations.append(f"cover {idx}: block triple product is not the identity")
        if not trans_ok:
            violations.append(f"cover {idx}: block triple is not transitive")
        if not epi_ok:
            violations.append(f"cover {idx}: block action is not onto the triple group")
        if mult_ok is False:
            violations.append(f"cover {idx}: block action is not multiplicative")
        checks.append(
            TheoremCheck(
                cover_index=idx,
                beta_degree=b.degree,
                divides=divides,
                triple_product_identity=prod_ok,
                triple_transitive=trans_ok,
                epimorphism_onto_triple_group=epi_ok,
                multiplication_respected=mult_ok,
                note=note,
            )
        )
    return TheoremReport(
        singularity=t.name,
        degree=degree,
        checks=tuple(checks),
        violations=tuple(violations),
    )
