"""Belyi permutation triples (dessins d'enfants): genus, two-vs-three critical
values, equivalence up to sheet relabeling, and enumeration at small degree."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DegreeMismatch, DegreeTooLargeForCanonicalization, NotTransitive
from .fpgroups import Presentation, enumerate_homs
from .perms import (
    CycleType,
    Permutation,
    canonical_tuple,
    compose,
    cycle_type,
    is_transitive,
)

ENUMERATION_DEGREE_CAP = 6


class BelyiClass(Enum):
    BEL2 = "Bel2"
    BEL3 = "Bel3"


@dataclass(frozen=True)
class BelyiTriple:
    """A pair (sigma0, sigma1) of equal degree; sigma_inf = sigma0 * sigma1 is
    derived on demand (apply sigma0 first, then sigma1)."""

    sigma0: Permutation
    sigma1: Permutation

    def __post_init__(self):
        if self.sigma0.degree != self.sigma1.degree:
            raise DegreeMismatch(
                f"degrees differ: {self.sigma0.degree} vs {self.sigma1.degree}"
            )

    @property
    def degree(self) -> int:
        return self.sigma0.degree

    @property
    def sigma_inf(self) -> Permutation:
        return compose(self.sigma0, self.sigma1)

    def is_transitive(self) -> bool:
        return is_transitive([self.sigma0, self.sigma1])

    def cycle_types(self) -> tuple[CycleType, CycleType, CycleType]:
        return (cycle_type(self.sigma0), cycle_type(self.sigma1), cycle_type(self.sigma_inf))

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "sigma0": self.sigma0.to_json(),
            "sigma1": self.sigma1.to_json(),
        }

    @staticmethod
    def from_json(data) -> "BelyiTriple":
        s0 = Permutation.from_json(data["sigma0"])
        s1 = Permutation.from_json(data["sigma1"])
        t = BelyiTriple(s0, s1)
        if "degree" in data and int(data["degree"]) != t.degree:
            raise ValueError("stated degree does not match the permutations")
        return t


def genus(t: BelyiTriple) -> int:
    """Genus of the covering curve: 2 - 2g = k0 + k1 + k_inf - n."""
    if not t.is_transitive():
        raise NotTransitive("the pair does not generate a transitive group")
    n = t.degree
    k = sum(ct.count for ct in t.cycle_types())
    two_minus_2g = k - n
    g2 = 2 - two_minus_2g
    assert g2 >= 0 and g2 % 2 == 0, (n, k)
    return g2 // 2


def classify(t: BelyiTriple) -> BelyiClass:
    """BEL3 iff all of sigma0, sigma1, sigma_inf are nontrivial."""
    if t.sigma0.is_identity() or t.sigma1.is_identity() or t.sigma_inf.is_identity():
        return BelyiClass.BEL2
    return BelyiClass.BEL3


def equivalent(t1: BelyiTriple, t2: BelyiTriple) -> bool:
    """True iff some single relabeling of sheets carries t1 to t2."""
    if t1.degree != t2.degree:
        raise DegreeMismatch(f"degrees differ: {t1.degree} vs {t2.degree}")
    c1 = canonical_tuple((t1.sigma0, t1.sigma1))
    c2 = canonical_tuple((t2.sigma0, t2.sigma1))
    return c1 == c2


def power_map(k: int) -> BelyiTriple:
    """The degree-k power-map triple: a k-cycle paired with the identity."""
    if k < 1:
        raise ValueError("power map degree must be at least 1")
    kcycle = Permutation.from_cycles(k, [tuple(range(1, k + 1))])
    return BelyiTriple(kcycle, Permutation.identity(k))


@dataclass(frozen=True)
class DessinClass:
    """One simultaneous-conjugacy class of transitive pairs, by canonical form."""

    sigma0: Permutation
    sigma1: Permutation
    genus: int
    cycle_types: tuple[CycleType, CycleType, CycleType]

    @property
    def degree(self) -> int:
        return self.sigma0.degree

    @property
    def triple(self) -> BelyiTriple:
        return BelyiTriple(self.sigma0, self.sigma1)


def enumerate_belyi(
    n: int, genus0_only: bool = False, strict_bel3: bool = False
) -> list[DessinClass]:
    """All classes of transitive pairs of degree n meeting the filters,
    in canonical order."""
    if n > ENUMERATION_DEGREE_CAP:
        raise DegreeTooLargeForCanonicalization(
            f"degree {n} exceeds the enumeration cap {ENUMERATION_DEGREE_CAP}"
        )
    free_pair = Presentation(generators=("s0", "s1"))
    out = []
    for asg in enumerate_homs(free_pair, n, transitive=True, up_to_conjugacy=True):
        t = BelyiTriple(asg["s0"], asg["s1"])
        g = genus(t)
        if genus0_only and g != 0:
            continue
        if strict_bel3 and classify(t) is not BelyiClass.BEL3:
            continue
        out.append(
            DessinClass(sigma0=t.sigma0, sigma1=t.sigma1, genus=g, cycle_types=t.cycle_types())
        )
    return out
