"""The indexing category J.

Objects are pairs of finite sets ({1..m1}, {1..m2}); a morphism is a pair
of injections together with a bijection identifying the complements of
their images.  Hom sets are empty unless m2 - m1 = n2 - n1, which grades
the category over Z by degree(m1, m2) = m2 - m1.

Injections are stored as tuples of values, complement bijections as
association tuples sorted by key.  This makes equality decidable and all
enumerations deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterable


@dataclass(frozen=True, order=True)
class JObject:
    m1: int
    m2: int

    def __post_init__(self):
        if self.m1 < 0 or self.m2 < 0:
            raise ValueError("object sizes must be nonnegative")

    def degree(self) -> int:
        return self.m2 - self.m1

    def size(self) -> int:
        return max(self.m1, self.m2)

    def concat(self, other: "JObject") -> "JObject":
        return JObject(self.m1 + other.m1, self.m2 + other.m2)


@dataclass(frozen=True, order=True)
class JMorphism:
    source: JObject
    target: JObject
    alpha1: tuple  # values alpha1(1), ..., alpha1(m1)
    alpha2: tuple
    rho: tuple  # ((c, rho(c)), ...) sorted by c over n1 \ im(alpha1)

    def __post_init__(self):
        a, b = self.source, self.target
        if len(self.alpha1) != a.m1 or len(set(self.alpha1)) != a.m1:
            raise ValueError("alpha1 is not an injection of the right arity")
        if len(self.alpha2) != a.m2 or len(set(self.alpha2)) != a.m2:
            raise ValueError("alpha2 is not an injection of the right arity")
        if not all(1 <= v <= b.m1 for v in self.alpha1):
            raise ValueError("alpha1 out of range")
        if not all(1 <= v <= b.m2 for v in self.alpha2):
            raise ValueError("alpha2 out of range")
        comp1 = sorted(set(range(1, b.m1 + 1)) - set(self.alpha1))
        comp2 = set(range(1, b.m2 + 1)) - set(self.alpha2)
        keys = [k for k, _ in self.rho]
        vals = [v for _, v in self.rho]
        if keys != comp1 or sorted(vals) != sorted(comp2) or len(set(vals)) != len(vals):
            raise ValueError("rho is not a bijection of the complements")

    def rho_map(self) -> dict:
        return dict(self.rho)

    def apply1(self, i: int) -> int:
        return self.alpha1[i - 1]

    def apply2(self, i: int) -> int:
        return self.alpha2[i - 1]

    def is_identity(self) -> bool:
        return (
            self.source == self.target
            and self.alpha1 == tuple(range(1, self.source.m1 + 1))
            and self.alpha2 == tuple(range(1, self.source.m2 + 1))
        )

    def __repr__(self):
        return (
            f"JMorphism({self.source.m1},{self.source.m2})->({self.target.m1},"
            f"{self.target.m2});a1={self.alpha1};a2={self.alpha2};rho={self.rho}"
        )


def identity(a: JObject) -> JMorphism:
    return JMorphism(a, a, tuple(range(1, a.m1 + 1)), tuple(range(1, a.m2 + 1)), ())


def hom_nonempty(a: JObject, b: JObject) -> bool:
    return a.degree() == b.degree() and b.m1 >= a.m1


def hom_count(a: JObject, b: JObject) -> int:
    """|J(a, b)| by the closed form; zero when degrees differ or b is too small."""
    if not hom_nonempty(a, b):
        return 0
    c = b.m1 - a.m1
    return (
        factorial(b.m1) // factorial(b.m1 - a.m1)
        * (factorial(b.m2) // factorial(b.m2 - a.m2))
        * factorial(c)
    )


def enumerate_homs(a: JObject, b: JObject) -> list[JMorphism]:
    """All morphisms a -> b in a fixed lexicographic order."""
    if not hom_nonempty(a, b):
        return []
    out = []
    set1 = range(1, b.m1 + 1)
    set2 = range(1, b.m2 + 1)
    for alpha1 in itertools.permutations(set1, a.m1):
        comp1 = sorted(set(set1) - set(alpha1))
        for alpha2 in itertools.permutations(set2, a.m2):
            comp2 = sorted(set(set2) - set(alpha2))
            for image in itertools.permutations(comp2):
                rho = tuple(zip(comp1, image))
                out.append(JMorphism(a, b, alpha1, alpha2, rho))
    return out


def compose(g: JMorphism, f: JMorphism) -> JMorphism:
    """Composite g o f.

    The complement bijection agrees with g's on the complement of g's image
    and is transported through g on the part of g's image missed by f.
    """
    if f.target != g.source:
        raise ValueError("morphisms are not composable")
    alpha1 = tuple(g.apply1(v) for v in f.alpha1)
    alpha2 = tuple(g.apply2(v) for v in f.alpha2)
    c = g.target
    sigma = g.rho_map()
    rho_f = f.rho_map()
    beta1_image = {g.apply1(i): i for i in range(1, g.source.m1 + 1)}
    tau = []
    for z in sorted(set(range(1, c.m1 + 1)) - set(alpha1)):
        if z in beta1_image:
            w = beta1_image[z]  # w in n1 \ im(alpha1 of f)
            tau.append((z, g.apply2(rho_f[w])))
        else:
            tau.append((z, sigma[z]))
    return JMorphism(f.source, c, alpha1, alpha2, tuple(tau))


def objects_in_truncation(max_size: int) -> list[JObject]:
    return [JObject(m1, m2) for m1 in range(max_size + 1) for m2 in range(max_size + 1)]


def connected_components(max_size: int) -> dict[int, list[JObject]]:
    """Components of the truncation, by saturating the morphism-existence relation."""
    objs = objects_in_truncation(max_size)
    parent = {o: o for o in objs}

    def find(o):
        while parent[o] != o:
            parent[o] = parent[parent[o]]
            o = parent[o]
        return o

    for a in objs:
        for b in objs:
            if a is not b and (hom_nonempty(a, b) or hom_nonempty(b, a)):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
    comps: dict[JObject, list[JObject]] = {}
    for o in objs:
        comps.setdefault(find(o), []).append(o)
    out: dict[int, list[JObject]] = {}
    for members in comps.values():
        degs = {o.degree() for o in members}
        if len(degs) != 1:
            raise AssertionError("component mixes degrees")
        out[degs.pop()] = sorted(members)
    return out


def concat_morphisms(f: JMorphism, g: JMorphism) -> JMorphism:
    """Block sum f ⊔ g on the concatenated objects."""
    a, b = f.source.concat(g.source), f.target.concat(g.target)
    off1, off2 = f.target.m1, f.target.m2
    alpha1 = f.alpha1 + tuple(v + off1 for v in g.alpha1)
    alpha2 = f.alpha2 + tuple(v + off2 for v in g.alpha2)
    rho = dict(f.rho)
    rho.update({k + off1: v + off2 for k, v in g.rho})
    return JMorphism(a, b, alpha1, alpha2, tuple(sorted(rho.items())))


def block_swap(a: JObject, b: JObject) -> JMorphism:
    """The symmetry isomorphism b ⊔ a -> a ⊔ b."""
    src = b.concat(a)
    tgt = a.concat(b)
    alpha1 = tuple(range(a.m1 + 1, a.m1 + b.m1 + 1)) + tuple(range(1, a.m1 + 1))
    alpha2 = tuple(range(a.m2 + 1, a.m2 + b.m2 + 1)) + tuple(range(1, a.m2 + 1))
    return JMorphism(src, tgt, alpha1, alpha2, ())


def automorphisms(a: JObject) -> list[JMorphism]:
    """Aut(a) = Sigma_{m1} x Sigma_{m2}."""
    return enumerate_homs(a, a)


def second_variable_action(sigma: Iterable[int], x: JMorphism) -> JMorphism:
    """Postcompose x with the automorphism (id, sigma, -) of its target."""
    b = x.target
    sigma = tuple(sigma)
    aut = JMorphism(b, b, tuple(range(1, b.m1 + 1)), sigma, ())
    return compose(aut, x)
