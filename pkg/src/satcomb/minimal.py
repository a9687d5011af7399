"""Minimal nonzero dominant coweights and short-coroot descent.

The set M of minimal elements of X∨_+ minus zero splits into minuscule
coweights (all root pairings in {0, ±1}) and quasi-minuscule ones (the coroot
of a maximal root).  Every other dominant coweight can be walked down to M by
removing short coroots while staying dominant, which yields a sequence over M
together with a dominant path reaching it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import InvariantViolation, NotDominant, NotMaximalRoot
from .root_datum import RootDatum, Vector, canonical_order, format_root
from .weights import dominant_below_labels
from .weyl import dominant_rep_labels, is_dominant_labels

MINUSCULE = "minuscule"
QUASI_MINUSCULE = "quasi-minuscule"
NOT_MINIMAL = "not-minimal"
ZERO = "zero"


@dataclass(frozen=True)
class MinimalClass:
    tag: str
    gamma: Vector | None = None  # maximal root, simple-root coordinates
    witness: Vector | None = None  # dominant nonzero coweight strictly below

    @property
    def in_m(self) -> bool:
        return self.tag in (MINUSCULE, QUASI_MINUSCULE)

    def as_json(self) -> dict:
        out = {"class": self.tag}
        if self.gamma is not None:
            out["gamma"] = format_root(self.gamma)
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


def _dominant_labels(datum: RootDatum, mu: Sequence[int]) -> Vector:
    lab = datum.labels(mu)
    if not is_dominant_labels(lab):
        raise NotDominant(f"{tuple(mu)} is not dominant")
    return lab


def classify_labels(datum: RootDatum, lab: Vector) -> MinimalClass:
    cache = datum._cache.setdefault("classify", {})
    hit = cache.get(lab)
    if hit is not None:
        return hit
    if not any(lab):
        res = MinimalClass(ZERO)
    else:
        below = [v for v in dominant_below_labels(datum, lab) if v != lab and any(v)]
        if below:
            res = MinimalClass(NOT_MINIMAL, witness=datum.from_labels(below[0]))
        else:
            pairs = [(sum(a * x for a, x in zip(root, lab)), root) for root in datum.positive_roots]
            big = [root for p, root in pairs if p >= 2]
            if not big:
                res = MinimalClass(MINUSCULE)
            else:
                if len(big) != 1:
                    raise InvariantViolation(f"{lab}: several roots pair to >= 2")
                gamma = big[0]
                k = datum.root_factor(gamma)
                if gamma != datum.highest_root(k):
                    raise InvariantViolation(f"{gamma} is not the maximal root")
                coroot = datum.coroot_to_labels(datum.positive_coroots[datum.positive_roots.index(gamma)])
                if coroot != lab:
                    raise InvariantViolation(f"{lab} is not the coroot of {gamma}")
                res = MinimalClass(QUASI_MINUSCULE, gamma=gamma)
    cache[lab] = res
    return res


def classify(datum: RootDatum, mu: Sequence[int]) -> MinimalClass:
    return classify_labels(datum, _dominant_labels(datum, mu))


def _factor_candidates(datum: RootDatum, k: int) -> list[dict[int, int]]:
    """Dominant label patterns on factor k with <theta_k, .> <= 2 (theta_k maximal root)."""
    idx = [i for i in range(datum.rank) if datum.factor_of[i] == k]
    theta = datum.highest_root(k)
    out = []
    for combo in itertools.product(range(3), repeat=len(idx)):
        if sum(theta[i] * c for i, c in zip(idx, combo)) <= 2:
            out.append(dict(zip(idx, combo)))
    return out


def minimal_elements(datum: RootDatum) -> list[tuple[Vector, MinimalClass]]:
    """The set M, in canonical order.

    Any mu in M pairs to at most 2 with every root, so the search is confined
    to the finite box cut out by the maximal roots of the factors.
    """
    cached = datum._cache.get("M")
    if cached is not None:
        return list(cached)
    per_factor = [_factor_candidates(datum, k) for k in range(datum.n_factors)]
    found = []
    for parts in itertools.product(*per_factor):
        lab = [0] * datum.rank
        for part in parts:
            for i, c in part.items():
                lab[i] = c
        lab = tuple(lab)
        if not any(lab) or not datum.in_lattice(lab):
            continue
        cls = classify_labels(datum, lab)
        if cls.in_m:
            found.append((datum.from_labels(lab), cls))
    order = canonical_order(datum, (c for c, _ in found))
    lookup = dict(found)
    cached = datum._cache["M"] = tuple((c, lookup[c]) for c in order)
    return list(cached)


def _root_orbit(datum: RootDatum, root: Vector) -> set[Vector]:
    seen = {root}
    frontier = [root]
    while frontier:
        nxt = []
        for b in frontier:
            for i in range(datum.rank):
                g = datum._reflect_root(b, i)
                if g not in seen:
                    seen.add(g)
                    nxt.append(g)
        frontier = nxt
    return seen


def delta_gamma(datum: RootDatum, gamma: Sequence[int]) -> list[int]:
    """Indices (0-based) of the simple roots W-conjugate to the maximal root gamma."""
    gamma = tuple(gamma)
    if gamma not in datum.positive_roots or gamma != datum.highest_root(datum.root_factor(gamma)):
        raise NotMaximalRoot(f"{gamma} is not the maximal root of its factor")
    orb = _root_orbit(datum, gamma)
    return [i for i in range(datum.rank) if tuple(int(k == i) for k in range(datum.rank)) in orb]


def delta_gamma_sigma(datum: RootDatum, gamma: Sequence[int], sigma: Sequence[int]) -> list[int]:
    """The alpha in Delta_gamma with <alpha, sigma> > 0."""
    lab = _dominant_labels(datum, sigma)
    return [i for i in delta_gamma(datum, gamma) if lab[i] > 0]


def _short_coroot_labels(datum: RootDatum) -> list[Vector]:
    cached = datum._cache.get("short_coroots")
    if cached is None:
        cached = datum._cache["short_coroots"] = [
            lab
            for c, lab in zip(datum.positive_coroots, datum._positive_coroot_labels)
            if datum.coroot_norm(c) == 2
        ]
    return cached


def descent_labels(datum: RootDatum, lab: Vector) -> Vector | None:
    if classify_labels(datum, lab).tag in (MINUSCULE, QUASI_MINUSCULE, ZERO):
        return None
    best = None
    for c in _short_coroot_labels(datum):
        rest = tuple(x - y for x, y in zip(lab, c))
        if is_dominant_labels(rest):
            key = datum.from_labels(rest)
            if best is None or key > best[0]:
                best = (key, c)
    if best is None:
        raise InvariantViolation(f"no short coroot descent from {lab}")
    return best[1]


def short_coroot_descent(datum: RootDatum, lam: Sequence[int]) -> Vector | None:
    """A positive short coroot beta∨ with lam - beta∨ dominant, or None when lam is in M or zero.

    Among valid coroots the one leaving the lexicographically greatest
    remainder (in X∨ coordinates) is returned.
    """
    c = descent_labels(datum, _dominant_labels(datum, lam))
    return None if c is None else datum.from_labels(c)


@dataclass(frozen=True)
class Decomposition:
    mu_seq: tuple[Vector, ...]
    path: "object"  # PathSpec
    norms: tuple  # squared norms along the descent, strictly decreasing


def decompose(datum: RootDatum, lam: Sequence[int]) -> Decomposition:
    """Sequence over M with a dominant path from 0 to lam.

    The remainder left after the descent comes first, then the dominant
    representatives of the removed coroots in reverse discovery order, so the
    path climbs back up through the descent's intermediate coweights.
    """
    from .paths import PathSpec

    lab = _dominant_labels(datum, lam)
    chain = [lab]
    removed = []
    norms = [datum.form_labels(lab, lab)]
    while True:
        c = descent_labels(datum, chain[-1])
        if c is None:
            break
        nxt = tuple(x - y for x, y in zip(chain[-1], c))
        removed.append(c)
        chain.append(nxt)
        n = datum.form_labels(nxt, nxt)
        if n >= norms[-1]:
            raise InvariantViolation("descent did not decrease the norm")
        norms.append(n)
    base = chain[-1]
    mu_seq, steps = [], []
    if any(base):
        mu_seq.append(datum.from_labels(base))
        steps.append(datum.from_labels(base))
    for c in reversed(removed):
        mu_seq.append(datum.from_labels(dominant_rep_labels(datum, c)))
        steps.append(datum.from_labels(c))
    path = PathSpec(tuple(mu_seq), tuple(steps), (None,) * len(steps))
    return Decomposition(tuple(mu_seq), path, tuple(norms))
