"""Weyl group action on coweights.

A Weyl group element is a ``WeylWord``: a tuple of 0-based simple reflection
indices ``(i1, ..., ik)`` standing for ``s_i1 s_i2 ... s_ik`` (so the last
letter acts first).  Canonical words are the lexicographically least reduced
words.
"""

from __future__ import annotations

from typing import Sequence

from .errors import GroupTooLarge
from .root_datum import RootDatum, Vector, canonical_order, weyl_group_order

WeylWord = tuple[int, ...]

DEFAULT_W_CAP = 51840


def reflect_labels(datum: RootDatum, lab: Sequence[int], i: int) -> Vector:
    c = lab[i]
    if c == 0:
        return tuple(lab)
    a = datum.cartan_matrix
    return tuple(x - c * a[k][i] for k, x in enumerate(lab))


def act_labels(datum: RootDatum, word: Sequence[int], lab: Sequence[int]) -> Vector:
    lab = tuple(lab)
    for i in reversed(word):
        lab = reflect_labels(datum, lab, i)
    return lab


def act(datum: RootDatum, word: Sequence[int], nu: Sequence[int]) -> Vector:
    """w(nu) for a coweight in X∨ coordinates."""
    return datum.from_labels(act_labels(datum, word, datum.labels(nu)))


def act_root(datum: RootDatum, word: Sequence[int], root: Sequence[int]) -> Vector:
    """w(alpha) for a root in simple-root coordinates."""
    root = tuple(root)
    for i in reversed(word):
        root = datum._reflect_root(root, i)
    return root


def is_dominant_labels(lab: Sequence[int]) -> bool:
    return all(x >= 0 for x in lab)


def is_dominant(datum: RootDatum, nu: Sequence[int]) -> bool:
    return is_dominant_labels(datum.labels(nu))


def dominant_labels(datum: RootDatum, lab: Sequence[int]) -> tuple[Vector, WeylWord]:
    """Greedy reflection at the first negative label.

    Returns ``(dom, word)`` with ``dom = word(lab)``.
    """
    lab = tuple(lab)
    letters = []
    while True:
        i = next((k for k, x in enumerate(lab) if x < 0), None)
        if i is None:
            return lab, tuple(reversed(letters))
        lab = reflect_labels(datum, lab, i)
        letters.append(i)


def dominant_rep_labels(datum: RootDatum, lab: Sequence[int]) -> Vector:
    cache = datum._cache.setdefault("domrep", {})
    lab = tuple(lab)
    hit = cache.get(lab)
    if hit is None:
        hit = cache[lab] = dominant_labels(datum, lab)[0]
    return hit


def dominant_representative(datum: RootDatum, nu: Sequence[int]) -> tuple[Vector, WeylWord]:
    dom, word = dominant_labels(datum, datum.labels(nu))
    return datum.from_labels(dom), word


def orbit_labels(datum: RootDatum, lab: Sequence[int]) -> tuple[Vector, ...]:
    """W-orbit of a labels vector, memoized on its dominant representative."""
    dom = dominant_rep_labels(datum, lab)
    cache = datum._cache.setdefault("orbit", {})
    hit = cache.get(dom)
    if hit is not None:
        return hit
    seen = {dom}
    frontier = [dom]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(datum.rank):
                if v[i] > 0:  # only walk downward from the dominant element
                    u = reflect_labels(datum, v, i)
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
        frontier = nxt
    out = tuple(sorted(seen, key=lambda v: _label_key(datum, v), reverse=True))
    cache[dom] = out
    return out


def _label_key(datum: RootDatum, lab: Vector):
    return (sum(a * x for a, x in zip(datum.rho2, lab)), lab)


def orbit(datum: RootDatum, nu: Sequence[int]) -> list[Vector]:
    """W·nu in canonical order."""
    return canonical_order(datum, (datum.from_labels(v) for v in orbit_labels(datum, datum.labels(nu))))


def stabilizer_order(datum: RootDatum, nu: Sequence[int]) -> int:
    return weyl_group_order(datum.cartan) // len(orbit_labels(datum, datum.labels(nu)))


def _rho_dual_labels(datum: RootDatum) -> Vector:
    return (1,) * datum.rank


def word_length(datum: RootDatum, word: Sequence[int]) -> int:
    """Coxeter length: number of positive roots sent to negative roots by w^{-1}."""
    v = act_labels(datum, word, _rho_dual_labels(datum))
    return sum(1 for a in datum.positive_roots if sum(x * y for x, y in zip(a, v)) < 0)


def canonical_word(datum: RootDatum, word: Sequence[int]) -> WeylWord:
    """Lexicographically least reduced word for the element ``word``."""
    return _word_from_regular(datum, act_labels(datum, word, _rho_dual_labels(datum)))


def _word_from_regular(datum: RootDatum, v: Vector) -> WeylWord:
    # w is determined by v = w(rho∨); a left descent i has <alpha_i, v> < 0
    letters = []
    while True:
        i = next((k for k, x in enumerate(v) if x < 0), None)
        if i is None:
            return tuple(letters)
        letters.append(i)
        v = reflect_labels(datum, v, i)


def elements(datum: RootDatum, cap: int = DEFAULT_W_CAP) -> list[WeylWord]:
    """All of W as canonical words, ordered by (length, word)."""
    order = weyl_group_order(datum.cartan)
    if order > cap:
        raise GroupTooLarge(f"|W| = {order} exceeds cap {cap}")
    cached = datum._cache.get("W")
    if cached is None:
        rho = _rho_dual_labels(datum)
        seen = {rho}
        frontier = [rho]
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(datum.rank):
                    u = reflect_labels(datum, v, i)
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        words = [_word_from_regular(datum, v) for v in seen]
        if len(words) != order:
            raise AssertionError("Weyl group enumeration size mismatch")
        cached = datum._cache["W"] = sorted(words, key=lambda w: (len(w), w))
    return list(cached)


def longest_element(datum: RootDatum) -> WeylWord:
    return _word_from_regular(datum, tuple(-x for x in _rho_dual_labels(datum)))


def inverse(word: Sequence[int]) -> WeylWord:
    return tuple(reversed(word))


def partial_root_sum(datum: RootDatum, word: Sequence[int]) -> Vector:
    """Sum of the positive roots alpha with w(alpha) positive (simple-root coordinates)."""
    total = [0] * datum.rank
    for a in datum.positive_roots:
        if all(x >= 0 for x in act_root(datum, word, a)):
            for k, x in enumerate(a):
                total[k] += x
    return tuple(total)


def rho_plus_inverse_rho2(datum: RootDatum, word: Sequence[int]) -> Vector:
    """2rho + w^{-1}(2rho) in simple-root coordinates; equals 2*partial_root_sum."""
    w_inv_rho2 = act_root(datum, inverse(word), datum.rho2)
    return tuple(a + b for a, b in zip(datum.rho2, w_inv_rho2))
