"""Dominance order, the weight set Omega(lambda) and weight multiplicities.

Weights of the dual group live in X∨; the roots of the dual group are the
coroots, so Freudenthal's recursion and Weyl's dimension formula run over R∨
with rho∨ (labels all equal to one) in the role of rho.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InvariantViolation, NotDominant
from .root_datum import RootDatum, Vector, canonical_order, rho_pair2_labels
from .weyl import dominant_rep_labels, is_dominant_labels, orbit_labels


def _q_plus_coords(datum: RootDatum, lab: Sequence[int]) -> Vector | None:
    """Simple-coroot coordinates if ``lab`` lies in Q∨_+, else None."""
    c = datum.coroot_coords_of_labels(lab)
    if all(x.denominator == 1 and x >= 0 for x in c):
        return tuple(int(x) for x in c)
    return None


def leq_labels(datum: RootDatum, low: Sequence[int], high: Sequence[int]) -> bool:
    return _q_plus_coords(datum, tuple(h - l for h, l in zip(high, low))) is not None


def dominance_leq(datum: RootDatum, lower: Sequence[int], upper: Sequence[int]) -> bool:
    """True iff ``upper - lower`` is a nonnegative integer combination of simple coroots."""
    return leq_labels(datum, datum.labels(lower), datum.labels(upper))


def _require_dominant(datum: RootDatum, lam: Sequence[int]) -> Vector:
    lab = datum.labels(lam)
    if not is_dominant_labels(lab):
        raise NotDominant(f"{tuple(lam)} is not dominant")
    return lab


def dominant_below_labels(datum: RootDatum, lam: Sequence[int]) -> tuple[Vector, ...]:
    """Dominant weights mu <= lam (labels), decreasing 2<rho,.> order.

    Between comparable dominant weights there is always a chain of dominant
    weights whose consecutive differences are positive coroots, so the search
    only ever subtracts positive coroots and keeps dominant results.
    """
    lam = tuple(lam)
    cache = datum._cache.setdefault("dom_below", {})
    hit = cache.get(lam)
    if hit is not None:
        return hit
    seen = {lam}
    frontier = [lam]
    coroots = datum._positive_coroot_labels
    while frontier:
        nxt = []
        for v in frontier:
            for c in coroots:
                u = tuple(x - y for x, y in zip(v, c))
                if u not in seen and is_dominant_labels(u):
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    out = tuple(sorted(seen, key=lambda v: (rho_pair2_labels(datum, v), v), reverse=True))
    cache[lam] = out
    return out


def in_omega_labels(datum: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> bool:
    return leq_labels(datum, dominant_rep_labels(datum, nu), lam)


def omega_labels(datum: RootDatum, lam: Sequence[int]) -> list[Vector]:
    out = []
    for mu in dominant_below_labels(datum, lam):
        out.extend(orbit_labels(datum, mu))
    return out


def omega_set(datum: RootDatum, lam: Sequence[int]) -> list[Vector]:
    """Omega(lam) = {nu : w nu <= lam for all w}, in canonical order."""
    lab = _require_dominant(datum, lam)
    return canonical_order(datum, (datum.from_labels(v) for v in omega_labels(datum, lab)))


def dominant_weights_below(datum: RootDatum, lam: Sequence[int]) -> list[Vector]:
    lab = _require_dominant(datum, lam)
    return canonical_order(datum, (datum.from_labels(v) for v in dominant_below_labels(datum, lab)))


# --------------------------------------------------------------------------
# Freudenthal


def _freudenthal(datum: RootDatum, lam: Vector) -> dict[Vector, int]:
    cache = datum._cache.setdefault("freudenthal", {})
    hit = cache.get(lam)
    if hit is not None:
        return hit

    def shifted_norm(v):
        s = tuple(x + 1 for x in v)
        return datum.form_labels(s, s)

    top = shifted_norm(lam)
    mult: dict[Vector, int] = {}
    coroots = datum._positive_coroot_labels
    for nu in dominant_below_labels(datum, lam):  # decreasing height
        if nu == lam:
            mult[nu] = 1
            continue
        acc = Fraction(0)
        for c in coroots:
            k = 1
            while True:
                w = tuple(x + k * y for x, y in zip(nu, c))
                d = dominant_rep_labels(datum, w)
                m = mult.get(d)
                if m is None:
                    # Omega is saturated: once a string leaves it, it never re-enters
                    break
                acc += m * datum.form_labels(w, c)
                k += 1
        denom = top - shifted_norm(nu)
        val = 2 * acc / denom
        if val.denominator != 1 or val < 0:
            raise InvariantViolation(f"Freudenthal produced {val} at {nu} for {lam}")
        mult[nu] = int(val)
    cache[lam] = mult
    return mult


def weight_multiplicity(datum: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> int:
    """m_lam(nu): dimension of the nu weight space of V(lam)."""
    lab = _require_dominant(datum, lam)
    return mult_labels(datum, lab, datum.labels(nu))


def mult_labels(datum: RootDatum, lam: Vector, nu: Sequence[int]) -> int:
    table = _freudenthal(datum, tuple(lam))
    return table.get(dominant_rep_labels(datum, nu), 0)


def weyl_dimension_labels(datum: RootDatum, lam: Sequence[int]) -> int:
    num, den = 1, 1
    for a in datum.positive_roots:
        num *= sum(x * (y + 1) for x, y in zip(a, lam))
        den *= sum(a)
    q, r = divmod(num, den)
    if r:
        raise InvariantViolation("Weyl dimension not integral")
    return q


def weyl_dimension(datum: RootDatum, lam: Sequence[int]) -> int:
    return weyl_dimension_labels(datum, _require_dominant(datum, lam))


@dataclass(frozen=True)
class WeightDiagram:
    """Dominant multiplicities of V(highest); the full diagram is built on demand."""

    highest: Vector
    dominant: Mapping[Vector, int]
    datum: RootDatum

    def full(self) -> dict[Vector, int]:
        out = {}
        d = self.datum
        for mu, m in self.dominant.items():
            for v in orbit_labels(d, d.labels(mu)):
                out[d.from_labels(v)] = m
        return {k: out[k] for k in canonical_order(d, out)}

    @property
    def dimension(self) -> int:
        return sum(self.full().values())


def weight_diagram(datum: RootDatum, lam: Sequence[int]) -> WeightDiagram:
    lab = _require_dominant(datum, lam)
    table = _freudenthal(datum, lab)
    dom = {datum.from_labels(k): v for k, v in table.items()}
    return WeightDiagram(tuple(lam), {k: dom[k] for k in canonical_order(datum, dom)}, datum)


def character_labels(datum: RootDatum, lam: Vector) -> dict[Vector, int]:
    """Full character of V(lam) as labels -> multiplicity."""
    out = {}
    for mu, m in _freudenthal(datum, tuple(lam)).items():
        for v in orbit_labels(datum, mu):
            out[v] = m
    return out


def decompose_character(datum: RootDatum, char: Mapping[Vector, int]) -> dict[Vector, int]:
    """Write a W-invariant character (labels -> mult) as a sum of irreducible characters.

    Peels off the highest remaining dominant weight repeatedly.  Raises
    InvariantViolation if the input is not a nonnegative combination.
    """
    rest = {k: v for k, v in char.items() if v}
    out: dict[Vector, int] = {}
    while rest:
        top = max(
            (k for k in rest if is_dominant_labels(k)),
            key=lambda v: (rho_pair2_labels(datum, v), v),
        )
        c = rest[top]
        if c < 0:
            raise InvariantViolation(f"negative multiplicity at {top}")
        out[top] = c
        for k, m in character_labels(datum, top).items():
            r = rest.get(k, 0) - c * m
            if r:
                rest[k] = r
            else:
                rest.pop(k, None)
    return out
