"""mu-paths: piecewise-linear paths whose i-th step lies in Omega(mu_i).

A nonzero step is a straight segment.  A zero step (allowed only for a
quasi-minuscule mu_i = gamma∨) dips from sigma to sigma - alpha∨/2 and back,
where alpha is a simple root conjugate to gamma; it stays dominant iff
``<alpha, sigma> >= 1``.

Counting dominant paths from 0 to nu gives the multiplicity of V(nu) in
V(mu_1) ⊗ ... ⊗ V(mu_n); :func:`iterated_tensor` computes the same numbers
by folding the minuscule / quasi-minuscule tensor rules instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    ElementNotMinimal,
    InvalidPath,
    InvariantViolation,
    NotDominant,
    StepNotInOmega,
)
from .minimal import QUASI_MINUSCULE, MinimalClass, classify_labels, delta_gamma
from .root_datum import RootDatum, Vector, canonical_order, rho_pair2_labels
from .weights import in_omega_labels, weyl_dimension_labels
from .weyl import is_dominant_labels, orbit_labels

Multiset = dict  # dominant coweight (X∨ coords) -> positive multiplicity


@dataclass(frozen=True)
class PathSpec:
    """A mu-path. ``zero_labels[i]`` is the simple-root index used by a zero step, else None."""

    mu_seq: tuple[Vector, ...]
    steps: tuple[Vector, ...]
    zero_labels: tuple[int | None, ...]

    @property
    def vertices(self) -> tuple[Vector, ...]:
        r = len(self.mu_seq[0]) if self.mu_seq else 0
        out = [(0,) * r]
        for nu in self.steps:
            out.append(tuple(a + b for a, b in zip(out[-1], nu)))
        return tuple(out)

    @property
    def end(self) -> Vector:
        return self.vertices[-1]

    def as_json(self) -> dict:
        return {
            "mu": [list(m) for m in self.mu_seq],
            "steps": [list(s) for s in self.steps],
            "zero_labels": [None if z is None else f"alpha{z + 1}" for z in self.zero_labels],
            "vertices": [list(v) for v in self.vertices],
        }


def _minimal_info(datum: RootDatum, mu: Sequence[int]) -> tuple[Vector, MinimalClass]:
    lab = datum.labels(mu)
    if not is_dominant_labels(lab):
        raise ElementNotMinimal(f"{tuple(mu)} is not dominant")
    cls = classify_labels(datum, lab)
    if not cls.in_m:
        raise ElementNotMinimal(f"{tuple(mu)} is not a minimal coweight ({cls.tag})")
    return lab, cls


def _step_options(datum: RootDatum, lab: Vector, cls: MinimalClass) -> list[tuple[Vector, int | None]]:
    """(step labels, zero label) choices for one mu in M, in canonical order."""
    key = ("steps", lab)
    hit = datum._cache.get(key)
    if hit is not None:
        return hit
    opts = [(v, None) for v in orbit_labels(datum, lab)]
    if cls.tag == QUASI_MINUSCULE:
        zero = (0,) * datum.rank
        opts += [(zero, i) for i in delta_gamma(datum, cls.gamma)]

    def sort_key(opt):
        v, z = opt
        coords = datum.from_labels(v)
        return (-rho_pair2_labels(datum, v), tuple(-c for c in coords), -1 if z is None else z)

    opts.sort(key=sort_key)
    datum._cache[key] = opts
    return opts


def validate_path(datum: RootDatum, path: PathSpec) -> None:
    n = len(path.mu_seq)
    if len(path.steps) != n or len(path.zero_labels) != n:
        raise InvalidPath("mu_seq, steps and zero_labels must have equal length")
    for i, (mu, nu, z) in enumerate(zip(path.mu_seq, path.steps, path.zero_labels)):
        lab, cls = _minimal_info(datum, mu)
        nlab = datum.labels(nu)
        if not in_omega_labels(datum, lab, nlab):
            raise InvalidPath(f"step {i}: {tuple(nu)} not in Omega({tuple(mu)})")
        if any(nlab):
            if z is not None:
                raise InvalidPath(f"step {i}: nonzero step carries a zero label")
        else:
            if cls.tag != QUASI_MINUSCULE:
                raise InvalidPath(f"step {i}: zero step requires a quasi-minuscule mu")
            if z not in delta_gamma(datum, cls.gamma):
                raise InvalidPath(f"step {i}: zero label must be a simple root conjugate to gamma")


def is_dominant_path(datum: RootDatum, path: PathSpec) -> bool:
    validate_path(datum, path)
    sigma = (0,) * datum.rank
    for nu, z in zip(path.steps, path.zero_labels):
        if z is not None and sigma[z] < 1:
            return False
        sigma = tuple(a + b for a, b in zip(sigma, datum.labels(nu)))
        if not is_dominant_labels(sigma):
            return False
    return True


def _prepare(datum: RootDatum, mu_seq: Sequence[Sequence[int]]):
    infos = [_minimal_info(datum, mu) for mu in mu_seq]
    opts = [_step_options(datum, lab, cls) for lab, cls in infos]
    # suffix[i] = mu_{i+1} + ... + mu_n  (labels)
    suffix = [(0,) * datum.rank]
    for lab, _ in reversed(infos):
        suffix.append(tuple(a + b for a, b in zip(suffix[-1], lab)))
    suffix.reverse()
    return infos, opts, suffix


def enumerate_paths(
    datum: RootDatum,
    mu_seq: Sequence[Sequence[int]],
    target: Sequence[int],
    dominant_only: bool = True,
) -> list[PathSpec]:
    """All mu-paths from 0 to ``target`` (only dominant ones if requested), canonical order."""
    mu_seq = tuple(tuple(m) for m in mu_seq)
    infos, opts, suffix = _prepare(datum, mu_seq)
    goal = datum.labels(target)
    n = len(mu_seq)
    out: list[PathSpec] = []
    steps: list[Vector] = []
    zeros: list[int | None] = []

    def rec(i: int, sigma: Vector):
        if i == n:
            if sigma == goal:
                out.append(PathSpec(mu_seq, tuple(datum.from_labels(s) for s in steps), tuple(zeros)))
            return
        for v, z in opts[i]:
            if dominant_only and z is not None and sigma[z] < 1:
                continue
            nxt = tuple(a + b for a, b in zip(sigma, v))
            if dominant_only and not is_dominant_labels(nxt):
                continue
            rest = tuple(g - x for g, x in zip(goal, nxt))
            if not in_omega_labels(datum, suffix[i + 1], rest):
                continue
            steps.append(v)
            zeros.append(z)
            rec(i + 1, nxt)
            steps.pop()
            zeros.pop()

    rec(0, (0,) * datum.rank)
    return out


def count_dominant_paths(datum: RootDatum, mu_seq: Sequence[Sequence[int]], nu: Sequence[int]) -> int:
    """Number of dominant mu-paths from 0 to nu."""
    goal = datum.labels(nu)
    if not is_dominant_labels(goal):
        raise NotDominant(f"{tuple(nu)} is not dominant")
    infos, opts, suffix = _prepare(datum, mu_seq)
    n = len(infos)
    memo: dict[tuple[int, Vector], int] = {}

    def count(i: int, sigma: Vector) -> int:
        if i == n:
            return int(sigma == goal)
        key = (i, sigma)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = 0
        for v, z in opts[i]:
            if z is not None and sigma[z] < 1:
                continue
            nxt = tuple(a + b for a, b in zip(sigma, v))
            if not is_dominant_labels(nxt):
                continue
            if not in_omega_labels(datum, suffix[i + 1], tuple(g - x for g, x in zip(goal, nxt))):
                continue
            total += count(i + 1, nxt)
        memo[key] = total
        return total

    return count(0, (0,) * datum.rank)


# --------------------------------------------------------------------------
# tensor rules


def _sorted_multiset(datum: RootDatum, counts: Mapping[Vector, int]) -> Multiset:
    coords = {datum.from_labels(k): v for k, v in counts.items() if v}
    return {k: coords[k] for k in canonical_order(datum, coords)}


def _tensor_labels(datum: RootDatum, lab: Vector, cls: MinimalClass, lam: Vector) -> dict[Vector, int]:
    out: dict[Vector, int] = {}
    for v in orbit_labels(datum, lab):
        s = tuple(a + b for a, b in zip(lam, v))
        if is_dominant_labels(s):
            out[s] = out.get(s, 0) + 1
    if cls.tag == QUASI_MINUSCULE:
        # a zero step survives iff the dip lam - alpha∨/2 is dominant, i.e. <alpha, lam> >= 1
        k = sum(1 for i in delta_gamma(datum, cls.gamma) if lam[i] >= 1)
        if k:
            out[lam] = out.get(lam, 0) + k
    return out


def tensor_with_minimal(
    datum: RootDatum,
    mu: Sequence[int],
    lam: Sequence[int] | Mapping[Sequence[int], int],
) -> Multiset:
    """V(mu) ⊗ V(lam) for mu in M; ``lam`` may also be a multiset of dominant coweights."""
    mlab, cls = _minimal_info(datum, mu)
    if isinstance(lam, Mapping):
        source = {datum.labels(k): v for k, v in lam.items()}
    else:
        source = {datum.labels(lam): 1}
    out: dict[Vector, int] = {}
    before = 0
    for l, m in source.items():
        if not is_dominant_labels(l):
            raise NotDominant(f"{datum.from_labels(l)} is not dominant")
        before += m * weyl_dimension_labels(datum, l)
        for k, c in _tensor_labels(datum, mlab, cls, l).items():
            out[k] = out.get(k, 0) + m * c
    after = sum(m * weyl_dimension_labels(datum, k) for k, m in out.items())
    if after != before * weyl_dimension_labels(datum, mlab):
        raise InvariantViolation("tensor rule does not conserve dimension")
    return _sorted_multiset(datum, out)


def iterated_tensor(datum: RootDatum, mu_seq: Sequence[Sequence[int]]) -> Multiset:
    """Multiplicities of V(lam) in V(mu_1) ⊗ ... ⊗ V(mu_n)."""
    current: Multiset = {(0,) * datum.rank: 1}
    for mu in mu_seq:
        current = tensor_with_minimal(datum, mu, current)
    return current


def stratum_dims_product(
    datum: RootDatum, mu_seq: Sequence[Sequence[int]], nu_seq: Sequence[Sequence[int]]
) -> int:
    """<rho, |nu•| + |mu•|>: the dimension of every component of the product stratum."""
    if len(mu_seq) != len(nu_seq):
        raise StepNotInOmega("mu and nu sequences differ in length")
    total2 = 0
    for mu, nu in zip(mu_seq, nu_seq):
        mlab = datum.labels(mu)
        nlab = datum.labels(nu)
        if not is_dominant_labels(mlab) or not in_omega_labels(datum, mlab, nlab):
            raise StepNotInOmega(f"{tuple(nu)} not in Omega({tuple(mu)})")
        total2 += rho_pair2_labels(datum, mlab) + rho_pair2_labels(datum, nlab)
    if total2 % 2:
        raise InvariantViolation("odd doubled stratum dimension")
    return total2 // 2
