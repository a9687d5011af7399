"""Acceptance criteria 1-10.

Each test prints one ``criterion N ... PASS|FAIL`` line (visible without -s)
and asserts.  All comparisons are exact integer or rational equalities.
Run directly with ``python tests/test_acceptance.py`` for the summary alone.
"""

from __future__ import annotations

import itertools
import os
import subprocess
import sys
import time
from fractions import Fraction

import pytest

import oracles
from satcomb import build, parse_datum
from satcomb.minimal import (
    MINUSCULE,
    QUASI_MINUSCULE,
    classify_labels,
    decompose,
    delta_gamma,
    minimal_elements,
    short_coroot_descent,
)
from satcomb.paths import count_dominant_paths, is_dominant_path, iterated_tensor
from satcomb.root_datum import coroot_of, is_short_coroot
from satcomb.satake import (
    constant_term_predicted,
    dominant_shell_labels,
    kostka_labels,
    stratum_dim,
    whittaker_predicted,
)
from satcomb.weights import mult_labels, omega_labels, weyl_dimension_labels
from satcomb.weyl import act, elements, partial_root_sum, rho_plus_inverse_rho2

_LINES: list[str] = []


@pytest.fixture
def emit(capsys):
    def _emit(n: int, title: str, ok: bool, detail: str) -> None:
        line = f"criterion {n:>2} {title}: {'PASS' if ok else 'FAIL'} ({detail})"
        _LINES.append(line)
        with capsys.disabled():
            print("\n" + line)

    return _emit


# rank <= 3 data at several isogenies, including intermediate lattices (rows in labels)
RANK_LE_3 = [
    "A1:sc", "A1:adj", "A2:sc", "A2:adj", "B2:sc", "B2:adj", "C2:sc", "C2:adj", "G2:sc",
    "A1xA1:sc", "A1xA1:adj", "A1xA1:lattice=2,0;0,1", "A1xA1:lattice=1,1;0,2",
    "A3:sc", "A3:adj", "A3:lattice=2,-1,0;-1,2,-1;0,1,0",
    "B3:sc", "B3:adj", "C3:sc", "C3:adj",
    "A1xA2:sc", "A1xA2:adj", "A1xB2:adj", "A1xA1xA1:adj", "A1xA1xA1:lattice=1,1,1;0,2,0;0,0,2",
]


# --------------------------------------------------------------------------


def test_criterion_01_kostka_identity(emit):
    types = ["A1:sc", "A1:adj", "A2:sc", "A2:adj", "A3:sc", "B2:sc", "C2:sc", "G2:sc"]
    t0 = time.perf_counter()
    pairs, bad = 0, []
    for name in types:
        d = parse_datum(name)
        shell = dominant_shell_labels(d, 12)
        for lam in shell:
            for mu in shell:
                pairs += 1
                if kostka_labels(d, lam, mu)(1) != mult_labels(d, lam, mu):
                    bad.append((name, lam, mu))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    emit(1, "K(1) = m", ok, f"{pairs} pairs over {len(types)} data, exact, {elapsed:.1f}s, violations={len(bad)}")
    assert not bad
    assert elapsed < 60


def test_criterion_02_root_sum_identity(emit):
    types = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]
    n, bad = 0, []
    for name in types:
        d = build(name)
        for w in elements(d):
            n += 1
            if tuple(2 * x for x in partial_root_sum(d, w)) != rho_plus_inverse_rho2(d, w):
                bad.append((name, w))
    emit(2, "sum of alpha in R+ ∩ w^-1 R+ = rho + w^-1 rho", not bad, f"{n} Weyl elements, exact, violations={len(bad)}")
    assert not bad


def test_criterion_03_dichotomy(emit):
    n, bad = 0, []
    for name in RANK_LE_3:
        d = parse_datum(name)
        for lam in oracles.norm_shell(d, 12):
            if not any(lam):
                continue
            n += 1
            cls = classify_labels(d, lam)
            if cls.in_m != oracles.is_minimal(d, lam):
                bad.append((name, lam, "minimality"))
                continue
            if not cls.in_m:
                continue
            pairs = {r: sum(a * x for a, x in zip(r, lam)) for r in d.positive_roots}
            mins = all(p <= 1 for p in pairs.values())
            big = [r for r, p in pairs.items() if p >= 2]
            quasi = (
                len(big) == 1
                and big[0] == d.highest_root(d.root_factor(big[0]))
                and d.labels(coroot_of(d, big[0])) == lam
            )
            if mins == quasi:
                bad.append((name, lam, "not exactly one alternative"))
            elif (cls.tag == MINUSCULE) != mins or (cls.tag == QUASI_MINUSCULE and cls.gamma != big[0]):
                bad.append((name, lam, "tag"))
    emit(3, "minimal = minuscule xor quasi-minuscule", not bad, f"{n} coweights, (lam,lam) <= 12, {len(RANK_LE_3)} data, violations={len(bad)}")
    assert not bad, bad[:5]


def test_criterion_04_short_coroot_descent(emit):
    n, bad = 0, []
    for name in RANK_LE_3:
        d = parse_datum(name)
        for lam in oracles.norm_shell(d, 12):
            if not any(lam) or classify_labels(d, lam).in_m:
                continue
            n += 1
            coords = d.from_labels(lam)
            beta = short_coroot_descent(d, coords)
            if beta is None or not is_short_coroot(d, beta):
                bad.append((name, lam, "descent"))
                continue
            if min(d.labels(tuple(x - y for x, y in zip(coords, beta)))) < 0:
                bad.append((name, lam, "remainder not dominant"))
                continue
            norms = decompose(d, coords).norms
            if not all(a > b for a, b in zip(norms, norms[1:])):
                bad.append((name, lam, "norm"))
    emit(4, "short coroot descent exists, norm strictly decreases", not bad, f"{n} non-minimal coweights, violations={len(bad)}")
    assert not bad, bad[:5]


def test_criterion_05_paths_equal_tensor(emit):
    n, seqs, bad = 0, 0, []
    for name in RANK_LE_3:
        d = parse_datum(name)
        max_len = 4 if d.rank <= 2 else 3
        m = [mu for mu, _ in minimal_elements(d)]
        for k in range(1, max_len + 1):
            for seq in itertools.product(m, repeat=k):
                seqs += 1
                tens = iterated_tensor(d, seq)
                dims = 1
                for mu in seq:
                    dims *= weyl_dimension_labels(d, d.labels(mu))
                if sum(c * weyl_dimension_labels(d, d.labels(nu)) for nu, c in tens.items()) != dims:
                    bad.append((name, seq, "dimension"))
                top = tuple(map(sum, zip(*(d.labels(mu) for mu in seq))))
                for nu_lab in oracles.dominant_below(d, top):
                    nu = d.from_labels(nu_lab)
                    n += 1
                    if count_dominant_paths(d, seq, nu) != tens.get(nu, 0):
                        bad.append((name, seq, nu))
    a1 = build("A1")
    anchor = iterated_tensor(a1, [(1,)] * 3)
    anchor_dim = sum(c * weyl_dimension_labels(a1, a1.labels(nu)) for nu, c in anchor.items())
    anchor_ok = anchor == {(3,): 1, (2,): 2, (1,): 3, (0,): 1} and anchor_dim == 27
    ok = not bad and anchor_ok
    emit(5, "dominant path count = tensor multiplicity", ok, f"{seqs} sequences, {n} (sequence, nu) pairs, dims exact, A1 anchor {'ok' if anchor_ok else 'wrong'}, violations={len(bad)}")
    assert anchor_ok
    assert not bad, bad[:5]


def test_criterion_06_decompose_witness(emit):
    n, bad = 0, []
    for name in RANK_LE_3:
        d = parse_datum(name)
        for lam in dominant_shell_labels(d, 12):
            if not any(lam):
                continue
            n += 1
            coords = d.from_labels(lam)
            dec = decompose(d, coords)
            if count_dominant_paths(d, dec.mu_seq, coords) < 1 or not is_dominant_path(d, dec.path) or dec.path.end != coords:
                bad.append((name, lam))
    emit(6, "decompose gives a dominant witness path", not bad, f"{n} coweights with 2<rho,lam> <= 12, violations={len(bad)}")
    assert not bad, bad[:5]


def test_criterion_07_quasi_minuscule_numerology(emit):
    types = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"]
    rows, bad = [], []
    for name in types:
        for iso in ("sc", "adj"):
            d = build(name, iso)
            for k in range(d.n_factors):
                gamma = d.highest_root(k)
                delta = len(delta_gamma(d, gamma))
                m0 = mult_labels(d, d.labels(coroot_of(d, gamma)), (0,) * d.rank)
                rows.append(f"{name}:{delta}")
                if delta != m0:
                    bad.append((name, iso, delta, m0))
    emit(7, "|Delta_gamma| = m_{gamma∨}(0)", not bad, f"{len(rows)} factor/isogeny cases, exact, violations={len(bad)}")
    assert not bad


def _class_key(d, lab):
    return tuple(x % 1 for x in d.coroot_coords_of_labels(lab))


def test_criterion_08_coset_representatives(emit):
    types = [f"A{n}" for n in range(1, 9)] + [f"B{n}" for n in range(2, 7)] + [f"C{n}" for n in range(2, 7)]
    types += [f"D{n}" for n in range(4, 9)] + ["E6", "E7", "E8", "F4", "G2"]
    types += ["A1xA1", "A1xA2", "A2xA2", "A1xA1xA1", "A3xB2", "D4xA1", "A1xA1xA1xA1"]
    bad = []
    classes_total = 0
    for name in types:
        d = build(name, "adj")
        m = minimal_elements(d)
        # X∨/Q∨ for the adjoint lattice: classes of all label vectors with entries in [0, det)
        gens = [_class_key(d, tuple(int(i == j) for j in range(d.rank))) for i in range(d.rank)]
        zero = tuple(Fraction(0) for _ in range(d.rank))
        seen, frontier = {zero}, [zero]
        while frontier:
            frontier = [
                s
                for c in frontier
                for g in gens
                for s in [tuple((x + y) % 1 for x, y in zip(c, g))]
                if s not in seen and not seen.add(s)
            ]
        classes_total += len(seen)
        covered = {_class_key(d, d.labels(mu)) for mu, _ in m}
        nonzero_ok = (seen - {zero}) <= covered
        zero_ok = any(cls.tag == QUASI_MINUSCULE and _class_key(d, d.labels(mu)) == zero for mu, cls in m)
        if not (nonzero_ok and zero_ok):
            bad.append(name)
    emit(8, "M meets every class of X∨/Q∨ (adjoint)", not bad, f"{len(types)} types, {classes_total} classes, exact, violations={len(bad)}")
    assert not bad, bad


def test_criterion_09_prediction_tables(emit):
    types = ["A1:sc", "A1:adj", "A2:sc", "A2:adj", "B2:sc", "B2:adj", "G2:sc", "A3:adj", "A1xA1:adj", "C3:adj"]
    n, bad = 0, []
    for name in types:
        d = parse_datum(name)
        shell = dominant_shell_labels(d, 8)
        ws = elements(d)
        for lam_lab in shell:
            lam = d.from_labels(lam_lab)
            for nu_lab in shell:
                n += 1
                if whittaker_predicted(d, lam, d.from_labels(nu_lab)).is_zero != (lam_lab != nu_lab):
                    bad.append((name, lam_lab, nu_lab, "whittaker"))
            om = set(omega_labels(d, lam_lab))
            margin = max((max(abs(x) for x in v) for v in om), default=0) + 1
            for nu_lab in itertools.product(range(-margin, margin + 1), repeat=d.rank):
                if not d.in_lattice(nu_lab):
                    continue
                n += 1
                if constant_term_predicted(d, lam, d.from_labels(nu_lab)).is_zero == (nu_lab in om):
                    bad.append((name, lam_lab, nu_lab, "constant term support"))
            for w in ws:
                n += 1
                w_lam = act(d, w, lam)
                expected = sum(a * x for a, x in zip(partial_root_sum(d, w), lam_lab))  # <rho + w^-1 rho, lam>
                direct = Fraction(sum(a * x for a, x in zip(d.rho2, lam_lab)) + sum(a * x for a, x in zip(d.rho2, d.labels(w_lam))), 2)
                if not (stratum_dim(d, lam, w_lam) == expected == direct):
                    bad.append((name, lam_lab, w, "stratum dim"))
    emit(9, "Whittaker diagonal, constant-term support = Omega, stratum dims = <rho, lam + w lam>", not bad, f"{n} checks, exact, violations={len(bad)}")
    assert not bad, bad[:5]


def test_criterion_10_selfcheck_determinism(emit):
    cmd = [sys.executable, "-m", "satcomb", "selfcheck", "--types", "A1:sc,A1:adj,A2:adj,A2:sc,B2:sc,A3:sc", "--shell", "4"]
    outs, codes = [], []
    for threads in ("1", "4", "8"):
        env = dict(os.environ, SATCOMB_THREADS=threads)
        proc = subprocess.run(cmd, capture_output=True, env=env, check=False)
        outs.append(proc.stdout)
        codes.append(proc.returncode)
    ok = codes == [0, 0, 0] and outs[0] == outs[1] == outs[2] and outs[0]
    emit(10, "selfcheck byte-identical across thread counts", bool(ok), f"threads 1/4/8, exit codes {codes}, {len(outs[0])} bytes")
    assert codes == [0, 0, 0]
    assert outs[0] == outs[1] == outs[2]


if __name__ == "__main__":
    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    print("\n".join(_LINES))
    sys.exit(code)
