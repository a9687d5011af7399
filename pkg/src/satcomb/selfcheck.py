"""Invariant sweep over a list of root data.

Every check returns a :class:`CheckResult`; a run is clean when no check has
failures.  Work is split per datum so that results can be gathered from a
thread pool and reassembled in input order.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .minimal import (
    MINUSCULE,
    QUASI_MINUSCULE,
    classify_labels,
    decompose,
    delta_gamma,
    descent_labels,
    minimal_elements,
)
from .paths import count_dominant_paths, is_dominant_path, iterated_tensor
from .root_datum import RootDatum, coroot_of, pair, parse_datum, rho_pair2, rho_pair2_labels, weyl_group_order
from .satake import (
    dominant_shell_labels,
    constant_term_predicted,
    stratum_dim,
    verify_kostka_weight_identity,
    whittaker_predicted,
)
from .weights import mult_labels, omega_labels, weyl_dimension_labels
from .weyl import (
    act,
    elements,
    is_dominant_labels,
    longest_element,
    orbit_labels,
    partial_root_sum,
    rho_plus_inverse_rho2,
    word_length,
)

POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

# sweeps over all of W are skipped above this size
W_SWEEP_CAP = 2000


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    def expect(self, ok: bool, message: Callable[[], str] | str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(message() if callable(message) else message)

    def as_json(self) -> dict:
        return {"name": self.name, "checked": self.checked, "failures": self.failures, "ok": not self.failures}


def _vec(v) -> str:
    return ",".join(str(x) for x in v)


# --------------------------------------------------------------------------
# root_datum


def check_root_datum(d: RootDatum) -> CheckResult:
    res = CheckResult("root_datum")
    expected = sum(POSITIVE_ROOT_COUNTS[f](n) for f, n in d.cartan.factors)
    res.expect(len(d.positive_roots) == expected, f"|R+| = {len(d.positive_roots)}, expected {expected}")
    for i, c in enumerate(d.simple_coroots):
        res.expect(rho_pair2(d, c) == 2, f"2<rho, alpha{i + 1}∨> != 2")
    for a in d.positive_roots:
        cv = coroot_of(d, a)
        res.expect(pair(d, a, cv) == 2, f"<{a}, coroot> != 2")
    norms = {}
    for a, c in zip(d.positive_roots, d.positive_coroots):
        k = d.root_factor(a)
        norms.setdefault(k, []).append(d.coroot_norm(c))
    for k, ns in norms.items():
        res.expect(min(ns) == 2, f"factor {k}: short coroot norm {min(ns)}")
    basis = [tuple(int(i == j) for j in range(d.rank)) for i in range(d.rank)]
    for i in range(d.rank):
        for x, y in itertools.product(basis, repeat=2):
            res.expect(
                d.form(act(d, (i,), x), act(d, (i,), y)) == d.form(x, y),
                f"form not invariant under s{i + 1} on {x},{y}",
            )
    for a, c in zip(d.positive_roots, d.positive_coroots):
        cv = coroot_of(d, a)
        nc = d.coroot_norm(c)
        for x in basis:
            res.expect(
                d.form(x, cv) == Fraction(pair(d, a, x)) * nc / 2,
                f"(nu, alpha∨) mismatch for {a}, {x}",
            )
    return res


# --------------------------------------------------------------------------
# weyl


def check_weyl(d: RootDatum) -> CheckResult:
    res = CheckResult("weyl")
    order = weyl_group_order(d.cartan)
    if order <= W_SWEEP_CAP:
        ws = elements(d)
        res.expect(len(ws) == order, "wrong |W|")
        for w in ws:
            lhs = tuple(2 * x for x in partial_root_sum(d, w))
            res.expect(lhs == rho_plus_inverse_rho2(d, w), f"root-sum identity fails at {w}")
            res.expect(word_length(d, w) == len(w), f"canonical word {w} not reduced")
    w0 = longest_element(d)
    res.expect(len(w0) == len(d.positive_roots), "longest element has wrong length")
    return res


# --------------------------------------------------------------------------
# weights


def check_weights(d: RootDatum, shell: list) -> CheckResult:
    res = CheckResult("weights")
    order = weyl_group_order(d.cartan)
    for lam in shell:
        total = 0
        for nu in omega_labels(d, lam):
            total += mult_labels(d, lam, nu)
        res.expect(total == weyl_dimension_labels(d, lam), f"sum of multiplicities != dim V({_vec(lam)})")
        res.expect(mult_labels(d, lam, lam) == 1, f"m_lam(lam) != 1 at {_vec(lam)}")
        n = len(orbit_labels(d, lam))
        res.expect(order % n == 0, f"orbit size {n} does not divide |W|")
    return res


# --------------------------------------------------------------------------
# minimal coweights


def _class_key(d: RootDatum, lab) -> tuple:
    return tuple(x % 1 for x in d.coroot_coords_of_labels(lab))


def _quotient_classes(d: RootDatum) -> set:
    gens = [_class_key(d, b) for b in d.basis]
    zero = tuple(Fraction(0) for _ in range(d.rank))
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for c in frontier:
            for g in gens:
                s = tuple((x + y) % 1 for x, y in zip(c, g))
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return seen


def check_minimal(d: RootDatum, shell: list) -> CheckResult:
    res = CheckResult("minimal_coweights")
    m = minimal_elements(d)
    for mu, cls in m:
        lab = d.labels(mu)
        pairs = [sum(a * x for a, x in zip(root, lab)) for root in d.positive_roots]
        if cls.tag == MINUSCULE:
            res.expect(max(pairs) <= 1, f"minuscule {_vec(mu)} pairs above 1")
        else:
            big = [r for r, p in zip(d.positive_roots, pairs) if p >= 2]
            res.expect(big == [cls.gamma], f"quasi-minuscule {_vec(mu)} has pairings >= 2 at {big}")
            res.expect(coroot_of(d, cls.gamma) == mu, f"{_vec(mu)} is not gamma∨")
    classes = _quotient_classes(d)
    covered = {_class_key(d, d.labels(mu)) for mu, _ in m}
    res.expect(covered == classes, "M does not meet every class of X∨/Q∨")
    zero = tuple(Fraction(0) for _ in range(d.rank))
    res.expect(
        any(cls.tag == QUASI_MINUSCULE and _class_key(d, d.labels(mu)) == zero for mu, cls in m),
        "zero class not met by a quasi-minuscule element",
    )
    for k in range(d.n_factors):
        gamma = d.highest_root(k)
        gv = d.labels(coroot_of(d, gamma))
        res.expect(
            len(delta_gamma(d, gamma)) == mult_labels(d, gv, (0,) * d.rank),
            f"factor {k}: |Delta_gamma| != m(0)",
        )
    for lam in shell:
        if classify_labels(d, lam).in_m or not any(lam):
            continue
        c = descent_labels(d, lam)
        rest = tuple(x - y for x, y in zip(lam, c))
        res.expect(is_dominant_labels(rest), f"descent from {_vec(lam)} leaves the dominant cone")
    return res


# --------------------------------------------------------------------------
# paths


def check_paths(d: RootDatum, shell: list, max_len: int) -> CheckResult:
    res = CheckResult("littelmann_paths")
    m = [mu for mu, _ in minimal_elements(d)]
    for n in range(1, max_len + 1):
        for seq in itertools.combinations_with_replacement(m, n):
            tens = iterated_tensor(d, seq)
            dims = 1
            for mu in seq:
                dims *= weyl_dimension_labels(d, d.labels(mu))
            total = sum(c * weyl_dimension_labels(d, d.labels(nu)) for nu, c in tens.items())
            res.expect(total == dims, f"tensor {seq} loses dimension")
            for nu, c in tens.items():
                got = count_dominant_paths(d, seq, nu)
                res.expect(got == c, f"{seq} -> {_vec(nu)}: {got} paths vs multiplicity {c}")
    for lam in shell:
        if not any(lam):
            continue
        coords = d.from_labels(lam)
        dec = decompose(d, coords)
        res.expect(count_dominant_paths(d, dec.mu_seq, coords) >= 1, f"decompose({_vec(coords)}) has no path")
        res.expect(is_dominant_path(d, dec.path), f"decompose({_vec(coords)}) witness not dominant")
        res.expect(
            all(a > b for a, b in zip(dec.norms, dec.norms[1:])),
            f"decompose({_vec(coords)}) norms not strictly decreasing",
        )
    return res


# --------------------------------------------------------------------------
# satake tables


def check_satake(d: RootDatum, shell_bound: int, shell: list) -> CheckResult:
    res = CheckResult("satake_tables")
    report = verify_kostka_weight_identity(d, shell_bound)
    res.checked += report["checked"]
    for rec, problems in report["violations"]:
        res.failures.append(f"K({_vec(rec.lam)},{_vec(rec.mu)}): {'; '.join(problems)}")
    coords = [d.from_labels(v) for v in shell]
    w0 = longest_element(d)
    for lam in coords:
        for nu in coords:
            w = whittaker_predicted(d, lam, nu)
            res.expect(w.is_zero == (lam != nu), f"whittaker({_vec(lam)},{_vec(nu)}) off-diagonal support")
    for lab, lam in zip(shell, coords):
        om = set(omega_labels(d, lab))
        r2 = rho_pair2_labels(d, lab)
        box = set()
        for nu in om:
            for i in range(d.rank):
                box.add(tuple(x + (k == i) for k, x in enumerate(nu)))
                box.add(tuple(x - (k == i) for k, x in enumerate(nu)))
        for nu in sorted(om | box):
            if not d.in_lattice(nu):
                continue
            ct = constant_term_predicted(d, lam, d.from_labels(nu))
            res.expect((not ct.is_zero) == (nu in om), f"constant term support wrong at {_vec(nu)}")
        for nu in om:
            nu_c = d.from_labels(nu)
            s = stratum_dim(d, lam, nu_c)
            opp = stratum_dim(d, lam, act(d, w0, nu_c))
            res.expect(0 <= s <= r2 and 2 * s == r2 + rho_pair2_labels(d, nu), f"stratum_dim at {_vec(nu)}")
            res.expect(s + opp == r2, f"complementary stratum dims fail at {_vec(nu)}")
    return res


# --------------------------------------------------------------------------
# driver


def run_datum(name: str, shell_bound: int) -> dict:
    d = parse_datum(name)
    shell = dominant_shell_labels(d, shell_bound)
    max_len = 3 if d.rank <= 2 else 2
    checks = [
        check_root_datum(d),
        check_weyl(d),
        check_weights(d, shell),
        check_minimal(d, shell),
        check_paths(d, shell, max_len),
        check_satake(d, shell_bound, shell),
    ]
    return {
        "datum": d.name,
        "shell": shell_bound,
        "checks": [c.as_json() for c in checks],
        "ok": all(not c.failures for c in checks),
    }


def run(types: Sequence[str], shell_bound: int, threads: int = 1) -> dict:
    """Run the sweep; results are ordered as ``types`` regardless of ``threads``."""
    if threads <= 1:
        results = [run_datum(t, shell_bound) for t in types]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda t: run_datum(t, shell_bound), types))
    return {"types": results, "ok": all(r["ok"] for r in results)}
