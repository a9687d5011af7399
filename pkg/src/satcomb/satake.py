"""Kostka-Foulkes q-analogs and the predicted constant-term / Whittaker tables.

K_{lam,mu}(q) is Lusztig's q-analog of weight multiplicity,

    K_{lam,mu}(q) = sum_w (-1)^{l(w)} P_q(w(lam + rho∨) - (mu + rho∨)),

with P_q the q-graded Kostant partition function over the positive coroots.
Half-integral exponents q^{<rho,nu>} are carried as the doubled integer
2<rho,nu> everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotDominant, NotInOmega
from .root_datum import RootDatum, Vector, format_half, rho_pair2_labels
from .weights import dominant_below_labels, in_omega_labels, mult_labels
from .weyl import dominant_rep_labels, is_dominant_labels, reflect_labels


@dataclass(frozen=True)
class QPolynomial:
    """Integer polynomial in q; ``coefficients[k]`` is the coefficient of q^k."""

    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coefficients)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "QPolynomial":
        return cls((0,) * k + (c,))

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return QPolynomial(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)))

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(tuple(-x for x in self.coefficients))

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by q^k."""
        return QPolynomial((0,) * k + self.coefficients) if self.coefficients else self

    def __call__(self, q: int) -> int:
        total = 0
        for c in reversed(self.coefficients):
            total = total * q + c
        return total

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mon = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if k == 0:
                body = str(abs(c))
            else:
                body = mon if abs(c) == 1 else f"{abs(c)}{mon}"
            terms.append(("-" if c < 0 else "+", body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for s, b in terms[1:]:
            out += f" {s} {b}"
        return out


ZERO_POLY = QPolynomial()
ONE_POLY = QPolynomial((1,))


# --------------------------------------------------------------------------
# q-Kostant partition function


def _q_partition_coroot(datum: RootDatum, chi: Vector) -> QPolynomial:
    memo = datum._cache.setdefault("qpart", {})
    coroots = datum.positive_coroots

    def rec(k: int, c: Vector) -> QPolynomial:
        if not any(c):
            return ONE_POLY
        if k == len(coroots):
            return ZERO_POLY
        key = (k, c)
        hit = memo.get(key)
        if hit is not None:
            return hit
        beta = coroots[k]
        total = ZERO_POLY
        j = 0
        cur = c
        while all(x >= 0 for x in cur):
            total = total + rec(k + 1, cur).shift(j)
            j += 1
            cur = tuple(x - y for x, y in zip(cur, beta))
        memo[key] = total
        return total

    return rec(0, chi)


def _q_partition_labels(datum: RootDatum, lab: Sequence[int]) -> QPolynomial:
    c = datum.coroot_coords_of_labels(lab)
    if not all(x.denominator == 1 and x >= 0 for x in c):
        return ZERO_POLY
    return _q_partition_coroot(datum, tuple(int(x) for x in c))


def q_partition(datum: RootDatum, chi: Sequence[int]) -> QPolynomial:
    """Coefficient of q^k = number of ways to write chi as a sum of k positive coroots."""
    return _q_partition_labels(datum, datum.labels(chi))


# --------------------------------------------------------------------------
# Kostka-Foulkes


def _signed_orbit(datum: RootDatum, v: Vector) -> list[tuple[Vector, int]]:
    """Orbit of a regular dominant vector with signs (-1)^{l(w)}."""
    cache = datum._cache.setdefault("signed_orbit", {})
    hit = cache.get(v)
    if hit is not None:
        return hit
    sign = {v: 1}
    frontier = [v]
    while frontier:
        nxt = []
        for u in frontier:
            for i in range(datum.rank):
                if u[i] > 0:
                    t = reflect_labels(datum, u, i)
                    if t not in sign:
                        sign[t] = -sign[u]
                        nxt.append(t)
        frontier = nxt
    out = sorted(sign.items())
    cache[v] = out
    return out


def kostka_labels(datum: RootDatum, lam: Vector, mu: Vector) -> QPolynomial:
    key = ("kostka", lam, mu)
    hit = datum._cache.get(key)
    if hit is not None:
        return hit
    shifted = tuple(x + 1 for x in lam)
    mu_shift = tuple(x + 1 for x in mu)
    total = ZERO_POLY
    for u, s in _signed_orbit(datum, shifted):
        diff = tuple(a - b for a, b in zip(u, mu_shift))
        p = _q_partition_labels(datum, diff)
        if p:
            total = total + (p if s > 0 else -p)
    datum._cache[key] = total
    return total


def kostka_foulkes(datum: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> QPolynomial:
    la, ma = datum.labels(lam), datum.labels(mu)
    if not is_dominant_labels(la) or not is_dominant_labels(ma):
        raise NotDominant("both arguments must be dominant")
    return kostka_labels(datum, la, ma)


def dominant_shell_labels(datum: RootDatum, bound: int) -> list[Vector]:
    """Dominant coweights of X∨ with 2<rho, lam> <= bound (labels), increasing height."""
    out = []
    lab = [0] * datum.rank

    def rec(i: int, used: int):
        if i == datum.rank:
            t = tuple(lab)
            if datum.in_lattice(t):
                out.append(t)
            return
        c = 0
        while used + c * datum.rho2[i] <= bound:
            lab[i] = c
            rec(i + 1, used + c * datum.rho2[i])
            c += 1
        lab[i] = 0

    rec(0, 0)
    return sorted(out, key=lambda v: (rho_pair2_labels(datum, v), v))


def dominant_shell(datum: RootDatum, bound: int) -> list[Vector]:
    return [datum.from_labels(v) for v in dominant_shell_labels(datum, bound)]


@dataclass(frozen=True)
class KostkaCheck:
    lam: Vector
    mu: Vector
    kostka: QPolynomial
    kostka_at_one: int
    multiplicity: int

    @property
    def ok(self) -> bool:
        return self.kostka_at_one == self.multiplicity


def verify_kostka_weight_identity(datum: RootDatum, shell_bound: int) -> dict:
    """Check K_{lam,mu}(1) == m_lam(mu) for all dominant lam, mu with 2<rho,.> <= shell_bound.

    Also checks unitriangularity and nonnegativity of the q-coefficients.
    """
    shell = dominant_shell_labels(datum, shell_bound)
    rows = []
    violations = []
    for lam in shell:
        for mu in shell:
            k = kostka_labels(datum, lam, mu)
            m = mult_labels(datum, lam, mu)
            rec = KostkaCheck(datum.from_labels(lam), datum.from_labels(mu), k, k(1), m)
            rows.append(rec)
            problems = []
            if not rec.ok:
                problems.append("K(1) != m")
            if lam == mu and k != ONE_POLY:
                problems.append("K_{lam,lam} != 1")
            if any(c < 0 for c in k.coefficients):
                problems.append("negative coefficient")
            if k and not in_omega_labels(datum, lam, mu):
                problems.append("nonzero outside mu <= lam")
            if problems:
                violations.append((rec, problems))
    return {"checked": len(rows), "rows": rows, "violations": violations}


# --------------------------------------------------------------------------
# predicted tables


@dataclass(frozen=True)
class SignedHalfPower:
    """sign * q^{half_exponent/2} * scalar; the zero value is (0, 0, 0) with no degree."""

    sign: int
    half_exponent: int
    scalar: int
    degree: int | None = None

    def __post_init__(self):
        if self.scalar == 0:
            object.__setattr__(self, "sign", 0)
            object.__setattr__(self, "half_exponent", 0)
            object.__setattr__(self, "degree", None)

    @property
    def is_zero(self) -> bool:
        return self.scalar == 0

    def as_json(self, with_scalar: bool = True) -> dict:
        out = {"sign": self.sign, "q_half_exponent": self.half_exponent, "degree": self.degree}
        if with_scalar:
            out["scalar"] = self.scalar
        return out

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        s = "-" if self.sign < 0 else "+"
        c = "" if self.scalar == 1 else f"{self.scalar}*"
        return f"{s}{c}q^{format_half(self.half_exponent)}"


def euler_char_predicted(datum: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> int:
    """Euler characteristic of S_nu ∩ Gr_lam: 1 if nu is W-conjugate to lam, else 0."""
    return int(dominant_rep_labels(datum, datum.labels(nu)) == datum.labels(lam))


def stratum_dim(datum: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> int:
    """<rho, lam + nu> for nu in Omega(lam)."""
    la, na = datum.labels(lam), datum.labels(nu)
    if not is_dominant_labels(la):
        raise NotDominant(f"{tuple(lam)} is not dominant")
    if not in_omega_labels(datum, la, na):
        raise NotInOmega(f"{tuple(nu)} not in Omega({tuple(lam)})")
    return (rho_pair2_labels(datum, la) + rho_pair2_labels(datum, na)) // 2


def constant_term_predicted(datum: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> SignedHalfPower:
    """(-1)^{2<rho,nu>} q^{<rho,nu>} m_lam(nu), in degree 2<rho,nu>."""
    la, na = datum.labels(lam), datum.labels(nu)
    if not is_dominant_labels(la):
        raise NotDominant(f"{tuple(lam)} is not dominant")
    e = rho_pair2_labels(datum, na)
    return SignedHalfPower((-1) ** (e % 2), e, mult_labels(datum, la, na), e)


def whittaker_predicted(datum: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> SignedHalfPower:
    """Zero off the diagonal; (-1)^{2<rho,lam>} q^{<rho,lam>} in degree 2<rho,lam> on it."""
    la, na = datum.labels(lam), datum.labels(nu)
    if not is_dominant_labels(la) or not is_dominant_labels(na):
        raise NotDominant("both arguments must be dominant")
    if la != na:
        return SignedHalfPower(0, 0, 0)
    e = rho_pair2_labels(datum, la)
    return SignedHalfPower((-1) ** (e % 2), e, 1, e)


def quasi_minuscule_ranks(datum: RootDatum, gamma: Sequence[int], sigma: Sequence[int] | None = None) -> int:
    """|Delta_gamma|, or |Delta_gamma^sigma| when sigma is given."""
    from .minimal import delta_gamma, delta_gamma_sigma

    if sigma is None:
        return len(delta_gamma(datum, gamma))
    return len(delta_gamma_sigma(datum, gamma, sigma))


def constant_term_table(datum: RootDatum, lam: Sequence[int]) -> list[tuple[Vector, SignedHalfPower, int]]:
    """Rows (nu, predicted constant term, stratum dimension) over Omega(lam)."""
    from .weights import omega_set

    return [(nu, constant_term_predicted(datum, lam, nu), stratum_dim(datum, lam, nu)) for nu in omega_set(datum, lam)]


def dominant_below(datum: RootDatum, lam: Sequence[int]) -> list[Vector]:
    return [datum.from_labels(v) for v in dominant_below_labels(datum, datum.labels(lam))]
