"""Split semisimple root data at a chosen isogeny type.

Coweights are integer tuples in the stored Z-basis of X∨.  Internally most
kernels work in *labels*: the vector of pairings ``<alpha_i, nu>`` with the
simple roots, i.e. coordinates in the fundamental-coweight basis of P∨.
Labels are integral for every coweight, so all hot-path arithmetic stays in
plain ints; conversions to and from the X∨ basis happen at the API boundary.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    DimensionMismatch,
    InvalidLattice,
    InvalidRank,
    NotACoroot,
    NotARoot,
)

Vector = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


# --------------------------------------------------------------------------
# linear algebra over Q


def _mat_inverse(m: Sequence[Sequence[int | Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise InvalidLattice("singular basis matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _mat_vec(m, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def _as_int_vector(v: Sequence[Fraction]) -> Vector | None:
    if all(x.denominator == 1 for x in v):
        return tuple(int(x) for x in v)
    return None


# --------------------------------------------------------------------------
# Cartan types


@dataclass(frozen=True)
class CartanType:
    """A (possibly reducible) Cartan type, e.g. ``(("A", 1), ("A", 1))``."""

    factors: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if not self.factors:
            raise InvalidRank("empty Cartan type")
        for family, n in self.factors:
            if family in _MIN_RANK:
                if n < _MIN_RANK[family]:
                    raise InvalidRank(f"{family}{n}: rank must be >= {_MIN_RANK[family]}")
            elif family in _EXCEPTIONAL:
                if n not in _EXCEPTIONAL[family]:
                    raise InvalidRank(f"{family}{n}: rank must be one of {_EXCEPTIONAL[family]}")
            else:
                raise InvalidRank(f"unknown family {family!r}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        factors = []
        for part in text.strip().split("x"):
            m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", part)
            if not m:
                raise InvalidRank(f"cannot parse Cartan type {text!r}")
            factors.append((m.group(1).upper(), int(m.group(2))))
        return cls(tuple(factors))

    @property
    def rank(self) -> int:
        return sum(n for _, n in self.factors)

    def __str__(self) -> str:
        return "x".join(f"{f}{n}" for f, n in self.factors)


def _gram_irreducible(family: str, n: int) -> list[list[int]]:
    """Symmetric Gram matrix (alpha_i, alpha_j) with short roots of norm 2.

    Bourbaki numbering throughout.
    """
    g = [[0] * n for _ in range(n)]
    if family in "ADE":
        norms = [2] * n
        if family == "A":
            edges = [(i, i + 1) for i in range(n - 1)]
        elif family == "D":
            edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        else:
            edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)] + [(k, k + 1) for k in range(5, n - 1)]
        for i, j in edges:
            g[i][j] = g[j][i] = -1
    elif family == "B":
        norms = [4] * (n - 1) + [2]
        for i in range(n - 1):
            g[i][i + 1] = g[i + 1][i] = -2
    elif family == "C":
        norms = [2] * (n - 1) + [4]
        for i in range(n - 2):
            g[i][i + 1] = g[i + 1][i] = -1
        g[n - 2][n - 1] = g[n - 1][n - 2] = -2
    elif family == "F":
        norms = [4, 4, 2, 2]
        g[0][1] = g[1][0] = -2
        g[1][2] = g[2][1] = -2
        g[2][3] = g[3][2] = -1
    else:  # G2
        norms = [2, 6]
        g[0][1] = g[1][0] = -3
    for i in range(n):
        g[i][i] = norms[i]
    return g


def _gram(cartan: CartanType) -> tuple[tuple[Vector, ...], tuple[int, ...]]:
    r = cartan.rank
    gram = [[0] * r for _ in range(r)]
    factor_of = []
    off = 0
    for k, (family, n) in enumerate(cartan.factors):
        for i, row in enumerate(_gram_irreducible(family, n)):
            factor_of.append(k)
            for j, x in enumerate(row):
                gram[off + i][off + j] = x
        off += n
    return tuple(tuple(row) for row in gram), tuple(factor_of)


def _cartan_matrix(gram) -> tuple[Vector, ...]:
    r = len(gram)
    return tuple(tuple(2 * gram[i][j] // gram[j][j] for j in range(r)) for i in range(r))


def weyl_group_order(cartan: CartanType) -> int:
    from math import factorial

    total = 1
    for family, n in cartan.factors:
        if family == "A":
            total *= factorial(n + 1)
        elif family in "BC":
            total *= 2**n * factorial(n)
        elif family == "D":
            total *= 2 ** (n - 1) * factorial(n)
        elif family == "E":
            total *= {6: 51840, 7: 2903040, 8: 696729600}[n]
        elif family == "F":
            total *= 1152
        else:
            total *= 12
    return total


# --------------------------------------------------------------------------
# root datum


@dataclass(eq=False)
class RootDatum:
    """Immutable root datum; build it with :func:`build`.

    ``basis`` holds the rows b_j of the chosen Z-basis of X∨ written in labels
    (fundamental coweight coordinates).  ``_cache`` is a private memo shared
    by the kernels in other modules and is the only mutable state.
    """

    cartan: CartanType
    isogeny: str
    basis: tuple[Vector, ...]
    name: str
    rank: int = field(init=False)
    gram: tuple[Vector, ...] = field(init=False, repr=False)
    cartan_matrix: tuple[Vector, ...] = field(init=False, repr=False)
    factor_of: tuple[int, ...] = field(init=False, repr=False)
    positive_roots: tuple[Vector, ...] = field(init=False, repr=False)
    positive_coroots: tuple[Vector, ...] = field(init=False, repr=False)
    _cache: dict = field(init=False, repr=False, default_factory=dict)

    def __post_init__(self):
        r = self.cartan.rank
        self.rank = r
        gram, factor_of = _gram(self.cartan)
        self.gram = gram
        self.factor_of = factor_of
        # A[i][j] = <alpha_i, alpha_j^vee>; column j is alpha_j^vee in labels.
        self.cartan_matrix = _cartan_matrix(gram)
        self._cartan_inv = _mat_inverse(self.cartan_matrix)

        if len(self.basis) != r or any(len(b) != r for b in self.basis):
            raise InvalidLattice(f"basis must be {r}x{r}")
        # pairing matrix P[i][j] = <alpha_i, b_j>
        self.pairing_matrix = tuple(tuple(self.basis[j][i] for j in range(r)) for i in range(r))
        self._pairing_inv = _mat_inverse(self.pairing_matrix)
        simple_coroots = []
        for j in range(r):
            col = tuple(self.cartan_matrix[i][j] for i in range(r))
            v = _as_int_vector(_mat_vec(self._pairing_inv, col))
            if v is None:
                raise InvalidLattice("basis does not contain the coroot lattice")
            simple_coroots.append(v)
        self.simple_coroots = tuple(simple_coroots)

        # long root norm per factor; coweight form is normalized so short coroots have norm 2
        long_norm = {}
        for i in range(r):
            k = factor_of[i]
            long_norm[k] = max(long_norm.get(k, 0), gram[i][i])
        self._d = tuple(long_norm[factor_of[i]] // gram[i][i] for i in range(r))

        roots = self._generate_positive_roots()
        self.positive_roots = tuple(sorted(roots, key=lambda a: (sum(a), a)))
        self.positive_coroots = tuple(self._coroot_simple_coords(a) for a in self.positive_roots)
        self._positive_coroot_labels = tuple(
            _mat_vec(self.cartan_matrix, c) for c in self.positive_coroots
        )
        self.rho2 = tuple(sum(a[i] for a in self.positive_roots) for i in range(r))
        rho_dual2 = [sum(c[i] for c in self.positive_coroots) for i in range(r)]
        self.rho_dual2 = self.from_labels(_mat_vec(self.cartan_matrix, rho_dual2))

    # ---------------------------------------------------------------- roots

    def _reflect_root(self, beta: Vector, i: int) -> Vector:
        c = sum(beta[k] * self.cartan_matrix[k][i] for k in range(self.rank))
        return tuple(b - (c if k == i else 0) for k, b in enumerate(beta))

    def _generate_positive_roots(self) -> list[Vector]:
        r = self.rank
        simple = [tuple(int(k == i) for k in range(r)) for i in range(r)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(r):
                    g = self._reflect_root(beta, i)
                    if g not in seen:
                        seen.add(g)
                        nxt.append(g)
            frontier = nxt
        return [b for b in seen if all(x >= 0 for x in b)]

    def root_norm(self, root: Vector) -> int:
        return sum(root[i] * self.gram[i][j] * root[j] for i in range(self.rank) for j in range(self.rank))

    def _coroot_simple_coords(self, root: Vector) -> Vector:
        n = self.root_norm(root)
        out = []
        for k, b in enumerate(root):
            num = b * self.gram[k][k]
            if num % n:
                raise AssertionError("non-integral coroot")
            out.append(num // n)
        return tuple(out)

    def is_root(self, root: Vector) -> bool:
        root = tuple(root)
        neg = tuple(-x for x in root)
        return root in self._root_set() or neg in self._root_set()

    def _root_set(self) -> frozenset:
        s = self._cache.get("root_set")
        if s is None:
            s = self._cache["root_set"] = frozenset(self.positive_roots)
        return s

    def factor_roots(self, k: int) -> list[Vector]:
        return [a for a in self.positive_roots if self.factor_of[next(i for i, x in enumerate(a) if x)] == k]

    def highest_root(self, k: int) -> Vector:
        """Maximal root of the k-th irreducible factor."""
        return max(self.factor_roots(k), key=lambda a: (sum(a), a))

    def root_factor(self, root: Vector) -> int:
        return self.factor_of[next(i for i, x in enumerate(root) if x)]

    @property
    def n_factors(self) -> int:
        return len(self.cartan.factors)

    # ----------------------------------------------------- coordinate maps

    def labels(self, coords: Sequence[int]) -> Vector:
        """Pairings <alpha_i, nu> for a coweight given in X∨ coordinates."""
        if len(coords) != self.rank:
            raise DimensionMismatch(f"expected {self.rank} coordinates, got {len(coords)}")
        return tuple(sum(p * c for p, c in zip(row, coords)) for row in self.pairing_matrix)

    def from_labels(self, labels: Sequence[int]) -> Vector:
        v = _as_int_vector(_mat_vec(self._pairing_inv, labels))
        if v is None:
            raise InvalidLattice(f"labels {tuple(labels)} do not define an element of X∨")
        return v

    def in_lattice(self, labels: Sequence[int]) -> bool:
        return _as_int_vector(_mat_vec(self._pairing_inv, labels)) is not None

    def coroot_coords_of_labels(self, labels: Sequence[int]) -> tuple[Fraction, ...]:
        """Coordinates in the simple coroot basis (rational in general)."""
        return _mat_vec(self._cartan_inv, labels)

    def coroot_to_labels(self, c: Sequence[int]) -> Vector:
        return _mat_vec(self.cartan_matrix, c)

    # ------------------------------------------------------------- forms

    def form_labels(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        cy = self.coroot_coords_of_labels(y)
        return sum((x[k] * self._d[k] * cy[k] for k in range(self.rank)), Fraction(0))

    def form(self, nu: Sequence[int], nu2: Sequence[int]) -> Fraction:
        """W-invariant form on X∨ (short coroots have norm 2 in every factor)."""
        return self.form_labels(self.labels(nu), self.labels(nu2))

    def coroot_norm(self, coroot_simple: Sequence[int]) -> Fraction:
        lab = self.coroot_to_labels(coroot_simple)
        return self.form_labels(lab, lab)


def build(cartan: CartanType | str, isogeny: str | Sequence[Sequence[int]] = "sc") -> RootDatum:
    """Build a root datum.

    ``isogeny`` is ``"sc"`` (X∨ = Q∨, basis the simple coroots), ``"adj"``
    (X∨ = P∨, basis the fundamental coweights) or an explicit basis matrix
    whose rows are written in fundamental-coweight coordinates.
    """
    if isinstance(cartan, str):
        cartan = CartanType.parse(cartan)
    r = cartan.rank
    if isinstance(isogeny, str):
        key = {"sc": "sc", "simplyconnected": "sc", "adj": "adj", "adjoint": "adj"}.get(isogeny.lower())
        if key is None:
            raise InvalidLattice(f"unknown isogeny {isogeny!r}")
        if key == "adj":
            basis = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
        else:
            a = _cartan_matrix(_gram(cartan)[0])
            basis = tuple(tuple(a[i][j] for i in range(r)) for j in range(r))
        name = f"{cartan}:{key}"
        return RootDatum(cartan, key, basis, name)
    basis = tuple(tuple(int(x) for x in row) for row in isogeny)
    rows = ";".join(",".join(str(x) for x in row) for row in basis)
    return RootDatum(cartan, "custom", basis, f"{cartan}:lattice={rows}")


def parse_datum(text: str) -> RootDatum:
    """Parse ``"A2"``, ``"A1xA1:adj"``, ``"B2:lattice=1,0;0,2"``."""
    text = text.strip()
    cartan_part, _, iso = text.partition(":")
    cartan = CartanType.parse(cartan_part)
    if not iso:
        return build(cartan, "sc")
    if iso.startswith("lattice="):
        rows = [r for r in iso[len("lattice="):].split(";") if r.strip()]
        try:
            basis = [[int(x) for x in row.split(",")] for row in rows]
        except ValueError as exc:
            raise InvalidLattice(f"cannot parse lattice rows {iso!r}") from exc
        return build(cartan, basis)
    return build(cartan, iso)


# --------------------------------------------------------------------------
# operations


def pair(datum: RootDatum, root: Sequence[int], nu: Sequence[int]) -> int:
    """<alpha, nu> for a root in simple-root coordinates and a coweight in X∨ coordinates."""
    if len(root) != datum.rank:
        raise DimensionMismatch(f"root has {len(root)} coordinates, rank is {datum.rank}")
    lab = datum.labels(nu)
    return sum(a * x for a, x in zip(root, lab))


def rho_pair2(datum: RootDatum, nu: Sequence[int]) -> int:
    """The integer 2<rho, nu>."""
    return sum(a * x for a, x in zip(datum.rho2, datum.labels(nu)))


def rho_pair2_labels(datum: RootDatum, lab: Sequence[int]) -> int:
    return sum(a * x for a, x in zip(datum.rho2, lab))


def coroot_of(datum: RootDatum, root: Sequence[int]) -> Vector:
    """The coroot alpha∨ in X∨ coordinates (always integral since Q∨ ⊆ X∨)."""
    root = tuple(root)
    if len(root) != datum.rank:
        raise DimensionMismatch("root has wrong length")
    if not datum.is_root(root):
        raise NotARoot(f"{root} is not a root")
    sign = 1
    if root not in datum._root_set():
        sign, root = -1, tuple(-x for x in root)
    c = datum.positive_coroots[datum.positive_roots.index(root)]
    lab = datum.coroot_to_labels(c)
    return datum.from_labels(tuple(sign * x for x in lab))


def _coroot_simple_from_coords(datum: RootDatum, coweight: Sequence[int]) -> Vector | None:
    lab = datum.labels(coweight)
    c = _as_int_vector(datum.coroot_coords_of_labels(lab))
    if c is None:
        return None
    pos = c if all(x >= 0 for x in c) else tuple(-x for x in c)
    return pos if pos in datum.positive_coroots else None


def is_short_coroot(datum: RootDatum, coroot: Sequence[int]) -> bool:
    """True iff the coroot (given in X∨ coordinates) has norm 2."""
    c = _coroot_simple_from_coords(datum, coroot)
    if c is None:
        raise NotACoroot(f"{tuple(coroot)} is not a coroot")
    return datum.coroot_norm(c) == 2


def format_root(root: Sequence[int]) -> str:
    parts = []
    for i, a in enumerate(root, start=1):
        if a == 0:
            continue
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        term = f"alpha{i}" if mag == 1 else f"{mag}*alpha{i}"
        parts.append((sign, term))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, term in parts[1:]:
        out += sign + term
    return out


def format_half(n: int) -> str:
    """Render n/2 as ``k`` or ``k/2``."""
    return str(n // 2) if n % 2 == 0 else f"{n}/2"


def canonical_order(datum: RootDatum, coweights) -> list[Vector]:
    """Decreasing 2<rho,.> then decreasing coordinates; compatible with dominance."""
    return sorted((tuple(v) for v in coweights), key=lambda v: (rho_pair2(datum, v), v), reverse=True)
