"""Exact root-system arithmetic for simple Lie types.

Conventions
-----------
Vertices are labelled ``1..rank`` with Bourbaki numbering.  Weights are
integer tuples in the fundamental-weight basis, roots are integer tuples in
the simple-root basis; position ``k`` of either tuple belongs to vertex
``k + 1``.  The Cartan matrix is stored as ``C[i][j] = <alpha_j, alpha_i^vee>``
(0-based rows/columns), so the simple root ``alpha_j`` written in the weight
basis is column ``j`` of ``C``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Weight = tuple[int, ...]
RootVector = tuple[int, ...]
WeylWord = tuple[int, ...]

FAMILIES = "ABCDEFG"


class InvalidTypeError(ValueError):
    """Raised for a family/rank combination that is not a simple type."""


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


def _rank_ok(family: str, rank: int) -> bool:
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family, False)


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if not isinstance(self.rank, int) or not _rank_ok(self.family, self.rank):
            raise InvalidTypeError(f"no simple type {self.family}_{self.rank}")

    @classmethod
    def parse(cls, text: str) -> SimpleType:
        """``"B3"`` or ``"B_3"`` -> ``SimpleType("B", 3)``."""
        text = text.strip().replace("_", "")
        if len(text) < 2 or not text[1:].isdigit():
            raise InvalidTypeError(f"cannot parse simple type {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    @property
    def vertices(self) -> range:
        return range(1, self.rank + 1)

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _gram(t: SimpleType) -> list[list[int]]:
    """Integer Gram matrix of the simple roots (scaled, Bourbaki order)."""
    n = t.rank
    g = [[0] * n for _ in range(n)]

    def bond(i: int, j: int, value: int) -> None:
        g[i - 1][j - 1] = g[j - 1][i - 1] = value

    if t.family in "AD":
        norms = [2] * n
        for i in range(1, n if t.family == "A" else n - 1):
            bond(i, i + 1, -1)
        if t.family == "D":
            bond(n - 2, n, -1)
    elif t.family == "B":
        norms = [4] * (n - 1) + [2]
        for i in range(1, n):
            bond(i, i + 1, -2)
    elif t.family == "C":
        norms = [2] * (n - 1) + [4]
        for i in range(1, n):
            bond(i, i + 1, -1 if i < n - 1 else -2)
    elif t.family == "E":
        norms = [2] * n
        bond(1, 3, -1)
        bond(2, 4, -1)
        for i in range(3, n):
            bond(i, i + 1, -1)
    elif t.family == "F":
        norms = [4, 4, 2, 2]
        bond(1, 2, -2)
        bond(2, 3, -2)
        bond(3, 4, -1)
    else:  # G2: alpha_1 short
        norms = [2, 6]
        bond(1, 2, -3)
    for i in range(n):
        g[i][i] = norms[i]
    return g


def cartan_matrix(t: SimpleType) -> tuple[tuple[int, ...], ...]:
    """``C[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``."""
    g = _gram(t)
    return tuple(
        tuple(2 * g[i][j] // g[i][i] for j in range(t.rank)) for i in range(t.rank)
    )


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Half squared lengths ``d`` with ``d_i C[i][j] = d_j C[j][i]``, shortest = 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j == i or cartan[i][j] == 0:
                continue
            if cartan[j][i] == 0:
                raise DomainError("Cartan matrix is not symmetrizable")
            value = d[i] * cartan[i][j] / cartan[j][i]
            if d[j] is None:
                d[j] = value
                stack.append(j)
            elif d[j] != value:
                raise DomainError("Cartan matrix is not symmetrizable")
    if any(x is None for x in d):
        raise DomainError("Dynkin diagram is disconnected")
    low = min(d)
    scaled = [x / low for x in d]
    if any(x.denominator != 1 for x in scaled):
        raise DomainError("non-integral root length ratio")
    return tuple(int(x) for x in scaled)


@dataclass(frozen=True)
class RootSystem:
    type: SimpleType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[RootVector, ...]
    root_lengths: dict[int, str] = field(compare=False)
    # half squared lengths of the simple roots, shortest normalised to 1
    norms: tuple[int, ...] = field(compare=False)
    coroots: dict[RootVector, tuple[int, ...]] = field(compare=False, repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def vertices(self) -> range:
        return self.type.vertices

    def is_root(self, gamma: Sequence[int]) -> bool:
        gamma = tuple(gamma)
        return gamma in self.coroots or tuple(-x for x in gamma) in self.coroots

    def simple_root_weight(self, i: int) -> Weight:
        """Simple root ``alpha_i`` in the fundamental-weight basis."""
        return tuple(row[i - 1] for row in self.cartan)

    def pair_root(self, gamma: Sequence[int], i: int) -> int:
        """``<gamma, alpha_i^vee>`` for ``gamma`` in the simple-root basis."""
        row = self.cartan[i - 1]
        return sum(g * c for g, c in zip(gamma, row))


def _check_cartan(cartan: Sequence[Sequence[int]]) -> None:
    n = len(cartan)
    for i in range(n):
        if len(cartan[i]) != n or cartan[i][i] != 2:
            raise DomainError("Cartan matrix must be square with diagonal 2")
        for j in range(n):
            if i != j:
                if cartan[i][j] not in (0, -1, -2, -3):
                    raise DomainError(f"bad Cartan entry C[{i}][{j}] = {cartan[i][j]}")
                if cartan[i][j] * cartan[j][i] not in (0, 1, 2, 3):
                    raise DomainError(f"bad bond between vertices {i + 1} and {j + 1}")
                if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                    raise DomainError("Cartan matrix zero pattern is not symmetric")


def _closure(cartan: Sequence[Sequence[int]]) -> list[RootVector]:
    """Positive roots by the root-string algorithm, level by level in height."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    level = list(simple)
    ordered = list(simple)
    while level:
        nxt = []
        for gamma in level:
            for i in range(n):
                # p = length of the alpha_i-string below gamma
                p = 0
                below = list(gamma)
                while True:
                    below[i] -= 1
                    if tuple(below) in roots:
                        p += 1
                    else:
                        break
                q = p - sum(gamma[j] * cartan[i][j] for j in range(n))
                if q > 0:
                    up = list(gamma)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        nxt.sort(reverse=True)
        ordered.extend(nxt)
        level = nxt
    return ordered


def root_system_from_cartan(t: SimpleType, cartan: Sequence[Sequence[int]]) -> RootSystem:
    cartan = tuple(tuple(row) for row in cartan)
    if len(cartan) != t.rank:
        raise DomainError(f"Cartan matrix of size {len(cartan)} for {t}")
    _check_cartan(cartan)
    d = _symmetrizer(cartan)
    positive = _closure(cartan)
    coroots = {}
    for gamma in positive:
        # (gamma, gamma) / 2 in units where (alpha_j, alpha_j) / 2 = d_j
        half_norm = Fraction(
            sum(gamma[i] * gamma[j] * d[i] * cartan[i][j] for i in range(t.rank) for j in range(t.rank)),
            2,
        )
        co = tuple(Fraction(gamma[j] * d[j]) / half_norm for j in range(t.rank))
        if any(c.denominator != 1 for c in co):
            raise DomainError(f"non-integral coroot for {gamma}")
        coroots[gamma] = tuple(int(c) for c in co)
    longest = max(d)
    lengths = {i + 1: "long" if d[i] == longest else "short" for i in range(t.rank)}
    return RootSystem(t, cartan, tuple(positive), lengths, d, coroots)


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystem:
    return root_system_from_cartan(t, cartan_matrix(t))


def _rs(t: SimpleType | RootSystem) -> RootSystem:
    return t if isinstance(t, RootSystem) else build_root_system(t)


def fundamental_weight(i: int, rank: int) -> Weight:
    return tuple(int(k == i - 1) for k in range(rank))


def rho(rs: RootSystem) -> Weight:
    return (1,) * rs.rank


def add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def neg(a: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in a)


def coroot(gamma: Sequence[int], rs: RootSystem) -> tuple[int, ...]:
    """Coroot of the root ``gamma`` in the simple-coroot basis."""
    gamma = tuple(gamma)
    if gamma in rs.coroots:
        return rs.coroots[gamma]
    minus = neg(gamma)
    if minus in rs.coroots:
        return neg(rs.coroots[minus])
    raise DomainError(f"{gamma} is not a root of {rs.type}")


def pairing(lam: Sequence[int], gamma: Sequence[int], rs: RootSystem) -> int:
    """``<lam, gamma^vee>`` for a weight ``lam`` and a root ``gamma``."""
    return sum(x * c for x, c in zip(lam, coroot(gamma, rs)))


def _check_vertex(i: int, rs: RootSystem) -> None:
    if not 1 <= i <= rs.rank:
        raise DomainError(f"vertex {i} out of range for {rs.type}")


def reflect(lam: Sequence[int], i: int, rs: RootSystem) -> Weight:
    """Simple reflection ``s_i(lam) = lam - <lam, alpha_i^vee> alpha_i``."""
    _check_vertex(i, rs)
    c = lam[i - 1]
    if c == 0:
        return tuple(lam)
    return tuple(x - c * row[i - 1] for x, row in zip(lam, rs.cartan))


def reflect_root(gamma: Sequence[int], i: int, rs: RootSystem) -> RootVector:
    """Simple reflection acting on a vector in the simple-root basis."""
    _check_vertex(i, rs)
    out = list(gamma)
    out[i - 1] -= rs.pair_root(gamma, i)
    return tuple(out)


def apply_word(word: Iterable[int], lam: Sequence[int], rs: RootSystem) -> Weight:
    """Apply the letters of ``word`` to ``lam``, first letter first."""
    out = tuple(lam)
    for i in word:
        out = reflect(out, i, rs)
    return out


def longest_word(subset: Iterable[int], rs: RootSystem) -> WeylWord:
    """Reduced word for the longest element of the parabolic subgroup ``W_I``.

    Greedy descent: starting from ``rho_I`` reflect in any ``i`` of ``I`` with
    positive pairing until the weight is ``I``-antidominant.  Each step raises
    the length by one, so the word is reduced of length ``#R_I^+``.
    """
    subset = sorted(set(subset))
    for i in subset:
        _check_vertex(i, rs)
    lam = tuple(int(k + 1 in subset) for k in range(rs.rank))
    word = []
    while True:
        for i in subset:
            if lam[i - 1] > 0:
                lam = reflect(lam, i, rs)
                word.append(i)
                break
        else:
            return tuple(word)


def is_dominant(lam: Sequence[int]) -> bool:
    return all(x >= 0 for x in lam)


def is_antidominant(lam: Sequence[int]) -> bool:
    return all(x <= 0 for x in lam)


def dominant_conjugate(lam: Sequence[int], rs: RootSystem) -> Weight:
    """The unique dominant weight in the Weyl orbit of ``lam``."""
    out = tuple(lam)
    while True:
        for k, x in enumerate(out):
            if x < 0:
                out = reflect(out, k + 1, rs)
                break
        else:
            return out


def support(gamma: Sequence[int]) -> frozenset[int]:
    return frozenset(k + 1 for k, x in enumerate(gamma) if x != 0)


def parabolic_positive_roots(subset: Iterable[int], rs: RootSystem) -> list[RootVector]:
    subset = frozenset(subset)
    return [g for g in rs.positive_roots if support(g) <= subset]


def weyl_dim(t: SimpleType | RootSystem, lam: Sequence[int]) -> int:
    """Dimension of ``V(lam)`` by the Weyl dimension formula."""
    rs = _rs(t)
    lam = tuple(lam)
    if len(lam) != rs.rank:
        raise DomainError(f"weight {lam} has wrong length for {rs.type}")
    if not is_dominant(lam):
        raise DomainError(f"weight {lam} is not dominant")
    shifted = add(lam, rho(rs))
    value = Fraction(1)
    for gamma in rs.positive_roots:
        co = rs.coroots[gamma]
        value *= Fraction(sum(x * c for x, c in zip(shifted, co)), sum(co))
    if value.denominator != 1:
        raise DomainError(f"Weyl dimension formula gave non-integer {value}")
    return int(value)


def group_dim(t: SimpleType | RootSystem) -> int:
    rs = _rs(t)
    return 2 * len(rs.positive_roots) + rs.rank
