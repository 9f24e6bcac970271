"""Named invariant suites run by ``horospherical selftest``."""

from __future__ import annotations

from collections import Counter
from typing import Callable

from .classify import DEFAULT_MAX_RANK, all_types, enumerate_special, family_instances, template_pairs
from .geometry import OrbitSide, aut_dim, fiber_lowest_weight, normal_sections
from .horo import HoroPair, dimension, embeddings, picard_number
from .roots import (
    SimpleType,
    apply_word,
    build_root_system,
    fundamental_weight,
    group_dim,
    longest_word,
    parabolic_positive_roots,
    reflect,
    weyl_dim,
)


class CheckFailed(AssertionError):
    pass


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise CheckFailed(message)


def expected_positive_roots(t: SimpleType) -> int:
    m = t.rank
    return {
        "A": m * (m + 1) // 2,
        "B": m * m,
        "C": m * m,
        "D": m * (m - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(m),
        "F": 24,
        "G": 6,
    }[t.family]


def instances(fid: int, max_rank: int = DEFAULT_MAX_RANK):
    for rank in range(1, max_rank + 1):
        for t, a, b, params in family_instances(fid, rank):
            yield HoroPair(t, a, b), params


def suite_root_counts() -> int:
    n = 0
    for t in all_types(DEFAULT_MAX_RANK) + [SimpleType("C", 2)]:
        got = len(build_root_system(t).positive_roots)
        _check(got == expected_positive_roots(t), f"{t}: {got} positive roots")
        n += 1
    return n


def suite_weyl_words() -> int:
    n = 0
    for t in all_types(DEFAULT_MAX_RANK):
        rs = build_root_system(t)
        basis = [fundamental_weight(i, t.rank) for i in t.vertices]
        for lam in basis:
            for i in t.vertices:
                _check(reflect(reflect(lam, i, rs), i, rs) == lam, f"{t}: s_{i} not involutive")
        subsets = [list(t.vertices)] + [[v for v in t.vertices if v != u] for u in t.vertices]
        for sub in subsets:
            word = longest_word(sub, rs)
            _check(len(word) == len(parabolic_positive_roots(sub, rs)), f"{t}: |w0({sub})|")
            for lam in basis:
                _check(apply_word(word, apply_word(word, lam, rs), rs) == lam, f"{t}: w0^2 != 1")
            n += 1
    return n


def suite_classification() -> int:
    records = enumerate_special(DEFAULT_MAX_RANK)
    got = {(r.pair.type, frozenset((r.pair.alpha, r.pair.beta))) for r in records}
    _check(got == template_pairs(DEFAULT_MAX_RANK), "special pairs differ from the eight families")
    _check(len(got) == len(records), "duplicate records")
    return len(records)


def suite_picard() -> int:
    records = enumerate_special(DEFAULT_MAX_RANK)
    for rec in records:
        fans = embeddings(rec.pair)
        rhos = [picard_number(f).rho for f in fans]
        _check(Counter(rhos) == Counter({1: 1, 2: 2, 3: 1}), f"{rec.pair}: rho {rhos}")
        (one,) = [f for f in fans if picard_number(f).rho == 1]
        _check(len(one.colors) == 2, f"{rec.pair}: rho = 1 fan is not the two-color fan")
    return len(records)


def suite_dimensions() -> int:
    n = 0
    closed = {
        1: lambda m, i: 2 * m,
        2: lambda m, i: (i + 1) * (m + 1 - i),
        5: lambda m, i: (i + 1) * (2 * m - i) - i * (i + 1) // 2,
        6: lambda m, i: m * (m + 1) // 2,
    }
    for fid, formula in closed.items():
        for p, params in instances(fid):
            d = dimension(p)
            _check(d == formula(params["m"], params.get("i")), f"family {fid} {p}: dim {d}")
            n += 1
    return n


def suite_pairings() -> int:
    n = 0
    for fid, value in ((3, 1), (4, 1), (7, 1), (8, 2)):
        for p, _ in instances(fid):
            low = fiber_lowest_weight(p, OrbitSide.Z)
            _check(low[p.beta - 1] == value, f"family {fid} {p}: beta coordinate {low[p.beta - 1]}")
            others = [x for k, x in enumerate(low) if k != p.beta - 1]
            _check(all(x <= 0 for x in others), f"family {fid} {p}: {low}")
            n += 1
    return n


def suite_sections() -> int:
    n = 0
    for fid in (3, 4, 5, 7, 8):
        for p, params in instances(fid):
            rank = p.type.rank
            y, z = normal_sections(p, OrbitSide.Y), normal_sections(p, OrbitSide.Z)
            _check(y.is_zero != z.is_zero, f"family {fid} {p}: zero on both or neither side")
            if fid == 5:
                _check(y.is_zero, f"{p}: Y sections nonzero")
                _check(z.highest_weight == fundamental_weight(1, rank), f"{p}: Z module")
                _check(z.dim == 2 * params["m"], f"{p}: Z dim {z.dim}")
            else:
                _check(z.is_zero, f"{p}: Z sections nonzero")
                top = 4 if fid == 7 else p.beta
                _check(y.highest_weight == fundamental_weight(top, rank), f"{p}: Y module")
            n += 1
    return n


def suite_aut_dims() -> int:
    n = 0
    fixed = {4: 30, 7: 79, 8: 22}
    for fid in (3, 4, 5, 7, 8):
        for p, params in instances(fid):
            m = params.get("m")
            want = {3: lambda: m * (2 * m + 1) + 1 + 2**m, 5: lambda: m * (2 * m + 1) + 1 + 2 * m}
            expected = fixed[fid] if fid in fixed else want[fid]()
            _check(aut_dim(p) == expected, f"family {fid} {p}: dim Aut {aut_dim(p)}")
            n += 1
    _check(weyl_dim(SimpleType("A", 1), (0,)) == 1, "dim V(0)")
    _check(group_dim(SimpleType("G", 2)) == 14, "dim G2")
    return n + 2


SUITES: dict[str, Callable[[], int]] = {
    "root_counts": suite_root_counts,
    "weyl_words": suite_weyl_words,
    "classification": suite_classification,
    "picard_tables": suite_picard,
    "dimension_identities": suite_dimensions,
    "pairing_values": suite_pairings,
    "section_modules": suite_sections,
    "aut_dimensions": suite_aut_dims,
}


def run_selftest(echo: Callable[[str], None] = print) -> bool:
    ok = True
    for name, suite in SUITES.items():
        try:
            n = suite()
        except Exception as exc:  # any exception is a failed suite
            ok = False
            echo(f"FAIL  {name}: {type(exc).__name__}: {exc}")
        else:
            echo(f"PASS  {name} ({n} checks)")
    passed = "all suites passed" if ok else "FAILURES"
    echo(f"{len(SUITES)} suites: {passed}")
    return ok
