"""Acceptance criteria, one test each, at the required tolerances and time budgets.

Each test prints and records a PASS/FAIL line; pytest shows them in an
"acceptance criteria" section of the summary.  Run ``python3 tests/test_acceptance.py``
for the lines alone.
"""
import random
import time

import numpy as np

from qhopf.algebras import ISOMETRY, REGISTRY, SUQ2, gens
from qhopf.hopf import CIRCLE_HOPF, SUQ2_HOPF, hopf_axiom_report
from qhopf.kconn import (
    bass_idempotent, check_strong_connection, circle_connection, combine_connections,
    explicit_connection, index_pairing, projection_EN, projection_pN, trivial_connection,
)
from qhopf.ncpoly import NCPoly, check_confluence, normalize
from qhopf.oprep import RepConfig, elementary_matrix, letter_product, matrix_unit, represent

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # standalone run
    ACCEPTANCE_LINES = {}

Q_GRID = (0.25, 0.5, 0.75)


def _record(key, title, passed, detail):
    line = f"[{'PASS' if passed else 'FAIL'}] C{key} {title}: {detail}"
    ACCEPTANCE_LINES[key] = line
    print(line)
    return passed


def _timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def criterion_1():
    def run():
        return max(abs(index_pairing("id-eps", projection_pN(n), q, 128) - n)
                   for q in Q_GRID for n in range(-5, 6))
    err, secs = _timed(run)
    ok = err <= 1e-9 and secs < 5
    return _record(1, "winding pairing <(id,eps),p_N> = N", ok,
                   f"max error {err:.2e}, {secs:.2f} s (limit 1e-9, 5 s)")


def criterion_2():
    def run():
        return max(abs(index_pairing("eps-eps0", projection_pN(n), q, 128) - 1)
                   for q in Q_GRID for n in range(-5, 6))
    err, secs = _timed(run)
    ok = err <= 1e-9 and secs < 5
    return _record(2, "rank pairing <(eps,eps0),p_N> = 1", ok,
                   f"max error {err:.2e}, {secs:.2f} s (limit 1e-9, 5 s)")


def criterion_3():
    def run():
        return max(abs(index_pairing("id-eps", projection_EN(n), 0.5, 200)
                       - index_pairing("id-eps", projection_pN(-n), 0.5, 200))
                   for n in range(-4, 5))
    err, secs = _timed(run)
    ok = err <= 1e-6 and secs < 30
    return _record(3, "E_N and p_-N pair equally", ok,
                   f"max gap {err:.2e}, {secs:.2f} s (limit 1e-6, 30 s)")


def criterion_4():
    s = gens(ISOMETRY)
    bad = [n for n in range(0, 7)
           if bass_idempotent(s["S"] ** n, s["S*"] ** n) != projection_pN(-n).padded(2)]
    return _record(4, "Bass idempotent collapses to p_-N", not bad,
                   f"N = 0..6, mismatches {bad or 'none'}")


def criterion_5():
    explicit = explicit_connection()
    combined = combine_connections(trivial_connection(), circle_connection())
    rep_e = check_strong_connection(explicit, 8)
    rep_c = check_strong_connection(combined, 8)
    disagree = [n for n in range(-8, 1) if combined(n) != explicit(n)]
    ok = rep_e.passed and rep_c.passed and not disagree
    return _record(5, "strong connections certified", ok,
                   f"explicit {len(rep_e.failures())} failures, combined "
                   f"{len(rep_c.failures())} failures, disagreement at {disagree or 'no N'}")


def criterion_6():
    def run():
        reports = [check_confluence(p, 6) for p in REGISTRY.values()]
        hopf = [hopf_axiom_report(h) for h in (SUQ2_HOPF, CIRCLE_HOPF)]
        return reports, hopf
    (reports, hopf), secs = _timed(run)
    div = sum(len(r.divergences) for r in reports)
    rel = sum(len(r.relation_failures) for r in reports)
    words = sum(r.words_checked for r in reports)
    ok = div == 0 and rel == 0 and all(h.passed for h in hopf) and secs < 60
    return _record(6, "rewriting soundness", ok,
                   f"{len(reports)} presentations, {words} words, {div} divergences, "
                   f"{rel} relation failures, Hopf {'ok' if all(h.passed for h in hopf) else 'FAIL'}, "
                   f"{secs:.1f} s (limit 60 s)")


def criterion_7(seed=0):
    rng = random.Random(seed)
    conf = RepConfig("rho_suq2", 0.5, 64)
    worst = 0.0
    for _ in range(200):
        word = tuple(rng.choice(SUQ2.letters) for _ in range(rng.randint(1, 5)))
        exact = represent(NCPoly.raw(SUQ2, {word: 1}), conf).matrix
        naive = letter_product(word, conf).matrix
        k = 64 - len(word)
        worst = max(worst, float(np.abs(exact[:k, :k] - naive[:k, :k]).max()))
    return _record(7, "representation is a homomorphism", worst <= 1e-10,
                   f"200 words, max residual {worst:.2e} (limit 1e-10)")


def criterion_8():
    worst = 0.0
    count = 0
    for q in Q_GRID:
        for n in range(0, 9):
            for m in range(-n, 9 - n):
                if n + abs(m) > 8:
                    continue
                e = elementary_matrix(n, m, q, 64).matrix
                worst = max(worst, float(np.abs(e - matrix_unit(n + m, n, 64)).max()))
                count += 1
    return _record(8, "elementary matrices", worst <= 1e-9,
                   f"{count} cases, max error {worst:.2e} (limit 1e-9)")


def criterion_9():
    bad = []
    for n in range(-6, 7):
        e = projection_EN(n)
        one = NCPoly.scalar(SUQ2, 1)
        if normalize(e.normalization()) != one or set(e.entry_weights().values()) != {0}:
            bad.append(n)
    return _record(9, "E_N consistency", not bad, f"|N| <= 6, failures at {bad or 'none'}")


def test_c1_winding_pairing():
    assert criterion_1()


def test_c2_rank_pairing():
    assert criterion_2()


def test_c3_en_matches_p_minus_n():
    assert criterion_3()


def test_c4_bass_collapse():
    assert criterion_4()


def test_c5_strong_connections():
    assert criterion_5()


def test_c6_rewriting_soundness():
    assert criterion_6()


def test_c7_representation_fidelity(seed):
    assert criterion_7(seed)


def test_c8_elementary_matrices():
    assert criterion_8()


def test_c9_en_consistency():
    assert criterion_9()


if __name__ == "__main__":
    import sys
    results = [criterion_1(), criterion_2(), criterion_3(), criterion_4(), criterion_5(),
               criterion_6(), criterion_7(), criterion_8(), criterion_9()]
    sys.exit(0 if all(results) else 1)
