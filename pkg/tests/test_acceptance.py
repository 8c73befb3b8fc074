"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

All equality checks are exact (canonical-form polynomial matrices, letter
tuples); the randomized criteria use fixed seeds so runs are reproducible.
Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
"""
import json
import random
import time
from itertools import product

from helpers import random_word, relation_identities
from mnmap.kernel import bigelow_alpha, search_kernel, verify_theorem1, verify_theorem2
from mnmap.maps import cancellation_defect, mn_map, project_pk
from mnmap.reps import artin_apply, burau, is_trivial_braid, rho_word
from mnmap.words import (
    CLASSICAL,
    CYLINDRICAL,
    Flavor,
    VCB,
    Word,
    classical,
    cylindrical,
    parse_word,
    sigma,
)

SEED = 20250808


def report(num: int, label: str, ok: bool, extra: str = "") -> None:
    verdict = "PASS" if ok else "FAIL"
    suffix = f" ({extra})" if extra else ""
    print(f"criterion {num:2d} [{label}]: {verdict}{suffix}")
    assert ok, f"criterion {num} [{label}] failed"


def test_criterion_1_burau_kernel_witness():
    start = time.perf_counter()
    alpha = bigelow_alpha()
    identity = burau(alpha).is_identity()
    nontrivial = not is_trivial_braid(alpha)
    elapsed = time.perf_counter() - start
    ok = identity and nontrivial and elapsed < 10.0
    report(1, "burau kernel witness", ok, f"{elapsed:.2f}s")


def test_criterion_2_theorem1_reproduction():
    start = time.perf_counter()
    reports = {d: verify_theorem1(d) for d in (1, 2, 3, 5)}
    all_passed = all(r.passed for r in reports.values())
    images_identical = all(r.image == reports[1].image
                           for r in reports.values())
    elapsed = time.perf_counter() - start
    ok = all_passed and images_identical and elapsed < 30.0
    report(2, "theorem 1 for d in {1,2,3,5}", ok, f"{elapsed:.2f}s")


def test_criterion_3_theorem2_reproduction():
    start = time.perf_counter()
    ok = True
    for m in (1, 2, 3):
        for k in range(1, 2 * m + 1):
            ok = ok and verify_theorem2(m, k).passed
            witness = Word(classical(2 * m + 1), (sigma(k, -1),) * (2 * m))
            ok = ok and project_pk(witness, k) == parse_word(
                f"z^{2 * m}", cylindrical(2 * m))
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 5.0
    report(3, "theorem 2 for m<=3, all k", ok, f"{elapsed:.2f}s")


def test_criterion_4_relation_suite():
    count = 0
    ok = True
    for n in (3, 4, 5, 6):
        for name, left, right in relation_identities(n):
            count += 1
            if rho_word(left) != rho_word(right):
                ok = False
    ok = ok and count >= 60
    report(4, "representation relations", ok, f"{count} identities")


def test_criterion_5_specialization_oracle():
    rng = random.Random(SEED)
    checked = 0
    ok = True
    for group in (CLASSICAL, CYLINDRICAL, VCB):
        for _ in range(200):
            n = rng.randint(2, 6)
            w = random_word(rng, Flavor(group, n), rng.randint(0, 50))
            checked += 1
            if rho_word(w).specialize(1, 1) != w.permutation().matrix():
                ok = False
    report(5, "specialization oracle", ok, f"{checked} words")


def test_criterion_6_homomorphism_properties():
    rng = random.Random(SEED + 1)
    ok = True
    for _ in range(200):
        group = rng.choice((CLASSICAL, CYLINDRICAL, VCB))
        flavor = Flavor(group, rng.randint(2, 6))
        a = random_word(rng, flavor, rng.randint(0, 20))
        b = random_word(rng, flavor, rng.randint(0, 20))
        if rho_word(a * b) != rho_word(a) * rho_word(b):
            ok = False
        w = a * b.inverse()
        if rho_word(w.free_reduce()) != rho_word(w):
            ok = False
    report(6, "matrix map is multiplicative", ok, "200 pairs")


def test_criterion_7_determinant_law():
    rng = random.Random(SEED + 2)
    ok = True
    for _ in range(50):
        n = rng.randint(2, 5)
        w = random_word(rng, classical(n), rng.randint(0, 12))
        e = sum(letter.sign for letter in w)
        expected_sign = -1 if e % 2 else 1
        det = burau(w).det()
        if det.terms() != ((e, 0, expected_sign),):
            ok = False
    report(7, "det = (-t)^exponent-sum", ok, "50 words")


def test_criterion_8_search_oracle():
    start = time.perf_counter()
    first = search_kernel(n=2, k=1, d=1, max_len=4)
    second = search_kernel(n=2, k=1, d=1, max_len=4)
    threaded = search_kernel(n=2, k=1, d=1, max_len=4, workers=4)
    contains_witness = parse_word("s1^-2", classical(3)) in [
        r.word for r in first]
    reverified = all(mn_map(r.word, 1, 1).is_identity() and r.verified
                     for r in first)
    deterministic = first == second == threaded
    elapsed = time.perf_counter() - start
    ok = contains_witness and reverified and deterministic and elapsed < 10.0
    report(8, "kernel search", ok,
           f"{len(first)} hits, {elapsed:.2f}s")


# Defect matrices at the distinguished letters, frozen on first computation.
PINNED_DEFECTS = {
    (1, 1, 2, 1): '{"n": 2, "entries": [[[[0, 0, "1"]], []], [[[-1, 0, "-1"],'
                  ' [0, 0, "1"]], [[-1, 0, "1"]]]]}',
    (5, 6, 5, 1): '{"n": 5, "entries": [[[], [], [], [[0, 0, "1"]], []], [[[0'
                  ', 0, "1"], [1, 0, "-1"]], [[1, 0, "1"], [2, 0, "-1"]], [[2'
                  ', 0, "1"], [3, 0, "-1"]], [[3, 0, "1"], [4, 0, "-1"]], [[4'
                  ', 0, "1"]]], [[[0, 0, "1"]], [], [], [], []], [[], [[0, 0,'
                  ' "1"]], [], [], []], [[], [], [[0, 0, "1"]], [], []]]}',
    (1, 2, 3, 2): '{"n": 3, "entries": [[[], [[0, -2, "1"]], []], [[[0, 1, "1'
                  '"], [1, 1, "-1"]], [[1, 1, "1"], [2, 1, "-1"]], [[2, 1, "1'
                  '"]]], [[[0, 1, "1"]], [], []]]}',
    (2, 2, 3, 2): '{"n": 3, "entries": [[[], [], [[0, -1, "1"]]], [[[0, 2, "1'
                  '"]], [], []], [[[-1, 2, "-1"], [0, 2, "1"]], [[-2, -1, "1"'
                  ']], [[-2, -1, "-1"], [-1, -1, "1"]]]]}',
}


def test_criterion_9_cancellation_defect():
    ok = True
    regular = 0
    for n in (2, 3, 4, 5):
        for k in range(1, n + 2):
            for i in range(1, n + 1):
                if i in (k - 1, k) or not 1 <= k - i - 1 <= n - 1:
                    continue
                for d in (1, 2, 3):
                    regular += 1
                    if not cancellation_defect(i, k, n, d).is_identity():
                        ok = False
    for (i, k, n, d), pinned in PINNED_DEFECTS.items():
        emitted = json.dumps(cancellation_defect(i, k, n, d).to_json_obj())
        again = json.dumps(cancellation_defect(i, k, n, d).to_json_obj())
        print(f"defect(i={i}, k={k}, n={n}, d={d}): {emitted}")
        if emitted != pinned or again != pinned:
            ok = False
    report(9, "cancellation defect", ok,
           f"{regular} regular cases identity, {len(PINNED_DEFECTS)} pinned")


def test_criterion_10_oracle_agreement():
    flavor = classical(3)
    alphabet = [sigma(1), sigma(1, -1), sigma(2), sigma(2, -1)]
    checked = 0
    ok = True
    for length in range(0, 7):
        for combo in product(alphabet, repeat=length):
            w = Word(flavor, combo)
            checked += 1
            if is_trivial_braid(w) != artin_apply(w).is_identity():
                ok = False
    report(10, "oracle agreement on B_3, length <= 6", ok, f"{checked} words")
