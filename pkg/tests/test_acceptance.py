"""Acceptance criteria A1-A6; each test prints one PASS/FAIL line with its runtime."""
import time

import numpy as np

from tprop import aleph, free, strata
from tprop.aleph import alpha, beta, jacobiator, mc_defect, psi_bar, theta_bar
from tprop.axioms import check_axioms
from tprop.bi import OPS, NotABialgebraError, check_phi_morphism, check_transport, square_images
from tprop.bialgebras import b1, b2, compatibility_defect
from tprop.tensor import TensorMap

from oracles import compatible_assignment


def _line(name, ok, seconds, limit, detail=""):
    status = "PASS" if ok and seconds < limit else "FAIL"
    extra = f"; {detail}" if detail else ""
    return f"{name} {status} ({seconds:.1f}s, limit {limit}s{extra})"


def test_a1_axioms_in_end_v(acceptance):
    start = time.perf_counter()
    failures = []
    for d in (1, 2, 3):
        report = check_axioms(d=d, arity_bound=6, trials=100, seed=d)
        failures += [(d, r.name, r.witness) for r in report.failures()]
    elapsed = time.perf_counter() - start
    acceptance(_line("A1", not failures, elapsed, 60, f"{len(failures)} failing axioms"))
    assert not failures, failures
    assert elapsed < 60


def test_a2_bi_soundness(acceptance):
    start = time.perf_counter()
    problems = []
    for op in OPS:
        report = check_transport(op, trials=20, seed=1)
        problems += [r.witness for r in report.failures()]
    left, right = square_images(b1().star, b1().delta)
    if left != right:
        problems.append("B1 square images differ")
    report = check_phi_morphism(b1().star, b1().delta, arity_bound=4, trials=20)
    problems += [r.witness for r in report.failures()]
    bi2 = b2()
    try:
        check_phi_morphism(bi2.star, bi2.delta)
        problems.append("phi accepted B2")
    except NotABialgebraError:
        pass
    left, right = square_images(bi2.star, bi2.delta)
    defect = compatibility_defect(bi2.star, bi2.delta)
    if defect.is_zero() or left - right != defect:
        problems.append("B2 square images do not exhibit the compatibility defect")
    elapsed = time.perf_counter() - start
    acceptance(_line("A2", not problems, elapsed, 30))
    assert not problems, problems
    assert elapsed < 30


def test_a3_strata_complexes(acceptance):
    start = time.perf_counter()
    problems = []
    for total in range(3, 7):
        for m in range(1, total):
            n = total - m
            try:
                cx = strata.assemble_and_verify(m, n)
            except strata.BoundarySquareError as exc:
                problems.append(str(exc))
                continue
            f = cx.f_vector()
            if cx.homology_ranks() != [1] + [0] * (len(f) - 1) or cx.euler_characteristic() != 1:
                problems.append(f"K({m},{n}) homology {cx.homology_ranks()}")
    if strata.f_vector(2, 2) != [2, 1]:
        problems.append("K(2,2) f-vector")
    if strata.f_vector(1, 4) != [5, 5, 1]:
        problems.append("K(1,4) f-vector")
    elapsed = time.perf_counter() - start
    acceptance(_line("A3", not problems, elapsed, 120))
    assert not problems, problems
    assert elapsed < 120


def _random_bar(rng):
    if rng.integers(2):
        return psi_bar(TensorMap.random(int(rng.integers(2, 4)), 1, 2, rng))
    return theta_bar(TensorMap.random(1, int(rng.integers(2, 4)), 2, rng))


def _random_generator(rng):
    return alpha(TensorMap.random(2, 2, 2, rng)) if rng.integers(3) == 0 else _random_bar(rng)


def test_a4_brackets_and_maurer_cartan(acceptance):
    start = time.perf_counter()
    rng = np.random.default_rng(4)
    sub = {}

    ok = True
    for _ in range(100):
        x, y = _random_generator(rng), _random_generator(rng)
        sign = -1 if (x.degrees().pop() * y.degrees().pop()) % 2 else 1
        ok &= aleph.bracket(x, y) == aleph.bracket(y, x).scale(-sign)
        ps = [TensorMap.random(int(rng.integers(2, 4)), 1, 2, rng) for _ in range(3)]
        br = aleph.gerstenhaber_bracket
        eps = -1 if (ps[0].m - 1) * (ps[1].m - 1) % 2 else 1
        ok &= br(ps[0], br(ps[1], ps[2])) == br(br(ps[0], ps[1]), ps[2]) + br(ps[1], br(ps[0], ps[2])).scale(eps)
    sub["antisymmetry and Jacobi"] = ok

    B1, B2 = b1(), b2()
    d2 = mc_defect(B2.star, B2.delta)
    sub["Maurer-Cartan"] = (
        mc_defect(B1.star, B1.delta).is_zero()
        and not d2.is_zero()
        and d2 == alpha(compatibility_defect(B2.star, B2.delta))
    )

    ok = True
    for which in ("I_G", "I^G", "I"):
        for _ in range(3):
            ctx = [TensorMap.random(2, 1, 2, rng), TensorMap.random(2, 1, 2, rng),
                   TensorMap.random(1, 2, 2, rng), TensorMap.random(1, 2, 2, rng)]
            ps, ts = [psi_bar(c) for c in ctx[:2]], [theta_bar(c) for c in ctx[2:]]
            triple = {"I_G": (ps[0], ps[1], ps[0]), "I^G": (ts[0], ts[1], ts[1]), "I": (ps[0], ts[0], ps[1])}[which]
            ok &= bool(aleph.ideal_membership(jacobiator(*triple), which, ctx))
    sub["ideal membership"] = ok

    mismatches, deformations = 0, 0
    for k in range(50):
        if k % 2 == 0:
            p1, t1 = aleph.gauge_deformation(B1.star, B1.delta, TensorMap.random(1, 1, 2, rng))
        else:
            p1, t1 = TensorMap.random(2, 1, 2, rng), TensorMap.random(1, 2, 2, rng)
        first_order = aleph.is_first_order_deformation(B1.star, B1.delta, p1, t1)
        killed = aleph.twisted_differential(B1.star, B1.delta, psi_bar(p1) + theta_bar(t1)).is_zero()
        deformations += first_order
        mismatches += first_order != killed
    sub["first-order criterion"] = mismatches == 0

    elapsed = time.perf_counter() - start
    failed = [name for name, good in sub.items() if not good]
    detail = "failing: " + ", ".join(failed) if failed else "all subchecks"
    detail += f"; first-order mismatches {mismatches}/50 ({deformations} deformations)"
    acceptance(_line("A4", not failed, elapsed, 60, detail))
    assert not failed, detail
    assert elapsed < 60


def test_a5_tangency(acceptance):
    start = time.perf_counter()
    report = aleph.tangency_check(trials=100, d=2, bound=5)
    elapsed = time.perf_counter() - start
    acceptance(_line("A5", report.passed, elapsed, 30))
    assert report.passed, report.failures()
    assert elapsed < 30


def _symbols(e):
    if isinstance(e, free.Gen):
        return {e.symbol}
    return _symbols(e.left) | _symbols(e.right)


def test_a6_free_words(acceptance):
    start = time.perf_counter()
    rng = np.random.default_rng(6)
    exprs = free.enumerate_expressions(free.default_generators(5), 5)
    problems = []
    checked = 0
    while checked < 100:
        e1, e2 = exprs[int(rng.integers(len(exprs)))], exprs[int(rng.integers(len(exprs)))]
        op = OPS[int(rng.integers(len(OPS)))]
        w1, w2 = free.normal_form(e1), free.normal_form(e2)
        idx = None if op == "circledcirc" else int(rng.integers(1, (w1.n if op in ("circ", "circled") else w2.m) + 1))
        e = free.Op(op, e1, e2, idx)
        try:
            w = free.normal_form(e)
        except free.FreeWordError:
            continue
        checked += 1
        a = compatible_assignment(_symbols(e), rng)
        direct = free.end_apply(op, free.evaluate(w1, a), free.evaluate(w2, a), idx)
        if free.evaluate(w, a) != direct:
            problems.append(f"homomorphism: {e}")
        if free.normal_form(w) != w:
            problems.append(f"idempotence: {e}")
        if free.evaluate_expr(e, a) != free.evaluate(w, a):
            problems.append(f"invariance: {e}")
    report = free.compare_with_orbits(exprs)
    if not report.agrees:
        problems.append(f"oracle: {len(report.unsound)} unsound, {len(report.split)} split")
    elapsed = time.perf_counter() - start
    acceptance(_line("A6", not problems, elapsed, 60, f"{checked} composed pairs, {report.classes} classes"))
    assert not problems, problems[:5]
    assert elapsed < 60
