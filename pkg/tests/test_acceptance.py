"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line."""

import time
from functools import lru_cache
from itertools import product

import pytest
from conftest import hopf

from hopfq import corpus
from hopfq.comodules import (
    bullet,
    endo_inverse,
    equalizer_property,
    monoidal_report,
    regular,
)
from hopfq.exactlin import compose, identity, inverse
from hopfq.galois import (
    aut_grouplike_bijection,
    bullet_galois,
    dual_coquasigroup,
    grouplikes,
    h_iso,
    make_galois,
    opposite_galois,
    regular_closed_forms,
)
from hopfq.gnb import gnb_from_galois, gnb_product, omega_coherence, verify_gnb
from hopfq.loops import enumerate_ip_loops
from hopfq.structures import associativity_probe, loop_algebra, verify_hopf_quasigroup

GROUP_ALGEBRAS = ("qz2", "qz3", "qs3", "f7z3")
DEFINING = ("(a1)", "(a2-1)", "(a2-2)")


def verdict(capsys, n, ok, detail):
    with capsys.disabled():
        print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


@lru_cache(maxsize=None)
def hopf_corpus():
    return tuple(hopf(n) for n in GROUP_ALGEBRAS) + tuple(corpus.loop_algebras())


@lru_cache(maxsize=None)
def base_galois():
    regulars = [make_galois(regular(h)) for h in hopf_corpus()]
    twists = [make_galois(a) for a in (corpus.quadratic(), corpus.quaternions(), corpus.skew_z3())]
    return tuple(regulars + twists)


@lru_cache(maxsize=None)
def pairs():
    """Pairs of Galois objects over a common H."""
    out = [(g, g) for g in base_galois()]
    by_hopf = {}
    for g in base_galois():
        by_hopf.setdefault(g.hopf, []).append(g)
    for group in by_hopf.values():
        out += [(a, b) for a in group for b in group if a is not b]
    return tuple(out)


@lru_cache(maxsize=None)
def products():
    return tuple(bullet_galois(a, b) for a, b in pairs())


@lru_cache(maxsize=None)
def opposites():
    return tuple(opposite_galois(g) for g in base_galois())


def constructed_galois():
    return base_galois() + tuple(p.result for p in products()) + tuple(op for op, _ in opposites())


def test_criterion_01_axiom_suite(capsys):
    start = time.perf_counter()
    find_order = corpus.smallest_nonassociative_order.__wrapped__
    order = find_order()
    loops = [l for l in enumerate_ip_loops(order) if not l.is_associative()]
    algebras = [(hopf(n), True) for n in GROUP_ALGEBRAS]
    for loop in loops:
        for f in (corpus.QQ, corpus.F3):
            algebras.append((loop_algebra(loop, f), False))
    bad = []
    for h, associative in algebras:
        if not verify_hopf_quasigroup(h).passed:
            bad.append(f"axioms {h.name}")
        if associativity_probe(h.magma).passed != associative:
            bad.append(f"probe {h.name}")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 10 and len(loops) > 0
    verdict(capsys, 1, ok, f"{len(algebras)} algebras ({len(loops)} loops of order {order}), {elapsed:.2f}s {bad[:3]}")


def test_criterion_02_derived_identities(capsys):
    bad = []
    count = 0
    for h in hopf_corpus():
        rep = verify_hopf_quasigroup(h)
        derived = [c for c in rep.checks if c.tag.startswith("antipode-")]
        count += len(derived)
        if not any(c.tag == "antipode-involutive" for c in derived):
            bad.append(f"{h.name}: involutivity not checked")
        bad += [f"{h.name}: {c.tag}" for c in derived if not c.passed]
    verdict(capsys, 2, not bad, f"{count} derived identities on {len(hopf_corpus())} algebras {bad[:3]}")


def test_criterion_03_regular_closed_forms(capsys):
    bad = [h.name for h in hopf_corpus() if not regular_closed_forms(h).passed]
    verdict(capsys, 3, not bad, f"{len(hopf_corpus())} algebras {bad[:3]}")


def test_criterion_04_coinvariants(capsys):
    objs = constructed_galois()
    tags = ("coinvariants one-dimensional", "coinvariants spanned by unit")
    bad = [g.name for g in objs if not all(g.report[t].passed for t in tags)]
    verdict(capsys, 4, not bad, f"{len(objs)} Galois objects {bad[:3]}")


def test_criterion_05_gamma_inverse_identities(capsys):
    objs = constructed_galois()
    tags = ("gamma inverse, right coaction", "gamma inverse, left coaction")
    bad = [g.name for g in objs if not all(g.report[t].passed for t in tags)]
    verdict(capsys, 5, not bad, f"{len(objs)} Galois objects {bad[:3]}")


def test_criterion_06_products(capsys):
    bad = []
    strong_pairs = 0
    for p in products():
        if not p.report["beta is gamma inverse"].passed or not p.report.passed:
            bad.append(p.result.name)
        if p.left.strong and p.right.strong:
            strong_pairs += 1
            if not p.result.strong:
                bad.append(f"{p.result.name} not strong")
    verdict(capsys, 6, not bad, f"{len(products())} pairs, {strong_pairs} strong pairs {bad[:3]}")


def test_criterion_07_opposites(capsys):
    bad = []
    for g, (op, rep) in zip(base_galois(), opposites()):
        needed = ["opposite gamma inverse closed form", "opposite f"]
        if g.strong:
            needed.append("opposite strong")
        if not all(rep[t].passed for t in needed):
            bad.append(g.name)
    verdict(capsys, 7, not bad, f"{len(opposites())} opposites {bad[:3]}")


def test_criterion_08_inverse_law(capsys):
    bad = []
    strong = 0
    for g in base_galois():
        ic = h_iso(g)
        rep = ic.report
        ok = rep["h' o h"].passed and rep["h o h'"].passed and rep["h comodule morphism"].passed
        if g.strong:
            strong += 1
            ok = ok and rep["h preserves product"].passed and rep["h preserves unit"].passed
        if not ok:
            bad.append(g.name)
    verdict(capsys, 8, not bad, f"{len(base_galois())} objects, {strong} strong {bad[:3]}")


def test_criterion_09_monoidal_coherence(capsys):
    bad = []
    count = 0
    for name in ("qz2", "qz3"):
        H = regular(hopf(name))
        HH = bullet(H, H).result
        objs = (H, HH)
        for a, b, c, d in product(objs, repeat=4):
            count += 1
            if not monoidal_report(a, b, c, d).passed:
                bad.append(name)
    verdict(capsys, 9, not bad, f"{count} quadruples (pentagon + triangle) {bad[:3]}")


# frozen from tests/oracle.py: characters_over_q / characters_mod_p
GROUPLIKE_COUNTS = {"qz2": 2, "qz3": 1, "f7z3": 3}


def test_criterion_10_grouplikes(capsys):
    bad = []
    for name, count in GROUPLIKE_COUNTS.items():
        h = hopf(name)
        if len(grouplikes(dual_coquasigroup(h))) != count:
            bad.append(f"{name} count")
        first = aut_grouplike_bijection(h)
        b = aut_grouplike_bijection(h, automorphisms=first.automorphisms)
        if not b.report.passed or not b.report["commutative"].passed:
            bad.append(f"{name} report")
        for a in b.automorphisms:
            inv = endo_inverse(a, h)
            if compose(inv, a) != identity(h.field, h.dim) or inv != inverse(a):
                bad.append(f"{name} inverse")
    verdict(capsys, 10, not bad, f"counts {GROUPLIKE_COUNTS} {bad[:3]}")


def test_criterion_11_gnb(capsys):
    bad = []
    for g in base_galois():
        if not verify_gnb(gnb_from_galois(g)).passed:
            bad.append(f"witness {g.name}")
    tested = 0
    for a, b in pairs():
        prod = gnb_product(gnb_from_galois(a), gnb_from_galois(b))
        tags = ("product defining equation", "inverse defining equation")
        if not prod.report.passed or not all(prod.report[t].passed for t in tags):
            bad.append(f"product {a.name}.{b.name}")
        if not omega_coherence(a, b).found:
            bad.append(f"omega {a.name}.{b.name}")
        tested += 1
    verdict(capsys, 11, not bad, f"{len(base_galois())} witnesses, {tested} products {bad[:3]}")


def test_criterion_12_equalizer(capsys):
    bad = []
    total = 0
    for k, (a, b) in enumerate(pairs()):
        tally = equalizer_property(bullet(a.base, b.base), trials=100, seed=k)
        total += tally.trials
        if not tally.passed or tally.equalizing in (0, tally.trials):
            bad.append(f"{a.name}.{b.name}")
    verdict(capsys, 12, not bad, f"{len(pairs())} products, {total} test maps {bad[:3]}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
