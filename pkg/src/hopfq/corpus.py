"""The standard structures used by the command line tool and the test-suite."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .comodules import ComoduleMagma
from .exactlin import QQ, FieldSpec
from .galois import twisted_loop_algebra
from .loops import cyclic_table, direct_product_table, enumerate_ip_loops, loop_from_table, s3_table
from .structures import HopfQuasigroup, loop_algebra

F7 = FieldSpec(7)
F3 = FieldSpec(3)


def _named(loop, field, name, names):
    h = loop_algebra(loop, field, name)
    return h.with_(basis_names=tuple(names))


def qz2() -> HopfQuasigroup:
    return _named(loop_from_table(cyclic_table(2)), QQ, "Q[Z2]", ["e", "g"])


def qz3() -> HopfQuasigroup:
    return _named(loop_from_table(cyclic_table(3)), QQ, "Q[Z3]", ["e", "g", "g2"])


def f7z3() -> HopfQuasigroup:
    return _named(loop_from_table(cyclic_table(3)), F7, "F7[Z3]", ["e", "g", "g2"])


def qs3() -> HopfQuasigroup:
    names = ["".join(map(str, p)) for p in sorted(permutations(range(3)))]
    return _named(loop_from_table(s3_table()), QQ, "Q[S3]", names)


def qv4() -> HopfQuasigroup:
    t = direct_product_table(cyclic_table(2), cyclic_table(2))
    return _named(loop_from_table(t), QQ, "Q[Z2xZ2]", ["1", "b", "a", "ab"])


@lru_cache(maxsize=None)
def smallest_nonassociative_order(start=5, stop=8):
    """First order at which a nonassociative I.P. loop exists, searching upward."""
    for n in range(start, stop + 1):
        if any(not l.is_associative() for l in enumerate_ip_loops(n)):
            return n
    return None


@lru_cache(maxsize=None)
def nonassociative_loops():
    """Every normalized nonassociative I.P. loop of the smallest admitting order."""
    n = smallest_nonassociative_order()
    return tuple(l for l in enumerate_ip_loops(n) if not l.is_associative())


def group_algebras():
    return [qz2(), qz3(), qs3(), f7z3()]


def loop_algebras(fields=(QQ, F3)):
    out = []
    for k, loop in enumerate(nonassociative_loops()):
        for f in fields:
            out.append(loop_algebra(loop, f, f"{f}[L{loop.order}#{k + 1:02d}]"))
    return out


# -- twisted loop algebras (coaction u_x -> u_x (x) x) ------------------------------


def quadratic(d=2) -> ComoduleMagma:
    """``Q(sqrt d)`` graded by Z2: ``u_g^2 = d``."""
    return twisted_loop_algebra(qz2(), [[1, 1], [1, d]], name=f"Q(sqrt {d})")


def quaternions() -> ComoduleMagma:
    """The rational quaternions, graded by Z2 x Z2 (``a -> i``, ``b -> j``)."""
    # basis order 1, j, i, k
    sign = {
        ("i", "i"): -1, ("j", "j"): -1, ("k", "k"): -1,
        ("i", "j"): 1, ("j", "i"): -1,
        ("j", "k"): 1, ("k", "j"): -1,
        ("k", "i"): 1, ("i", "k"): -1,
    }
    labels = ["1", "j", "i", "k"]
    sigma = [[sign.get((x, y), 1) for y in labels] for x in labels]
    return twisted_loop_algebra(qv4(), sigma, name="quaternions")


def skew_z3() -> ComoduleMagma:
    """Z3-graded, ``u_g u_g = 2 u_{g^2}``; Galois but not strong."""
    return twisted_loop_algebra(qz3(), [[1, 1, 1], [1, 2, 1], [1, 1, 1]], name="skew Z3")


BUNDLED = {
    "qz2": qz2,
    "qz3": qz3,
    "qs3": qs3,
    "f7z3": f7z3,
    "qv4": qv4,
    "qsqrt2": quadratic,
    "quaternions": quaternions,
    "skewz3": skew_z3,
}


def write_bundle(directory):
    """Write every bundled structure as JSON into ``directory``."""
    from pathlib import Path

    from .io import save

    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    for name, make in BUNDLED.items():
        save(make(), d / f"{name}.json")
    for k, loop in enumerate(nonassociative_loops()):
        save(loop, d / f"loop{loop.order}_{k + 1:02d}.json", note="nonassociative I.P. loop")
