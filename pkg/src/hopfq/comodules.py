"""Right H-comodules and comodule magmas, bullet products and their coherence maps.

The bullet product ``A.B`` is the equalizer of the two coactions on ``A (x) B``
that read the H-label off the left or the right factor.  It is realised as a
kernel, and every induced map is obtained by factoring through the inclusion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .exactlin import (
    FactorizationFailed,
    Kron,
    LegPermutation,
    Morphism,
    ShapeMismatch,
    compose,
    factor_through,
    factor_through_kron,
    factors_through,
    from_int_array,
    identity,
    inverse,
    is_invertible,
    kernel_basis,
    kron,
    rank,
)
from .report import Report
from .structures import (
    HopfQuasigroup,
    UnitalMagma,
    is_cocommutative,
    magma_morphism_report,
    opposite_magma,
    tensor_magma,
    unital_magma_report,
)


class NotCocommutative(ValueError):
    pass


class NotAMorphism(ValueError):
    def __init__(self, report, msg=None):
        self.report = report
        failed = ", ".join(c.tag for c in report.failed())
        super().__init__(msg or f"not a morphism: {failed}")


@dataclass(frozen=True)
class Comodule:
    """A right H-comodule: a space with coaction ``rho: M -> M (x) H``."""

    hopf: HopfQuasigroup
    dim: int
    rho: Morphism
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.rho.shape != (self.dim * self.hopf.dim, self.dim):
            raise ShapeMismatch(f"rho has shape {self.rho.shape} for dim {self.dim}")

    @property
    def field(self):
        return self.hopf.field


@dataclass(frozen=True)
class ComoduleMagma:
    hopf: HopfQuasigroup
    magma: UnitalMagma
    rho: Morphism
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.magma.field != self.hopf.field:
            raise ShapeMismatch("magma and Hopf quasigroup live over different fields")
        if self.rho.shape != (self.magma.dim * self.hopf.dim, self.magma.dim):
            raise ShapeMismatch(f"rho has shape {self.rho.shape} for dim {self.magma.dim}")

    @property
    def dim(self):
        return self.magma.dim

    @property
    def field(self):
        return self.hopf.field

    @property
    def comodule(self):
        return Comodule(self.hopf, self.dim, self.rho, self.name)

    def __repr__(self):
        return f"ComoduleMagma({self.name or '?'}, dim={self.dim}, over {self.hopf.name or 'H'})"


def regular(h: HopfQuasigroup) -> ComoduleMagma:
    """H coacting on itself through its coproduct."""
    return ComoduleMagma(h, h.magma, h.delta, name=h.name or "H")


def trivial(h: HopfQuasigroup, magma: UnitalMagma = None, name="") -> ComoduleMagma:
    """``rho(x) = x (x) 1``."""
    magma = magma or h.magma
    rho = kron(identity(h.field, magma.dim), h.eta)
    return ComoduleMagma(h, magma, rho, name=name or "trivial")


# -- verification -----------------------------------------------------------


def comodule_report(m, rep=None):
    rep = rep or Report(f"comodule {m.name or ''}".strip())
    h, f, n = m.hopf, m.field, m.dim
    rep.equal(
        "comodule coassociativity",
        compose(Kron(f, m.rho, h.dim), m.rho),
        compose(Kron(f, n, h.delta), m.rho),
        [n],
    )
    rep.equal("comodule counit", compose(Kron(f, n, h.eps), m.rho), identity(f, n), [n])
    return rep


def verify_comodule_magma(a: ComoduleMagma) -> Report:
    n = a.dim
    rep = Report(f"comodule magma axioms for {a.name or 'A'}")
    unital_magma_report(a.magma, rep)
    comodule_report(a, rep)
    rep.equal("(b1) rho o eta", compose(a.rho, a.magma.eta), kron(a.magma.eta, a.hopf.eta))
    amh = tensor_magma(a.magma, a.hopf.magma)
    rep.equal(
        "(b2) rho o mu",
        compose(a.rho, a.magma.mu),
        compose(amh.mu, kron(a.rho, a.rho)),
        [n, n],
    )
    return rep


def comodule_morphism_report(f, src, dst, rep=None):
    """``rho_dst o f = (f (x) H) o rho_src``, plus magma checks for comodule magmas."""
    rep = rep or Report("comodule morphism")
    if f.shape != (dst.dim, src.dim):
        rep.flag("shape", False, note=f"{f.shape} vs {(dst.dim, src.dim)}")
        return rep
    h = src.hopf
    rep.equal(
        "comodule morphism",
        compose(dst.rho, f),
        compose(Kron(h.field, f, h.dim), src.rho),
        [src.dim],
    )
    if isinstance(src, ComoduleMagma) and isinstance(dst, ComoduleMagma):
        rep.extend(magma_morphism_report(f, src.magma, dst.magma))
    return rep


def is_comodule_morphism(f, src, dst):
    return comodule_morphism_report(f, src, dst).passed


def require_morphism(f, src, dst):
    rep = comodule_morphism_report(f, src, dst)
    if not rep.passed:
        raise NotAMorphism(rep)
    return rep


# -- tensor coactions -----------------------------------------------------------


def rho_first(a, b):
    """``(A (x) c_{H,B}) o (rho_A (x) B)``: the label comes from the left factor."""
    f, dh = a.field, a.hopf.dim
    return compose(
        LegPermutation(f, [a.dim, dh, b.dim], [0, 2, 1]),
        Kron(f, a.rho, b.dim),
        identity(f, a.dim * b.dim),
    )


def rho_second(a, b):
    """``A (x) rho_B``: the label comes from the right factor."""
    return kron(identity(a.field, a.dim), b.rho)


def tensor_comodule(a: ComoduleMagma, b: ComoduleMagma, mode=1) -> ComoduleMagma:
    _same_hopf(a, b)
    if mode not in (1, 2):
        raise ValueError("mode must be 1 or 2")
    rho = rho_first(a, b) if mode == 1 else rho_second(a, b)
    return ComoduleMagma(
        a.hopf,
        tensor_magma(a.magma, b.magma),
        rho,
        name=f"{a.name or 'A'}(x){mode}{b.name or 'B'}",
    )


def opposite_comodule(a: ComoduleMagma) -> ComoduleMagma:
    h = a.hopf
    if not is_cocommutative(h):
        raise NotCocommutative("opposite comodule magmas need a cocommutative H")
    rho = compose(Kron(h.field, a.dim, h.lam), a.rho)
    return ComoduleMagma(h, opposite_magma(a.magma), rho, name=f"op({a.name or 'A'})")


def _same_hopf(a, b):
    if a.hopf != b.hopf:
        raise ValueError("comodules over different Hopf quasigroups")


# -- bullet products ------------------------------------------------------------


@dataclass(frozen=True)
class BulletProduct:
    left: object
    right: object
    inclusion: Morphism
    result: object

    @property
    def dim(self):
        return self.inclusion.cols


@lru_cache(maxsize=256)
def bullet_comodule(m, n) -> BulletProduct:
    """Equalizer of the two tensor coactions on ``M (x) N``, for plain comodules."""
    _same_hopf(m, n)
    h = m.hopf
    i = kernel_basis(rho_first(m, n) - rho_second(m, n))
    rho = factor_through_kron([i, h.dim], compose(rho_second(m, n), i))
    res = Comodule(h, i.cols, rho, name=f"{m.name or 'M'}.{n.name or 'N'}")
    return BulletProduct(m, n, i, res)


@lru_cache(maxsize=256)
def bullet(a: ComoduleMagma, b: ComoduleMagma) -> BulletProduct:
    _same_hopf(a, b)
    h, f = a.hopf, a.field
    i = kernel_basis(rho_first(a, b) - rho_second(a, b))
    ab = tensor_magma(a.magma, b.magma)
    eta = factor_through(i, ab.eta)
    mu = factor_through(i, compose(ab.mu, kron(i, i)))
    rho = factor_through_kron([i, h.dim], compose(rho_second(a, b), i))
    res = ComoduleMagma(h, UnitalMagma(f, i.cols, mu, eta), rho, name=f"({a.name or 'A'}.{b.name or 'B'})")
    return BulletProduct(a, b, i, res)


def bullet_report(bp: BulletProduct) -> Report:
    """Defining equations of the induced structure on a bullet product."""
    a, b, i = bp.left, bp.right, bp.inclusion
    f, h = a.field, a.hopf
    rep = Report(f"bullet product {bp.result.name}")
    rep.equal("equalizer", compose(rho_first(a, b), i), compose(rho_second(a, b), i), [i.cols])
    rep.flag("inclusion injective", rank(i) == i.cols)
    rep.equal(
        "induced coaction",
        compose(Kron(f, i, h.dim), bp.result.rho),
        compose(rho_second(a, b), i),
        [i.cols],
    )
    if isinstance(bp.result, ComoduleMagma):
        ab = tensor_magma(a.magma, b.magma)
        r = bp.result.magma
        rep.equal("induced unit", compose(i, r.eta), ab.eta)
        rep.equal("induced product", compose(i, r.mu), compose(ab.mu, kron(i, i)), [i.cols, i.cols])
    return rep


def bullet_morphism(f, g, src: BulletProduct, dst: BulletProduct) -> Morphism:
    """Unique ``f.g`` with ``i_dst o (f.g) = (f (x) g) o i_src``."""
    require_morphism(f, src.left, dst.left)
    require_morphism(g, src.right, dst.right)
    return factor_through(dst.inclusion, compose(kron(f, g), src.inclusion))


def bullet_of(a, b):
    if isinstance(a, ComoduleMagma) and isinstance(b, ComoduleMagma):
        return bullet(a, b)
    return bullet_comodule(a.comodule if isinstance(a, ComoduleMagma) else a,
                           b.comodule if isinstance(b, ComoduleMagma) else b)


# -- coherence isomorphisms -------------------------------------------------------


def tau(a, b) -> Morphism:
    """``tau: A.B -> B.A`` with ``i_{B.A} o tau = c o i_{A.B}``."""
    ab, ba = bullet_of(a, b), bullet_of(b, a)
    c = LegPermutation(a.field, [a.dim, b.dim], [1, 0])
    return factor_through(ba.inclusion, compose(c, ab.inclusion))


def assoc_n(a, b, d) -> Morphism:
    """``n: A.(B.D) -> (A.B).D``."""
    f = a.field
    ab = bullet_of(a, b)
    bd = bullet_of(b, d)
    a_bd = bullet_of(a, bd.result)
    ab_d = bullet_of(ab.result, d)
    # h: A.(B.D) -> (A.B) (x) D
    target = compose(Kron(f, a.dim, bd.inclusion), a_bd.inclusion)
    h = factor_through_kron([ab.inclusion, d.dim], target)
    return factor_through(ab_d.inclusion, h)


def unit_r(a) -> Morphism:
    """``r: A.H -> A`` with ``rho_A o r = i_{A.H}``."""
    ah = bullet_of(a, regular(a.hopf))
    return factor_through(a.rho, ah.inclusion)


def unit_l(b) -> Morphism:
    """``l: H.B -> B``, the composite of ``tau_{H,B}`` with ``r_B``."""
    return compose(unit_r(b), tau(regular(b.hopf), b))


def associator(a, b, d) -> Morphism:
    """``(A.B).D -> A.(B.D)``, the inverse of ``assoc_n``."""
    return inverse(assoc_n(a, b, d))


def iso_report(tag, m, src, dst, rep):
    """Invertibility plus comodule (magma) morphism checks for a constructed isomorphism."""
    rep.flag(f"{tag} invertible", is_invertible(m))
    sub = comodule_morphism_report(m, src, dst)
    rep.extend(sub, prefix=f"{tag}: ")
    return rep


def coherence_report(a, b, d=None) -> Report:
    """Defining equations, invertibility and morphism checks of tau, n and r."""
    rep = Report("bullet product coherence")
    f = a.field
    ab, ba = bullet_of(a, b), bullet_of(b, a)
    t = tau(a, b)
    rep.equal(
        "tau defining equation",
        compose(ba.inclusion, t),
        compose(LegPermutation(f, [a.dim, b.dim], [1, 0]), ab.inclusion),
        [ab.dim],
    )
    iso_report("tau", t, ab.result, ba.result, rep)
    rep.equal("tau symmetric", compose(tau(b, a), t), identity(f, ab.dim), [ab.dim])
    r = unit_r(a)
    ah = bullet_of(a, regular(a.hopf))
    rep.equal("r defining equation", compose(a.rho, r), ah.inclusion, [ah.dim])
    rep.equal("r counit form", r, compose(Kron(f, a.dim, a.hopf.eps), ah.inclusion), [ah.dim])
    iso_report("r", r, ah.result, a, rep)
    if d is not None:
        n = assoc_n(a, b, d)
        bd = bullet_of(b, d)
        a_bd = bullet_of(a, bd.result)
        ab_d = bullet_of(ab.result, d)
        rep.equal(
            "n defining equation",
            compose(Kron(f, ab.inclusion, d.dim), ab_d.inclusion, n),
            compose(Kron(f, a.dim, bd.inclusion), a_bd.inclusion),
            [a_bd.dim],
        )
        iso_report("n", n, a_bd.result, ab_d.result, rep)
    return rep


def _bullet_id_left(a, g, src_right, dst_right):
    """``A.g`` for ``g: src_right -> dst_right``."""
    return bullet_morphism(identity(a.field, a.dim), g, bullet_of(a, src_right), bullet_of(a, dst_right))


def _bullet_id_right(f, src_left, dst_left, d):
    return bullet_morphism(f, identity(d.field, d.dim), bullet_of(src_left, d), bullet_of(dst_left, d))


def pentagon(a, b, c, d):
    """Both sides of the pentagon, as maps ``A.(B.(C.D)) -> ((A.B).C).D``."""
    ab = bullet_of(a, b).result
    cd = bullet_of(c, d).result
    bc = bullet_of(b, c).result
    lhs = compose(assoc_n(ab, c, d), assoc_n(a, b, cd))
    bc_d = bullet_of(bc, d).result
    b_cd = bullet_of(b, cd).result
    a_bc = bullet_of(a, bc).result
    ab_c = bullet_of(ab, c).result
    rhs = compose(
        _bullet_id_right(assoc_n(a, b, c), a_bc, ab_c, d),
        assoc_n(a, bc, d),
        _bullet_id_left(a, assoc_n(b, c, d), b_cd, bc_d),
    )
    return lhs, rhs


def triangle(a, b):
    """Both sides of the triangle, as maps ``A.(H.B) -> A.B``."""
    hq = regular(a.hopf)
    ah = bullet_of(a, hq).result
    hb = bullet_of(hq, b).result
    lhs = compose(_bullet_id_right(unit_r(a), ah, a, b), assoc_n(a, hq, b))
    rhs = _bullet_id_left(a, unit_l(b), hb, b)
    return lhs, rhs


def monoidal_report(a, b, c, d) -> Report:
    rep = Report("monoidal coherence")
    lhs, rhs = pentagon(a, b, c, d)
    rep.equal("pentagon", lhs, rhs, [lhs.cols])
    lhs, rhs = triangle(a, b)
    rep.equal("triangle", lhs, rhs, [lhs.cols])
    return rep


# -- endomorphisms of H ---------------------------------------------------------


def endo_inverse(alpha, h: HopfQuasigroup) -> Morphism:
    """``(H (x) (eps o alpha o lam)) o delta``, inverse to a comodule magma endomorphism of H."""
    if not is_cocommutative(h):
        raise NotCocommutative("endomorphism inverses need a cocommutative H")
    hq = regular(h)
    require_morphism(alpha, hq, hq)
    return compose(Kron(h.field, h.dim, compose(h.eps, alpha, h.lam)), h.delta)


# -- the equalizer universal property --------------------------------------------


@dataclass(frozen=True)
class UniversalTally:
    trials: int
    equalizing: int
    agree: int
    unique: bool

    @property
    def passed(self):
        return self.agree == self.trials and self.unique


def equalizer_property(bp: BulletProduct, trials=100, seed=0, width=2) -> UniversalTally:
    """Random test maps ``t: K^width -> A (x) B``.

    Half are drawn inside the equalizer, half are unconstrained; for each the
    existence of a factorization through the inclusion must match the
    equalizing condition.  Uniqueness follows from injectivity of ``i``.
    """
    a, b, i = bp.left, bp.right, bp.inclusion
    f = a.field
    r1, r2 = rho_first(a, b), rho_second(a, b)
    rng = np.random.default_rng(seed)
    hits = agree = 0
    for k in range(trials):
        if k % 2 == 0 and i.cols:
            x = from_int_array(f, rng.integers(-3, 4, size=(i.cols, width)))
            t = compose(i, x)
        else:
            t = from_int_array(f, rng.integers(-3, 4, size=(i.rows, width)))
        eq = compose(r1, t) == compose(r2, t)
        hits += eq
        ok = factors_through(i, t)
        if ok:
            try:
                x = factor_through(i, t)
                ok = compose(i, x) == t
            except FactorizationFailed:
                ok = False
        agree += ok == eq
    return UniversalTally(trials, hits, agree, rank(i) == i.cols)
