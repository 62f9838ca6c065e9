"""Comodules with a geometric normal basis and the product of their witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field

from .comodules import Comodule, bullet_comodule, regular
from .exactlin import (
    Kron,
    LegPermutation,
    Morphism,
    ShapeMismatch,
    compose,
    factor_through_tensor,
    identity,
    inverse,
    is_invertible,
    kron,
)
from .galois import GaloisObject, SearchResult, bullet_galois, find_comodule_iso
from .report import Report
from .structures import UnitalMagma, tensor_magma


@dataclass(frozen=True)
class GnbWitness:
    """``h: S (x) M -> S (x) H`` for a comodule M and a scaffold magma S."""

    comodule: Comodule
    scaffold: UnitalMagma
    h: Morphism
    h_inv: Morphism | None = field(default=None, compare=False)

    def __post_init__(self):
        s, m, dh = self.scaffold.dim, self.comodule.dim, self.comodule.hopf.dim
        if s == 0:
            raise ShapeMismatch("the scaffold must be nonzero")
        if self.h.shape != (s * dh, s * m):
            raise ShapeMismatch(f"h has shape {self.h.shape}, expected {(s * dh, s * m)}")

    @property
    def hopf(self):
        return self.comodule.hopf


def gnb_from_galois(a: GaloisObject) -> GnbWitness:
    return GnbWitness(a.base.comodule, a.base.magma, a.gamma, a.gamma_inv)


def almost_lineal_form(w: GnbWitness):
    """``(mu_S (x) H) o (S (x) (h o (eta_S (x) M)))``."""
    f = w.scaffold.field
    s, m, dh = w.scaffold.dim, w.comodule.dim, w.hopf.dim
    at_unit = compose(w.h, kron(w.scaffold.eta, identity(f, m)))
    return compose(Kron(f, w.scaffold.mu, dh), Kron(f, s, at_unit), identity(f, s * m))


def verify_gnb(w: GnbWitness) -> Report:
    f = w.scaffold.field
    s, m, hq = w.scaffold.dim, w.comodule.dim, w.hopf
    rep = Report(f"geometric normal basis for {w.comodule.name or 'M'}")
    rep.flag("invertible", is_invertible(w.h))
    rep.equal(
        "comodule",
        compose(Kron(f, w.h, hq.dim), Kron(f, s, w.comodule.rho), identity(f, s * m)),
        compose(Kron(f, s, hq.delta), w.h),
        [s, m],
    )
    rep.equal("almost lineal", w.h, almost_lineal_form(w), [s, m])
    if w.h_inv is not None:
        rep.equal("inverse left", compose(w.h_inv, w.h), identity(f, s * m), [s, m])
        rep.equal("inverse right", compose(w.h, w.h_inv), identity(f, s * hq.dim), [s, hq.dim])
    return rep


def _g(wm, wn):
    """Factors of ``g = (S (x) c (x) H) o (h_M (x) h_N) o (S (x) c (x) N)``."""
    f = wm.scaffold.field
    s, r = wm.scaffold.dim, wn.scaffold.dim
    m, n, dh = wm.comodule.dim, wn.comodule.dim, wm.hopf.dim
    return (
        LegPermutation(f, [s, dh, r, dh], [0, 2, 1, 3]),
        Kron(f, wm.h, wn.h),
        LegPermutation(f, [s, r, m, n], [0, 2, 1, 3]),
    )


def _g_inv(wm, wn, hm_inv, hn_inv):
    f = wm.scaffold.field
    s, r = wm.scaffold.dim, wn.scaffold.dim
    m, n, dh = wm.comodule.dim, wn.comodule.dim, wm.hopf.dim
    return (
        LegPermutation(f, [s, m, r, n], [0, 2, 1, 3]),
        Kron(f, hm_inv, hn_inv),
        LegPermutation(f, [s, r, dh, dh], [0, 2, 1, 3]),
    )


@dataclass(frozen=True)
class GnbProduct:
    witness: GnbWitness
    inclusion: Morphism
    report: Report = field(compare=False, repr=False)


def gnb_product(wm: GnbWitness, wn: GnbWitness) -> GnbProduct:
    """Witness for ``M.N`` with scaffold ``S (x) R``."""
    if wm.hopf != wn.hopf:
        raise ValueError("witnesses over different Hopf quasigroups")
    hq = wm.hopf
    f = hq.field
    bp = bullet_comodule(wm.comodule, wn.comodule)
    i = bp.inclusion
    T = tensor_magma(wm.scaffold, wn.scaffold)
    t, k = T.dim, bp.dim
    target = compose(*_g(wm, wn), Kron(f, t, i), identity(f, t * k))
    h = factor_through_tensor(t, hq.delta, target)
    hm_inv = wm.h_inv if wm.h_inv is not None else inverse(wm.h)
    hn_inv = wn.h_inv if wn.h_inv is not None else inverse(wn.h)
    inv_target = compose(*_g_inv(wm, wn, hm_inv, hn_inv), Kron(f, t, hq.delta), identity(f, t * hq.dim))
    h_inv = factor_through_tensor(t, i, inv_target)
    w = GnbWitness(bp.result, T, h, h_inv)
    rep = verify_gnb(w)
    rep.equal(
        "product defining equation",
        compose(Kron(f, t, hq.delta), h),
        target,
        [t, k],
    )
    rep.equal(
        "inverse defining equation",
        compose(Kron(f, t, i), h_inv),
        inv_target,
        [t, hq.dim],
    )
    return GnbProduct(w, i, rep)


def omega_coherence(a: GaloisObject, b: GaloisObject, seed=None) -> SearchResult:
    """Invertible comodule map between the two underlying comodules of ``A.B``."""
    via_gnb = gnb_product(gnb_from_galois(a), gnb_from_galois(b)).witness.comodule
    via_galois = bullet_galois(a, b).result.base.comodule
    return find_comodule_iso(via_gnb, via_galois, seed)


def omega_trivial(w: GnbWitness, seed=None) -> SearchResult:
    """Whether the underlying comodule is isomorphic to H itself."""
    return find_comodule_iso(w.comodule, regular(w.hopf).comodule, seed)
