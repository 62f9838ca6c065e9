"""Unital magmas, comonoids and Hopf quasigroups given by structure constants.

All structure maps are Morphisms on a fixed basis: ``mu: H (x) H -> H``,
``eta: K -> H``, ``delta: H -> H (x) H``, ``eps: H -> K``, ``lam: H -> H``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .exactlin import (
    FieldSpec,
    Kron,
    LegPermutation,
    Morphism,
    ShapeMismatch,
    compose,
    from_int_array,
    identity,
    kron,
    symmetry,
)
from .loops import LoopTable, associativity_witness
from .report import Report, compare


@dataclass(frozen=True)
class UnitalMagma:
    field: FieldSpec
    dim: int
    mu: Morphism
    eta: Morphism

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise ShapeMismatch("a unital magma needs dimension >= 1")
        if self.mu.shape != (n, n * n) or self.eta.shape != (n, 1):
            raise ShapeMismatch(f"mu {self.mu.shape}, eta {self.eta.shape} for dim {n}")

    def product(self, x, y):
        """Product of two column vectors (n x 1 Morphisms)."""
        return compose(self.mu, kron(x, y))


@dataclass(frozen=True)
class Comonoid:
    field: FieldSpec
    dim: int
    delta: Morphism
    eps: Morphism

    def __post_init__(self):
        n = self.dim
        if self.delta.shape != (n * n, n) or self.eps.shape != (1, n):
            raise ShapeMismatch(f"delta {self.delta.shape}, eps {self.eps.shape} for dim {n}")


@dataclass(frozen=True)
class HopfQuasigroup:
    field: FieldSpec
    dim: int
    mu: Morphism
    eta: Morphism
    delta: Morphism
    eps: Morphism
    lam: Morphism
    name: str = ""
    loop: LoopTable | None = field(default=None, compare=False)
    basis_names: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        n = self.dim
        shapes = {
            "mu": (self.mu, (n, n * n)),
            "eta": (self.eta, (n, 1)),
            "delta": (self.delta, (n * n, n)),
            "eps": (self.eps, (1, n)),
            "lam": (self.lam, (n, n)),
        }
        for key, (m, shape) in shapes.items():
            if m.shape != shape:
                raise ShapeMismatch(f"{key} has shape {m.shape}, expected {shape}")
            if m.field != self.field:
                raise ShapeMismatch(f"{key} lives over {m.field}, expected {self.field}")

    @property
    def magma(self):
        return UnitalMagma(self.field, self.dim, self.mu, self.eta)

    @property
    def comonoid(self):
        return Comonoid(self.field, self.dim, self.delta, self.eps)

    @property
    def id(self):
        return identity(self.field, self.dim)

    def with_(self, **kw):
        return replace(self, **kw)

    def __repr__(self):
        return f"HopfQuasigroup({self.name or '?'}, dim={self.dim}, field={self.field})"


# -- generic magma helpers ------------------------------------------------


def tensor_magma(a: UnitalMagma, b: UnitalMagma) -> UnitalMagma:
    """``A (x) B`` with ``mu = (mu_A (x) mu_B) o (A (x) c_{B,A} (x) B)``."""
    m, n = a.dim, b.dim
    mu = LegPermutation(a.field, [m, n, m, n], [0, 2, 1, 3]).after(kron(a.mu, b.mu))
    return UnitalMagma(a.field, m * n, mu, kron(a.eta, b.eta))


def opposite_magma(a: UnitalMagma) -> UnitalMagma:
    return UnitalMagma(a.field, a.dim, compose(a.mu, symmetry(a.field, a.dim, a.dim)), a.eta)


def enveloping_magma(a: UnitalMagma) -> UnitalMagma:
    """``A^e``: the opposite magma tensored with ``A``."""
    return tensor_magma(opposite_magma(a), a)


def magma_morphism_report(f, src: UnitalMagma, dst: UnitalMagma, title="magma morphism"):
    rep = Report(title)
    if f.shape != (dst.dim, src.dim):
        rep.flag("shape", False, note=f"{f.shape} vs {(dst.dim, src.dim)}")
        return rep
    rep.equal("preserves unit", compose(f, src.eta), dst.eta)
    rep.equal(
        "preserves product",
        compose(dst.mu, kron(f, f)),
        compose(f, src.mu),
        [src.dim, src.dim],
    )
    return rep


def is_magma_morphism(f, src, dst):
    return magma_morphism_report(f, src, dst).passed


def associativity_probe(a: UnitalMagma):
    """Check of ``mu o (mu (x) A) = mu o (A (x) mu)``."""
    n = a.dim
    lhs = compose(a.mu, Kron(a.field, a.mu, n), identity(a.field, n ** 3))
    rhs = compose(a.mu, Kron(a.field, n, a.mu), identity(a.field, n ** 3))
    return compare("associativity", lhs, rhs, [n, n, n])


def is_associative(a):
    return associativity_probe(a).passed


def is_commutative(a: UnitalMagma):
    return compose(a.mu, symmetry(a.field, a.dim, a.dim)) == a.mu


def unital_magma_report(a: UnitalMagma, rep=None):
    rep = rep or Report("unital magma")
    n, f = a.dim, a.field
    rep.equal("unit-left", compose(a.mu, kron(a.eta, identity(f, n))), identity(f, n), [n])
    rep.equal("unit-right", compose(a.mu, kron(identity(f, n), a.eta)), identity(f, n), [n])
    return rep


def comagma_report(field, dim, delta, eps, rep=None, coassociative=True):
    rep = rep or Report("comonoid")
    n, f = dim, field
    i = identity(f, n)
    rep.equal("counit-left", compose(Kron(f, eps, n), delta), i, [n])
    rep.equal("counit-right", compose(Kron(f, n, eps), delta), i, [n])
    if coassociative:
        rep.equal(
            "coassociativity",
            compose(Kron(f, delta, n), delta),
            compose(Kron(f, n, delta), delta),
            [n],
        )
    return rep


def is_cocommutative(h):
    return compose(symmetry(h.field, h.dim, h.dim), h.delta) == h.delta


# -- the Hopf quasigroup axioms -------------------------------------------


def verify_hopf_quasigroup(h: HopfQuasigroup) -> Report:
    """Check every defining axiom and the identities that follow from them.

    Tags ``(a1)``, ``(a2-1)`` and ``(a2-2)`` name the defining axioms; the
    ``antipode-*`` checks are consequences and serve as consistency tests.
    """
    f, n = h.field, h.dim
    rep = Report(f"Hopf quasigroup axioms for {h.name or 'H'}")
    one = identity(f, 1)
    i = h.id
    i2 = identity(f, n * n)
    mu, eta, delta, eps, lam = h.mu, h.eta, h.delta, h.eps, h.lam
    swap = LegPermutation(f, [n, n], [1, 0])
    mid_swap = LegPermutation(f, [n, n, n, n], [0, 2, 1, 3])

    unital_magma_report(h.magma, rep)
    comagma_report(f, n, delta, eps, rep)

    # (a1): counit and coproduct are unital magma morphisms
    rep.equal("(a1) eps o mu", compose(eps, mu), kron(eps, eps), [n, n])
    rep.equal("(a1) eps o eta", compose(eps, eta), one)
    rep.equal(
        "(a1) delta o mu",
        compose(delta, mu),
        compose(Kron(f, mu, mu), mid_swap, kron(delta, delta)),
        [n, n],
    )
    rep.equal("(a1) delta o eta", compose(delta, eta), kron(eta, eta))

    eps_h = kron(eps, i)
    h_eps = kron(i, eps)
    dH = kron(delta, i)
    Hd = kron(i, delta)
    rep.equal("(a2-1) left", compose(mu, Kron(f, lam, mu), dH), eps_h, [n, n])
    rep.equal("(a2-1) right", compose(mu, Kron(f, n, mu), Kron(f, n, lam, n), dH), eps_h, [n, n])
    rep.equal("(a2-2) left", compose(mu, Kron(f, mu, n), Kron(f, n, lam, n), Hd), h_eps, [n, n])
    rep.equal("(a2-2) right", compose(mu, Kron(f, mu, lam), Hd), h_eps, [n, n])

    rep.equal(
        "antipode-antimultiplicative",
        compose(lam, mu),
        compose(mu, Kron(f, lam, lam), swap, i2),
        [n, n],
    )
    rep.equal(
        "antipode-anticomultiplicative",
        compose(delta, lam),
        compose(swap, Kron(f, lam, lam), delta),
        [n],
    )
    rep.equal("antipode-fixes-unit", compose(lam, eta), eta)
    rep.equal("antipode-fixes-counit", compose(eps, lam), eps, [n])
    counit_unit = compose(eta, eps)
    rep.equal("antipode-convolution-left", compose(mu, Kron(f, lam, n), delta), counit_unit, [n])
    rep.equal("antipode-convolution-right", compose(mu, Kron(f, n, lam), delta), counit_unit, [n])
    if is_cocommutative(h):
        rep.equal("antipode-involutive", compose(lam, lam), i, [n])
    return rep


def axiom_groups(rep: Report):
    """Collapse a report into pass/fail per axiom label prefix."""
    out = {}
    for c in rep.checks:
        key = c.tag.split(" ")[0]
        out[key] = out.get(key, True) and c.passed
    return out


# -- constructors -----------------------------------------------------------


def loop_algebra(loop: LoopTable, field: FieldSpec, name="") -> HopfQuasigroup:
    """The loop algebra ``field[L]`` with grouplike basis ``L``."""
    n = loop.order
    mu = np.zeros((n, n * n), dtype=np.int64)
    delta = np.zeros((n * n, n), dtype=np.int64)
    lam = np.zeros((n, n), dtype=np.int64)
    eta = np.zeros((n, 1), dtype=np.int64)
    for u in range(n):
        for v in range(n):
            mu[loop.table[u][v], u * n + v] = 1
        delta[u * n + u, u] = 1
        lam[loop.inverse[u], u] = 1
    eta[loop.identity_index, 0] = 1
    return HopfQuasigroup(
        field,
        n,
        from_int_array(field, mu),
        from_int_array(field, eta),
        from_int_array(field, delta),
        from_int_array(field, np.ones((1, n), dtype=np.int64)),
        from_int_array(field, lam),
        name=name or f"{field}[L{n}]",
        loop=loop,
    )


def loop_of(h: HopfQuasigroup):
    """The loop spanned by the basis when ``h`` is a loop algebra in its basis.

    Returns a LoopTable or None.  Detected structurally: every basis vector
    must be grouplike and products of basis vectors must be basis vectors.
    """
    if h.loop is not None:
        g = loop_algebra(h.loop, h.field)
        if (g.mu, g.eta, g.delta, g.eps, g.lam) == (h.mu, h.eta, h.delta, h.eps, h.lam):
            return h.loop
    from .loops import LoopError, loop_from_table

    n = h.dim
    one = h.field.one
    for u in range(n):
        col = h.delta.data[:, u]
        if any((x != 0) != (k == u * n + u) for k, x in enumerate(col)) or col[u * n + u] != one:
            return None
    table = []
    for u in range(n):
        row = []
        for v in range(n):
            col = h.mu.data[:, u * n + v]
            nz = [k for k, x in enumerate(col) if x != 0]
            if len(nz) != 1 or col[nz[0]] != one:
                return None
            row.append(nz[0])
        table.append(row)
    try:
        return loop_from_table(table)
    except LoopError:
        return None


def loop_is_associative(loop: LoopTable):
    return associativity_witness(loop.table) is None
