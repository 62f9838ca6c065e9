"""Galois H-objects, their products and opposites, normal bases and the dual coquasigroup."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field

import numpy as np
import sympy

from .comodules import (
    ComoduleMagma,
    NotAMorphism,
    NotCocommutative,
    bullet,
    comodule_morphism_report,
    endo_inverse,
    opposite_comodule,
    regular,
    rho_first,
    rho_second,
    verify_comodule_magma,
)
from .exactlin import (
    Kron,
    LegPermutation,
    Morphism,
    Singular,
    compose,
    factor_through,
    factor_through_kron,
    from_int_array,
    hstack,
    identity,
    inverse,
    is_invertible,
    kernel_basis,
    kron,
    linear_combination,
    operator_matrix,
    rank,
)
from .report import Report
from .structures import (
    HopfQuasigroup,
    UnitalMagma,
    comagma_report,
    enveloping_magma,
    is_cocommutative,
    loop_of,
    magma_morphism_report,
    unital_magma_report,
)


class NotGalois(ValueError):
    pass


class ZeroObject(ValueError):
    pass


class UnsupportedField(ValueError):
    pass


RANDOM_TRIALS = 64
SYMBOLIC_LIMIT = 4
GROUPLIKE_SEARCH_LIMIT = 10**6


def default_seed(seed=None):
    env = os.environ.get("HOPFQ_SEED")
    if env is not None:
        return int(env)
    return 0 if seed is None else int(seed)


# -- canonical maps ----------------------------------------------------------------


def canonical_map(a: ComoduleMagma):
    """``gamma_A = (mu_A (x) H) o (A (x) rho_A)``."""
    f, n, dh = a.field, a.dim, a.hopf.dim
    return compose(Kron(f, a.magma.mu, dh), Kron(f, n, a.rho), identity(f, n * n))


@dataclass(frozen=True)
class GaloisObject:
    base: ComoduleMagma
    gamma: Morphism
    gamma_inv: Morphism
    strong: bool
    f_map: Morphism
    report: Report = field(compare=False, repr=False)

    @property
    def hopf(self):
        return self.base.hopf

    @property
    def dim(self):
        return self.base.dim

    @property
    def name(self):
        return self.base.name


def make_galois(a: ComoduleMagma) -> GaloisObject:
    if a.dim == 0:
        raise ZeroObject("Galois objects must be nonzero")
    f, h = a.field, a.hopf
    gamma = canonical_map(a)
    if a.dim != h.dim:
        raise NotGalois(f"canonical map {a.dim * a.dim} -> {a.dim * h.dim} is not square")
    try:
        gamma_inv = inverse(gamma)
    except Singular as e:
        raise NotGalois(f"canonical map is singular ({e})") from None
    f_map = compose(gamma_inv, kron(a.magma.eta, identity(f, h.dim)))
    rep = Report(f"Galois object {a.name or 'A'}")
    rep.extend(verify_comodule_magma(a))
    rep.equal("gamma inverse left", compose(gamma_inv, gamma), identity(f, a.dim**2), [a.dim, a.dim])
    rep.equal("gamma inverse right", compose(gamma, gamma_inv), identity(f, a.dim**2), [a.dim, h.dim])
    strong_rep = magma_morphism_report(f_map, h.magma, enveloping_magma(a.magma), "strong")
    strong = strong_rep.passed
    coinvariant_report(a, rep)
    lemma_identities(a, gamma_inv, rep)
    return GaloisObject(a, gamma, gamma_inv, strong, f_map, rep)


def is_galois(a):
    try:
        make_galois(a)
    except NotGalois:
        return False
    return True


def coinvariants(a: ComoduleMagma):
    """Basis of ``ker(rho_A - A (x) eta_H)``."""
    return kernel_basis(a.rho - kron(identity(a.field, a.dim), a.hopf.eta))


def coinvariant_report(a, rep):
    k = coinvariants(a)
    rep.flag("coinvariants one-dimensional", k.cols == 1, note=f"dim {k.cols}")
    rep.flag("coinvariants spanned by unit", k.cols >= 1 and rank(hstack([k, a.magma.eta])) == 1)
    return rep


def lemma_identities(a, gamma_inv, rep):
    """The two coaction identities for the inverse canonical map."""
    f, n, h = a.field, a.dim, a.hopf
    dh = h.dim
    r2 = rho_second(a, a)
    r1 = rho_first(a, a)
    gi_h = Kron(f, gamma_inv, dh)
    rep.equal(
        "gamma inverse, right coaction",
        compose(r2, gamma_inv),
        compose(gi_h, Kron(f, n, h.delta), identity(f, n * dh)),
        [n, dh],
    )
    # (A (x) c) o (A (x) mu_H (x) H) o (rho_A (x) (lam (x) H) o delta)
    twist = compose(Kron(f, h.lam, dh), h.delta)
    rhs = compose(
        gi_h,
        LegPermutation(f, [n, dh, dh], [0, 2, 1]),
        Kron(f, n, h.mu, dh),
        Kron(f, a.rho, twist),
        identity(f, n * dh),
    )
    rep.equal("gamma inverse, left coaction", compose(r1, gamma_inv), rhs, [n, dh])
    return rep


def regular_closed_forms(h: HopfQuasigroup) -> Report:
    """Closed forms of the inverse canonical map and of ``f_H`` for H itself."""
    f, n = h.field, h.dim
    g = make_galois(regular(h))
    rep = Report(f"closed forms for {h.name or 'H'}")
    closed = compose(
        Kron(f, compose(h.mu, Kron(f, n, h.lam)), n),
        Kron(f, n, h.delta),
        identity(f, n * n),
    )
    rep.equal("gamma inverse closed form", g.gamma_inv, closed, [n, n])
    fh = compose(Kron(f, h.lam, n), h.delta)
    rep.equal("f_H closed form", g.f_map, fh, [n])
    rep.extend(magma_morphism_report(fh, h.magma, enveloping_magma(h.magma)), prefix="f_H ")
    rep.flag("strong", g.strong)
    return rep


def transport_report(g, a: GaloisObject, b: GaloisObject) -> Report:
    """For an isomorphism ``g: A -> B``: ``f_B = (g (x) g) o f_A``."""
    rep = Report("transport of f")
    rep.extend(comodule_morphism_report(g, a.base, b.base))
    rep.equal("f transport", b.f_map, compose(kron(g, g), a.f_map), [a.hopf.dim])
    rep.flag("strong preserved", a.strong == b.strong)
    return rep


# -- products ----------------------------------------------------------------------


@dataclass(frozen=True)
class GaloisProduct:
    left: GaloisObject
    right: GaloisObject
    inclusion: Morphism
    result: GaloisObject
    beta: Morphism
    report: Report = field(compare=False, repr=False)


def big_gamma_factors(a: GaloisObject, b: GaloisObject, inverse_form=False):
    """Canonical map of ``A (x) B`` (or its inverse) built from those of A and B, as factors."""
    f = a.base.field
    m, n, dh = a.dim, b.dim, a.hopf.dim
    if not inverse_form:
        return (
            LegPermutation(f, [m, dh, n, dh], [0, 2, 1, 3]),
            Kron(f, a.gamma, b.gamma),
            LegPermutation(f, [m, n, m, n], [0, 2, 1, 3]),
        )
    return (
        LegPermutation(f, [m, m, n, n], [0, 2, 1, 3]),
        Kron(f, a.gamma_inv, b.gamma_inv),
        LegPermutation(f, [m, n, dh, dh], [0, 2, 1, 3]),
    )


def big_gamma(a, b, inverse_form=False):
    m, n, dh = a.dim, b.dim, a.hopf.dim
    return compose(*big_gamma_factors(a, b, inverse_form), identity(a.base.field, m * n * dh * dh))


def bullet_galois(a: GaloisObject, b: GaloisObject) -> GaloisProduct:
    h = a.hopf
    if not is_cocommutative(h):
        raise NotCocommutative("products of Galois objects need a cocommutative H")
    bp = bullet(a.base, b.base)
    res = make_galois(bp.result)
    i = bp.inclusion
    target = compose(*big_gamma_factors(a, b, inverse_form=True), kron(i, h.delta))
    beta = factor_through_kron([i, i], target)
    rep = Report(f"Galois product {bp.result.name}")
    rep.equal(
        "Gamma inverse on the image",
        compose(*big_gamma_factors(a, b), target),
        kron(i, h.delta),
        [bp.dim, h.dim],
    )
    rep.equal("beta is gamma inverse", beta, res.gamma_inv, [bp.dim, h.dim])
    if a.strong and b.strong:
        rep.flag("strong product", res.strong)
    return GaloisProduct(a, b, i, res, beta, rep)


def opposite_galois(a: GaloisObject):
    h = a.hopf
    if not is_cocommutative(h):
        raise NotCocommutative("opposites need a cocommutative H")
    f, n, dh = h.field, a.dim, h.dim
    op = make_galois(opposite_comodule(a.base))
    closed = compose(
        LegPermutation(f, [n, n], [1, 0]),
        a.gamma_inv,
        Kron(f, n, compose(h.mu, LegPermutation(f, [dh, dh], [1, 0]), identity(f, dh * dh))),
        Kron(f, a.base.rho, dh),
        identity(f, n * dh),
    )
    rep = Report(f"opposite of {a.name or 'A'}")
    rep.equal("opposite gamma inverse closed form", op.gamma_inv, closed, [n, dh])
    rep.equal("opposite f", op.f_map, compose(LegPermutation(f, [n, n], [1, 0]), a.f_map), [dh])
    if a.strong:
        rep.flag("opposite strong", op.strong)
    return op, rep


@dataclass(frozen=True)
class InverseClass:
    galois: GaloisObject
    opposite: GaloisObject
    inclusion: Morphism
    h: Morphism
    h_inv: Morphism
    report: Report = field(compare=False, repr=False)


def h_iso(a: GaloisObject) -> InverseClass:
    """``h_A: A.op(A) -> H`` and its inverse, with their certification."""
    op, oprep = opposite_galois(a)
    hq = a.hopf
    f = hq.field
    bp = bullet(a.base, op.base)
    i = bp.inclusion
    h = factor_through_kron([a.base.magma.eta, hq.dim], compose(op.gamma, i))
    h_inv = factor_through(i, op.f_map)
    rep = Report(f"inverse class of {a.name or 'A'}")
    rep.extend(oprep)
    rep.equal("h' o h", compose(h_inv, h), identity(f, bp.dim), [bp.dim])
    rep.equal("h o h'", compose(h, h_inv), identity(f, hq.dim), [hq.dim])
    H = regular(hq)
    sub = comodule_morphism_report(h, bp.result.comodule, H.comodule)
    rep.extend(sub, prefix="h ")
    if a.strong:
        rep.extend(magma_morphism_report(h, bp.result.magma, hq.magma), prefix="h ")
    return InverseClass(a, op, i, h, h_inv, rep)


# -- normal bases -------------------------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    status: str  # found, none, unresolved
    morphism: Morphism | None
    certificate: str
    dimension: int

    @property
    def found(self):
        return self.status == "found"


def comodule_morphisms(src, dst):
    """Basis of the comodule maps ``src -> dst``."""
    f, dh = src.field, src.hopf.dim

    def lhs(x):
        return compose(Kron(f, x, dh), src.rho)

    def rhs(x):
        return compose(dst.rho, x)

    shape = (dst.dim, src.dim)
    system = operator_matrix(lhs, f, shape) - operator_matrix(rhs, f, shape)
    k = kernel_basis(system)
    return [from_int_array(f, k.num[:, j].reshape(shape), k.den) for j in range(k.cols)]


def _sweep_points(s, field):
    """Integer points ordered by sup norm, values tried as 0, 1, -1, 2, -2, ..."""
    if field.p is not None:
        yield from itertools.product(range(field.p), repeat=s)
        return
    bound = 0
    while True:
        vals = [0]
        for v in range(1, bound + 1):
            vals += [v, -v]
        for pt in itertools.product(vals, repeat=s):
            if max((abs(x) for x in pt), default=0) == bound:
                yield pt
        bound += 1


def invertible_element(space, field, seed=None) -> SearchResult:
    """Look for an invertible matrix in the span of ``space``."""
    s = len(space)
    if s == 0:
        return SearchResult("none", None, "no nonzero comodule morphism", 0)
    r, c = space[0].shape
    if r != c:
        return SearchResult("none", None, "no comodule morphism is invertible (dimension mismatch)", s)
    ones = linear_combination(field, [1] * s, space)
    if is_invertible(ones):
        return SearchResult("found", ones, "sum of the basis is invertible", s)
    if s <= SYMBOLIC_LIMIT:
        ts = sympy.symbols(f"t0:{s}")
        mats = [sympy.Matrix(m.data.tolist()) for m in space]
        generic = sum((t * m for t, m in zip(ts, mats)), sympy.zeros(r, c))
        det = sympy.expand(generic.det(method="berkowitz"))
        poly = sympy.Poly(det, *ts, modulus=field.p) if field.p else sympy.Poly(det, *ts)
        if poly.is_zero:
            return SearchResult("none", None, "generic determinant vanishes identically", s)
        limit = None if field.p else 10**5
        for k, pt in enumerate(_sweep_points(s, field)):
            if limit is not None and k >= limit:
                break
            val = poly.eval(dict(zip(ts, pt)))
            if (int(val) % field.p if field.p else val) != 0:
                m = linear_combination(field, list(pt), space)
                return SearchResult("found", m, f"determinant nonzero at {pt}", s)
        if field.p:
            return SearchResult("none", None, "determinant vanishes on every point of the field", s)
        return SearchResult("unresolved", None, "sweep exhausted", s)
    rng = np.random.default_rng(default_seed(seed))
    for _ in range(RANDOM_TRIALS):
        if field.p:
            coeffs = [int(x) for x in rng.integers(0, field.p, size=s)]
        else:
            coeffs = [int(x) for x in rng.integers(-10, 11, size=s)]
        m = linear_combination(field, coeffs, space)
        if is_invertible(m):
            return SearchResult("found", m, f"random combination {coeffs}", s)
    return SearchResult("unresolved", None, f"{RANDOM_TRIALS} random trials failed", s)


def find_comodule_iso(src, dst, seed=None) -> SearchResult:
    if src.dim != dst.dim:
        return SearchResult("none", None, "no comodule morphism is invertible (dimension mismatch)", 0)
    return invertible_element(comodule_morphisms(src, dst), src.field, seed)


def normal_basis(a, seed=None) -> SearchResult:
    """An isomorphism of comodules ``A -> H``, if one is found."""
    base = a.base if isinstance(a, GaloisObject) else a
    return find_comodule_iso(base, regular(base.hopf), seed)


# -- twisted loop algebras ----------------------------------------------------------


def twisted_loop_algebra(h: HopfQuasigroup, sigma, name="") -> ComoduleMagma:
    """``u_x u_y = sigma[x][y] u_{xy}`` with coaction ``u_x -> u_x (x) x``.

    ``h`` must be a loop algebra in its grouplike basis and ``sigma`` must be 1
    whenever an argument is the identity.
    """
    loop = loop_of(h)
    if loop is None:
        raise ValueError("twisting needs a loop algebra")
    f, n = h.field, h.dim
    mu = np.zeros((n, n * n), dtype=object)
    for x in range(n):
        for y in range(n):
            mu[loop.table[x][y], x * n + y] = f(sigma[x][y])
    magma = UnitalMagma(f, n, Morphism._raw(f, mu), h.eta)
    return ComoduleMagma(h, magma, h.delta, name=name or "twisted")


# -- the dual Hopf coquasigroup ----------------------------------------------------


@dataclass(frozen=True)
class HopfCoquasigroup:
    field: object
    dim: int
    mu: Morphism
    eta: Morphism
    delta: Morphism
    eps: Morphism
    lam: Morphism
    name: str = ""
    predual: HopfQuasigroup | None = field(default=None, compare=False, repr=False)


def dual_coquasigroup(h: HopfQuasigroup) -> HopfCoquasigroup:
    if not is_cocommutative(h):
        raise NotCocommutative("the dual is commutative only for cocommutative H")
    return HopfCoquasigroup(
        h.field, h.dim, h.delta.T, h.eps.T, h.mu.T, h.eta.T, h.lam.T,
        name=f"{h.name or 'H'}*", predual=h,
    )


def verify_hopf_coquasigroup(d: HopfCoquasigroup) -> Report:
    f, n = d.field, d.dim
    rep = Report(f"Hopf coquasigroup axioms for {d.name or 'D'}")
    magma = UnitalMagma(f, n, d.mu, d.eta)
    unital_magma_report(magma, rep)
    rep.add(_assoc(magma))
    comagma_report(f, n, d.delta, d.eps, rep, coassociative=False)
    one = identity(f, 1)
    i = identity(f, n)
    rep.equal("(d1) eps o mu", compose(d.eps, d.mu), kron(d.eps, d.eps), [n, n])
    rep.equal("(d1) eps o eta", compose(d.eps, d.eta), one)
    rep.equal(
        "(d1) delta o mu",
        compose(d.delta, d.mu),
        compose(Kron(f, d.mu, d.mu), LegPermutation(f, [n, n, n, n], [0, 2, 1, 3]), kron(d.delta, d.delta)),
        [n, n],
    )
    rep.equal("(d1) delta o eta", compose(d.delta, d.eta), kron(d.eta, d.eta))
    eta_d = kron(d.eta, i)
    d_eta = kron(i, d.eta)
    lam_d = compose(Kron(f, d.lam, n), d.delta)
    d_lam = compose(Kron(f, n, d.lam), d.delta)
    rep.equal("(d2-1) left", compose(Kron(f, d.mu, n), Kron(f, d.lam, d.delta), d.delta), eta_d, [n])
    rep.equal("(d2-1) right", compose(Kron(f, d.mu, n), Kron(f, n, lam_d), d.delta), eta_d, [n])
    rep.equal("(d2-2) left", compose(Kron(f, n, d.mu), Kron(f, d.delta, d.lam), d.delta), d_eta, [n])
    rep.equal("(d2-2) right", compose(Kron(f, n, d.mu), Kron(f, d_lam, n), d.delta), d_eta, [n])
    rep.flag("commutative", compose(d.mu, LegPermutation(f, [n, n], [1, 0]), identity(f, n * n)) == d.mu)
    return rep


def _assoc(magma):
    from .structures import associativity_probe

    return associativity_probe(magma)


def is_coassociative(d: HopfCoquasigroup):
    f, n = d.field, d.dim
    return compose(Kron(f, d.delta, n), d.delta) == compose(Kron(f, n, d.delta), d.delta)


# -- grouplikes -------------------------------------------------------------------


def is_grouplike(d, x):
    return compose(d.delta, x) == kron(x, x) and compose(d.eps, x) == identity(d.field, 1)


def grouplikes(d: HopfCoquasigroup, candidates=None):
    """All grouplike elements ``K -> D``, as column vectors."""
    f, n = d.field, d.dim
    if candidates is not None:
        return [x for x in candidates if is_grouplike(d, x)]
    if f.p is not None:
        if f.p**n > GROUPLIKE_SEARCH_LIMIT:
            raise UnsupportedField(f"{f.p}^{n} candidates exceed the search limit")
        return _grouplikes_mod_p(d)
    loop = loop_of(d.predual) if d.predual is not None else None
    if loop is None:
        raise UnsupportedField("over Q grouplikes are found only for loop algebras or supplied candidates")
    # a character of a finite loop takes values in a finite subset of Q* closed
    # under products, hence in {1, -1}
    e = loop.identity_index
    others = [u for u in range(n) if u != e]
    out = []
    for signs in itertools.product([1, -1], repeat=len(others)):
        vals = [1] * n
        for u, s in zip(others, signs):
            vals[u] = s
        if all(vals[loop.table[u][v]] == vals[u] * vals[v] for u in range(n) for v in range(n)):
            out.append(from_int_array(f, np.array(vals).reshape(n, 1)))
    return [x for x in out if is_grouplike(d, x)]


def _grouplikes_mod_p(d, batch=4096):
    f, n, p = d.field, d.dim, d.field.p
    delta = d.delta.num.astype(np.int64)
    eps = d.eps.num.astype(np.int64).ravel()
    out = []
    cands = itertools.product(range(p), repeat=n)
    while True:
        chunk = list(itertools.islice(cands, batch))
        if not chunk:
            break
        X = np.array(chunk, dtype=np.int64)
        ok = (X @ eps) % p == 1
        lhs = (X @ delta.T) % p
        rhs = np.einsum("bi,bj->bij", X, X).reshape(len(X), -1) % p
        ok &= np.all(lhs == rhs, axis=1)
        for row in X[ok]:
            out.append(from_int_array(f, row.reshape(n, 1)))
    return out


def convolve(d, x, y):
    return compose(d.mu, kron(x, y))


def convolution_table(d, gl):
    """``table[i][j]`` is the index of ``gl[i] * gl[j]``; raises if not closed."""
    index = {g: k for k, g in enumerate(gl)}
    table = []
    for x in gl:
        row = []
        for y in gl:
            z = convolve(d, x, y)
            if z not in index:
                raise ValueError("grouplikes not closed under convolution")
            row.append(index[z])
        table.append(row)
    return table


def group_report(d, gl) -> Report:
    rep = Report("grouplike group")
    index = {g: k for k, g in enumerate(gl)}
    try:
        table = convolution_table(d, gl)
    except ValueError:
        rep.flag("closed", False)
        return rep
    rep.flag("closed", True)
    k = len(gl)
    rep.flag("unit", d.eta in index)
    e = index.get(d.eta)
    rep.flag("inverses", all(compose(d.lam, x) in index and table[index[x]][index[compose(d.lam, x)]] == e for x in gl))
    rep.flag("commutative", all(table[a][b] == table[b][a] for a in range(k) for b in range(k)))
    rep.flag(
        "associative",
        all(table[table[a][b]][c] == table[a][table[b][c]] for a in range(k) for b in range(k) for c in range(k)),
    )
    return rep


# -- grouplikes versus automorphisms of H -------------------------------------------


def automorphism_of(h: HopfQuasigroup, x):
    """``(H (x) x^T) o delta``: the endomorphism of H attached to a grouplike ``x``."""
    return compose(Kron(h.field, h.dim, x.T), h.delta)


def grouplike_of(h: HopfQuasigroup, alpha):
    """``(eps o alpha)^T``."""
    return compose(h.eps, alpha).T


@dataclass(frozen=True)
class Bijection:
    grouplikes: list
    automorphisms: list
    table: list
    report: Report = field(compare=False, repr=False)


def aut_grouplike_bijection(h: HopfQuasigroup, automorphisms=(), candidates=None) -> Bijection:
    if not is_cocommutative(h):
        raise NotCocommutative("the correspondence needs a cocommutative H")
    d = dual_coquasigroup(h)
    gl = grouplikes(d, candidates)
    f, n = h.field, h.dim
    H = regular(h)
    rep = Report(f"grouplikes and automorphisms of {h.name or 'H'}")
    rep.extend(group_report(d, gl))
    auts = [automorphism_of(h, x) for x in gl]
    for k, (x, a) in enumerate(zip(gl, auts)):
        rep.flag(f"z o x = id [{k}]", grouplike_of(h, a) == x)
        sub = comodule_morphism_report(a, H, H)
        rep.flag(f"x is an automorphism [{k}]", sub.passed)
        try:
            ai = endo_inverse(a, h)
        except NotAMorphism:
            rep.flag(f"endomorphism inverse [{k}]", False)
            continue
        rep.flag(
            f"endomorphism inverse [{k}]",
            compose(ai, a) == identity(f, n) and compose(a, ai) == identity(f, n),
        )
    for k, a in enumerate(automorphisms):
        rep.flag(f"x o z = id [supplied {k}]", automorphism_of(h, grouplike_of(h, a)) == a)
    table = []
    if rep["closed"].passed:
        table = convolution_table(d, gl)
        idx = {a: k for k, a in enumerate(auts)}
        rep.flag(
            "convolution matches composition",
            all(idx.get(compose(auts[a], auts[b])) == table[a][b] for a in range(len(gl)) for b in range(len(gl))),
        )
    return Bijection(gl, auts, table, rep)
