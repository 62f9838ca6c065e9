import numpy as np
import pytest
from conftest import hopf

from hopfq.comodules import (
    ComoduleMagma,
    NotAMorphism,
    assoc_n,
    bullet,
    bullet_morphism,
    coherence_report,
    endo_inverse,
    equalizer_property,
    monoidal_report,
    opposite_comodule,
    regular,
    rho_first,
    rho_second,
    tau,
    tensor_comodule,
    trivial,
    unit_r,
    verify_comodule_magma,
)
from hopfq.exactlin import (
    QQ,
    FieldSpec,
    LegPermutation,
    compose,
    from_int_array,
    from_rows,
    hstack,
    identity,
    kernel_basis,
    kron,
    rank,
)

F7 = FieldSpec(7)


def basis(n, *idx):
    v = np.zeros((n, 1), dtype=np.int64)
    for i in idx:
        v[i, 0] = 1
    return v


def test_regular_and_trivial_pass():
    h = hopf("qz2")
    assert verify_comodule_magma(regular(h)).passed
    assert verify_comodule_magma(trivial(h)).passed


def test_flipped_coaction_fails_on_noncocommutative_delta():
    h = hopf("qz2")
    delta = np.zeros((4, 2), dtype=np.int64)
    delta[0, 0] = 1
    delta[2, 1] = 1  # g -> g (x) e
    d = from_int_array(QQ, delta)
    rigged = h.with_(delta=d)
    flipped = compose(LegPermutation(QQ, [2, 2], [1, 0]), d)
    rep = verify_comodule_magma(ComoduleMagma(rigged, rigged.magma, flipped))
    assert not rep.passed
    assert rep["comodule counit"].witness == (1,)


def test_tensor_coactions_carry_labels():
    h = hopf("qz2")
    H = regular(h)
    r1, r2 = rho_first(H, H), rho_second(H, H)
    for x in range(2):
        for y in range(2):
            col1 = r1.column(x * 2 + y)
            col2 = r2.column(x * 2 + y)
            assert col1[(x * 2 + y) * 2 + x] == 1 and sum(col1) == 1
            assert col2[(x * 2 + y) * 2 + y] == 1 and sum(col2) == 1
    assert verify_comodule_magma(tensor_comodule(H, H, 1)).passed
    assert verify_comodule_magma(tensor_comodule(H, H, 2)).passed


def test_swap_intertwines_the_two_tensor_coactions():
    h = hopf("qz3")
    a = regular(h)
    b = ComoduleMagma(h, h.magma, h.delta, name="B")
    c = LegPermutation(QQ, [a.dim, b.dim], [1, 0]).to_morphism()
    t1, t2 = tensor_comodule(a, b, 1), tensor_comodule(b, a, 2)
    assert compose(t2.rho, c) == compose(kron(c, identity(QQ, 3)), t1.rho)


def test_kernel_of_rho_difference_for_z2():
    H = regular(hopf("qz2"))
    k = kernel_basis(rho_first(H, H) - rho_second(H, H))
    # frozen from tests/oracle.py: label_kernel_dim(Z2) == 2
    assert k.shape == (4, 2)
    spanning = from_rows(QQ, np.hstack([basis(4, 0), basis(4, 3)]).tolist())
    assert rank(k) == 2
    assert rank(hstack([k, spanning])) == 2


def test_opposite_comodule():
    h2 = hopf("qz2")
    H2 = regular(h2)
    assert opposite_comodule(H2) == H2
    h3 = hopf("qz3")
    op = opposite_comodule(regular(h3))
    g = op.rho.column(1)
    # g -> g (x) g^2
    assert g[1 * 3 + 2] == 1 and sum(g) == 1
    assert opposite_comodule(op) == regular(h3)
    assert verify_comodule_magma(op).passed


def test_bullet_dimensions():
    # frozen from tests/oracle.py: label_kernel_dim
    for name, dim in (("qz2", 2), ("qz3", 3)):
        H = regular(hopf(name))
        bp = bullet(H, H)
        assert bp.dim == dim
        assert verify_comodule_magma(bp.result).passed
    q = hopf("qs3")
    a = ComoduleMagma(q, q.magma, q.delta)
    assert bullet(a, regular(q)).dim == a.dim


def test_bullet_morphism_examples():
    h = hopf("qz2")
    H = regular(h)
    bp = bullet(H, H)
    i2 = identity(QQ, 2)
    assert bullet_morphism(i2, i2, bp, bp) == identity(QQ, bp.dim)
    alpha = from_rows(QQ, [[1, 0], [0, -1]])
    m = bullet_morphism(alpha, i2, bp, bp)
    assert m == from_rows(QQ, [[1, 0], [0, -1]])
    back = bullet_morphism(endo_inverse(alpha, h), i2, bp, bp)
    assert compose(back, m) == identity(QQ, 2)


def test_non_morphism_rejected():
    h = hopf("qz2")
    H = regular(h)
    bp = bullet(H, H)
    with pytest.raises(NotAMorphism):
        bullet_morphism(from_rows(QQ, [[0, 1], [1, 0]]), identity(QQ, 2), bp, bp)


def test_unit_r_on_z2():
    H = regular(hopf("qz2"))
    r = unit_r(H)
    # equalizer basis is e (x) e, g (x) g
    assert r == identity(QQ, 2)


def test_coherence_maps():
    for name in ("qz2", "qz3"):
        H = regular(hopf(name))
        HH = bullet(H, H).result
        assert coherence_report(H, HH, H).passed
        t = tau(H, HH)
        assert compose(tau(HH, H), t) == identity(QQ, t.cols)
        n = assoc_n(H, H, H)
        assert rank(n) == n.cols


def test_pentagon_triangle_z3():
    H = regular(hopf("qz3"))
    assert monoidal_report(H, H, H, H).passed


def test_endo_inverse_examples():
    h2 = hopf("qz2")
    assert endo_inverse(identity(QQ, 2), h2) == identity(QQ, 2)
    d = from_rows(QQ, [[1, 0], [0, -1]])
    assert endo_inverse(d, h2) == d

    h = hopf("f7z3")
    alpha = from_rows(F7, [[1, 0, 0], [0, 2, 0], [0, 0, 4]])
    inv = endo_inverse(alpha, h)
    assert inv == from_rows(F7, [[1, 0, 0], [0, 4, 0], [0, 0, 2]])
    assert compose(inv, alpha) == identity(F7, 3)


def test_equalizer_property_holds():
    H = regular(hopf("qz3"))
    tally = equalizer_property(bullet(H, H), trials=40, seed=3)
    assert tally.passed and 0 < tally.equalizing < tally.trials
