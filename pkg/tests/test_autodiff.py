import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from graphxc import autodiff as ad
from graphxc.errors import DimensionError, NumericalError


def finite_difference(f, x0, h=1e-5):
    """Central-difference gradient of scalar f at x0 (flattened)."""
    x0 = np.asarray(x0, dtype=float)
    g = np.zeros(x0.size)
    flat = x0.ravel()
    for i in range(x0.size):
        bump = flat.copy()
        bump[i] += h
        fp = f(bump.reshape(x0.shape))
        bump[i] -= 2 * h
        fm = f(bump.reshape(x0.shape))
        g[i] = (fp - fm) / (2 * h)
    return g.reshape(x0.shape)


def check_grad(build, x0, rtol=1e-6, h=1e-5):
    """Compare tape gradient of build(x)->scalar Tensor with central FD."""
    x = ad.parameter(x0)
    out = build(x)
    out.backward()
    fd = finite_difference(lambda v: build(ad.Tensor(v)).item(), x0, h=h)
    scale = np.maximum(np.abs(fd), 1e-3)
    assert np.all(np.abs(x.grad - fd) / scale < rtol), (x.grad, fd)


class TestBasicOps:
    def test_sum_of_squares_gradient(self):
        x = ad.parameter([1.0, 2.0, 3.0])
        y = (x * x).sum()
        y.backward()
        assert np.allclose(x.grad, [2.0, 4.0, 6.0])

    def test_segment_softmax_values(self):
        out = ad.segment_softmax(ad.Tensor([0.0, 0.0, 5.0]), [0, 0, 1], 2)
        assert np.allclose(out.value, [0.5, 0.5, 1.0])

    def test_broadcast_add(self):
        a = ad.parameter(np.ones((3, 2)))
        b = ad.parameter(np.array([10.0, 20.0]))
        ((a + b) * (a + b)).sum().backward()
        assert a.grad.shape == (3, 2)
        assert b.grad.shape == (2,)
        assert np.allclose(b.grad, [66.0, 126.0])

    def test_matmul_shape_error(self):
        with pytest.raises(DimensionError):
            ad.matmul(ad.Tensor(np.ones((2, 3))), ad.Tensor(np.ones((2, 3))))

    def test_nan_raises_with_op_name(self):
        with pytest.raises(NumericalError, match="log"):
            ad.log(ad.Tensor([-1.0]))

    def test_gather_accumulates_duplicates(self):
        x = ad.parameter([1.0, 2.0])
        ad.gather(x, [0, 0, 1]).sum().backward()
        assert np.allclose(x.grad, [2.0, 1.0])

    def test_segment_sum_roundtrip(self):
        x = ad.parameter(np.arange(6.0).reshape(3, 2))
        s = ad.segment_sum(x, [1, 0, 1], 2)
        assert np.allclose(s.value, [[2.0, 3.0], [4.0, 6.0]])
        s.sum().backward()
        assert np.allclose(x.grad, 1.0)

    def test_where_mask_blocks_gradient(self):
        x = ad.parameter([1.0, -1.0])
        ad.where_mask([True, False], x * 2.0, fill=7.0).sum().backward()
        assert np.allclose(x.grad, [2.0, 0.0])


COMPOSITES = [
    ("exp-mul-sum", lambda x: ad.exp(x * 0.3).sum()),
    ("log-square", lambda x: ad.log((x * x) + 1.0).sum()),
    ("softplus-relu", lambda x: (ad.softplus(x) * ad.relu(x + 0.2)).sum()),
    ("div-sqrt", lambda x: (x / ad.sqrt((x * x) + 2.0)).sum()),
    ("pow-chain", lambda x: (((x + 3.0) ** 1.5) * 0.1).sum()),
    ("segment-softmax",
     lambda x: (ad.segment_softmax(x, [0, 0, 0, 1, 1], 2)
                * ad.Tensor([1.0, -2.0, 0.5, 3.0, 1.0])).sum()),
    ("matmul-sum",
     lambda x: ad.matmul(ad.reshape(x, (1, 5)),
                         ad.reshape(x * 0.5, (5, 1))).sum()),
    ("concat", lambda x: ad.concat([x * 2.0, ad.exp(x * 0.1)]).sum()),
]


@pytest.mark.parametrize("name,fn", COMPOSITES, ids=[c[0] for c in COMPOSITES])
def test_composite_gradients_match_fd(name, fn):
    rng = np.random.default_rng(hash(name) % 2 ** 32)
    x0 = rng.normal(size=5)
    check_grad(fn, x0)


@given(st.integers(0, 10 ** 9))
@settings(max_examples=20, deadline=None)
def test_random_composites_match_fd(seed):
    rng = np.random.default_rng(seed)
    x0 = rng.normal(size=4)
    ops = [lambda t: ad.exp(t * 0.2), lambda t: ad.softplus(t),
           lambda t: t * t, lambda t: t + 1.5, lambda t: ad.relu(t),
           lambda t: t / 2.0, lambda t: ad.log((t * t) + 1.0)]
    picks = rng.integers(0, len(ops), size=rng.integers(1, 6))

    def build(x):
        t = x
        for k in picks:
            t = ops[k](t)
        return t.sum()

    check_grad(build, x0)


class TestSymeig:
    def test_eigenvalue_gradient(self):
        rng = np.random.default_rng(0)
        m = rng.normal(size=(4, 4))
        a0 = m + m.T

        def build(x):
            sym = (x + ad.transpose(x)) * 0.5
            w, _ = ad.symeig(sym)
            return (w * ad.Tensor([1.0, 0.3, -0.5, 2.0])).sum()

        check_grad(build, a0, rtol=1e-5)

    def test_eigenvector_gradient_through_projector(self):
        rng = np.random.default_rng(1)
        m = rng.normal(size=(4, 4))
        a0 = m + m.T
        probe = rng.normal(size=(4, 4))
        probe = probe + probe.T

        def build(x):
            sym = (x + ad.transpose(x)) * 0.5
            _, v = ad.symeig(sym)
            occ = ad.Tensor(np.diag([1.0, 1.0, 0.0, 0.0]))
            d = ad.matmul(ad.matmul(v, occ), ad.transpose(v))
            return (d * ad.Tensor(probe)).sum()

        check_grad(build, a0, rtol=1e-5)

    def test_values_match_numpy(self):
        rng = np.random.default_rng(2)
        m = rng.normal(size=(5, 5))
        a = m + m.T
        w, v = ad.symeig(ad.Tensor(a))
        wr, vr = np.linalg.eigh(a)
        assert np.allclose(w.value, wr)
        assert np.allclose(np.abs(np.sum(v.value * vr, axis=0)), 1.0)
