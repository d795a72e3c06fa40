"""Tests for the graph-transformer layers and ablation architectures."""

import numpy as np
import pytest

from graphxc import autodiff as ad
from graphxc import grids, nn
from graphxc import graph as gg
from graphxc.errors import ConfigurationError, DimensionError


def tiny_graph():
    """Small electron graph over a coarse two-shell grid."""
    grid = grids.build_grid(np.zeros((1, 3)), radial_points=2,
                            lebedev_schedule=[6, 6])
    return gg.assemble(grid, n_global=2, expander_degree=2, seed=3)


def random_density(n, seed=0):
    rng = np.random.default_rng(seed)
    return rng.uniform(1e-3, 1.0, n), rng.uniform(-0.9, 0.9, n)


class TestAttentionLayer:

    def test_channels_not_divisible_rejected(self):
        with pytest.raises(ConfigurationError):
            nn.AttentionLayerParams(32, 3, np.random.default_rng(0))

    def test_zero_weights_identity_skip(self):
        rng = np.random.default_rng(1)
        p = nn.AttentionLayerParams(4, 2, rng)
        for w in (p.w2, p.w3, p.w4, p.w5):
            w.value = np.zeros_like(w.value)
        p.w1.value = np.eye(4)
        x = ad.Tensor(rng.normal(size=(5, 4)))
        s = np.array([0, 1, 2, 3])
        r = np.array([1, 2, 3, 4])
        e = ad.Tensor(rng.normal(size=(4, nn.EDGE_FEATURE_DIM)))
        out = nn.attention_layer(x, s, r, e, p)
        np.testing.assert_allclose(out.value, x.value, atol=1e-14)

    def test_isolated_vertex_is_skip_only(self):
        rng = np.random.default_rng(2)
        p = nn.AttentionLayerParams(4, 1, rng)
        x = ad.Tensor(rng.normal(size=(1, 4)))
        out = nn.attention_layer(
            x, np.zeros(0, int), np.zeros(0, int),
            ad.Tensor(np.zeros((0, nn.EDGE_FEATURE_DIM))), p)
        np.testing.assert_allclose(out.value, x.value @ p.w1.value,
                                   atol=1e-14)

    def test_three_vertex_path_matches_hand_evaluation(self):
        # 1-channel, 1-head weights evaluated by hand against the formula
        # out_i = w1 x_i + mix * sum_j alpha_ij (w4 x_j + w5 e_ij)
        rng = np.random.default_rng(3)
        p = nn.AttentionLayerParams(1, 1, rng)
        w1, w2, w3, w4 = 0.5, 1.2, -0.7, 0.9
        w5 = np.array([0.1, -0.2, 0.3, 0.4])
        mix = 1.3
        p.w1.value = np.array([[w1]])
        p.w2.value = np.array([[w2]])
        p.w3.value = np.array([[w3]])
        p.w4.value = np.array([[w4]])
        p.w5.value = w5.reshape(4, 1)
        p.mix.weight.value = np.array([[mix]])
        x = np.array([[0.3], [-1.1], [0.8]])
        # path 0-1-2, both directions
        s = np.array([0, 1, 1, 2])
        r = np.array([1, 0, 2, 1])
        efeat = np.array([[1.0, 0, 0, 0.5],
                          [1.0, 0, 0, 0.5],
                          [0, 1.0, 0, 1.5],
                          [0, 1.0, 0, 1.5]])
        out = nn.attention_layer(
            ad.Tensor(x), s, r, ad.Tensor(efeat), p).value

        expected = np.zeros(3)
        for i in range(3):
            nbrs = [(s[k], efeat[k]) for k in range(4) if r[k] == i]
            scores = [w2 * x[i, 0] * (w3 * x[j, 0] + w5 @ e)
                      for j, e in nbrs]
            a = np.exp(scores - np.max(scores))
            a /= a.sum()
            msg = sum(ak * (w4 * x[j, 0] + w5 @ e)
                      for ak, (j, e) in zip(a, nbrs))
            expected[i] = w1 * x[i, 0] + mix * msg
        np.testing.assert_allclose(out[:, 0], expected, rtol=1e-12)

    def test_attention_weights_normalized(self):
        rng = np.random.default_rng(4)
        p = nn.AttentionLayerParams(8, 2, rng)
        x = ad.Tensor(rng.normal(size=(6, 8)))
        s = np.array([0, 1, 2, 3, 4, 5, 0, 2])
        r = np.array([1, 0, 3, 2, 5, 4, 3, 5])
        e = ad.Tensor(rng.normal(size=(8, nn.EDGE_FEATURE_DIM)))
        _, alpha = nn.attention_layer(x, s, r, e, p, return_alpha=True)
        sums = np.zeros((6, 2))
        np.add.at(sums, r, alpha.value)
        occupied = np.unique(r)
        np.testing.assert_allclose(sums[occupied], 1.0, rtol=1e-12)

    def test_output_width_is_channels(self):
        rng = np.random.default_rng(5)
        p = nn.AttentionLayerParams(12, 3, rng)
        assert p.heads * p.d_h == 12
        x = ad.Tensor(rng.normal(size=(4, 12)))
        out = nn.attention_layer(
            x, np.array([0, 1]), np.array([1, 0]),
            ad.Tensor(rng.normal(size=(2, nn.EDGE_FEATURE_DIM))), p)
        assert out.shape == (4, 12)


class TestExphormerNet:

    def test_fresh_network_output_finite(self):
        eg = tiny_graph()
        net = nn.ExphormerNet(channels=8, heads=2, layers=2, n_global=2,
                              seed=0)
        n, z = random_density(eg.n_grid)
        out = net.forward(n, z, eg)
        assert out.shape == (eg.n_grid,)
        assert np.all(np.isfinite(out.value))

    def test_all_zero_params_readout_bias(self):
        eg = tiny_graph()
        net = nn.ExphormerNet(channels=8, heads=2, layers=2, n_global=2,
                              seed=0)
        for t in net.parameters().values():
            t.value = np.zeros_like(t.value)
        net.readout.bias.value = np.array([0.37])
        n, z = random_density(eg.n_grid)
        out = net.forward(n, z, eg)
        np.testing.assert_allclose(out.value, 0.37, rtol=1e-14)

    def test_vertex_count_mismatch(self):
        eg = tiny_graph()
        net = nn.ExphormerNet(channels=8, heads=2, layers=1, n_global=2)
        with pytest.raises(DimensionError):
            net.forward(np.ones(eg.n_grid + 1), np.zeros(eg.n_grid + 1), eg)

    def test_permutation_equivariance(self):
        eg = tiny_graph()
        net = nn.ExphormerNet(channels=8, heads=2, layers=2, n_global=2,
                              seed=7)
        net.readout.weight.value = np.random.default_rng(8).normal(
            size=net.readout.weight.shape)
        n, z = random_density(eg.n_grid, seed=9)
        base = net.forward(n, z, eg).value

        rng = np.random.default_rng(10)
        perm = rng.permutation(eg.n_grid)       # grid vertices only
        inv = np.argsort(perm)
        full = np.concatenate([perm, np.arange(eg.n_grid, eg.n_grid
                                               + eg.n_global)])
        relabel = np.argsort(full)
        pg = gg.ElectronGraph(
            n_grid=eg.n_grid, n_global=eg.n_global,
            src=relabel[eg.src], dst=relabel[eg.dst],
            etype=eg.etype.copy(), dist=eg.dist.copy(),
            expander_degree=eg.expander_degree, alpha=eg.alpha,
            seed=eg.seed)
        out = net.forward(n[perm], z[perm], pg).value
        np.testing.assert_allclose(out[inv], base, rtol=1e-10, atol=1e-12)

    def test_density_gradient_matches_fd(self):
        eg = tiny_graph()
        net = nn.ExphormerNet(channels=8, heads=2, layers=2, n_global=2,
                              seed=11)
        net.readout.weight.value = np.random.default_rng(12).normal(
            size=net.readout.weight.shape)
        n, z = random_density(eg.n_grid, seed=13)
        t = ad.parameter(n)
        net.forward(t, z, eg).sum().backward()
        h = 1e-5
        for i in (0, eg.n_grid // 2, eg.n_grid - 1):
            dp, dm = n.copy(), n.copy()
            dp[i] += h
            dm[i] -= h
            fp = net.forward(dp, z, eg).value.sum()
            fm = net.forward(dm, z, eg).value.sum()
            fd = (fp - fm) / (2 * h)
            assert fd == pytest.approx(t.grad[i], rel=1e-5, abs=1e-10)


class TestAblationNets:

    def test_gcn_isolated_vertex_identity(self):
        w = ad.parameter(np.eye(3))
        x = ad.Tensor(np.random.default_rng(0).normal(size=(1, 3)))
        out = nn.gcn_layer(x, np.zeros(0, int), np.zeros(0, int), w)
        np.testing.assert_allclose(out.value, x.value, atol=1e-14)

    def test_gcn_two_path_hand_evaluation(self):
        # vertices 0-1 connected; degrees with self-loop are both 2
        w = ad.parameter(np.array([[2.0]]))
        x = np.array([[1.0], [3.0]])
        s = np.array([0, 1])
        r = np.array([1, 0])
        out = nn.gcn_layer(ad.Tensor(x), s, r, w).value
        # out_i = 2 * (x_i / 2 + x_j / sqrt(2*2))
        expected = np.array([[2 * (0.5 * 1 + 0.5 * 3)],
                             [2 * (0.5 * 3 + 0.5 * 1)]])
        np.testing.assert_allclose(out, expected, rtol=1e-14)

    def test_gcn_distance_weighting(self):
        w = ad.parameter(np.array([[1.0]]))
        x = np.array([[1.0], [1.0]])
        s, r = np.array([0, 1]), np.array([1, 0])
        inv = np.array([0.5, 0.5])     # 1/sqrt(r_ij) with r_ij = 4
        out = nn.gcn_layer(ad.Tensor(x), s, r, w, inv_sqrt_dist=inv).value
        expected = np.array([[0.5 + 0.5 * 0.5], [0.5 + 0.5 * 0.5]])
        np.testing.assert_allclose(out, expected, rtol=1e-14)

    def test_nnconv_unit_gate_is_neighbor_sum(self):
        rng = np.random.default_rng(1)
        c = 3
        x = ad.Tensor(rng.normal(size=(3, c)))
        s = np.array([0, 1, 1, 2])
        r = np.array([1, 0, 2, 1])
        e = ad.Tensor(rng.normal(size=(4, nn.EDGE_FEATURE_DIM)))
        root_w = ad.parameter(np.zeros((c, c)))
        root_b = ad.parameter(np.zeros(c))

        def unit_gate(_):
            return ad.Tensor(np.ones((4, c)))

        out = nn.nnconv_layer(x, s, r, e, root_w, root_b, unit_gate).value
        expected = np.zeros((3, c))
        for k in range(4):
            expected[r[k]] += x.value[s[k]]
        np.testing.assert_allclose(out, expected, rtol=1e-14)

    def test_nn_lda_ignores_graph(self):
        net = nn.NNLDANet(channels=8, layers=2, seed=5)
        n, z = random_density(12, seed=6)
        a = net.forward(n, z, None).value
        b = net.forward(n, z, tiny_graph()).value
        np.testing.assert_array_equal(a, b)

    def test_variant_nets_forward_and_differentiate(self):
        eg = tiny_graph()
        n, z = random_density(eg.n_grid, seed=7)
        for cls, kwargs in ((nn.GCNNet, {}),
                            (nn.GCNNet, {"distance_weight": True}),
                            (nn.NNConvNet, {})):
            net = cls(channels=8, layers=2, seed=8, **kwargs)
            net.readout.weight.value = np.random.default_rng(9).normal(
                size=net.readout.weight.shape)
            t = ad.parameter(n)
            out = net.forward(t, z, eg)
            assert out.shape == (eg.n_grid,)
            out.sum().backward()
            assert np.all(np.isfinite(t.grad))
            assert np.any(t.grad != 0.0)


class TestCheckpoint:

    def test_roundtrip_and_determinism(self, tmp_path):
        net = nn.ExphormerNet(channels=8, heads=2, layers=2, n_global=2,
                              seed=21)
        p1, p2 = tmp_path / "a.bin", tmp_path / "b.bin"
        nn.save_params(p1, net.parameters())
        nn.save_params(p2, net.parameters())
        assert p1.read_bytes() == p2.read_bytes()

        other = nn.ExphormerNet(channels=8, heads=2, layers=2, n_global=2,
                                seed=99)
        before = {k: v.value.copy() for k, v in net.parameters().items()}
        nn.load_params(p1, other.parameters())
        for k, v in other.parameters().items():
            np.testing.assert_array_equal(v.value, before[k])

    def test_shape_mismatch_rejected(self, tmp_path):
        net = nn.ExphormerNet(channels=8, heads=2, layers=2, n_global=2)
        path = tmp_path / "c.bin"
        nn.save_params(path, net.parameters())
        small = nn.ExphormerNet(channels=8, heads=2, layers=2, n_global=3)
        with pytest.raises(DimensionError):
            nn.load_params(path, small.parameters())

    def test_bad_magic_rejected(self, tmp_path):
        path = tmp_path / "junk.bin"
        path.write_bytes(b"nope" + b"\0" * 16)
        net = nn.NNLDANet(channels=4, layers=1)
        with pytest.raises(ConfigurationError):
            nn.load_params(path, net.parameters())
