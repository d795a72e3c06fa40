"""Neural layers on the autodiff tape.

Graph-transformer attention over the electron graph, the stacked
enhancement network, and the smaller ablation architectures (plain MLP,
GCN with optional distance weighting, NNConv-style edge gating).

Parameters live in ordered name -> Tensor dicts so the optimizer and the
checkpoint format can treat every architecture uniformly.
"""

import struct

import numpy as np

from . import autodiff as ad
from .errors import ConfigurationError, DimensionError
from .functionals import DENSITY_FLOOR
from .graph import GLOBAL, EXPANDER, LOCAL

EDGE_FEATURE_DIM = 4     # one-hot edge type (3) + distance r_ij


def uniform_init(rng, n_in, n_out):
    bound = 1.0 / np.sqrt(n_in)
    return rng.uniform(-bound, bound, size=(n_in, n_out))


class Linear:
    """Dense affine map; `zero=True` initializes weight and bias to zero."""

    def __init__(self, n_in, n_out, rng, zero=False, bias=True):
        w = np.zeros((n_in, n_out)) if zero else uniform_init(rng, n_in, n_out)
        self.weight = ad.parameter(w)
        self.bias = ad.parameter(np.zeros(n_out)) if bias else None

    def __call__(self, x):
        out = ad.matmul(x, self.weight)
        if self.bias is not None:
            out = out + self.bias
        return out

    def params(self, prefix):
        out = {f"{prefix}.weight": self.weight}
        if self.bias is not None:
            out[f"{prefix}.bias"] = self.bias
        return out


def edge_features(graph, use_distance=True):
    """Per-edge feature rows: one-hot type concatenated with r_ij."""
    feats = np.zeros((len(graph.src), EDGE_FEATURE_DIM))
    feats[np.arange(len(graph.src)), graph.etype] = 1.0
    if use_distance:
        feats[:, 3] = graph.dist
    return feats


class AttentionLayerParams:
    """Weights of one multi-head graph-transformer attention layer.

    W1 is the skip map, W2/W3 form queries and keys, W4 the values, W5
    lifts raw edge features into each of those; per-head partitioning
    slices the channel axis into `heads` blocks of size d_h.
    """

    def __init__(self, channels, heads, rng, edge_dim=EDGE_FEATURE_DIM):
        if channels % heads != 0:
            raise ConfigurationError(
                f"channels {channels} not divisible by heads {heads}")
        self.channels = channels
        self.heads = heads
        self.d_h = channels // heads
        self.w1 = ad.parameter(uniform_init(rng, channels, channels))
        self.w2 = ad.parameter(uniform_init(rng, channels, channels))
        self.w3 = ad.parameter(uniform_init(rng, channels, channels))
        self.w4 = ad.parameter(uniform_init(rng, channels, channels))
        self.w5 = ad.parameter(uniform_init(rng, edge_dim, channels))
        # bias-free so zero W2..W5 leaves the layer exactly equal to W1
        self.mix = Linear(channels, channels, rng, bias=False)

    def params(self, prefix):
        out = {f"{prefix}.w{k}": getattr(self, f"w{k}") for k in range(1, 6)}
        out.update(self.mix.params(f"{prefix}.mix"))
        return out


def attention_layer(x, senders, receivers, efeat, p, return_alpha=False):
    """One multi-head attention pass over the given directed edges.

    out_i = W1 x_i + mix(concat_h sum_j alpha_ij (W4 x_j + W5 e_ij))
    with alpha_ij the per-head segment softmax of
    (W2 x_i)^T (W3 x_j + W5 e_ij) / sqrt(d_h) over j in N(i).
    """
    n = x.shape[0]
    q = ad.matmul(x, p.w2)
    k = ad.matmul(x, p.w3)
    v = ad.matmul(x, p.w4)
    e = ad.matmul(efeat, p.w5)
    k_e = ad.gather(k, senders) + e
    v_e = ad.gather(v, senders) + e
    q_e = ad.gather(q, receivers)
    shape = (len(senders), p.heads, p.d_h)
    score = (ad.reshape(q_e, shape) * ad.reshape(k_e, shape)).sum(axis=2) \
        * (1.0 / np.sqrt(p.d_h))
    alpha = ad.segment_softmax(score, receivers, n)
    weighted = ad.reshape(alpha, (len(senders), p.heads, 1)) \
        * ad.reshape(v_e, shape)
    agg = ad.segment_sum(weighted, receivers, n)
    agg = ad.reshape(agg, (n, p.channels))
    out = ad.matmul(x, p.w1) + p.mix(agg)
    if return_alpha:
        return out, alpha
    return out


def _stack_columns(*cols):
    return ad.concat([ad.reshape(c, (-1, 1)) for c in cols], axis=1)


class ExphormerNet:
    """Input projection, stacked attention layers, per-vertex readout.

    Grid vertices carry (n, zeta); the K global vertices carry learned
    embeddings. The readout emits one scalar per grid vertex only.
    """

    def __init__(self, channels=32, heads=4, layers=4, n_global=10,
                 seed=0, interlayer_activation=True, use_distance=True):
        if layers < 1:
            raise ConfigurationError("need at least one attention layer")
        rng = np.random.default_rng(seed)
        self.channels = channels
        self.n_global = n_global
        self.interlayer_activation = interlayer_activation
        self.use_distance = use_distance
        self.proj = Linear(2, channels, rng)
        self.layers = [AttentionLayerParams(channels, heads, rng)
                       for _ in range(layers)]
        self.readout = Linear(channels, 1, rng)
        self.globals = ad.parameter(
            rng.normal(scale=0.1, size=(max(n_global, 1), channels))
            if n_global > 0 else np.zeros((0, channels)))

    def parameters(self):
        out = dict(self.proj.params("proj"))
        for i, layer in enumerate(self.layers):
            out.update(layer.params(f"layer{i}"))
        out.update(self.readout.params("readout"))
        out["globals"] = self.globals
        return out

    def forward(self, n, zeta, graph):
        n = ad.astensor(n)
        zeta = ad.astensor(zeta)
        if graph.n_grid != n.shape[0]:
            raise DimensionError(
                f"graph has {graph.n_grid} grid vertices, density has "
                f"{n.shape[0]}")
        if graph.n_global != self.n_global:
            raise DimensionError(
                f"graph has {graph.n_global} global vertices, network "
                f"expects {self.n_global}")
        zeta = ad.where_mask(n.value >= DENSITY_FLOOR, zeta, 0.0)
        x = self.proj(_stack_columns(n, zeta))
        if self.n_global > 0:
            x = ad.concat([x, self.globals], axis=0)
        senders, receivers, _, _ = graph.directed()
        # directed() lists each undirected edge twice (forward then reverse),
        # and the feature row is orientation-independent
        base = edge_features(graph, self.use_distance)
        efeat = ad.Tensor(np.concatenate([base, base], axis=0))
        for i, layer in enumerate(self.layers):
            x = attention_layer(x, senders, receivers, efeat, layer)
            if self.interlayer_activation and i + 1 < len(self.layers):
                x = ad.relu(x)
        out = self.readout(x)
        grid_rows = ad.gather(out, np.arange(graph.n_grid))
        return ad.reshape(grid_rows, (graph.n_grid,))


class NNLDANet:
    """Pointwise MLP on (n, zeta) only: 4 hidden layers of 32, softplus."""

    def __init__(self, channels=32, layers=4, seed=0):
        rng = np.random.default_rng(seed)
        dims = [2] + [channels] * layers
        self.hidden = [Linear(a, b, rng) for a, b in zip(dims, dims[1:])]
        self.readout = Linear(channels, 1, rng)

    def parameters(self):
        out = {}
        for i, lin in enumerate(self.hidden):
            out.update(lin.params(f"hidden{i}"))
        out.update(self.readout.params("readout"))
        return out

    def forward(self, n, zeta, graph=None):
        n = ad.astensor(n)
        zeta = ad.astensor(zeta)
        zeta = ad.where_mask(n.value >= DENSITY_FLOOR, zeta, 0.0)
        x = _stack_columns(n, zeta)
        for lin in self.hidden:
            x = ad.softplus(lin(x))
        return ad.reshape(self.readout(x), (n.shape[0],))


def gcn_layer(x, senders, receivers, weight, bias=None, inv_sqrt_dist=None):
    """Symmetric-normalized graph convolution with an implicit self-loop.

    out_i = W sum_{j in N(i) u {i}} w_ij x_j / sqrt(d(i) d(j)) + b,
    where d counts the self-loop and w_ij is an optional 1/sqrt(r_ij)
    distance weighting (1 on the self-loop).
    """
    n = x.shape[0]
    deg = np.bincount(receivers, minlength=n) + 1.0
    norm = 1.0 / np.sqrt(deg[senders] * deg[receivers])
    if inv_sqrt_dist is not None:
        norm = norm * inv_sqrt_dist
    msgs = ad.gather(x, senders) * ad.Tensor(norm[:, None])
    agg = ad.segment_sum(msgs, receivers, n) + x * ad.Tensor(1.0 / deg[:, None])
    out = ad.matmul(agg, weight)
    if bias is not None:
        out = out + bias
    return out


class GCNNet:
    """Stack of GCN layers on the local-edge graph, softplus in between."""

    def __init__(self, channels=32, layers=4, seed=0, distance_weight=False):
        rng = np.random.default_rng(seed)
        self.distance_weight = distance_weight
        dims = [2] + [channels] * layers
        self.layers = [Linear(a, b, rng) for a, b in zip(dims, dims[1:])]
        self.readout = Linear(channels, 1, rng)

    def parameters(self):
        out = {}
        for i, lin in enumerate(self.layers):
            out.update(lin.params(f"gcn{i}"))
        out.update(self.readout.params("readout"))
        return out

    def forward(self, n, zeta, graph):
        n = ad.astensor(n)
        zeta = ad.astensor(zeta)
        zeta = ad.where_mask(n.value >= DENSITY_FLOOR, zeta, 0.0)
        senders, receivers, _, _ = graph.directed()
        inv_dist = None
        if self.distance_weight:
            d = np.concatenate([graph.dist, graph.dist])
            inv_dist = 1.0 / np.sqrt(np.maximum(d, 1e-6))
        x = _stack_columns(n, zeta)
        if graph.n_global > 0:
            x = ad.concat([x, ad.Tensor(np.zeros(
                (graph.n_global, 2)))], axis=0)
        for lin in self.layers:
            x = ad.softplus(gcn_layer(x, senders, receivers,
                                      lin.weight, lin.bias, inv_dist))
        out = self.readout(x)
        grid_rows = ad.gather(out, np.arange(graph.n_grid))
        return ad.reshape(grid_rows, (graph.n_grid,))


def nnconv_layer(x, senders, receivers, efeat, root_weight, root_bias,
                 gate_net):
    """Edge-conditioned convolution: messages x_j gated by g_theta(e_ij).

    out_i = W x_i + b + sum_{j in N(i)} x_j * g_theta(e_ij) (elementwise),
    so a constant unit gate degenerates to the plain neighbor sum.
    """
    gates = gate_net(efeat)
    msgs = ad.gather(x, senders) * gates
    n = x.shape[0]
    agg = ad.segment_sum(msgs, receivers, n)
    return ad.matmul(x, root_weight) + root_bias + agg


class NNConvNet:
    """Stack of edge-conditioned convolutions with softplus in between."""

    def __init__(self, channels=32, layers=4, seed=0):
        rng = np.random.default_rng(seed)
        self.channels = channels
        self.embed = Linear(2, channels, rng)
        self.roots = [Linear(channels, channels, rng) for _ in range(layers)]
        self.gates = [Linear(EDGE_FEATURE_DIM, channels, rng)
                      for _ in range(layers)]
        self.readout = Linear(channels, 1, rng)

    def parameters(self):
        out = dict(self.embed.params("embed"))
        for i, (r, g) in enumerate(zip(self.roots, self.gates)):
            out.update(r.params(f"root{i}"))
            out.update(g.params(f"gate{i}"))
        out.update(self.readout.params("readout"))
        return out

    def forward(self, n, zeta, graph):
        n = ad.astensor(n)
        zeta = ad.astensor(zeta)
        zeta = ad.where_mask(n.value >= DENSITY_FLOOR, zeta, 0.0)
        senders, receivers, _, _ = graph.directed()
        base = edge_features(graph)
        efeat = ad.Tensor(np.concatenate([base, base], axis=0))
        x = self.embed(_stack_columns(n, zeta))
        if graph.n_global > 0:
            x = ad.concat([x, ad.Tensor(
                np.zeros((graph.n_global, self.channels)))], axis=0)
        for root, gate in zip(self.roots, self.gates):
            x = ad.softplus(nnconv_layer(
                x, senders, receivers, efeat,
                root.weight, root.bias, gate))
        out = self.readout(x)
        grid_rows = ad.gather(out, np.arange(graph.n_grid))
        return ad.reshape(grid_rows, (graph.n_grid,))


# -- checkpoint format -----------------------------------------------------
# Versioned little-endian binary blob: deterministic byte-for-byte for a
# given parameter dict (names are written in sorted order).

_MAGIC = b"GXCP"
_VERSION = 1


def save_params(path, params):
    """Write named parameter arrays to a deterministic binary checkpoint."""
    with open(path, "wb") as fh:
        fh.write(_MAGIC)
        fh.write(struct.pack("<II", _VERSION, len(params)))
        for name in sorted(params):
            value = params[name].value
            # ascontiguousarray promotes 0-d arrays to 1-d; keep the shape
            arr = np.ascontiguousarray(value, dtype=np.float64).reshape(
                value.shape)
            raw = name.encode("utf-8")
            fh.write(struct.pack("<I", len(raw)))
            fh.write(raw)
            fh.write(struct.pack("<I", arr.ndim))
            fh.write(struct.pack(f"<{arr.ndim}Q", *arr.shape))
            fh.write(arr.tobytes())


def load_params(path, params):
    """Load a checkpoint into an existing parameter dict, in place."""
    with open(path, "rb") as fh:
        if fh.read(4) != _MAGIC:
            raise ConfigurationError(f"{path} is not a parameter checkpoint")
        version, count = struct.unpack("<II", fh.read(8))
        if version != _VERSION:
            raise ConfigurationError(f"unsupported checkpoint version "
                                     f"{version}")
        seen = set()
        for _ in range(count):
            (nlen,) = struct.unpack("<I", fh.read(4))
            name = fh.read(nlen).decode("utf-8")
            (ndim,) = struct.unpack("<I", fh.read(4))
            shape = struct.unpack(f"<{ndim}Q", fh.read(8 * ndim))
            data = np.frombuffer(
                fh.read(8 * int(np.prod(shape, dtype=np.int64) or 1)),
                dtype="<f8").reshape(shape)
            if name not in params:
                raise ConfigurationError(f"unexpected parameter {name!r}")
            if params[name].value.shape != data.shape:
                raise DimensionError(
                    f"checkpoint shape {data.shape} for {name!r} does not "
                    f"match model {params[name].value.shape}")
            params[name].value = data.copy()
            seen.add(name)
        missing = set(params) - seen
        if missing:
            raise ConfigurationError(
                f"checkpoint missing parameters: {sorted(missing)}")
