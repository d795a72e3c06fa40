"""Reverse-mode automatic differentiation over dense float64 arrays.

A `Tensor` records its parents and a vector-Jacobian product for each, so
`backward()` on a scalar accumulates adjoints through arbitrary compositions
of the ops below.  Broadcasting follows numpy; adjoints of broadcast inputs
are summed back to the input shape.
"""

import numpy as np

from .errors import DimensionError, NumericalError


def _unbroadcast(grad, shape):
    """Sum `grad` down to `shape` (inverse of numpy broadcasting)."""
    while grad.ndim > len(shape):
        grad = grad.sum(axis=0)
    for ax, n in enumerate(shape):
        if n == 1 and grad.shape[ax] != 1:
            grad = grad.sum(axis=ax, keepdims=True)
    return grad


class Tensor:
    __slots__ = ("value", "grad", "requires_grad", "_parents")

    def __init__(self, value, requires_grad=False, _parents=()):
        self.value = np.asarray(value, dtype=np.float64)
        self.grad = None
        self.requires_grad = requires_grad or any(
            p.requires_grad for p, _ in _parents)
        self._parents = _parents if self.requires_grad else ()

    @property
    def shape(self):
        return self.value.shape

    def __repr__(self):
        return f"Tensor(shape={self.shape}, requires_grad={self.requires_grad})"

    # -- graph traversal ---------------------------------------------------

    def backward(self, seed=None):
        """Accumulate adjoints into `.grad` of every upstream tensor."""
        if seed is None:
            if self.value.size != 1:
                raise DimensionError("backward() without seed needs a scalar")
            seed = np.ones_like(self.value)
        order, stack, seen = [], [(self, False)], set()
        while stack:
            node, done = stack.pop()
            if done:
                order.append(node)
                continue
            if id(node) in seen:
                continue
            seen.add(id(node))
            stack.append((node, True))
            for parent, _ in node._parents:
                if parent.requires_grad and id(parent) not in seen:
                    stack.append((parent, False))
        self.grad = np.asarray(seed, dtype=np.float64)
        for node in reversed(order):
            if node.grad is None:
                continue
            for parent, vjp in node._parents:
                if not parent.requires_grad:
                    continue
                g = vjp(node.grad)
                if parent.grad is None:
                    # only copy when the vjp handed back (a view of) the
                    # node adjoint itself; fresh arrays are safe to own
                    parent.grad = g.copy() \
                        if np.may_share_memory(g, node.grad) else g
                else:
                    parent.grad += g

    def zero_grad(self):
        self.grad = None

    # -- operator sugar ----------------------------------------------------

    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__

    def __mul__(self, other):
        return mul(self, other)

    __rmul__ = __mul__

    def __sub__(self, other):
        return add(self, mul(other, -1.0))

    def __rsub__(self, other):
        return add(mul(self, -1.0), other)

    def __truediv__(self, other):
        return div(self, other)

    def __rtruediv__(self, other):
        return div(astensor(other), self)

    def __neg__(self):
        return mul(self, -1.0)

    def __pow__(self, p):
        return power(self, p)

    def __matmul__(self, other):
        return matmul(self, other)

    def item(self):
        return float(self.value)

    def sum(self, axis=None, keepdims=False):
        return tensor_sum(self, axis=axis, keepdims=keepdims)


def astensor(x):
    return x if isinstance(x, Tensor) else Tensor(x)


def parameter(value):
    """A leaf tensor participating in gradient accumulation."""
    return Tensor(np.array(value, dtype=np.float64, copy=True),
                  requires_grad=True)


def _check(name, value):
    if not np.all(np.isfinite(value)):
        raise NumericalError(f"non-finite result in op {name!r}")
    return value


def _make(name, value, parents):
    return Tensor(_check(name, value), _parents=tuple(
        (p, vjp) for p, vjp in parents))


# -- arithmetic -----------------------------------------------------------

def add(a, b):
    a, b = astensor(a), astensor(b)
    return _make("add", a.value + b.value, [
        (a, lambda g: _unbroadcast(g, a.shape)),
        (b, lambda g: _unbroadcast(g, b.shape))])


def mul(a, b):
    a, b = astensor(a), astensor(b)
    return _make("mul", a.value * b.value, [
        (a, lambda g: _unbroadcast(g * b.value, a.shape)),
        (b, lambda g: _unbroadcast(g * a.value, b.shape))])


def div(a, b):
    a, b = astensor(a), astensor(b)
    return _make("div", a.value / b.value, [
        (a, lambda g: _unbroadcast(g / b.value, a.shape)),
        (b, lambda g: _unbroadcast(-g * a.value / b.value ** 2, b.shape))])


def power(a, p):
    a = astensor(a)
    p = float(p)
    out = a.value ** p
    return _make("pow", out, [
        (a, lambda g: g * p * a.value ** (p - 1.0))])


def matmul(a, b):
    a, b = astensor(a), astensor(b)
    if a.value.ndim != 2 or b.value.ndim != 2:
        raise DimensionError("matmul expects 2-D operands")
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"matmul shape mismatch {a.shape} @ {b.shape}")
    return _make("matmul", a.value @ b.value, [
        (a, lambda g: g @ b.value.T),
        (b, lambda g: a.value.T @ g)])


def exp(a):
    a = astensor(a)
    out = np.exp(a.value)
    return _make("exp", out, [(a, lambda g: g * out)])


def log(a):
    a = astensor(a)
    return _make("log", np.log(a.value), [(a, lambda g: g / a.value)])


def sqrt(a):
    a = astensor(a)
    out = np.sqrt(a.value)
    return _make("sqrt", out, [(a, lambda g: g * 0.5 / out)])


def softplus(a):
    a = astensor(a)
    # overflow-safe: log(1 + e^x) = max(x, 0) + log1p(e^{-|x|})
    out = np.maximum(a.value, 0.0) + np.log1p(np.exp(-np.abs(a.value)))
    sig = 0.5 * (1.0 + np.tanh(0.5 * a.value))
    return _make("softplus", out, [(a, lambda g: g * sig)])


def relu(a):
    a = astensor(a)
    mask = a.value > 0
    return _make("relu", np.where(mask, a.value, 0.0), [
        (a, lambda g: g * mask)])


def tensor_sum(a, axis=None, keepdims=False):
    a = astensor(a)
    out = a.value.sum(axis=axis, keepdims=keepdims)

    def vjp(g):
        if axis is not None and not keepdims:
            g = np.expand_dims(g, axis)
        return np.broadcast_to(g, a.shape).copy()

    return _make("sum", out, [(a, vjp)])


def where_mask(mask, a, fill=0.0):
    """a where mask, constant `fill` elsewhere; no gradient off-mask."""
    a = astensor(a)
    mask = np.asarray(mask, dtype=bool)
    return _make("where", np.where(mask, a.value, fill), [
        (a, lambda g: np.where(mask, g, 0.0))])


def concat(tensors, axis=0):
    tensors = [astensor(t) for t in tensors]
    sizes = [t.shape[axis] for t in tensors]
    splits = np.cumsum(sizes)[:-1]
    out = np.concatenate([t.value for t in tensors], axis=axis)

    def make_vjp(i):
        def vjp(g):
            return np.split(g, splits, axis=axis)[i]
        return vjp

    return _make("concat", out, [(t, make_vjp(i))
                                 for i, t in enumerate(tensors)])


def transpose(a):
    a = astensor(a)
    return _make("transpose", a.value.T, [(a, lambda g: g.T)])


def reshape(a, shape):
    a = astensor(a)
    return _make("reshape", a.value.reshape(shape), [
        (a, lambda g: g.reshape(a.shape))])


# -- indexed ops ----------------------------------------------------------

_PLAN_CACHE = {}


def _segment_plan(index, n_rows):
    """Cached argsort plan for reduceat-based scatter over `index`."""
    key = (index.tobytes(), n_rows)
    plan = _PLAN_CACHE.get(key)
    if plan is None:
        perm = np.argsort(index, kind="stable")
        sorted_ids = index[perm]
        starts = np.flatnonzero(
            np.r_[True, sorted_ids[1:] != sorted_ids[:-1]])
        if len(_PLAN_CACHE) > 64:
            _PLAN_CACHE.clear()
        plan = (perm, starts, sorted_ids[starts])
        _PLAN_CACHE[key] = plan
    return plan


def _scatter_add(values, index, n_rows):
    out = np.zeros((n_rows,) + values.shape[1:])
    if len(index):
        perm, starts, present = _segment_plan(index, n_rows)
        out[present] = np.add.reduceat(values[perm], starts, axis=0)
    return out


def gather(a, index):
    """Rows a[index]; duplicate indices accumulate in the backward pass."""
    a = astensor(a)
    index = np.asarray(index, dtype=np.int64)
    return _make("gather", a.value[index],
                 [(a, lambda g: _scatter_add(g, index, a.shape[0]))])


def segment_sum(a, segment_ids, num_segments):
    """Sum rows of `a` into `num_segments` buckets given by segment_ids."""
    a = astensor(a)
    segment_ids = np.asarray(segment_ids, dtype=np.int64)
    out = _scatter_add(a.value, segment_ids, num_segments)
    return _make("segment_sum", out, [(a, lambda g: g[segment_ids])])


def segment_softmax(a, segment_ids, num_segments):
    """Softmax of `a` normalized within each segment (empty segments -> 0)."""
    a = astensor(a)
    segment_ids = np.asarray(segment_ids, dtype=np.int64)
    # per-segment max shift for stability; constant w.r.t. differentiation
    seg_max = np.full((num_segments,) + a.shape[1:], -np.inf)
    if len(segment_ids):
        perm, starts, present = _segment_plan(segment_ids, num_segments)
        seg_max[present] = np.maximum.reduceat(a.value[perm], starts,
                                               axis=0)
    shifted = a - Tensor(seg_max[segment_ids])
    e = exp(shifted)
    denom = segment_sum(e, segment_ids, num_segments)
    return div(e, gather(denom, segment_ids))


# -- linear algebra -------------------------------------------------------

def symeig(a, degenerate_tol=1e-12):
    """Eigendecomposition of a symmetric matrix; returns (w, V) tensors.

    The adjoint uses the standard 1/(lambda_j - lambda_i) coupling; pairs
    closer than `degenerate_tol` contribute nothing (their subspace rotation
    is gauge freedom as long as downstream quantities are invariant).
    """
    a = astensor(a)
    if a.value.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError("symeig expects a square matrix")
    try:
        w, v = np.linalg.eigh(a.value)
    except np.linalg.LinAlgError as err:
        raise NumericalError(f"eigensolver failed: {err}")

    diff = w[None, :] - w[:, None]
    with np.errstate(divide="ignore"):
        f = np.where(np.abs(diff) > degenerate_tol, 1.0 / diff, 0.0)

    def vjp_w(g):
        return (v * g[None, :]) @ v.T

    def vjp_v(g):
        m = f * (v.T @ g)
        out = v @ m @ v.T
        return 0.5 * (out + out.T)

    wt = _make("symeig_w", w, [(a, vjp_w)])
    vt = _make("symeig_v", v, [(a, vjp_v)])
    return wt, vt
