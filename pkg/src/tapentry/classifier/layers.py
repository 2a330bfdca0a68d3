"""Network layers with hand-rolled forward/backward passes.

Variational layers keep a diagonal Gaussian over weights (mean mu, stddev
softplus(rho)) and use activation-level sampling: for an input X the
pre-activations are drawn as N(X @ M, X^2 @ S^2) with one noise draw per
output element, which is the variance-reduced estimator the training loop
relies on.  Every layer caches what its backward pass needs; ``grads``
mirrors ``params`` after a backward call.

Setting ``frozen_noise`` on a variational layer pins the noise draw, which
makes the loss a deterministic function of the parameters (used by the
finite-difference gradient checks).
"""

from __future__ import annotations

import numpy as np
from scipy.special import expit


def softplus(x):
    return np.logaddexp(0.0, x)


def softplus_inv(y):
    # inverse of log(1 + e^x); y must be positive
    return np.log(np.expm1(y))


class Layer:
    """Base: deterministic, parameter-free."""

    bayesian = False

    def __init__(self):
        self.params = {}
        self.grads = {}
        self.buffers = {}

    def forward(self, x, training=True, rng=None):
        raise NotImplementedError

    def backward(self, dout):
        raise NotImplementedError

    def kl(self, prior_sigma):
        return 0.0

    def add_kl_grads(self, prior_sigma, scale):
        pass

    def n_params(self):
        return sum(p.size for p in self.params.values())


def _gaussian_kl(mu, sigma, prior_sigma):
    """KL( N(mu, sigma^2) || N(0, prior_sigma^2) ), summed elementwise."""
    return float(
        np.sum(np.log(prior_sigma / sigma) + (sigma**2 + mu**2) / (2.0 * prior_sigma**2) - 0.5)
    )


class Dense(Layer):
    def __init__(self, in_dim, out_dim, rng):
        super().__init__()
        scale = np.sqrt(2.0 / in_dim)
        self.params = {
            "w": rng.normal(0.0, scale, size=(in_dim, out_dim)),
            "b": np.zeros(out_dim),
        }

    def forward(self, x, training=True, rng=None):
        self._x = x
        return x @ self.params["w"] + self.params["b"]

    def backward(self, dout):
        self.grads = {"w": self._x.T @ dout, "b": dout.sum(axis=0)}
        return dout @ self.params["w"].T


class VariationalDense(Layer):
    bayesian = True

    def __init__(self, in_dim, out_dim, rng):
        super().__init__()
        scale = np.sqrt(2.0 / in_dim)
        rho0 = softplus_inv(0.02)
        self.params = {
            "w_mu": rng.normal(0.0, scale, size=(in_dim, out_dim)),
            "w_rho": np.full((in_dim, out_dim), rho0) + rng.normal(0, 0.05, size=(in_dim, out_dim)),
            "b_mu": np.zeros(out_dim),
            "b_rho": np.full(out_dim, rho0),
        }
        self.frozen_noise = None
        self.last_noise = None

    def forward(self, x, training=True, rng=None):
        w_sig = softplus(self.params["w_rho"])
        b_sig = softplus(self.params["b_rho"])
        mean = x @ self.params["w_mu"] + self.params["b_mu"]
        var = (x**2) @ (w_sig**2) + b_sig**2
        if self.frozen_noise is not None:
            eps = self.frozen_noise
        else:
            eps = rng.standard_normal(mean.shape)
        self.last_noise = eps
        std = np.sqrt(var)
        self._cache = (x, eps, std, w_sig, b_sig)
        return mean + std * eps

    def backward(self, dout):
        x, eps, std, w_sig, b_sig = self._cache
        dmean = dout
        dvar = dout * eps / (2.0 * std)
        dw_sig2 = (x**2).T @ dvar
        db_sig2 = dvar.sum(axis=0)
        self.grads = {
            "w_mu": x.T @ dmean,
            "b_mu": dmean.sum(axis=0),
            "w_rho": dw_sig2 * 2.0 * w_sig * expit(self.params["w_rho"]),
            "b_rho": db_sig2 * 2.0 * b_sig * expit(self.params["b_rho"]),
        }
        return dmean @ self.params["w_mu"].T + 2.0 * x * (dvar @ (w_sig**2).T)

    def kl(self, prior_sigma):
        return _gaussian_kl(
            self.params["w_mu"], softplus(self.params["w_rho"]), prior_sigma
        ) + _gaussian_kl(self.params["b_mu"], softplus(self.params["b_rho"]), prior_sigma)

    def add_kl_grads(self, prior_sigma, scale):
        for mu_name, rho_name in (("w_mu", "w_rho"), ("b_mu", "b_rho")):
            mu = self.params[mu_name]
            rho = self.params[rho_name]
            sigma = softplus(rho)
            self.grads[mu_name] += scale * mu / prior_sigma**2
            dsigma = -1.0 / sigma + sigma / prior_sigma**2
            self.grads[rho_name] += scale * dsigma * expit(rho)


def _im2col(x):
    """(B, L, C) -> (B, L, 3C) columns for a length-3 kernel, same padding."""
    xp = np.pad(x, ((0, 0), (1, 1), (0, 0)))
    length = x.shape[1]
    return np.concatenate([xp[:, i: i + length, :] for i in range(3)], axis=2)


def _col2im(dcols, shape):
    """Adjoint of _im2col: scatter (B, L, 3C) gradients back to (B, L, C)."""
    batch, length, channels = shape
    dxp = np.zeros((batch, length + 2, channels))
    for i in range(3):
        dxp[:, i: i + length, :] += dcols[:, :, i * channels: (i + 1) * channels]
    return dxp[:, 1:-1, :]


class Conv1d(Layer):
    """Length-3 kernel, stride 1, same (zero) padding, over the time axis."""

    def __init__(self, in_ch, out_ch, rng):
        super().__init__()
        scale = np.sqrt(2.0 / (3 * in_ch))
        self.in_ch = in_ch
        self.params = {
            "w": rng.normal(0.0, scale, size=(3 * in_ch, out_ch)),
            "b": np.zeros(out_ch),
        }

    def forward(self, x, training=True, rng=None):
        self._shape = x.shape
        self._cols = _im2col(x)
        return self._cols @ self.params["w"] + self.params["b"]

    def backward(self, dout):
        cols_flat = self._cols.reshape(-1, self._cols.shape[-1])
        dout_flat = dout.reshape(-1, dout.shape[-1])
        self.grads = {"w": cols_flat.T @ dout_flat, "b": dout_flat.sum(axis=0)}
        return _col2im(dout @ self.params["w"].T, self._shape)


class VariationalConv1d(Layer):
    bayesian = True

    def __init__(self, in_ch, out_ch, rng):
        super().__init__()
        scale = np.sqrt(2.0 / (3 * in_ch))
        rho0 = softplus_inv(0.02)
        shape = (3 * in_ch, out_ch)
        self.params = {
            "w_mu": rng.normal(0.0, scale, size=shape),
            "w_rho": np.full(shape, rho0) + rng.normal(0, 0.05, size=shape),
            "b_mu": np.zeros(out_ch),
            "b_rho": np.full(out_ch, rho0),
        }
        self.frozen_noise = None
        self.last_noise = None

    def forward(self, x, training=True, rng=None):
        self._shape = x.shape
        cols = _im2col(x)
        w_sig = softplus(self.params["w_rho"])
        b_sig = softplus(self.params["b_rho"])
        mean = cols @ self.params["w_mu"] + self.params["b_mu"]
        var = (cols**2) @ (w_sig**2) + b_sig**2
        if self.frozen_noise is not None:
            eps = self.frozen_noise
        else:
            eps = rng.standard_normal(mean.shape)
        self.last_noise = eps
        std = np.sqrt(var)
        self._cache = (cols, eps, std, w_sig, b_sig)
        return mean + std * eps

    def backward(self, dout):
        cols, eps, std, w_sig, b_sig = self._cache
        dmean = dout
        dvar = dout * eps / (2.0 * std)
        cols2 = cols**2
        k = cols.shape[-1]
        self.grads = {
            "w_mu": cols.reshape(-1, k).T @ dmean.reshape(-1, dmean.shape[-1]),
            "b_mu": dmean.sum(axis=(0, 1)),
            "w_rho": (cols2.reshape(-1, k).T @ dvar.reshape(-1, dvar.shape[-1]))
            * 2.0 * w_sig * expit(self.params["w_rho"]),
            "b_rho": dvar.sum(axis=(0, 1)) * 2.0 * b_sig * expit(self.params["b_rho"]),
        }
        dcols = dmean @ self.params["w_mu"].T + 2.0 * cols * (dvar @ (w_sig**2).T)
        return _col2im(dcols, self._shape)

    kl = VariationalDense.kl
    add_kl_grads = VariationalDense.add_kl_grads


class BatchNorm(Layer):
    """Per-channel normalization; batch statistics while training, running
    statistics (momentum 0.1) frozen at inference."""

    def __init__(self, channels, momentum=0.1, eps=1e-5):
        super().__init__()
        self.momentum = momentum
        self.eps = eps
        self.params = {"gamma": np.ones(channels), "beta": np.zeros(channels)}
        self.buffers = {"running_mean": np.zeros(channels), "running_var": np.ones(channels)}

    def forward(self, x, training=True, rng=None):
        axes = tuple(range(x.ndim - 1))
        if training:
            mean = x.mean(axis=axes)
            var = x.var(axis=axes)
            self.buffers["running_mean"] *= 1.0 - self.momentum
            self.buffers["running_mean"] += self.momentum * mean
            self.buffers["running_var"] *= 1.0 - self.momentum
            self.buffers["running_var"] += self.momentum * var
        else:
            mean = self.buffers["running_mean"]
            var = self.buffers["running_var"]
        inv_std = 1.0 / np.sqrt(var + self.eps)
        xhat = (x - mean) * inv_std
        self._cache = (xhat, inv_std, axes, x.ndim)
        return self.params["gamma"] * xhat + self.params["beta"]

    def backward(self, dout):
        xhat, inv_std, axes, _ = self._cache
        self.grads = {
            "gamma": (dout * xhat).sum(axis=axes),
            "beta": dout.sum(axis=axes),
        }
        dxhat = dout * self.params["gamma"]
        # batch statistics are part of the graph while training
        return inv_std * (
            dxhat - dxhat.mean(axis=axes) - xhat * (dxhat * xhat).mean(axis=axes)
        )


class LeakyReLU(Layer):
    def __init__(self, slope=0.01):
        super().__init__()
        self.slope = slope

    def forward(self, x, training=True, rng=None):
        self._mask = x >= 0
        return np.where(self._mask, x, self.slope * x)

    def backward(self, dout):
        return np.where(self._mask, dout, self.slope * dout)


class MaxPool(Layer):
    """Halve the time axis of (B, L, C), keeping the per-pair maximum."""

    def forward(self, x, training=True, rng=None):
        batch, length, channels = x.shape
        pairs = x.reshape(batch, length // 2, 2, channels)
        self._argmax = pairs.argmax(axis=2)
        self._shape = x.shape
        return pairs.max(axis=2)

    def backward(self, dout):
        batch, half, channels = dout.shape
        dpairs = np.zeros((batch, half, 2, channels))
        np.put_along_axis(dpairs, self._argmax[:, :, None, :], dout[:, :, None, :], axis=2)
        return dpairs.reshape(self._shape)


class Flatten(Layer):
    def forward(self, x, training=True, rng=None):
        self._shape = x.shape
        return x.reshape(x.shape[0], -1)

    def backward(self, dout):
        return dout.reshape(self._shape)
