"""Catalogue of nonlinear terms f(u) with potentials V and radial factors g.

Every variant satisfies f = dV/dz_bar (equivalently Re f = (1/2) dV/dp,
Im f = (1/2) dV/dq for z = p + iq) with V real and V(0) = 0.  All variants
except HeavisideKerr factor as f(z) = z*g(|z|) with g real, so f(0) = 0 and
f commutes with conjugation and unit phases.  HeavisideKerr depends on x
through H(x), with H(0) = 1.

Functions accept scalars or numpy arrays and broadcast elementwise.
"""

import numpy as np

from .errors import ConfigError


class NonlinearityModel:
    tag = None

    def f(self, z, x=0.0):
        raise NotImplementedError

    def V(self, z, x=0.0):
        raise NotImplementedError

    def g(self, r):
        raise ConfigError(f"{self.tag} has no radial factor g")

    def dg(self, r):
        raise ConfigError(f"{self.tag} has no radial factor g")

    def df(self, z, w, x=0.0):
        """Real-linear derivative Df(z)[w] = (df/dz) w + (df/dz_bar) conj(w)."""
        return _radial_df(self, z, w)

    def params(self):
        raise NotImplementedError


def _radial_df(model, z, w):
    # f = z*g(r): df/dz = g + (r/2) g', df/dz_bar = z^2 g'/(2r); the z^2/(2r)
    # factor tends to 0 with r for every catalogue g
    z = np.asarray(z, dtype=complex)
    r = np.abs(z)
    safe = np.where(r > 0, r, 1.0)
    gp = np.where(r > 0, model.dg(safe), 0.0)
    dz = model.g(r) + 0.5 * r * gp
    dzbar = np.where(r > 0, z * z * gp / (2.0 * safe), 0.0)
    return dz * np.asarray(w, dtype=complex) + dzbar * np.conj(w)


class PowerLaw(NonlinearityModel):
    """f(z) = |z|^q z, V = 2|z|^(q+2)/(q+2), g(r) = r^q."""

    tag = "power_law"

    def __init__(self, q):
        if q <= 0:
            raise ConfigError(f"power_law requires q > 0, got {q}")
        self.q = float(q)

    def f(self, z, x=0.0):
        z = np.asarray(z, dtype=complex)
        return np.abs(z) ** self.q * z

    def V(self, z, x=0.0):
        return 2.0 * np.abs(z) ** (self.q + 2) / (self.q + 2)

    def g(self, r):
        return np.asarray(r, dtype=float) ** self.q

    def dg(self, r):
        return self.q * np.asarray(r, dtype=float) ** (self.q - 1)

    def params(self):
        return {"q": self.q}


class CubicQuintic(NonlinearityModel):
    """f(z) = alpha|z|^sigma z - gamma|z|^(2 sigma) z."""

    tag = "cubic_quintic"

    def __init__(self, alpha, gamma, sigma):
        if alpha <= 0 or gamma <= 0 or sigma <= 0:
            raise ConfigError("cubic_quintic requires alpha, gamma, sigma > 0")
        self.alpha = float(alpha)
        self.gamma = float(gamma)
        self.sigma = float(sigma)

    def f(self, z, x=0.0):
        z = np.asarray(z, dtype=complex)
        r = np.abs(z)
        return (self.alpha * r ** self.sigma - self.gamma * r ** (2 * self.sigma)) * z

    def V(self, z, x=0.0):
        r = np.abs(z)
        s = self.sigma
        return (2 * self.alpha * r ** (s + 2) / (s + 2)
                - 2 * self.gamma * r ** (2 * s + 2) / (2 * s + 2))

    def g(self, r):
        r = np.asarray(r, dtype=float)
        return self.alpha * r ** self.sigma - self.gamma * r ** (2 * self.sigma)

    def dg(self, r):
        r = np.asarray(r, dtype=float)
        s = self.sigma
        return self.alpha * s * r ** (s - 1) - 2 * self.gamma * s * r ** (2 * s - 1)

    def params(self):
        return {"alpha": self.alpha, "gamma": self.gamma, "sigma": self.sigma}


class HeavisideKerr(NonlinearityModel):
    """f(z,x) = alpha0|z|^2 z + (alpha1 + alpha2|z|^2) H(x) z, H(0) = 1.

    x-dependent; excluded from the g factorization and from conservation
    claims that rely on it.
    """

    tag = "heaviside_kerr"

    def __init__(self, alpha0, alpha1, alpha2):
        if alpha0 < 0 or alpha1 < 0 or alpha2 < 0:
            raise ConfigError("heaviside_kerr requires alpha0, alpha1, alpha2 >= 0")
        self.alpha0 = float(alpha0)
        self.alpha1 = float(alpha1)
        self.alpha2 = float(alpha2)

    @staticmethod
    def _H(x):
        return np.where(np.asarray(x, dtype=float) >= 0.0, 1.0, 0.0)

    def f(self, z, x=0.0):
        z = np.asarray(z, dtype=complex)
        r2 = np.abs(z) ** 2
        return self.alpha0 * r2 * z + (self.alpha1 + self.alpha2 * r2) * self._H(x) * z

    def V(self, z, x=0.0):
        r2 = np.abs(z) ** 2
        return (self.alpha0 * r2 ** 2 / 2.0
                + self._H(x) * (self.alpha1 * r2 + self.alpha2 * r2 ** 2 / 2.0))

    def df(self, z, w, x=0.0):
        z = np.asarray(z, dtype=complex)
        w = np.asarray(w, dtype=complex)
        r2 = np.abs(z) ** 2
        H = self._H(x)
        dz = 2 * self.alpha0 * r2 + H * (self.alpha1 + 2 * self.alpha2 * r2)
        dzbar = (self.alpha0 + H * self.alpha2) * z * z
        return dz * w + dzbar * np.conj(w)

    def params(self):
        return {"alpha0": self.alpha0, "alpha1": self.alpha1, "alpha2": self.alpha2}


class DetunedCubic(NonlinearityModel):
    """f(z) = (delta/(4 kappa_ref) - alpha|z|^2) z."""

    tag = "detuned_cubic"

    def __init__(self, delta, alpha, kappa_ref):
        if delta < 0 or alpha < 0:
            raise ConfigError("detuned_cubic requires delta, alpha >= 0")
        if kappa_ref <= 0:
            raise ConfigError("detuned_cubic requires kappa_ref > 0")
        self.delta = float(delta)
        self.alpha = float(alpha)
        self.kappa_ref = float(kappa_ref)

    def f(self, z, x=0.0):
        z = np.asarray(z, dtype=complex)
        return (self.delta / (4 * self.kappa_ref) - self.alpha * np.abs(z) ** 2) * z

    def V(self, z, x=0.0):
        r2 = np.abs(z) ** 2
        return self.delta / (4 * self.kappa_ref) * r2 - self.alpha * r2 ** 2 / 2.0

    def g(self, r):
        r = np.asarray(r, dtype=float)
        return self.delta / (4 * self.kappa_ref) - self.alpha * r ** 2 + 0.0 * r

    def dg(self, r):
        return -2.0 * self.alpha * np.asarray(r, dtype=float)

    def params(self):
        return {"delta": self.delta, "alpha": self.alpha, "kappa_ref": self.kappa_ref}


class Saturable(NonlinearityModel):
    """f(z) = (1/2)(2 + gamma|z|^2)/(1 + gamma|z|^2)^2 |z|^2 z."""

    tag = "saturable"

    def __init__(self, gamma):
        if gamma <= 0:
            raise ConfigError(f"saturable requires gamma > 0, got {gamma}")
        self.gamma = float(gamma)

    def f(self, z, x=0.0):
        z = np.asarray(z, dtype=complex)
        r2 = np.abs(z) ** 2
        return 0.5 * (2 + self.gamma * r2) * r2 / (1 + self.gamma * r2) ** 2 * z

    def V(self, z, x=0.0):
        r2 = np.abs(z) ** 2
        return r2 ** 2 / (2.0 * (1 + self.gamma * r2))

    def g(self, r):
        r2 = np.asarray(r, dtype=float) ** 2
        return 0.5 * (2 + self.gamma * r2) * r2 / (1 + self.gamma * r2) ** 2

    def dg(self, r):
        r = np.asarray(r, dtype=float)
        return 2.0 * r / (1 + self.gamma * r ** 2) ** 3

    def params(self):
        return {"gamma": self.gamma}


_TAGS = {m.tag: m for m in (PowerLaw, CubicQuintic, HeavisideKerr, DetunedCubic, Saturable)}


def model_from_tag(tag, params):
    if tag not in _TAGS:
        raise ConfigError(f"unknown nonlinearity tag {tag!r}; known: {sorted(_TAGS)}")
    try:
        return _TAGS[tag](**params)
    except TypeError as e:
        raise ConfigError(f"bad parameters for {tag!r}: {e}") from None


class ModelParams:
    """Physical parameters kappa (nonparaxiality) and beta (diffraction)."""

    def __init__(self, kappa, beta, nonlinearity):
        if kappa <= 0:
            raise ConfigError(f"kappa must be > 0, got {kappa}")
        if beta <= 0:
            raise ConfigError(f"beta must be > 0, got {beta}")
        if isinstance(nonlinearity, DetunedCubic) and not np.isclose(
                nonlinearity.kappa_ref, kappa, rtol=1e-12, atol=0.0):
            raise ConfigError(
                f"detuned_cubic kappa_ref={nonlinearity.kappa_ref} must equal kappa={kappa}")
        self.kappa = float(kappa)
        self.beta = float(beta)
        self.nonlinearity = nonlinearity


def evaluate_f(model, z, x=0.0):
    return model.f(z, x)


def evaluate_V(model, z, x=0.0):
    return model.V(z, x)


def evaluate_g(model, r):
    return model.g(r)


def evaluate_df(model, z, w, x=0.0):
    return model.df(z, w, x)


def wirtinger_residual(model, z, x=0.0, eps=1e-6):
    """|f(z) - (1/2)(D_p V + i D_q V)| with central differences of step eps."""
    if not 1e-8 <= eps <= 1e-4:
        raise ValueError(f"eps must lie in [1e-8, 1e-4], got {eps}")
    dp = (model.V(z + eps, x) - model.V(z - eps, x)) / (2 * eps)
    dq = (model.V(z + 1j * eps, x) - model.V(z - 1j * eps, x)) / (2 * eps)
    return np.abs(model.f(z, x) - 0.5 * (dp + 1j * dq))
