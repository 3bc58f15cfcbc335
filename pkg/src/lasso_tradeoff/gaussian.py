"""Gaussian primitives, soft-thresholding, and closed-form shrinkage moments.

Everything downstream (state evolution, boundary curves, the feasible
region) reduces to the standard normal pdf/cdf, the soft-thresholding
operator, and a handful of truncated-Gaussian second moments evaluated
atom-by-atom over a finite discrete prior.  All functions here are pure
scalar maps with absolute accuracy near machine precision (the cdf is
computed through ``erfc``, accurate to ~1e-16 in the tails), so callers
can budget their own tolerances well above 1e-12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError

_SQRT2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)

#: Absolute error budget for the special functions below.
SPECIAL_FUNCTION_TOL = 1e-12


def _check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


def phi(t: float) -> float:
    """Standard normal density at ``t``."""
    t = _check_finite("t", t)
    return _INV_SQRT_2PI * math.exp(-0.5 * t * t)


def Phi(t: float) -> float:
    """Standard normal cdf at ``t``, via erfc for tail accuracy."""
    t = _check_finite("t", t)
    return 0.5 * math.erfc(-t / _SQRT2)


def soft_threshold(x: float, theta: float) -> float:
    """Soft-thresholding operator: sign(x) * max(|x| - theta, 0)."""
    x = _check_finite("x", x)
    theta = float(theta)
    if not theta >= 0.0:
        raise DomainError(f"threshold must be nonnegative, got {theta!r}")
    return math.copysign(max(abs(x) - theta, 0.0), x)


def e_eta_sq_noise(alpha: float) -> float:
    """E eta_alpha(W)^2 for W ~ N(0,1): 2[(1+a^2)Phi(-a) - a phi(a)].

    Strictly decreasing in ``alpha``, from 1 at alpha=0 toward 0.
    """
    alpha = _check_finite("alpha", alpha)
    if alpha < 0.0:
        raise DomainError(f"alpha must be nonnegative, got {alpha!r}")
    return 2.0 * ((1.0 + alpha * alpha) * Phi(-alpha) - alpha * phi(alpha))


def e_eta_sq_shifted(mu: float, alpha: float) -> float:
    """E (eta_alpha(mu + W) - mu)^2 for W ~ N(0,1), in closed form.

    Splitting on where mu + W falls relative to [-alpha, alpha] gives three
    truncated-Gaussian pieces:

        (1+a^2)[Phi(mu-a) + Phi(-mu-a)]        (both tail regions)
        - (a+mu) phi(a-mu) - (a-mu) phi(a+mu)  (tail cross terms)
        + mu^2 [Phi(a-mu) - Phi(-a-mu)]        (dead zone, estimate = 0)

    Reduces to ``e_eta_sq_noise(alpha)`` at mu=0 and tends to mu^2 as
    alpha grows and to 1 + alpha^2 as |mu| grows.
    """
    mu = _check_finite("mu", mu)
    alpha = _check_finite("alpha", alpha)
    if alpha < 0.0:
        raise DomainError(f"alpha must be nonnegative, got {alpha!r}")
    a = alpha
    tails = (1.0 + a * a) * (Phi(mu - a) + Phi(-mu - a))
    cross = -(a + mu) * phi(a - mu) - (a - mu) * phi(a + mu)
    dead_zone = mu * mu * (Phi(a - mu) - Phi(-a - mu))
    return tails + cross + dead_zone


@dataclass(frozen=True)
class DiscretePrior:
    """Finite mixture of nonzero point masses plus an atom at zero.

    ``atoms`` holds (effect size, probability) pairs for the nonzero part;
    ``zero_mass`` is the probability of a zero coefficient.  The weights
    and zero mass must form a probability distribution to 1e-12.  The
    nonzero fraction ``epsilon`` is ``1 - zero_mass``.
    """

    atoms: tuple[tuple[float, float], ...]
    zero_mass: float = 0.0

    def __post_init__(self):
        object.__setattr__(
            self, "atoms", tuple((float(m), float(w)) for m, w in self.atoms)
        )
        object.__setattr__(self, "zero_mass", float(self.zero_mass))
        if not (0.0 <= self.zero_mass <= 1.0):
            raise DomainError(f"zero_mass must lie in [0, 1], got {self.zero_mass!r}")
        total = self.zero_mass
        for m, w in self.atoms:
            if not (math.isfinite(m) and math.isfinite(w)):
                raise DomainError("prior atoms must be finite")
            if m == 0.0:
                raise DomainError("zero effect sizes belong in zero_mass, not atoms")
            if w < 0.0:
                raise DomainError(f"atom weight must be nonnegative, got {w!r}")
            total += w
        if abs(total - 1.0) > 1e-12:
            raise DomainError(f"prior mass must sum to 1, got {total!r}")
        if not self.atoms and self.zero_mass == 0.0:
            raise DomainError("prior needs at least one atom or positive zero_mass")

    @classmethod
    def mixture(
        cls, conditional_atoms: list[tuple[float, float]] | tuple, epsilon: float
    ) -> "DiscretePrior":
        """Build a prior from conditional (nonzero) atoms and P(nonzero)."""
        epsilon = float(epsilon)
        if not (0.0 < epsilon <= 1.0):
            raise DomainError(f"epsilon must lie in (0, 1], got {epsilon!r}")
        cond_total = sum(w for _, w in conditional_atoms)
        if cond_total <= 0.0:
            raise DomainError("conditional atoms need positive total weight")
        atoms = tuple((m, epsilon * w / cond_total) for m, w in conditional_atoms)
        return cls(atoms=atoms, zero_mass=1.0 - epsilon)

    @classmethod
    def point_mass_at_zero(cls) -> "DiscretePrior":
        return cls(atoms=(), zero_mass=1.0)

    @property
    def epsilon(self) -> float:
        """Probability of a nonzero coefficient."""
        return 1.0 - self.zero_mass

    @property
    def second_moment(self) -> float:
        return sum(w * m * m for m, w in self.atoms)

    def conditional(self) -> "DiscretePrior":
        """Distribution of the effect size given it is nonzero."""
        eps = self.epsilon
        if eps <= 0.0:
            raise DomainError("conditional prior undefined: all mass at zero")
        return DiscretePrior(
            atoms=tuple((m, w / eps) for m, w in self.atoms), zero_mass=0.0
        )


def e_shrinkage_mse(prior: DiscretePrior, tau: float, alpha: float) -> float:
    """E (eta_{alpha tau}(P + tau W) - P)^2 for P ~ prior, W ~ N(0,1).

    Uses scale invariance eta_{c t}(c x) = c eta_t(x) to reduce each atom
    to ``tau^2 * e_eta_sq_shifted(m / tau, alpha)``.
    """
    tau = _check_finite("tau", tau)
    alpha = _check_finite("alpha", alpha)
    if tau <= 0.0:
        raise DomainError(f"tau must be positive, got {tau!r}")
    if alpha <= 0.0:
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    acc = prior.zero_mass * e_eta_sq_noise(alpha)
    for m, w in prior.atoms:
        acc += w * e_eta_sq_shifted(m / tau, alpha)
    return tau * tau * acc


def p_exceed(prior_star: DiscretePrior, tau: float, alpha: float) -> float:
    """P(|P* + tau W| > alpha tau) for the conditional (all-nonzero) prior.

    Per atom of size m this is Phi(-alpha + m/tau) + Phi(-alpha - m/tau);
    the mixture average always exceeds the pure-noise value 2 Phi(-alpha).
    """
    tau = _check_finite("tau", tau)
    alpha = _check_finite("alpha", alpha)
    if tau <= 0.0:
        raise DomainError(f"tau must be positive, got {tau!r}")
    if alpha <= 0.0:
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    if prior_star.zero_mass != 0.0:
        raise DomainError("p_exceed expects the conditional prior (no zero atom)")
    acc = 0.0
    for m, w in prior_star.atoms:
        mu = m / tau
        acc += w * (Phi(-alpha + mu) + Phi(-alpha - mu))
    return acc
