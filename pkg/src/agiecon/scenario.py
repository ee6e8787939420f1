"""Time-stepped displacement scenario over the three-factor model.

An exogenous adoption path s(t) in [0, 1] drives the split of the unit
labor supply (L_AGI = s, L_h = 1 - s) and transfers output elasticity from
human to AGI labor:

    beta1_t = beta1_0 * (1 - s)
    beta2_t = beta2_0 + beta1_0 * s        (beta1_t + beta2_t conserved)

so returns to scale stay constant while the wage-relevant elasticity
migrates.  AGI capital compounds geometrically, K_AGI(t) = K_AGI(0) *
(1 + g)**t, the simplest unbounded growth path.  Each step records output,
both wages, both power indices (elasticity-share and exogenous-transition)
and the human wage bill, a proxy for wage-financed aggregate demand.

At boundary shares the vanished factor's wage follows the elasticity
prefactor convention: 0 when its elasticity is 0, NaN otherwise (the
literal marginal product has no finite value there).  Because the human
elasticity and the human labor quantity vanish together at s = 1, w_h is
always a real number and ends at exactly 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import (
    ContractViolationError,
    DomainError,
    NonFiniteOutputError,
    SimulationFailureError,
    UndefinedBaselineError,
    UndefinedIndexError,
)
from .models import ModelId, ModelIIIParams, model_technology
from .production import marginal_product, output
from .transition import TransitionParams, human_power


class AdoptionKind(Enum):
    LINEAR = "linear"
    LOGISTIC = "logistic"
    EXP_SATURATING = "exp_saturating"


@dataclass(frozen=True)
class AdoptionPath:
    """Exogenous adoption share path; s(0) = 0 and s(horizon) = 1 for all kinds.

    The literature behind this model posits rising AGI labor without a
    functional form, so all three shapes are artifact conventions:
    LINEAR t/T, LOGISTIC an affinely renormalized sigmoid with steepness k
    and midpoint t0, EXP_SATURATING (1 - e^{-rt}) / (1 - e^{-rT}).
    """

    kind: AdoptionKind
    k: float | None = None
    t0: float | None = None
    r: float | None = None

    def __post_init__(self) -> None:
        if self.kind is AdoptionKind.LOGISTIC:
            if self.k is None or self.t0 is None:
                raise DomainError("logistic adoption needs k and t0")
            object.__setattr__(self, "k", float(self.k))
            object.__setattr__(self, "t0", float(self.t0))
            if not math.isfinite(self.k) or self.k <= 0.0:
                raise DomainError(f"logistic steepness k must be > 0, got {self.k!r}")
            if not math.isfinite(self.t0) or self.t0 < 0.0:
                raise DomainError(f"logistic midpoint t0 must be finite and >= 0, got {self.t0!r}")
            if self.r is not None:
                raise DomainError("logistic adoption does not take r")
        elif self.kind is AdoptionKind.EXP_SATURATING:
            if self.r is None:
                raise DomainError("exp_saturating adoption needs r")
            object.__setattr__(self, "r", float(self.r))
            if not math.isfinite(self.r) or self.r <= 0.0:
                raise DomainError(f"exp_saturating rate r must be > 0, got {self.r!r}")
            if self.k is not None or self.t0 is not None:
                raise DomainError("exp_saturating adoption does not take k or t0")
        else:
            if self.k is not None or self.t0 is not None or self.r is not None:
                raise DomainError("linear adoption takes no parameters")

    @classmethod
    def linear(cls) -> "AdoptionPath":
        return cls(AdoptionKind.LINEAR)

    @classmethod
    def logistic(cls, k: float, t0: float) -> "AdoptionPath":
        return cls(AdoptionKind.LOGISTIC, k=k, t0=t0)

    @classmethod
    def exp_saturating(cls, r: float) -> "AdoptionPath":
        return cls(AdoptionKind.EXP_SATURATING, r=r)


def _sigmoid(z: float) -> float:
    if z >= 0.0:
        return 1.0 / (1.0 + math.exp(-z))
    ez = math.exp(z)
    return ez / (1.0 + ez)


def adoption_share(path: AdoptionPath, t: int, horizon: int) -> float:
    """Share s(t) in [0, 1]; non-decreasing in t, 0 at t=0, 1 at t=horizon."""
    if not isinstance(horizon, int) or isinstance(horizon, bool) or horizon < 1:
        raise DomainError(f"horizon must be an integer >= 1, got {horizon!r}")
    if not isinstance(t, int) or isinstance(t, bool) or not (0 <= t <= horizon):
        raise DomainError(f"step t must be an integer in [0, {horizon}], got {t!r}")
    if path.kind is AdoptionKind.LINEAR:
        return t / horizon
    if path.kind is AdoptionKind.LOGISTIC:
        if path.t0 > horizon:
            raise DomainError(f"logistic midpoint t0={path.t0!r} exceeds horizon {horizon}")
        low = _sigmoid(path.k * (0.0 - path.t0))
        high = _sigmoid(path.k * (horizon - path.t0))
        return (_sigmoid(path.k * (t - path.t0)) - low) / (high - low)
    scale = 1.0 - math.exp(-path.r * horizon)
    return (1.0 - math.exp(-path.r * t)) / scale


@dataclass(frozen=True)
class ScenarioConfig:
    """Everything a run needs; labor fields of initial_model3 are overridden
    by the adoption path at every step, only its K, K_AGI, A and exponents
    seed the simulation."""

    horizon: int
    initial_model3: ModelIIIParams
    adoption: AdoptionPath
    agi_capital_growth: float = 0.05
    transition: TransitionParams = TransitionParams()
    collapse_threshold: float = 0.5

    def __post_init__(self) -> None:
        if not isinstance(self.horizon, int) or isinstance(self.horizon, bool) or self.horizon < 1:
            raise DomainError(f"horizon must be an integer >= 1, got {self.horizon!r}")
        p0 = self.initial_model3
        if p0.beta1 <= 0.0:
            raise DomainError("initial beta1 must be > 0 so there is elasticity to transfer")
        if p0.beta2 < 0.0:
            raise DomainError("initial beta2 must be >= 0")
        if p0.K <= 0.0 or p0.K_AGI <= 0.0:
            raise DomainError("initial K and K_AGI must be > 0")
        growth = float(self.agi_capital_growth)
        if not math.isfinite(growth) or growth < 0.0:
            raise DomainError(f"agi_capital_growth must be finite and >= 0, got {growth!r}")
        object.__setattr__(self, "agi_capital_growth", growth)
        theta = float(self.collapse_threshold)
        if not (0.0 < theta <= 1.0):
            raise DomainError(f"collapse_threshold must lie in (0, 1], got {theta!r}")
        object.__setattr__(self, "collapse_threshold", theta)
        if self.adoption.kind is AdoptionKind.LOGISTIC and self.adoption.t0 > self.horizon:
            raise DomainError(
                f"logistic midpoint t0={self.adoption.t0!r} exceeds horizon {self.horizon}"
            )


@dataclass(frozen=True)
class TimeSeriesRecord:
    """One simulation step.  w_agi is NaN at s = 0 when beta2_0 > 0 (vanished
    factor with positive elasticity); p_h_transition is NaN where the
    exogenous index is undefined."""

    t: int
    s: float
    beta1: float
    beta2: float
    K: float
    K_AGI: float
    L_h: float
    L_AGI: float
    Y: float
    w_h: float
    w_agi: float
    p_h_elastic: float
    p_h_transition: float
    wage_bill: float


def _factor_wage(tech, bundle, name: str, elasticity: float) -> float:
    if bundle.quantity(name) > 0.0:
        return marginal_product(tech, bundle, name)
    # boundary share: the factor is absent; its wage is the prefactor value
    return 0.0 if elasticity == 0.0 else math.nan


def _step(cfg: ScenarioConfig, t: int, s: float) -> TimeSeriesRecord:
    p0 = cfg.initial_model3
    beta1_t = p0.beta1 * (1.0 - s)
    beta2_t = p0.beta2 + p0.beta1 * s
    try:
        k_agi = p0.K_AGI * (1.0 + cfg.agi_capital_growth) ** t
    except OverflowError:
        k_agi = math.inf
    if not math.isfinite(k_agi):
        raise SimulationFailureError(f"step {t}: AGI capital overflowed")
    params = ModelIIIParams(
        A=p0.A,
        K=p0.K,
        K_AGI=k_agi,
        L_h=1.0 - s,
        L_AGI=s,
        alpha=p0.alpha,
        gamma=p0.gamma,
        beta1=beta1_t,
        beta2=beta2_t,
    )
    tech, bundle = model_technology(ModelId.MODEL_III, params)
    try:
        y = output(tech, bundle)
        w_h = _factor_wage(tech, bundle, "L_h", beta1_t)
        w_agi = _factor_wage(tech, bundle, "L_AGI", beta2_t)
    except NonFiniteOutputError as exc:
        raise SimulationFailureError(f"step {t}: {exc}") from exc
    p_h_elastic = beta1_t / (beta1_t + beta2_t)
    try:
        p_h_transition = human_power(cfg.transition, s)
    except UndefinedIndexError:
        p_h_transition = math.nan
    wage_bill = w_h * params.L_h
    for label, value in (("Y", y), ("w_h", w_h), ("wage_bill", wage_bill)):
        if not math.isfinite(value):
            raise SimulationFailureError(f"step {t}: {label} is not finite ({value!r})")
    if math.isinf(w_agi):
        raise SimulationFailureError(f"step {t}: w_agi is not finite ({w_agi!r})")
    return TimeSeriesRecord(
        t=t,
        s=s,
        beta1=beta1_t,
        beta2=beta2_t,
        K=p0.K,
        K_AGI=k_agi,
        L_h=params.L_h,
        L_AGI=s,
        Y=y,
        w_h=w_h,
        w_agi=w_agi,
        p_h_elastic=p_h_elastic,
        p_h_transition=p_h_transition,
        wage_bill=wage_bill,
    )


def run_scenario(cfg: ScenarioConfig) -> list[TimeSeriesRecord]:
    """Simulate steps t = 0..horizon and return records in step order.

    Deterministic: every field is a closed-form function of (t, s(t)), so
    repeated runs serialize byte-identically.
    """
    return [
        _step(cfg, t, adoption_share(cfg.adoption, t, cfg.horizon))
        for t in range(cfg.horizon + 1)
    ]


def detect_collapse(series: list[TimeSeriesRecord], theta: float) -> int | None:
    """Smallest step t with w_h(t) < theta * w_h(0), or None if never."""
    theta = float(theta)
    if not (0.0 < theta <= 1.0):
        raise DomainError(f"theta must lie in (0, 1], got {theta!r}")
    if not series:
        raise ContractViolationError("empty series")
    baseline = series[0].w_h
    if baseline == 0.0 or math.isnan(baseline):
        raise UndefinedBaselineError("w_h(0) = 0: collapse threshold has no baseline")
    cutoff = theta * baseline
    for record in series:
        if record.w_h < cutoff:
            return record.t
    return None
