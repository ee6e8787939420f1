"""The three AGI-economy models as presets over the Cobb-Douglas core.

Model I     Y = A (K + K_AGI)^alpha L^beta            AGI enters as capital
Model II    Y = A K^alpha L1^beta1 L2^beta2           human (L1) and AGI (L2) labor
Model III   Y = A K^alpha K_AGI^gamma L_h^beta1 L_AGI^beta2

Wages are competitive: each labor factor is paid its marginal product.
``classify_limit`` settles asymptotic claims (a wage or output as one
quantity or elasticity goes to 0+ or infinity) by symbolic sign analysis
of the relevant exponent, then confirms the verdict numerically along a
geometric probe sequence.  Note that the honest mathematics of the wage
``w = beta * A * (...) * L**(beta-1)`` DIVERGES as L -> 0+ for beta < 1;
wages reach zero only through the elasticity channel (beta -> 0), whose
linear prefactor annihilates the expression.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from enum import Enum

from .errors import (
    ContractViolationError,
    DomainError,
    LimitProbeError,
    UndefinedIndexError,
)
from .production import (
    CobbDouglasTechnology,
    FactorBundle,
    LimitClassification,
    LimitKind,
    marginal_product,
    output,
)


class ModelId(Enum):
    MODEL_I = "model_i"
    MODEL_II = "model_ii"
    MODEL_III = "model_iii"


def _validate_fields(record, positive: tuple[str, ...], nonnegative: tuple[str, ...]) -> None:
    for field in dataclasses.fields(record):
        value = float(getattr(record, field.name))
        if not math.isfinite(value):
            raise DomainError(f"{type(record).__name__}.{field.name} must be finite, got {value!r}")
        object.__setattr__(record, field.name, value)
    for name in positive:
        if getattr(record, name) <= 0.0:
            raise DomainError(f"{type(record).__name__}.{name} must be > 0")
    for name in nonnegative:
        if getattr(record, name) < 0.0:
            raise DomainError(f"{type(record).__name__}.{name} must be >= 0")


@dataclass(frozen=True)
class ModelIParams:
    A: float
    K: float
    K_AGI: float
    L: float
    alpha: float
    beta: float

    def __post_init__(self) -> None:
        _validate_fields(self, positive=("A",), nonnegative=("K", "K_AGI", "L"))

    @property
    def combined_capital(self) -> float:
        # K_new is derived, never stored, so K_new = K + K_AGI holds by construction
        return self.K + self.K_AGI


@dataclass(frozen=True)
class ModelIIParams:
    A: float
    K: float
    L1: float
    L2: float
    alpha: float
    beta1: float
    beta2: float

    def __post_init__(self) -> None:
        _validate_fields(self, positive=("A",), nonnegative=("K", "L1", "L2"))


@dataclass(frozen=True)
class ModelIIIParams:
    A: float
    K: float
    K_AGI: float
    L_h: float
    L_AGI: float
    alpha: float
    gamma: float
    beta1: float
    beta2: float

    def __post_init__(self) -> None:
        _validate_fields(self, positive=("A",), nonnegative=("K", "K_AGI", "L_h", "L_AGI"))


ModelParams = ModelIParams | ModelIIParams | ModelIIIParams

_PARAM_TYPES: dict[ModelId, type] = {
    ModelId.MODEL_I: ModelIParams,
    ModelId.MODEL_II: ModelIIParams,
    ModelId.MODEL_III: ModelIIIParams,
}

# Multiplicative structure of each model: ((base fields), exponent field).
# Model I's capital term sums two fields; everything else is a single factor.
_MODEL_TERMS: dict[ModelId, tuple[tuple[tuple[str, ...], str], ...]] = {
    ModelId.MODEL_I: ((("K", "K_AGI"), "alpha"), (("L",), "beta")),
    ModelId.MODEL_II: ((("K",), "alpha"), (("L1",), "beta1"), (("L2",), "beta2")),
    ModelId.MODEL_III: (
        (("K",), "alpha"),
        (("K_AGI",), "gamma"),
        (("L_h",), "beta1"),
        (("L_AGI",), "beta2"),
    ),
}

_LABOR_FACTORS: dict[ModelId, tuple[str, ...]] = {
    ModelId.MODEL_I: ("L",),
    ModelId.MODEL_II: ("L1", "L2"),
    ModelId.MODEL_III: ("L_h", "L_AGI"),
}


def _require_params(model: ModelId, params: ModelParams) -> None:
    expected = _PARAM_TYPES[model]
    if type(params) is not expected:
        raise ContractViolationError(
            f"{model.value} expects {expected.__name__}, got {type(params).__name__}"
        )


def model_technology(model: ModelId, params: ModelParams) -> tuple[CobbDouglasTechnology, FactorBundle]:
    """The (technology, bundle) pair a model delegates to."""
    _require_params(model, params)
    if model is ModelId.MODEL_I:
        tech = CobbDouglasTechnology(params.A, (("K_total", params.alpha), ("L", params.beta)))
        bundle = FactorBundle.of(K_total=params.combined_capital, L=params.L)
    elif model is ModelId.MODEL_II:
        tech = CobbDouglasTechnology(
            params.A, (("K", params.alpha), ("L1", params.beta1), ("L2", params.beta2))
        )
        bundle = FactorBundle.of(K=params.K, L1=params.L1, L2=params.L2)
    else:
        tech = CobbDouglasTechnology(
            params.A,
            (
                ("K", params.alpha),
                ("K_AGI", params.gamma),
                ("L_h", params.beta1),
                ("L_AGI", params.beta2),
            ),
        )
        bundle = FactorBundle.of(
            K=params.K, K_AGI=params.K_AGI, L_h=params.L_h, L_AGI=params.L_AGI
        )
    return tech, bundle


def model_output(model: ModelId, params: ModelParams) -> float:
    """Total output of the given model at the given parameter record."""
    tech, bundle = model_technology(model, params)
    return output(tech, bundle)


def model_wages(model: ModelId, params: ModelParams) -> dict[str, float]:
    """Competitive wage of every labor factor: its marginal product.

    Keys are the model's labor factor names ("L" for Model I, "L1"/"L2"
    for Model II, "L_h"/"L_AGI" for Model III).  Every labor quantity must
    be strictly positive.
    """
    tech, bundle = model_technology(model, params)
    return {
        factor: marginal_product(tech, bundle, factor) for factor in _LABOR_FACTORS[model]
    }


def power_index_model3(params: ModelIIIParams) -> float:
    """Human share of labor income, w_h*L_h / (w_h*L_h + w_AGI*L_AGI).

    Under competitive Cobb-Douglas wages each factor's income is its
    elasticity times output, so the index equals beta1/(beta1+beta2) for
    every choice of positive quantities; the wage-based computation here is
    kept so that property is testable rather than assumed.
    """
    _require_params(ModelId.MODEL_III, params)
    if params.L_h <= 0.0 or params.L_AGI <= 0.0:
        raise ContractViolationError("power index needs L_h > 0 and L_AGI > 0")
    if params.beta1 < 0.0 or params.beta2 < 0.0:
        raise ContractViolationError("power index needs beta1 >= 0 and beta2 >= 0")
    if params.beta1 + params.beta2 == 0.0:
        raise UndefinedIndexError("beta1 + beta2 = 0: no labor income exists")
    wages = model_wages(ModelId.MODEL_III, params)
    human = wages["L_h"] * params.L_h
    agi = wages["L_AGI"] * params.L_AGI
    if human + agi == 0.0:
        raise UndefinedIndexError("total labor income is zero; index undefined")
    return human / (human + agi)


class LimitDirection(Enum):
    TO_ZERO_PLUS = "to_zero_plus"
    TO_INFINITY = "to_infinity"


@dataclass(frozen=True)
class Observable:
    """What to track in a limit study: total output, or one factor's wage."""

    kind: str
    factor: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("output", "wage"):
            raise DomainError(f"unknown observable kind {self.kind!r}")
        if self.kind == "wage" and not self.factor:
            raise DomainError("wage observable needs a factor name")
        if self.kind == "output" and self.factor is not None:
            raise DomainError("output observable carries no factor")

    @classmethod
    def wage(cls, factor: str) -> "Observable":
        return cls("wage", factor)


OUTPUT = Observable("output")

_PROBES = {
    LimitDirection.TO_ZERO_PLUS: (1e-3, 1e-6, 1e-9),
    LimitDirection.TO_INFINITY: (1e3, 1e6, 1e9),
}


def classify_limit(
    model: ModelId,
    params: ModelParams,
    target: str,
    direction: LimitDirection,
    observable: Observable,
) -> LimitClassification:
    """Exact limit of an observable as ``target`` goes to 0+ or infinity.

    Parameters
    ----------
    model, params:
        The model and the parameter record supplying every non-target value.
    target:
        Name of the quantity or exponent being driven to its limit.  All
        remaining quantities must be strictly positive.
    direction:
        TO_ZERO_PLUS or TO_INFINITY.
    observable:
        OUTPUT or Observable.wage(factor).

    The observable is a monomial ``C * v**p * r**v`` in the target v (with
    Model I's summed capital handled as a shifted base), so the limit is
    decided by the signs of p and log r.  The verdict is then confirmed
    against a numeric evaluation of the literal expression at 1e-3, 1e-6,
    1e-9 (or 1e3, 1e6, 1e9), computed in log-magnitude space so overflow
    and underflow cannot corrupt the comparison; disagreement raises
    LimitProbeError rather than returning a guess.
    """
    _require_params(model, params)
    terms = _MODEL_TERMS[model]
    quantity_fields = tuple(field for bases, _ in terms for field in bases)
    exponent_fields = tuple(field for _, field in terms)
    if target not in quantity_fields and target not in exponent_fields:
        raise ContractViolationError(f"{target!r} is not part of the {model.value} expression")
    wage_factor = observable.factor if observable.kind == "wage" else None
    if wage_factor is not None and wage_factor not in _LABOR_FACTORS[model]:
        raise ContractViolationError(f"{model.value} has no wage for factor {wage_factor!r}")
    for field in quantity_fields:
        if field != target and getattr(params, field) <= 0.0:
            raise ContractViolationError(
                f"classify_limit needs all non-target quantities strictly positive; {field} is not"
            )

    kind, value = _symbolic_limit(params, terms, target, direction, wage_factor)
    _confirm_numeric(params, terms, target, direction, wage_factor, kind, value)
    if kind is LimitKind.FINITE:
        return LimitClassification(kind, value)
    return LimitClassification(kind)


def _symbolic_limit(params, terms, target, direction, wage_factor):
    """Reduce the observable to C * v**p * r**v and classify its limit."""
    const = params.A
    poly = 0.0  # net exponent p of the target variable v
    exp_bases: list[float] = []  # fixed bases raised to the target variable
    shifted: list[tuple[float, float]] = []  # (offset, exponent) for (offset + v)**e

    if wage_factor is not None:
        prefactor_field = next(field for bases, field in terms if wage_factor in bases)
        if target == prefactor_field:
            poly += 1.0
        else:
            const *= getattr(params, prefactor_field)

    for bases, exponent_field in terms:
        own = wage_factor is not None and wage_factor in bases
        exponent = getattr(params, exponent_field)
        if target == exponent_field:
            base = math.fsum(getattr(params, field) for field in bases)
            if own:
                const /= base  # x**(v-1) = x**v / x
            exp_bases.append(base)
        elif target in bases:
            offset = math.fsum(getattr(params, field) for field in bases if field != target)
            effective = exponent - 1.0 if own else exponent
            if offset == 0.0:
                poly += effective
            else:
                shifted.append((offset, effective))
        else:
            base = math.fsum(getattr(params, field) for field in bases)
            const *= base ** (exponent - 1.0 if own else exponent)

    if direction is LimitDirection.TO_INFINITY:
        net_poly = poly + math.fsum(exponent for _, exponent in shifted)
        growth = math.prod(exp_bases) if exp_bases else 1.0
    else:
        net_poly = -poly  # u = 1/v turns v**p into u**(-p)
        growth = 1.0  # x**v -> x**0 == 1
        for offset, exponent in shifted:
            const *= offset**exponent  # limit value of (offset + v)**e at v -> 0+

    if const == 0.0:
        return LimitKind.ZERO, None  # a zero elasticity prefactor annihilates the wage
    if growth > 1.0:
        return LimitKind.DIVERGES, None
    if growth < 1.0:
        return LimitKind.ZERO, None
    if net_poly > 0.0:
        return LimitKind.DIVERGES, None
    if net_poly < 0.0:
        return LimitKind.ZERO, None
    return LimitKind.FINITE, const


def _log_magnitude(params, terms, target, wage_factor, v):
    """Literal observable at target value v, as (sign, log |value|)."""
    sign = 1.0
    logmag = math.log(params.A)

    def value_of(field: str) -> float:
        return v if field == target else getattr(params, field)

    if wage_factor is not None:
        prefactor_field = next(field for bases, field in terms if wage_factor in bases)
        prefactor = value_of(prefactor_field)
        if prefactor == 0.0:
            return 0.0, -math.inf
        if prefactor < 0.0:
            sign = -sign
        logmag += math.log(abs(prefactor))

    for bases, exponent_field in terms:
        own = wage_factor is not None and wage_factor in bases
        exponent = value_of(exponent_field)
        if own:
            exponent -= 1.0
        base = math.fsum(value_of(field) for field in bases)
        logmag += exponent * math.log(base)
    return sign, logmag


def _confirm_numeric(params, terms, target, direction, wage_factor, kind, value):
    probes = _PROBES[direction]
    evaluated = [_log_magnitude(params, terms, target, wage_factor, v) for v in probes]
    magnitudes = [logmag for _, logmag in evaluated]
    m0, m1, m2 = magnitudes

    if kind is LimitKind.ZERO:
        ok = m0 >= m1 >= m2 and (m2 == -math.inf or m2 < m0)
    elif kind is LimitKind.DIVERGES:
        ok = m0 <= m1 <= m2 and (m2 == math.inf or m2 > m0)
    else:
        sign, logmag = evaluated[-1]
        ok = logmag < 700.0 and abs(sign * math.exp(logmag) - value) <= 1e-6 * abs(value)
    if not ok:
        raise LimitProbeError(
            f"numeric probe disagrees with {kind.value} for target {target!r} "
            f"({direction.value}): log-magnitudes {magnitudes}"
        )
