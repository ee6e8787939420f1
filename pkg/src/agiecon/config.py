"""INI-style config documents for the CLI.

Sections and keys (`#` starts a comment, unknown keys are rejected, every
numeric value must parse as a finite decimal):

[model]       id = model_i | model_ii | model_iii, plus that model's
              parameters by symbol name:
                model_i:   A K K_AGI L alpha beta
                model_ii:  A K L1 L2 alpha beta1 beta2
                model_iii: A K K_AGI L_h L_AGI alpha gamma beta1 beta2
[transition]  w0 (default 1), w_inf (default 1), lambda (default 2),
              n_points (default 101)
[scenario]    horizon (required), adoption = linear|logistic|exp_saturating
              (default linear), k and t0 (logistic only), r (exp_saturating
              only), growth (default 0.05), collapse_threshold (default 0.5)
[fit]         factors = comma-separated factor names, input = sample CSV
              path (resolved relative to the config file)

The flat key-value format is deliberate: it parses without dependencies in
any language and the schema has no nesting to express.
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass

from .errors import ConfigError, DomainError
from .models import ModelId, ModelIIIParams, ModelIIParams, ModelIParams, ModelParams
from .scenario import AdoptionKind, AdoptionPath, ScenarioConfig
from .transition import TransitionParams

_MODEL_PARAM_KEYS: dict[ModelId, tuple[str, ...]] = {
    ModelId.MODEL_I: ("A", "K", "K_AGI", "L", "alpha", "beta"),
    ModelId.MODEL_II: ("A", "K", "L1", "L2", "alpha", "beta1", "beta2"),
    ModelId.MODEL_III: ("A", "K", "K_AGI", "L_h", "L_AGI", "alpha", "gamma", "beta1", "beta2"),
}

_SECTIONS = ("model", "transition", "scenario", "fit")

DEFAULT_N_POINTS = 101
DEFAULT_GROWTH = 0.05
DEFAULT_COLLAPSE_THRESHOLD = 0.5


class _SectionReader:
    """Pops validated values out of one section; leftovers are unknown keys."""

    def __init__(self, name: str, mapping) -> None:
        self.name = name
        self.pending = dict(mapping)

    def _where(self, key: str) -> str:
        return f"[{self.name}].{key}"

    def take(self, key: str, default: str | None = None) -> str | None:
        return self.pending.pop(key, default)

    def take_required(self, key: str) -> str:
        if key not in self.pending:
            raise ConfigError(f"{self._where(key)}: missing required key")
        return self.pending.pop(key)

    def take_float(self, key: str, default: float | None = None) -> float | None:
        if key not in self.pending:
            return default
        raw = self.pending.pop(key)
        try:
            value = float(raw)
        except ValueError:
            raise ConfigError(f"{self._where(key)}: cannot parse {raw!r} as a number") from None
        if not math.isfinite(value):
            raise ConfigError(f"{self._where(key)}: value must be finite, got {raw!r}")
        return value

    def take_required_float(self, key: str) -> float:
        if key not in self.pending:
            raise ConfigError(f"{self._where(key)}: missing required key")
        return self.take_float(key)

    def take_int(self, key: str, default: int | None = None) -> int | None:
        if key not in self.pending:
            return default
        raw = self.pending.pop(key)
        try:
            return int(raw)
        except ValueError:
            raise ConfigError(f"{self._where(key)}: cannot parse {raw!r} as an integer") from None

    def finish(self) -> None:
        if self.pending:
            key = sorted(self.pending)[0]
            raise ConfigError(f"{self._where(key)}: unknown key")


@dataclass(frozen=True)
class FitSpec:
    factor_names: tuple[str, ...]
    input_path: str


@dataclass(frozen=True)
class ScenarioSection:
    horizon: int
    adoption: AdoptionPath
    growth: float
    collapse_threshold: float


@dataclass(frozen=True)
class ParsedConfig:
    model_id: ModelId | None
    model_params: ModelParams | None
    transition: TransitionParams
    n_points: int
    scenario: ScenarioSection | None
    fit: FitSpec | None


def _parse_model(reader: _SectionReader) -> tuple[ModelId, ModelParams]:
    raw_id = reader.take_required("id").strip()
    try:
        model_id = ModelId(raw_id)
    except ValueError:
        choices = ", ".join(m.value for m in ModelId)
        raise ConfigError(f"[model].id: expected one of {choices}, got {raw_id!r}") from None
    values = {key: reader.take_required_float(key) for key in _MODEL_PARAM_KEYS[model_id]}
    reader.finish()
    param_type = {
        ModelId.MODEL_I: ModelIParams,
        ModelId.MODEL_II: ModelIIParams,
        ModelId.MODEL_III: ModelIIIParams,
    }[model_id]
    try:
        return model_id, param_type(**values)
    except DomainError as exc:
        raise ConfigError(f"[model]: {exc}") from exc


def _parse_transition(reader: _SectionReader) -> tuple[TransitionParams, int]:
    w0 = reader.take_float("w0", 1.0)
    w_inf = reader.take_float("w_inf", 1.0)
    lam = reader.take_float("lambda", 2.0)
    n_points = reader.take_int("n_points", DEFAULT_N_POINTS)
    reader.finish()
    if n_points < 2:
        raise ConfigError(f"[transition].n_points: must be >= 2, got {n_points}")
    try:
        return TransitionParams(w0=w0, w_inf=w_inf, lam=lam), n_points
    except DomainError as exc:
        raise ConfigError(f"[transition]: {exc}") from exc


def _parse_scenario(reader: _SectionReader) -> ScenarioSection:
    horizon = reader.take_int("horizon")
    if horizon is None:
        raise ConfigError("[scenario].horizon: missing required key")
    if horizon < 1:
        raise ConfigError(f"[scenario].horizon: must be >= 1, got {horizon}")
    kind_raw = (reader.take("adoption", "linear") or "").strip()
    try:
        kind = AdoptionKind(kind_raw)
    except ValueError:
        choices = ", ".join(k.value for k in AdoptionKind)
        raise ConfigError(f"[scenario].adoption: expected one of {choices}, got {kind_raw!r}") from None
    try:
        if kind is AdoptionKind.LOGISTIC:
            k = reader.take_required_float("k")
            t0 = reader.take_required_float("t0")
            adoption = AdoptionPath.logistic(k=k, t0=t0)
            if t0 > horizon:
                raise ConfigError(f"[scenario].t0: must lie in [0, horizon={horizon}], got {t0}")
        elif kind is AdoptionKind.EXP_SATURATING:
            adoption = AdoptionPath.exp_saturating(r=reader.take_required_float("r"))
        else:
            adoption = AdoptionPath.linear()
    except DomainError as exc:
        raise ConfigError(f"[scenario]: {exc}") from exc
    growth = reader.take_float("growth", DEFAULT_GROWTH)
    threshold = reader.take_float("collapse_threshold", DEFAULT_COLLAPSE_THRESHOLD)
    reader.finish()
    if growth < 0.0:
        raise ConfigError(f"[scenario].growth: must be >= 0, got {growth}")
    if not (0.0 < threshold <= 1.0):
        raise ConfigError(f"[scenario].collapse_threshold: must lie in (0, 1], got {threshold}")
    return ScenarioSection(
        horizon=horizon, adoption=adoption, growth=growth, collapse_threshold=threshold
    )


def _parse_fit(reader: _SectionReader) -> FitSpec:
    factors_raw = reader.take_required("factors")
    names = tuple(name.strip() for name in factors_raw.split(",") if name.strip())
    if not names:
        raise ConfigError("[fit].factors: expected a comma-separated list of factor names")
    if len(set(names)) != len(names):
        raise ConfigError("[fit].factors: factor names must be unique")
    input_path = reader.take_required("input").strip()
    if not input_path:
        raise ConfigError("[fit].input: path must not be empty")
    reader.finish()
    return FitSpec(factor_names=names, input_path=input_path)


def parse_config_text(text: str) -> ParsedConfig:
    """Parse and validate a config document; defaults are applied here."""
    parser = configparser.ConfigParser(
        inline_comment_prefixes=("#",), interpolation=None, strict=True
    )
    parser.optionxform = str  # keys are case-sensitive symbol names (K_AGI != k_agi)
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"malformed config: {exc}") from exc
    if parser.defaults():
        raise ConfigError("[DEFAULT] section is not supported")
    for section in parser.sections():
        if section not in _SECTIONS:
            raise ConfigError(f"[{section}]: unknown section")

    model_id = None
    model_params = None
    if parser.has_section("model"):
        model_id, model_params = _parse_model(_SectionReader("model", parser["model"]))

    if parser.has_section("transition"):
        transition, n_points = _parse_transition(_SectionReader("transition", parser["transition"]))
    else:
        transition, n_points = TransitionParams(), DEFAULT_N_POINTS

    scenario = None
    if parser.has_section("scenario"):
        scenario = _parse_scenario(_SectionReader("scenario", parser["scenario"]))

    fit = None
    if parser.has_section("fit"):
        fit = _parse_fit(_SectionReader("fit", parser["fit"]))

    return ParsedConfig(
        model_id=model_id,
        model_params=model_params,
        transition=transition,
        n_points=n_points,
        scenario=scenario,
        fit=fit,
    )


def parse_config_file(path) -> ParsedConfig:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return parse_config_text(text)


def build_scenario_config(parsed: ParsedConfig) -> ScenarioConfig:
    """Assemble a runnable ScenarioConfig from [model] + [transition] + [scenario]."""
    if parsed.scenario is None:
        raise ConfigError("simulate needs a [scenario] section")
    if parsed.model_id is not ModelId.MODEL_III or parsed.model_params is None:
        raise ConfigError("simulate needs a [model] section with id = model_iii")
    try:
        return ScenarioConfig(
            horizon=parsed.scenario.horizon,
            initial_model3=parsed.model_params,
            adoption=parsed.scenario.adoption,
            agi_capital_growth=parsed.scenario.growth,
            transition=parsed.transition,
            collapse_threshold=parsed.scenario.collapse_threshold,
        )
    except DomainError as exc:
        raise ConfigError(f"[scenario]: {exc}") from exc


def render_config(parsed: ParsedConfig) -> str:
    """Serialize back to config text; parse(render(c)) == c.

    Floats are written with repr (exact round trip), so rendered documents
    are semantically identical to their source, not byte-identical.
    """
    lines: list[str] = []
    if parsed.model_id is not None:
        lines.append("[model]")
        lines.append(f"id = {parsed.model_id.value}")
        for key in _MODEL_PARAM_KEYS[parsed.model_id]:
            lines.append(f"{key} = {getattr(parsed.model_params, key)!r}")
        lines.append("")
    lines.append("[transition]")
    lines.append(f"w0 = {parsed.transition.w0!r}")
    lines.append(f"w_inf = {parsed.transition.w_inf!r}")
    lines.append(f"lambda = {parsed.transition.lam!r}")
    lines.append(f"n_points = {parsed.n_points}")
    lines.append("")
    if parsed.scenario is not None:
        lines.append("[scenario]")
        lines.append(f"horizon = {parsed.scenario.horizon}")
        lines.append(f"adoption = {parsed.scenario.adoption.kind.value}")
        if parsed.scenario.adoption.kind is AdoptionKind.LOGISTIC:
            lines.append(f"k = {parsed.scenario.adoption.k!r}")
            lines.append(f"t0 = {parsed.scenario.adoption.t0!r}")
        elif parsed.scenario.adoption.kind is AdoptionKind.EXP_SATURATING:
            lines.append(f"r = {parsed.scenario.adoption.r!r}")
        lines.append(f"growth = {parsed.scenario.growth!r}")
        lines.append(f"collapse_threshold = {parsed.scenario.collapse_threshold!r}")
        lines.append("")
    if parsed.fit is not None:
        lines.append("[fit]")
        lines.append(f"factors = {', '.join(parsed.fit.factor_names)}")
        lines.append(f"input = {parsed.fit.input_path}")
        lines.append("")
    return "\n".join(lines)
