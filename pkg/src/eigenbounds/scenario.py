"""Scenario files: a flat, commented key = value format with arrays.

Lines are ``key = value`` with ``#`` comments; a comma-separated value
makes an array.  Unknown keys are rejected so that misconfigured
parameter grids fail loudly.  ``constant.<report-name>`` keys pin the
constant used for that report's pass/fail decision.

Example::

    # small demo
    name = demo
    seed = 7
    family = gaussian_bumps
    count = 10
    grid_n = 120
    theorems = pointwise, imag_decay, lt_hansmann
    gamma = 1, 2
    a = 2, 4, 8
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

__all__ = ["Scenario", "ScenarioError", "load_scenario", "parse_scenario"]

KNOWN_THEOREMS = (
    "davies",
    "pointwise",
    "imag_decay",
    "davies_nath",
    "short_range_sum",
    "lt_bgk",
    "lt_hansmann",
    "lt_hansmann_key",
    "dhk",
    "af_sums",
    "kss",
    "sobolev",
    "hansmann_chain",
    "bs_principle",
)

_SCALAR = {
    "name": str,
    "seed": int,
    "family": str,
    "count": int,
    "grid_n": int,
    "grid_x0": float,
    "grid_x1": float,
    "amplitude": float,
    "support": float,
    "bumps": int,
    "width_min": float,
    "width_max": float,
    "well_len": float,
    "normalize_l1": float,
    "delta_floor": float,
    "split_constant": float,
    "slack": float,
    "output_dir": str,
}
_ARRAY = {
    "theorems": str,
    "gamma": float,
    "eps": float,
    "eps_prime": float,
    "mu": float,
    "nu": float,
    "a": float,
    "n": int,
}


class ScenarioError(ValueError):
    """Invalid scenario file or parameter grid."""


@dataclass
class Scenario:
    name: str
    seed: int
    theorems: list[str]
    family: str = "gaussian_bumps"
    count: int = 10
    grid_n: int = 200
    grid_x0: float = -12.0
    grid_x1: float = 12.0
    amplitude: float = 4.0
    support: float = 1.0
    bumps: int = 3
    width_min: float = 0.1
    width_max: float = 0.4
    well_len: float = 0.5
    normalize_l1: float | None = None
    delta_floor: float | None = None  # None means the 10*h^2 default
    split_constant: float = 1.0
    slack: float = 0.05
    output_dir: str = ""
    gamma: list[float] = field(default_factory=lambda: [1.0])
    eps: list[float] = field(default_factory=lambda: [0.5])
    eps_prime: list[float] = field(default_factory=lambda: [0.1])
    mu: list[float] = field(default_factory=lambda: [1.0])
    nu: list[float] = field(default_factory=lambda: [1.0, 2.0, 4.0])
    a: list[float] = field(default_factory=lambda: [2.0, 4.0, 8.0, 16.0])
    n: list[int] = field(default_factory=list)
    constants: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if not self.output_dir:
            self.output_dir = f"out/{self.name}"
        if not self.n:
            self.n = [self.grid_n]
        self.validate()

    def validate(self) -> None:
        for t in self.theorems:
            if t not in KNOWN_THEOREMS:
                raise ScenarioError(f"unknown theorem {t!r}; known: {', '.join(KNOWN_THEOREMS)}")
        if not self.theorems:
            raise ScenarioError("scenario lists no theorems")
        if self.count < 0:
            raise ScenarioError("count must be >= 0")
        if any(g < 0.5 for g in self.gamma):
            raise ScenarioError("gamma values must be >= 1/2 in d = 1")
        if any(e <= 0 for e in self.eps) or any(e <= 0 for e in self.eps_prime):
            raise ScenarioError("eps and eps_prime values must be positive")
        if any(m < 1 for m in self.mu) or any(nv < 1 for nv in self.nu):
            raise ScenarioError("mu and nu values must be >= 1")
        if any(av <= 0 for av in self.a):
            raise ScenarioError("a values must be positive")
        if self.slack < 0:
            raise ScenarioError("slack must be >= 0")
        # every requested theorem must see a non-empty valid parameter grid
        for t in self.theorems:
            if not self.valid_gammas(t):
                raise ScenarioError(f"theorem {t!r} has no valid gamma in {self.gamma}")

    def valid_gammas(self, theorem: str) -> list[float]:
        if theorem in ("davies", "short_range_sum"):
            return [g for g in self.gamma if g == 0.5]
        if theorem in ("imag_decay", "davies_nath", "lt_bgk", "af_sums"):
            return [g for g in self.gamma if g > 0.5]
        if theorem == "dhk":
            return [g for g in self.gamma if g >= 1.5]
        return list(self.gamma)


def _parse_value(key: str, raw: str):
    raw = raw.strip()
    if key in _SCALAR:
        caster = _SCALAR[key]
        try:
            return caster(raw)
        except ValueError as exc:
            raise ScenarioError(f"bad value for {key!r}: {raw!r}") from exc
    caster = _ARRAY[key]
    try:
        return [caster(tok.strip()) for tok in raw.split(",") if tok.strip()]
    except ValueError as exc:
        raise ScenarioError(f"bad value for {key!r}: {raw!r}") from exc


def parse_scenario(text: str) -> Scenario:
    values: dict = {}
    constants: dict[str, float] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ScenarioError(f"line {lineno}: expected 'key = value', got {body!r}")
        key, raw = body.split("=", 1)
        key = key.strip()
        if key.startswith("constant."):
            name = key[len("constant."):]
            if not name:
                raise ScenarioError(f"line {lineno}: empty constant name")
            try:
                constants[name] = float(raw.strip())
            except ValueError as exc:
                raise ScenarioError(f"line {lineno}: bad constant value {raw!r}") from exc
            continue
        if key not in _SCALAR and key not in _ARRAY:
            raise ScenarioError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise ScenarioError(f"line {lineno}: duplicate key {key!r}")
        values[key] = _parse_value(key, raw)
    for required in ("name", "seed", "theorems"):
        if required not in values:
            raise ScenarioError(f"missing required key {required!r}")
    try:
        return Scenario(constants=constants, **values)
    except ScenarioError:
        raise
    except (TypeError, ValueError) as exc:
        raise ScenarioError(str(exc)) from exc


def load_scenario(path: str | Path) -> Scenario:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario file {path}: {exc}") from exc
    return parse_scenario(text)
