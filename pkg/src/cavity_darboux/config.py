"""Simulation configuration: flat ``key = value`` files plus overrides."""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, fields

from .errors import ConfigError
from .jc import PhysParams


@dataclass(frozen=True)
class SimConfig:
    # physics
    coupling: float = 1.0
    omega: float = 1.0
    detuning: float = 2.0 * math.sqrt(2.0)
    hbar: float = 1.0
    b0: float = 2.0
    nbar: float = 30.0
    # run
    sigma: int | None = None
    t0: float = 0.0
    t1: float = 100.0
    samples: int = 5000
    poisson_tol: float = 1e-12
    # sigma_1
    hpm_order: int = 3
    pade_m: int = 2
    pade_n: int = 2
    sigma1_drive: str = "closed_form"
    t_on: float = 10.0
    # sigma_2 / sigma_3 initial state; ic_alpha None means "from the constraint"
    ic_beta: complex = 0j
    ic_alpha: complex | None = None
    sigma2_scale: float = 1.0
    v_prefactor: bool = False
    # output
    out: str = "out"
    csv: bool = True
    svg: bool = True
    logy: bool = False

    def __post_init__(self):
        self.validate()

    def validate(self):
        if not self.t1 > self.t0:
            raise ConfigError("t1", f"must exceed t0 ({self.t1} <= {self.t0})")
        if self.samples < 2:
            raise ConfigError("samples", "need at least 2 samples")
        for name in ("coupling", "omega", "hbar", "poisson_tol"):
            if not getattr(self, name) > 0:
                raise ConfigError(name, "must be positive")
        if not self.poisson_tol < 1:
            raise ConfigError("poisson_tol", "must be below 1")
        if self.nbar < 0:
            raise ConfigError("nbar", "must be non-negative")
        if self.sigma not in (None, 1, 2, 3):
            raise ConfigError("sigma", "must be 1, 2, 3 or none")
        if self.hpm_order < 1 or self.hpm_order > 4:
            raise ConfigError("hpm_order", "supported range is 1..4")
        if self.pade_m < 0 or self.pade_n < 0:
            raise ConfigError("pade_m", "Pade orders must be non-negative")
        if self.pade_m + self.pade_n - 1 > self.hpm_order:
            raise ConfigError("pade_m", "pade_m + pade_n - 1 must not exceed hpm_order")
        if self.sigma1_drive not in ("closed_form", "resummed"):
            raise ConfigError("sigma1_drive", "must be closed_form or resummed")
        if self.sigma2_scale < 0:
            raise ConfigError("sigma2_scale", "must be non-negative")
        for name in ("coupling", "omega", "detuning", "hbar", "b0", "nbar", "t0", "t1", "t_on"):
            if not math.isfinite(getattr(self, name)):
                raise ConfigError(name, "must be finite")

    def params(self):
        return PhysParams(coupling=self.coupling, omega=self.omega, detuning=self.detuning,
                          hbar=self.hbar, b0=self.b0, gamma=complex(math.sqrt(self.nbar)))

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)


_BOOL = {"1": True, "true": True, "yes": True, "on": True,
         "0": False, "false": False, "no": False, "off": False}


def _convert(name, raw):
    kind = {f.name: f.type for f in fields(SimConfig)}[name]
    raw = raw.strip()
    try:
        if name == "sigma":
            return None if raw.lower() in ("none", "") else int(raw)
        if name == "ic_alpha":
            return None if raw.lower() in ("auto", "none", "") else complex(raw.replace(" ", ""))
        if kind.startswith("bool"):
            return _BOOL[raw.lower()]
        if kind.startswith("int"):
            return int(raw)
        if kind.startswith("float"):
            return float(raw)
        if kind.startswith("complex"):
            return complex(raw.replace(" ", ""))
        return raw
    except (ValueError, KeyError):
        raise ConfigError(name, f"cannot parse {raw!r}") from None


def parse_assignments(lines, source="<config>"):
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    known = {f.name for f in fields(SimConfig)}
    values = {}
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}", "expected key = value")
        key, raw = (s.strip() for s in line.split("=", 1))
        if key not in known:
            raise ConfigError(key, "unknown configuration key")
        values[key] = _convert(key, raw)
    return values


def load_config(path=None, overrides=None):
    """Defaults, then the file at ``path``, then ``overrides`` (already typed)."""
    values = {}
    if path is not None:
        try:
            with open(path, encoding="utf-8") as fh:
                values.update(parse_assignments(fh, source=str(path)))
        except OSError as exc:
            raise ConfigError("config", f"cannot read {path}: {exc.strerror}") from None
    values.update({k: v for k, v in (overrides or {}).items() if v is not None})
    return SimConfig(**values)


def dump_config(cfg):
    lines = []
    for f in fields(SimConfig):
        v = getattr(cfg, f.name)
        lines.append(f"{f.name} = {'none' if v is None else v}")
    return "\n".join(lines) + "\n"
