"""Bounds and time budgets for the exhaustive checks in :mod:`abpair.oracle`.

The defaults are the acceptance bounds.  :meth:`CheckConfig.from_dict` reads
overrides from plain JSON-like data, for instance::

    {"quotients": {"max_order": 8}, "duality": {"budget": 5}}
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field, fields, replace
from typing import Any, Callable

from . import oracle
from .oracle import VerificationReport


@dataclass(frozen=True)
class CountBounds:
    max_order: int = 36
    pool: tuple[int, ...] = (2, 3, 4, 6, 8, 9, 12)
    targets: tuple[int, ...] = tuple(range(2, 13))
    stream_cap: int = 4096
    budget: float = 60.0


@dataclass(frozen=True)
class NondegBounds:
    cyclic_max: int = 20
    square_max: int = 64
    reduction_max: int = 216
    exp_group_max: int = 9
    exp_target_max: int = 8
    budget: float = 120.0


@dataclass(frozen=True)
class PairingBounds:
    a_max: int = 30
    budget: float = 30.0


@dataclass(frozen=True)
class QuotientBounds:
    max_order: int = 16
    max_target: int = 8
    exhaustive_cap: int = 512
    sample: int = 64
    seed: int = 0
    budget: float = 60.0


@dataclass(frozen=True)
class DualityBounds:
    max_order: int = 100
    budget: float = 30.0


@dataclass(frozen=True)
class UniversalBounds:
    max_order: int = 12
    max_target: int = 6
    budget: float = 30.0


_CHECKS: dict[str, Callable[..., VerificationReport]] = {
    "counts": oracle.verify_bil_hom_count,
    "nondeg": oracle.verify_nondeg_theorems,
    "pairings": oracle.verify_pairing_counts,
    "quotients": oracle.verify_quotients,
    "duality": oracle.verify_duality,
    "universal": oracle.verify_universal_property,
}


@dataclass(frozen=True)
class CheckConfig:
    counts: CountBounds = field(default_factory=CountBounds)
    nondeg: NondegBounds = field(default_factory=NondegBounds)
    pairings: PairingBounds = field(default_factory=PairingBounds)
    quotients: QuotientBounds = field(default_factory=QuotientBounds)
    duality: DualityBounds = field(default_factory=DualityBounds)
    universal: UniversalBounds = field(default_factory=UniversalBounds)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> CheckConfig:
        cfg = cls()
        for name, overrides in data.items():
            if name not in _CHECKS:
                raise KeyError(f"unknown check {name!r}; choose from {', '.join(_CHECKS)}")
            section = getattr(cfg, name)
            known = {f.name for f in fields(section)}
            bad = set(overrides) - known
            if bad:
                raise KeyError(f"unknown bounds for {name}: {', '.join(sorted(bad))}")
            coerced = {k: tuple(v) if isinstance(v, list) else v for k, v in overrides.items()}
            cfg = replace(cfg, **{name: replace(section, **coerced)})
        return cfg

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def names(self) -> list[str]:
        return list(_CHECKS)

    def run(self, name: str) -> VerificationReport:
        """Run one check with its bounds; ``budget`` is reported, not enforced."""
        bounds = asdict(getattr(self, name))
        budget = bounds.pop("budget")
        report = _CHECKS[name](**bounds)
        report.notes.append(f"budget {budget:g}s")
        return report

    def within_budget(self, name: str, report: VerificationReport) -> bool:
        return report.elapsed < getattr(self, name).budget
