"""Nonlinear data transforms applied before digit analysis.

The central map is y = x * ln(x) (optionally x * log10(x); the two differ
by the constant factor ln 10). Unlike rescaling by a mean, this mixes
digits nonlinearly, which makes it a useful second lens on suspect data.
Inputs in (0, 1] map to non-positive values and are rejected with a
counted flag, since digit analysis presumes positive data.

Also provided: relative normalization x/<x>, its logarithm (whose
negative outputs are flagged for the same reason), and the classic
inequality index T = (1/M) * sum (x/<x>) ln(x/<x>). The index itself is
never fed to digit analysis; it is exposed for completeness.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from decimal import Decimal

from .errors import ConfigError, DomainError, EmptySeriesError, NonPositiveImageError
from .series import RegimeSpec, TimeSeries, partition as partition_series

_LN10 = math.log(10.0)


class TheilBase(enum.Enum):
    NATURAL = "natural"
    DECIMAL = "decimal"


class Scope(enum.Enum):
    WHOLE_RANGE = "whole"
    PER_REGIME = "regime"


class TransformName(enum.Enum):
    IDENTITY = "identity"
    THEIL = "theil"
    RELATIVE = "relative"
    LOG_RELATIVE = "log-relative"


@dataclass(frozen=True)
class TransformKind:
    """A transform selection: which map, which log base, which mean scope."""

    name: TransformName
    base: TheilBase = TheilBase.NATURAL
    scope: Scope = Scope.WHOLE_RANGE

    @classmethod
    def identity(cls) -> "TransformKind":
        return cls(TransformName.IDENTITY)

    @classmethod
    def theil(cls, base: TheilBase = TheilBase.NATURAL) -> "TransformKind":
        return cls(TransformName.THEIL, base=base)

    @classmethod
    def relative(cls, scope: Scope = Scope.WHOLE_RANGE) -> "TransformKind":
        return cls(TransformName.RELATIVE, scope=scope)

    @classmethod
    def log_relative(cls, scope: Scope = Scope.WHOLE_RANGE) -> "TransformKind":
        return cls(TransformName.LOG_RELATIVE, scope=scope)

    def variant_label(self) -> str:
        """Short name used in reports and output files."""
        if self.name is TransformName.IDENTITY:
            return "raw"
        if self.name is TransformName.THEIL:
            return f"theil-{self.base.value}"
        suffix = "" if self.scope is Scope.WHOLE_RANGE else "-regime"
        return self.name.value + suffix


@dataclass(frozen=True)
class TransformedPoint:
    year: int
    value: object  # Decimal for exact variants, float for computed ones
    positive: bool


@dataclass(frozen=True)
class ExcludedPoint:
    year: int
    original: Decimal
    reason: str


@dataclass(frozen=True)
class TransformedSeries:
    """Transform output: kept points, rejected points, and exactness.

    exact is True when values are untouched decimals (identity), so digit
    extraction can read them verbatim; computed values go through the
    12-digit real renderer instead.
    """

    label: str
    kind: TransformKind
    points: tuple[TransformedPoint, ...]
    excluded: tuple[ExcludedPoint, ...]
    exact: bool

    @property
    def nonpositive_count(self) -> int:
        return sum(1 for p in self.points if not p.positive)

    @property
    def excluded_for_analysis(self) -> int:
        """Points digit analysis must refuse: rejected plus non-positive."""
        return len(self.excluded) + self.nonpositive_count

    def analyzable(self) -> tuple[TransformedPoint, ...]:
        """The strictly positive output points, in year order."""
        return tuple(p for p in self.points if p.positive)


def theil_map(x: float, base: TheilBase = TheilBase.NATURAL) -> float:
    """x * ln(x), or x * log10(x) for the decimal base.

    Defined here only for x > 1: non-positive x is a domain error, and
    0 < x <= 1 maps to a non-positive image, which is rejected with a
    dedicated error so callers can count the exclusion. On the admitted
    domain the map is strictly increasing.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"x*ln(x) requires x > 0, got {x}")
    if x <= 1.0:
        raise NonPositiveImageError(x)
    y = x * math.log(x)
    return y / _LN10 if base is TheilBase.DECIMAL else y


def theil_index(series) -> float:
    """Inequality index (1/M) * sum (x/<x>) * ln(x/<x>).

    Nonnegative, zero only for constant data, invariant under rescaling.
    Accepts a TimeSeries or any sequence of positive numbers. Not a digit
    transform: its summands change sign, so it is reported as a scalar
    only and never fed to digit analysis.
    """
    values = _as_floats(series)
    if not values:
        raise EmptySeriesError("cannot compute an inequality index of an empty series")
    if any(not math.isfinite(v) or v <= 0.0 for v in values):
        raise DomainError("inequality index requires strictly positive values")
    if min(values) == max(values):
        return 0.0
    mean = math.fsum(values) / len(values)
    total = math.fsum((v / mean) * math.log(v / mean) for v in values)
    result = total / len(values)
    # Jensen guarantees >= 0; clamp the float-noise epsilon on near-equal data
    return 0.0 if -1e-12 < result < 0.0 else result


def relative(series: TimeSeries, scope: Scope = Scope.WHOLE_RANGE,
             regimes: RegimeSpec | None = None) -> TransformedSeries:
    """Divide each value by the arithmetic mean of its scope.

    Scope is the whole series or the point's own regime; each scope's
    output mean is 1 up to float rounding. Pure rescaling: digit-law
    conformity of the output is the same as the input's.
    """
    means = _scope_means(series, scope, regimes)
    points = tuple(
        TransformedPoint(year, float(value) / means[i], True)
        for i, (year, value) in enumerate(series.points)
    )
    return TransformedSeries(series.label, TransformKind.relative(scope), points, (), exact=False)


def log_relative(series: TimeSeries, scope: Scope = Scope.WHOLE_RANGE,
                 regimes: RegimeSpec | None = None) -> TransformedSeries:
    """ln(x/<x>) with sign flags.

    Values below (or at) the scope mean map to non-positive outputs; they
    are kept in the output but flagged, and excluded_for_analysis counts
    them so digit analysis can refuse them.
    """
    means = _scope_means(series, scope, regimes)
    points = []
    for i, (year, value) in enumerate(series.points):
        y = math.log(float(value) / means[i])
        points.append(TransformedPoint(year, y, y > 0.0))
    return TransformedSeries(series.label, TransformKind.log_relative(scope), tuple(points), (), exact=False)


def apply_transform(series: TimeSeries, kind: TransformKind,
                    regimes: RegimeSpec | None = None) -> TransformedSeries:
    """Apply any TransformKind to a series, collecting exclusions."""
    series.require_nonempty()
    if kind.name is TransformName.IDENTITY:
        points = tuple(TransformedPoint(year, value, True) for year, value in series.points)
        return TransformedSeries(series.label, kind, points, (), exact=True)
    if kind.name is TransformName.RELATIVE:
        return relative(series, kind.scope, regimes)
    if kind.name is TransformName.LOG_RELATIVE:
        return log_relative(series, kind.scope, regimes)
    points, excluded = [], []
    for year, value in series.points:
        try:
            points.append(TransformedPoint(year, theil_map(float(value), kind.base), True))
        except NonPositiveImageError:
            excluded.append(ExcludedPoint(year, value, "non-positive image"))
    return TransformedSeries(series.label, kind, tuple(points), tuple(excluded), exact=False)


def _as_floats(series) -> list[float]:
    values = series.values() if isinstance(series, TimeSeries) else series
    return [float(v) for v in values]


def _scope_means(series: TimeSeries, scope: Scope, regimes: RegimeSpec | None) -> list[float]:
    """Mean of each point's scope, aligned with series.points."""
    series.require_nonempty()
    floats = [float(v) for v in series.values()]
    if scope is Scope.WHOLE_RANGE:
        mean = math.fsum(floats) / len(floats)
        return [mean] * len(floats)
    if regimes is None:
        raise ConfigError("per-regime scope requires a regime specification")
    labels = partition_series(series, regimes).labels
    means: dict[str, float] = {}
    for name in regimes.names():
        group = [floats[i] for i, lab in enumerate(labels) if lab == name]
        if group:
            means[name] = math.fsum(group) / len(group)
    out = []
    for i, lab in enumerate(labels):
        if lab is None:
            raise ConfigError(
                f"year {series.points[i][0]} is outside every regime; "
                "per-regime scope needs full coverage"
            )
        out.append(means[lab])
    return out
