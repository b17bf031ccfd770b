"""Closed-form extremal bounds on the multiplicative Zagreb indices.

Every bound is an exact int. Regimes are chosen by integer comparisons of
``3 * gamma`` against ``n`` and ``n + 3``:

* ``GAMMA_LE_N3``   ``3g <= n``
* ``GAMMA_CEIL_N3`` ``n < 3g < n + 3`` (that is, ``g == ceil(n/3)`` with 3 not dividing n)
* ``GAMMA_MID``     ``n + 3 <= 3g`` and ``2g <= n``

The lower bound on pi2 for ``3g <= n`` is printed with exponent
``q * (n - g - g*q)`` on its ``(q + 1)`` factor; the degree classes of the
extremal family give ``(q + 1) * (n - g - g*q)`` instead. Both are available
and :func:`adjudicate_pi2_lower_exponent` decides between them by direct
computation on the family members.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import groupby
from math import lcm
from typing import Iterable, Literal

from .errors import DomainError, InfeasibleGamma

PI1_LOWER = "PI1_LOWER"
PI2_UPPER = "PI2_UPPER"
PI1_UPPER = "PI1_UPPER"
PI2_LOWER = "PI2_LOWER"

GENERAL = "GENERAL"
GAMMA_LE_N3 = "GAMMA_LE_N3"
GAMMA_CEIL_N3 = "GAMMA_CEIL_N3"
GAMMA_MID = "GAMMA_MID"

ExponentVariant = Literal["printed", "consistent"]
EXPONENT_VARIANTS: tuple[ExponentVariant, ...] = ("printed", "consistent")


@dataclass(frozen=True)
class BoundValue:
    value: int
    theorem_tag: str
    regime: str

    def __post_init__(self) -> None:
        assert self.value >= 1

    def to_dict(self) -> dict[str, str]:
        d = asdict(self)
        d["value"] = str(self.value)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _check(n: int, gamma: int) -> None:
    if n < 2 or not (1 <= gamma <= n // 2):
        raise InfeasibleGamma(f"gamma={gamma} is infeasible for n={n} (need n >= 2, 1 <= gamma <= n/2)")


def regime(n: int, gamma: int) -> str:
    _check(n, gamma)
    if 3 * gamma <= n:
        return GAMMA_LE_N3
    if 3 * gamma < n + 3:
        return GAMMA_CEIL_N3
    return GAMMA_MID


def pi1_lower(n: int, gamma: int) -> BoundValue:
    _check(n, gamma)
    return BoundValue(4 ** (gamma - 1) * (n - gamma) ** 2, PI1_LOWER, GENERAL)


def pi2_upper(n: int, gamma: int) -> BoundValue:
    _check(n, gamma)
    return BoundValue(4 ** (gamma - 1) * (n - gamma) ** (n - gamma), PI2_UPPER, GENERAL)


def pi1_upper(n: int, gamma: int) -> BoundValue:
    reg = regime(n, gamma)
    if reg == GAMMA_LE_N3:
        q = (n - gamma) // gamma
        low = 2 * gamma - n + gamma * q
        high = n - gamma - gamma * q
        value = 4 ** (2 * gamma - 2) * q ** (2 * low) * (q + 1) ** (2 * high)
    elif reg == GAMMA_CEIL_N3:
        value = 4 ** (n - 2)
    else:
        value = 4 ** (3 * n - 6 * gamma + 2) * 9 ** (3 * gamma - n - 2)
    return BoundValue(value, PI1_UPPER, reg)


def pi2_lower(n: int, gamma: int, exponent: ExponentVariant = "consistent") -> BoundValue:
    if exponent not in EXPONENT_VARIANTS:
        raise ValueError(f"exponent must be one of {EXPONENT_VARIANTS}, got {exponent!r}")
    reg = regime(n, gamma)
    if reg == GAMMA_LE_N3:
        q = (n - gamma) // gamma
        low = 2 * gamma - n + gamma * q
        high = n - gamma - gamma * q
        top = q + 1 if exponent == "consistent" else q
        value = 4 ** (2 * gamma - 2) * q ** (q * low) * (q + 1) ** (top * high)
    elif reg == GAMMA_CEIL_N3:
        value = 4 ** (n - 2)
    else:
        value = 4 ** (3 * n - 6 * gamma + 2) * 27 ** (3 * gamma - n - 2)
    return BoundValue(value, PI2_LOWER, reg)


def all_bounds(n: int, gamma: int, exponent: ExponentVariant = "consistent") -> dict[str, BoundValue]:
    return {
        PI1_LOWER: pi1_lower(n, gamma),
        PI2_UPPER: pi2_upper(n, gamma),
        PI1_UPPER: pi1_upper(n, gamma),
        PI2_LOWER: pi2_lower(n, gamma, exponent),
    }


@dataclass(frozen=True)
class ExponentAdjudication:
    """Which exponent reading reproduces pi2 of every D-family member."""

    n_max: int
    consistent_cells: dict[ExponentVariant, list[tuple[int, int]]]
    inconsistent_cells: dict[ExponentVariant, list[tuple[int, int]]]

    @property
    def matching(self) -> list[ExponentVariant]:
        return [v for v in EXPONENT_VARIANTS if not self.inconsistent_cells[v]]

    @property
    def selected(self) -> ExponentVariant:
        if len(self.matching) != 1:
            raise AssertionError(f"expected exactly one matching exponent variant, got {self.matching}")
        return self.matching[0]


def adjudicate_pi2_lower_exponent(n_max: int, n_min: int = 3) -> ExponentAdjudication:
    """Compare both exponent readings with pi2 computed on actual D members."""
    from .families import build_D_members
    from .indices import pi2

    good: dict[ExponentVariant, list[tuple[int, int]]] = {v: [] for v in EXPONENT_VARIANTS}
    bad: dict[ExponentVariant, list[tuple[int, int]]] = {v: [] for v in EXPONENT_VARIANTS}
    for n in range(max(3, n_min), n_max + 1):
        for gamma in range(1, n // 3 + 1):
            values = {pi2(t) for t in build_D_members(n, gamma)}
            for variant in EXPONENT_VARIANTS:
                bound = pi2_lower(n, gamma, variant).value
                (good if values == {bound} else bad)[variant].append((n, gamma))
    return ExponentAdjudication(n_max, good, bad)


# -- monotonicity of the two auxiliary ratio functions ----------------------


def _rational(x: object) -> Fraction:
    try:
        value = Fraction(x)  # type: ignore[arg-type]
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{x!r} is not a rational number") from exc
    if value <= 0:
        raise DomainError(f"inputs must be positive, got {x!r}")
    return value


def ratio_less(x1: Fraction, x2: Fraction, m: Fraction) -> bool:
    """``x1/(x1+m) < x2/(x2+m)`` by cross-multiplication."""
    return x1 * (x2 + m) < x2 * (x1 + m)


def power_ratio_greater(x1: Fraction, x2: Fraction, m: Fraction) -> bool:
    """``x1**x1 / (x1+m)**(x1+m) > x2**x2 / (x2+m)**(x2+m)``, exactly.

    Cross-multiplied to ``x1**x1 * (x2+m)**(x2+m) > x2**x2 * (x1+m)**(x1+m)``;
    both sides are raised to the common denominator of the exponents so
    that every power has an integer exponent.
    """
    exps = (x1, x2, x1 + m, x2 + m)
    scale = lcm(*(e.denominator for e in exps))

    def pw(base: Fraction, e: Fraction) -> Fraction:
        return base ** int(e * scale)

    left = pw(x1, x1) * pw(x2 + m, x2 + m)
    right = pw(x2, x2) * pw(x1 + m, x1 + m)
    return left > right


def check_monotonicity_props(samples: Iterable[tuple[object, object]]) -> bool:
    """Check that ``x/(x+m)`` increases and ``x^x/(x+m)^(x+m)`` decreases in x.

    Samples are grouped by ``m``; within a group, each pair of consecutive
    distinct ``x`` values is compared in exact arithmetic.
    """
    points = sorted({(_rational(m), _rational(x)) for x, m in samples})
    for m, group in groupby(points, key=lambda pt: pt[0]):
        xs = [x for _, x in group]
        for x1, x2 in zip(xs, xs[1:]):
            if not ratio_less(x1, x2, m) or not power_ratio_greater(x1, x2, m):
                return False
    return True
