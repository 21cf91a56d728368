"""Atom detection through Wiener averages.

For a probability measure ``ν``, ``(1/2T)∫_{-T}^{T} |ν̂(t)|² dt`` tends to the
sum of the squared atom masses as ``T → ∞``. A multiplication operator by ``x``
on ``L²(ν)`` has an eigenvalue exactly where ``ν`` has an atom, so a decaying
average is numerical evidence of empty point spectrum.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable

import numpy as np
import scipy.integrate
import structlog

from domaingauge.errors import RepresentationError

logger = structlog.get_logger(__name__)

CharacteristicFunction = Callable[[np.ndarray], np.ndarray]

MIN_SAMPLES = 100
# Nodes are evaluated in chunks of this size to bound memory.
_CHUNK = 1 << 18


def wiener_average(cf: CharacteristicFunction, horizon: float, samples: int) -> float:
    """``(1/2T)∫_{-T}^{T} |cf(t)|² dt`` by composite Simpson quadrature on ``samples`` nodes.

    Raises:
        RepresentationError: If ``horizon <= 0`` or ``samples < 100``
    """
    if horizon <= 0:
        raise RepresentationError(f"T must be positive, got {horizon}")
    if samples < MIN_SAMPLES:
        raise RepresentationError(f"At least {MIN_SAMPLES} quadrature nodes are needed, got {samples}")
    nodes = np.linspace(-horizon, horizon, samples)
    power = np.empty(samples)
    for start in range(0, samples, _CHUNK):
        chunk = nodes[start : start + _CHUNK]
        power[start : start + chunk.size] = np.abs(cf(chunk)) ** 2
    integral = scipy.integrate.simpson(power, x=nodes)
    average = float(integral) / (2 * horizon)
    logger.debug("Computed Wiener average", horizon=horizon, samples=samples, average=average)
    return average


def wiener_table(cf: CharacteristicFunction, horizons: Iterable[float], samples: int) -> list[dict[str, float]]:
    """One row ``{"T", "average"}`` per horizon."""
    return [{"T": float(h), "average": wiener_average(cf, h, samples)} for h in horizons]
