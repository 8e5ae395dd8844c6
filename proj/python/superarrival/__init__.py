"""Reflection-time experiments with a suddenly removed potential barrier."""

from ._superarrival import (
    Config,
    SuperarrivalError,
    analyze,
    asymptote,
    classical_series,
    default_config,
    derived_quantities,
    evolve,
    free_gaussian_moments,
    load_config,
    parse_config,
    plane_wave_reflection,
    plane_wave_transmission,
    reflection_integral,
)

__all__ = [
    "Config",
    "SuperarrivalError",
    "analyze",
    "asymptote",
    "classical_series",
    "default_config",
    "derived_quantities",
    "evolve",
    "free_gaussian_moments",
    "load_config",
    "parse_config",
    "plane_wave_reflection",
    "plane_wave_transmission",
    "reflection_integral",
]
