"""Python access to the rwlab core: branch functions and experiment runs."""

from ._rwlab import (
    ConfigError,
    __version__,
    branch_coefficients,
    default_threads,
    dimension_constants,
    experiments,
    k_at,
    run as _run,
)


def run(experiment, config, overrides=None, threads=None, out=None):
    """Run one experiment. overrides may be a dict or a list of "key=value" strings."""
    if overrides is None:
        overrides = []
    elif isinstance(overrides, dict):
        overrides = [f"{k}={v}" for k, v in overrides.items()]
    if threads is None:
        threads = default_threads()
    return _run(experiment, str(config), list(overrides), int(threads), "" if out is None else str(out))


__all__ = [
    "ConfigError",
    "__version__",
    "branch_coefficients",
    "default_threads",
    "dimension_constants",
    "experiments",
    "k_at",
    "run",
]
