"""Exception types shared across the package."""


class InputError(ValueError):
    """Caller-supplied data violates a documented precondition."""


class SamplingError(RuntimeError):
    """Task sampling exhausted its resample budget."""


class FitError(RuntimeError):
    """Model fitting failed (e.g. factorization failure at max jitter)."""


class SolverError(RuntimeError):
    """Trajectory optimizer hit non-finite values; carries a diagnostic."""


class MetricError(RuntimeError):
    """Goal selection could not produce any candidate (e.g. all IK seeds
    failed); callers may fall back to a direct Cartesian solve."""


class ConfigError(RuntimeError):
    """Benchmark/CLI configuration is invalid."""
