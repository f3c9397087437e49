"""The simulator entry object."""

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from functools import cached_property
from types import TracebackType
from typing import Optional, TypeVar

from ._core.exceptions import ConfigurationError
from .resources import Complexes, Searches, Spectra, Verifications
from .search import DEFAULT_T_MAX_FACTOR
from .utils import get_env_float, get_env_int, validate_positive_number

N = TypeVar("N", int, float)

log: logging.Logger = logging.getLogger(__name__)

DEFAULT_DENSE_LIMIT = 10


def _default_workers() -> int:
    return min(8, os.cpu_count() or 1)


def _from_env(name: str, value: Optional[N]) -> Optional[N]:
    if value is not None and value <= 0:
        raise ConfigurationError(
            f"The {name} environment variable must be positive, got {value!r}",
            setting=name,
            value=str(value),
        )
    return value


class Simulator:
    """Simplicial quantum walk simulator."""

    workers: int
    t_max_factor: float
    dense_limit: int

    def __init__(
        self,
        *,
        workers: Optional[int] = None,
        t_max_factor: Optional[float] = None,
        dense_limit: Optional[int] = None,
        executor: Optional[ThreadPoolExecutor] = None,
    ) -> None:
        """Initialize the simulator.

        Args:
            workers: Sweep thread-pool size. Defaults to SQWALK_WORKERS env var or
                ``min(8, cpu_count)``.
            t_max_factor: Default ``t_max`` as a multiple of the predicted ``t_f``.
                Defaults to SQWALK_T_MAX_FACTOR env var or 2.0.
            dense_limit: Largest ``n`` for dense spectral-map checks. Defaults to
                SQWALK_DENSE_LIMIT env var or 10.
            executor: Custom executor for sweeps.
        """
        if workers is None:
            workers = _from_env("SQWALK_WORKERS", get_env_int("SQWALK_WORKERS"))
        if workers is None:
            workers = _default_workers()
        validate_positive_number("workers", workers)
        self.workers = int(workers)

        if t_max_factor is None:
            t_max_factor = _from_env("SQWALK_T_MAX_FACTOR", get_env_float("SQWALK_T_MAX_FACTOR"))
        if t_max_factor is None:
            t_max_factor = DEFAULT_T_MAX_FACTOR
        validate_positive_number("t_max_factor", t_max_factor)
        self.t_max_factor = float(t_max_factor)

        if dense_limit is None:
            dense_limit = _from_env("SQWALK_DENSE_LIMIT", get_env_int("SQWALK_DENSE_LIMIT"))
        if dense_limit is None:
            dense_limit = DEFAULT_DENSE_LIMIT
        validate_positive_number("dense_limit", dense_limit)
        self.dense_limit = int(dense_limit)

        self._executor = executor
        self._own_executor = executor is None

    @property
    def executor(self) -> ThreadPoolExecutor:
        if self._executor is None:
            self._executor = ThreadPoolExecutor(
                max_workers=self.workers, thread_name_prefix="sqwalk"
            )
            log.debug("Started sweep pool with %d workers", self.workers)
        return self._executor

    def close(self) -> None:
        """Shut down the sweep pool if we own it."""
        if self._own_executor and self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    def __enter__(self) -> "Simulator":
        return self

    def __exit__(
        self,
        exc_type: Optional[type[BaseException]],
        exc_val: Optional[BaseException],
        exc_tb: Optional[TracebackType],
    ) -> None:
        self.close()

    @cached_property
    def complexes(self) -> Complexes:
        return Complexes(self)

    @cached_property
    def searches(self) -> Searches:
        return Searches(self)

    @cached_property
    def spectra(self) -> Spectra:
        return Spectra(self)

    @cached_property
    def verifications(self) -> Verifications:
        return Verifications(self)
