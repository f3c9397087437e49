"""Search runs and size sweeps."""

import logging
from typing import Optional, Sequence

from ..search import SearchTrace, default_t_max, fit_line, run_search
from ..spectral import predicted_tf
from ..types import FitResult, SearchSummary
from ._base import BaseResource

log: logging.Logger = logging.getLogger(__name__)


def summarize(trace: SearchTrace) -> SearchSummary:
    """Summary of a trace with a detected ``t_f``."""
    t_f = trace.t_f
    if t_f is None:
        raise ValueError("cannot summarize a trace without t_f")
    return SearchSummary(
        n=trace.n,
        num_faces=trace.num_faces,
        marked=trace.marked,
        marked_face=list(trace.marked_face),
        t_max=trace.t_max,
        t_f=t_f,
        p_f=trace.p_f,
        p_f_target=trace.p_f_target,
        predicted_tf=predicted_tf(trace.n),
        loop_probabilities=trace.loop_probabilities,
    )


class Searches(BaseResource):
    """Marked-face searches on sphere triangulations."""

    def default_t_max(self, n: int) -> int:
        return default_t_max(n, self._client.t_max_factor)

    def run(
        self, n: int, marked: tuple[int, int] = (0, 1), t_max: Optional[int] = None
    ) -> tuple[SearchTrace, SearchSummary]:
        """Run one search.

        Raises:
            TimeLimitError: no peak within ``t_max``; the partial trace is attached.
        """
        trace = run_search(n, marked, t_max if t_max is not None else self.default_t_max(n))
        return trace, summarize(trace)

    def sweep(self, n_list: Sequence[int], marked: tuple[int, int] = (0, 1)) -> FitResult:
        """Search every ``n`` concurrently and fit ``t_f`` against ``n + 2``."""
        ns = sorted(n_list)
        results = list(self._client.executor.map(lambda n: self.run(n, marked)[1], ns))
        fit = fit_line([(summary.n + 2, summary.t_f) for summary in results])
        log.info("Sweep over %d sizes: slope %.6f", len(ns), fit.slope)
        return fit
