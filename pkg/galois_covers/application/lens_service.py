from galois_covers.config.logging import get_logger
from galois_covers.domain.lens import (
    LensCoverRecord,
    LensPullbackReport,
    classify_lens_covers,
    compose_lens_covers,
    lens_pullback_sweep,
    make_lens_space,
    verify_lens_pullback_group,
)

logger = get_logger(__name__)


class LensService:
    """Application service for the symbolic lens-space classification."""

    def __init__(self, workers: int = 1):
        self.workers = workers

    def classify(self, n: int, params: list[int]) -> list[LensCoverRecord]:
        lens = make_lens_space(n, params)
        records = classify_lens_covers(lens)
        logger.info(f"{lens} has {len(records)} connected covers")
        return records

    def compose(
        self, n: int, params: list[int], m_outer: int, m_inner: int
    ) -> LensCoverRecord:
        return compose_lens_covers(make_lens_space(n, params), m_outer, m_inner)

    def verify(self, n: int, m: int, param: int, window: int) -> LensPullbackReport:
        report = verify_lens_pullback_group(n, m, param, window)
        logger.info(
            f"Pullback check n={n} m={m} l={param}: {report.status.value}, "
            f"{len(report.witnesses)} solutions"
        )
        return report

    def sweep(self, max_n: int) -> list[LensPullbackReport]:
        return lens_pullback_sweep(max_n, self.workers)
