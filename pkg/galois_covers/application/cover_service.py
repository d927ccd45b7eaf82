from galois_covers.application.group_service import table_from_spec
from galois_covers.config.logging import get_logger
from galois_covers.domain.complex import (
    FundamentalGroupData,
    TwoComplex,
    basepoint_component,
    fundamental_group_presentation,
)
from galois_covers.domain.coset import DEFAULT_MAX_COSETS, CosetTable
from galois_covers.domain.cover import (
    CoveringMap,
    RoundTripReport,
    build_cover,
    deck_group_order,
    galois_roundtrip_check,
    subgroup_of_projection,
    universal_cover,
)
from galois_covers.ports.repositories.complex_repo import ComplexRepository
from galois_covers.ports.repositories.projection_repo import ProjectionRepository
from galois_covers.ports.repositories.subgroup_repo import SubgroupRepository

logger = get_logger(__name__)


class CoverService:
    """
    Application service for complexes and their coverings.

    Subgroups are read over the fundamental group presentation of the complex,
    so subgroup files use its generator letters (one per non-tree edge).
    """

    def __init__(
        self,
        complexes: ComplexRepository,
        subgroups: SubgroupRepository,
        projections: ProjectionRepository,
        max_cosets: int = DEFAULT_MAX_COSETS,
        workers: int = 1,
    ):
        self.complexes = complexes
        self.subgroups = subgroups
        self.projections = projections
        self.max_cosets = max_cosets
        self.workers = workers

    def complex(self, ref: str) -> TwoComplex:
        return self.complexes.load(ref)

    def fundamental_group(self, ref: str) -> FundamentalGroupData:
        x = self.complexes.load(ref)
        group = fundamental_group_presentation(x)
        logger.info(
            f"pi1 of {x.name or ref}: {group.presentation.generator_count} generators, "
            f"{len(group.presentation.relators)} relators"
        )
        return group

    def component(self, ref: str) -> TwoComplex:
        return basepoint_component(self.complexes.load(ref))

    def cover(self, ref: str, subgroup_ref: str) -> CoveringMap:
        x = self.complexes.load(ref)
        p = fundamental_group_presentation(x).presentation
        table = table_from_spec(p, self.subgroups.load(subgroup_ref, p), self.max_cosets)
        logger.info(f"Building {table.coset_count}-sheeted cover of {x.name or ref}")
        return build_cover(x, table)

    def universal(self, ref: str) -> CoveringMap:
        x = self.complexes.load(ref)
        logger.info(f"Building universal cover of {x.name or ref}")
        return universal_cover(x, self.max_cosets)

    def subgroup_of_files(
        self, base_ref: str, total_ref: str, projection_ref: str
    ) -> CosetTable:
        """The subgroup of pi1(base) that a cover written to files corresponds to."""
        base = self.complexes.load(base_ref)
        total = self.complexes.load(total_ref)
        projection = self.projections.load(projection_ref)
        table = subgroup_of_projection(base, total, projection, self.max_cosets)
        logger.info(
            f"{total.name or total_ref} covers {base.name or base_ref} "
            f"with {table.coset_count} sheets"
        )
        return table

    def deck_order(self, ref: str, subgroup_ref: str | None = None) -> int:
        cover = self.universal(ref) if subgroup_ref is None else self.cover(ref, subgroup_ref)
        return deck_group_order(cover)

    def verify_galois(self, ref: str, max_index: int) -> RoundTripReport:
        x = self.complexes.load(ref)
        report = galois_roundtrip_check(x, max_index, self.max_cosets, self.workers)
        failed = len(report.failures())
        if failed:
            logger.warning(f"{failed} of {len(report.results)} round trips failed")
        return report
