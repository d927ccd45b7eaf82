from galois_covers.config.logging import get_logger
from galois_covers.domain.coset import (
    DEFAULT_MAX_COSETS,
    CosetTable,
    conjugacy_classes,
    group_order,
    make_coset_table,
    standardize_table,
    todd_coxeter,
)
from galois_covers.domain.exceptions import InputError
from galois_covers.domain.lowindex import low_index_subgroups
from galois_covers.domain.presentation import (
    AbelianInvariants,
    Presentation,
    abelianization_invariants,
)
from galois_covers.ports.repositories.presentation_repo import (
    PresentationRepository,
)
from galois_covers.ports.repositories.subgroup_repo import (
    SubgroupRepository,
    SubgroupSpec,
)

logger = get_logger(__name__)


def table_from_spec(
    p: Presentation, spec: SubgroupSpec, max_cosets: int = DEFAULT_MAX_COSETS
) -> CosetTable:
    """
    A standardized table for a user-given subgroup: enumerated from its
    generators, or validated and standardized from explicit rows.
    """
    if spec.generators is not None:
        return todd_coxeter(p, spec.generators, max_cosets)
    if spec.rows is None:
        raise InputError("Subgroup has neither generators nor a table", field="subgroup")
    return standardize_table(make_coset_table(p, spec.rows))


class GroupService:
    """
    Application service for finitely presented groups.

    Use cases:
    - group order and abelianization
    - coset table of a given subgroup
    - all subgroups up to an index, optionally by conjugacy class
    """

    def __init__(
        self,
        presentations: PresentationRepository,
        subgroups: SubgroupRepository,
        max_cosets: int = DEFAULT_MAX_COSETS,
        workers: int = 1,
    ):
        self.presentations = presentations
        self.subgroups = subgroups
        self.max_cosets = max_cosets
        self.workers = workers

    def presentation(self, ref: str) -> Presentation:
        return self.presentations.load(ref)

    def order(self, ref: str) -> int:
        p = self.presentations.load(ref)
        logger.info(
            f"Enumerating group order: {p.generator_count} generators, "
            f"{len(p.relators)} relators, cap {self.max_cosets}"
        )
        return group_order(p, self.max_cosets)

    def abelianize(self, ref: str) -> AbelianInvariants:
        return abelianization_invariants(self.presentations.load(ref))

    def cosets(self, ref: str, subgroup_ref: str) -> CosetTable:
        p = self.presentations.load(ref)
        table = table_from_spec(p, self.subgroups.load(subgroup_ref, p), self.max_cosets)
        logger.info(f"Subgroup has index {table.coset_count}")
        return table

    def subgroups_up_to(self, ref: str, max_index: int) -> list[CosetTable]:
        p = self.presentations.load(ref)
        logger.info(f"Searching subgroups of index <= {max_index}")
        tables = low_index_subgroups(p, max_index, self.workers)
        logger.info(f"Found {len(tables)} subgroups")
        return tables

    def subgroup_classes(self, ref: str, max_index: int) -> list[list[CosetTable]]:
        return conjugacy_classes(self.subgroups_up_to(ref, max_index))
