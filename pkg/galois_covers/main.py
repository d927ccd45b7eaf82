"""
Main entry point.

This is where everything is wired together following hexagonal architecture:
1. Infrastructure layer (adapters) - text-file repositories and the catalog
2. Application layer (services) - use case orchestration
3. CLI layer (adapter) - argument parsing and result formatting

The dependency flow:
- The CLI adapter depends on application services
- Application services depend on ports (interfaces)
- Text-file adapters implement ports
- The domain layer has no dependencies on outer layers
"""

import sys

from pydantic import ValidationError

from galois_covers.adapters.cli.executor import Services, execute_plan
from galois_covers.adapters.cli.exit_codes import EXIT_INPUT_ERROR
from galois_covers.adapters.cli.plan import CommandPlan, UsageError, parse_cli
from galois_covers.adapters.textfile.repositories import (
    TextFileComplexRepository,
    TextFilePresentationRepository,
    TextFileProjectionRepository,
    TextFileSubgroupRepository,
)
from galois_covers.adapters.textfile.stream_writer import StreamArtifactWriter
from galois_covers.application.cover_service import CoverService
from galois_covers.application.group_service import GroupService
from galois_covers.application.lens_service import LensService
from galois_covers.config.logging import get_logger, setup_logging
from galois_covers.config.settings import Settings, get_settings

logger = get_logger(__name__)


def build_services(plan: CommandPlan, settings: Settings) -> Services:
    """CLI options override settings."""
    max_cosets = plan.max_cosets if plan.max_cosets is not None else settings.max_cosets
    workers = plan.workers if plan.workers is not None else settings.workers

    # 1. Outbound adapters
    complexes = TextFileComplexRepository()
    presentations = TextFilePresentationRepository(settings.max_word_length)
    subgroups = TextFileSubgroupRepository(settings.max_word_length)
    projections = TextFileProjectionRepository()

    # 2. Application services, depending on ports only
    return Services(
        group=GroupService(presentations, subgroups, max_cosets, workers),
        cover=CoverService(complexes, subgroups, projections, max_cosets, workers),
        lens=LensService(workers),
    )


def main(argv: list[str] | None = None) -> int:
    args = sys.argv[1:] if argv is None else argv
    quiet = "--quiet" in args
    try:
        settings = get_settings()
    except ValidationError as e:
        setup_logging(quiet=quiet)
        logger.error(f"Invalid COVER_* environment: {e}")
        return EXIT_INPUT_ERROR
    setup_logging(settings.log_level.upper(), quiet=quiet)

    try:
        plan = parse_cli(args)
    except UsageError as e:
        logger.error(f"usage: {e}")
        return EXIT_INPUT_ERROR

    # 3. Inbound adapter
    services = build_services(plan, settings)
    return execute_plan(plan, services, StreamArtifactWriter())


if __name__ == "__main__":
    sys.exit(main())
