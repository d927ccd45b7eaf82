"""
Inbound adapter: dispatches a CommandPlan to the application services and
formats results.

Results go through the ArtifactWriter (standard output or files);
diagnostics go to the log. Output is deterministic: it never depends on the
worker count.
"""

from collections.abc import Callable
from dataclasses import dataclass

from pydantic import ValidationError

from galois_covers.adapters.cli.exit_codes import EXIT_OK, exit_code_for
from galois_covers.adapters.cli.plan import CommandPlan
from galois_covers.adapters.textfile.complex_format import serialize_complex
from galois_covers.adapters.textfile.presentation_format import (
    serialize_presentation,
)
from galois_covers.adapters.textfile.projection_format import serialize_projection
from galois_covers.adapters.textfile.subgroup_format import (
    serialize_generators,
    serialize_table,
)
from galois_covers.application.cover_service import CoverService
from galois_covers.application.group_service import GroupService
from galois_covers.application.lens_service import LensService
from galois_covers.config.logging import get_logger
from galois_covers.domain.catalog import Catalog, CatalogKind
from galois_covers.domain.coset import CosetTable, is_normal, subgroup_words
from galois_covers.domain.cover import CoveringMap
from galois_covers.domain.exceptions import (
    CoveringEngineError,
    ResourceNotFoundError,
    VerificationFailedError,
)
from galois_covers.domain.presentation import AbelianInvariants
from galois_covers.ports.writers.artifact_writer import ArtifactWriter

logger = get_logger(__name__)


@dataclass
class Services:
    group: GroupService
    cover: CoverService
    lens: LensService


Handler = Callable[[CommandPlan, Services, ArtifactWriter], None]


def _deliver(plan: CommandPlan, writer: ArtifactWriter, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if plan.output:
        writer.write(plan.output, text)
    else:
        writer.emit(text)


def format_invariants(invariants: AbelianInvariants) -> str:
    if invariants.is_trivial():
        return "trivial\n"
    factors = ",".join(str(f) for f in invariants.invariant_factors) or "none"
    return f"factors: {factors}\nfree_rank: {invariants.free_rank}\n"


def _deliver_cover(plan: CommandPlan, writer: ArtifactWriter, cover: CoveringMap) -> None:
    complex_text = serialize_complex(cover.total)
    projection_text = serialize_projection(cover.projection)
    if plan.output:
        writer.write(f"{plan.output}.complex", complex_text)
        writer.write(f"{plan.output}.projection", projection_text)
        writer.emit(f"sheets {cover.sheets}")
    else:
        writer.emit(complex_text + "\n" + projection_text)


def _pi1(plan: CommandPlan, services: Services, writer: ArtifactWriter) -> None:
    p = services.cover.fundamental_group(plan.inputs[0]).presentation
    # zero generators have no text form
    _deliver(plan, writer, serialize_presentation(p) if p.generator_count else "trivial")


def _order(plan: CommandPlan, services: Services, writer: ArtifactWriter) -> None:
    _deliver(plan, writer, str(services.group.order(plan.inputs[0])))


def _abelianize(plan: CommandPlan, services: Services, writer: ArtifactWriter) -> None:
    _deliver(plan, writer, format_invariants(services.group.abelianize(plan.inputs[0])))


def _format_subgroup(plan: CommandPlan, table: CosetTable) -> str:
    if plan.generators:
        return serialize_generators(subgroup_words(table), table.presentation)
    return serialize_table(table)


def _cosets(plan: CommandPlan, services: Services, writer: ArtifactWriter) -> None:
    table = services.group.cosets(plan.inputs[0], plan.inputs[1])
    _deliver(plan, writer, _format_subgroup(plan, table))


def _subgroups(plan: CommandPlan, services: Services, writer: ArtifactWriter) -> None:
    assert plan.max_index is not None
    ref = plan.inputs[0]
    if plan.conjugacy:
        classes = services.group.subgroup_classes(ref, plan.max_index)
        blocks = [f"classes {len(classes)}\n"]
        for i, members in enumerate(classes):
            normal = "yes" if is_normal(members[0]) else "no"
            blocks.append(f"class {i} size {len(members)} normal {normal}\n")
            blocks.extend(serialize_table(t) for t in members)
    else:
        tables = services.group.subgroups_up_to(ref, plan.max_index)
        blocks = [f"subgroups {len(tables)}\n"]
        blocks.extend(serialize_table(t) for t in tables)
    _deliver(plan, writer, "".join(blocks))


def _cover(plan: CommandPlan, services: Services, writer: ArtifactWriter) -> None:
    _deliver_cover(plan, writer, services.cover.cover(plan.inputs[0], plan.inputs[1]))


def _universal(plan: CommandPlan, services: Services, writer: ArtifactWriter) -> None:
    _deliver_cover(plan, writer, services.cover.universal(plan.inputs[0]))


def _cover_subgroup(plan: CommandPlan, services: Services, writer: ArtifactWriter) -> None:
    base, total, projection = plan.inputs
    table = services.cover.subgroup_of_files(base, total, projection)
    _deliver(plan, writer, _format_subgroup(plan, table))


def _deck(plan: CommandPlan, services: Services, writer: ArtifactWriter) -> None:
    subgroup = plan.inputs[1] if len(plan.inputs) > 1 else None
    _deliver(plan, writer, str(services.cover.deck_order(plan.inputs[0], subgroup)))


def _component(plan: CommandPlan, services: Services, writer: ArtifactWriter) -> None:
    _deliver(plan, writer, serialize_complex(services.cover.component(plan.inputs[0])))


def _verify_galois(plan: CommandPlan, services: Services, writer: ArtifactWriter) -> None:
    assert plan.max_index is not None
    report = services.cover.verify_galois(plan.inputs[0], plan.max_index)
    if report.passed:
        writer.emit(f"all {len(report.results)} round trips passed")
        return
    lines = [
        f"subgroup {r.position} (index {r.index}): "
        f"subgroup->cover {'ok' if r.subgroup_to_cover_ok else 'FAILED'}, "
        f"cover->action {'ok' if r.cover_to_action_ok else 'FAILED'}"
        + "".join(f"; {v}" for v in r.violations)
        for r in report.failures()
    ]
    writer.emit("\n".join(lines))
    raise VerificationFailedError(
        f"{len(lines)} of {len(report.results)} round trips failed", lines
    )


def _lens_classify(plan: CommandPlan, services: Services, writer: ArtifactWriter) -> None:
    assert plan.n is not None
    records = services.lens.classify(plan.n, plan.params)
    _deliver(plan, writer, "".join(f"{r.m} {r.sheets} {r.cover}\n" for r in records))


def _lens_compose(plan: CommandPlan, services: Services, writer: ArtifactWriter) -> None:
    assert plan.n is not None and plan.outer is not None and plan.inner is not None
    r = services.lens.compose(plan.n, plan.params, plan.outer, plan.inner)
    _deliver(plan, writer, f"{r.m} {r.sheets} {r.cover}")


def _lens_verify(plan: CommandPlan, services: Services, writer: ArtifactWriter) -> None:
    if plan.sweep is not None:
        reports = services.lens.sweep(plan.sweep)
    else:
        assert plan.n is not None and plan.m is not None and plan.param is not None
        window = plan.window if plan.window is not None else 10 * plan.n
        reports = [services.lens.verify(plan.n, plan.m, plan.param, window)]

    lines = [
        f"{r.status.value} n={r.n} m={r.m} l={r.param} window={r.window} "
        f"solutions={len(r.witnesses)}"
        for r in reports
    ]
    failures = [f for r in reports for f in r.failures]
    if plan.sweep is not None and not failures:
        lines = [f"all {len(reports)} cases passed"]
    elif plan.sweep is None:
        lines.extend(
            f"a={a} b={b} x={'none' if x is None else x}"
            for a, b, x in reports[0].witnesses
        )
    _deliver(plan, writer, "\n".join(lines + failures) + "\n")
    if failures:
        raise VerificationFailedError(f"{len(failures)} lens pullback checks failed", failures)


def _catalog(plan: CommandPlan, services: Services, writer: ArtifactWriter) -> None:
    lines = [
        f"@{entry.name}{'<n>' if entry.parametric else ''} "
        f"{entry.kind.value} {entry.description}"
        for entry in Catalog.get_all()
    ]
    _deliver(plan, writer, "\n".join(lines) + "\n")


def _serialize(plan: CommandPlan, services: Services, writer: ArtifactWriter) -> None:
    ref = plan.inputs[0]
    as_presentation = ref.lstrip().startswith("<")
    if ref.startswith("@"):
        if not Catalog.exists(ref[1:]):
            raise ResourceNotFoundError("catalog entry", ref[1:])
        found = Catalog.get_by_name(ref[1:])
        as_presentation = found is not None and found[0].kind is CatalogKind.PRESENTATION
    if as_presentation:
        text = serialize_presentation(services.group.presentation(ref)) + "\n"
    else:
        text = serialize_complex(services.cover.complex(ref))
    _deliver(plan, writer, text)


HANDLERS: dict[str, Handler] = {
    "pi1": _pi1,
    "order": _order,
    "cosets": _cosets,
    "subgroups": _subgroups,
    "cover": _cover,
    "universal": _universal,
    "deck": _deck,
    "lens-classify": _lens_classify,
    "lens-compose": _lens_compose,
    "lens-verify": _lens_verify,
    "verify-galois": _verify_galois,
    "cover-subgroup": _cover_subgroup,
    "abelianize": _abelianize,
    "component": _component,
    "catalog": _catalog,
    "serialize": _serialize,
}


def execute_plan(plan: CommandPlan, services: Services, writer: ArtifactWriter) -> int:
    """Run one command; the exit code follows the exception family raised."""
    try:
        HANDLERS[plan.command](plan, services, writer)
    except (CoveringEngineError, ValidationError) as exc:
        code = exit_code_for(exc)
        if code is None:
            raise
        logger.error(f"{type(exc).__name__}: {exc}")
        return code
    return EXIT_OK
