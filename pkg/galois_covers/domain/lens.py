"""
Symbolic lens spaces L(n; l1, ..., lk) and their connected coverings.

Lens spaces are handled through descriptors only. The connected covers of
L(n; l1..lk), k > 1, are the L(m; l1..lk mod m) for the divisors m of n, with
p = n / m sheets. The group-theoretic kernel of that classification, the
fiber product {(a, b) in Z x Z_m : a.l = b.p mod n} being the copy of Z
generated by (p, l), is checked by brute force.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from math import gcd

from sympy import divisors

from galois_covers.config.logging import get_logger
from galois_covers.domain.coset import DEFAULT_MAX_COSETS, CosetTable, todd_coxeter
from galois_covers.domain.exceptions import InputError, UnsupportedInputError
from galois_covers.domain.presentation import make_presentation
from galois_covers.domain.words import reduce_word

logger = get_logger(__name__)


@dataclass(frozen=True)
class LensSpaceDesc:
    """Domain value: L(n; params) with every parameter reduced mod n and prime to n."""

    n: int
    params: tuple[int, ...]

    @property
    def dimension_parameter(self) -> int:
        return len(self.params)

    def __str__(self) -> str:
        return f"L({self.n}; {', '.join(str(p) for p in self.params)})"


@dataclass(frozen=True)
class LensCoverRecord:
    """A connected cover L(m; ...) of a lens space, with p = n / m sheets."""

    m: int
    p: int
    cover: LensSpaceDesc
    sheets: int


def make_lens_space(n: int, params: list[int] | tuple[int, ...]) -> LensSpaceDesc:
    """
    Raises:
        InputError: n < 1, no parameters, or a parameter not prime to n.
    """
    if n < 1:
        raise InputError(f"Lens order must be positive, got {n}", field="n")
    if not params:
        raise InputError("Lens space needs at least one parameter", field="params")
    reduced = tuple(int(q) % n for q in params)
    for q in params:
        if gcd(q, n) != 1:
            raise InputError(f"Parameter {q} is not prime to {n}", field="params")
    return LensSpaceDesc(n, reduced)


def lens_pi1(lens: LensSpaceDesc) -> int:
    """Order of the cyclic fundamental group."""
    return lens.n


def _require_join_power(lens: LensSpaceDesc) -> None:
    if lens.dimension_parameter <= 1:
        raise UnsupportedInputError(
            f"{lens}: covers are classified for two or more parameters; "
            "use the circle complex for one",
            field="params",
        )


def _cover_record(lens: LensSpaceDesc, m: int) -> LensCoverRecord:
    if m < 1 or lens.n % m:
        raise InputError(f"{m} does not divide {lens.n}", field="m")
    cover = LensSpaceDesc(m, tuple(q % m for q in lens.params))
    p = lens.n // m
    return LensCoverRecord(m=m, p=p, cover=cover, sheets=p)


def classify_lens_covers(lens: LensSpaceDesc) -> list[LensCoverRecord]:
    """
    One record per divisor m of n, ascending. m = n is the identity cover and
    m = 1 the universal cover.

    Raises:
        UnsupportedInputError: a single parameter (k <= 1).
    """
    _require_join_power(lens)
    return [_cover_record(lens, m) for m in divisors(lens.n)]


def compose_lens_covers(
    lens: LensSpaceDesc, m_outer: int, m_inner: int
) -> LensCoverRecord:
    """
    The m_inner-cover of the m_outer-cover of ``lens``, as a cover of ``lens``.
    Equal to the direct m_inner-cover.

    Raises:
        InputError: m_inner does not divide m_outer, or m_outer does not divide n.
    """
    _require_join_power(lens)
    outer = _cover_record(lens, m_outer)
    inner = _cover_record(outer.cover, m_inner)
    return LensCoverRecord(
        m=inner.m,
        p=outer.p * inner.p,
        cover=inner.cover,
        sheets=outer.sheets * inner.sheets,
    )


def lens_cover_presentation(
    lens: LensSpaceDesc, m: int, max_cosets: int = DEFAULT_MAX_COSETS
) -> CosetTable:
    """
    The subgroup pZ_n of <a | a^n> that the m-cover corresponds to, enumerated
    by Todd-Coxeter; its coset count is the sheet count p.
    """
    record = _cover_record(lens, m)
    a = reduce_word([0], 1)
    group = make_presentation(("a",), [a.power(lens.n)])
    return todd_coxeter(group, [a.power(record.p)], max_cosets)


class CheckStatus(Enum):
    """Outcome of a brute-force verification."""

    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class LensPullbackReport:
    """
    Brute-force check that the solutions (a, b) of a.l = b.p (mod n) with
    |a| <= window are exactly the multiples x.(p, l mod m).

    ``witnesses`` maps each solution to its multiplier x (None if there is none).
    """

    n: int
    m: int
    param: int
    window: int
    generator: tuple[int, int]
    status: CheckStatus
    witnesses: tuple[tuple[int, int, int | None], ...]
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS


def _multiplier(a: int, b: int, gen: tuple[int, int], m: int) -> int | None:
    ga, gb = gen
    if ga == 0:
        if a != 0:
            return None
        return next((x for x in range(m) if (x * gb) % m == b), None)
    if a % ga:
        return None
    x = a // ga
    return x if (x * gb) % m == b else None


def verify_lens_pullback_group(
    n: int,
    m: int,
    param: int,
    window: int,
    generator: tuple[int, int] | None = None,
) -> LensPullbackReport:
    """
    Check, within |a| <= window, that the solution set of a.l = b.p (mod n),
    0 <= b < m, is the cyclic group generated by ``generator`` (default
    (p, l mod m)): every solution is a multiple, distinct multiples are
    distinct, and the set is closed under negation and adding the generator.

    Raises:
        InputError: m does not divide n, l is not prime to n, or window < 1.
    """
    if n < 1 or m < 1 or n % m:
        raise InputError(f"{m} does not divide {n}", field="m")
    if gcd(param, n) != 1:
        raise InputError(f"Parameter {param} is not prime to {n}", field="param")
    if window < 1:
        raise InputError("window must be positive", field="window")

    p = n // m
    gen = generator if generator is not None else (p, param % m)
    failures: list[str] = []

    solutions = [
        (a, b)
        for a in range(-window, window + 1)
        for b in range(m)
        if (a * param - b * p) % n == 0
    ]
    solution_set = set(solutions)
    if len(solutions) <= 1:
        return LensPullbackReport(
            n, m, param, window, gen, CheckStatus.INCONCLUSIVE,
            tuple((a, b, 0) for a, b in solutions), (),
        )

    witnesses = []
    for a, b in solutions:
        x = _multiplier(a, b, gen, m)
        witnesses.append((a, b, x))
        if x is None:
            failures.append(f"solution ({a}, {b}) is not a multiple of {gen}")

    ga, gb = gen
    span = window // abs(ga) if ga else m
    images: dict[tuple[int, int], int] = {}
    for x in range(-span, span + 1):
        pair = (x * ga, (x * gb) % m)
        if pair not in solution_set:
            failures.append(f"multiple {x} of {gen} is not a solution")
        elif pair in images:
            failures.append(f"multiples {images[pair]} and {x} collide at {pair}")
        else:
            images[pair] = x

    for a, b in solutions:
        if (-a, (-b) % m) not in solution_set:
            failures.append(f"solution ({a}, {b}) has no negative")
        shifted = (a + ga, (b + gb) % m)
        if abs(shifted[0]) <= window and shifted not in solution_set:
            failures.append(f"solution ({a}, {b}) plus {gen} is not a solution")

    status = CheckStatus.FAIL if failures else CheckStatus.PASS
    return LensPullbackReport(
        n, m, param, window, gen, status, tuple(witnesses), tuple(failures)
    )


def _sweep_case(case: tuple[int, int, int]) -> LensPullbackReport:
    n, m, param = case
    return verify_lens_pullback_group(n, m, param, 10 * n)


def lens_pullback_sweep(max_n: int, workers: int = 1) -> list[LensPullbackReport]:
    """Every (n <= max_n, m | n, l prime to n) with window 10n, in that order."""
    cases = [
        (n, m, param)
        for n in range(1, max_n + 1)
        for m in divisors(n)
        for param in range(1, n + 1)
        if gcd(param, n) == 1
    ]
    logger.info(f"Sweeping {len(cases)} lens pullback cases")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_sweep_case, cases, chunksize=32))
    return [_sweep_case(case) for case in cases]
