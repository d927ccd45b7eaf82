"""Smith normal form of integer matrices over exact Python ints."""

from dataclasses import dataclass

Matrix = list[list[int]]


@dataclass(frozen=True)
class SmithForm:
    """
    D = U * M * V with U, V unimodular and D diagonal, each nonzero diagonal
    entry dividing the next.
    """

    diagonal: tuple[int, ...]
    D: tuple[tuple[int, ...], ...]
    U: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _freeze(m: Matrix) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in m)


def _find_pivot(d: Matrix, t: int) -> tuple[int, int] | None:
    """Smallest nonzero |entry| in the lower-right block, ties row-major."""
    best: tuple[int, int] | None = None
    best_value = 0
    for i in range(t, len(d)):
        row = d[i]
        for j in range(t, len(row)):
            value = abs(row[j])
            if value and (best is None or value < best_value):
                best, best_value = (i, j), value
    return best


class _Reducer:
    """Row/column operations applied to D while recording U and V."""

    def __init__(self, m: Matrix):
        self.rows = len(m)
        self.cols = len(m[0]) if m else 0
        self.d = [list(row) for row in m]
        self.u = _identity(self.rows)
        self.v = _identity(self.cols)

    def swap_rows(self, i: int, k: int) -> None:
        if i != k:
            self.d[i], self.d[k] = self.d[k], self.d[i]
            self.u[i], self.u[k] = self.u[k], self.u[i]

    def swap_cols(self, j: int, k: int) -> None:
        if j != k:
            for row in self.d:
                row[j], row[k] = row[k], row[j]
            for row in self.v:
                row[j], row[k] = row[k], row[j]

    def add_row(self, target: int, source: int, factor: int) -> None:
        """row[target] += factor * row[source]"""
        if factor:
            for m in (self.d, self.u):
                src, dst = m[source], m[target]
                for j in range(len(dst)):
                    dst[j] += factor * src[j]

    def add_col(self, target: int, source: int, factor: int) -> None:
        """col[target] += factor * col[source]"""
        if factor:
            for m in (self.d, self.v):
                for row in m:
                    row[target] += factor * row[source]

    def negate_row(self, i: int) -> None:
        self.d[i] = [-x for x in self.d[i]]
        self.u[i] = [-x for x in self.u[i]]

    def clear_cross(self, t: int) -> bool:
        """Reduce row t and column t by the pivot; True if both are now clear."""
        d = self.d
        p = d[t][t]
        for i in range(t + 1, self.rows):
            self.add_row(i, t, -(d[i][t] // p))
        for j in range(t + 1, self.cols):
            self.add_col(j, t, -(d[t][j] // p))
        return all(d[i][t] == 0 for i in range(t + 1, self.rows)) and all(
            d[t][j] == 0 for j in range(t + 1, self.cols)
        )

    def non_dividing_row(self, t: int) -> int | None:
        p = self.d[t][t]
        for i in range(t + 1, self.rows):
            for j in range(t + 1, self.cols):
                if self.d[i][j] % p:
                    return i
        return None


def smith_normal_form(m: Matrix) -> SmithForm:
    """
    Compute the Smith normal form of an integer matrix.

    Pivoting: smallest nonzero absolute value in the remaining block, ties
    broken by row-major position.
    """
    r = _Reducer(m)
    for t in range(min(r.rows, r.cols)):
        while True:
            pivot = _find_pivot(r.d, t)
            if pivot is None:
                break
            r.swap_rows(t, pivot[0])
            r.swap_cols(t, pivot[1])
            if not r.clear_cross(t):
                continue
            bad = r.non_dividing_row(t)
            if bad is None:
                break
            r.add_row(t, bad, 1)
        if pivot is None:
            break
        if r.d[t][t] < 0:
            r.negate_row(t)

    diagonal = tuple(r.d[i][i] for i in range(min(r.rows, r.cols)))
    return SmithForm(diagonal, _freeze(r.d), _freeze(r.u), _freeze(r.v))
