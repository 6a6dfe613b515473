"""Polynomial-time counting of restricted paths, split by final-run type.

Tables are indexed by (length m, height n) and classified by how the walk
ends: up(m, n), down(m, n), and flat(m, n) count non-negative walks from the
origin to (m, n) whose completed runs already satisfy the restrictions and
which end with the named step.  Two filtered views enforce the height
restrictions at the moment a peak or valley closes: up_before_down zeroes a
walk whose pending up-run tops out at a forbidden peak height, and
down_before_up zeroes one whose pending down-run bottoms out at a forbidden
valley height.  flat_before_up and flat_before_down are the flat-run
variants that remember what preceded the flat block, so the peak or valley
formed across it is filtered with the right height.

Recurrences, with r running over run lengths outside the relevant forbidden
set (empty walk: down(0, 0) = 1; everything is 0 for heights above the
length or below 0):

    down(m, n) = sum_r up_before_down(m-r, n+r) + flat_before_down(m-r, n+r)
    flat(m, n) = sum_r down(m-r, n) + up(m-r, n)
    up(m, n)   = sum_r down_before_up(m-r, n-r) + flat_before_up(m-r, n-r)
    flat_before_up(m, n)   = sum_r up(m-r, n) + down_before_up(m-r, n)
    flat_before_down(m, n) = sum_r up_before_down(m-r, n) + down(m-r, n)

The count of restricted paths of length n is down(n, 0) + flat(n, 0); the
height-0 seed down(0, 0) = 1 doubles as the path start, which is why this
route rejects specs forbidding peak or valley height 0 (the symbolic engine
covers those).
"""

from __future__ import annotations

from .stepset import RestrictionSpec, StepSet


class SpecError(ValueError):
    """Spec outside this engine's domain."""


class DPTable:
    """Lazily grown tables for one restriction spec."""

    def __init__(self, spec: RestrictionSpec):
        if 0 in spec.peaks or 0 in spec.valleys:
            raise SpecError(
                "forbidden peak/valley height 0 is not supported by the "
                "dynamic-programming counter; use the symbolic peak/valley engine"
            )
        self.spec = spec
        # row m holds values for heights 0..m
        self._up: list[list[int]] = []
        self._down: list[list[int]] = []
        self._flat: list[list[int]] = []
        self._flat_up: list[list[int]] = []
        self._flat_down: list[list[int]] = []

    # filtered reads ----------------------------------------------------

    def _get(self, table: list[list[int]], m: int, n: int) -> int:
        if m < 0 or n < 0 or n > m:
            return 0
        return table[m][n]

    def up(self, m: int, n: int) -> int:
        self.ensure(m)
        return self._get(self._up, m, n)

    def down(self, m: int, n: int) -> int:
        self.ensure(m)
        return self._get(self._down, m, n)

    def flat(self, m: int, n: int) -> int:
        self.ensure(m)
        return self._get(self._flat, m, n)

    def up_before_down(self, m: int, n: int) -> int:
        # an up-run ending at a forbidden peak height must not be closed by a down-step
        if n in self.spec.peaks:
            return 0
        return self.up(m, n)

    def down_before_up(self, m: int, n: int) -> int:
        if n in self.spec.valleys:
            return 0
        return self.down(m, n)

    def flat_before_up(self, m: int, n: int) -> int:
        self.ensure(m)
        return self._get(self._flat_up, m, n)

    def flat_before_down(self, m: int, n: int) -> int:
        self.ensure(m)
        return self._get(self._flat_down, m, n)

    # table fill --------------------------------------------------------

    def ensure(self, m: int) -> None:
        while len(self._down) <= m:
            self._fill_row(len(self._down))

    def _fill_row(self, m: int) -> None:
        if m == 0:
            self._up.append([0])
            self._down.append([1])
            self._flat.append([0])
            self._flat_up.append([0])
            self._flat_down.append([0])
            return

        spec = self.spec
        up_rows, down_rows = self._up, self._down
        fu_rows, fd_rows = self._flat_up, self._flat_down
        peaks, valleys = spec.peaks, spec.valleys

        def ud(mm: int, nn: int) -> int:
            if nn > mm or nn in peaks:
                return 0
            return up_rows[mm][nn]

        def du(mm: int, nn: int) -> int:
            if nn > mm or nn in valleys:
                return 0
            return down_rows[mm][nn]

        up_ok = [r for r in range(1, m + 1) if r not in spec.up_runs]
        down_ok = [r for r in range(1, m + 1) if r not in spec.down_runs]
        flat_ok = [r for r in range(1, m + 1) if r not in spec.flat_runs]

        row_u = [0] * (m + 1)
        row_d = [0] * (m + 1)
        row_f = [0] * (m + 1)
        row_fu = [0] * (m + 1)
        row_fd = [0] * (m + 1)

        for n in range(m + 1):
            acc = 0
            for r in down_ok:
                mm, nn = m - r, n + r
                if nn <= mm:
                    acc += ud(mm, nn) + fd_rows[mm][nn]
            row_d[n] = acc

            acc = 0
            for r in up_ok:
                mm, nn = m - r, n - r
                if 0 <= nn <= mm:
                    acc += du(mm, nn) + fu_rows[mm][nn]
            row_u[n] = acc

            acc_f = acc_fu = acc_fd = 0
            for r in flat_ok:
                mm = m - r
                if n <= mm:
                    acc_f += down_rows[mm][n] + up_rows[mm][n]
                    acc_fu += up_rows[mm][n] + du(mm, n)
                    acc_fd += ud(mm, n) + down_rows[mm][n]
            row_f[n] = acc_f
            row_fu[n] = acc_fu
            row_fd[n] = acc_fd

        self._up.append(row_u)
        self._down.append(row_d)
        self._flat.append(row_f)
        self._flat_up.append(row_fu)
        self._flat_down.append(row_fd)

    def count(self, n: int) -> int:
        """Restricted paths of length n (end at height 0)."""
        return self.down(n, 0) + self.flat(n, 0)


def sequence(spec: RestrictionSpec, n: int) -> list[int]:
    """Counts for lengths 0..n."""
    table = DPTable(spec)
    table.ensure(n)
    return [table.count(m) for m in range(n + 1)]


def motzkin_numbers(n: int) -> list[int]:
    return sequence(RestrictionSpec(), n)
