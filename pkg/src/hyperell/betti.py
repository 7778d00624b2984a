"""Sparse graded Betti diagrams with exact, positive, and unknown entries.

A diagram records beta_{i,j} for the minimal free resolution of the
vanishing ideal of an embedded curve: the i-th free module is a direct sum
of R(-i-j) summands counted by beta_{i,j}, with 1 <= i <= r.  Three kinds
of entry occur:

* an exact nonnegative integer,
* ``POSITIVE`` ("+"): proved nonzero but with no closed form for the value,
* ``UNKNOWN`` ("?"): not pinned down by the closed forms implemented here.

Zero is never stored, so an absent key means an exact zero and diagram
equality is equality of the sparse content.
"""

from __future__ import annotations

from dataclasses import dataclass, field

POSITIVE = "+"
UNKNOWN = "?"

Entry = int | str


@dataclass
class BettiDiagram:
    r: int
    entries: dict[tuple[int, int], int | str] = field(default_factory=dict)

    def set(self, i: int, j: int, value: int | str) -> None:
        if not (1 <= i <= self.r) or j < 1:
            raise ValueError(f"position (i={i}, j={j}) outside 1..{self.r} x 1..")
        if value == 0:
            self.entries.pop((i, j), None)
            return
        if value not in (POSITIVE, UNKNOWN) and not (isinstance(value, int) and value > 0):
            raise ValueError(f"bad Betti entry {value!r}")
        self.entries[(i, j)] = value

    def entry(self, i: int, j: int) -> int | str:
        return self.entries.get((i, j), 0)

    def triples(self) -> list[tuple[int, int, int | str]]:
        """Nonzero entries as (i, j, value), sorted by (j, i)."""
        keys = sorted(self.entries, key=lambda ij: (ij[1], ij[0]))
        return [(i, j, self.entries[i, j]) for i, j in keys]

    @property
    def fully_known(self) -> bool:
        return all(isinstance(v, int) for v in self.entries.values())

    def max_row(self) -> int:
        return max((j for _, j in self.entries), default=1)

    def pretty(self) -> str:
        """Conventional layout: one column per homological step i, one row per twist j."""
        cols = range(1, self.r + 1)
        grid = [["i:"] + [str(i) for i in cols]]
        for j in range(1, self.max_row() + 1):
            cells = ["." if self.entry(i, j) == 0 else str(self.entry(i, j)) for i in cols]
            grid.append([f"j={j}:"] + cells)
        widths = [max(len(row[k]) for row in grid) for k in range(self.r + 1)]
        return "\n".join("  ".join(s.rjust(w) for s, w in zip(row, widths)) for row in grid)
