"""Matrices with polynomial entries over a shared ring context.

PolyMatrix carries its context explicitly so that the 0x0 and 0xN shapes
that arise from rank-zero factorizations stay well defined.  All
operations are exact; shape and context violations raise with the
corresponding identifier (shape-mismatch, context-mismatch).
"""

from __future__ import annotations

from typing import Callable, List, Sequence, Tuple

from .poly import Poly, RingContext


class PolyMatrix:
    __slots__ = ("ctx", "rows", "cols", "entries")

    def __init__(self, ctx: RingContext, entries: Sequence[Sequence[Poly]], cols: int = None):
        rows = len(entries)
        if rows == 0:
            if cols is None:
                cols = 0
        else:
            widths = {len(r) for r in entries}
            if len(widths) != 1:
                raise ValueError(f"shape-mismatch: ragged rows with widths {sorted(widths)}")
            width = widths.pop()
            if cols is None:
                cols = width
            elif cols != width:
                raise ValueError(f"shape-mismatch: declared {cols} columns, rows have {width}")
        checked: List[Tuple[Poly, ...]] = []
        for r in entries:
            row = []
            for p in r:
                if not isinstance(p, Poly):
                    p = ctx.constant(p)
                if p.ctx != ctx:
                    raise ValueError("context-mismatch: entry from a different context")
                row.append(p)
            checked.append(tuple(row))
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(checked))

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @staticmethod
    def zero(ctx: RingContext, rows: int, cols: int) -> "PolyMatrix":
        z = ctx.zero()
        return PolyMatrix(ctx, [[z] * cols for _ in range(rows)], cols=cols)

    @staticmethod
    def identity(ctx: RingContext, n: int) -> "PolyMatrix":
        one, zero = ctx.one(), ctx.zero()
        return PolyMatrix(
            ctx, [[one if i == j else zero for j in range(n)] for i in range(n)], cols=n
        )

    @staticmethod
    def scalar(ctx: RingContext, value, n: int) -> "PolyMatrix":
        p = value if isinstance(value, Poly) else ctx.constant(value)
        zero = ctx.zero()
        return PolyMatrix(
            ctx, [[p if i == j else zero for j in range(n)] for i in range(n)], cols=n
        )

    @staticmethod
    def block(grid: Sequence[Sequence["PolyMatrix"]]) -> "PolyMatrix":
        """Assemble a block matrix from a grid of compatible blocks."""
        if not grid or not grid[0]:
            raise ValueError("shape-mismatch: empty block grid")
        ctx = grid[0][0].ctx
        for row in grid:
            for blockm in row:
                if blockm.ctx != ctx:
                    raise ValueError("context-mismatch: blocks from different contexts")
        widths = [b.cols for b in grid[0]]
        entries: List[List[Poly]] = []
        for row in grid:
            if [b.cols for b in row] != widths:
                raise ValueError("shape-mismatch: inconsistent block column widths")
            height = {b.rows for b in row}
            if len(height) != 1:
                raise ValueError("shape-mismatch: inconsistent block row heights")
            h = height.pop()
            for i in range(h):
                flat: List[Poly] = []
                for b in row:
                    flat.extend(b.entries[i])
                entries.append(flat)
        return PolyMatrix(ctx, entries, cols=sum(widths))

    # -- arithmetic ----------------------------------------------------

    def _check_same_shape(self, other: "PolyMatrix"):
        if self.ctx != other.ctx:
            raise ValueError("context-mismatch: matrices from different contexts")
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(
                f"shape-mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_same_shape(other)
        return PolyMatrix(
            self.ctx,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
            cols=self.cols,
        )

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_same_shape(other)
        return PolyMatrix(
            self.ctx,
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
            cols=self.cols,
        )

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix(
            self.ctx, [[-a for a in row] for row in self.entries], cols=self.cols
        )

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ctx != other.ctx:
            raise ValueError("context-mismatch: matrices from different contexts")
        if self.cols != other.rows:
            raise ValueError(f"shape-mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        zero = self.ctx.zero()
        out: List[List[Poly]] = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a.is_zero():
                        continue
                    b = other.entries[k][j]
                    if b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ctx, out, cols=other.cols)

    def scale(self, factor) -> "PolyMatrix":
        p = factor if isinstance(factor, Poly) else self.ctx.constant(factor)
        return PolyMatrix(
            self.ctx, [[p * a for a in row] for row in self.entries], cols=self.cols
        )

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(
            self.ctx,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def map_entries(self, fn: Callable[[Poly], Poly]) -> "PolyMatrix":
        return PolyMatrix(
            self.ctx, [[fn(a) for a in row] for row in self.entries], cols=self.cols
        )

    def partial_derivative(self, var: str) -> "PolyMatrix":
        return self.map_entries(lambda p: p.partial_derivative(var))

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.entries for a in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.ctx, self.rows, self.cols, self.entries))

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(a) for a in row) for row in self.entries) + "]"

    def __repr__(self) -> str:
        return f"PolyMatrix({self.rows}x{self.cols}: {self})"
