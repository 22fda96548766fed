"""Half grid diagrams, their assembly into grids, and the Sym(2n) codec.

Rows are indexed bottom to top, columns left to right, both 1-based, so the
lower-left cell is (1,1).  A half grid stores the X and O column of each
row; a grid diagram does the same but keeps an `oriented` flag: unoriented
grids reuse the coordinates with every mark read as the same symbol.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dyadic import SdPartition, conjugate, sign, spanning_intervals, LEN_KEY
from .errors import Incompatible, NotAPermutation, ParseError, SizeMismatch


@dataclass(frozen=True)
class HalfGrid:
    """n rows by 2n columns; one X and one O per row, one mark per column."""

    n: int
    x_cols: tuple[int, ...]
    o_cols: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        if len(self.x_cols) != n or len(self.o_cols) != n:
            raise ValueError("need one X and one O column per row")
        used = list(self.x_cols) + list(self.o_cols)
        if sorted(used) != list(range(1, 2 * n + 1)):
            raise ValueError("columns must be a permutation of 1..2n")

    def column_marks(self) -> tuple[str, ...]:
        """Mark type per column, 'X' or 'O'."""
        marks = [""] * (2 * self.n)
        for c in self.x_cols:
            marks[c - 1] = "X"
        for c in self.o_cols:
            marks[c - 1] = "O"
        return tuple(marks)

    def column_row(self, c: int) -> int:
        """Row of the single mark in column c."""
        for r, (x, o) in enumerate(zip(self.x_cols, self.o_cols), start=1):
            if x == c or o == c:
                return r
        raise ValueError(f"column {c} out of range")

    def __str__(self) -> str:
        return format_half_grid(self)


@dataclass(frozen=True)
class GridDiagram:
    """size x size grid; one X and one O per row; oriented flag."""

    size: int
    x_cols: tuple[int, ...]
    o_cols: tuple[int, ...]
    oriented: bool = True

    def __post_init__(self):
        m = self.size
        if len(self.x_cols) != m or len(self.o_cols) != m:
            raise ValueError("need one X and one O column per row")
        for x, o in zip(self.x_cols, self.o_cols):
            if x == o or not (1 <= x <= m and 1 <= o <= m):
                raise ValueError("row marks must be distinct columns in range")
        x_count = [0] * (m + 1)
        o_count = [0] * (m + 1)
        for x, o in zip(self.x_cols, self.o_cols):
            x_count[x] += 1
            o_count[o] += 1
        if self.oriented:
            if any(c != 1 for c in x_count[1:]) or any(c != 1 for c in o_count[1:]):
                raise ValueError("each column needs exactly one X and one O")
        else:
            if any(x_count[c] + o_count[c] != 2 for c in range(1, m + 1)):
                raise ValueError("each column needs exactly two marks")

    def column_rows(self, c: int) -> tuple[int, int]:
        """The two rows holding marks in column c, ascending."""
        rows = [
            r
            for r, (x, o) in enumerate(zip(self.x_cols, self.o_cols), start=1)
            if x == c or o == c
        ]
        return rows[0], rows[1]

    def unoriented(self) -> "GridDiagram":
        return GridDiagram(self.size, self.x_cols, self.o_cols, oriented=False)

    def __str__(self) -> str:
        return format_grid(self)


@dataclass(frozen=True)
class Permutation:
    """One-line notation on 1..k."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise NotAPermutation(f"{self.images} is not a bijection on 1..{len(self.images)}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.images)


def parse_permutation(text: str) -> Permutation:
    try:
        images = tuple(int(tok) for tok in text.split())
    except ValueError:
        raise ParseError(f"malformed permutation {text!r}") from None
    return Permutation(images)


def half_grid_from_partition(p: SdPartition) -> HalfGrid:
    """The canonical half grid of a standard dyadic partition.

    Column of an interval: its rank in the midpoint order, shifted by one.
    Row: rank in the length order over the positive intervals, shared with
    the conjugate for negative ones.  X marks positive intervals, O marks
    negative; a default O sits at column 1, top row.
    """
    n = p.n
    spanning = spanning_intervals(p)  # midpoint order
    col = {iv: i + 2 for i, iv in enumerate(spanning)}
    positives = sorted((iv for iv in spanning if sign(iv) == "+"), key=LEN_KEY)
    # distinct intervals never tie under the length order
    assert len(set(positives)) == len(positives)
    row = {iv: i + 1 for i, iv in enumerate(positives)}

    x_cols = [0] * n
    o_cols = [0] * n
    o_cols[n - 1] = 1  # default O at (1, n)
    for iv in spanning:
        if sign(iv) == "+":
            x_cols[row[iv] - 1] = col[iv]
        else:
            o_cols[row[conjugate(iv)] - 1] = col[iv]
    return HalfGrid(n, tuple(x_cols), tuple(o_cols))


def is_compatible(a: HalfGrid, b: HalfGrid) -> bool:
    """Same mark type in every column."""
    if a.n != b.n:
        raise SizeMismatch(f"half grid sizes differ: {a.n} vs {b.n}")
    return a.column_marks() == b.column_marks()


def _stacked_coords(top: HalfGrid, bottom: HalfGrid) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Coordinates of the 2n x 2n stack: flipped bottom (marks swapped), then top."""
    n = top.n
    x_cols = []
    o_cols = []
    for r in range(n, 0, -1):  # bottom rows, reversed, X and O swapped
        x_cols.append(bottom.o_cols[r - 1])
        o_cols.append(bottom.x_cols[r - 1])
    x_cols.extend(top.x_cols)
    o_cols.extend(top.o_cols)
    return tuple(x_cols), tuple(o_cols)


def assemble(top: HalfGrid, bottom: HalfGrid) -> GridDiagram:
    """Stack two compatible half grids into an oriented grid diagram."""
    if not is_compatible(top, bottom):
        raise Incompatible("half grids disagree in some column")
    x_cols, o_cols = _stacked_coords(top, bottom)
    return GridDiagram(2 * top.n, x_cols, o_cols, oriented=True)


def assemble_unoriented(top: HalfGrid, bottom: HalfGrid) -> GridDiagram:
    """Stack any two equal-size half grids, marks read unoriented."""
    if top.n != bottom.n:
        raise SizeMismatch(f"half grid sizes differ: {top.n} vs {bottom.n}")
    x_cols, o_cols = _stacked_coords(top, bottom)
    return GridDiagram(2 * top.n, x_cols, o_cols, oriented=False)


def perm_encode(h: HalfGrid) -> Permutation:
    """sigma = (X(1), O(1), X(2), O(2), ..., X(n), O(n)), bottom row first."""
    images: list[int] = []
    for x, o in zip(h.x_cols, h.o_cols):
        images.append(x)
        images.append(o)
    return Permutation(tuple(images))


def perm_decode(sigma: Permutation) -> HalfGrid:
    if sigma.degree % 2:
        raise NotAPermutation("half grid permutation needs even degree")
    n = sigma.degree // 2
    x_cols = tuple(sigma.images[0::2])
    o_cols = tuple(sigma.images[1::2])
    return HalfGrid(n, x_cols, o_cols)


def format_half_grid(h: HalfGrid) -> str:
    xs = ",".join(str(c) for c in h.x_cols)
    os_ = ",".join(str(c) for c in h.o_cols)
    return f"n={h.n}; X={xs}; O={os_}"


def format_grid(g: GridDiagram) -> str:
    xs = ",".join(str(c) for c in g.x_cols)
    os_ = ",".join(str(c) for c in g.o_cols)
    flag = "true" if g.oriented else "false"
    return f"n={g.size}; X={xs}; O={os_}; oriented={flag}"


def _parse_fields(text: str, names: list[str]) -> dict[str, str]:
    fields = {}
    for part in text.split(";"):
        key, sep, value = part.strip().partition("=")
        if not sep:
            raise ParseError(f"malformed field {part.strip()!r}")
        fields[key.strip()] = value.strip()
    missing = [k for k in names if k not in fields]
    if missing:
        raise ParseError(f"missing fields: {', '.join(missing)}")
    return fields


def _parse_cols(value: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in value.split(","))
    except ValueError:
        raise ParseError(f"malformed column list {value!r}") from None


def parse_half_grid(text: str) -> HalfGrid:
    fields = _parse_fields(text, ["n", "X", "O"])
    try:
        return HalfGrid(int(fields["n"]), _parse_cols(fields["X"]), _parse_cols(fields["O"]))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_grid(text: str) -> GridDiagram:
    fields = _parse_fields(text, ["n", "X", "O", "oriented"])
    if fields["oriented"] not in ("true", "false"):
        raise ParseError("oriented must be 'true' or 'false'")
    try:
        return GridDiagram(
            int(fields["n"]),
            _parse_cols(fields["X"]),
            _parse_cols(fields["O"]),
            oriented=fields["oriented"] == "true",
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def rotate90(g: GridDiagram) -> GridDiagram:
    """Rotate 90 degrees counterclockwise, mapping to the usual convention
    (rows O->X, columns X->O, vertical over)."""
    m = g.size
    if g.oriented:
        x_cols = [0] * m
        o_cols = [0] * m
        for r in range(1, m + 1):
            # (c, r) -> (r, m + 1 - c)
            x_cols[m - g.x_cols[r - 1]] = r
            o_cols[m - g.o_cols[r - 1]] = r
        return GridDiagram(m, tuple(x_cols), tuple(o_cols), oriented=True)
    # unoriented: mark labels carry no meaning, keep coordinate pairs per row
    by_row: dict[int, list[int]] = {r: [] for r in range(1, m + 1)}
    for r in range(1, m + 1):
        for c in (g.x_cols[r - 1], g.o_cols[r - 1]):
            by_row[m + 1 - c].append(r)
    x_cols = tuple(sorted(by_row[r])[0] for r in range(1, m + 1))
    o_cols = tuple(sorted(by_row[r])[1] for r in range(1, m + 1))
    return GridDiagram(m, x_cols, o_cols, oriented=False)
