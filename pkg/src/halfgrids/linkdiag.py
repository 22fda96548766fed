"""Link-diagram analysis of grid and half grid diagrams.

Conventions (fixed once, used everywhere): rows connect X to O, columns
connect O to X, horizontal strands cross over vertical ones.  A crossing is
positive exactly when the over direction is the under direction rotated a
quarter turn clockwise; this is the convention under which every crossing
of a constructed half-grid tangle comes out positive, which the test suite
checks explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooManyCrossings, UnorientedDiagram
from .halfgrid import GridDiagram, HalfGrid

BRACKET_CAP = 24

EAST = (1, 0)
WEST = (-1, 0)
NORTH = (0, 1)
SOUTH = (0, -1)


def _rotate_cw(d: tuple[int, int]) -> tuple[int, int]:
    return (d[1], -d[0])


@dataclass(frozen=True)
class Segment:
    kind: str  # 'h' or 'v'
    fixed: int  # row for 'h', column for 'v'
    lo: int
    hi: int
    direction: tuple[int, int]


@dataclass(frozen=True)
class Crossing:
    row: int  # row of the horizontal (over) strand
    col: int  # column of the vertical (under) strand
    over_dir: tuple[int, int]
    under_dir: tuple[int, int]
    sign: int


def horizontal_segments(g: GridDiagram) -> list[Segment]:
    out = []
    for r in range(1, g.size + 1):
        x, o = g.x_cols[r - 1], g.o_cols[r - 1]
        out.append(Segment("h", r, min(x, o), max(x, o), EAST if o > x else WEST))
    return out


def vertical_segments(g: GridDiagram) -> list[Segment]:
    if not g.oriented:
        raise UnorientedDiagram("vertical directions need X/O marks")
    x_row = {c: r for r, c in enumerate(g.x_cols, start=1)}
    o_row = {c: r for r, c in enumerate(g.o_cols, start=1)}
    out = []
    for c in range(1, g.size + 1):
        rx, ro = x_row[c], o_row[c]
        out.append(Segment("v", c, min(rx, ro), max(rx, ro), NORTH if rx > ro else SOUTH))
    return out


def _crossing_positions(g: GridDiagram) -> list[tuple[int, int]]:
    """(col, row) pairs where a vertical passes strictly under a horizontal."""
    out = []
    for r in range(1, g.size + 1):
        c1, c2 = g.x_cols[r - 1], g.o_cols[r - 1]
        lo, hi = min(c1, c2), max(c1, c2)
        for c in range(lo + 1, hi):
            r1, r2 = g.column_rows(c)
            if r1 < r < r2:
                out.append((c, r))
    return out


def crossings(g: GridDiagram) -> list[Crossing]:
    if not g.oriented:
        raise UnorientedDiagram("crossing signs need X/O marks")
    vdir = {s.fixed: s.direction for s in vertical_segments(g)}
    hdir = {s.fixed: s.direction for s in horizontal_segments(g)}
    out = []
    for c, r in _crossing_positions(g):
        over, under = hdir[r], vdir[c]
        s = 1 if over == _rotate_cw(under) else -1
        out.append(Crossing(r, c, over, under, s))
    return out


def writhe(g: GridDiagram) -> int:
    return sum(x.sign for x in crossings(g))


def half_grid_crossings(h: HalfGrid) -> list[Crossing]:
    """Crossings of the tangle generated by a half grid: rows run X to O and
    every mark drops a vertical arc to the bottom edge (up at an X, down at
    an O)."""
    mark_row = {c: h.column_row(c) for c in range(1, 2 * h.n + 1)}
    marks = h.column_marks()
    out = []
    for r in range(1, h.n + 1):
        x, o = h.x_cols[r - 1], h.o_cols[r - 1]
        lo, hi = min(x, o), max(x, o)
        over = EAST if o > x else WEST
        for c in range(lo + 1, hi):
            if r < mark_row[c]:
                under = NORTH if marks[c - 1] == "X" else SOUTH
                s = 1 if over == _rotate_cw(under) else -1
                out.append(Crossing(r, c, over, under, s))
    return out


def components(g: GridDiagram) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Component count plus the partition of columns into traced cycles.

    Cycles are listed with their smallest column first, sorted by it.
    """
    row_marks = {
        r: (g.x_cols[r - 1], g.o_cols[r - 1]) for r in range(1, g.size + 1)
    }
    seen_cols: set[int] = set()
    cycles = []
    for start in range(1, g.size + 1):
        if start in seen_cols:
            continue
        cols = []
        c, r = start, g.column_rows(start)[0]
        while True:
            cols.append(c)
            seen_cols.add(c)
            a, b = row_marks[r]  # step along the row
            c = b if c == a else a
            r1, r2 = g.column_rows(c)  # then along the column
            r = r2 if r == r1 else r1
            if c == start and r == g.column_rows(start)[0]:
                break
        cycles.append(tuple(cols))
    return len(cycles), tuple(cycles)


@dataclass(frozen=True)
class FrontStats:
    writhe: int
    cusps: int
    up_cusps: int
    down_cusps: int
    tb: int
    rot: int


def _corners(g: GridDiagram) -> list[tuple[str, str]]:
    """(mark type, corner type) for every mark; corner from the two strand
    stubs leaving the mark."""
    out = []
    for r in range(1, g.size + 1):
        for mark, c in (("X", g.x_cols[r - 1]), ("O", g.o_cols[r - 1])):
            partner_col = g.o_cols[r - 1] if mark == "X" else g.x_cols[r - 1]
            r1, r2 = g.column_rows(c)
            partner_row = r2 if r == r1 else r1
            horiz = "E" if partner_col > c else "W"
            vert = "N" if partner_row > r else "S"
            corner = {("W", "S"): "NE", ("E", "N"): "SW",
                      ("W", "N"): "SE", ("E", "S"): "NW"}[(horiz, vert)]
            out.append((mark, corner))
    return out


def front_stats(g: GridDiagram) -> FrontStats:
    """Legendrian front data after the quarter-turn correspondence: cusps are
    the NE and SW corners; an NE corner is an up cusp at an X and a down cusp
    at an O, and the other way around for SW corners."""
    if not g.oriented:
        raise UnorientedDiagram("front statistics need X/O marks")
    up = down = 0
    for mark, corner in _corners(g):
        if corner == "NE":
            up += mark == "X"
            down += mark == "O"
        elif corner == "SW":
            up += mark == "O"
            down += mark == "X"
    cusps = up + down
    w = writhe(g)
    assert cusps % 2 == 0 and (down - up) % 2 == 0, "open front: odd cusp parity"
    return FrontStats(
        writhe=w,
        cusps=cusps,
        up_cusps=up,
        down_cusps=down,
        tb=w - cusps // 2,
        rot=(down - up) // 2,
    )


def seifert_stats(g: GridDiagram) -> tuple[int, int]:
    """(circles, euler) after orientation-respecting smoothing of all
    crossings; euler = circles - crossings."""
    if not g.oriented:
        raise UnorientedDiagram("Seifert smoothing needs orientations")
    xs = crossings(g)
    by_row: dict[int, list[int]] = {}
    by_col: dict[int, list[int]] = {}
    for x in xs:
        by_row.setdefault(x.row, []).append(x.col)
        by_col.setdefault(x.col, []).append(x.row)

    # directed arc pieces; arcs named ('h', r, i) / ('v', c, i) in travel order
    succ: dict[tuple, tuple] = {}
    h_first: dict[int, tuple] = {}
    h_last: dict[int, tuple] = {}
    v_first: dict[int, tuple] = {}
    v_last: dict[int, tuple] = {}
    h_at: dict[tuple[int, int], tuple[tuple, tuple]] = {}  # (c,r) -> (in, out)
    v_at: dict[tuple[int, int], tuple[tuple, tuple]] = {}

    for r in range(1, g.size + 1):
        x, o = g.x_cols[r - 1], g.o_cols[r - 1]
        cols = sorted(by_row.get(r, []), reverse=o < x)
        pieces = [("h", r, i) for i in range(len(cols) + 1)]
        h_first[r], h_last[r] = pieces[0], pieces[-1]
        for i, c in enumerate(cols):
            h_at[(c, r)] = (pieces[i], pieces[i + 1])
    x_row = {c: r for r, c in enumerate(g.x_cols, start=1)}
    o_row = {c: r for r, c in enumerate(g.o_cols, start=1)}
    for c in range(1, g.size + 1):
        rows = sorted(by_col.get(c, []), reverse=x_row[c] < o_row[c])
        pieces = [("v", c, i) for i in range(len(rows) + 1)]
        v_first[c], v_last[c] = pieces[0], pieces[-1]
        for i, r in enumerate(rows):
            v_at[(c, r)] = (pieces[i], pieces[i + 1])

    for r in range(1, g.size + 1):
        succ[h_last[r]] = v_first[g.o_cols[r - 1]]  # through the O mark
    for c in range(1, g.size + 1):
        succ[v_last[c]] = h_first[x_row[c]]  # through the X mark
    for x in xs:  # smooth: swap the strands, keep directions
        h_in, h_out = h_at[(x.col, x.row)]
        v_in, v_out = v_at[(x.col, x.row)]
        succ[h_in] = v_out
        succ[v_in] = h_out

    circles = 0
    seen: set[tuple] = set()
    for start in succ:
        if start in seen:
            continue
        circles += 1
        cur = start
        while cur not in seen:
            seen.add(cur)
            cur = succ[cur]
    return circles, circles - len(xs)


class LaurentPoly:
    """Integer Laurent polynomial in one variable A."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, coef: int, exp: int) -> "LaurentPoly":
        return cls({exp: coef})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    def __pow__(self, k: int) -> "LaurentPoly":
        out = LaurentPoly.monomial(1, 0)
        for _ in range(k):
            out = out * self
        return out

    def mirror(self) -> "LaurentPoly":
        """Substitute A -> A^-1."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e in sorted(self.coeffs):
            exp = str(e) if e >= 0 else f"({e})"
            terms.append(f"{self.coeffs[e]}*A^{exp}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r})"


ONE_POLY = LaurentPoly.monomial(1, 0)
LOOP = LaurentPoly({2: -1, -2: -1})  # -A^2 - A^-2
NEG_A_CUBED = LaurentPoly.monomial(-1, 3)

# At a crossing the over strand is horizontal.  The A-regions are the ones
# swept by rotating the over strand counterclockwise (NE and SW); the
# A-smoothing merges them, which pairs the N end with W and the S end with E.
# Pinned empirically: the right-trefoil fixture must give the right-handed
# bracket, and swapping these constants mirrors every bracket.
_A_PAIRS = (("N", "W"), ("S", "E"))
_B_PAIRS = (("N", "E"), ("S", "W"))


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def kauffman_bracket(g: GridDiagram) -> LaurentPoly:
    """State-sum bracket of the unoriented reading, loop weight -A^2 - A^-2,
    normalized so a crossingless unknot diagram gives 1."""
    positions = _crossing_positions(g)
    c = len(positions)
    if c > BRACKET_CAP:
        raise TooManyCrossings(f"{c} crossings exceeds cap {BRACKET_CAP}")

    tokens: dict[tuple, int] = {}

    def tok(key: tuple) -> int:
        return tokens.setdefault(key, len(tokens))

    base_joins: list[tuple[int, int]] = []
    by_row: dict[int, list[int]] = {}
    by_col: dict[int, list[int]] = {}
    for col, row in positions:
        by_row.setdefault(row, []).append(col)
        by_col.setdefault(col, []).append(row)

    for r in range(1, g.size + 1):
        c1, c2 = sorted((g.x_cols[r - 1], g.o_cols[r - 1]))
        stops = [tok(("m", c1, r))]
        for col in sorted(by_row.get(r, [])):
            stops.append(tok(("c", col, r, "W")))
            stops.append(tok(("c", col, r, "E")))
        stops.append(tok(("m", c2, r)))
        for a, b in zip(stops[0::2], stops[1::2]):
            base_joins.append((a, b))
    for col in range(1, g.size + 1):
        r1, r2 = g.column_rows(col)
        stops = [tok(("m", col, r1))]
        for row in sorted(by_col.get(col, [])):
            stops.append(tok(("c", col, row, "S")))
            stops.append(tok(("c", col, row, "N")))
        stops.append(tok(("m", col, r2)))
        for a, b in zip(stops[0::2], stops[1::2]):
            base_joins.append((a, b))

    cross_joins = []
    for col, row in positions:
        a = [(tok(("c", col, row, p)), tok(("c", col, row, q))) for p, q in _A_PAIRS]
        b = [(tok(("c", col, row, p)), tok(("c", col, row, q))) for p, q in _B_PAIRS]
        cross_joins.append((a, b))

    n_tokens = len(tokens)
    total = LaurentPoly()
    for state in range(1 << c):
        uf = _UnionFind(n_tokens)
        merges = 0
        for a, b in base_joins:
            merges += uf.union(a, b)
        a_count = 0
        for i, (a_join, b_join) in enumerate(cross_joins):
            if state >> i & 1:
                a_count += 1
                picked = a_join
            else:
                picked = b_join
            for a, b in picked:
                merges += uf.union(a, b)
        loops = n_tokens - merges
        term = LaurentPoly.monomial(1, 2 * a_count - c) * LOOP ** (loops - 1)
        total = total + term
    return total


def framing_shift(p: LaurentPoly, q: LaurentPoly) -> int | None:
    """k with p == (-A^3)^k * q, or None if no such integer exists."""
    if not p.coeffs or not q.coeffs:
        return 0 if p == q else None
    diff = min(p.coeffs) - min(q.coeffs)
    if diff % 3:
        return None
    k = diff // 3
    shifted = q * (NEG_A_CUBED ** k if k >= 0 else NEG_A_CUBED.mirror() ** (-k))
    return k if shifted == p else None


# --- rendering ---------------------------------------------------------------

_CHARS = {
    True: {"h": "─", "v": "│", "X": "X", "O": "O", "B": "⊗"},
    False: {"h": "-", "v": "|", "X": "X", "O": "O", "B": "*"},
}


def _cells(width: int, height: int) -> list[list[str]]:
    return [[" "] * width for _ in range(height)]


def render_ascii(obj: GridDiagram | HalfGrid, ascii_only: bool = False) -> str:
    """Character rendering, one cell per grid square, top row first.
    Vertical strands break under horizontal ones at crossings."""
    chars = _CHARS[not ascii_only]
    if isinstance(obj, HalfGrid):
        width, height = 2 * obj.n, obj.n
        rows = [(obj.x_cols[r - 1], obj.o_cols[r - 1]) for r in range(1, height + 1)]
        vspan = {c: (1, obj.column_row(c)) for c in range(1, width + 1)}
        oriented = True
        x_set = set()
        for r, (x, _) in enumerate(rows, start=1):
            x_set.add((x, r))
    else:
        width = height = obj.size
        rows = [(obj.x_cols[r - 1], obj.o_cols[r - 1]) for r in range(1, height + 1)]
        vspan = {c: obj.column_rows(c) for c in range(1, width + 1)}
        oriented = obj.oriented
        x_set = {(c, r) for r, c in enumerate(obj.x_cols, start=1)}

    grid = _cells(width, height)
    for c, (lo, hi) in vspan.items():
        for r in range(lo, hi + 1):
            grid[r - 1][c - 1] = chars["v"]
    for r, (x, o) in enumerate(rows, start=1):
        for c in range(min(x, o), max(x, o) + 1):
            grid[r - 1][c - 1] = chars["h"]  # horizontal over: unbroken
    for r, (x, o) in enumerate(rows, start=1):
        for c in (x, o):
            if oriented:
                grid[r - 1][c - 1] = chars["X"] if (c, r) in x_set else chars["O"]
            else:
                grid[r - 1][c - 1] = chars["B"]
    return "\n".join("".join(row) for row in reversed(grid))


def render_svg(obj: GridDiagram | HalfGrid) -> str:
    """SVG 1.1 document; vertical under-strands get gaps at crossings."""
    cell = 20
    if isinstance(obj, HalfGrid):
        width, height = 2 * obj.n, obj.n
        rows = [(obj.x_cols[r - 1], obj.o_cols[r - 1]) for r in range(1, height + 1)]
        vspan = {c: (0, obj.column_row(c)) for c in range(1, width + 1)}
        oriented = True
    else:
        width = height = obj.size
        rows = [(obj.x_cols[r - 1], obj.o_cols[r - 1]) for r in range(1, height + 1)]
        vspan = {c: obj.column_rows(c) for c in range(1, width + 1)}
        oriented = obj.oriented

    def px(c: int) -> int:
        return c * cell

    def py(r: int) -> int:
        return (height + 1 - r) * cell  # flip: row 1 at the bottom

    cross_rows: dict[int, list[int]] = {}
    for r, (x, o) in enumerate(rows, start=1):
        lo, hi = min(x, o), max(x, o)
        for c in range(lo + 1, hi):
            clo, chi = vspan[c]
            if clo < r < chi:
                cross_rows.setdefault(c, []).append(r)

    lines = []
    gap = 5
    for c in range(1, width + 1):
        lo, hi = vspan[c]
        y_stops = [py(lo)] if lo else [py(1) + cell]
        for r in sorted(cross_rows.get(c, []), reverse=True):
            y_stops.extend([py(r) + gap, py(r) - gap])
        y_stops.append(py(hi))
        for y1, y2 in zip(y_stops[0::2], y_stops[1::2]):
            lines.append(f'<line x1="{px(c)}" y1="{y1}" x2="{px(c)}" y2="{y2}" stroke="black"/>')
    for r, (x, o) in enumerate(rows, start=1):
        lines.append(
            f'<line x1="{px(min(x, o))}" y1="{py(r)}" x2="{px(max(x, o))}" y2="{py(r)}" stroke="black"/>'
        )
    marks = []
    for r, (x, o) in enumerate(rows, start=1):
        if oriented:
            marks.append(f'<text x="{px(x)}" y="{py(r)}" text-anchor="middle" dy="4">X</text>')
            marks.append(f'<text x="{px(o)}" y="{py(r)}" text-anchor="middle" dy="4">O</text>')
        else:
            for c in (x, o):
                marks.append(f'<circle cx="{px(c)}" cy="{py(r)}" r="5" fill="white" stroke="black"/>')
                marks.append(
                    f'<line x1="{px(c) - 4}" y1="{py(r) - 4}" x2="{px(c) + 4}" y2="{py(r) + 4}" stroke="black"/>'
                )
    w, h = (width + 1) * cell, (height + 2) * cell
    body = "\n".join(lines + marks)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}">\n'
        f"{body}\n</svg>\n"
    )
