"""Link-group presentations from grids and half grids, plus abelianization.

Generators correspond to vertical segments (one per column); every relator
is a positive word set equal to the identity.  Words carry signed letters so
the type extends to general presentations, but everything produced here is
positive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeMismatch
from .halfgrid import GridDiagram, Permutation

Word = tuple[int, ...]  # signed generator indices; positive = the generator


@dataclass(frozen=True)
class GroupPresentation:
    generator_count: int
    relators: tuple[Word, ...]

    def __post_init__(self):
        for word in self.relators:
            for letter in word:
                if not 1 <= abs(letter) <= self.generator_count:
                    raise ValueError(f"letter {letter} out of range")

    def sorted_relators(self) -> tuple[Word, ...]:
        """Canonical order: by length, then lexicographically."""
        return tuple(sorted(self.relators, key=lambda w: (len(w), w)))

    def __str__(self) -> str:
        return format_presentation(self)


def grid_presentation(g: GridDiagram) -> GroupPresentation:
    """One generator per column; relator j lists, left to right, the columns
    whose vertical segment crosses the horizontal line between rows j, j+1."""
    m = g.size
    spans = {c: g.column_rows(c) for c in range(1, m + 1)}
    relators = []
    for j in range(1, m):
        word = tuple(c for c in range(1, m + 1) if spans[c][0] <= j < spans[c][1])
        relators.append(word)
    return GroupPresentation(m, tuple(relators))


def half_grid_presentation(sigma_plus: Permutation, sigma_minus: Permutation) -> GroupPresentation:
    """2n generators; the full word x1..x2n, then for each permutation and
    each i = 1..n-1 the word left after deleting x_{sigma(1)}..x_{sigma(2i)}."""
    if sigma_plus.degree != sigma_minus.degree:
        raise DegreeMismatch(
            f"permutation degrees differ: {sigma_plus.degree} vs {sigma_minus.degree}"
        )
    if sigma_plus.degree % 2:
        raise DegreeMismatch("half grid permutations need even degree")
    n = sigma_plus.degree // 2
    full = tuple(range(1, 2 * n + 1))
    relators = [full]
    for sigma in (sigma_plus, sigma_minus):
        for i in range(1, n):
            gone = set(sigma.images[: 2 * i])
            relators.append(tuple(x for x in full if x not in gone))
    return GroupPresentation(2 * n, tuple(relators))


def relation_matrix(p: GroupPresentation) -> list[list[int]]:
    """Exponent-sum matrix, one row per relator."""
    rows = []
    for word in p.relators:
        row = [0] * p.generator_count
        for letter in word:
            row[abs(letter) - 1] += 1 if letter > 0 else -1
        rows.append(row)
    return rows


def smith_normal_form(matrix: list[list[int]]) -> list[int]:
    """Diagonal invariant factors d1 | d2 | ... of an integer matrix,
    non-negative, zeros dropped at the end.  Exact integer elimination,
    pivoting on the entry of minimal non-zero absolute value."""
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag: list[int] = []
    top = 0
    while top < min(rows, cols):
        # find the minimal non-zero pivot in the remaining block
        pivot = None
        for i in range(top, rows):
            for j in range(top, cols):
                if m[i][j] and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        m[top], m[i] = m[i], m[top]
        for row in m:
            row[top], row[j] = row[j], row[top]
        dirty = False
        for i in range(rows):
            if i != top and m[i][top]:
                q = m[i][top] // m[top][top]
                for j in range(cols):
                    m[i][j] -= q * m[top][j]
                dirty = dirty or m[i][top] != 0
        for j in range(cols):
            if j != top and m[top][j]:
                q = m[top][j] // m[top][top]
                for i in range(rows):
                    m[i][j] -= q * m[i][top]
                dirty = dirty or m[top][j] != 0
        if dirty:
            continue  # remainders appeared; re-pivot on a smaller entry
        diag.append(abs(m[top][top]))
        top += 1
    # enforce the divisibility chain d1 | d2 | ...
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a:
                g = _gcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
    return diag


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def abelianization(p: GroupPresentation) -> tuple[int, list[int]]:
    """(free rank, torsion coefficients > 1) of the abelianized group."""
    factors = smith_normal_form(relation_matrix(p)) if p.relators else []
    nonzero = [d for d in factors if d]
    free_rank = p.generator_count - len(nonzero)
    return free_rank, [d for d in nonzero if d > 1]


def format_presentation(p: GroupPresentation) -> str:
    lines = [f"gens={p.generator_count}"]
    for word in p.relators:
        lines.append("rel: " + " ".join(_letter(x) for x in word))
    return "\n".join(lines)


def format_presentation_gap(p: GroupPresentation) -> str:
    """Generic finitely-presented-group text form."""
    rels = []
    for word in p.relators:
        rels.append("*".join(f"F.{x}" if x > 0 else f"F.{-x}^-1" for x in word) or "One(F)")
    return (
        f"F := FreeGroup({p.generator_count});;\n"
        f"G := F / [ {', '.join(rels)} ];\n"
    )


def _letter(x: int) -> str:
    return f"x{x}" if x > 0 else f"x{-x}^-1"
