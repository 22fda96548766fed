"""Enumeration harness: machine-check the library's structural properties
over all binary trees up to a leaf bound.

Each check returns a (name, instance count, pass/fail, counterexample)
record; the suite never raises on a failed property, it reports it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linkdiag
from .dyadic import sign, spanning_intervals, spanning_intervals_by_pairs
from .halfgrid import (
    HalfGrid,
    assemble,
    assemble_unoriented,
    half_grid_from_partition,
    is_compatible,
    perm_decode,
    perm_encode,
)
from .linkdiag import LOOP, front_stats, half_grid_crossings, seifert_stats, writhe
from .linkgroup import (
    abelianization,
    grid_presentation,
    half_grid_presentation,
)
from .thompson import (
    TreePair,
    Tree,
    enumerate_trees,
    inverse,
    is_oriented,
    is_oriented_via_points,
    leaf_signs,
    multiply,
    node,
    LEAF,
    partition_from_tree,
    reduce_pair,
)

BRACKET_CHECK_CAP = 12  # keep state sums small inside the harness
BRACKET_MIRROR_BUDGET = 300  # instance cap; enumeration order is fixed
BRACKET_STAB_BUDGET = 200


@dataclass(frozen=True)
class CheckResult:
    name: str
    instances: int
    passed: bool
    counterexample: str | None = None


@dataclass(frozen=True)
class Report:
    max_leaves: int
    results: tuple[CheckResult, ...]
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def format(self) -> str:
        lines = [f"verification over all trees with up to {self.max_leaves} leaves"]
        width = max(len(r.name) for r in self.results)
        for r in sorted(self.results, key=lambda r: r.name):
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{r.name:<{width}}  {r.instances:>8}  {status}")
            if not r.passed:
                lines.append(f"  counterexample: {r.counterexample}")
        lines.extend(f"note: {n}" for n in self.notes)
        lines.append("all checks passed" if self.ok else "SOME CHECKS FAILED")
        return "\n".join(lines)


class _Check:
    """Accumulates instances; records the first counterexample."""

    def __init__(self, name: str):
        self.name = name
        self.instances = 0
        self.counterexample: str | None = None

    def record(self, ok: bool, describe) -> None:
        self.instances += 1
        if not ok and self.counterexample is None:
            self.counterexample = describe()

    def result(self) -> CheckResult:
        return CheckResult(
            self.name, self.instances, self.counterexample is None, self.counterexample
        )


def _all_trees(max_leaves: int) -> list[Tree]:
    out: list[Tree] = []
    for n in range(1, max_leaves + 1):
        out.extend(enumerate_trees(n))
    return out


def verify_suite(max_leaves: int = 5) -> Report:
    if not 1 <= max_leaves <= 8:
        raise ValueError("max_leaves must be between 1 and 8")
    trees = _all_trees(max_leaves)
    partitions = {t: partition_from_tree(t) for t in trees}
    halves = {t: half_grid_from_partition(partitions[t]) for t in trees}

    checks = {
        name: _Check(name)
        for name in (
            "spanning-cardinalities",
            "spanning-two-routes-agree",
            "half-grid-validity",
            "column-marks-are-interval-signs",
            "compatibility-from-signs",
            "writhe-zero",
            "top-half-crossings-positive",
            "tb-and-rot",
            "parity",
            "seifert-euler",
            "dual-membership-agreement",
            "oriented-subgroup-closure",
            "presentation-equality",
            "abelianization-free-rank",
            "relator-shape",
            "codec-roundtrip",
            "bracket-stabilization",
            "bracket-mirror",
        )
    }
    converse_hits = 0

    for t in trees:
        n = t.leaf_count()
        p = partitions[t]
        spanning = spanning_intervals(p)
        pos = sum(1 for iv in spanning if sign(iv) == "+")
        c = checks["spanning-cardinalities"]
        c.record(
            len(spanning) == 2 * n - 1 and pos == n and len(spanning) - pos == n - 1,
            lambda t=t: f"tree {t}",
        )
        checks["spanning-two-routes-agree"].record(
            spanning == spanning_intervals_by_pairs(p), lambda t=t: f"tree {t}"
        )

        h = halves[t]
        ok = True
        try:
            HalfGrid(h.n, h.x_cols, h.o_cols)
        except ValueError:
            ok = False
        checks["half-grid-validity"].record(ok and h.n == n, lambda t=t: f"tree {t}")

        marks = h.column_marks()
        want = tuple("X" if sign(iv) == "+" else "O" for iv in spanning)
        checks["column-marks-are-interval-signs"].record(
            marks[0] == "O" and marks[1:] == want, lambda t=t: f"tree {t}"
        )

        checks["codec-roundtrip"].record(
            perm_decode(perm_encode(h)) == h, lambda t=t: f"tree {t}"
        )

    by_n: dict[int, list[Tree]] = {}
    for t in trees:
        by_n.setdefault(t.leaf_count(), []).append(t)

    for n, group in sorted(by_n.items()):
        for t1, t2 in itertools.product(group, repeat=2):
            a, b = halves[t1], halves[t2]
            same_signs = leaf_signs(t1) == leaf_signs(t2)
            if same_signs:
                compatible = is_compatible(a, b)
                checks["compatibility-from-signs"].record(
                    compatible, lambda t1=t1, t2=t2: f"trees {t1}, {t2}"
                )
                if compatible:
                    _check_compatible_pair(checks, n, t1, t2, a, b)
            elif is_compatible(a, b):
                converse_hits += 1

            # presentation checks hold for any pair of equal size
            _check_presentation(checks, n, t1, t2, a, b)

    _check_group_structure(checks, max_leaves)
    _check_dual_membership(checks, max_leaves)
    _check_bracket_mirror(checks, by_n, halves)

    notes = (
        "incompatible partition pairs yielding compatible half grids: "
        f"{converse_hits} (informational; the converse of the compatibility "
        "statement is not claimed)",
    )
    return Report(max_leaves, tuple(c.result() for c in checks.values()), notes)


def _check_compatible_pair(checks, n, t1, t2, a, b) -> None:
    g = assemble(a, b)
    where = lambda: f"trees {t1}, {t2}"  # noqa: E731
    checks["writhe-zero"].record(writhe(g) == 0, where)

    tops = half_grid_crossings(a)
    checks["top-half-crossings-positive"].record(
        len(tops) == n - 1 and all(x.sign == 1 for x in tops),
        lambda t1=t1: f"tree {t1}",
    )

    stats = front_stats(g)
    checks["tb-and-rot"].record(stats.tb == -n and stats.rot == 0, where)

    comps, _ = linkdiag.components(g)
    checks["parity"].record(
        comps % 2 == n % 2 and (stats.tb - stats.rot) % 2 == comps % 2, where
    )

    circles, euler = seifert_stats(g)
    xs = linkdiag.crossings(g)
    checks["seifert-euler"].record(
        euler == -n + 2 and len(xs) == 2 * (n - 1), where
    )

    stab = checks["bracket-stabilization"]
    if len(xs) + 2 <= BRACKET_CHECK_CAP and stab.instances < BRACKET_STAB_BUDGET:
        refined = assemble_unoriented(
            half_grid_from_partition(partition_from_tree(node(t1, LEAF))),
            half_grid_from_partition(partition_from_tree(node(t2, LEAF))),
        )
        base = linkdiag.kauffman_bracket(g.unoriented())
        checks["bracket-stabilization"].record(
            linkdiag.kauffman_bracket(refined) == LOOP * base, where
        )


def _check_presentation(checks, n, t1, t2, a, b) -> None:
    where = lambda: f"trees {t1}, {t2}"  # noqa: E731
    g = assemble_unoriented(a, b)
    from_grid = grid_presentation(g)
    from_perms = half_grid_presentation(perm_encode(a), perm_encode(b))
    checks["presentation-equality"].record(
        from_grid.sorted_relators() == from_perms.sorted_relators(), where
    )

    free_rank, torsion = abelianization(from_perms)
    comps, _ = linkdiag.components(g)
    checks["abelianization-free-rank"].record(
        free_rank == comps and not torsion, where
    )

    lengths = sorted(len(w) for w in from_perms.relators)
    want = sorted([2 * n] + [2 * n - 2 * i for i in range(1, n) for _ in range(2)])
    checks["relator-shape"].record(
        len(from_perms.relators) == 2 * n - 1 and lengths == want, where
    )


def _check_group_structure(checks, max_leaves: int) -> None:
    cap = min(max_leaves, 4)
    pairs = []
    for n in range(1, cap + 1):
        for top in enumerate_trees(n):
            for bottom in enumerate_trees(n):
                pairs.append(reduce_pair(TreePair(top, bottom)))
    oriented = [g for g in pairs if is_oriented(g)]
    for g in oriented[:200]:
        checks["oriented-subgroup-closure"].record(
            is_oriented(inverse(g)), lambda g=g: f"pair {g}"
        )
    for g, h in itertools.islice(itertools.product(oriented, repeat=2), 400):
        checks["oriented-subgroup-closure"].record(
            is_oriented(multiply(g, h)), lambda g=g, h=h: f"pairs {g}, {h}"
        )


def _check_dual_membership(checks, max_leaves: int) -> None:
    for n in range(1, max_leaves + 1):
        for top in enumerate_trees(n):
            for bottom in enumerate_trees(n):
                g = TreePair(top, bottom)
                checks["dual-membership-agreement"].record(
                    is_oriented(g) == is_oriented_via_points(g),
                    lambda g=g: f"pair {g}",
                )


def _check_bracket_mirror(checks, by_n, halves) -> None:
    check = checks["bracket-mirror"]
    for n, group in sorted(by_n.items()):
        for t1, t2 in itertools.product(group, repeat=2):
            if check.instances >= BRACKET_MIRROR_BUDGET:
                return
            a, b = halves[t1], halves[t2]
            g = assemble_unoriented(a, b)
            if len(linkdiag._crossing_positions(g)) > BRACKET_CHECK_CAP:
                continue
            forward = linkdiag.kauffman_bracket(g)
            backward = linkdiag.kauffman_bracket(assemble_unoriented(b, a))
            check.record(
                backward == forward.mirror(),
                lambda t1=t1, t2=t2: f"trees {t1}, {t2}",
            )
