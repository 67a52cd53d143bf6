"""Conjecture generation, filtering, ranking, rendering and verification.

The generation loop sweeps every (target, direction, other property,
hypothesis) combination, fits the touch-maximal sharp bound on the selected
rows, and keeps every fit that touches at least one object. Filtering then
removes conjectures that are strictly less general than an identical bound
(generality filter) or that touch no object untouched by an earlier accepted
conjecture (Dalmatian filter). Conjectures are presented in non-increasing
touch-number order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

from .errors import ConfigError, UndefinedInvariantError
from .features import FeatureTable, Hypothesis
from .fitting import LOWER, UPPER, SharpBoundingFunction, fit_linear_bound
from .graphs import Graph
from .invariants import DISPLAY_SYMBOLS


@dataclass(frozen=True)
class Conjecture:
    """A conjectured inequality between two numeric properties.

    The claim: every object satisfying ``hypothesis`` has
    ``target <= slope*other + intercept`` (or >= for lower bounds).
    ``touch_set`` holds the labels of objects attaining equality in the
    generating corpus; ``support_size`` counts the objects satisfying the
    hypothesis there.
    """

    target: str
    other: str
    direction: str
    hypothesis: Hypothesis
    bound: SharpBoundingFunction
    touch_set: frozenset[str]
    touch_number: int
    support_size: int

    def __post_init__(self):
        if self.target == self.other:
            raise ValueError("target and other property must differ")
        if self.touch_number != len(self.touch_set) or self.touch_number < 1:
            raise ValueError("touch_number must equal |touch_set| and be >= 1")

    @property
    def statement(self) -> str:
        return render_conjecture(self)

    def bound_key(self) -> tuple:
        return (self.target, self.other, self.direction,
                self.bound.slope, self.bound.intercept)


@dataclass(frozen=True)
class EngineConfig:
    """Knobs for one generation run."""

    targets: tuple[str, ...]
    directions: tuple[str, ...] = (UPPER, LOWER)
    max_hypothesis_size: int = 2
    min_support: int = 5
    filters: tuple[str, ...] = ("generality",)
    top_k: int = 10

    def __post_init__(self):
        if not self.targets:
            raise ConfigError("at least one target property is required")
        if not self.directions:
            raise ConfigError("at least one direction is required")
        for d in self.directions:
            if d not in (UPPER, LOWER):
                raise ConfigError(f"unknown direction {d!r}")
        if self.max_hypothesis_size < 0:
            raise ConfigError("max_hypothesis_size must be >= 0")
        if self.min_support < 1:
            raise ConfigError("min_support must be >= 1")
        if self.top_k < 1:
            raise ConfigError("top_k must be >= 1")
        for f in self.filters:
            if f not in ("generality", "dalmatian"):
                raise ConfigError(f"unknown filter {f!r}")


def enumerate_hypotheses(table: FeatureTable, max_size: int) -> list[Hypothesis]:
    """All predicate conjunctions up to ``max_size``, smallest first."""
    names = sorted(table.boolean)
    out = [Hypothesis()]
    for k in range(1, min(max_size, len(names)) + 1):
        out.extend(Hypothesis(combo) for combo in combinations(names, k))
    return out


def generate(table: FeatureTable, config: EngineConfig) -> list[Conjecture]:
    """Run the full fitting sweep; returns the unfiltered conjecture list.

    Output order and content are a pure function of table and config.
    """
    for target in config.targets:
        if target not in table.numeric:
            raise ConfigError(f"target {target!r} is not a numeric column")

    hypotheses = enumerate_hypotheses(table, config.max_hypothesis_size)
    out: list[Conjecture] = []
    for target in sorted(config.targets):
        for direction in sorted(config.directions):
            for other in sorted(table.numeric):
                if other == target:
                    continue
                for h in hypotheses:
                    rows = table.select_rows(h, x=other, y=target)
                    if len(rows) < config.min_support:
                        continue
                    fit = fit_linear_bound(rows, direction)
                    if fit is None:
                        continue
                    conj = Conjecture(
                        target=target,
                        other=other,
                        direction=direction,
                        hypothesis=h,
                        bound=fit.function,
                        touch_set=frozenset(table.labels[i] for i in fit.touch_set),
                        touch_number=fit.touch_number,
                        support_size=len(table.support(h)),
                    )
                    _self_check(conj, table)
                    out.append(conj)
    return out


def _self_check(conj: Conjecture, table: FeatureTable) -> None:
    # Defense in depth against fitter regressions: re-verify the inequality
    # on every hypothesis row with both values present.
    for x, y, i in table.select_rows(conj.hypothesis, conj.other, conj.target):
        if not conj.bound.holds(x, y):
            raise AssertionError(
                f"generated conjecture violated on row {table.labels[i]}: "
                f"{conj.statement}")


# ---------------------------------------------------------------------------
# Filters and ordering
# ---------------------------------------------------------------------------

def generality_filter(conjectures: Sequence[Conjecture], table: FeatureTable
                      ) -> list[Conjecture]:
    """Drop conjectures strictly less general than an identical bound.

    Within each group sharing (target, other, direction, slope, intercept),
    a conjecture whose support is a strict subset of another's is removed;
    among equal supports the lexicographically smallest hypothesis stays.
    """
    supports: dict[int, frozenset[str]] = {}
    groups: dict[tuple, list[int]] = {}
    for idx, c in enumerate(conjectures):
        supports[idx] = frozenset(table.labels[i] for i in table.support(c.hypothesis))
        groups.setdefault(c.bound_key(), []).append(idx)

    keep: set[int] = set()
    for members in groups.values():
        # equal supports: keep one representative, smallest hypothesis wins
        by_support: dict[frozenset[str], int] = {}
        for idx in members:
            sup = supports[idx]
            cur = by_support.get(sup)
            if cur is None or conjectures[idx].hypothesis.key < conjectures[cur].hypothesis.key:
                by_support[sup] = idx
        # strict subsets of any other support are removed
        for sup, idx in by_support.items():
            if not any(sup < other_sup for other_sup in by_support if other_sup != sup):
                keep.add(idx)
    return [c for i, c in enumerate(conjectures) if i in keep]


def sort_conjectures(conjectures: Sequence[Conjecture]) -> list[Conjecture]:
    """Non-increasing touch number; ties by larger support, then statement."""
    return sorted(conjectures,
                  key=lambda c: (-c.touch_number, -c.support_size, c.statement))


def dalmatian_filter(conjectures: Sequence[Conjecture]) -> list[Conjecture]:
    """Keep a conjecture only if it touches an object no earlier accepted
    conjecture of the same target and direction touched.

    Input order is acceptance order, so callers sort first.
    """
    claimed: dict[tuple[str, str], set[str]] = {}
    out = []
    for c in conjectures:
        pool = claimed.setdefault((c.target, c.direction), set())
        if c.touch_set - pool:
            pool.update(c.touch_set)
            out.append(c)
    return out


def truncate_per_group(conjectures: Sequence[Conjecture], top_k: int
                       ) -> list[Conjecture]:
    """Keep the first ``top_k`` conjectures of each (target, direction)."""
    counts: dict[tuple[str, str], int] = {}
    out = []
    for c in conjectures:
        key = (c.target, c.direction)
        if counts.get(key, 0) < top_k:
            counts[key] = counts.get(key, 0) + 1
            out.append(c)
    return out


def run_pipeline(table: FeatureTable, config: EngineConfig) -> list[Conjecture]:
    """generate, filter, sort and truncate in one deterministic pass."""
    conjectures = generate(table, config)
    if "generality" in config.filters:
        conjectures = generality_filter(conjectures, table)
    conjectures = sort_conjectures(conjectures)
    if "dalmatian" in config.filters:
        conjectures = dalmatian_filter(conjectures)
    return truncate_per_group(conjectures, config.top_k)


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _fmt_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _display(name: str) -> str:
    return DISPLAY_SYMBOLS.get(name, name)


def render_conjecture(c: Conjecture) -> str:
    """Deterministic one-line statement with unit and zero terms elided."""
    m, b = c.bound.slope, c.bound.intercept
    rel = "≤" if c.direction == UPPER else "≥"
    lhs = f"{_display(c.target)}(G)"
    var = f"{_display(c.other)}(G)"

    if m == 0:
        rhs = _fmt_fraction(b)
    else:
        if m == 1:
            rhs = var
        elif m == -1:
            rhs = f"-{var}"
        elif m.denominator == 1:
            rhs = f"{m.numerator}·{var}"
        else:
            rhs = f"({_fmt_fraction(m)})·{var}"
        if b > 0:
            rhs += f" + {_fmt_fraction(b)}"
        elif b < 0:
            rhs += f" - {_fmt_fraction(-b)}"

    statement = f"{lhs} {rel} {rhs}"
    if c.hypothesis.predicates:
        return f"If G is a {' and '.join(c.hypothesis.key)} graph, then {statement}"
    return statement


# ---------------------------------------------------------------------------
# Verification against a corpus
# ---------------------------------------------------------------------------

def find_counterexample(c: Conjecture, corpus: Sequence[Graph],
                        invariants: dict[str, Callable[[Graph], int]],
                        predicates: dict[str, Callable[[Graph], bool]],
                        ) -> Optional[tuple[str, Fraction, Fraction]]:
    """First hypothesis-satisfying graph violating the inequality, if any.

    Returns (label, lhs value, rhs value) or ``None``. Graphs on which an
    involved invariant is undefined are skipped, not counted as violations.
    Raises :class:`ConfigError` when the conjecture names unknown columns.
    """
    for name in (c.target, c.other):
        if name not in invariants:
            raise ConfigError(f"unknown invariant {name!r}")
    for name in c.hypothesis.predicates:
        if name not in predicates:
            raise ConfigError(f"unknown predicate {name!r}")

    for pos, g in enumerate(corpus, 1):
        if not all(predicates[name](g) for name in c.hypothesis.key):
            continue
        try:
            y = invariants[c.target](g)
            x = invariants[c.other](g)
        except UndefinedInvariantError:
            continue
        if not c.bound.holds(x, y):
            label = g.label if g.label else f"g{pos}"
            return (label, Fraction(y), c.bound.evaluate(x))
    return None


def touch_count_on(c: Conjecture, corpus: Sequence[Graph],
                   invariants: dict[str, Callable[[Graph], int]],
                   predicates: dict[str, Callable[[Graph], bool]]) -> int:
    """How many hypothesis-satisfying corpus graphs attain equality."""
    count = 0
    for g in corpus:
        if not all(predicates[name](g) for name in c.hypothesis.key):
            continue
        try:
            y = invariants[c.target](g)
            x = invariants[c.other](g)
        except UndefinedInvariantError:
            continue
        if c.bound.touches(x, y):
            count += 1
    return count


# ---------------------------------------------------------------------------
# Structured export (one JSON record per line)
# ---------------------------------------------------------------------------

def conjecture_to_record(c: Conjecture) -> dict:
    return {
        "target": c.target,
        "other": c.other,
        "direction": c.direction,
        "slope": [c.bound.slope.numerator, c.bound.slope.denominator],
        "intercept": [c.bound.intercept.numerator, c.bound.intercept.denominator],
        "hypothesis": list(c.hypothesis.key),
        "touch_number": c.touch_number,
        "support_size": c.support_size,
        "touch_set": sorted(c.touch_set),
        "statement": c.statement,
    }


def conjecture_from_record(record: dict) -> Conjecture:
    bound = SharpBoundingFunction(
        Fraction(*record["slope"]),
        Fraction(*record["intercept"]),
        record["direction"],
    )
    return Conjecture(
        target=record["target"],
        other=record["other"],
        direction=record["direction"],
        hypothesis=Hypothesis(record["hypothesis"]),
        bound=bound,
        touch_set=frozenset(record["touch_set"]),
        touch_number=record["touch_number"],
        support_size=record["support_size"],
    )


def write_export(conjectures: Iterable[Conjecture], path: str | Path) -> None:
    lines = [json.dumps(conjecture_to_record(c), ensure_ascii=False)
             for c in conjectures]
    Path(path).write_text("".join(line + "\n" for line in lines))


def read_export(path: str | Path) -> list[dict]:
    """Raw records; callers decide how to treat malformed entries."""
    records = []
    for line in Path(path).read_text().splitlines():
        if line.strip():
            records.append(json.loads(line))
    return records
