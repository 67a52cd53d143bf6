"""Per-graph property tables and hypothesis-conditioned row selection.

A table maps an ordered corpus of labeled graphs to numeric invariant
columns (cells may be missing where an invariant is undefined) and Boolean
predicate columns. Tables are pure functions of corpus and registries and
can be cached as tab-separated text keyed by a corpus digest, because the
exact solvers are the expensive part of a run.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence

from .errors import ConfigError, UndefinedInvariantError
from .graph6 import to_graph6
from .graphs import Graph
from .invariants import standard_invariants
from .predicates import standard_predicates


@dataclass(frozen=True, init=False)
class Hypothesis:
    """A conjunction of Boolean column names; empty means all objects."""

    predicates: frozenset[str]

    def __init__(self, predicates=()):
        object.__setattr__(self, "predicates", frozenset(predicates))

    @property
    def key(self) -> tuple[str, ...]:
        """Sorted name tuple; the canonical identity and sort key."""
        return tuple(sorted(self.predicates))

    def describe(self) -> str:
        return " and ".join(self.key) if self.predicates else "all objects"

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"Hypothesis({list(self.key)!r})"


@dataclass(frozen=True)
class FeatureTable:
    """Numeric and Boolean property columns over an ordered corpus."""

    labels: tuple[str, ...]
    numeric: dict[str, tuple[Optional[int], ...]]
    boolean: dict[str, tuple[bool, ...]]

    def __post_init__(self):
        n = len(self.labels)
        if n == 0:
            raise ConfigError("empty corpus")
        if len(set(self.labels)) != n:
            raise ConfigError("corpus labels are not unique")
        if len(self.numeric) < 2:
            raise ConfigError("a feature table needs at least two numeric columns")
        for name, col in list(self.numeric.items()) + list(self.boolean.items()):
            if len(col) != n:
                raise ConfigError(f"column {name!r} has wrong length")
        overlap = set(self.numeric) & set(self.boolean)
        if overlap:
            raise ConfigError(f"column names reused across kinds: {sorted(overlap)}")

    @property
    def n_rows(self) -> int:
        return len(self.labels)

    def support(self, h: Hypothesis) -> tuple[int, ...]:
        """Row indices where every predicate of the hypothesis holds."""
        for name in h.predicates:
            if name not in self.boolean:
                raise ConfigError(f"unknown Boolean column {name!r}")
        cols = [self.boolean[name] for name in h.key]
        return tuple(i for i in range(self.n_rows) if all(col[i] for col in cols))

    def select_rows(self, h: Hypothesis, x: str, y: str
                    ) -> list[tuple[int, int, int]]:
        """Rows satisfying ``h`` with both values present, as (x, y, row index)."""
        if x == y:
            raise ConfigError("x and y columns must differ")
        for name in (x, y):
            if name not in self.numeric:
                raise ConfigError(f"unknown numeric column {name!r}")
        xs, ys = self.numeric[x], self.numeric[y]
        return [(xs[i], ys[i], i) for i in self.support(h)
                if xs[i] is not None and ys[i] is not None]


def build_table(corpus: Sequence[Graph],
                invariants: dict[str, Callable[[Graph], int]] | None = None,
                predicates: dict[str, Callable[[Graph], bool]] | None = None,
                ) -> FeatureTable:
    """Evaluate both registries on every corpus graph.

    Graphs without labels are named ``g<position>``. An invariant that raises
    :class:`UndefinedInvariantError` leaves a missing cell.
    """
    if not corpus:
        raise ConfigError("empty corpus")
    invariants = invariants if invariants is not None else standard_invariants()
    predicates = predicates if predicates is not None else standard_predicates()

    labels = tuple(g.label if g.label else f"g{i}" for i, g in enumerate(corpus, 1))
    numeric: dict[str, tuple[Optional[int], ...]] = {}
    for name, fn in invariants.items():
        cells = []
        for g in corpus:
            try:
                cells.append(fn(g))
            except UndefinedInvariantError:
                cells.append(None)
        numeric[name] = tuple(cells)
    boolean = {name: tuple(fn(g) for g in corpus)
               for name, fn in predicates.items()}
    return FeatureTable(labels, numeric, boolean)


# ---------------------------------------------------------------------------
# Cache: one TSV per corpus digest
# ---------------------------------------------------------------------------

def corpus_digest(corpus: Sequence[Graph]) -> str:
    """Content digest of a labeled corpus (labels plus canonical graph6)."""
    text = "\n".join(f"{g.label or ''} {to_graph6(g)}" for g in corpus)
    return hashlib.sha256(text.encode()).hexdigest()


def save_table(table: FeatureTable, path: str | Path) -> None:
    """Write the table as TSV: label column first, missing cells empty."""
    cols = list(table.numeric) + list(table.boolean)
    lines = ["\t".join(["label"] + cols)]
    for i, label in enumerate(table.labels):
        cells = [label]
        for name in table.numeric:
            v = table.numeric[name][i]
            cells.append("" if v is None else str(v))
        for name in table.boolean:
            cells.append("true" if table.boolean[name][i] else "false")
        lines.append("\t".join(cells))
    Path(path).write_text("\n".join(lines) + "\n")


def load_table(path: str | Path,
               numeric_names: Sequence[str],
               boolean_names: Sequence[str]) -> FeatureTable:
    """Read a TSV written by :func:`save_table`.

    The caller says which columns are numeric and which Boolean; column order
    in the file is preserved.
    """
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise ConfigError(f"empty table file {path}")
    header = lines[0].split("\t")
    if header[:1] != ["label"]:
        raise ConfigError(f"table file {path} lacks a label column")
    names = header[1:]
    unknown = [c for c in names if c not in set(numeric_names) | set(boolean_names)]
    if unknown:
        raise ConfigError(f"table file has unexpected columns {unknown}")

    labels: list[str] = []
    raw: dict[str, list[str]] = {name: [] for name in names}
    for lineno, line in enumerate(lines[1:], start=2):
        cells = line.split("\t")
        if len(cells) != len(header):
            raise ConfigError(f"{path}:{lineno}: wrong cell count")
        labels.append(cells[0])
        for name, cell in zip(names, cells[1:]):
            raw[name].append(cell)

    numeric: dict[str, tuple[Optional[int], ...]] = {}
    boolean: dict[str, tuple[bool, ...]] = {}
    for name in names:
        if name in set(numeric_names):
            numeric[name] = tuple(None if c == "" else int(c) for c in raw[name])
        else:
            boolean[name] = tuple(c == "true" for c in raw[name])
    return FeatureTable(tuple(labels), numeric, boolean)


def load_or_build_table(corpus: Sequence[Graph],
                        cache_dir: str | Path | None = None,
                        invariants: dict[str, Callable[[Graph], int]] | None = None,
                        predicates: dict[str, Callable[[Graph], bool]] | None = None,
                        ) -> FeatureTable:
    """Build the feature table, reusing a digest-keyed TSV cache when possible.

    A cached file is reused only when it carries every requested column; a
    narrower cache is rebuilt and overwritten.
    """
    invariants = invariants if invariants is not None else standard_invariants()
    predicates = predicates if predicates is not None else standard_predicates()
    if cache_dir is None:
        return build_table(corpus, invariants, predicates)

    cache = Path(cache_dir)
    cache.mkdir(parents=True, exist_ok=True)
    path = cache / f"{corpus_digest(corpus)}.tsv"
    if path.exists():
        try:
            table = load_table(path, list(invariants), list(predicates))
        except (ConfigError, ValueError):
            table = None
        if table is not None \
                and set(table.numeric) >= set(invariants) \
                and set(table.boolean) >= set(predicates):
            return table
    table = build_table(corpus, invariants, predicates)
    save_table(table, path)
    return table
