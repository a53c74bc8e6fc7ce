"""Finite-support configurations on the integer lattice and exact evolution.

The engine is deliberately naive-but-exact: row t is computed from row t-1
by a dense sweep, with no fast exponentiation or transform shortcuts, so it
is the easiest code in the package to trust. Independent recomputation
paths live in the oracle module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .rule import TransitionRule, rule_radius
from .zmod import check_modulus, check_residue

MAX_DIMENSION = 3


def _site_tuple(site, dimension: int) -> tuple[int, ...]:
    if isinstance(site, (int, np.integer)):
        site = (site,)
    site = tuple(int(x) for x in site)
    if len(site) != dimension:
        raise ValueError(f"site {site} has arity {len(site)}, expected {dimension}")
    return site


@dataclass(frozen=True, eq=False)
class Configuration:
    """States over a finite axis-aligned box; sites outside the box are 0.

    ``cells`` is indexed box-relative: lattice site i lives at
    ``cells[i - origin]``. Zeros may be stored inside the box, but every
    nonzero cell is inside it.
    """

    modulus: int
    dimension: int
    origin: tuple[int, ...]
    cells: np.ndarray

    def __post_init__(self):
        check_modulus(self.modulus)
        if not 1 <= self.dimension <= MAX_DIMENSION:
            raise ValueError(f"dimension must be in [1, {MAX_DIMENSION}], got {self.dimension}")
        if len(self.origin) != self.dimension or self.cells.ndim != self.dimension:
            raise ValueError("origin and cell array must match the dimension")
        if self.cells.dtype != np.int64:
            object.__setattr__(self, "cells", self.cells.astype(np.int64))
        if self.cells.size == 0:
            raise ValueError("cell array must be nonempty")
        if self.cells.min() < 0 or self.cells.max() >= self.modulus:
            raise ValueError("cell values must be reduced to [0, n)")

    @property
    def box(self) -> tuple[tuple[int, int], ...]:
        """Inclusive (lo, hi) bounds of the stored box, per axis."""
        return tuple((o, o + extent - 1) for o, extent in zip(self.origin, self.cells.shape))

    def value_at(self, site) -> int:
        """State at a lattice site; 0 outside the stored box."""
        index = tuple(
            s - o for s, o in zip(_site_tuple(site, self.dimension), self.origin)
        )
        if any(i < 0 or i >= extent for i, extent in zip(index, self.cells.shape)):
            return 0
        return int(self.cells[index])

    def to_dict(self) -> dict:
        """Nonzero cells keyed by site (plain int keys in one dimension)."""
        out = {}
        for index in np.argwhere(self.cells):
            site = tuple(int(i) + o for i, o in zip(index, self.origin))
            key = site[0] if self.dimension == 1 else site
            out[key] = int(self.cells[tuple(index)])
        return out


def single_site_seed(n: int, dimension: int, a: int) -> Configuration:
    """The configuration holding state a at the origin and 0 everywhere else."""
    check_modulus(n)
    if not 1 <= dimension <= MAX_DIMENSION:
        raise ValueError(f"dimension must be in [1, {MAX_DIMENSION}], got {dimension}")
    if a == 0:
        raise ValueError("seed must be nonzero")
    check_residue(a, n)
    cells = np.full((1,) * dimension, a, dtype=np.int64)
    return Configuration(n, dimension, (0,) * dimension, cells)


def step(config: Configuration, rule: TransitionRule) -> Configuration:
    """One synchronous update: out[i] = sum_j c_j * in[i + v_j] mod n.

    The output box is the input box grown by the rule radius on every side,
    which covers every site where a nonzero cell can appear. Coefficients
    are reduced mod n here (floor-mod, result in [0, n)); reducing after
    each term keeps intermediates below n**2, safely inside int64.
    """
    if rule.dimension != config.dimension:
        raise ValueError(
            f"rule dimension {rule.dimension} != configuration dimension {config.dimension}"
        )
    n = config.modulus
    radius = rule_radius(rule)
    in_shape = config.cells.shape
    out_shape = tuple(extent + 2 * radius for extent in in_shape)
    acc = np.zeros(out_shape, dtype=np.int64)
    for term in rule.terms:
        c = term.coefficient % n
        if c == 0:
            continue
        window = tuple(
            slice(radius - v, radius - v + extent) for v, extent in zip(term.offset, in_shape)
        )
        acc[window] += c * config.cells
        acc[window] %= n
    origin = tuple(o - radius for o in config.origin)
    return Configuration(n, config.dimension, origin, acc)


@dataclass(frozen=True, eq=False)
class Pattern:
    """Rows T^0 u, ..., T^t_max u of one seed's evolution under a fixed rule."""

    modulus: int
    rule: TransitionRule
    seed: int
    rows: tuple[Configuration, ...]

    @property
    def t_max(self) -> int:
        return len(self.rows) - 1

    @property
    def dimension(self) -> int:
        return self.rule.dimension


def evolve(n: int, rule: TransitionRule, a: int, t_max: int) -> Pattern:
    """Evolve the single-site seed a for t_max steps.

    Row t is stored on the box [-radius*t, radius*t]^D whether or not its
    outer cells are zero, so row shapes are a function of (rule, t) only.
    """
    if t_max < 0:
        raise ValueError(f"t_max must be >= 0, got {t_max}")
    rows = [single_site_seed(n, rule.dimension, a)]
    for _ in range(t_max):
        rows.append(step(rows[-1], rule))
    return Pattern(n, rule, a, tuple(rows))


def reachable_states(pattern: Pattern) -> set[int]:
    """Every state stored anywhere in the rows.

    This is the truncation at horizon t_max of the full reachable-state set:
    rows beyond the pattern's horizon could still introduce new states.
    """
    states: set[int] = set()
    for row in pattern.rows:
        states.update(int(v) for v in np.unique(row.cells))
    return states


def row_in_box(config: Configuration, lo: tuple[int, ...], hi: tuple[int, ...]) -> np.ndarray:
    """Copy a configuration into a dense array spanning [lo, hi], zero-padded.

    The requested box must contain the stored box.
    """
    shape = tuple(h - l + 1 for l, h in zip(lo, hi))
    start = tuple(o - l for o, l in zip(config.origin, lo))
    if any(s < 0 for s in start) or any(
        s + extent > full for s, extent, full in zip(start, config.cells.shape, shape)
    ):
        raise ValueError("target box does not contain the stored box")
    out = np.zeros(shape, dtype=np.int64)
    window = tuple(slice(s, s + extent) for s, extent in zip(start, config.cells.shape))
    out[window] = config.cells
    return out
