"""Pattern presentation: a line-oriented text format and grayscale PGM images."""

from __future__ import annotations

from pathlib import Path
from typing import NamedTuple

import numpy as np

from .engine import Configuration, Pattern, row_in_box
from .rule import rule_radius

TEXT_MAGIC = "linca-pattern v1"


def pattern_to_text(pattern: Pattern) -> str:
    """Serialize a pattern (D <= 2): header plus zero-padded, centered rows.

    Every row is padded to the final box [-radius*t_max, radius*t_max]^D.
    In one dimension each row is one line; in two, each row is a block of
    lines in row-major order and blocks are separated by a blank line.
    """
    if pattern.dimension > 2:
        raise ValueError("pattern text format supports D <= 2")
    radius = rule_radius(pattern.rule)
    reach = radius * pattern.t_max
    header = (
        f"{TEXT_MAGIC} dim={pattern.dimension} n={pattern.modulus} "
        f"seed={pattern.seed} tmax={pattern.t_max} radius={radius}"
    )
    lo = (-reach,) * pattern.dimension
    hi = (reach,) * pattern.dimension
    blocks = []
    for row in pattern.rows:
        grid = row_in_box(row, lo, hi)
        if pattern.dimension == 1:
            blocks.append(" ".join(str(v) for v in grid))
        else:
            blocks.append("\n".join(" ".join(str(v) for v in line) for line in grid))
    separator = "\n" if pattern.dimension == 1 else "\n\n"
    return header + "\n" + separator.join(blocks) + "\n"


def render_text(pattern: Pattern) -> str:
    """Text rendering of a one-dimensional pattern (header + centered rows)."""
    if pattern.dimension != 1:
        raise ValueError("render_text supports D = 1 only; pattern_to_text handles D = 2")
    return pattern_to_text(pattern)


class ParsedPattern(NamedTuple):
    """Header fields and reconstructed rows of a pattern text stream."""

    modulus: int
    seed: int
    t_max: int
    radius: int
    dimension: int
    rows: tuple[Configuration, ...]


def parse_pattern_text(text: str) -> ParsedPattern:
    """Inverse of pattern_to_text; recovers the original per-row boxes exactly.

    Row t is cropped back to [-radius*t, radius*t]^D, which loses nothing
    because support growth confines nonzero cells to that box.
    """
    lines = text.splitlines()
    if not lines or not lines[0].startswith(TEXT_MAGIC + " "):
        raise ValueError(f"not a {TEXT_MAGIC} stream")
    fields = dict(part.split("=", 1) for part in lines[0].split()[2:])
    dimension = int(fields["dim"])
    n = int(fields["n"])
    seed = int(fields["seed"])
    t_max = int(fields["tmax"])
    radius = int(fields["radius"])
    reach = radius * t_max
    width = 2 * reach + 1

    def crop(grid: np.ndarray, t: int) -> Configuration:
        extent = radius * t
        window = (slice(reach - extent, reach + extent + 1),) * dimension
        origin = (-extent,) * dimension
        return Configuration(n, dimension, origin, grid[window].copy())

    rows = []
    if dimension == 1:
        body = lines[1:]
        if len(body) != t_max + 1:
            raise ValueError(f"expected {t_max + 1} rows, found {len(body)}")
        for t, line in enumerate(body):
            values = np.array([int(v) for v in line.split()], dtype=np.int64)
            if values.size != width:
                raise ValueError(f"row {t} has {values.size} cells, expected {width}")
            rows.append(crop(values, t))
    elif dimension == 2:
        blocks: list[list[str]] = [[]]
        for line in lines[1:]:
            if line.strip() == "":
                if blocks[-1]:
                    blocks.append([])
            else:
                blocks[-1].append(line)
        if blocks and not blocks[-1]:
            blocks.pop()
        if len(blocks) != t_max + 1:
            raise ValueError(f"expected {t_max + 1} blocks, found {len(blocks)}")
        for t, block in enumerate(blocks):
            grid = np.array([[int(v) for v in line.split()] for line in block], dtype=np.int64)
            if grid.shape != (width, width):
                raise ValueError(f"block {t} has shape {grid.shape}, expected {(width, width)}")
            rows.append(crop(grid, t))
    else:
        raise ValueError("pattern text format supports D <= 2")
    return ParsedPattern(n, seed, t_max, radius, dimension, tuple(rows))


def state_pixels(states: np.ndarray, n: int) -> np.ndarray:
    """Grayscale mapping: 0 is white, positive states darken with value."""
    shade = 255 - (states * 255) // (n - 1)
    return np.where(states == 0, 255, shade).astype(np.uint8)


def write_pgm(path: Path, pixels: np.ndarray) -> None:
    """Binary PGM (P5), maxval 255, no comment lines."""
    height, width = pixels.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{width} {height}\n255\n".encode("ascii"))
        fh.write(pixels.astype(np.uint8).tobytes())


def render_image(pattern: Pattern, path) -> list[Path]:
    """Write the pattern as grayscale PGM image(s) and return the paths.

    One dimension gives a single image with time increasing downward and
    space across. Two dimensions give one image per timestep, all padded to
    the final box, named ``<stem>_t<zero-padded t>.pgm``.
    """
    if pattern.dimension > 2:
        raise ValueError("render supports D <= 2")
    path = Path(path)
    n = pattern.modulus
    reach = rule_radius(pattern.rule) * pattern.t_max
    if pattern.dimension == 1:
        grid = np.stack([row_in_box(row, (-reach,), (reach,)) for row in pattern.rows])
        write_pgm(path, state_pixels(grid, n))
        return [path]
    digits = max(3, len(str(pattern.t_max)))
    suffix = path.suffix or ".pgm"
    written = []
    for t, row in enumerate(pattern.rows):
        frame = row_in_box(row, (-reach, -reach), (reach, reach))
        frame_path = path.with_name(f"{path.stem}_t{t:0{digits}d}{suffix}")
        write_pgm(frame_path, state_pixels(frame, n))
        written.append(frame_path)
    return written
