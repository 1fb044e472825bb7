from math import floor, log2
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from .torus_grid import TorusGrid


class PairSample:
    """Two distinct grid points and their torus distance"""

    __slots__ = ("__x", "__y", "__separation", "__spacing")

    def __init__(self,
                 x: Tuple[int, ...],
                 y: Tuple[int, ...],
                 separation: float,
                 spacing: float = 1.0):

        assert tuple(x) != tuple(y), f"Pair must be distinct, got {x}"
        assert separation > 0, f"Separation must be positive: {separation}"
        self.__x: Tuple[int, ...] = tuple(int(i) for i in x)
        self.__y: Tuple[int, ...] = tuple(int(i) for i in y)
        self.__separation: float = float(separation)
        self.__spacing: float = float(spacing)

    @property
    def x(self) -> Tuple[int, ...]:
        """Grid index of the first point"""

        return self.__x

    @property
    def y(self) -> Tuple[int, ...]:
        return self.__y

    @property
    def separation(self) -> float:
        """Torus geodesic distance xi = |x - y|"""

        return self.__separation

    @property
    def x_point(self) -> Tuple[float, ...]:
        return tuple(self.__spacing * i for i in self.__x)

    @property
    def y_point(self) -> Tuple[float, ...]:
        return tuple(self.__spacing * i for i in self.__y)

    def __eq__(self, other: Any):
        if isinstance(other, PairSample):
            return (self.x, self.y) == (other.x, other.y)
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __repr__(self) -> str:
        return f"PairSample({self.x}, {self.y}, xi={self.separation:.6g})"


def _offsets_by_bin(grid: TorusGrid) -> Dict[int, np.ndarray]:
    """Minimum image integer offsets grouped by dyadic separation bin

    Bin b holds offsets with 2^b h <= |offset| < 2^{b+1} h"""

    n = grid.points_per_axis
    # Per axis offsets -N/2+1 .. N/2 are the minimum images
    axis = np.arange(-n // 2 + 1, n // 2 + 1)
    mesh = np.meshgrid(*([axis] * grid.dim), indexing="ij")
    offsets = np.stack([m.ravel() for m in mesh], axis=-1)
    lengths = np.sqrt(np.sum(offsets ** 2, axis=-1))
    nonzero = lengths > 0
    offsets, lengths = offsets[nonzero], lengths[nonzero]
    bins = np.floor(np.log2(lengths) + 1e-12).astype(int)
    return {int(b): offsets[bins == b] for b in np.unique(bins)}


def sample_pairs(grid: TorusGrid, count: int, seed: int) -> List[PairSample]:
    """Reproducible pairs stratified round robin over dyadic bins"""

    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")

    rng = np.random.default_rng(seed)
    by_bin = _offsets_by_bin(grid)
    bins = sorted(by_bin)
    n = grid.points_per_axis
    pairs: List[PairSample] = []
    for i in range(count):
        candidates = by_bin[bins[i % len(bins)]]
        offset = candidates[rng.integers(0, len(candidates))]
        x = rng.integers(0, n, grid.dim)
        y = (x + offset) % n
        pairs.append(PairSample(tuple(x), tuple(y),
                                float(grid.torus_distance(offset)),
                                grid.spacing))
    return pairs


def near_diagonal_pairs(grid: TorusGrid,
                        max_cells: float = 4) -> List[PairSample]:
    """Every pair of grid points with separation <= max_cells * h

    Each unordered pair appears once"""

    n = grid.points_per_axis
    reach = int(floor(max_cells))
    axis = np.arange(-reach, reach + 1)
    mesh = np.meshgrid(*([axis] * grid.dim), indexing="ij")
    offsets = np.stack([m.ravel() for m in mesh], axis=-1)
    lengths = np.sqrt(np.sum(offsets ** 2, axis=-1))
    # Keep one offset of each +/- pair: first nonzero entry positive
    first_nonzero = np.array([o[np.flatnonzero(o)[0]] if np.any(o) else 0
                              for o in offsets])
    keep = (lengths > 0) & (lengths <= max_cells) & (first_nonzero > 0)

    points = np.stack([m.ravel() for m in np.meshgrid(
        *([np.arange(n)] * grid.dim), indexing="ij")], axis=-1)
    pairs: List[PairSample] = []
    for offset in offsets[keep]:
        separation = float(grid.torus_distance(offset))
        for x in points:
            pairs.append(PairSample(tuple(x), tuple((x + offset) % n),
                                    separation, grid.spacing))
    return pairs


def pair_arrays(grid: TorusGrid,
                pairs: Sequence[PairSample]
                ) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Flat indices of both points and the separations, for vector scans"""

    xs = np.array([p.x for p in pairs]).reshape(len(pairs), grid.dim)
    ys = np.array([p.y for p in pairs]).reshape(len(pairs), grid.dim)
    flat_x = np.ravel_multi_index(tuple(xs.T), grid.shape)
    flat_y = np.ravel_multi_index(tuple(ys.T), grid.shape)
    separations = np.array([p.separation for p in pairs])
    return flat_x, flat_y, separations


class PairBatch:
    """Pairs with their index arrays built once, for repeated scans"""

    def __init__(self, grid: TorusGrid, pairs: Sequence[PairSample]):
        if len(pairs) == 0:
            raise ValueError("pairs must be nonempty")
        self.grid: TorusGrid = grid
        self.pairs: Tuple[PairSample, ...] = tuple(pairs)
        (self.flat_x,
         self.flat_y,
         self.separations) = pair_arrays(grid, self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __add__(self, other: "PairBatch") -> "PairBatch":
        return PairBatch(self.grid, self.pairs + other.pairs)


def dyadic_bin(grid: TorusGrid, separation: float) -> int:
    """Index k of the bin [2^k h, 2^{k+1} h) holding separation"""

    return int(floor(log2(separation / grid.spacing) + 1e-12))


__all__ = ["PairSample",
           "PairBatch",
           "sample_pairs",
           "near_diagonal_pairs",
           "pair_arrays",
           "dyadic_bin"]
