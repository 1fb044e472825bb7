"""Spectral derivatives and grid norms of a TorusField"""

from typing import Tuple, TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from .torus_field import TorusField


def _gradient_spectral(self) -> Tuple[np.ndarray, ...]:
    """Fourier coefficients of each partial derivative

    The Nyquist mode is dropped so odd derivatives stay real"""

    grid = self.grid
    return tuple(1j * k * keep * self.spectral
                 for k, keep in zip(grid.wavevectors, grid.nyquist_mask))


def gradient(self) -> Tuple["TorusField", ...]:
    """Exact derivative of the trigonometric interpolant, per axis"""

    cls = type(self)
    return tuple(cls.from_spectral(self.grid, coeffs)
                 for coeffs in self._gradient_spectral())


def linf_norm(self) -> float:
    """Max over grid samples of |value|"""

    return float(np.max(np.abs(self.values)))


def lipschitz_estimate(self) -> float:
    """Max over the grid of the Euclidean norm of the gradient"""

    squares = sum(component.values ** 2 for component in self.gradient())
    return float(np.sqrt(np.max(squares)))


def gradient_power(self, p: float) -> "TorusField":
    """|grad theta|^p pointwise, from the spectral gradient"""

    squares = sum(component.values ** 2 for component in self.gradient())
    return type(self)(self.grid, squares ** (p / 2))


def holder_seminorm(self, beta: float, samples: int, seed: int = 0) -> float:
    """Sampled C^{0,beta} seminorm of the gradient

    Max over random pairs of max_j |d_j(x) - d_j(z)| / |x - z|^beta"""

    if not 0 < beta < 1:
        raise ValueError(f"beta must lie in (0, 1), got {beta}")
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")

    grid = self.grid
    components = np.stack([c.values.ravel() for c in self.gradient()])
    size = components.shape[1]
    rng = np.random.default_rng(seed)
    first = rng.integers(0, size, samples)
    # Nonzero offset guarantees x != z
    second = (first + rng.integers(1, size, samples)) % size

    offsets = (np.stack(np.unravel_index(first, grid.shape), axis=-1)
               - np.stack(np.unravel_index(second, grid.shape), axis=-1))
    distances = grid.torus_distance(offsets)
    jumps = np.max(np.abs(components[:, first] - components[:, second]),
                   axis=0)
    return float(np.max(jumps / distances ** beta))
