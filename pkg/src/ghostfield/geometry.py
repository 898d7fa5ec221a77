"""Unit vectors on the sphere: analyzer orientations and hidden spin directions."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

UNIT_TOL = 1e-12


@dataclass(frozen=True)
class Direction3:
    """Unit vector on S². Components must satisfy x² + y² + z² = 1 within 1e-12."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        norm_sq = self.x * self.x + self.y * self.y + self.z * self.z
        if not math.isfinite(norm_sq) or abs(norm_sq - 1.0) > UNIT_TOL:
            raise ValueError(f"direction must be a unit vector, got |v|^2 = {norm_sq!r}")

    @classmethod
    def normalized(cls, x: float, y: float, z: float) -> Direction3:
        """Scale an arbitrary nonzero vector onto the unit sphere."""
        norm = math.sqrt(x * x + y * y + z * z)
        if not math.isfinite(norm) or norm == 0.0:
            raise ValueError(f"cannot normalize vector ({x}, {y}, {z})")
        return cls(x / norm, y / norm, z / norm)

    @classmethod
    def from_array(cls, v: np.ndarray) -> Direction3:
        v = np.asarray(v, dtype=float)
        if v.shape != (3,):
            raise ValueError(f"expected a 3-vector, got shape {v.shape}")
        return cls(float(v[0]), float(v[1]), float(v[2]))

    @classmethod
    def from_polar_angle(cls, alpha: float) -> Direction3:
        """Direction at angle alpha (radians) from +z, in the x-z plane."""
        return cls(math.sin(alpha), 0.0, math.cos(alpha))

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def dot(self, other: Direction3) -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def angle_to(self, other: Direction3) -> float:
        """Full angle between the two directions, in [0, pi]."""
        return math.acos(min(1.0, max(-1.0, self.dot(other))))

    def rotated(self, rotation: np.ndarray) -> Direction3:
        """Apply a 3x3 rotation matrix."""
        return Direction3.from_array(np.asarray(rotation, dtype=float) @ self.as_array())

    def __neg__(self) -> Direction3:
        return Direction3(-self.x, -self.y, -self.z)


def random_direction(rng: np.random.Generator) -> Direction3:
    """Uniform direction on S² via z ~ U[-1, 1), phi ~ U[0, 2pi)."""
    z = 2.0 * rng.random() - 1.0
    phi = 2.0 * math.pi * rng.random()
    s = math.sqrt(max(0.0, 1.0 - z * z))
    return Direction3(s * math.cos(phi), s * math.sin(phi), z)
