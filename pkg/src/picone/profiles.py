"""Radial geometries and discretized radial profiles."""

import csv
import json
from dataclasses import dataclass
from math import gamma, pi
from typing import Optional

import numpy as np

from .errors import BadRange


@dataclass(frozen=True)
class Geometry:
    """An interval (as a 1-d 'ball' of half-length ``radius``) or an N-ball."""

    kind: str
    dimension: int
    radius: float

    def __post_init__(self):
        if self.kind not in ("interval", "ball"):
            raise BadRange(f"unknown geometry kind {self.kind!r}")
        if self.kind == "interval" and self.dimension != 1:
            raise BadRange("interval geometry is one-dimensional")
        if self.kind == "ball" and self.dimension < 2:
            raise BadRange("ball geometry needs dimension >= 2")
        if not self.radius > 0.0:
            raise BadRange("radius must be positive")

    @classmethod
    def ball(cls, dimension: int, radius: float = 1.0) -> "Geometry":
        return cls(kind="ball", dimension=dimension, radius=radius)

    @classmethod
    def interval(cls, length: float = 1.0) -> "Geometry":
        """Interval of the given length, solved radially about its midpoint."""
        return cls(kind="interval", dimension=1, radius=length / 2.0)

    @property
    def sphere_measure(self) -> float:
        """Surface measure of the unit sphere in this dimension (2 for N=1)."""
        n = self.dimension
        return 2.0 * pi ** (n / 2.0) / gamma(n / 2.0)


@dataclass
class RadialProfile:
    """Radial function sampled on [0, R] with its derivative."""

    grid: np.ndarray
    values: np.ndarray
    derivs: np.ndarray
    dimension: int
    r_exp: Optional[float] = None
    eigenvalue: Optional[float] = None
    lr_norm: Optional[float] = None
    grad_lr_norm: Optional[float] = None

    @property
    def radius(self) -> float:
        return float(self.grid[-1])

    def scaled(self, k: float) -> "RadialProfile":
        return RadialProfile(
            grid=self.grid,
            values=k * self.values,
            derivs=k * self.derivs,
            dimension=self.dimension,
            r_exp=self.r_exp,
            eigenvalue=self.eigenvalue,
            lr_norm=None if self.lr_norm is None else k * self.lr_norm,
            grad_lr_norm=None if self.grad_lr_norm is None else k * self.grad_lr_norm,
        )

    def norm(self, r: float, of_gradient: bool = False) -> float:
        """L^r norm of the profile (or of its gradient) over the domain."""
        from scipy.integrate import simpson

        sigma = 2.0 * pi ** (self.dimension / 2.0) / gamma(self.dimension / 2.0)
        f = np.abs(self.derivs if of_gradient else self.values) ** r
        val = sigma * simpson(self.grid ** (self.dimension - 1) * f, x=self.grid)
        return float(val ** (1.0 / r))

    def sup_distance(self, other: "RadialProfile") -> float:
        return float(np.max(np.abs(self.values - other.values)))

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["r", "u", "du"])
            for r, u, du in zip(self.grid, self.values, self.derivs):
                w.writerow([repr(float(r)), repr(float(u)), repr(float(du))])

    def eigendata_json(self) -> str:
        return json.dumps(
            {
                "r_exp": self.r_exp,
                "N": self.dimension,
                "radius": self.radius,
                "lambda1": self.eigenvalue,
                "lr_norm": self.lr_norm,
                "grad_lr_norm": self.grad_lr_norm,
            }
        )


@dataclass
class WeightSpec:
    """Sampled radial weight; sign changes are allowed."""

    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
