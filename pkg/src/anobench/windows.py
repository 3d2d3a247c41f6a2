"""Weight vectors for the supported rolling-average window kinds.

All windows use the symmetric convention (endpoints included): with N = length
and n = 0..N-1,

    rectangular  w[n] = 1
    triangular   w[n] = 1 - |2n/(N-1) - 1|
    hamming      w[n] = 0.54 - 0.46 cos(2 pi n / (N-1))
    hann         w[n] = 0.5 - 0.5 cos(2 pi n / (N-1))
    blackman     w[n] = 0.42 - 0.5 cos(2 pi n / (N-1)) + 0.08 cos(4 pi n / (N-1))
    bohman       w[n] = (1-x) cos(pi x) + sin(pi x)/pi,  x = |2n/(N-1) - 1|

A length-1 window is [1.0] for every kind (the cosine forms would be 0/0).
Weights are non-negative with maximum 1; triangular, hann, blackman and
bohman touch zero at the edges (bohman endpoints are exactly 0), so
downstream code must tolerate zero edge weights.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ZeroLength


class WindowKind(str, enum.Enum):
    RECTANGULAR = "rectangular"
    TRIANGULAR = "triangular"
    HAMMING = "hamming"
    HANN = "hann"
    BLACKMAN = "blackman"
    BOHMAN = "bohman"

    @classmethod
    def parse(cls, name: str) -> "WindowKind":
        """Parse a lowercase kind name; unknown names are rejected."""
        try:
            return cls(name)
        except ValueError:
            valid = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown window kind {name!r} (expected one of: {valid})") from None


@dataclass(frozen=True)
class WindowSpec:
    kind: WindowKind
    length: int

    def __post_init__(self):
        if not isinstance(self.length, int) or isinstance(self.length, bool):
            raise ZeroLength(f"window length must be a positive integer, got {self.length!r}")
        if self.length < 1:
            raise ZeroLength(f"window length must be >= 1, got {self.length}")


def generate_window(spec: WindowSpec) -> np.ndarray:
    """Return the ``spec.length`` weights of the requested window kind."""
    n_pts = spec.length
    if n_pts == 1:
        return np.ones(1)
    n = np.arange(n_pts, dtype=np.float64)
    phase = 2.0 * np.pi * n / (n_pts - 1)
    if spec.kind is WindowKind.RECTANGULAR:
        w = np.ones(n_pts)
    elif spec.kind is WindowKind.TRIANGULAR:
        w = 1.0 - np.abs(2.0 * n / (n_pts - 1) - 1.0)
    elif spec.kind is WindowKind.HAMMING:
        w = 0.54 - 0.46 * np.cos(phase)
    elif spec.kind is WindowKind.HANN:
        w = 0.5 - 0.5 * np.cos(phase)
    elif spec.kind is WindowKind.BLACKMAN:
        w = 0.42 - 0.5 * np.cos(phase) + 0.08 * np.cos(2.0 * phase)
    elif spec.kind is WindowKind.BOHMAN:
        x = np.abs(2.0 * n / (n_pts - 1) - 1.0)
        w = (1.0 - x) * np.cos(np.pi * x) + np.sin(np.pi * x) / np.pi
        # sin(pi) is ~1e-16 in floats; the endpoints are exactly zero
        w[0] = w[-1] = 0.0
    else:  # pragma: no cover - closed enumeration
        raise ValueError(f"unhandled window kind {spec.kind!r}")
    # cosine round-off can dip a few ulp below zero at the taper edges
    return np.maximum(w, 0.0)
