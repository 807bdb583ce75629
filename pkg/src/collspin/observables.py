"""Spin moments of uniaxial ground states.

Exact moments are wavefunction sums over the ladder; the analytic and
critical evaluators return the corresponding 1/N expansions.  Moments
are stored raw (un-normalized); divide by N or N^2 at presentation
time.
"""

import math
from dataclasses import dataclass

import numpy as np

from .continuum import DEFAULT_GRID, beta_coefficients
from .core import UniaxialParams, Wavefunction, ladder_minus, ladder_plus

NORM_TOL = 1e-8


@dataclass(frozen=True)
class SpinMoments:
    """Raw first and second moments of the collective spin components."""

    n_spins: int
    sx: float
    sz: float
    sz2: float
    sx2: float
    sy2: float

    @property
    def casimir(self):
        """sx2 + sy2 + sz2; equals N(N+2) in the maximum-spin sector."""
        return self.sx2 + self.sy2 + self.sz2


def spin_moments(wf: Wavefunction) -> SpinMoments:
    """Exact moments <Sx>, <Sz>, <Sz^2>, <Sx^2>, <Sy^2> of a ladder state.

    Uses the ladder sums
        <Sx>   = sum_m 2 a_m^+ phi_m phi_{m+2}
        <Sx^2> - <Sy^2> parts via sum_m a_m^+ a_m^- phi_{m-2} phi_{m+2},
    with the diagonal piece (N(N+2) - <Sz^2>)/2 shared by both.
    """
    if wf.norm_error() > NORM_TOL:
        raise ValueError("wavefunction is not normalized")
    n = wf.n_spins
    phi = wf.amps
    m = wf.m_values.astype(float)
    prob = phi * phi
    sz = float(m @ prob)
    sz2 = float((m * m) @ prob)
    aplus = ladder_plus(n, m[:-1])
    sx = float(2.0 * np.sum(aplus * phi[:-1] * phi[1:]))
    diagonal = 0.5 * (n * (n + 2.0) - sz2)
    if n >= 2:
        inner = m[1:-1]
        cross = float(
            np.sum(ladder_plus(n, inner) * ladder_minus(n, inner) * phi[:-2] * phi[2:])
        )
    else:
        cross = 0.0
    return SpinMoments(
        n_spins=n,
        sx=sx,
        sz=sz,
        sz2=sz2,
        sx2=diagonal + 2.0 * cross,
        sy2=diagonal - 2.0 * cross,
    )


def analytic_moments(params: UniaxialParams) -> SpinMoments:
    """Leading 1/N moments away from the critical point.

    Both branches of the bulk expansion; raw values follow the
    normalizations <Sx>/N, <Sz^2>/N^2, <Sx^2>/N^2, <Sy^2>/N.
    """
    if params.epsilon != 0.0:
        raise ValueError("analytic moments assume the symmetric phase epsilon = 0")
    if params.alpha == 1.0:
        raise ValueError("bulk expansion diverges at alpha = 1; use critical_moments")
    a, n = params.alpha, params.n_spins
    if a < 1.0:
        root = math.sqrt(1.0 - a)
        sx_n = 1.0 + (1.0 + (a - 2.0) / (2.0 * root)) / n
        sz2_n2 = 1.0 / (n * root)
        sx2_n2 = 1.0 + (2.0 / n) * (1.0 - 1.0 / root)
        sy2_n = root
    else:
        root = math.sqrt(a * a - 1.0)
        sx_n = 1.0 / a + 1.0 / (n * root)
        sz2_n2 = 1.0 - 1.0 / (a * a) + (2.0 / n) * (1.0 - a / root)
        sx2_n2 = 1.0 / (a * a) + (a * a + 1.0) / (n * a * root)
        sy2_n = math.sqrt(1.0 - 1.0 / (a * a))
    return SpinMoments(
        n_spins=n,
        sx=n * sx_n,
        sz=0.0,
        sz2=n * n * sz2_n2,
        sx2=n * n * sx2_n2,
        sy2=n * sy2_n,
    )


def critical_moments(n_spins, grid=DEFAULT_GRID) -> SpinMoments:
    """Leading finite-size corrections exactly at alpha = 1:

    <Sx>/N     = 1 - 2 beta1 (2N)^(-2/3)
    <Sz^2>/N^2 = 4 beta1 (2N)^(-2/3)
    <Sx^2>/N^2 = 1 - 4 beta1 (2N)^(-2/3)
    <Sy^2>/N^2 = (8 beta0 / 3) (2N)^(-4/3)
    """
    if n_spins < 1:
        raise ValueError("n_spins must be a positive integer")
    beta0, beta1 = beta_coefficients(grid)
    n = n_spins
    s23 = (2.0 * n) ** (-2.0 / 3.0)
    s43 = (2.0 * n) ** (-4.0 / 3.0)
    return SpinMoments(
        n_spins=n,
        sx=n * (1.0 - 2.0 * beta1 * s23),
        sz=0.0,
        sz2=n * n * 4.0 * beta1 * s23,
        sx2=n * n * (1.0 - 4.0 * beta1 * s23),
        sy2=n * n * (8.0 * beta0 / 3.0) * s43,
    )
