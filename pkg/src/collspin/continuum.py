"""Large-N continuum approximations for the uniaxial model.

Away from the transition the ground state is Gaussian in m (one peak
below alpha = 1, a symmetric two-peak superposition above) with simple
1/N energy corrections.  In the critical region the problem collapses,
after rescaling n = m (2N)^{-2/3}, onto a one-parameter quartic
oscillator -phi'' + (zeta n^2 + n^4) phi = e0(zeta) phi with
zeta = (2N)^{2/3} (1 - alpha), whose spectral constants fix every
leading finite-size exponent and prefactor.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import tridiag
from .core import TridiagonalMatrix, UniaxialParams, Wavefunction
from .errors import GridTooSmallError

# Relative refinement tolerance accepted before a grid counts as
# unresolved; the returned Richardson value is far more accurate.
_REFINE_RTOL = 1e-4


@dataclass(frozen=True)
class GridSpec:
    """Uniform finite-difference grid on [-half_width, half_width]."""

    half_width: float = 10.0
    step: float = 5e-3
    richardson: bool = True

    def __post_init__(self):
        if self.half_width <= 0 or self.step <= 0:
            raise ValueError("grid half-width and step must be positive")
        if self.step >= self.half_width:
            raise ValueError("grid step must be smaller than the half-width")


DEFAULT_GRID = GridSpec()


@dataclass(frozen=True)
class QuarticSolution:
    """Lowest eigenpair of the scaled critical equation on a grid."""

    zeta: float
    e0: float
    n_grid: np.ndarray
    phi: np.ndarray
    grid_half_width: float
    grid_step: float

    def __post_init__(self):
        g = np.asarray(self.n_grid, dtype=float)
        f = np.asarray(self.phi, dtype=float)
        if g.shape != f.shape:
            raise ValueError("grid and amplitudes must have matching shapes")
        g.setflags(write=False)
        f.setflags(write=False)
        object.__setattr__(self, "n_grid", g)
        object.__setattr__(self, "phi", f)

    def norm(self):
        """Trapezoidal integral of phi^2 (should be 1)."""
        return float(np.trapz(self.phi**2, self.n_grid))


def z0_minima(alpha):
    """Locations of the minima of the classical energy surface.

    A single minimum at z = 0 up to alpha = 1; beyond it the symmetric
    pair +-sqrt(1 - 1/alpha^2).
    """
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    if alpha <= 1.0:
        return (0.0,)
    z0 = math.sqrt(1.0 - 1.0 / alpha**2)
    return (-z0, z0)


def energy_thermodynamic(alpha, delta):
    """Ground-state energy per spin in the N -> infinity limit."""
    if alpha < 0 or delta < 0:
        raise ValueError("alpha and delta must be non-negative")
    if alpha <= 1.0:
        return -0.5 * delta
    return -0.25 * delta * (alpha + 1.0 / alpha)


def energy_analytic(params: UniaxialParams):
    """Energy per spin including the leading 1/N correction.

    -(delta/2) (1 + (1 - sqrt(1-alpha))/N)                   alpha <= 1
    -(delta/2) ((alpha + 1/alpha)/2 + (alpha - sqrt(alpha^2-1))/N)  otherwise
    """
    if params.epsilon != 0.0:
        raise ValueError("analytic energies assume the symmetric phase epsilon = 0")
    a, d, n = params.alpha, params.delta, params.n_spins
    if a <= 1.0:
        return -0.5 * d * (1.0 + (1.0 - math.sqrt(1.0 - a)) / n)
    return -0.5 * d * (0.5 * (a + 1.0 / a) + (a - math.sqrt(a * a - 1.0)) / n)


def gaussian_wavefunction(params: UniaxialParams) -> Wavefunction:
    """Continuum ground-state profile sampled on the discrete ladder.

    Below the transition a single Gaussian exp(-k m^2 / 4N) with
    k = sqrt(1 - alpha); above it the symmetric superposition of two
    Gaussians centered at +-m0 = +-N sqrt(1 - 1/alpha^2) with width
    parameter kbar = alpha sqrt(alpha^2 - 1).  Amplitudes are
    renormalized on the ladder, where the continuum prefactor is only
    asymptotic.
    """
    if params.epsilon != 0.0:
        raise ValueError("continuum wavefunctions assume epsilon = 0")
    if params.alpha == 1.0:
        raise ValueError(
            "Gaussian width diverges at alpha = 1; use quartic_ground for "
            "the critical profile"
        )
    n = params.n_spins
    m = np.arange(-n, n + 1, 2, dtype=float)
    if params.alpha < 1.0:
        k = math.sqrt(1.0 - params.alpha)
        amps = np.exp(-k * m * m / (4.0 * n))
    else:
        a = params.alpha
        kbar = a * math.sqrt(a * a - 1.0)
        m0 = n * math.sqrt(1.0 - 1.0 / (a * a))
        amps = np.exp(-kbar * (m - m0) ** 2 / (4.0 * n)) + np.exp(
            -kbar * (m + m0) ** 2 / (4.0 * n)
        )
    amps /= np.linalg.norm(amps)
    return Wavefunction(n, amps)


def _fd_lowest(zeta, half_width, step):
    """Finite-difference lowest eigenpair on a symmetric uniform grid."""
    n_cells = 2 * max(2, round(half_width / step))
    h = 2.0 * half_width / n_cells
    x = -half_width + h * np.arange(1, n_cells)
    diag = 2.0 / h**2 + zeta * x * x + x**4
    off = np.full(n_cells - 2, -1.0 / h**2)
    e0, vec, _ = tridiag.lowest_eigenpair(diag, off, tol=1e-12)
    # Dirichlet endpoints re-attached for quadrature
    grid = np.concatenate(([-half_width], x, [half_width]))
    phi = np.concatenate(([0.0], vec, [0.0]))
    phi /= math.sqrt(np.trapz(phi * phi, grid))
    return float(e0), grid, phi, h


def quartic_ground(zeta, grid: GridSpec = DEFAULT_GRID) -> QuarticSolution:
    """Solve -phi'' + (zeta n^2 + n^4) phi = e0 phi with vanishing
    boundary values.

    Second-order central differences; with grid.richardson the
    eigenvalue from steps h and h/2 is extrapolated to O(h^4).  Raises
    GridTooSmallError when the boundary amplitude is not negligible or
    the refinement step moves the eigenvalue too much.
    """
    e_h, grid_x, phi, h_used = _fd_lowest(zeta, grid.half_width, grid.step)
    e0 = e_h
    if grid.richardson:
        e_h2, grid_x, phi, h_used = _fd_lowest(zeta, grid.half_width, grid.step / 2.0)
        e0 = (4.0 * e_h2 - e_h) / 3.0
        drift = abs(e_h - e_h2) / 3.0
        if drift > _REFINE_RTOL * max(1.0, abs(e0)):
            raise GridTooSmallError(
                f"eigenvalue moved by {drift:.2e} under grid refinement; "
                f"decrease step below {grid.step}"
            )
    edge = max(abs(phi[1]), abs(phi[-2]))
    if edge > 1e-8:
        raise GridTooSmallError(
            f"boundary amplitude {edge:.2e} at n = +-{grid.half_width}; "
            "increase the grid half-width"
        )
    return QuarticSolution(
        zeta=float(zeta),
        e0=e0,
        n_grid=grid_x,
        phi=phi,
        grid_half_width=grid.half_width,
        grid_step=h_used,
    )


@lru_cache(maxsize=8)
def beta_coefficients(grid: GridSpec = DEFAULT_GRID):
    """(beta0, beta1): value and slope of e0(zeta) at zeta = 0.

    beta0 is the pure-quartic ground eigenvalue; beta1 follows from the
    Hellmann-Feynman integral of n^2 against the ground density, which
    needs no second eigensolve and no step-size tuning.
    """
    sol = quartic_ground(0.0, grid)
    beta0 = sol.e0
    beta1 = float(np.trapz(sol.n_grid**2 * sol.phi**2, sol.n_grid))
    return beta0, beta1


@lru_cache(maxsize=8)
def k_constant(grid: GridSpec = DEFAULT_GRID):
    """Quartic-profile shape constant K entering the qubit-field tangle.

    Equals the quartic integral of the critical profile carrying the
    ladder normalization (integral of phi^2 equal to 2), i.e. one
    quarter of its fourth-power integral; for the unit-normalized
    profile stored in QuarticSolution this reduces to integral(phi^4).
    """
    sol = quartic_ground(0.0, grid)
    return float(np.trapz(sol.phi**4, sol.n_grid))


def critical_energy(n_spins, delta, grid: GridSpec = DEFAULT_GRID):
    """Energy per spin at the critical coupling alpha = 1:
    -(delta/2)(1 + 1/N) + delta beta0 / (2N)^(4/3)."""
    if n_spins < 1:
        raise ValueError("n_spins must be a positive integer")
    beta0, _ = beta_coefficients(grid)
    return -0.5 * delta * (1.0 + 1.0 / n_spins) + delta * beta0 / (2.0 * n_spins) ** (
        4.0 / 3.0
    )


def variational_energy(params: UniaxialParams, matrix: TridiagonalMatrix = None):
    """Rayleigh quotient of the Gaussian trial state (upper bound on e0)."""
    from .core import build_hamiltonian

    wf = gaussian_wavefunction(params)
    t = build_hamiltonian(params) if matrix is None else matrix
    return t.quadratic_form(wf.amps)
