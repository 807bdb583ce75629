"""Collective uniaxial spin model in its maximum-spin sector.

The Hamiltonian -(delta/2) Sx + (epsilon/2) Sz - (g/N) Sz^2 acts on the
N+1 ladder states |N, m>, m = -N, -N+2, ..., N (doubled-operator
convention, Casimir N(N+2)).  In this basis it is a symmetric
tridiagonal (Jacobi) matrix; the exact ground state follows from
bisection plus inverse iteration in O(N) memory.
"""

from dataclasses import dataclass, field

import numpy as np

from . import tridiag

DENSE_ORACLE_MAX_N = 64


@dataclass(frozen=True)
class UniaxialParams:
    """Model parameters: N spins, splitting delta, coupling ratio
    alpha = 4g/delta, level asymmetry epsilon."""

    n_spins: int
    delta: float
    alpha: float
    epsilon: float = 0.0

    def __post_init__(self):
        if self.n_spins < 1:
            raise ValueError("n_spins must be a positive integer")
        if self.delta < 0:
            raise ValueError("delta must be non-negative")
        if self.alpha < 0:
            raise ValueError("alpha must be non-negative")

    @property
    def g(self):
        """Ferromagnetic coupling g = alpha * delta / 4."""
        return 0.25 * self.alpha * self.delta


@dataclass(frozen=True)
class TridiagonalMatrix:
    """Symmetric tridiagonal Hamiltonian: N+1 diagonal entries, N
    off-diagonal entries coupling m to m+2."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.diag, dtype=float)
        e = np.asarray(self.offdiag, dtype=float)
        if e.shape != (len(d) - 1,):
            raise ValueError("offdiag must have length len(diag) - 1")
        d.setflags(write=False)
        e.setflags(write=False)
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "offdiag", e)

    @property
    def n_spins(self):
        return len(self.diag) - 1

    @property
    def is_persymmetric(self):
        """Exact double symmetry along main and second diagonal."""
        return tridiag.is_persymmetric(self.diag, self.offdiag)

    def inf_norm(self):
        return tridiag.inf_norm(self.diag, self.offdiag)

    def apply(self, x):
        return tridiag.matvec(self.diag, self.offdiag, np.asarray(x, dtype=float))

    def quadratic_form(self, x):
        """<x|T|x> for a normalized trial vector (variational bound)."""
        x = np.asarray(x, dtype=float)
        return float(x @ self.apply(x))

    def to_dense(self):
        t = np.diag(self.diag)
        t += np.diag(self.offdiag, 1)
        t += np.diag(self.offdiag, -1)
        return t


@dataclass(frozen=True)
class Wavefunction:
    """Real ladder amplitudes; amps[k] is phi_m at m = -N + 2k."""

    n_spins: int
    amps: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.amps, dtype=float)
        if a.shape != (self.n_spins + 1,):
            raise ValueError("amps must have length n_spins + 1")
        a.setflags(write=False)
        object.__setattr__(self, "amps", a)

    @property
    def m_values(self):
        return np.arange(-self.n_spins, self.n_spins + 1, 2)

    def norm_error(self):
        """|sum amps^2 - 1|."""
        return abs(float(self.amps @ self.amps) - 1.0)


def ladder_plus(n_spins, m):
    """Raising matrix element a_m^+ = sqrt(N(N+2) - m(m+2))/2."""
    m = np.asarray(m, dtype=float)
    return 0.5 * np.sqrt(n_spins * (n_spins + 2.0) - m * (m + 2.0))


def ladder_minus(n_spins, m):
    """Lowering matrix element a_m^- = sqrt(N(N+2) - m(m-2))/2."""
    m = np.asarray(m, dtype=float)
    return 0.5 * np.sqrt(n_spins * (n_spins + 2.0) - m * (m - 2.0))


def build_hamiltonian(params: UniaxialParams) -> TridiagonalMatrix:
    """Jacobi-matrix form of the uniaxial Hamiltonian.

    diag[k]    = (epsilon/2) m - (g/N) m^2          at m = -N + 2k
    offdiag[k] = -(delta/4) sqrt(N(N+2) - m(m+2))   coupling m, m+2
    """
    n = params.n_spins
    m = np.arange(-n, n + 1, 2, dtype=float)
    diag = 0.5 * params.epsilon * m - (params.g / n) * m * m
    offdiag = -0.5 * params.delta * ladder_plus(n, m[:-1])
    return TridiagonalMatrix(diag, offdiag)


def ground_state(matrix: TridiagonalMatrix, tol=1e-10, max_iter=200):
    """Lowest eigenvalue and eigenvector of the Jacobi matrix.

    The residual ||T phi - e0 phi||_inf is driven below tol * ||T||_inf.
    For the symmetric phase (persymmetric matrix) the solve runs in the
    even-parity sector, so the returned state is inversion symmetric to
    machine precision even when the even/odd gap is exponentially small.
    Raises SolverConvergenceError when the iteration budget runs out.
    """
    energy, vec, _ = tridiag.lowest_eigenpair(
        matrix.diag, matrix.offdiag, tol=tol, max_iter=max_iter
    )
    return energy, Wavefunction(matrix.n_spins, vec)


def solve_ground(params: UniaxialParams, tol=1e-10, max_iter=200):
    """Convenience wrapper: build the Hamiltonian and solve it."""
    return ground_state(build_hamiltonian(params), tol=tol, max_iter=max_iter)


def _even_sector_basis(n_dim):
    """Columns spanning the inversion-even subspace of R^n_dim."""
    half = n_dim // 2
    cols = half + (n_dim % 2)
    u = np.zeros((n_dim, cols))
    s = 1.0 / np.sqrt(2.0)
    for k in range(half):
        u[k, k] = s
        u[n_dim - 1 - k, k] = s
    if n_dim % 2:
        u[half, half] = 1.0
    return u


def dense_oracle_ground(params: UniaxialParams):
    """Ground state by full dense diagonalization (validation oracle).

    Independent route for cross-checking ground_state; limited to
    N <= 64 to keep accidental large dense solves out of sweeps.  For
    epsilon = 0 the diagonalization runs in the inversion-even block:
    above the transition the even/odd doublet splitting drops below
    machine precision and an unprojected dense solve would return an
    arbitrary mixture of the two.
    """
    n = params.n_spins
    if n > DENSE_ORACLE_MAX_N:
        raise ValueError(f"dense oracle limited to N <= {DENSE_ORACLE_MAX_N}")
    t = build_hamiltonian(params).to_dense()
    if params.epsilon == 0.0:
        u = _even_sector_basis(n + 1)
        vals, vecs = np.linalg.eigh(u.T @ t @ u)
        full = u @ vecs[:, 0]
    else:
        vals, vecs = np.linalg.eigh(t)
        full = vecs[:, 0]
    k = int(np.argmax(np.abs(full)))
    if full[k] < 0.0:
        full = -full
    return float(vals[0]), Wavefunction(n, full)
