"""Lowest eigenpair of a real symmetric tridiagonal matrix.

The smallest eigenvalue is bracketed by bisection on Sturm sequence
counts, then the eigenvector is recovered by inverse iteration with a
shifted tridiagonal solve.  Matrices that are symmetric under index
reversal (persymmetric) are folded onto their even-parity half first:
the ground state of an irreducible Jacobi matrix with negative
off-diagonals is even, and folding keeps the working spectral gap open
when the physical even/odd splitting closes (double-well regime).
"""

import numpy as np
from scipy.linalg import solve_banded

from .errors import SolverConvergenceError

_SQRT2 = np.sqrt(2.0)


def matvec(diag, off, x):
    """Apply the tridiagonal matrix (diag, off) to a vector."""
    y = diag * x
    if len(diag) > 1:
        y[:-1] += off * x[1:]
        y[1:] += off * x[:-1]
    return y


def inf_norm(diag, off):
    """Row-sum norm of the tridiagonal matrix."""
    r = np.abs(diag).astype(float)
    if len(diag) > 1:
        r[:-1] += np.abs(off)
        r[1:] += np.abs(off)
    return float(r.max())


def count_below(diag, off_sq, x):
    """Number of eigenvalues strictly less than x (Sturm count).

    off_sq holds the squared off-diagonal entries.  Zero pivots are
    replaced by a tiny negative number, as in LAPACK's bisection kernel.
    """
    d = diag.tolist()
    o2 = off_sq.tolist()
    pivmin = 1e-300
    q = d[0] - x
    count = 1 if q < 0.0 else 0
    for i in range(1, len(d)):
        if q == 0.0:
            q = -pivmin
        q = d[i] - x - o2[i - 1] / q
        if q < 0.0:
            count += 1
    return count


def _bisect_smallest(diag, off_sq):
    """Shrink a Gershgorin interval around the smallest eigenvalue."""
    radius = np.zeros_like(diag)
    if len(diag) > 1:
        ab = np.sqrt(off_sq)
        radius[:-1] += ab
        radius[1:] += ab
    lo = float(np.min(diag - radius))
    hi = float(np.max(diag + radius))
    scale = max(abs(lo), abs(hi), 1e-30)
    width_tol = 4.0 * np.finfo(float).eps * scale
    while hi - lo > width_tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if count_below(diag, off_sq, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def _fold_even(diag, off):
    """Project onto the even-parity sector of a persymmetric matrix."""
    n = len(diag)
    half = n // 2
    if n % 2:
        fd = diag[: half + 1].copy()
        fo = off[:half].copy()
        fo[-1] *= _SQRT2
    else:
        fd = diag[:half].copy()
        fd[-1] += off[half - 1]
        fo = off[: half - 1].copy()
    return fd, fo


def _unfold_even(vec, n):
    half = n // 2
    full = np.empty(n)
    if n % 2:
        full[:half] = vec[:half] / _SQRT2
        full[half] = vec[half]
        full[half + 1 :] = vec[half - 1 :: -1] / _SQRT2
    else:
        full[:half] = vec / _SQRT2
        full[half:] = vec[::-1] / _SQRT2
    return full


def is_persymmetric(diag, off):
    """True when diag and off are exactly symmetric under reversal."""
    return bool(np.array_equal(diag, diag[::-1]) and np.array_equal(off, off[::-1]))


def _inverse_iteration(diag, off, shift, resid_tol, max_iter):
    n = len(diag)
    ab = np.zeros((3, n))
    ab[0, 1:] = off
    ab[2, :-1] = off
    nudge = max(abs(shift), inf_norm(diag, off), 1.0) * np.finfo(float).eps
    x = np.full(n, 1.0 / np.sqrt(n))
    resid = np.inf
    for _ in range(max_iter):
        ab[1, :] = diag - shift
        try:
            y = solve_banded((1, 1), ab, x, check_finite=False)
        except np.linalg.LinAlgError:
            y = None
        if y is None or not np.all(np.isfinite(y)):
            # shift hit an exact pivot breakdown; perturb and retry
            shift += nudge
            nudge *= 2.0
            continue
        x = y / np.linalg.norm(y)
        tx = matvec(diag, off, x)
        lam = float(x @ tx)
        resid = float(np.max(np.abs(tx - lam * x)))
        if resid <= resid_tol:
            return lam, x, resid
    raise SolverConvergenceError(
        f"inverse iteration stalled at residual {resid:.3e} "
        f"(target {resid_tol:.3e})",
        residual=resid,
    )


def lowest_eigenpair(diag, off, tol=1e-10, max_iter=200, fold=True):
    """Smallest eigenvalue and normalized eigenvector of tridiag(diag, off).

    Parameters
    ----------
    diag, off : arrays of length n and n-1.
    tol : residual target, relative to the matrix inf-norm.
    max_iter : inverse-iteration budget per solve.
    fold : exploit reversal symmetry when the matrix has it exactly.

    Returns
    -------
    (value, vector, residual); the vector has unit norm and its
    largest-magnitude entry is positive.
    """
    diag = np.asarray(diag, dtype=float)
    off = np.asarray(off, dtype=float)
    n = len(diag)
    if off.shape != (n - 1,):
        raise ValueError("off-diagonal must have length len(diag) - 1")
    if n == 1:
        return float(diag[0]), np.ones(1), 0.0

    norm_t = inf_norm(diag, off)
    resid_tol = tol * max(norm_t, 1e-30)

    if fold and is_persymmetric(diag, off):
        fd, fo = _fold_even(diag, off)
        if len(fd) == 1:
            lam, vec = float(fd[0]), np.ones(1)
        else:
            lo, hi = _bisect_smallest(fd, fo * fo)
            lam, vec, _ = _inverse_iteration(fd, fo, 0.5 * (lo + hi), resid_tol, max_iter)
        x = _unfold_even(vec, n)
        tx = matvec(diag, off, x)
        lam = float(x @ tx)
        resid = float(np.max(np.abs(tx - lam * x)))
    else:
        lo, hi = _bisect_smallest(diag, off * off)
        lam, x, resid = _inverse_iteration(diag, off, 0.5 * (lo + hi), resid_tol, max_iter)

    if resid > resid_tol:
        raise SolverConvergenceError(
            f"residual {resid:.3e} above target {resid_tol:.3e}", residual=resid
        )
    k = int(np.argmax(np.abs(x)))
    if x[k] < 0.0:
        x = -x
    return lam, x, resid
