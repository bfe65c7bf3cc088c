"""Numba kernels for the two hot paths: Jacobi sweeps and the adaptive
Simpson quadrature of t * Theta(t).

Matching-count coefficients arrive as float64 arrays (exact integers are
rounded once per evaluation; the ratio form keeps magnitudes tame).
"""

import math

import numpy as np
from numba import njit

STACK_CAP = 4096


@njit(cache=True)
def offdiag_norm(A):
    n = A.shape[0]
    s = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                s += A[i, j] * A[i, j]
    return math.sqrt(s)


@njit(cache=True)
def jacobi_eigenvalues(A, max_sweeps):
    """Cyclic Jacobi on a symmetric matrix, in place.

    Returns (eigenvalues sorted descending, final off-diagonal Frobenius
    norm, sweeps used).  Convergence target is 1e-14 * n.
    """
    n = A.shape[0]
    thr = 1e-14 * n
    sweeps = 0
    off = offdiag_norm(A)
    while off > thr and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) < 1e-300:
                    A[p, q] = 0.0
                    A[q, p] = 0.0
                    continue
                app = A[p, p]
                aqq = A[q, q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                for i in range(n):
                    if i != p and i != q:
                        aip = A[i, p]
                        aiq = A[i, q]
                        A[i, p] = c * aip - s * aiq
                        A[p, i] = A[i, p]
                        A[i, q] = s * aip + c * aiq
                        A[q, i] = A[i, q]
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = 0.0
                A[q, p] = 0.0
        sweeps += 1
        off = offdiag_norm(A)
    w = np.empty(n)
    for i in range(n):
        w[i] = A[i, i]
    w = np.sort(w)[::-1].copy()
    return w, off, sweeps


@njit(cache=True)
def matching_ratio(t, gcoef, fcoef, k, dlow):
    """2 * M_F(t) / M_G(t) without ever forming t**v(H).

    gcoef/fcoef are the matching-count vectors (index = matching size).
    dlow is the difference of the lowest t-powers of M_F and M_G.
    """
    if t >= 1.0:
        u = 1.0 / (t * t)
        sg = gcoef[len(gcoef) - 1]
        for j in range(len(gcoef) - 2, -1, -1):
            sg = sg * u + gcoef[j]
        sf = fcoef[len(fcoef) - 1]
        for j in range(len(fcoef) - 2, -1, -1):
            sf = sf * u + fcoef[j]
        return 2.0 * math.pow(t, -float(k)) * sf / sg
    w = t * t
    # reversed Horner: P_H(w) = sum_j m_j w^(L-j)
    pg = gcoef[0]
    for j in range(1, len(gcoef)):
        pg = pg * w + gcoef[j]
    pf = fcoef[0]
    for j in range(1, len(fcoef)):
        pf = pf * w + fcoef[j]
    return 2.0 * math.pow(t, float(dlow)) * pf / pg


@njit(cache=True)
def theta_closed_kernel(t, gcoef, fcoef, k, dlow, sign):
    return sign * math.atan(matching_ratio(t, gcoef, fcoef, k, dlow))


@njit(cache=True)
def _integrand(mode, x, gcoef, fcoef, k, dlow, sign):
    if mode == 0:
        # head: f(t) = t * Theta(t) on [0, T]; linear vanishing at 0
        if x == 0.0:
            return 0.0
        return x * theta_closed_kernel(x, gcoef, fcoef, k, dlow, sign)
    # tail substituted with w = 1/t: g(w) = Theta(1/w) / w^3 on (0, 1/T]
    w = x
    u = w * w
    sg = gcoef[len(gcoef) - 1]
    for j in range(len(gcoef) - 2, -1, -1):
        sg = sg * u + gcoef[j]
    sf = fcoef[len(fcoef) - 1]
    for j in range(len(fcoef) - 2, -1, -1):
        sf = sf * u + fcoef[j]
    q = 2.0 * math.pow(w, float(k - 3)) * sf / sg  # = ratio / w^3, finite at w = 0
    r = q * w * w * w
    if r < 1e-4:
        rr = r * r
        return sign * q * (1.0 - rr / 3.0 + rr * rr / 5.0)
    return sign * math.atan(r) / (w * w * w)


@njit(cache=True)
def adaptive_simpson(mode, a, b, tol0, min_depth, max_depth,
                     gcoef, fcoef, k, dlow, sign):
    """Adaptive Simpson with Richardson error estimate.

    Subdivision is forced down to min_depth so narrow features cannot hide
    between the seed points.  Returns (integral, accumulated error
    estimate, converged flag).
    """
    fa = _integrand(mode, a, gcoef, fcoef, k, dlow, sign)
    fb = _integrand(mode, b, gcoef, fcoef, k, dlow, sign)
    m0 = 0.5 * (a + b)
    fm0 = _integrand(mode, m0, gcoef, fcoef, k, dlow, sign)
    s0 = (b - a) / 6.0 * (fa + 4.0 * fm0 + fb)

    xa = np.empty(STACK_CAP)
    xb = np.empty(STACK_CAP)
    va = np.empty(STACK_CAP)
    vm = np.empty(STACK_CAP)
    vb = np.empty(STACK_CAP)
    vs = np.empty(STACK_CAP)
    dep = np.empty(STACK_CAP, np.int64)
    sp = 0
    xa[0], xb[0], va[0], vm[0], vb[0], vs[0], dep[0] = a, b, fa, fm0, fb, s0, 0
    sp = 1

    total = 0.0
    err_tot = 0.0
    ok = True
    while sp > 0:
        sp -= 1
        aa, bb = xa[sp], xb[sp]
        faa, fmm, fbb = va[sp], vm[sp], vb[sp]
        s = vs[sp]
        depth = dep[sp]
        mm = 0.5 * (aa + bb)
        lm = 0.5 * (aa + mm)
        rm = 0.5 * (mm + bb)
        flm = _integrand(mode, lm, gcoef, fcoef, k, dlow, sign)
        frm = _integrand(mode, rm, gcoef, fcoef, k, dlow, sign)
        sl = (mm - aa) / 6.0 * (faa + 4.0 * flm + fmm)
        sr = (bb - mm) / 6.0 * (fmm + 4.0 * frm + fbb)
        e = sl + sr - s
        tol_here = tol0 * 0.5 ** depth
        if (depth >= min_depth and abs(e) <= 15.0 * tol_here) \
                or depth >= max_depth or sp >= STACK_CAP - 2:
            total += sl + sr + e / 15.0
            err_tot += abs(e) / 15.0
            if abs(e) > 15.0 * tol_here:
                ok = False
        else:
            xa[sp], xb[sp], va[sp], vm[sp], vb[sp], vs[sp], dep[sp] = (
                aa, mm, faa, flm, fmm, sl, depth + 1)
            sp += 1
            xa[sp], xb[sp], va[sp], vm[sp], vb[sp], vs[sp], dep[sp] = (
                mm, bb, fmm, frm, fbb, sr, depth + 1)
            sp += 1
    return total, err_tot, ok
