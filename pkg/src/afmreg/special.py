"""Bessel J0 and McDonald (modified Bessel) K0 at full double precision.

J0 follows the classic Cephes construction (Moshier, Cephes Math Library,
j0.c): a factored rational approximation on [0, 5] that keeps relative
accuracy through the first two roots, and the Hankel asymptotic modulus /
phase form beyond.  The stock double-precision phase reduction loses
relative accuracy above x ~ 10^3, so the oscillatory phase here is reduced
modulo 2 pi in extended (Cody-Waite three-part) precision; this keeps the
relative error near 1e-15 up to |x| = 1e4 except in the immediate
neighbourhood of a root, where only absolute accuracy (~1e-16 of the
envelope) is meaningful.

K0 is delegated to scipy.special.k0 (Cephes k0.c), which holds relative
error below ~1e-15 on (0, 700]; beyond x ~ 705 the result underflows to 0.
"""

import numpy as np
from scipy.special import jn_zeros
from scipy.special import k0 as _scipy_k0

# --- Cephes j0.c coefficients (public domain) -------------------------------

_PP = np.array([
    7.96936729297347051624e-4, 8.28352392107440799803e-2, 1.23953371646414299388e0,
    5.44725003058768775090e0, 8.74716500199817011941e0, 5.30324038235394892183e0,
    9.99999999999999997821e-1])
_PQ = np.array([
    9.24408810558863637013e-4, 8.56288474354474431428e-2, 1.25352743901058953537e0,
    5.47097740330417105182e0, 8.76190883237069594232e0, 5.30605288235394617618e0,
    1.00000000000000000218e0])
_QP = np.array([
    -1.13663838898469149931e-2, -1.28252718670509318512e0, -1.95539544257735972385e1,
    -9.32060152123768231369e1, -1.77681167980488050595e2, -1.47077505154951170175e2,
    -5.14105326766599330220e1, -6.05014350600728481186e0])
_QQ = np.array([  # leading coefficient 1.0 implicit
    1.0,
    6.43178256118178023184e1, 8.56430025976980587198e2, 3.88240183605401609683e3,
    7.24046774195652478189e3, 5.93072701187316984827e3, 2.06209331660327847417e3,
    2.42005740240291393179e2])
_RP = np.array([
    -4.79443220978201773821e9, 1.95617491946556577543e12, -2.49248344360967716204e14,
    9.70862251047306323952e15])
_RQ = np.array([  # leading coefficient 1.0 implicit
    1.0,
    4.99563147152651017219e2, 1.73785401676374683123e5, 4.84409658339962045305e7,
    1.11855537045356834862e10, 2.11277520115489217587e12, 3.10518229857422583814e14,
    3.18121955943204943306e16, 1.71086294081043136091e18])
_DR1 = 5.78318596294678452118e0   # first root of J0(x^2)
_DR2 = 3.04712623436620863991e1   # second root
_SQ2OPI = 7.9788456080286535587989e-1
_INV_SQRT2 = 0.7071067811865476

# Cody-Waite split of 2 pi: A and B carry few enough mantissa bits that
# n * part stays exact for n <= ~2^26, so x - n*A - n*B loses no bits; C
# carries the remainder of the true 2 pi (beyond double precision) so the
# three parts sum to 2 pi with residual ~5e-28.
_TWOPI_A = 6.28125
_TWOPI_B = 1.9353071693331003e-3
_TWOPI_C = 1.0253376606378076e-11


def _reduce_2pi(x):
    """x mod 2 pi via three-part Cody-Waite reduction, accurate to ~1e-24."""
    n = np.round(x / (2.0 * np.pi))
    r = x - n * _TWOPI_A
    r = r - n * _TWOPI_B
    r = r - n * _TWOPI_C
    return r


def _j0_small(x):
    # factored rational on [0, 5]; keeps relative accuracy near the roots
    z = x * x
    p = (z - _DR1) * (z - _DR2) * np.polyval(_RP, z) / np.polyval(_RQ, z)
    return np.where(z < 1.0e-10, 1.0 - 0.25 * z, p)


def _j0_large(x):
    w = 5.0 / x
    z = w * w  # 25 / x^2
    p = np.polyval(_PP, z) / np.polyval(_PQ, z)
    q = np.polyval(_QP, z) / np.polyval(_QQ, z)
    r = _reduce_2pi(x)
    c, s = np.cos(r), np.sin(r)
    cos_xn = (c + s) * _INV_SQRT2   # cos(x - pi/4)
    sin_xn = (s - c) * _INV_SQRT2   # sin(x - pi/4)
    return (p * cos_xn - w * q * sin_xn) * _SQ2OPI / np.sqrt(x)


def bessel_j0(x):
    """Bessel function of the first kind, order zero.  Scalar or array.

    Relative accuracy ~1e-15 for |x| <= 1e4 away from the roots of J0
    (near a root the error is ~1e-16 of the oscillation envelope).
    """
    xa = np.abs(np.asarray(x, dtype=float))
    small = xa <= 5.0
    out = np.empty_like(xa)
    if np.any(small):
        out[small] = _j0_small(xa[small])
    if np.any(~small):
        out[~small] = _j0_large(xa[~small])
    return float(out) if np.ndim(x) == 0 else out


def bessel_k0(x):
    """McDonald function (modified Bessel of the second kind), order zero.

    Scalar or array, x > 0 required.  Relative accuracy ~1e-15 on (0, 700];
    beyond that the value leaves the normal double range (K0(700) ~ 5e-306),
    degrading through subnormals and underflowing to exactly 0 near x ~ 745.
    """
    xa = np.asarray(x, dtype=float)
    if np.any(xa <= 0.0):
        raise ValueError("bessel_k0 requires x > 0")
    out = _scipy_k0(xa)
    return float(out) if np.ndim(x) == 0 else out


def j0_zeros(count: int) -> np.ndarray:
    """First `count` positive roots of J0, ascending."""
    return jn_zeros(0, count)
