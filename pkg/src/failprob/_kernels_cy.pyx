# cython: language_level=3
"""Compiled counting kernels.

The half-plane count exploits that the score
``a1*U1(scale*z1/s1) + a2*U2(scale*z2/s2)`` is coordinatewise non-decreasing:
one bisection per call finds a bracket ``m_lo < m_hi`` with
``score(m_lo, m_lo) <= retention < score(m_hi, m_hi)``, so a point with both
coordinates below ``m_lo`` is certainly outside and one with both above
``m_hi`` certainly inside.  Only the thin undecided band pays for the two
transcendental transforms; everything else is two comparisons.  The brackets
are widened by a few ulps so the shortcut stays conservative even if libm
log/expm1 wobble by an ulp.

Compiled without -ffast-math on purpose: clamped coordinates propagate as
IEEE inf/-inf and a nan score must compare false (outside).
"""

from libc.math cimport expm1, log, nextafter

cdef double _GAMMA_ZERO_EPS = 1e-10


cdef inline double _forward(double t, double gamma, double sigma, double mu) noexcept nogil:
    cdef double lt = log(t)
    if gamma < _GAMMA_ZERO_EPS and gamma > -_GAMMA_ZERO_EPS:
        return mu + sigma * lt
    return mu + sigma * expm1(gamma * lt) / gamma


cdef inline double _score(
    double z1, double z2,
    double scale, double stretch1, double stretch2,
    double gamma1, double sigma1, double mu1,
    double gamma2, double sigma2, double mu2,
    double alpha1, double alpha2,
) noexcept nogil:
    return (
        alpha1 * _forward((scale * z1) / stretch1, gamma1, sigma1, mu1)
        + alpha2 * _forward((scale * z2) / stretch2, gamma2, sigma2, mu2)
    )


cdef inline double _step(double x, int ulps, double direction) noexcept nogil:
    cdef int i
    for i in range(ulps):
        x = nextafter(x, direction)
    return x


def count_halfplane(
    const double[::1] z1,
    const double[::1] z2,
    double scale,
    double stretch1,
    double stretch2,
    double gamma1,
    double sigma1,
    double mu1,
    double gamma2,
    double sigma2,
    double mu2,
    double alpha1,
    double alpha2,
    double retention,
):
    """#{i : a1*U1(scale*z1[i]/s1) + a2*U2(scale*z2[i]/s2) > retention}."""
    cdef Py_ssize_t i, n = z1.shape[0]
    cdef long count = 0
    cdef double zz1, zz2, s
    cdef double lo, hi, mid
    cdef double out_cut, in_cut
    cdef bint have_in
    cdef double INF = float("inf")

    with nogil:
        # bracket the diagonal boundary: score(lo, lo) <= retention < score(hi, hi)
        if _score(0.0, 0.0, scale, stretch1, stretch2, gamma1, sigma1, mu1,
                  gamma2, sigma2, mu2, alpha1, alpha2) > retention:
            out_cut = -1.0  # no point is certainly outside
            in_cut = 0.0
            have_in = True
        else:
            lo = 0.0
            hi = 1.0
            have_in = False
            while hi <= 1e300:
                if _score(hi, hi, scale, stretch1, stretch2, gamma1, sigma1, mu1,
                          gamma2, sigma2, mu2, alpha1, alpha2) > retention:
                    have_in = True
                    break
                lo = hi
                hi *= 2.0
            if have_in:
                while True:
                    mid = 0.5 * (lo + hi)
                    if not (lo < mid < hi):
                        break
                    if _score(mid, mid, scale, stretch1, stretch2, gamma1, sigma1, mu1,
                              gamma2, sigma2, mu2, alpha1, alpha2) > retention:
                        hi = mid
                    else:
                        lo = mid
                out_cut = _step(lo, 8, -INF)
                in_cut = _step(hi, 8, INF)
            else:
                # score never exceeds retention up to 1e300; larger or clamped
                # coordinates fall through to the full evaluation
                out_cut = lo
                in_cut = INF

        for i in range(n):
            zz1 = z1[i]
            zz2 = z2[i]
            if zz1 <= out_cut and zz2 <= out_cut:
                continue
            if have_in and zz1 >= in_cut and zz2 >= in_cut:
                count += 1
                continue
            s = _score(zz1, zz2, scale, stretch1, stretch2, gamma1, sigma1, mu1,
                       gamma2, sigma2, mu2, alpha1, alpha2)
            if s > retention:
                count += 1
    return count


def count_rectangle(
    const double[::1] z1,
    const double[::1] z2,
    double a,
    double b,
):
    """#{i : z1[i] > a and z2[i] > b} (strict on both coordinates)."""
    cdef Py_ssize_t i, n = z1.shape[0]
    cdef long count = 0
    with nogil:
        for i in range(n):
            if z1[i] > a and z2[i] > b:
                count += 1
    return count
