"""
Closed-form special functions of the rank-one case.

For A_1 with multiplicity k on the roots +-2, the polynomials E_n, P_n and
the hypergeometric function F are explicit in terms of Gauss'
hypergeometric series and renormalized Gegenbauer polynomials

    Q_n^k(x) = 2F1(n + 2k, -n, k + 1/2; (1 - x) / 2),

and their scaling limit is the modified Bessel function j_{k - 1/2}.
Here z is the usual real coordinate on the line, so e^{mz} corresponds to
the exponential of the weight m.
"""

from fractions import Fraction
import math
from math import comb

import mpmath
import numpy as np
from scipy.special import hyp2f1 as scipy_hyp2f1

from hodunkl.algebra.trigpoly import TrigPoly

# Working precision (decimal digits) of the Bessel series at z = 0. The
# largest term is about e^|z|, so |z| / ln 10 more digits are added.
BESSEL_DPS = 30

# |z| beyond which the Bessel series is not summed.
BESSEL_MAX_ARGUMENT = 200


def _is_exact(value):
    return isinstance(value, (int, Fraction))


def _nonpositive_integer(value):
    return _is_exact(value) and Fraction(value).denominator == 1 and value <= 0


def hyp2f1(a, b, c, u):
    """
    Evaluate Gauss' hypergeometric series 2F1(a, b; c; u).

    Terminating series (a or b a nonpositive integer) are summed term by
    term, exactly if all inputs are rational. Other series are evaluated
    with scipy.special.hyp2f1 inside the unit disk.

    Parameters
    ----------
    a, b, c : int or Fraction or float
        Parameters.

    u : int or Fraction or float or complex
        Argument.

    Returns
    -------
    value : Fraction or complex
        The series value; a Fraction for exact terminating input.
    """
    terminating = [
        -int(p) for p in (a, b) if _nonpositive_integer(p)
    ]
    if terminating:
        length = min(terminating)
        exact = all(_is_exact(p) for p in (a, b, c, u))
        if exact:
            a, b, c, u = (Fraction(p) for p in (a, b, c, u))
        else:
            a, b, c, u = float(a), float(b), float(c), complex(u)
        total = term = Fraction(1) if exact else complex(1)
        for j in range(length):
            if c + j == 0:
                raise ValueError(
                    "2F1 with c = " + str(c) + " hits a zero denominator."
                )
            term = term * (a + j) * (b + j) / ((c + j) * (j + 1)) * u
            total = total + term
        return total

    if _nonpositive_integer(c):
        raise ValueError(
            "2F1 with c = " + str(c) + " is undefined for this series."
        )
    if abs(complex(u)) >= 1:
        raise ValueError(
            "Non-terminating 2F1 needs |u| < 1, got u = " + str(u) + "."
        )
    argument = complex(u)
    if argument.imag == 0:
        argument = argument.real
    return complex(scipy_hyp2f1(float(a), float(b), float(c), argument))


def gegenbauer_Q(n, k, x):
    """
    Return the renormalized Gegenbauer polynomial Q_n^k(x).

    Exact for rational x and k; Q_n^k(1) = 1.
    """
    if n < 0:
        raise ValueError("Gegenbauer degree must be >= 0, got " + str(n))
    k = Fraction(k)
    if _is_exact(x):
        u = (1 - Fraction(x)) / 2
    else:
        u = (1 - complex(x)) / 2
    return hyp2f1(n + 2 * k, -n, k + Fraction(1, 2), u)


def gegenbauer_coefficients(n, k):
    """
    Return the exact power-basis coefficients of Q_n^k.

    Parameters
    ----------
    n : int
        Degree.

    k : Fraction
        Nonnegative multiplicity.

    Returns
    -------
    coefficients : list of Fraction
        c_0, ..., c_n with Q_n^k(x) = sum_i c_i x^i.
    """
    k = Fraction(k)
    a, b, c = n + 2 * k, Fraction(-n), k + Fraction(1, 2)
    coefficients = [Fraction(0)] * (n + 1)
    series_term = Fraction(1)
    for j in range(n + 1):
        if j > 0:
            series_term = (
                series_term * (a + j - 1) * (b + j - 1) / ((c + j - 1) * j)
            )
        # ((1 - x) / 2)^j
        for i in range(j + 1):
            coefficients[i] += (
                series_term * comb(j, i) * (-1) ** i / Fraction(2**j)
            )
    return coefficients


def _spectral_parameter(n, k):
    # n~ = n + k for n > 0 and n - k for n <= 0.
    return n + k if n > 0 else n - k


def closed_E(n, k, z):
    """
    Evaluate G(n~, z) = Q_|n|^k(cosh z) + (n~ + k)/(2k + 1) sinh z
    Q_{|n|-1}^{k+1}(cosh z), i.e. E_n / c_n.

    Parameters
    ----------
    n : int
        Weight.

    k : Fraction
        Nonnegative multiplicity.

    z : float or complex
        Argument.

    Returns
    -------
    value : complex
        G(n~, z).
    """
    k = Fraction(k)
    cosh = complex(np.cosh(complex(z)))
    sinh = complex(np.sinh(complex(z)))
    value = complex(gegenbauer_Q(abs(n), k, cosh))
    if n != 0:
        factor = (_spectral_parameter(n, k) + k) / (2 * k + 1)
        value += float(factor) * sinh * complex(
            gegenbauer_Q(abs(n) - 1, k + 1, cosh)
        )
    return value


def _cosh_power_series(coefficients):
    # sum_i c_i cosh(z)^i as a trigonometric polynomial in e^{+-z}.
    cosh = TrigPoly(1, {(1,): Fraction(1, 2), (-1,): Fraction(1, 2)})
    result = TrigPoly(1)
    power = TrigPoly.constant(1)
    for i, c in enumerate(coefficients):
        if i > 0:
            power = power * cosh
        if c != 0:
            result = result + power.scale(c)
    return result


def closed_E_trig(n, k):
    """
    Return G(n~, .) = E_n / c_n as an exact TrigPoly in e^{+-z}.

    cosh and sinh are expanded into exponentials, so this can be compared
    coefficient by coefficient with a computed E_n.
    """
    k = Fraction(k)
    result = _cosh_power_series(gegenbauer_coefficients(abs(n), k))
    if n != 0:
        sinh = TrigPoly(1, {(1,): Fraction(1, 2), (-1,): Fraction(-1, 2)})
        factor = (_spectral_parameter(n, k) + k) / (2 * k + 1)
        lower = _cosh_power_series(gegenbauer_coefficients(abs(n) - 1, k + 1))
        result = result + (sinh * lower).scale(factor)
    return result


def closed_F(n, k, z):
    """Return F(n + k, z) = Q_n^k(cosh z) for n >= 0."""
    return complex(gegenbauer_Q(n, k, complex(np.cosh(complex(z)))))


def _to_mpmath(value):
    if _is_exact(value):
        value = Fraction(value)
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpc(complex(value))


def bessel_j(alpha, z):
    """
    Evaluate the modified Bessel function j_alpha(z).

    j_alpha(z) = Gamma(alpha + 1) sum_n (-1)^n (z/2)^(2n)
    / (n! Gamma(n + alpha + 1)). The Gamma ratios are built by the
    recursion t_n = -t_{n-1} (z/2)^2 / (n (n + alpha)), exactly for rational
    alpha, and the sum is accumulated with mpmath. The series cancels down
    from terms of size e^|z|, so the working precision grows with |z|.

    Parameters
    ----------
    alpha : Fraction or float
        Index, alpha > -1.

    z : float or complex or Fraction
        Argument, |z| <= BESSEL_MAX_ARGUMENT.

    Returns
    -------
    value : complex
        j_alpha(z).
    """
    if alpha <= -1:
        raise ValueError("Bessel index must be > -1, got " + str(alpha))
    if abs(complex(z)) > BESSEL_MAX_ARGUMENT:
        raise ValueError(
            "Bessel series is not summed for |z| = "
            + str(abs(complex(z)))
            + "."
        )
    exact_alpha = _is_exact(alpha)
    alpha = Fraction(alpha) if exact_alpha else float(alpha)
    digits = BESSEL_DPS + int(abs(complex(z)) / math.log(10)) + 10
    with mpmath.workdps(digits):
        square = -((_to_mpmath(z) / 2) ** 2)
        total = term = mpmath.mpf(1)
        n = 0
        while True:
            n += 1
            denominator = n * (n + alpha)
            ratio = square * _to_mpmath(
                Fraction(1) / denominator if exact_alpha else 1 / denominator
            )
            term = term * ratio
            total = total + term
            # Once |ratio| < 1/2 the tail is bounded by 2 |term|.
            if abs(ratio) < 0.5 and abs(term) < 1e-17 * max(1, abs(total)):
                break
        return complex(total)


def gegenbauer_bessel_limit(k, z, n):
    """
    Compare Q_n^k(cos(z / n)) with its limit j_{k - 1/2}(z).

    Returns
    -------
    approx, reference, error : complex, complex, float
        Q_n^k(cos(z/n)), j_{k-1/2}(z) and the absolute difference.
    """
    k = Fraction(k)
    approx = complex(
        gegenbauer_Q(n, k, complex(np.cos(complex(z) / n)))
    )
    reference = bessel_j(k - Fraction(1, 2), z)
    return approx, reference, abs(approx - reference)
