"""Gamma-function closed forms for every identity in the package.

All gamma products are assembled in log space and exponentiated once, so
factors of wildly different magnitude neither overflow nor lose relative
accuracy.  Powers of negative real bases are taken on the fixed branch
arg = pi, which is what makes the closed forms agree with the complex
values produced by quadrature.

Everything here is a pure function of its arguments; complex parameters
are accepted everywhere even though numerical verification elsewhere is
restricted to real ones.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from selbergjack.combinat import Partition, compositions_of, multinomial

__all__ = [
    "GammaPoleError",
    "GammaProduct",
    "branch_pow",
    "dixon_anderson_rhs",
    "euler_beta",
    "jn_closed",
    "kadell_rhs",
    "log_gamma",
    "oo_prefactor",
    "rz_rhs",
    "theorem1_rhs",
]


class GammaPoleError(ValueError):
    """Raised when a gamma argument is within 1e-9 of a nonpositive integer."""


# Lanczos approximation, g = 607/128, 15 coefficients.  Gives close to
# machine-precision values of Gamma over the right half plane.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)
_LOG_SQRT_2PI = 0.91893853320467274178
_POLE_TOL = 1e-9


def _lanczos_log_gamma(z: complex) -> complex:
    # valid for Re z >= 0.5
    acc = complex(_LANCZOS_C[0])
    for k in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[k] / (z - 1 + k)
    t = z - 0.5 + _LANCZOS_G
    return _LOG_SQRT_2PI + (z - 0.5) * cmath.log(t) - t + cmath.log(acc)


def _log_sin_pi(z: complex) -> complex:
    # log(sin(pi z)) without overflow for large |Im z|.
    if abs(z.imag) < 20.0:
        return cmath.log(cmath.sin(math.pi * z))
    if z.imag > 0:
        # sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i), first factor dominant
        return -1j * math.pi * z + cmath.log((cmath.exp(2j * math.pi * z) - 1) / 2j)
    return 1j * math.pi * z + cmath.log((1 - cmath.exp(-2j * math.pi * z)) / 2j)


def log_gamma(z) -> complex:
    """log Gamma(z) for complex z, accurate to about 1e-13 relative in Gamma.

    Lanczos approximation on Re z >= 1/2, reflection formula otherwise.
    The value is a logarithm of Gamma(z); exponentiating always recovers
    Gamma(z), while the imaginary part is only fixed modulo 2 pi i.

    Raises GammaPoleError when z is within 1e-9 of a pole (0, -1, -2, ...).
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"gamma argument must be finite, got {z}")
    if z.real < 0.75 and abs(z.imag) < _POLE_TOL:
        nearest = round(z.real)
        if nearest <= 0 and math.hypot(z.real - nearest, z.imag) < _POLE_TOL:
            raise GammaPoleError(f"gamma pole at argument {z}")
    if z.real < 0.5:
        return math.log(math.pi) - _log_sin_pi(z) - _lanczos_log_gamma(1 - z)
    return _lanczos_log_gamma(z)


@dataclass(frozen=True)
class GammaProduct:
    """prefactor * prod Gamma(arg)^sign, evaluated through log space.

    ``factors`` holds (sign, argument) pairs with sign +1 for a numerator
    gamma and -1 for a denominator gamma.
    """

    factors: tuple[tuple[int, complex], ...]
    prefactor: complex = 1.0 + 0j

    @classmethod
    def ratio(cls, top: Sequence = (), bottom: Sequence = (), prefactor=1.0) -> "GammaProduct":
        fac = tuple((1, complex(a)) for a in top) + tuple((-1, complex(a)) for a in bottom)
        return cls(fac, complex(prefactor))

    def value(self) -> complex:
        acc = 0j
        for sign, arg in self.factors:
            acc += sign * log_gamma(arg)
        return self.prefactor * cmath.exp(acc)


def branch_pow(base: float, exponent) -> complex:
    """base**exponent for real base, on the branch arg(base) = pi when base < 0.

    For t > 0:  (-t)^s = t^s * e^{i pi s}.  Zero base returns 0 for
    exponents with positive real part and 1 for exponent 0.
    """
    base = float(base)
    s = complex(exponent)
    if base > 0:
        return cmath.exp(s * math.log(base))
    if base == 0:
        if s == 0:
            return 1.0 + 0j
        if s.real > 0:
            return 0j
        raise ValueError("0 raised to an exponent without positive real part")
    return cmath.exp(s * complex(math.log(-base), math.pi))


def euler_beta(alpha, beta) -> complex:
    """The Euler beta value Gamma(a) Gamma(b) / Gamma(a+b)."""
    return GammaProduct.ratio(top=[alpha, beta], bottom=[complex(alpha) + complex(beta)]).value()


def _check_increasing(x: Sequence[float], name: str = "x") -> list[float]:
    pts = [float(v) for v in x]
    if any(a >= b for a, b in zip(pts, pts[1:])):
        raise ValueError(f"{name} must be strictly increasing, got {pts}")
    return pts


def theorem1_rhs(x: Sequence[float], alpha: Sequence, r: int) -> complex:
    """Closed form for the determinant of the beta-type integral matrix.

    For strictly increasing real x_1 < ... < x_n and exponents alpha_i:

        prod_{i<j} (x_j - x_i)
        * prod_{i != j} (x_j - x_i)^{alpha_i - 1}
        * sum_{|nu| = r} C(r, nu)
            Gamma(alpha_1 + nu_1) ... Gamma(alpha_n + nu_n)
            / Gamma(alpha_1 + ... + alpha_n + r) * x^{r - nu}

    with every power of a negative real base on the arg = pi branch.
    """
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    pts = _check_increasing(x)
    a = [complex(v) for v in alpha]
    n = len(pts)
    if len(a) != n:
        raise ValueError("x and alpha must have the same length")

    val = 1.0 + 0j
    for i in range(n):
        for j in range(i + 1, n):
            val *= pts[j] - pts[i]
    for i in range(n):
        for j in range(n):
            if i != j:
                val *= branch_pow(pts[j] - pts[i], a[i] - 1)

    total_a = sum(a)
    acc = 0j
    for nu in compositions_of(r, n):
        gp = GammaProduct.ratio(
            top=[a[i] + nu[i] for i in range(n)], bottom=[total_a + r]
        ).value()
        mono = 1.0
        for xi, vi in zip(pts, nu):
            mono *= xi ** (r - vi)
        acc += multinomial(r, nu) * gp * mono
    return val * acc


def rz_rhs(n: int, r: int, alpha, beta, gamma) -> complex:
    """Closed form of the generalised Selberg average of f_r.

        (n gamma)_r
        * Gamma(alpha) Gamma(alpha+beta+(n-1)gamma+r)
          / [Gamma(alpha+r) Gamma(alpha+beta+(n-1)gamma)]
        * prod_{i=1}^n Gamma(alpha+(i-1)gamma+r) Gamma(beta+(i-1)gamma)
                       Gamma(i gamma + 1)
          / [Gamma(alpha+beta+(i+n-2)gamma+r) Gamma(gamma+1)]

    At r = 0 this is the Selberg integral.
    """
    if n < 1 or r < 0:
        raise ValueError(f"need n >= 1 and r >= 0, got n={n}, r={r}")
    a, b, g = complex(alpha), complex(beta), complex(gamma)
    top = [a, a + b + (n - 1) * g + r, n * g + r]
    bottom = [a + r, a + b + (n - 1) * g, n * g]
    for i in range(1, n + 1):
        top += [a + (i - 1) * g + r, b + (i - 1) * g, i * g + 1]
        bottom += [a + b + (i + n - 2) * g + r, g + 1]
    return GammaProduct.ratio(top=top, bottom=bottom).value()


def kadell_rhs(n: int, lam, alpha, beta, gamma) -> complex:
    """Closed form of the Selberg average (1/n!) of a Jack polynomial.

        prod_{i<j} Gamma((j-i+1)gamma + lam_i - lam_j)
                   / Gamma((j-i)gamma + lam_i - lam_j)
        * prod_i Gamma(alpha+(n-i)gamma+lam_i) Gamma(beta+(i-1)gamma)
                 / Gamma(alpha+beta+(2n-i-1)gamma+lam_i)
    """
    lam = Partition(lam)
    if lam.length > n:
        raise ValueError(f"{lam} has more than n={n} parts")
    a, b, g = complex(alpha), complex(beta), complex(gamma)
    lp = lam.padded(n)
    top: list[complex] = []
    bottom: list[complex] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = lp[i - 1] - lp[j - 1]
            top.append((j - i + 1) * g + d)
            bottom.append((j - i) * g + d)
    for i in range(1, n + 1):
        top += [a + (n - i) * g + lp[i - 1], b + (i - 1) * g]
        bottom.append(a + b + (2 * n - i - 1) * g + lp[i - 1])
    return GammaProduct.ratio(top=top, bottom=bottom).value()


def dixon_anderson_rhs(x: Sequence[float], alpha: Sequence) -> complex:
    """Closed form of the interlacing integral with exponents alpha_j.

        Gamma(alpha_1) ... Gamma(alpha_n) / Gamma(alpha_1 + ... + alpha_n)
        * prod_{i<j} (x_j - x_i)^{alpha_i + alpha_j - 1}
    """
    pts = _check_increasing(x)
    a = [complex(v) for v in alpha]
    n = len(pts)
    if len(a) != n:
        raise ValueError("x and alpha must have the same length")
    val = GammaProduct.ratio(top=a, bottom=[sum(a)]).value()
    for i in range(n):
        for j in range(i + 1, n):
            val *= branch_pow(pts[j] - pts[i], a[i] + a[j] - 1)
    return val


def oo_prefactor(lam, n: int, gamma) -> complex:
    """Gamma prefactor of the interlacing integral representation of P_lambda.

        prod_{i=1}^{n-1} Gamma(lam_i + (n-i+1)gamma)
                         / [Gamma(lam_i + (n-i)gamma) Gamma(gamma)]
    """
    lam = Partition(lam)
    if lam.length > n - 1:
        raise ValueError(f"{lam} has more than n-1={n - 1} parts")
    g = complex(gamma)
    lp = lam.padded(n - 1) if n > 1 else ()
    top = [lp[i - 1] + (n - i + 1) * g for i in range(1, n)]
    bottom: list[complex] = []
    for i in range(1, n):
        bottom += [lp[i - 1] + (n - i) * g, g]
    return GammaProduct.ratio(top=top, bottom=bottom).value()


def jn_closed(y: Sequence[float], alpha, beta, gamma) -> complex:
    """Closed form of the ordered-interlacing kernel integral J_n.

    With n = len(y) + 1 and 0 < y_1 < ... < y_{n-1} < 1:

        Gamma(gamma)^{n-1} Gamma(alpha) Gamma(beta)
        / Gamma(alpha + beta + (n-1)gamma)
        * prod_{i<j} (y_j - y_i)^{2 gamma - 1}
        * prod_i y_i^{alpha+gamma-1} (1 - y_i)^{beta+gamma-1}
    """
    pts = _check_increasing(y, "y") if len(y) else []
    if pts and (pts[0] <= 0 or pts[-1] >= 1):
        raise ValueError(f"y must lie strictly inside (0, 1), got {pts}")
    n = len(pts) + 1
    a, b, g = complex(alpha), complex(beta), complex(gamma)
    val = GammaProduct.ratio(
        top=[g] * (n - 1) + [a, b], bottom=[a + b + (n - 1) * g]
    ).value()
    for i in range(n - 1):
        for j in range(i + 1, n - 1):
            val *= branch_pow(pts[j] - pts[i], 2 * g - 1)
    for yi in pts:
        val *= branch_pow(yi, a + g - 1) * branch_pow(1 - yi, b + g - 1)
    return val
