"""Bind exact identities and numeric integral/closed-form pairs into reports.

Every check produces a :class:`VerificationReport` with both sides, the
residuals, and a pass/fail flag:

* quadrature checks pass when the relative residual is at most the
  tolerance (default 1e-8),
* Monte Carlo checks pass when |lhs - rhs| <= 4 standard errors,
* exact polynomial identities pass with residual exactly 0 (a failure
  reports residual 1 and names the failing step),
* closed-form gamma-product identities compare at 1e-10/1e-11.

``run_suite`` executes a list of :class:`IntegralSpec` cases (from
``builtin_suite`` or a JSON config) and reports in config order; any raised
error is recorded as a failed case with its reason.
"""

from __future__ import annotations

import cmath
import json
import math
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from selbergjack.combinat import Partition, pochhammer
from selbergjack.gammakit import (
    branch_pow,
    dixon_anderson_rhs,
    jn_closed,
    kadell_rhs,
    log_gamma,
    oo_prefactor,
    rz_rhs,
    theorem1_rhs,
)
from selbergjack.quadrature import (
    integrate_interlacing,
    integrate_selberg_mc,
    integrate_selberg_nested,
    matrix_entry,
    poly_integrand,
)
from selbergjack.symfunc import (
    SparsePoly,
    eval_poly,
    f_r,
    g_series,
    jack_P,
    laurent_invert,
)

__all__ = [
    "IntegralSpec",
    "VerificationReport",
    "builtin_suite",
    "load_config",
    "run_suite",
    "summarize",
    "verify_dixon_anderson",
    "verify_identity_chain",
    "verify_jn",
    "verify_kadell",
    "verify_okounkov",
    "verify_recursion",
    "verify_reduction",
    "verify_rz",
    "verify_theorem1",
    "write_report_csv",
    "write_report_json",
]

THEOREMS = ("T1", "T2", "T3", "T4", "DixonAnderson", "Jn", "Recursion", "IdentityChain", "Reduction")
METHODS = ("nested", "mc", "exact", "closedform")

_DEFAULT_TOL = {
    "nested": 1e-8,
    "exact": 0.0,
    "closedform": 1e-10,
    "mc": None,  # pass criterion is 4 standard errors
}
_TINY = 1e-300


def _to_scalar(v):
    """Parse a rational string / number into Fraction where possible."""
    if v is None or isinstance(v, (Fraction, complex)):
        return v
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        return Fraction(v).limit_denominator(10**12) if v == int(v) else v
    raise ValueError(f"cannot interpret scalar {v!r}")


def _scalar_json(v):
    if v is None:
        return None
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    return v


@dataclass(frozen=True)
class IntegralSpec:
    """One verifiable case: theorem id, parameters, method and settings."""

    theorem: str
    n: int
    r: int | None = None
    lam: Partition | None = None
    alpha: object = None
    beta: object = None
    gamma: object = None
    alpha_vec: tuple | None = None
    x: tuple | None = None
    y: tuple | None = None
    method: str = "nested"
    m: int = 64
    n_samples: int = 2_000_000
    seed: int = 0
    tolerance: float | None = None
    label: str = ""

    def validate(self) -> None:
        if self.theorem not in THEOREMS:
            raise ValueError(f"unknown theorem {self.theorem!r}, expected one of {THEOREMS}")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}, expected one of {METHODS}")
        if self.n < 1:
            raise ValueError(f"need n >= 1, got {self.n}")
        if self.theorem in ("T1", "DixonAnderson") and self.alpha_vec is None:
            raise ValueError(f"{self.theorem} needs alpha_vec")
        if self.theorem == "T1" and self.x is None:
            raise ValueError("T1 needs x points")
        if self.x is not None and any(float(a) >= float(b) for a, b in zip(self.x, self.x[1:])):
            raise ValueError(f"x must be strictly increasing, got {self.x}")
        if self.theorem in ("T3", "T4", "Reduction", "Recursion") and self.lam is None:
            raise ValueError(f"{self.theorem} needs a partition")
        if self.theorem in ("T2", "IdentityChain") and self.r is None:
            raise ValueError(f"{self.theorem} needs r")

    def tol(self) -> float | None:
        if self.tolerance is not None:
            return self.tolerance
        return _DEFAULT_TOL[self.method]

    def describe(self) -> str:
        bits = [self.theorem, f"n={self.n}"]
        if self.r is not None:
            bits.append(f"r={self.r}")
        if self.lam is not None:
            bits.append(f"lam={list(self.lam.parts)}")
        for name in ("alpha", "beta", "gamma"):
            v = getattr(self, name)
            if v is not None:
                bits.append(f"{name}={v}")
        if self.alpha_vec is not None:
            bits.append(f"alpha=({','.join(str(a) for a in self.alpha_vec)})")
        if self.x is not None:
            bits.append(f"x=({','.join(str(v) for v in self.x)})")
        if self.y is not None:
            bits.append(f"y=({','.join(str(v) for v in self.y)})")
        bits.append(self.method)
        return " ".join(bits)

    def to_json_dict(self) -> dict:
        d = {
            "theorem": self.theorem,
            "n": self.n,
            "method": self.method,
            "m": self.m,
            "n_samples": self.n_samples,
            "seed": self.seed,
        }
        if self.r is not None:
            d["r"] = self.r
        if self.lam is not None:
            d["lambda"] = list(self.lam.parts)
        for name in ("alpha", "beta", "gamma"):
            v = getattr(self, name)
            if v is not None:
                d[name] = _scalar_json(v)
        if self.alpha_vec is not None:
            d["alpha_vec"] = [_scalar_json(v) for v in self.alpha_vec]
        if self.x is not None:
            d["x"] = [_scalar_json(v) for v in self.x]
        if self.y is not None:
            d["y"] = [_scalar_json(v) for v in self.y]
        if self.tolerance is not None:
            d["tolerance"] = self.tolerance
        if self.label:
            d["label"] = self.label
        return d

    @classmethod
    def from_json_dict(cls, d: dict, where: str = "case") -> "IntegralSpec":
        try:
            lam = d.get("lambda")
            spec = cls(
                theorem=d["theorem"],
                n=int(d["n"]),
                r=int(d["r"]) if "r" in d else None,
                lam=Partition(lam) if lam is not None else None,
                alpha=_to_scalar(d.get("alpha")),
                beta=_to_scalar(d.get("beta")),
                gamma=_to_scalar(d.get("gamma")),
                alpha_vec=tuple(_to_scalar(v) for v in d["alpha_vec"]) if "alpha_vec" in d else None,
                x=tuple(_to_scalar(v) for v in d["x"]) if "x" in d else None,
                y=tuple(_to_scalar(v) for v in d["y"]) if "y" in d else None,
                method=d.get("method", "nested"),
                m=int(d.get("m", 64)),
                n_samples=int(d.get("n_samples", 2_000_000)),
                seed=int(d.get("seed", 0)),
                tolerance=d.get("tolerance"),
                label=d.get("label", ""),
            )
            spec.validate()
            return spec
        except (KeyError, ValueError, TypeError) as exc:
            raise ValueError(f"{where}: {exc}") from exc


@dataclass(frozen=True)
class VerificationReport:
    """Both sides of one identity with residuals and pass/fail."""

    spec: IntegralSpec
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    std_error: float | None
    passed: bool
    wall_time_ms: float
    method: str
    detail: str = ""

    def to_json_dict(self) -> dict:
        return {
            "spec": self.spec.to_json_dict(),
            "lhs": {"re": self.lhs.real, "im": self.lhs.imag},
            "rhs": {"re": self.rhs.real, "im": self.rhs.imag},
            "abs_residual": self.abs_residual,
            "rel_residual": self.rel_residual,
            "std_error": self.std_error,
            "passed": self.passed,
            "wall_time_ms": self.wall_time_ms,
            "method": self.method,
            "detail": self.detail,
        }

    CSV_HEADER = (
        "theorem,params,method,lhs_re,lhs_im,rhs_re,rhs_im,"
        "abs_residual,rel_residual,std_error,passed,wall_time_ms"
    )

    def csv_row(self) -> str:
        params = self.spec.describe().replace(",", ";")
        se = "" if self.std_error is None else repr(self.std_error)
        return (
            f"{self.spec.theorem},{params},{self.method},"
            f"{self.lhs.real!r},{self.lhs.imag!r},{self.rhs.real!r},{self.rhs.imag!r},"
            f"{self.abs_residual!r},{self.rel_residual!r},{se},{self.passed},{self.wall_time_ms:.3f}"
        )

    def one_line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        se = f" (4sigma={4 * self.std_error:.2e})" if self.std_error is not None else ""
        note = f"  [{self.detail}]" if self.detail and not self.passed else ""
        return f"{mark}  {self.spec.describe():<68s} rel={self.rel_residual:.2e}{se}{note}"


def _finish(spec: IntegralSpec, lhs: complex, rhs: complex, t0: float,
            std_error: float | None = None, detail: str = "") -> VerificationReport:
    lhs, rhs = complex(lhs), complex(rhs)
    abs_res = abs(lhs - rhs)
    rel_res = abs_res / max(abs(rhs), _TINY)
    tol = spec.tol()
    if spec.method == "mc":
        passed = std_error is not None and abs_res <= 4.0 * std_error
    else:
        passed = rel_res <= tol
    return VerificationReport(
        spec=spec,
        lhs=lhs,
        rhs=rhs,
        abs_residual=abs_res,
        rel_residual=rel_res,
        std_error=std_error,
        passed=passed,
        wall_time_ms=(time.perf_counter() - t0) * 1e3,
        method=spec.method,
        detail=detail,
    )


def _vandermonde_times(inner: Callable | None) -> Callable[[np.ndarray], np.ndarray]:
    def f(Y: np.ndarray) -> np.ndarray:
        out = inner(Y) if inner is not None else np.ones(Y.shape[1])
        for i in range(Y.shape[0]):
            for j in range(i + 1, Y.shape[0]):
                out = out * (Y[j] - Y[i])
        return out

    return f


def _cnum(v) -> complex:
    return complex(float(v)) if isinstance(v, Fraction) else complex(v)


def _fnum(v) -> float:
    return float(v)


# ---------------------------------------------------------------------------
# the individual verifications
# ---------------------------------------------------------------------------


def verify_theorem1(spec: IntegralSpec) -> VerificationReport:
    """Determinant of quadrature matrix entries against the closed form."""
    t0 = time.perf_counter()
    spec.validate()
    n = spec.n
    x = [_fnum(v) for v in spec.x]
    alpha = [_cnum(v) for v in spec.alpha_vec]
    r = spec.r or 0
    mat = np.array(
        [[matrix_entry(i, j, x, alpha, r, spec.m) for j in range(1, n)] for i in range(1, n)],
        dtype=complex,
    )
    lhs = complex(np.linalg.det(mat))
    rhs = theorem1_rhs(x, alpha, r)
    return _finish(spec, lhs, rhs, t0)


def _selberg_average(spec: IntegralSpec, P: SparsePoly):
    """Integrate P against the Selberg density over [0,1]^n, nested or MC."""
    a, b, g = _fnum(spec.alpha), _fnum(spec.beta), _fnum(spec.gamma)
    f = poly_integrand(P)
    if spec.method == "mc":
        est = integrate_selberg_mc(f, spec.n, a, b, g, spec.n_samples, spec.seed)
        return est.value, est.std_error
    return integrate_selberg_nested(f, spec.n, a, b, g, spec.m), None


def verify_rz(spec: IntegralSpec) -> VerificationReport:
    """Selberg average of f_r against its gamma-product closed form."""
    t0 = time.perf_counter()
    spec.validate()
    P = f_r(spec.r, spec.n, Fraction(spec.gamma))
    lhs, se = _selberg_average(spec, P)
    rhs = rz_rhs(spec.n, spec.r, _cnum(spec.alpha), _cnum(spec.beta), _cnum(spec.gamma))
    return _finish(spec, lhs, rhs, t0, std_error=se)


def verify_kadell(spec: IntegralSpec) -> VerificationReport:
    """Normalized Selberg average of a Jack polynomial against its closed form."""
    t0 = time.perf_counter()
    spec.validate()
    g = Fraction(spec.gamma)
    P = jack_P(spec.lam, 1 / g, spec.n)
    raw, se = _selberg_average(spec, P)
    fact = math.factorial(spec.n)
    lhs = raw / fact
    se = se / fact if se is not None else None
    rhs = kadell_rhs(spec.n, spec.lam, _cnum(spec.alpha), _cnum(spec.beta), _cnum(spec.gamma))
    return _finish(spec, lhs, rhs, t0, std_error=se)


def verify_okounkov(spec: IntegralSpec) -> VerificationReport:
    """Interlacing integral representation of a Jack polynomial at a point."""
    t0 = time.perf_counter()
    spec.validate()
    n = spec.n
    g = Fraction(spec.gamma)
    gf = _fnum(spec.gamma)
    lam = Partition(spec.lam)
    if lam.length > n - 1:
        raise ValueError(f"{lam} needs at most n-1={n - 1} parts")
    P_inner = jack_P(lam, 1 / g, n - 1)
    integrand = _vandermonde_times(poly_integrand(P_inner))
    xf = [_fnum(v) for v in spec.x]
    integral = integrate_interlacing(integrand, xf, [gf] * n, spec.m)
    pref = oo_prefactor(lam, n, gf)
    for i in range(n):
        for j in range(i + 1, n):
            pref *= branch_pow(xf[j] - xf[i], 1 - 2 * gf)
    lhs = pref * integral
    P_outer = jack_P(lam, 1 / g, n)
    exact_pt = all(isinstance(v, (Fraction, int)) for v in spec.x)
    rhs = eval_poly(P_outer, [Fraction(v) for v in spec.x] if exact_pt else xf)
    return _finish(spec, lhs, complex(float(rhs)) if exact_pt else complex(rhs), t0)


def verify_dixon_anderson(spec: IntegralSpec) -> VerificationReport:
    """Interlacing integral with the Vandermonde integrand vs its closed form."""
    t0 = time.perf_counter()
    spec.validate()
    xf = [_fnum(v) for v in spec.x]
    exps = [_fnum(v) for v in spec.alpha_vec]
    lhs = integrate_interlacing(_vandermonde_times(None), xf, exps, spec.m)
    rhs = dixon_anderson_rhs(xf, exps)
    return _finish(spec, lhs, rhs, t0)


def verify_jn(spec: IntegralSpec) -> VerificationReport:
    """The ordered-interlacing kernel integral against its closed form.

    The region 0 < x_1 < y_1 < ... < y_{n-1} < x_n < 1 is the interlacing
    box of x relative to the augmented points (0, y_1, ..., y_{n-1}, 1)
    with exponent vector (alpha, gamma, ..., gamma, beta).
    """
    t0 = time.perf_counter()
    spec.validate()
    y = [_fnum(v) for v in (spec.y or ())]
    a, b, g = _fnum(spec.alpha), _fnum(spec.beta), _fnum(spec.gamma)
    x_aug = [0.0] + y + [1.0]
    exps = [a] + [g] * len(y) + [b]
    lhs = integrate_interlacing(_vandermonde_times(None), x_aug, exps, spec.m)
    rhs = jn_closed(y, a, b, g)
    return _finish(spec, lhs, rhs, t0)


def verify_identity_chain(n: int, r: int, gamma) -> VerificationReport:
    """Exact coefficient-level verification of the polynomial identity chain.

    In order:
      (i)   f_r(x; gamma) = r! (x_1...x_n)^r g_r(1/x) at alpha = 1/gamma,
      (ii)  P_(r) = r! g_r / (1/alpha)_r,
      (iii) P_(r^k)(x) = (x_1...x_n)^r P_(r^{n-k})(1/x) for k = 1..n,
      (iv)  f_r = (gamma)_r P_(r^{n-1}).

    All four are SparsePoly equalities; a failure names its step.
    """
    t0 = time.perf_counter()
    if n < 2:
        raise ValueError(f"chain needs n >= 2, got {n}")
    if r < 0:
        raise ValueError(f"need r >= 0, got {r}")
    g = Fraction(gamma)
    if g <= 0:
        raise ValueError(f"need gamma > 0, got {gamma}")
    alpha = 1 / g
    spec = IntegralSpec(theorem="IdentityChain", n=n, r=r, gamma=g, method="exact", tolerance=0.0)

    failed: list[str] = []
    fr = f_r(r, n, g)
    gr = g_series(n, alpha, r)[r]
    if fr != math.factorial(r) * laurent_invert(gr, r):
        failed.append("f_r = r! (x1...xn)^r g_r(1/x)")
    denom = pochhammer(1 / alpha, r)
    if jack_P([r] if r else [], alpha, n) != (Fraction(math.factorial(r)) / denom) * gr:
        failed.append("P_(r) = r! g_r / (1/alpha)_r")
    for k in range(1, n + 1):
        left = jack_P([r] * k if r else [], alpha, n)
        right = laurent_invert(jack_P([r] * (n - k) if r else [], alpha, n), r)
        if left != right:
            failed.append(f"P_(r^{k}) inversion (k={k})")
    if fr != pochhammer(g, r) * jack_P([r] * (n - 1) if r else [], alpha, n):
        failed.append("f_r = (gamma)_r P_(r^{n-1})")

    ok = not failed
    return VerificationReport(
        spec=spec,
        lhs=complex(1.0),
        rhs=complex(1.0),
        abs_residual=0.0 if ok else 1.0,
        rel_residual=0.0 if ok else 1.0,
        std_error=None,
        passed=ok,
        wall_time_ms=(time.perf_counter() - t0) * 1e3,
        method="exact",
        detail="" if ok else "failed: " + "; ".join(failed),
    )


def verify_reduction(n: int, lam, alpha, beta, gamma) -> VerificationReport:
    """Stripping the common part lam_n off a full partition.

    Exactly: P_lam = (x_1...x_n)^{lam_n} P_mu with mu = lam - (lam_n^n);
    numerically: kadell_rhs(lam, alpha) = kadell_rhs(mu, alpha + lam_n).
    """
    t0 = time.perf_counter()
    lam = Partition(lam)
    if lam.length != n:
        raise ValueError(f"reduction needs lam_n > 0, got {lam} with n={n}")
    last = lam.part(n - 1)
    mu = Partition([v - last for v in lam.padded(n)])
    g = Fraction(gamma)
    spec = IntegralSpec(
        theorem="Reduction", n=n, lam=lam, alpha=_to_scalar(alpha), beta=_to_scalar(beta),
        gamma=g, method="closedform", tolerance=1e-11,
    )

    P_lam = jack_P(lam, 1 / g, n)
    P_mu = jack_P(mu, 1 / g, n)
    box = SparsePoly.monomial(n, (last,) * n)
    exact_ok = P_lam == box * P_mu

    lhs = kadell_rhs(n, lam, _cnum(spec.alpha), _cnum(spec.beta), _cnum(g))
    rhs = kadell_rhs(n, mu, _cnum(spec.alpha) + last, _cnum(spec.beta), _cnum(g))
    rep = _finish(spec, lhs, rhs, t0, detail="" if exact_ok else "exact polynomial identity failed")
    if not exact_ok:
        rep = replace(rep, passed=False, rel_residual=max(rep.rel_residual, 1.0), abs_residual=max(rep.abs_residual, 1.0))
    return rep


def verify_recursion(n: int, lam, alpha, beta, gamma) -> VerificationReport:
    """One step of the dimension recursion at the closed-form level.

        K(n, lam; alpha, beta) = K(n-1, lam; alpha+gamma, beta+gamma)
            * Gamma(alpha) Gamma(beta) / Gamma(alpha+beta+(n-1)gamma)
            * prod_{i<n} Gamma(lam_i+(n-i+1)gamma) / Gamma(lam_i+(n-i)gamma)

    where K is the closed form of the ordered-region integral.
    """
    t0 = time.perf_counter()
    lam = Partition(lam)
    if n < 2:
        raise ValueError(f"recursion needs n >= 2, got {n}")
    if lam.length > n - 1:
        raise ValueError(f"recursion needs at most n-1 parts, got {lam}")
    a, b, g = _cnum(_to_scalar(alpha)), _cnum(_to_scalar(beta)), _cnum(_to_scalar(gamma))
    spec = IntegralSpec(
        theorem="Recursion", n=n, lam=lam, alpha=_to_scalar(alpha), beta=_to_scalar(beta),
        gamma=_to_scalar(gamma), method="closedform", tolerance=1e-10,
    )
    lhs = kadell_rhs(n, lam, a, b, g)
    fac = cmath.exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b + (n - 1) * g))
    lp = lam.padded(n - 1)
    for i in range(1, n):
        fac *= cmath.exp(
            log_gamma(lp[i - 1] + (n - i + 1) * g) - log_gamma(lp[i - 1] + (n - i) * g)
        )
    rhs = kadell_rhs(n - 1, lam, a + g, b + g, g) * fac
    return _finish(spec, lhs, rhs, t0)


# ---------------------------------------------------------------------------
# suite plumbing
# ---------------------------------------------------------------------------

_DISPATCH = {
    "T1": verify_theorem1,
    "T2": verify_rz,
    "T3": verify_kadell,
    "T4": verify_okounkov,
    "DixonAnderson": verify_dixon_anderson,
    "Jn": verify_jn,
}


def dispatch(spec: IntegralSpec) -> VerificationReport:
    """Run one spec through the matching verification."""
    if spec.theorem in _DISPATCH:
        return _DISPATCH[spec.theorem](spec)
    if spec.theorem == "IdentityChain":
        return verify_identity_chain(spec.n, spec.r, Fraction(spec.gamma))
    if spec.theorem == "Reduction":
        return verify_reduction(spec.n, spec.lam, spec.alpha, spec.beta, spec.gamma)
    if spec.theorem == "Recursion":
        return verify_recursion(spec.n, spec.lam, spec.alpha, spec.beta, spec.gamma)
    raise ValueError(f"unknown theorem {spec.theorem!r}")


def run_suite(specs: Sequence[IntegralSpec], parallel: bool = False) -> list[VerificationReport]:
    """Run all cases; report order always matches config order.

    Errors raised by a case (gamma poles, bad parameters) become failed
    reports with the reason in ``detail`` rather than aborting the suite.
    """

    def run_one(spec: IntegralSpec) -> VerificationReport:
        t0 = time.perf_counter()
        try:
            return dispatch(spec)
        except Exception as exc:  # pole or contract violation: failed-with-reason
            return VerificationReport(
                spec=spec,
                lhs=complex(float("nan")),
                rhs=complex(float("nan")),
                abs_residual=float("inf"),
                rel_residual=float("inf"),
                std_error=None,
                passed=False,
                wall_time_ms=(time.perf_counter() - t0) * 1e3,
                method=spec.method,
                detail=f"error: {exc}",
            )

    if parallel:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor() as pool:
            return list(pool.map(run_one, specs))
    return [run_one(s) for s in specs]


def load_config(path: str) -> list[IntegralSpec]:
    """Read a JSON list of case dictionaries; errors carry the case index."""
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise ValueError(f"{path}: config must be a JSON list of cases")
    return [IntegralSpec.from_json_dict(d, where=f"cases[{i}]") for i, d in enumerate(data)]


def write_report_json(reports: Sequence[VerificationReport], path: str) -> None:
    with open(path, "w") as fh:
        json.dump([r.to_json_dict() for r in reports], fh, indent=1)
        fh.write("\n")


def write_report_csv(reports: Sequence[VerificationReport], path: str) -> None:
    with open(path, "w") as fh:
        fh.write(VerificationReport.CSV_HEADER + "\n")
        for r in reports:
            fh.write(r.csv_row() + "\n")


def summarize(reports: Sequence[VerificationReport]) -> str:
    lines = [r.one_line() for r in reports]
    n_pass = sum(r.passed for r in reports)
    lines.append(f"{n_pass}/{len(reports)} cases passed")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# built-in suite
# ---------------------------------------------------------------------------

_F = Fraction
_GRID_GAMMA = (_F(1, 2), _F(1), _F(2), _F(1, 3))
_GRID_AB = (_F(1, 2), _F(1), _F(2), _F(5, 2))


def _t1_cases() -> list[IntegralSpec]:
    out = []
    alpha_sets = {
        2: [(_F(1), _F(1)), (_F(1, 2), _F(1)), (_F(2), _F(1))],
        3: [(_F(1), _F(1), _F(1)), (_F(1, 2), _F(1), _F(3, 2)), (_F(2), _F(1), _F(1))],
    }
    x_sets = {2: [(_F(0), _F(1))], 3: [(_F(0), _F(1), _F(2)), (_F(0), _F(1, 2), _F(2))]}
    for n in (2, 3):
        for x in x_sets[n]:
            for a in alpha_sets[n]:
                for r in (0, 1, 2):
                    out.append(IntegralSpec(theorem="T1", n=n, r=r, alpha_vec=a, x=x))
    return out


def _t2_cases() -> list[IntegralSpec]:
    out = []
    params = [
        (_F(1), _F(1), _F(1)),
        (_F(2), _F(1), _F(1)),
        (_F(1, 2), _F(1, 2), _F(1, 3)),
        (_F(5, 2), _F(1, 2), _F(1, 2)),
        (_F(1, 2), _F(2), _F(2)),
        (_F(2), _F(5, 2), _F(1, 3)),
    ]
    for n in (2, 3):
        for i, (a, b, g) in enumerate(params):
            out.append(IntegralSpec(theorem="T2", n=n, r=i % 4, alpha=a, beta=b, gamma=g))
    # Monte Carlo for dimensions beyond the nested rule
    out.append(IntegralSpec(theorem="T2", n=4, r=1, alpha=_F(1), beta=_F(1), gamma=_F(1, 2), method="mc", seed=41))
    out.append(IntegralSpec(theorem="T2", n=4, r=0, alpha=_F(2), beta=_F(1), gamma=_F(1), method="mc", seed=42))
    out.append(IntegralSpec(theorem="T2", n=5, r=1, alpha=_F(1), beta=_F(1), gamma=_F(1, 2), method="mc", seed=43))
    return out


def _t3_cases() -> list[IntegralSpec]:
    lam_sets = {
        2: [(1,), (2,), (2, 1), (2, 2), (3, 1), (3, 3), (4, 2)],
        3: [(1,), (1, 1), (1, 1, 1), (2, 1), (2, 2, 1), (3, 2, 1), (2, 2, 2)],
    }
    out = []
    for n, lams in lam_sets.items():
        for i, lam in enumerate(lams):
            a = _GRID_AB[i % 4]
            b = _GRID_AB[(i + 1) % 4]
            g = _GRID_GAMMA[i % 4]
            out.append(IntegralSpec(theorem="T3", n=n, lam=Partition(lam), alpha=a, beta=b, gamma=g))
    return out


def _t4_cases() -> list[IntegralSpec]:
    x_pool = {
        2: [(_F(0), _F(1)), (_F(1, 4), _F(7, 8)), (_F(1), _F(3))],
        3: [(_F(0), _F(1), _F(2)), (_F(0), _F(1, 2), _F(2)), (_F(1, 8), _F(3, 4), _F(5, 3))],
    }
    lam_sets = {2: [(1,), (2,), (4,)], 3: [(1,), (1, 1), (2, 1), (2, 2), (3, 1)]}
    out = []
    for n in (2, 3):
        for lam in lam_sets[n]:
            for g in (_F(1, 2), _F(1), _F(2)):
                for x in x_pool[n]:
                    out.append(IntegralSpec(theorem="T4", n=n, lam=Partition(lam), gamma=g, x=x))
    return out


def _proof_machinery_cases() -> list[IntegralSpec]:
    out = [
        IntegralSpec(theorem="DixonAnderson", n=2, alpha_vec=(_F(1, 2), _F(3, 2)), x=(_F(0), _F(1))),
        IntegralSpec(theorem="DixonAnderson", n=3, alpha_vec=(_F(1), _F(1), _F(1)), x=(_F(0), _F(1), _F(2))),
        IntegralSpec(theorem="DixonAnderson", n=3, alpha_vec=(_F(1, 2), _F(1), _F(3, 2)), x=(_F(0), _F(1), _F(3))),
        IntegralSpec(theorem="DixonAnderson", n=4, alpha_vec=(_F(1, 2), _F(5, 2), _F(3, 2), _F(1, 2)), x=(_F(-1), _F(1, 2), _F(1), _F(5, 2))),
        IntegralSpec(theorem="Jn", n=1, alpha=_F(3, 2), beta=_F(1, 2), gamma=_F(2)),
        IntegralSpec(theorem="Jn", n=2, y=(_F(1, 2),), alpha=_F(1), beta=_F(1), gamma=_F(1)),
        IntegralSpec(theorem="Jn", n=2, y=(_F(1, 3),), alpha=_F(2), beta=_F(1), gamma=_F(1)),
        IntegralSpec(theorem="Jn", n=3, y=(_F(1, 4), _F(7, 10)), alpha=_F(1, 2), beta=_F(3, 2), gamma=_F(1, 2)),
        IntegralSpec(theorem="Jn", n=3, y=(_F(1, 5), _F(1, 2)), alpha=_F(5, 2), beta=_F(1, 2), gamma=_F(1, 3)),
    ]
    for n, lam in [(2, ()), (3, (1,)), (3, (2, 2)), (4, (2, 1)), (5, (3, 2, 1, 1))]:
        for a, b, g in [(_F(1), _F(1), _F(1)), (_F(1, 2), _F(3, 2), _F(1, 2)), (_F(5, 2), _F(2), _F(1, 3))]:
            out.append(IntegralSpec(theorem="Recursion", n=n, lam=Partition(lam), alpha=a, beta=b, gamma=g, method="closedform"))
    for n, lam in [(2, (1, 1)), (2, (2, 1)), (3, (2, 2, 2)), (3, (3, 2, 1))]:
        for a, b, g in [(_F(1), _F(1), _F(1)), (_F(1, 2), _F(2), _F(1, 2))]:
            out.append(IntegralSpec(theorem="Reduction", n=n, lam=Partition(lam), alpha=a, beta=b, gamma=g, method="closedform"))
    return out


def _chain_cases() -> list[IntegralSpec]:
    return [
        IntegralSpec(theorem="IdentityChain", n=n, r=r, gamma=g, method="exact")
        for n in (2, 3, 4)
        for r in range(5)
        for g in (_F(1, 3), _F(1, 2), _F(1), _F(2), _F(3))
    ]


def builtin_suite(quick: bool = False) -> list[IntegralSpec]:
    """The built-in verification suite covering all theorems and machinery.

    ``quick`` keeps one representative case per theorem for smoke tests.
    """
    if quick:
        return [
            IntegralSpec(theorem="T1", n=2, r=1, alpha_vec=(_F(1), _F(1)), x=(_F(0), _F(1))),
            IntegralSpec(theorem="T2", n=2, r=1, alpha=_F(1), beta=_F(1), gamma=_F(1)),
            IntegralSpec(theorem="T3", n=2, lam=Partition((1,)), alpha=_F(1), beta=_F(1), gamma=_F(1)),
            IntegralSpec(theorem="T4", n=2, lam=Partition((1,)), gamma=_F(1), x=(_F(1), _F(3))),
            IntegralSpec(theorem="DixonAnderson", n=2, alpha_vec=(_F(1, 2), _F(3, 2)), x=(_F(0), _F(1))),
            IntegralSpec(theorem="Jn", n=2, y=(_F(1, 2),), alpha=_F(1), beta=_F(1), gamma=_F(1)),
            IntegralSpec(theorem="Recursion", n=3, lam=Partition((1,)), alpha=_F(1), beta=_F(1), gamma=_F(1), method="closedform"),
            IntegralSpec(theorem="Reduction", n=2, lam=Partition((1, 1)), alpha=_F(1), beta=_F(1), gamma=_F(1), method="closedform"),
            IntegralSpec(theorem="IdentityChain", n=2, r=2, gamma=_F(1, 2), method="exact"),
        ]
    return _t1_cases() + _t2_cases() + _t3_cases() + _t4_cases() + _proof_machinery_cases() + _chain_cases()
