"""Numerical integration for the singular integrands of the package.

Three integration schemes:

* Gauss-Jacobi rules on (0,1) with weight t^a (1-t)^b, built by the
  Golub-Welsch eigenvalue method, absorb the algebraic endpoint
  singularities of the one-dimensional matrix entries and of each
  coordinate of an interlacing box.  Away from the absorbed endpoints the
  remaining integrand factors are smooth, so convergence is spectral.

* The ordered-simplex Selberg integrals are computed by nested rules on
  scaled coordinates (x_k = s u_{k-1} ... ), with the vanishing
  |x_i - x_j|^{2 gamma} factors folded into each level's Jacobi weight.
  The leftover smooth factors such as (1 - s u)^{beta-1} have corner
  singularities where several coordinates approach 1 simultaneously, so
  each level uses a composite rule graded geometrically toward 1; this
  restores better-than-1e-9 accuracy for non-integer exponents at desk
  scale.

* Monte Carlo with independent Beta(alpha, beta) proposals per coordinate
  covers dimensions where tensor rules are too expensive; estimates are
  reproducible bit for bit for a fixed seed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import product as _iproduct
from typing import Callable, Sequence

import numpy as np

from selbergjack.symfunc import SparsePoly

__all__ = [
    "JacobiRule",
    "McEstimate",
    "integrate_interlacing",
    "integrate_selberg_mc",
    "integrate_selberg_nested",
    "jacobi_rule",
    "matrix_entry",
    "poly_integrand",
]


@dataclass(frozen=True)
class JacobiRule:
    """Nodes and weights for integral f -> int_0^1 t^a (1-t)^b f(t) dt."""

    m: int
    a_exp: float
    b_exp: float
    nodes: np.ndarray
    weights: np.ndarray

    def integrate(self, f: Callable[[np.ndarray], np.ndarray]) -> complex:
        return np.sum(self.weights * f(self.nodes))


def _log_beta(a: float, b: float) -> float:
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


def jacobi_rule(m: int, a_exp: float, b_exp: float) -> JacobiRule:
    """Gauss-Jacobi rule on (0,1) with weight t^a (1-t)^b, Golub-Welsch.

    Exact (to roundoff) for polynomial f of degree <= 2m-1.  Requires
    a_exp, b_exp > -1 for integrability.
    """
    if m < 1:
        raise ValueError(f"need at least one node, got m={m}")
    if a_exp <= -1 or b_exp <= -1:
        raise ValueError(f"weight exponents must exceed -1, got ({a_exp}, {b_exp})")

    # Recurrence coefficients for the weight (1-x)^A (1+x)^B on (-1,1)
    # with A = b_exp, B = a_exp; then map x -> t = (1+x)/2.
    A, B = float(b_exp), float(a_exp)
    diag = np.empty(m)
    offdiag = np.empty(max(m - 1, 0))
    diag[0] = (B - A) / (A + B + 2)
    for k in range(1, m):
        denom = (2 * k + A + B) * (2 * k + A + B + 2)
        diag[k] = (B * B - A * A) / denom
    if m > 1:
        # k = 1 uses the cancelled form: numerator and denominator share (1+A+B)
        offdiag[0] = math.sqrt(4 * (1 + A) * (1 + B) / ((2 + A + B) ** 2 * (3 + A + B)))
        for k in range(2, m):
            num = 4 * k * (k + A) * (k + B) * (k + A + B)
            den = (2 * k + A + B) ** 2 * (2 * k + A + B + 1) * (2 * k + A + B - 1)
            offdiag[k - 1] = math.sqrt(num / den)

    jac = np.diag(diag)
    if m > 1:
        jac += np.diag(offdiag, 1) + np.diag(offdiag, -1)
    vals, vecs = np.linalg.eigh(jac)
    mu0 = math.exp(_log_beta(a_exp + 1, b_exp + 1))  # total mass on (0,1)
    nodes = (vals + 1.0) / 2.0
    weights = mu0 * vecs[0, :] ** 2
    order = np.argsort(nodes)
    return JacobiRule(m, float(a_exp), float(b_exp), nodes[order], weights[order])


def _graded_rule(a_exp: float, b_exp: float, panel_order: int, levels: int = 18):
    """Composite rule for weight t^a (1-t)^b, graded geometrically toward 1.

    Panels [0,1/2], [1/2,3/4], ..., [1-2^-levels, 1].  The first panel
    absorbs t^a, the last absorbs (1-t)^b; in between the weight is smooth
    and multiplied into the panel weights.  Returns (nodes, weights).
    """
    base = jacobi_rule(panel_order, a_exp, 0.0)
    mid = jacobi_rule(panel_order, 0.0, 0.0)
    last = jacobi_rule(panel_order, 0.0, b_exp)

    nodes, weights = [], []
    # [0, 1/2]: t = xi/2, absorbs t^a; remaining (1-t)^b is smooth here
    c = 0.5
    t = c * base.nodes
    nodes.append(t)
    weights.append(c ** (a_exp + 1) * base.weights * (1 - t) ** b_exp)
    # middle panels [1-2^-k, 1-2^-(k+1)], k = 1..levels-1
    for k in range(1, levels):
        lo, hi = 1 - 2.0 ** (-k), 1 - 2.0 ** (-k - 1)
        t = lo + (hi - lo) * mid.nodes
        nodes.append(t)
        weights.append((hi - lo) * mid.weights * t**a_exp * (1 - t) ** b_exp)
    # [1-2^-levels, 1]: 1-t = delta (1-xi), absorbs (1-t)^b
    delta = 2.0 ** (-levels)
    t = 1 - delta * (1 - last.nodes)
    nodes.append(t)
    weights.append(delta ** (b_exp + 1) * last.weights * t**a_exp)
    return np.concatenate(nodes), np.concatenate(weights)


def poly_integrand(P: SparsePoly) -> Callable[[np.ndarray], np.ndarray]:
    """Compile an exact polynomial into a vectorized float evaluator.

    The returned callable takes an array of shape (n_vars, ...) of
    coordinate values and returns the polynomial values.
    """
    terms = [(exp, float(c)) for exp, c in P.sorted_terms()]
    n_vars = P.n_vars

    def f(X: np.ndarray) -> np.ndarray:
        X = np.asarray(X)
        if X.shape[0] != n_vars:
            raise ValueError(f"expected {n_vars} coordinate rows, got {X.shape[0]}")
        out = np.zeros(X.shape[1:], dtype=float)
        for exp, c in terms:
            term = np.full(X.shape[1:], c)
            for i, e in enumerate(exp):
                if e:
                    term = term * X[i] ** e
            out += term
        return out

    return f


def _branch_pow_arr(base: np.ndarray, exponent: complex) -> np.ndarray:
    """Vectorized power with the fixed arg = pi branch for negative bases."""
    base = np.asarray(base, dtype=float)
    if np.any(base == 0):
        raise ValueError("zero base in branch power")
    logs = np.log(np.abs(base)) + 1j * math.pi * (base < 0)
    out = np.exp(complex(exponent) * logs)
    return out


def matrix_entry(i: int, j: int, x: Sequence[float], alpha: Sequence, r: int, m: int = 64) -> complex:
    """One beta-type matrix entry by singular Gauss-Jacobi quadrature.

        a_{ij} = int_{x_i}^{x_{i+1}} y^{j+r-1} prod_l (y - x_l)^{alpha_l - 1} dy

    with 1-based i, j <= n-1.  The two factors vanishing at the interval
    endpoints become the Jacobi weight (Re alpha_i - 1, Re alpha_{i+1} - 1);
    any imaginary parts of those exponents and all non-adjacent factors
    stay in the smooth part, with negative bases on the arg = pi branch.
    """
    pts = [float(v) for v in x]
    if any(p >= q for p, q in zip(pts, pts[1:])):
        raise ValueError(f"x must be strictly increasing, got {pts}")
    n = len(pts)
    a = [complex(v) for v in alpha]
    if len(a) != n:
        raise ValueError("x and alpha must have the same length")
    if not (1 <= i <= n - 1 and 1 <= j <= n - 1):
        raise ValueError(f"need 1 <= i,j <= n-1 = {n - 1}, got i={i}, j={j}")
    if any(v.real <= 0 for v in a):
        raise ValueError("all exponents must have positive real part for integrability")
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")

    al, ar = a[i - 1], a[i]
    lo, hi = pts[i - 1], pts[i]
    h = hi - lo
    rule = jacobi_rule(m, al.real - 1.0, ar.real - 1.0)
    t = rule.nodes
    y = lo + h * t

    smooth = y ** (j + r - 1) + 0j
    if al.imag:
        smooth = smooth * np.exp(1j * al.imag * np.log(t))
    if ar.imag:
        smooth = smooth * np.exp(1j * ar.imag * np.log(1 - t))
    for l in range(n):
        if l in (i - 1, i):
            continue
        smooth = smooth * _branch_pow_arr(y - pts[l], a[l] - 1)

    # prefactor: h^{alpha_i-1} h^{alpha_{i+1}-1} h and the phase of
    # (y - x_{i+1}) = -h(1-t) on the arg = pi branch
    pref = cmath.exp((al + ar - 1) * math.log(h)) * cmath.exp(1j * math.pi * (ar - 1))
    return pref * np.sum(rule.weights * smooth)


def integrate_interlacing(
    f: Callable[[np.ndarray], np.ndarray],
    x: Sequence[float],
    exps: Sequence[float],
    m: int = 64,
) -> complex:
    """Integrate f(y) * prod_{i,j} |y_i - x_j|^{exps_j - 1} over y interlacing x.

    The region is the box y_i in (x_i, x_{i+1}) for i = 1..n-1.  Each
    coordinate's two adjacent singular factors become that coordinate's
    Jacobi weight; the non-adjacent factors and f are smooth there, so the
    tensor-product rule converges spectrally.

    ``f`` receives an array of shape (n-1, npoints) and must return the
    integrand values per point (it may be complex-valued).
    """
    pts = [float(v) for v in x]
    if len(pts) < 2:
        raise ValueError("need at least two reference points")
    if any(p >= q for p, q in zip(pts, pts[1:])):
        raise ValueError(f"x must be strictly increasing, got {pts}")
    ex = [float(v) for v in exps]
    if len(ex) != len(pts):
        raise ValueError("x and exps must have the same length")
    if any(v <= 0 for v in ex):
        raise ValueError("exponents must be positive for integrability")

    n = len(pts)
    rules = [jacobi_rule(m, ex[i] - 1.0, ex[i + 1] - 1.0) for i in range(n - 1)]
    # per-coordinate nodes mapped into (x_i, x_{i+1}) and constant prefactor
    pref = 1.0
    coord_nodes = []
    coord_weights = []
    for i, rule in enumerate(rules):
        h = pts[i + 1] - pts[i]
        pref *= h ** (ex[i] + ex[i + 1] - 1)
        coord_nodes.append(pts[i] + h * rule.nodes)
        coord_weights.append(rule.weights)

    grids = np.meshgrid(*coord_nodes, indexing="ij")
    Y = np.stack([g.reshape(-1) for g in grids])
    wgrids = np.meshgrid(*coord_weights, indexing="ij")
    W = np.ones(Y.shape[1])
    for wg in wgrids:
        W = W * wg.reshape(-1)

    smooth = np.ones(Y.shape[1])
    for i in range(n - 1):
        for l in range(n):
            if l in (i, i + 1):
                continue
            smooth = smooth * np.abs(Y[i] - pts[l]) ** (ex[l] - 1.0)

    vals = f(Y)
    return pref * np.sum(W * smooth * vals)


def integrate_selberg_nested(
    f: Callable[[np.ndarray], np.ndarray],
    n: int,
    alpha: float,
    beta: float,
    gamma: float,
    m: int = 64,
) -> float:
    """The Selberg-density integral of a symmetric f over [0,1]^n, n <= 3.

        int f(x) prod_{i<j} |x_i - x_j|^{2 gamma}
                 prod_i x_i^{alpha-1} (1-x_i)^{beta-1} dx

    computed as n! times the ordered-region integral in scaled coordinates
    (x_n = s, x_{n-1} = s v, x_{n-2} = s v u), with each level's vanishing
    factors absorbed into a graded composite Jacobi rule.  ``f`` receives
    coordinates of shape (n, npoints).
    """
    alpha, beta, gamma = float(alpha), float(beta), float(gamma)
    if n not in (1, 2, 3):
        raise ValueError(f"nested rule supports n in {{1,2,3}}, got n={n} (use Monte Carlo)")
    if alpha <= 0 or beta <= 0 or gamma <= 0:
        raise ValueError(f"need alpha, beta, gamma > 0, got ({alpha}, {beta}, {gamma})")
    panel = max(6, m // 6)

    if n == 1:
        rule = jacobi_rule(m, alpha - 1.0, beta - 1.0)
        return float(np.sum(rule.weights * f(rule.nodes[None, :])))

    if n == 2:
        un, uw = _graded_rule(alpha - 1.0, 2 * gamma, panel)
        sn, sw = _graded_rule(2 * alpha + 2 * gamma - 1.0, beta - 1.0, panel)
        S = sn[:, None]
        U = un[None, :]
        X = np.stack([(S * U).reshape(-1), np.broadcast_to(S, (len(sn), len(un))).reshape(-1)])
        G = (1.0 - S * U) ** (beta - 1.0) * f(X).reshape(len(sn), len(un))
        return 2.0 * float(sw @ G @ uw)

    un, uw = _graded_rule(alpha - 1.0, 2 * gamma, panel)
    vn, vw = _graded_rule(2 * alpha + 2 * gamma - 1.0, 2 * gamma, panel)
    sn, sw = _graded_rule(3 * alpha + 6 * gamma - 1.0, beta - 1.0, panel)
    V = vn[:, None]
    U = un[None, :]
    VU = V * U
    inner_vu = (1.0 - VU) ** (2 * gamma)
    total = 0.0
    # outermost coordinate in blocks to bound memory
    block = 32
    for start in range(0, len(sn), block):
        S = sn[start : start + block, None, None]
        SV = S * V[None, :, :]
        SVU = S * VU[None, :, :]
        shape = SVU.shape
        X = np.stack(
            [
                SVU.reshape(-1),
                np.broadcast_to(SV, shape).reshape(-1),
                np.broadcast_to(S, shape).reshape(-1),
            ]
        )
        G = (
            inner_vu[None, :, :]
            * (1.0 - SV) ** (beta - 1.0)
            * (1.0 - SVU) ** (beta - 1.0)
            * f(X).reshape(shape)
        )
        total += np.einsum("s,v,u,svu->", sw[start : start + block], vw, uw, G)
    return 6.0 * float(total)


@dataclass(frozen=True)
class McEstimate:
    """A Monte Carlo estimate with its standard error, reproducible by seed."""

    value: float
    std_error: float
    n_samples: int
    seed: int


def integrate_selberg_mc(
    f: Callable[[np.ndarray], np.ndarray],
    n: int,
    alpha: float,
    beta: float,
    gamma: float,
    n_samples: int = 2_000_000,
    seed: int = 0,
) -> McEstimate:
    """Importance-sampled Monte Carlo for the Selberg-density integral.

    Proposals are independent Beta(alpha, beta) per coordinate, which absorb
    the x^{alpha-1}(1-x)^{beta-1} factors exactly; the weight of a sample is
    then B(alpha, beta)^n * f(x) * prod_{i<j} |x_i - x_j|^{2 gamma}.
    Deterministic for a fixed seed (fixed chunking, fixed summation order).
    """
    alpha, beta, gamma = float(alpha), float(beta), float(gamma)
    if alpha <= 0 or beta <= 0:
        raise ValueError(f"Beta proposals need alpha, beta > 0, got ({alpha}, {beta})")
    if gamma <= 0:
        raise ValueError(f"need gamma > 0, got {gamma}")
    if n_samples < 1000:
        raise ValueError(f"need at least 1000 samples, got {n_samples}")

    rng = np.random.default_rng(seed)
    log_bn = n * _log_beta(alpha, beta)
    s1 = 0.0
    s2 = 0.0
    chunk = 200_000
    done = 0
    while done < n_samples:
        c = min(chunk, n_samples - done)
        X = rng.beta(alpha, beta, size=(c, n))
        w = np.ones(c)
        for i in range(n):
            for j in range(i + 1, n):
                w *= np.abs(X[:, i] - X[:, j]) ** (2 * gamma)
        vals = f(X.T) * w
        s1 += float(np.sum(vals))
        s2 += float(np.sum(vals * vals))
        done += c

    scale = math.exp(log_bn)
    mean = s1 / n_samples
    var = max(s2 / n_samples - mean * mean, 0.0)
    return McEstimate(
        value=scale * mean,
        std_error=scale * math.sqrt(var / n_samples),
        n_samples=n_samples,
        seed=seed,
    )
