"""Exact sparse multivariate (Laurent) polynomials and symmetric families.

The scalar field is ``fractions.Fraction``.  A polynomial is a map from
integer exponent vectors (possibly negative entries) to nonzero rational
coefficients, so equality of polynomials is equality of term maps.

On top of the generic arithmetic this module builds the symmetric families
used throughout the package:

* ``monomial_sym``     the monomial symmetric polynomial m_lambda,
* ``jack_P``           the monic Jack polynomial P_lambda at a fixed
                       rational parameter alpha,
* ``f_r``              the multinomial/Pochhammer coefficient family
                       sum_{|nu|=r} C(r,nu) (gamma)_{nu_1}...(gamma)_{nu_n}
                       x^{r-nu},
* ``g_series``         the coefficients of prod_i (1 - t x_i)^{-1/alpha},
* ``laurent_invert``   the map P(x) -> (x_1...x_n)^r P(1/x_1,...,1/x_n).

Everything is pure and exact; polynomials are immutable once constructed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from selbergjack.combinat import (
    Partition,
    compositions_of,
    dominance_less,
    multinomial,
    partitions_of,
    pochhammer,
)

__all__ = [
    "JackParam",
    "SparsePoly",
    "eval_poly",
    "f_r",
    "g_series",
    "jack_P",
    "laurent_invert",
    "monomial_sym",
]


class SparsePoly:
    """A sparse multivariate Laurent polynomial with Fraction coefficients.

    ``terms`` maps exponent tuples of length ``n_vars`` to nonzero
    coefficients.  The zero polynomial is the empty map.  Instances are
    treated as immutable; all arithmetic returns new objects.
    """

    __slots__ = ("n_vars", "_terms")

    def __init__(self, n_vars: int, terms: Mapping[tuple[int, ...], object] | None = None):
        if n_vars < 1:
            raise ValueError(f"need at least one variable, got n_vars={n_vars}")
        self.n_vars = n_vars
        clean: dict[tuple[int, ...], Fraction] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n_vars:
                raise ValueError(f"exponent vector {exp} has length != n_vars={n_vars}")
            c = Fraction(coeff)
            if c != 0:
                clean[exp] = c
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n_vars: int) -> "SparsePoly":
        return cls(n_vars, {})

    @classmethod
    def constant(cls, n_vars: int, c) -> "SparsePoly":
        return cls(n_vars, {(0,) * n_vars: Fraction(c)})

    @classmethod
    def one(cls, n_vars: int) -> "SparsePoly":
        return cls.constant(n_vars, 1)

    @classmethod
    def monomial(cls, n_vars: int, exp: Sequence[int], coeff=1) -> "SparsePoly":
        return cls(n_vars, {tuple(exp): Fraction(coeff)})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        """A copy of the term map."""
        return dict(self._terms)

    def coeff(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int | None:
        """Maximum term degree, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self._terms}
        return len(degs) <= 1

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            if other.n_vars != self.n_vars:
                raise ValueError("polynomials have different variable counts")
            return other
        return SparsePoly.constant(self.n_vars, other)

    def __add__(self, other) -> "SparsePoly":
        other = self._coerce(other)
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, Fraction(0)) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return SparsePoly(self.n_vars, out)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.n_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "SparsePoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "SparsePoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            c = Fraction(other)
            return SparsePoly(self.n_vars, {e: c * v for e, v in self._terms.items()})
        other = self._coerce(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return SparsePoly(self.n_vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k}")
        out = SparsePoly.one(self.n_vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePoly):
            return self.n_vars == other.n_vars and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n_vars, frozenset(self._terms.items())))

    # -- structural maps ---------------------------------------------------

    def permute_vars(self, perm: Sequence[int]) -> "SparsePoly":
        """Relabel variables: new variable i carries the exponent of perm[i]."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n_vars)):
            raise ValueError(f"{perm} is not a permutation of 0..{self.n_vars - 1}")
        return SparsePoly(
            self.n_vars,
            {tuple(e[perm[i]] for i in range(self.n_vars)): c for e, c in self._terms.items()},
        )

    def invert_vars(self) -> "SparsePoly":
        """Substitute 1/x_i for every variable (negates all exponents)."""
        return SparsePoly(self.n_vars, {tuple(-v for v in e): c for e, c in self._terms.items()})

    def set_last_var_zero(self) -> "SparsePoly":
        """Set the last variable to 0 and drop it, reducing n_vars by one."""
        if self.n_vars < 2:
            raise ValueError("cannot drop below one variable")
        out: dict[tuple[int, ...], Fraction] = {}
        for e, c in self._terms.items():
            if e[-1] < 0:
                raise ValueError("cannot set a Laurent variable to zero")
            if e[-1] == 0:
                out[e[:-1]] = c
        return SparsePoly(self.n_vars - 1, out)

    # -- serialization -----------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms sorted by exponent vector (lexicographic), the canonical order."""
        return sorted(self._terms.items())

    def to_json_dict(self) -> dict:
        return {
            "n_vars": self.n_vars,
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "SparsePoly":
        return cls(d["n_vars"], {tuple(t["exp"]): Fraction(t["coeff"]) for t in d["terms"]})

    def __repr__(self) -> str:
        if not self._terms:
            return f"SparsePoly({self.n_vars}, 0)"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{i}^{v}" for i, v in enumerate(e) if v) or "1"
            bits.append(f"{c}*{mono}")
        return f"SparsePoly({self.n_vars}, {' + '.join(bits)})"


@dataclass(frozen=True)
class JackParam:
    """The Jack parameter alpha as an exact positive rational (gamma = 1/alpha)."""

    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.alpha <= 0:
            raise ValueError(f"Jack parameter must be positive, got alpha={self.alpha}")

    @property
    def gamma(self) -> Fraction:
        return 1 / self.alpha


def _as_param(alpha) -> JackParam:
    return alpha if isinstance(alpha, JackParam) else JackParam(Fraction(alpha))


def _distinct_permutations(values: tuple[int, ...]):
    """Yield the distinct permutations of a tuple (multiset permutations)."""
    values = tuple(sorted(values, reverse=True))
    n = len(values)

    def rec(remaining: list[int], prefix: tuple[int, ...]):
        if not remaining:
            yield prefix
            return
        seen = set()
        for idx, v in enumerate(remaining):
            if v in seen:
                continue
            seen.add(v)
            yield from rec(remaining[:idx] + remaining[idx + 1 :], prefix + (v,))

    yield from rec(list(values), ())


def monomial_sym(lam, n: int) -> SparsePoly:
    """The monomial symmetric polynomial m_lambda in n variables.

    The sum of all distinct permutations of the exponent vector lambda
    padded to length n, each with coefficient 1.
    """
    lam = Partition(lam)
    if lam.length > n:
        raise ValueError(f"{lam} has more than n={n} parts")
    return SparsePoly(n, {exp: Fraction(1) for exp in _distinct_permutations(lam.padded(n))})


def _lb_eigenvalue(mu: tuple[int, ...], alpha: Fraction) -> Fraction:
    # Laplace-Beltrami eigenvalue sum_i mu_i (mu_i - 1 - (2/alpha)(i - 1)).
    two_over = Fraction(2) / alpha
    return sum((Fraction(v) * (v - 1 - two_over * i) for i, v in enumerate(mu)), Fraction(0))


_jack_cache: dict[tuple[tuple[int, ...], Fraction, int], SparsePoly] = {}


def jack_P(lam, alpha, n: int) -> SparsePoly:
    """The monic Jack polynomial P_lambda^(alpha) in n variables, exact.

    Expanded in the monomial basis, P_lambda = m_lambda + sum over mu
    strictly below lambda in dominance order of u_{lambda,mu} m_mu.  The
    coefficients are determined by the Laplace-Beltrami eigenoperator
    recursion: with e(mu) = sum_i mu_i(mu_i - 1 - (2/alpha)(i-1)),

        u_{lambda,mu} = (2/alpha) * sum over raising moves
                        (mu_i - mu_j + 2t) u_{lambda, sort(mu + t e_i - t e_j)}
                        / (e(lambda) - e(mu)).

    The denominator never vanishes: e is strictly increasing along the
    dominance order at fixed weight for alpha > 0.
    """
    lam = Partition(lam)
    p = _as_param(alpha)
    if lam.length > n:
        raise ValueError(f"{lam} has more than n={n} parts")
    key = (lam.parts, p.alpha, n)
    cached = _jack_cache.get(key)
    if cached is not None:
        return cached

    w = lam.weight
    if w == 0:
        result = SparsePoly.one(n)
        _jack_cache[key] = result
        return result

    cands = [mu for mu in partitions_of(w, max_parts=n) if mu == lam or dominance_less(mu, lam)]
    # Descending lex order is a linear extension of dominance, so every
    # coefficient is available before it is needed.
    cands.sort(key=lambda m: m.padded(n), reverse=True)
    eig = {mu.parts: _lb_eigenvalue(mu.padded(n), p.alpha) for mu in cands}
    e_lam = eig[lam.parts]
    two_over = Fraction(2) / p.alpha

    u: dict[tuple[int, ...], Fraction] = {lam.parts: Fraction(1)}
    for mu in cands[1:]:
        padded = list(mu.padded(n))
        total = Fraction(0)
        for j in range(1, n):
            for i in range(j):
                for t in range(1, padded[j] + 1):
                    moved = padded.copy()
                    moved[i] += t
                    moved[j] -= t
                    nu = tuple(sorted(moved, reverse=True))
                    while nu and nu[-1] == 0:
                        nu = nu[:-1]
                    unu = u.get(nu)
                    if unu is not None:
                        total += (padded[i] - padded[j] + 2 * t) * unu
        u[mu.parts] = two_over * total / (e_lam - eig[mu.parts])

    result = SparsePoly.zero(n)
    for mu in cands:
        result = result + u[mu.parts] * monomial_sym(mu, n)
    _jack_cache[key] = result
    return result


def f_r(r: int, n: int, gamma) -> SparsePoly:
    """The coefficient family f_r(x; gamma), homogeneous of degree r(n-1).

    f_r = sum over compositions nu of r of
          C(r, nu) (gamma)_{nu_1} ... (gamma)_{nu_n} x^{r - nu}.
    """
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    if n < 1:
        raise ValueError(f"need at least one variable, got n={n}")
    g = Fraction(gamma)
    terms: dict[tuple[int, ...], Fraction] = {}
    for nu in compositions_of(r, n):
        c = Fraction(multinomial(r, nu))
        for v in nu:
            c *= pochhammer(g, v)
        if c:
            terms[tuple(r - v for v in nu)] = c
    return SparsePoly(n, terms)


def g_series(n: int, alpha, order: int) -> list[SparsePoly]:
    """Coefficients g_0..g_order of t^r in prod_i (1 - t x_i)^(-1/alpha).

    Computed by exact truncated power-series multiplication of the n
    single-variable binomial expansions; g_0 = 1 always.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    p = _as_param(alpha)
    gexp = p.gamma  # exponent in (1 - t x)^(-gexp)
    coeffs = [pochhammer(gexp, k) / math.factorial(k) for k in range(order + 1)]

    series: list[SparsePoly] = [SparsePoly.one(n)] + [SparsePoly.zero(n) for _ in range(order)]
    for i in range(n):
        new = [SparsePoly.zero(n) for _ in range(order + 1)]
        for d in range(order + 1):
            for k in range(d + 1):
                if coeffs[k] == 0 or series[d - k].is_zero():
                    continue
                exp = [0] * n
                exp[i] = k
                new[d] = new[d] + SparsePoly.monomial(n, exp, coeffs[k]) * series[d - k]
        series = new
    return series


def laurent_invert(P: SparsePoly, r: int) -> SparsePoly:
    """Return (x_1 ... x_n)^r * P(1/x_1, ..., 1/x_n).

    Every exponent of ``P`` must lie in [0, r] coordinatewise so that the
    result is a true polynomial; each exponent vector e becomes r - e.
    """
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    out: dict[tuple[int, ...], Fraction] = {}
    for e, c in P.terms.items():
        if any(v < 0 or v > r for v in e):
            raise ValueError(f"exponent {e} outside [0, {r}], inversion would leave Laurent terms")
        out[tuple(r - v for v in e)] = c
    return SparsePoly(P.n_vars, out)


def eval_poly(P: SparsePoly, point: Sequence):
    """Evaluate ``P`` at a point by term summation.

    Exact when the coordinates are int/Fraction, floating otherwise.
    Negative (Laurent) exponents require the matching coordinate to be
    nonzero.
    """
    point = list(point)
    if len(point) != P.n_vars:
        raise ValueError(f"point has length {len(point)}, polynomial has {P.n_vars} variables")
    total = 0
    for e, c in P.sorted_terms():
        val = c
        for x, k in zip(point, e):
            if k == 0:
                continue
            if x == 0 and k < 0:
                raise ValueError("zero coordinate with negative exponent")
            val = val * x**k
        total = total + val
    return total
