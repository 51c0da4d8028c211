"""Closed-form and recursive bounds on FR-code file size and reconstruction degree.

Three upper bounds on M_k for an (n, alpha, theta, rho) code:

* recursive bound g(k):   g(1) = alpha,
  g(k+1) = g(k) + alpha - ceil((rho*g(k) - k*alpha) / (n-k));
* dual bound: run the same recursion on the transposed parameters to get
  g'(l), then count sum_{l=1..theta} [k > n - g'(l)];
* floor bound: floor(theta * (1 - C(n-rho, k) / C(n, k))).

The floor bound applied to the transposed parameters inverts into a lower
bound on the reconstruction degree needed for a file of size M:

    k >= ceil(n * C(M-1, alpha) / C(theta, alpha)) + 1.

Everything is computed in exact integer / rational arithmetic; flooring and
ceiling happen only at the final step.  Ceilings are mathematical (toward
+infinity), which matters because rho*g(k) - k*alpha can be negative for
small k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError


def _check_params(n: int, alpha: int, theta: int, rho: int) -> None:
    for name, value in (("n", n), ("alpha", alpha), ("theta", theta), ("rho", rho)):
        if not isinstance(value, int) or value < 1:
            raise ParameterError(f"{name} must be a positive integer, got {value!r}")
    if n * alpha != theta * rho:
        raise ParameterError(
            f"invalid parameters: n*alpha = {n * alpha} != theta*rho = {theta * rho}"
        )
    if alpha > theta:
        raise ParameterError(f"alpha = {alpha} cannot exceed theta = {theta}")
    if rho > n:
        raise ParameterError(f"rho = {rho} cannot exceed n = {n}")


def _ceil_div(num: int, den: int) -> int:
    # mathematical ceiling for den > 0, valid for negative numerators
    return -((-num) // den)


def _g_sequence(n: int, alpha: int, rho: int) -> tuple[int, ...]:
    values = [alpha]
    for k in range(1, n):
        g = values[-1]
        values.append(g + alpha - _ceil_div(rho * g - k * alpha, n - k))
    return tuple(values)


def recursive_bound(n: int, alpha: int, theta: int, rho: int, k: int) -> int:
    """g(k), an upper bound on M_k."""
    _check_params(n, alpha, theta, rho)
    if not 1 <= k <= n:
        raise ParameterError(f"k must be in 1..{n}, got {k}")
    return _g_sequence(n, alpha, rho)[k - 1]


def dual_g_sequence(n: int, alpha: int, theta: int, rho: int) -> tuple[int, ...]:
    """g'(1)..g'(theta): the recursive bound run on the transposed parameters."""
    _check_params(n, alpha, theta, rho)
    return _g_sequence(theta, rho, alpha)


def dual_bound(n: int, alpha: int, theta: int, rho: int, k: int) -> int:
    """Upper bound on M_k obtained by transferring g' back through duality."""
    _check_params(n, alpha, theta, rho)
    if not 1 <= k <= n:
        raise ParameterError(f"k must be in 1..{n}, got {k}")
    g_prime = _g_sequence(theta, rho, alpha)
    return sum(1 for gp in g_prime if k > n - gp)


def floor_bound(n: int, theta: int, rho: int, k: int) -> int:
    """floor(theta * (1 - C(n-rho, k)/C(n, k))), an upper bound on M_k."""
    for name, value in (("n", n), ("theta", theta), ("rho", rho)):
        if not isinstance(value, int) or value < 1:
            raise ParameterError(f"{name} must be a positive integer, got {value!r}")
    if rho > n:
        raise ParameterError(f"rho = {rho} cannot exceed n = {n}")
    if not 1 <= k <= n:
        raise ParameterError(f"k must be in 1..{n}, got {k}")
    ratio = Fraction(math.comb(n - rho, k), math.comb(n, k))
    return math.floor(theta * (1 - ratio))


def min_reconstruction_degree(n: int, alpha: int, theta: int, file_size: int) -> int:
    """Lower bound on the reconstruction degree for a file of ``file_size`` packets."""
    for name, value in (("n", n), ("alpha", alpha), ("theta", theta)):
        if not isinstance(value, int) or value < 1:
            raise ParameterError(f"{name} must be a positive integer, got {value!r}")
    if alpha > theta:
        raise ParameterError(f"alpha = {alpha} cannot exceed theta = {theta}")
    if not 1 <= file_size <= theta:
        raise ParameterError(f"file size must be in 1..{theta}, got {file_size}")
    ratio = Fraction(n * math.comb(file_size - 1, alpha), math.comb(theta, alpha))
    return math.ceil(ratio) + 1


def mbr_capacity(k: int, d: int, beta: int) -> int:
    """Reference capacity (k*d - C(k,2)) * beta of a minimum-bandwidth
    regenerating system with repair degree d and per-helper transfer beta."""
    for name, value in (("k", k), ("d", d), ("beta", beta)):
        if not isinstance(value, int) or value < 1:
            raise ParameterError(f"{name} must be a positive integer, got {value!r}")
    if k > d:
        raise ParameterError(f"k = {k} cannot exceed d = {d}")
    return (k * d - math.comb(k, 2)) * beta


@dataclass(frozen=True)
class BoundProfile:
    """All three per-k bounds for one parameter tuple (k = 1..n)."""

    n: int
    alpha: int
    theta: int
    rho: int
    g: tuple[int, ...]
    g_prime: tuple[int, ...]
    recursive: tuple[int, ...]
    dual: tuple[int, ...]
    floor: tuple[int, ...]

    def tightest(self, k: int) -> int:
        return min(self.recursive[k - 1], self.dual[k - 1], self.floor[k - 1])

    def rows(self) -> list[dict]:
        out = []
        for k in range(1, self.n + 1):
            out.append(
                {
                    "k": k,
                    "recursive": self.recursive[k - 1],
                    "dual": self.dual[k - 1],
                    "floor": self.floor[k - 1],
                    "tightest": self.tightest(k),
                }
            )
        return out


def bound_profile(n: int, alpha: int, theta: int, rho: int) -> BoundProfile:
    _check_params(n, alpha, theta, rho)
    g = _g_sequence(n, alpha, rho)
    g_prime = _g_sequence(theta, rho, alpha)
    dual_values = tuple(
        sum(1 for gp in g_prime if k > n - gp) for k in range(1, n + 1)
    )
    floor_values = tuple(floor_bound(n, theta, rho, k) for k in range(1, n + 1))
    return BoundProfile(
        n=n,
        alpha=alpha,
        theta=theta,
        rho=rho,
        g=g,
        g_prime=g_prime,
        recursive=g,
        dual=dual_values,
        floor=floor_values,
    )
