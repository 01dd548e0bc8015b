"""Lower bounds on the independence number of k-uniform hypergraphs.

Every bound whose ceiling can be settled by integer arithmetic is settled that
way.  Only the CPS bound, which involves sqrt(pi), is decided in floating
point (50 significant digits), and it reports when the sum lands within
``CPS_BOUNDARY_EPS`` of an integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod
from typing import Iterable, Sequence

import mpmath

from .errors import DomainError, InvalidParams, OutOfRange, WrongUniformity

BOUND_NAMES = ("ell", "turan", "turan_spencer", "caro_tuza", "cps")
CPS_BOUNDARY_EPS = 1e-9
_DPS = 50


def rising_factorial(x: int, k: int) -> int:
    """x (x+1) ... (x+k-1); 1 for k = 0."""
    if k < 0:
        raise DomainError(f"negative count {k}")
    return prod(range(x, x + k))


def falling_factorial(x: int, k: int) -> int:
    """x (x-1) ... (x-k+1); 1 for k = 0."""
    if k < 0:
        raise DomainError(f"negative count {k}")
    return prod(range(x - k + 1, x + 1))


def _check_f_domain(n: int, k: int, i: int) -> None:
    if k < 2 or n < k:
        raise DomainError(f"need n >= k >= 2, got n={n}, k={k}")
    if not k - 1 <= i <= n:
        raise DomainError(f"i={i} outside {k - 1}..{n}")


def f_eval(n: int, k: int, i: int) -> Fraction:
    """C(n, i+1) / C(n, i-k+1), computed from rising/falling factorials."""
    _check_f_domain(n, k, i)
    return Fraction(rising_factorial(n - i, k), falling_factorial(i + 1, k))


def f_eval_binomial(n: int, k: int, i: int) -> Fraction:
    """Same value as :func:`f_eval`, straight from the binomial ratio."""
    _check_f_domain(n, k, i)
    return Fraction(comb(n, i + 1), comb(n, i - k + 1))


def _f_le(n: int, k: int, i: int, m: int) -> bool:
    # f(i) <= m, cross-multiplied; falling(i+1, k) > 0 on the domain
    return rising_factorial(n - i, k) <= m * falling_factorial(i + 1, k)


def _check_ell_args(n: int, m: int, k: int) -> None:
    if k < 2:
        raise InvalidParams(f"k must be >= 2, got {k}")
    if n < 1:
        raise InvalidParams(f"n must be >= 1, got {n}")
    top = comb(n, k)
    if not 0 <= m <= top:
        raise InvalidParams(f"m={m} outside 0..{top} for n={n}, k={k}")


def ell_bound(n: int, m: int, k: int, method: str = "bisect") -> int:
    """Least i in {k-1, ..., n} with f(i) <= m.

    ``method="scan"`` walks i upward; ``"bisect"`` (default) uses that f is
    strictly decreasing.  Both decide with exact integer comparisons.
    """
    _check_ell_args(n, m, k)
    if n < k:
        return n
    if method == "scan":
        for i in range(k - 1, n + 1):
            if _f_le(n, k, i, m):
                return i
        raise AssertionError("f(n) = 0 <= m must terminate the scan")
    if method != "bisect":
        raise ValueError(f"unknown method {method!r}")
    lo, hi = k - 1, n  # f(hi) <= m always holds
    while lo < hi:
        mid = (lo + hi) // 2
        if _f_le(n, k, mid, m):
            hi = mid
        else:
            lo = mid + 1
    return lo


def ell_closed_form_k2(n: int, m: int) -> int:
    """ell for graphs from the root of (m-1) i^2 + (m+2n+1) i = n^2 + n.

    The float root only seeds the search; the returned value is pinned by the
    exact integer form of the inequality.
    """
    if n < 2:
        raise InvalidParams(f"n must be >= 2, got {n}")
    if not 0 <= m <= comb(n, 2):
        raise InvalidParams(f"m={m} outside 0..{comb(n, 2)}")
    if m == 0:
        return n
    if m == 1:
        return -(-n // 2)

    def ok(i: int) -> bool:
        return (m - 1) * i * i + (m + 2 * n + 1) * i >= n * n + n

    b = m + 2 * n + 1
    root = (math.sqrt(4 * (m - 1) * (n * n + n) + b * b) - b) / (2 * (m - 1))
    i = min(max(math.ceil(root), 1), n)
    while i > 1 and ok(i - 1):
        i -= 1
    while not ok(i):
        i += 1
    return i


def turan_bound(n: int, m: int) -> int:
    """ceil(n^2 / (2m + n)) for a graph with n vertices and m edges."""
    if n < 1 or m < 0:
        raise InvalidParams(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    return -(-(n * n) // (2 * m + n))


def turan_spencer_applicable(n: int, m: int, k: int) -> bool:
    return k * m >= n


def turan_spencer_bound(n: int, m: int, k: int) -> int:
    """ceil(((k-1)/k) n (n/(km))^(1/(k-1))), defined for m >= n/k.

    The value is the least r with r^(k-1) k^k m >= n^k (k-1)^(k-1).
    """
    if k < 2 or n < 1:
        raise InvalidParams(f"need n >= 1, k >= 2, got n={n}, k={k}")
    if not turan_spencer_applicable(n, m, k):
        raise OutOfRange(f"Turan-Spencer bound needs m >= n/k; got m={m}, n={n}, k={k}")

    lhs_unit = k**k * m
    rhs = n**k * (k - 1) ** (k - 1)

    def ok(r: int) -> bool:
        return r ** (k - 1) * lhs_unit >= rhs

    with mpmath.workdps(_DPS):
        x = mpmath.mpf(k - 1) / k * n * mpmath.root(mpmath.mpf(n) / (k * m), k - 1)
        r = max(int(mpmath.ceil(x)), 1)
    while r > 1 and ok(r - 1):
        r -= 1
    while not ok(r):
        r += 1
    return r


def caro_tuza_term(d: int, k: int) -> Fraction:
    """1 / C(d + 1/(k-1), d) = prod_{j=1..d} (k-1) j / ((k-1) j + 1)."""
    if d < 0:
        raise DomainError(f"negative degree {d}")
    num = den = 1
    for j in range(1, d + 1):
        num *= (k - 1) * j
        den *= (k - 1) * j + 1
    return Fraction(num, den)


def caro_tuza_sum(degrees: Iterable[int], k: int) -> Fraction:
    if k < 2:
        raise InvalidParams(f"k must be >= 2, got {k}")
    cache: dict[int, Fraction] = {}
    total = Fraction(0)
    for d in degrees:
        if d not in cache:
            cache[d] = caro_tuza_term(d, k)
        total += cache[d]
    return total


def caro_tuza_bound(degrees: Iterable[int], k: int) -> int:
    return math.ceil(caro_tuza_sum(degrees, k))


def cps_evaluate(degrees: Sequence[int], k: int = 3) -> tuple[int, bool]:
    """Return (CPS bound, near_integer) where near_integer flags a sum within
    ``CPS_BOUNDARY_EPS`` of an integer, i.e. a ceiling that 50 digits might not settle."""
    if k != 3:
        raise WrongUniformity(f"cps requires k=3, got k={k}")
    with mpmath.workdps(_DPS):
        s = mpmath.fsum(1 / mpmath.sqrt(d + 1) for d in degrees)
        value = mpmath.sqrt(mpmath.pi) / 2 * s
        nearest = mpmath.nint(value)
        near = abs(value - nearest) < CPS_BOUNDARY_EPS
        return int(mpmath.ceil(value)), bool(near)


def cps_bound(degrees: Sequence[int], k: int = 3) -> int:
    return cps_evaluate(degrees, k)[0]


# --- per-instance report ----------------------------------------------------


@dataclass(frozen=True)
class NotApplicable:
    reason: str

    def __str__(self) -> str:
        return f"na: {self.reason}"


@dataclass
class BoundReport:
    n: int
    m: int
    k: int
    bounds: dict[str, int | NotApplicable]
    alpha: int | None = None
    alpha_exhausted: bool = False
    warnings: list[str] = field(default_factory=list)
    witness: tuple[int, ...] | None = None
    nodes_explored: int | None = None

    @property
    def ell(self) -> int | NotApplicable:
        return self.bounds["ell"]

    def value(self, name: str) -> int | None:
        v = self.bounds[name]
        return None if isinstance(v, NotApplicable) else v

    def present(self) -> dict[str, int]:
        return {name: v for name, v in self.bounds.items() if not isinstance(v, NotApplicable)}


ALIASES = {"ts": "turan_spencer", "ct": "caro_tuza", "t": "turan"}


def normalize_selection(which: Iterable[str] | None) -> tuple[str, ...]:
    if which is None:
        return BOUND_NAMES
    out = []
    for w in which:
        name = ALIASES.get(w.strip().lower(), w.strip().lower())
        if name == "all":
            return BOUND_NAMES
        if name not in BOUND_NAMES:
            raise InvalidParams(f"unknown bound {w!r}; choose from {', '.join(BOUND_NAMES)}")
        if name not in out:
            out.append(name)
    return tuple(out)


def compute_report(h, which: Iterable[str] | None = None, with_alpha: bool = False,
                   solver_config=None) -> BoundReport:
    """All requested bounds for ``h``; inapplicable ones carry a reason."""
    from .alpha import SolverConfig, alpha_exact

    selected = normalize_selection(which)
    n, m, k = h.n, h.m, h.k
    degrees = h.degrees()
    warnings: list[str] = []
    bounds: dict[str, int | NotApplicable] = {}
    for name in BOUND_NAMES:
        if name not in selected:
            bounds[name] = NotApplicable("not requested")
        elif name == "ell":
            bounds[name] = ell_bound(n, m, k)
        elif name == "turan":
            bounds[name] = turan_bound(n, m) if k == 2 else NotApplicable("turan requires k=2")
        elif name == "turan_spencer":
            if turan_spencer_applicable(n, m, k):
                bounds[name] = turan_spencer_bound(n, m, k)
            else:
                bounds[name] = NotApplicable("turan_spencer requires m >= n/k")
        elif name == "caro_tuza":
            bounds[name] = caro_tuza_bound(degrees, k)
        elif name == "cps":
            if k != 3:
                bounds[name] = NotApplicable("cps requires k=3")
            else:
                value, near = cps_evaluate(degrees)
                bounds[name] = value
                if near:
                    warnings.append("cps: BoundaryWarning, sum within 1e-9 of an integer")
    report = BoundReport(n, m, k, bounds, warnings=warnings)
    if with_alpha:
        cfg = solver_config or SolverConfig()
        res = alpha_exact(h, cfg)
        report.alpha = res.alpha
        report.alpha_exhausted = res.exhausted
        report.witness = tuple(sorted(res.witness))
        report.nodes_explored = res.nodes_explored
        if not res.exhausted:
            warnings.append(
                f"alpha: node budget {cfg.node_budget} exceeded; value is a lower estimate"
            )
    return report
