"""Exact evaluators for the closed-form upper bounds on vertex count.

Integer-valued bounds return ``int``; bounds with rational inputs return
``Fraction``.  Bounds containing square roots are rounded *up* to the next
integer using integer square roots, so a reported upper bound is never
smaller than the true real value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from numbers import Rational
from typing import Optional, Union

Number = Union[int, Fraction]


@dataclass(frozen=True)
class BoundReport:
    name: str
    params: dict
    value: Optional[Number]
    valid: bool = True
    unmet: tuple[str, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        v = self.value
        if isinstance(v, Fraction) and v.denominator == 1:
            v = v.numerator
        return {
            "name": self.name,
            "params": {k: _jsonable(x) for k, x in self.params.items()},
            "value": None if v is None else str(v),
            "valid": self.valid,
            "unmet": list(self.unmet),
        }


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    return x


def _ceil_sqrt(x: int) -> int:
    r = isqrt(x)
    return r if r * r == x else r + 1


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def ceil_times_sqrt(c: Fraction, s: int, x: int) -> int:
    """Smallest integer >= c * sqrt(s) * x, for rational c >= 0 and integers s, x >= 0."""
    c = Fraction(c)
    if c < 0 or s < 0 or x < 0:
        raise ValueError("ceil_times_sqrt needs nonnegative arguments")
    # c*sqrt(s)*x = sqrt(num^2 * s * x^2) / den; nested ceilings are exact
    num, den = c.numerator, c.denominator
    return _ceil_div(_ceil_sqrt(num * num * s * x * x), den)


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        # decimal literal semantics: 0.1 means 1/10, not the nearest binary float
        return Fraction(repr(x))
    if isinstance(x, (int, Rational, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


# --------------------------------------------------------------------------


def moore_bound(delta: int, k: int) -> int:
    """Vertices within distance k of a vertex in a max-degree-delta graph."""
    if delta < 3:
        raise ValueError("moore_bound requires delta >= 3")
    if k < 0:
        raise ValueError("moore_bound requires k >= 0")
    num = delta * (delta - 1) ** k - 2
    assert num % (delta - 2) == 0
    return num // (delta - 2)


def min_degree_upper(min_deg: int, delta: int, k: int) -> int:
    if not 1 <= min_deg <= delta:
        raise ValueError("min_degree_upper requires 1 <= min degree <= delta")
    if k < 1:
        raise ValueError("min_degree_upper requires k >= 1")
    return 2 * min_deg * (delta - 1) ** (k - 1) + 1


def avg_degree_upper(avg_deg, delta: int, k: int) -> Fraction:
    d = _as_fraction(avg_deg)
    if not 0 < d <= delta:
        raise ValueError("avg_degree_upper requires 0 < average degree <= delta")
    if k < 1:
        raise ValueError("avg_degree_upper requires k >= 1")
    return 2 * d * (delta - 1) ** (k - 1) + 1


def arboricity_upper(b: int, k: int, delta: int) -> int:
    if b < 1 or k < 1 or delta < 1:
        raise ValueError("arboricity_upper requires b, k, delta >= 1")
    return 4 * k * (2 * b) ** k * delta ** (k // 2) + 1


def separation_upper(s: int, delta: int, k: int) -> int:
    """Vertex bound for a graph with a separation of order s."""
    if s < 1:
        raise ValueError("separation_upper requires s >= 1")
    if delta < 3:
        raise ValueError("separation_upper requires delta >= 3")
    if k < 1:
        raise ValueError("separation_upper requires k >= 1")
    if k % 2 == 1:
        return 3 * s * moore_bound(delta, (k - 1) // 2)
    half = k // 2
    spread = delta * (delta - 1) ** (half - 1)
    return ceil_times_sqrt(Fraction(3, 2), s, spread) + 3 * s * moore_bound(delta, half - 1)


def separation_upper_eps(s: int, delta: int, k: int, eps) -> BoundReport:
    """The epsilon form of the separation bound, with explicit validity thresholds.

    Odd k needs ``delta >= 6/eps + 2``; even k needs both
    ``delta >= 3/eps + 1`` and ``delta >= 9*sqrt(s)/eps + 2``.
    """
    eps = _as_fraction(eps)
    if eps <= 0:
        raise ValueError("separation_upper_eps requires eps > 0")
    if s < 1 or k < 1 or delta < 1:
        raise ValueError("separation_upper_eps requires s, k, delta >= 1")
    params = {"s": s, "delta": delta, "k": k, "eps": eps}
    unmet = []
    if k % 2 == 1:
        value = _ceil_fraction((3 + eps) * s * (delta - 1) ** ((k - 1) // 2))
        if delta < 6 / eps + 2:
            unmet.append(f"delta >= 6/eps + 2 = {_fmt(6 / eps + 2)}")
    else:
        value = ceil_times_sqrt(Fraction(3, 2) + eps, s, (delta - 1) ** (k // 2))
        if delta < 3 / eps + 1:
            unmet.append(f"delta >= 3/eps + 1 = {_fmt(3 / eps + 1)}")
        # delta - 2 >= 9 sqrt(s) / eps  <=>  ((delta - 2) eps)^2 >= 81 s
        if delta - 2 < 0 or ((delta - 2) * eps) ** 2 < 81 * s:
            unmet.append(f"delta >= 9*sqrt(s)/eps + 2 (s={s})")
    return BoundReport("separation-eps", params, value, not unmet, tuple(unmet))


def treewidth_upper_eps(t: int, delta: int, k: int, eps) -> BoundReport:
    if t < 0:
        raise ValueError("treewidth_upper_eps requires t >= 0")
    rep = separation_upper_eps(t + 1, delta, k, eps)
    params = {"t": t, "delta": delta, "k": k, "eps": rep.params["eps"]}
    return BoundReport("treewidth-eps", params, rep.value, rep.valid, rep.unmet)


def genus_upper_eps(genus: int, delta: int, k: int, eps) -> BoundReport:
    """Bound for Euler genus ``genus``, via the treewidth bound with t = (2g+3)k."""
    if genus < 0:
        raise ValueError("genus_upper_eps requires Euler genus >= 0")
    rep = treewidth_upper_eps((2 * genus + 3) * k, delta, k, eps)
    params = {"g": genus, "delta": delta, "k": k, "eps": rep.params["eps"]}
    return BoundReport("genus-eps", params, rep.value, rep.valid, rep.unmet)


def _ceil_fraction(x: Fraction) -> int:
    return _ceil_div(x.numerator, x.denominator)


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x} (~{float(x):.4g})"
