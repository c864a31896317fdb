"""Two-variable link polynomial by skein recursion, with specializations.

The unreduced invariant P lives in exact Laurent polynomials over (a, z).
It is pinned down by the crossing relation

    a*P(L+) - a^(-1)*P(L-) = z*P(L0)

together with the value (a - a^(-1))/z on the unknot, where L+ carries the
positive crossing, L- the switched one and L0 the oriented smoothing.  The
recursion switches the first crossing met on its understrand (fixed
traversal order), smoothing as it goes: switching strictly approaches a
descending diagram, smoothing drops a crossing, and descending diagrams
close up into unlinks.

All other normalizations are derived from P by exact division, never by a
second recursion, so a convention slip shows up as a division error instead
of a silently wrong value.
"""

from __future__ import annotations

import os

from .laurent import LaurentPoly, exact_div, one, substitute, var
from .linkdiag import (LinkDiagram, canonical_key, first_non_descending,
                       simplify, smooth_crossing, switch_crossing)

DEFAULT_MAX_CROSSINGS = 14
_ENV_BOUND = "ROOTCHI_MAX_CROSSINGS"

_A = var("a")
_Z = var("z")
_T = var("t")
_Q = var("q")
_DELTA = (_A - _A ** -1) * _Z ** -1  # unreduced unknot value
_A_FACTOR = _A - _A ** -1


class ResourceBoundError(RuntimeError):
    """Crossing count exceeds the configured recursion bound."""


class InvariantError(RuntimeError):
    """An identity that must hold for genuine link polynomials failed."""


def crossing_bound() -> int:
    raw = os.environ.get(_ENV_BOUND)
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_MAX_CROSSINGS


def _value(d: LinkDiagram, memo: dict) -> LaurentPoly:
    d = simplify(d)
    if not d.crossings:
        return _DELTA ** d.unknot_count if d.unknot_count else one()
    key = canonical_key(d)
    cached = memo.get(key)
    if cached is not None:
        return cached
    bad = first_non_descending(d)
    if bad is None:
        val = _DELTA ** d.components
    else:
        switched = switch_crossing(d, bad)
        smoothed = smooth_crossing(d, bad)
        if d.crossings[bad].sign > 0:
            # this diagram is L+: P = a^-2 P(switched) + a^-1 z P(smoothed)
            val = _A ** -2 * _value(switched, memo) + _A ** -1 * _Z * _value(smoothed, memo)
        else:
            # this diagram is L-: P = a^2 P(switched) - a z P(smoothed)
            val = _A ** 2 * _value(switched, memo) - _A * _Z * _value(smoothed, memo)
    memo[key] = val
    return val


def homfly_unreduced(d: LinkDiagram, max_crossings: int | None = None) -> LaurentPoly:
    """P(L) in (a, z); split unknot components multiply in the unknot value."""
    bound = max_crossings if max_crossings is not None else crossing_bound()
    if len(d.crossings) > bound:
        raise ResourceBoundError(
            f"{len(d.crossings)} crossings exceeds the bound {bound}")
    return _value(d, {})


def homfly_reduced(d: LinkDiagram, unreduced: LaurentPoly | None = None) -> LaurentPoly:
    """P with the unknot value divided out; may carry negative z powers."""
    p = unreduced if unreduced is not None else homfly_unreduced(d)
    return exact_div(p, _A_FACTOR) * _Z


def homfly_middle(d: LinkDiagram, unreduced: LaurentPoly | None = None) -> LaurentPoly:
    """The normalization whose unknot value is -1/z."""
    p = unreduced if unreduced is not None else homfly_unreduced(d)
    return -exact_div(p, _A_FACTOR)


def alexander(d: LinkDiagram, unreduced: LaurentPoly | None = None) -> LaurentPoly:
    """Symmetric one-variable polynomial in t^(1/2), from the a -> 1 shadow."""
    p = unreduced if unreduced is not None else homfly_unreduced(d)
    q = exact_div(p, _A_FACTOR)
    r = _Z * substitute(q, "a", one())
    lo, _ = r.exponent_range("z")
    if lo < 0:
        raise InvariantError("a=1 specialization kept negative z powers")
    s_image = LaurentPoly.make(("t",), {(1,): 1, (-1,): -1})  # t^(1/2) - t^(-1/2)
    return substitute(r, "z", s_image)


def quantum_integer(n: int) -> LaurentPoly:
    """(q^n - q^-n)/(q - q^-1) as a genuine Laurent polynomial."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return exact_div(_Q ** n - _Q ** -n, _Q - _Q ** -1)


def sln_poly(d: LinkDiagram, n: int, reduced: bool = True,
             unreduced_homfly: LaurentPoly | None = None) -> LaurentPoly:
    """Specialize a -> q^n; the reduced variant divides by (q^n - q^-n)/(q - q^-1).

    Negative z powers are cleared first and divided back out exactly, so the
    result is always a genuine Laurent polynomial in q.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    p = unreduced_homfly if unreduced_homfly is not None else homfly_unreduced(d)
    lo, _ = p.exponent_range("z")  # doubled exponent: actual min power is lo/2
    shift = (-lo) // 2 if lo < 0 else 0
    cleared = p * _Z ** shift
    s = substitute(cleared, "a", _Q ** n)
    s = substitute(s, "z", _Q - _Q ** -1)
    if shift:
        s = exact_div(s, (_Q - _Q ** -1) ** shift)
    if reduced:
        s = exact_div(s, quantum_integer(n))
    return s
