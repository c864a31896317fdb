"""Exact sparse Laurent polynomials with half-integer exponents.

Exponents are stored doubled: the exponent p/2 is kept as the integer p, so
a term like t^(1/2) has stored exponent 1 and t^2 has stored exponent 4.
This keeps all exponent arithmetic integral.  Coefficients are
arbitrary-precision rationals.

Values are immutable and canonical: zero coefficients are dropped, variables
that occur only with exponent zero are dropped, variable names are kept
sorted, and terms are kept in descending graded-lexicographic order.  Two
equal polynomials therefore compare equal structurally and hash alike.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

Rat = int | Fraction


class PolyError(ValueError):
    """Base error for Laurent polynomial operations."""


class PolyParseError(PolyError):
    """Malformed polynomial text."""


class VariableMismatchError(PolyError):
    """Operands live over incompatible variable sets."""


class ExactDivisionError(PolyError):
    """Division left a nonzero remainder."""


def _term_sort_key(exps: tuple[int, ...]):
    # descending graded lex: sort by this key ascending
    return (-sum(exps), tuple(-e for e in exps))


@dataclass(frozen=True)
class LaurentPoly:
    """A sparse Laurent polynomial over Q in named variables.

    ``vars`` is a sorted tuple of variable names; ``terms`` maps doubled
    exponent vectors (one slot per variable) to nonzero rational
    coefficients, stored as a tuple sorted in descending graded-lex order.
    Use :func:`poly`, :func:`var`, :func:`mono` or the arithmetic operators
    to build values; the raw constructor assumes canonical input.
    """

    vars: tuple[str, ...]
    terms: tuple[tuple[tuple[int, ...], Fraction], ...]

    # -- construction -----------------------------------------------------

    @staticmethod
    def make(vars: tuple[str, ...], term_map: dict[tuple[int, ...], Rat]) -> "LaurentPoly":
        """Canonicalize and build: drops zeros and unused variables."""
        cleaned: dict[tuple[int, ...], Fraction] = {}
        for exps, c in term_map.items():
            if len(exps) != len(vars):
                raise PolyError("exponent vector length does not match variable count")
            c = Fraction(c)
            if c == 0:
                continue
            cleaned[tuple(exps)] = cleaned.get(tuple(exps), Fraction(0)) + c
        cleaned = {e: c for e, c in cleaned.items() if c != 0}
        # drop variables that never occur with nonzero exponent
        used = [i for i in range(len(vars)) if any(e[i] != 0 for e in cleaned)]
        if len(used) != len(vars):
            vars = tuple(vars[i] for i in used)
            cleaned = {tuple(e[i] for i in used): c for e, c in cleaned.items()}
        # keep variables sorted by name
        order = sorted(range(len(vars)), key=lambda i: vars[i])
        if order != list(range(len(vars))):
            vars = tuple(vars[i] for i in order)
            cleaned = {tuple(e[i] for i in order): c for e, c in cleaned.items()}
        terms = tuple(sorted(cleaned.items(), key=lambda t: _term_sort_key(t[0])))
        return LaurentPoly(vars, terms)

    def term_map(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self.terms)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.vars

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (zero for the empty one)."""
        if self.vars:
            raise PolyError("not a constant polynomial")
        return self.terms[0][1] if self.terms else Fraction(0)

    def exponent_range(self, name: str) -> tuple[int, int]:
        """(min, max) doubled exponent of ``name``; (0, 0) if absent."""
        if name not in self.vars or not self.terms:
            return (0, 0)
        i = self.vars.index(name)
        es = [e[i] for e, _ in self.terms]
        return (min(es), max(es))

    # -- alignment ---------------------------------------------------------

    def with_vars(self, vars: tuple[str, ...]) -> "LaurentPoly":
        """Re-express over a sorted superset of the current variables.

        Unlike :meth:`make`, the requested variables are all kept, so the
        result can be combined slotwise with other polynomials over ``vars``.
        """
        if vars == self.vars:
            return self
        if tuple(sorted(vars)) != vars:
            raise VariableMismatchError("target variables must be sorted")
        missing = [v for v in self.vars if v not in vars]
        if missing:
            raise VariableMismatchError(f"cannot drop variables {missing}")
        pos = {v: i for i, v in enumerate(vars)}
        idx = [pos[v] for v in self.vars]
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms:
            vec = [0] * len(vars)
            for j, e in zip(idx, exps):
                vec[j] = e
            out[tuple(vec)] = c
        terms = tuple(sorted(out.items(), key=lambda t: _term_sort_key(t[0])))
        return LaurentPoly(vars, terms)

    @staticmethod
    def _aligned(p: "LaurentPoly", q: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly", tuple[str, ...]]:
        if p.vars == q.vars:
            return p, q, p.vars
        vs = tuple(sorted(set(p.vars) | set(q.vars)))
        return p.with_vars(vs), q.with_vars(vs), vs

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p, q, vs = LaurentPoly._aligned(self, other)
        out = p.term_map()
        for e, c in q.terms:
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPoly.make(vs, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.vars, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p, q, vs = LaurentPoly._aligned(self, other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in p.terms:
            for e2, c2 in q.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly.make(vs, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise PolyError("negative powers exist only for monomials")
            exps, c = self.terms[0]
            inv = LaurentPoly.make(self.vars, {tuple(-e for e in exps): Fraction(1) / c})
            return inv ** (-k)
        result = one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"LaurentPoly({serialize(self)!r})"


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return const(x)
    return NotImplemented


# -- convenience constructors ---------------------------------------------


def zero() -> LaurentPoly:
    return LaurentPoly((), ())


def one() -> LaurentPoly:
    return const(1)


def const(c: Rat) -> LaurentPoly:
    return LaurentPoly.make((), {(): Fraction(c)})


def var(name: str) -> LaurentPoly:
    return LaurentPoly.make((name,), {(2,): Fraction(1)})


def mono(coeff: Rat = 1, /, **exponents: Rat) -> LaurentPoly:
    """Monomial with rational exponents in units of 1/2, e.g.
    ``mono(3, t=Fraction(1, 2))`` is 3*t^(1/2)."""
    vars = tuple(exponents)
    vec = []
    for v in vars:
        d = Fraction(exponents[v]) * 2
        if d.denominator != 1:
            raise PolyError(f"exponent of {v} must be a half-integer")
        vec.append(int(d))
    return LaurentPoly.make(vars, {tuple(vec): Fraction(coeff)})


def arith(p: LaurentPoly, q: LaurentPoly, op: str) -> LaurentPoly:
    """Named arithmetic entry point: op is one of add/sub/mul.

    Requires equal variable sets unless one operand is constant.  The
    Python operators are more permissive and work over the union.
    """
    if not (p.vars == q.vars or p.is_constant() or q.is_constant()):
        raise VariableMismatchError(
            f"variable sets {p.vars} and {q.vars} differ and neither is constant")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise PolyError(f"unknown op {op!r}")


# -- substitution ------------------------------------------------------------


def substitute(p: LaurentPoly, name: str, image: LaurentPoly | Rat) -> LaurentPoly:
    """Substitute ``image`` for the variable ``name``.

    A monomial image may be raised to any half-integer power that lands on
    half-integer exponents again (the coefficient must be 1 when an odd
    doubled exponent asks for its square root).  A non-monomial image is
    only accepted when every occurrence of the variable has a nonnegative
    integer exponent; clearing denominators first is the caller's job.
    """
    image = _coerce(image)
    if name not in p.vars:
        return p
    i = p.vars.index(name)
    rest_vars = tuple(v for v in p.vars if v != name)
    out_vars = tuple(sorted(set(rest_vars) | set(image.vars)))

    if image.is_monomial():
        iexps, ic = image.terms[0]
        acc: dict[tuple[int, ...], Fraction] = {}
        pos = {v: j for j, v in enumerate(out_vars)}
        for exps, c in p.terms:
            m = exps[i]
            if m % 2 == 0:
                coeff = c * ic ** (m // 2)
            elif ic == 1:
                coeff = c
            else:
                raise PolyError(
                    f"cannot raise coefficient {ic} to the half-integer power {m}/2")
            vec = [0] * len(out_vars)
            for v, e in zip(p.vars, exps):
                if v != name:
                    vec[pos[v]] += e
            for v, e in zip(image.vars, iexps):
                if (m * e) % 2 != 0:
                    raise PolyError("substitution would create quarter-integer exponents")
                vec[pos[v]] += m * e // 2
            key = tuple(vec)
            acc[key] = acc.get(key, Fraction(0)) + coeff
        return LaurentPoly.make(out_vars, acc)

    lo, _hi = p.exponent_range(name)
    if lo < 0:
        raise PolyError(
            f"negative powers of {name} cannot take a non-monomial image; "
            "clear denominators by exact division first")
    if any(e[i] % 2 for e, _ in p.terms):
        raise PolyError("half-integer exponents cannot take a non-monomial image")
    powers: dict[int, LaurentPoly] = {0: one()}

    def image_power(k: int) -> LaurentPoly:
        if k not in powers:
            powers[k] = image_power(k - 1) * image
        return powers[k]

    total = zero()
    for exps, c in p.terms:
        restmono = LaurentPoly.make(
            rest_vars, {tuple(e for j, e in enumerate(exps) if j != i): c})
        total = total + restmono * image_power(exps[i] // 2)
    return total


# -- exact division ----------------------------------------------------------


def exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Return q with p = d*q exactly; raise ExactDivisionError otherwise."""
    if d.is_zero():
        raise PolyError("division by zero polynomial")
    if p.is_zero():
        return zero()
    p1, d1, vs = LaurentPoly._aligned(p, d)
    # shift both to nonnegative exponents so graded-lex division terminates
    nshift = len(vs)
    pmin = [min(e[i] for e, _ in p1.terms) for i in range(nshift)]
    dmin = [min(e[i] for e, _ in d1.terms) for i in range(nshift)]
    pshift = {tuple(a - b for a, b in zip(e, pmin)): c for e, c in p1.terms}
    dshift = {tuple(a - b for a, b in zip(e, dmin)): c for e, c in d1.terms}

    dlead = min(dshift, key=_term_sort_key)
    dlead_c = dshift[dlead]
    rem = dict(pshift)
    quot: dict[tuple[int, ...], Fraction] = {}
    while rem:
        lead = min(rem, key=_term_sort_key)
        diff = tuple(a - b for a, b in zip(lead, dlead))
        if any(e < 0 for e in diff):
            raise ExactDivisionError(
                f"nonzero remainder; leading term {lead} not divisible")
        cq = rem[lead] / dlead_c
        quot[diff] = cq
        for e, c in dshift.items():
            k = tuple(a + b for a, b in zip(diff, e))
            nc = rem.get(k, Fraction(0)) - cq * c
            if nc == 0:
                rem.pop(k, None)
            else:
                rem[k] = nc
    shift = [a - b for a, b in zip(pmin, dmin)]
    return LaurentPoly.make(vs, {tuple(a + b for a, b in zip(e, shift)): c
                                 for e, c in quot.items()})


# -- text form ----------------------------------------------------------------


def _exp_str(name: str, d: int) -> str:
    if d == 2:
        return name
    if d % 2 == 0:
        return f"{name}^{d // 2}"
    return f"{name}^({d}/2)"


def serialize(p: LaurentPoly) -> str:
    """Deterministic text form, terms in descending graded-lex order."""
    if p.is_zero():
        return "0"
    pieces: list[str] = []
    for exps, c in p.terms:
        factors = [_exp_str(v, e) for v, e in zip(p.vars, exps) if e != 0]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|\^|\*|\(|\)|/|\+|-)")


def _tokenize(text: str) -> list[str]:
    out, i = [], 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m:
            if text[i:].strip():
                raise PolyParseError(f"unexpected character at {text[i:]!r}")
            break
        out.append(m.group(1))
        i = m.end()
    return out


class _Parser:
    def __init__(self, tokens: list[str]):
        self.toks = tokens
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self) -> str:
        t = self.peek()
        if t is None:
            raise PolyParseError("unexpected end of input")
        self.i += 1
        return t

    def number(self) -> Fraction:
        t = self.take()
        if not t.isdigit():
            raise PolyParseError(f"expected number, got {t!r}")
        val = Fraction(int(t))
        if self.peek() == "/":
            self.take()
            den = self.take()
            if not den.isdigit() or int(den) == 0:
                raise PolyParseError("bad denominator")
            val /= int(den)
        return val

    def exponent(self) -> int:
        """Doubled exponent after '^'."""
        if self.peek() == "(":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            num = self.take()
            if not num.isdigit():
                raise PolyParseError("bad exponent")
            n = sign * int(num)
            if self.peek() == "/":
                self.take()
                den = self.take()
                if den == "2":
                    d = n
                elif den == "1":
                    d = 2 * n
                else:
                    raise PolyParseError("exponent denominator must be 1 or 2")
            else:
                d = 2 * n
            if self.take() != ")":
                raise PolyParseError("expected ')'")
            return d
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        num = self.take()
        if not num.isdigit():
            raise PolyParseError("bad exponent")
        return 2 * sign * int(num)

    def term(self) -> LaurentPoly:
        coeff = Fraction(1)
        exps: dict[str, int] = {}
        saw = False
        while True:
            t = self.peek()
            if t is None or t in "+-":
                break
            if t == "*":
                self.take()
                continue
            if t.isdigit():
                coeff *= self.number()
                saw = True
                continue
            if re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", t):
                self.take()
                d = 2
                if self.peek() == "^":
                    self.take()
                    d = self.exponent()
                exps[t] = exps.get(t, 0) + d
                saw = True
                continue
            raise PolyParseError(f"unexpected token {t!r}")
        if not saw:
            raise PolyParseError("empty term")
        vars = tuple(exps)
        return LaurentPoly.make(vars, {tuple(exps[v] for v in vars): coeff})


def parse_poly(text: str) -> LaurentPoly:
    """Parse the textual polynomial grammar emitted by :func:`serialize`."""
    toks = _tokenize(text)
    if not toks:
        raise PolyParseError("empty input")
    p = _Parser(toks)
    total = zero()
    sign = 1
    if p.peek() in "+-":
        sign = -1 if p.take() == "-" else 1
    total = total + sign * p.term()
    while p.peek() is not None:
        op = p.take()
        if op not in "+-":
            raise PolyParseError(f"expected + or -, got {op!r}")
        sign = -1 if op == "-" else 1
        total = total + sign * p.term()
    return total


# -- rational pairs -----------------------------------------------------------


@dataclass(frozen=True)
class RationalPair:
    """A fraction of Laurent polynomials, compared by cross-multiplication.

    Used where an identity genuinely lives in the fraction field, e.g. a
    polynomial divided by t^(1/2) - t^(-1/2).
    """

    num: LaurentPoly
    den: LaurentPoly

    def __post_init__(self):
        if self.den.is_zero():
            raise PolyError("zero denominator")

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RationalPair(_coerce(other), one())
        if not isinstance(other, RationalPair):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):  # pragma: no cover - pairs are not meant as dict keys
        return hash((self.num.is_zero(),))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RationalPair(_coerce(other), one())
        return RationalPair(self.num * other.num, self.den * other.den)

    def __repr__(self):
        return f"({serialize(self.num)}) / ({serialize(self.den)})"
