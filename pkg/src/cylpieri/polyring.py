"""Exact sparse polynomials in the torus variables t_1, t_2, ...

A :class:`TPoly` is an immutable map from monomials to nonzero integer
coefficients.  Variables are identified by positive integer index only; the
ambient rank ``n`` is passed to the few operations that need it.
"""

from __future__ import annotations

from functools import reduce
from typing import Callable, Iterable, Iterator, Mapping, Union

from ._backend import kern

WIDTH = kern.WIDTH
FIELD = (1 << WIDTH) - 1
MAX_EXPONENT = FIELD

__all__ = [
    "TPoly",
    "Monomial",
    "NonzeroRemainder",
    "NotShiftInvariant",
    "linear_diff",
    "substitute_indices",
    "specialize_to_zero",
    "divide_linear",
    "graham_decompose",
    "product",
]


class NonzeroRemainder(ArithmeticError):
    """Raised when a linear form does not divide a polynomial exactly."""


class NotShiftInvariant(ValueError):
    """Raised when a polynomial is not a combination of products of differences."""


Monomial = tuple  # tuple of (var, power) pairs, var increasing, power > 0


def _var_key(i: int) -> int:
    if i < 1:
        raise ValueError(f"variable index must be >= 1, got {i}")
    return 1 << (WIDTH * (i - 1))


def _unpack(key: int) -> Monomial:
    out = []
    i = 1
    while key:
        e = key & FIELD
        if e:
            out.append((i, e))
        key >>= WIDTH
        i += 1
    return tuple(out)


def _pack(mono: Iterable[tuple[int, int]]) -> int:
    key = 0
    for var, power in mono:
        if power < 0 or power > MAX_EXPONENT:
            raise OverflowError(f"exponent {power} out of range")
        if power:
            key += power << (WIDTH * (var - 1))
    return key


def _key_degree(key: int) -> int:
    d = 0
    while key:
        d += key & FIELD
        key >>= WIDTH
    return d


def _grlex_sort_key(key: int):
    # Higher total degree first, then lexicographically larger exponent
    # vectors (t_1 most significant) first.
    mono = _unpack(key)
    top = mono[-1][0] if mono else 0
    vec = [0] * top
    for var, power in mono:
        vec[var - 1] = power
    return (-sum(vec), [-e for e in vec])


class TPoly:
    """Immutable integer polynomial in indexed variables ``t_i``."""

    __slots__ = ("_terms", "_hash", "_deg")

    def __init__(self, terms: Mapping | None = None):
        if terms is None:
            self._terms = {}
        else:
            self._terms = {k: c for k, c in terms.items() if c}
        self._hash = None
        self._deg = None

    @classmethod
    def _wrap(cls, terms: dict) -> "TPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        obj._deg = None
        return obj

    @classmethod
    def const(cls, c: int) -> "TPoly":
        return cls._wrap({0: c} if c else {})

    @classmethod
    def var(cls, i: int) -> "TPoly":
        return cls._wrap({_var_key(i): 1})

    @classmethod
    def from_terms(cls, items: Iterable[tuple[int, Iterable[tuple[int, int]]]]) -> "TPoly":
        """Build from ``(coefficient, [(var, power), ...])`` pairs."""
        acc: dict = {}
        for coeff, mono in items:
            k = _pack(mono)
            acc[k] = acc.get(k, 0) + int(coeff)
        return cls(acc)

    # -- inspection --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = TPoly.const(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def terms(self) -> Iterator[tuple[Monomial, int]]:
        """Yield ``(monomial, coefficient)`` in graded-lex order."""
        for k in sorted(self._terms, key=_grlex_sort_key):
            yield _unpack(k), self._terms[k]

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        if self._deg is None:
            self._deg = max((_key_degree(k) for k in self._terms), default=-1)
        return self._deg

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {_key_degree(k) for k in self._terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def variables(self) -> set[int]:
        out: set[int] = set()
        for k in self._terms:
            out.update(v for v, _ in _unpack(k))
        return out

    def constant_term(self) -> int:
        return self._terms.get(0, 0)

    def evaluate(self, point) -> int:
        """Exact value at ``t_i = point[i-1]``."""
        total = 0
        for key, c in self._terms.items():
            term = c
            for var, power in _unpack(key):
                term *= point[var - 1] ** power
            total += term
        return total

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = TPoly.const(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        return TPoly._wrap(kern.add_scaled(dict(big), small, 1))

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        return TPoly._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = TPoly.const(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return TPoly._wrap(kern.add_scaled(dict(self._terms), other._terms, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return TPoly()
            return TPoly._wrap({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, TPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return TPoly()
        if self.degree() + other.degree() > MAX_EXPONENT:
            raise OverflowError("product degree exceeds the packed exponent range")
        out = TPoly._wrap(kern.mul(self._terms, other._terms))
        out._deg = self._deg + other._deg
        return out

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "TPoly":
        if e < 0:
            raise ValueError("negative power")
        out = TPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def times_linear(self, a: int, b: int) -> "TPoly":
        """``self * (t_a - t_b)``, faster than a general product."""
        if a == b or not self._terms:
            return TPoly()
        if self.degree() + 1 > MAX_EXPONENT:
            raise OverflowError("product degree exceeds the packed exponent range")
        out = TPoly._wrap(kern.mul_linear(self._terms, _var_key(a), _var_key(b)))
        out._deg = self._deg + 1
        return out

    # -- display -----------------------------------------------------------

    def to_str(self, latex: bool = False) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for mono, c in self.terms():
            body = []
            for var, power in mono:
                name = f"t_{{{var}}}" if latex and var > 9 else f"t_{var}"
                if power > 1:
                    name += f"^{{{power}}}" if latex else f"^{power}"
                body.append(name)
            sep = " " if latex else "*"
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = sep.join(body)
            else:
                text = str(mag) + sep + sep.join(body)
            pieces.append(("-" if c < 0 else "+", text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"TPoly({self.to_str()})"

    # -- serialization -----------------------------------------------------

    def to_json(self) -> list:
        """Canonical form: ``[[coeff, [[var, power], ...]], ...]`` in graded-lex order."""
        return [[c, [list(vp) for vp in mono]] for mono, c in self.terms()]

    @classmethod
    def from_json(cls, data: list) -> "TPoly":
        return cls.from_terms((c, [tuple(vp) for vp in mono]) for c, mono in data)


def linear_diff(a: int, b: int) -> TPoly:
    """Return ``t_a - t_b`` (zero when ``a == b``)."""
    if a == b:
        _var_key(a)
        return TPoly()
    return TPoly._wrap({_var_key(a): 1, _var_key(b): -1})


def product(factors: Iterable[TPoly]) -> TPoly:
    return reduce(lambda x, y: x * y, factors, TPoly.const(1))


def linear_product(pairs: Iterable[tuple[int, int]]) -> TPoly:
    """Expand ``prod (t_a - t_b)`` over the given index pairs."""
    out = TPoly.const(1)
    for a, b in pairs:
        out = out.times_linear(a, b)
        if not out:
            break
    return out


IndexMap = Union[Mapping[int, int], Callable[[int], int]]


def substitute_indices(p: TPoly, f: IndexMap, negate: bool | Iterable[int] = False) -> TPoly:
    """Rename ``t_i -> t_{f(i)}``, optionally flipping the sign of some variables.

    ``negate=True`` flips every variable (``t_i -> -t_{f(i)}``); an iterable
    flips only the listed source indices.
    """
    fn = f.__getitem__ if isinstance(f, Mapping) else f
    if negate is True:
        flip = None
    elif negate is False:
        flip = frozenset()
    else:
        flip = frozenset(negate)
    acc: dict = {}
    for key, c in p._terms.items():
        exps: dict[int, int] = {}
        sign = 1
        for var, power in _unpack(key):
            target = fn(var)
            exps[target] = exps.get(target, 0) + power
            if (flip is None or var in flip) and power & 1:
                sign = -sign
        newkey = _pack(exps.items())
        acc[newkey] = acc.get(newkey, 0) + sign * c
    return TPoly(acc)


def specialize_to_zero(p: TPoly) -> int:
    """Constant term, i.e. the value at ``t_i = 0`` for all i."""
    return p.constant_term()


def divide_linear(p: TPoly, a: int, b: int) -> TPoly:
    """Exact quotient ``p / (t_a - t_b)``; raises :class:`NonzeroRemainder`."""
    if a == b:
        raise ValueError("divisor t_a - t_b vanishes for a == b")
    _var_key(a)
    _var_key(b)
    q = kern.div_linear(p._terms, a, b)
    if q is None:
        raise NonzeroRemainder(f"t_{a} - t_{b} does not divide {p}")
    return TPoly._wrap(q)


def compose(p: TPoly, images: Mapping[int, TPoly]) -> TPoly:
    """Substitute ``t_i -> images[i]`` (variables without an image are kept)."""
    powers: dict[tuple[int, int], TPoly] = {}

    def power_of(var: int, e: int) -> TPoly:
        key = (var, e)
        if key not in powers:
            base = images[var] if var in images else TPoly.var(var)
            powers[key] = base if e == 1 else power_of(var, e - 1) * base
        return powers[key]

    acc: dict = {}
    for key, c in p._terms.items():
        term = TPoly.const(c)
        for var, e in _unpack(key):
            term = term * power_of(var, e)
        kern.add_scaled(acc, term._terms, 1)
    return TPoly._wrap(acc)


def is_shift_invariant(p: TPoly, n: int) -> bool:
    """Whether ``p`` is unchanged by ``t_i -> t_i + c`` for i in 1..n."""
    fresh = TPoly.var(n + 1)
    shifted = compose(p, {i: TPoly.var(i) + fresh for i in range(1, n + 1)})
    return shifted == p


def graham_decompose(p: TPoly, n: int) -> TPoly:
    """Rewrite ``p`` in the simple-root variables ``y_j = t_{j+1} - t_j``.

    The result is a :class:`TPoly` whose variable ``j`` stands for ``y_j``;
    Graham positivity means every coefficient of it is nonnegative.
    """
    extra = [v for v in p.variables() if v > n]
    if extra:
        raise ValueError(f"variables {sorted(extra)} exceed n={n}")
    if not is_shift_invariant(p, n):
        raise NotShiftInvariant(f"{p} is not invariant under a common shift of t_1..t_{n}")
    images = {1: TPoly()}
    running = TPoly()
    for i in range(2, n + 1):
        running = running + TPoly.var(i - 1)
        images[i] = running
    return compose(p, images)


def is_graham_positive(p: TPoly, n: int) -> bool:
    try:
        y = graham_decompose(p, n)
    except NotShiftInvariant:
        return False
    return all(c >= 0 for c in y._terms.values())
