"""Exact truncated arithmetic in the power-sum basis.

A :class:`BiSymSeries` stores ``sum c * t^k * p_lam(x) * p_mu(y)`` as a dict
``(lam, mu, k) -> Fraction``.  The formal variable ``t`` stands for ``-hbar``
so that a graded piece in degree ``d`` contributes ``t^d`` times its ungraded
character; every hbar formula used elsewhere in the package is rewritten in
``t`` exactly once, at its definition.

Truncation semantics
--------------------
* Terms with ``|lam| > deg_x`` or ``|mu| > deg_y`` are dropped.  Degrees are
  nonnegative and add under multiplication, so this never loses information
  below the bound.
* Terms with ``k > t_max`` are dropped and the result is marked ``clipped``.
  A product with a factor having negative ``t`` exponents is then no longer
  exact near ``t_max``; that case raises :class:`WindowOverflow`.
* A term with ``k < t_min`` raises :class:`WindowOverflow`: the window floor
  must be chosen wide enough, it is never silently enforced.
* Reading a coefficient outside the truncation raises :class:`TruncationError`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from .partitions import EMPTY, Partition, make_partition, merge, to_text

Key = Tuple[Partition, Partition, int]
Scalar = Union[int, Fraction]


class TruncationError(ValueError):
    """A query or operation reached outside the known part of a series."""


class WindowOverflow(TruncationError):
    """A t-exponent fell below the window floor, or exactness was lost."""


@dataclass(frozen=True)
class Truncation:
    deg_x: int = 6
    deg_y: int = 6
    t_min: int = -8
    t_max: int = 8

    def __post_init__(self):
        if self.deg_x < 0 or self.deg_y < 0:
            raise ValueError("degree bounds must be nonnegative")
        if self.t_min > self.t_max:
            raise ValueError("empty t-window")

    def meet(self, other: "Truncation") -> "Truncation":
        return Truncation(
            min(self.deg_x, other.deg_x),
            min(self.deg_y, other.deg_y),
            max(self.t_min, other.t_min),
            min(self.t_max, other.t_max),
        )

    def with_(self, **kw) -> "Truncation":
        return replace(self, **kw)

    def to_dict(self) -> dict:
        return {"deg_x": self.deg_x, "deg_y": self.deg_y, "t_min": self.t_min, "t_max": self.t_max}


class TCoeff(Mapping[int, Fraction]):
    """Laurent polynomial in ``t`` with rational coefficients, zeros never stored."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Optional[Mapping[int, Scalar]] = None):
        self._c = {int(k): Fraction(v) for k, v in (coeffs or {}).items() if v != 0}

    def __getitem__(self, k):
        return self._c.get(k, Fraction(0))

    def __iter__(self):
        return iter(sorted(self._c))

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if isinstance(other, TCoeff):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == ({0: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "TCoeff") -> "TCoeff":
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return TCoeff(out)

    def __mul__(self, other: "TCoeff") -> "TCoeff":
        out: Dict[int, Fraction] = {}
        for a, u in self._c.items():
            for b, v in other._c.items():
                out[a + b] = out.get(a + b, 0) + u * v
        return TCoeff(out)

    def at(self, t: Scalar) -> Fraction:
        """Evaluate at a numeric ``t`` (e.g. ``t = -1`` sets hbar to 1)."""
        return sum((v * Fraction(t) ** k for k, v in self._c.items()), Fraction(0))

    def __repr__(self):
        return "TCoeff(%s)" % {k: str(v) for k, v in sorted(self._c.items())}


def _deg(lam: Partition) -> int:
    return sum(lam)


class BiSymSeries:
    """Truncated element of the two-alphabet ring, power-sum basis."""

    __slots__ = ("terms", "trunc", "clipped")

    def __init__(
        self,
        terms: Optional[Mapping[Key, Scalar]] = None,
        trunc: Truncation = Truncation(),
        clipped: bool = False,
    ):
        self.trunc = trunc
        self.clipped = clipped
        self.terms: Dict[Key, Fraction] = {}
        if terms:
            self._absorb(terms.items())

    def _absorb(self, items: Iterable[Tuple[Key, Scalar]]) -> None:
        tr = self.trunc
        out = self.terms
        for (lam, mu, k), c in items:
            if c == 0:
                continue
            if _deg(lam) > tr.deg_x or _deg(mu) > tr.deg_y:
                continue
            if k > tr.t_max:
                self.clipped = True
                continue
            if k < tr.t_min:
                raise WindowOverflow(
                    f"t-exponent {k} below window floor {tr.t_min} (key {lam}, {mu})"
                )
            key = (lam, mu, k)
            v = out.get(key, 0) + c
            if v:
                out[key] = v if isinstance(v, Fraction) else Fraction(v)
            else:
                del out[key]

    @classmethod
    def _raw(cls, terms: Dict[Key, Fraction], trunc: Truncation, clipped: bool) -> "BiSymSeries":
        s = cls.__new__(cls)
        s.terms = terms
        s.trunc = trunc
        s.clipped = clipped
        return s

    # constructors -----------------------------------------------------

    @classmethod
    def zero(cls, trunc: Truncation = Truncation()) -> "BiSymSeries":
        return cls({}, trunc)

    @classmethod
    def scalar(cls, c: Scalar, trunc: Truncation = Truncation(), k: int = 0) -> "BiSymSeries":
        return cls({(EMPTY, EMPTY, k): Fraction(c)}, trunc)

    @classmethod
    def one(cls, trunc: Truncation = Truncation()) -> "BiSymSeries":
        return cls.scalar(1, trunc)

    @classmethod
    def monomial(
        cls,
        lam: Iterable[int] = (),
        mu: Iterable[int] = (),
        k: int = 0,
        c: Scalar = 1,
        trunc: Truncation = Truncation(),
    ) -> "BiSymSeries":
        return cls({(make_partition(lam), make_partition(mu), k): Fraction(c)}, trunc)

    @classmethod
    def p(cls, n: int, alphabet: str = "x", trunc: Truncation = Truncation()) -> "BiSymSeries":
        if alphabet == "x":
            return cls.monomial((n,), (), trunc=trunc)
        if alphabet == "y":
            return cls.monomial((), (n,), trunc=trunc)
        raise ValueError(f"unknown alphabet {alphabet!r}")

    @classmethod
    def t_power(cls, k: int, trunc: Truncation = Truncation()) -> "BiSymSeries":
        return cls.scalar(1, trunc, k)

    # basic protocol ---------------------------------------------------

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Key, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0])))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        """Equality of stored terms; truncations are not compared."""
        if isinstance(other, BiSymSeries):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(EMPTY, EMPTY, 0): Fraction(other)} if other else {})
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "BiSymSeries(0)"
        body = " + ".join(
            f"{c}*t^{k}*p{list(lam)}(x)*p{list(mu)}(y)" for (lam, mu, k), c in self
        )
        return f"BiSymSeries({body})"

    def copy(self, trunc: Optional[Truncation] = None) -> "BiSymSeries":
        if trunc is None:
            return BiSymSeries._raw(dict(self.terms), self.trunc, self.clipped)
        return BiSymSeries(self.terms, trunc, self.clipped)

    def retruncate(self, trunc: Truncation) -> "BiSymSeries":
        """Coarsen to ``trunc`` (meet with the current truncation)."""
        return BiSymSeries(self.terms, self.trunc.meet(trunc), self.clipped)

    # queries ----------------------------------------------------------

    def _check_inside(self, lam: Partition, mu: Partition, k: int) -> None:
        tr = self.trunc
        if _deg(lam) > tr.deg_x or _deg(mu) > tr.deg_y:
            raise TruncationError(
                f"degree ({_deg(lam)}, {_deg(mu)}) outside truncation ({tr.deg_x}, {tr.deg_y})"
            )
        if not tr.t_min <= k <= tr.t_max:
            raise TruncationError(f"t-exponent {k} outside window [{tr.t_min}, {tr.t_max}]")

    def coeff(self, lam: Iterable[int], mu: Iterable[int] = (), k: int = 0) -> Fraction:
        lam, mu = make_partition(lam), make_partition(mu)
        self._check_inside(lam, mu, k)
        return self.terms.get((lam, mu, k), Fraction(0))

    def tcoeff(self, lam: Iterable[int], mu: Iterable[int] = ()) -> TCoeff:
        lam, mu = make_partition(lam), make_partition(mu)
        self._check_inside(lam, mu, self.trunc.t_min)
        return TCoeff({k: c for (a, b, k), c in self.terms.items() if a == lam and b == mu})

    def support(self) -> set:
        return set(self.terms)

    def t_exponents(self) -> set:
        return {k for (_, _, k) in self.terms}

    def min_t(self) -> Optional[int]:
        return min((k for (_, _, k) in self.terms), default=None)

    def bidegrees(self) -> set:
        return {(_deg(a), _deg(b)) for (a, b, _) in self.terms}

    def filter(self, pred) -> "BiSymSeries":
        """Keep the terms whose key ``(lam, mu, k)`` satisfies ``pred``."""
        return BiSymSeries._raw(
            {key: c for key, c in self.terms.items() if pred(*key)}, self.trunc, self.clipped
        )

    def bidegree_part(self, m: int, n: int) -> "BiSymSeries":
        return self.filter(lambda a, b, k: _deg(a) == m and _deg(b) == n)

    def t_part(self, k: int) -> "BiSymSeries":
        return self.filter(lambda a, b, j: j == k)

    def constant_terms(self) -> Dict[int, Fraction]:
        return {k: c for (a, b, k), c in self.terms.items() if not a and not b}

    def is_x_only(self) -> bool:
        return all(not b for (_, b, _) in self.terms)

    def is_y_only(self) -> bool:
        return all(not a for (a, _, _) in self.terms)

    def swap(self) -> "BiSymSeries":
        """Exchange the two alphabets."""
        tr = self.trunc.with_(deg_x=self.trunc.deg_y, deg_y=self.trunc.deg_x)
        return BiSymSeries._raw({(b, a, k): c for (a, b, k), c in self.terms.items()}, tr, self.clipped)

    def map_coeffs(self, fn) -> "BiSymSeries":
        """Apply ``fn(lam, mu, k, c) -> new c`` termwise (keys unchanged)."""
        out = {}
        for (a, b, k), c in self.terms.items():
            v = fn(a, b, k, c)
            if v:
                out[(a, b, k)] = Fraction(v)
        return BiSymSeries._raw(out, self.trunc, self.clipped)

    # arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "BiSymSeries":
        if isinstance(other, BiSymSeries):
            return other
        if isinstance(other, SymSeries):
            return other.embed()
        if isinstance(other, (int, Fraction)):
            return BiSymSeries.scalar(other, self.trunc)
        raise TypeError(f"cannot combine BiSymSeries with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        tr = self.trunc.meet(other.trunc)
        out = BiSymSeries(self.terms, tr, self.clipped or other.clipped)
        out._absorb(other.terms.items())
        return out

    __radd__ = __add__

    def __neg__(self):
        return BiSymSeries._raw({k: -c for k, c in self.terms.items()}, self.trunc, self.clipped)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c: Scalar) -> "BiSymSeries":
        c = Fraction(c)
        if not c:
            return BiSymSeries.zero(self.trunc)
        return BiSymSeries._raw({k: v * c for k, v in self.terms.items()}, self.trunc, self.clipped)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return self._coerce(other) * self

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        raise TypeError("series can only be divided by a scalar")

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BiSymSeries.one(self.trunc)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "terms": [
                {"x": list(a), "y": list(b), "t": k, "c": _frac_text(c)} for (a, b, k), c in self
            ],
            "trunc": self.trunc.to_dict(),
        }

    @classmethod
    def from_json(cls, data: Union[str, dict]) -> "BiSymSeries":
        if isinstance(data, str):
            data = json.loads(data)
        trunc = Truncation(**data["trunc"])
        terms = {
            (make_partition(row["x"]), make_partition(row["y"]), int(row["t"])): Fraction(row["c"])
            for row in data["terms"]
        }
        return cls(terms, trunc)


def _frac_text(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _neg_lex(lam: Partition) -> Tuple[int, ...]:
    return tuple(-p for p in lam)


def _sort_key(key: Key):
    lam, mu, k = key
    return (k, _deg(lam) + _deg(mu), _neg_lex(lam), _neg_lex(mu))


def mul(a: BiSymSeries, b: BiSymSeries) -> BiSymSeries:
    """Truncated product; ``p_lam * p_mu = p_(lam u mu)`` in each alphabet."""
    tr = a.trunc.meet(b.trunc)
    amin, bmin = a.min_t(), b.min_t()
    if (a.clipped and bmin is not None and bmin < 0) or (b.clipped and amin is not None and amin < 0):
        raise WindowOverflow(
            "product of a t-clipped factor with negative t-exponents is not exact; widen t_max"
        )
    if not a.terms or not b.terms:
        return BiSymSeries._raw({}, tr, a.clipped or b.clipped)
    if len(a.terms) > len(b.terms):
        a, b = b, a
    dx, dy, tlo, thi = tr.deg_x, tr.deg_y, tr.t_min, tr.t_max
    bterms = [(lam, mu, k, sum(lam), sum(mu), c) for (lam, mu, k), c in b.terms.items()]
    out: Dict[Key, Fraction] = {}
    clipped = a.clipped or b.clipped
    get = out.get
    for (la, ma, ka), ca in a.terms.items():
        da, ea = sum(la), sum(ma)
        for lb, mb, kb, db, eb, cb in bterms:
            if da + db > dx or ea + eb > dy:
                continue
            k = ka + kb
            if k > thi:
                clipped = True
                continue
            if k < tlo:
                raise WindowOverflow(f"product reaches t^{k} below window floor {tlo}")
            key = (merge(la, lb), merge(ma, mb), k)
            out[key] = get(key, 0) + ca * cb
    out = {k: v for k, v in out.items() if v}
    return BiSymSeries._raw(out, tr, clipped)


class SymSeries:
    """Truncated one-alphabet series ``sum c * t^k * p_lam``.

    The alphabet tag decides where :meth:`embed` places it in the
    two-alphabet ring.  Arithmetic goes through the embedding.
    """

    __slots__ = ("terms", "alphabet", "trunc", "clipped")

    def __init__(
        self,
        terms: Optional[Mapping[Tuple[Partition, int], Scalar]] = None,
        alphabet: str = "x",
        trunc: Truncation = Truncation(),
        clipped: bool = False,
    ):
        if alphabet not in ("x", "y"):
            raise ValueError(f"unknown alphabet {alphabet!r}")
        self.alphabet = alphabet
        bi = BiSymSeries(
            {self._bikey(lam, k): c for (lam, k), c in (terms or {}).items()},
            trunc,
            clipped,
        )
        self._take(bi)

    def _bikey(self, lam: Partition, k: int) -> Key:
        return (lam, EMPTY, k) if self.alphabet == "x" else (EMPTY, lam, k)

    def _take(self, bi: BiSymSeries) -> None:
        self.trunc = bi.trunc
        self.clipped = bi.clipped
        if self.alphabet == "x":
            self.terms = {(a, k): c for (a, b, k), c in bi.terms.items()}
        else:
            self.terms = {(b, k): c for (a, b, k), c in bi.terms.items()}

    @property
    def degree_bound(self) -> int:
        return self.trunc.deg_x if self.alphabet == "x" else self.trunc.deg_y

    def embed(self) -> BiSymSeries:
        """``f(x) = f (x) 1`` or ``f(y) = 1 (x) f`` according to the alphabet tag."""
        return BiSymSeries._raw(
            {self._bikey(lam, k): c for (lam, k), c in self.terms.items()}, self.trunc, self.clipped
        )

    @classmethod
    def from_bi(cls, bi: BiSymSeries, alphabet: Optional[str] = None) -> "SymSeries":
        """Project a single-alphabet :class:`BiSymSeries` back to a SymSeries."""
        if alphabet is None:
            alphabet = "y" if (bi.terms and bi.is_y_only() and not bi.is_x_only()) else "x"
        if alphabet == "x" and not bi.is_x_only():
            raise ValueError("series involves the y alphabet")
        if alphabet == "y" and not bi.is_y_only():
            raise ValueError("series involves the x alphabet")
        s = cls.__new__(cls)
        s.alphabet = alphabet
        s._take(bi)
        return s

    def relabel(self, alphabet: str) -> "SymSeries":
        s = SymSeries({}, alphabet, self._swapped_trunc(alphabet), self.clipped)
        s.terms = dict(self.terms)
        return s

    def _swapped_trunc(self, alphabet: str) -> Truncation:
        if alphabet == self.alphabet:
            return self.trunc
        return self.trunc.with_(deg_x=self.trunc.deg_y, deg_y=self.trunc.deg_x)

    @classmethod
    def p(cls, n: int, alphabet: str = "x", trunc: Truncation = Truncation()) -> "SymSeries":
        return cls({((n,), 0): 1}, alphabet, trunc)

    @classmethod
    def monomial(cls, lam=(), k=0, c=1, alphabet="x", trunc=Truncation()) -> "SymSeries":
        return cls({(make_partition(lam), k): c}, alphabet, trunc)

    @classmethod
    def scalar(cls, c: Scalar, alphabet="x", trunc=Truncation(), k: int = 0) -> "SymSeries":
        return cls({(EMPTY, k): c}, alphabet, trunc)

    def coeff(self, lam: Iterable[int], k: int = 0) -> Fraction:
        lam = make_partition(lam)
        if self.alphabet == "x":
            return self.embed().coeff(lam, (), k)
        return self.embed().coeff((), lam, k)

    def degree_part(self, n: int) -> "SymSeries":
        return SymSeries.from_bi(
            self.embed().filter(lambda a, b, k: sum(a) + sum(b) == n), self.alphabet
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, SymSeries):
            return self.alphabet == other.alphabet and self.terms == other.terms
        if isinstance(other, BiSymSeries):
            return self.embed() == other
        if isinstance(other, (int, Fraction)):
            return self.embed() == other
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return f"SymSeries[{self.alphabet}](0)"
        items = sorted(self.terms.items(), key=lambda kv: (kv[0][1], sum(kv[0][0]), _neg_lex(kv[0][0])))
        return f"SymSeries[{self.alphabet}](" + " + ".join(
            f"{c}*t^{k}*p{list(lam)}" for (lam, k), c in items
        ) + ")"

    def _lift(self, res) -> "SymSeries":
        return SymSeries.from_bi(res, self.alphabet)

    def _other(self, other) -> BiSymSeries:
        if isinstance(other, SymSeries):
            if other.alphabet != self.alphabet and other.terms and any(
                lam for (lam, _) in other.terms
            ):
                raise ValueError("mixing alphabets: embed both into BiSymSeries first")
            return other.relabel(self.alphabet).embed() if other.alphabet != self.alphabet else other.embed()
        if isinstance(other, (int, Fraction)):
            return BiSymSeries.scalar(other, self.trunc)
        if isinstance(other, BiSymSeries):
            return other
        raise TypeError(f"cannot combine SymSeries with {type(other).__name__}")

    def __add__(self, other):
        if isinstance(other, BiSymSeries):
            return self.embed() + other
        return self._lift(self.embed() + self._other(other))

    __radd__ = __add__

    def __neg__(self):
        return self._lift(-self.embed())

    def __sub__(self, other):
        if isinstance(other, BiSymSeries):
            return self.embed() - other
        return self._lift(self.embed() - self._other(other))

    def __rsub__(self, other):
        return self._lift(self._other(other) - self.embed())

    def __mul__(self, other):
        if isinstance(other, BiSymSeries):
            return self.embed() * other
        return self._lift(self.embed() * self._other(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._lift(self.embed() / other)

    def __pow__(self, n: int):
        return self._lift(self.embed() ** n)

    def to_json(self) -> dict:
        return self.embed().to_json()


def embed(f: SymSeries) -> BiSymSeries:
    return f.embed()


def add(a: BiSymSeries, b: BiSymSeries) -> BiSymSeries:
    return a + b


def coeff(f: BiSymSeries, lam, mu, k: int) -> Fraction:
    return f.coeff(lam, mu, k)


def as_bi(f: Union[BiSymSeries, SymSeries]) -> BiSymSeries:
    return f.embed() if isinstance(f, SymSeries) else f


def describe_key(key: Key) -> str:
    lam, mu, k = key
    return f"p[{to_text(lam)}](x) p[{to_text(mu)}](y) t^{k}"
