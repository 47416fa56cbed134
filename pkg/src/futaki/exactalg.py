"""Exact arithmetic substrate: rationals, linear forms, sparse polynomials and
rational functions whose denominators are products of linear forms.

Every value here is immutable once built.  Rationals are ``fractions.Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import factorial, gcd
from typing import Iterable, Iterator, Mapping, Sequence, Union

Rat = Fraction
Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]


class VariableMismatch(ValueError):
    pass


class DegreeError(ArithmeticError):
    pass


class PoleNotCancelled(ArithmeticError):
    """A sum that should be a polynomial still carries denominator factors."""

    def __init__(self, factors, sources=None):
        self.factors = tuple(factors)
        self.sources = dict(sources or {})
        parts = []
        for form, mult in self.factors:
            s = f"({form})" if mult == 1 else f"({form})^{mult}"
            who = self.sources.get(form)
            if who:
                s += " from " + ", ".join(who)
            parts.append(s)
        super().__init__("pole not cancelled: " + "; ".join(parts))


def as_rat(value) -> Fraction:
    """Parse an int, Fraction or a ``"p/q"`` string; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"not an exact rational: {value!r}")


def _default_names(n: int) -> list[str]:
    return [f"e{i + 1}" for i in range(n)]


def _content(values: Iterable[Fraction]) -> Fraction:
    """Positive rational gcd of the nonzero values (0 if all vanish)."""
    nums, dens = 0, 1
    for v in values:
        if v:
            nums = gcd(nums, v.numerator)
            dens = dens * v.denominator // gcd(dens, v.denominator)
    return Fraction(nums, dens) if nums else Fraction(0)


def _format_linear(coeffs: Sequence[Fraction], names: Sequence[str]) -> str:
    out = []
    for c, name in zip(coeffs, names):
        if not c:
            continue
        mag = abs(c)
        term = name if mag == 1 else f"{mag}*{name}"
        if not out:
            out.append(term if c > 0 else "-" + term)
        else:
            out.append(("+ " if c > 0 else "- ") + term)
    return " ".join(out) if out else "0"


class CharForm:
    """A linear form ``sum a_i e^i`` with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        object.__setattr__(self, "coeffs", tuple(as_rat(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("CharForm is immutable")

    @classmethod
    def zero(cls, m: int) -> "CharForm":
        return cls([0] * m)

    @classmethod
    def basis(cls, m: int, i: int) -> "CharForm":
        c = [0] * m
        c[i] = 1
        return cls(c)

    @property
    def m(self) -> int:
        return len(self.coeffs)

    def _check(self, other: "CharForm") -> None:
        if other.m != self.m:
            raise VariableMismatch(f"forms of rank {self.m} and {other.m}")

    def __add__(self, other: "CharForm") -> "CharForm":
        self._check(other)
        return CharForm(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "CharForm") -> "CharForm":
        self._check(other)
        return CharForm(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "CharForm":
        return CharForm(-a for a in self.coeffs)

    def __mul__(self, c: Scalar) -> "CharForm":
        c = as_rat(c)
        return CharForm(a * c for a in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, CharForm) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("CharForm", self.coeffs))

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __repr__(self) -> str:
        return f"CharForm({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.format()

    def format(self, names: Sequence[str] | None = None) -> str:
        """Exact text, pulling out the content when several terms share it.

        ``4*(-e1 - e2 + e3)``, ``-3*e1 + e2``, ``-32/3*e1``, ``0``.
        """
        names = names or _default_names(self.m)
        nonzero = [c for c in self.coeffs if c]
        if len(nonzero) <= 1:
            return _format_linear(self.coeffs, names)
        c = _content(nonzero)
        if c == 1:
            return _format_linear(self.coeffs, names)
        return f"{c}*({_format_linear([a / c for a in self.coeffs], names)})"

    def pair(self, v: Sequence[int]) -> Fraction:
        if len(v) != self.m:
            raise VariableMismatch(f"pairing rank {self.m} form with length {len(v)} vector")
        return sum((a * b for a, b in zip(self.coeffs, v)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_poly(self) -> "MultiPoly":
        return MultiPoly.linear(self.coeffs)

    def primitive(self) -> tuple[Fraction, "PrimitiveForm"]:
        return PrimitiveForm.from_coeffs(self.coeffs)


class PrimitiveForm:
    """Canonical integer representative of a line of nonzero linear forms:
    content 1, first nonzero entry positive."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        coeffs = tuple(int(c) for c in coeffs)
        nz = [c for c in coeffs if c]
        if not nz:
            raise ValueError("zero linear form has no primitive representative")
        if reduce(gcd, nz) != 1 or nz[0] < 0:
            raise ValueError(f"not canonical: {coeffs}")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("PrimitiveForm is immutable")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable) -> tuple[Fraction, "PrimitiveForm"]:
        """Split a nonzero form as ``scale * primitive``."""
        fr = [as_rat(c) for c in coeffs]
        c = _content(fr)
        if not c:
            raise ZeroDivisionError("zero linear form")
        first = next(a for a in fr if a)
        if first < 0:
            c = -c
        return c, cls(int(a / c) for a in fr)

    @property
    def m(self) -> int:
        return len(self.coeffs)

    def pivot(self) -> int:
        return next(i for i, c in enumerate(self.coeffs) if c)

    def to_form(self) -> CharForm:
        return CharForm(self.coeffs)

    def to_poly(self) -> "MultiPoly":
        return MultiPoly.linear(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimitiveForm) and self.coeffs == other.coeffs

    def _order(self):
        support = tuple(i for i, c in enumerate(self.coeffs) if c)
        return (support[0], len(support), support, tuple(abs(c) for c in self.coeffs), tuple(-c for c in self.coeffs))

    def __lt__(self, other: "PrimitiveForm") -> bool:
        # printed products read e1*(e1 - e2)*(e1 - e2 + e3)
        return self._order() < other._order()

    def __hash__(self) -> int:
        return hash(("PrimitiveForm", self.coeffs))

    def __repr__(self) -> str:
        return f"PrimitiveForm({list(self.coeffs)})"

    def __str__(self) -> str:
        return _format_linear([Fraction(c) for c in self.coeffs], _default_names(self.m))


# -- polynomials --------------------------------------------------------------


def _add_into(acc: dict, exp: Exponent, c: Fraction) -> None:
    v = acc.get(exp, 0) + c
    if v:
        acc[exp] = v
    else:
        acc.pop(exp, None)


def _mul_terms(a: Mapping, b: Mapping) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            _add_into(out, tuple(x + y for x, y in zip(ea, eb)), ca * cb)
    return out


class MultiPoly:
    """Sparse polynomial with rational coefficients in ``nvars`` variables."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Scalar] | None = None):
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for {nvars} variables")
            c = as_rat(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MultiPoly":
        p = object.__new__(cls)
        object.__setattr__(p, "nvars", nvars)
        object.__setattr__(p, "terms", terms)
        object.__setattr__(p, "_hash", None)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "MultiPoly":
        c = as_rat(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars: int, i: int) -> "MultiPoly":
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(nvars, {tuple(exp): Fraction(1)})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "MultiPoly":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            c = as_rat(c)
            if c:
                exp = [0] * n
                exp[i] = 1
                terms[tuple(exp)] = c
        return cls._raw(n, terms)

    def _check(self, other: "MultiPoly") -> None:
        if not isinstance(other, MultiPoly):
            raise TypeError(f"expected MultiPoly, got {type(other).__name__}")
        if other.nvars != self.nvars:
            raise VariableMismatch(f"polynomials in {self.nvars} and {other.nvars} variables")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.nvars, other)
        self._check(other)
        return other

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            _add_into(out, e, c)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly.zero(self.nvars)
            return MultiPoly._raw(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        return MultiPoly._raw(self.nvars, _mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, p: int) -> "MultiPoly":
        if p < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while p:
            if p & 1:
                result = result * base
            p >>= 1
            if p:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.nvars, other)
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.nvars, frozenset(self.terms.items()))))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, exp: Exponent) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def leading(self) -> tuple[Exponent, Fraction]:
        exp = max(self.terms)
        return exp, self.terms[exp]

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.nvars)

    def homogeneous_part(self, d: int) -> "MultiPoly":
        return MultiPoly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def linear_coeffs(self) -> list[Fraction]:
        out = [Fraction(0)] * self.nvars
        for e, c in self.terms.items():
            if sum(e) == 1:
                out[e.index(1)] = c
        return out

    def to_charform(self) -> CharForm:
        """Return a polynomial of degree <= 1 with zero constant term as a form."""
        if self.degree() > 1:
            raise DegreeError(f"expected a linear form, got degree {self.degree()}: {self}")
        if self.constant_term():
            raise DegreeError(f"expected a linear form, got constant term {self.constant_term()}")
        return CharForm(self.linear_coeffs())

    def to_constant(self) -> Fraction:
        if self.degree() > 0:
            raise DegreeError(f"expected a constant, got degree {self.degree()}: {self}")
        return self.constant_term()

    def substitute(self, i: int, value: "MultiPoly") -> "MultiPoly":
        """Replace variable ``i`` by ``value`` (in the same variable context)."""
        self._check(value)
        powers = [MultiPoly.constant(self.nvars, 1)]
        out = MultiPoly.zero(self.nvars)
        for e, c in self.terms.items():
            k = e[i]
            while len(powers) <= k:
                powers.append(powers[-1] * value)
            rest = list(e)
            rest[i] = 0
            out = out + MultiPoly._raw(self.nvars, {tuple(rest): c}) * powers[k]
        return out

    def format(self, names: Sequence[str] | None = None) -> str:
        names = names or _default_names(self.nvars)
        if not self.terms:
            return "0"
        out = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(exp) if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self})"


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for k in range(total + 1):
        for rest in _compositions(total - k, parts - 1):
            yield (k,) + rest


def form_pow(form: CharForm | Sequence, p: int) -> MultiPoly:
    """Multinomial expansion of ``form**p``."""
    if p < 0:
        raise ValueError("negative power")
    coeffs = [as_rat(c) for c in form]
    n = len(coeffs)
    support = [i for i, c in enumerate(coeffs) if c]
    if not support:
        return MultiPoly.constant(n, 1 if p == 0 else 0)
    terms = {}
    for ks in _compositions(p, len(support)):
        coef = Fraction(factorial(p))
        exp = [0] * n
        for i, k in zip(support, ks):
            coef = coef / factorial(k) * coeffs[i] ** k
            exp[i] = k
        terms[tuple(exp)] = coef
    return MultiPoly._raw(n, terms)


class DivisionFails:
    """Result of a failed exact division: ``restriction`` is the (nonzero)
    remainder, i.e. the dividend restricted to the hyperplane ``form = 0``."""

    __slots__ = ("restriction", "form")

    def __init__(self, restriction: MultiPoly, form: PrimitiveForm):
        self.restriction = restriction
        self.form = form

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return f"DivisionFails({self.form}: restriction {self.restriction})"


def divmod_linear(p: MultiPoly, form: PrimitiveForm | CharForm | Sequence) -> tuple[MultiPoly, MultiPoly]:
    """Divide by a linear form ``L``: returns ``(q, r)`` with ``p = q*L + r``
    and ``r`` free of the pivot variable (the first variable with a nonzero
    coefficient in ``L``).  ``r`` is ``p`` restricted to ``L = 0``."""
    coeffs = [as_rat(c) for c in (form.coeffs if hasattr(form, "coeffs") else form)]
    if len(coeffs) != p.nvars:
        raise VariableMismatch(f"form of length {len(coeffs)} against {p.nvars} variables")
    s = next((i for i, c in enumerate(coeffs) if c), None)
    if s is None:
        raise ZeroDivisionError("division by the zero form")
    a_s = coeffs[s]
    rest = {}
    for i, c in enumerate(coeffs):
        if c and i != s:
            e = [0] * p.nvars
            e[i] = 1
            rest[tuple(e)] = c

    # group by the pivot exponent: p = sum_k c_k * x_s^k
    by_k: dict[int, dict] = {}
    for e, c in p.terms.items():
        k = e[s]
        base = e[:s] + (0,) + e[s + 1:]
        by_k.setdefault(k, {})[base] = c
    top = max(by_k, default=0)
    quot: dict = {}
    carry = dict(by_k.get(top, {}))
    for k in range(top, 0, -1):
        t = {e: c / a_s for e, c in carry.items()}
        for e, c in t.items():
            qe = list(e)
            qe[s] = k - 1
            quot[tuple(qe)] = c
        nxt = dict(by_k.get(k - 1, {}))
        for e, c in _mul_terms(t, rest).items():
            _add_into(nxt, e, -c)
        carry = nxt
    return MultiPoly._raw(p.nvars, quot), MultiPoly._raw(p.nvars, carry)


def exact_div_linear(p: MultiPoly, form) -> MultiPoly | DivisionFails:
    q, r = divmod_linear(p, form)
    if r:
        if not isinstance(form, PrimitiveForm):
            form = PrimitiveForm.from_coeffs(form.coeffs if hasattr(form, "coeffs") else form)[1]
        return DivisionFails(r, form)
    return q


# -- rational functions with linear-form denominators -------------------------


class FactoredRational:
    """``scale * numerator / prod(L ** mult)`` with each ``L`` a PrimitiveForm.

    Construction normalizes: common linear factors are cancelled and the
    numerator's leading coefficient (lex order) is folded into ``scale``, so
    structural equality is mathematical equality.
    """

    __slots__ = ("scale", "numerator", "denom")

    def __init__(self, numerator: MultiPoly, denom: Mapping[PrimitiveForm, int] | Iterable = (),
                 scale: Scalar = 1):
        scale = as_rat(scale)
        factors: dict[PrimitiveForm, int] = {}
        for form, mult in (denom.items() if isinstance(denom, Mapping) else denom):
            if mult < 0:
                raise ValueError("negative multiplicity")
            if form.m != numerator.nvars:
                raise VariableMismatch(f"factor {form} against {numerator.nvars} variables")
            if mult:
                factors[form] = factors.get(form, 0) + mult
        num = numerator
        if not scale or num.is_zero():
            num, factors, scale = MultiPoly.zero(numerator.nvars), {}, Fraction(0)
        else:
            for form in list(factors):
                while factors[form]:
                    q = exact_div_linear(num, form)
                    if isinstance(q, DivisionFails):
                        break
                    num = q
                    factors[form] -= 1
                if not factors[form]:
                    del factors[form]
            lead = num.leading()[1]
            if lead != 1:
                num = num * (1 / lead)
                scale *= lead
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denom", tuple(sorted(factors.items())))

    def __setattr__(self, name, value):
        raise AttributeError("FactoredRational is immutable")

    @classmethod
    def from_poly(cls, p: MultiPoly) -> "FactoredRational":
        return cls(p)

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "FactoredRational":
        return cls(MultiPoly.constant(nvars, 1), (), c)

    @classmethod
    def zero(cls, nvars: int) -> "FactoredRational":
        return cls(MultiPoly.zero(nvars))

    @classmethod
    def inverse_product(cls, forms: Iterable, nvars: int | None = None) -> "FactoredRational":
        """``1 / prod(forms)``; the forms must be nonzero."""
        scale = Fraction(1)
        factors: dict[PrimitiveForm, int] = {}
        forms = list(forms)
        for f in forms:
            s, prim = PrimitiveForm.from_coeffs(f.coeffs if hasattr(f, "coeffs") else f)
            scale /= s
            factors[prim] = factors.get(prim, 0) + 1
        if nvars is None:
            if not forms:
                raise ValueError("nvars needed for an empty product")
            nvars = len(forms[0].coeffs if hasattr(forms[0], "coeffs") else forms[0])
        return cls(MultiPoly.constant(nvars, 1), factors, scale)

    @property
    def nvars(self) -> int:
        return self.numerator.nvars

    def is_zero(self) -> bool:
        return not self.scale

    def denominator_degree(self) -> int:
        return sum(m for _, m in self.denom)

    def _key(self):
        return (self.scale, self.numerator, self.denom)

    def __eq__(self, other) -> bool:
        return isinstance(other, FactoredRational) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def _coerce(self, other) -> "FactoredRational":
        if isinstance(other, FactoredRational):
            if other.nvars != self.nvars:
                raise VariableMismatch(f"{self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise VariableMismatch(f"{self.nvars} vs {other.nvars} variables")
            return FactoredRational(other)
        if isinstance(other, (int, Fraction)):
            return FactoredRational.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other) -> "FactoredRational":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return frac_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "FactoredRational":
        return FactoredRational(self.numerator, self.denom, -self.scale)

    def __sub__(self, other) -> "FactoredRational":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return frac_add(self, -other)

    def __rsub__(self, other) -> "FactoredRational":
        return (-self) + other

    def __mul__(self, other) -> "FactoredRational":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        factors = dict(self.denom)
        for form, mult in other.denom:
            factors[form] = factors.get(form, 0) + mult
        return FactoredRational(self.numerator * other.numerator, factors, self.scale * other.scale)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "FactoredRational":
        if isinstance(other, (int, Fraction)):
            return FactoredRational(self.numerator, self.denom, self.scale / other)
        return NotImplemented

    def format(self, names: Sequence[str] | None = None) -> str:
        names = names or _default_names(self.nvars)
        if self.is_zero():
            return "0"
        num = self.numerator * self.scale.numerator
        top = num.format(names)
        if len(num.terms) > 1 and (self.denom or self.scale.denominator != 1):
            top = f"({top})"
        parts = [str(self.scale.denominator)] if self.scale.denominator != 1 else []
        for form, mult in self.denom:
            body = _format_linear([Fraction(c) for c in form.coeffs], names)
            if sum(1 for c in form.coeffs if c) > 1:
                body = f"({body})"
            parts.append(body if mult == 1 else f"{body}^{mult}")
        if not parts:
            return top
        bottom = "*".join(parts)
        if len(parts) > 1:
            bottom = f"({bottom})"
        return f"{top}/{bottom}"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"FactoredRational({self})"


def frac_add(a: FactoredRational, b: FactoredRational) -> FactoredRational:
    if a.nvars != b.nvars:
        raise VariableMismatch(f"{a.nvars} vs {b.nvars} variables")
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    da, db = dict(a.denom), dict(b.denom)
    lcm = {f: max(da.get(f, 0), db.get(f, 0)) for f in set(da) | set(db)}

    def lift(x: FactoredRational, d: dict) -> MultiPoly:
        p = x.numerator * x.scale
        for f, mult in lcm.items():
            extra = mult - d.get(f, 0)
            if extra:
                p = p * f.to_poly() ** extra
        return p

    return FactoredRational(lift(a, da) + lift(b, db), lcm)


def frac_sum(items: Iterable[FactoredRational], nvars: int) -> FactoredRational:
    """Left fold of ``frac_add`` in input order."""
    total = FactoredRational.zero(nvars)
    for x in items:
        total = frac_add(total, x)
    return total


def frac_to_poly(f: FactoredRational) -> MultiPoly:
    if f.denom:
        raise PoleNotCancelled(f.denom)
    return f.numerator * f.scale


__all__ = [
    "Rat", "as_rat", "CharForm", "PrimitiveForm", "MultiPoly", "FactoredRational",
    "VariableMismatch", "DegreeError", "PoleNotCancelled", "DivisionFails",
    "poly_arith", "form_pow", "divmod_linear", "exact_div_linear",
    "frac_add", "frac_sum", "frac_to_poly",
]
