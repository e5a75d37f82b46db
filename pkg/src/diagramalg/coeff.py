"""Exact coefficient arithmetic for the diagram algebras.

Coefficients are Laurent polynomials in the parameter n with rational
coefficients, so every product is computed symbolically; substituting a
numeric n afterwards is a ring homomorphism wherever it is defined.
Elements are formal linear combinations of diagrams tagged with their
family, and multiplication inserts n^deleted for every concatenation.
"""

from fractions import Fraction

from .diagrams import Diagram, concat, identity_diagram, in_family, normalize_family
from .errors import (
    AlgebraMismatch,
    RankMismatch,
    ZeroSubstitutionWithNegativeExponent,
)


class LaurentPoly:
    """Laurent polynomial in n over Q, stored as {exponent: Fraction}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exp, c in items:
                if not isinstance(exp, int):
                    raise ValueError("exponent must be an int, got %r" % (exp,))
                c = Fraction(c)
                if c:
                    data[exp] = data.get(exp, Fraction(0)) + c
        object.__setattr__(
            self, "terms", {e: c for e, c in data.items() if c}
        )

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: Fraction(coeff)})

    @classmethod
    def const(cls, value):
        return cls({0: Fraction(value)})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        return cls.const(value)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = LaurentPoly.coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        other = LaurentPoly.coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, power):
        if not isinstance(power, int) or power < 0:
            raise ValueError("power must be a nonnegative int")
        out = LaurentPoly.const(1)
        base = self
        while power:
            if power & 1:
                out = out * base
            base = base * base
            power >>= 1
        return out

    def evaluate(self, value):
        """Substitute a rational value for n."""
        value = Fraction(value)
        if value == 0 and any(e < 0 for e in self.terms):
            raise ZeroSubstitutionWithNegativeExponent(
                "cannot substitute n = 0 into a negative power of n"
            )
        return sum(
            (c * value**e for e, c in self.terms.items()), Fraction(0)
        )

    def constant_value(self):
        """The rational value if the polynomial is constant, else None."""
        if not self.terms:
            return Fraction(0)
        if set(self.terms) == {0}:
            return self.terms[0]
        return None

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if e == 0:
                body = str(mag)
            else:
                var = "n" if e == 1 else "n^%d" % e
                body = var if mag == 1 else "%s*%s" % (mag, var)
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self):
        return "LaurentPoly(%s)" % self

    def to_json_obj(self):
        return [
            {"exp": e, "num": self.terms[e].numerator, "den": self.terms[e].denominator}
            for e in sorted(self.terms)
        ]

    @classmethod
    def from_json_obj(cls, obj):
        return cls(
            {t["exp"]: Fraction(t["num"], t["den"]) for t in obj}
        )


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


class Element:
    """A linear combination of diagrams on k strands inside one family."""

    __slots__ = ("k", "family", "combo")

    def __init__(self, k, family, combo=None):
        family = normalize_family(family)
        clean = {}
        for d, c in (combo or {}).items():
            if not isinstance(d, Diagram):
                raise ValueError("keys must be Diagram, got %r" % (d,))
            if d.k != k:
                raise RankMismatch(
                    "diagram on %d strands in an element with k=%d" % (d.k, k)
                )
            if not in_family(d, family):
                raise AlgebraMismatch(
                    "diagram %s is not in the %s family" % (d.text(), family)
                )
            c = LaurentPoly.coerce(c)
            if c:
                clean[d] = c
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "combo", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    @classmethod
    def from_diagram(cls, d, family, coeff=1):
        return cls(d.k, family, {d: LaurentPoly.coerce(coeff)})

    @classmethod
    def identity(cls, k, family):
        return cls.from_diagram(identity_diagram(k), family)

    @classmethod
    def zero(cls, k, family):
        return cls(k, family)

    def terms(self):
        """Canonically ordered (diagram, coefficient) pairs."""
        return [(d, self.combo[d]) for d in sorted(self.combo)]

    def is_zero(self):
        return not self.combo

    def _check_compatible(self, other):
        if not isinstance(other, Element):
            raise TypeError("expected an Element, got %r" % (other,))
        if self.k != other.k:
            raise RankMismatch(
                "elements on different strand counts: %d vs %d"
                % (self.k, other.k)
            )
        if self.family != other.family:
            raise AlgebraMismatch(
                "elements of different families: %s vs %s"
                % (self.family, other.family)
            )

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.combo)
        for d, c in other.combo.items():
            out[d] = out.get(d, ZERO) + c
        return Element(self.k, self.family, out)

    def __neg__(self):
        return Element(
            self.k, self.family, {d: -c for d, c in self.combo.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, value):
        value = LaurentPoly.coerce(value)
        return Element(
            self.k, self.family, {d: c * value for d, c in self.combo.items()}
        )

    def __mul__(self, other):
        self._check_compatible(other)
        out = {}
        for d1, c1 in self.combo.items():
            for d2, c2 in other.combo.items():
                prod, deleted = concat(d1, d2)
                c = c1 * c2 * LaurentPoly.monomial(deleted)
                out[prod] = out.get(prod, ZERO) + c
        return Element(self.k, self.family, out)

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.k == other.k
            and self.family == other.family
            and self.combo == other.combo
        )

    def __hash__(self):
        return hash((self.k, self.family, frozenset(self.combo.items())))

    def evaluate(self, value):
        """Substitute a rational n; returns {diagram: Fraction}."""
        return {d: c.evaluate(value) for d, c in sorted(self.combo.items())}

    def __str__(self):
        if not self.combo:
            return "0"
        return "  +  ".join(
            "(%s) * %s" % (c, d.text()) for d, c in self.terms()
        )

    def __repr__(self):
        return "Element(k=%d, %s, %s)" % (self.k, self.family, self)
