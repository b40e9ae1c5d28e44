"""Sparse multivariate polynomials over an exact field.

A :class:`Ring` fixes the coefficient field and an ordered tuple of variable
names.  A :class:`MultiPoly` is a map from exponent tuples to nonzero field
elements; the zero polynomial is the empty map, so structural equality of the
maps is mathematical equality.  The canonical term order (serialization,
leading term) is graded lexicographic: higher total degree first, then
lexicographic on the exponent tuple in ring variable order.

Polynomials are immutable by convention: operations build fresh term maps.
Operands must share a ring; mixing rings raises :class:`RingMismatchError`.
"""

from __future__ import annotations

from .fields import Field, FieldElement, XratioError


class RingMismatchError(XratioError):
    pass


class Ring:
    """Polynomial ring context k[v1, ..., vn]."""

    __slots__ = ("field", "variables", "_index")

    def __init__(self, field: Field, variables):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise XratioError(f"duplicate ring variables: {variables}")
        self.field = field
        self.variables = variables
        self._index = {v: k for k, v in enumerate(variables)}

    def var(self, name: str) -> "MultiPoly":
        k = self._index.get(name)
        if k is None:
            raise XratioError(f"{name!r} is not a variable of {self!r}")
        e = [0] * len(self.variables)
        e[k] = 1
        return MultiPoly(self, {tuple(e): self.field.one})

    def vars(self):
        return tuple(self.var(v) for v in self.variables)

    def const(self, c) -> "MultiPoly":
        if isinstance(c, int):
            c = self.field.from_int(c)
        zero_exp = (0,) * len(self.variables)
        return MultiPoly(self, {zero_exp: c} if not c.is_zero() else {})

    @property
    def zero(self):
        return MultiPoly(self, {})

    @property
    def one(self):
        return self.const(1)

    def poly(self, terms: dict) -> "MultiPoly":
        fixed = {}
        for exps, c in terms.items():
            if isinstance(c, int):
                c = self.field.from_int(c)
            if not c.is_zero():
                fixed[tuple(exps)] = c
        return MultiPoly(self, fixed)

    def __eq__(self, other):
        return (isinstance(other, Ring) and other.field == self.field
                and other.variables == self.variables)

    def __hash__(self):
        return hash((self.field.name, self.variables))

    def __repr__(self):
        return f"Ring({self.field.name}[{', '.join(self.variables)}])"


def _check_same_ring(a, b):
    if a.ring != b.ring:
        raise RingMismatchError(f"mixed rings: {a.ring!r} vs {b.ring!r}")


def grlex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    """Sparse polynomial: {exponent tuple -> nonzero coefficient}."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            _check_same_ring(self, other)
            return other
        if isinstance(other, (int, FieldElement)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise XratioError("polynomial powers take nonnegative int exponents")
        out, base, k = self.ring.one, self, n
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = self.ring.const(other)
        return (isinstance(other, MultiPoly) and other.ring == self.ring
                and other.terms == self.terms)

    __hash__ = None

    # -- structure ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> FieldElement:
        if not self.is_constant():
            raise XratioError("polynomial is not constant")
        zero_exp = (0,) * len(self.ring.variables)
        return self.terms.get(zero_exp, self.ring.field.zero)

    def total_degree(self):
        """Max total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str):
        k = self.ring._index[name]
        return max((e[k] for e in self.terms), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading(self):
        """(exponents, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise XratioError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def coefficient_of(self, name: str, k: int) -> "MultiPoly":
        """Collect terms with exponent k in `name`, that variable dropped to 0."""
        idx = self.ring._index[name]
        out = {}
        for e, c in self.terms.items():
            if e[idx] == k:
                e2 = list(e)
                e2[idx] = 0
                e2 = tuple(e2)
                s = out.get(e2)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(e2, None)
                else:
                    out[e2] = s
        return MultiPoly(self.ring, out)

    def monomial_content(self):
        """Per-variable min exponents over all terms (zero tuple for 0)."""
        if not self.terms:
            return (0,) * len(self.ring.variables)
        its = iter(self.terms)
        acc = list(next(its))
        for e in its:
            for k, x in enumerate(e):
                if x < acc[k]:
                    acc[k] = x
        return tuple(acc)

    def divide_monomial(self, mono):
        """Exact division by a monomial exponent tuple."""
        out = {}
        for e, c in self.terms.items():
            e2 = tuple(a - b for a, b in zip(e, mono))
            if any(x < 0 for x in e2):
                raise XratioError("monomial does not divide every term")
            out[e2] = c
        return MultiPoly(self.ring, out)

    # -- maps ---------------------------------------------------------------

    def substitute(self, assignment: dict, target_ring: Ring = None) -> "MultiPoly":
        """Ring map v -> assignment[v]; unassigned variables that actually
        occur must exist by name in the target ring (default: this ring)."""
        target = target_ring or self.ring
        if target.field != self.ring.field:
            raise RingMismatchError("substitution cannot change the coefficient field")
        for key in assignment:
            if key not in self.ring._index:
                raise XratioError(f"{key!r} is not a variable of {self.ring!r}")
        images = {}
        for name in self.ring.variables:
            img = assignment.get(name)
            if img is None:
                if not self.degree_in(name):
                    continue
                img = target.var(name)  # raises if absent from target
            elif isinstance(img, (int, FieldElement)):
                img = target.const(img)
            elif img.ring != target:
                raise RingMismatchError(f"image of {name!r} lives in the wrong ring")
            images[name] = img
        out = target.zero
        names = self.ring.variables
        for e, c in self.terms.items():
            t = target.const(c)
            for name, k in zip(names, e):
                if k:
                    t = t * images[name] ** k
            out = out + t
        return out

    def eval(self, point: dict) -> FieldElement:
        """Total evaluation; `point` maps every variable to a field element."""
        field = self.ring.field
        vals = []
        for name in self.ring.variables:
            v = point[name]
            if isinstance(v, int):
                v = field.from_int(v)
            vals.append(v)
        acc = field.zero
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = t * v ** k
            acc = acc + t
        return acc

    def derivative(self, name: str) -> "MultiPoly":
        """Formal partial derivative; exponent multiples reduce mod char."""
        idx = self.ring._index[name]
        field = self.ring.field
        out = {}
        for e, c in self.terms.items():
            k = e[idx]
            if k == 0:
                continue
            c2 = c * field.from_int(k)
            if c2.is_zero():
                continue
            e2 = list(e)
            e2[idx] = k - 1
            out[tuple(e2)] = c2
        return MultiPoly(self.ring, out)

    def embed(self, target_ring: Ring) -> "MultiPoly":
        """Rename-free embedding into a ring containing these variables."""
        return self.substitute({}, target_ring)

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ring.field
        names = self.ring.variables
        parts = []
        for e, c in self.sorted_terms():
            neg = _display_negative(field, c)
            if neg:
                c = -c
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            if not mono:
                body = _wrap_scalar(field.render(c))
            elif c.is_one():
                body = mono
            else:
                body = f"{_wrap_scalar(field.render(c))}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self})"


def _display_negative(field, c) -> bool:
    v = c.v
    name = field.name
    if name == "Q":
        return v < 0
    if name == "Q(i)":
        return v[0] < 0 or (v[0] == 0 and v[1] < 0)
    return False


def _wrap_scalar(s: str) -> str:
    # composite scalar renderings contain spaces ("1 + i"); keep them one factor
    return f"({s})" if " " in s else s
