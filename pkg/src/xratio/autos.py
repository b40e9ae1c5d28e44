"""Field maps of k(v1..vn) given by variable images.

An :class:`Automorphism` stores one RatFunc image per ring variable and acts
on rational functions by substitution, which is automatically a field
homomorphism fixing k.  Nothing at construction time guarantees the map is
invertible; :meth:`Automorphism.order` verifies finite order semantically
(composing until the identity, bounded), and a non-invertible image map
fails that verification instead of being rejected up front.

Composition is (s*t)(f) = s(t(f)), so the images of s*t are s applied to
the images of t.  With the permutation convention p: v_k -> v_{p(k)} the map
perm_automorphism is a group homomorphism for this composition; with the
fractional-linear (Moebius) substitution v -> (a*v+b)/(c*v+d) composition
reverses matrix order: moebius(M1) * moebius(M2) == moebius(M2 @ M1).
"""

from __future__ import annotations

from .fields import XratioError
from .perms import Perm
from .poly import Ring
from .ratfunc import RatFunc, rat, rvar


class OrderBoundError(XratioError):
    pass


class Automorphism:
    """Substitution endomorphism of the fraction field of `ring`."""

    __slots__ = ("ring", "images")

    def __init__(self, ring: Ring, images: dict):
        missing = [v for v in ring.variables if v not in images]
        if missing:
            raise XratioError(f"no image given for variables {missing}")
        self.ring = ring
        self.images = {v: rat(ring, images[v]) for v in ring.variables}

    def apply(self, f) -> RatFunc:
        return rat(self.ring, f).substitute(self.images)

    __call__ = apply

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        """(self*other)(f) = self(other(f))."""
        if other.ring != self.ring:
            raise XratioError("automorphisms of different rings")
        return Automorphism(self.ring, {v: self.apply(g) for v, g in other.images.items()})

    def is_identity(self) -> bool:
        return all(self.images[v] == rvar(self.ring, v) for v in self.ring.variables)

    def __eq__(self, other):
        return (isinstance(other, Automorphism) and other.ring == self.ring
                and all(self.images[v] == other.images[v] for v in self.ring.variables))

    __hash__ = None

    def order(self, bound: int = 24) -> int:
        """Smallest n >= 1 with self^n = id, verified by composition.

        Raises OrderBoundError past `bound`; a degenerate image map (for
        example a constant image) never reaches the identity and fails here.
        """
        p = self
        for n in range(1, bound + 1):
            if p.is_identity():
                return n
            p = self * p
        raise OrderBoundError(f"order exceeds bound {bound} (or map is not invertible)")

    def fixes(self, f) -> bool:
        return self.apply(f) == rat(self.ring, f)

    def __repr__(self):
        body = ", ".join(f"{v} -> {self.images[v]}" for v in self.ring.variables)
        return f"Automorphism({body})"


def identity_automorphism(ring: Ring) -> Automorphism:
    return Automorphism(ring, {v: rvar(ring, v) for v in ring.variables})


def perm_automorphism(ring: Ring, p: Perm, point_vars=None) -> Automorphism:
    """v_k -> v_{p(k)} on the listed point variables (default: all ring vars).

    The convention is index-to-index: the image of the k-th listed variable
    is the p(k)-th listed variable.
    """
    point_vars = list(point_vars if point_vars is not None else ring.variables)
    images = {v: rvar(ring, v) for v in ring.variables}
    for k, v in enumerate(point_vars, start=1):
        images[v] = rvar(ring, point_vars[p(k) - 1])
    return Automorphism(ring, images)


def moebius_automorphism(ring: Ring, a, b, c, d, on=None) -> Automorphism:
    """v -> (a*v + b)/(c*v + d) on the listed variables, rest fixed.

    Coefficients may be ints, field elements, or RatFuncs of the same ring
    (symbolic entries included).  Requires a*d - b*c semantically nonzero.
    """
    a, b, c, d = (rat(ring, x) for x in (a, b, c, d))
    if (a * d - b * c).is_zero():
        raise XratioError("moebius map needs a nonzero determinant")
    on = list(on if on is not None else ring.variables)
    images = {v: rvar(ring, v) for v in ring.variables}
    for name in on:
        x = rvar(ring, name)
        images[name] = (a * x + b) / (c * x + d)
    return Automorphism(ring, images)
