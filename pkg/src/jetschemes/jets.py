"""Jets of rings, ideals, and ring maps.

The order-s jet ring of QQ[x_1..x_n] adjoins one variable per original
variable and per order 0..s, arranged in blocks of increasing order.
Substituting each variable by its truncated Taylor expansion
x_k -> x_{k,0} + x_{k,1} t + ... + x_{k,s} t^s and reading off the
coefficients of t^0..t^s turns a polynomial into an order-s truncated
series; the jets of an ideal are generated by those coefficients.

All series arithmetic here is performed modulo t^(s+1), which produces
exactly the coefficients 0..s of the full expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Ideal, Poly, PolyRing, Variable


@dataclass(eq=True)
class JetRing:
    """The jet ring of a base ring: (s+1) blocks of relabeled variables.

    `ring` is the flattened polynomial ring; block j holds the order-j jet
    of every base variable, in base order, and carries weight j.
    """

    base: PolyRing
    order: int
    ring: PolyRing
    jet_vars: dict

    def jet_var(self, v, j):
        """The order-j jet variable of base variable `v`, as a polynomial."""
        return self.ring.var(self.jet_vars[v][j])

    def __str__(self):
        return str(self.ring)


def jet_ring(base, s):
    """Build the order-s jet ring of a plain (single block, untagged) ring."""
    if s < 0:
        raise ValueError("jet order must be a natural number")
    if any(tag is not None for tag, _ in base.blocks):
        raise ValueError("ring already has jet blocks; iterated jets are not supported")
    if any(v.jet_order is not None for v in base.variables):
        raise ValueError("ring already has jet variables; iterated jets are not supported")
    n = len(base.variables)
    variables = [Variable(v.base, v.subscripts, j)
                 for j in range(s + 1) for v in base.variables]
    blocks = tuple((j, n) for j in range(s + 1))
    weights = tuple(j for j in range(s + 1) for _ in range(n))
    ring = PolyRing(variables, blocks, weights)
    jet_vars = {v: tuple(Variable(v.base, v.subscripts, j) for j in range(s + 1))
                for v in base.variables}
    return JetRing(base, s, ring, jet_vars)


@dataclass(eq=True)
class TruncatedSeries:
    """Coefficients c_0..c_s of a polynomial in t modulo t^(s+1)."""

    ring: JetRing
    coeffs: tuple

    def __post_init__(self):
        self.coeffs = tuple(self.coeffs)
        if len(self.coeffs) != self.ring.order + 1:
            raise ValueError("series needs exactly order+1 coefficients")

    def __str__(self):
        return " + ".join(f"({c})*t^{j}" for j, c in enumerate(self.coeffs))


def _series_mul(a, b, zero):
    s = len(a) - 1
    out = [zero] * (s + 1)
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j in range(s + 1 - i):
            bj = b[j]
            if not bj.is_zero():
                out[i + j] = out[i + j] + ai * bj
    return out


def _series_pow(a, e, one, zero):
    result = [one] + [zero] * (len(a) - 1)
    for _ in range(e):
        result = _series_mul(result, a, zero)
    return result


def series_substitute(f, jets):
    """Expand f at the truncated Taylor substitution of its variables.

    Returns the TruncatedSeries whose j-th coefficient is the t^j part of
    f(sum_j x_{1,j} t^j, ..., sum_j x_{n,j} t^j), for j = 0..s.
    """
    if f.ring != jets.base:
        raise ValueError("polynomial does not live in the base ring")
    R = jets.ring
    s = jets.order
    zero = R.zero()
    one = R.one()
    var_series = [[jets.jet_var(v, j) for j in range(s + 1)]
                  for v in jets.base.variables]
    out = [zero] * (s + 1)
    for mono, coef in f._terms.items():
        term = [R.constant(coef)] + [zero] * s
        for i, e in mono.exps:
            term = _series_mul(term, _series_pow(var_series[i], e, one, zero), zero)
        out = [out[j] + term[j] for j in range(s + 1)]
    return TruncatedSeries(jets, tuple(out))


@dataclass(eq=True)
class JetIdeal:
    """The ideal of s-jets: all coefficient polynomials of the generators.

    Generators are grouped by source generator with the highest-order
    coefficient first; vanishing coefficients are dropped.
    """

    ring: JetRing
    source: Ideal
    generators: tuple

    @property
    def ideal(self):
        return Ideal(self.ring.ring, self.generators)

    def __str__(self):
        return "ideal(" + ",".join(str(g) for g in self.generators) + ")"


def jets_ideal(s, I):
    """Jets of an ideal: the coefficients f_(i,j) of every generator, j <= s."""
    jets = jet_ring(I.ring, s)
    gens = []
    for f in I.generators:
        coeffs = series_substitute(f, jets).coeffs
        gens.extend(c for c in reversed(coeffs) if not c.is_zero())
    return JetIdeal(jets, I, tuple(gens))


def jets_quotient(s, R, I):
    """Jets of a quotient presentation (R, I), returned as the pair

    (jet ring of R, jets of I)."""
    if I.ring != R:
        raise ValueError("ideal does not live in the given ring")
    ji = jets_ideal(s, I)
    return ji.ring, ji


@dataclass(eq=True)
class RingMap:
    """A ring homomorphism determined by the image of each source variable."""

    source: PolyRing
    target: PolyRing
    images: tuple

    def __post_init__(self):
        self.images = tuple(self.images)
        if len(self.images) != len(self.source.variables):
            raise ValueError("need one image per source variable")
        for g in self.images:
            if g.ring != self.target:
                raise ValueError("image lives outside the target ring")

    @classmethod
    def identity(cls, R):
        return cls(R, R, tuple(R.gens()))

    def __call__(self, f):
        if f.ring != self.source:
            raise ValueError("polynomial does not live in the source ring")
        out = self.target.zero()
        for mono, coef in f._terms.items():
            term = self.target.constant(coef)
            for i, e in mono.exps:
                term = term * self.images[i] ** e
            out = out + term
        return out


def compose(outer, inner):
    """The composite map sending f to outer(inner(f))."""
    if inner.target != outer.source:
        raise ValueError("maps are not composable")
    return RingMap(inner.source, outer.target,
                   tuple(outer(g) for g in inner.images))


@dataclass(eq=True)
class RingMapJets:
    """The map induced on jet rings: the order-j jet of x_k is sent to the

    t^j coefficient of the expansion of the image of x_k."""

    source: JetRing
    target: JetRing
    map: RingMap

    def __call__(self, f):
        return self.map(f)

    @property
    def images(self):
        return self.map.images


def jets_ring_map(s, phi):
    """Apply the jet construction to a ring map."""
    source = jet_ring(phi.source, s)
    target = jet_ring(phi.target, s)
    expansions = [series_substitute(g, target).coeffs for g in phi.images]
    images = tuple(expansions[k][j]
                   for j in range(s + 1)
                   for k in range(len(phi.source.variables)))
    return RingMapJets(source, target, RingMap(source.ring, target.ring, images))
