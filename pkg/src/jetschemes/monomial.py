"""Monomial-ideal combinatorics.

The radical of the jets of a monomial ideal is generated by the terms of
the jet equations, so it can be computed without any radical machinery:
collect the terms, pass to squarefree supports, and minimalize.  Minimal
primes of a squarefree monomial ideal are read off as minimal vertex
covers of the hypergraph of generator supports.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Ideal, Monomial, Poly, term_key
from .jets import jets_ideal


class MonomialIdeal:
    """An ideal generated by monomials, kept minimal.

    Generators that duplicate or are divisible by another generator are
    dropped; the order of the surviving generators is preserved.
    """

    __slots__ = ("ring", "generators", "squarefree")

    def __init__(self, ring, generators):
        self.ring = ring
        nvars = len(ring.variables)
        for m in generators:
            if m.exps and m.exps[-1][0] >= nvars:
                raise ValueError("monomial uses a variable outside the ring")
        self.generators = tuple(_minimal_monomials(generators))
        self.squarefree = all(m.is_squarefree() for m in self.generators)

    def to_ideal(self):
        return Ideal(self.ring, [Poly(self.ring, {m: Fraction(1)})
                                 for m in self.generators])

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and self.ring == other.ring
                and self.generators == other.generators)

    def __len__(self):
        return len(self.generators)

    def __str__(self):
        from .poly import monomial_str
        return "ideal(" + ",".join(monomial_str(self.ring, m)
                                   for m in self.generators) + ")"

    def __repr__(self):
        return f"MonomialIdeal({self})"


def _minimal_monomials(gens):
    """Drop duplicates and any monomial divisible by another; keep order."""
    unique = []
    seen = set()
    for m in gens:
        if m not in seen:
            seen.add(m)
            unique.append(m)
    return [m for m in unique
            if not any(g != m and g.divides(m) for g in unique)]


def minimalize(ring, gens):
    """Minimal generators, sorted in canonical term order, largest first."""
    ordered = sorted(set(gens), key=lambda m: term_key(ring, m), reverse=True)
    return _minimal_monomials(ordered)


def is_monomial_ideal(I):
    """True iff every generator is a single term (the zero ideal counts)."""
    return all(f.is_term() for f in I.generators)


def jets_radical(s, I):
    """Radical of the ideal of s-jets of a monomial ideal.

    Every term of every jet equation generates the radical; coefficients
    are irrelevant over a field, and replacing each term by its squarefree
    support is radical-safe for non-squarefree inputs.
    """
    if isinstance(I, MonomialIdeal):
        I = I.to_ideal()
    if not is_monomial_ideal(I):
        raise ValueError("jets_radical needs a monomial ideal")
    ji = jets_ideal(s, I)
    supports = {m.squarefree_part() for g in ji.generators for m in g._terms}
    ring = ji.ring.ring
    return MonomialIdeal(ring, minimalize(ring, supports))


def minimal_transversals(edges):
    """All inclusion-minimal hitting sets of a family of index sets.

    Incremental: extend the minimal transversals of the first k edges by
    each vertex of edge k+1, re-minimalizing after every step.  Returns
    frozensets in a deterministic (size, sorted members) order.
    """
    covers = [frozenset()]
    for edge in edges:
        es = frozenset(edge)
        grown = set()
        for c in covers:
            if c & es:
                grown.add(c)
            else:
                grown.update(c | {v} for v in es)
        covers = _inclusion_minimal(grown)
    return covers


def _inclusion_minimal(sets):
    ordered = sorted(sets, key=lambda c: (len(c), sorted(c)))
    kept = []
    for c in ordered:
        if not any(k <= c for k in kept):
            kept.append(c)
    return kept


def minimal_primes_squarefree(I):
    """Minimal primes of a squarefree monomial ideal.

    Each minimal prime is generated by the variables of a minimal vertex
    cover of the hypergraph of generator supports.  Returned as tuples of
    Variables, ordered by size and then by variable indices.
    """
    if not I.squarefree:
        raise ValueError("minimal primes require a squarefree monomial ideal")
    covers = minimal_transversals(m.support() for m in I.generators)
    return [tuple(I.ring.variables[i] for i in sorted(c)) for c in covers]
