"""Sparse multivariate polynomials with exact rational coefficients.

A ring is an ordered list of named variables over QQ, partitioned into
consecutive blocks.  A plain ring is a single untagged block; rings built
by the jet construction tag each block with its jet order.  Terms are kept
in graded reverse lexicographic order, comparing later blocks first, so a
tower like QQ[x0,y0,z0][x1,y1,z1] prints with the outer (higher order)
variables dominating.

Coefficients are `fractions.Fraction`, so all arithmetic is exact and
every coefficient is stored with positive denominator in lowest terms.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*")


class ParseError(ValueError):
    """Malformed input text; `pos` is a 0-based offset into the parsed string."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at offset {pos})")
        self.message = message
        self.pos = pos


@dataclass(frozen=True)
class Variable:
    """A ring variable: base name, optional subscripts, optional jet order.

    The printed name appends the jet order to the base ("x" at order 2 is
    "x2") and then the subscripts ("x0_(1,1)").  Base names may not end in
    a digit, otherwise "x12" could be either x at order 12 or x1 at order 2.
    """

    base: str
    subscripts: tuple[int, ...] = ()
    jet_order: int | None = None

    def __post_init__(self):
        if not _IDENT_RE.fullmatch(self.base):
            raise ValueError(f"invalid variable base name {self.base!r}")
        if self.base[-1].isdigit():
            raise ValueError(f"variable base {self.base!r} ends in a digit")
        object.__setattr__(self, "subscripts", tuple(int(s) for s in self.subscripts))
        if any(s < 0 for s in self.subscripts):
            raise ValueError("subscripts must be naturals")
        if self.jet_order is not None and self.jet_order < 0:
            raise ValueError("jet order must be a natural")

    @property
    def name(self):
        text = self.base
        if self.jet_order is not None:
            text += str(self.jet_order)
        if self.subscripts:
            text += "_(" + ",".join(str(s) for s in self.subscripts) + ")"
        return text

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"Variable({self.name!r})"


class PolyRing:
    """Ordered variables over QQ, split into consecutive jet-order blocks.

    `blocks` is a tuple of (tag, size) pairs; a plain ring is ((None, n),).
    An optional `weights` tuple assigns one natural number per variable and
    is used for weighted homogeneity checks.
    """

    __slots__ = ("variables", "blocks", "weights", "_index", "_by_name",
                 "_rev_slices", "_hash")

    def __init__(self, variables, blocks=None, weights=None):
        self.variables = tuple(variables)
        n = len(self.variables)
        if blocks is None:
            blocks = ((None, n),)
        self.blocks = tuple((tag, int(size)) for tag, size in blocks)
        if sum(size for _, size in self.blocks) != n:
            raise ValueError("blocks do not partition the variable list")
        names = [v.name for v in self.variables]
        seen = set()
        for name in names:
            if name in seen:
                raise ValueError(f"duplicate variable {name}")
            seen.add(name)
        if weights is not None:
            weights = tuple(int(w) for w in weights)
            if len(weights) != n:
                raise ValueError("need one weight per variable")
        self.weights = weights
        self._index = {v: i for i, v in enumerate(self.variables)}
        self._by_name = {v.name: i for i, v in enumerate(self.variables)}
        stops = list(itertools.accumulate(size for _, size in self.blocks))
        starts = [0] + stops[:-1]
        self._rev_slices = tuple(zip(starts, stops))[::-1]
        self._hash = hash((self.variables, self.blocks, self.weights))

    def index(self, v):
        if isinstance(v, Variable):
            try:
                return self._index[v]
            except KeyError:
                raise ValueError(f"{v.name} is not a variable of {self}") from None
        try:
            return self._by_name[v]
        except KeyError:
            raise ValueError(f"{v} is not a variable of {self}") from None

    def zero(self):
        return Poly(self, {})

    def one(self):
        return Poly(self, {Monomial(): Fraction(1)})

    def constant(self, c):
        return Poly(self, {Monomial(): Fraction(c)})

    def var(self, v):
        """The variable `v` (a Variable, name, or index) as a polynomial."""
        i = v if isinstance(v, int) else self.index(v)
        return Poly(self, {Monomial({i: 1}): Fraction(1)})

    def gens(self):
        return [self.var(i) for i in range(len(self.variables))]

    def __eq__(self, other):
        return (isinstance(other, PolyRing)
                and self.variables == other.variables
                and self.blocks == other.blocks
                and self.weights == other.weights)

    def __hash__(self):
        return self._hash

    def __str__(self):
        parts = []
        start = 0
        for _, size in self.blocks:
            names = ",".join(v.name for v in self.variables[start:start + size])
            parts.append(f"[{names}]")
            start += size
        return "QQ" + "".join(parts)

    def __repr__(self):
        return f"PolyRing({self})"


def ring_make(variables, weights=None):
    """Build a plain single-block ring from an ordered variable list."""
    return PolyRing(variables, None, weights)


class Monomial:
    """Sparse exponent map, stored as index-sorted (variable, exponent) pairs.

    The empty monomial is 1; zero exponents are never stored.
    """

    __slots__ = ("exps",)

    def __init__(self, exps=()):
        items = exps.items() if isinstance(exps, dict) else exps
        acc = {}
        for i, e in items:
            acc[i] = acc.get(i, 0) + e
        cleaned = []
        for i, e in sorted(acc.items()):
            if e < 0:
                raise ValueError("negative exponent in monomial")
            if e:
                cleaned.append((i, e))
        self.exps = tuple(cleaned)

    def degree(self):
        return sum(e for _, e in self.exps)

    def weighted_degree(self, weights):
        return sum(weights[i] * e for i, e in self.exps)

    def exponent(self, i):
        for j, e in self.exps:
            if j == i:
                return e
        return 0

    def support(self):
        return tuple(i for i, _ in self.exps)

    def is_squarefree(self):
        return all(e == 1 for _, e in self.exps)

    def squarefree_part(self):
        return Monomial((i, 1) for i, _ in self.exps)

    def divides(self, other):
        it = dict(other.exps)
        return all(it.get(i, 0) >= e for i, e in self.exps)

    def __mul__(self, other):
        return Monomial(self.exps + other.exps)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        if not self.exps:
            return "Monomial(1)"
        body = "*".join(f"v{i}" if e == 1 else f"v{i}^{e}" for i, e in self.exps)
        return f"Monomial({body})"


def term_key(ring, mono):
    """Sort key for monomials, ascending in the ring's canonical order.

    Compares one block at a time starting from the last block; within a
    block the order is graded reverse lexicographic.
    """
    exps = [0] * len(ring.variables)
    for i, e in mono.exps:
        exps[i] = e
    key = []
    for start, stop in ring._rev_slices:
        block = exps[start:stop]
        key.append(sum(block))
        key.append(tuple(-e for e in reversed(block)))
    return tuple(key)


def monomial_str(ring, mono):
    """Print factors in variable-list order, e.g. "y0*z0*x2" or "x^2*y"."""
    parts = []
    for i, e in mono.exps:
        name = ring.variables[i].name
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


class Poly:
    """A sparse polynomial: monomials mapped to nonzero rational coefficients."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring, terms):
        self.ring = ring
        nvars = len(ring.variables)
        clean = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for m, c in items:
            if m.exps and m.exps[-1][0] >= nvars:
                raise ValueError("monomial uses a variable outside the ring")
            c = clean.get(m, 0) + Fraction(c)
            if c:
                clean[m] = c
            else:
                clean.pop(m, None)
        self._terms = clean

    def items(self):
        """Terms as (monomial, coefficient) pairs in canonical descending order."""
        return sorted(self._terms.items(),
                      key=lambda kv: term_key(self.ring, kv[0]), reverse=True)

    def monomials(self):
        return [m for m, _ in self.items()]

    def coefficient(self, mono):
        return self._terms.get(mono, Fraction(0))

    def is_zero(self):
        return not self._terms

    def degree(self):
        return max((m.degree() for m in self._terms), default=-1)

    def is_term(self):
        return len(self._terms) == 1

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = self.ring.constant(other)
        self._check_ring(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = Fraction(other)
            return Poly(self.ring, {m: c * v for m, v in self._terms.items()})
        self._check_ring(other)
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a natural number")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ring == other.ring
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for m, c in self.items():
            mono = monomial_str(self.ring, m)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(f"-{body}" if c < 0 else body)
            else:
                out.append(("-" if c < 0 else "+") + body)
        return "".join(out)

    def __repr__(self):
        return f"Poly({self})"


def is_homogeneous(f, weights):
    """True iff every term of f has the same weighted degree."""
    if len(weights) != len(f.ring.variables):
        raise ValueError("need one weight per variable")
    degrees = {m.weighted_degree(weights) for m in f._terms}
    return len(degrees) <= 1


class Ideal:
    """A finitely generated ideal, kept as an ordered list of nonzero generators."""

    __slots__ = ("ring", "generators")

    def __init__(self, ring, generators):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ValueError("generator lives in a different ring")
            if not g.is_zero():
                gens.append(g)
        self.generators = tuple(gens)

    def __eq__(self, other):
        return (isinstance(other, Ideal) and self.ring == other.ring
                and self.generators == other.generators)

    def __len__(self):
        return len(self.generators)

    def __str__(self):
        return "ideal(" + ",".join(str(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"Ideal({self})"


# ---------------------------------------------------------------------------
# Parsing
#
# poly   := ['-'] term { ('+'|'-') term }
# term   := coeff { '*' factor } | factor { '*' factor }
# factor := var [ '^' nat ]
# coeff  := int [ '/' nat ]
# var    := ident [ '_' '(' nat { ',' nat } ')' ]
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"(?P<ws>\s+)|(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9]*)"
                       r"|(?P<dots>\.\.)|(?P<sym>[-+*/^_(),])")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _PolyParser:
    def __init__(self, text, ring):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept_sym(self, ch):
        kind, value, _ = self.peek()
        if kind == "sym" and value == ch:
            self.advance()
            return True
        return False

    def expect_sym(self, ch):
        kind, value, pos = self.advance()
        if kind != "sym" or value != ch:
            raise ParseError(f"expected {ch!r}", pos)

    def expect_nat(self):
        kind, value, pos = self.advance()
        if kind != "int":
            raise ParseError("expected a natural number", pos)
        return int(value)

    def parse(self):
        negate = self.accept_sym("-")
        result = self.term()
        if negate:
            result = -result
        while True:
            if self.accept_sym("+"):
                result = result + self.term()
            elif self.accept_sym("-"):
                result = result - self.term()
            else:
                break
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", pos)
        return result

    def term(self):
        coeff = Fraction(1)
        exps = {}
        kind, _, pos = self.peek()
        if kind == "int":
            coeff = self.coeff()
        elif kind == "ident":
            self.factor(exps)
        else:
            raise ParseError("expected a coefficient or a variable", pos)
        while self.accept_sym("*"):
            self.factor(exps)
        return Poly(self.ring, {Monomial(exps): coeff})

    def coeff(self):
        num = self.expect_nat()
        if self.accept_sym("/"):
            kind, value, pos = self.advance()
            if kind != "int":
                raise ParseError("expected a denominator", pos)
            den = int(value)
            if den == 0:
                raise ParseError("zero denominator", pos)
            return Fraction(num, den)
        return Fraction(num)

    def factor(self, exps):
        kind, value, pos = self.advance()
        if kind != "ident":
            raise ParseError("expected a variable", pos)
        name = value
        if self.accept_sym("_"):
            self.expect_sym("(")
            subs = [self.expect_nat()]
            while self.accept_sym(","):
                subs.append(self.expect_nat())
            self.expect_sym(")")
            name += "_(" + ",".join(str(s) for s in subs) + ")"
        if name not in self.ring._by_name:
            raise ParseError(f"unknown variable {name}", pos)
        i = self.ring._by_name[name]
        e = 1
        if self.accept_sym("^"):
            e = self.expect_nat()
        exps[i] = exps.get(i, 0) + e


def parse_poly(text, ring):
    """Parse `text` as a polynomial in `ring`.

    Raises ParseError (with a position) on bad syntax or unknown variables.
    """
    return _PolyParser(text, ring).parse()


# Variable-list grammar for ring construction.  A name is an ident with an
# optional subscript group; "a..e" and "x_(1,1)..x_(3,3)" expand to ranges
# (single letters, or a box of subscript tuples enumerated with the last
# coordinate varying fastest).

class _VarListParser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept_sym(self, ch):
        kind, value, _ = self.peek()
        if kind == "sym" and value == ch:
            self.advance()
            return True
        return False

    def expect_nat(self):
        kind, value, pos = self.advance()
        if kind != "int":
            raise ParseError("expected a natural number", pos)
        return int(value)

    def one_var(self):
        kind, value, pos = self.advance()
        if kind != "ident":
            raise ParseError("expected a variable name", pos)
        subs = ()
        if self.accept_sym("_"):
            kind, value2, pos2 = self.advance()
            if kind != "sym" or value2 != "(":
                raise ParseError("expected '('", pos2)
            out = [self.expect_nat()]
            while self.accept_sym(","):
                out.append(self.expect_nat())
            kind, value2, pos2 = self.advance()
            if kind != "sym" or value2 != ")":
                raise ParseError("expected ')'", pos2)
            subs = tuple(out)
        return value, subs, pos

    def parse(self):
        result = []
        while True:
            base, subs, pos = self.one_var()
            if self.peek()[0] == "dots":
                self.advance()
                base2, subs2, _ = self.one_var()
                result.extend(self._expand_range(base, subs, base2, subs2, pos))
            else:
                result.append(Variable(base, subs))
            if not self.accept_sym(","):
                break
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", pos)
        return result

    @staticmethod
    def _expand_range(base, subs, base2, subs2, pos):
        if subs or subs2:
            if base != base2:
                raise ParseError("subscript range needs matching base names", pos)
            if len(subs) != len(subs2) or not subs:
                raise ParseError("subscript range needs tuples of equal length", pos)
            if any(lo > hi for lo, hi in zip(subs, subs2)):
                raise ParseError("empty subscript range", pos)
            axes = [range(lo, hi + 1) for lo, hi in zip(subs, subs2)]
            return [Variable(base, t) for t in itertools.product(*axes)]
        if len(base) != 1 or len(base2) != 1 or ord(base) > ord(base2):
            raise ParseError("letter range needs single letters in order", pos)
        return [Variable(chr(c)) for c in range(ord(base), ord(base2) + 1)]


def parse_variables(text):
    """Parse a comma-separated variable list, expanding `..` ranges."""
    return _VarListParser(text).parse()
