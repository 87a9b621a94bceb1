"""Exact graded-commutative polynomials over the rationals.

An Element is a map from canonical monomials to nonzero Fraction
coefficients.  A monomial is stored as the tuple of generator exponents in
roster order, so the canonical word always lists generators by ascending
generator id; odd generators carry exponent at most one.  All products,
derivatives and substitutions track Koszul signs exactly: swapping two odd
generators costs a factor of -1, everything else commutes.

The text grammar renders an element as signed terms

    2/3 x1^2 y1 - 1 c1 b1

joined by ``+`` / ``-``; generator tokens are x1.., y1.., c1.., b1.., xd1..,
yd1.., cd1.., bd1.. and parsing normalizes immediately.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Iterable, Mapping, NamedTuple

from .errors import (
    DegreeError,
    InvalidSubstitutionError,
    ParseError,
    RosterMismatchError,
)
from .roster import GeneratorRoster

Monomial = tuple  # exponent vector over the roster, one entry per generator


class Degrees(NamedTuple):
    total: int
    ghost: int
    momentum: int
    residual: int  # total - (ghost - momentum); counts daggered legs


def _merge_sign(e1: Monomial, e2: Monomial, odd_mask) -> int:
    """Koszul sign for concatenating canonical monomials e1 * e2.

    Each odd generator of e2 must move left past every odd generator of e1
    with a strictly larger id; each such crossing contributes -1.
    """
    crossings = 0
    suffix_odd = 0  # odd generators of e1 with id > j, accumulated right-to-left
    for j in range(len(e1) - 1, -1, -1):
        if odd_mask[j] and e2[j]:
            crossings += suffix_odd
        if odd_mask[j] and e1[j]:
            suffix_odd += 1
    return -1 if crossings % 2 else 1


class Element:
    """Immutable graded-commutative polynomial attached to a roster."""

    __slots__ = ("roster", "terms")

    def __init__(self, roster: GeneratorRoster, terms: dict | None = None):
        self.roster = roster
        self.terms = terms or {}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(roster: GeneratorRoster) -> "Element":
        return Element(roster, {})

    @staticmethod
    def scalar(roster: GeneratorRoster, value) -> "Element":
        q = Fraction(value)
        if q == 0:
            return Element(roster, {})
        return Element(roster, {(0,) * roster.size: q})

    @staticmethod
    def generator(roster: GeneratorRoster, name: str) -> "Element":
        gid = roster.generator(name).gid
        mono = tuple(1 if i == gid else 0 for i in range(roster.size))
        return Element(roster, {mono: Fraction(1)})

    @staticmethod
    def from_word(roster: GeneratorRoster, word: Iterable[str], coeff=1) -> "Element":
        """Normalize a generator word into its canonical monomial.

        Reordering into ascending generator id picks up the Koszul sign;
        a repeated odd generator collapses the whole word to zero.
        """
        coeff = Fraction(coeff)
        if coeff == 0:
            return Element.zero(roster)
        exps = [0] * roster.size
        odd = roster.odd_mask
        sign = 1
        for name in word:
            gid = roster.generator(name).gid
            if odd[gid]:
                if exps[gid]:
                    return Element.zero(roster)
                # move the new letter left past already-placed odd letters
                # with larger id
                crossings = sum(exps[j] for j in range(gid + 1, roster.size) if odd[j])
                if crossings % 2:
                    sign = -sign
            exps[gid] += 1
        return Element(roster, {tuple(exps): coeff * sign})

    # -- basics --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and other.roster == self.roster
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.roster, frozenset(self.terms.items())))

    def _check(self, other: "Element"):
        if self.roster != other.roster:
            raise RosterMismatchError(
                f"mixed rosters {self.roster!r} and {other.roster!r}"
            )

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        terms = dict(self.terms)
        for mono, q in other.terms.items():
            s = terms.get(mono, 0) + q
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return Element(self.roster, terms)

    def __neg__(self) -> "Element":
        return Element(self.roster, {m: -q for m, q in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, value) -> "Element":
        q = Fraction(value)
        if q == 0:
            return Element.zero(self.roster)
        return Element(self.roster, {m: c * q for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.mul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def mul(self, other: "Element") -> "Element":
        """Graded-commutative product with exact Koszul signs."""
        self._check(other)
        roster = self.roster
        odd = roster.odd_mask
        size = roster.size
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                # odd squares vanish
                if any(odd[i] and m1[i] and m2[i] for i in range(size)):
                    continue
                sign = _merge_sign(m1, m2, odd)
                mono = tuple(m1[i] + m2[i] for i in range(size))
                q = out.get(mono, 0) + sign * c1 * c2
                if q:
                    out[mono] = q
                else:
                    out.pop(mono, None)
        return Element(roster, out)

    def __pow__(self, n: int) -> "Element":
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = Element.scalar(self.roster, 1)
        for _ in range(n):
            result = result.mul(self)
        return result

    # -- degrees -------------------------------------------------------

    def monomial_degrees(self, mono: Monomial) -> Degrees:
        r = self.roster
        t = sum(e * d for e, d in zip(mono, r.totals))
        g = sum(e * d for e, d in zip(mono, r.ghosts))
        m = sum(e * d for e, d in zip(mono, r.momenta))
        return Degrees(t, g, m, t - (g - m))

    def degrees(self) -> Degrees | None:
        """Degree triple if every monomial agrees in all three gradings.

        Returns None for the zero element or an inhomogeneous one; this is a
        valid report, not an error.
        """
        found = None
        for mono in self.terms:
            d = self.monomial_degrees(mono)
            if found is None:
                found = d
            elif found != d:
                return None
        return found

    def total_degree(self) -> int | None:
        """Common total degree, or None if zero/inhomogeneous."""
        found = None
        for mono in self.terms:
            t = sum(e * d for e, d in zip(mono, self.roster.totals))
            if found is None:
                found = t
            elif found != t:
                return None
        return found

    def is_homogeneous(self) -> bool:
        return len(self.terms) == 0 or self.total_degree() is not None

    def degree_components(self) -> dict:
        """Split into total-degree-homogeneous pieces, keyed by degree."""
        buckets: dict = {}
        for mono, q in self.terms.items():
            t = sum(e * d for e, d in zip(mono, self.roster.totals))
            buckets.setdefault(t, {})[mono] = q
        return {t: Element(self.roster, terms) for t, terms in sorted(buckets.items())}

    def select(self, keep: Callable[[Monomial], bool]) -> "Element":
        return Element(self.roster, {m: q for m, q in self.terms.items() if keep(m)})

    def ghost_bidegree_component(self, p: int, q: int) -> "Element":
        """Monomials with exactly p ghosts (c) and q ghost momenta (b).

        Meant for daggered-free elements, where (p, q) is the bigrading of
        the ghost algebra.
        """
        c_ids = self.roster.family_ids["c"]
        b_ids = self.roster.family_ids["b"]
        return self.select(
            lambda m: sum(m[i] for i in c_ids) == p and sum(m[i] for i in b_ids) == q
        )

    def is_daggered_free(self) -> bool:
        dag = self.roster.dagger_ids
        return all(not any(m[i] for i in dag) for m in self.terms)

    def max_coordinate_degree(self) -> int:
        """Largest combined x,y-degree over monomials (0 for the zero element)."""
        ids = self.roster.family_ids["x"] + self.roster.family_ids["y"]
        best = 0
        for m in self.terms:
            best = max(best, sum(m[i] for i in ids))
        return best

    # -- calculus ------------------------------------------------------

    def derivative(self, name: str, side: str = "left") -> "Element":
        """Signed partial derivative by one generator.

        The operator carries the parity of the generator; taking it from the
        left means walking it past everything before the matched letter, from
        the right past everything after.
        """
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        roster = self.roster
        gid = roster.generator(name).gid
        odd = roster.odd_mask
        out: dict = {}
        for mono, coeff in self.terms.items():
            e = mono[gid]
            if not e:
                continue
            new = list(mono)
            new[gid] = e - 1
            q = coeff * e
            if odd[gid]:
                if side == "left":
                    crossings = sum(
                        mono[j] for j in range(gid) if odd[j]
                    )
                else:
                    crossings = sum(
                        mono[j] for j in range(gid + 1, roster.size) if odd[j]
                    )
                if crossings % 2:
                    q = -q
            key = tuple(new)
            s = out.get(key, 0) + q
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return Element(roster, out)

    # -- substitution ---------------------------------------------------

    def substitute(self, images: Mapping[str, "Element"]) -> "Element":
        """Apply the algebra morphism sending each named generator to its image.

        Every image must be zero or homogeneous of the generator's total
        degree (parity follows).  Generators not mentioned are fixed.
        """
        roster = self.roster
        table: dict[int, Element] = {}
        for name, img in images.items():
            gen = roster.generator(name)
            if img.roster != roster:
                raise RosterMismatchError("substitution image on a different roster")
            if not img.is_zero():
                deg = img.total_degree()
                if deg is None or deg != gen.total:
                    raise InvalidSubstitutionError(
                        f"image of {name} must be homogeneous of degree {gen.total}"
                    )
            table[gen.gid] = img

        if not table:
            return self

        # power cache keeps repeated exponents cheap
        powers: dict[tuple[int, int], Element] = {}

        def image_power(gid: int, e: int) -> Element:
            key = (gid, e)
            if key not in powers:
                powers[key] = table[gid] ** e
            return powers[key]

        out = Element.zero(roster)
        for mono, coeff in self.terms.items():
            # factor the canonical word in ascending id order, replacing
            # substituted generators and batching fixed stretches
            acc = Element.scalar(roster, coeff)
            fixed = [0] * roster.size
            fixed_live = False

            def flush(acc: Element, fixed, fixed_live) -> Element:
                if not fixed_live:
                    return acc
                return acc.mul(Element(roster, {tuple(fixed): Fraction(1)}))

            for gid in range(roster.size):
                e = mono[gid]
                if not e:
                    continue
                if gid in table:
                    acc = flush(acc, fixed, fixed_live)
                    fixed = [0] * roster.size
                    fixed_live = False
                    acc = acc.mul(image_power(gid, e))
                    if acc.is_zero():
                        break
                else:
                    fixed[gid] = e
                    fixed_live = True
            acc = flush(acc, fixed, fixed_live)
            out = out + acc
        return out

    def set_zero(self, names: Iterable[str]) -> "Element":
        """Substitute zero for the named generators."""
        z = Element.zero(self.roster)
        return self.substitute({name: z for name in names})

    # -- rendering and parsing ------------------------------------------

    def render(self) -> str:
        """Canonical text form; the monomial order is fixed forever."""
        if not self.terms:
            return "0"
        roster = self.roster
        parts = []
        for mono in sorted(self.terms):
            coeff = self.terms[mono]
            factors = []
            for gid, e in enumerate(mono):
                if not e:
                    continue
                name = roster.gens[gid].name
                factors.append(name if e == 1 else f"{name}^{e}")
            body = " ".join([str(abs(coeff))] + factors)
            parts.append(("- " if coeff < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[1:]

    def __repr__(self):
        return f"<Element {self.render()}>"

    @staticmethod
    def parse(roster: GeneratorRoster, text: str) -> "Element":
        return parse_element(roster, text)


_TOKEN = re.compile(
    r"\s*(?:(?P<sign>[+-])|(?P<coeff>\d+(?:/\d+)?)|(?P<gen>[a-z]+\d+)(?:\^(?P<exp>\d+))?)"
)


def parse_element(roster: GeneratorRoster, text: str) -> Element:
    """Parse the polynomial grammar; normalization happens immediately."""
    s = text.strip()
    if s in ("0", "+0", "-0", ""):
        if s == "":
            raise ParseError("empty polynomial text")
        return Element.zero(roster)
    result = Element.zero(roster)
    pos = 0
    sign = 1
    coeff: Fraction | None = None
    word: list[str] = []
    term_open = False

    def close_term():
        nonlocal sign, coeff, word, term_open, result
        if not term_open:
            raise ParseError("dangling sign or empty term", column=pos)
        q = coeff if coeff is not None else Fraction(1)
        result = result + Element.from_word(roster, word, sign * q)
        sign, coeff, word, term_open = 1, None, [], False

    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input {s[pos:pos+10]!r}", column=pos + 1)
        pos = m.end()
        if m.group("sign"):
            if term_open:
                close_term()
            if m.group("sign") == "-":
                sign = -sign
            continue
        if m.group("coeff"):
            if coeff is not None or word:
                raise ParseError("coefficient must precede generators", column=pos)
            coeff = Fraction(m.group("coeff"))
            term_open = True
            continue
        name = m.group("gen")
        if not roster.has_generator(name):
            raise ParseError(f"unknown generator token {name!r}", column=pos)
        exp = int(m.group("exp") or 1)
        gen = roster.generator(name)
        if gen.odd and exp > 1:
            return_zero_marker = True
            # an odd generator squared is zero; the term still has to be
            # consumed, so record it as an explicit zero factor
            word = word + [name, name]
        else:
            word.extend([name] * exp)
        term_open = True
    if term_open:
        close_term()
    elif sign == -1 or coeff is not None:
        raise ParseError("dangling sign or coefficient at end of input")
    return result
