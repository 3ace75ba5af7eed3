"""Ideal arithmetic: powers, sums, products, intersection, quotients,
saturation, elimination, membership, and kernels of ring maps.

Every operation is exact and deterministic.  Constructions that need an
auxiliary variable (intersection by a tag variable, radical membership by
the trick polynomial 1 - y*f) allocate names prefixed with '_' which the
polynomial parser refuses, so user input can never collide with them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import AlgebraError, BudgetExceededError, RingMismatchError
from .groebner import Budget, GroebnerBasis, groebner_basis, normal_form
from .orders import BlockElim, Grevlex, MonomialOrder
from .polynomials import Polynomial, evaluate_map, exact_divide, format_poly, transport
from .rings import RingSpec


class Ideal:
    """An ideal of R[X] given by a finite generating set.

    Zero generators are discarded and duplicates collapse, so the empty
    list is the zero ideal.  Groebner bases and powers are cached on the
    instance; all caches are per monomial order.
    """

    __slots__ = ("ring", "generators", "_gb", "_powers")

    def __init__(self, ring: RingSpec, generators: Iterable[Polynomial]):
        gens: list[Polynomial] = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError(f"generator in {g.ring}, expected {ring}")
            if g.is_zero() or g in gens:
                continue
            gens.append(g)
        self.ring = ring
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self._gb: dict[MonomialOrder, GroebnerBasis] = {}
        self._powers: dict[int, "Ideal"] = {}

    # -- construction ------------------------------------------------------

    @classmethod
    def from_texts(cls, ring: RingSpec, texts: Sequence[str]) -> "Ideal":
        from .polynomials import parse_poly

        return cls(ring, [parse_poly(t, ring) for t in texts])

    def __repr__(self) -> str:
        inner = ", ".join(format_poly(g) for g in self.generators) or "0"
        return f"Ideal({self.ring}; {inner})"

    def is_zero_ideal(self) -> bool:
        return not self.generators

    # -- Groebner machinery --------------------------------------------------

    def groebner(
        self, order: MonomialOrder | None = None, budget: Budget | None = None
    ) -> GroebnerBasis:
        order = order or Grevlex()
        got = self._gb.get(order)
        if got is None:
            if not self.generators:
                raise AlgebraError("the zero ideal has no Groebner basis elements")
            got = groebner_basis(self.generators, order, budget)
            self._gb[order] = got
        return got

    def contains(self, f: Polynomial, budget: Budget | None = None) -> bool:
        if f.ring != self.ring:
            raise RingMismatchError(f"membership candidate in {f.ring}, expected {self.ring}")
        if f.is_zero():
            return True
        if not self.generators:
            return False
        gb = self.groebner(budget=budget)
        return normal_form(f, gb, budget=budget).is_zero()

    # -- arithmetic -----------------------------------------------------------

    def power(self, t: int, budget: Budget | None = None) -> "Ideal":
        """I^t, generated by all products of t generators (with repetition)."""
        if t < 1:
            raise AlgebraError(f"ideal powers need t >= 1, got {t}")
        got = self._powers.get(t)
        if got is None:
            if t == 1 or not self.generators:
                got = self
            else:
                prods = [
                    _product(combo)
                    for combo in itertools.combinations_with_replacement(self.generators, t)
                ]
                got = Ideal(self.ring, prods)
            self._powers[t] = got
        return got

    def __add__(self, other: "Ideal") -> "Ideal":
        self._peer(other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._peer(other)
        return Ideal(
            self.ring,
            [f * g for f in self.generators for g in other.generators],
        )

    def _peer(self, other: "Ideal") -> None:
        if not isinstance(other, Ideal):
            raise TypeError(f"expected an Ideal, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(f"ideals live in {self.ring} and {other.ring}")

    # -- intersection and friends ---------------------------------------------

    def intersect(self, other: "Ideal", budget: Budget | None = None) -> "Ideal":
        """I ∩ J via a tag variable u: (u*I + (1-u)*J) ∩ R[X]."""
        self._peer(other)
        if self.is_zero_ideal() or other.is_zero_ideal():
            return Ideal(self.ring, [])
        ring = self.ring
        tag = ring.fresh_aux("t")
        ext = ring.extend_aux(tag)
        u = Polynomial.variable(ext, tag)
        one = Polynomial.one(ext)
        gens = [u * transport(g, ext) for g in self.generators]
        gens += [(one - u) * transport(g, ext) for g in other.generators]
        front_free = _eliminate_front(gens, ext, (tag,), budget)
        return Ideal(ring, [transport(g, ring) for g in front_free])

    def quotient(self, f: Polynomial, budget: Budget | None = None) -> "Ideal":
        """The colon ideal (I : f) = {g : g*f in I}."""
        if f.ring != self.ring:
            raise RingMismatchError(f"quotient divisor in {f.ring}, expected {self.ring}")
        if f.is_zero():
            return Ideal(self.ring, [Polynomial.one(self.ring)])
        if self.is_zero_ideal():
            return self
        meet = self.intersect(Ideal(self.ring, [f]), budget)
        return Ideal(self.ring, [exact_divide(g, f) for g in meet.generators])

    def saturate(self, f: Polynomial, budget: Budget | None = None) -> "Ideal":
        """(I : f^infinity).  Over a field coefficient ring this is a single
        elimination with the trick polynomial 1 - y*f; over ZZ quotients are
        iterated until they stabilize."""
        if f.ring != self.ring:
            raise RingMismatchError(f"saturation divisor in {f.ring}, expected {self.ring}")
        if f.is_zero() or self.is_zero_ideal():
            return self.quotient(f, budget) if f.is_zero() else self
        ring = self.ring
        if ring.is_int_mode:
            current = self
            for _ in range(64):
                nxt = current.quotient(f, budget)
                if nxt.equals(current, budget):
                    return current
                current = nxt
            raise BudgetExceededError("saturation did not stabilize within 64 quotient steps")
        tag = ring.fresh_aux("y")
        ext = ring.extend_aux(tag)
        y = Polynomial.variable(ext, tag)
        gens = [transport(g, ext) for g in self.generators]
        gens.append(Polynomial.one(ext) - y * transport(f, ext))
        front_free = _eliminate_front(gens, ext, (tag,), budget)
        return Ideal(ring, [transport(g, ring) for g in front_free])

    def eliminate(self, front: Sequence[str], budget: Budget | None = None) -> "Ideal":
        """I ∩ R', where R' drops the listed variables: generators of the
        elimination ideal, still expressed in the ambient ring."""
        front = tuple(front)
        for v in front:
            self.ring.index(v)
        if not front:
            return self
        if self.is_zero_ideal():
            return self
        kept = _eliminate_front(list(self.generators), self.ring, front, budget)
        return Ideal(self.ring, kept)

    def radical_contains(self, f: Polynomial, budget: Budget | None = None) -> "RadicalMembership":
        """Is some power of f in I?

        Over a field coefficient ring the answer is exact: f is in the
        radical iff 1 lies in I + (1 - y*f).  Over ZZ powers f, f^2, ... are
        tested up to a fixed cap; a negative answer is then marked capped.
        """
        if f.ring != self.ring:
            raise RingMismatchError(f"radical candidate in {f.ring}, expected {self.ring}")
        if f.is_zero():
            return RadicalMembership(True, capped=False, power=1)
        if self.is_zero_ideal():
            return RadicalMembership(False, capped=False)
        ring = self.ring
        if ring.is_int_mode:
            fk = f
            for k in range(1, 13):
                if self.contains(fk, budget):
                    return RadicalMembership(True, capped=False, power=k)
                fk = fk * f
            return RadicalMembership(False, capped=True)
        tag = ring.fresh_aux("y")
        ext = ring.extend_aux(tag)
        y = Polynomial.variable(ext, tag)
        gens = [transport(g, ext) for g in self.generators]
        gens.append(Polynomial.one(ext) - y * transport(f, ext))
        trick = Ideal(ext, gens)
        if trick.contains(Polynomial.one(ext), budget):
            return RadicalMembership(True, capped=False)
        return RadicalMembership(False, capped=False)

    def equals(self, other: "Ideal", budget: Budget | None = None) -> bool:
        self._peer(other)
        return all(other.contains(g, budget) for g in self.generators) and all(
            self.contains(g, budget) for g in other.generators
        )


@dataclass(frozen=True, slots=True)
class RadicalMembership:
    """Answer to a radical membership query.  ``capped`` marks a negative
    that only rules out powers up to the search cap (ZZ mode)."""

    value: bool
    capped: bool
    power: int | None = None

    def __bool__(self) -> bool:
        return self.value


def _product(polys: Sequence[Polynomial]) -> Polynomial:
    out = polys[0]
    for p in polys[1:]:
        out = out * p
    return out


def _eliminate_front(
    gens: list[Polynomial],
    ring: RingSpec,
    front: tuple[str, ...],
    budget: Budget | None,
) -> list[Polynomial]:
    """Elements of a block-order basis that avoid the front variables.

    A (strong) Groebner basis under an elimination order restricts to a
    basis of the elimination ideal, over fields and over ZZ alike.
    """
    gb = groebner_basis(gens, BlockElim(front), budget)
    return [g for g in gb.elements if g.free_of(front)]


# -- ring maps ----------------------------------------------------------------


@dataclass(frozen=True)
class RingMap:
    """A coefficient-preserving ring map determined by variable images."""

    source: RingSpec
    target: RingSpec
    images: Mapping[str, Polynomial]

    def __post_init__(self):
        if self.source.domain != self.target.domain:
            raise RingMismatchError(
                f"map must preserve coefficients: {self.source.domain.name} "
                f"vs {self.target.domain.name}"
            )
        for v in self.source.variables:
            img = self.images.get(v)
            if img is None:
                raise AlgebraError(f"no image given for source variable {v!r}")
            if img.ring != self.target:
                raise RingMismatchError(f"image of {v} lives in {img.ring}, not {self.target}")

    def apply(self, f: Polynomial) -> Polynomial:
        if f.ring != self.source:
            raise RingMismatchError(f"argument in {f.ring}, expected {self.source}")
        return evaluate_map(f, self.images, self.target)

    def kernel(self, budget: Budget | None = None) -> Ideal:
        """Kernel computed in the joint ring: eliminate the target variables
        from (v - image(v) : v a source variable)."""
        joint = self.source.extend_aux(*self.target.variables)
        gens = []
        for v in self.source.variables:
            gens.append(
                Polynomial.variable(joint, v) - transport(self.images[v], joint)
            )
        kept = _eliminate_front(gens, joint, self.target.variables, budget)
        return Ideal(self.source, [transport(g, self.source) for g in kept])


# -- functional aliases ----------------------------------------------------------


def ideal_power(ideal: Ideal, t: int, budget: Budget | None = None) -> Ideal:
    return ideal.power(t, budget)


def intersect(left: Ideal, right: Ideal, budget: Budget | None = None) -> Ideal:
    return left.intersect(right, budget)


def quotient(ideal: Ideal, f: Polynomial, budget: Budget | None = None) -> Ideal:
    return ideal.quotient(f, budget)


def saturate(ideal: Ideal, f: Polynomial, budget: Budget | None = None) -> Ideal:
    return ideal.saturate(f, budget)


def eliminate(ideal: Ideal, front: Sequence[str], budget: Budget | None = None) -> Ideal:
    return ideal.eliminate(front, budget)


def member(f: Polynomial, ideal: Ideal, budget: Budget | None = None) -> bool:
    return ideal.contains(f, budget)


def radical_member(
    f: Polynomial, ideal: Ideal, budget: Budget | None = None
) -> RadicalMembership:
    return ideal.radical_contains(f, budget)


def ideal_equal(left: Ideal, right: Ideal, budget: Budget | None = None) -> bool:
    return left.equals(right, budget)


def kernel_of_map(ring_map: RingMap, budget: Budget | None = None) -> Ideal:
    return ring_map.kernel(budget)
