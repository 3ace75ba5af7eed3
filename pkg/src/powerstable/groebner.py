"""Multivariate division and Groebner bases over fields and over ZZ.

Field mode runs Buchberger's algorithm with the normal selection strategy
(pairs chosen by minimal lcm under the active order, ties by input index)
and returns the unique reduced basis: monic, mutually irreducible, sorted
ascending by leading monomial.

Over ZZ the engine computes a *strong* basis: Buchberger is extended with
G-polynomials built from an extended gcd of the leading coefficients, and
reduction divides coefficients with the least non-negative remainder
(5 reduced by 2 leaves 1).  A strong basis strong-reduces every ideal
element to zero, which is exactly what membership, elimination, and
contraction over ZZ rely on.  Leading coefficients are normalized positive;
content is never removed.

Every computation is budgeted (pair count, total degree).  Exceeding a
budget raises BudgetExceededError rather than returning a partial answer.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .coefficients import divmod_least, ext_gcd
from .errors import AlgebraError, BudgetExceededError, RingMismatchError, ZeroPolynomialError
from .orders import Grevlex, MonomialOrder, key_function
from .polynomials import Exponents, Polynomial
from .rings import RingSpec


@dataclass(frozen=True, slots=True)
class Budget:
    max_pairs: int = 100_000
    max_degree: int = 60


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class GroebnerBasis:
    ring: RingSpec
    order: MonomialOrder
    elements: tuple[Polynomial, ...]
    reduced: bool
    strong: bool

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


# -- shared helpers -----------------------------------------------------------


def _check_same_ring(polys: Sequence[Polynomial]) -> RingSpec:
    ring = polys[0].ring
    for p in polys[1:]:
        if p.ring != ring:
            raise RingMismatchError(f"mixed rings {ring} and {p.ring}")
    return ring


def _degree_guard(p: Polynomial, budget: Budget) -> None:
    if p.total_degree() > budget.max_degree:
        raise BudgetExceededError(
            f"degree budget {budget.max_degree} exceeded (term of degree {p.total_degree()})"
        )


def _divides(lm: Exponents, e: Exponents) -> bool:
    for x, y in zip(lm, e):
        if x > y:
            return False
    return True


class _Reducers:
    """Precomputed leading data for a reducer set; grows during Buchberger."""

    __slots__ = ("keyf", "polys", "lms", "lcs", "items")

    def __init__(self, keyf):
        self.keyf = keyf
        self.polys: list[Polynomial] = []
        self.lms: list[Exponents] = []
        self.lcs: list = []
        self.items: list[list] = []

    def append(self, p: Polynomial) -> None:
        lm = max(p._terms, key=self.keyf)
        self.polys.append(p)
        self.lms.append(lm)
        self.lcs.append(p._terms[lm])
        self.items.append(list(p._terms.items()))


def _nf_terms(
    fterms: dict,
    red: _Reducers,
    ring: RingSpec,
    budget: Budget,
    quotients: list[dict] | None = None,
) -> dict:
    """Full normal form of a term dict against ``red``; the workhorse loop.

    Field mode cancels each reducible leading term completely; ZZ mode
    divides coefficients with least non-negative remainder and keeps
    irreducible residues.  Monomials are visited in descending order via a
    lazy max-heap, so each monomial is finalized exactly once.
    """
    keyf = red.keyf
    int_mode = ring.is_int_mode
    dom = ring.domain
    max_degree = budget.max_degree
    work = dict(fterms)
    rem: dict = {}
    heap: list = []
    for e in work:
        if sum(e) > max_degree:
            raise BudgetExceededError(f"degree budget {max_degree} exceeded during reduction")
        heap.append((tuple(-x for x in keyf(e)), e))
    heapq.heapify(heap)
    nred = len(red.lms)

    def subtract(e: Exponents, q, gi: int) -> None:
        # work -= q * X^(e - lm_gi) * g_i
        lm = red.lms[gi]
        shift = tuple(x - y for x, y in zip(e, lm))
        if quotients is not None:
            qd = quotients[gi]
            s = qd.get(shift)
            if s is None:
                qd[shift] = q
            else:
                s = s + q
                if s:
                    qd[shift] = s
                else:
                    del qd[shift]
        for eg, cg in red.items[gi]:
            em = tuple(x + y for x, y in zip(shift, eg))
            d = q * cg
            s = work.get(em)
            if s is None:
                if sum(em) > max_degree:
                    raise BudgetExceededError(
                        f"degree budget {max_degree} exceeded during reduction"
                    )
                work[em] = -d
                heapq.heappush(heap, (tuple(-x for x in keyf(em)), em))
            else:
                s = s - d
                if s:
                    work[em] = s
                else:
                    del work[em]

    while heap:
        _, e = heapq.heappop(heap)
        if e not in work:
            continue
        if int_mode:
            c = work[e]
            while c:
                for gi in range(nred):
                    if _divides(red.lms[gi], e):
                        q, r = divmod_least(c, red.lcs[gi])
                        if q:
                            subtract(e, q, gi)
                            c = work.get(e, 0)
                            break
                else:
                    break
            if e in work:
                rem[e] = work.pop(e)
        else:
            c = work[e]
            for gi in range(nred):
                if _divides(red.lms[gi], e):
                    subtract(e, dom.div(c, red.lcs[gi]), gi)
                    break
            else:
                rem[e] = work.pop(e)
    return rem


def divide(
    f: Polynomial,
    basis: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    budget: Budget | None = None,
) -> tuple[list[Polynomial], Polynomial]:
    """Divide f by the list, returning (quotients, remainder).

    The transcript is exact: f == sum(q_i * g_i) + remainder, and no
    remainder term is reducible by any divisor's leading term.
    """
    polys = list(basis)
    if not polys:
        return [], f
    ring = _check_same_ring([f, *polys])
    for g in polys:
        if g.is_zero():
            raise ZeroPolynomialError("zero divisor in division basis")
    budget = budget or DEFAULT_BUDGET
    keyf = key_function(order or Grevlex(), ring)
    red = _Reducers(keyf)
    for g in polys:
        red.append(g)
    quotients: list[dict] = [{} for _ in polys]
    rem = _nf_terms(f._terms, red, ring, budget, quotients)
    qs = [Polynomial._make(ring, qd) for qd in quotients]
    return qs, Polynomial._make(ring, rem)


def normal_form(
    f: Polynomial,
    basis: Sequence[Polynomial] | GroebnerBasis,
    order: MonomialOrder | None = None,
    budget: Budget | None = None,
) -> Polynomial:
    if isinstance(basis, GroebnerBasis):
        if order is None:
            order = basis.order
        basis = basis.elements
    _, r = divide(f, basis, order, budget)
    return r


# -- S and G polynomials ---------------------------------------------------------


def _leading(p: Polynomial, keyf) -> tuple[Exponents, object]:
    e = max(p._terms, key=keyf)
    return e, p._terms[e]


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    """The S-polynomial; over ZZ leading coefficients are matched by their lcm."""
    ring = _check_same_ring([f, g])
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("S-polynomial of a zero polynomial")
    keyf = key_function(order or Grevlex(), ring)
    lmf, lcf = _leading(f, keyf)
    lmg, lcg = _leading(g, keyf)
    lcm_mono = tuple(max(x, y) for x, y in zip(lmf, lmg))
    sf = tuple(x - y for x, y in zip(lcm_mono, lmf))
    sg = tuple(x - y for x, y in zip(lcm_mono, lmg))
    if ring.is_int_mode:
        d, _, _ = ext_gcd(lcf, lcg)
        c = abs(lcf * lcg) // d
        return f.mul_term(c // lcf, sf) - g.mul_term(c // lcg, sg)
    dom = ring.domain
    return f.mul_term(dom.div(dom.one, lcf), sf) - g.mul_term(dom.div(dom.one, lcg), sg)


def g_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    """The G-polynomial (ZZ only): its leading coefficient is gcd(lc f, lc g)."""
    ring = _check_same_ring([f, g])
    if not ring.is_int_mode:
        raise AlgebraError("G-polynomials only exist over ZZ")
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("G-polynomial of a zero polynomial")
    keyf = key_function(order or Grevlex(), ring)
    lmf, lcf = _leading(f, keyf)
    lmg, lcg = _leading(g, keyf)
    lcm_mono = tuple(max(x, y) for x, y in zip(lmf, lmg))
    sf = tuple(x - y for x, y in zip(lcm_mono, lmf))
    sg = tuple(x - y for x, y in zip(lcm_mono, lmg))
    _, s, t = ext_gcd(lcf, lcg)
    return f.mul_term(s, sf) + g.mul_term(t, sg)


# -- Buchberger ----------------------------------------------------------------------


def _poly_token(p: Polynomial, keyf, dom):
    return tuple(
        (keyf(e), dom.sort_token(c))
        for e, c in sorted(p._terms.items(), key=lambda t: keyf(t[0]), reverse=True)
    )


def _normalize(p: Polynomial, keyf) -> Polynomial:
    """Monic over a field; positive leading coefficient over ZZ (content kept)."""
    ring = p.ring
    lm = max(p._terms, key=keyf)
    lc = p._terms[lm]
    if ring.is_int_mode:
        return -p if lc < 0 else p
    if lc == ring.domain.one:
        return p
    return p.scale(ring.domain.div(ring.domain.one, lc))


def groebner_basis(
    gens: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    budget: Budget | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis (strong over ZZ) of the ideal the gens generate.

    Deterministic: fixed input order implies identical output, and over a
    field any generating set of the same ideal yields the identical reduced
    basis.
    """
    order = order or Grevlex()
    budget = budget or DEFAULT_BUDGET
    polys = []
    for g in gens:
        if g.is_zero():
            continue
        if g not in polys:
            polys.append(g)
    if not polys:
        raise AlgebraError("cannot compute a basis for an empty or all-zero generating set")
    ring = _check_same_ring(polys)
    int_mode = ring.is_int_mode
    keyf = key_function(order, ring)
    for p in polys:
        _degree_guard(p, budget)

    red = _Reducers(keyf)
    heap: list = []

    def push_pairs(j: int) -> None:
        lmj = red.lms[j]
        for i in range(j):
            lmi = red.lms[i]
            lcm_mono = tuple(max(x, y) for x, y in zip(lmi, lmj))
            disjoint = all(x + y == z for x, y, z in zip(lmi, lmj, lcm_mono))
            k = keyf(lcm_mono)
            if int_mode:
                # no product criterion over ZZ: leading coefficients interact
                heapq.heappush(heap, (k, i, j, 0))
                heapq.heappush(heap, (k, i, j, 1))
            elif not disjoint:
                heapq.heappush(heap, (k, i, j, 0))

    def add(p: Polynomial) -> None:
        _degree_guard(p, budget)
        red.append(_normalize(p, keyf))
        push_pairs(len(red.polys) - 1)

    for g in polys:
        r = _nf_terms(g._terms, red, ring, budget) if red.polys else dict(g._terms)
        if r:
            add(Polynomial._make(ring, r))

    pops = 0
    while heap:
        _, i, j, kind = heapq.heappop(heap)
        pops += 1
        if pops > budget.max_pairs:
            raise BudgetExceededError(f"pair budget {budget.max_pairs} exhausted")
        f, g = red.polys[i], red.polys[j]
        p = g_polynomial(f, g, order) if kind else s_polynomial(f, g, order)
        if p.is_zero():
            continue
        _degree_guard(p, budget)
        r = _nf_terms(p._terms, red, ring, budget)
        if r:
            add(Polynomial._make(ring, r))

    basis = _minimalize(red.polys, keyf, ring)
    basis = _tail_reduce(basis, keyf, ring, budget)
    dom = ring.domain
    basis.sort(key=lambda p: (keyf(max(p._terms, key=keyf)), _poly_token(p, keyf, dom)))
    return GroebnerBasis(ring, order, tuple(basis), reduced=True, strong=int_mode)


def _minimalize(polys: list[Polynomial], keyf, ring: RingSpec) -> list[Polynomial]:
    """Drop elements whose leading term is (strongly) divisible by another's."""
    int_mode = ring.is_int_mode
    dom = ring.domain
    decorated = []
    for p in polys:
        lm = max(p._terms, key=keyf)
        decorated.append((keyf(lm), _poly_token(p, keyf, dom), lm, p._terms[lm], p))
    decorated.sort(key=lambda t: (t[0], t[1]))
    kept: list[tuple[Exponents, object, Polynomial]] = []
    for _, _, lm, lc, p in decorated:
        redundant = False
        for klm, klc, _ in kept:
            if _divides(klm, lm) and (not int_mode or lc % klc == 0):
                redundant = True
                break
        if not redundant:
            kept.append((lm, lc, p))
    return [p for _, _, p in kept]


def _tail_reduce(basis: list[Polynomial], keyf, ring: RingSpec, budget: Budget) -> list[Polynomial]:
    """Reduce every term below each leading term against the other elements.

    Heads are left untouched, so the set of leading terms (and with it the
    basis property) is preserved exactly.
    """
    out = list(basis)
    for _ in range(1000):
        changed = False
        for idx, p in enumerate(out):
            others = out[:idx] + out[idx + 1 :]
            if not others:
                continue
            red = _Reducers(keyf)
            for g in others:
                red.append(g)
            lm = max(p._terms, key=keyf)
            tail = dict(p._terms)
            head_c = tail.pop(lm)
            new_tail = _nf_terms(tail, red, ring, budget)
            new_tail[lm] = head_c
            q = Polynomial._make(ring, new_tail)
            if q != p:
                out[idx] = q
                changed = True
        if not changed:
            return out
    raise BudgetExceededError("basis tail reduction did not stabilize")


def is_groebner(gb: GroebnerBasis, budget: Budget | None = None) -> bool:
    """Check the basis property directly: every S (and over ZZ, G) polynomial
    must reduce to zero against the basis.  No pair criteria are applied, so
    this is an independent verification, not a replay of the construction."""
    budget = budget or DEFAULT_BUDGET
    polys = list(gb.elements)
    if not polys:
        return False
    ring = _check_same_ring(polys)
    keyf = key_function(gb.order, ring)
    red = _Reducers(keyf)
    for g in polys:
        if g.is_zero():
            return False
        red.append(g)
    for j in range(len(polys)):
        for i in range(j):
            sp = s_polynomial(polys[i], polys[j], gb.order)
            if not sp.is_zero() and _nf_terms(sp._terms, red, ring, budget):
                return False
            if ring.is_int_mode:
                gp = g_polynomial(polys[i], polys[j], gb.order)
                if not gp.is_zero() and _nf_terms(gp._terms, red, ring, budget):
                    return False
    return True
