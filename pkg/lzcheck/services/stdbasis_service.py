"""
Standard Basis Service - Buchberger/Mora standard bases over (quotient) polynomial rings.
Normal forms, membership, syzygies by tagging and Nakayama minimal generators.
"""

import heapq
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple, Union

from lzcheck.errors import ResourceLimit
from lzcheck.models.polynomial import (
    DEGREVLEX, MonomialOrder, Polynomial, PolyRing, VectorPoly,
    divide, monomial_div, monomial_divides, monomial_lcm, monomial_mul,
)

logger = logging.getLogger(__name__)

DEFAULT_PAIR_BUDGET = 10 ** 6

Element = Union[Polynomial, VectorPoly]
ModuleMonomial = Tuple[int, Tuple[int, ...]]


class PositionRule(str, Enum):
    TOP = 'term_over_position'
    POT = 'position_over_term'


@dataclass(frozen=True)
class ModuleOrder:
    """Order on module monomials m*e_pos; lower positions rank higher."""

    base: MonomialOrder
    position: PositionRule = PositionRule.TOP

    @property
    def is_local(self) -> bool:
        return self.base.is_local

    def key(self, pos: int, mono: Tuple[int, ...]) -> tuple:
        if self.position is PositionRule.TOP:
            return self.base.key(mono) + (-pos,)
        return (-pos,) + self.base.key(mono)


@dataclass(frozen=True)
class AmbientRing:
    """Polynomial ring k[vars] (with its order), optionally divided by (quotient)."""

    base: PolyRing
    quotient: Optional[Polynomial] = None

    @property
    def field(self):
        return self.base.field

    @property
    def order(self) -> MonomialOrder:
        return self.base.order

    def with_order(self, order: MonomialOrder) -> 'AmbientRing':
        quotient = self.quotient.with_order(order) if self.quotient is not None else None
        return AmbientRing(self.base.with_order(order), quotient)

    def reduce(self, g: Polynomial) -> Polynomial:
        """Remainder of g on division by the quotient polynomial (global order, no unit scaling)."""
        if self.quotient is None or g.is_zero():
            return g.in_ring(self.base)
        _, remainder = divide(g.with_order(DEGREVLEX), [self.quotient.with_order(DEGREVLEX)])
        return remainder.in_ring(self.base)

    def __str__(self):
        if self.quotient is None:
            return str(self.base)
        return f"{self.base} / ({self.quotient})"


@dataclass(frozen=True)
class GeneratorSet:
    """Generators of an ideal (rank 0) or of a submodule of R^rank.

    Zero entries are kept so that a row such as a Jacobian keeps its
    indexing for ``syz``; every other operation ignores them.
    """

    ring: AmbientRing
    elems: tuple
    rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'elems', tuple(self.elems))
        if self.rank == 0 and self.elems and isinstance(self.elems[0], VectorPoly):
            object.__setattr__(self, 'rank', len(self.elems[0]))

    def nonzero(self) -> 'GeneratorSet':
        return GeneratorSet(self.ring, tuple(e for e in self.elems if not e.is_zero()), self.rank)

    @classmethod
    def ideal(cls, ring: AmbientRing, polys: Sequence[Polynomial]) -> 'GeneratorSet':
        return cls(ring, tuple(p.in_ring(ring.base) for p in polys))

    @classmethod
    def module(cls, ring: AmbientRing, vectors: Sequence[VectorPoly], rank: int) -> 'GeneratorSet':
        vectors = tuple(VectorPoly(tuple(c.in_ring(ring.base) for c in v)) for v in vectors)
        return cls(ring, vectors, rank)

    @property
    def is_module(self) -> bool:
        return self.rank > 0

    @property
    def width(self) -> int:
        """Number of components of an element."""
        return max(self.rank, 1)

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)


class _Elem:
    """Internal sparse module element: (position, monomial) -> raw coefficient."""

    __slots__ = ('terms', 'lead', 'lc', 'ecart')

    def __init__(self, terms: Dict[ModuleMonomial, int], order: ModuleOrder):
        self.terms = terms
        if terms:
            self.lead = max(terms, key=lambda t: order.key(t[0], t[1]))
            self.lc = terms[self.lead]
            self.ecart = max(sum(m) for _, m in terms) - sum(self.lead[1])
        else:
            self.lead = None
            self.lc = 0
            self.ecart = 0


@dataclass
class StandardBasis:
    """Standard basis of a GeneratorSet with respect to ``order``."""

    gens: GeneratorSet
    order: ModuleOrder
    _elems: List[_Elem] = field(default_factory=list, repr=False)

    @property
    def leading_monomials(self) -> List[ModuleMonomial]:
        return [e.lead for e in self._elems]

    def __len__(self):
        return len(self._elems)


class _Engine:
    """Mora/Buchberger kernel over a fixed field and module order.

    Every S-pair and every reduction step is charged against ``budget``.
    """

    def __init__(self, ring: AmbientRing, order: ModuleOrder, budget: int):
        self.ring = ring
        self.field = ring.field
        self.order = order
        self.budget = budget
        self.pairs_seen = 0
        self.work = 0

    def charge(self, what: str):
        self.work += 1
        if self.work > self.budget:
            logger.error(f"[std] budget of {self.budget} exhausted after {self.pairs_seen} pairs ({what})")
            raise ResourceLimit(f"budget of {self.budget} S-pairs and reduction steps exhausted")

    def make(self, terms) -> _Elem:
        return _Elem(terms, self.order)

    def monic(self, g: _Elem) -> _Elem:
        if g.lead is None or g.lc == 1:
            return g
        inv = self.field.inv(g.lc)
        mul = self.field.mul
        return self.make({k: mul(c, inv) for k, c in g.terms.items()})

    def axpy(self, h: _Elem, coeff: int, shift: Tuple[int, ...], g: _Elem) -> _Elem:
        """h - coeff * shift * g."""
        field = self.field
        terms = dict(h.terms)
        for (pos, mono), c in g.terms.items():
            key = (pos, monomial_mul(mono, shift))
            value = field.sub(terms.get(key, 0), field.mul(coeff, c))
            if value:
                terms[key] = value
            else:
                terms.pop(key, None)
        return self.make(terms)

    def reduce_by(self, h: _Elem, g: _Elem) -> _Elem:
        shift = monomial_div(h.lead[1], g.lead[1])
        return self.axpy(h, self.field.div(h.lc, g.lc), shift, g)

    def spoly(self, a: _Elem, b: _Elem) -> _Elem:
        lcm = monomial_lcm(a.lead[1], b.lead[1])
        sa, sb = monomial_div(lcm, a.lead[1]), monomial_div(lcm, b.lead[1])
        field = self.field
        lifted = self.make({(pos, monomial_mul(m, sa)): field.div(c, a.lc) for (pos, m), c in a.terms.items()})
        return self.axpy(lifted, field.inv(b.lc), sb, b)

    def weak_nf(self, h: _Elem, basis: Sequence[_Elem]) -> _Elem:
        """Mora normal form: reduce by the divisor of least ecart, remembering h when it is smaller."""
        targets = list(basis)
        while h.lead is not None:
            pos, mono = h.lead
            best = None
            for g in targets:
                if g.lead[0] == pos and monomial_divides(g.lead[1], mono):
                    if best is None or g.ecart < best.ecart:
                        best = g
            if best is None:
                return h
            self.charge("reduction")
            if best.ecart > h.ecart:
                targets.append(h)
            h = self.reduce_by(h, best)
        return h

    def full_nf(self, h: _Elem, basis: Sequence[_Elem]) -> _Elem:
        """Tail-reduced normal form; global orders only."""
        remainder = {}
        while True:
            h = self.weak_nf(h, basis)
            if h.lead is None:
                return self.make(remainder)
            remainder[h.lead] = h.lc
            h = self.make({k: c for k, c in h.terms.items() if k != h.lead})

    def nf(self, h: _Elem, basis: Sequence[_Elem]) -> _Elem:
        if self.order.is_local:
            return self.weak_nf(h, basis)
        return self.full_nf(h, basis)

    def std(self, inputs: Sequence[_Elem]) -> List[_Elem]:
        basis: List[_Elem] = []
        pairs: list = []
        for g in inputs:
            g = self.nf(g, basis) if basis else g
            if g.lead is not None:
                self._add(basis, pairs, self.monic(g))

        while pairs:
            _, i, j = heapq.heappop(pairs)
            self.pairs_seen += 1
            self.charge("pair")
            h = self.nf(self.spoly(basis[i], basis[j]), basis)
            if h.lead is not None:
                self._add(basis, pairs, self.monic(h))

        logger.debug(f"[std] {len(basis)} elements after {self.pairs_seen} pairs, {self.work} steps")
        return self._minimize(basis)

    def _add(self, basis: List[_Elem], pairs: list, g: _Elem):
        k = len(basis)
        for i, b in enumerate(basis):
            if b.lead[0] != g.lead[0]:
                continue
            if not self.order.is_local and _single_position(b, g) and not self._shares_variable(b, g):
                # product criterion
                continue
            lcm = monomial_lcm(b.lead[1], g.lead[1])
            heapq.heappush(pairs, (sum(lcm), i, k))
        basis.append(g)

    @staticmethod
    def _shares_variable(a: _Elem, b: _Elem) -> bool:
        return any(i and j for i, j in zip(a.lead[1], b.lead[1]))

    def _minimize(self, basis: List[_Elem]) -> List[_Elem]:
        keep = []
        for idx, g in enumerate(basis):
            redundant = False
            for jdx, h in enumerate(basis):
                if idx == jdx or h.lead[0] != g.lead[0] or not monomial_divides(h.lead[1], g.lead[1]):
                    continue
                if h.lead != g.lead or jdx < idx:
                    redundant = True
                    break
            if not redundant:
                keep.append(g)
        if not self.order.is_local:
            keep = [self.monic(self.full_nf(g, [h for h in keep if h is not g])) for g in keep]
        key = self.order.key
        keep.sort(key=lambda g: key(*g.lead), reverse=True)
        return keep


def _single_position(a: _Elem, b: _Elem) -> bool:
    return all(pos == a.lead[0] for pos, _ in a.terms) and all(pos == b.lead[0] for pos, _ in b.terms)


class StandardBasisService:
    """Service computing standard bases, normal forms and syzygies."""

    def __init__(self, pair_budget: int = DEFAULT_PAIR_BUDGET):
        self.pair_budget = pair_budget

    # --- conversion ---

    @staticmethod
    def _to_terms(g: Element, offset: int = 0) -> Dict[ModuleMonomial, int]:
        if isinstance(g, Polynomial):
            return {(offset, m): c for m, c in g.terms.items()}
        terms = {}
        for pos, comp in enumerate(g):
            for m, c in comp.terms.items():
                terms[(pos + offset, m)] = c
        return terms

    @staticmethod
    def _from_terms(terms, ring: PolyRing, width: int, is_module: bool, offset: int = 0) -> Element:
        comps = [dict() for _ in range(width)]
        for (pos, m), c in terms.items():
            if offset <= pos < offset + width:
                comps[pos - offset][m] = c
        polys = tuple(Polynomial(ring, d) for d in comps)
        return VectorPoly(polys) if is_module else polys[0]

    @staticmethod
    def _reduce_element(ring: AmbientRing, g: Element) -> Element:
        if isinstance(g, Polynomial):
            return ring.reduce(g)
        return VectorPoly(tuple(ring.reduce(c) for c in g))

    def _quotient_terms(self, ring: AmbientRing, width: int) -> List[Dict[ModuleMonomial, int]]:
        if ring.quotient is None:
            return []
        return [{(pos, m): c for m, c in ring.quotient.terms.items()} for pos in range(width)]

    # --- public API ---

    def std(self, G: GeneratorSet, position: PositionRule = PositionRule.TOP) -> StandardBasis:
        """Standard basis of G (plus quotient relations) under the ring's order."""
        order = ModuleOrder(G.ring.order, position)
        engine = _Engine(G.ring, order, self.pair_budget)
        inputs = [engine.make(self._to_terms(g)) for g in G.elems]
        inputs += [engine.make(t) for t in self._quotient_terms(G.ring, G.width)]
        elems = engine.std(inputs)
        gens = GeneratorSet(G.ring, tuple(self._from_terms(e.terms, G.ring.base, G.width, G.is_module)
                                          for e in elems), G.rank)
        return StandardBasis(gens, order, elems)

    def normal_form(self, g: Element, B: StandardBasis) -> Element:
        """Normal form of g; weak (up to a unit) for local orders. Zero iff g lies in the span."""
        engine = _Engine(B.gens.ring, B.order, self.pair_budget)
        h = engine.nf(engine.make(self._to_terms(g)), B._elems)
        width = len(g) if isinstance(g, VectorPoly) else 1
        return self._from_terms(h.terms, B.gens.ring.base, width, isinstance(g, VectorPoly))

    def contains(self, B: StandardBasis, g: Element) -> bool:
        return self.normal_form(g, B).is_zero()

    def reduce_module(self, gens: GeneratorSet, candidate: Element) -> Element:
        """Normal form of candidate against std(gens)."""
        return self.normal_form(candidate, self.std(gens))

    def syz(self, G: GeneratorSet) -> GeneratorSet:
        """Generators of the syzygies of G over the (quotient, localised) ring, by tagging."""
        s, width = len(G.elems), G.width
        ring = G.ring
        order = ModuleOrder(ring.order, PositionRule.POT)
        engine = _Engine(AmbientRing(ring.base), order, self.pair_budget)

        inputs = []
        for i, g in enumerate(G.elems):
            terms = self._to_terms(self._reduce_element(ring, g))
            terms[(width + i, (0,) * ring.base.nvars)] = 1
            inputs.append(engine.make(terms))
        inputs += [engine.make(t) for t in self._quotient_terms(ring, width)]

        basis = engine.std(inputs)
        syzygies = []
        for e in basis:
            if e.lead[0] < width:
                continue
            vec = self._from_terms(e.terms, ring.base, s, True, offset=width)
            vec = VectorPoly(tuple(ring.reduce(c) for c in vec))
            if not vec.is_zero():
                syzygies.append(vec)
        logger.debug(f"[syz] {len(syzygies)} syzygies of {s} generators")
        return GeneratorSet(ring, tuple(syzygies), s)

    def minimal_generators(self, M: GeneratorSet) -> GeneratorSet:
        """Nakayama minimisation over the local (quotient) ring.

        A syzygy of the current generators with a unit in entry j exists iff
        g_j lies in the submodule spanned by the others, so generators are
        tested in index order and dropped while that membership holds. The
        survivors have a presentation matrix with entries in the maximal ideal.
        """
        alive = [j for j, g in enumerate(M.elems) if not g.is_zero()]
        for j in list(alive):
            others = GeneratorSet(M.ring, tuple(M.elems[i] for i in alive if i != j), M.rank)
            if self.reduce_module(others, M.elems[j]).is_zero():
                alive.remove(j)
                logger.debug(f"[minimize] dropped generator {j}, {len(alive)} left")
        return GeneratorSet(M.ring, tuple(M.elems[j] for j in alive), M.rank)

    def has_unit_relation(self, M: GeneratorSet) -> bool:
        """True iff some relation among M's generators has an entry that is a unit."""
        return any(not c.constant_term().is_zero() for rel in self.syz(M) for c in rel)

    def module_equal(self, A: GeneratorSet, B: GeneratorSet) -> bool:
        """Mutual membership of two generating sets in the (quotient) ring."""
        std_a, std_b = self.std(A), self.std(B)
        return (all(self.contains(std_b, a) for a in A.elems)
                and all(self.contains(std_a, b) for b in B.elems))
