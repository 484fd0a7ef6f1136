"""
Singularity Service - verdicts for a hypersurface germ {f = 0} at the origin.
F-purity (Fedder), tangent module and its freeness, Lipman-Zariski verdict, isolatedness.
"""

import logging
from typing import List, Optional

from lzcheck.errors import LzError, NotAtOrigin, WrongCharacteristic
from lzcheck.models.descriptors import Derivation, GermReport, LzVerdict
from lzcheck.models.polynomial import (
    NEGDEGREVLEX, Polynomial, VectorPoly, jacobian, power_poly,
)
from lzcheck.services.stdbasis_service import (
    AmbientRing, GeneratorSet, StandardBasisService,
)

logger = logging.getLogger(__name__)


class SingularityService:
    """Service deciding F-purity and tangent-module freeness of surface germs."""

    def __init__(self, std_service: Optional[StandardBasisService] = None):
        self.std_service = std_service or StandardBasisService()

    # --- helpers ---

    @staticmethod
    def _local(f: Polynomial) -> Polynomial:
        return f.with_order(NEGDEGREVLEX)

    @staticmethod
    def _require_origin(f: Polynomial):
        if not f.constant_term().is_zero():
            raise NotAtOrigin(f"f = {f} does not vanish at the origin")

    @staticmethod
    def is_smooth(f: Polynomial) -> bool:
        return any(not g.constant_term().is_zero() for g in jacobian(f))

    @staticmethod
    def _normalize(v: VectorPoly) -> VectorPoly:
        """Scale so that the leading coefficient under the local order is 1."""
        order = NEGDEGREVLEX
        best = None
        for pos, comp in enumerate(v):
            for m, c in comp.terms.items():
                key = order.key(m) + (-pos,)
                if best is None or key > best[0]:
                    best = (key, c)
        inv = v.ring.field.inv(best[1])
        return VectorPoly(tuple(c.scale(inv) for c in v))

    @staticmethod
    def _sort_key(v: VectorPoly):
        order = NEGDEGREVLEX
        return max(order.key(m) + (-pos,) for pos, comp in enumerate(v) for m in comp.terms)

    # --- verdicts ---

    def is_f_pure(self, f: Polynomial, p: Optional[int] = None) -> bool:
        """Fedder's criterion: f^(p-1) not in (x^p, y^p, z^p)."""
        self._require_origin(f)
        if p is not None and p != f.field.p:
            raise WrongCharacteristic(f"f is defined over {f.field}, not in characteristic {p}")
        p = f.field.p
        f = self._local(f)
        ring = AmbientRing(f.ring)
        frobenius_ideal = GeneratorSet.ideal(ring, [power_poly(g, p) for g in f.ring.gens()])
        basis = self.std_service.std(frobenius_ideal)
        pure = not self.std_service.contains(basis, power_poly(f, p - 1))
        logger.debug(f"[fedder] f = {f}: {'F-pure' if pure else 'not F-pure'}")
        return pure

    def tangent_module(self, f: Polynomial) -> List[Derivation]:
        """Minimal generators of T_X = {v : v(f) in (f)} over the local quotient ring."""
        self._require_origin(f)
        if f.is_zero():
            raise NotAtOrigin("f = 0 does not define a hypersurface")
        f = self._local(f)
        if self.is_smooth(f):
            vectors = self._smooth_basis(f)
        else:
            ring = AmbientRing(f.ring, quotient=f)
            row = GeneratorSet.ideal(ring, list(jacobian(f)))
            tangent = self.std_service.syz(row)
            vectors = list(self.std_service.minimal_generators(tangent).elems)
        vectors = [self._normalize(v) for v in vectors if not v.is_zero()]
        vectors.sort(key=self._sort_key, reverse=True)
        logger.info(f"[tangent] {len(vectors)} minimal generators for f = {f}")
        return [Derivation(v) for v in vectors]

    @staticmethod
    def _smooth_basis(f: Polynomial) -> List[VectorPoly]:
        """f_i*d_j - f_j*d_i for a partial f_i that is a unit at the origin."""
        grad = list(jacobian(f))
        i = next(k for k, g in enumerate(grad) if not g.constant_term().is_zero())
        zero = f.ring.zero
        basis = []
        for j in range(len(grad)):
            if j == i:
                continue
            comps = [zero] * len(grad)
            comps[i] = -grad[j]
            comps[j] = grad[i]
            basis.append(VectorPoly(tuple(comps)))
        return basis

    def is_tangent_free(self, f: Polynomial) -> bool:
        return len(self.tangent_module(f)) == 2

    def lz_verdict(self, f: Polynomial) -> LzVerdict:
        self._require_origin(f)
        if self.is_smooth(f):
            return LzVerdict.SMOOTH
        return LzVerdict.VIOLATES_LZ if self.is_tangent_free(f) else LzVerdict.SATISFIES_LZ

    def check_isolated(self, f: Polynomial) -> bool:
        """True iff (f, f_x, f_y, f_z) is primary to the maximal ideal (or the unit ideal)."""
        f = self._local(f)
        ring = AmbientRing(f.ring)
        ideal = GeneratorSet.ideal(ring, [f] + list(jacobian(f)))
        basis = self.std_service.std(ideal.nonzero())
        leads = [mono for _, mono in basis.leading_monomials]
        if any(not any(m) for m in leads):
            return True
        for i in range(f.ring.nvars):
            if not any(m[i] > 0 and all(e == 0 for k, e in enumerate(m) if k != i) for m in leads):
                return False
        return True

    def verify_derivation(self, v: Derivation, f: Polynomial) -> bool:
        """v(f) lies in (f) in the local ring."""
        f = self._local(f)
        image = v.apply(f)
        basis = self.std_service.std(GeneratorSet.ideal(AmbientRing(f.ring), [f]))
        return self.std_service.contains(basis, image)

    def check_germ(self, f: Polynomial, extension: Optional[str] = None) -> GermReport:
        """Full report: F-purity, tangent generators, verdict and isolatedness."""
        self._require_origin(f)
        smooth = self.is_smooth(f)
        try:
            f_pure = self.is_f_pure(f)
            generators = self.tangent_module(f)
        except LzError as e:
            logger.error(f"[check] {f}: {e}")
            raise
        if smooth:
            verdict = LzVerdict.SMOOTH
        elif len(generators) == 2:
            verdict = LzVerdict.VIOLATES_LZ
        else:
            verdict = LzVerdict.SATISFIES_LZ
        report = GermReport(
            f=f,
            p=f.field.p,
            extension=extension,
            f_pure=f_pure,
            tangent_generators=generators,
            singular_at_origin=not smooth,
            isolated=self.check_isolated(f),
            verdict=verdict,
        )
        logger.info(f"[check] {f}: f_pure={f_pure} min_gens={report.min_gen_count} verdict={verdict.value}")
        return report
