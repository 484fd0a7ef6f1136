"""
Record types shared by the services and the command line: catalog entries,
dual graphs, derivations and germ reports.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

import sympy

from lzcheck.errors import OutOfRange
from lzcheck.models.polynomial import Polynomial, VectorPoly


class AdeType(str, Enum):
    A = 'A'
    D = 'D'
    E = 'E'


class LzVerdict(str, Enum):
    SMOOTH = 'Smooth'
    SATISFIES_LZ = 'SatisfiesLZ'
    VIOLATES_LZ = 'ViolatesLZ'


@dataclass(frozen=True)
class LiteratureFlags:
    """Published F-pure / almost equivariant / LZ-holds marks for one table row."""

    f_pure: bool
    almost_equivariant: bool
    lz_holds: bool
    source: str = 'published tables'

    def to_dict(self):
        return {
            'f_pure': self.f_pure,
            'almost_equivariant': self.almost_equivariant,
            'lz_holds': self.lz_holds,
        }


@dataclass(frozen=True)
class RdpDescriptor:
    """One instantiated catalog row.

    ``n`` is the total index (N for D_N, 6/7/8 for E); ``r`` is the Artin
    coindex, ``None`` for rows with a single classical form.
    """

    ade_type: AdeType
    n: int
    p: int
    r: Optional[int] = None
    equation_template: str = ''
    equation_text: str = ''
    literature: Optional[LiteratureFlags] = None

    @property
    def name(self) -> str:
        base = f'{self.ade_type.value}_{self.n}'
        return base if self.r is None else f'{base}^{self.r}'

    def to_dict(self):
        return {
            'type': self.ade_type.value,
            'n': self.n,
            'r': self.r,
            'p': self.p,
            'name': self.name,
            'equation': self.equation_text,
            'template': self.equation_template,
            'literature': self.literature.to_dict() if self.literature else None,
        }

    def __str__(self):
        return f'{self.name} (p = {self.p})'


@dataclass(frozen=True)
class DualGraph:
    """Exceptional configuration of the minimal resolution.

    ``kind`` is 'ade' for Dynkin diagrams or 'elliptic' for a single curve
    of self-intersection -``n``.
    """

    ade_type: Optional[AdeType]
    n: int
    kind: str = 'ade'

    def __post_init__(self):
        if self.kind == 'elliptic':
            if self.n < 1:
                raise OutOfRange("elliptic curve degree must be positive")
            return
        minimum = {AdeType.A: 1, AdeType.D: 4, AdeType.E: 6}[self.ade_type]
        if self.n < minimum or (self.ade_type is AdeType.E and self.n > 8):
            raise OutOfRange(f"no Dynkin diagram {self.ade_type.value}_{self.n}")

    def edges(self) -> List[tuple]:
        n = self.n
        if self.kind == 'elliptic':
            return []
        if self.ade_type is AdeType.A:
            return [(i, i + 1) for i in range(n - 1)]
        if self.ade_type is AdeType.D:
            return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        # E_n: chain of n - 1 curves with one more attached to the third
        return [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]

    def intersection_matrix(self) -> sympy.Matrix:
        if self.kind == 'elliptic':
            return sympy.Matrix([[-self.n]])
        m = sympy.zeros(self.n, self.n)
        for i in range(self.n):
            m[i, i] = -2
        for i, j in self.edges():
            m[i, j] = m[j, i] = 1
        return m

    @property
    def name(self) -> str:
        if self.kind == 'elliptic':
            return f'elliptic(-{self.n})'
        return f'{self.ade_type.value}_{self.n}'


@dataclass(frozen=True)
class Derivation:
    """a*d/dx + b*d/dy + c*d/dz with coefficients ``coeffs``."""

    coeffs: VectorPoly

    @property
    def variables(self):
        return self.coeffs.ring.variables

    def apply(self, g: Polynomial) -> Polynomial:
        total = g.ring.zero
        for name, c in zip(self.variables, self.coeffs):
            if not c.is_zero():
                total = total + c.in_ring(g.ring) * g.derivative(name)
        return total

    def to_list(self) -> List[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self):
        parts = []
        for name, c in zip(self.variables, self.coeffs):
            if c.is_zero():
                continue
            if c == 1:
                parts.append(f'd/d{name}')
            elif len(c) > 1:
                parts.append(f'({c})*d/d{name}')
            else:
                parts.append(f'{c}*d/d{name}')
        return ' + '.join(parts) if parts else '0'


@dataclass
class GermReport:
    """Verdicts for one germ {f = 0} at the origin."""

    f: Polynomial
    p: int
    extension: Optional[str]
    f_pure: bool
    tangent_generators: List[Derivation] = field(default_factory=list)
    singular_at_origin: bool = True
    isolated: bool = True
    verdict: LzVerdict = LzVerdict.SATISFIES_LZ

    @property
    def min_gen_count(self) -> int:
        return len(self.tangent_generators)

    @property
    def tangent_free(self) -> bool:
        return self.min_gen_count == 2

    def to_dict(self):
        return {
            'characteristic': self.p,
            'extension': self.extension,
            'f': str(self.f),
            'f_pure': self.f_pure,
            'isolated': self.isolated,
            'tangent': {
                'free': self.tangent_free,
                'min_generators': self.min_gen_count,
                'generators': [d.to_list() for d in self.tangent_generators],
            },
            'verdict': self.verdict.value,
        }


@dataclass(frozen=True)
class CheckRequest:
    """Input of the ``check`` command."""

    p: int
    f: str
    ext: Optional[str] = None
    output: str = 'text'
