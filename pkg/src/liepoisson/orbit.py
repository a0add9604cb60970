"""Coadjoint orbit descriptors: principal orbit ideals and quotient algebras.

An orbit is represented by a single polynomial relation (a Casimir level
set, or the central-character level set z = c for the Heisenberg algebra).
The quotient context provides the projection onto the orbit's polynomial
algebra via normal forms, and the descriptor tags the orbit type used by
the structure checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .liealg import LieAlgebra
from .poisson import PoissonContext
from .poly import (
    GradedLexOrder,
    Monomial,
    Polynomial,
    format_polynomial,
    monomial_divides,
    monomials_of_degree,
    monomials_up_to,
    normal_form,
)


class OrbitType(Enum):
    SEMISIMPLE = "semisimple"
    NILPOTENT = "nilpotent"
    OTHER = "other"


class OrbitIdeal:
    """Principal ideal generated by a single nonconstant relation.

    Caches the leading data of the relation so repeated reductions are
    cheap.  The bracket-closure invariant (the relation's bracket with
    every generator reduces to zero) is enforced when a quotient context
    is built from the ideal.
    """

    def __init__(self, relation: Polynomial, order: GradedLexOrder):
        if not relation:
            raise ValueError("orbit relation must be nonzero")
        if relation.degree() == 0:
            raise ValueError("orbit relation must be nonconstant")
        self.relation = relation
        self.order = order
        self.leading_monomial, self.leading_coefficient = relation.leading_term(order)

    @property
    def is_homogeneous(self) -> bool:
        return self.relation.is_homogeneous()

    def is_normal_monomial(self, m: Monomial) -> bool:
        return not monomial_divides(self.leading_monomial, m)

    def reduce(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self.relation, self.order)

    def __repr__(self) -> str:
        names = tuple(f"x{i}" for i in range(self.relation.nvars))
        return f"OrbitIdeal({format_polynomial(self.relation, names)!r})"


@dataclass
class OrbitDescriptor:
    algebra: LieAlgebra
    ideal: OrbitIdeal
    orbit_type: OrbitType
    context: PoissonContext

    @property
    def relation(self) -> Polynomial:
        return self.ideal.relation

    def format(self, p: Polynomial) -> str:
        return self.context.format(p)

    def parse(self, text: str) -> Polynomial:
        return self.context.parse(text)


def _classify(algebra: LieAlgebra, relation: Polynomial) -> OrbitType:
    # For the built-in semisimple algebras a Casimir level set through the
    # origin (zero constant term) is the nilpotent cone; any other level is
    # an orbit through a semisimple element.  Everything else is untagged.
    if algebra.name in ("sl2r", "so3"):
        return OrbitType.NILPOTENT if relation.constant_term() == 0 else OrbitType.SEMISIMPLE
    return OrbitType.OTHER


def make_orbit(
    algebra: LieAlgebra,
    relation: Polynomial,
    order: GradedLexOrder | None = None,
    orbit_type: OrbitType | None = None,
) -> OrbitDescriptor:
    """Build an orbit descriptor with its quotient Poisson context.

    Raises BracketClosureError when the relation is not bracket-closed
    (the level set is then not a union of symplectic leaves at this scale).
    ``orbit_type`` overrides the built-in classification rule.
    """
    if relation.nvars != algebra.dim:
        raise ValueError("relation does not match the algebra's variable count")
    ideal = OrbitIdeal(relation, order or algebra.default_order())
    context = PoissonContext.quotient(algebra, ideal)
    tag = orbit_type if orbit_type is not None else _classify(algebra, relation)
    return OrbitDescriptor(algebra, ideal, tag, context)


def builtin_casimir(algebra: LieAlgebra) -> Polynomial:
    """The canonical invariant whose level sets cut out the built-in orbits."""
    d = algebra.dim
    if algebra.name == "sl2r":
        x, y, z = (Polynomial.variable(d, i) for i in range(3))
        return x * x + y * y - z * z
    if algebra.name == "so3":
        x, y, z = (Polynomial.variable(d, i) for i in range(3))
        return x * x + y * y + z * z
    if algebra.name == "heisenberg":
        return Polynomial.variable(d, d - 1)
    raise ValueError(f"no built-in Casimir for algebra {algebra.name or '<user-defined>'}")


def casimir_orbit(
    algebra: LieAlgebra,
    level: Fraction | int,
    orbit_type: OrbitType | None = None,
) -> OrbitDescriptor:
    """Orbit cut out by (built-in Casimir) = level."""
    relation = builtin_casimir(algebra) - Polynomial.constant(algebra.dim, level)
    return make_orbit(algebra, relation, orbit_type=orbit_type)


def project(orbit: OrbitDescriptor, f: Polynomial) -> Polynomial:
    """Projection onto the orbit's polynomial algebra (normal form).

    Linear, idempotent, and an algebra map: the projection of a product
    equals the reduced product of the projections.
    """
    if f.nvars != orbit.algebra.dim:
        raise ValueError("polynomial does not match the orbit's variables")
    return orbit.ideal.reduce(f)


def quotient_dimension(orbit: OrbitDescriptor, n: int) -> int:
    """Number of normal-form monomials at degree ``n``.

    Counts monomials of degree exactly ``n`` when the relation is
    homogeneous (the quotient is then graded) and of degree at most ``n``
    otherwise.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    ideal = orbit.ideal
    if ideal.is_homogeneous:
        mons = monomials_of_degree(orbit.algebra.dim, n, ideal.order)
    else:
        mons = monomials_up_to(orbit.algebra.dim, n, ideal.order)
    return sum(1 for m in mons if ideal.is_normal_monomial(m))
