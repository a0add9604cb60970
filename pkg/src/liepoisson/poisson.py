"""The Lie-Poisson bracket on polynomial algebras and its quotients.

On linear functions the bracket is the Lie bracket of the underlying
algebra; it extends to all polynomials by the Leibniz rule, which gives the
closed bidifferential formula

    {f, g} = sum_{i<j} (df/dxi_i dg/dxi_j - df/dxi_j dg/dxi_i) [xi_i, xi_j].

A context is either the free polynomial algebra or its quotient by a
principal orbit ideal; quotient contexts reduce every result to normal
form and refuse relations whose bracket with some generator does not
vanish modulo the ideal (those do not generate Poisson ideals).
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from .liealg import LieAlgebra
from .poly import GradedLexOrder, Monomial, Polynomial, format_polynomial, monomial_divides, monomials_of_degree

if TYPE_CHECKING:  # pragma: no cover
    from .orbit import OrbitIdeal


class BracketClosureError(ValueError):
    """The quotient relation is not closed under brackets with generators."""

    def __init__(self, generator: str, residual: str):
        super().__init__(
            f"relation is not bracket-closed: {{relation, {generator}}} reduces to {residual}, not 0"
        )
        self.generator = generator
        self.residual = residual


class PoissonContext:
    """Free or quotient Poisson algebra over a fixed Lie algebra.

    Immutable after construction; ``bracket`` and ``reduce`` are pure.
    """

    def __init__(self, algebra: LieAlgebra, ideal: "OrbitIdeal | None", order: GradedLexOrder):
        self.algebra = algebra
        self.ideal = ideal
        self.order = order
        self._pairs: list[tuple[int, int, Polynomial]] = [
            (i, j, algebra.bracket_poly(i, j))
            for i in range(algebra.dim)
            for j in range(i + 1, algebra.dim)
            if algebra.bracket_terms(i, j)
        ]
        self._monomial_cache: dict[int, tuple[Monomial, ...]] = {}

    @classmethod
    def free(cls, algebra: LieAlgebra, order: GradedLexOrder | None = None) -> "PoissonContext":
        return cls(algebra, None, order or algebra.default_order())

    @classmethod
    def quotient(cls, algebra: LieAlgebra, ideal: "OrbitIdeal") -> "PoissonContext":
        """Quotient context; fails loudly if the relation is not bracket-closed."""
        if ideal.relation.nvars != algebra.dim:
            raise ValueError("relation does not match the algebra's variable count")
        ctx = cls(algebra, ideal, ideal.order)
        for i in range(algebra.dim):
            defect = ctx.bracket(ideal.relation, algebra.variable(i))
            if defect:
                raise BracketClosureError(algebra.names[i], ctx.format(defect))
        return ctx

    @property
    def is_quotient(self) -> bool:
        return self.ideal is not None

    @property
    def nvars(self) -> int:
        return self.algebra.dim

    def variable(self, i: int) -> Polynomial:
        return self.algebra.variable(i)

    def parse(self, text: str) -> Polynomial:
        from .poly import parse_polynomial

        return parse_polynomial(text, self.algebra.names)

    def format(self, p: Polynomial) -> str:
        return format_polynomial(p, self.algebra.names, self.order)

    def reduce(self, p: Polynomial) -> Polynomial:
        """Normal form modulo the orbit ideal (identity in free mode)."""
        if self.ideal is None:
            return p
        return self.ideal.reduce(p)

    def bracket(self, f: Polynomial, g: Polynomial) -> Polynomial:
        """Lie-Poisson bracket, reduced to normal form in quotient mode."""
        if f.nvars != self.nvars or g.nvars != self.nvars:
            raise ValueError("polynomials do not match the context's variables")
        acc = Polynomial.zero(self.nvars)
        for i, j, linear in self._pairs:
            coeff = f.differentiate(i) * g.differentiate(j) - f.differentiate(j) * g.differentiate(i)
            if coeff:
                acc = acc + coeff * linear
        return self.reduce(acc)

    def basis_monomials(self, degree: int) -> tuple[Monomial, ...]:
        """Canonical monomials of the given degree, descending in the order.

        In quotient mode only normal-form monomials (those not divisible by
        the relation's leading monomial) are returned, so they enumerate a
        basis of the quotient's degree-``degree`` coefficient space.
        """
        cached = self._monomial_cache.get(degree)
        if cached is None:
            mons = monomials_of_degree(self.nvars, degree, self.order)
            if self.ideal is not None:
                lm = self.ideal.leading_monomial
                mons = [m for m in mons if not monomial_divides(lm, m)]
            cached = tuple(mons)
            self._monomial_cache[degree] = cached
        return cached

    def basis_monomials_up_to(self, degree: int) -> tuple[Monomial, ...]:
        out: list[Monomial] = []
        for d in range(degree + 1):
            out.extend(self.basis_monomials(d))
        return tuple(self.order.sort(out))


def jacobi_defect(ctx: PoissonContext, f: Polynomial, g: Polynomial, h: Polynomial) -> Polynomial:
    """{f,{g,h}} + {g,{h,f}} + {h,{f,g}}; exactly zero for a Poisson bracket."""
    return (
        ctx.bracket(f, ctx.bracket(g, h))
        + ctx.bracket(g, ctx.bracket(h, f))
        + ctx.bracket(h, ctx.bracket(f, g))
    )


def leibniz_defect(
    ctx: PoissonContext, f: Polynomial, g: Polynomial, h: Polynomial
) -> tuple[Polynomial, Polynomial]:
    """Defects of the product rule and of its symmetrized form.

    Returns ({fg,h} - f{g,h} - g{f,h}, {fg,h} - {f,gh} - {g,fh});
    both are exactly zero for a Poisson bracket.
    """
    fg = ctx.reduce(f * g)
    gh = ctx.reduce(g * h)
    fh = ctx.reduce(f * h)
    lead = ctx.bracket(fg, h)
    product_rule = lead - ctx.reduce(f * ctx.bracket(g, h)) - ctx.reduce(g * ctx.bracket(f, h))
    symmetrized = lead - ctx.bracket(f, gh) - ctx.bracket(g, fh)
    return product_rule, symmetrized
