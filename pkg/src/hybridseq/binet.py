"""Closed-form (Binet) evaluation of the hybrid sequences.

With α, β the roots of t² − p·t − q = 0 (as elements of Q[s]/(s²−D),
D = p²+4q) and the companion hybrids α̲ = 1 + α·i + α²·ε + α³·h and β̲
likewise, the generalized hybrid sequence has the closed form

    HJ_n = (A·α̲·α^n − B·β̲·β^n) / (α − β),   A = b − a·β,  B = b − a·α.

Every component of the quotient is rational: the s-parts cancel and the
projection back to Fraction raises if they ever do not.  The context also
carries the constant hybrids and scalars that the product/square lemmas
and the identity right-hand sides are built from.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactarith import QuadExt, roots
from .hybrid import HybridNumber
from .sequences import HoradamParams, fib, fib_params, hybrid_seq, lucas_params


class LemmaMismatchError(ArithmeticError):
    """A closed-form lemma disagreed with the direct product (a bug)."""


@dataclass(frozen=True, slots=True)
class BinetContext:
    """Immutable bundle of the closed-form constants for one parameter set.

    ``cross_shift`` is the scalar q³+pq−q+1 and ``omega`` the hybrid
    (1−p)·i − q·ε + (p²+q+1)·h; the products α̲·β̲ and β̲·α̲ equal
    (HL₀ − cross_shift) ± q·(α−β)·(HF₀ − omega).  ``square_lucas_shift``
    and ``square_fib_shift`` play the same role for α̲² and β̲²:
    α̲², β̲² = (HL₀ + square_lucas_shift) ± (α−β)·(HF₀ + square_fib_shift).
    """

    params: HoradamParams
    disc: int
    alpha: QuadExt
    beta: QuadExt
    alpha_hybrid: HybridNumber
    beta_hybrid: HybridNumber
    alpha_weight: QuadExt
    beta_weight: QuadExt
    weight_product: Fraction
    cross_shift: int
    omega: HybridNumber
    square_lucas_shift: Fraction
    square_fib_shift: Fraction
    fib0: HybridNumber
    lucas0: HybridNumber


def make_context(params: HoradamParams) -> BinetContext:
    """Populate every closed-form constant for the given parameters."""
    p, q, a, b = params.p, params.q, params.a, params.b
    alpha, beta = roots(p, q)
    alpha_hybrid = HybridNumber(QuadExt(1, 0, alpha.d), alpha, alpha**2, alpha**3)
    beta_hybrid = HybridNumber(QuadExt(1, 0, beta.d), beta, beta**2, beta**3)
    alpha_weight = b - beta * a
    beta_weight = b - alpha * a
    weight_product = Fraction(b * b - p * a * b - q * a * a)
    f = [fib(p, q, n) for n in range(7)]
    fib_sum = f[6] + 2 * f[3] - f[2]
    return BinetContext(
        params=params,
        disc=params.discriminant,
        alpha=alpha,
        beta=beta,
        alpha_hybrid=alpha_hybrid,
        beta_hybrid=beta_hybrid,
        alpha_weight=alpha_weight,
        beta_weight=beta_weight,
        weight_product=weight_product,
        cross_shift=q**3 + p * q - q + 1,
        omega=HybridNumber(Fraction(0), Fraction(1 - p), Fraction(-q), Fraction(p * p + q + 1)),
        square_lucas_shift=-1 + Fraction(p, 2) * fib_sum + q * (f[5] + 2 * f[2] - f[1]),
        square_fib_shift=Fraction(1, 2) * fib_sum,
        fib0=hybrid_seq(params, "fib", 0),
        lucas0=hybrid_seq(params, "lucas", 0),
    )


def lift(z: HybridNumber, d: int) -> HybridNumber:
    """Embed a rational-component hybrid into the extension ring."""
    return HybridNumber(*(QuadExt(c, 0, d) for c in z.parts()))


def project(z: HybridNumber) -> HybridNumber:
    """Project QuadExt components back to rationals (s-parts must vanish)."""
    return HybridNumber(*(c.rational_part() for c in z.parts()))


def binet_horadam(ctx: BinetContext, n: int) -> HybridNumber:
    """Closed-form HJ_n; exactly equals the recurrence path for every n."""
    numerator = ctx.alpha_hybrid.scale(ctx.alpha_weight * ctx.alpha**n) - ctx.beta_hybrid.scale(
        ctx.beta_weight * ctx.beta**n
    )
    root_diff = ctx.alpha - ctx.beta
    return HybridNumber(*((c / root_diff).rational_part() for c in numerator.parts()))


def binet_fib(ctx: BinetContext, n: int) -> HybridNumber:
    """Closed-form HF_n = (α̲·α^n − β̲·β^n)/(α−β)."""
    numerator = ctx.alpha_hybrid.scale(ctx.alpha**n) - ctx.beta_hybrid.scale(ctx.beta**n)
    root_diff = ctx.alpha - ctx.beta
    return HybridNumber(*((c / root_diff).rational_part() for c in numerator.parts()))


def binet_lucas(ctx: BinetContext, n: int) -> HybridNumber:
    """Closed-form HL_n = α̲·α^n + β̲·β^n (no division needed)."""
    total = ctx.alpha_hybrid.scale(ctx.alpha**n) + ctx.beta_hybrid.scale(ctx.beta**n)
    return project(total)


def _checked(direct: HybridNumber, closed: HybridNumber, label: str) -> HybridNumber:
    if direct != closed:
        raise LemmaMismatchError(f"{label}: direct product {direct} != closed form {closed}")
    return direct


def _cross_closed(ctx: BinetContext, sign: int) -> HybridNumber:
    base = lift(ctx.lucas0 - HybridNumber.from_scalar(Fraction(ctx.cross_shift)), ctx.disc)
    swing = lift(ctx.fib0 - ctx.omega, ctx.disc)
    factor = QuadExt(0, sign * ctx.params.q, ctx.disc)  # ±q·(α−β)
    return base + swing.scale(factor)


def product_alphabar_betabar(ctx: BinetContext) -> HybridNumber:
    """α̲·β̲, checked against (HL₀ − cross_shift) + q(α−β)(HF₀ − omega)."""
    direct = ctx.alpha_hybrid * ctx.beta_hybrid
    return _checked(direct, _cross_closed(ctx, +1), "α̲·β̲")


def product_betabar_alphabar(ctx: BinetContext) -> HybridNumber:
    """β̲·α̲, checked against (HL₀ − cross_shift) − q(α−β)(HF₀ − omega)."""
    direct = ctx.beta_hybrid * ctx.alpha_hybrid
    return _checked(direct, _cross_closed(ctx, -1), "β̲·α̲")


def _square_closed(ctx: BinetContext, sign: int) -> HybridNumber:
    base = lift(ctx.lucas0 + HybridNumber.from_scalar(ctx.square_lucas_shift), ctx.disc)
    swing = lift(ctx.fib0 + HybridNumber.from_scalar(ctx.square_fib_shift), ctx.disc)
    return base + swing.scale(QuadExt(0, sign, ctx.disc))


def alphabar_squared(ctx: BinetContext) -> HybridNumber:
    """α̲², checked against (HL₀ + r) + (α−β)(HF₀ + s) with the context shifts."""
    direct = ctx.alpha_hybrid * ctx.alpha_hybrid
    return _checked(direct, _square_closed(ctx, +1), "α̲²")


def betabar_squared(ctx: BinetContext) -> HybridNumber:
    """β̲², checked against (HL₀ + r) − (α−β)(HF₀ + s) with the context shifts."""
    direct = ctx.beta_hybrid * ctx.beta_hybrid
    return _checked(direct, _square_closed(ctx, -1), "β̲²")


def make_fib_context(p: int, q: int) -> BinetContext:
    return make_context(fib_params(p, q))


def make_lucas_context(p: int, q: int) -> BinetContext:
    return make_context(lucas_params(p, q))
