"""Spin and half-spin branching of parameters and assembly of the
intersection-cohomology data of the minimal compactification: graded Betti
numbers, primitive-class decompositions, and Hodge diamonds.

Every factor (block, d) of a parameter acts on cohomology through the
two-parameter character in S (the circle action, recording q - p) and T (the
Lefschetz torus, recording the shift from middle degree).  The standard
representation attached to the factor contributes one weight line per
inverse pair: for each block weight w and each exponent e in {d-1, d-3, ...}
the pair (2w, e); odd orthogonal standard pieces carry extra lines (0, e)
with e > 0 and a single zero weight.  The factor's spin (odd standard
dimension) or half-spin (even) character is the signed product over lines,
half-spins being the even/odd minus-sign halves.  The plus half is the one
whose largest eigenvalue on the block's infinitesimal-character vector is
bigger; a separate user-facing sign then chooses which labeled half enters
the product, because the general sign rule is not pinned down here: exactly
the two assignments recoverable from the worked rank-6 and rank-7 examples
ship as bundled defaults, and everything else needs an explicit sign file or
emit-both mode.

Exponents are stored doubled throughout (so half-integral weights stay
exact); halving happens once when a character is read out, with an
integrality assertion.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .arthur import (ArthurParameter, BlockKind, BuildingBlock, Registry,
                     enumerate_parameters)
from .exact import LaurentPoly, nu_character
from .symplectic import HighestWeight


class AmbiguousHalfSpinError(ValueError):
    """The two half-spins cannot be labeled: a tau eigenvalue vanishes."""


class SignPolicyError(ValueError):
    """A half-spin sign is needed but not provided by the active policy."""


#: Sign assignments recoverable from the worked examples; everything else
#: requires an explicit sign file or emit-both mode.
BUNDLED_SIGNS: dict[str, tuple[str, ...]] = {
    "D11[2]+[9]": ("-",),
    "D11[4]+[7]": ("+",),
}


@dataclass(frozen=True)
class WeightLine:
    """One inverse pair of weights of a factor's standard representation,
    with doubled exponents: s = 2*(2w) for the circle factor, t = 2e for the
    Lefschetz torus.  Canonical positivity: s > 0, or s = 0 and t >= 0."""

    s: int
    t: int

    def __post_init__(self):
        if self.s % 2 or self.t % 2:
            raise ValueError("doubled line exponents must be even")
        if self.s < 0 or (self.s == 0 and self.t < 0):
            raise ValueError("line breaks canonical positivity")

    @property
    def undoubled(self) -> tuple[int, int]:
        return (self.s // 2, self.t // 2)

    @property
    def tau_doubled(self) -> int:
        """Doubled eigenvalue of the block's infinitesimal-character vector
        on this line: (s + t) / 2 = 2w + e."""
        return (self.s + self.t) // 2


def _check_kind_d(kind: BlockKind, d: int) -> None:
    if d < 1:
        raise ValueError("multiplier d must be positive")
    if kind is BlockKind.SYMPLECTIC and d % 2:
        raise ValueError("symplectic factors need even d")
    if kind is not BlockKind.SYMPLECTIC and d % 2 == 0:
        raise ValueError("orthogonal factors need odd d")


def standard_weight_lines(block: BuildingBlock, d: int
                          ) -> tuple[tuple[WeightLine, ...], bool]:
    """Weight lines of the factor's standard representation (the block's
    standard tensored with the d-dimensional torus string) and a flag for
    the zero weight (present exactly when the standard dimension is odd)."""
    _check_kind_d(block.kind, d)
    lines: list[WeightLine] = []
    nu_exps = range(d - 1, -d, -2)
    for dv in block.doubled_weights:
        lines.extend(WeightLine(2 * dv, 2 * e) for e in nu_exps)
    has_zero = False
    if block.kind is BlockKind.ODD_ORTHOGONAL:
        lines.extend(WeightLine(0, 2 * e) for e in nu_exps if e > 0)
        has_zero = True
    return tuple(lines), has_zero


@dataclass(frozen=True)
class TwoVarCharacter:
    """Character in (S, T) with internally doubled exponents; symmetric
    under inverting either variable; genus, local-system weight and shape
    metadata travel with assembled parameter characters."""

    doubled: LaurentPoly
    genus: int | None = None
    shape: str | None = None
    signs: tuple[str, ...] | None = None
    weight: int = 0

    def undoubled(self) -> LaurentPoly:
        """The honest character; asserts all doubled exponents are even."""
        return self.doubled.scale_exponents(1, 2)

    def dimension(self) -> int:
        value = self.doubled.evaluate_all_ones()
        if value.denominator != 1:
            raise AssertionError("character dimension is not integral")
        return int(value)

    def specialize_s1(self) -> LaurentPoly:
        """One-variable T-character (undoubled exponents)."""
        return self.undoubled().set_var_to_one(0)

    def is_s_trivial(self) -> bool:
        return all(exps[0] == 0 for exps in self.doubled.support())

    def is_symmetric(self) -> bool:
        return self.doubled.is_symmetric()


def _line_products(lines: Sequence[WeightLine]) -> tuple[LaurentPoly, LaurentPoly]:
    """(prod (m + 1/m), prod (m - 1/m)) over half-line monomials m; their
    half-sum/difference are the two minus-sign-parity halves, in doubled
    exponents."""
    plus = LaurentPoly.one(2)
    minus = LaurentPoly.one(2)
    for line in lines:
        sigma, e = line.undoubled
        up = LaurentPoly.term(2, (sigma, e))
        down = LaurentPoly.term(2, (-sigma, -e))
        plus = plus * (up + down)
        minus = minus * (up - down)
    return plus, minus


def halves_differ(block: BuildingBlock, d: int) -> bool:
    """Whether the two labeled half-spins of the factor are distinct
    two-variable characters (if not, the user-facing sign is irrelevant)."""
    if block.kind is BlockKind.ODD_ORTHOGONAL:
        return False
    _, q = _line_products(standard_weight_lines(block, d)[0])
    return not q.is_zero()


def spin_character(block: BuildingBlock, d: int, half: str) -> TwoVarCharacter:
    """Spin ('full', odd standard dimension) or labeled half-spin ('plus' /
    'minus', even standard dimension) character of one factor, with doubled
    exponents.  The plus label goes to the half whose largest eigenvalue on
    the block's infinitesimal-character vector is greater."""
    lines, has_zero = standard_weight_lines(block, d)
    if half == "full":
        if block.kind is not BlockKind.ODD_ORTHOGONAL:
            raise ValueError("full spin only applies to odd standard pieces")
        p, _ = _line_products(lines)
        return TwoVarCharacter(p)
    if half not in ("plus", "minus"):
        raise ValueError(f"half must be 'full', 'plus' or 'minus', not {half!r}")
    if block.kind is BlockKind.ODD_ORTHOGONAL:
        raise ValueError("half-spins only apply to even standard pieces")
    taus = [line.tau_doubled for line in lines]
    if any(ty == 0 for ty in taus):
        raise AmbiguousHalfSpinError(
            "a tau eigenvalue vanishes; the half-spins cannot be labeled")
    minus_count = sum(1 for ty in taus if ty < 0)
    p, q = _line_products(lines)
    even_half = (p + q) * Fraction(1, 2)
    odd_half = (p - q) * Fraction(1, 2)
    plus_half = even_half if minus_count % 2 == 0 else odd_half
    minus_half = odd_half if minus_count % 2 == 0 else even_half
    return TwoVarCharacter(plus_half if half == "plus" else minus_half)


def closed_form_oracle(block: BuildingBlock, d: int) -> tuple[LaurentPoly, ...]:
    """The closed-form one-variable Laurent products for the factor's spin
    data at S = 1 (undoubled exponents): a single polynomial for odd
    standard pieces, an unordered pair for even ones."""
    _check_kind_d(block.kind, d)
    m = len(block.doubled_weights)
    one = LaurentPoly.one(1)
    if block.kind is BlockKind.ODD_ORTHOGONAL:
        dp = (d - 1) // 2
        poly = LaurentPoly.term(1, (0,), 2 ** m)
        for j in range(1, dp + 1):
            poly = poly * (LaurentPoly.t_power(-j) + LaurentPoly.t_power(j)) ** (2 * m + 1)
        return (poly,)
    if block.kind is BlockKind.EVEN_ORTHOGONAL:
        dp = (d - 1) // 2
        poly = LaurentPoly.term(1, (0,), 2 ** (m - 1))
        for j in range(1, dp + 1):
            poly = poly * (LaurentPoly.t_power(-j) + LaurentPoly.t_power(j)) ** (2 * m)
        return (poly, poly)
    dp = d // 2
    prod_plus = one
    prod_minus = one
    for j in range(1, dp + 1):
        base = LaurentPoly.t_power(2 * j - 1) + LaurentPoly.t_power(1 - 2 * j)
        prod_plus = prod_plus * (base + 2) ** m
        prod_minus = prod_minus * (2 - base) ** m
    return ((prod_plus + prod_minus) * Fraction(1, 2),
            (prod_plus - prod_minus) * Fraction(1, 2))


def rho_psi(param: ArthurParameter, signs: Sequence[str | None] = ()
            ) -> TwoVarCharacter:
    """Product of the principal spin character with the chosen half-spin of
    every factor; total dimension 2^(g - r).  `signs` aligns with
    param.factors; an entry may be None when the factor's halves coincide."""
    signs = tuple(signs)
    if len(signs) < len(param.factors):
        signs = signs + (None,) * (len(param.factors) - len(signs))
    block0, d0 = param.principal
    result = spin_character(block0, d0, "full").doubled
    used: list[str] = []
    for (block, d), sign in zip(param.factors, signs):
        if sign is None:
            if halves_differ(block, d):
                raise SignPolicyError(
                    f"factor {block.label}[{d}] of {param.canonical_shape()} has "
                    "distinct half-spins; provide an explicit sign or use emit-both")
            sign = "+"
        if sign not in ("+", "-"):
            raise SignPolicyError(f"invalid sign {sign!r}")
        half = "plus" if sign == "+" else "minus"
        result = result * spin_character(block, d, half).doubled
        used.append(sign)
    weight = sum(param.tau_set) - param.genus * (param.genus + 1) // 2
    char = TwoVarCharacter(result, genus=param.genus,
                           shape=param.canonical_shape(), signs=tuple(used),
                           weight=weight)
    if char.dimension() != 2 ** (param.genus - param.r):
        raise AssertionError("assembled character has the wrong dimension")
    if not char.is_symmetric():
        raise AssertionError("assembled character is not self-dual")
    return char


def nu_decompose(char: LaurentPoly) -> list[int]:
    """Decompose a one-variable character into irreducible torus strings by
    greedy top-down peeling; returns the string dimensions d (descending,
    with repetition).  The result is re-expanded as a correctness check."""
    if char.nvars != 1:
        raise ValueError("nu_decompose expects a one-variable character")
    residual = char
    out: list[int] = []
    while not residual.is_zero():
        lo, hi = residual.exponent_range()
        top = residual.coeff(hi)
        if top.denominator != 1 or top < 0 or hi < 0:
            raise ValueError(f"not a genuine torus character (residual {residual})")
        d = hi + 1
        out.extend([d] * int(top))
        residual = residual - int(top) * nu_character(d)
        if any(c < 0 for _, c in residual.items()):
            raise ValueError(f"negative residual while peeling {d}-string")
    check = LaurentPoly.zero(1)
    for d in out:
        check = check + nu_character(d)
    if check != char:
        raise AssertionError("string decomposition failed to re-expand")
    return sorted(out, reverse=True)


def primitive_degrees(genus: int, nus: Sequence[int]) -> list[int]:
    """A d-string contributes one primitive class in degree
    g(g+1)/2 - d + 1."""
    n = genus * (genus + 1) // 2
    return sorted(n - d + 1 for d in nus)


def hodge_diamond(char: TwoVarCharacter) -> dict[tuple[int, int], int]:
    """Bigraded dimensions: a monomial S^a T^b contributes to (p, q) with
    q - p = a and p + q = b + g(g+1)/2 + w, where w is the coefficient
    weight (the Hodge structure on degree-k classes with nontrivial
    coefficients is pure of weight k + w, so the bidegrees shift by w).
    Parity or positivity failures mean the sign assignment was invalid."""
    if char.genus is None:
        raise ValueError("hodge_diamond needs genus metadata")
    n = char.genus * (char.genus + 1) // 2 + char.weight
    out: dict[tuple[int, int], int] = {}
    for (a, b), coeff in char.undoubled().items():
        if coeff.denominator != 1 or coeff < 0:
            raise ValueError("character has a non-integral coefficient")
        if (a + b + n) % 2 or abs(a) > b + n:
            raise ValueError(
                f"monomial S^{a} T^{b} violates Hodge parity/positivity "
                "(invalid sign assignment)")
        p = (b + n - a) // 2
        q = (b + n + a) // 2
        out[(p, q)] = out.get((p, q), 0) + int(coeff)
    return out


# -- assembly ----------------------------------------------------------------

@dataclass(frozen=True)
class ShapeVariant:
    signs: tuple[str, ...]
    betti: tuple[int, ...]          # per unit multiplicity, degrees 0 .. g(g+1)
    nu: tuple[int, ...]
    primitive: tuple[int, ...]
    s_trivial: bool
    hodge: dict[tuple[int, int], int] | None


@dataclass(frozen=True)
class ShapeReport:
    shape: str
    multiplicity: int
    variants: tuple[ShapeVariant, ...]


@dataclass(frozen=True)
class IHResult:
    genus: int
    lam: tuple[int, ...]
    betti: tuple[int, ...] | None   # None when emit-both variants disagree
    per_shape: tuple[ShapeReport, ...]
    warnings: tuple[str, ...]

    def euler_characteristic(self) -> int:
        if self.betti is None:
            raise ValueError("Betti numbers are ambiguous under emit-both")
        return sum((-1) ** k * b for k, b in enumerate(self.betti))


def _betti_from_char(char: TwoVarCharacter, genus: int) -> tuple[int, ...]:
    n = genus * (genus + 1) // 2
    t_char = char.specialize_s1()
    coeffs = t_char.coeff_list(-n, n)
    out = []
    for k in range(2 * n + 1):
        c = coeffs[k]
        if c.denominator != 1 or c < 0:
            raise AssertionError("non-integral graded dimension")
        out.append(int(c))
    return tuple(out)


def _variant(param: ArthurParameter, signs: Sequence[str | None],
             include_hodge: bool) -> ShapeVariant:
    char = rho_psi(param, signs)
    betti = _betti_from_char(char, param.genus)
    nus = tuple(nu_decompose(char.specialize_s1()))
    return ShapeVariant(
        signs=char.signs,
        betti=betti,
        nu=nus,
        primitive=tuple(primitive_degrees(param.genus, nus)),
        s_trivial=char.is_s_trivial(),
        hodge=hodge_diamond(char) if include_hodge else None,
    )


def ih_betti(hw: HighestWeight, registry: Registry | None = None,
             signs: str | Mapping[str, Sequence[str]] = "bundled",
             include_hodge: bool = False) -> IHResult:
    """Graded dimensions of the intersection cohomology of the minimal
    compactification with coefficients in V_lambda:

        b_k = sum over parameters of multiplicity * [T^(k - g(g+1)/2)]
              of the parameter character at S = 1.

    `signs` is 'bundled' (known assignments only), 'both' (emit every sign
    choice), or a mapping from canonical shape strings to sign vectors
    (explicit assignments win over bundled ones)."""
    warnings: list[str] = []
    if hw.weight % 2:
        warnings.append("odd weight: all cohomology of the local system vanishes")
    genus = hw.g
    n2 = genus * (genus + 1)
    reports: list[ShapeReport] = []
    total = [0] * (n2 + 1)
    ambiguous: list[str] = []
    for param, mult in enumerate_parameters(hw, registry):
        shape = param.canonical_shape()
        needs = [halves_differ(b, d) for b, d in param.factors]
        if signs == "both":
            choice_sets = [("+", "-") if need else (None,) for need in needs]
            variants = tuple(_variant(param, combo, include_hodge)
                             for combo in itertools.product(*choice_sets))
        else:
            assigned: Sequence[str | None] | None = None
            if isinstance(signs, Mapping) and shape in signs:
                assigned = tuple(signs[shape])
            elif shape in BUNDLED_SIGNS:
                assigned = BUNDLED_SIGNS[shape]
            if assigned is None:
                if any(needs):
                    raise SignPolicyError(
                        f"shape {shape} needs half-spin signs that are neither "
                        "bundled nor supplied; pass an explicit sign file or "
                        "use emit-both mode")
                assigned = (None,) * len(needs)
            variants = (_variant(param, assigned, include_hodge),)
        reports.append(ShapeReport(shape=shape, multiplicity=mult, variants=variants))
        bettis = {v.betti for v in variants}
        if len(bettis) > 1:
            ambiguous.append(shape)
        else:
            b = variants[0].betti
            for k in range(n2 + 1):
                total[k] += mult * b[k]
    if ambiguous:
        warnings.append(
            "Betti numbers differ between sign choices for: " + ", ".join(ambiguous))
        betti: tuple[int, ...] | None = None
    else:
        betti = tuple(total)
    return IHResult(genus=genus, lam=hw.lam, betti=betti,
                    per_shape=tuple(reports), warnings=tuple(warnings))
