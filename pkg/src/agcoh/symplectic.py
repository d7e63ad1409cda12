"""Irreducible representations V_lambda of the rank-g symplectic group:
Weyl dimensions, weight multiplicities by the Freudenthal recursion, and
exact character values at torsion elements.

Characters at torsion elements are evaluated as weight sums

    tr(c | V_lambda) = sum_mu mult(mu) prod_k zeta_k^{mu_k}

with one eigenvalue zeta_k chosen from each inverse pair of the class (the
result is choice-independent by Weyl symmetry of the weight system).  Weight
sums are used instead of the Weyl character formula because torsion elements
are singular: the Weyl denominator vanishes there.  All cyclotomic
arithmetic happens in the power basis Z[x]/Phi_N, and the final value is
asserted to be a rational integer, which doubles as a Galois-stability
check.
"""
from __future__ import annotations

import functools
import itertools
import json
import math
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .exact import cyclotomic, euler_phi
from .torsion import TorsionClass

CACHE_ENV_VAR = "AGCOH_CACHE_DIR"
CACHE_FORMAT_VERSION = 1

# Guard for weight_multiplicities: refuse representations with more weights
# than this (the intended scale is |lambda| <= ~20, g <= 7).
DEFAULT_WEIGHT_BUDGET = 2_000_000


class WeightBudgetError(RuntimeError):
    """The requested weight system exceeds the configured resource bound."""


class NonIntegralCharacterError(ArithmeticError):
    """A torsion character came out non-rational: internal bug or bad class."""


@dataclass(frozen=True)
class HighestWeight:
    """Dominant weight lambda_1 >= ... >= lambda_g >= 0 for the rank-g
    symplectic group."""

    g: int
    lam: tuple[int, ...]

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lam)
        object.__setattr__(self, "lam", lam)
        if self.g < 1 or len(lam) != self.g:
            raise ValueError(f"need {self.g} weight entries, got {lam}")
        if any(a < b for a, b in zip(lam, lam[1:])) or lam[-1] < 0:
            raise ValueError(f"weight {lam} is not dominant")

    @property
    def weight(self) -> int:
        """w(lambda) = sum lambda_i; odd-weight local systems have trivial
        cohomology because -1 acts by (-1)^{w(lambda)}."""
        return sum(self.lam)

    @property
    def tau(self) -> tuple[int, ...]:
        """lambda + rho: the strictly decreasing integers w_i = lambda_i + g + 1 - i."""
        return tuple(l + self.g + 1 - i for i, l in enumerate(self.lam, start=1))

    def __str__(self):
        return f"g={self.g}, lambda=({','.join(map(str, self.lam))})"


def weyl_dimension(hw: HighestWeight) -> int:
    """dim V_lambda by the Weyl formula for type C."""
    tau = hw.tau
    rho = tuple(range(hw.g, 0, -1))
    num = den = 1
    for i in range(hw.g):
        num *= tau[i]
        den *= rho[i]
        for j in range(i + 1, hw.g):
            num *= tau[i] ** 2 - tau[j] ** 2
            den *= rho[i] ** 2 - rho[j] ** 2
    if num % den:
        raise AssertionError("Weyl dimension is not integral")
    return num // den


def _dominant_candidates(hw: HighestWeight) -> list[tuple[int, ...]]:
    """Dominant mu <= lambda: nonincreasing, nonnegative, prefix sums bounded
    by those of lambda, and sum(lambda - mu) even."""
    g, lam = hw.g, hw.lam
    prefix = list(itertools.accumulate(lam))
    total_parity = sum(lam) % 2
    out: list[tuple[int, ...]] = []

    def extend(i: int, prev: int, acc: list[int], acc_sum: int) -> None:
        if i == g:
            if acc_sum % 2 == total_parity:
                out.append(tuple(acc))
            return
        for v in range(min(prev, lam[0]), -1, -1):
            if acc_sum + v > prefix[i]:
                continue
            acc.append(v)
            extend(i + 1, v, acc, acc_sum + v)
            acc.pop()

    extend(0, lam[0] if lam else 0, [], 0)
    return out


def _positive_roots(g: int) -> list[tuple[int, ...]]:
    roots = []
    for i in range(g):
        for j in range(i + 1, g):
            for sign in (1, -1):
                r = [0] * g
                r[i], r[j] = 1, sign
                roots.append(tuple(r))
        r = [0] * g
        r[i] = 2
        roots.append(tuple(r))
    return roots


def _dominant_rep(vec: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted((abs(v) for v in vec), reverse=True))


def _orbit_size(mu: tuple[int, ...]) -> int:
    g = len(mu)
    perms = math.factorial(g)
    for _, grp in itertools.groupby(mu):
        perms //= math.factorial(len(list(grp)))
    return perms * 2 ** sum(1 for v in mu if v)


class WeightSystem:
    """Weight multiplicities of one V_lambda, stored on dominant orbits and
    expanded on demand.  Invariant under permutations and sign flips, total
    mass equal to the Weyl dimension."""

    def __init__(self, hw: HighestWeight, dominant: dict[tuple[int, ...], int]):
        self.hw = hw
        self.dominant = dict(dominant)
        self._full: dict[tuple[int, ...], int] | None = None

    @property
    def dimension(self) -> int:
        return sum(_orbit_size(mu) * m for mu, m in self.dominant.items())

    def full(self) -> dict[tuple[int, ...], int]:
        """Complete map weight vector -> multiplicity (the Weyl-orbit expansion)."""
        if self._full is None:
            full: dict[tuple[int, ...], int] = {}
            for mu, mult in self.dominant.items():
                for perm in set(itertools.permutations(mu)):
                    nonzero = [i for i, v in enumerate(perm) if v]
                    for signs in itertools.product((1, -1), repeat=len(nonzero)):
                        vec = list(perm)
                        for i, s in zip(nonzero, signs):
                            vec[i] *= s
                        full[tuple(vec)] = mult
            self._full = full
        return self._full

    def multiplicity(self, vec) -> int:
        return self.dominant.get(_dominant_rep(tuple(vec)), 0)


def _freudenthal(hw: HighestWeight) -> dict[tuple[int, ...], int]:
    g, lam = hw.g, hw.lam
    rho = tuple(range(g, 0, -1))
    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    norm_top = sum(v * v for v in lam_rho)
    roots = _positive_roots(g)
    cands = _dominant_candidates(hw)
    cands.sort(key=lambda mu: sum((a + b) ** 2 for a, b in zip(mu, rho)), reverse=True)
    mult: dict[tuple[int, ...], int] = {}
    for mu in cands:
        if mu == lam:
            mult[mu] = 1
            continue
        acc = 0
        for alpha in roots:
            plus = next(i for i, a in enumerate(alpha) if a > 0)
            k = 1
            while mu[plus] + k * alpha[plus] <= lam[0]:
                nu = tuple(a + k * b for a, b in zip(mu, alpha))
                m = mult.get(_dominant_rep(nu), 0)
                if m:
                    acc += 2 * m * sum(a * b for a, b in zip(nu, alpha))
                k += 1
        mu_rho = tuple(a + b for a, b in zip(mu, rho))
        denom = norm_top - sum(v * v for v in mu_rho)
        if denom <= 0 or acc % denom:
            raise AssertionError(f"Freudenthal recursion failed at {mu}")
        m = acc // denom
        if m:
            mult[mu] = m
    return mult


# -- disk cache --------------------------------------------------------------

_cache_dir_override: Path | None = None


def set_cache_dir(path: str | os.PathLike | None) -> None:
    """Configure the weight-multiplicity disk cache location (None disables).
    The environment variable AGCOH_CACHE_DIR is used when nothing is set."""
    global _cache_dir_override
    _cache_dir_override = Path(path) if path is not None else None
    _cached_weight_multiplicities.cache_clear()


def _cache_dir() -> Path | None:
    if _cache_dir_override is not None:
        return _cache_dir_override
    env = os.environ.get(CACHE_ENV_VAR)
    return Path(env) if env else None


def _cache_path(hw: HighestWeight) -> Path | None:
    base = _cache_dir()
    if base is None:
        return None
    name = f"wm_v{CACHE_FORMAT_VERSION}_g{hw.g}_" + "_".join(map(str, hw.lam)) + ".json"
    return base / name


def _cache_read(hw: HighestWeight) -> dict[tuple[int, ...], int] | None:
    path = _cache_path(hw)
    if path is None or not path.exists():
        return None
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    if payload.get("format_version") != CACHE_FORMAT_VERSION:
        return None
    if payload.get("genus") != hw.g or tuple(payload.get("lambda", ())) != hw.lam:
        return None
    return {tuple(mu): int(m) for mu, m in payload["dominant"]}


def _cache_write(hw: HighestWeight, dominant: dict[tuple[int, ...], int]) -> None:
    path = _cache_path(hw)
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        "format_version": CACHE_FORMAT_VERSION,
        "genus": hw.g,
        "lambda": list(hw.lam),
        "dominant": sorted([list(mu), m] for mu, m in dominant.items()),
    }
    # atomic replace keeps concurrent readers consistent
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass


@functools.lru_cache(maxsize=256)
def _cached_weight_multiplicities(hw: HighestWeight) -> WeightSystem:
    dominant = _cache_read(hw)
    if dominant is None:
        dominant = _freudenthal(hw)
        _cache_write(hw, dominant)
    ws = WeightSystem(hw, dominant)
    if ws.dimension != weyl_dimension(hw):
        raise AssertionError(
            f"weight system mass {ws.dimension} != Weyl dimension {weyl_dimension(hw)}")
    return ws


def weight_multiplicities(hw: HighestWeight,
                          weight_budget: int = DEFAULT_WEIGHT_BUDGET) -> WeightSystem:
    """Full weight system of V_lambda with multiplicities summing to the Weyl
    dimension.  Raises WeightBudgetError when dim V_lambda exceeds the budget."""
    dim = weyl_dimension(hw)
    if dim > weight_budget:
        raise WeightBudgetError(
            f"dim V_lambda = {dim} exceeds the weight budget {weight_budget}")
    return _cached_weight_multiplicities(hw)


# -- characters at torsion elements ------------------------------------------

def character_at_exponents(ws: WeightSystem, exponents: list[int], order: int) -> int:
    """Weight sum sum_mu mult(mu) x^{sum_k mu_k e_k} reduced in Z[x]/Phi_order,
    asserted to be a rational integer.

    `exponents` holds one integer e_k per chosen eigenvalue exp(2 pi i e_k / order),
    in any order (Weyl invariance makes the pairing with coordinates irrelevant).
    """
    g = ws.hw.g
    if len(exponents) != g:
        raise ValueError(f"need {g} eigenvalue exponents, got {len(exponents)}")
    counts = [0] * order
    for mu, mult in ws.full().items():
        e = sum(m * x for m, x in zip(mu, exponents)) % order
        counts[e] += mult
    phi = cyclotomic(order).coeffs
    deg = len(phi) - 1
    for i in range(order - 1, deg - 1, -1):
        c = counts[i]
        if c == 0:
            continue
        counts[i] = 0
        for j in range(deg):
            counts[i - deg + j] -= c * phi[j]
    if any(counts[1:deg]):
        raise NonIntegralCharacterError(
            f"character value not rational; residual coordinates {counts[:deg]}")
    return counts[0]


def character_at_torsion(hw: HighestWeight, cls: TorsionClass) -> int:
    """Exact trace of a torsion class on V_lambda."""
    if cls.degree != 2 * hw.g:
        raise ValueError(
            f"class degree {cls.degree} does not match group rank {2 * hw.g}")
    ws = weight_multiplicities(hw)
    order = cls.root_of_unity_order()
    exponents = [k * order // d for k, d in cls.chosen_eigenvalue_exponents()]
    return character_at_exponents(ws, exponents, order)
