"""Weighted univariate identities: spectra, Peirce symbols, fusion tables.

An identity is a finite sum  P(z) = sum_i  coeff_i * w_i(z) * m_i  that an
algebra is assumed to satisfy identically, where each weight w_i(z) is 1,
a power of a weight homomorphism omega(z)^k, or a bilinear value b(z, z^m).
The symbolic machinery only ever uses the coefficient value at a normalized
idempotent (omega(c) = 1, b(c, c) = 1, b(c, c^2) = 1), which is exactly the
`coeff` carried on each term.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .magma import Monomial, format_monomial, parse_monomial, plenary_power, principal_power
from .peirce import peirce_poly, peirce_symbol
from .poly import (
    Poly1,
    Poly3,
    divide_exact,
    format_rational,
    parse_rational,
    rational_roots,
)

__all__ = [
    "WeightDescriptor",
    "IdentityTerm",
    "WeightedIdentity",
    "SpectrumReport",
    "FusionTable",
    "ZeroSumViolation",
    "EmptyIdentity",
    "DegenerateIdentity",
    "IrrationalSpectrum",
    "InternalHalfRootMissing",
    "CatalogParameterError",
    "constant_weight",
    "baric_weight",
    "bilinear_weight",
    "make_identity",
    "identity_peirce_poly",
    "spectrum",
    "identity_symbol",
    "fusion_table",
    "multiply_identities",
    "catalog",
    "catalog_names",
    "train_closed_forms",
    "identity_to_json",
    "identity_from_json",
]


class ZeroSumViolation(ValueError):
    """Coefficient values at an idempotent do not sum to zero."""


class EmptyIdentity(ValueError):
    """An identity needs at least one term."""


class DegenerateIdentity(ValueError):
    """The Peirce polynomial vanishes identically; no spectral data exists."""


class IrrationalSpectrum(ValueError):
    """The Peirce polynomial has a nonconstant rational-root-free factor."""


class InternalHalfRootMissing(AssertionError):
    """rho(P, 1/2) != 0 for a validated identity; indicates a bug."""


class CatalogParameterError(ValueError):
    """Family parameters violate the family's defining constraint."""


@dataclass(frozen=True, order=True)
class WeightDescriptor:
    """Normalized weight w(z) = omega(z)^baric_exp * prod b(z, z^m).

    Products of weights close under this normal form, which is what
    multiply_identities produces.
    """

    baric_exp: int = 0
    bilinear_args: tuple[Monomial, ...] = ()

    @property
    def kind(self) -> str:
        if self.baric_exp == 0 and not self.bilinear_args:
            return "constant"
        if not self.bilinear_args:
            return "baric"
        if self.baric_exp == 0 and len(self.bilinear_args) == 1:
            return "bilinear"
        return "product"

    def combine(self, other: "WeightDescriptor") -> "WeightDescriptor":
        return WeightDescriptor(
            self.baric_exp + other.baric_exp,
            tuple(sorted(self.bilinear_args + other.bilinear_args)),
        )

    def describe(self) -> str:
        factors = []
        if self.baric_exp == 1:
            factors.append("w(z)")
        elif self.baric_exp:
            factors.append(f"w(z)^{self.baric_exp}")
        factors.extend(f"b(z, {format_monomial(m)})" for m in self.bilinear_args)
        return "*".join(factors) if factors else "1"


def constant_weight() -> WeightDescriptor:
    return WeightDescriptor()


def baric_weight(k: int) -> WeightDescriptor:
    if k < 0:
        raise ValueError("baric exponent must be nonnegative")
    return WeightDescriptor(baric_exp=k)


def bilinear_weight(m: Monomial) -> WeightDescriptor:
    return WeightDescriptor(bilinear_args=(m,))


@dataclass(frozen=True)
class IdentityTerm:
    coeff: Fraction  # value of the polynomial-map coefficient at the idempotent
    monomial: Monomial
    weight: WeightDescriptor = field(default_factory=constant_weight)


@dataclass(frozen=True)
class WeightedIdentity:
    terms: tuple[IdentityTerm, ...]
    name: str | None = None

    def __str__(self) -> str:
        parts = []
        for t in self.terms:
            w = t.weight.describe()
            body = format_monomial(t.monomial) if w == "1" else f"{w}*{format_monomial(t.monomial)}"
            parts.append(f"{format_rational(t.coeff)}*{body}")
        return " + ".join(parts)


@dataclass(frozen=True)
class SpectrumReport:
    peirce_poly: Poly1
    roots: tuple[tuple[Fraction, int], ...]
    residual: Poly1
    degenerate: bool


@dataclass(frozen=True)
class FusionTable:
    spectrum: tuple[Fraction, ...]  # eigenvalues, always including 1
    entries: Mapping[tuple[Fraction, Fraction], frozenset[Fraction]]
    mode: str  # "generic" | "metrized_orthogonal"
    refinements_applied: tuple[str, ...] = ()

    def allowed(self, lam: Fraction, mu: Fraction) -> frozenset[Fraction]:
        key = (lam, mu) if lam <= mu else (mu, lam)
        return self.entries[key]


def make_identity(
    terms: Iterable[IdentityTerm | tuple],
    name: str | None = None,
    require_zero_sum: bool = True,
) -> WeightedIdentity:
    """Merge terms and validate the zero-sum constraint at the idempotent.

    `require_zero_sum=False` builds a formal sum that cannot hold on any
    algebra with a nonzero idempotent; it is only useful as an input to the
    product law and to negative tests.
    """
    merged: dict[tuple[Monomial, WeightDescriptor], Fraction] = {}
    for t in terms:
        if not isinstance(t, IdentityTerm):
            coeff, monomial = t[0], t[1]
            weight = t[2] if len(t) > 2 else constant_weight()
            t = IdentityTerm(Fraction(coeff), monomial, weight)
        key = (t.monomial, t.weight)
        merged[key] = merged.get(key, Fraction(0)) + Fraction(t.coeff)
    out = tuple(
        IdentityTerm(c, m, w)
        for (m, w), c in sorted(merged.items(), key=lambda kv: (kv[0][0], kv[0][1]))
        if c
    )
    if not out:
        raise EmptyIdentity("identity has no nonzero terms")
    total = sum(t.coeff for t in out)
    if require_zero_sum and total != 0:
        raise ZeroSumViolation(
            f"coefficients at an idempotent sum to {format_rational(total)}, not 0"
        )
    return WeightedIdentity(out, name)


def _zero_sum_holds(identity: WeightedIdentity) -> bool:
    return sum(t.coeff for t in identity.terms) == 0


def identity_peirce_poly(identity: WeightedIdentity) -> Poly1:
    """rho_c(P, t) = sum coeff * rho(monomial, t)."""
    out = Poly1.zero()
    for t in identity.terms:
        out = out + peirce_poly(t.monomial) * t.coeff
    return out


def identity_symbol(identity: WeightedIdentity) -> Poly3:
    """Y(a, b, p) = sum coeff * symbol(monomial)."""
    out = Poly3.zero()
    for t in identity.terms:
        out = out + peirce_symbol(t.monomial) * t.coeff
    return out


def spectrum(identity: WeightedIdentity) -> SpectrumReport:
    rho = identity_peirce_poly(identity)
    if rho.is_zero:
        return SpectrumReport(rho, (), Poly1.zero(), degenerate=True)
    if _zero_sum_holds(identity) and rho(Fraction(1, 2)) != 0:
        raise InternalHalfRootMissing(
            "rho(P, 1/2) != 0 for a validated identity; this is a bug"
        )
    roots, residual = rational_roots(rho)
    return SpectrumReport(rho, tuple(roots), residual, degenerate=False)


def fusion_table(identity: WeightedIdentity, mode: str = "generic") -> FusionTable:
    """Allowed-eigenvalue table for products of Peirce components.

    generic mode is a sound superset: structural vanishing of Y plus the
    always-allowed exceptions {1, lam, mu}, then the simple-root removal
    from the lam * (1/2) row.  metrized_orthogonal additionally assumes
    b-orthogonal Peirce components and vanishing first-order weight terms,
    which lets the exceptions be dropped except for lam = mu (diagonal) and
    the lam = 1 row.
    """
    if mode not in ("generic", "metrized_orthogonal"):
        raise ValueError(f"unknown fusion mode {mode!r}")
    report = spectrum(identity)
    if report.degenerate:
        raise DegenerateIdentity("degenerate identity has no fusion table")
    if report.residual.degree >= 1:
        raise IrrationalSpectrum(
            f"non-rational spectral factor remains: {report.residual.render()}"
        )
    mult = dict(report.roots)
    one = Fraction(1)
    half = Fraction(1, 2)
    eigenvalues = sorted(set(mult) | {one})
    symbol = identity_symbol(identity)

    entries: dict[tuple[Fraction, Fraction], frozenset[Fraction]] = {}
    for i, lam in enumerate(eigenvalues):
        for mu in eigenvalues[i:]:
            y_zeros = {nu for nu in eigenvalues if symbol(lam, mu, nu) == 0}
            if mode == "generic":
                allowed = y_zeros | ({one, lam, mu} & set(eigenvalues))
                for simple, other in ((lam, mu), (mu, lam)):
                    if other == half and mult.get(simple, 0) == 1:
                        allowed.discard(simple)
            else:
                if one in (lam, mu):
                    allowed = {mu if lam == one else lam}
                elif lam == mu:
                    allowed = {nu for nu in y_zeros if nu != one} | {one}
                else:
                    allowed = set(y_zeros)
            entries[(lam, mu)] = frozenset(allowed)

    refinements = ()
    if mode == "metrized_orthogonal":
        refinements = (
            "b-orthogonal Peirce components",
            "first-order weight terms vanish off A_c(1)",
        )
    return FusionTable(tuple(eigenvalues), entries, mode, refinements)


def multiply_identities(p1: WeightedIdentity, p2: WeightedIdentity) -> WeightedIdentity:
    """Free product: coefficients multiply, monomials multiply, weights combine."""
    from .magma import product as mono_product

    terms = [
        IdentityTerm(
            t1.coeff * t2.coeff,
            mono_product(t1.monomial, t2.monomial),
            t1.weight.combine(t2.weight),
        )
        for t1 in p1.terms
        for t2 in p2.terms
    ]
    name = None
    if p1.name and p2.name:
        name = f"({p1.name})*({p2.name})"
    return make_identity(terms, name=name, require_zero_sum=False)


# --- catalog -----------------------------------------------------------------


def _as_fractions(values: Sequence) -> list[Fraction]:
    return [Fraction(v) for v in values]


def _catalog_jordan_power_assoc() -> WeightedIdentity:
    return make_identity(
        [(1, principal_power(4)), (-1, plenary_power(3))],
        name="jordan_power_assoc",
    )


def _catalog_bernstein() -> WeightedIdentity:
    return make_identity(
        [(1, plenary_power(3)), (-1, principal_power(2), baric_weight(2))],
        name="bernstein",
    )


def _catalog_pseudo_composition() -> WeightedIdentity:
    return make_identity(
        [(1, principal_power(3)), (-1, principal_power(1), bilinear_weight(principal_power(1)))],
        name="pseudo_composition",
    )


def _catalog_walcher(a_c="1/2", b_c=None) -> WeightedIdentity:
    a_c = Fraction(a_c)
    b_c = 1 - a_c if b_c is None else Fraction(b_c)
    if a_c + b_c != 1:
        raise CatalogParameterError(
            f"walcher requires a(c) + b(c) = 1, got {format_rational(a_c + b_c)}"
        )
    return make_identity(
        [
            (1, principal_power(3)),
            (-a_c, principal_power(2), baric_weight(1)),
            (-b_c, principal_power(1), baric_weight(1)),
        ],
        name="walcher",
    )


def _catalog_hsiang() -> WeightedIdentity:
    z = principal_power(1)
    return make_identity(
        [
            (4, principal_power(4)),
            (1, plenary_power(3)),
            (-3, principal_power(2), bilinear_weight(z)),
            (-2, z, bilinear_weight(principal_power(2))),
        ],
        name="hsiang",
    )


def _validate_train_gammas(gamma: Sequence[Fraction], family: str) -> list[Fraction]:
    gamma = _as_fractions(gamma)
    if len(gamma) < 2:
        raise CatalogParameterError(f"{family} needs rank >= 2 (at least two gammas)")
    if gamma[0] != 1:
        raise CatalogParameterError(f"{family} requires the leading gamma = 1")
    if sum(gamma) != 0:
        raise CatalogParameterError(f"{family} requires the gammas to sum to zero")
    return gamma


def _catalog_principal_train(gamma) -> WeightedIdentity:
    gamma = _validate_train_gammas(gamma, "principal_train")
    n = len(gamma)
    terms = [
        (gamma[n - k], principal_power(k), baric_weight(n - k))
        for k in range(1, n + 1)
        if gamma[n - k]
    ]
    return make_identity(terms, name="principal_train")


def _catalog_plenary_train(gamma) -> WeightedIdentity:
    gamma = _validate_train_gammas(gamma, "plenary_train")
    n = len(gamma)
    terms = [
        (gamma[n - k], plenary_power(k), baric_weight(2 ** (n - 1) - 2 ** (k - 1)))
        for k in range(1, n + 1)
        if gamma[n - k]
    ]
    return make_identity(terms, name="plenary_train")


def _catalog_nourigat_varro(a1, a2, b1, b2, b3) -> WeightedIdentity:
    a1, a2, b1, b2, b3 = (Fraction(v) for v in (a1, a2, b1, b2, b3))
    if a1 + a2 - b1 - b2 - b3 != 0:
        raise CatalogParameterError(
            "nourigat_varro requires a1 + a2 = b1 + b2 + b3 (coefficient sum zero)"
        )
    return make_identity(
        [
            (a1, plenary_power(3)),
            (a2, principal_power(4)),
            (-b1, principal_power(3), baric_weight(1)),
            (-b2, principal_power(2), baric_weight(2)),
            (-b3, principal_power(1), baric_weight(3)),
        ],
        name="nourigat_varro",
    )


def _catalog_elduque_labra() -> WeightedIdentity:
    return make_identity(
        [
            (1, plenary_power(3)),
            (-2, principal_power(3), baric_weight(1)),
            (1, principal_power(2), baric_weight(2)),
        ],
        name="elduque_labra",
    )


_CATALOG = {
    "jordan_power_assoc": _catalog_jordan_power_assoc,
    "bernstein": _catalog_bernstein,
    "pseudo_composition": _catalog_pseudo_composition,
    "walcher": _catalog_walcher,
    "hsiang": _catalog_hsiang,
    "principal_train": _catalog_principal_train,
    "plenary_train": _catalog_plenary_train,
    "nourigat_varro": _catalog_nourigat_varro,
    "elduque_labra": _catalog_elduque_labra,
}


def catalog_names() -> list[str]:
    return sorted(_CATALOG)


def catalog(name: str, params: Mapping | None = None) -> WeightedIdentity:
    """Named identity families; `params` holds family-specific arguments."""
    if name not in _CATALOG:
        raise KeyError(f"unknown catalog identity {name!r}; known: {', '.join(catalog_names())}")
    return _CATALOG[name](**dict(params or {}))


# --- train closed forms -------------------------------------------------------


def train_closed_forms(family: str, gamma: Sequence) -> tuple[Poly1, Poly3]:
    """Closed-form (rho, Y) for principal/plenary train identities.

    Both must agree with the generic computation on the catalog identity.
    """
    gamma = _validate_train_gammas(gamma, family)
    n = len(gamma)
    if family == "principal_train":
        numerator = Poly1({k - 1: gamma[n - k] for k in range(1, n + 1)})
        train_poly = divide_exact(numerator, Poly1({1: 1, 0: -1}))
        rho = Poly1({1: 2, 0: -1}) * train_poly
        half = Fraction(1, 2)
        y = (
            _dd_var(rho, "a")
            + _dd_var(rho, "b")
            - _dd_const(rho, half)
        )
        return rho, y
    if family == "plenary_train":
        rho = Poly1({k - 1: gamma[n - k] * 2 ** (k - 1) for k in range(1, n + 1)})
        two_ab = Poly3.var("a") * Poly3.var("b") * 2
        numerator = Poly3.from_poly1(rho, "p") - rho.compose3(two_ab)
        y = numerator.div_linear("p", two_ab)
        return rho, y
    raise ValueError(f"unknown train family {family!r}")


def _dd_var(f: Poly1, name: str) -> Poly3:
    diff = Poly3.from_poly1(f, "p") - Poly3.from_poly1(f, name)
    return diff.div_linear("p", Poly3.var(name))


def _dd_const(f: Poly1, value: Fraction) -> Poly3:
    quotient = divide_exact(f - f(value), Poly1({1: 1, 0: -value}))
    return Poly3.from_poly1(quotient, "p")


# --- JSON wire format ----------------------------------------------------------


def _weight_to_json(w: WeightDescriptor) -> dict:
    kind = w.kind
    if kind == "constant":
        return {"kind": "constant"}
    if kind == "baric":
        return {"kind": "baric", "k": w.baric_exp}
    if kind == "bilinear":
        return {"kind": "bilinear", "monomial": format_monomial(w.bilinear_args[0])}
    return {
        "kind": "product",
        "k": w.baric_exp,
        "monomials": [format_monomial(m) for m in w.bilinear_args],
    }


def _weight_from_json(obj: Mapping) -> WeightDescriptor:
    kind = obj.get("kind", "constant")
    if kind == "constant":
        return constant_weight()
    if kind == "baric":
        return baric_weight(int(obj["k"]))
    if kind == "bilinear":
        return bilinear_weight(parse_monomial(obj["monomial"]))
    if kind == "product":
        return WeightDescriptor(
            int(obj.get("k", 0)),
            tuple(sorted(parse_monomial(s) for s in obj.get("monomials", []))),
        )
    raise ValueError(f"unknown weight kind {kind!r}")


def identity_to_json(identity: WeightedIdentity) -> dict:
    out: dict = {
        "terms": [
            {
                "coeff": format_rational(t.coeff),
                "monomial": format_monomial(t.monomial),
                "weight": _weight_to_json(t.weight),
            }
            for t in identity.terms
        ]
    }
    if identity.name:
        out["name"] = identity.name
    return out


def identity_from_json(obj: Mapping | str) -> WeightedIdentity:
    if isinstance(obj, str):
        obj = json.loads(obj)
    terms = [
        IdentityTerm(
            parse_rational(t["coeff"]),
            parse_monomial(t["monomial"]),
            _weight_from_json(t.get("weight", {"kind": "constant"})),
        )
        for t in obj["terms"]
    ]
    return make_identity(terms, name=obj.get("name"))
