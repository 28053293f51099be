"""Fibre bundles with computable Gysin maps and kappa classes.

A :class:`BundleModel` holds the total-space ring, the pullback embedding
of the base, the vertical tangent data (Euler class, total Pontryagin
class, and in characteristic 2 the total Stiefel-Whitney class), and a
fibre-integration map ``gysin`` lowering degree by the fibre dimension.

Two constructions are provided.

* ``product_bundle(base, fibre)``: the trivial bundle.  Fibre integration
  reads off the coefficient of the fibre's fundamental monomial.
* ``projectivize(base, chern)``: the complex projectivization of a rank-k
  bundle with the given Chern classes.  The total ring appends a degree-2
  generator t with the defining relation
  t^k = -(c_1 t^{k-1} + ... + c_k), the vertical tangent Chern class is
  sum_i c_i (1+t)^{k-i}, and fibre integration extracts the t^{k-1}
  coefficient.

``kappa(bundle, c)`` pushes a characteristic-class monomial of the vertical
tangent bundle down to the base: kappa_c = gysin(c evaluated on the
vertical data).  The transfer identity gysin(e(T_v) * pullback(a) * q) is a
special case, and kappa of the Euler class alone is the fibre's Euler
characteristic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence

from .rings import GradedPoly, Monomial, Ring, tensor_ring, transport
from .spaces import SpaceModel, chern_to_pontryagin

__all__ = [
    "BundleModel",
    "kappa",
    "product_bundle",
    "projectivize",
]

_KAPPA_FACTOR_RE = re.compile(
    r"^\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*(\d+))?\s*$"
)


@dataclass(frozen=True)
class BundleModel:
    """A fibre bundle with enough structure to integrate along fibres."""

    base_ring: Ring
    total_ring: Ring
    fibre_dimension: int
    vertical_euler: GradedPoly
    vertical_total_p: GradedPoly
    gysin: Callable[[GradedPoly], GradedPoly]
    vertical_total_w: Optional[GradedPoly] = None

    def pullback(self, cls: GradedPoly) -> GradedPoly:
        """Image of a base class in the total ring."""
        return transport(cls, self.total_ring)


def product_bundle(base: SpaceModel, fibre: SpaceModel) -> BundleModel:
    """The trivial bundle base x fibre -> base."""
    total = tensor_ring(base.ring, fibre.ring)
    n_base = len(base.ring.names)
    fibre_fundamental = fibre.fundamental
    base_ring = base.ring

    def fibre_integrate(cls: GradedPoly) -> GradedPoly:
        if cls.ring is not total and cls.ring != total:
            raise ValueError("class does not live in the total ring")
        picked = {}
        for mon, coeff in cls.terms.items():
            if mon[n_base:] == fibre_fundamental:
                picked[mon[:n_base]] = coeff
        return base_ring.poly(picked)

    return BundleModel(
        base_ring=base.ring,
        total_ring=total,
        fibre_dimension=fibre.dimension,
        vertical_euler=transport(fibre.euler, total),
        vertical_total_p=transport(fibre.total_p, total),
        vertical_total_w=(
            transport(fibre.total_w, total) if fibre.total_w is not None else None
        ),
        gysin=fibre_integrate,
    )


def projectivize(
    base: Ring | SpaceModel,
    chern: Sequence[GradedPoly | str | int],
    twist: str = "t",
) -> BundleModel:
    """Projectivization of a rank-k complex bundle over the base.

    ``chern`` lists c_1..c_k in the base ring (strings are parsed there).
    The rank must be at least 2; the fibre is CP^{k-1} of dimension
    2(k-1).  Characteristic 0 only.
    """
    base_ring = base.ring if isinstance(base, SpaceModel) else base
    if base_ring.characteristic != 0:
        raise ValueError("projectivization is implemented over characteristic 0")
    k = len(chern)
    if k < 2:
        raise ValueError("projectivization needs rank at least 2")
    if twist in base_ring.names:
        raise ValueError(
            f"generator name {twist!r} already taken in the base ring; "
            "pass a different twist name"
        )
    classes = [base_ring.poly(c) for c in chern]
    for i, c in enumerate(classes, start=1):
        if not c.is_homogeneous(2 * i):
            raise ValueError(f"c_{i} must be homogeneous of degree {2 * i}")

    # same generators plus t, with base rules kept; build the defining
    # relation in the rule-free extension first
    gens = list(base_ring.generators) + [(twist, 2)]
    base_rules = [
        ((base_ring.names[idx], power), _pad_rule_terms(rhs, 1))
        for idx, (power, rhs) in base_ring.rules.items()
    ]
    staging = Ring(0, gens, base_rules)
    t = staging.gen(twist)
    relation = staging.zero()
    for i, c in enumerate(classes, start=1):
        relation = relation - transport(c, staging) * t ** (k - i)
    total = Ring(0, gens, base_rules + [((twist, k), dict(relation.terms))])
    t = total.gen(twist)

    vertical_chern = total.zero()
    one = total.one()
    for i in range(0, k + 1):
        c_i = one if i == 0 else transport(classes[i - 1], total)
        vertical_chern = vertical_chern + c_i * (one + t) ** (k - i)
    fibre_dim = 2 * (k - 1)

    def fibre_integrate(cls: GradedPoly) -> GradedPoly:
        if cls.ring is not total and cls.ring != total:
            raise ValueError("class does not live in the total ring")
        picked = {}
        for mon, coeff in cls.terms.items():
            if mon[-1] == k - 1:
                picked[mon[:-1]] = coeff
        return base_ring.poly(picked)

    return BundleModel(
        base_ring=base_ring,
        total_ring=total,
        fibre_dimension=fibre_dim,
        vertical_euler=vertical_chern.graded_component(fibre_dim),
        vertical_total_p=chern_to_pontryagin(vertical_chern),
        gysin=fibre_integrate,
    )


def _pad_rule_terms(rhs: Mapping[Monomial, object], extra: int) -> dict[Monomial, object]:
    """Extend rule exponent vectors by zero slots for appended generators."""
    pad = (0,) * extra
    return {mon + pad: coeff for mon, coeff in rhs.items()}


def _parse_kappa_monomial(text: str) -> dict[str, int]:
    exponents: dict[str, int] = {}
    for factor in text.split("*"):
        m = _KAPPA_FACTOR_RE.match(factor)
        if not m:
            raise ValueError(f"bad factor {factor!r} in class monomial {text!r}")
        name = m.group(1)
        power = int(m.group(2) or 1)
        exponents[name] = exponents.get(name, 0) + power
    return exponents


def kappa(bundle: BundleModel, cls: str | Mapping[str, int]) -> GradedPoly:
    """The kappa class of a vertical characteristic-class monomial.

    ``cls`` is a monomial in e and p_1, p_2, ... (characteristic 0) or in
    w_1..w_d (characteristic 2), e.g. ``"e^3"`` or ``"p1*p2^2"``.  The
    monomial is evaluated on the vertical tangent data and pushed down.
    """
    exponents = _parse_kappa_monomial(cls) if isinstance(cls, str) else dict(cls)
    characteristic = bundle.total_ring.characteristic
    value = bundle.total_ring.one()
    for name, power in exponents.items():
        if power < 0:
            raise ValueError(f"negative exponent on {name}")
        if power == 0:
            continue
        if characteristic == 0:
            if name == "e":
                factor = bundle.vertical_euler
            elif name.startswith("p") and name[1:].isdigit() and int(name[1:]) >= 1:
                factor = bundle.vertical_total_p.graded_component(4 * int(name[1:]))
            else:
                raise ValueError(
                    f"unknown class generator {name!r}; expected e or p1, p2, ..."
                )
        else:
            if not (name.startswith("w") and name[1:].isdigit() and int(name[1:]) >= 1):
                raise ValueError(
                    f"unknown class generator {name!r}; expected w1, w2, ..."
                )
            index = int(name[1:])
            if index > bundle.fibre_dimension:
                raise ValueError(
                    f"w{index} exceeds the fibre dimension {bundle.fibre_dimension}"
                )
            if bundle.vertical_total_w is None:
                raise ValueError("bundle carries no Stiefel-Whitney data")
            factor = bundle.vertical_total_w.graded_component(index)
        value = value * factor ** power
    return bundle.gysin(value)
