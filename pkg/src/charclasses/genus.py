"""Multiplicative sequences and genus computation.

A multiplicative sequence is determined by a one-variable power series
Q(z) = 1 + q_1 z + q_2 z^2 + ... over the rationals.  Its weight-n
polynomial K_n in p_1..p_n is obtained by expanding the product of Q over
formal roots: writing the total class as prod_i Q(x_i) with p_j the j-th
elementary symmetric function of the x_i, the weight-n part is

    sum over partitions lam of n  of  (prod_j q_{lam_j}) m_lam,

and each monomial symmetric function m_lam is rewritten in the elementary
basis, renaming e_j to p_j.  Weights are internal: p_i has weight i, and a
class of weight n lives in cohomological degree 4n, so the weight ring
declares p_i with degree 4i and weight-n parts are degree-4n components.

Built in: the signature series sqrt(z)/tanh(sqrt(z)) whose genus is the
signature, and the series (sqrt(z)/2)/sinh(sqrt(z)/2) of the A-hat genus.
Both coefficient families come from Bernoulli numbers in the B_1 = -1/2
convention; only even-index values enter.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .rings import GradedPoly, Ring
from .symfun import monomial_to_elementary, partitions

__all__ = [
    "MultiplicativeSequence",
    "ahat_sequence",
    "bernoulli",
    "evaluate_genus",
    "l_leading_coefficient",
    "l_sequence",
    "solve_pontryagin",
    "weight_ring",
]

_BERNOULLI: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """The n-th Bernoulli number via sum_{k<=n} C(n+1,k) B_k = 0."""
    if n < 0:
        raise ValueError(f"no Bernoulli number of index {n}")
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        acc = sum(
            (comb(m + 1, k) * _BERNOULLI[k] for k in range(m)), Fraction(0)
        )
        _BERNOULLI.append(-acc / comb(m + 1, m))
    return _BERNOULLI[n]


def _l_q_coefficients(count: int) -> tuple[Fraction, ...]:
    """q_k of sqrt(z)/tanh(sqrt(z)): 2^{2k} B_{2k} / (2k)!."""
    return tuple(
        Fraction(2 ** (2 * k)) * bernoulli(2 * k) / factorial(2 * k)
        for k in range(1, count + 1)
    )


def _ahat_q_coefficients(count: int) -> tuple[Fraction, ...]:
    """q_k of (sqrt(z)/2)/sinh(sqrt(z)/2): (2 - 2^{2k}) B_{2k} / (4^k (2k)!)."""
    return tuple(
        Fraction(2 - 2 ** (2 * k)) * bernoulli(2 * k)
        / (Fraction(4) ** k * factorial(2 * k))
        for k in range(1, count + 1)
    )


def l_leading_coefficient(n: int) -> Fraction:
    """Coefficient of p_n in the signature polynomial, in closed form:
    2^{2n} (2^{2n-1} - 1) |B_{2n}| / (2n)!.
    """
    if n < 1:
        raise ValueError("leading coefficients start at weight 1")
    return (
        Fraction(2 ** (2 * n))
        * (2 ** (2 * n - 1) - 1)
        * abs(bernoulli(2 * n))
        / factorial(2 * n)
    )


_WEIGHT_RINGS: dict[int, Ring] = {}


def weight_ring(n: int) -> Ring:
    """Free ring on p_1..p_n, p_i of degree 4i, declared p_n first."""
    if n not in _WEIGHT_RINGS:
        _WEIGHT_RINGS[n] = Ring(
            0, [(f"p{i}", 4 * i) for i in range(n, 0, -1)]
        )
    return _WEIGHT_RINGS[n]


class MultiplicativeSequence:
    """A multiplicative sequence with cached weight polynomials.

    The cache is filled on first use of each weight and shared by every
    caller of this instance afterwards.
    """

    def __init__(self, q_coeffs: Sequence[Fraction | int]) -> None:
        self.q_coeffs: tuple[Fraction, ...] = tuple(
            Fraction(q) for q in q_coeffs
        )
        self._k_cache: dict[int, GradedPoly] = {}

    @property
    def max_weight(self) -> int:
        return len(self.q_coeffs)

    def _q(self, j: int) -> Fraction:
        return self.q_coeffs[j - 1]

    def k_polynomial(self, n: int) -> GradedPoly:
        """The weight-n polynomial K_n in p_1..p_n."""
        if n < 1:
            raise ValueError("weight polynomials start at n = 1")
        if n > len(self.q_coeffs):
            raise ValueError(
                f"series carries {len(self.q_coeffs)} coefficients, "
                f"cannot form weight {n}"
            )
        if n not in self._k_cache:
            ring = weight_ring(n)
            total = ring.zero()
            for lam in partitions(n):
                coeff = Fraction(1)
                for part in lam:
                    coeff *= self._q(part)
                if not coeff:
                    continue
                epoly = monomial_to_elementary(lam, n)
                # e_j and p_j occupy the same slot: both rings declare
                # their generators from index n down to 1
                total = total + ring.poly(dict(epoly.terms)) * coeff
            self._k_cache[n] = total
        return self._k_cache[n]

    def k_polynomials(self, max_weight: int) -> list[GradedPoly]:
        return [self.k_polynomial(n) for n in range(1, max_weight + 1)]

    def total_class(
        self, total_p: GradedPoly, ring: Ring, max_weight: int
    ) -> GradedPoly:
        """1 + K_1 + ... + K_max_weight evaluated at a total Pontryagin class.

        p_i is read off as the degree-4i component of total_p.
        """
        if ring.characteristic != 0:
            raise ValueError("genus computations need characteristic 0")
        if total_p.constant_term() != 1:
            raise ValueError("total Pontryagin class must have constant term 1")
        components = {
            f"p{i}": total_p.graded_component(4 * i)
            for i in range(1, max_weight + 1)
        }
        result = ring.one()
        for n in range(1, max_weight + 1):
            kpoly = self.k_polynomial(n)
            images = {name: components[name] for name in kpoly.ring.names}
            result = result + kpoly.substitute(images, ring)
        return result


def l_sequence(max_weight: int) -> MultiplicativeSequence:
    """The signature sequence, with coefficients through the given weight."""
    return MultiplicativeSequence(_l_q_coefficients(max_weight))


def ahat_sequence(max_weight: int) -> MultiplicativeSequence:
    """The A-hat sequence, with coefficients through the given weight."""
    return MultiplicativeSequence(_ahat_q_coefficients(max_weight))


def evaluate_genus(space, seq: MultiplicativeSequence) -> Fraction:
    """Pair the top weight polynomial of the sequence with the fundamental
    class: the genus of the space.  Zero when the dimension is not a
    multiple of four.
    """
    if space.ring.characteristic != 0:
        raise ValueError("genus evaluation needs characteristic 0")
    if space.dimension % 4 != 0:
        return Fraction(0)
    n = space.dimension // 4
    if n == 0:
        return Fraction(1)
    if n > seq.max_weight:
        raise ValueError(
            f"sequence carries {seq.max_weight} coefficients, "
            f"dimension {space.dimension} needs {n}"
        )
    components = {
        f"p{i}": space.total_p.graded_component(4 * i) for i in range(1, n + 1)
    }
    value = seq.k_polynomial(n).substitute(components, space.ring)
    return value.coefficient(space.fundamental)


def solve_pontryagin(
    seq: MultiplicativeSequence,
    total_l: GradedPoly,
    known: Sequence[GradedPoly],
    ring: Ring,
    n: int,
) -> GradedPoly:
    """Solve K_n(p_1..p_n) = weight-n part of total_l for p_n.

    ``known`` supplies p_1..p_{n-1} (homogeneous of degree 4i, zero allowed).
    K_n is linear in p_n with the scalar leading coefficient s_n, so

        p_n = (target - K_n with p_n := 0) / s_n.
    """
    if len(known) != n - 1:
        raise ValueError(f"need p_1..p_{n-1}, got {len(known)} classes")
    for i, cls in enumerate(known, start=1):
        if not cls.is_homogeneous(4 * i):
            raise ValueError(
                f"supplied p_{i} is not homogeneous of degree {4 * i}"
            )
    k_poly = seq.k_polynomial(n)
    leading = k_poly.coefficient(f"p{n}")
    if not leading:
        raise ValueError(f"weight polynomial K_{n} has no p_{n} term")
    mapping: dict[str, object] = {
        f"p{i}": cls for i, cls in enumerate(known, start=1)
    }
    mapping[f"p{n}"] = ring.zero()
    lower = k_poly.substitute(mapping, ring)
    target = total_l.graded_component(4 * n)
    return (target - lower) * (Fraction(1) / leading)
