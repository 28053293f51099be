"""Partitions and symmetric-function basis conversion.

Partitions are weakly decreasing tuples of positive integers.  Enumeration
is reverse-lexicographic, largest part first, so ``partitions(4)`` yields
(4), (3,1), (2,2), (2,1,1), (1,1,1,1); every routine here iterates in that
order, which keeps all downstream output deterministic.

The conversion from the monomial basis m_lambda to polynomials in the
elementary symmetric functions e_1, ..., e_w works at weight w in exactly w
variables (the stability range), by exact linear elimination against the
expansions of the products e_mu in the monomial basis.  The table for each
weight is computed once and memoized.

``symfun_eval`` evaluates m_lambda by direct summation over the distinct
permutations of the exponent vector; it is deliberately independent of the
basis-conversion path so the two can check each other.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterator, Mapping, Sequence

from .rings import GradedPoly, Ring

__all__ = [
    "elementary_ring",
    "elementary_values",
    "monomial_to_elementary",
    "partitions",
    "symfun_eval",
]

Partition = tuple[int, ...]


def partitions(n: int) -> list[Partition]:
    """All partitions of n, reverse-lexicographically (largest part first)."""
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    out: list[Partition] = []

    def extend(prefix: list[int], remaining: int, cap: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            extend(prefix, remaining - part, part)
            prefix.pop()

    extend([], n, n)
    return out


def _check_partition(lam: Sequence[int]) -> Partition:
    lam = tuple(lam)
    if any(not isinstance(p, int) or p < 1 for p in lam):
        raise ValueError(f"partition parts must be positive integers: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


def _groups(lam: Partition) -> list[tuple[int, int]]:
    """(part value, multiplicity) pairs, largest value first."""
    grouped: list[tuple[int, int]] = []
    for p in lam:
        if grouped and grouped[-1][0] == p:
            grouped[-1] = (p, grouped[-1][1] + 1)
        else:
            grouped.append((p, 1))
    return grouped


def _multiply_by_elementary(
    expr: dict[Partition, int], k: int, weight: int
) -> dict[Partition, int]:
    """Multiply an m-basis expression of the given weight by e_k.

    For each candidate result partition lam, the coefficient is the number
    of ways to subtract 1 from a k-subset of lam's parts and land on a
    partition present in expr.  Subsets are counted per group of equal
    parts, so repeated parts never blow up the enumeration.
    """
    result: dict[Partition, int] = {}
    for lam in partitions(weight + k):
        groups = _groups(lam)
        total = 0

        def descend(gi: int, left: int, reduced: list[int], ways: int) -> None:
            nonlocal total
            if gi == len(groups):
                if left == 0:
                    nu = tuple(
                        sorted((p for p in reduced if p > 0), reverse=True)
                    )
                    coeff = expr.get(nu)
                    if coeff:
                        total += ways * coeff
                return
            value, mult = groups[gi]
            for j in range(0, min(mult, left) + 1):
                descend(
                    gi + 1,
                    left - j,
                    reduced + [value] * (mult - j) + [value - 1] * j,
                    ways * comb(mult, j),
                )

        descend(0, k, [], 1)
        if total:
            result[lam] = total
    return result


def _elementary_in_monomial_basis(mu: Partition) -> dict[Partition, int]:
    """Expand the product e_mu = e_{mu_1} * ... in the monomial basis."""
    expr: dict[Partition, int] = {(): 1}
    weight = 0
    for part in mu:
        expr = _multiply_by_elementary(expr, part, weight)
        weight += part
    return expr


_ELEMENTARY_RINGS: dict[tuple[int, int], Ring] = {}
_M_TO_E_TABLES: dict[int, dict[Partition, dict[Partition, Fraction]]] = {}


def elementary_ring(weight: int, characteristic: int = 0) -> Ring:
    """Free ring on e_1..e_weight; e_j carries internal degree 2j.

    Generators are declared largest index first, which makes printed terms
    come out leading-generator first.
    """
    key = (weight, characteristic)
    if key not in _ELEMENTARY_RINGS:
        gens = [(f"e{j}", 2 * j) for j in range(weight, 0, -1)]
        _ELEMENTARY_RINGS[key] = Ring(characteristic, gens)
    return _ELEMENTARY_RINGS[key]


def _m_to_e_table(n: int) -> dict[Partition, dict[Partition, Fraction]]:
    """For each lam of weight n, the e_mu coefficients expressing m_lam."""
    if n in _M_TO_E_TABLES:
        return _M_TO_E_TABLES[n]
    parts = partitions(n)
    index = {lam: i for i, lam in enumerate(parts)}
    size = len(parts)
    # rows: e_mu in the m basis; solve B A = I for B, giving m in the e basis
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for i, mu in enumerate(parts):
        for lam, coeff in _elementary_in_monomial_basis(mu).items():
            matrix[i][index[lam]] = Fraction(coeff)
    inverse = _invert_matrix(matrix)
    table: dict[Partition, dict[Partition, Fraction]] = {}
    for j, lam in enumerate(parts):
        row = {
            parts[i]: inverse[j][i] for i in range(size) if inverse[j][i]
        }
        table[lam] = row
    _M_TO_E_TABLES[n] = table
    return table


def _invert_matrix(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting."""
    size = len(matrix)
    work = [row[:] + [Fraction(int(i == j)) for j in range(size)]
            for i, row in enumerate(matrix)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r][col]), None)
        if pivot is None:
            raise ValueError("elementary-basis expansion matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        scale = work[col][col]
        work[col] = [v / scale for v in work[col]]
        for r in range(size):
            if r != col and work[r][col]:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    # columns of the inverse times rows: B with B A = I means B = A^{-1};
    # Gauss-Jordan on [A | I] leaves [I | A^{-1}]
    return [row[size:] for row in work]


def monomial_to_elementary(lam: Sequence[int], nvars: int) -> GradedPoly:
    """Express m_lam as a polynomial in e_1..e_w, w = weight of lam.

    nvars must be at least the weight; inside the stability range the answer
    does not depend on it, so the computation always runs at w variables.
    """
    lam = _check_partition(lam)
    weight = sum(lam)
    if weight == 0:
        raise ValueError("the empty partition has no conversion")
    if nvars < weight:
        raise ValueError(
            f"nvars = {nvars} is below the stability range for weight {weight}"
        )
    ring = elementary_ring(weight)
    row = _m_to_e_table(weight)[lam]
    terms = {}
    for mu, coeff in row.items():
        exps = [0] * weight
        for part in mu:
            # generator e_j sits at index weight - j (declared descending)
            exps[weight - part] += 1
        terms[tuple(exps)] = coeff
    return ring.poly(terms)


# ----------------------------------------------------------------------
# direct evaluation


def _distinct_permutations(items: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if not items:
        yield ()
        return
    previous: int | None = None
    for i, value in enumerate(items):
        if value == previous:
            continue
        previous = value
        for rest in _distinct_permutations(items[:i] + items[i + 1 :]):
            yield (value,) + rest


def symfun_eval(
    expr: Mapping[Sequence[int], Fraction | int],
    point: Sequence[Fraction | int],
) -> Fraction:
    """Evaluate an m-basis expression at a rational point.

    Each m_lambda is summed directly over the distinct permutations of its
    padded exponent vector.  The point must have at least weight-many
    coordinates so results agree with the elementary-basis picture.
    """
    total = Fraction(0)
    for lam, coeff in expr.items():
        lam = _check_partition(lam)
        weight = sum(lam)
        if len(point) < weight:
            raise ValueError(
                f"point has {len(point)} coordinates, below weight {weight}"
            )
        padded = tuple(lam) + (0,) * (len(point) - len(lam))
        value = Fraction(0)
        for exponents in _distinct_permutations(tuple(sorted(padded, reverse=True))):
            product = Fraction(1)
            for x, e in zip(point, exponents):
                if e:
                    product *= Fraction(x) ** e
            value += product
        total += Fraction(coeff) * value
    return total


def elementary_values(
    point: Sequence[Fraction | int], max_index: int
) -> list[Fraction]:
    """[e_1(point), ..., e_max_index(point)] via the product of (1 + x_i t)."""
    coeffs = [Fraction(1)] + [Fraction(0)] * max_index
    for x in point:
        x = Fraction(x)
        for j in range(min(len(coeffs) - 1, max_index), 0, -1):
            coeffs[j] += x * coeffs[j - 1]
    return coeffs[1:]
