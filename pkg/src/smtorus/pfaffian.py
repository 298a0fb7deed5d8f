"""Exact Pfaffians of rational skew-symmetric matrices and the subset exchange identity.

Sub-Pfaffians P(I) are taken on principal submatrices indexed by a subset I,
with P(empty) = 1 and P(I) = 0 for odd |I|.  The sign convention is the
first-row expansion Pf = sum_j (-1)^j a_{1j} Pf(rest); it is the convention
under which the alternating exchange sums built here vanish identically, and
it is pinned by golden tests on the rank-4 straightening identity.

The dictionary between Grassmannian index vectors and subsets (the "dual
pair") makes each transversal index vector i with evenly many entries above n
a coordinate function q_i = P(B) on the space of skew matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from random import Random

from .linalg import frac_det
from .weyl import IndexVector

__all__ = [
    "PfaffianError",
    "NotFullFlagIndexError",
    "AsymmetricDualPairError",
    "EvenCardinalityError",
    "SkewPoint",
    "skew_point",
    "random_skew_point",
    "skew_point_to_json",
    "skew_point_from_json",
    "skew_determinant",
    "pfaffian",
    "sub_pfaffian",
    "matching_sum_pfaffian",
    "dual_pair",
    "index_from_bset",
    "q_eval",
    "PfaffianRelation",
    "exchange_relation",
    "evaluate_relation",
]

Subset = tuple[int, ...]


class PfaffianError(ValueError):
    pass


class NotFullFlagIndexError(PfaffianError):
    pass


class AsymmetricDualPairError(PfaffianError):
    pass


class EvenCardinalityError(PfaffianError):
    pass


@dataclass
class SkewPoint:
    """A rational skew-symmetric matrix given by its strictly upper entries."""

    n: int
    upper: dict[tuple[int, int], Fraction]
    _cache: dict[Subset, Fraction] = field(default_factory=dict, repr=False)

    def entry(self, i: int, j: int) -> Fraction:
        if i == j:
            return Fraction(0)
        if i < j:
            return self.upper.get((i, j), Fraction(0))
        return -self.upper.get((j, i), Fraction(0))


def skew_point(n: int, upper) -> SkewPoint:
    clean = {}
    for (i, j), v in dict(upper).items():
        if not (1 <= i < j <= n):
            raise PfaffianError(f"bad upper index ({i}, {j}) for size {n}")
        clean[(i, j)] = Fraction(v)
    return SkewPoint(n, clean)


def random_skew_point(n: int, rng: Random, low: int = 1, high: int = 10**6) -> SkewPoint:
    return skew_point(
        n, {(i, j): rng.randint(low, high) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    )


def skew_point_to_json(point: SkewPoint) -> dict:
    return {
        "n": point.n,
        "upper": [[i, j, str(v)] for (i, j), v in sorted(point.upper.items())],
    }


def skew_point_from_json(obj) -> SkewPoint:
    return skew_point(int(obj["n"]), {(int(i), int(j)): Fraction(v) for i, j, v in obj["upper"]})


def skew_determinant(point: SkewPoint, members=None) -> Fraction:
    members = tuple(sorted(members)) if members is not None else tuple(range(1, point.n + 1))
    return frac_det([[point.entry(i, j) for j in members] for i in members])


def sub_pfaffian(point: SkewPoint, members) -> Fraction:
    """Pfaffian of the principal submatrix on `members`; 1 on empty, 0 on odd.

    >>> p = skew_point(4, {(1, 2): 3, (3, 4): 5})
    >>> sub_pfaffian(p, (1, 2))
    Fraction(3, 1)
    >>> sub_pfaffian(p, ())
    Fraction(1, 1)
    """
    s = tuple(sorted(members))
    if any(not 1 <= v <= point.n for v in s) or len(set(s)) != len(s):
        raise PfaffianError(f"subset {s} not within 1..{point.n}")
    return _pf(point, s)


def _pf(point: SkewPoint, s: Subset) -> Fraction:
    if len(s) % 2 == 1:
        return Fraction(0)
    if not s:
        return Fraction(1)
    cached = point._cache.get(s)
    if cached is not None:
        return cached
    first, rest = s[0], s[1:]
    total = Fraction(0)
    for t, j in enumerate(rest, start=2):
        a = point.entry(first, j)
        if a:
            sub = tuple(v for v in rest if v != j)
            term = a * _pf(point, sub)
            total += term if t % 2 == 0 else -term
    point._cache[s] = total
    return total


def pfaffian(point: SkewPoint) -> Fraction:
    """Pfaffian of the full matrix (0 when the size is odd).

    >>> pfaffian(skew_point(2, {(1, 2): 7}))
    Fraction(7, 1)
    """
    return _pf(point, tuple(range(1, point.n + 1)))


def matching_sum_pfaffian(point: SkewPoint, members=None) -> Fraction:
    """Independent oracle: sum over perfect matchings with crossing-parity signs."""
    s = tuple(sorted(members)) if members is not None else tuple(range(1, point.n + 1))
    if len(s) % 2 == 1:
        return Fraction(0)

    def go(rem, pairs):
        if not rem:
            crossings = 0
            for a in range(len(pairs)):
                for b in range(a + 1, len(pairs)):
                    (i1, j1), (i2, j2) = pairs[a], pairs[b]
                    if i1 < i2 < j1 < j2 or i2 < i1 < j2 < j1:
                        crossings += 1
            val = Fraction(1) if crossings % 2 == 0 else Fraction(-1)
            for i, j in pairs:
                val *= point.entry(i, j)
            return val
        first = rem[0]
        total = Fraction(0)
        for idx in range(1, len(rem)):
            total += go(rem[1:idx] + rem[idx + 1 :], pairs + [(first, rem[idx])])
        return total

    return go(s, [])


def dual_pair(iv: IndexVector, n: int) -> tuple[Subset, Subset]:
    """Subsets (A, B) translating a full-flag index to the opposite cell.

    >>> dual_pair((1, 4, 6, 7), 4)
    ((2, 3), (2, 3))
    >>> dual_pair((2, 3, 5, 8), 4)
    ((1, 4), (1, 4))
    """
    iv = tuple(iv)
    if len(iv) != n or any(a >= b for a, b in zip(iv, iv[1:])) or not all(
        1 <= v <= 2 * n for v in iv
    ):
        raise NotFullFlagIndexError(f"{iv} is not a strictly increasing n-tuple in 1..{2 * n}")
    r = sum(1 for v in iv if v <= n)
    aset = tuple(2 * n + 1 - v for v in reversed(iv[r:]))
    bset = tuple(sorted(set(range(1, n + 1)) - set(iv[:r])))
    return aset, bset


def index_from_bset(bset, n: int) -> IndexVector:
    """The unique symmetric-dual-pair index whose B-subset is `bset`.

    >>> index_from_bset((2, 3), 4)
    (1, 4, 6, 7)
    >>> index_from_bset((), 4)
    (1, 2, 3, 4)
    """
    bset = tuple(sorted(bset))
    comp = tuple(v for v in range(1, n + 1) if v not in set(bset))
    return comp + tuple(2 * n + 1 - v for v in reversed(bset))


def q_eval(iv: IndexVector, point: SkewPoint) -> Fraction:
    """Value of the Pfaffian coordinate q_iv at a skew point."""
    aset, bset = dual_pair(iv, point.n)
    if aset != bset:
        raise AsymmetricDualPairError(f"{iv} has dual pair A={aset}, B={bset}")
    return sub_pfaffian(point, bset)


@dataclass(frozen=True)
class PfaffianRelation:
    """An alternating sum of sub-Pfaffian products that vanishes identically."""

    terms: tuple[tuple[int, Subset, Subset], ...]


def exchange_relation(i_set, j_set) -> PfaffianRelation:
    """The alternating exchange sum over the symmetric difference of two odd subsets.

    Term tau carries sign (-1)^tau and the pair of subsets obtained by toggling
    the tau-th element of the symmetric difference in each input.
    """
    i_set, j_set = tuple(sorted(i_set)), tuple(sorted(j_set))
    if len(i_set) % 2 == 0 or len(j_set) % 2 == 0:
        raise EvenCardinalityError("both subsets must have odd cardinality")
    diff = sorted(set(i_set) ^ set(j_set))
    terms = []
    for tau, x in enumerate(diff, start=1):
        left = tuple(sorted(set(i_set) ^ {x}))
        right = tuple(sorted(set(j_set) ^ {x}))
        terms.append((-1 if tau % 2 else 1, left, right))
    return PfaffianRelation(tuple(terms))


def evaluate_relation(rel: PfaffianRelation, point: SkewPoint) -> Fraction:
    total = Fraction(0)
    for sign, left, right in rel.terms:
        total += sign * sub_pfaffian(point, left) * sub_pfaffian(point, right)
    return total


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
