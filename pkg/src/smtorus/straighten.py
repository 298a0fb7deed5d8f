"""Rewriting products of Pfaffian coordinates into the standard monomial basis.

A monomial is a multiset of coordinate rows; it is standard when the rows can
be sorted into a componentwise chain.  An incomparable pair is expanded over
standard pairs through the alternating sub-Pfaffian exchange sums in which it
appears with unit coefficient: the recursion prefers relations whose
nonstandard companions strictly descend in the (larger row, smaller row)
order, and the handful of pairs admitting no descending relation (exchanges
preserve the symmetric difference of the two B-subsets, so fully complementary
pairs cannot drop) are resolved by solving all exchange relations of their
content class at once.  The resulting pair expansions obey the two-sided
straightening bounds, so substituting them into longer monomials strictly
lowers the smallest row and the rewriting loop terminates.  Restriction to a
Schubert variety drops any term using a row not below the defining index and
may be interleaved with the rewriting.

An independent evaluation route expands products by exact interpolation: the
standard monomials sharing the content of the product are evaluated at random
rational skew matrices and the coordinates solved for exactly.  Large systems
are solved modulo 31-bit primes and the reconstructed expansion is then
re-verified by exact evaluation at fresh points.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

import numpy as np

from . import linalg
from .pfaffian import (
    dual_pair,
    index_from_bset,
    exchange_relation,
    q_eval,
    skew_point,
    sub_pfaffian,
)
from .tableau import Tableau, standard_chains
from .weyl import IndexVector, bruhat_leq, minimal_coset_reps_alpha_n

__all__ = [
    "StraightenError",
    "NotAPfaffianIndexError",
    "FuelExhaustedError",
    "SingularEvaluationMatrixError",
    "BasisMismatchError",
    "Expansion",
    "sort_rows",
    "is_standard_rows",
    "first_violation",
    "straighten_pair",
    "straighten_rows",
    "restrict_expansion",
    "content_of",
    "expand_product",
    "expand_by_interpolation",
    "evaluate_rows",
    "evaluate_expansion",
    "expansion_to_json",
    "expansion_from_json",
]

Rows = tuple[IndexVector, ...]
Expansion = dict[Rows, Fraction]


class StraightenError(ValueError):
    pass


class NotAPfaffianIndexError(StraightenError):
    pass


class FuelExhaustedError(StraightenError):
    pass


class SingularEvaluationMatrixError(StraightenError):
    pass


class BasisMismatchError(StraightenError):
    pass


def sort_rows(rows) -> Rows:
    return tuple(sorted(tuple(r) for r in rows))


def _comparable(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b)) or all(x >= y for x, y in zip(a, b))


def first_violation(rows: Rows):
    """Index i of the first adjacent incomparable pair in lex-sorted rows, or None."""
    for i in range(len(rows) - 1):
        if not _comparable(rows[i], rows[i + 1]):
            return i
    return None


def is_standard_rows(rows) -> bool:
    return first_violation(sort_rows(rows)) is None


def _bset(row, n):
    aset, bset = dual_pair(row, n)
    if aset != bset or len(bset) % 2:
        raise NotAPfaffianIndexError(f"{row} is not a nonzero Pfaffian coordinate index")
    return bset


def _candidate_rewrites(pair, n):
    """Exchange rewrites of an incomparable pair, best candidates first.

    Toggling an element x of the symmetric difference of the two B-subsets
    yields a relation containing the target product with coefficient +-1; the
    remaining terms rewrite it.  Standard companions are sinks; a candidate is
    preferred when each nonstandard companion is strictly smaller than the
    target in the (larger row, smaller row) order, which makes the recursion
    descend along a well-founded order instead of backtracking.
    """
    s1, s2 = _bset(pair[0], n), _bset(pair[1], n)
    target = tuple(sorted((s1, s2)))
    pair_key = (pair[1], pair[0])
    for x in sorted(set(s1) ^ set(s2)):
        merged = _merged_relation(s1, s2, x)
        c0 = merged.get(target, 0)
        if abs(c0) != 1:
            continue
        companions = []
        descending = True
        for key, c in merged.items():
            if key == target or c == 0:
                continue
            g = sort_rows((index_from_bset(key[0], n), index_from_bset(key[1], n)))
            if not _comparable(g[0], g[1]) and not (g[1], g[0]) < pair_key:
                descending = False
                break
            companions.append((Fraction(-c, c0), g))
        if descending:
            yield companions


def _merged_relation(s1, s2, x):
    """Exchange relation for toggling x, merged over unordered subset pairs."""
    rel = exchange_relation(
        tuple(sorted(set(s1) ^ {x})), tuple(sorted(set(s2) ^ {x}))
    )
    merged: dict[tuple, int] = {}
    for sign, left, right in rel.terms:
        key = tuple(sorted((left, right)))
        merged[key] = merged.get(key, 0) + sign
    return merged


def _content_class_pairs(content, n):
    """All unordered coordinate-row pairs realizing the given value counts."""
    pairs = set()
    for u in minimal_coset_reps_alpha_n(n):
        remaining = dict(content)
        ok = True
        for v in u:
            if remaining.get(v, 0) == 0:
                ok = False
                break
            remaining[v] -= 1
        if not ok:
            continue
        rest = tuple(sorted(v for v, c in remaining.items() if c == 1))
        if sum(remaining.values()) != len(rest) or len(rest) != n:
            continue
        try:
            _bset(rest, n)
        except (NotAPfaffianIndexError, ValueError):
            continue
        pairs.add(sort_rows((u, rest)))
    return sorted(pairs)


def _solve_content_class(pair, n) -> None:
    """Express every nonstandard pair of a content class over the standard ones.

    Used for the few exceptional pairs with no strictly descending rewrite:
    the exchange relations of the whole class are solved simultaneously by
    exact elimination, which stays within the class because exchanges preserve
    the content.
    """
    cls = _content_class_pairs(content_of(pair, n), n)
    unknowns = [p for p in cls if not _comparable(p[0], p[1])]
    standards = [p for p in cls if _comparable(p[0], p[1])]
    col = {p: i for i, p in enumerate(unknowns)}
    scol = {p: i for i, p in enumerate(standards)}
    equations = []
    for p in unknowns:
        s1, s2 = _bset(p[0], n), _bset(p[1], n)
        for x in sorted(set(s1) ^ set(s2)):
            lhs = [Fraction(0)] * len(unknowns)
            rhs = [Fraction(0)] * len(standards)
            for key, c in _merged_relation(s1, s2, x).items():
                if c == 0:
                    continue
                g = sort_rows((index_from_bset(key[0], n), index_from_bset(key[1], n)))
                if g in col:
                    lhs[col[g]] += c
                else:
                    rhs[scol[g]] += c
            equations.append((lhs, rhs))
    # eliminate the unknown-pair columns
    pivot_rows: dict[int, tuple] = {}
    for lhs, rhs in equations:
        lhs, rhs = lhs[:], rhs[:]
        for j, prow in pivot_rows.items():
            c = lhs[j]
            if c:
                lhs = [a - c * b for a, b in zip(lhs, prow[0])]
                rhs = [a - c * b for a, b in zip(rhs, prow[1])]
        for j, c in enumerate(lhs):
            if c:
                inv = Fraction(1) / c
                lhs = [a * inv for a in lhs]
                rhs = [a * inv for a in rhs]
                for jj, (plhs, prhs) in list(pivot_rows.items()):
                    cc = plhs[j]
                    if cc:
                        pivot_rows[jj] = (
                            [a - cc * b for a, b in zip(plhs, lhs)],
                            [a - cc * b for a, b in zip(prhs, rhs)],
                        )
                pivot_rows[j] = (lhs, rhs)
                break
        if len(pivot_rows) == len(unknowns):
            break
    if len(pivot_rows) < len(unknowns):
        raise StraightenError("exchange relations do not determine the content class")
    for j, (lhs, rhs) in pivot_rows.items():
        exp = {standards[i]: -c for i, c in enumerate(rhs) if c}
        _PAIR_MEMO[(n, unknowns[j])] = exp


_PAIR_MEMO: dict = {}


def _pair_expansion(pair, n):
    if _comparable(pair[0], pair[1]):
        return {pair: Fraction(1)}
    key = (n, pair)
    done = _PAIR_MEMO.get(key)
    if done is not None:
        return done
    for companions in _candidate_rewrites(pair, n):
        total: Expansion = {}
        for c, g in companions:
            for rows, v in _pair_expansion(g, n).items():
                total[rows] = total.get(rows, Fraction(0)) + c * v
        total = {rows: v for rows, v in total.items() if v}
        _PAIR_MEMO[key] = total
        return total
    _solve_content_class(pair, n)
    return _PAIR_MEMO[key]


def straighten_pair(b1, b2, n) -> Expansion:
    """Standard expansion of a quadratic product of Pfaffian coordinates.

    >>> e = straighten_pair((1, 4, 6, 7), (2, 3, 5, 8), 4)
    >>> e[((1, 2, 3, 4), (5, 6, 7, 8))], e[((1, 2, 5, 6), (3, 4, 7, 8))]
    (Fraction(1, 1), Fraction(-1, 1))
    """
    pair = sort_rows((b1, b2))
    for r in pair:
        _bset(r, n)
    return _pair_expansion(pair, n)


def restrict_expansion(exp: Expansion, w) -> Expansion:
    """Drop every term containing a row not below w."""
    w = tuple(w)
    return {
        rows: c for rows, c in exp.items() if all(bruhat_leq(r, w) for r in rows)
    }


def straighten_rows(rows, n, w=None, fuel=None) -> Expansion:
    """Standard-basis expansion of a product of coordinate rows.

    Each step substitutes the standard expansion of the first incomparable
    pair; the expansion's terms drop strictly below the pair's smaller row, so
    the monomial multiset decreases and the loop terminates.  With w given,
    terms are restricted to the Schubert variety as they appear, mirroring how
    the quadratic relations degenerate there.
    """
    rows = sort_rows(rows)
    for r in rows:
        _bset(r, n)
    if fuel is None:
        # a tripwire, not a semantic bound: unrestricted quadratic expansions
        # at rank 8 already take several hundred substitutions
        fuel = 100 * n * max(1, len(rows) // 2)
    work: Expansion = {rows: Fraction(1)}
    if w is not None:
        work = restrict_expansion(work, w)
    steps = 0
    while True:
        pick = None
        for key in sorted(work):
            i = first_violation(key)
            if i is not None:
                pick = (key, i)
                break
        if pick is None:
            return work
        steps += 1
        if steps > fuel:
            raise FuelExhaustedError(f"straightening exceeded {fuel} steps")
        key, i = pick
        coeff = work.pop(key)
        rest = key[:i] + key[i + 2 :]
        for pair, c in straighten_pair(key[i], key[i + 1], n).items():
            if w is not None and not all(bruhat_leq(r, w) for r in pair):
                continue
            new_key = sort_rows(rest + pair)
            new_val = work.get(new_key, Fraction(0)) + coeff * c
            if new_val:
                work[new_key] = new_val
            else:
                work.pop(new_key, None)


def content_of(rows, n) -> dict[int, int]:
    counts = {v: 0 for v in range(1, 2 * n + 1)}
    for r in rows:
        for v in r:
            counts[v] += 1
    return counts


def evaluate_rows(rows, point) -> Fraction:
    val = Fraction(1)
    for r in rows:
        val *= q_eval(r, point)
    return val


def evaluate_expansion(exp: Expansion, point) -> Fraction:
    return sum((c * evaluate_rows(rows, point) for rows, c in exp.items()), Fraction(0))


def _pf_int_mod(entries, members, p, cache):
    if len(members) % 2:
        return 0
    if not members:
        return 1
    val = cache.get(members)
    if val is not None:
        return val
    first, rest = members[0], members[1:]
    total = 0
    for t, j in enumerate(rest, start=2):
        a = entries.get((first, j), 0)
        if a:
            sub = tuple(v for v in rest if v != j)
            term = a * _pf_int_mod(entries, sub, p, cache) % p
            total = (total + term) if t % 2 == 0 else (total - term)
    total %= p
    cache[members] = total
    return total


_EXACT_LIMIT = 64


class _Interpolator:
    """Evaluation-basis context for one (rank, content) class, reused per seed."""

    def __init__(self, n, num_rows, content, seed):
        self.n = n
        self.content = content
        self.seed = seed
        self.qrows = minimal_coset_reps_alpha_n(n)
        self.row_index = {r: i for i, r in enumerate(self.qrows)}
        self.bsets = {r: _bset(r, n) for r in self.qrows}
        self.basis = standard_chains(n, num_rows, content, self.qrows)
        if not self.basis:
            raise BasisMismatchError("no standard monomials with the product's content")
        self.rng = Random(f"interp:{seed}:{n}:{num_rows}:{sorted(content.items())}")
        self.exact = len(self.basis) <= _EXACT_LIMIT
        for attempt in range(5):
            if self._build():
                return
        raise SingularEvaluationMatrixError(
            f"singular evaluation matrix after 5 resamples ({len(self.basis)} monomials)"
        )

    def _draw_points(self, count):
        pts = []
        for _ in range(count):
            upper = {
                (i, j): self.rng.randint(1, 10**6)
                for i in range(1, self.n + 1)
                for j in range(i + 1, self.n + 1)
            }
            pts.append(upper)
        return pts

    def _q_vector_exact(self, upper):
        pt = skew_point(self.n, upper)
        return {r: sub_pfaffian(pt, self.bsets[r]) for r in self.qrows}

    def _q_vector_mod(self, upper, p):
        entries = {k: v % p for k, v in upper.items()}
        cache: dict = {}
        return [_pf_int_mod(entries, self.bsets[r], p, cache) for r in self.qrows]

    def _build(self) -> bool:
        m = len(self.basis)
        self.points = self._draw_points(m)
        if self.exact:
            self.qvals = [self._q_vector_exact(upper) for upper in self.points]
            mat = [
                [self._chain_value(chain, q) for chain in self.basis]
                for q in self.qvals
            ]
            inv = _frac_inverse(mat)
            if inv is None:
                return False
            self.inverse = inv
            return True
        # reconstructed coefficients are small, so one prime normally suffices;
        # failed verification escalates to further primes over the same points
        self.primes = []
        self.mod_inverses = []
        self.mod_qmats = []
        self.chain_idx = np.array(
            [[self.row_index[r] for r in chain] for chain in self.basis], dtype=np.int64
        )
        return self._add_prime()

    def _add_prime(self) -> bool:
        used = len(self.primes)
        if used >= len(linalg.PRIMES31):
            return False
        p = linalg.PRIMES31[used]
        qmat = np.zeros((len(self.points), len(self.qrows)), dtype=np.int64)
        for s, upper in enumerate(self.points):
            qmat[s] = self._q_vector_mod(upper, p)
        inv = _mod_inverse_matrix(self._products_mod(qmat, self.chain_idx, p), p)
        if inv is None:
            return False
        self.primes.append(p)
        self.mod_inverses.append(inv)
        self.mod_qmats.append(qmat)
        return True

    @staticmethod
    def _products_mod(qmat, idx, p):
        """Column products of q-values mod p, one column per monomial."""
        vals = qmat[:, idx[:, 0]].copy()
        for col in range(1, idx.shape[1]):
            vals = (vals * qmat[:, idx[:, col]]) % p
        return vals

    @staticmethod
    def _chain_value(chain, qvals):
        val = Fraction(1)
        for r in chain:
            val *= qvals[r]
        return val

    def _solve(self, rows) -> Expansion:
        if self.exact:
            rhs = [self._chain_value(rows, q) for q in self.qvals]
            coeffs = [
                sum(self.inverse[i][s] * rhs[s] for s in range(len(rhs)))
                for i in range(len(self.basis))
            ]
        else:
            idx = np.array([[self.row_index[r] for r in rows]], dtype=np.int64)
            residues = []
            for p, inv, qmat in zip(self.primes, self.mod_inverses, self.mod_qmats):
                rhs = self._products_mod(qmat, idx, p)[:, 0]
                residues.append(linalg.matvec_mod(inv, rhs, p))
            coeffs = []
            for i in range(len(self.basis)):
                r, mod = int(residues[0][i]), self.primes[0]
                for k in range(1, len(self.primes)):
                    r, mod = linalg.crt(r, mod, int(residues[k][i]), self.primes[k])
                coeffs.append(Fraction(linalg.symmetric_mod(r, mod)))
        return {self.basis[i]: c for i, c in enumerate(coeffs) if c}

    def expand(self, rows) -> Expansion:
        rows = sort_rows(rows)
        while True:
            exp = self._solve(rows)
            if self._verify(rows, exp):
                return exp
            if self.exact or not self._add_prime():
                raise SingularEvaluationMatrixError(
                    "interpolated expansion failed exact re-evaluation"
                )

    def _verify(self, rows, exp: Expansion, trials: int = 3) -> bool:
        for _ in range(trials):
            upper = self._draw_points(1)[0]
            pt = skew_point(self.n, upper)
            if evaluate_rows(rows, pt) != evaluate_expansion(exp, pt):
                return False
        return True


def _frac_inverse(matrix):
    m = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == r)) for i in range(m)] for r, row in enumerate(matrix)]
    for col in range(m):
        piv = next((r for r in range(col, m) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(m):
            if r != col and a[r][col]:
                c = a[r][col]
                a[r] = [x - c * y for x, y in zip(a[r], a[col])]
    return [row[m:] for row in a]


def _mod_inverse_matrix(mat, p):
    m = mat.shape[0]
    a = np.concatenate([mat % p, np.eye(m, dtype=np.int64)], axis=1)
    for col in range(m):
        nz = np.nonzero(a[col:, col])[0]
        if len(nz) == 0:
            return None
        piv = col + int(nz[0])
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
        inv = pow(int(a[col, col]), p - 2, p)
        a[col] = (a[col] * inv) % p
        coeffs = a[:, col].copy()
        coeffs[col] = 0
        a = (a - np.outer(coeffs, a[col])) % p
    return a[:, m:]


_INTERP_CACHE: dict = {}


def _interpolator(n, num_rows, content, seed) -> _Interpolator:
    key = (n, num_rows, tuple(sorted(content.items())), seed)
    ctx = _INTERP_CACHE.get(key)
    if ctx is None:
        ctx = _Interpolator(n, num_rows, content, seed)
        _INTERP_CACHE[key] = ctx
    return ctx


def expand_by_interpolation(rows, n, seed=0, w=None) -> Expansion:
    """Full-space standard expansion by exact evaluation, optionally restricted."""
    rows = sort_rows(rows)
    exp = _interpolator(n, len(rows), content_of(rows, n), seed).expand(rows)
    if w is not None:
        exp = restrict_expansion(exp, w)
    return exp


def _factor_rows(factors):
    rows = []
    shape = None
    n = None
    for f in factors:
        if isinstance(f, Tableau):
            shape = shape or f.shape
            if f.shape != shape:
                raise BasisMismatchError("mixed tableau shapes in a product")
            n = f.n
            rows.extend(f.rows)
        else:
            rows.extend(tuple(r) for r in f)
    return sort_rows(rows), shape, n


def expand_product(factors, w=None, method="auto", seed=0) -> Expansion:
    """Coordinates of a product of standard tableaux over the standard basis.

    `factors` may be Tableau objects or bare row collections.  Single-column
    products multiply by merging.  For grids, `method` picks the evaluation
    route ("interpolate"), the exchange rewriting route ("symbolic"), or lets
    the rank decide ("auto"); quadratic interpolations are cross-checked
    against the symbolic route.
    """
    rows, shape, n = _factor_rows(factors)
    if not rows:
        return {(): Fraction(1)}
    if shape == "omega_1":
        return {rows: Fraction(1)}
    if n is None:
        raise BasisMismatchError("cannot infer rank; pass Tableau factors")
    if method == "auto":
        method = "interpolate" if n <= 5 else "symbolic"
    if method == "symbolic":
        return straighten_rows(rows, n, w=w)
    if method != "interpolate":
        raise StraightenError(f"unknown method {method!r}")
    exp = expand_by_interpolation(rows, n, seed=seed, w=w)
    if len(rows) == 4:
        sym = straighten_rows(rows, n, w=w)
        if sym != exp:
            raise BasisMismatchError("evaluation and rewriting routes disagree")
    return exp


def expansion_to_json(exp: Expansion) -> list:
    return [
        {"coeff": str(c), "rows": [list(r) for r in rows]}
        for rows, c in sorted(exp.items())
    ]


def expansion_from_json(obj) -> Expansion:
    return {
        tuple(tuple(int(v) for v in r) for r in item["rows"]): Fraction(item["coeff"])
        for item in obj
    }


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
