"""Standard Young tableaux carrying torus-invariant sections.

Two shapes appear.  The "omega_n" shape for degree k is a grid of 2k rows of
length n whose rows are Pfaffian coordinate indices (one of {t, 2n+1-t} per t,
evenly many entries above n) forming a componentwise non-decreasing chain.
The "omega_1" shape is a single column of 4k entries, non-decreasing, grouped
into equal adjacent pairs; in type D the two middle values n, n+1 are excluded.
A tableau is torus-invariant exactly when each value t occurs as often as its
mirror 2n+1-t.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .weyl import IndexVector, Weight, bruhat_leq, minimal_coset_reps_alpha_n

__all__ = [
    "TableauError",
    "MalformedShapeError",
    "EntryOutOfRangeError",
    "InvalidSchubertIndexError",
    "UnsupportedRankError",
    "Tableau",
    "grid_tableau",
    "column_tableau",
    "is_coordinate_row",
    "is_standard",
    "is_shape_standard",
    "weight_counts",
    "weight",
    "is_t_invariant",
    "standard_chains",
    "schubert_chain_count",
    "schubert_chains",
    "enumerate_basis_omega_n",
    "enumerate_basis_omega_1",
    "find_factor",
    "format_tableau",
    "parse_tableau",
    "tableau_to_json",
    "tableau_from_json",
]

Rows = tuple[IndexVector, ...]


class TableauError(ValueError):
    pass


class MalformedShapeError(TableauError):
    pass


class EntryOutOfRangeError(TableauError):
    pass


class InvalidSchubertIndexError(TableauError):
    pass


class UnsupportedRankError(TableauError):
    pass


@dataclass(frozen=True)
class Tableau:
    """A filled Young diagram; omega_1 columns are stored as rows of length 1."""

    n: int
    shape: str  # "omega_n" or "omega_1"
    rows: Rows = ()
    group_type: str = "D"

    @property
    def degree(self) -> int:
        if self.shape == "omega_n":
            return len(self.rows) // 2
        return len(self.rows) // 4

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)


def grid_tableau(n: int, rows) -> Tableau:
    return Tableau(n, "omega_n", tuple(tuple(r) for r in rows))


def column_tableau(n: int, entries, group_type: str = "D") -> Tableau:
    return Tableau(n, "omega_1", tuple((int(v),) for v in entries), group_type)


def is_coordinate_row(row, n: int) -> bool:
    """Whether a length-n row indexes a Pfaffian coordinate.

    >>> is_coordinate_row((1, 4, 6, 7), 4)
    True
    >>> is_coordinate_row((1, 2, 3, 5), 4)
    False
    """
    if len(row) != n:
        return False
    seen = set(row)
    if len(seen) != n:
        return False
    for t in range(1, n + 1):
        if (t in seen) == (2 * n + 1 - t in seen):
            return False
    return sum(1 for v in row if v > n) % 2 == 0


def _check_entries(t: Tableau) -> None:
    for v in t.entries:
        if not 1 <= v <= 2 * t.n:
            raise EntryOutOfRangeError(f"entry {v} outside 1..{2 * t.n}")


def is_standard(t: Tableau) -> bool:
    """Rows strictly increase left to right, columns never decrease top to bottom.

    >>> is_standard(grid_tableau(4, [(1, 2, 3, 4), (5, 6, 7, 8)]))
    True
    >>> is_standard(grid_tableau(4, [(1, 4, 6, 7), (2, 3, 5, 8)]))
    False
    """
    rows = t.rows
    if len({len(r) for r in rows}) > 1:
        raise MalformedShapeError("ragged tableau")
    for row in rows:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for top, bottom in zip(rows, rows[1:]):
        if any(a > b for a, b in zip(top, bottom)):
            return False
    return True


def is_shape_standard(t: Tableau) -> bool:
    """Standard plus the shape-specific row or pairing conditions."""
    _check_entries(t)
    if not is_standard(t):
        return False
    if t.shape == "omega_n":
        if len(t.rows) % 2 != 0:
            return False
        return all(is_coordinate_row(row, t.n) for row in t.rows)
    if t.shape == "omega_1":
        e = t.entries
        if len(e) % 4 != 0:
            return False
        if any(e[2 * i] != e[2 * i + 1] for i in range(len(e) // 2)):
            return False
        if t.group_type == "D" and any(v in (t.n, t.n + 1) for v in e):
            return False
        return True
    raise MalformedShapeError(f"unknown shape {t.shape!r}")


def weight_counts(t: Tableau) -> dict[int, int]:
    """Occurrence counts c(v) for every value 1..2n."""
    counts = {v: 0 for v in range(1, 2 * t.n + 1)}
    for v in t.entries:
        if v not in counts:
            raise EntryOutOfRangeError(f"entry {v} outside 1..{2 * t.n}")
        counts[v] += 1
    return counts


def weight(t: Tableau) -> Weight:
    """Torus weight: half the mirrored count differences, in e-coordinates.

    >>> weight(grid_tableau(4, [(1, 2, 3, 4)]))
    (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
    """
    c = weight_counts(t)
    n = t.n
    return tuple(Fraction(c[j] - c[2 * n + 1 - j], 2) for j in range(1, n + 1))


def is_t_invariant(t: Tableau) -> bool:
    """True iff each value occurs as often as its mirror.

    >>> is_t_invariant(grid_tableau(4, [(1, 2, 3, 4), (5, 6, 7, 8)]))
    True
    >>> is_t_invariant(grid_tableau(4, [(1, 2, 3, 4)]))
    False
    """
    c = weight_counts(t)
    n = t.n
    return all(c[j] == c[2 * n + 1 - j] for j in range(1, n + 1))


class _ChainDP:
    """Memoized feasibility counts for non-decreasing chains of coordinate rows.

    The state is (index of the last chosen row, remaining counts of the values
    1..n, rows still to choose); the counts of the mirrored values n+1..2n are
    determined because every row uses exactly one value of each mirror pair.
    """

    def __init__(self, n, rows):
        self.n = n
        self.rows = sorted(rows)
        m = len(self.rows)
        self.masks = [sum(1 << (v - 1) for v in r) for r in self.rows]
        self.succ = [
            [j for j in range(i, m) if bruhat_leq(self.rows[i], self.rows[j])] for i in range(m)
        ]
        self.all = list(range(m))
        # union of value masks reachable at or above each row
        self.reach = [0] * m
        for i in range(m):
            acc = 0
            for j in self.succ[i]:
                acc |= self.masks[j]
            self.reach[i] = acc
        self.reach_all = 0
        for mk in self.masks:
            self.reach_all |= mk
        self.lows = [tuple(v for v in r if v <= n) for r in self.rows]
        self.highs = [tuple(2 * n + 1 - v for v in r if v > n) for r in self.rows]
        self.memo: dict = {}

    def _masks_for(self, low, left):
        """(needed values, values forced into every remaining row) as bit masks."""
        n = self.n
        needed = 0
        forced = 0
        for t in range(1, n + 1):
            c = low[t - 1]
            if c:
                needed |= 1 << (t - 1)
                if c == left:
                    forced |= 1 << (t - 1)
            if c < left:
                needed |= 1 << (2 * n - t)
                if c == 0:
                    forced |= 1 << (2 * n - t)
        return needed, forced

    def _step(self, j, low, left):
        nl = list(low)
        for t in self.lows[j]:
            if nl[t - 1] == 0:
                return None
            nl[t - 1] -= 1
        for t in self.highs[j]:
            if left - nl[t - 1] <= 0:
                return None
        return tuple(nl)

    def count(self, last, low, left) -> int:
        if left == 0:
            return 1
        key = (last, low, left)
        val = self.memo.get(key)
        if val is not None:
            return val
        reach = self.reach[last] if last >= 0 else self.reach_all
        needed, forced = self._masks_for(low, left)
        total = 0
        if not needed & ~reach:
            cands = self.succ[last] if last >= 0 else self.all
            masks = self.masks
            for j in cands:
                if forced & ~masks[j]:
                    continue
                nl = self._step(j, low, left)
                if nl is not None:
                    total += self.count(j, nl, left - 1)
        self.memo[key] = total
        return total

    def walk(self, last, low, left, prefix, out):
        if left == 0:
            out.append(tuple(prefix))
            return
        cands = self.succ[last] if last >= 0 else self.all
        for j in cands:
            nl = self._step(j, low, left)
            if nl is not None and self.count(j, nl, left - 1) > 0:
                prefix.append(self.rows[j])
                self.walk(j, nl, left - 1, prefix, out)
                prefix.pop()


def _dp_inputs(n, num_rows, content, allowed_rows):
    if num_rows == 0:
        return None if any(content.values()) else "empty"
    for t in range(1, n + 1):
        if content.get(t, 0) + content.get(2 * n + 1 - t, 0) != num_rows:
            return None
    return _ChainDP(n, allowed_rows), tuple(content.get(t, 0) for t in range(1, n + 1))


def _promotion_choices(blocks, h):
    """Per-block (even, odd) promotion counts summing to h."""
    out = []

    def go(i, remaining, acc):
        if i == len(blocks):
            if remaining == 0:
                out.append(tuple(acc))
            return
        _, e, o = blocks[i]
        for pe in range(min(e, remaining) + 1):
            for po in range(min(o, remaining - pe) + 1):
                acc.append((pe, po))
                go(i + 1, remaining - pe - po, acc)
                acc.pop()

    go(0, h, [])
    return out


def _apply_promotion(blocks, choice):
    """Promoted slots flip parity and move up one profile step; merge equal steps."""
    merged = []

    def put(a, e, o):
        if merged and merged[-1][0] == a:
            _, pe, po = merged.pop()
            merged.append((a, pe + e, po + o))
        else:
            merged.append((a, e, o))

    for (a, e, o), (pe, po) in zip(blocks, choice):
        if e - pe or o - po:
            put(a, e - pe, o - po)
        if pe or po:
            put(a + 1, po, pe)
    return tuple(merged)


def _prefix_leq(p, q) -> bool:
    """Profile dominance of negated prefixes: row(p) <= row(q) componentwise.

    Holds iff p has no more elements than q and q's i-th smallest element is at
    most p's, i.e. q negates earlier and more often.
    """
    return len(p) <= len(q) and all(b <= a for a, b in zip(p, q))


class _ProfileDP:
    """Transfer walk over mirror-pair positions for chains below a fixed index.

    A coordinate row with negated set S has profile a_v = |S intersect [1..v]|,
    and rows compare componentwise exactly when their profiles do.  Processing
    positions t = 1..n, the state is the list of blocks of rows sharing the
    same negated prefix, ordered by dominance, with slots split by the parity
    of |S| (which must come out even).  Promotion choices per block enumerate
    the chains directly; a coarser state keeping only (prefix size, parities)
    is memoized as a feasibility oracle to prune dead branches early.
    """

    def __init__(self, n, num_rows, content, w):
        self.n = n
        self.num_rows = num_rows
        w_set = set(w)
        self.w_prefix = []
        acc = 0
        for t in range(1, n + 1):
            if 2 * n + 1 - t in w_set:
                acc += 1
            self.w_prefix.append(acc)
        self.h = [content.get(2 * n + 1 - t, 0) for t in range(1, n + 1)]
        self.memo: dict = {}

    def _merged_feasible(self, t, blocks) -> bool:
        """Sound pruning oracle on the coarse (size, parity) projection."""
        if t == self.n:
            return all(o == 0 for _, _, o in blocks)
        key = (t, blocks)
        val = self.memo.get(key)
        if val is None:
            val = False
            bound = self.w_prefix[t]
            for choice in _promotion_choices(blocks, self.h[t]):
                newb = _apply_promotion(blocks, choice)
                if newb[-1][0] <= bound and self._merged_feasible(t + 1, newb):
                    val = True
                    break
            self.memo[key] = val
        return val

    def _row(self, negated):
        neg = set(negated)
        return tuple(
            sorted(
                [v for v in range(1, self.n + 1) if v not in neg]
                + [2 * self.n + 1 - v for v in neg]
            )
        )

    def walk(self):
        out: list = []
        self._walk(0, (((), self.num_rows, 0),), out)
        return sorted(out)

    def _strip(self, pblocks):
        merged = []
        for neg, e, o in pblocks:
            a = len(neg)
            if merged and merged[-1][0] == a:
                _, pe, po = merged.pop()
                merged.append((a, pe + e, po + o))
            else:
                merged.append((a, e, o))
        return tuple(merged)

    def _walk(self, t, pblocks, out):
        if t == self.n:
            if all(o == 0 for _, _, o in pblocks):
                chain = []
                for neg, e, o in pblocks:
                    chain += [self._row(neg)] * e
                out.append(tuple(chain))
            return
        bound = self.w_prefix[t]
        stripped = tuple((len(neg), e, o) for neg, e, o in pblocks)
        for choice in _promotion_choices(stripped, self.h[t]):
            newp = []
            ok = True
            for (neg, e, o), (pe, po) in zip(pblocks, choice):
                if e - pe or o - po:
                    newp.append((neg, e - pe, o - po))
                if pe or po:
                    newp.append((neg + (t + 1,), po, pe))
            for left, right in zip(newp, newp[1:]):
                if not _prefix_leq(left[0], right[0]):
                    ok = False
                    break
            if not ok or len(newp[-1][0]) > bound:
                continue
            merged = []
            for neg, e, o in newp:
                if merged and merged[-1][0] == neg:
                    _, pe2, po2 = merged.pop()
                    merged.append((neg, pe2 + e, po2 + o))
                else:
                    merged.append((neg, e, o))
            merged = tuple(merged)
            if self._merged_feasible(t + 1, self._strip(merged)):
                self._walk(t + 1, merged, out)


def _validated_content(n, num_rows, content):
    for t in range(1, n + 1):
        if content.get(t, 0) + content.get(2 * n + 1 - t, 0) != num_rows:
            return False
    return True


def schubert_chain_count(n, num_rows, content, w) -> int:
    """Number of chains of coordinate rows below w with the given value counts."""
    return len(schubert_chains(n, num_rows, content, w))


def schubert_chains(n, num_rows, content, w):
    """All chains of coordinate rows below w with the given counts, lex order."""
    if num_rows == 0:
        return [()] if not any(content.values()) else []
    if not _validated_content(n, num_rows, content):
        return []
    return _ProfileDP(n, num_rows, content, w).walk()


def _ideal_top(n, allowed_rows):
    """The index w when allowed_rows is exactly every coordinate row below w."""
    rows = list(allowed_rows)
    if not rows:
        return None
    top = tuple(max(r[i] for r in rows) for i in range(n))
    rowset = set(map(tuple, rows))
    if top not in rowset or not all(bruhat_leq(r, top) for r in rowset):
        return None
    below = sum(1 for r in minimal_coset_reps_alpha_n(n) if bruhat_leq(r, top))
    return top if below == len(rowset) else None


def standard_chains(n, num_rows, content, allowed_rows):
    """All non-decreasing chains of the allowed rows with the given value counts.

    `content` maps each value 1..2n to its required number of occurrences; the
    counts of a mirror pair must sum to `num_rows` for a chain to exist.  The
    chains are produced in lexicographic order.  Row sets forming a full lower
    ideal go through the profile transfer walk; arbitrary sets fall back to a
    feasibility-guided search over rows.
    """
    top = _ideal_top(n, allowed_rows)
    if top is not None:
        return schubert_chains(n, num_rows, content, top)
    setup = _dp_inputs(n, num_rows, content, allowed_rows)
    if setup is None:
        return []
    if setup == "empty":
        return [()]
    dp, low = setup
    out: list = []
    dp.walk(-1, low, num_rows, [], out)
    return out


def enumerate_basis_omega_n(n, w, k) -> list[Tableau]:
    """Degree-k torus-invariant standard basis on the Schubert variety indexed by w.

    >>> [t.rows for t in enumerate_basis_omega_n(4, (2, 4, 6, 8), 1)]
    [((1, 3, 5, 7), (2, 4, 6, 8))]
    """
    w = tuple(w)
    if not is_coordinate_row(w, n):
        raise InvalidSchubertIndexError(f"{w} is not a minimal coset representative index")
    content = {v: k for v in range(1, 2 * n + 1)}
    return [grid_tableau(n, chain) for chain in schubert_chains(n, 2 * k, content, w)]


def enumerate_basis_omega_1(group_type, n, k) -> list[Tableau]:
    """Degree-k torus-invariant single-column basis for the first-node parabolic.

    >>> [t.entries for t in enumerate_basis_omega_1("C", 2, 1)]
    [(1, 1, 4, 4), (2, 2, 3, 3)]
    """
    if group_type == "D":
        if n < 4:
            raise UnsupportedRankError("type D single-column basis needs rank >= 4")
        top = n - 1
    elif group_type == "C":
        if n < 2:
            raise UnsupportedRankError("type C single-column basis needs rank >= 2")
        top = n
    else:
        raise TableauError(f"unknown group type {group_type!r}")
    out = []
    for ms in combinations_with_replacement(range(1, top + 1), k):
        entries = []
        for j in ms:
            entries += [j, j]
        for j in reversed(ms):
            entries += [2 * n + 1 - j, 2 * n + 1 - j]
        out.append(column_tableau(n, entries, group_type))
    return sorted(out, key=lambda t: t.entries)


def _balanced(entries, n) -> bool:
    counts = {}
    for v in entries:
        counts[v] = counts.get(v, 0) + 1
    return all(counts.get(t, 0) == counts.get(2 * n + 1 - t, 0) for t in range(1, n + 1))


def find_factor(t: Tableau, d: int):
    """Split off a torus-invariant subtableau of degree at most d, if one exists.

    Returns ``(factor, complement)`` or None.  Subsets of a chain are chains, so
    only the balance condition needs searching.
    """
    if t.degree <= d:
        return t, Tableau(t.n, t.shape, (), t.group_type)
    if t.shape == "omega_n":
        rows = t.rows
        for size in range(2, 2 * d + 1, 2):
            for idx in combinations(range(len(rows)), size):
                part = [rows[i] for i in idx]
                if _balanced([v for r in part for v in r], t.n):
                    rest = [rows[i] for i in range(len(rows)) if i not in set(idx)]
                    return grid_tableau(t.n, part), grid_tableau(t.n, rest)
        return None
    pairs = [t.entries[2 * i] for i in range(len(t.entries) // 2)]
    for size in range(2, 2 * d + 1, 2):
        for idx in combinations(range(len(pairs)), size):
            part = [pairs[i] for i in idx]
            if _balanced(part, t.n):
                rest = [pairs[i] for i in range(len(pairs)) if i not in set(idx)]
                factor = column_tableau(t.n, [v for p in part for v in (p, p)], t.group_type)
                comp = column_tableau(t.n, [v for p in rest for v in (p, p)], t.group_type)
                return factor, comp
    return None


def format_tableau(t: Tableau) -> str:
    """Text form: a header line then one comma-separated row per line."""
    header = f"n={t.n} k={t.degree} shape={t.shape}"
    lines = [header] + [",".join(str(v) for v in row) for row in t.rows]
    return "\n".join(lines)


def parse_tableau(text: str, group_type: str = "D") -> Tableau:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise MalformedShapeError("missing header line 'n=<n> k=<k> shape=<shape>'")
    fields = dict(tok.split("=", 1) for tok in lines[0].split())
    n = int(fields["n"])
    shape = fields.get("shape", "omega_n")
    rows = tuple(tuple(int(v) for v in ln.split(",")) for ln in lines[1:])
    t = Tableau(n, shape, rows, group_type)
    if "k" in fields and t.degree != int(fields["k"]):
        raise MalformedShapeError(f"header claims degree {fields['k']}, rows give {t.degree}")
    return t


def tableau_to_json(t: Tableau) -> dict:
    return {
        "n": t.n,
        "shape": t.shape,
        "group_type": t.group_type,
        "rows": [list(row) for row in t.rows],
    }


def tableau_from_json(obj) -> Tableau:
    return Tableau(
        int(obj["n"]),
        obj["shape"],
        tuple(tuple(int(v) for v in row) for row in obj["rows"]),
        obj.get("group_type", "D"),
    )


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
