"""Concrete data for the worked quotient families.

The rank-4 orthogonal Grassmannian carries three invariant degree-1 tableaux
spanning the first graded piece.  In rank 4n (n >= 2) we study the interval of
six Schubert indices above the minimal index admitting invariants; the largest
member carries six degree-1 tableaux X1..X6, four degree-2 tableaux Y1..Y4
outside the image of degree-1 products, and two degree-3 tableaux Z1, Z2
outside degree-(1,2) products.  Rows follow a fixed template: a run of small
odds (or evens), six values near the middle 4n, and a run of large odds (or
evens); each row is recorded by its middle offsets.
"""

from __future__ import annotations

from .tableau import Tableau, grid_tableau
from .weyl import IndexVector

__all__ = [
    "SPIN8_TOP",
    "SPIN8_TOP_WORD",
    "SPIN8_W1",
    "SPIN8_W1_WORD",
    "SPIN8_W2",
    "SPIN8_W2_WORD",
    "SPIN8_DEG1_ROWS",
    "SPIN8_NONSTANDARD_PAIR",
    "bottom_word",
    "family_word",
    "family_index",
    "x_tableau",
    "y_tableau",
    "z_tableau",
]

# rank-4 data
SPIN8_TOP: IndexVector = (5, 6, 7, 8)
SPIN8_TOP_WORD = (4, 2, 3, 1, 2, 4)
SPIN8_W1: IndexVector = (2, 4, 6, 8)
SPIN8_W1_WORD = (3, 1, 2, 4)
SPIN8_W2: IndexVector = (3, 4, 7, 8)
SPIN8_W2_WORD = (2, 3, 1, 2, 4)
SPIN8_DEG1_ROWS = (
    ((1, 2, 3, 4), (5, 6, 7, 8)),
    ((1, 2, 5, 6), (3, 4, 7, 8)),
    ((1, 3, 5, 7), (2, 4, 6, 8)),
)
SPIN8_NONSTANDARD_PAIR = ((1, 4, 6, 7), (2, 3, 5, 8))

# rank-4n row templates: middle offsets around 4n, odd rows carry 5, even rows 6
_X_OFFSETS = {
    1: (((-3, -1, 1, 3, 5), "odd"), ((-4, -2, 0, 2, 4, 6), "even")),
    2: (((-4, -1, 1, 3, 4), "odd"), ((-3, -2, 0, 2, 5, 6), "even")),
    3: (((-3, -2, 1, 2, 5), "odd"), ((-4, -1, 0, 3, 4, 6), "even")),
    4: (((-4, -2, 1, 2, 4), "odd"), ((-3, -1, 0, 3, 5, 6), "even")),
    5: (((-3, -2, -1, 0, 5), "odd"), ((-4, 1, 2, 3, 4, 6), "even")),
    6: (((-4, -2, -1, 0, 4), "odd"), ((-3, 1, 2, 3, 5, 6), "even")),
}
_Y_OFFSETS = {
    1: (
        ((-4, -3, -2, -1, 1), "odd"),
        ((-2, 0, 2, 4, 5), "odd"),
        ((-4, -1, 0, 3, 4, 6), "even"),
        ((-3, 1, 2, 3, 5, 6), "even"),
    ),
    2: (
        ((-4, -3, -2, 0, 2), "odd"),
        ((-2, -1, 1, 4, 5), "odd"),
        ((-4, -1, 0, 3, 4, 6), "even"),
        ((-3, 1, 2, 3, 5, 6), "even"),
    ),
    3: (
        ((-4, -3, -1, 0, 3), "odd"),
        ((-2, -1, 1, 4, 5), "odd"),
        ((-4, -2, 0, 2, 4, 6), "even"),
        ((-3, 1, 2, 3, 5, 6), "even"),
    ),
    4: (
        ((-4, -3, 1, 2, 3), "odd"),
        ((-2, -1, 1, 4, 5), "odd"),
        ((-4, -2, 0, 2, 4, 6), "even"),
        ((-3, -1, 0, 3, 5, 6), "even"),
    ),
}
_Z_OFFSETS = {
    1: (
        ((-4, -3, -2, -1, 1), "odd"),
        ((-4, -1, 1, 3, 4), "odd"),
        ((-2, 0, 2, 4, 5), "odd"),
        ((-4, -2, 0, 2, 4, 6), "even"),
        ((-3, -1, 0, 3, 5, 6), "even"),
        ((-3, 1, 2, 3, 5, 6), "even"),
    ),
    2: (
        ((-4, -3, -2, 0, 2), "odd"),
        ((-4, -1, 1, 3, 4), "odd"),
        ((-2, -1, 1, 4, 5), "odd"),
        ((-4, -2, 0, 2, 4, 6), "even"),
        ((-3, -1, 0, 3, 5, 6), "even"),
        ((-3, 1, 2, 3, 5, 6), "even"),
    ),
}
_W_OFFSETS = {
    1: (-4, -2, 0, 2, 4, 6),
    2: (-3, -2, 0, 2, 5, 6),
    3: (-4, -1, 0, 3, 4, 6),
    4: (-3, -1, 0, 3, 5, 6),
    5: (-4, 1, 2, 3, 4, 6),
    6: (-3, 1, 2, 3, 5, 6),
}


def _template_row(n: int, offsets, parity: str) -> IndexVector:
    mid = 4 * n
    if parity == "odd":
        pre = range(1, mid - 4, 2)
        post = range(mid + 7, 8 * n, 2)
    else:
        pre = range(2, mid - 4, 2)
        post = range(mid + 8, 8 * n + 1, 2)
    return tuple(pre) + tuple(mid + o for o in offsets) + tuple(post)


def _template_tableau(n: int, spec) -> Tableau:
    if n < 2:
        raise ValueError("the rank-4n family needs n >= 2")
    return grid_tableau(4 * n, [_template_row(n, offs, par) for offs, par in spec])


def x_tableau(i: int, n: int) -> Tableau:
    """Degree-1 basis tableau X_i (1 <= i <= 6) at rank 4n."""
    return _template_tableau(n, _X_OFFSETS[i])


def y_tableau(j: int, n: int) -> Tableau:
    """Degree-2 tableau Y_j (1 <= j <= 4), not a product of degree-1 elements."""
    return _template_tableau(n, _Y_OFFSETS[j])


def z_tableau(l: int, n: int) -> Tableau:
    """Degree-3 tableau Z_l (l = 1, 2), not in the degree-(1,2) product image."""
    return _template_tableau(n, _Z_OFFSETS[l])


def family_index(i: int, n: int) -> IndexVector:
    """Index vector of the i-th Schubert variety (1 <= i <= 6) at rank 4n."""
    return _template_row(n, _W_OFFSETS[i], "even")


def bottom_word(n: int) -> tuple[int, ...]:
    """Reduced word for the minimal index admitting invariant sections, rank 4n."""
    word: list[int] = []
    for i in range(2 * n, 0, -1):
        if i % 2 == 0:
            word += list(range(2 * i - 1, 4 * n))
        else:
            word += list(range(2 * i - 1, 4 * n - 1)) + [4 * n]
    return tuple(word)


def family_word(i: int, n: int) -> tuple[int, ...]:
    """Reduced word for the i-th family member, as a prefix on the bottom word."""
    prefix = {
        1: (),
        2: (4 * n - 4,),
        3: (4 * n - 2,),
        4: (4 * n - 2, 4 * n - 4),
        5: (4 * n, 4 * n - 2),
        6: (4 * n - 4, 4 * n, 4 * n - 2),
    }[i]
    return prefix + bottom_word(n)
