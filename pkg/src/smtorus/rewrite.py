"""Commutative quadratic reduction systems and diamond-lemma certificates.

Rules replace one degree-2 monomial by another of the same degree.  Normal
forms repeatedly apply the first applicable rule; confluence is certified by
resolving every minimal overlap ambiguity (a degree-3 monomial divisible by
two distinct left-hand sides) along each applicable first rule and comparing
the resulting normal forms.  Counting normal forms per degree then computes
the Hilbert function of the presented quotient.

Right-hand sides are allowed to be further reducible: one of the bundled
presentations rewrites a product onto a monomial that another rule reduces
again, and the reduction loop handles that transparently.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

__all__ = [
    "RewriteError",
    "FuelExhaustedError",
    "NotConfluentError",
    "Rule",
    "ReductionSystem",
    "make_system",
    "monomial_str",
    "normal_form",
    "normal_form_trace",
    "overlaps",
    "ConfluenceReport",
    "check_confluence",
    "normal_form_count",
    "format_system",
    "parse_system",
    "system_to_json",
    "system_from_json",
    "veronese_p1_system",
    "veronese_p2_system",
    "veronese_p3_system",
    "NAMED_SYSTEMS",
]

Monomial = tuple[int, ...]


class RewriteError(ValueError):
    pass


class FuelExhaustedError(RewriteError):
    pass


class NotConfluentError(RewriteError):
    pass


@dataclass(frozen=True)
class Rule:
    lhs: tuple[int, int]
    rhs: tuple[int, int]


@dataclass(frozen=True)
class ReductionSystem:
    nvars: int
    rules: tuple[Rule, ...]
    names: tuple[str, ...]
    bindings: tuple[str, ...] = ()


def make_system(nvars, rules, names=None, bindings=()) -> ReductionSystem:
    if names is None:
        names = tuple(f"z{i + 1}" for i in range(nvars))
    if len(names) != nvars:
        raise RewriteError("one name per variable required")
    clean = []
    seen = set()
    for lhs, rhs in rules:
        lhs = tuple(sorted(lhs))
        rhs = tuple(sorted(rhs))
        if len(lhs) != 2 or len(rhs) != 2:
            raise RewriteError("rules must relate degree-2 monomials")
        if any(not 0 <= v < nvars for v in lhs + rhs):
            raise RewriteError(f"variable out of range in rule {lhs} -> {rhs}")
        if lhs in seen:
            raise RewriteError(f"duplicate left-hand side {lhs}")
        seen.add(lhs)
        clean.append(Rule(lhs, rhs))
    return ReductionSystem(nvars, tuple(clean), tuple(names), tuple(bindings))


def monomial_str(mono: Monomial, sys: ReductionSystem) -> str:
    return "*".join(sys.names[v] for v in mono) if mono else "1"


def _divides(lhs, mono: Monomial) -> bool:
    a, b = lhs
    if a == b:
        return mono.count(a) >= 2
    return a in mono and b in mono


def _apply(mono: Monomial, rule: Rule) -> Monomial:
    out = list(mono)
    out.remove(rule.lhs[0])
    out.remove(rule.lhs[1])
    return tuple(sorted(out + list(rule.rhs)))


def normal_form_trace(mono, sys: ReductionSystem, fuel: int = 1000):
    """Reduction path under the first-applicable-rule strategy, start included."""
    mono = tuple(sorted(mono))
    trace = [mono]
    for _ in range(fuel):
        for rule in sys.rules:
            if _divides(rule.lhs, mono):
                mono = _apply(mono, rule)
                trace.append(mono)
                break
        else:
            return trace
    raise FuelExhaustedError(f"no normal form within {fuel} steps from {trace[0]}")


def normal_form(mono, sys: ReductionSystem, fuel: int = 1000) -> Monomial:
    """Reduce until no left-hand side divides.

    >>> s = veronese_p1_system()
    >>> monomial_str(normal_form((0, 1, 2), s), s)
    'z1*z1*z1'
    """
    return normal_form_trace(mono, sys, fuel)[-1]


def overlaps(sys: ReductionSystem):
    """Degree-3 monomials divisible by at least two distinct left-hand sides."""
    found = set()
    for r1, r2 in combinations(sys.rules, 2):
        union = Counter(r1.lhs) | Counter(r2.lhs)
        if sum(union.values()) == 3:
            found.add(tuple(sorted(union.elements())))
    return sorted(found)


@dataclass(frozen=True)
class ConfluenceReport:
    ambiguities: tuple
    resolutions: tuple  # (monomial, ((rule_index, trace, normal_form), ...))
    confluent: bool


def check_confluence(sys: ReductionSystem, fuel: int = 1000) -> ConfluenceReport:
    """Resolve every minimal ambiguity along each applicable first rule.

    A single-rule system has no degree-3 ambiguity; its squared left-hand side
    is checked instead so the certificate is never vacuous.
    """
    ambiguities = list(overlaps(sys))
    checked = list(ambiguities)
    if len(sys.rules) == 1:
        lhs = sys.rules[0].lhs
        checked.append(tuple(sorted(lhs + lhs)))
    resolutions = []
    confluent = True
    for mono in checked:
        ways = []
        for idx, rule in enumerate(sys.rules):
            if not _divides(rule.lhs, mono):
                continue
            first = _apply(mono, rule)
            tail = normal_form_trace(first, sys, fuel)
            ways.append((idx, tuple([mono] + tail), tail[-1]))
        if len({nf for _, _, nf in ways}) > 1:
            confluent = False
        resolutions.append((mono, tuple(ways)))
    return ConfluenceReport(tuple(ambiguities), tuple(resolutions), confluent)


def normal_form_count(sys: ReductionSystem, degree: int, assume_confluent: bool = False) -> int:
    """Number of degree-k normal monomials (a quotient basis when confluent).

    >>> normal_form_count(veronese_p1_system(), 2)
    5
    """
    if not assume_confluent and not check_confluence(sys).confluent:
        raise NotConfluentError("normal forms only count a basis for confluent systems")
    count = 0
    for mono in combinations_with_replacement(range(sys.nvars), degree):
        if not any(_divides(rule.lhs, mono) for rule in sys.rules):
            count += 1
    return count


def format_system(sys: ReductionSystem) -> str:
    lines = ["vars " + " ".join(sys.names)]
    for rule in sys.rules:
        a, b = rule.lhs
        c, d = rule.rhs
        lines.append(f"{sys.names[a]} {sys.names[b]} -> {sys.names[c]} {sys.names[d]}")
    return "\n".join(lines)


def parse_system(text: str) -> ReductionSystem:
    """Parse "z_i z_j -> z_k z_l" lines, with an optional leading "vars ..." line."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    names: list[str] = []
    if lines and lines[0].startswith("vars"):
        names = lines[0].split()[1:]
        lines = lines[1:]
    declared = bool(names)
    index = {name: i for i, name in enumerate(names)}

    def var(tok):
        if tok not in index:
            if declared:
                raise RewriteError(f"unknown variable {tok!r}")
            index[tok] = len(index)
            names.append(tok)
        return index[tok]

    rules = []
    for ln in lines:
        left, right = ln.split("->")
        a, b = left.split()
        c, d = right.split()
        rules.append(((var(a), var(b)), (var(c), var(d))))
    return make_system(len(names), rules, tuple(names))


def system_to_json(sys: ReductionSystem) -> dict:
    return {
        "nvars": sys.nvars,
        "names": list(sys.names),
        "rules": [[*r.lhs, *r.rhs] for r in sys.rules],
        "bindings": list(sys.bindings),
    }


def system_from_json(obj) -> ReductionSystem:
    return make_system(
        int(obj["nvars"]),
        [((a, b), (c, d)) for a, b, c, d in obj["rules"]],
        tuple(obj["names"]) if obj.get("names") else None,
        tuple(obj.get("bindings", ())),
    )


def veronese_p1_system() -> ReductionSystem:
    """Quadric presentation of the second family member's quotient: (P^1, O(2))."""
    return make_system(
        3,
        [((0, 2), (1, 1))],
        ("z0", "z1", "z2"),
        ("X1*X1", "X1*X2", "X2*X2"),
    )


def veronese_p3_system() -> ReductionSystem:
    """Rank-one quadric presentation of the fourth member's quotient: (P^3, O(2))."""
    rules = [
        ((0, 1), (4, 4)),
        ((0, 2), (5, 5)),
        ((0, 3), (6, 6)),
        ((0, 7), (4, 5)),
        ((0, 8), (4, 6)),
        ((0, 9), (5, 6)),
        ((1, 2), (7, 7)),
        ((1, 3), (8, 8)),
        ((1, 5), (4, 7)),
        ((1, 6), (4, 8)),
        ((1, 9), (7, 8)),
        ((2, 3), (9, 9)),
        ((2, 4), (5, 7)),
        ((2, 6), (5, 9)),
        ((2, 8), (7, 9)),
        ((3, 4), (6, 8)),
        ((3, 5), (6, 9)),
        ((3, 7), (8, 9)),
        ((4, 9), (5, 8)),
        ((5, 8), (6, 7)),
    ]
    bindings = (
        "X1*X1",
        "X2*X2",
        "X3*X3",
        "X4*X4",
        "X1*X2",
        "X1*X3",
        "X1*X4",
        "X2*X3",
        "X2*X4",
        "X3*X4",
    )
    return make_system(10, rules, None, bindings)


def veronese_p2_system() -> ReductionSystem:
    """Quadric presentation of the fifth member's quotient: (P^2, O(2))."""
    rules = [
        ((0, 1), (3, 3)),
        ((0, 2), (4, 4)),
        ((1, 2), (5, 5)),
        ((0, 5), (3, 4)),
        ((1, 4), (3, 5)),
        ((2, 3), (4, 5)),
    ]
    bindings = ("X1*X1", "X3*X3", "X5*X5", "X1*X3", "X1*X5", "X3*X5")
    return make_system(6, rules, None, bindings)


NAMED_SYSTEMS = {
    "veronese-p1": veronese_p1_system,
    "veronese-p2": veronese_p2_system,
    "veronese-p3": veronese_p3_system,
}


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
