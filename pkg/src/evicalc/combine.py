"""Conjunctive combination of belief structures under conflict-handling rules.

Every pairwise combination starts from the same product table: one cell per
pair of focal elements, weighted by the product of their masses.  A cell
whose sets intersect always contributes its weight to the intersection.  The
rules differ only in where a *conflicting* cell (empty intersection) sends
its weight:

* ``dempster``        drop it and renormalize the rest by 1/(1-K);
* ``yager``           send it to the full set X;
* ``dubois-prade``    send it to the union of the two sets;
* ``unnormalized``    keep it on the empty set (result is subnormal);
* ``priority-first``  send it to the left operand's set;
* ``priority-second`` send it to the right operand's set.

``discount:<c>`` ignores the product table entirely and returns the pointwise
mixture c*m1 + (1-c)*m2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import (
    ZERO,
    ONE,
    BeliefStructure,
    FocalSet,
    MassLike,
    to_mass,
)
from .errors import (
    EmptyTarget,
    FrameMismatch,
    SubnormalInput,
    TotalConflict,
)


@dataclass(frozen=True)
class CombinationRule:
    """A tagged combination rule; ``param`` is the discount weight c."""

    kind: str
    param: Fraction | None = None

    def __str__(self) -> str:
        if self.kind == "discount":
            return f"discount:{self.param}"
        return self.kind


DEMPSTER = CombinationRule("dempster")
YAGER = CombinationRule("yager")
DUBOIS_PRADE = CombinationRule("dubois-prade")
UNNORMALIZED = CombinationRule("unnormalized")
PRIORITY_FIRST = CombinationRule("priority-first")
PRIORITY_SECOND = CombinationRule("priority-second")

CELL_ROUTING_RULES = (
    DEMPSTER, YAGER, DUBOIS_PRADE, UNNORMALIZED, PRIORITY_FIRST,
    PRIORITY_SECOND,
)


def discount(c: MassLike) -> CombinationRule:
    """Pointwise mixture rule c*m1 + (1-c)*m2 with 0 <= c <= 1."""
    weight = to_mass(c)
    if weight > 1:
        raise ValueError(f"discount weight {weight} exceeds 1")
    return CombinationRule("discount", weight)


def parse_rule(text: str) -> CombinationRule:
    """Parse a rule name as used on the CLI and in JSON."""
    name = text.strip()
    for rule in CELL_ROUTING_RULES:
        if name == rule.kind:
            return rule
    if name.startswith("discount:"):
        return discount(name.removeprefix("discount:"))
    raise ValueError(f"unknown combination rule {text!r}")


@dataclass(frozen=True)
class ProductCell:
    """One entry of the pairwise product table."""

    left: FocalSet
    right: FocalSet
    weight: Fraction

    @property
    def conflicting(self) -> bool:
        return (self.left & self.right).is_empty


def _check_pair(m1: BeliefStructure, m2: BeliefStructure) -> None:
    if m1.frame != m2.frame:
        raise FrameMismatch("cannot combine structures on different frames")


def product_cells(m1: BeliefStructure,
                  m2: BeliefStructure) -> list[ProductCell]:
    """All product cells of a pair, in (left, right) bitmask order."""
    _check_pair(m1, m2)
    return [ProductCell(a, b, wa * wb)
            for a, wa in m1.items() for b, wb in m2.items()]


def conflict_mass(m1: BeliefStructure, m2: BeliefStructure) -> Fraction:
    """The conflict K: total product weight landing on empty intersections."""
    _check_pair(m1, m2)
    return sum((c.weight for c in product_cells(m1, m2) if c.conflicting),
               ZERO)


def possibility(b: FocalSet, a: FocalSet) -> Fraction:
    """Crisp possibility of b given a: 1 if they intersect, else 0.

    The conditioning set a must be non-empty.
    """
    if a.is_empty:
        raise EmptyTarget("possibility is conditioned on a non-empty set")
    return ONE if a.intersects(b) else ZERO


def _route(cell: ProductCell, rule: CombinationRule,
           full: FocalSet) -> FocalSet | None:
    """Target set for a cell under a cell-routing rule; None means dropped."""
    meet = cell.left & cell.right
    if not meet.is_empty:
        return meet
    if rule.kind == "dempster":
        return None
    if rule.kind == "yager":
        return full
    if rule.kind == "dubois-prade":
        return cell.left | cell.right
    if rule.kind == "unnormalized":
        return meet
    if rule.kind == "priority-first":
        return cell.left
    if rule.kind == "priority-second":
        return cell.right
    raise ValueError(f"not a cell-routing rule: {rule}")


def combine(m1: BeliefStructure, m2: BeliefStructure,
            rule: CombinationRule = DEMPSTER) -> BeliefStructure:
    """Combine two normal structures under the given rule.

    Output masses are exact rationals summing to 1; coinciding target sets
    merge.  Only the unnormalized rule may yield a subnormal result (it does
    exactly when the conflict K is positive).  Dempster raises TotalConflict
    at K = 1, where its normalization divides by zero.
    """
    _check_pair(m1, m2)
    if m1.is_subnormal or m2.is_subnormal:
        raise SubnormalInput("combination requires normal input structures")

    if rule.kind == "discount":
        c = rule.param
        mixed: dict[FocalSet, Fraction] = {}
        for f, m in m1.items():
            mixed[f] = mixed.get(f, ZERO) + c * m
        for f, m in m2.items():
            mixed[f] = mixed.get(f, ZERO) + (1 - c) * m
        return BeliefStructure(m1.frame, mixed)

    full = m1.frame.full
    routed: dict[FocalSet, Fraction] = {}
    dropped = ZERO
    for cell in product_cells(m1, m2):
        target = _route(cell, rule, full)
        if target is None:
            dropped += cell.weight
            continue
        routed[target] = routed.get(target, ZERO) + cell.weight

    if rule.kind == "dempster":
        if dropped == 1:
            raise TotalConflict()
        if dropped:
            scale = ONE / (ONE - dropped)
            routed = {f: m * scale for f, m in routed.items()}
        return BeliefStructure(m1.frame, routed)
    return BeliefStructure(m1.frame, routed,
                           subnormal=rule.kind == "unnormalized")


def combine_all(structures: Sequence[BeliefStructure] |
                Iterable[BeliefStructure],
                rule: CombinationRule = DEMPSTER) -> BeliefStructure:
    """Strict left fold of combine over a non-empty list, in list order.

    Dempster is associative and commutative, so its fold is order
    independent; for the other rules the input order is part of the answer.
    """
    items = list(structures)
    if not items:
        raise ValueError("combine_all needs at least one structure")
    result = items[0]
    for nxt in items[1:]:
        result = combine(result, nxt, rule)
    return result
