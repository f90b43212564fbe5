"""The entailment ordering between belief structures.

A specific structure entails a general one when the general structure can be
reached by relocating mass onto supersets.  Two predicates are exposed:

* :func:`partition_entails`, the grouping form.  The specific structure's
  focal elements are partitioned into groups, one group per focal element B
  of the general structure; every member of B's group must be contained in B
  and the group's masses must sum exactly to the general mass of B.  Each
  specific focal element therefore sends its whole mass to a single general
  focal element: no mass splitting.

* :func:`flow_entails`, the transport generalization.  Mass may split: a
  witness is any nonnegative transport w(A, B) supported on contained pairs
  A <= B whose row sums equal the specific masses and whose column sums
  equal the general masses.  Decided exactly by max-flow feasibility on the
  bipartite containment graph with capacities scaled to integers.

Every partition witness is a flow witness, so partition entailment implies
flow entailment; flow entailment is the weaker and more useful relation
(weakening a typicality strength, for instance, is licensed by flow but not
by partition).  For normal structures, flow entailment implies that every
subset's probability interval in the specific structure is contained in the
general structure's interval; :func:`interval_contained` checks that
consequence exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from .core import (
    MAX_TABLE_ATOMS,
    ONE,
    ZERO,
    BeliefStructure,
    FocalSet,
    MassLike,
    to_mass,
)
from .errors import (
    EmptyTarget,
    FrameMismatch,
    FrameTooLarge,
    NotTypicalForm,
    StrengthIncrease,
    SubnormalInput,
)


@dataclass(frozen=True)
class EntailmentWitness:
    """Evidence that one structure entails another.

    ``triples`` lists (specific focal, general focal, transported mass) with
    the specific focal contained in the general one.  For ``mode ==
    "partition"`` every specific focal appears in exactly one triple,
    carrying its full mass.
    """

    mode: str  # "partition" or "flow"
    triples: tuple[tuple[FocalSet, FocalSet, Fraction], ...]

    @property
    def assignment(self) -> dict[FocalSet, FocalSet]:
        """Partition view: the general focal each specific focal feeds."""
        if self.mode != "partition":
            raise ValueError("assignment view is only defined for partition "
                             "witnesses")
        return {a: b for a, b, _ in self.triples}


def _check_pair(m1: BeliefStructure, m2: BeliefStructure) -> None:
    if m1.frame != m2.frame:
        raise FrameMismatch(
            "entailment is only defined between structures on one frame")


def validate_witness(specific: BeliefStructure, general: BeliefStructure,
                     witness: EntailmentWitness) -> bool:
    """Re-check a witness against the two structures, without searching.

    Verifies containment on every triple, positive weights, exact row sums
    against the specific masses, exact column sums against the general
    masses, and (for partition mode) that no specific focal is split.
    """
    _check_pair(specific, general)
    rows: dict[FocalSet, Fraction] = {}
    cols: dict[FocalSet, Fraction] = {}
    seen_rows: list[FocalSet] = []
    for a, b, w in witness.triples:
        if a.frame != specific.frame or b.frame != specific.frame:
            return False
        if w <= 0 or not a.issubset(b):
            return False
        rows[a] = rows.get(a, ZERO) + w
        cols[b] = cols.get(b, ZERO) + w
        seen_rows.append(a)
    if rows != dict(specific.items()) or cols != dict(general.items()):
        return False
    if witness.mode == "partition" and len(seen_rows) != len(set(seen_rows)):
        return False
    return True


def partition_entails(m1: BeliefStructure,
                      m2: BeliefStructure) -> EntailmentWitness | None:
    """Grouping-form entailment of the general m2 by the specific m1.

    Searches for an assignment of each focal element of m1 to one focal
    element of m2 containing it, such that the masses assigned to each focal
    B of m2 sum exactly to m2(B).  Exact backtracking; focal counts at desk
    scale (<= 16 a side) are fine.
    """
    _check_pair(m1, m2)
    specific = list(m1.items())
    general = list(m2.items())
    # Largest specific masses first: they are the hardest to place, so they
    # prune earliest.  Candidate order by bitmask keeps the result
    # deterministic.
    order = sorted(range(len(specific)),
                   key=lambda i: (-specific[i][1], specific[i][0].bits))
    candidates: list[list[int]] = []
    for i in order:
        fits = [j for j, (b, _) in enumerate(general)
                if specific[i][0].issubset(b)]
        if not fits:
            return None
        candidates.append(fits)
    residual = [w for _, w in general]
    chosen: list[int] = []

    def place(k: int) -> bool:
        if k == len(order):
            return all(r == 0 for r in residual)
        mass = specific[order[k]][1]
        for j in candidates[k]:
            if residual[j] >= mass:
                residual[j] -= mass
                chosen.append(j)
                if place(k + 1):
                    return True
                chosen.pop()
                residual[j] += mass
        return False

    if not place(0):
        return None
    pairing = {order[k]: j for k, j in enumerate(chosen)}
    triples = tuple((a, general[pairing[i]][0], w)
                    for i, (a, w) in enumerate(specific))
    return EntailmentWitness("partition", triples)


def _flow_graph(m1: BeliefStructure, m2: BeliefStructure,
                scale: int) -> nx.DiGraph:
    graph = nx.DiGraph()
    for a, w in m1.items():
        graph.add_edge("src", ("a", a.bits), capacity=int(w * scale))
    for b, w in m2.items():
        graph.add_edge(("b", b.bits), "snk", capacity=int(w * scale))
    for a, _ in m1.items():
        for b, _ in m2.items():
            if a.issubset(b):
                graph.add_edge(("a", a.bits), ("b", b.bits), capacity=scale)
    return graph


def flow_entails(m1: BeliefStructure,
                 m2: BeliefStructure) -> EntailmentWitness | None:
    """Transport-form entailment of the general m2 by the specific m1.

    Feasibility is decided by integer max-flow: all masses are scaled by the
    least common denominator, every containment pair gets an edge, and a
    witness exists iff the maximum flow saturates the whole unit of mass.
    The returned transport is exact (integer flow divided by the scale).
    """
    _check_pair(m1, m2)
    scale = lcm(*(w.denominator for _, w in m1.items()),
                *(w.denominator for _, w in m2.items()))
    graph = _flow_graph(m1, m2, scale)
    value, flows = nx.maximum_flow(graph, "src", "snk", flow_func=edmonds_karp)
    if value != scale:
        return None
    triples = []
    for a, _ in m1.items():
        row = flows.get(("a", a.bits), {})
        for b, _ in m2.items():
            sent = row.get(("b", b.bits), 0)
            if sent:
                triples.append((a, b, Fraction(sent, scale)))
    return EntailmentWitness("flow", tuple(triples))


def interval_contained(
        m1: BeliefStructure,
        m2: BeliefStructure) -> tuple[bool, FocalSet | None]:
    """Check [bel1, pl1] <= [bel2, pl2] containment on every subset.

    Exhaustive over all 2**n subsets using belief tables.  Returns (True,
    None) on success, else (False, first violating subset in bitmask order).
    """
    _check_pair(m1, m2)
    n = len(m1.frame)
    if n > MAX_TABLE_ATOMS:
        raise FrameTooLarge(
            f"exhaustive interval check needs at most {MAX_TABLE_ATOMS} "
            f"atoms, got {n}")
    bel1 = m1.bel_table()
    bel2 = m2.bel_table()
    tot1 = m1.nonempty_total()
    tot2 = m2.nonempty_total()
    full = (1 << n) - 1
    for mask in range(1 << n):
        if bel2[mask] > bel1[mask]:
            return False, m1.frame.from_bits(mask)
        # pl(S) = total non-empty mass - bel(complement of S)
        if tot1 - bel1[full ^ mask] > tot2 - bel2[full ^ mask]:
            return False, m1.frame.from_bits(mask)
    return True, None


def weaken_to(m: BeliefStructure, target: FocalSet) -> BeliefStructure:
    """Coarsen a normal structure to the two-focal form on a target set.

    The result puts bel(m, target) on the target and the rest on the full
    set, degenerating to a single focal when that belief is 0 or 1.  The
    input always flow-entails the result.
    """
    if m.is_subnormal:
        raise SubnormalInput("weakening is defined for normal structures")
    if target.is_empty:
        raise EmptyTarget("cannot weaken toward the empty set")
    strength = m.bel(target)
    return BeliefStructure(
        m.frame, [(target, strength), (m.frame.full, ONE - strength)])


def _typical_form(m: BeliefStructure) -> tuple[FocalSet, Fraction]:
    full = m.frame.full
    focals = dict(m.items())
    if len(focals) == 2 and full in focals:
        (body, strength), = [(f, w) for f, w in focals.items() if f != full]
        if not body.is_empty:
            return body, strength
    raise NotTypicalForm(
        "expected a two-focal structure {B: s, X: 1-s} with B a proper "
        "non-empty subset")


def hedge(m: BeliefStructure, new_strength: MassLike) -> BeliefStructure:
    """Lower the strength of a typicality structure {B: s, X: 1-s}.

    Hedging to any smaller strength is always licensed: the original
    structure flow-entails the hedged one.  Raising the strength is not.
    """
    body, strength = _typical_form(m)
    lowered = to_mass(new_strength)
    if lowered > strength:
        raise StrengthIncrease(
            f"cannot raise strength from {strength} to {lowered}")
    return BeliefStructure(
        m.frame, [(body, lowered), (m.frame.full, ONE - lowered)])
