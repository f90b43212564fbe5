"""Monotonicity analysis of evidence aggregation.

Combining in a new piece of evidence is *monotonic* when the combined
structure still entails the old aggregate, so that every inference licensed
before is still licensed after.  Two readings are reported side by side:

* structural: the combined structure flow-entails the input (meaningful
  even when the combined structure is subnormal);
* observable: every subset's probability interval in the combined structure
  is contained in the input's interval (checked exhaustively; undefined for
  subnormal results, which is recorded rather than guessed).

When the two inputs have no conflicting focal elements (K = 0) both readings
hold for both inputs under every cell-routing rule.  Conflict is what breaks
monotonicity, and different normalization rules break it differently; the
survey and sweep helpers map that behavior out.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combine import CombinationRule, combine, conflict_mass
from .core import (
    ONE,
    BeliefStructure,
    FocalSet,
    Frame,
    MassLike,
    decimal6,
    mass_str,
    to_mass,
)
from .errors import GridOutOfRange, NegativeMass, TotalConflict
from .entailment import flow_entails, interval_contained


@dataclass(frozen=True)
class MonotonicityReport:
    """Outcome of one aggregation step, from both monotonicity angles.

    ``interval_skipped`` is set when the combined structure is subnormal:
    interval containment is undefined there, so both interval flags read
    False with no witness.  ``infeasible`` marks a step the rule cannot
    perform at all (Dempster under total conflict), in which case
    ``combined`` is None and every flag is False.
    """

    rule: CombinationRule
    conflict: Fraction
    entails_first: bool
    entails_second: bool
    interval_ok_first: bool
    interval_ok_second: bool
    witness_first: FocalSet | None
    witness_second: FocalSet | None
    combined: BeliefStructure | None
    interval_skipped: bool = False
    infeasible: bool = False


def monotonic_step(m_star: BeliefStructure, m_next: BeliefStructure,
                   rule: CombinationRule) -> MonotonicityReport:
    """Combine one more structure and report whether monotonicity survived."""
    conflict = conflict_mass(m_star, m_next)
    combined = combine(m_star, m_next, rule)
    entails_first = flow_entails(combined, m_star) is not None
    entails_second = flow_entails(combined, m_next) is not None
    if combined.is_subnormal:
        return MonotonicityReport(
            rule=rule, conflict=conflict, entails_first=entails_first,
            entails_second=entails_second, interval_ok_first=False,
            interval_ok_second=False, witness_first=None, witness_second=None,
            combined=combined, interval_skipped=True)
    ok_first, witness_first = interval_contained(combined, m_star)
    ok_second, witness_second = interval_contained(combined, m_next)
    return MonotonicityReport(
        rule=rule, conflict=conflict, entails_first=entails_first,
        entails_second=entails_second, interval_ok_first=ok_first,
        interval_ok_second=ok_second, witness_first=witness_first,
        witness_second=witness_second, combined=combined)


def pairwise_survey(m1: BeliefStructure, m2: BeliefStructure,
                    rules: list[CombinationRule]) -> list[MonotonicityReport]:
    """One report per rule over the same pair, in the given rule order.

    A rule that cannot run (Dempster at K = 1) contributes a report marked
    infeasible instead of aborting the survey.
    """
    reports = []
    for rule in rules:
        try:
            reports.append(monotonic_step(m1, m2, rule))
        except TotalConflict:
            reports.append(MonotonicityReport(
                rule=rule, conflict=conflict_mass(m1, m2),
                entails_first=False, entails_second=False,
                interval_ok_first=False, interval_ok_second=False,
                witness_first=None, witness_second=None, combined=None,
                infeasible=True))
    return reports


_SWEEP_FRAME = Frame(["a", "b", "c", "d"])


def canonical_pair(alpha: Fraction, beta: Fraction,
                   disjoint: bool) -> tuple[BeliefStructure, BeliefStructure,
                                            FocalSet, FocalSet]:
    """The two-focal study family on a 4-atom frame.

    m1 puts alpha on A = {a, b}; m2 puts beta on B = {c, d} (disjoint) or
    B = {b, c} (overlapping); the rest of each goes to the full set.
    Returns (m1, m2, A, B).
    """
    frame = _SWEEP_FRAME
    a_set = frame.subset(["a", "b"])
    b_set = frame.subset(["c", "d"] if disjoint else ["b", "c"])
    m1 = BeliefStructure(frame, [(a_set, alpha), (frame.full, ONE - alpha)])
    m2 = BeliefStructure(frame, [(b_set, beta), (frame.full, ONE - beta)])
    return m1, m2, a_set, b_set


@dataclass(frozen=True)
class SweepRow:
    """One grid point of a sweep over the two-focal family.

    ``violation`` is the interval-escape verdict with respect to m1; it is
    None when undefined (subnormal combined structure) and the bel/pl fields
    are None when the rule is infeasible at the grid point.
    """

    alpha: Fraction
    beta: Fraction
    conflict: Fraction
    bel_a: Fraction | None
    pl_a: Fraction | None
    violation: bool | None
    infeasible: bool = False


def sweep(alpha_grid: list[MassLike], beta_grid: list[MassLike],
          disjoint: bool, rule: CombinationRule) -> list[SweepRow]:
    """Evaluate a rule over a grid of strengths on the canonical family.

    Rows are emitted in grid order (alpha outer, beta inner).  Grid values
    outside [0, 1] raise GridOutOfRange.
    """
    def grid(values: list[MassLike]) -> list[Fraction]:
        out = []
        for raw in values:
            try:
                value = to_mass(raw)
            except NegativeMass:
                raise GridOutOfRange(
                    f"grid value {raw} is outside [0, 1]") from None
            if value > 1:
                raise GridOutOfRange(f"grid value {value} is outside [0, 1]")
            out.append(value)
        return out

    alphas = grid(alpha_grid)
    betas = grid(beta_grid)
    rows = []
    for alpha in alphas:
        for beta in betas:
            m1, m2, a_set, _ = canonical_pair(alpha, beta, disjoint)
            conflict = conflict_mass(m1, m2)
            try:
                combined = combine(m1, m2, rule)
            except TotalConflict:
                rows.append(SweepRow(alpha, beta, conflict, None, None, None,
                                     infeasible=True))
                continue
            violation: bool | None
            if combined.is_subnormal:
                violation = None
            else:
                violation = not interval_contained(combined, m1)[0]
            rows.append(SweepRow(alpha, beta, conflict,
                                 combined.bel(a_set), combined.pl(a_set),
                                 violation))
    return rows


_CSV_HEADER = ("alpha,alpha_exact,beta,beta_exact,K,K_exact,"
               "bel_A,bel_A_exact,pl_A,pl_A_exact,violation")


def sweep_csv(rows: list[SweepRow]) -> str:
    """Render sweep rows as CSV, decimals to 6 places beside exact fractions.

    Infeasible rows leave the bel/pl cells empty and say "infeasible" in the
    violation column; rows whose violation verdict is undefined (subnormal
    result) leave that column empty.
    """
    lines = [_CSV_HEADER]
    for row in rows:
        if row.infeasible:
            verdict = "infeasible"
        elif row.violation is None:
            verdict = ""
        else:
            verdict = "true" if row.violation else "false"

        def cell(value: Fraction | None) -> str:
            if value is None:
                return ","
            return f"{decimal6(value)},{mass_str(value)}"

        lines.append(",".join([
            cell(row.alpha), cell(row.beta), cell(row.conflict),
            cell(row.bel_a), cell(row.pl_a), verdict]))
    return "\n".join(lines) + "\n"
