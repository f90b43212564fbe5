"""Default-knowledge bases: a small statement language over one variable.

Grammar (UTF-8, line oriented, "#" starts a comment, blank lines ignored):

    frame: a, b, c, d
    V is {a, b}
    typically V is {b, c} strength 0.95

The frame line must come first.  An absolute statement ("V is A") compiles to
all mass on its set; a typical statement compiles to a two-focal structure
putting its strength on the set and the rest on the full set.  Strengths are
parsed exactly (decimals or p/q fractions) and must lie strictly between 0
and 1: strength 1 is an absolute statement and must be written as one, and
strength 0 says nothing.

Inference is the left-fold combination of the compiled statements in file
order.  Under the default rule (Dempster) a typical statement that conflicts
outright with an absolute one is completely discounted, and between two
conflicting typical statements the one with the larger strength keeps the
larger share of belief; strengths thereby act as priorities.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .combine import DEMPSTER, CombinationRule, combine
from .core import BeliefStructure, FocalSet, Frame, ProbabilityInterval, ONE
from .entailment import weaken_to
from .errors import (
    FrameMismatch,
    MissingFrame,
    ParseError,
    StrengthOutOfRange,
    TotalConflict,
    UnknownAtom,
    VariableMismatch,
)


@dataclass(frozen=True)
class Absolute:
    """"V is A": the value certainly lies in the set."""

    set: FocalSet

    def __post_init__(self):
        if self.set.is_empty:
            raise ValueError("a statement set must be non-empty")


@dataclass(frozen=True)
class Typical:
    """"typically V is B": mass ``strength`` on the set, rest anywhere."""

    set: FocalSet
    strength: Fraction

    def __post_init__(self):
        if self.set.is_empty:
            raise ValueError("a statement set must be non-empty")
        if not 0 < self.strength < 1:
            raise StrengthOutOfRange(
                f"typicality strength must be strictly between 0 and 1, "
                f"got {self.strength}")


Statement = Absolute | Typical


@dataclass(frozen=True)
class KnowledgeBase:
    """An ordered list of statements about one variable over one frame."""

    frame: Frame
    variable: str
    statements: tuple[Statement, ...]

    def __post_init__(self):
        if not self.statements:
            raise ValueError("a knowledge base needs at least one statement")
        for stmt in self.statements:
            if stmt.set.frame != self.frame:
                raise FrameMismatch(
                    "statement sets must be bound to the knowledge base's "
                    "frame")


_NAME = r"[A-Za-z0-9_]+"
_FRAME_LINE = re.compile(r"^frame\s*:\s*(?P<body>.*)$")
_STMT_LINE = re.compile(
    rf"^(?P<typ>typically\s+)?(?P<var>{_NAME})\s+is\s+"
    rf"\{{(?P<set>[^{{}}]*)\}}(?P<rest>.*)$")
_STRENGTH = re.compile(r"^\s+strength\s+(?P<num>\S+)\s*$")
_NUMBER = re.compile(r"^(\d+/\d+|\d+(\.\d+)?|\.\d+)$")


def _parse_set(frame: Frame, body: str, line: int, col: int) -> FocalSet:
    names = []
    if body.strip():
        for part in body.split(","):
            name = part.strip()
            if not re.fullmatch(_NAME, name):
                raise ParseError(f"bad atom name {name!r}", line=line, col=col)
            names.append(name)
    if not names:
        raise ParseError("a statement set must name at least one atom",
                         line=line, col=col)
    try:
        return frame.subset(names)
    except UnknownAtom as exc:
        raise UnknownAtom(exc.name, line=line) from None


def parse_kb(text: str) -> KnowledgeBase:
    """Parse knowledge-base text, reporting errors with line numbers."""
    frame: Frame | None = None
    variable: str | None = None
    statements: list[Statement] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.strip()
        if not stripped:
            continue
        indent = len(line) - len(line.lstrip()) + 1

        frame_match = _FRAME_LINE.match(stripped)
        if frame_match:
            if frame is not None:
                raise ParseError("duplicate frame declaration",
                                 line=lineno, col=indent)
            atoms = [part.strip() for part in
                     frame_match.group("body").split(",")]
            if not all(re.fullmatch(_NAME, a) for a in atoms):
                raise ParseError("frame atoms must be comma-separated names",
                                 line=lineno, col=indent)
            try:
                frame = Frame(atoms)
            except Exception as exc:
                raise ParseError(str(exc), line=lineno, col=indent) from None
            continue

        if frame is None:
            raise MissingFrame(
                "a frame declaration must precede all statements",
                line=lineno, col=indent)
        stmt = _STMT_LINE.match(stripped)
        if not stmt:
            raise ParseError(
                'expected "VAR is {...}" or "typically VAR is {...} '
                'strength N"', line=lineno, col=indent)
        name = stmt.group("var")
        if variable is None:
            variable = name
        elif name != variable:
            raise VariableMismatch(
                f"statements must use one variable; saw {name!r} after "
                f"{variable!r}", line=lineno,
                col=indent + stmt.start("var"))
        focal = _parse_set(frame, stmt.group("set"), lineno,
                           indent + stmt.start("set"))
        rest = stmt.group("rest")
        if stmt.group("typ"):
            strength_match = _STRENGTH.match(rest)
            if not strength_match:
                raise ParseError(
                    'a typical statement ends with "strength N"',
                    line=lineno, col=indent + stmt.start("rest"))
            token = strength_match.group("num")
            if not _NUMBER.match(token):
                raise ParseError(
                    f"bad strength {token!r}: use a decimal or p/q fraction",
                    line=lineno, col=indent + stmt.start("rest"))
            try:
                strength = Fraction(token)
            except ZeroDivisionError:
                raise ParseError(f"bad strength {token!r}: zero denominator",
                                 line=lineno,
                                 col=indent + stmt.start("rest")) from None
            if not 0 < strength < 1:
                hint = ("; write an absolute statement instead"
                        if strength == 1 else "")
                raise StrengthOutOfRange(
                    f"strength must be strictly between 0 and 1, got "
                    f"{strength}{hint}", line=lineno,
                    col=indent + stmt.start("rest"))
            statements.append(Typical(focal, strength))
        else:
            if rest.strip():
                raise ParseError(
                    f"unexpected trailing text {rest.strip()!r}",
                    line=lineno, col=indent + stmt.start("rest"))
            statements.append(Absolute(focal))
    if frame is None:
        raise MissingFrame("no frame declaration found")
    if not statements:
        raise ParseError("the knowledge base has no statements")
    return KnowledgeBase(frame, variable, tuple(statements))


def serialize_kb(kb: KnowledgeBase) -> str:
    """Canonical text for a knowledge base; parses back to an equal KB."""
    lines = ["frame: " + ", ".join(kb.frame.atoms)]
    for stmt in kb.statements:
        names = ", ".join(stmt.set.atoms)
        if isinstance(stmt, Absolute):
            lines.append(f"{kb.variable} is {{{names}}}")
        else:
            lines.append(f"typically {kb.variable} is {{{names}}} "
                         f"strength {stmt.strength}")
    return "\n".join(lines) + "\n"


def compile_statement(stmt: Statement, frame: Frame) -> BeliefStructure:
    """The belief structure a single statement stands for."""
    if isinstance(stmt, Absolute):
        return BeliefStructure(frame, [(stmt.set, ONE)])
    return BeliefStructure(frame, [(stmt.set, stmt.strength),
                                   (frame.full, ONE - stmt.strength)])


def infer(kb: KnowledgeBase,
          rule: CombinationRule = DEMPSTER) -> BeliefStructure:
    """Combine the compiled statements in knowledge-base order.

    Total conflict (two contradictory absolute statements under Dempster,
    for instance) is reported with the statement that triggered it.
    """
    result = compile_statement(kb.statements[0], kb.frame)
    for index, stmt in enumerate(kb.statements[1:], start=2):
        try:
            result = combine(result, compile_statement(stmt, kb.frame), rule)
        except TotalConflict:
            raise TotalConflict(
                f"total conflict (K = 1) while combining statement {index} "
                f"into the running result",
                statement_index=index) from None
    return result


def query(kb: KnowledgeBase, rule: CombinationRule,
          target: FocalSet) -> ProbabilityInterval:
    """The probability interval the knowledge base assigns to a set."""
    return infer(kb, rule).interval(target)


def typical_summary(kb: KnowledgeBase, rule: CombinationRule,
                    target: FocalSet) -> BeliefStructure:
    """Summarize an inference as "typically target", via weakening.

    Returns the two-focal structure whose strength on the target is the
    inferred belief in it; the full inference always flow-entails it.
    """
    return weaken_to(infer(kb, rule), target)
