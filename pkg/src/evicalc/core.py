"""Frames, focal sets, and belief structures with exact rational masses.

A :class:`Frame` is an ordered finite universe of atoms.  A :class:`FocalSet`
is a subset of one frame, stored as a bitmask over atom indices.  A
:class:`BeliefStructure` maps focal sets to strictly positive rational masses
summing to exactly 1.  All arithmetic uses :class:`fractions.Fraction`, so
every belief/plausibility query is exact and every invariant is checked with
equality, never a tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import (
    EmptyFocalInNormal,
    FrameMismatch,
    FrameTooLarge,
    MassSumNotOne,
    NegativeMass,
    SubnormalInput,
    UnknownAtom,
)

MAX_FRAME_ATOMS = 24
MAX_TABLE_ATOMS = 20

ZERO = Fraction(0)
ONE = Fraction(1)

MassLike = Fraction | int | str | float


def to_mass(value: MassLike) -> Fraction:
    """Convert a mass-like value to an exact nonnegative Fraction.

    Strings may be fractions ("3/5") or decimal literals ("0.99", parsed
    exactly to 99/100).  Floats go through their shortest decimal repr, so a
    literal like 0.99 also becomes exactly 99/100.
    """
    if isinstance(value, Fraction):
        mass = value
    elif isinstance(value, int):
        mass = Fraction(value)
    elif isinstance(value, float):
        mass = Fraction(repr(value))
    elif isinstance(value, str):
        try:
            mass = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse mass {value!r}") from exc
    else:
        raise TypeError(f"cannot interpret {type(value).__name__} as a mass")
    if mass < 0:
        raise NegativeMass(f"mass {mass} is negative")
    return mass


def mass_str(value: Fraction) -> str:
    """Canonical reduced-fraction rendering ("3/5", "1", "0")."""
    return str(value)


def decimal6(value: Fraction) -> str:
    """Render a nonnegative rational as a decimal rounded to 6 places."""
    scaled = round(value * 10**6)
    whole, frac = divmod(scaled, 10**6)
    return f"{whole}.{frac:06d}"


class Frame:
    """An ordered universe of distinct atom names.

    The atom order is canonical: atom i owns bit i of every focal-set
    bitmask, which makes serialization and display byte-stable.
    """

    __slots__ = ("atoms", "_index")

    def __init__(self, atoms: Iterable[str]):
        names = tuple(atoms)
        if not names:
            raise ValueError("frame needs at least one atom")
        if len(names) > MAX_FRAME_ATOMS:
            raise FrameTooLarge(
                f"frame has {len(names)} atoms; the cap is {MAX_FRAME_ATOMS}")
        index: dict[str, int] = {}
        for i, name in enumerate(names):
            if not isinstance(name, str) or not name:
                raise ValueError("atom names must be non-empty strings")
            if name in index:
                raise ValueError(f"duplicate atom {name!r}")
            index[name] = i
        object.__setattr__(self, "atoms", names)
        object.__setattr__(self, "_index", index)

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("Frame is immutable")

    def __len__(self) -> int:
        return len(self.atoms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Frame) and self.atoms == other.atoms

    def __hash__(self) -> int:
        return hash(self.atoms)

    def __repr__(self) -> str:
        return f"Frame({list(self.atoms)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownAtom(name) from None

    def subset(self, names: Iterable[str]) -> "FocalSet":
        bits = 0
        for name in names:
            bits |= 1 << self.index(name)
        return FocalSet(self, bits)

    def from_bits(self, bits: int) -> "FocalSet":
        return FocalSet(self, bits)

    @property
    def full(self) -> "FocalSet":
        return FocalSet(self, (1 << len(self.atoms)) - 1)

    @property
    def empty(self) -> "FocalSet":
        return FocalSet(self, 0)

    def all_subsets(self) -> Iterator["FocalSet"]:
        """All 2**n subsets in bitmask order (n capped for table work)."""
        if len(self.atoms) > MAX_TABLE_ATOMS:
            raise FrameTooLarge(
                f"cannot enumerate subsets of a {len(self.atoms)}-atom frame")
        for bits in range(1 << len(self.atoms)):
            yield FocalSet(self, bits)


class FocalSet:
    """A subset of one frame, as a bitmask.  Immutable and hashable."""

    __slots__ = ("frame", "bits")

    def __init__(self, frame: Frame, bits: int):
        if bits < 0 or bits >> len(frame):
            raise ValueError(f"bitmask {bits:#x} out of range for {frame!r}")
        object.__setattr__(self, "frame", frame)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("FocalSet is immutable")

    def _check(self, other: "FocalSet") -> None:
        if not isinstance(other, FocalSet):
            raise TypeError(f"expected FocalSet, got {type(other).__name__}")
        if other.frame != self.frame:
            raise FrameMismatch(
                f"sets live on different frames: {self.frame!r} vs {other.frame!r}")

    @property
    def atoms(self) -> tuple[str, ...]:
        return tuple(a for i, a in enumerate(self.frame.atoms)
                     if self.bits >> i & 1)

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[str]:
        return iter(self.atoms)

    def __contains__(self, name: str) -> bool:
        return bool(self.bits >> self.frame.index(name) & 1)

    def __and__(self, other: "FocalSet") -> "FocalSet":
        self._check(other)
        return FocalSet(self.frame, self.bits & other.bits)

    def __or__(self, other: "FocalSet") -> "FocalSet":
        self._check(other)
        return FocalSet(self.frame, self.bits | other.bits)

    def __invert__(self) -> "FocalSet":
        return FocalSet(self.frame, self.bits ^ self.frame.full.bits)

    def issubset(self, other: "FocalSet") -> bool:
        self._check(other)
        return self.bits & other.bits == self.bits

    def __le__(self, other: "FocalSet") -> bool:
        return self.issubset(other)

    def intersects(self, other: "FocalSet") -> bool:
        self._check(other)
        return bool(self.bits & other.bits)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FocalSet)
                and self.frame == other.frame and self.bits == other.bits)

    def __hash__(self) -> int:
        return hash((self.frame, self.bits))

    def label(self) -> str:
        """Human-readable rendering, e.g. "{a, b}"; "{}" for the empty set."""
        return "{" + ", ".join(self.atoms) + "}"

    def __repr__(self) -> str:
        return f"FocalSet({self.label()})"


class ProbabilityInterval:
    """The exact [belief, plausibility] bounds on the probability of a set."""

    __slots__ = ("lower", "upper")

    def __init__(self, lower: Fraction, upper: Fraction):
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    def __setattr__(self, name, value):
        raise AttributeError("ProbabilityInterval is immutable")

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def contains(self, other: "ProbabilityInterval") -> bool:
        """Closed-interval containment: other fits inside self."""
        return self.lower <= other.lower and other.upper <= self.upper

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ProbabilityInterval)
                and self.lower == other.lower and self.upper == other.upper)

    def __hash__(self) -> int:
        return hash((self.lower, self.upper))

    def __iter__(self) -> Iterator[Fraction]:
        return iter((self.lower, self.upper))

    def __repr__(self) -> str:
        return f"ProbabilityInterval({self.lower}, {self.upper})"


class BeliefStructure:
    """A map from distinct focal sets to positive masses summing to 1.

    Duplicate sets in the input are merged by mass addition and zero-mass
    entries are dropped, so combination rules can feed their raw output
    straight into the constructor.  The empty set may carry mass only when
    ``subnormal=True`` (the unnormalized combination rule produces such
    structures); every other constructor path rejects it.

    Instances are immutable; all queries are pure functions.
    """

    __slots__ = ("frame", "_masses")

    def __init__(self, frame: Frame,
                 assignments: Iterable[tuple[FocalSet, MassLike]] |
                 Mapping[FocalSet, MassLike],
                 *, subnormal: bool = False):
        if isinstance(assignments, Mapping):
            assignments = assignments.items()
        merged: dict[int, Fraction] = {}
        for focal, raw in assignments:
            if not isinstance(focal, FocalSet):
                raise TypeError(
                    f"expected FocalSet key, got {type(focal).__name__}")
            if focal.frame != frame:
                raise FrameMismatch(
                    f"focal set {focal.label()} is bound to a different frame")
            mass = to_mass(raw)
            if mass == 0:
                continue
            merged[focal.bits] = merged.get(focal.bits, ZERO) + mass
        if 0 in merged and not subnormal:
            raise EmptyFocalInNormal(
                "the empty set may carry mass only in a subnormal structure")
        total = sum(merged.values(), ZERO)
        if total != 1:
            raise MassSumNotOne(f"masses sum to {total}, not 1")
        object.__setattr__(self, "frame", frame)
        object.__setattr__(
            self, "_masses",
            {FocalSet(frame, bits): merged[bits] for bits in sorted(merged)})

    def __setattr__(self, name, value):
        raise AttributeError("BeliefStructure is immutable")

    @classmethod
    def vacuous(cls, frame: Frame) -> "BeliefStructure":
        """Total ignorance: all mass on the full set."""
        return cls(frame, [(frame.full, ONE)])

    @property
    def is_subnormal(self) -> bool:
        return self.frame.empty in self._masses

    def mass(self, focal: FocalSet) -> Fraction:
        self._check(focal)
        return self._masses.get(focal, ZERO)

    def items(self) -> Iterator[tuple[FocalSet, Fraction]]:
        """Focal elements with their masses, in bitmask order."""
        return iter(tuple(self._masses.items()))

    def focal_sets(self) -> tuple[FocalSet, ...]:
        return tuple(self._masses)

    def __len__(self) -> int:
        return len(self._masses)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, BeliefStructure)
                and self.frame == other.frame
                and self._masses == other._masses)

    __hash__ = None  # mutable-looking container API; not hashable

    def __repr__(self) -> str:
        body = ", ".join(f"{f.label()}: {m}" for f, m in self._masses.items())
        return f"BeliefStructure({{{body}}})"

    def _check(self, focal: FocalSet) -> None:
        if not isinstance(focal, FocalSet):
            raise TypeError(f"expected FocalSet, got {type(focal).__name__}")
        if focal.frame != self.frame:
            raise FrameMismatch(
                f"query set {focal.label()} is bound to a different frame")

    def bel(self, focal: FocalSet) -> Fraction:
        """Total mass of non-empty focal elements contained in the set.

        Empty-set mass is never counted, so belief stays a lower bound and
        bel <= pl holds focal-wise even for subnormal structures.
        """
        self._check(focal)
        bits = focal.bits
        return sum((m for f, m in self._masses.items()
                    if f.bits and f.bits & bits == f.bits), ZERO)

    def pl(self, focal: FocalSet) -> Fraction:
        """Total mass of focal elements that intersect the set."""
        self._check(focal)
        bits = focal.bits
        return sum((m for f, m in self._masses.items() if f.bits & bits), ZERO)

    def interval(self, focal: FocalSet) -> ProbabilityInterval:
        """The exact probability bounds [bel, pl] for the set."""
        return ProbabilityInterval(self.bel(focal), self.pl(focal))

    def uncertainty(self, focal: FocalSet) -> Fraction:
        """Width of the probability interval, pl - bel.

        Zero for every set exactly when the structure is Bayesian.  Undefined
        for subnormal structures.
        """
        if self.is_subnormal:
            raise SubnormalInput(
                "uncertainty range is undefined for subnormal structures")
        return self.pl(focal) - self.bel(focal)

    def is_bayesian(self) -> bool:
        """True iff every focal element is a singleton."""
        return all(len(f) == 1 for f in self._masses)

    def bel_table(self) -> list[Fraction]:
        """Belief for every subset, indexed by bitmask.

        Computed with the subset-sum (zeta) transform over the lattice of
        bitmasks in O(n * 2**n) additions; equals the per-subset bel() on
        every index.
        """
        n = len(self.frame)
        if n > MAX_TABLE_ATOMS:
            raise FrameTooLarge(
                f"bel_table needs at most {MAX_TABLE_ATOMS} atoms, got {n}")
        table = [ZERO] * (1 << n)
        for f, m in self._masses.items():
            if f.bits:
                table[f.bits] = m
        for i in range(n):
            bit = 1 << i
            for mask in range(1 << n):
                if mask & bit:
                    low = table[mask ^ bit]
                    if low:
                        table[mask] += low
        return table

    def nonempty_total(self) -> Fraction:
        """Total mass on non-empty focal elements (1 unless subnormal)."""
        return ONE - self._masses.get(self.frame.empty, ZERO)
