"""Width and bridge arithmetic for Morse-embedded knots.

An embedding is reduced to its bottom-to-top sequence of critical events,
minima ``m`` and maxima ``M``; heights are quotiented away because width and
bridge number depend only on the event order.  Between consecutive events the
level sphere meets the knot in ``2*(minima so far) - 2*(maxima so far)``
points, and the width of the embedding is the sum of these level widths.

The same number can be computed from the thick/thin structure alone: if the
thick levels have widths a_1..a_m and the thin levels b_1..b_{m-1}, then

    width = (sum a_i**2 - sum b_i**2) / 2

and both routes are exposed so either can check the other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

MIN = "m"
MAX = "M"


@dataclass(frozen=True)
class MorseEmbedding:
    """Critical events of a knot, bottom to top, as a string over ``mM``.

    Valid sequences start with a minimum, end with a maximum, balance the two
    event counts, and keep every intermediate level width positive.
    """

    events: str

    def __post_init__(self):
        s = self.events
        if not s:
            raise DomainError("a knot has at least two critical events")
        bad = set(s) - {MIN, MAX}
        if bad:
            raise DomainError(f"events must be over '{MIN}{MAX}', got {sorted(bad)}")
        if s[0] != MIN:
            raise DomainError("the lowest critical event must be a minimum")
        if s[-1] != MAX:
            raise DomainError("the highest critical event must be a maximum")
        if s.count(MIN) != s.count(MAX):
            raise DomainError("minima and maxima counts differ")
        w = 0
        for i, ev in enumerate(s[:-1]):
            w += 2 if ev == MIN else -2
            if w <= 0:
                raise DomainError(f"level width {w} after event {i + 1} is not positive")

    def __len__(self) -> int:
        return len(self.events)

    def level_widths(self) -> tuple[int, ...]:
        """Widths of the level spheres between consecutive events."""
        widths = []
        w = 0
        for ev in self.events[:-1]:
            w += 2 if ev == MIN else -2
            widths.append(w)
        return tuple(widths)

    def width(self) -> int:
        return sum(self.level_widths())

    def bridge_number(self) -> int:
        """Number of maxima."""
        return self.events.count(MAX)

    def thin_thick(self) -> "ThinThickTuple":
        """Extract the thick/thin level widths.

        A level is thick when it sits between a minimum and a maximum, thin
        when between a maximum and a minimum; a bridge position has a single
        thick level and no thin ones.
        """
        widths = self.level_widths()
        thick, thin = [], []
        s = self.events
        for i in range(len(s) - 1):
            if s[i] == MIN and s[i + 1] == MAX:
                thick.append(widths[i])
            elif s[i] == MAX and s[i + 1] == MIN:
                thin.append(widths[i])
        return ThinThickTuple(tuple(thick), tuple(thin))


@dataclass(frozen=True)
class ThinThickTuple:
    """Alternating thick/thin level widths, ordered bottom to top."""

    thick: tuple[int, ...]
    thin: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "thick", tuple(self.thick))
        object.__setattr__(self, "thin", tuple(self.thin))
        if not self.thick:
            raise DomainError("a tuple needs at least one thick level")
        if len(self.thin) != len(self.thick) - 1:
            raise DomainError(
                f"{len(self.thick)} thick levels require {len(self.thick) - 1} "
                f"thin levels, got {len(self.thin)}"
            )
        for label, values in (("thick", self.thick), ("thin", self.thin)):
            for v in values:
                if v < 2 or v % 2:
                    raise DomainError(f"{label} width {v} is not an even integer >= 2")
        for i, a in enumerate(self.thick):
            below = self.thin[i - 1] if i > 0 else None
            above = self.thin[i] if i < len(self.thin) else None
            for b in (below, above):
                if b is not None and a < b + 2:
                    raise DomainError(
                        f"thick width {a} does not dominate adjacent thin width {b}"
                    )

    def interleaved(self) -> tuple[int, ...]:
        """The tuple (a_1, b_1, a_2, ..., b_{m-1}, a_m)."""
        out = []
        for i, a in enumerate(self.thick):
            out.append(a)
            if i < len(self.thin):
                out.append(self.thin[i])
        return tuple(out)

    def to_text(self) -> str:
        """Serialize as ``a1,b1,a2,...,am`` with roles read off by alternation."""
        return ",".join(str(v) for v in self.interleaved())

    @classmethod
    def from_text(cls, text: str) -> "ThinThickTuple":
        try:
            values = [int(tok) for tok in text.strip().split(",") if tok.strip()]
        except ValueError as exc:
            raise DomainError(f"bad tuple text {text!r}: {exc}") from None
        if len(values) % 2 == 0:
            raise DomainError("a thick/thin tuple interleaves to an odd length")
        return cls(tuple(values[0::2]), tuple(values[1::2]))


def width_from_tuple(t: ThinThickTuple) -> int:
    """Width computed from thick/thin widths alone."""
    return (sum(a * a for a in t.thick) - sum(b * b for b in t.thin)) // 2


def thick_lower_bound(a: int) -> int:
    """Lower bound a**2 / 2 on the width of any embedding with a thick level of width ``a``."""
    if a < 2 or a % 2:
        raise DomainError(f"thick level width must be an even integer >= 2, got {a}")
    return a * a // 2


def weak_reduction_move(e: MorseEmbedding, index: int) -> MorseEmbedding:
    """Slide a maximum below an adjacent minimum, reducing width by exactly 4.

    ``index`` is the 0-based position of the minimum; events ``index`` and
    ``index + 1`` must be (min, max), and the swap must leave every level
    width at least 2.  Bridge number is unchanged.
    """
    s = e.events
    if not 0 <= index < len(s) - 1:
        raise DomainError(f"event index {index} out of range")
    if s[index] != MIN or s[index + 1] != MAX:
        raise DomainError(
            f"events at {index}, {index + 1} are ({s[index]}, {s[index + 1]}), "
            "the move needs (m, M)"
        )
    swapped = s[:index] + MAX + MIN + s[index + 2:]
    try:
        return MorseEmbedding(swapped)
    except DomainError as exc:
        raise DomainError(f"swap at {index} gives an invalid embedding: {exc}") from None


def punctures_from_chi(neg_chi: int, strict: bool = False) -> int:
    """Punctures of a sphere from its negated Euler characteristic.

    A p-punctured sphere has chi = 2 - p, so ``-chi = c`` gives ``p = c + 2``.
    With ``strict=True`` the bound is read as ``-chi > c`` and the smallest
    even puncture count consistent with it is returned.
    """
    if neg_chi < -1:
        raise DomainError(f"-chi of a punctured sphere is at least -1, got {neg_chi}")
    if not strict:
        return neg_chi + 2
    p = neg_chi + 3
    return p if p % 2 == 0 else p + 1
