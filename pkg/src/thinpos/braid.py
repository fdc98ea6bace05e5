"""Words in the braid group and the permutations they induce.

A word on ``m`` strands is a sequence of nonzero letters: letter ``i > 0`` is
the Artin generator crossing the strands at positions i, i+1 with the left
strand passing over, and ``-i`` is its inverse.  Words are read bottom to top:
the first letter is the lowest crossing, and ``compose(u, v)`` stacks ``v``
above ``u``.  Consequently ``permutation(compose(u, v))`` equals
``permutation(v)`` applied after ``permutation(u)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class BraidWord:
    """A braid word: strand count plus a tuple of signed generator indices."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise DomainError(f"strand count must be positive, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for pos, letter in enumerate(self.letters):
            if not isinstance(letter, int) or letter == 0 or abs(letter) > self.strands - 1:
                raise DomainError(
                    f"letter {letter!r} at index {pos} is not a generator of the "
                    f"braid group on {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands, ())

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def permutation(self) -> tuple[int, ...]:
        """Bottom-to-top strand permutation, 1-indexed.

        Entry ``p[i-1]`` is the top position reached by the strand entering at
        bottom position ``i``.  Crossing signs are ignored.
        """
        occupant = list(range(self.strands + 1))  # occupant[p] = strand now at position p
        for letter in self.letters:
            g = abs(letter)
            occupant[g], occupant[g + 1] = occupant[g + 1], occupant[g]
        image = [0] * (self.strands + 1)
        for p in range(1, self.strands + 1):
            image[occupant[p]] = p
        return tuple(image[1:])

    def free_reduced(self) -> "BraidWord":
        """Cancel adjacent inverse pairs until none remain.

        Never applied implicitly by any other operation: diagram-building code
        keeps every crossing.
        """
        stack: list[int] = []
        for letter in self.letters:
            if stack and stack[-1] == -letter:
                stack.pop()
            else:
                stack.append(letter)
        return BraidWord(self.strands, tuple(stack))

    def to_text(self) -> str:
        """Serialize as comma-separated signed integers, e.g. ``1,1,1,-2,-2``."""
        return ",".join(str(x) for x in self.letters)

    @classmethod
    def from_text(cls, text: str, strands: int | None = None) -> "BraidWord":
        text = text.strip()
        letters = tuple(int(tok) for tok in text.split(",")) if text else ()
        if strands is None:
            strands = max((abs(x) for x in letters), default=0) + 1
        return cls(strands, letters)


def compose(w1: BraidWord, w2: BraidWord) -> BraidWord:
    """Concatenate two words on the same strand count (w2 stacked above w1)."""
    if w1.strands != w2.strands:
        raise DomainError(
            f"cannot compose words on {w1.strands} and {w2.strands} strands"
        )
    return BraidWord(w1.strands, w1.letters + w2.letters)


def twist_region(strands: int, i: int, count: int) -> BraidWord:
    """The twist region sigma_i**count: |count| equal letters with count's sign."""
    if not 1 <= i <= strands - 1:
        raise DomainError(
            f"strand pair index {i} out of range for {strands} strands"
        )
    letter = i if count >= 0 else -i
    return BraidWord(strands, (letter,) * abs(count))


def permutation(w: BraidWord) -> tuple[int, ...]:
    """Induced permutation of ``{1..m}``; see :meth:`BraidWord.permutation`."""
    return w.permutation()
