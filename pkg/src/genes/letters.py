"""
Gene letters and the letter-class map.
"""

from enum import Enum


class Letter(str, Enum):
    """A nucleotide of a gene."""
    A = "A"
    B = "B"
    AB = "AB"
    O = "O"

    @property
    def letter_class(self) -> "LetterClass":
        """a for A and AB, b for B and O."""
        return LetterClass.a if self in (Letter.A, Letter.AB) else LetterClass.b

    def similar(self, other: "Letter") -> bool:
        """X ~ Y iff both letters have the same class."""
        return self.letter_class == other.letter_class

    def flipped(self) -> "Letter":
        """Exchange A and B; AB and O are fixed."""
        if self == Letter.A:
            return Letter.B
        if self == Letter.B:
            return Letter.A
        return self

    @property
    def a_count(self) -> int:
        return 1 if self in (Letter.A, Letter.AB) else 0

    @property
    def b_count(self) -> int:
        return 1 if self in (Letter.B, Letter.AB) else 0

    def __str__(self) -> str:
        return self.value


class LetterClass(str, Enum):
    """Values of enriched weights."""
    a = "a"
    b = "b"

    def __str__(self) -> str:
        return self.value


def parse_letter(token: str) -> Letter:
    token = token.strip().upper()
    # the digit zero is a common stand-in for O
    if token == "0":
        token = "O"
    return Letter(token)
