"""
Pair states

The three values a column pair (w_i, w_{i+f}) of an enriched weight may take,
which are also the three table families of the weight recursions.
"""

from enum import Enum
from typing import Tuple

from src.genes import LetterClass


class PairState(str, Enum):
    BB = "bb"
    AB = "ab"
    BA = "ba"

    @property
    def bit(self) -> int:
        """Weight bit appended by this table: 1 for (b,b), 0 otherwise."""
        return 1 if self == PairState.BB else 0

    @property
    def pair(self) -> Tuple[LetterClass, LetterClass]:
        up, down = self.value
        return LetterClass(up), LetterClass(down)

    def swapped(self) -> "PairState":
        if self == PairState.AB:
            return PairState.BA
        if self == PairState.BA:
            return PairState.AB
        return self

    @classmethod
    def of_pair(cls, up: LetterClass, down: LetterClass) -> "PairState":
        return cls(up.value + down.value)

    def __str__(self) -> str:
        return f"({self.value[0]},{self.value[1]})"


# virtual state of the empty prefix that seeds fragment recursions
START = "start"

ALL_STATES = (PairState.BB, PairState.AB, PairState.BA)
