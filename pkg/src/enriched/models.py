"""
Enriched weight data types

Integer sequences are stored over one period (2f entries) and read
periodically through `at`. Enriched weights hold 2f letters of {a, b}; the
column pair (w_i, w_{i+f}) is what the recursions track.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union

from src.core.exceptions import InvalidParameters
from src.genes import LetterClass
from src.weights import PairState


class PeriodicIntSequence(tuple):
    """sigma_0, ..., sigma_{2f-1}; entries may leave [0, p] under a general mutation."""

    def at(self, i: int) -> int:
        return self[i % len(self)]

    @property
    def f(self) -> int:
        return len(self) // 2


class NumericalMask(tuple):
    """chi_0, ..., chi_{2f-1}."""

    def at(self, i: int) -> int:
        return self[i % len(self)]


FragmentaryEnrichedWeight = Tuple[Tuple[LetterClass, LetterClass], ...]


@dataclass(frozen=True, order=True)
class EnrichedWeight:
    letters: Tuple[LetterClass, ...]

    def __post_init__(self) -> None:
        if not self.letters or len(self.letters) % 2:
            raise InvalidParameters(
                "an enriched weight has an even, positive number of letters",
                {"length": len(self.letters)},
            )

    @property
    def f(self) -> int:
        return len(self.letters) // 2

    def at(self, i: int) -> LetterClass:
        return self.letters[i % len(self.letters)]

    def column(self, i: int) -> Tuple[LetterClass, LetterClass]:
        return self.at(i), self.at(i + self.f)

    def state(self, i: int) -> PairState:
        """Column i as a pair state; raises ValueError on (a, a)."""
        return PairState.of_pair(*self.column(i))

    def has_aa_column(self) -> bool:
        return any(self.column(i) == (LetterClass.a, LetterClass.a) for i in range(self.f))

    @classmethod
    def of_states(cls, states: Sequence[PairState]) -> "EnrichedWeight":
        """Build from the f column states (w_i, w_{i+f})."""
        top = tuple(s.pair[0] for s in states)
        bottom = tuple(s.pair[1] for s in states)
        return cls(top + bottom)

    @classmethod
    def of_text(cls, text: Union[str, Iterable[str]]) -> "EnrichedWeight":
        """'abb/bba' (top/bottom) or a plain string of 2f letters."""
        if isinstance(text, str):
            text = text.replace("/", "").replace(",", "").replace(" ", "")
        return cls(tuple(LetterClass(c) for c in text))

    def __str__(self) -> str:
        top = "".join(c.value for c in self.letters[: self.f])
        bottom = "".join(c.value for c in self.letters[self.f:])
        return f"{top}/{bottom}"
