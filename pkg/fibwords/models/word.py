"""Immutable binary words over the alphabet {0, 1}."""

from dataclasses import dataclass
from typing import Iterator, Union, overload

ALPHABET = "01"


@dataclass(frozen=True, slots=True)
class Word:
    """A finite sequence of 0/1 symbols.

    Symbols are stored as an ASCII string, one character per symbol, so
    concatenation, powers, slicing and comparison run at C speed.

    Attributes:
        symbols: The word spelled with the characters "0" and "1".
    """

    symbols: str = ""

    def __post_init__(self) -> None:
        if not isinstance(self.symbols, str):
            raise TypeError(f"symbols must be a str, got {type(self.symbols).__name__}")
        if self.symbols.strip(ALPHABET):
            bad = next(ch for ch in self.symbols if ch not in ALPHABET)
            raise ValueError(f"symbol {bad!r} is not in the alphabet {{0, 1}}")

    @classmethod
    def from_string(cls, text: str) -> "Word":
        """Build a word from text, ignoring spaces used for grouping."""
        return cls(text.replace(" ", ""))

    @property
    def length(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return self.symbols

    def __iter__(self) -> Iterator[int]:
        return (1 if ch == "1" else 0 for ch in self.symbols)

    @overload
    def __getitem__(self, index: int) -> int: ...

    @overload
    def __getitem__(self, index: slice) -> "Word": ...

    def __getitem__(self, index: Union[int, slice]) -> Union[int, "Word"]:
        if isinstance(index, slice):
            return Word(self.symbols[index])
        return 1 if self.symbols[index] == "1" else 0

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.symbols + other.symbols)

    def __mul__(self, power: int) -> "Word":
        if not isinstance(power, int) or power < 0:
            raise ValueError(f"word powers must be nonnegative integers, got {power!r}")
        return Word(self.symbols * power)

    def reverse(self) -> "Word":
        return Word(self.symbols[::-1])

    def is_palindrome(self) -> bool:
        return self.symbols == self.symbols[::-1]

    def count_ones(self) -> int:
        return self.symbols.count("1")

    def suffix(self, length: int) -> "Word":
        """Last ``length`` symbols (the empty word for length 0)."""
        if length <= 0:
            return Word()
        return Word(self.symbols[-length:])

    def prefix(self, length: int) -> "Word":
        return Word(self.symbols[: max(length, 0)])
