#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Words of the free semigroup over a k-letter alphabet, pairs of words, and words
of the free product generated by the tokens X_λ and Y_λ.

All values are immutable. Enumeration order is part of the contract:
spheres are lexicographic, balls and free balls are shortlex, and among tokens
every X_λ sorts before every Y_λ.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple, Union, overload

from .config import enumeration_cap
from .errors import AlphabetMismatchError, EnumerationCapError

logger = logging.getLogger(__name__)

DIGITS = "0123456789abcdef"

X_AXIS = 0
Y_AXIS = 1
AXIS_NAMES = "xy"


@dataclass(frozen=True)
class Alphabet:
    """A finite alphabet whose letters are 0..size-1."""

    size: int

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise ValueError(f"alphabet size must be a positive integer, got {self.size!r}")

    @property
    def letters(self) -> range:
        return range(self.size)


AlphabetLike = Union[Alphabet, int]


def alphabet_size(k: AlphabetLike) -> int:
    return Alphabet(k).size if isinstance(k, int) else k.size


def check_cap(count: int, what: str = "items", cap: Optional[int] = None) -> None:
    """Raise EnumerationCapError if count exceeds the cap."""
    limit = enumeration_cap() if cap is None else cap
    if count > limit:
        raise EnumerationCapError(count, limit, what)


@dataclass(frozen=True)
class Word:
    """An element of Λ*: a finite letter sequence over an alphabet of size k."""

    k: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"alphabet size must be positive, got {self.k}")
        letters = tuple(self.letters)
        for letter in letters:
            if not 0 <= letter < self.k:
                raise ValueError(f"letter {letter} out of range for k={self.k}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def _make(cls, k: int, letters: Tuple[int, ...]) -> "Word":
        # Unchecked constructor for hot loops; callers guarantee validity.
        word = object.__new__(cls)
        object.__setattr__(word, "k", k)
        object.__setattr__(word, "letters", letters)
        return word

    @classmethod
    def empty(cls, k: AlphabetLike) -> "Word":
        return cls._make(alphabet_size(k), ())

    @classmethod
    def parse(cls, k: AlphabetLike, text: str) -> "Word":
        """Parse a digit string; '' and '-' denote the empty word."""
        size = alphabet_size(k)
        if text in ("", "-"):
            return cls.empty(size)
        try:
            letters = tuple(DIGITS.index(ch) for ch in text.lower())
        except ValueError:
            raise ValueError(f"invalid letter in word {text!r}")
        return cls(size, letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return concat_words(self, other)

    def __lt__(self, other: "Word") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return format_word(self, empty="-")

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Shortlex key."""
        return (len(self.letters), self.letters)

    def child(self, letter: int) -> "Word":
        if not 0 <= letter < self.k:
            raise ValueError(f"letter {letter} out of range for k={self.k}")
        return Word._make(self.k, self.letters + (letter,))

    def parent(self) -> "Word":
        if not self.letters:
            raise ValueError("the empty word has no parent")
        return Word._make(self.k, self.letters[:-1])

    @property
    def last_letter(self) -> Optional[int]:
        return self.letters[-1] if self.letters else None

    def startswith(self, prefix: "Word") -> bool:
        return self.letters[:len(prefix.letters)] == prefix.letters

    @property
    def key(self) -> int:
        """Dense packed key: the index of this word in shortlex order."""
        return shortlex_index(self)


def format_word(w: Word, empty: str = "") -> str:
    if not w.letters:
        return empty
    return "".join(DIGITS[letter] for letter in w.letters)


@dataclass(frozen=True)
class PairWord:
    """An element (w1, w2) of Γ = Λ* ⊕ Λ*."""

    first: Word
    second: Word

    def __post_init__(self):
        if self.first.k != self.second.k:
            raise AlphabetMismatchError(self.first.k, self.second.k)

    @classmethod
    def identity(cls, k: AlphabetLike) -> "PairWord":
        empty = Word.empty(k)
        return cls(empty, empty)

    @classmethod
    def parse(cls, k: AlphabetLike, text: str) -> "PairWord":
        if "," not in text:
            raise ValueError(f"pair word must be written as <w1>,<w2>, got {text!r}")
        left, right = text.split(",", 1)
        return cls(Word.parse(k, left), Word.parse(k, right))

    @property
    def k(self) -> int:
        return self.first.k

    @property
    def level(self) -> Tuple[int, int]:
        return (len(self.first), len(self.second))

    def sort_key(self) -> Tuple[int, int, Tuple[int, ...], Tuple[int, ...]]:
        """Level-major canonical key: (|w1|, |w2|, w1, w2)."""
        return (len(self.first.letters), len(self.second.letters),
                self.first.letters, self.second.letters)

    def __lt__(self, other: "PairWord") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return f"{format_word(self.first, '-')},{format_word(self.second, '-')}"


@dataclass(frozen=True)
class FreeWord:
    """A word of Γ̃ = Λ* ∗ Λ*, stored as (axis, letter) tokens; axis 0 is X, 1 is Y."""

    k: int
    tokens: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"alphabet size must be positive, got {self.k}")
        tokens = tuple((int(axis), int(letter)) for axis, letter in self.tokens)
        for axis, letter in tokens:
            if axis not in (X_AXIS, Y_AXIS) or not 0 <= letter < self.k:
                raise ValueError(f"invalid generator ({axis}, {letter}) for k={self.k}")
        object.__setattr__(self, "tokens", tokens)

    @classmethod
    def _make(cls, k: int, tokens: Tuple[Tuple[int, int], ...]) -> "FreeWord":
        word = object.__new__(cls)
        object.__setattr__(word, "k", k)
        object.__setattr__(word, "tokens", tokens)
        return word

    @classmethod
    def empty(cls, k: AlphabetLike) -> "FreeWord":
        return cls._make(alphabet_size(k), ())

    @classmethod
    def x(cls, k: AlphabetLike, letter: int) -> "FreeWord":
        return cls(alphabet_size(k), ((X_AXIS, letter),))

    @classmethod
    def y(cls, k: AlphabetLike, letter: int) -> "FreeWord":
        return cls(alphabet_size(k), ((Y_AXIS, letter),))

    @classmethod
    def parse(cls, k: AlphabetLike, text: str) -> "FreeWord":
        """Parse dot-joined tokens such as 'x0.y1'; '' is the identity."""
        size = alphabet_size(k)
        if text == "":
            return cls.empty(size)
        tokens = []
        for part in text.split("."):
            if len(part) < 2 or part[0] not in AXIS_NAMES:
                raise ValueError(f"invalid generator token {part!r}")
            try:
                letter = int(part[1:])
            except ValueError:
                raise ValueError(f"invalid generator token {part!r}")
            tokens.append((AXIS_NAMES.index(part[0]), letter))
        return cls(size, tuple(tokens))

    def __len__(self) -> int:
        return len(self.tokens)

    def __add__(self, other: "FreeWord") -> "FreeWord":
        if self.k != other.k:
            raise AlphabetMismatchError(self.k, other.k)
        return FreeWord._make(self.k, self.tokens + other.tokens)

    def __lt__(self, other: "FreeWord") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return ".".join(f"{AXIS_NAMES[axis]}{letter}" for axis, letter in self.tokens)

    def sort_key(self) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
        return (len(self.tokens), self.tokens)

    def append(self, axis: int, letter: int) -> "FreeWord":
        return FreeWord._make(self.k, self.tokens + ((axis, letter),))

    def parent(self) -> "FreeWord":
        if not self.tokens:
            raise ValueError("the identity has no parent")
        return FreeWord._make(self.k, self.tokens[:-1])

    @property
    def last_token(self) -> Optional[Tuple[int, int]]:
        return self.tokens[-1] if self.tokens else None

    @property
    def level(self) -> Tuple[int, int]:
        n = sum(1 for axis, _ in self.tokens if axis == X_AXIS)
        return (n, len(self.tokens) - n)


def generators(k: AlphabetLike) -> List[Tuple[int, int]]:
    """The 2k generators in canonical order: X_0..X_{k-1}, Y_0..Y_{k-1}."""
    size = alphabet_size(k)
    return [(axis, letter) for axis in (X_AXIS, Y_AXIS) for letter in range(size)]


def concat_words(w: Word, u: Word) -> Word:
    if w.k != u.k:
        raise AlphabetMismatchError(w.k, u.k)
    return Word._make(w.k, w.letters + u.letters)


@overload
def is_descendent(wp: Word, w: Word) -> Optional[Word]: ...


@overload
def is_descendent(wp: PairWord, w: PairWord) -> Optional[PairWord]: ...


def is_descendent(wp, w):
    """Return t with wp = w·t when w is a prefix of wp, otherwise None.

    Extended componentwise to PairWord.
    """
    if isinstance(wp, PairWord) and isinstance(w, PairWord):
        first = is_descendent(wp.first, w.first)
        if first is None:
            return None
        second = is_descendent(wp.second, w.second)
        if second is None:
            return None
        return PairWord(first, second)
    if wp.k != w.k:
        raise AlphabetMismatchError(wp.k, w.k)
    n = len(w.letters)
    if wp.letters[:n] != w.letters:
        return None
    return Word._make(wp.k, wp.letters[n:])


def sphere_size(k: AlphabetLike, r: int) -> int:
    return alphabet_size(k) ** r


def ball_size(k: AlphabetLike, r: int) -> int:
    """|B_r(Λ*)| = 1 + k + ... + k^r."""
    size = alphabet_size(k)
    if size == 1:
        return r + 1
    return (size ** (r + 1) - 1) // (size - 1)


def free_ball_size(k: AlphabetLike, r: int) -> int:
    gens = 2 * alphabet_size(k)
    return sum(gens ** i for i in range(r + 1))


def iter_sphere(k: AlphabetLike, r: int) -> Iterator[Word]:
    """Lazily yield S_r(Λ*) in lexicographic order (no cap)."""
    size = alphabet_size(k)
    if r < 0:
        raise ValueError(f"radius must be non-negative, got {r}")
    for letters in itertools.product(range(size), repeat=r):
        yield Word._make(size, letters)


def enumerate_sphere(k: AlphabetLike, r: int) -> List[Word]:
    """All words of length exactly r, lexicographic; k^r of them."""
    if r < 0:
        raise ValueError(f"radius must be non-negative, got {r}")
    check_cap(sphere_size(k, r), "words")
    return list(iter_sphere(k, r))


def enumerate_ball(k: AlphabetLike, r: int) -> List[Word]:
    """B_r(Λ*) in shortlex order: the union of spheres 0..r."""
    if r < 0:
        raise ValueError(f"radius must be non-negative, got {r}")
    check_cap(ball_size(k, r), "words")
    return [w for i in range(r + 1) for w in iter_sphere(k, i)]


def enumerate_free_ball(k: AlphabetLike, r: int) -> List[FreeWord]:
    """B_r(Γ̃) in shortlex order over the 2k generators (X before Y)."""
    if r < 0:
        raise ValueError(f"radius must be non-negative, got {r}")
    size = alphabet_size(k)
    check_cap(free_ball_size(size, r), "free words")
    gens = generators(size)
    return [FreeWord._make(size, tokens)
            for length in range(r + 1)
            for tokens in itertools.product(gens, repeat=length)]


def act_free(g: PairWord, t: FreeWord) -> PairWord:
    """Right action of Γ̃ on Γ: X_λ appends to the first word, Y_λ to the second."""
    if g.k != t.k:
        raise AlphabetMismatchError(g.k, t.k)
    first = list(g.first.letters)
    second = list(g.second.letters)
    for axis, letter in t.tokens:
        if axis == X_AXIS:
            first.append(letter)
        else:
            second.append(letter)
    return PairWord(Word._make(g.k, tuple(first)), Word._make(g.k, tuple(second)))


def project_free(t: FreeWord) -> PairWord:
    """The natural level-preserving homomorphism Γ̃ → Γ."""
    return act_free(PairWord.identity(t.k), t)


def left_multiply(alpha: PairWord, g: PairWord) -> PairWord:
    """α·γ in Γ (componentwise concatenation)."""
    return PairWord(concat_words(alpha.first, g.first), concat_words(alpha.second, g.second))


def level_offset(k: AlphabetLike, length: int) -> int:
    """Number of words shorter than length, i.e. |B_{length-1}|."""
    return ball_size(k, length - 1) if length > 0 else 0


def shortlex_index(w: Word) -> int:
    value = 0
    for letter in w.letters:
        value = value * w.k + letter
    return level_offset(w.k, len(w.letters)) + value


def word_from_index(k: AlphabetLike, index: int) -> Word:
    """Inverse of shortlex_index."""
    size = alphabet_size(k)
    if index < 0:
        raise ValueError(f"index must be non-negative, got {index}")
    length = 0
    while level_offset(size, length + 1) <= index:
        length += 1
    value = index - level_offset(size, length)
    letters = []
    for _ in range(length):
        value, letter = divmod(value, size)
        letters.append(letter)
    return Word._make(size, tuple(reversed(letters)))
