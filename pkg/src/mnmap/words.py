"""Braid words over three groups: classical braids, cylindrical braids
(classical crossings plus a cyclic strand shift), and virtual cylindrical
braids (additionally, virtual crossings).

Words are flat, immutable letter sequences; nothing is reduced unless you
ask for it.  Strand indices are 1-based.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

# Letter kinds, named by their token in the word grammar.
SIGMA = "s"  # classical crossing
TAU = "t"    # virtual crossing
ZETA = "z"   # cyclic strand shift (no index)

# Flavor tags.
CLASSICAL = "classical"
CYLINDRICAL = "cylindrical"
VCB = "vcb"

_ADMITTED = {
    CLASSICAL: frozenset({SIGMA}),
    CYLINDRICAL: frozenset({SIGMA, ZETA}),
    VCB: frozenset({SIGMA, TAU, ZETA}),
}


class WordError(ValueError):
    """Malformed word: bad token, flavor violation, or index out of range."""


@dataclass(frozen=True)
class Letter:
    """One generator symbol: kind in {SIGMA, TAU, ZETA}, 1-based index
    (0 for the index-less cyclic shift), and sign +1 or -1."""

    kind: str
    index: int
    sign: int

    def __post_init__(self) -> None:
        if self.kind not in (SIGMA, TAU, ZETA):
            raise WordError(f"unknown letter kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise WordError(f"letter sign must be +1 or -1, got {self.sign}")
        if self.kind == ZETA:
            if self.index != 0:
                raise WordError("the cyclic shift carries no index")
        elif self.index < 1:
            raise WordError(f"strand index must be >= 1, got {self.index}")

    def inverse(self) -> Letter:
        return Letter(self.kind, self.index, -self.sign)

    def __str__(self) -> str:
        base = ZETA if self.kind == ZETA else f"{self.kind}{self.index}"
        return base if self.sign == 1 else base + "^-1"

    def __repr__(self) -> str:
        return f"Letter({str(self)!r})"


def sigma(i: int, sign: int = 1) -> Letter:
    return Letter(SIGMA, i, sign)


def tau(i: int, sign: int = 1) -> Letter:
    return Letter(TAU, i, sign)


def zeta(sign: int = 1) -> Letter:
    return Letter(ZETA, 0, sign)


@dataclass(frozen=True)
class Flavor:
    """Group flavor: which letter kinds a word admits, and the strand count n.
    Generators sigma_i / tau_i require 1 <= i <= n-1."""

    group: str
    n: int

    def __post_init__(self) -> None:
        if self.group not in _ADMITTED:
            raise WordError(f"unknown flavor {self.group!r}")
        if self.n < 1:
            raise WordError(f"strand count must be >= 1, got {self.n}")

    def check(self, letter: Letter) -> None:
        if letter.kind not in _ADMITTED[self.group]:
            raise WordError(
                f"letter {letter} not admitted in {self.group}({self.n})")
        if letter.kind != ZETA and letter.index > self.n - 1:
            raise WordError(
                f"index of {letter} out of range for {self.n} strands")

    def __repr__(self) -> str:
        return f"{self.group}({self.n})"


def classical(n: int) -> Flavor:
    return Flavor(CLASSICAL, n)


def cylindrical(n: int) -> Flavor:
    return Flavor(CYLINDRICAL, n)


def vcb(n: int) -> Flavor:
    return Flavor(VCB, n)


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..n}; images[i-1] is the destination of strand i.

    The product convention matches matrix multiplication of permutation
    matrices in the column convention (matrix()[p(j)-1][j-1] == 1):
    (p * q)(x) = p(q(x)).
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        images = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            images[j - 1] = i
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        rows = [[0] * self.n for _ in range(self.n)]
        for j, i in enumerate(self.images, start=1):
            rows[i - 1][j - 1] = 1
        return tuple(tuple(r) for r in rows)

    def __str__(self) -> str:
        return " ".join(f"{i}->{j}" for i, j in enumerate(self.images, 1))


def _letter_permutation(letter: Letter, n: int) -> Permutation:
    if letter.kind == ZETA:
        if letter.sign == 1:
            # matches the cyclic-shift matrix at t = s = 1: 1 -> n, j -> j-1
            return Permutation((n,) + tuple(range(1, n)))
        return Permutation(tuple(range(2, n + 1)) + (1,))
    i = letter.index
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


@dataclass(frozen=True)
class Word:
    """A finite letter sequence in a fixed flavor."""

    flavor: Flavor
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        for letter in self.letters:
            self.flavor.check(letter)

    @property
    def n(self) -> int:
        return self.flavor.n

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: Word) -> Word:
        """Concatenation; no reduction is performed."""
        if self.flavor != other.flavor:
            raise WordError(
                f"flavor mismatch: {self.flavor!r} vs {other.flavor!r}")
        return Word(self.flavor, self.letters + other.letters)

    def __pow__(self, e: int) -> Word:
        if e < 0:
            return self.inverse() ** (-e)
        return Word(self.flavor, self.letters * e)

    def inverse(self) -> Word:
        """Letters reversed, every sign flipped (TAU included: the word level
        keeps formal signs even though tau^2 = e holds in the group)."""
        return Word(self.flavor,
                    tuple(l.inverse() for l in reversed(self.letters)))

    def free_reduce(self) -> Word:
        """Delete adjacent pairs g g^-1 (same kind and index, opposite sign)
        until none remain.  The result is independent of deletion order."""
        stack: list[Letter] = []
        for letter in self.letters:
            if stack and stack[-1] == letter.inverse():
                stack.pop()
            else:
                stack.append(letter)
        return Word(self.flavor, tuple(stack))

    def permutation(self) -> Permutation:
        """Product of the letters' strand permutations in word order,
        under (p * q)(x) = p(q(x))."""
        result = Permutation.identity(self.n)
        for letter in self.letters:
            result = result * _letter_permutation(letter, self.n)
        return result

    def is_pure(self) -> bool:
        return self.permutation().is_identity()

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)

    def __repr__(self) -> str:
        return f"Word({self.flavor!r}, {str(self)!r})"


def commutator(a: Word, b: Word) -> Word:
    """[a, b] = a b a^-1 b^-1 (no reduction)."""
    return a * b * a.inverse() * b.inverse()


def delta_c(n: int) -> Word:
    """sigma_1 ... sigma_{n-1} as a cylindrical word."""
    if n < 2:
        raise WordError(f"delta_c needs n >= 2, got {n}")
    return Word(cylindrical(n), tuple(sigma(i) for i in range(1, n)))


def delta_v(n: int) -> Word:
    """tau_1 ... tau_{n-1} as a virtual cylindrical word."""
    if n < 2:
        raise WordError(f"delta_v needs n >= 2, got {n}")
    return Word(vcb(n), tuple(tau(i) for i in range(1, n)))


_TOKEN = re.compile(r"([st])([0-9]+)(?:\^(-?[0-9]+))?$|z(?:\^(-?[0-9]+))?$")
_COMPACT = re.compile(r"-?[0-9]+$")


def _parse_token(token: str) -> list[Letter]:
    m = _TOKEN.match(token)
    if m is None:
        raise WordError(f"bad token {token!r}")
    if m.group(1) is not None:
        kind, index = m.group(1), int(m.group(2))
        if index < 1:
            raise WordError(f"bad index in token {token!r}")
        exponent = 1 if m.group(3) is None else int(m.group(3))
    else:
        kind, index = ZETA, 0
        exponent = 1 if m.group(4) is None else int(m.group(4))
    if exponent == 0:
        raise WordError(f"zero exponent in token {token!r}")
    sign = 1 if exponent > 0 else -1
    return [Letter(kind, index, sign)] * abs(exponent)


def parse_word(text: str, flavor: Flavor) -> Word:
    """Parse whitespace-separated tokens: s3, t2^-1, z^4, ...  A compact
    classical form is also accepted: signed integers, "1 -2 1" meaning
    sigma_1 sigma_2^-1 sigma_1.  Exponents expand into repeated letters."""
    tokens = text.split()
    letters: list[Letter] = []
    if tokens and all(_COMPACT.match(tok) for tok in tokens):
        for tok in tokens:
            v = int(tok)
            if v == 0:
                raise WordError("0 is not a generator in the compact form")
            letters.append(sigma(abs(v), 1 if v > 0 else -1))
    else:
        for tok in tokens:
            letters.extend(_parse_token(tok))
    return Word(flavor, tuple(letters))


def format_word(w: Word) -> str:
    """Inverse of parse_word: one token per letter."""
    return str(w)
