"""Shared strategies and word generators for the test suite."""
from __future__ import annotations

import random

import hypothesis.strategies as st

from mnmap.words import (
    CLASSICAL,
    CYLINDRICAL,
    VCB,
    Flavor,
    Letter,
    SIGMA,
    TAU,
    Word,
    ZETA,
    parse_word,
    sigma,
    tau,
    zeta,
)

GROUP_KINDS = {
    CLASSICAL: (SIGMA,),
    CYLINDRICAL: (SIGMA, ZETA),
    VCB: (SIGMA, TAU, ZETA),
}


def letters_st(flavor: Flavor):
    kinds = GROUP_KINDS[flavor.group]

    def build(kind, index, sign):
        return Letter(kind, 0 if kind == ZETA else index, sign)

    return st.builds(build,
                     st.sampled_from(kinds),
                     st.integers(1, max(flavor.n - 1, 1)),
                     st.sampled_from((1, -1)))


@st.composite
def words_st(draw, groups=(CLASSICAL, CYLINDRICAL, VCB), min_n=2, max_n=6,
             max_len=12):
    group = draw(st.sampled_from(groups))
    n = draw(st.integers(min_n, max_n))
    flavor = Flavor(group, n)
    letters = draw(st.lists(letters_st(flavor), max_size=max_len))
    return Word(flavor, tuple(letters))


@st.composite
def word_pairs_st(draw, groups=(CLASSICAL, CYLINDRICAL, VCB), min_n=2,
                  max_n=6, max_len=12):
    a = draw(words_st(groups=groups, min_n=min_n, max_n=max_n,
                      max_len=max_len))
    letters = draw(st.lists(letters_st(a.flavor), max_size=max_len))
    return a, Word(a.flavor, tuple(letters))


def random_letter(rng: random.Random, flavor: Flavor) -> Letter:
    kind = rng.choice(GROUP_KINDS[flavor.group])
    sign = rng.choice((1, -1))
    if kind == ZETA:
        return zeta(sign)
    return Letter(kind, rng.randint(1, flavor.n - 1), sign)


def random_word(rng: random.Random, flavor: Flavor, length: int) -> Word:
    return Word(flavor,
                tuple(random_letter(rng, flavor) for _ in range(length)))


def random_pure_word(rng: random.Random, flavor: Flavor, blocks: int) -> Word:
    """Concatenation of pure building blocks: squared generators and
    formally canceling pairs u u^-1."""
    word = Word(flavor)
    for _ in range(blocks):
        if rng.random() < 0.5:
            i = rng.randint(1, flavor.n - 1)
            word = word * Word(flavor, (sigma(i, rng.choice((1, -1))),) * 2)
        else:
            u = random_word(rng, flavor, rng.randint(1, 3))
            word = word * u * u.inverse()
    return word


def relation_identities(n: int) -> list[tuple[str, Word, Word]]:
    """All defining relations of the virtual cylindrical group on n strands,
    as pairs of words whose matrices must agree exactly."""
    f = Flavor(VCB, n)

    def w(*letters) -> Word:
        return Word(f, tuple(letters))

    identities: list[tuple[str, Word, Word]] = []
    for i in range(1, n - 1):
        identities.append((f"braid sigma {i} n={n}",
                           w(sigma(i), sigma(i + 1), sigma(i)),
                           w(sigma(i + 1), sigma(i), sigma(i + 1))))
        identities.append((f"braid tau {i} n={n}",
                           w(tau(i), tau(i + 1), tau(i)),
                           w(tau(i + 1), tau(i), tau(i + 1))))
        identities.append((f"mixed tau-sigma {i} n={n}",
                           w(tau(i), tau(i + 1), sigma(i), tau(i + 1), tau(i)),
                           w(sigma(i + 1))))
    for i in range(1, n):
        for j in range(i + 2, n):
            identities.append((f"far sigma {i},{j} n={n}",
                               w(sigma(i), sigma(j)), w(sigma(j), sigma(i))))
            identities.append((f"far tau {i},{j} n={n}",
                               w(tau(i), tau(j)), w(tau(j), tau(i))))
        identities.append((f"tau^2 {i} n={n}", w(tau(i), tau(i)), w()))
    for i in range(2, n):
        identities.append((f"zeta shift sigma {i} n={n}",
                           w(zeta(), sigma(i), zeta(-1)), w(sigma(i - 1))))
        identities.append((f"zeta shift tau {i} n={n}",
                           w(zeta(), tau(i), zeta(-1)), w(tau(i - 1))))
    identities.append((f"zeta^{n} n={n}", w(*([zeta()] * n)), w()))
    return identities
