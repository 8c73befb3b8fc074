"""Kernel witnesses and end-to-end verification of the two unfaithfulness
results, plus an exhaustive search for short kernel elements of the
composite map.

The Burau-kernel witness in B_5 is the known commutator of two conjugates

    alpha = [psi1^-1 sigma_4 psi1, psi2^-1 (sigma_4 sigma_3 sigma_2
             sigma_1^2 sigma_2 sigma_3 sigma_4) psi2]

with conjugators

    psi1 = sigma_3^-1 sigma_2 sigma_1^2 sigma_2 sigma_4^3 sigma_3 sigma_2
    psi2 = sigma_4^-1 sigma_3 sigma_2 sigma_1^-2 sigma_2 sigma_1^2
           sigma_2^2 sigma_1 sigma_4^5

The constants are transcribed, not trusted: bigelow_alpha() recomputes the
exact 5x5 Burau matrix and the strand permutation on first use and refuses
to return a word that fails either check.  Nontriviality is certified
separately by handle reduction (never assumed).
"""
from __future__ import annotations

import functools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product

from .laurent import PolyMatrix
from .maps import mn_map
from .reps import burau, is_trivial_braid
from .words import Letter, SIGMA, Word, WordError, classical, parse_word, sigma

SEARCH_MAX_LEN = 12
SEARCH_MAX_ALPHABET = 12


class WitnessError(RuntimeError):
    """The embedded witness failed an oracle check; the transcription is
    wrong and must not be used."""


_PSI1 = "s3^-1 s2 s1^2 s2 s4^3 s3 s2"
_PSI2 = "s4^-1 s3 s2 s1^-2 s2 s1^2 s2^2 s1 s4^5"
_MIDDLE = "s4 s3 s2 s1^2 s2 s3 s4"


def _conjugate(conj: Word, core: Word) -> Word:
    return conj.inverse() * core * conj


@functools.cache
def bigelow_alpha() -> Word:
    """The reduced Burau-kernel witness in B_5, gated by the Burau oracle."""
    flavor = classical(5)
    psi1 = parse_word(_PSI1, flavor)
    psi2 = parse_word(_PSI2, flavor)
    left = _conjugate(psi1, parse_word("s4", flavor))
    right = _conjugate(psi2, parse_word(_MIDDLE, flavor))
    alpha = (left * right * left.inverse() * right.inverse()).free_reduce()
    if not alpha.is_pure():
        raise WitnessError("witness is not a pure braid")
    if not burau(alpha).is_identity():
        raise WitnessError("witness is not in the Burau kernel")
    return alpha


def lift_witness(alpha: Word) -> Word:
    """Preimage of a B_5 word under the projection with distinguished
    strand 6: relabel sigma_i -> sigma_{5-i} inside B_6."""
    letters = []
    for letter in alpha:
        if letter.kind != SIGMA or not 1 <= letter.index <= 4:
            raise WordError(f"cannot lift letter {letter}; need sigma_1..sigma_4")
        letters.append(sigma(5 - letter.index, letter.sign))
    return Word(classical(6), tuple(letters))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one unfaithfulness check: a witness word, the composite
    map's parameters, its image matrix, and the two oracle verdicts."""

    witness: Word
    params: dict
    image: PolyMatrix
    image_is_identity: bool
    witness_nontrivial: bool

    @property
    def passed(self) -> bool:
        return self.witness_nontrivial and self.image_is_identity

    def to_json_obj(self) -> dict:
        return {
            "witness": str(self.witness),
            "params": dict(self.params),
            "image_is_identity": self.image_is_identity,
            "witness_nontrivial": self.witness_nontrivial,
            "passed": self.passed,
        }


def verify_theorem1(d: int) -> VerificationReport:
    """Push the lifted Burau-kernel witness through the composite map with
    distinguished strand 6: the image must be the 5x5 identity while the
    witness is a nontrivial braid.  The projection image contains no cyclic
    shift, so the matrix is the same for every d >= 1."""
    if d < 1:
        raise ValueError(f"d must be a positive integer, got {d}")
    witness = lift_witness(bigelow_alpha())
    image = mn_map(witness, k=6, d=d)
    return VerificationReport(
        witness=witness,
        params={"k": 6, "d": d},
        image=image,
        image_is_identity=image.is_identity(),
        witness_nontrivial=not is_trivial_braid(witness),
    )


def verify_theorem2(m: int, k: int) -> VerificationReport:
    """For n = 2m, the pure braid sigma_k^-2m on n+1 strands projects to the
    2m-th power of the cyclic shift, whose matrix has order n: the composite
    with d = 1 kills it."""
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if not 1 <= k <= 2 * m:
        raise ValueError(f"k must be in 1..{2 * m}, got {k}")
    n = 2 * m
    witness = Word(classical(n + 1), (sigma(k, -1),) * (2 * m))
    image = mn_map(witness, k=k, d=1)
    return VerificationReport(
        witness=witness,
        params={"m": m, "k": k, "d": 1},
        image=image,
        image_is_identity=image.is_identity(),
        witness_nontrivial=not is_trivial_braid(witness),
    )


@dataclass(frozen=True)
class SearchResult:
    """A freely reduced word whose composite image re-verified as the
    identity matrix."""

    word: Word
    verified: bool
    freely_trivial: bool


def _supported_indices(n: int, k: int) -> list[int]:
    supported = []
    for i in range(1, n + 1):
        if i in (k - 1, k) or 1 <= k - i - 1 <= n - 1:
            supported.append(i)
    return supported


def _reduced_words(alphabet: list[Letter], length: int):
    """Freely reduced words of exactly this length, in lexicographic order
    of alphabet position."""
    for ranks in product(range(len(alphabet)), repeat=length):
        letters = tuple(alphabet[r] for r in ranks)
        if any(letters[j + 1] == letters[j].inverse()
               for j in range(length - 1)):
            continue
        yield letters


def search_kernel(n: int, k: int, d: int, max_len: int,
                  workers: int = 0) -> list[SearchResult]:
    """Enumerate freely reduced pure words up to max_len over the supported
    classical generators on n+1 strands and return those the composite map
    sends to the identity, ordered by (length, lexicographic letter order).

    The result list is deterministic regardless of workers.
    """
    if max_len > SEARCH_MAX_LEN:
        raise ValueError(f"max_len capped at {SEARCH_MAX_LEN}, got {max_len}")
    alphabet = [l for i in _supported_indices(n, k)
                for l in (sigma(i), sigma(i, -1))]
    if len(alphabet) > SEARCH_MAX_ALPHABET:
        raise ValueError(
            f"alphabet of {len(alphabet)} symbols exceeds the cap of "
            f"{SEARCH_MAX_ALPHABET}")
    flavor = classical(n + 1)
    candidates = []
    for length in range(1, max_len + 1):
        for letters in _reduced_words(alphabet, length):
            word = Word(flavor, letters)
            if word.is_pure():
                candidates.append(word)

    def image_is_identity(word: Word) -> bool:
        return mn_map(word, k=k, d=d).is_identity()

    if workers > 0:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = [w for w, ok in zip(candidates,
                                       pool.map(image_is_identity, candidates))
                    if ok]
    else:
        hits = [w for w in candidates if image_is_identity(w)]
    return [SearchResult(word=w,
                         verified=image_is_identity(w),
                         freely_trivial=False)
            for w in hits]
