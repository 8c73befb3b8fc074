"""The matrix representation of virtual cylindrical braids, the unreduced
Burau representation it restricts to on classical words, and two independent
word-problem oracles for classical braids: the Artin action on a free group
and Dehornoy handle reduction.

Generator images (dimension n; blocks sit in rows/columns k, k+1):

    sigma_k      -> [[1-t, t], [1, 0]]
    sigma_k^-1   -> [[0, 1], [t^-1, 1-t^-1]]
    tau_k        -> [[0, s], [s^-1, 0]]       (an involution)
    zeta         -> I_{n-1} in the top-right block, 1 in the bottom-left
    zeta^-1      -> transpose of the zeta matrix

Inverse images are explicit, not computed: each generator image times its
inverse image is exactly the identity, which makes invariance of the word
map under free reduction a property of the construction.
"""
from __future__ import annotations

from dataclasses import dataclass

from .laurent import ONE, S, S_INV, T, T_INV, LaurentPoly, PolyMatrix
from .words import CLASSICAL, SIGMA, TAU, ZETA, Letter, Word, WordError

DEFAULT_ARTIN_BUDGET = 2 ** 16
DEFAULT_STEP_CAP = 1_000_000


def rho_letter(letter: Letter, n: int) -> PolyMatrix:
    """Image of a single generator at dimension n."""
    rows: list[list] = [[1 if i == j else 0 for j in range(n)]
                        for i in range(n)]
    if letter.kind == ZETA:
        for i in range(n):
            rows[i] = [0] * n
        for i in range(n - 1):
            rows[i][i + 1] = 1
        rows[n - 1][0] = 1
        matrix = PolyMatrix(rows)
        return matrix if letter.sign == 1 else matrix.transpose()
    k = letter.index
    if not 1 <= k <= n - 1:
        raise WordError(f"letter {letter} has no image at dimension {n}")
    a, b = k - 1, k  # 0-based block position
    if letter.kind == TAU:
        block = ((0, S), (S_INV, 0))
    elif letter.sign == 1:
        block = ((ONE - T, T), (1, 0))
    else:
        block = ((0, 1), (T_INV, ONE - T_INV))
    rows[a][a], rows[a][b] = block[0]
    rows[b][a], rows[b][b] = block[1]
    return PolyMatrix(rows)


def rho_word(w: Word) -> PolyMatrix:
    """Left-to-right product of the letter images; dimension = strand count.

    Computed by column operations: right-multiplying by a generator image
    touches two columns (crossings) or rotates the columns (cyclic shift),
    which is exact and agrees entry-for-entry with the generic matrix
    product.
    """
    n = w.n
    one, zero = LaurentPoly.one(), LaurentPoly.zero()
    cols: list[list[LaurentPoly]] = [
        [one if i == j else zero for i in range(n)] for j in range(n)]
    for letter in w:
        if letter.kind == ZETA:
            if letter.sign == 1:
                cols = [cols[-1]] + cols[:-1]
            else:
                cols = cols[1:] + [cols[0]]
            continue
        k = letter.index
        if not 1 <= k <= n - 1:
            raise WordError(f"letter {letter} has no image at dimension {n}")
        a, b = k - 1, k
        col_a, col_b = cols[a], cols[b]
        if letter.kind == TAU:
            cols[a] = [p * S_INV for p in col_b]
            cols[b] = [p * S for p in col_a]
        elif letter.sign == 1:
            one_minus_t = ONE - T
            cols[a] = [col_a[i] * one_minus_t + col_b[i] for i in range(n)]
            cols[b] = [p * T for p in col_a]
        else:
            one_minus_tinv = ONE - T_INV
            cols[a] = [p * T_INV for p in col_b]
            cols[b] = [col_a[i] + col_b[i] * one_minus_tinv
                       for i in range(n)]
    return PolyMatrix(zip(*cols))


def burau(w: Word) -> PolyMatrix:
    """Unreduced Burau matrix of a classical word (the restriction of the
    word map to classical braids); entries lie in Z[t^{+-1}]."""
    if w.flavor.group != CLASSICAL:
        raise WordError(f"burau expects a classical word, got {w.flavor!r}")
    return rho_word(w)


# ---------------------------------------------------------------------------
# Artin action: the faithful action of the braid group on a free group.
# sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i, fixing the rest.

FreeWord = tuple[tuple[int, int], ...]  # (generator index 1..n, sign +-1)


class ArtinBudgetError(RuntimeError):
    """An image outgrew the configured length budget; fall back to handle
    reduction."""


def free_mul(*parts: FreeWord) -> FreeWord:
    """Concatenate free words and freely reduce."""
    stack: list[tuple[int, int]] = []
    for part in parts:
        for gen, sign in part:
            if stack and stack[-1] == (gen, -sign):
                stack.pop()
            else:
                stack.append((gen, sign))
    return tuple(stack)


def free_inv(w: FreeWord) -> FreeWord:
    return tuple((gen, -sign) for gen, sign in reversed(w))


@dataclass(frozen=True)
class FreeAut:
    """Endomorphism of the free group of rank n, given by freely reduced
    images of the generators x_1..x_n."""

    n: int
    images: tuple[FreeWord, ...]

    @classmethod
    def identity(cls, n: int) -> FreeAut:
        return cls(n, tuple(((i, 1),) for i in range(1, n + 1)))

    def is_identity(self) -> bool:
        return all(img == ((i, 1),)
                   for i, img in enumerate(self.images, start=1))

    def image_strings(self) -> list[str]:
        """Images in the x1/X1 convention (capital = inverse)."""
        return ["".join(("x" if sign == 1 else "X") + str(gen)
                        for gen, sign in img) for img in self.images]


def artin_apply(w: Word, budget: int = DEFAULT_ARTIN_BUDGET) -> FreeAut:
    """Compose the letter automorphisms of a classical word.  Faithfulness:
    the result is the identity automorphism iff the braid is trivial.

    Image lengths can grow exponentially with word length; exceeding the
    per-image budget raises ArtinBudgetError.
    """
    if w.flavor.group != CLASSICAL:
        raise WordError(f"the Artin action needs a classical word, got {w.flavor!r}")
    n = w.n
    images: list[FreeWord] = [((i, 1),) for i in range(1, n + 1)]
    for letter in w:
        i = letter.index - 1  # 0-based
        xi, xj = images[i], images[i + 1]
        if letter.sign == 1:
            images[i] = free_mul(xi, xj, free_inv(xi))
            images[i + 1] = xi
        else:
            images[i] = xj
            images[i + 1] = free_mul(free_inv(xj), xi, xj)
        if len(images[i]) > budget or len(images[i + 1]) > budget:
            raise ArtinBudgetError(
                f"image length exceeded budget of {budget} letters")
    return FreeAut(n, tuple(images))


# ---------------------------------------------------------------------------
# Dehornoy handle reduction.
#
# A handle is a subword sigma_i^e u sigma_i^-e where u contains no
# sigma_i^{+-1} and no sigma_{i-1}^{+-1}.  Reducing it deletes the bracketing
# pair and conjugates each enclosed sigma_{i+1}^d into
# sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e; all other enclosed letters commute
# with sigma_i and pass through unchanged.  Every reduction sequence
# terminates, and the final word is empty iff the braid is trivial.


class ReductionCapError(RuntimeError):
    """Step cap exceeded before the reduction terminated (inconclusive)."""


def _free_reduce_pairs(letters: list[tuple[int, int]]) -> list[tuple[int, int]]:
    stack: list[tuple[int, int]] = []
    for item in letters:
        if stack and stack[-1] == (item[0], -item[1]):
            stack.pop()
        else:
            stack.append(item)
    return stack


def _first_handle(letters: list[tuple[int, int]]) -> tuple[int, int] | None:
    """Positions (p, q) of the handle with the smallest closing position:
    the leftmost-innermost handle.  Scans once, tracking each generator's
    most recent occurrence."""
    last: dict[int, tuple[int, int]] = {}  # index -> (position, sign)
    for q, (i, e) in enumerate(letters):
        seen = last.get(i)
        if seen is not None and seen[1] == -e:
            below = last.get(i - 1)
            if below is None or below[0] < seen[0]:
                return seen[0], q
        last[i] = (q, e)
    return None


def _reduce_handle(letters: list[tuple[int, int]], p: int, q: int
                   ) -> list[tuple[int, int]]:
    i, e = letters[p]
    replacement: list[tuple[int, int]] = []
    for j, d in letters[p + 1:q]:
        if j == i + 1:
            replacement += [(i + 1, -e), (i, d), (i + 1, e)]
        else:
            replacement.append((j, d))
    return letters[:p] + replacement + letters[q + 1:]


def handle_reduce(w: Word, max_steps: int = DEFAULT_STEP_CAP) -> Word:
    """Reduce handles (leftmost-innermost first) until none remain; the
    fixed selection strategy makes runs reproducible."""
    if w.flavor.group != CLASSICAL:
        raise WordError(f"handle reduction needs a classical word, got {w.flavor!r}")
    letters = _free_reduce_pairs([(l.index, l.sign) for l in w])
    steps = 0
    while True:
        found = _first_handle(letters)
        if found is None:
            return Word(w.flavor, tuple(Letter(SIGMA, i, e)
                                        for i, e in letters))
        if steps >= max_steps:
            raise ReductionCapError(f"no terminal word within {max_steps} steps")
        letters = _free_reduce_pairs(_reduce_handle(letters, *found))
        steps += 1


def is_trivial_braid(w: Word, max_steps: int = DEFAULT_STEP_CAP) -> bool:
    """True iff the classical word represents the identity braid."""
    return len(handle_reduce(w, max_steps=max_steps)) == 0
