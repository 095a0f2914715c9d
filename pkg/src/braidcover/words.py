"""Exact arithmetic in a free group of rank (d-1)(n-1) and its automorphisms.

The ambient group is parametrised by two integers d >= 2 and n >= 2.  Its
basis is {x[i,j] : 1 <= i <= n-1, 1 <= j <= d-1}.  The sheet index j is
cyclic with period d, and the out-of-basis symbol x[i,d] abbreviates
(x[i,1] * ... * x[i,d-1])^-1; constructors expand it on the spot, so every
stored word is a freely reduced word over the basis proper and equality is
literal letter-by-letter comparison.

Internally a letter is a signed integer code: x[i,j] has code
(i-1)*(d-1) + j, its inverse the negated code.  All values are immutable
and every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from .errors import BudgetExceededError, ParameterMismatchError

# Hard cap on the length of any computed word; operations raise
# BudgetExceededError instead of exhausting memory past this point.
LETTER_BUDGET = 10**6


class GeneratorSymbol(NamedTuple):
    i: int  # strand gap, 1 <= i <= n-1
    j: int  # sheet, 1 <= j <= d-1


class Letter(NamedTuple):
    symbol: GeneratorSymbol
    sign: int


def rank(d: int, n: int) -> int:
    """Rank (d-1)(n-1) of the ambient free group."""
    return (d - 1) * (n - 1)


def check_params(d: int, n: int) -> None:
    if d < 2:
        raise ValueError(f"parameter d must be >= 2, got d={d}")
    if n < 2:
        raise ValueError(f"parameter n must be >= 2, got n={n}")


@lru_cache(maxsize=None)
def symbols(d: int, n: int) -> tuple[GeneratorSymbol, ...]:
    """All basis symbols, ordered by (i, j)."""
    check_params(d, n)
    return tuple(
        GeneratorSymbol(i, j) for i in range(1, n) for j in range(1, d)
    )


@dataclass(frozen=True)
class Word:
    """Freely reduced word, stored as a tuple of signed basis codes."""

    d: int
    n: int
    codes: tuple[int, ...]

    @property
    def letters(self) -> tuple[Letter, ...]:
        span = self.d - 1
        return tuple(
            Letter(GeneratorSymbol((abs(c) - 1) // span + 1, (abs(c) - 1) % span + 1),
                   1 if c > 0 else -1)
            for c in self.codes
        )

    def __len__(self) -> int:
        return len(self.codes)

    def __bool__(self) -> bool:
        return bool(self.codes)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def inverse(self) -> "Word":
        return invert(self)

    def __str__(self) -> str:
        return format_word(self)


def _same_params(a, b) -> None:
    if (a.d, a.n) != (b.d, b.n):
        raise ParameterMismatchError(
            f"mixed ambient parameters: (d={a.d}, n={a.n}) vs (d={b.d}, n={b.n})"
        )


def _reduce_codes(codes: Iterable[int]) -> tuple[int, ...]:
    """Stack-based free reduction of a code sequence."""
    out: list[int] = []
    budget = LETTER_BUDGET
    for c in codes:
        if out and out[-1] == -c:
            out.pop()
        else:
            out.append(c)
            if len(out) > budget:
                raise BudgetExceededError(
                    f"word exceeds the letter budget of {budget}"
                )
    return tuple(out)


def _expand_symbol(d: int, n: int, i: int, j: int, sign: int) -> list[int]:
    """Signed codes for x[i,j]^sign, wrapping j mod d and expanding x[i,d]."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"symbol index i must be in 1..{n - 1}, got i={i}")
    if sign not in (1, -1):
        raise ValueError(f"letter sign must be +1 or -1, got {sign}")
    jj = (j - 1) % d + 1
    base = (i - 1) * (d - 1)
    if jj < d:
        return [sign * (base + jj)]
    # x[i,d] = (x[i,1] * ... * x[i,d-1])^-1
    if sign > 0:
        return [-(base + t) for t in range(d - 1, 0, -1)]
    return [base + t for t in range(1, d)]


def _encode(d: int, n: int, letters: Iterable) -> list[int]:
    """Accepts Letter values or (i, j, sign) triples."""
    codes: list[int] = []
    for item in letters:
        if isinstance(item, Letter):
            (i, j), sign = item
        else:
            i, j, sign = item
        codes.extend(_expand_symbol(d, n, i, j, sign))
    return codes


def reduce(d: int, n: int, letters: Iterable) -> Word:
    """Freely reduced word spelled by a letter sequence; idempotent."""
    check_params(d, n)
    return Word(d, n, _reduce_codes(_encode(d, n, letters)))


def word(d: int, n: int, letters: Iterable) -> Word:
    """Alias of reduce(); the only way words are built."""
    return reduce(d, n, letters)


def empty_word(d: int, n: int) -> Word:
    check_params(d, n)
    return Word(d, n, ())


def generator(d: int, n: int, i: int, j: int, sign: int = 1) -> Word:
    """The word x[i,j]^sign (x[i,d] expands into the basis)."""
    check_params(d, n)
    return Word(d, n, _reduce_codes(_expand_symbol(d, n, i, j, sign)))


def multiply(a: Word, b: Word) -> Word:
    """Reduced concatenation; the empty word is the identity."""
    _same_params(a, b)
    out = list(a.codes)
    for c in b.codes:
        if out and out[-1] == -c:
            out.pop()
        else:
            out.append(c)
    if len(out) > LETTER_BUDGET:
        raise BudgetExceededError(f"word exceeds the letter budget of {LETTER_BUDGET}")
    return Word(a.d, a.n, tuple(out))


def invert(w: Word) -> Word:
    return Word(w.d, w.n, tuple(-c for c in reversed(w.codes)))


def conjugate(x: Word, y: Word) -> Word:
    """The conjugate y^-1 * x * y, reduced."""
    return multiply(multiply(invert(y), x), y)


@dataclass(frozen=True)
class FreeAutomorphism:
    """Endomorphism given by its reduced image on every basis generator.

    Values produced by this package are always invertible; invertibility is
    witnessed where it matters (a known inverse, or unimodularity on
    abelianization) rather than decided in general.
    """

    d: int
    n: int
    images: tuple[Word, ...]  # indexed by basis code - 1, i.e. ordered by (i, j)

    def __post_init__(self) -> None:
        if len(self.images) != rank(self.d, self.n):
            raise ValueError(
                f"need {rank(self.d, self.n)} generator images, got {len(self.images)}"
            )
        for img in self.images:
            _same_params(self, img)

    def image(self, i: int, j: int) -> Word:
        """Image of the basis generator x[i,j]."""
        if not (1 <= i <= self.n - 1 and 1 <= j <= self.d - 1):
            raise ValueError(f"x[{i},{j}] is not a basis generator for d={self.d}, n={self.n}")
        return self.images[(i - 1) * (self.d - 1) + (j - 1)]


@lru_cache(maxsize=None)
def identity_automorphism(d: int, n: int) -> FreeAutomorphism:
    check_params(d, n)
    return FreeAutomorphism(
        d, n, tuple(Word(d, n, (c,)) for c in range(1, rank(d, n) + 1))
    )


def apply(f: FreeAutomorphism, w: Word) -> Word:
    """Apply f letter by letter; homomorphic by construction."""
    _same_params(f, w)
    images = f.images
    out: list[int] = []
    budget = LETTER_BUDGET
    for c in w.codes:
        img = images[abs(c) - 1].codes
        if c > 0:
            for t in img:
                if out and out[-1] == -t:
                    out.pop()
                else:
                    out.append(t)
        else:
            for t in reversed(img):
                if out and out[-1] == t:
                    out.pop()
                else:
                    out.append(-t)
        if len(out) > budget:
            raise BudgetExceededError(f"word exceeds the letter budget of {budget}")
    return Word(f.d, f.n, tuple(out))


def compose(f: FreeAutomorphism, g: FreeAutomorphism) -> FreeAutomorphism:
    """Composite that applies f first, then g."""
    _same_params(f, g)
    return FreeAutomorphism(f.d, f.n, tuple(apply(g, img) for img in f.images))


def equal(f: FreeAutomorphism, g: FreeAutomorphism) -> bool:
    """Exact equality: identical reduced images on every generator."""
    _same_params(f, g)
    return f.images == g.images


def abelianize(f: FreeAutomorphism) -> tuple[tuple[int, ...], ...]:
    """Integer matrix with entry (s, t) the signed count of x_t in f(x_s)."""
    r = rank(f.d, f.n)
    rows = []
    for img in f.images:
        row = [0] * r
        for c in img.codes:
            row[abs(c) - 1] += 1 if c > 0 else -1
        rows.append(tuple(row))
    return tuple(rows)


# -- small exact integer-matrix helpers (abelianization layer) --------------

def identity_matrix(size: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(1 if r == c else 0 for c in range(size)) for r in range(size)
    )


def matrix_multiply(a, b) -> tuple[tuple[int, ...], ...]:
    size = len(b[0])
    return tuple(
        tuple(sum(row[k] * b[k][c] for k in range(len(b))) for c in range(size))
        for row in a
    )


def matrix_determinant(m) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    a = [list(row) for row in m]
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for p in range(size - 1):
        if a[p][p] == 0:
            for r in range(p + 1, size):
                if a[r][p] != 0:
                    a[p], a[r] = a[r], a[p]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(p + 1, size):
            for c in range(p + 1, size):
                a[r][c] = (a[r][c] * a[p][p] - a[r][p] * a[p][c]) // prev
            a[r][p] = 0
        prev = a[p][p]
    return sign * a[-1][-1]


# -- text grammar ------------------------------------------------------------
#
# Token `x[i,j]`, optionally followed by `^-1`; tokens joined by `*`; the
# empty word renders as `1`.

def format_word(w: Word) -> str:
    if not w.codes:
        return "1"
    span = w.d - 1
    parts = []
    for c in w.codes:
        i, j = (abs(c) - 1) // span + 1, (abs(c) - 1) % span + 1
        parts.append(f"x[{i},{j}]" + ("^-1" if c < 0 else ""))
    return "*".join(parts)


def parse_word(d: int, n: int, text: str) -> Word:
    """Parse the word grammar; out-of-basis sheet indices are normalised."""
    check_params(d, n)
    text = text.strip()
    if text in ("", "1"):
        return empty_word(d, n)
    letters: list[tuple[int, int, int]] = []
    for token in text.split("*"):
        token = token.strip()
        sign = 1
        if token.endswith("^-1"):
            sign = -1
            token = token[:-3]
        if not (token.startswith("x[") and token.endswith("]")):
            raise ValueError(f"cannot parse word token {token!r}")
        try:
            i_text, j_text = token[2:-1].split(",")
            letters.append((int(i_text), int(j_text), sign))
        except ValueError:
            raise ValueError(f"cannot parse word token {token!r}") from None
    return reduce(d, n, letters)
