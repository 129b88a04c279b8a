"""
Braid words over the band-generator presentation of the braid group B_n.

A braid word is a sequence of signed band generators a(i,j) with
1 <= j < i <= n.  The generator a(i,j) braids strands i and j in front of
the intermediate strands.  Words are the parse target of a small ASCII
grammar (see `parse_word`) and carry two cheap invariants: the induced
permutation and the exponent sum.

Permutation convention: the permutation of a product xy is pi_x o pi_y
(the right factor applies first), fixed so that the descending cycle
delta = a(n,n-1)...a(2,1) induces i -> i-1 (mod n, representatives 1..n).
"""
from __future__ import annotations

import re
from dataclasses import dataclass


class ParseError(ValueError):
    """Raised on malformed braid-word input."""


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1..n."""

    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.n or not all(
            1 <= im <= self.n for im in self.images
        ) or len(set(self.images)) != self.n:
            raise ValueError(f"not a permutation of 1..{self.n}: {self.images}")

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # self o other: other applies first.
        return Permutation(self.n, tuple(self.images[k - 1] for k in other.images))

    def inverse(self) -> "Permutation":
        images = [0] * self.n
        for i, im in enumerate(self.images, start=1):
            images[im - 1] = i
        return Permutation(self.n, tuple(images))

    def is_identity(self) -> bool:
        return all(im == i for i, im in enumerate(self.images, start=1))

    def fixed_points(self) -> list[int]:
        return [i for i, im in enumerate(self.images, start=1) if im == i]

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def rotation(cls, n: int, shift: int) -> "Permutation":
        """The permutation i -> i + shift, taken mod n with representatives 1..n."""
        return cls(n, tuple((i - 1 + shift) % n + 1 for i in range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(n, tuple(images))


@dataclass(frozen=True)
class BandGenerator:
    """A signed band generator a(upper, lower) with lower < upper."""

    upper: int
    lower: int
    sign: int = 1

    def __post_init__(self):
        if not (1 <= self.lower < self.upper):
            raise ValueError(f"need 1 <= lower < upper, got a({self.upper},{self.lower})")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> "BandGenerator":
        return BandGenerator(self.upper, self.lower, -self.sign)

    def text(self) -> str:
        base = f"a({self.upper},{self.lower})"
        return base if self.sign == 1 else base + "^-1"


@dataclass(frozen=True)
class BraidWord:
    """A sequence of signed band generators over a fixed strand count."""

    n: int
    letters: tuple[BandGenerator, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"strand count must be >= 2, got {self.n}")
        for g in self.letters:
            if g.upper > self.n:
                raise ValueError(f"generator {g.text()} out of range for n={self.n}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise ValueError("strand counts differ")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(g.inverse() for g in reversed(self.letters)))

    def text(self) -> str:
        """Canonical printer; `parse_word` is a left inverse of this."""
        if not self.letters:
            return ""
        return " ".join(g.text() for g in self.letters)


def sigma_word(n: int, i: int) -> list[BandGenerator]:
    """The Artin generator sigma_i as a band generator, sigma_i = a(i+1, i)."""
    if not (1 <= i <= n - 1):
        raise ParseError(f"sigma index {i} out of range 1..{n - 1}")
    return [BandGenerator(i + 1, i)]


def delta_letters(n: int) -> list[BandGenerator]:
    """The descending cycle delta = a(n,n-1) a(n-1,n-2) ... a(2,1)."""
    return [BandGenerator(i, i - 1) for i in range(n, 1, -1)]


def epsilon_letters(n: int) -> list[BandGenerator]:
    """epsilon = delta sigma_1."""
    return delta_letters(n) + [BandGenerator(2, 1)]


def half_twist_letters(n: int) -> list[BandGenerator]:
    """The half twist sigma_1 (sigma_2 sigma_1) ... (sigma_{n-1} ... sigma_1)."""
    out: list[BandGenerator] = []
    for i in range(1, n):
        for j in range(i, 0, -1):
            out.append(BandGenerator(j + 1, j))
    return out


def subsimple_letters(indices: list[int]) -> list[BandGenerator]:
    """[i_k,...,i_1] expands to a(i_k,i_{k-1}) ... a(i_2,i_1); indices strictly decreasing."""
    if any(a <= b for a, b in zip(indices, indices[1:])):
        raise ParseError(f"subsimple literal must be strictly decreasing: {indices}")
    return [BandGenerator(a, b) for a, b in zip(indices, indices[1:])]


_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<char>[a-zA-Z\[\](),^*]))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r}")
            break
        tokens.append(m.group("int") or m.group("char"))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[str], n: int):
        self.tokens = tokens
        self.pos = 0
        self.n = n

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.pos += 1
        return tok

    def expect(self, tok: str):
        got = self.take()
        if got != tok:
            raise ParseError(f"expected {tok!r}, got {got!r}")

    def integer(self) -> int:
        tok = self.take()
        try:
            return int(tok)
        except ValueError:
            raise ParseError(f"expected an integer, got {tok!r}") from None

    def index(self) -> int:
        i = self.integer()
        if not (1 <= i <= self.n):
            raise ParseError(f"index {i} out of range 1..{self.n}")
        return i

    def word(self) -> list[BandGenerator]:
        letters: list[BandGenerator] = []
        while True:
            tok = self.peek()
            if tok is None or tok == ")":
                return letters
            if tok == "*":
                self.take()
                continue
            letters.extend(self.term())

    def term(self) -> list[BandGenerator]:
        letters = self.atom()
        if self.peek() == "^":
            self.take()
            k = self.integer()
            if k >= 0:
                letters = letters * k
            else:
                letters = [g.inverse() for g in reversed(letters)] * (-k)
        return letters

    def atom(self) -> list[BandGenerator]:
        tok = self.take()
        if tok == "a":
            self.expect("(")
            i = self.index()
            self.expect(",")
            j = self.index()
            self.expect(")")
            if i == j:
                raise ParseError(f"equal indices in a({i},{j})")
            return [BandGenerator(max(i, j), min(i, j))]
        if tok == "s":
            return sigma_word(self.n, self.integer())
        if tok == "d":
            return delta_letters(self.n)
        if tok == "D":
            return half_twist_letters(self.n)
        if tok == "e":
            return epsilon_letters(self.n)
        if tok == "[":
            indices = [self.index()]
            while self.peek() == ",":
                self.take()
                indices.append(self.index())
            self.expect("]")
            return subsimple_letters(indices)
        if tok == "(":
            letters = self.word()
            self.expect(")")
            return letters
        raise ParseError(f"unexpected token {tok!r}")


def parse_word(text: str, n: int) -> BraidWord:
    """
    Parse a braid word over B_n.

    Grammar (whitespace insignificant):
        word := term { ["*"] term }
        term := atom [ "^" signed-int ]
        atom := "a(" i "," j ")" | "s" i | "d" | "D" | "e"
              | "[" i { "," i } "]" | "(" word ")"

    "d" is the descending cycle delta, "D" the half twist, "e" = d s1.
    Subsimple literals [i_k,...,i_1] must be strictly decreasing.
    """
    if n < 2:
        raise ParseError(f"strand count must be >= 2, got {n}")
    parser = _Parser(_tokenize(text), n)
    letters = parser.word()
    if parser.peek() is not None:
        raise ParseError(f"unexpected token {parser.peek()!r}")
    return BraidWord(n, tuple(letters))


def permutation_of(w: BraidWord) -> Permutation:
    """Induced permutation: each a(i,j) contributes the transposition (i j)."""
    perm = Permutation.identity(w.n)
    for g in w.letters:
        perm = perm * Permutation.transposition(w.n, g.upper, g.lower)
    return perm


def exponent_sum(w: BraidWord) -> int:
    return sum(g.sign for g in w.letters)
