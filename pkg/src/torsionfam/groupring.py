"""Free-group words, integral group rings, Fox calculus, and twisted
presentation complexes.

Words are freely reduced tuples of (generator index, +-1) letters.
Group-ring elements are finite integer combinations of words.  The
free derivative d/dx_g satisfies

    d(x)/dx = 1,   d(y)/dx = 0 (y != x),
    d(uv)/dx = du/dx + u . dv/dx,

which forces d(x^-1)/dx = -x^-1.

A :class:`RepFamily` assigns an invertible RatFunc matrix to each
generator; :func:`specialize` pushes group-ring elements through it as
a ring homomorphism.  :func:`presentation_complex` assembles the
twisted chain complex of the 2-complex of a presentation.  Cells are
ordered as given in the input and lifted at the base point; tensor
factors are ordered cell-major, then bundle coordinate.  With the
boundary matrices in column convention this means each Fox-derivative
block enters transposed, which is exactly what makes
d_1 . d_2 = phi(r) - 1 = 0 for every relator r.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix
from .ratfunc import RatFunc

__all__ = [
    "Word",
    "GroupRingElem",
    "RepFamily",
    "fox_derivative",
    "specialize",
    "specialize_word",
    "presentation_complex",
    "parse_word",
    "format_word",
]

_ZERO = RatFunc.zero()
_ONE = RatFunc.one()


class Word:
    """Freely reduced word in a free group.  Immutable."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        reduced: list[tuple[int, int]] = []
        for gen, exp in letters:
            gen = int(gen)
            exp = int(exp)
            if gen < 0:
                raise ValueError("generator indices are non-negative")
            if exp not in (1, -1):
                raise ValueError("letter exponents must be +1 or -1")
            if reduced and reduced[-1] == (gen, -exp):
                reduced.pop()
            else:
                reduced.append((gen, exp))
        object.__setattr__(self, "letters", tuple(reduced))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def identity(cls) -> "Word":
        return cls(())

    @classmethod
    def generator(cls, g: int, exp: int = 1) -> "Word":
        return cls(((g, exp),))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def max_generator(self) -> int:
        """Largest generator index used, or -1 for the identity."""
        return max((g for g, _ in self.letters), default=-1)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"Word({format_word(self)!r})"


class GroupRingElem:
    """Finite Z-linear combination of words; no zero terms stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc: dict[Word, int] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for word, coeff in items:
            if not isinstance(word, Word):
                raise TypeError("group-ring keys must be Words")
            coeff = int(coeff)
            if not coeff:
                continue
            new = acc.get(word, 0) + coeff
            if new:
                acc[word] = new
            elif word in acc:
                del acc[word]
        object.__setattr__(self, "terms", dict(acc))

    def __setattr__(self, name, value):
        raise AttributeError("GroupRingElem is immutable")

    @classmethod
    def zero(cls) -> "GroupRingElem":
        return cls(())

    @classmethod
    def one(cls) -> "GroupRingElem":
        return cls(((Word.identity(), 1),))

    @classmethod
    def of_word(cls, w: Word, coeff: int = 1) -> "GroupRingElem":
        return cls(((w, coeff),))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GroupRingElem") -> "GroupRingElem":
        merged = dict(self.terms)
        for w, c in other.terms.items():
            new = merged.get(w, 0) + c
            if new:
                merged[w] = new
            elif w in merged:
                del merged[w]
        return GroupRingElem(merged)

    def __sub__(self, other: "GroupRingElem") -> "GroupRingElem":
        return self + (-other)

    def __neg__(self) -> "GroupRingElem":
        return GroupRingElem({w: -c for w, c in self.terms.items()})

    def __mul__(self, other: "GroupRingElem") -> "GroupRingElem":
        acc: dict[Word, int] = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                w = wa * wb
                new = acc.get(w, 0) + ca * cb
                if new:
                    acc[w] = new
                elif w in acc:
                    del acc[w]
        return GroupRingElem(acc)

    def left_mul_word(self, w: Word) -> "GroupRingElem":
        return GroupRingElem({w * u: c for u, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "GroupRingElem(0)"
        parts = [
            f"{c}*{format_word(w) or '1'}"
            for w, c in sorted(self.terms.items(), key=lambda wc: wc[0].letters)
        ]
        return "GroupRingElem(" + " + ".join(parts) + ")"


def fox_derivative(w: Word, g: int) -> GroupRingElem:
    """Free derivative of a word with respect to generator ``g``."""
    if g < 0:
        raise ValueError(f"invalid generator index {g}")
    acc = GroupRingElem.zero()
    prefix = Word.identity()
    for gen, exp in w.letters:
        if gen == g:
            if exp == 1:
                acc = acc + GroupRingElem.of_word(prefix)
            else:
                acc = acc - GroupRingElem.of_word(prefix * Word.generator(g, -1))
        prefix = prefix * Word.generator(gen, exp)
    return acc


@dataclass(frozen=True)
class RepFamily:
    """Family of invertible matrices assigned to the free generators.

    ``images[g]`` is the square RatFunc matrix of generator g; every
    image must have nonzero determinant over the function field.  The
    ``unitary`` flag asserts image . conj(image^T) = 1 as a matrix
    identity, ``special`` asserts det(image) = 1; both are validated.
    ``center_hint`` optionally records the intended degeneration point.
    """

    rank: int
    images: tuple
    unitary: bool = False
    special: bool = False
    center_hint: object = None

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if self.rank < 1:
            raise ValueError("representation rank must be positive")
        ident = Matrix.identity(self.rank, _ONE, _ZERO)
        for g, mat in enumerate(images):
            if not isinstance(mat, Matrix) or mat.shape() != (self.rank, self.rank):
                raise ValueError(f"image of generator {g} has wrong shape")
            det = mat.det() if self.rank else _ONE
            if det.is_zero():
                raise ValueError(f"image of generator {g} is singular")
            if self.unitary:
                if mat.mul_with_zero(mat.transpose().conj(), _ZERO) != ident:
                    raise ValueError(f"image of generator {g} is not unitary")
            if self.special:
                if det != _ONE:
                    raise ValueError(f"image of generator {g} has determinant != 1")

    @property
    def ngens(self) -> int:
        return len(self.images)

    def image(self, g: int) -> Matrix:
        if not 0 <= g < len(self.images):
            raise ValueError(f"representation has no image for generator {g}")
        return self.images[g]

    def image_inverse(self, g: int) -> Matrix:
        return self.image(g).inverse()


def specialize_word(w: Word, rho: RepFamily) -> Matrix:
    """Image of a word: the ordered product of generator images."""
    out = Matrix.identity(rho.rank, _ONE, _ZERO)
    for g, e in w.letters:
        factor = rho.image(g) if e == 1 else rho.image_inverse(g)
        out = out @ factor
    return out


def specialize(e: GroupRingElem, rho: RepFamily) -> Matrix:
    """Ring homomorphism from the group ring into RatFunc matrices."""
    out = Matrix.zeros(rho.rank, rho.rank, _ZERO)
    for w, c in e.terms.items():
        out = out + specialize_word(w, rho).scale(RatFunc.coerce(c))
    return out


def presentation_complex(generators, relators, rho: RepFamily):
    """Twisted chain complex of the 2-complex of a presentation.

    C_2 has one block per relator, C_1 one per generator, C_0 one cell;
    blocks are rho.rank wide.  d_2 carries the Fox derivatives, d_1 the
    blocks rho(x_j) - 1 (both transposed into column convention), and
    d_1 . d_2 = 0 exactly by the fundamental identity of the free
    calculus whenever every relator maps to the identity.
    """
    from .complexes import BasedChainComplex

    ngens = int(generators)
    if ngens < 1:
        raise ValueError("presentation needs at least one generator")
    relators = list(relators)
    if rho.ngens < ngens:
        raise ValueError(
            f"representation covers {rho.ngens} generators, presentation has {ngens}"
        )
    for rel in relators:
        if rel.max_generator() >= ngens:
            raise ValueError(
                f"relator {format_word(rel)!r} uses an undeclared generator"
            )
        img = specialize_word(rel, rho)
        if img != Matrix.identity(rho.rank, _ONE, _ZERO):
            raise ValueError(
                f"relator {format_word(rel)!r} is not respected by the representation"
            )
    d = rho.rank
    ident = Matrix.identity(d, _ONE, _ZERO)

    # d_1 : C_1 -> C_0, block row of (rho(x_j) - 1)^T
    d1_rows = [[_ZERO] * (ngens * d) for _ in range(d)]
    for j in range(ngens):
        block = (rho.image(j) - ident).transpose()
        for a in range(d):
            for b in range(d):
                d1_rows[a][j * d + b] = block[a, b]
    d1 = Matrix(d1_rows, ngens * d)

    # d_2 : C_2 -> C_1, block (j, i) = rho(d r_i / d x_j)^T
    d2_rows = [[_ZERO] * (len(relators) * d) for _ in range(ngens * d)]
    for i, rel in enumerate(relators):
        for j in range(ngens):
            block = specialize(fox_derivative(rel, j), rho).transpose()
            for a in range(d):
                for b in range(d):
                    d2_rows[j * d + a][i * d + b] = block[a, b]
    d2 = Matrix(d2_rows, len(relators) * d)

    ranks = [d, ngens * d, len(relators) * d]
    boundaries = [d1, d2]
    if not relators:
        ranks = ranks[:2]
        boundaries = boundaries[:1]
    return BasedChainComplex(ranks, boundaries)


def format_word(w: Word) -> str:
    """Letter-exponent text like ``x0 x1 x0^-1 x1^-1`` (empty for 1)."""
    parts = []
    for g, e in w.letters:
        parts.append(f"x{g}" if e == 1 else f"x{g}^-1")
    return " ".join(parts)


def parse_word(text: str, names: list[str]) -> Word:
    """Parse a letter-exponent word over the named generators.

    Tokens are generator names with an optional ``^k`` exponent for a
    nonzero integer k (so ``x^-2`` means two inverse letters).
    """
    letters: list[tuple[int, int]] = []
    for tok in text.split():
        if "^" in tok:
            name, _, exp_text = tok.partition("^")
            try:
                exp = int(exp_text)
            except ValueError:
                raise ValueError(f"bad exponent in word token {tok!r}") from None
        else:
            name, exp = tok, 1
        if name not in names:
            raise ValueError(f"unknown generator {name!r} in word")
        if exp == 0:
            continue
        g = names.index(name)
        step = 1 if exp > 0 else -1
        letters.extend((g, step) for _ in range(abs(exp)))
    return Word(letters)
