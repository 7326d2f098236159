"""Free groups on indexed generators, their endomorphisms, group-ring
arithmetic, and right Fox derivatives.

Words are reduced eagerly and stored as sequences of (generator index,
exponent ±1) letters.  The Fox derivative convention is the right one: the
coordinate maps D_k satisfy w - eps(w)·e = sum_k (x_k - 1)·D_k(w), with
coefficients on the right of the basis elements (x_k - 1).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class FreeGroupError(Exception):
    pass


class IndexOutOfRange(FreeGroupError):
    pass


class ArityMismatch(FreeGroupError):
    pass


class NotInIdeal(FreeGroupError):
    pass


class FreeWord:
    """Reduced word in generators x1, x2, ...; the empty word is the identity."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[tuple[int, int]] = ()):
        reduced: list[tuple[int, int]] = []
        for idx, exp in letters:
            if exp not in (1, -1):
                raise FreeGroupError("letters carry exponent ±1")
            if idx < 1:
                raise IndexOutOfRange(f"generator index {idx} < 1")
            if reduced and reduced[-1][0] == idx and reduced[-1][1] == -exp:
                reduced.pop()
            else:
                reduced.append((idx, exp))
        self.letters = tuple(reduced)

    @classmethod
    def identity(cls) -> "FreeWord":
        return cls()

    @classmethod
    def gen(cls, idx: int, exp: int = 1) -> "FreeWord":
        if exp == 0:
            return cls()
        sign = 1 if exp > 0 else -1
        return cls([(idx, sign)] * abs(exp))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord((idx, -exp) for idx, exp in reversed(self.letters))

    def __pow__(self, n: int) -> "FreeWord":
        if n < 0:
            return self.inverse() ** (-n)
        out = FreeWord()
        for _ in range(n):
            out = out * self
        return out

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def max_index(self) -> int:
        return max((idx for idx, _ in self.letters), default=0)

    def shift(self, by: int) -> "FreeWord":
        """Reindex every generator x_i to x_{i+by}."""
        return FreeWord((idx + by, exp) for idx, exp in self.letters)

    def exponent_sums(self, arity: int) -> list[int]:
        sums = [0] * arity
        for idx, exp in self.letters:
            if idx > arity:
                raise IndexOutOfRange(f"index {idx} exceeds arity {arity}")
            sums[idx - 1] += exp
        return sums

    def cyclically_reduced(self) -> "FreeWord":
        ls = list(self.letters)
        while len(ls) >= 2 and ls[0][0] == ls[-1][0] and ls[0][1] == -ls[-1][1]:
            ls = ls[1:-1]
        return FreeWord(ls)

    # word syntax "x1 x2^-1 x1"; identity is "e"

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(f"x{idx}" if exp == 1 else f"x{idx}^-1" for idx, exp in self.letters)

    def __repr__(self) -> str:
        return f"FreeWord({self})"

    @classmethod
    def parse(cls, text: str) -> "FreeWord":
        text = text.strip()
        if text in ("e", ""):
            return cls()
        letters = []
        for tok in text.split():
            if "^" in tok:
                head, exp_str = tok.split("^")
                exp = int(exp_str)
            else:
                head, exp = tok, 1
            if not head.startswith("x"):
                raise FreeGroupError(f"bad generator token {tok!r}")
            idx = int(head[1:])
            sign = 1 if exp > 0 else -1
            letters.extend([(idx, sign)] * abs(exp))
        return cls(letters)


def word_mul(u: FreeWord, v: FreeWord) -> FreeWord:
    return u * v


class FreeEndomorphism:
    """Endomorphism of a free group of fixed arity, given on generators."""

    __slots__ = ("arity", "images")

    def __init__(self, arity: int, images: Sequence[FreeWord]):
        if len(images) != arity:
            raise ArityMismatch(f"{len(images)} images for arity {arity}")
        self.arity = arity
        self.images = tuple(images)

    @classmethod
    def identity(cls, arity: int) -> "FreeEndomorphism":
        return cls(arity, [FreeWord.gen(i) for i in range(1, arity + 1)])

    def apply(self, w: FreeWord) -> FreeWord:
        out: list[tuple[int, int]] = []
        for idx, exp in w.letters:
            if idx > self.arity:
                raise IndexOutOfRange(f"index {idx} exceeds arity {self.arity}")
            img = self.images[idx - 1]
            out.extend(img.letters if exp == 1 else img.inverse().letters)
        return FreeWord(out)

    def compose(self, other: "FreeEndomorphism") -> "FreeEndomorphism":
        """(self ∘ other)(x_i) = self(other(x_i))."""
        if self.arity != other.arity:
            raise ArityMismatch(f"{self.arity} vs {other.arity}")
        return FreeEndomorphism(self.arity, [self.apply(img) for img in other.images])

    def is_identity(self) -> bool:
        return all(img == FreeWord.gen(i + 1) for i, img in enumerate(self.images))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FreeEndomorphism)
            and self.arity == other.arity
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.arity, self.images))

    def __repr__(self):
        ims = ", ".join(f"x{i + 1}↦{img}" for i, img in enumerate(self.images))
        return f"FreeEndomorphism({ims})"


def endo_apply(phi: FreeEndomorphism, w: FreeWord) -> FreeWord:
    return phi.apply(w)


def endo_compose(phi: FreeEndomorphism, psi: FreeEndomorphism) -> FreeEndomorphism:
    return phi.compose(psi)


class GroupRingElement:
    """Formal QQ-linear combination of free words; zero coefficients absent."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[FreeWord, Fraction] | None = None):
        clean: dict[FreeWord, Fraction] = {}
        if terms:
            for w, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    clean[w] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "GroupRingElement":
        return cls()

    @classmethod
    def one(cls) -> "GroupRingElement":
        return cls({FreeWord(): Fraction(1)})

    @classmethod
    def of_word(cls, w: FreeWord, c=1) -> "GroupRingElement":
        return cls({w: Fraction(c)})

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return GroupRingElement(out)

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) - c
        return GroupRingElement(out)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        out: dict[FreeWord, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                out[w] = out.get(w, Fraction(0)) + c1 * c2
        return GroupRingElement(out)

    def right_mul_word(self, v: FreeWord) -> "GroupRingElement":
        return GroupRingElement({w * v: c for w, c in self.terms.items()})

    def scale(self, c) -> "GroupRingElement":
        c = Fraction(c)
        return GroupRingElement({w: k * c for w, k in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def apply_endo(self, phi: FreeEndomorphism) -> "GroupRingElement":
        out: dict[FreeWord, Fraction] = {}
        for w, c in self.terms.items():
            img = phi.apply(w)
            out[img] = out.get(img, Fraction(0)) + c
        return GroupRingElement(out)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w.letters), w.letters)):
            parts.append(f"{self.terms[w]}·[{w}]")
        return " + ".join(parts)


def augmentation(a: GroupRingElement) -> Fraction:
    """Sum of coefficients; a ring homomorphism onto the scalars."""
    return sum(a.terms.values(), Fraction(0))


def fox_right(w: FreeWord, k: int) -> GroupRingElement:
    """Right Fox derivative D_k.

    D_k(x_i) = delta_ik, D_k(x_i^-1) = -delta_ik·x_i^-1, and
    D_k(uv) = D_k(u)·v + D_k(v), so that w - eps(w)·e = sum (x_k - 1)·D_k(w).
    """
    if k < 1:
        raise IndexOutOfRange("generator index must be ≥ 1")
    acc = GroupRingElement.zero()
    # fold letters left to right: D(u·l) = D(u)·l + D(l)
    for idx, exp in w.letters:
        letter = FreeWord.gen(idx, exp)
        acc = acc.right_mul_word(letter)
        if idx == k:
            if exp == 1:
                acc = acc + GroupRingElement.one()
            else:
                acc = acc - GroupRingElement.of_word(letter)
    return acc


def fox_gradient(w: FreeWord, arity: int) -> list[GroupRingElement]:
    return [fox_right(w, k) for k in range(1, arity + 1)]


def aug_coordinates(a: GroupRingElement, rank: int) -> list[GroupRingElement]:
    """Coordinates of an augmentation-ideal element in the right-module basis
    {x_k - 1}: a = sum_k (x_k - 1)·coords[k]."""
    if augmentation(a) != 0:
        raise NotInIdeal("element has nonzero augmentation")
    coords = [GroupRingElement.zero() for _ in range(rank)]
    for w, c in a.terms.items():
        if w.max_index() > rank:
            raise IndexOutOfRange(f"word {w} exceeds rank {rank}")
        for k in range(1, rank + 1):
            d = fox_right(w, k)
            if not d.is_zero():
                coords[k - 1] = coords[k - 1] + d.scale(c)
    return coords


def reconstruct_from_coordinates(coords: Sequence[GroupRingElement]) -> GroupRingElement:
    """sum_k (x_k - 1)·coords[k]; inverse of :func:`aug_coordinates`."""
    total = GroupRingElement.zero()
    for k, c in enumerate(coords, start=1):
        basis = GroupRingElement.of_word(FreeWord.gen(k)) - GroupRingElement.one()
        total = total + basis * c
    return total


def jacobian(phi: FreeEndomorphism) -> list[list[GroupRingElement]]:
    """Fox matrix J[k][j] = D_k(phi(x_j)); the chain expansion
    phi(x_j) - 1 = sum_k (x_k - 1)·J[k][j] holds exactly."""
    n = phi.arity
    return [[fox_right(phi.images[j], k + 1) for j in range(n)] for k in range(n)]


def abelianized_jacobian(phi: FreeEndomorphism) -> list[list[int]]:
    """Entry-wise augmentation of the Fox matrix; the matrix of the induced
    map on the abelianization ZZ^arity."""
    n = phi.arity
    out = [[0] * n for _ in range(n)]
    for j in range(n):
        sums = [0] * n
        for idx, exp in phi.images[j].letters:
            sums[idx - 1] += exp
        for k in range(n):
            out[k][j] = sums[k]
    return out
