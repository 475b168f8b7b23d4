"""Permutations and free-group words.

Composition convention: permutations act on the right and products read
left to right, ``(p * q)[x] == q[p[x]]`` ("apply p, then q").
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable, List, Sequence, Tuple

from core.errors import InvalidInput


@dataclass(frozen=True, order=True)
class Permutation:
    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise InvalidInput(f"{list(images)} is not a permutation of 0..{len(images) - 1}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        for cycle in cycles:
            for k, point in enumerate(cycle):
                images[point] = cycle[(k + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise InvalidInput("cannot compose permutations of different degrees")
        return Permutation(tuple(other.images[x] for x in self.images))

    def inverse(self) -> "Permutation":
        out = [0] * self.degree
        for i, x in enumerate(self.images):
            out[x] = i
        return Permutation(tuple(out))

    def __pow__(self, exponent: int) -> "Permutation":
        base = self if exponent >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def to_json(self) -> List[int]:
        return list(self.images)

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)


def element_order(g: Permutation) -> int:
    """Least k >= 1 with g^k = id."""

    return g.order()


def product(perms: Iterable[Permutation], degree: int) -> Permutation:
    result = Permutation.identity(degree)
    for p in perms:
        result = result * p
    return result


@dataclass(frozen=True)
class FreeWord:
    """Reduced word in a free group; letters are signed 1-based generator indices."""

    letters: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        stack: List[int] = []
        for letter in self.letters:
            letter = int(letter)
            if letter == 0:
                raise InvalidInput("generator index 0 is not allowed (indices are 1-based)")
            if stack and stack[-1] == -letter:
                stack.pop()
            else:
                stack.append(letter)
        object.__setattr__(self, "letters", tuple(stack))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple(-x for x in reversed(self.letters)))

    def exponent_sums(self, rank: int) -> List[int]:
        sums = [0] * rank
        for letter in self.letters:
            if abs(letter) > rank:
                raise InvalidInput(f"letter {letter} exceeds rank {rank}")
            sums[abs(letter) - 1] += 1 if letter > 0 else -1
        return sums

    def evaluate(self, images: Sequence[Permutation], degree: int) -> Permutation:
        """Image under the homomorphism sending generator j to ``images[j-1]``."""

        result = Permutation.identity(degree)
        for letter in self.letters:
            if abs(letter) > len(images):
                raise InvalidInput(f"letter {letter} refers to a missing generator")
            g = images[abs(letter) - 1]
            result = result * (g if letter > 0 else g.inverse())
        return result

    def to_json(self) -> List[int]:
        return list(self.letters)


__all__ = ["FreeWord", "Permutation", "element_order", "product"]
