"""Integer partitions: the index set of every measure in this package.

A partition is stored as a tuple of weakly decreasing positive integers
(trailing zeros implicit).  Alongside the usual combinatorics (conjugate,
Frobenius coordinates, containment) this module provides the deterministic
enumeration used by the brute-force correlation oracle: partitions ordered
by size, and within a size in reverse-lexicographic order of parts.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class Partition:
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        raw = tuple(int(p) for p in parts)
        for i, p in enumerate(raw):
            if p < 0:
                raise ValueError(f"parts must be nonnegative, got {p}")
            if i and raw[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {raw}")
        self.parts = tuple(p for p in raw if p)

    # -- basic structure ---------------------------------------------------

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (1-indexed), zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram: lambda'_i = #{j : lambda_j >= i}."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for i in range(p):
                cols[i] += 1
        return Partition(cols)

    def contains(self, other: "Partition") -> bool:
        """Containment of Young diagrams, mu subset-of self."""
        return all(self.part(i + 1) >= p for i, p in enumerate(other.parts))

    def frobenius(self) -> list[tuple[int, int]]:
        """Frobenius coordinates [(a_1, b_1), ..., (a_d, b_d)].

        a_i = lambda_i - i and b_i = lambda'_i - i for i up to the Durfee
        square side d, so a_1 > a_2 > ... >= 0 and b_1 > b_2 > ... >= 0.
        """
        conj = self.conjugate()
        coords = []
        for i in range(1, len(self.parts) + 1):
            a = self.part(i) - i
            if a < 0:
                break
            coords.append((a, conj.part(i) - i))
        return coords

    def occupies(self, site: int) -> bool:
        """Whether `site` lies in the point configuration {lambda_i - i : i >= 1}."""
        if site <= -len(self.parts) - 1:
            return True  # packed tail of the Fermi sea
        return any(p - i == site for i, p in enumerate(self.parts, start=1))

    def configuration(self, depth: int) -> list[int]:
        """First `depth` particle positions lambda_i - i, strictly decreasing.

        Below the length the positions are the trivial -i tail of the sea.
        """
        return [self.part(i) - i for i in range(1, depth + 1)]

    # -- dunder plumbing ----------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"


def from_frobenius(arms: Sequence[int], legs: Sequence[int]) -> Partition:
    """Rebuild a partition from Frobenius coordinates (arms | legs)."""
    if len(arms) != len(legs):
        raise ValueError("arm and leg lists must have equal length")
    d = len(arms)
    if any(arms[i] <= arms[i + 1] for i in range(d - 1)) or any(
        legs[i] <= legs[i + 1] for i in range(d - 1)
    ):
        raise ValueError("Frobenius coordinates must be strictly decreasing")
    rows = [arms[i] + i + 1 for i in range(d)]
    # rows below the Durfee square from the column data: lambda'_j = legs[j-1] + j
    col_heights = [legs[j] + j + 1 for j in range(d)]
    max_extra = (col_heights[0] - d) if d else 0
    for i in range(d + 1, d + max_extra + 1):
        rows.append(sum(1 for h in col_heights if h >= i))
    return Partition(rows)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n with parts <= max_part, reverse-lexicographically."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def enumerate_partitions(max_size: int) -> Iterator[Partition]:
    """Every partition of size <= max_size exactly once.

    Deterministic order: by size, then reverse-lexicographic parts.
    """
    if max_size < 0:
        raise ValueError("max_size must be >= 0")
    for n in range(max_size + 1):
        for parts in partitions_of(n):
            yield Partition(parts)


def partitions_of_size(n: int) -> Iterator[Partition]:
    """Partitions of exactly n, in the same deterministic order."""
    for parts in partitions_of(n):
        yield Partition(parts)


def symplectic_expansion_shapes(max_size: int) -> list[Partition]:
    """Partitions with Frobenius coordinates (a_1, a_2, ... | a_1+1, a_2+1, ...).

    These index the signed skew-Schur expansion of the symplectic characters;
    the empty partition is included.  Each shape has even size 2*(sum a_i + d).
    """
    shapes = [Partition()]
    for arms in _strict_arm_lists(max_size, shift=1):
        shapes.append(from_frobenius(arms, [a + 1 for a in arms]))
    return shapes


def orthogonal_expansion_shapes(max_size: int) -> list[Partition]:
    """Partitions with Frobenius coordinates (b_1+1, b_2+1, ... | b_1, b_2, ...)."""
    shapes = [Partition()]
    for legs in _strict_arm_lists(max_size, shift=1):
        shapes.append(from_frobenius([b + 1 for b in legs], legs))
    return shapes


def _strict_arm_lists(max_size: int, shift: int) -> Iterator[list[int]]:
    """Nonempty strictly decreasing a_1 > ... > a_d >= 0 with sum 2*a_i + (1+shift)*d <= max_size."""

    def rec(budget: int, bound: int) -> Iterator[list[int]]:
        for a in range(min(bound, (budget - 1 - shift) // 2), -1, -1):
            head_cost = 2 * a + 1 + shift
            yield [a]
            for tail in rec(budget - head_cost, a - 1):
                yield [a] + tail

    yield from rec(max_size, max_size)
