"""Vertex bit sets backed by Python integers."""

import numpy as np


class CandidateSet:
    """Immutable set of vertices ``0..n-1`` stored as an integer bit mask.

    Bit ``v`` is set iff vertex ``v`` is a member. Intersection and union
    are single big-integer operations; the population count is cached.
    """

    __slots__ = ("n", "bits", "_count")

    def __init__(self, n, bits=0):
        if bits < 0 or bits >> n:
            raise ValueError("bits outside 0..n-1")
        self.n = n
        self.bits = bits
        self._count = None

    @classmethod
    def from_mask(cls, mask):
        mask = np.asarray(mask, dtype=bool)
        raw = np.packbits(mask, bitorder="little").tobytes()
        return cls(mask.size, int.from_bytes(raw, "little"))

    @classmethod
    def from_vertices(cls, n, vertices):
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range")
            bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def full(cls, n):
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n):
        return cls(n, 0)

    def to_mask(self):
        nbytes = (self.n + 7) // 8
        raw = np.frombuffer(self.bits.to_bytes(nbytes, "little"), dtype=np.uint8)
        return np.unpackbits(raw, bitorder="little")[: self.n].astype(bool)

    def __len__(self):
        if self._count is None:
            self._count = self.bits.bit_count()
        return self._count

    def __bool__(self):
        return self.bits != 0

    def __contains__(self, v):
        return 0 <= v < self.n and (self.bits >> v) & 1 == 1

    def __iter__(self):
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def min(self):
        if not self.bits:
            raise ValueError("empty set")
        return (self.bits & -self.bits).bit_length() - 1

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("sets over different vertex ranges")

    def __and__(self, other):
        self._check(other)
        return CandidateSet(self.n, self.bits & other.bits)

    def __or__(self, other):
        self._check(other)
        return CandidateSet(self.n, self.bits | other.bits)

    def __sub__(self, other):
        self._check(other)
        return CandidateSet(self.n, self.bits & ~other.bits)

    def complement(self):
        return CandidateSet(self.n, ((1 << self.n) - 1) ^ self.bits)

    def isdisjoint(self, other):
        self._check(other)
        return self.bits & other.bits == 0

    def issubset(self, other):
        self._check(other)
        return self.bits & ~other.bits == 0

    def __eq__(self, other):
        if isinstance(other, CandidateSet):
            return self.n == other.n and self.bits == other.bits
        if isinstance(other, (set, frozenset)):
            return set(self) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.bits))

    def __repr__(self):
        return f"CandidateSet({sorted(self)})"
