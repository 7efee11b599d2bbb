"""Counter-based deterministic pseudo-random numbers (splitmix64).

Draw k from seed s is mix64(s + (k + 1) * GOLDEN) where mix64 is the
splitmix64 finalizer. Being a pure function of (seed, counter), the stream is
bit-reproducible in any language with 64-bit unsigned arithmetic, which is what
the synthetic generator and the split protocol need for byte-identical outputs.
"""

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15

ALGORITHM_ID = "splitmix64"


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return (z ^ (z >> 31)) & MASK64


def draw(seed: int, counter: int) -> int:
    """The counter-th 64-bit draw of the stream seeded with seed."""
    return mix64((seed + (counter + 1) * GOLDEN) & MASK64)


class Stream:
    """Stateful wrapper over the counter-based draws."""

    def __init__(self, seed: int):
        self.seed = seed & MASK64
        self.counter = 0

    def next_u64(self) -> int:
        value = draw(self.seed, self.counter)
        self.counter += 1
        return value

    def uniform(self) -> float:
        """Float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def below(self, n: int) -> int:
        """Unbiased integer in [0, n) via rejection sampling."""
        if n <= 0:
            raise ValueError("below() requires n >= 1")
        limit = MASK64 + 1 - ((MASK64 + 1) % n)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n

    def randint(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi] inclusive."""
        return lo + self.below(hi - lo + 1)

    def chance(self, p: float) -> bool:
        return self.uniform() < p

    def choice(self, items):
        return items[self.below(len(items))]

    def shuffled(self, items):
        """Fisher-Yates permutation of a copy of items."""
        out = list(items)
        for i in range(len(out) - 1, 0, -1):
            j = self.below(i + 1)
            out[i], out[j] = out[j], out[i]
        return out
