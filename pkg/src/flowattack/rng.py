"""Portable 64-bit pseudo-random generator.

All randomness in the package flows through :class:`SplitMix64` so that a
seed reproduces the same stream on every platform and in every language
that implements the same recurrence::

    state <- state + 0x9E3779B97F4A7C15           (mod 2**64)
    z <- state
    z <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9     (mod 2**64)
    z <- (z ^ (z >> 27)) * 0x94D049BB133111EB     (mod 2**64)
    output z ^ (z >> 31)

Bounded integers use rejection sampling on the raw 64-bit output
(``r % bound`` after discarding ``r >= 2**64 - 2**64 % bound``), floats take
the top 53 bits.
"""

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z):
    """The SplitMix64 output finalizer applied to a single 64-bit word."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(master, *keys):
    """Derive a child seed from ``master`` and a sequence of integer keys.

    Each key is folded in as ``s <- mix64(s + GOLDEN_GAMMA * (key + 1))``, so
    the result depends on the order of the keys.
    """
    s = master & MASK64
    for key in keys:
        s = mix64(s + GOLDEN_GAMMA * ((int(key) & MASK64) + 1))
    return s


class SplitMix64:
    """SplitMix64 stream with the few sampling helpers the generators need."""

    def __init__(self, seed):
        self.state = int(seed) & MASK64

    def next_u64(self):
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def randbelow(self, bound):
        """Uniform integer in ``[0, bound)``."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound

    def randint(self, lo, hi):
        """Uniform integer in the closed range ``[lo, hi]``."""
        if lo > hi:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.randbelow(hi - lo + 1)

    def random(self):
        """Uniform float in ``[0, 1)`` with 53 bits of resolution."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def choice(self, seq):
        if not seq:
            raise IndexError("cannot choose from an empty sequence")
        return seq[self.randbelow(len(seq))]

    def shuffle(self, items):
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]
