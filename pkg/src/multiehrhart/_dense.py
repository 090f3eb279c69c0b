"""Dense box-shaped kernels for long chains of binomial multiplications.

A polynomial is held as an object-dtype ndarray (exact Python ints) plus
the exponent of its lowest corner.  Only used where a chain of
``(1 - q^a)`` products on a large polynomial would dominate the runtime.
"""
import numpy as np


class Dense:
    __slots__ = ("arr", "lo")

    def __init__(self, arr, lo):
        self.arr = arr
        self.lo = tuple(lo)

    def items(self):
        nz = np.nonzero(self.arr)
        lo = self.lo
        vals = self.arr[nz]
        coords = np.stack(nz, axis=1) + np.array(lo, dtype=np.int64)
        return [(tuple(int(x) for x in e), int(c)) for e, c in zip(coords, vals)]

    def _grown(self, lo, shape):
        arr = np.zeros(shape, dtype=object)
        off = tuple(slice(a - b, a - b + s) for a, b, s in zip(self.lo, lo, self.arr.shape))
        arr[off] = self.arr
        return arr

    def times_binomial(self, a, k=1):
        out = self
        for _ in range(k):
            lo = tuple(l + min(x, 0) for l, x in zip(out.lo, a))
            shape = tuple(s + abs(x) for s, x in zip(out.arr.shape, a))
            arr = out._grown(lo, shape)
            sl = tuple(
                slice(ol - l + x, ol - l + x + s)
                for ol, l, x, s in zip(out.lo, lo, a, out.arr.shape)
            )
            arr[sl] -= out.arr
            out = Dense(arr, lo)
        return out

    def add_scaled(self, other, scale=1):
        lo = tuple(min(a, b) for a, b in zip(self.lo, other.lo))
        hi = tuple(
            max(a + s, b + t)
            for a, s, b, t in zip(self.lo, self.arr.shape, other.lo, other.arr.shape)
        )
        shape = tuple(h - l for h, l in zip(hi, lo))
        arr = self._grown(lo, shape)
        sl = tuple(slice(b - l, b - l + t) for b, l, t in zip(other.lo, lo, other.arr.shape))
        if scale == 1:
            arr[sl] += other.arr
        else:
            arr[sl] += other.arr * scale
        return Dense(arr, lo)

    def shift(self, e):
        return Dense(self.arr, tuple(a + b for a, b in zip(self.lo, e)))

    def negate(self):
        return Dense(-self.arr, self.lo)

    def trimmed(self):
        """Smallest box holding every nonzero entry (None for zero)."""
        nz = np.nonzero(self.arr)
        if not len(nz[0]):
            return None
        lo = [int(ix.min()) for ix in nz]
        hi = [int(ix.max()) + 1 for ix in nz]
        arr = self.arr[tuple(slice(a, b) for a, b in zip(lo, hi))]
        return Dense(arr, tuple(a + b for a, b in zip(self.lo, lo)))

    def same_as(self, other):
        a, b = self.trimmed(), other.trimmed()
        if a is None or b is None:
            return a is None and b is None
        return a.lo == b.lo and a.arr.shape == b.arr.shape and bool((a.arr == b.arr).all())
