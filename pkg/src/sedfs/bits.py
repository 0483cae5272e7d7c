"""Bit-level building blocks and the working-memory audit.

Everything that touches raw bits lives here: the growable bit vector, the
variable-width turn stack and its grouped variant, the choice dictionary,
the ternary array, the statically allocated variable-width array, the
ragged array of variable-length bit strings, and the BitMeter that audits
all of them.

Vertex-indexed structures use 1-based indices throughout (vertices are
1..n everywhere in this package).
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
WORD = 64


def ceil_log2(x: int) -> int:
    """Smallest w with 2**w >= x, for x >= 1."""
    return (x - 1).bit_length()


class BitUnderflowError(Exception):
    """Pop from an empty (or too-shallow) bit stack."""


class EmptySetError(Exception):
    """choice() on an empty choice dictionary."""


class BitMeter:
    """Named categories of working memory, current and peak bit counts.

    Categories sum to the reported total; peak >= current at all times,
    and the total peak is the peak of the running sum (not the sum of
    per-category peaks).
    """

    def __init__(self):
        self._cur = {}
        self._peak = {}
        self._total_cur = 0
        self._total_peak = 0

    def set_bits(self, category, bits):
        old = self._cur.get(category, 0)
        self._cur[category] = bits
        if bits > self._peak.get(category, 0):
            self._peak[category] = bits
        self._total_cur += bits - old
        if self._total_cur > self._total_peak:
            self._total_peak = self._total_cur

    def add_bits(self, category, delta):
        self.set_bits(category, self._cur.get(category, 0) + delta)

    def current(self, category):
        return self._cur.get(category, 0)

    def peak(self, category):
        return self._peak.get(category, 0)

    def total_current(self):
        return self._total_cur

    def total_peak(self):
        return self._total_peak

    def report(self):
        return {
            cat: {"current_bits": self._cur[cat], "peak_bits": self._peak.get(cat, 0)}
            for cat in self._cur
        }

    def to_json(self):
        import json

        return json.dumps(self.report(), sort_keys=True)


class BitVec:
    """Growable bit array backed by 64-bit words."""

    __slots__ = ("words", "nbits")

    def __init__(self, nbits=0):
        self.nbits = nbits
        self.words = [0] * ((nbits + 63) >> 6)

    def get_bit(self, i):
        return (self.words[i >> 6] >> (i & 63)) & 1

    def set_bit(self, i):
        self.words[i >> 6] |= 1 << (i & 63)

    def clear_bit(self, i):
        self.words[i >> 6] &= ~(1 << (i & 63))

    def get_bits(self, off, width):
        res = 0
        shift = 0
        w = off >> 6
        o = off & 63
        words = self.words
        while width > 0:
            take = 64 - o
            if take > width:
                take = width
            res |= ((words[w] >> o) & ((1 << take) - 1)) << shift
            shift += take
            width -= take
            w += 1
            o = 0
        return res

    def set_bits(self, off, width, val):
        w = off >> 6
        o = off & 63
        words = self.words
        while width > 0:
            take = 64 - o
            if take > width:
                take = width
            mask = ((1 << take) - 1) << o
            words[w] = (words[w] & ~mask) | (((val & ((1 << take) - 1)) << o))
            val >>= take
            width -= take
            w += 1
            o = 0

    def append_bits(self, val, width):
        i = self.nbits
        self.nbits = i + width
        need = (self.nbits + 63) >> 6
        words = self.words
        while len(words) < need:
            words.append(0)
        if width:
            self.set_bits(i, width, val)

    def pop_bits(self, width):
        if width > self.nbits:
            raise BitUnderflowError("pop of %d bits from %d" % (width, self.nbits))
        i = self.nbits - width
        v = self.get_bits(i, width) if width else 0
        if width:
            self.set_bits(i, width, 0)
        self.nbits = i
        return v

    def bit_size(self):
        return self.nbits


class BitStack:
    """Stack of variable-width entries; the width is a function of the
    pushing vertex's degree: push(value, d) appends exactly
    ceil(log2(d-1)) bits, for d >= 3."""

    __slots__ = ("bits", "meter", "category")

    def __init__(self, meter=None, category="turn_stack"):
        self.bits = BitVec()
        self.meter = meter
        self.category = category
        if meter is not None:
            meter.set_bits(category, 0)

    def push(self, value, degree):
        if degree < 3:
            raise ValueError("degree must be >= 3, got %d" % degree)
        width = (degree - 2).bit_length()
        if not 0 <= value < (1 << width):
            raise ValueError("value %d out of range for degree %d" % (value, degree))
        self.bits.append_bits(value, width)
        if self.meter is not None:
            self.meter.set_bits(self.category, self.bits.nbits)

    def pop(self, degree):
        if degree < 3:
            raise ValueError("degree must be >= 3, got %d" % degree)
        width = (degree - 2).bit_length()
        v = self.bits.pop_bits(width)
        if self.meter is not None:
            self.meter.set_bits(self.category, self.bits.nbits)
        return v

    def bit_size(self):
        return self.bits.nbits


# degree -> (group size, base = degree-1, bits per flushed group)
_GROUP_CLASSES = {4: (5, 3, 8), 6: (3, 5, 7), 7: (3, 6, 8)}


class GroupedStack:
    """Turn stack that batches entries of degree 4, 6 and 7 into groups
    (sizes 5, 3, 3) so that every stored entry costs at most (2/5)*d bits.

    An incomplete group per degree class is staged outside the stack.
    """

    __slots__ = ("stack", "staging", "meter", "category")

    def __init__(self, meter=None, category="turn_stack"):
        self.stack = BitStack()
        self.staging = {4: [], 6: [], 7: []}
        self.meter = meter
        self.category = category
        if meter is not None:
            meter.set_bits(category, 0)

    def _update_meter(self):
        if self.meter is not None:
            self.meter.set_bits(self.category, self.bit_size())

    def push(self, value, degree):
        cls = _GROUP_CLASSES.get(degree)
        if cls is None:
            self.stack.push(value, degree)
        else:
            gsize, base, gbits = cls
            if not 0 <= value < base:
                raise ValueError("value %d out of range for degree %d" % (value, degree))
            stage = self.staging[degree]
            stage.append(value)
            if len(stage) == gsize:
                packed = 0
                for v in reversed(stage):
                    packed = packed * base + v
                self.stack.bits.append_bits(packed, gbits)
                stage.clear()
        self._update_meter()

    def pop(self, degree):
        cls = _GROUP_CLASSES.get(degree)
        if cls is None:
            v = self.stack.pop(degree)
        else:
            gsize, base, gbits = cls
            stage = self.staging[degree]
            if not stage:
                packed = self.stack.bits.pop_bits(gbits)
                for _ in range(gsize):
                    stage.append(packed % base)
                    packed //= base
            v = stage.pop()
        self._update_meter()
        return v

    def staged_bits(self):
        total = 0
        for d, stage in self.staging.items():
            total += len(stage) * (d - 2).bit_length()
        return total

    def stored_bits(self):
        return self.stack.bit_size()

    def bit_size(self):
        return self.stack.bit_size() + self.staged_bits()


class ChoiceDict:
    """Subset of {1..n} in n + O(n/64) bits with insert, delete, contains,
    choice (return some member; here the smallest) and member iteration.

    A 64-ary summary tree replaces the constant-time construction; the
    tree has at most ceil(log64 n) levels.
    """

    __slots__ = ("n", "levels", "_count", "meter", "category")

    def __init__(self, n, meter=None, category="choice_dict"):
        self.n = n
        levels = []
        size = max(n, 1)
        while True:
            nwords = (size + 63) >> 6
            levels.append([0] * nwords)
            if nwords == 1:
                break
            size = nwords
        self.levels = levels
        self._count = 0
        self.meter = meter
        self.category = category
        if meter is not None:
            meter.set_bits(category, self.bit_size())

    def __len__(self):
        return self._count

    def contains(self, v):
        i = v - 1
        return (self.levels[0][i >> 6] >> (i & 63)) & 1 == 1

    def insert(self, v):
        if not 1 <= v <= self.n:
            raise ValueError("element %d out of universe 1..%d" % (v, self.n))
        i = v - 1
        lvl0 = self.levels[0]
        if (lvl0[i >> 6] >> (i & 63)) & 1:
            return
        self._count += 1
        for lvl in self.levels:
            w = i >> 6
            had = lvl[w]
            lvl[w] = had | (1 << (i & 63))
            if had:
                break
            i = w

    def delete(self, v):
        if not 1 <= v <= self.n:
            raise ValueError("element %d out of universe 1..%d" % (v, self.n))
        i = v - 1
        lvl0 = self.levels[0]
        if not (lvl0[i >> 6] >> (i & 63)) & 1:
            return  # deleting a non-member is a no-op
        self._count -= 1
        for lvl in self.levels:
            w = i >> 6
            lvl[w] &= ~(1 << (i & 63))
            if lvl[w]:
                break
            i = w

    def choice(self):
        if self._count == 0:
            raise EmptySetError("choice() on empty set")
        idx = 0
        for lvl in reversed(self.levels):
            word = lvl[idx]
            idx = (idx << 6) | ((word & -word).bit_length() - 1)
        return idx + 1

    def iterate(self):
        """Yield the members in increasing order in O(|S|+1)-ish time."""

        def walk(level, idx):
            word = self.levels[level][idx]
            while word:
                b = (word & -word).bit_length() - 1
                word &= word - 1
                child = (idx << 6) | b
                if level == 0:
                    yield child + 1
                else:
                    yield from walk(level - 1, child)

        if self._count:
            yield from walk(len(self.levels) - 1, 0)

    def bit_size(self):
        return sum(len(lvl) for lvl in self.levels) * WORD


_TERNARY_BLOCK = 121  # trits per block; ceil(121*log2(3)) = 192 = 3 words
_TERNARY_BLOCK_BITS = 192
_POW3 = [3 ** i for i in range(_TERNARY_BLOCK + 1)]


class TernaryArray:
    """Sequence over {0,1,2} with blocks of 121 trits packed base-3 into
    192-bit integers: 1.587 bits/trit against the log2(3) = 1.585 optimum.

    The last, partial block is accounted at ceil(k*log2 3) bits.
    """

    __slots__ = ("n", "blocks", "meter", "category")

    def __init__(self, n, meter=None, category="ternary"):
        self.n = n
        self.blocks = [0] * ((n + _TERNARY_BLOCK - 1) // _TERNARY_BLOCK)
        self.meter = meter
        self.category = category
        if meter is not None:
            meter.set_bits(category, self.bit_size())

    def read(self, i):
        if not 1 <= i <= self.n:
            raise IndexError("index %d out of 1..%d" % (i, self.n))
        q, r = divmod(i - 1, _TERNARY_BLOCK)
        return (self.blocks[q] // _POW3[r]) % 3

    def write(self, i, t):
        if not 1 <= i <= self.n:
            raise IndexError("index %d out of 1..%d" % (i, self.n))
        if t not in (0, 1, 2):
            raise ValueError("trit must be 0, 1 or 2")
        q, r = divmod(i - 1, _TERNARY_BLOCK)
        p = _POW3[r]
        cur = (self.blocks[q] // p) % 3
        if cur != t:
            self.blocks[q] += (t - cur) * p

    def bit_size(self):
        full, rem = divmod(self.n, _TERNARY_BLOCK)
        bits = full * _TERNARY_BLOCK_BITS
        if rem:
            # ceil(rem * log2 3) without floating error: log2(3^rem)
            bits += (_POW3[rem] - 1).bit_length()
        return bits


class FixedWidthArray:
    """n entries of one fixed width, word-packed.  Internal helper."""

    __slots__ = ("n", "width", "bits")

    def __init__(self, n, width):
        self.n = n
        self.width = width
        self.bits = BitVec(n * width)

    def get(self, i):
        w = self.width
        return self.bits.get_bits(i * w, w) if w else 0

    def set(self, i, v):
        w = self.width
        if w:
            self.bits.set_bits(i * w, w, v)
        elif v:
            raise ValueError("nonzero value in zero-width entry")

    def bit_size(self):
        return self.n * self.width


class StaticAllocArray:
    """Array of n entries with fixed per-entry bit widths l_1..l_n.

    The payload is a single N-bit array; entry boundaries are recovered
    from the delimiter sequence 0^l_1 1 ... 0^l_n 1 via sampled select
    (one sample per 64 ones), for n + 2N + o(n+N) bits in total.
    """

    SAMPLE = 64

    __slots__ = ("n", "N", "payload", "delim", "samples", "meter", "category")

    def __init__(self, widths, meter=None, category="static_alloc"):
        n = len(widths)
        self.n = n
        N = 0
        delim_bits = []
        samples = []
        pos = -1
        ones = 0
        for w in widths:
            pos += w + 1
            ones += 1
            N += w
            if ones % self.SAMPLE == 0:
                samples.append(pos)
        self.N = N
        self.payload = BitVec(N)
        delim = BitVec(n + N)
        pos = -1
        for w in widths:
            pos += w + 1
            delim.set_bit(pos)
        self.delim = delim
        self.samples = samples
        self.meter = meter
        self.category = category
        if meter is not None:
            meter.set_bits(category, self.bit_size())

    def _select(self, k):
        """0-based position of the k-th one in the delimiter bits (k>=1)."""
        if k == 0:
            return -1
        sidx = k >> 6  # k // SAMPLE
        if sidx:
            pos = self.samples[sidx - 1]
            cnt = sidx << 6
        else:
            pos = -1
            cnt = 0
        if cnt == k:
            return pos
        words = self.delim.words
        w = (pos + 1) >> 6
        cur = words[w] & ~((1 << ((pos + 1) & 63)) - 1)
        while True:
            c = cur.bit_count()
            if cnt + c >= k:
                t = k - cnt
                while t > 1:
                    cur &= cur - 1
                    t -= 1
                return (w << 6) + (cur & -cur).bit_length() - 1
            cnt += c
            w += 1
            cur = words[w]

    def _window(self, j):
        if not 1 <= j <= self.n:
            raise IndexError("index %d out of 1..%d" % (j, self.n))
        lo = self._select(j - 1) - (j - 1) + 1
        hi = self._select(j) - j + 1
        return lo, hi - lo  # offset, width

    def width(self, j):
        return self._window(j)[1]

    def read(self, j):
        off, w = self._window(j)
        return self.payload.get_bits(off, w) if w else 0

    def write(self, j, val):
        off, w = self._window(j)
        if val >> w:
            raise ValueError("value %d too wide for %d-bit entry %d" % (val, w, j))
        if w:
            self.payload.set_bits(off, w, val)

    def bit_size(self):
        sample_bits = len(self.samples) * ceil_log2(self.n + self.N + 2)
        return self.N + (self.n + self.N) + sample_bits


class _PileStore:
    """Flat variable-length string store: groups of h strings, one pile per
    (group, length), each pile in a container it fills to >= 1/4, a free
    offset past the last container, and garbage collection once dead
    container space exceeds live container space plus n bits.
    """

    __slots__ = (
        "n", "cap", "h", "idx_bits", "lengths", "positions", "heap",
        "free_off", "dead_words", "live_words", "piles", "gc_count",
    )

    def __init__(self, n, cap, h):
        self.n = n
        self.cap = cap
        self.h = h
        self.idx_bits = max(1, ceil_log2(h + 1))
        self.lengths = FixedWidthArray(n, ceil_log2(cap + 2))
        self.positions = FixedWidthArray(n, max(1, ceil_log2(h + 1)))
        self.heap = []
        self.free_off = 0
        self.dead_words = 0
        self.live_words = 0
        self.piles = {}  # (group, length) -> [size, cap_words, off_words]
        self.gc_count = 0

    def _slot_words(self, length):
        return (length + self.idx_bits + 63) >> 6

    def _alloc(self, words):
        off = self.free_off
        self.free_off = off + words
        heap = self.heap
        if len(heap) < self.free_off:
            heap.extend([0] * (self.free_off - len(heap)))
        return off

    def _entry_read(self, off, sw):
        val = 0
        for j in range(sw - 1, -1, -1):
            val = (val << 64) | self.heap[off + j]
        return val

    def _entry_write(self, off, sw, val):
        for j in range(sw):
            self.heap[off + j] = val & MASK64
            val >>= 64

    def read(self, i):
        """Return (value, length) of string i (0-based)."""
        length = self.lengths.get(i)
        if length == 0:
            return 0, 0
        g = i // self.h
        pile = self.piles[(g, length)]
        sw = self._slot_words(length)
        pos = self.positions.get(i)
        entry = self._entry_read(pile[2] + pos * sw, sw)
        return entry & ((1 << length) - 1), length

    def write(self, i, val, length):
        if length > self.cap:
            raise ValueError("string of %d bits exceeds cap %d" % (length, self.cap))
        if val >> max(length, 1) and length == 0:
            raise ValueError("nonzero value with zero length")
        g = i // self.h
        old = self.lengths.get(i)
        entry = val | ((i % self.h) << length)
        if old == length:
            if length:
                pile = self.piles[(g, length)]
                sw = self._slot_words(length)
                self._entry_write(pile[2] + self.positions.get(i) * sw, sw, entry)
            return
        if old:
            self._pile_remove(g, old, i)
        if length:
            self._pile_insert(g, length, i, entry)
        self.lengths.set(i, length)
        if self.dead_words * WORD > self.live_words * WORD + self.n:
            self._gc()

    def _pile_remove(self, g, length, i):
        key = (g, length)
        pile = self.piles[key]
        size, capw, off = pile
        sw = self._slot_words(length)
        pos = self.positions.get(i)
        last = size - 1
        if pos != last:
            moved = self._entry_read(off + last * sw, sw)
            self._entry_write(off + pos * sw, sw, moved)
            moved_i = g * self.h + (moved >> length)
            self.positions.set(moved_i, pos)
        for j in range(sw):
            self.heap[off + last * sw + j] = 0
        size -= 1
        if size == 0:
            del self.piles[key]
            self.live_words -= capw
            self.dead_words += capw
            return
        pile[0] = size
        used = size * sw
        if used * 4 < capw:
            newcap = 2 * used
            newoff = self._alloc(newcap)
            self.heap[newoff:newoff + used] = self.heap[off:off + used]
            pile[1] = newcap
            pile[2] = newoff
            self.live_words += newcap - capw
            self.dead_words += capw

    def _pile_insert(self, g, length, i, entry):
        key = (g, length)
        sw = self._slot_words(length)
        pile = self.piles.get(key)
        if pile is None:
            capw = 2 * sw
            off = self._alloc(capw)
            pile = [0, capw, off]
            self.piles[key] = pile
            self.live_words += capw
        size, capw, off = pile
        if (size + 1) * sw > capw:
            newcap = 2 * (size + 1) * sw
            newoff = self._alloc(newcap)
            self.heap[newoff:newoff + size * sw] = self.heap[off:off + size * sw]
            pile[1] = newcap
            pile[2] = newoff
            self.live_words += newcap - capw
            self.dead_words += capw
            off = newoff
        self._entry_write(off + size * sw, sw, entry)
        self.positions.set(i, size)
        pile[0] = size + 1

    def _gc(self):
        newheap = []
        live = 0
        for key, pile in self.piles.items():
            size, _capw, off = pile
            sw = self._slot_words(key[1])
            used = size * sw
            newoff = len(newheap)
            newheap.extend(self.heap[off:off + used])
            newcap = 2 * used
            newheap.extend([0] * (newcap - used))
            pile[1] = newcap
            pile[2] = newoff
            live += newcap
        self.heap = newheap
        self.free_off = len(newheap)
        self.live_words = live
        self.dead_words = 0
        self.gc_count += 1

    def validate(self):
        """Debug-mode structural invariants."""
        live = 0
        for (g, length), (size, capw, off) in self.piles.items():
            sw = self._slot_words(length)
            assert size >= 1
            assert 4 * size * sw >= capw, "pile below quarter occupancy"
            assert off + capw <= self.free_off
            live += capw
        assert live == self.live_words
        assert self.dead_words * WORD <= self.live_words * WORD + self.n

    def bit_size(self):
        bookkeeping = len(self.piles) * 3 * WORD + 3 * WORD
        return (
            self.free_off * WORD
            + self.lengths.bit_size()
            + self.positions.bit_size()
            + bookkeeping
        )


def _default_blob_size(n):
    # Theta(log log n) strings per blob
    return max(1, max(n, 2).bit_length().bit_length())


def _default_group_size(n):
    # Theta((log n)^2) labels per group
    b = max(n, 2).bit_length()
    return max(1, b * b)


class RaggedArray:
    """Array of n variable-length bit strings with constant-time reads and
    amortized constant-time writes in O(n + sum of lengths) bits.

    Strings are packed q per blob (q = Theta(log log n)); each blob is a
    self-delimiting label of O(log n) bits kept in the pile store.  The
    public API speaks '0'/'1' strings; read_bits/write_bits speak
    (value, length) pairs.  Per-string cap is O(log n / log log n).
    """

    __slots__ = ("n", "cap", "q", "store", "meter", "category")

    def __init__(self, n, cap=None, meter=None, category="ragged"):
        self.n = n
        q = _default_blob_size(n)
        if cap is None:
            b = max(n, 2).bit_length()
            cap = max(4, 2 * ((b + q - 1) // q))
        self.cap = cap
        self.q = q
        nblobs = (n + q - 1) // q
        label_cap = q * (2 * cap + 1)
        self.store = _PileStore(nblobs, label_cap, _default_group_size(n))
        self.meter = meter
        self.category = category
        if meter is not None:
            meter.set_bits(category, self.bit_size())

    def _fields(self, blob):
        """Decode a blob label into a list of (value, length) pairs."""
        label, lab_len = self.store.read(blob)
        lo = blob * self.q
        count = min(self.q, self.n - lo)
        fields = [(0, 0)] * count
        pos = 0
        j = 0
        while pos < lab_len:
            length = 0
            while (label >> pos) & 1:
                length += 1
                pos += 1
            pos += 1  # the 0 terminating the unary length
            fields[j] = ((label >> pos) & ((1 << length) - 1) if length else 0, length)
            pos += length
            j += 1
        return fields

    def _store_fields(self, blob, fields):
        label = 0
        pos = 0
        for val, length in fields:
            if length:
                label |= ((1 << length) - 1) << pos
                pos += length
            pos += 1  # 0 separator
            if length:
                label |= val << pos
                pos += length
        self.store.write(blob, label, pos if any(l for _, l in fields) else 0)
        if self.meter is not None:
            self.meter.set_bits(self.category, self.bit_size())

    def read_bits(self, i):
        if not 1 <= i <= self.n:
            raise IndexError("index %d out of 1..%d" % (i, self.n))
        blob, j = divmod(i - 1, self.q)
        fields = self._fields(blob)
        return fields[j]

    def write_bits(self, i, val, length):
        if not 1 <= i <= self.n:
            raise IndexError("index %d out of 1..%d" % (i, self.n))
        if length > self.cap:
            raise ValueError("string of %d bits exceeds cap %d" % (length, self.cap))
        if length and val >> length:
            raise ValueError("value does not fit in declared length")
        blob, j = divmod(i - 1, self.q)
        fields = self._fields(blob)
        fields[j] = (val, length)
        self._store_fields(blob, fields)

    def read(self, i):
        val, length = self.read_bits(i)
        return format(val, "0%db" % length) if length else ""

    def write(self, i, s):
        if s and set(s) - {"0", "1"}:
            raise ValueError("string must consist of '0' and '1' characters")
        self.write_bits(i, int(s, 2) if s else 0, len(s))

    def validate(self):
        self.store.validate()

    def gc_count(self):
        return self.store.gc_count

    def bit_size(self):
        return self.store.bit_size() + 2 * WORD
