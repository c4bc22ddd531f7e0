"""Sort strategies: comparison sort plus four linear-time sorts.

All strategies are stable and, given the same tie-break rule, must produce
the identical permutation as the comparison sort.  Job orderings use the
canonical tie-breaks (end, start, input position) and (start, end, end_order)
so fixtures and cross-strategy differential tests are exact.

The linear sorts all compute a stable permutation of indices first and gather
the payload once per pass; moving only small ints through the scatter loops
keeps the per-element cost close to flat as n grows.
"""

from __future__ import annotations

import struct
from array import array
from dataclasses import dataclass
from operator import itemgetter


class StrategyInapplicableError(ValueError):
    """Raised when a sort strategy cannot handle the given keys."""


@dataclass(frozen=True)
class Comparison:
    pass


@dataclass(frozen=True)
class Counting:
    # refuse key ranges above max_key (default 16*n) instead of allocating
    # huge count arrays; callers fall back to another strategy
    max_key: int | None = None


@dataclass(frozen=True)
class RadixLSD:
    base: int = 256
    digits: int | None = None  # None: derive from the largest key


@dataclass(frozen=True)
class Bucket:
    bucket_count: int | None = None  # None: one bucket per element


@dataclass(frozen=True)
class SpreadsortHybrid:
    fallback_threshold: int = 32


SortStrategy = Comparison | Counting | RadixLSD | Bucket | SpreadsortHybrid

_PACK_D = struct.Struct("<d")
_UNPACK_Q = struct.Struct("<Q")
_SIGN = 1 << 63
_ALL_ONES = (1 << 64) - 1


def float_key_transform(x):
    """Map a finite float to an unsigned 64-bit key with the same ordering.

    Non-negative floats get the sign bit set; negative floats are bitwise
    complemented.  x < y implies transform(x) < transform(y); -0.0 and +0.0
    map to distinct adjacent keys, preserving non-strict order.
    """
    bits = _UNPACK_Q.unpack(_PACK_D.pack(x))[0]
    if bits & _SIGN:
        return bits ^ _ALL_ONES
    return bits | _SIGN


# --- stable permutation sorts ----------------------------------------------
#
# Each _perm_* helper returns perm such that [keys[i] for i in perm] is
# stably sorted.


def _perm_counting(keys, max_key):
    counts = [0] * (max_key + 1)
    for k in keys:
        counts[k] += 1
    total = 0
    for v in range(max_key + 1):
        c = counts[v]
        counts[v] = total
        total += c
    out = [0] * len(keys)
    i = 0
    for k in keys:
        pos = counts[k]
        counts[k] = pos + 1
        out[pos] = i
        i += 1
    return out


def _perm_radix(keys, base, digits=None):
    n = len(keys)
    if n <= 1:
        return list(range(n))
    max_key = max(keys)
    if digits is None:
        digits = 1
        span = base
        while span <= max_key:
            span *= base
            digits += 1
    # digit arrays and their histograms come straight from the original keys;
    # only the index permutation moves between passes
    power_of_two = base & (base - 1) == 0
    shift = base.bit_length() - 1
    # digits fit in a compact typed array: later passes read them in permuted
    # order, so keeping the whole digit column cache-resident matters
    typecode = "B" if base <= 256 else ("H" if base <= 65536 else "l")
    passes = []
    divisor = 1
    for d in range(digits):
        if power_of_two:
            s = d * shift
            mask = base - 1
            dig = array(typecode, [(k >> s) & mask for k in keys])
        else:
            dig = array(typecode, [(k // divisor) % base for k in keys])
            divisor *= base
        counts = [0] * base
        for x in dig:
            counts[x] += 1
        total = 0
        for v in range(base):
            c = counts[v]
            counts[v] = total
            total += c
        passes.append((dig, counts))

    perm = range(n)
    for dig, counts in passes:
        out = [0] * n
        for i in perm:
            d = dig[i]
            pos = counts[d]
            counts[d] = pos + 1
            out[pos] = i
        perm = out
    return perm


def _perm_bucket(vals, lo, hi, bucket_count):
    n = len(vals)
    if n <= 1 or hi == lo:
        return list(range(n))  # degenerate range: one bucket, already stable
    scale = bucket_count / (hi - lo)
    top = bucket_count - 1
    # typed arrays keep the n-sized bucket tables compact; the counts array
    # doubles as the placement cursor after the prefix sum
    which = array("l", bytes(8 * n))
    counts = array("l", bytes(8 * (bucket_count + 1)))
    i = 0
    for v in vals:
        b = int((v - lo) * scale)
        if b > top:
            b = top
        which[i] = b
        counts[b] += 1
        i += 1
    total = 0
    for b in range(bucket_count):
        c = counts[b]
        counts[b] = total
        total += c
    counts[bucket_count] = total
    bounds = list(counts)

    out = [0] * n
    for i in range(n):
        b = which[i]
        pos = counts[b]
        counts[b] = pos + 1
        out[pos] = i
    # each bucket is sorted with Timsort, the stable merge/insertion hybrid
    get = vals.__getitem__
    for b in range(bucket_count):
        s, e = bounds[b], bounds[b + 1]
        if e - s > 1:
            seg = out[s:e]
            seg.sort(key=get)
            out[s:e] = seg
    return out


_SPREAD_MAX_BITS = 8


def _perm_spread(keys, fallback_threshold):
    get = keys.__getitem__

    def rec(idxs):
        if len(idxs) < fallback_threshold:
            idxs.sort(key=get)
            return idxs
        lo = hi = keys[idxs[0]]
        for i in idxs:
            k = keys[i]
            if k < lo:
                lo = k
            elif k > hi:
                hi = k
        diff = lo ^ hi
        if diff == 0:
            return idxs
        # bucket by the most significant differing bits, recurse per bucket
        high_bit = diff.bit_length() - 1
        bits = min(_SPREAD_MAX_BITS, high_bit + 1)
        shift = high_bit + 1 - bits
        mask = (1 << bits) - 1
        buckets = [[] for _ in range(mask + 1)]
        for i in idxs:
            buckets[(keys[i] >> shift) & mask].append(i)
        out = []
        for bucket in buckets:
            if len(bucket) > 1:
                out.extend(rec(bucket))
            else:
                out.extend(bucket)
        return out

    return rec(list(range(len(keys))))


# --- public key-list sorts --------------------------------------------------


def counting_sort(keys, max_key=None):
    """Stable counting sort of non-negative integer keys."""
    if not keys:
        return []
    if max_key is None:
        max_key = max(keys)
    if min(keys) < 0 or max(keys) > max_key:
        raise StrategyInapplicableError("counting sort keys out of [0, max_key]")
    return [keys[i] for i in _perm_counting(keys, max_key)]


def radix_sort_lsd(keys, base=256, digits=None):
    """Stable LSD radix sort of non-negative integer keys."""
    if base < 2:
        raise ValueError("radix base must be >= 2")
    if not keys:
        return []
    if min(keys) < 0:
        raise StrategyInapplicableError("radix sort requires non-negative keys")
    return [keys[i] for i in _perm_radix(keys, base, digits)]


def bucket_sort(keys, lo=None, hi=None, bucket_count=None):
    """Stable bucket sort; keys spread by linear interpolation over [lo, hi]."""
    if not keys:
        return []
    if lo is None:
        lo = min(keys)
    if hi is None:
        hi = max(keys)
    if bucket_count is None:
        bucket_count = len(keys)
    return [keys[i] for i in _perm_bucket(keys, lo, hi, bucket_count)]


def spreadsort_hybrid(keys, fallback_threshold=32):
    """Stable MSD-bit hybrid sort of non-negative integer keys."""
    if not keys:
        return []
    if min(keys) < 0:
        raise StrategyInapplicableError("spreadsort requires non-negative keys")
    return [keys[i] for i in _perm_spread(keys, fallback_threshold)]


# --- job sorting ------------------------------------------------------------

BY_END = "end"
BY_START = "start"

_FIELD = {"start": 0, "end": 1, "end_order": 3}


def gather(seq, perm):
    """Apply a permutation: the sequence of seq[i] for i in perm.

    itemgetter runs the scatter loop in C, which matters on the hot path;
    returns a tuple for len(perm) >= 2, else a list.
    """
    if len(perm) <= 1:
        return [seq[i] for i in perm]
    return itemgetter(*perm)(seq)


def stable_perm(vals, strategy):
    """Stable sorting permutation of a scalar key column under a strategy."""
    n = len(vals)
    if n <= 1:
        return list(range(n))
    if isinstance(strategy, Comparison):
        idxs = list(range(n))
        idxs.sort(key=vals.__getitem__)
        return idxs
    is_int = isinstance(vals[0], int)

    if isinstance(strategy, Counting):
        if not is_int:
            raise StrategyInapplicableError("counting sort requires integer times")
        lo = min(vals)
        keys = [v - lo for v in vals] if lo else vals
        max_key = max(keys)
        cap = strategy.max_key if strategy.max_key is not None else 16 * n
        if max_key > cap:
            raise StrategyInapplicableError(
                f"counting sort key range {max_key} exceeds cap {cap}"
            )
        return _perm_counting(keys, max_key)
    if isinstance(strategy, (RadixLSD, SpreadsortHybrid)):
        if is_int:
            lo = min(vals)
            keys = [v - lo for v in vals] if lo < 0 else vals
        else:
            keys = [float_key_transform(v) for v in vals]
        if isinstance(strategy, RadixLSD):
            return _perm_radix(keys, strategy.base, strategy.digits)
        return _perm_spread(keys, strategy.fallback_threshold)
    if isinstance(strategy, Bucket):
        count = strategy.bucket_count if strategy.bucket_count is not None else n
        return _perm_bucket(vals, min(vals), max(vals), count)
    raise TypeError(f"unknown strategy {strategy!r}")


def _stable_pass(items, field, strategy):
    """One stable sort of job tuples by a single scalar field."""
    if len(items) <= 1:
        return list(items)
    vals = [it[_FIELD[field]] for it in items]
    return list(gather(items, stable_perm(vals, strategy)))


def sort_jobs(jobs, key, strategy=Comparison()):
    """Sort jobs by end or start time with the canonical tie-breaks.

    key="end": order by (end, start, input position); accepts 3- or 4-tuples.
    key="start": order by (start, end, end_order); requires end-order-expanded
    4-tuples.  Every strategy yields the permutation of the comparison sort.
    """
    items = list(jobs)
    if key == BY_END:
        if isinstance(strategy, Comparison):
            items.sort(key=lambda it: (it[1], it[0]))  # stable: position ties
            return items
        items = _stable_pass(items, "start", strategy)
        return _stable_pass(items, "end", strategy)
    if key == BY_START:
        if isinstance(strategy, Comparison):
            items.sort(key=lambda it: (it[0], it[1], it[3]))
            return items
        # ascending end_order encodes the (end, start) tie-break, so a single
        # stable pass by start suffices once that ordering holds
        if any(items[i][3] > items[i + 1][3] for i in range(len(items) - 1)):
            items = _stable_pass(items, "end_order", strategy)
        return _stable_pass(items, "start", strategy)
    raise ValueError(f"unknown sort key {key!r}")


def strategy_from_name(name, **kwargs):
    table = {
        "comparison": Comparison,
        "counting": Counting,
        "radix": RadixLSD,
        "bucket": Bucket,
        "spreadsort": SpreadsortHybrid,
    }
    try:
        return table[name](**kwargs)
    except KeyError:
        raise ValueError(f"unknown sort strategy {name!r}") from None
