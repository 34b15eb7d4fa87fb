"""Set operations on ascending, duplicate-free int lists (pure-Python backend).

These are the inner loops of the whole engine: every neighborhood query,
candidate intersection and maximality test bottoms out here. The compiled
backend in ``_speedups.pyx`` mirrors this module exactly.
"""

from bisect import bisect_left

# Below this length ratio a two-pointer merge wins; above it, binary probes
# into the longer list are cheaper.
_PROBE_RATIO = 8


def contains_sorted(a, x):
    """True if x occurs in ascending list a."""
    i = bisect_left(a, x)
    return i != len(a) and a[i] == x


def intersect_sorted(a, b):
    """Intersection of two ascending sequences, as a new ascending list."""
    if len(a) > len(b):
        a, b = b, a
    na = len(a)
    nb = len(b)
    out = []
    if nb > _PROBE_RATIO * na:
        lo = 0
        for x in a:
            lo = bisect_left(b, x, lo)
            if lo == nb:
                break
            if b[lo] == x:
                out.append(x)
                lo += 1
        return out
    i = 0
    j = 0
    while i < na and j < nb:
        x = a[i]
        y = b[j]
        if x < y:
            i += 1
        elif y < x:
            j += 1
        else:
            out.append(x)
            i += 1
            j += 1
    return out


def union_sorted(a, b):
    """Union of two ascending sequences, as a new ascending list."""
    na = len(a)
    nb = len(b)
    out = []
    i = 0
    j = 0
    while i < na and j < nb:
        x = a[i]
        y = b[j]
        if x < y:
            out.append(x)
            i += 1
        elif y < x:
            out.append(y)
            j += 1
        else:
            out.append(x)
            i += 1
            j += 1
    while i < na:
        out.append(a[i])
        i += 1
    while j < nb:
        out.append(b[j])
        j += 1
    return out


def issubset_sorted(a, b):
    """True if every element of ascending sequence a occurs in b."""
    na = len(a)
    nb = len(b)
    if na > nb:
        return False
    if nb > _PROBE_RATIO * na:
        lo = 0
        for x in a:
            lo = bisect_left(b, x, lo)
            if lo == nb or b[lo] != x:
                return False
            lo += 1
        return True
    i = 0
    j = 0
    while i < na:
        if na - i > nb - j:
            return False
        x = a[i]
        y = b[j]
        if y < x:
            j += 1
        elif y == x:
            i += 1
            j += 1
        else:
            return False
    return True


def insert_sorted(a, x):
    """Copy of ascending sequence a with x inserted (plain copy if present)."""
    i = bisect_left(a, x)
    out = list(a)
    if i == len(out) or out[i] != x:
        out.insert(i, x)
    return out
