# cython: language_level=3
"""Compiled set kernels on ascending int sequences; mirrors pure.py."""

cdef Py_ssize_t _PROBE_RATIO = 8


cdef Py_ssize_t _bisect_left(seq, long x, Py_ssize_t lo, Py_ssize_t hi):
    cdef Py_ssize_t mid
    cdef long v
    while lo < hi:
        mid = (lo + hi) >> 1
        v = seq[mid]
        if v < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def contains_sorted(a, x):
    """True if x occurs in ascending list a."""
    cdef long cx = x
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i = _bisect_left(a, cx, 0, n)
    return i != n and a[i] == x


def intersect_sorted(a, b):
    """Intersection of two ascending sequences, as a new ascending list."""
    if len(a) > len(b):
        a, b = b, a
    cdef Py_ssize_t na = len(a)
    cdef Py_ssize_t nb = len(b)
    cdef Py_ssize_t i = 0, j = 0, lo = 0
    cdef long x, y
    out = []
    if nb > _PROBE_RATIO * na:
        while i < na:
            x = a[i]
            lo = _bisect_left(b, x, lo, nb)
            if lo == nb:
                break
            if b[lo] == a[i]:
                out.append(a[i])
                lo += 1
            i += 1
        return out
    while i < na and j < nb:
        x = a[i]
        y = b[j]
        if x < y:
            i += 1
        elif y < x:
            j += 1
        else:
            out.append(a[i])
            i += 1
            j += 1
    return out


def union_sorted(a, b):
    """Union of two ascending sequences, as a new ascending list."""
    cdef Py_ssize_t na = len(a)
    cdef Py_ssize_t nb = len(b)
    cdef Py_ssize_t i = 0, j = 0
    cdef long x, y
    out = []
    while i < na and j < nb:
        x = a[i]
        y = b[j]
        if x < y:
            out.append(a[i])
            i += 1
        elif y < x:
            out.append(b[j])
            j += 1
        else:
            out.append(a[i])
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
    cdef Py_ssize_t na = len(a)
    cdef Py_ssize_t nb = len(b)
    cdef Py_ssize_t i = 0, j = 0, lo = 0
    cdef long x, y
    if na > nb:
        return False
    if nb > _PROBE_RATIO * na:
        while i < na:
            x = a[i]
            lo = _bisect_left(b, x, lo, nb)
            if lo == nb or b[lo] != a[i]:
                return False
            lo += 1
            i += 1
        return True
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
    cdef long cx = x
    cdef Py_ssize_t i = _bisect_left(a, cx, 0, len(a))
    out = list(a)
    if i == len(out) or out[i] != x:
        out.insert(i, x)
    return out
