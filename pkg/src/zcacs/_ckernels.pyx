# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled zone-scan kernels.

Same contract as _kernels_py: stacks shaped (arrays_per_set, rows, cols),
shift zone tau1 in [0, z1), tau2 in (-z2, z2), output column z2 - 1 + tau2.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def zone_corr_float(cnp.int64_t[:, :, ::1] a, cnp.int64_t[:, :, ::1] b,
                    cnp.complex128_t[::1] roots, Py_ssize_t z1, Py_ssize_t z2):
    cdef Py_ssize_t s = a.shape[0]
    cdef Py_ssize_t l1 = a.shape[1]
    cdef Py_ssize_t l2 = a.shape[2]
    cdef Py_ssize_t delta = roots.shape[0]
    out = np.zeros((z1, 2 * z2 - 1), dtype=np.complex128)
    cdef cnp.complex128_t[:, ::1] ov = out
    cdef Py_ssize_t t1, t2, i, g, j, j0, j1
    cdef cnp.int64_t d
    cdef cnp.complex128_t acc
    with nogil:
        for t1 in range(z1):
            for t2 in range(-z2 + 1, z2):
                acc = 0
                j0 = -t2 if t2 < 0 else 0
                j1 = l2 - t2 if t2 > 0 else l2
                for i in range(s):
                    for g in range(l1 - t1):
                        for j in range(j0, j1):
                            d = (a[i, g, j] - b[i, g + t1, j + t2]) % delta
                            if d < 0:
                                d += delta
                            acc = acc + roots[d]
                ov[t1, z2 - 1 + t2] = acc
    return out


def zone_corr_exact(cnp.int64_t[:, :, ::1] a, cnp.int64_t[:, :, ::1] b,
                    Py_ssize_t delta, Py_ssize_t z1, Py_ssize_t z2):
    cdef Py_ssize_t s = a.shape[0]
    cdef Py_ssize_t l1 = a.shape[1]
    cdef Py_ssize_t l2 = a.shape[2]
    out = np.zeros((z1, 2 * z2 - 1, delta), dtype=np.int64)
    cdef cnp.int64_t[:, :, ::1] ov = out
    cdef Py_ssize_t t1, t2, i, g, j, j0, j1
    cdef cnp.int64_t d
    with nogil:
        for t1 in range(z1):
            for t2 in range(-z2 + 1, z2):
                j0 = -t2 if t2 < 0 else 0
                j1 = l2 - t2 if t2 > 0 else l2
                for i in range(s):
                    for g in range(l1 - t1):
                        for j in range(j0, j1):
                            d = (a[i, g, j] - b[i, g + t1, j + t2]) % delta
                            if d < 0:
                                d += delta
                            ov[t1, z2 - 1 + t2, d] += 1
    return out
