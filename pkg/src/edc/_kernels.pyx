# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled decision kernels, bit-identical to ``edc._kernels_py``."""

from libc.stdint cimport uint64_t

BACKEND_NAME = "c"

cdef uint64_t _GAMMA = <uint64_t>0x9E3779B97F4A7C15
cdef uint64_t _MIX_A = <uint64_t>0xBF58476D1CE4E5B9
cdef uint64_t _MIX_B = <uint64_t>0x94D049BB133111EB
cdef double _INV_2_53 = 1.0 / 9007199254740992.0


cdef inline uint64_t _mix64(uint64_t z) noexcept nogil:
    z ^= z >> 30
    z *= _MIX_A
    z ^= z >> 27
    z *= _MIX_B
    z ^= z >> 31
    return z


def mix64(z):
    """splitmix64 finalizer: avalanche a 64-bit word."""
    return int(_mix64(<uint64_t>z))


def stream_init(seed, epoch, ordinal):
    """Initial stream state for a (seed, epoch, ordinal) triple."""
    cdef uint64_t a = _mix64((<uint64_t>seed) ^ (_GAMMA * ((<uint64_t>epoch) + 1)))
    return int(_mix64(a ^ (_MIX_A * ((<uint64_t>ordinal) + 1))))


def next_uniform(state):
    """Advance one step; return (new_state, uniform in [0, 1))."""
    cdef uint64_t st = (<uint64_t>state) + _GAMMA
    return int(st), (_mix64(st) >> 11) * _INV_2_53


def keep_mask(state, n, p_remove):
    """Draw ``n`` uniforms in order; byte i is 1 when decision i keeps.

    A decision removes exactly when its uniform is strictly below
    ``p_remove``. Returns (new_state, mask).
    """
    cdef uint64_t st = <uint64_t>state
    cdef Py_ssize_t i, m = n
    cdef double p = p_remove
    out = bytearray(m)
    cdef unsigned char[::1] view = out
    with nogil:
        for i in range(m):
            st += _GAMMA
            if (_mix64(st) >> 11) * _INV_2_53 >= p:
                view[i] = 1
    return int(st), bytes(out)


def count_kept(state, n, p_remove):
    """Like keep_mask but only counts the kept decisions."""
    cdef uint64_t st = <uint64_t>state
    cdef Py_ssize_t i, m = n
    cdef double p = p_remove
    cdef Py_ssize_t kept = 0
    with nogil:
        for i in range(m):
            st += _GAMMA
            if (_mix64(st) >> 11) * _INV_2_53 >= p:
                kept += 1
    return int(st), kept
