"""Pure-Python decision kernels: splitmix64 streams and keep/remove masks.

This module is the reference implementation; the compiled extension
``edc._kernels`` mirrors it bit for bit and is preferred at import time
when built. All integer arithmetic is modulo 2**64 and uniforms carry
53-bit resolution, so sequences are identical across platforms and
across the two backends.
"""

BACKEND_NAME = "python"

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB
_INV_2_53 = 1.0 / (1 << 53)


def mix64(z: int) -> int:
    """splitmix64 finalizer: avalanche a 64-bit word."""
    z &= _MASK64
    z ^= z >> 30
    z = (z * _MIX_A) & _MASK64
    z ^= z >> 27
    z = (z * _MIX_B) & _MASK64
    z ^= z >> 31
    return z


def stream_init(seed: int, epoch: int, ordinal: int) -> int:
    """Initial stream state for a (seed, epoch, ordinal) triple."""
    a = mix64(seed ^ ((_GAMMA * (epoch + 1)) & _MASK64))
    return mix64(a ^ ((_MIX_A * (ordinal + 1)) & _MASK64))


def next_uniform(state: int) -> tuple[int, float]:
    """Advance one step; return (new_state, uniform in [0, 1))."""
    state = (state + _GAMMA) & _MASK64
    return state, (mix64(state) >> 11) * _INV_2_53


def keep_mask(state: int, n: int, p_remove: float) -> tuple[int, bytes]:
    """Draw ``n`` uniforms in order; byte i is 1 when decision i keeps.

    A decision removes exactly when its uniform is strictly below
    ``p_remove``. Returns (new_state, mask).
    """
    out = bytearray(n)
    for i in range(n):
        state = (state + _GAMMA) & _MASK64
        if (mix64(state) >> 11) * _INV_2_53 >= p_remove:
            out[i] = 1
    return state, bytes(out)


def count_kept(state: int, n: int, p_remove: float) -> tuple[int, int]:
    """Like keep_mask but only counts the kept decisions."""
    kept = 0
    for _ in range(n):
        state = (state + _GAMMA) & _MASK64
        if (mix64(state) >> 11) * _INV_2_53 >= p_remove:
            kept += 1
    return state, kept
