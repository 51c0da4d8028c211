"""Arithmetic in GF(256) with the primitive polynomial x^8 + x^4 + x^3 + x^2 + 1.

Symbols are plain ints in 0..255 (one byte each).  Addition is XOR;
multiplication and inversion go through exp/log tables built at import.
"""

from __future__ import annotations

from .errors import ParameterError

FIELD_SIZE = 256
_PRIMITIVE = 0x11D

EXP = [0] * 512
LOG = [0] * 256

_x = 1
for _i in range(255):
    EXP[_i] = _x
    LOG[_x] = _i
    _x <<= 1
    if _x & 0x100:
        _x ^= _PRIMITIVE
for _i in range(255, 512):
    EXP[_i] = EXP[_i - 255]
del _x, _i

FieldSymbol = int


def check_symbol(value: int) -> int:
    if not isinstance(value, int) or not 0 <= value < FIELD_SIZE:
        raise ParameterError(f"field symbol must be an int in 0..255, got {value!r}")
    return value


def gf_add(a: int, b: int) -> int:
    return a ^ b


def gf_sub(a: int, b: int) -> int:
    return a ^ b


def gf_mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return EXP[LOG[a] + LOG[b]]


def gf_inv(a: int) -> int:
    if a == 0:
        raise ParameterError("0 has no multiplicative inverse in GF(256)")
    return EXP[255 - LOG[a]]


def gf_div(a: int, b: int) -> int:
    if b == 0:
        raise ParameterError("division by zero in GF(256)")
    if a == 0:
        return 0
    return EXP[LOG[a] + 255 - LOG[b]]
