"""Integer polynomials in ``t`` as coefficient tuples, lowest degree first."""

from __future__ import annotations

from typing import Sequence

IntPoly = tuple


def trim(coeffs: Sequence[int]) -> IntPoly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def add(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    n = max(len(a), len(b))
    return trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def sub(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    return add(a, [-c for c in b])


def mul(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def power(a: Sequence[int], k: int) -> IntPoly:
    out: IntPoly = (1,)
    for _ in range(k):
        out = mul(out, a)
    return out


def shift(a: Sequence[int], k: int) -> IntPoly:
    """Multiply by ``t**k``."""
    return trim([0] * k + list(a)) if a else ()


def evaluate(a: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def is_palindromic(a: Sequence[int], r: int) -> bool:
    a = trim(a)
    if len(a) > r + 1:
        return False
    padded = list(a) + [0] * (r + 1 - len(a))
    return padded == padded[::-1]


def render(a: Sequence[int], var: str = "t") -> str:
    a = trim(a)
    if not a:
        return "0"
    out = []
    for d, c in enumerate(a):
        if not c:
            continue
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            mono = var if d == 1 else f"{var}^{d}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)
