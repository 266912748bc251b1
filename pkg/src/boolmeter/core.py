"""Truth-table representation of Boolean functions and the transforms applied to them.

Variable ``i`` (1-based) of a function is bit ``i - 1`` of the integer index of
an input, so ``x1`` is the least significant position.  A function of arity
``n`` is stored as a read-only ``uint8`` array of length ``2**n`` whose entry
``k`` is ``f(k)``.

The text form is ``n:HEX`` where HEX is the integer ``sum(f(k) << k)`` in
hexadecimal, e.g. AND on two variables is ``2:8``.
"""
from __future__ import annotations

import re
from typing import Iterable, Sequence

import numpy as np

DEFAULT_MAX_ARITY = 24

_limits = {"max_arity": DEFAULT_MAX_ARITY}


class ArityError(ValueError):
    """Raised when an operation would produce a function above the arity cap."""


def max_arity() -> int:
    return _limits["max_arity"]


def set_max_arity(value: int) -> None:
    if value < 0:
        raise ValueError("arity cap must be non-negative")
    _limits["max_arity"] = int(value)


def _check_arity(n: int) -> None:
    if n < 0:
        raise ArityError(f"negative arity {n}")
    if n > _limits["max_arity"]:
        raise ArityError(f"arity {n} exceeds the configured maximum {_limits['max_arity']}")


def popcount(values):
    """Hamming weight of a non-negative integer or an integer array."""
    if isinstance(values, (int, np.integer)):
        return int(values).bit_count()
    v = np.asarray(values).astype(np.uint64)
    out = np.zeros(v.shape, dtype=np.int64)
    while np.any(v):
        out += (v & np.uint64(1)).astype(np.int64)
        v = v >> np.uint64(1)
    return out


class TruthTable:
    """Immutable Boolean function ``{0,1}^n -> {0,1}`` given by its full table."""

    __slots__ = ("_n", "_bits", "_hash")

    def __init__(self, n: int, bits):
        _check_arity(n)
        arr = np.asarray(bits)
        if arr.shape != (1 << n,):
            raise ValueError(f"expected {1 << n} outputs for arity {n}, got shape {arr.shape}")
        if arr.dtype != np.uint8:
            if arr.dtype == bool:
                arr = arr.astype(np.uint8)
            else:
                if np.any((arr != 0) & (arr != 1)):
                    raise ValueError("outputs must be 0 or 1")
                arr = arr.astype(np.uint8)
        elif np.any(arr > 1):
            raise ValueError("outputs must be 0 or 1")
        arr = arr.copy()
        arr.flags.writeable = False
        self._n = n
        self._bits = arr
        self._hash = None

    @property
    def n(self) -> int:
        return self._n

    arity = n

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    @property
    def size(self) -> int:
        return 1 << self._n

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def __eq__(self, other):
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._bits, other._bits)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, self._bits.tobytes()))
        return self._hash

    def __repr__(self):
        return f"TruthTable({self.to_text()!r})"

    def is_constant(self) -> bool:
        return bool(np.all(self._bits == self._bits[0]))

    def ones(self) -> np.ndarray:
        return np.flatnonzero(self._bits)

    def to_int(self) -> int:
        packed = np.packbits(self._bits, bitorder="little")
        return int.from_bytes(packed.tobytes(), "little")

    def to_text(self) -> str:
        width = max(1, self.size // 4)
        return f"{self._n}:{self.to_int():0{width}x}"

    @classmethod
    def from_int(cls, n: int, value: int) -> "TruthTable":
        _check_arity(n)
        size = 1 << n
        if value < 0 or value >> size:
            raise ValueError(f"value does not fit in {size} output bits")
        nbytes = max(1, (size + 7) // 8)
        raw = np.frombuffer(value.to_bytes(nbytes, "little"), dtype=np.uint8)
        return cls(n, np.unpackbits(raw, bitorder="little")[:size])

    @classmethod
    def from_text(cls, text: str) -> "TruthTable":
        m = re.fullmatch(r"\s*(\d+):([0-9a-fA-F]+)\s*", text)
        if not m:
            raise ValueError(f"not a truth table literal: {text!r}")
        return cls.from_int(int(m.group(1)), int(m.group(2), 16))


def _check_point(f: TruthTable, x: int) -> int:
    x = int(x)
    if not 0 <= x < f.size:
        raise IndexError(f"input index {x} out of range for arity {f.n}")
    return x


def evaluate(f: TruthTable, x: int) -> int:
    return int(f.bits[_check_point(f, x)])


def zeros_of(n: int, x: int) -> list[int]:
    """0-based positions where the input ``x`` is 0."""
    return [i for i in range(n) if not (x >> i) & 1]


def subset_masks(coords: Sequence[int]) -> np.ndarray:
    """All masks over ``coords``; entry ``s`` sets ``coords[j]`` iff bit ``j`` of ``s``."""
    masks = np.zeros(1, dtype=np.int64)
    for c in coords:
        masks = np.concatenate([masks, masks | (1 << c)])
    return masks


def restrict(f: TruthTable, x: int) -> TruthTable:
    """Subfunction with every coordinate in ``supp(x)`` fixed to 1.

    The free variables keep their original relative order.
    """
    x = _check_point(f, x)
    free = zeros_of(f.n, x)
    return TruthTable(len(free), f.bits[x | subset_masks(free)])


def shift_by(f: TruthTable, w: int) -> TruthTable:
    w = _check_point(f, w)
    return TruthTable(f.n, f.bits[np.arange(f.size) ^ w])


def complement(f: TruthTable) -> TruthTable:
    return TruthTable(f.n, 1 - f.bits)


def negate_inputs(f: TruthTable) -> TruthTable:
    return TruthTable(f.n, f.bits[::-1])


def compose(f: TruthTable, g: TruthTable) -> TruthTable:
    """Block composition: copy ``i`` of ``g`` reads variables ``i*m .. i*m + m - 1``."""
    n, m = f.n, g.n
    _check_arity(n * m)
    total = 1 << (n * m)
    if n == 0 or m == 0:
        # no copies, or every copy is a constant
        if n == 0:
            return TruthTable(0, f.bits)
        y = int(g.bits[0]) * ((1 << n) - 1)
        return TruthTable(0, f.bits[y : y + 1])
    idx = np.arange(total, dtype=np.int64)
    window = (1 << m) - 1
    gb = g.bits.astype(np.int64)
    y = np.zeros(total, dtype=np.int64)
    for i in range(n):
        y |= gb[(idx >> (i * m)) & window] << i
    return TruthTable(n * m, f.bits[y])


def iterate(f: TruthTable, l: int) -> TruthTable:
    if l < 1:
        raise ValueError("iteration count must be at least 1")
    _check_arity(f.n ** l)
    out = f
    for _ in range(l - 1):
        out = compose(f, out)
    return out


def is_monotone(f: TruthTable, direction: str = "either") -> bool:
    """Monotonicity check by comparing every input with each single-bit raise.

    ``direction`` is ``"increasing"``, ``"decreasing"`` or ``"either"``.
    """
    idx = np.arange(f.size)
    b = f.bits.astype(np.int8)
    up = down = True
    for i in range(f.n):
        low = idx[(idx >> i) & 1 == 0]
        diff = b[low | (1 << i)] - b[low]
        up = up and not np.any(diff < 0)
        down = down and not np.any(diff > 0)
    if direction == "increasing":
        return up
    if direction == "decreasing":
        return down
    if direction == "either":
        return up or down
    raise ValueError(f"unknown direction {direction!r}")


def is_symmetric(f: TruthTable) -> bool:
    w = popcount(np.arange(f.size))
    for k in range(f.n + 1):
        vals = f.bits[w == k]
        if np.any(vals != vals[0]):
            return False
    return True


# ---------------------------------------------------------------------------
# generators


def constant(n: int, value: int) -> TruthTable:
    _check_arity(n)
    return TruthTable(n, np.full(1 << n, value & 1, dtype=np.uint8))


def symmetric(profile: Sequence[int]) -> TruthTable:
    """Symmetric function with ``f(x) = profile[|x|]``."""
    n = len(profile) - 1
    if n < 0:
        raise ValueError("profile must have at least one entry")
    _check_arity(n)
    p = np.asarray(profile, dtype=np.uint8)
    return TruthTable(n, p[popcount(np.arange(1 << n))])


def and_(n: int) -> TruthTable:
    return symmetric([0] * n + [1])


def or_(n: int) -> TruthTable:
    return symmetric([0] + [1] * n)


def xor(n: int) -> TruthTable:
    return symmetric([k % 2 for k in range(n + 1)])


def majority(n: int) -> TruthTable:
    return symmetric([int(2 * k > n) for k in range(n + 1)])


def threshold(n: int, k: int) -> TruthTable:
    return symmetric([int(j >= k) for j in range(n + 1)])


def or_of_ands(n: int) -> TruthTable:
    """``OR(AND(x1..x_{n/2}), AND(x_{n/2+1}..x_n))``."""
    if n < 2 or n % 2:
        raise ValueError("or_of_ands needs an even arity >= 2")
    _check_arity(n)
    half = (1 << (n // 2)) - 1
    idx = np.arange(1 << n)
    lo = (idx & half) == half
    hi = ((idx >> (n // 2)) & half) == half
    return TruthTable(n, lo | hi)


def _set_mask(s: Iterable[int]) -> int:
    mask = 0
    for v in s:
        if v < 1:
            raise ValueError(f"variables are 1-based, got {v}")
        mask |= 1 << (v - 1)
    return mask


def odd_max_bit(sets: Sequence[Iterable[int]], n: int | None = None) -> TruthTable:
    """ODD-MAX-BIT over monomials ``X_{S_1}, ..., X_{S_k}`` (1-based variable sets).

    With the idempotent product ``X_S X_T = X_{S u T}`` the alternating sum
    telescopes: ``f(x) = 1`` iff an odd number of prefix unions
    ``S_1 u ... u S_j`` are contained in ``supp(x)``.
    """
    masks = [_set_mask(s) for s in sets]
    top = max((m.bit_length() for m in masks), default=0)
    if n is None:
        n = top
    if top > n:
        raise ValueError(f"sets mention variable {top} beyond arity {n}")
    _check_arity(n)
    idx = np.arange(1 << n, dtype=np.int64)
    count = np.zeros(1 << n, dtype=np.int64)
    union = 0
    for m in masks:
        union |= m
        count += (idx & union) == union
    return TruthTable(n, count % 2)


def random_function(n: int, rng: np.random.Generator) -> TruthTable:
    _check_arity(n)
    return TruthTable(n, rng.integers(0, 2, size=1 << n, dtype=np.uint8))


_NAMED = {
    "and": and_,
    "or": or_,
    "xor": xor,
    "maj": majority,
    "nand": lambda n: complement(and_(n)),
    "nor": lambda n: complement(or_(n)),
    "or-and": or_of_ands,
    "const0": lambda n: constant(n, 0),
    "const1": lambda n: constant(n, 1),
}


def generate(spec: str) -> TruthTable:
    """Build a named function from a family spec string.

    Forms: ``and:N``, ``or:N``, ``xor:N``, ``maj:N``, ``nand:N``, ``nor:N``,
    ``or-and:N``, ``const0:N``, ``const1:N``, ``id``, ``thr:N:K``,
    ``sym:P0P1..Pn`` (profile bits), ``omb:N:S1;S2;...`` with each ``S`` a
    comma-separated list of 1-based variables (empty allowed), and
    ``random:N:SEED``.
    """
    parts = spec.strip().split(":")
    name = parts[0].lower()
    try:
        if name == "id" and len(parts) == 1:
            return TruthTable(1, [0, 1])
        if name in _NAMED and len(parts) == 2:
            return _NAMED[name](int(parts[1]))
        if name == "thr" and len(parts) == 3:
            return threshold(int(parts[1]), int(parts[2]))
        if name == "sym" and len(parts) == 2 and set(parts[1]) <= {"0", "1"} and parts[1]:
            return symmetric([int(c) for c in parts[1]])
        if name == "omb" and len(parts) == 3:
            n = int(parts[1])
            groups = parts[2].split(";") if parts[2] else []
            sets = [[int(v) for v in g.split(",") if v] for g in groups]
            if not sets:
                raise ValueError("omb needs at least one set")
            return odd_max_bit(sets, n)
        if name == "random" and len(parts) == 3:
            return random_function(int(parts[1]), np.random.default_rng(int(parts[2])))
    except ArityError:
        raise
    except (TypeError, ValueError) as exc:
        raise ValueError(f"invalid generator spec {spec!r}: {exc}") from exc
    raise ValueError(f"invalid generator spec {spec!r}")


def parse_function(text: str) -> TruthTable:
    """Accept either the ``n:HEX`` literal or a generator spec."""
    if re.fullmatch(r"\s*\d+:[0-9a-fA-F]+\s*", text):
        return TruthTable.from_text(text)
    return generate(text)


def _rebuild(n, bits):
    return TruthTable(n, bits)


TruthTable.__reduce__ = lambda self: (_rebuild, (self._n, np.array(self._bits)))
