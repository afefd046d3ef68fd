"""Dense linear algebra over GF(2) with packed rows.

A row (or vector) of width ``c`` is stored as a non-negative Python integer
whose bit ``j`` is column ``j`` (least-significant bit first).  That is the
same layout as a little-endian array of 64-bit words; ``.words`` exposes it
as a ``uint64`` numpy array.  Small systems are eliminated directly on the
integers, wide ones on a ``uint64`` word matrix with vectorised row XORs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

WORD_BITS = 64

# Above this many bit-columns the numpy word kernel wins over Python ints.
NUMPY_MIN_WIDTH = 256

_ONE = np.uint64(1)


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


def _mask(width: int) -> int:
    return (1 << width) - 1


def _nwords(width: int) -> int:
    return (width + WORD_BITS - 1) // WORD_BITS


def ints_to_words(values: Sequence[int], width: int) -> np.ndarray:
    """Pack integers into a ``(len(values), nwords)`` uint64 array."""
    nw = _nwords(width)
    if not values or nw == 0:
        return np.zeros((len(values), nw), dtype=np.uint64)
    buf = b"".join(v.to_bytes(nw * 8, "little") for v in values)
    return np.frombuffer(buf, dtype="<u8").reshape(len(values), nw).astype(np.uint64)


def words_to_ints(words: np.ndarray) -> list[int]:
    le = np.ascontiguousarray(words, dtype="<u8")
    return [int.from_bytes(row.tobytes(), "little") for row in le]


class Gf2Vector:
    """Immutable bit vector of fixed length."""

    __slots__ = ("_length", "_bits")

    def __init__(self, length: int, bits: int = 0):
        if length < 0:
            raise ValueError("length must be non-negative")
        if bits < 0 or bits >> length:
            raise ValueError(f"bits set beyond length {length}")
        self._length = length
        self._bits = bits

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> Gf2Vector:
        value = 0
        length = 0
        for j, b in enumerate(bits):
            if b & 1:
                value |= 1 << j
            length = j + 1
        return cls(length, value)

    @classmethod
    def zeros(cls, length: int) -> Gf2Vector:
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> Gf2Vector:
        return cls(length, _mask(length))

    @property
    def length(self) -> int:
        return self._length

    @property
    def bits(self) -> int:
        """The packed value (bit ``j`` is entry ``j``)."""
        return self._bits

    @property
    def words(self) -> np.ndarray:
        return ints_to_words([self._bits], self._length)[0]

    def __len__(self) -> int:
        return self._length

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self._length:
            raise IndexError(j)
        return (self._bits >> j) & 1

    def __iter__(self):
        return (((self._bits >> j) & 1) for j in range(self._length))

    def __add__(self, other: Gf2Vector) -> Gf2Vector:
        if not isinstance(other, Gf2Vector):
            return NotImplemented
        if other._length != self._length:
            raise DimensionError(f"length {self._length} vs {other._length}")
        return Gf2Vector(self._length, self._bits ^ other._bits)

    __xor__ = __add__

    def dot(self, other: Gf2Vector) -> int:
        if other._length != self._length:
            raise DimensionError(f"length {self._length} vs {other._length}")
        return (self._bits & other._bits).bit_count() & 1

    def weight(self) -> int:
        return self._bits.bit_count()

    def support(self) -> list[int]:
        return [j for j in range(self._length) if (self._bits >> j) & 1]

    def to_list(self) -> list[int]:
        return list(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Vector):
            return NotImplemented
        return self._length == other._length and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self._length, self._bits))

    def __repr__(self) -> str:
        return f"Gf2Vector({''.join(map(str, self))!r})"


class Gf2Matrix:
    """Immutable ``rows x cols`` matrix over GF(2), one packed integer per row."""

    __slots__ = ("_rows", "_cols", "_data")

    def __init__(self, rows: int, cols: int, data: Sequence[int] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("shape must be non-negative")
        if data is None:
            data = (0,) * rows
        data = tuple(int(r) for r in data)
        if len(data) != rows:
            raise ValueError(f"expected {rows} rows, got {len(data)}")
        for r in data:
            if r < 0 or r >> cols:
                raise ValueError(f"row has bits set beyond column {cols}")
        self._rows = rows
        self._cols = cols
        self._data = data

    # construction

    @classmethod
    def _trusted(cls, rows: int, cols: int, data: tuple[int, ...]) -> Gf2Matrix:
        m = object.__new__(cls)
        m._rows, m._cols, m._data = rows, cols, data
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> Gf2Matrix:
        if not rows:
            return cls(0, 0)
        cols = len(rows[0])
        packed = []
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionError(f"row {i} has {len(row)} entries, expected {cols}")
            packed.append(Gf2Vector.from_bits(row).bits)
        return cls(len(rows), cols, packed)

    @classmethod
    def from_dense(cls, array) -> Gf2Matrix:
        a = np.asarray(array)
        if a.ndim != 2:
            raise DimensionError("expected a 2-d array")
        return cls.from_rows((a.astype(np.int64) & 1).tolist()) if a.shape[0] else cls(0, a.shape[1])

    @classmethod
    def from_words(cls, words: np.ndarray, cols: int) -> Gf2Matrix:
        return cls(words.shape[0], cols, words_to_ints(words))

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls._trusted(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Gf2Matrix:
        return cls._trusted(rows, cols, (0,) * rows)

    @classmethod
    def ones(cls, rows: int, cols: int) -> Gf2Matrix:
        return cls._trusted(rows, cols, (_mask(cols),) * rows)

    @classmethod
    def random(cls, rows: int, cols: int, seed: int) -> Gf2Matrix:
        rng = random.Random(seed)
        return cls._trusted(rows, cols, tuple(rng.getrandbits(cols) if cols else 0 for _ in range(rows)))

    # accessors

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return self._rows, self._cols

    @property
    def data(self) -> tuple[int, ...]:
        return self._data

    @property
    def words(self) -> np.ndarray:
        return ints_to_words(self._data, self._cols)

    def row(self, i: int) -> Gf2Vector:
        return Gf2Vector(self._cols, self._data[i])

    def column(self, j: int) -> Gf2Vector:
        if not 0 <= j < self._cols:
            raise IndexError(j)
        bits = 0
        for i, r in enumerate(self._data):
            bits |= ((r >> j) & 1) << i
        return Gf2Vector(self._rows, bits)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError(ij)
        return (self._data[i] >> j) & 1

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self._rows, self._cols), dtype=np.uint8)
        for i, r in enumerate(self._data):
            for j in range(self._cols):
                out[i, j] = (r >> j) & 1
        return out

    def to_lists(self) -> list[list[int]]:
        return [Gf2Vector(self._cols, r).to_list() for r in self._data]

    # algebra

    def transpose(self) -> Gf2Matrix:
        out = [0] * self._cols
        for i, r in enumerate(self._data):
            bit = 1 << i
            while r:
                low = r & -r
                out[low.bit_length() - 1] |= bit
                r ^= low
        return Gf2Matrix._trusted(self._cols, self._rows, tuple(out))

    def __add__(self, other: Gf2Matrix) -> Gf2Matrix:
        if not isinstance(other, Gf2Matrix):
            return NotImplemented
        if other.shape != self.shape:
            raise DimensionError(f"shape {self.shape} vs {other.shape}")
        return Gf2Matrix._trusted(self._rows, self._cols, tuple(a ^ b for a, b in zip(self._data, other._data)))

    def __matmul__(self, other):
        if isinstance(other, Gf2Vector):
            if other.length != self._cols:
                raise DimensionError(f"matrix has {self._cols} columns, vector length {other.length}")
            x = other.bits
            bits = 0
            for i, r in enumerate(self._data):
                bits |= ((r & x).bit_count() & 1) << i
            return Gf2Vector(self._rows, bits)
        if isinstance(other, Gf2Matrix):
            if other._rows != self._cols:
                raise DimensionError(f"inner dimensions {self._cols} vs {other._rows}")
            brows = other._data
            out = []
            for r in self._data:
                acc = 0
                while r:
                    low = r & -r
                    acc ^= brows[low.bit_length() - 1]
                    r ^= low
                out.append(acc)
            return Gf2Matrix._trusted(self._rows, other._cols, tuple(out))
        return NotImplemented

    def delete(self, index: int) -> Gf2Matrix:
        """Drop row ``index`` and column ``index`` of a square matrix."""
        if self._rows != self._cols:
            raise DimensionError("delete needs a square matrix")
        if not 0 <= index < self._rows:
            raise IndexError(index)
        low = _mask(index)
        data = tuple((r & low) | ((r >> (index + 1)) << index) for i, r in enumerate(self._data) if i != index)
        return Gf2Matrix._trusted(self._rows - 1, self._cols - 1, data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._data))

    def __repr__(self) -> str:
        body = ", ".join("".join(map(str, self.row(i))) for i in range(self._rows))
        return f"Gf2Matrix({self._rows}x{self._cols}: [{body}])"


@dataclass(frozen=True)
class RrefResult:
    rref: Gf2Matrix
    pivot_cols: tuple[int, ...]
    rank: int
    kernel_basis: tuple[Gf2Vector, ...]


# ---------------------------------------------------------------------------
# elimination kernels
#
# Both take packed rows that may be wider than the coefficient part (augmented
# columns live above bit ``ncols``) and search pivots only in [0, ncols).
# They return the reduced rows and the ascending pivot columns.
# ---------------------------------------------------------------------------


def _reduce_ints(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    a = list(rows)
    m = len(a)
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == m:
            break
        bit = 1 << c
        for p in range(r, m):
            if a[p] & bit:
                break
        else:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        prow = a[r]
        for i in range(m):
            if i != r and a[i] & bit:
                a[i] ^= prow
        pivots.append(c)
        r += 1
    return a, pivots


def _reduce_words(rows: Sequence[int], width: int, ncols: int) -> tuple[list[int], list[int]]:
    a = ints_to_words(rows, width)
    m = a.shape[0]
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == m:
            break
        w, b = divmod(c, WORD_BITS)
        col = (a[:, w] >> np.uint64(b)) & _ONE
        below = np.flatnonzero(col[r:])
        if below.size == 0:
            continue
        p = r + int(below[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
            col[p] = col[r]
        col[r] = 0
        hits = np.flatnonzero(col)
        if hits.size:
            a[hits, w:] ^= a[r, w:]
        pivots.append(c)
        r += 1
    return words_to_ints(a), pivots


def _reduce(rows: Sequence[int], width: int, ncols: int) -> tuple[list[int], list[int]]:
    if width >= NUMPY_MIN_WIDTH and len(rows) >= 32:
        return _reduce_words(rows, width, ncols)
    return _reduce_ints(rows, ncols)


def _kernel_from_rref(reduced: Sequence[int], pivots: Sequence[int], ncols: int) -> list[Gf2Vector]:
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        bits = 1 << f
        for i, p in enumerate(pivots):
            if (reduced[i] >> f) & 1:
                bits |= 1 << p
        basis.append(Gf2Vector(ncols, bits))
    return basis


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def rref(m: Gf2Matrix) -> RrefResult:
    """Reduced row-echelon form, pivots, rank and the free-variable kernel basis."""
    reduced, pivots = _reduce(m.data, m.cols, m.cols)
    basis = _kernel_from_rref(reduced, pivots, m.cols)
    return RrefResult(
        rref=Gf2Matrix._trusted(m.rows, m.cols, tuple(reduced)),
        pivot_cols=tuple(pivots),
        rank=len(pivots),
        kernel_basis=tuple(basis),
    )


def rank(m: Gf2Matrix) -> int:
    if m.cols >= 2 * NUMPY_MIN_WIDTH and m.rows >= 32:
        return len(_reduce_words(m.data, m.cols, m.cols)[1])
    # Leading-bit basis insertion: cheaper than a full reduction when only
    # the dimension is needed.
    basis: dict[int, int] = {}
    for r in m.data:
        while r:
            top = r.bit_length()
            b = basis.get(top)
            if b is None:
                basis[top] = r
                break
            r ^= b
    return len(basis)


def kernel_basis(m: Gf2Matrix) -> tuple[Gf2Vector, ...]:
    return rref(m).kernel_basis


def solve(m: Gf2Matrix, b: Gf2Vector) -> Gf2Vector | None:
    """Canonical solution of ``m @ x == b`` (free variables zero), or None."""
    if b.length != m.rows:
        raise DimensionError(f"right-hand side length {b.length} != {m.rows} rows")
    n = m.cols
    rhs = b.bits
    aug = [r | (((rhs >> i) & 1) << n) for i, r in enumerate(m.data)]
    reduced, pivots = _reduce(aug, n + 1, n)
    rk = len(pivots)
    for i in range(rk, m.rows):
        if reduced[i]:
            return None
    x = 0
    for i, p in enumerate(pivots):
        if (reduced[i] >> n) & 1:
            x |= 1 << p
    return Gf2Vector(n, x)


def invert(m: Gf2Matrix) -> Gf2Matrix | None:
    if m.rows != m.cols:
        raise DimensionError(f"cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    aug = [r | (1 << (n + i)) for i, r in enumerate(m.data)]
    reduced, pivots = _reduce(aug, 2 * n, n)
    if len(pivots) < n:
        return None
    return Gf2Matrix._trusted(n, n, tuple(r >> n for r in reduced))


def entry_sum_parity(m: Gf2Matrix) -> int:
    acc = 0
    for r in m.data:
        acc ^= r
    return acc.bit_count() & 1


def is_symmetric_unit_diagonal(m: Gf2Matrix) -> bool:
    if m.rows != m.cols:
        return False
    if any(not (r >> i) & 1 for i, r in enumerate(m.data)):
        return False
    return m.transpose() == m


def random_symmetric_unit_diagonal_invertible(n: int, seed: int, max_retries: int = 1000) -> Gf2Matrix:
    """Random symmetric invertible matrix with ones on the diagonal.

    Deterministic in ``seed``; a singular draw is rejected and redrawn with
    ``seed + 1``, up to ``max_retries`` times.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    for attempt in range(max_retries + 1):
        rng = random.Random(seed + attempt)
        rows = [1 << i for i in range(n)]
        for i in range(n):
            upper = rng.getrandbits(n - i - 1) if n - i - 1 else 0
            for k in range(n - i - 1):
                if (upper >> k) & 1:
                    j = i + 1 + k
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        m = Gf2Matrix._trusted(n, n, tuple(rows))
        if rank(m) == n:
            return m
    raise RuntimeError(f"no invertible {n}x{n} draw after {max_retries} retries from seed {seed}")


# ---------------------------------------------------------------------------
# text format: "R C" header, then R lines of C characters in {0, 1}
# ---------------------------------------------------------------------------


def format_matrix(m: Gf2Matrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    lines.extend("".join(str((r >> j) & 1) for j in range(m.cols)) for r in m.data)
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> Gf2Matrix:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ValueError("empty matrix text")
    head = lines[0].split()
    if len(head) != 2 or not all(h.isdigit() for h in head):
        raise ValueError(f"line 1: expected 'R C', got {lines[0]!r}")
    rows, cols = int(head[0]), int(head[1])
    body = lines[1:]
    if len(body) != rows:
        raise ValueError(f"expected {rows} row lines, got {len(body)}")
    data = []
    for i, line in enumerate(body, start=2):
        line = line.rstrip("\r")
        if len(line) != cols or set(line) - {"0", "1"}:
            raise ValueError(f"line {i}: expected {cols} characters of 0/1")
        data.append(int(line[::-1], 2) if cols else 0)
    return Gf2Matrix(rows, cols, data)
