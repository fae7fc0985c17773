"""Exact complex-rational scalars and dense square matrices.

Everything downstream (rotation generators, ladder operators, Casimir
invariants) is built from these two types, so every identity the toolkit
checks is decided with zero tolerance: two matrices are equal iff every
entry is equal as a pair of reduced fractions.

Scalars are Gaussian rationals a + b*i with ``fractions.Fraction``
components, which keeps numerators and denominators in lowest terms with
positive denominators automatically.  Rank and basis expansion use
fraction-free (Bareiss) elimination so intermediate entries stay small
even for the 36-generator dependency systems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence, Union

RationalLike = Union[int, Fraction]
ScalarLike = Union["GaussianRational", int, Fraction]


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """A complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: ScalarLike) -> "GaussianRational":
        other = as_scalar(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "GaussianRational":
        other = as_scalar(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: ScalarLike) -> "GaussianRational":
        return as_scalar(other) - self

    def __mul__(self, other: ScalarLike) -> "GaussianRational":
        other = as_scalar(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "GaussianRational":
        other = as_scalar(other)
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __rtruediv__(self, other: ScalarLike) -> "GaussianRational":
        return as_scalar(other) / self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return not self.im

    # -- canonical text form --------------------------------------------------

    def __str__(self) -> str:
        """Canonical form: "0", "3/4", "-i", "2i", "1/2-3/4i"."""
        if not self.im:
            return str(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = f"{self.im}i"
        if not self.re:
            return imag
        sign = "+" if self.im > 0 else ""
        return f"{self.re}{sign}{imag}"

    __repr__ = __str__

    @staticmethod
    def parse(text: str) -> "GaussianRational":
        """Inverse of ``str``; accepts any "a", "bi", or "a+bi" spelling."""
        s = text.strip().replace(" ", "")
        if not s:
            raise ValueError("empty scalar")
        if not s.endswith("i"):
            return GaussianRational(Fraction(s))
        body = s[:-1]
        # split off a real part, if any, at the last +/- that is not a
        # fraction sign or the leading sign
        split = -1
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "+-/":
                split = k
                break
        if split == -1:
            coeff = body
            real = Fraction(0)
        else:
            real = Fraction(body[:split])
            coeff = body[split:]
        if coeff in ("", "+"):
            imag = Fraction(1)
        elif coeff == "-":
            imag = Fraction(-1)
        else:
            imag = Fraction(coeff)
        return GaussianRational(real, imag)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
HALF = GaussianRational(Fraction(1, 2))


def as_scalar(value: ScalarLike) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    return GaussianRational(value)


class ExactMatrix:
    """Immutable square matrix over the Gaussian rationals.

    Equality is entrywise exact equality; there is no tolerance anywhere.
    """

    __slots__ = ("dim", "rows", "_hash")

    def __init__(self, rows: Sequence[Sequence[ScalarLike]]):
        dim = len(rows)
        data = []
        for row in rows:
            if len(row) != dim:
                raise ValueError("matrix must be square")
            data.append(tuple(as_scalar(x) for x in row))
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "rows", tuple(data))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("ExactMatrix is immutable")

    @staticmethod
    def zeros(dim: int) -> "ExactMatrix":
        return ExactMatrix([[ZERO] * dim for _ in range(dim)])

    @staticmethod
    def identity(dim: int) -> "ExactMatrix":
        return ExactMatrix(
            [[ONE if i == j else ZERO for j in range(dim)] for i in range(dim)]
        )

    @staticmethod
    def from_entries(dim: int, entries: dict[tuple[int, int], ScalarLike]) -> "ExactMatrix":
        """Build from a sparse {(row, col): value} map with 0-based indices."""
        rows = [[ZERO] * dim for _ in range(dim)]
        for (i, j), v in entries.items():
            rows[i][j] = as_scalar(v)
        return ExactMatrix(rows)

    def __getitem__(self, ij: tuple[int, int]) -> GaussianRational:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    def __hash__(self) -> int:
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash(self.rows)
            object.__setattr__(self, "_hash", h)
        return h

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_dim(other)
        return ExactMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_dim(other)
        return ExactMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-a for a in row] for row in self.rows])

    def __mul__(self, scalar: ScalarLike) -> "ExactMatrix":
        s = as_scalar(scalar)
        return ExactMatrix([[a * s for a in row] for row in self.rows])

    __rmul__ = __mul__

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_dim(other)
        n = self.dim
        out = [[ZERO] * n for _ in range(n)]
        brows = other.rows
        for i, arow in enumerate(self.rows):
            orow = out[i]
            for k, a in enumerate(arow):
                if not a:
                    continue
                for j, b in enumerate(brows[k]):
                    if b:
                        orow[j] = orow[j] + a * b
        return ExactMatrix(out)

    def _check_dim(self, other: "ExactMatrix") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.rows)))

    def trace(self) -> GaussianRational:
        t = ZERO
        for i in range(self.dim):
            t = t + self.rows[i][i]
        return t

    def scaled_identity(self) -> Optional[GaussianRational]:
        """Return lambda with self == lambda * I, or None."""
        lam = self.rows[0][0]
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if (v != lam) if i == j else bool(v):
                    return None
        return lam

    def flatten(self) -> tuple[GaussianRational, ...]:
        return tuple(v for row in self.rows for v in row)

    def __str__(self) -> str:
        cells = [[str(v) for v in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(
            "[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells
        )

    __repr__ = __str__


def commutator(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """The bracket a@b - b@a, exact; raises on dimension mismatch."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return a @ b - b @ a


def scalar_multiple_of(
    a: ExactMatrix, b: ExactMatrix
) -> Optional[GaussianRational]:
    """Return lambda with a == lambda*b if one exists, else None.

    b must be nonzero; the zero matrix has every matrix as a multiple, so
    asking for a coefficient against it signals a caller bug.
    """
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    if b.is_zero():
        raise ValueError("reference matrix is zero")
    lam = None
    for ra, rb in zip(a.rows, b.rows):
        for va, vb in zip(ra, rb):
            if vb:
                lam = va / vb
                break
        if lam is not None:
            break
    assert lam is not None
    for ra, rb in zip(a.rows, b.rows):
        for va, vb in zip(ra, rb):
            if va != vb * lam:
                return None
    return lam


# -- fraction-free elimination ---------------------------------------------


def _integer_rows(vectors: Sequence[Sequence[GaussianRational]]) -> list[list[GaussianRational]]:
    """Scale each row by a positive integer so entries are Gaussian integers.

    Row scaling changes neither the rank nor the span, and it lets the
    Bareiss recurrence below run entirely over Gaussian integers.
    """
    rows = []
    for vec in vectors:
        denoms = [1]
        for v in vec:
            denoms.append(v.re.denominator)
            denoms.append(v.im.denominator)
        scale = GaussianRational(lcm(*denoms))
        rows.append([v * scale for v in vec])
    return rows


def rank_of_vectors(vectors: Sequence[Sequence[GaussianRational]]) -> int:
    """Rank of a list of equal-length vectors by Bareiss elimination."""
    if not vectors:
        return 0
    ncols = len(vectors[0])
    if any(len(v) != ncols for v in vectors):
        raise ValueError("vectors must have equal length")
    rows = _integer_rows(vectors)
    nrows = len(rows)
    prev = ONE
    pr = 0
    for pc in range(ncols):
        pivot_row = None
        for r in range(pr, nrows):
            if rows[r][pc]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != pr:
            rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
        pivot = rows[pr][pc]
        for r in range(pr + 1, nrows):
            head = rows[r][pc]
            row = rows[r]
            prow = rows[pr]
            for c in range(pc, ncols):
                # Bareiss step: exact division by the previous pivot
                row[c] = (row[c] * pivot - head * prow[c]) / prev
        prev = pivot
        pr += 1
        if pr == nrows:
            break
    return pr


def rank(matrices: Sequence[ExactMatrix]) -> int:
    """Dimension of the span of the given matrices (all same size)."""
    if not matrices:
        return 0
    dim = matrices[0].dim
    for m in matrices:
        if m.dim != dim:
            raise ValueError("matrices must share a dimension")
    return rank_of_vectors([m.flatten() for m in matrices])


class SpanSolver:
    """Reduced-echelon factorisation of a fixed spanning set.

    Factors the flattened basis once so that repeated expansion queries
    (hundreds per verification suite) cost a single sparse sweep each.
    """

    def __init__(self, basis: Sequence[ExactMatrix]):
        if not basis:
            raise ValueError("empty basis")
        self.dim = basis[0].dim
        self.size = len(basis)
        self._rows: list[tuple[int, list[GaussianRational], list[GaussianRational]]] = []
        for k, mat in enumerate(basis):
            if mat.dim != self.dim:
                raise ValueError("matrices must share a dimension")
            combo = [ZERO] * self.size
            combo[k] = ONE
            vec = list(mat.flatten())
            self._reduce(vec, combo)
            pivot = self._first_nonzero(vec)
            if pivot is None:
                raise ValueError(f"basis element {k} is dependent on earlier ones")
            inv = ONE / vec[pivot]
            vec = [v * inv for v in vec]
            combo = [c * inv for c in combo]
            for piv, pvec, pcombo in self._rows:
                c = pvec[pivot]
                if c:
                    for idx, v in enumerate(vec):
                        if v:
                            pvec[idx] = pvec[idx] - c * v
                    for idx, v in enumerate(combo):
                        if v:
                            pcombo[idx] = pcombo[idx] - c * v
            self._rows.append((pivot, vec, combo))
        self._rows.sort(key=lambda item: item[0])

    @staticmethod
    def _first_nonzero(vec: Sequence[GaussianRational]) -> Optional[int]:
        for idx, v in enumerate(vec):
            if v:
                return idx
        return None

    def _reduce(self, vec: list[GaussianRational], combo: list[GaussianRational]) -> None:
        for pivot, pvec, pcombo in self._rows:
            c = vec[pivot]
            if not c:
                continue
            for idx, v in enumerate(pvec):
                if v:
                    vec[idx] = vec[idx] - c * v
            for idx, v in enumerate(pcombo):
                if v:
                    combo[idx] = combo[idx] - c * v

    def expand(self, x: ExactMatrix) -> Optional[list[GaussianRational]]:
        """Coefficients of x in the basis, or None if x is outside the span."""
        if x.dim != self.dim:
            raise ValueError("dimension mismatch")
        vec = list(x.flatten())
        coeffs = [ZERO] * self.size
        for pivot, pvec, pcombo in self._rows:
            c = vec[pivot]
            if not c:
                continue
            for idx, v in enumerate(pvec):
                if v:
                    vec[idx] = vec[idx] - c * v
            for idx, v in enumerate(pcombo):
                if v:
                    coeffs[idx] = coeffs[idx] + c * v
        if any(vec):
            return None
        return coeffs


def expand_in_basis(
    x: ExactMatrix, basis: Sequence[ExactMatrix]
) -> Optional[list[GaussianRational]]:
    """Exact coefficients c with x = sum(c_k * basis_k), or None.

    The basis is assumed linearly independent (check with ``rank`` first);
    a dependent list raises ValueError.
    """
    return SpanSolver(basis).expand(x)
