"""Arithmetic in F_{p^m}[x]/<x^n - 1> for n = p^k, in the s = x-1 basis.

Because n is a power of the characteristic, x^n - 1 = (x-1)^n, so the quotient
is the truncated polynomial ring F_{p^m}[s]/<s^n>.  Storing coefficients of
powers of s makes valuations and unit decompositions first-nonzero-index
scans, which is what all the torsion computations need.  Exponents >= n
truncate to zero; they are never reduced cyclically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DivisionByZero, LengthMismatch, MixedField, MixedLength
from .galois import FieldElement, FieldSpec

MAX_N = 3125


class SPoly:
    """Element of F_{p^m}[s]/<s^n> as a dense coefficient vector.

    Coefficients are stored as integer field encodings in a read-only numpy
    array of length n.  Instances are immutable.
    """

    __slots__ = ("spec", "n", "coeffs")

    def __init__(self, spec: FieldSpec, n: int, coeffs):
        if not 1 <= n <= MAX_N:
            raise LengthMismatch(f"length {n} outside supported range")
        arr = np.asarray(coeffs, dtype=np.int16)
        if arr.shape != (n,):
            raise LengthMismatch(f"expected {n} coefficients, got shape {arr.shape}")
        arr = arr.copy()
        arr.flags.writeable = False
        self.spec = spec
        self.n = n
        self.coeffs = arr

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, spec: FieldSpec, n: int) -> "SPoly":
        return cls(spec, n, np.zeros(n, dtype=np.int16))

    @classmethod
    def one(cls, spec: FieldSpec, n: int) -> "SPoly":
        return cls.monomial(spec, n, 0)

    @classmethod
    def monomial(cls, spec: FieldSpec, n: int, exp: int, coeff=1) -> "SPoly":
        c = np.zeros(n, dtype=np.int16)
        if 0 <= exp < n:
            c[exp] = spec.element(coeff).encoding
        return cls(spec, n, c)

    @classmethod
    def from_ints(cls, spec: FieldSpec, n: int, values) -> "SPoly":
        """Coefficients given as integers (reduced mod p) or FieldElements."""
        enc = [
            v.encoding if isinstance(v, FieldElement) else spec.element(int(v)).encoding
            for v in values
        ]
        if len(enc) > n:
            raise LengthMismatch("more coefficients than ring length")
        return cls(spec, n, np.array(enc + [0] * (n - len(enc)), dtype=np.int16))

    # -- basics ---------------------------------------------------------------

    def _check(self, other: "SPoly"):
        if self.spec != other.spec:
            raise MixedField("polynomials over different fields")
        if self.n != other.n:
            raise MixedLength("polynomials of different lengths")

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def is_unit(self) -> bool:
        """Units of F[s]/<s^n> are exactly the elements with nonzero constant
        term, i.e. polynomials not vanishing at x = 1."""
        return self.coeffs[0] != 0

    def coeff(self, i: int) -> FieldElement:
        return self.spec.from_encoding(int(self.coeffs[i]))

    def __eq__(self, other):
        return (
            isinstance(other, SPoly)
            and self.spec == other.spec
            and self.n == other.n
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.spec, self.n, self.coeffs.tobytes()))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "SPoly") -> "SPoly":
        self._check(other)
        return SPoly(self.spec, self.n, self.spec.add_table[self.coeffs, other.coeffs])

    def __sub__(self, other: "SPoly") -> "SPoly":
        self._check(other)
        return SPoly(self.spec, self.n, self.spec.sub_table[self.coeffs, other.coeffs])

    def __neg__(self) -> "SPoly":
        return SPoly(self.spec, self.n, self.spec.neg_table[self.coeffs])

    def scalar_mul(self, c) -> "SPoly":
        e = self.spec.element(c).encoding
        return SPoly(self.spec, self.n, self.spec.mul_table[e, self.coeffs])

    def __mul__(self, other: "SPoly") -> "SPoly":
        self._check(other)
        spec, n = self.spec, self.n
        acc = np.zeros(n, dtype=np.int16)
        for i in np.nonzero(self.coeffs)[0]:
            prod = spec.mul_table[self.coeffs[i], other.coeffs[: n - i]]
            acc[i:] = spec.add_table[acc[i:], prod]
        return SPoly(spec, n, acc)

    def shift(self, a: int) -> "SPoly":
        """Multiply by s^a; powers running off the top truncate to zero."""
        if a < 0:
            raise ValueError("negative shift")
        if a >= self.n:
            return SPoly.zero(self.spec, self.n)
        out = np.zeros(self.n, dtype=np.int16)
        out[a:] = self.coeffs[: self.n - a]
        return SPoly(self.spec, self.n, out)

    def inverse(self) -> "SPoly":
        """Series inverse, valid exactly for units (nonzero constant term)."""
        if not self.is_unit():
            raise DivisionByZero("inverse of a non-unit polynomial")
        spec, n = self.spec, self.n
        out = np.zeros(n, dtype=np.int16)
        c0inv = spec.inv(int(self.coeffs[0]))
        out[0] = c0inv
        for k in range(1, n):
            # sum_{i=1..k} f_i g_{k-i}, then g_k = -c0^{-1} * sum
            acc = 0
            for i in np.nonzero(self.coeffs[1 : k + 1])[0] + 1:
                acc = spec.add(acc, spec.mul(int(self.coeffs[i]), int(out[k - i])))
            out[k] = spec.neg(spec.mul(c0inv, acc))
        return SPoly(spec, n, out)

    # -- valuation ------------------------------------------------------------

    def valuation(self) -> int:
        """Index of the first nonzero coefficient; n for the zero polynomial."""
        nz = np.nonzero(self.coeffs)[0]
        return int(nz[0]) if nz.size else self.n

    # -- display ----------------------------------------------------------------

    def to_string(self, var: str = "s") -> str:
        terms = []
        for i in np.nonzero(self.coeffs)[0]:
            c = self.spec.from_encoding(int(self.coeffs[i]))
            cs = str(c)
            if "+" in cs:
                cs = f"({cs})"
            if i == 0:
                terms.append(cs)
                continue
            power = var if i == 1 else f"{var}^{i}"
            terms.append(power if cs == "1" else f"{cs}*{power}")
        return " + ".join(terms) if terms else "0"

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"SPoly({self.to_string()})"


@dataclass(frozen=True)
class Decomposition:
    """f = s^valuation * unit_part with a unit (or zero) unit part."""

    valuation: int
    unit_part: SPoly


def decompose(f: SPoly) -> Decomposition:
    """Split off the highest s-power: every nonzero element of F[s]/<s^n> is
    s^t times a unit, and the zero element gets valuation n by convention."""
    t = f.valuation()
    if t == f.n:
        return Decomposition(f.n, SPoly.zero(f.spec, f.n))
    out = np.zeros(f.n, dtype=np.int16)
    out[: f.n - t] = f.coeffs[t:]
    return Decomposition(t, SPoly(f.spec, f.n, out))


def poly_arith(f: SPoly, g: SPoly | None = None, op: str = "add", c=None, a: int | None = None):
    """Dispatcher over the ring operations (mirrors the module contract)."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "scalar_mul":
        return f.scalar_mul(c)
    if op == "shift":
        return f.shift(int(a))
    raise ValueError(f"unknown op {op!r}")


# --- basis change between x-powers and s-powers ------------------------------

_BINOM_CACHE: dict[tuple[int, int], tuple[np.ndarray, np.ndarray]] = {}


def _transform_matrices(p: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """(M_xs, M_sx) with M_xs[i, j] = C(i, j) mod p and
    M_sx[j, i] = C(j, i) * (-1)^(j-i) mod p, computed digitwise (Lucas)."""
    key = (p, n)
    if key in _BINOM_CACHE:
        return _BINOM_CACHE[key]
    small = np.zeros((p, p), dtype=np.int64)
    small[0, 0] = 1
    for i in range(1, p):
        small[i, 0] = 1
        for j in range(1, i + 1):
            small[i, j] = (small[i - 1, j - 1] + small[i - 1, j]) % p
    ndig = 1
    while p**ndig < n:
        ndig += 1
    idx = np.arange(n)
    digits = np.zeros((n, ndig), dtype=np.int64)
    v = idx.copy()
    for d in range(ndig):
        digits[:, d] = v % p
        v //= p
    binom = np.ones((n, n), dtype=np.int64)
    for d in range(ndig):
        binom = binom * small[digits[:, None, d], digits[None, :, d]] % p
    signs = np.where((idx[:, None] - idx[None, :]) % 2 == 0, 1, p - 1)
    m_sx = binom * signs % p
    out = (binom.astype(np.int16), m_sx.astype(np.int16))
    _BINOM_CACHE[key] = out
    return out


def _apply_scalar_matrix(spec: FieldSpec, mat: np.ndarray, vec: np.ndarray) -> np.ndarray:
    """out[j] = sum_i mat[i, j] * vec[i] with mat over F_p, vec field encodings."""
    out = np.zeros(vec.shape[0], dtype=np.int16)
    for i in np.nonzero(vec)[0]:
        out = spec.add_table[out, spec.mul_table[vec[i], mat[i]]]
    return out


def basis_transform(spec: FieldSpec, vec, direction: str, n: int | None = None) -> np.ndarray:
    """Convert a length-n coefficient vector between the x-power and s-power
    bases (x = s + 1).  Input/output are integer field encodings."""
    arr = np.asarray(vec, dtype=np.int16)
    if n is None:
        n = arr.shape[0]
    if arr.shape != (n,):
        raise LengthMismatch("vector length does not match ring length")
    m_xs, m_sx = _transform_matrices(spec.p, n)
    if direction == "x_to_s":
        return _apply_scalar_matrix(spec, m_xs, arr)
    if direction == "s_to_x":
        return _apply_scalar_matrix(spec, m_sx, arr)
    raise ValueError(f"unknown direction {direction!r}")


def basis_transform_rows(spec: FieldSpec, rows: np.ndarray, direction: str) -> np.ndarray:
    """Row-wise basis_transform for a (r, n) matrix of encodings."""
    n = rows.shape[1]
    m_xs, m_sx = _transform_matrices(spec.p, n)
    mat = m_xs if direction == "x_to_s" else m_sx
    out = np.zeros_like(rows)
    for i in range(n):
        col = rows[:, i]
        if not col.any():
            continue
        out = spec.add_table[out, spec.mul_table[col[:, None], mat[i][None, :]]]
    return out
