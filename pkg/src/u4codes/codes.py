"""Cyclic codes over F_{p^m}[u]/<u^4> of length n = p^k.

A code is an ideal of R[x]/<x^n - 1> described by a canonical generator
subset of

    g0 = s^r  + u s^k1 p1 + u^2 s^k2 p2 + u^3 s^k3 p3
    g1 = u s^r1           + u^2 s^k4 p4 + u^3 s^k5 p5
    g2 = u^2 s^r2                       + u^3 s^k6 p6
    g3 = u^3 s^r3

with s = x - 1, degrees r3 <= r2 <= r1 <= r < n restricted to the present
generators, and unit-or-zero correction parts p1..p6.  This module also holds
the independent linear-algebra oracle: the code as an F_{p^m}-subspace of
F^(4n), its membership test, torsional degrees by witness scan, and codeword
enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .errors import (
    CorrectionDegreeTooLarge,
    CorrectionNotUnit,
    DegreeOrderViolated,
    DegreeOutOfRange,
    EmptyGeneratorSet,
    MalformedGeneratorForm,
    MixedField,
    MixedLength,
    TooLarge,
)
from .chain import RingElement
from .galois import FieldSpec
from .sring import MAX_N, SPoly

# All 15 nonempty generator subsets, principal ideals first.
IDEAL_TYPES: tuple[tuple[int, ...], ...] = (
    (0,), (1,), (2,), (3,),
    (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
    (0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3),
    (0, 1, 2, 3),
)


def ideal_type_name(levels) -> str:
    return "<" + ",".join(f"g{i}" for i in sorted(levels)) + ">"


# Correction slot -> (owner generator level, bounding generator level).
# The degree bound k_i < r_bound applies when the bounding generator is
# present; otherwise it relaxes to k_i < n.
_CORRECTIONS = {
    1: (0, 1),
    2: (0, 2),
    3: (0, 3),
    4: (1, 2),
    5: (1, 3),
    6: (2, 3),
}
# Correction slot -> u-level of the correction term inside its generator.
_CORRECTION_ULEVEL = {1: 1, 2: 2, 3: 3, 4: 2, 5: 3, 6: 3}


@dataclass(frozen=True)
class GeneratorForm:
    """Degrees and unit correction parts of a canonical generator subset.

    An absent correction (p_i is None) means the whole term is zero and the
    matching k_i must be absent too.
    """

    r: Optional[int] = None
    r1: Optional[int] = None
    r2: Optional[int] = None
    r3: Optional[int] = None
    k1: Optional[int] = None
    k2: Optional[int] = None
    k3: Optional[int] = None
    k4: Optional[int] = None
    k5: Optional[int] = None
    k6: Optional[int] = None
    p1: Optional[SPoly] = None
    p2: Optional[SPoly] = None
    p3: Optional[SPoly] = None
    p4: Optional[SPoly] = None
    p5: Optional[SPoly] = None
    p6: Optional[SPoly] = None

    def degree(self, level: int) -> Optional[int]:
        return (self.r, self.r1, self.r2, self.r3)[level]

    def correction(self, i: int) -> tuple[Optional[int], Optional[SPoly]]:
        return getattr(self, f"k{i}"), getattr(self, f"p{i}")

    def present_levels(self) -> tuple[int, ...]:
        return tuple(level for level in range(4) if self.degree(level) is not None)


@dataclass(frozen=True)
class CyclicCode:
    """A validated cyclic code over F_{p^m}[u]/<u^4> of length n = p^k."""

    field: FieldSpec
    k: int
    n: int
    form: GeneratorForm
    ideal_type: tuple[int, ...]

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def m(self) -> int:
        return self.field.m

    def type_name(self) -> str:
        return ideal_type_name(self.ideal_type)

    def generator(self, level: int) -> RingElement:
        """Materialize g_level as a ring element."""
        deg = self.form.degree(level)
        if deg is None:
            raise MalformedGeneratorForm(f"g{level} is not part of this code")
        elem = RingElement.from_part(level, SPoly.monomial(self.field, self.n, deg))
        for i, (owner, _) in _CORRECTIONS.items():
            if owner != level:
                continue
            ki, pi = self.form.correction(i)
            if pi is None:
                continue
            elem = elem + RingElement.from_part(_CORRECTION_ULEVEL[i], pi.shift(ki))
        return elem

    def generators(self) -> dict[int, RingElement]:
        return {level: self.generator(level) for level in self.ideal_type}

    def without_g3(self) -> "CyclicCode":
        """The sub-code generated by everything except g3."""
        if 3 not in self.ideal_type:
            return self
        form = GeneratorForm(
            r=self.form.r, r1=self.form.r1, r2=self.form.r2, r3=None,
            k1=self.form.k1, k2=self.form.k2, k3=self.form.k3,
            k4=self.form.k4, k5=self.form.k5, k6=self.form.k6,
            p1=self.form.p1, p2=self.form.p2, p3=self.form.p3,
            p4=self.form.p4, p5=self.form.p5, p6=self.form.p6,
        )
        return validate_canonical(self.field, self.k, form)


def validate_canonical(field: FieldSpec, k: int, form: GeneratorForm) -> CyclicCode:
    """Check every canonical-form invariant and infer the ideal type."""
    if k < 1:
        raise DegreeOutOfRange("k must be >= 1")
    n = field.p**k
    if n > MAX_N:
        raise DegreeOutOfRange(f"n = {field.p}^{k} exceeds the cap {MAX_N}")

    present = form.present_levels()
    if not present:
        raise EmptyGeneratorSet("at least one generator must be present")

    degrees = [form.degree(level) for level in present]
    for level, deg in zip(present, degrees):
        if not 0 <= deg < n:
            raise DegreeOrderViolated(f"degree of g{level} must lie in [0, {n})")
    # Ascending generator level must have non-increasing degree.
    for (la, da), (lb, db) in zip(zip(present, degrees), zip(present[1:], degrees[1:])):
        if db > da:
            raise DegreeOrderViolated(
                f"degree of g{lb} ({db}) exceeds degree of g{la} ({da})"
            )

    for i, (owner, bounder) in _CORRECTIONS.items():
        ki, pi = form.correction(i)
        if pi is None:
            if ki is not None:
                raise MalformedGeneratorForm(f"k{i} given without p{i}")
            continue
        if ki is None:
            raise MalformedGeneratorForm(f"p{i} given without k{i}")
        if owner not in present:
            raise MalformedGeneratorForm(f"correction p{i} belongs to absent g{owner}")
        if pi.spec != field:
            raise MixedField(f"p{i} lives in a different field")
        if pi.n != n:
            raise MixedLength(f"p{i} has the wrong length")
        if not pi.is_unit():
            raise CorrectionNotUnit(i, "zero constant term in the s-basis")
        bound = form.degree(bounder) if bounder in present else n
        if not 0 <= ki < bound:
            raise CorrectionDegreeTooLarge(i, ki, bound)

    return CyclicCode(field=field, k=k, n=n, form=form, ideal_type=present)


# --- the independent linear-algebra oracle -----------------------------------


@dataclass(frozen=True)
class SpanBasis:
    """Reduced row-echelon basis of the code as an F_{p^m}-subspace of F^(4n).

    Rows are flattened (a0 || a1 || a2 || a3) vectors in the s-basis; the code
    is the row space, closed under multiplication by u and s by construction.
    """

    field: FieldSpec
    n: int
    rows: np.ndarray
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _rref(field: FieldSpec, rows: Iterator[np.ndarray], width: int):
    add, sub, mul, inv = field.add_table, field.sub_table, field.mul_table, field.inv_table
    basis: list[np.ndarray] = []
    pivots: list[int] = []
    for row in rows:
        v = row.astype(np.int16)
        for p, b in zip(pivots, basis):
            c = v[p]
            if c:
                v = sub[v, mul[c, b]]
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            continue
        piv = int(nz[0])
        v = mul[inv[v[piv]], v]
        for idx, (p, b) in enumerate(zip(pivots, basis)):
            c = b[piv]
            if c:
                basis[idx] = sub[b, mul[c, v]]
        pos = int(np.searchsorted(np.asarray(pivots), piv))
        pivots.insert(pos, piv)
        basis.insert(pos, v)
    mat = np.array(basis, dtype=np.int16) if basis else np.zeros((0, width), dtype=np.int16)
    mat.flags.writeable = False
    return mat, tuple(pivots)


def span_basis(code: CyclicCode) -> SpanBasis:
    """Row-reduce the spanning set {g_i * s^a * u^b : 0<=a<n, 0<=b<=3}."""
    n = code.n

    def spanning_rows():
        for level in code.ideal_type:
            g = code.generator(level).to_vector().reshape(4, n)
            for b in range(4):
                shifted_u = np.zeros((4, n), dtype=np.int16)
                shifted_u[b:, :] = g[: 4 - b, :]
                for a in range(n):
                    row = np.zeros((4, n), dtype=np.int16)
                    row[:, a:] = shifted_u[:, : n - a]
                    yield row.reshape(4 * n)

    rows, pivots = _rref(code.field, spanning_rows(), 4 * n)
    return SpanBasis(field=code.field, n=n, rows=rows, pivots=pivots)


def contains(basis: SpanBasis, elem: RingElement) -> bool:
    """Membership: the flattened element reduces to zero against the rows."""
    if elem.spec != basis.field:
        raise MixedField("element over a different field")
    if elem.n != basis.n:
        raise MixedLength("element of a different length")
    v = elem.to_vector().astype(np.int16)
    sub, mul = basis.field.sub_table, basis.field.mul_table
    for p, b in zip(basis.pivots, basis.rows):
        c = v[p]
        if c:
            v = sub[v, mul[c, b]]
    return not v.any()


def torsion_oracle(code: CyclicCode, i: int, basis: SpanBasis | None = None) -> int:
    """Least s with u^i * (x-1)^s in the code, n if there is none.

    Membership of u^i s^t is monotone in t (multiply by s), so binary search.
    """
    if basis is None:
        basis = span_basis(code)
    n = code.n

    def member(t: int) -> bool:
        witness = RingElement.from_part(i, SPoly.monomial(code.field, n, t))
        return contains(basis, witness)

    if not member(n - 1):
        return n
    lo, hi = 0, n - 1  # member(hi) is True
    while lo < hi:
        mid = (lo + hi) // 2
        if member(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def torsion_profile(code: CyclicCode, basis: SpanBasis | None = None) -> tuple[int, int, int, int]:
    if basis is None:
        basis = span_basis(code)
    return tuple(torsion_oracle(code, i, basis) for i in range(4))


def enumerate_codewords(basis: SpanBasis, cap: int = 2**24) -> Iterator[RingElement]:
    """Yield every codeword exactly once (all field-linear row combinations)."""
    q = basis.field.q
    if q**basis.rank > cap:
        raise TooLarge(basis.rank, cap, q)
    n = basis.n
    width = 4 * n
    add, mul = basis.field.add_table, basis.field.mul_table
    total = q**basis.rank
    for idx in range(total):
        v = np.zeros(width, dtype=np.int16)
        rem = idx
        for row in basis.rows:
            rem, digit = divmod(rem, q)
            if digit:
                v = add[v, mul[digit, row]]
        yield RingElement.from_vector(basis.field, n, v)


def codeword_batches(
    basis: SpanBasis, cap: int, chunk: int = 1 << 14, rows: np.ndarray | None = None
) -> Iterator[np.ndarray]:
    """Vectorized enumeration: yields (B, width) blocks covering all codewords.

    The zero codeword appears as the first row of the first block.  `rows`
    may substitute a transformed copy of the basis rows (same row count).
    """
    q = basis.field.q
    if q**basis.rank > cap:
        raise TooLarge(basis.rank, cap, q)
    if rows is None:
        rows = basis.rows
    add, mul = basis.field.add_table, basis.field.mul_table
    total = q**basis.rank
    width = rows.shape[1] if basis.rank else 4 * basis.n
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        block = np.zeros((idx.size, width), dtype=np.int16)
        rem = idx
        for row in rows:
            rem, digits = np.divmod(rem, q)
            digits = digits.astype(np.int16)
            if digits.any():
                block = add[block, mul[digits[:, None], row[None, :]]]
        yield block
