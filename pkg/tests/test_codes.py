import random

import pytest

import u4codes as u
from u4codes.chain import RingElement
from u4codes.codes import codeword_batches
from u4codes.errors import (
    CorrectionDegreeTooLarge,
    CorrectionNotUnit,
    DegreeOrderViolated,
    EmptyGeneratorSet,
    TooLarge,
)
from u4codes.sring import SPoly
from conftest import golden_g0_g1_f2, golden_g1_f4


def test_validate_golden_g1(F4):
    code = golden_g1_f4(F4)
    assert code.ideal_type == (1,)
    assert code.n == 8 and code.form.r1 == 6


def test_validate_bare_g0(F2):
    code = u.validate_canonical(F2, 2, u.GeneratorForm(r=2))
    assert code.ideal_type == (0,)
    assert code.generator(0) == RingElement.from_part(0, SPoly.monomial(F2, 4, 2))


def test_validate_degree_order(F2):
    with pytest.raises(DegreeOrderViolated):
        u.validate_canonical(F2, 3, u.GeneratorForm(r1=3, r2=5))


def test_validate_empty(F2):
    with pytest.raises(EmptyGeneratorSet):
        u.validate_canonical(F2, 2, u.GeneratorForm())


def test_validate_correction_rules(F2):
    nonunit = SPoly.monomial(F2, 4, 1)
    with pytest.raises(CorrectionNotUnit):
        u.validate_canonical(F2, 2, u.GeneratorForm(r=2, k1=0, p1=nonunit))
    # k1 < r1 when g1 is present
    with pytest.raises(CorrectionDegreeTooLarge):
        u.validate_canonical(
            F2, 2, u.GeneratorForm(r=3, r1=2, k1=2, p1=SPoly.one(F2, 4))
        )
    # without g1 the bound relaxes to k1 < n
    code = u.validate_canonical(F2, 2, u.GeneratorForm(r=3, k1=3, p1=SPoly.one(F2, 4)))
    assert code.form.k1 == 3


def test_relaxed_bound_matches_g2_example(F25):
    # k6 = 67 > r2 = 51 is legal when g3 is absent
    h = SPoly.from_ints(F25, 125, [1, 1])
    code = u.validate_canonical(F25, 3, u.GeneratorForm(r2=51, k6=67, p6=h))
    assert code.ideal_type == (2,)


def test_ideal_type_inference_all_15(F2):
    seen = set()
    for itype in u.IDEAL_TYPES:
        fields = {}
        names = {0: "r", 1: "r1", 2: "r2", 3: "r3"}
        for rank, level in enumerate(sorted(itype)):
            fields[names[level]] = 3 - rank if 3 - rank >= 0 else 0
        code = u.validate_canonical(F2, 2, u.GeneratorForm(**fields))
        seen.add(code.ideal_type)
    assert seen == set(u.IDEAL_TYPES)


# --- span basis ------------------------------------------------------------------


def test_span_rank_g3_high_degree(F2):
    code = u.validate_canonical(F2, 2, u.GeneratorForm(r3=3))
    basis = u.span_basis(code)
    assert basis.rank == 1  # u^3 s^3 only; every shift dies at s^4


def test_span_rank_g3_zero_degree(F2):
    code = u.validate_canonical(F2, 2, u.GeneratorForm(r3=0))
    assert u.span_basis(code).rank == 4


def test_span_closure_under_u_and_s(F4):
    code = golden_g1_f4(F4)
    basis = u.span_basis(code)
    for row in basis.rows:
        elem = RingElement.from_vector(F4, 8, row)
        assert u.contains(basis, elem.shift_mul(0, 1))
        assert u.contains(basis, elem.shift_mul(1, 0))


def test_contains_examples(F2):
    code = u.validate_canonical(
        F2, 2, u.GeneratorForm(r1=3, k4=0, p4=SPoly.one(F2, 4))
    )
    basis = u.span_basis(code)
    assert u.contains(basis, RingElement.zero(F2, 4))
    # u*g1 - s^2*(s*g1) = u^3
    assert u.contains(basis, RingElement.from_part(3, SPoly.one(F2, 4)))

    small = u.validate_canonical(F2, 2, u.GeneratorForm(r3=3))
    sbasis = u.span_basis(small)
    assert not u.contains(sbasis, RingElement.from_part(2, SPoly.monomial(F2, 4, 3)))


def test_golden_g0_g1_socle_membership(F2):
    code = golden_g0_g1_f2(F2)
    basis = u.span_basis(code)
    assert u.contains(basis, RingElement.from_part(3, SPoly.one(F2, 4)))  # u^3 in C


# --- torsion oracle -----------------------------------------------------------------


def test_torsion_oracle_examples(F3, F4):
    code = golden_g1_f4(F4)
    assert u.torsion_oracle(code, 3) == 1

    g3code = u.validate_canonical(F3, 2, u.GeneratorForm(r3=2))
    assert u.torsion_oracle(g3code, 3) == 2


def test_torsion_oracle_matches_linear_scan(F2):
    # binary search against the definition, on a handful of codes
    rng = random.Random(42)
    spec = F2
    for _ in range(25):
        code = u.random_code(rng, spec, 3)
        basis = u.span_basis(code)
        for i in range(4):
            fast = u.torsion_oracle(code, i, basis)
            slow = code.n
            for s in range(code.n):
                if u.contains(basis, RingElement.from_part(i, SPoly.monomial(spec, code.n, s))):
                    slow = s
                    break
            assert fast == slow


def test_torsion_ordering_property():
    for (p, m, k) in [(2, 1, 2), (3, 1, 2), (2, 2, 2)]:
        spec = u.field_make(p, m)
        rng = random.Random(99)
        for _ in range(60):
            code = u.random_code(rng, spec, k)
            t0, t1, t2, t3 = u.torsion_profile(code)
            assert t3 <= t2 <= t1 <= t0


def test_pure_power_ideals_have_rectangular_profile(F3):
    # <g_i> with no corrections: t_j = r_i for j >= i and n below
    n = 9
    for level, name in ((0, "r"), (1, "r1"), (2, "r2"), (3, "r3")):
        code = u.validate_canonical(F3, 2, u.GeneratorForm(**{name: 4}))
        profile = u.torsion_profile(code)
        for j in range(4):
            assert profile[j] == (4 if j >= level else n)


# --- enumeration ----------------------------------------------------------------------


def test_enumerate_counts(F2):
    one_dim = u.span_basis(u.validate_canonical(F2, 2, u.GeneratorForm(r3=3)))
    words = list(u.enumerate_codewords(one_dim))
    assert len(words) == 2

    four_dim = u.span_basis(u.validate_canonical(F2, 2, u.GeneratorForm(r3=0)))
    words = list(u.enumerate_codewords(four_dim))
    assert len(words) == 16


def test_enumerate_unique_and_closed(F2):
    code = golden_g0_g1_f2(F2)
    basis = u.span_basis(code)
    words = list(u.enumerate_codewords(basis))
    assert len(words) == 2**basis.rank
    seen = {w.to_vector().tobytes() for w in words}
    assert len(seen) == len(words)
    rng = random.Random(5)
    for _ in range(30):
        a, b = rng.choice(words), rng.choice(words)
        assert (a + b).to_vector().tobytes() in seen


def test_enumerate_cap(F25):
    code = u.validate_canonical(F25, 3, u.GeneratorForm(r2=51))
    basis = u.span_basis(code)
    with pytest.raises(TooLarge):
        list(u.enumerate_codewords(basis, cap=2**20))


def test_batches_match_stream(F2):
    code = golden_g0_g1_f2(F2)
    basis = u.span_basis(code)
    stream = {w.to_vector().tobytes() for w in u.enumerate_codewords(basis)}
    batched = set()
    for block in codeword_batches(basis, cap=2**20):
        for row in block:
            batched.add(row.astype("int16").tobytes())
    assert stream == batched
