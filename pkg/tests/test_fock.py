import itertools
import math
import random
from fractions import Fraction

import pytest

from monstrous import fock
from monstrous import lattices
from monstrous.codes import golay_code


def test_apply_mode_create_annihilate():
    v0 = fock.FockState.vacuum()
    s = fock.apply_mode(1, -1, v0)
    assert s == fock.FockState.monomial(((-1, 1),))
    assert fock.apply_mode(1, 1, s) == v0
    assert fock.apply_mode(2, 1, s).is_zero()
    assert fock.apply_mode(1, 2, s).is_zero()
    # double occupancy contributes multiplicity
    ss = fock.apply_mode(1, -1, s)
    assert fock.apply_mode(1, 1, ss) == 2 * s


def test_mode_zero_kills():
    s = fock.FockState.monomial(((-2, 1),))
    assert fock.apply_mode(1, 0, s).is_zero()


def test_graded_dimension_matches_enumeration():
    for d in (1, 2, 3):
        for n in range(6):
            count = sum(1 for st in fock.basis_states(d, n)
                        if st.degree == n and not st.is_zero())
            # degree-0 enumeration also yields the vacuum
            expected = fock.graded_dimension(d, n)
            if n == 0:
                assert count == 1 == expected
            else:
                assert count == expected


def test_translation_derivation():
    v0 = fock.FockState.vacuum()
    assert fock.translation(v0).is_zero()
    s = fock.FockState.monomial(((-1, 1),))
    assert fock.translation(s) == fock.FockState.monomial(((-2, 1),))


def test_generator_field_weight_and_window():
    a = fock.GeneratorField(1)
    assert a.weight == 1
    with pytest.raises(fock.WindowError):
        a.mode(100, fock.FockState.vacuum())


def test_unit_laws():
    ident = fock.IdentityField()
    a = fock.GeneratorField(1)
    left = fock.residue_product(ident, a, -1)
    right = fock.residue_product(a, ident, -1)
    for s in fock.basis_states(2, 3):
        for n in range(-2, 3):
            assert left.mode(n, s) == a.mode(n, s)
            assert right.mode(n, s) == a.mode(n, s)


def test_locality_orders():
    a = fock.GeneratorField(1)
    b = fock.GeneratorField(2)
    assert fock.locality_order(a, a, 4, 3, 2) == 2
    assert fock.locality_order(a, b, 4, 3, 2) == 0


def test_field_of_state_reconstruction():
    # the field of a(-1)|0> is the generator field itself
    s = fock.FockState.monomial(((-1, 1),))
    f = fock.field_of_state(s)
    a = fock.GeneratorField(1)
    for st in fock.basis_states(2, 3):
        for n in range(-3, 4):
            assert f.mode(n, st) == a.mode(n, st)


def test_skew_symmetry():
    u = fock.FockState.monomial(((-1, 1), (-2, 2)))
    v = fock.FockState.monomial(((-1, 2),))
    for n in range(-3, 3):
        lhs = fock.state_mode(v, n, u)
        rhs = fock.ZERO
        for k in range(10):
            t = fock.state_mode(u, n + k, v)
            for _ in range(k):
                t = fock.translation(t)
            sgn = -1 if (n + k + 1) % 2 else 1
            rhs = rhs + Fraction(sgn, math.factorial(k)) * t
        assert lhs == rhs


def test_borcherds_identity_sweep():
    a = fock.GeneratorField(1)
    b = fock.GeneratorField(2)
    states = list(fock.basis_states(2, 3))
    for p, q, r in itertools.product((-1, 0, 1), repeat=3):
        for s in states:
            assert fock.check_borcherds(a, b, a, p, q, r, s)


def test_virasoro_bracket_and_central_term():
    d = 3
    for m, n in [(2, -2), (1, -1), (0, 2), (-1, 1)]:
        for s in fock.basis_states(d, 3):
            assert fock.check_virasoro(m, n, s, d)
    vir = fock.virasoro_field(24)
    v0 = fock.FockState.vacuum()
    comm = (fock.virasoro_mode(vir, 2, fock.virasoro_mode(vir, -2, v0))
            - fock.virasoro_mode(vir, -2, fock.virasoro_mode(vir, 2, v0)))
    assert comm == Fraction(24, 2) * v0


def test_l0_grades_states():
    vir = fock.virasoro_field(2)
    s = fock.FockState.monomial(((-1, 1), (-3, 2)))
    assert fock.virasoro_mode(vir, 0, s) == 4 * s


def test_cocycle_even_requirement():
    odd = lattices.ScaledLattice(1, 1, ((1,),))
    with pytest.raises(ValueError):
        fock.lattice_cocycle(odd)


def test_cocycle_commutator_small():
    lat = lattices.ScaledLattice(2, 2, ((2, 0), (0, 2)))
    coc = fock.lattice_cocycle(lat)
    assert fock.verify_commutator(coc, 100, seed=5)
    # bimultiplicative in each slot
    rng = random.Random(1)
    for _ in range(20):
        a, b, c = (tuple(rng.randint(-3, 3) for _ in range(2))
                   for _ in range(3))
        ab = tuple(x + y for x, y in zip(a, b))
        assert coc.epsilon(ab, c) == coc.epsilon(a, c) * coc.epsilon(b, c)
        bc = tuple(x + y for x, y in zip(b, c))
        assert coc.epsilon(a, bc) == coc.epsilon(a, b) * coc.epsilon(a, c)


def test_cocycle_rank24():
    coc = fock.lattice_cocycle(lattices.leech_lattice(golay_code()))
    assert fock.verify_commutator(coc, 100, seed=0)
