"""Acceptance gate: twelve exact-equality criteria with runtime bounds.

Each test prints a PASS/FAIL line (run pytest with -s or look at captured
output) and asserts both the exact values and the wall-clock bound.
"""

import itertools
import random
import time
from fractions import Fraction

from monstrous import checks, codes, fock, groups, lattices, moonshine, qseries


def _gate(name, ok, elapsed, bound):
    verdict = "PASS" if (ok and elapsed < bound) else "FAIL"
    print("ACCEPTANCE %-24s %s (%.2fs, bound %ds)"
          % (name, verdict, elapsed, bound))
    assert ok, name
    assert elapsed < bound, "%s exceeded %ds (%.2fs)" % (name, bound, elapsed)


def test_01_golay_certification():
    t0 = time.perf_counter()
    code = codes.golay_code()
    ok = (code.dimension == 12
          and codes.min_weight(code) == 8
          and codes.is_doubly_even(code)
          and codes.is_self_dual(code)
          and codes.weight_enumerator(code)
          == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1})
    _gate("golay", ok, time.perf_counter() - t0, 1)


def test_02_niemeier_counts():
    t0 = time.perf_counter()
    lat = lattices.niemeier_a1_24(codes.golay_code())
    ok = (lattices.is_even(lat)
          and lattices.is_unimodular(lat)
          and lattices.count_vectors_of_norm(lat, 2) == 48
          and lattices.count_vectors_of_norm(lat, 4) == 195408)
    _gate("niemeier", ok, time.perf_counter() - t0, 30)


def test_03_leech_counts_and_neighbors():
    t0 = time.perf_counter()
    code = codes.golay_code()
    lat = lattices.leech_lattice(code)
    ok = (lattices.is_even(lat)
          and lattices.is_unimodular(lat)
          and lattices.count_vectors_of_norm(lat, 2) == 0
          and lattices.count_vectors_of_norm(lat, 4) == 196560)
    exts = lattices.even_unimodular_extensions(lattices.lambda_zero(code))
    ok = ok and len(exts) == 2
    _gate("leech", ok, time.perf_counter() - t0, 60)


def test_04_theta_modular_cross_check():
    code = codes.golay_code()
    pairs = [
        (lattices.theta_series(lattices.niemeier_a1_24(code), 3), 48),
        (lattices.theta_series(lattices.leech_lattice(code), 3), 0),
    ]
    t0 = time.perf_counter()
    ok = True
    for theta, c1 in pairs:
        form = qseries.weight12_match(1, c1, 4)
        for n in range(4):
            if theta.coeff(n) != form.coeff(n):
                ok = False
    _gate("theta-modular", ok, time.perf_counter() - t0, 5)


def test_05_character_suite():
    t0 = time.perf_counter()
    tr = moonshine.trace_theta(10)
    tw = moonshine.twisted_character(10)
    ch = qseries.char_lattice_voa(moonshine.theta_leech(10), 24)
    ok = (tr.coeff(-1) == 1 and tr.coeff(0) == -24
          and tr.coeff(1) == 276 and tr.coeff(2) == -2048
          and tw.coeff(Fraction(1, 2)) == 4096 and tw.coeff(1) == 98304
          and ch.coeff(0) == 24)
    _gate("characters", ok, time.perf_counter() - t0, 1)


def test_06_j_function_and_triality():
    t0 = time.perf_counter()
    b = moonshine.triality_components(8)
    j = b.j
    ok = (j.coeff(-1) == 1 and j.coeff(0) == 0 and j.coeff(1) == 196884)
    total = b.v00 + b.v01 + b.v10 + b.v11
    ok = ok and not (total - j).coeffs
    for s in (b.v00, b.v01):
        for c in s.coeffs.values():
            if c.denominator != 1 or c < 0:
                ok = False
    _gate("j-function", ok, time.perf_counter() - t0, 1)


def test_07_fock_kernel():
    t0 = time.perf_counter()
    ok = True
    # mode bracket on all basis states to degree 6 at rank 2
    for s in fock.basis_states(2, 6):
        for m in range(-3, 4):
            for n in range(-3, 4):
                if m == 0 or n == 0:
                    continue
                for i in (1, 2):
                    for j in (1, 2):
                        lhs = (fock.apply_mode(i, m, fock.apply_mode(j, n, s))
                               - fock.apply_mode(
                                   j, n, fock.apply_mode(i, m, s)))
                        rhs = Fraction(m) * s if (i == j and m == -n) \
                            else fock.ZERO
                        if lhs != rhs:
                            ok = False
    # locality order of a generator with itself
    a = fock.GeneratorField(1)
    b = fock.GeneratorField(2)
    ok = ok and fock.locality_order(a, a, 4, 3, 2) == 2
    # unit laws for the (-1)-st product
    ident = fock.IdentityField()
    left = fock.residue_product(ident, a, -1)
    right = fock.residue_product(a, ident, -1)
    for s in fock.basis_states(2, 4):
        for n in range(-2, 3):
            if left.mode(n, s) != a.mode(n, s) \
                    or right.mode(n, s) != a.mode(n, s):
                ok = False
    # 100 seeded Borcherds instances
    rng = random.Random(0)
    gens = [a, b]
    states = list(fock.basis_states(2, 6))
    for _ in range(100):
        fa, fb, fc = (rng.choice(gens) for _ in range(3))
        p, q, r = (rng.randint(-2, 2) for _ in range(3))
        s = rng.choice(states)
        if not fock.check_borcherds(fa, fb, fc, p, q, r, s):
            ok = False
    # Virasoro bracket with central charge d on states to degree 5
    d = 2
    for m, n in [(2, -2), (1, -1), (3, -3), (2, 1), (-1, 2), (0, 0)]:
        for s in fock.basis_states(d, 5):
            if not fock.check_virasoro(m, n, s, d):
                ok = False
    vir = fock.virasoro_field(24)
    v0 = fock.FockState.vacuum()
    comm = (fock.virasoro_mode(vir, 2, fock.virasoro_mode(vir, -2, v0))
            - fock.virasoro_mode(vir, -2, fock.virasoro_mode(vir, 2, v0)))
    ok = ok and comm == Fraction(24, 2) * v0
    _gate("fock-kernel", ok, time.perf_counter() - t0, 60)


def test_08_graded_dimensions():
    t0 = time.perf_counter()
    inv = qseries.eta_quotient([(1, -24)], 10)
    ok = all(fock.graded_dimension(24, n) == inv.coeff(n - 1)
             for n in range(9))
    _gate("graded-dimension", ok, time.perf_counter() - t0, 1)


def test_09_cocycle():
    code = codes.golay_code()
    lats = [lattices.niemeier_a1_24(code), lattices.leech_lattice(code)]
    t0 = time.perf_counter()
    ok = all(fock.verify_commutator(fock.lattice_cocycle(lat), 1000, seed=0)
             for lat in lats)
    _gate("cocycle", ok, time.perf_counter() - t0, 5)


def test_10_octahedral_scalar_suite():
    code = codes.golay_code()
    lat = lattices.niemeier_a1_24(code)
    l0 = lattices.lambda_zero(code)
    t0 = time.perf_counter()
    ok = (len(groups.binary_octahedral_group()) == 48
          and groups.quotient_order_profile() == {1: 1, 2: 9, 3: 8, 4: 6})
    rng = random.Random(0)
    for _ in range(50):
        u = [0] * 24
        for row in lat.generators:
            c = rng.randint(-1, 1)
            u = [x + c * y for x, y in zip(u, row)]
        if not groups.scalar_action("-1", tuple(u), lat).is_one():
            ok = False
    ker = groups.kernel_of_i_action(lat)
    ok = (ok
          and lattices.determinant(ker) == 4 * lattices.determinant(lat)
          and lattices.same_point_set(ker, l0)
          and groups.torus_trivial_subgroup(code) == code)
    _gate("octahedral", ok, time.perf_counter() - t0, 5)


def test_11_replicability():
    j = moonshine.assemble_j(12)
    t0 = time.perf_counter()
    fam = moonshine.ReplicableFamily.identity(j)
    report = moonshine.check_completely_replicable(fam, 6, 12)
    ok = all(r["status"] == "pass" for r in report)
    bad = moonshine.ReplicableFamily(
        order=2, series={1: j, 2: j + qseries.monomial(1, 1, 12)})
    bad_report = moonshine.check_completely_replicable(bad, 2, 12)
    fault = bad_report[1]
    ok = (ok and fault["status"] == "fail"
          and fault["first_discrepancy"] is not None
          and "exponent" in fault["first_discrepancy"])
    _gate("replicability", ok, time.perf_counter() - t0, 5)


def test_12_arithmetic_facts():
    t0 = time.perf_counter()
    facts = groups.arithmetic_facts()
    bound = moonshine.check_order_bound()
    ok = (47 * 59 * 71 == 196883
          and 299 + 98280 + 24 * 2 ** 12 == 196883
          and all(facts.values())
          and bound["bound_primes_supersingular"]
          and bound["valuations"] == bound["valuations_expected"])
    _gate("arithmetic", ok, time.perf_counter() - t0, 1)
