import pytest

from linesplit.algebra import TRIVIAL, AbelianGroup, Z, cyclic
from linesplit.tables import (
    MOD_K,
    TABLE_NAMES,
    OutOfTabulatedRange,
    em_cohomology,
    em_homology,
    pi_2m2,
    stiefel_pi,
    table_rows,
    verify_uct,
)


def test_em_z_cohomology_rows():
    e = em_cohomology(Z, 5, 8)
    assert e.value == cyclic(2) and e.generator_labels == ("delta_2 Sq^2 iota_q^2",)
    assert em_cohomology(Z, 3, 6).value == cyclic(2)
    assert em_cohomology(Z, 4, 5).value == TRIVIAL
    assert em_cohomology(Z, 2, 3).value == TRIVIAL
    five = em_cohomology(Z, 5, 10)
    assert five.value == cyclic(6) and len(five.generator_labels) == 2
    assert em_cohomology(Z, 1, 1).generator_labels == ("iota_q",)


def test_em_z_side_conditions():
    with pytest.raises(OutOfTabulatedRange):
        em_cohomology(Z, 2, 5)  # shift 3 needs q >= 3
    with pytest.raises(OutOfTabulatedRange):
        em_cohomology(Z, 1, 2)  # shift 1 needs q > 1
    with pytest.raises(OutOfTabulatedRange):
        em_cohomology(Z, 10, 17)  # shift 7 not tabulated


def test_em_zk_rows():
    for k in (2, 3, 4, 8):
        e = em_cohomology(cyclic(k), 4, 5)
        assert e.value == cyclic(k)
        assert e.generator_labels == (f"delta_{k} kappa_q",)
        assert em_cohomology(cyclic(k), 4, 4).value == TRIVIAL
        assert em_homology(cyclic(k), 4, 6).value == (TRIVIAL if k == 3 else cyclic(2))


def test_em_general_rows():
    G = AbelianGroup(1, (2, 6))
    assert em_homology(G, 7, 7).value == G
    assert em_homology(G, 7, 9).value == AbelianGroup(0, (2, 2, 2))
    assert em_homology(G, 7, 10).value == AbelianGroup(0, (2, 2))
    assert em_cohomology(G, 7, 7).value == Z
    assert em_cohomology(G, 7, 8).value == AbelianGroup(0, (2, 6))
    # G/2G + G/3G with G/3G = Z/3 + Z/3
    assert em_homology(G, 7, 11).value == AbelianGroup.from_cyclic_orders([2, 2, 2, 3, 3])


def test_em_mod_k():
    assert em_cohomology(Z, 9, 9, 4).value == cyclic(4)
    assert em_cohomology(Z, 9, 12, 8).generator_labels == ("delta_2^3 Sq^2 iota_q^2",)
    assert em_cohomology(Z, 9, 13, 3).value == cyclic(3)
    assert em_cohomology(Z, 9, 11, 3).value == TRIVIAL
    with pytest.raises(OutOfTabulatedRange):
        em_cohomology(Z, 9, 11, 5)
    with pytest.raises(OutOfTabulatedRange):
        em_cohomology(cyclic(2), 9, 11, 2)


def test_labels_follow_values():
    for q in range(1, 10):
        for shift in range(7):
            for k in (0,) + MOD_K:
                try:
                    e = em_cohomology(Z, q, q + shift, k)
                except OutOfTabulatedRange:
                    continue
                assert bool(e.generator_labels) == (not e.value.is_trivial())


def test_verify_uct_clean():
    report = verify_uct()
    assert report.ok
    assert len(report.checks) > 500
    tables = {c.table for c in report.checks}
    assert tables == {"em-general", "em-z", "em-z-mod", "em-zk"}


def test_uct_specific_rows():
    report = verify_uct()
    hits = [c for c in report.checks if c.table == "em-z" and c.shift == 3 and c.q == 3]
    assert hits and all(c.computed == cyclic(2) for c in hits)
    hits = [c for c in report.checks if c.table == "em-zk" and c.group == "Z/3" and c.shift == 1]
    assert hits and all(c.computed == cyclic(3) for c in hits)
    hits = [c for c in report.checks if c.table == "em-z" and c.shift == 1]
    assert hits and all(c.computed == TRIVIAL for c in hits)


def test_stiefel_two():
    for m in range(3, 12):
        assert stiefel_pi(m, 2, 2 * (m - 2) + 1).value == Z
        assert stiefel_pi(m, 2, 2 * (m - 2) + 2).value == (TRIVIAL if m % 2 else cyclic(2))
        assert stiefel_pi(m, 2, 2 * (m - 2) + 3).value == (Z if m % 2 else AbelianGroup(1, (2,)))


def test_stiefel_three():
    for m in range(5, 20):
        odd = m % 2 == 1
        assert stiefel_pi(m, 3, 2 * (m - 3) + 2).value == (cyclic(2) if odd else TRIVIAL)
        assert stiefel_pi(m, 3, 2 * (m - 3) + 3).value == (AbelianGroup(1, (2,)) if odd else Z)
        assert stiefel_pi(m, 3, 2 * m - 2).value == pi_2m2(m).group
        assert stiefel_pi(m, 3, 2 * (m - 3) + 5).value == Z
    assert stiefel_pi(3, 3, 2).value == cyclic(2)


def test_stiefel_boundaries():
    with pytest.raises(OutOfTabulatedRange):
        stiefel_pi(4, 3, 4)  # even m needs m > 4
    with pytest.raises(OutOfTabulatedRange):
        stiefel_pi(3, 3, 4)  # pi_(2m-2) needs m > 4
    with pytest.raises(OutOfTabulatedRange):
        stiefel_pi(8, 3, 2 * 5 + 6)
    with pytest.raises(OutOfTabulatedRange):
        stiefel_pi(2, 2, 2)


def test_connectivity():
    for m in range(1, 12):
        for r in range(1, min(m, 3) + 1):
            for index in range(0, 2 * (m - r) + 1):
                assert stiefel_pi(m, r, index).value.is_trivial()
            assert stiefel_pi(m, r, 2 * (m - r) + 1).value == Z


def test_pi_2m2_examples():
    assert (pi_2m2(6).group, pi_2m2(6).order, pi_2m2(6).n) == (cyclic(3), 3, 4)
    assert (pi_2m2(8).group, pi_2m2(8).order, pi_2m2(8).n) == (cyclic(4), 4, 3)
    assert (pi_2m2(10).group, pi_2m2(10).order, pi_2m2(10).n) == (TRIVIAL, 1, 12)
    assert pi_2m2(11).group == cyclic(8) and pi_2m2(11).n is None
    assert pi_2m2(15).group == cyclic(12)
    assert pi_2m2(27).group == cyclic(24)
    with pytest.raises(OutOfTabulatedRange):
        pi_2m2(4)


def test_pi_divides_twelve_for_even_m():
    for m in range(6, 101, 2):
        entry = pi_2m2(m)
        assert 12 % entry.order == 0
        assert entry.n in (1, 2, 3, 4, 6, 12)


def test_table_dumps():
    for name in TABLE_NAMES:
        header, rows = table_rows(name)
        assert rows and all(len(r) == len(header) for r in rows)
    header, rows = table_rows("pi", 8)
    assert rows[0][3] == "Z/4"
    with pytest.raises(KeyError):
        table_rows("nope")
