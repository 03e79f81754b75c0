import pytest

from ringsynth.identities import IDENTITIES, Identity, apply_boxes, box, run_identities
from ringsynth.linalg import MAT_H, MAT_S, MAT_X, MAT_Z, dagger
from ringsynth.oracles import brute_force_prefix, run_oracles, zisqrt2
from ringsynth.rings import ONE


@pytest.mark.parametrize("ident", IDENTITIES, ids=lambda i: i.name)
def test_identity(ident):
    for n in (ident.n_min, ident.n_min + 1):
        assert ident.check(n), (ident.name, n)


def test_checker_detects_wrong_identities():
    wrong = Identity("CS as printed", 2, lambda n: ([box(MAT_S, [1], [2])], [box(dagger(MAT_S), [1], [2])]))
    assert not wrong.check(2)
    swapped = Identity("XZ = ZX", 1, lambda n: ([box(MAT_X, [], [1]), box(MAT_Z, [], [1])],
                                                [box(MAT_Z, [], [1]), box(MAT_X, [], [1])]))
    assert not swapped.check(1)


def test_box_order():
    # first box applied first: X then H on |0> gives H|1>
    rows = apply_boxes([box(MAT_X, [], [1]), box(MAT_H, [], [1])], 1)
    assert [rows[r][0] for r in range(2)] == [MAT_H[0, 1], MAT_H[1, 1]]


def test_run_identities_all_pass():
    res = run_identities()
    assert len(res) == 2 * len(IDENTITIES)
    assert all(ok for _, _, ok in res)


def test_oracles_all_pass():
    res = run_oracles()
    bad = [(name, detail) for name, ok, detail in res if not ok]
    assert not bad


def test_brute_force_prefix():
    assert brute_force_prefix(ONE, ONE)[0] == 2
    assert brute_force_prefix(zisqrt2(1, 1), ONE)[0] == 1
    # an even entry next to an odd one is not reducible by any prefix
    assert brute_force_prefix(ONE, zisqrt2(0, 1)) is None
