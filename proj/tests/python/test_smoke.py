"""Smoke tests for the python bindings; run with PYTHONPATH pointing at the
built extension directory."""

import zonomtt

K4_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
K3_REDUCED = [[1, 0, -1], [0, 1, 1]]
NK3 = [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]


def test_linalg():
    assert zonomtt.det([[1, 2], [3, 4]]) == "-2"
    assert zonomtt.det([["1/2", 0], [0, "1/3"]]) == "1/6"
    assert zonomtt.rank(NK3) == 2
    assert zonomtt.char_poly([[2, 0], [0, 3]]) == ["6", "-5", "1"]
    lap = zonomtt.laplacian(4, K4_EDGES)
    assert zonomtt.product_nonzero_eigenvalues(lap) == "64"


def test_lattice():
    h = zonomtt.hnf([[2, 1], [0, 1]])
    assert zonomtt.hnf(h) == h
    assert zonomtt.lattices_equal(h, [[2, 1], [0, 1]])
    assert zonomtt.lattices_equal([[1, 0], [0, 1]], [[1, 1], [0, 1]])
    assert not zonomtt.lattices_equal([[1]], [[2]])


def test_matroid():
    assert zonomtt.is_unimodular(NK3)
    assert not zonomtt.is_unimodular([[2]])
    assert zonomtt.is_totally_unimodular(NK3)
    assert len(zonomtt.bases(K3_REDUCED)) == 3
    assert len(zonomtt.cocircuits(NK3)) == 3


def test_graph():
    assert zonomtt.spanning_tree_count(4, K4_EDGES) == "16"
    assert zonomtt.weighted_tree_sum(3, [(1, 2), (1, 3), (2, 3)], ["1", "1", "2"]) == "5"


def test_zonotope():
    assert zonomtt.volume([[-1, 0], [1, -1]]) == "1"
    assert zonomtt.volume(K3_REDUCED) == "3"
    assert zonomtt.contains(K3_REDUCED, ["1/2", "1/2"])
    assert not zonomtt.contains(K3_REDUCED, ["5", "5"])


def test_checkers():
    r = zonomtt.check_matroid_mtt(K3_REDUCED)
    assert r["passed"]
    assert r["quantities"]["bases"] == "3"
    assert zonomtt.check_classical_mtt(4, K4_EDGES)["passed"]
    assert zonomtt.check_cocircuit_lattice(NK3)["passed"]
    assert zonomtt.check_barycenter_lattice(NK3)["passed"]
    assert zonomtt.check_thm4([[2, -1], [-1, 2]])["passed"]
    assert not zonomtt.check_matroid_mtt([[2]])["passed"]


def main():
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"{name}: ok")


if __name__ == "__main__":
    main()
