"""Freeze the brute-force oracle against hand-checked values.

These assertions pin the oracle itself.  If any of them ever fails the
oracle has been tampered with and every downstream comparison is void.
"""

import oracle


def d(*cs):
    """Doubled coordinates from integer halves-count, e.g. d(5,3,1)/2."""
    return tuple(cs)


def test_dims_type_b3():
    assert oracle.dim("B", 3, (2, 0, 0)) == 7  # standard module
    assert oracle.dim("B", 3, (0, 0, 0)) == 1
    assert oracle.dim("B", 3, (2, 2, 0)) == 21
    assert oracle.dim("B", 3, (2, 2, 2)) == 35
    assert oracle.dim("B", 3, (1, 1, 1)) == 8  # spin module


def test_dims_type_c2():
    assert oracle.dim("C", 2, (2, 0)) == 4
    assert oracle.dim("C", 2, (2, 2)) == 5
    assert oracle.dim("C", 2, (4, 0)) == 10


def test_dims_type_d3():
    assert oracle.dim("D", 3, (2, 0, 0)) == 6
    assert oracle.dim("D", 3, (2, 2, 0)) == 15
    assert oracle.dim("D", 3, (4, 0, 0)) == 20
    assert oracle.dim("D", 3, (4, 2, 2)) == 45
    # the two half-spin modules
    assert oracle.dim("D", 3, (1, 1, 1)) == 4
    assert oracle.dim("D", 3, (1, 1, -1)) == 4


def test_dims_type_a():
    assert oracle.dim("A", 3, (2, 0, 0)) == 3  # gl(3) standard
    assert oracle.dim("A", 3, (2, 0, -2)) == 8  # adjoint of sl(3)


def test_weight_multiplicities_c2():
    assert oracle.weight_multiplicity("C", 2, (2, 0), (0, 0)) == 0
    assert oracle.weight_multiplicity("C", 2, (2, 2), (0, 0)) == 1
    assert oracle.weight_multiplicity("C", 2, (2, 0), (2, 0)) == 1
    assert oracle.weight_multiplicity("C", 2, (2, 0), (0, -2)) == 1


def test_tensor_c2_standard_squared():
    got = oracle.tensor_decompose("C", 2, (2, 0), (2, 0))
    assert got == {(4, 0): 1, (2, 2): 1, (0, 0): 1}


def test_tensor_commutes():
    a, b = (2, 2, 0), (2, 0, 0)
    assert oracle.tensor_decompose("B", 3, a, b) == oracle.tensor_decompose(
        "B", 3, b, a
    )


def test_tensor_conserves_dimension():
    a, b = (4, 2, 0), (2, 2, 2)
    dec = oracle.tensor_decompose("B", 3, a, b)
    total = sum(oracle.dim("B", 3, hw) * m for hw, m in dec.items())
    assert total == oracle.dim("B", 3, a) * oracle.dim("B", 3, b)


def test_round_trip_component_b3():
    # lowest constituent of V(2,0,0) (x) V(1,0,0) for so(7), and its
    # strict minimality in shifted norm among all constituents
    dec = oracle.tensor_decompose("B", 3, (4, 0, 0), (2, 0, 0))
    assert dec[(2, 0, 0)] == 1
    rho = oracle.rho_doubled("B", 3)
    norms = {
        hw: oracle.norm_sq_x4(tuple(a + b for a, b in zip(hw, rho)))
        for hw in dec
    }
    target = norms[(2, 0, 0)]
    assert all(v > target for hw, v in norms.items() if hw != (2, 0, 0))


def test_spin_module_weights_b3():
    # all 8 weights (+-1/2, +-1/2, +-1/2), multiplicity one each
    ch = oracle.character("B", 3, (1, 1, 1))
    assert ch == {
        (s1, s2, s3): 1 for s1 in (1, -1) for s2 in (1, -1) for s3 in (1, -1)
    }


def test_genuine_half_integral_dims():
    # so(5) spin module and a bigger genuine one
    assert oracle.dim("B", 2, (1, 1)) == 4
    assert oracle.dim("B", 2, (3, 1)) == 16
