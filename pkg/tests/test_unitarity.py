"""Unitarity verdicts: the recorded signature tables, certificate and
witness shape invariants, and random-parameter robustness."""

import random

import pytest

from diracdual.weights import (
    HalfIntVec,
    RootDatum,
    dominant_rep,
    is_dominant,
    is_regular,
    rho,
)
from diracdual.characters import KType
from diracdual.unitarity import (
    decompose_strings,
    full_unitarity,
    spherical_unitarity,
)
from diracdual.unipotent import validate, infinitesimal_character


def v(s):
    return HalfIntVec.parse(s)


def _witness_set(verdict):
    return {str(kt.hw) for kt in verdict.witness}


# -- the five recorded tables ---------------------------------------------------


def test_so7_spherical_table():
    verdict = spherical_unitarity(v("1/2,2,1"), RootDatum("B", 3))
    assert verdict.status == "NonUnitary"
    assert _witness_set(verdict) == {"1,1,0", "1,1,1"}


def test_so9_spherical_table():
    verdict = spherical_unitarity(v("5/2,2,3/2,1/2"), RootDatum("B", 4))
    assert verdict.status == "NonUnitary"
    assert _witness_set(verdict) == {"1,1,0,0", "2,0,0,0"}


def test_sp8_nonspherical_table():
    from diracdual.weights import ZhParam

    param = ZhParam(v("1/2,-2,-1,3/2"), v("-1/2,-2,-1,3/2"), RootDatum("C", 4))
    verdict = full_unitarity(param)
    assert verdict.status == "NonUnitary"
    assert _witness_set(verdict) == {"1,0,0,0", "1,1,1,0"}


def test_so6_spherical_table():
    verdict = spherical_unitarity(v("3/2,1/2,0"), RootDatum("D", 3))
    assert verdict.status == "NonUnitary"
    assert _witness_set(verdict) == {"1,1,0"}


def test_so10_nonspherical_table():
    from diracdual.weights import ZhParam

    param = ZhParam(
        v("1/2,-2,-1,0,5/2"), v("-1/2,-2,-1,0,5/2"), RootDatum("D", 5)
    )
    verdict = full_unitarity(param)
    assert verdict.status == "NonUnitary"
    assert _witness_set(verdict) == {"1,1,1,0,0", "2,1,0,0,0"}


# -- easy unitary points ----------------------------------------------------------


def test_trivial_representation_is_unitary():
    for fam, rank in [("B", 3), ("C", 3), ("D", 4)]:
        datum = RootDatum(fam, rank)
        verdict = spherical_unitarity(rho(datum), datum)
        assert verdict.status == "Unitary", (fam, verdict)


def test_catalog_characters_are_unitary():
    # attached characters of a few small orbits, spherical side
    for rows, fam in [((2, 2, 2, 2), "C"), ((2, 1, 1), "C"), ((3, 2, 2), "B")]:
        orbit = validate(rows, fam)
        lam = infinitesimal_character(orbit)
        if not is_regular(lam, orbit.datum):
            continue
        verdict = spherical_unitarity(lam, orbit.datum)
        assert verdict.status == "Unitary", (rows, fam, verdict)


# -- error contract ----------------------------------------------------------------


def test_spherical_requires_regular():
    with pytest.raises(ValueError, match="regular"):
        spherical_unitarity(v("1/2,1/2,1"), RootDatum("B", 3))


def test_spherical_requires_matching_rank():
    with pytest.raises(ValueError, match="coordinates"):
        spherical_unitarity(v("1,2"), RootDatum("B", 3))


def test_decompose_strings_rejects_integral():
    with pytest.raises(ValueError, match="half-integral"):
        decompose_strings(v("2,1"), RootDatum("B", 2))


def test_decompose_strings_rejects_type_a():
    with pytest.raises(ValueError, match="B/C/D"):
        decompose_strings(v("1/2,1"), RootDatum("A", 2))


def test_full_rejects_non_hermitian():
    from diracdual.weights import ZhParam

    param = ZhParam(v("2,1"), v("1,0"), RootDatum("C", 2))
    with pytest.raises(ValueError, match="Hermitian"):
        full_unitarity(param)


def test_full_rejects_genuine():
    from diracdual.weights import ZhParam

    param = ZhParam(v("3/2,1/2"), v("1,0"), RootDatum("B", 2))
    with pytest.raises(ValueError, match="genuine"):
        full_unitarity(param)


# -- shape properties over random parameters ---------------------------------------


def _random_regular_halfint(datum, rng):
    """Random dominant regular strictly half-integral lambda."""
    n = datum.rank
    while True:
        doubled = sorted(
            rng.sample(range(1, 2 * n + 9, 2), n), reverse=True
        )
        if datum.family == "D" and rng.random() < 0.5:
            doubled[-1] = -doubled[-1]
        lam = HalfIntVec(tuple(doubled))
        if is_regular(lam, datum) and is_dominant(lam, datum):
            return lam


@pytest.mark.parametrize("family", "BCD")
def test_spherical_verdict_shape(family):
    rng = random.Random("shape-" + family)
    for rank in (3, 4, 5, 6):
        datum = RootDatum(family, rank)
        for _ in range(60):
            lam = _random_regular_halfint(datum, rng)
            verdict = spherical_unitarity(lam, datum)
            d = verdict.as_dict()
            assert d["status"] in ("Unitary", "NonUnitary")
            if verdict.status == "Unitary":
                assert verdict.certificate, (family, str(lam))
                assert "witness" not in d
            else:
                assert verdict.witness, (family, str(lam))
                for kt in verdict.witness:
                    # witnesses are genuine K-types of the right group
                    assert isinstance(kt, KType)
                    assert kt.datum == datum
                    assert is_dominant(kt.hw, datum)
                    assert kt.hw.is_integral
                # a verdict must name its deciding case
                assert d["case"]


def test_nonunitary_verdicts_have_distinct_witnesses():
    rng = random.Random("distinct")
    datum = RootDatum("B", 4)
    for _ in range(80):
        lam = _random_regular_halfint(datum, rng)
        verdict = spherical_unitarity(lam, datum)
        if verdict.status == "NonUnitary":
            hws = [kt.hw.doubled for kt in verdict.witness]
            assert len(hws) == len(set(hws))
            assert 1 <= len(hws) <= 2


def test_verdict_dict_round_trip():
    verdict = spherical_unitarity(v("1/2,2,1"), RootDatum("B", 3))
    d = verdict.as_dict()
    assert set(d) >= {"status", "case", "witness"}
    assert d["witness"] == [str(kt.hw) for kt in verdict.witness]


# -- deformation endpoints ----------------------------------------------------------


def test_long_string_endpoint_unitary():
    # a single unbroken string through 1/2 is the spherical unipotent point
    assert (
        spherical_unitarity(v("5/2,3/2,1/2"), RootDatum("B", 3)).status
        == "Unitary"
    )
    assert (
        spherical_unitarity(v("7/2,5/2,3/2,1/2"), RootDatum("C", 4)).status
        == "Unitary"
    )


def test_separated_string_nonunitary():
    # pushing the string past the unitary window must flip the verdict
    verdict = spherical_unitarity(v("9/2,7/2,1/2"), RootDatum("B", 3))
    assert verdict.status == "NonUnitary"


def test_level_block_violation_fires_gl_check():
    from diracdual.weights import ZhParam

    # level-2 coordinates {7/2, -3/2} are self-dual but split into two
    # strings, so they cannot stack into a unitary GL character; the
    # witness pairs the lowest K-type (2,2,0,0) with its Casimir
    # companion (3,1,0,0)
    param = ZhParam(v("7/2,-3/2,1,0"), v("3/2,-7/2,1,0"), RootDatum("D", 4))
    verdict = full_unitarity(param)
    assert verdict.status == "NonUnitary"
    assert verdict.case == "gl-string-violation"
    assert "level 2" in verdict.notes
    assert _witness_set(verdict) == {"2,2,0,0", "3,1,0,0"}

    # a three-coordinate bad level shows the full (r+1, r, r-1) companion
    param = ZhParam(v("7/2,1,-3/2,0"), v("3/2,-1,-7/2,0"), RootDatum("D", 4))
    verdict = full_unitarity(param)
    assert verdict.status == "NonUnitary"
    assert _witness_set(verdict) == {"2,2,2,0", "3,2,1,0"}


# -- the catalog sweep: independent shape check over random parameters --------------
#
# The unitary spherical parameters are exactly the anchored-string
# catalogs: B needs the half-integer string (K0-1/2,...,1/2) plus an
# integer string (N0,...,1) with K0 >= 1 and N0 <= K0; C needs a single
# anchored string of either parity; D needs the integer string
# (N0-1,...,1,0) present plus the half-integer one with N0 >= K0.  The
# predicate below rebuilds that catalog from scratch so the sweep net
# never shares code with the classifier.


def _catalog_shape(coords, family):
    from fractions import Fraction

    ints = sorted(c for c in coords if c.denominator == 1)
    halfs = sorted(c for c in coords if c.denominator == 2)
    k0 = [Fraction(2 * i + 1, 2) for i in range(len(halfs))]
    if family == "B":
        s0 = list(range(1, len(ints) + 1))
        return (
            len(halfs) >= 1
            and halfs == k0
            and ints == s0
            and len(ints) <= len(halfs)
        )
    if family == "C":
        if ints and halfs:
            return False
        if halfs:
            return halfs == k0
        return ints == list(range(1, len(ints) + 1))
    s0 = list(range(len(ints)))
    return (
        len(ints) >= 1
        and ints == s0
        and halfs == k0
        and len(ints) >= len(halfs)
    )


def _sweep_draw(family, n, rng):
    """Random dominant regular lambda with 2*lambda integral: a mix of
    exact catalog shapes, near misses, and generic parameters."""
    from fractions import Fraction

    mode = rng.random()
    if mode < 0.3:
        # exact catalog member
        if family == "B":
            k0 = rng.randint((n + 1) // 2, n)
        elif family == "C":
            k0 = rng.choice((0, n))
        else:
            k0 = rng.randint(0, n // 2)
        halfs = [Fraction(2 * i + 1, 2) for i in range(k0)]
        if family == "D":
            ints = list(range(n - k0))
        else:
            ints = list(range(1, n - k0 + 1))
        coords = halfs + [Fraction(c) for c in ints]
        if mode < 0.12 and coords:
            # near miss: push the top entry one step out
            coords[-1 if rng.random() < 0.5 else 0] += 1
    else:
        lo = 0 if family == "D" else 1
        pool = [Fraction(c, 2) for c in range(lo, 4 * n + 2)]
        coords = rng.sample(pool, n)
    coords = sorted(coords, reverse=True)
    lam = HalfIntVec.from_halves(coords)
    datum = RootDatum(family, n)
    if not (is_dominant(lam, datum) and is_regular(lam, datum)):
        return None
    return lam


@pytest.mark.parametrize("family", "BCD")
def test_catalog_sweep_matches_independent_shape_check(family):
    from diracdual.spectrum import UnipotentFamily, two_lambda

    rng = random.Random("sweep-" + family)
    drawn = unitary_hits = 0
    per_rank = 250
    for rank in (3, 4, 5, 6):
        datum = RootDatum(family, rank)
        r = rho(datum)
        done = 0
        while done < per_rank:
            lam = _sweep_draw(family, rank, rng)
            if lam is None:
                continue
            done += 1
            drawn += 1
            verdict = spherical_unitarity(lam, datum)
            expected = _catalog_shape(list(lam.halves()), family)
            assert (verdict.status == "Unitary") == expected, (
                family, str(lam), verdict.status,
            )
            if verdict.status != "Unitary":
                continue
            unitary_hits += 1
            cert = verdict.certificate
            # certificate re-synthesis: the parameter is pinned exactly
            if cert["kind"] == "trivial":
                assert sorted(lam.halves()) == sorted(r.halves()), str(lam)
            else:
                if "n" in cert:
                    fam_pt = UnipotentFamily(cert["family"], n=cert["n"])
                else:
                    fam_pt = UnipotentFamily(
                        cert["family"], a=cert["a"], b=cert["b"]
                    )
                two = dominant_rep(lam + lam, datum)
                assert two == two_lambda(fam_pt), (str(lam), cert)
            # the certificate orbit carries the same infinitesimal character
            orbit = validate(tuple(cert["orbit"]), family)
            assert infinitesimal_character(orbit) == dominant_rep(lam, datum)
    assert unitary_hits >= 40, "sweep for %s never reached the catalog" % family


@pytest.mark.parametrize("family", "BCD")
def test_string_decomposition_partitions_coordinates(family):
    from fractions import Fraction

    rng = random.Random("partition-" + family)
    for rank in (3, 4, 5, 6):
        datum = RootDatum(family, rank)
        done = 0
        while done < 40:
            lam = _sweep_draw(family, rank, rng)
            if lam is None or lam.is_integral:
                continue
            done += 1
            sd = decompose_strings(lam, datum)
            rebuilt = []
            rebuilt += [Fraction(2 * i + 1, 2) for i in range(sd.kappa0_len)]
            if family == "D":
                rebuilt += list(range(sd.sigma0_len))
            else:
                rebuilt += list(range(1, sd.sigma0_len + 1))
            for (k, K) in sd.kappa:
                rebuilt += [Fraction(2 * j - 1, 2) for j in range(k, K + 1)]
            for (s, S) in sd.sigma:
                rebuilt += list(range(s, S + 1))
            assert sorted(rebuilt) == sorted(abs(c) for c in lam.halves()), (
                family, str(lam), str(sd),
            )
