import itertools

import pytest

import scomult


def brute_force_ideals(ring):
    n = ring.order
    found = []
    for bits in range(1 << n):
        s = {x for x in range(n) if bits >> x & 1}
        if 0 not in s:
            continue
        if all((a - b) % n in s for a in s for b in s) and all(ring.mul(r, a) in s for a in s for r in range(n)):
            found.append(sorted(s))
    return sorted(found)


def test_z6_ideals_match_brute_force():
    z6 = scomult.zn(6)
    assert scomult.ideals(z6) == [[0], [0, 3], [0, 2, 4], [0, 1, 2, 3, 4, 5]]
    assert sorted(scomult.ideals(z6)) == brute_force_ideals(z6)


def test_saturation_and_localization_pins():
    z6 = scomult.zn(6)
    assert scomult.saturation(z6, [1, 3]) == [1, 3, 5]
    assert scomult.localized_order(z6, [1, 3]) == 2


def test_zn_is_comultiplication():
    for n in range(2, 31):
        assert scomult.is_comultiplication(scomult.self_module(scomult.zn(n)))


def test_plane_over_f2():
    f2 = scomult.zn(2)
    v = scomult.direct_sum(scomult.self_module(f2), scomult.self_module(f2))
    assert len(scomult.submodules(v)) == 5
    assert not scomult.is_comultiplication(v)
    assert not scomult.is_multiplication(v)


def test_s_comultiplication_witnesses():
    m = scomult.self_module(scomult.zn(6))
    holds, witnesses = scomult.is_s_comultiplication(m, [1])
    assert holds and witnesses == [1, 1, 1, 1]
    assert scomult.lemma_forms(m, [1, 5]) == (True, True, True)


def test_disjointness_is_a_status():
    m = scomult.self_module(scomult.zn(6))
    assert scomult.is_s_prime(m, [0, 3], [1, 3])["status"] == "disjointness_failure"
    assert scomult.is_s_prime(m, [0, 3], [1, 5])["status"] == "holds"


def test_invalid_mcs_raises():
    with pytest.raises(ValueError):
        scomult.saturation(scomult.zn(6), [0, 1])


def test_parse_instance():
    bag = scomult.parse_instance("ring R zn 4\nmodule M self R\n")
    assert bag["rings"]["R"].order == 4
    assert bag["modules"]["M"].order == 4
    with pytest.raises(scomult.ParseError):
        scomult.parse_instance("ring R zn 4\nmodule M self Q\n")


def test_mcs_of_z6_are_closed():
    z6 = scomult.zn(6)
    sets = scomult.mcs(z6)
    assert len(sets) == 7
    for s in sets:
        assert 1 in s and 0 not in s
        assert all(z6.mul(a, b) in s for a, b in itertools.product(s, s))


def test_small_verify_run():
    reports = scomult.verify(statements=["L-EQ", "T-DU"], max_ring=6, threads=1)
    assert [r["id"] for r in reports] == ["L-EQ", "T-DU"]
    assert reports[0]["verdict"] == "pass"
    assert reports[1]["verdict"] == "vacuous"
    assert len(scomult.statement_ids()) == 26


def test_mutant_is_caught():
    reports = scomult.verify(statements=["L-EQ"], max_ring=6, mutant="lemma-iii-flipped")
    assert reports[0]["verdict"] == "fail"
    assert reports[0]["counterexample"]
