import pytest

import lpstable as lp


def test_parse_and_print_round_trip():
    p = lp.parse("b :- not a.\na :- not b.")
    assert str(p) == "b :- not a.\na :- not b."
    assert p.clause_count == 2
    assert p.size == 4
    assert p.atoms == ["a", "b"]
    assert lp.Program.parse(str(p)) == p


def test_parse_error_has_type():
    with pytest.raises(lp.ParseError):
        lp.parse("a :- .")
    with pytest.raises(lp.LpstableError):
        lp.parse("a")


@pytest.mark.parametrize("algo", ["a", "r", "h"])
@pytest.mark.parametrize("strategy", ["wfs", "trivial"])
def test_solvers_match_oracle(algo, strategy):
    p = lp.parse("p :- not q.\nq :- not p.\nr :- p.\ns :- not r, q.\nu :- not v.\nv :- not u.")
    models, stats = lp.stable_models(p, algo=algo, strategy=strategy)
    assert models == lp.brute_force_stable(p)
    assert stats["recursive_calls"] >= 1


def test_queries():
    cp = lp.parse("a :- not b.\nb :- not a.")
    assert lp.query(cp, "brave:a")["holds"]
    assert not lp.query(cp, "cautious:a")["holds"]
    loop = lp.parse("a :- not a.")
    assert not lp.query(loop, "exists")["holds"]
    assert lp.query(loop, "cautious:a")["vacuous"]


def test_generators_and_bounds():
    assert [lp.s0(n) for n in range(2, 13)] == [2, 3, 4, 6, 9, 12, 18, 27, 36, 54, 81]
    for n in range(2, 9):
        bound = lp.max_stable("LPn", n)
        program = lp.generate(bound["witness_program"])
        assert len(lp.brute_force_stable(program)) == bound["exact"] == lp.s0(n)
        assert lp.is_extremal_member(program, n)
    assert len(lp.brute_force_answer_sets(lp.generate("D:2x3"))) == 9
    assert lp.max_stable("LPsize", 8)["ceiling"] == pytest.approx(4.0)


def test_wfs_and_simp():
    p = lp.parse("a.\nb :- not a.")
    assert lp.well_founded(p) == (["a"], ["b"])
    q = lp.parse("c :- a, not b.\na.")
    assert str(lp.simp(q, ["a"], ["b"])) == "c."


def test_encode_round_trip():
    family = [["a", "b"], ["a", "c"], ["b", "c"]]
    assert lp.is_antichain(family)
    for policy in ("least", "greatest", 7):
        assert lp.brute_force_stable(lp.encode(family, policy)) == family
    report = lp.encoding_size_report(family)
    assert report["clauses"] == 6 and report["within_bounds"]
    with pytest.raises(lp.LpstableError):
        lp.encode([["a"], ["a", "b"]])


def test_depth_cap():
    with pytest.raises(lp.SearchDepthExceeded):
        lp.stable_models(lp.generate("A:3"), depth_cap=2)


def test_suites_run():
    assert "bounds" in lp.suite_names()
    passed, text = lp.run_suite("shift", cases=50)
    assert passed
    assert "PASS" in text
