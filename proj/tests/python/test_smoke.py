import os
from fractions import Fraction

import classdist


def data(rel):
    return os.path.join(os.environ["CLASSDIST_DATA_DIR"], rel)


def read(rel):
    with open(data(rel)) as f:
        return f.read()


def test_arith():
    assert classdist.totient(12) == 4
    assert classdist.mobius(6) == 1
    assert classdist.mobius(12) == 0
    assert classdist.tau(60) == 12
    assert classdist.divisor_set(12) == [1, 2, 3, 4, 6, 12]
    profile = classdist.generating_coset_profile(6, 12)
    assert profile["u"] == 2 and profile["v"] == 3
    assert profile["order_counts"] == {4: 2, 12: 4}


def test_groups_and_class_table():
    g, h = classdist.parse_group_spec(read("corpus/s4_a4.grp"))
    assert g.order() == 24 and h.order() == 12
    cs = classdist.build_coset_structure(g, h)
    assert cs.n == 2
    assert cs.coset_of("(1 2)") == 1
    table = classdist.class_table(cs)
    assert table["counts"][(1, 2)] == 2
    assert table["counts"][(2, 2)] == 2
    assert table["coset_totals"] == {1: 3, 2: 2}
    assert table["own_counts"] == {1: 4, 2: 5}


def test_hypothesis_errors():
    g, h = classdist.parse_group_spec(read("fixtures/nonnormal_s4.grp"))
    try:
        classdist.build_coset_structure(g, h)
    except classdist.HypothesisError as e:
        assert "normal" in str(e)
    else:
        raise AssertionError("expected HypothesisError")


def test_matrices():
    assert classdist.lhs_determinant(2) == Fraction(2)
    m = classdist.transfer_matrix(2)
    assert m[1][0] == Fraction(-1, 2)
    assert m[0][0] == Fraction(1)
    dims = classdist.eigenspace_dimensions(8)
    assert dims == {Fraction(1): 4, Fraction(-1, 2): 3, Fraction(0): 3}
    w = classdist.kernel_witness(2, 1, 0)
    assert w == [Fraction(1), Fraction(3), Fraction(-2)]


def test_verification_reports():
    reports = classdist.verify_group(read("corpus/f20_c5.grp"), "f20")
    assert len(reports) == 5
    assert all(r["passed"] for r in reports)
    assert classdist.verify_spectrum(12)["passed"]
    assert classdist.verify_prime_power_kernel(3, 2)["passed"]
    assert classdist.verify_tensor_factorization(4, 3)["passed"]


def test_run_corpus():
    specs = [("s4_a4", read("corpus/s4_a4.grp")), ("broken", "degree: 4\ngenerators:\n(1 2\n")]
    reports = classdist.run_corpus(specs, 2)
    parse = [r for r in reports if r["check_name"] == "parse"]
    assert len(parse) == 1 and not parse[0]["passed"]
    others = [r for r in reports if r["check_name"] != "parse"]
    assert all(r["passed"] for r in others)
