import lmwb


def test_eval_worked_example():
    # y_10 applied to 1001(0): the canonical form of 1010(0).
    assert lmwb.evaluate("y[10]", "1001(0)", 2) == "101(0)"


def test_paper_identity():
    assert lmwb.equal("y[00]", "x0 y[0] x0'", 3) == "true"
    assert lmwb.equal("y[10]", "y[10] y[10]", 2) == "false"


def test_identity_with_witness():
    verdict, witness = lmwb.is_identity("y[10]", 2)
    assert verdict == "false"
    assert witness is not None


def test_standard_form_shape():
    fpart, ypart = lmwb.standard_form("y[0] x0 y[0]'", 2)
    assert ypart == ["y[100]'", "y[101]"]
    assert "->" in fpart


def test_abelianization_tables():
    assert lmwb.abelianization("x0", "a", 3) == [1, 0, 0]
    assert lmwb.abelianization("y[0]", "yG", 2) == [0, 0, 1]
    for n in (2, 3, 4, 5):
        for variant in ("G0", "yG", "Gy", "yGy"):
            assert lmwb.rank_certificate(variant, n)


def test_relations_sampled():
    total, failures, inconclusive = lmwb.verify_relation_family(4, "G0", 10, 2)
    assert total >= 10 and not failures and inconclusive == 0


def test_hnn():
    assert lmwb.hnn_verify("bt", 3, 2)
    ok, element, note = lmwb.hnn_witness("n7", 2)
    assert ok and element


def test_cluster_counts():
    assert lmwb.cluster_cells(2, [1]) == [4, 5, 2]
    assert lmwb.cluster_euler(3, [1, 2]) == 1


def test_special_words():
    assert lmwb.is_special("y[00]+ y[01]-", 2)
    assert not lmwb.is_special("y[00]+ y[01]+", 2)


def test_support_and_dense():
    assert lmwb.support("x0", 2) == [("(0)", "(1)")]
    assert lmwb.dense_support_word("1", 2) == "x[0;1]"
