import pytest

from stackfill.kjdt import JdtError, inverse_prime_transform, jdt, prime_transform, rev_jdt
from stackfill.tableaux import Tableau, validate
from stackfill.verify import increasing_tableaux, load_fixture

FX = load_fixture("tableaux.json")


def test_forward_slide_example():
    j = FX["jdt"]
    out = jdt(Tableau.from_rows(j["rows"], j["inner"]), map(tuple, j["corners"]))
    assert out.rows == j["result"] and validate(out) is None


def test_reverse_slide_example():
    r = FX["rev_jdt"]
    out = rev_jdt(Tableau.from_rows(r["rows"], r["inner"]), map(tuple, r["corners"]))
    assert out.rows == r["result"] and validate(out) is None


def test_prime_example():
    p, q = Tableau.from_rows(FX["prime"]["p"]), Tableau.from_rows(FX["prime"]["p_prime"])
    assert prime_transform(p) == q and inverse_prime_transform(q) == p


def test_competing_slides_resolve():
    # two holes reach the same entry in one stage
    p = Tableau.from_rows([[1, 2], [2, 3]])
    q = prime_transform(p)
    assert q.rows == [[1, 2], [2, 3]] and inverse_prime_transform(q) == p


def test_prime_roundtrip_exhaustive():
    seen = {}
    for p in increasing_tableaux(3, 3, 5):
        if not p.entries or p.entries.get((1, 1)) != 1:
            continue
        q = prime_transform(p)
        assert q.shape == p.shape and validate(q) is None
        assert inverse_prime_transform(q) == p
        assert q not in seen
        seen[q] = p


def test_errors():
    with pytest.raises(JdtError):
        prime_transform(Tableau.from_rows([[2, 3]]))
    with pytest.raises(JdtError):
        jdt(Tableau.from_rows([[None, 1], [2]], (1,)), [(2, 1)])
    with pytest.raises(JdtError):
        rev_jdt(Tableau.from_rows([[1, 2], [2]]), [(1, 1)])
