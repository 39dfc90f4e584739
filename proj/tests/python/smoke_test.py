"""Smoke test for the quotidx extension module."""

import quotidx

SADDLE = """
[ring]
variables = x, y
[group]
invariant_factors = 2
generator = [[-1, 0], [0, -1]]
[form]
f = x^2 - y^2
[task]
command = signature
"""

SPHERE3 = """
[ring]
variables = x, y, z
[group]
invariant_factors = 2
generator = [[-1, 0, 0], [0, -1, 0], [0, 0, -1]]
[form]
f = x^2 + y^2 + z^2
"""

CUBIC_DIAGONAL = """
[ring]
variables = x
[group]
modulus = 3
character = 1
[form]
f = x^3
"""

NON_ISOLATED = """
[ring]
variables = x, y
[form]
component = x*y
component = x*y
"""


def test_radial_index():
    assert quotidx.radial_index(SADDLE) == -1
    assert quotidx.radial_index(SPHERE3) == 0


def test_run_signature():
    code, report, errors = quotidx.run("signature", SADDLE)
    assert code == 0, errors
    assert "signature = -1" in report
    assert "radial_index = -1" in report


def test_signature_report():
    rep = quotidx.signature_report(SADDLE)
    assert rep["dim"] == 1
    assert rep["invariant_dim"] == 1
    assert rep["index"] == -1
    assert rep["inertia_invariant"] == (0, 0, 1)
    assert len(rep["blocks"]) == 1
    assert rep["blocks"][0]["signature"] == -1


def test_quantum_totals():
    assert quotidx.quantum_totals(SPHERE3) == (1, 1, 1)
    total, orbifold, signature = quotidx.quantum_totals(CUBIC_DIAGONAL)
    assert (total, orbifold) == (2, 2)
    assert signature is None


def test_oracle_sum():
    assert quotidx.oracle_sum(SADDLE, seed=1) == -1


def test_format_round_trip():
    canonical = quotidx.format_document(SADDLE)
    assert quotidx.format_document(canonical) == canonical


def test_errors():
    try:
        quotidx.run("signature", "not a document")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for a malformed document")

    code, _, errors = quotidx.run("signature", NON_ISOLATED)
    assert code == 3
    assert "non-isolated" in errors


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"{test.__name__}: ok")
    print(f"{len(tests)} checks passed")


if __name__ == "__main__":
    main()
