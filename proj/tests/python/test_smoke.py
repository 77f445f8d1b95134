import os
from pathlib import Path

import pytest

import fibrekit

FIXTURES = Path(os.environ.get("FIBREKIT_FIXTURES", Path(__file__).resolve().parents[2] / "fixtures"))


def read(name):
    return (FIXTURES / name).read_text()


def test_ideal_arithmetic():
    R = fibrekit.Ring.power_series(2)
    I = fibrekit.Ideal(R, [[3, 0], [2, 1], [0, 3], [3, 1]])
    assert I.generators == [[0, 3], [2, 1], [3, 0]]
    assert str(I) == "(x^3, x^2*y, y^3)"
    assert I.colength() == 7
    J = fibrekit.Ideal(R, [[3, 0], [0, 3]])
    assert J <= I
    assert [4, 2] in I * I
    assert [4, 2] not in J * I
    assert I ** 3 == J * I ** 2


def test_semigroup_ideal():
    S = fibrekit.Ring.semigroup([4, 5, 6, 7])
    assert S.frobenius == 3
    I = fibrekit.Ideal(S, [4, 5, 6])
    assert I.generators == [4, 5, 6]
    # 0 and 7 survive in R/I: 7 is not 4, 5 or 6 plus an element of S.
    assert I.colength() == 2
    assert 11 in I * I


def test_analyze_reports_coefficients():
    report = fibrekit.analyze(read("three_generated.fk"))
    assert report["schema"] == "fibrekit-report/1"
    assert report["coefficients"]["g"]["values"] == [9, 0, 1]
    assert report["coefficients"]["e"]["values"] == [9, 3, 1]
    assert report["reduction"]["r"] == 2
    assert not any(c["violation"] for c in report["criteria"])

    four = fibrekit.analyze(read("equigenerated.fk"))
    assert four["series"]["numerator"] == [1, 2, 2, -1]


def test_cli_in_process():
    code, out, err = fibrekit.run(["series", str(FIXTURES / "equigenerated.fk")])
    assert code == 0
    assert out == "1 + 2t + 2t^2 - t^3 over (1-t)^2; NEGATIVE COEFFICIENT: F(I) not Cohen-Macaulay\n"
    assert fibrekit.run(["analyze", "/nonexistent.fk"])[0] == 3


def test_errors_carry_kind_and_position():
    with pytest.raises(fibrekit.ParseError) as info:
        fibrekit.analyze("ring: power-series\nvars: x y\nI: x^3, z\n")
    assert info.value.line == 3
    assert info.value.column == 9
    assert info.value.kind == "invalid input"
    with pytest.raises(fibrekit.Error):
        fibrekit.Ring.semigroup([4, 6])
