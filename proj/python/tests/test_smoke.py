import pytest

import bentice


def test_families():
    assert bentice.families() == ["A", "B", "Bstar", "C", "Cstar", "D", "BC"]


def test_counts():
    assert bentice.count_states("A", "2,1") == 2
    assert bentice.count_states("B", "2,1") == bentice.half_turn_asm_count(4) == 10


def test_partition_function():
    assert bentice.partition_function_latex("B", "1", "deformation") == "1 - t_{1} x_{1}"
    assert bentice.partition_function("A", "1", "tokuyama") == "x_1"


def test_checks():
    assert bentice.okada_product("B", 2)
    assert bentice.character_theorem("Cstar", "3,1")


def test_cli():
    code, report = bentice.cli("verify", "okada", "--family", "B", "--n", "2")
    assert code == 0
    assert report["verdict"] == "pass"
    code, text = bentice.cli("enumerate", "--family", "A", "--lambda", "2,1", "--emit", "count")
    assert (code, text) == (0, 2)


def test_errors():
    with pytest.raises(ValueError, match="strict"):
        bentice.count_states("B", "2,2")
    with pytest.raises(ValueError):
        bentice.partition_function("B", "2,1", "nonsense")
    code, report = bentice.cli("enumerate", "--family", "B", "--lambda", "2,2")
    assert code == 3
