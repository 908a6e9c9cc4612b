"""Smoke tests for the _qpu extension module."""

import pytest

import _qpu


def test_version_and_constants():
    assert _qpu.__version__ == "1.0.0"
    assert _qpu.CRITERION_PRIMES == [2, 3, 5, 7, 13, 17, 23, 41, 43, 67]


def test_represents_returns_witness():
    w = _qpu.represents("1,1,2", 7)
    assert w is not None
    assert w[0] ** 2 + w[1] ** 2 + 2 * w[2] ** 2 == 7
    assert _qpu.represents("1,1", 3) is None


def test_matrix_forms_are_accepted():
    assert _qpu.represents("[[1,0,0],[0,10,4],[0,4,10]]", 10) is not None


def test_missed_primes_and_truant():
    assert _qpu.missed_primes("2,3,7,21", 100000) == [13, 17, 43, 47]
    assert _qpu.prime_truant("2,2,2,3") == 17
    assert _qpu.prime_truant("1,1,2") is None


def test_criterion_and_properness():
    assert _qpu.criterion_check("2,3,4,5")
    assert not _qpu.criterion_check("2,2,2,3")
    assert _qpu.is_proper("1,2,5")
    assert not _qpu.is_proper("1,1,2,5")


def test_escalation_recovers_the_proper_ternaries():
    assert _qpu.proper_forms(3, max_rank=3) == [
        "1,1,2",
        "1,1,3",
        "1,2,3",
        "1,2,4",
        "1,2,5",
    ]


def test_transfer_relation():
    assert _qpu.precedes("1,1,30", "2,3,5", 7, 0)
    assert _qpu.precedes("1,1,30", "2,3,5", 7, 3)


def test_candidates():
    forms = _qpu.candidate_forms()
    assert len(forms) == 27
    assert "2,3,4,5" in forms
    assert "2,3,5,43" in forms


def test_errors_are_typed():
    with pytest.raises(_qpu.QpuError):
        _qpu.missed_primes("not a form", 100)
