from fractions import Fraction
from pathlib import Path

import pytest

import stratavol as sv

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


def test_signature_basics():
    assert sv.genus(2, [5, 3]) == 3
    assert sv.proj_dim(2, [5, 3]) == 5
    assert sv.canonical_key(2, [3, 5]) == "k=2; mu=5,3"
    assert not sv.is_holo_abelian(2, [5, 3])
    with pytest.raises(sv.InvalidSignature):
        sv.genus(2, [5, 2])


def test_small_numbers():
    assert sv.dfact2(7) == 105
    assert sv.f2(3, 1) == Fraction(1, 5)
    with pytest.raises(sv.DomainError):
        sv.f2(-2, 1)


def test_enumeration_counts():
    assert len(sv.enumerate(2, [5, 3])) == 6
    assert len(sv.enumerate(1, [4, 2, -2])) == 7
    g = sv.enumerate(2, [5, 3])[0]
    assert set(g) >= {"graph", "edge_data", "prefactor", "kappa_prod"}
    assert all(isinstance(e, tuple) and len(e) == 3 for e in g["edge_data"])


def test_completed_volume_from_fixture():
    r = sv.completed_volume(2, [5, 3], [str(FIXTURES / "mu53.vol")])
    assert r["completed_vol"] == Fraction(-73, 448)
    assert len(r["rows"]) == 6
    assert r["mv_value"] == (Fraction(73, 420), 6)
    swapped = sv.completed_volume(2, [3, 5], [str(FIXTURES / "mu53.vol")])
    assert swapped["completed_vol"] == r["completed_vol"]


def test_missing_volume_raises():
    with pytest.raises(sv.MissingVolume):
        sv.completed_volume(2, [5, 3])


def test_render_formats():
    text = sv.completed_volume(1, [4, 2, -2], [str(FIXTURES / "mu422.vol")], format="csv")
    assert text.splitlines()[-1] == "completed,,,,,1/960"


def test_identities():
    assert sv.alpha_closed(1, 2, 5, [1], 1) == sv.alpha_brute(1, 2, 5, [1], 1)
    assert sv.g_count(1, 3, [1, 1]) == sv.f_count(1, 3, [1, 1])
    assert sv.vandermonde_check(5, [1, 2], 1)
    assert sv.mv_convert(2, [5, 3], Fraction(-73, 448)) == (Fraction(73, 420), 6)
