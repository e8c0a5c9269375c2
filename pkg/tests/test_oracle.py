import pytest

from conjcount.builders import build, cyclic, quaternion
from conjcount.errors import TooLarge
from conjcount.oracle import (
    alpha_bruteforce,
    beta_bruteforce,
    commuting_tuple_count,
    max_abelian_bruteforce,
)
from conjcount.presets import s3_spec


def test_alpha_examples():
    s3 = build(s3_spec())
    assert alpha_bruteforce(s3, 2).count == 11
    assert alpha_bruteforce(cyclic(4), 3).count == 64
    assert alpha_bruteforce(quaternion(8), 1).count == 5


def test_beta_examples():
    s3 = build(s3_spec())
    assert beta_bruteforce(s3, 2).count == 8
    assert beta_bruteforce(quaternion(8), 2).count == 22
    assert beta_bruteforce(cyclic(5), 3).count == 125


def test_commuting_tuple_counts():
    s3 = build(s3_spec())
    assert commuting_tuple_count(s3, 2) == 18
    assert commuting_tuple_count(s3, 1) == 6
    assert commuting_tuple_count(quaternion(8), 2) == 40


def test_guard():
    with pytest.raises(TooLarge):
        alpha_bruteforce(cyclic(12), 3, max_states=100)
    with pytest.raises(TooLarge):
        commuting_tuple_count(cyclic(12), 3, max_states=100)


def test_max_abelian_bruteforce():
    assert max_abelian_bruteforce(quaternion(8)) == 4
    assert max_abelian_bruteforce(build(s3_spec())) == 3
    assert max_abelian_bruteforce(cyclic(9)) == 9
