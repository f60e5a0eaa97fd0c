import pytest

from foarith.arith import (
    admissible_wff,
    decode_numeral,
    goldbach_sentence,
    numeral,
    prime_wff,
)
from foarith.goldbach import is_admissible, is_prime, partitions
from foarith.models import ThreeValued, coded_model, eval_bounded
from foarith.syntax import (
    Const,
    ForAll,
    free_vars,
    is_core,
    parse_core,
    print_wff,
    substitute,
    succ,
    ZERO,
)

STD = coded_model(18, 1)


def _holds(w, env, bound):
    r = eval_bounded(STD, w, env, bound=bound, domain_cutoff=True)
    assert r.truth in (ThreeValued.TRUE, ThreeValued.FALSE)
    return r.truth is ThreeValued.TRUE


# ---------------------------------------------------------------------------
# numerals


def test_numeral_goldens():
    assert numeral(0) == ZERO
    assert numeral(2) == succ(succ(ZERO))
    assert decode_numeral(succ(succ(succ(ZERO)))) == 3


def test_numeral_round_trip():
    for n in range(50):
        assert decode_numeral(numeral(n)) == n


def test_decode_rejects_non_numerals():
    with pytest.raises(ValueError):
        decode_numeral(Const(2))
    with pytest.raises(ValueError):
        decode_numeral(succ(Const(2)))
    with pytest.raises(ValueError):
        numeral(-1)


# ---------------------------------------------------------------------------
# primality formula


def test_prime_wff_free_vars_and_core():
    w = prime_wff(1)
    assert free_vars(w) == {1}
    assert is_core(w)


def test_prime_wff_deterministic():
    assert print_wff(prime_wff(1)) == print_wff(prime_wff(1))
    assert parse_core(print_wff(prime_wff(2))) == prime_wff(2)


def test_prime_wff_bound_variable_choice():
    # bound variables are the smallest indices distinct from the free one
    assert free_vars(prime_wff(1)) == {1}
    w1 = print_wff(prime_wff(1))
    assert "(all x2 (all x3" in w1
    w2 = print_wff(prime_wff(2))
    assert "(all x1 (all x3" in w2


def test_prime_wff_examples():
    w = prime_wff(1)
    assert _holds(w, {1: 7}, bound=20)
    r = eval_bounded(STD, w, {1: 8}, bound=20, domain_cutoff=True)
    assert r.truth is ThreeValued.FALSE
    assert r.witness[2] == 2  # divisor witness a = 2


def test_prime_wff_agrees_with_trial_division():
    w = prime_wff(1)
    for n in range(201):
        assert _holds(w, {1: n}, bound=n + 1) == is_prime(n), n


# ---------------------------------------------------------------------------
# admissible-even formula


def test_admissible_wff_free_vars_and_core():
    w = admissible_wff(1)
    assert free_vars(w) == {1}
    assert is_core(w)


def test_admissible_wff_examples():
    w = admissible_wff(1)
    assert _holds(w, {1: 18}, bound=20)
    assert not _holds(w, {1: 16}, bound=20)   # 16 - 3 = 13 is prime
    assert not _holds(w, {1: 17}, bound=20)   # odd


def test_admissible_wff_agrees_with_comprehension():
    w = admissible_wff(1)
    for n in range(201):
        assert _holds(w, {1: n}, bound=n + 1) == is_admissible(n), n


# ---------------------------------------------------------------------------
# the Goldbach sentence


def test_goldbach_sentence_closed():
    g = goldbach_sentence()
    assert free_vars(g) == frozenset()
    assert is_core(g)


def test_goldbach_sentence_round_trips():
    g = goldbach_sentence()
    assert parse_core(print_wff(g)) == g
    assert parse_core(print_wff(g, resugar=True)) == g


def test_goldbach_sentence_instance_at_18():
    g = goldbach_sentence()
    assert isinstance(g, ForAll) and g.var == 1
    instance = substitute(g.body, 1, numeral(18))
    r = eval_bounded(STD, instance, {}, bound=20, domain_cutoff=True)
    assert r.truth is ThreeValued.TRUE
    assert r.witness == {2: 5, 3: 13}
    assert (5, 13) in partitions(18)


def test_goldbach_sentence_vacuous_below_16():
    g = goldbach_sentence()
    instance = substitute(g.body, 1, numeral(12))
    # 12 is not admissible, so the implication holds vacuously
    r = eval_bounded(STD, instance, {}, bound=14, domain_cutoff=True)
    assert r.truth is ThreeValued.TRUE


def test_classical_variant():
    g = goldbach_sentence(classical=True)
    assert free_vars(g) == frozenset()
    assert g != goldbach_sentence()
    instance = substitute(g.body, 1, numeral(4))
    r = eval_bounded(STD, instance, {}, bound=6, domain_cutoff=True)
    assert r.truth is ThreeValued.TRUE
    assert r.witness == {2: 2, 3: 2}
    # odd numbers satisfy it vacuously
    instance = substitute(g.body, 1, numeral(7))
    assert _holds(instance, {}, bound=9)


def test_classical_and_restricted_agree_on_admissibles():
    classical = goldbach_sentence(classical=True)
    restricted = goldbach_sentence()
    for n in (18, 24):
        ic = substitute(classical.body, 1, numeral(n))
        ir = substitute(restricted.body, 1, numeral(n))
        assert _holds(ic, {}, bound=n + 2) and _holds(ir, {}, bound=n + 2)
