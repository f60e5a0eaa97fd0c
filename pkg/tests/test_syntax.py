import pytest
from hypothesis import given

from conftest import core_wffs, surface_wffs
from foarith.syntax import (
    ANY_TERM,
    And,
    Atom,
    CaptureError,
    Const,
    Exists,
    ForAll,
    FuncApp,
    Iff,
    Implies,
    NO_MATCH,
    Not,
    Or,
    ParseError,
    Var,
    Witness,
    ZERO,
    eq,
    free_vars,
    is_core,
    is_free_for,
    lower,
    match_substitution_result,
    parse_core,
    parse_term,
    parse_wff,
    plus,
    print_wff,
    substitute,
    succ,
    term_vars,
    times,
)

X1, X2, X3 = Var(1), Var(2), Var(3)


# ---------------------------------------------------------------------------
# parsing


def test_parse_closed_universal():
    w = parse_wff("(all x1 ~(S(x1) = 0))")
    assert w == ForAll(1, Not(eq(succ(X1), ZERO)))


def test_parse_double_negation():
    assert parse_wff("~~(0 = 0)") == Not(Not(eq(ZERO, ZERO)))


def test_parse_keeps_abbreviations():
    w = parse_wff("(ex x2 (x2 = S(0)))")
    assert w == Exists(2, eq(X2, succ(ZERO)))


def test_parse_bare_equality_atom():
    assert parse_wff("x1 = x2") == eq(X1, X2)
    assert parse_wff("(x1 + x2) = 0") == eq(plus(X1, X2), ZERO)


def test_parse_generic_letters():
    w = parse_wff("A{2,1}(f{3,2}(x1, a2))")
    assert w == Atom(2, 1, (FuncApp(3, 2, (X1, Const(2))),))


def test_parse_whitespace_insignificant():
    assert parse_wff("(all x1((x1+0)=x1))") == parse_wff("( all x1 ( ( x1 + 0 ) = x1 ) )")


def test_parse_term_aliases():
    assert parse_term("0") == Const(1)
    assert parse_term("a1") == Const(1)
    assert parse_term("S(0)") == FuncApp(1, 1, (Const(1),))
    assert parse_term("(x1 * x2)") == times(X1, X2)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as exc:
        parse_wff("(all x1 (x1 = ))")
    assert exc.value.pos == 14


def test_parse_error_arity_mismatch():
    with pytest.raises(ParseError, match="arity mismatch"):
        parse_wff("A{1,2}(x1)")
    with pytest.raises(ParseError, match="arity mismatch"):
        parse_wff("(f{1,3}(x1, x2) = 0)")


def test_parse_error_trailing_input():
    with pytest.raises(ParseError, match="trailing"):
        parse_wff("(0 = 0) (0 = 0)")


def test_parse_error_bad_numeral_and_index():
    with pytest.raises(ParseError, match="numeral"):
        parse_wff("(2 = 2)")
    with pytest.raises(ParseError, match=">= 1"):
        parse_wff("(x0 = 0)")


# ---------------------------------------------------------------------------
# printing


def test_print_sum_axiom_shape():
    w = ForAll(1, eq(plus(X1, ZERO), X1))
    assert print_wff(w) == "(all x1 ((x1 + 0) = x1))"


def test_print_negated_equality():
    assert print_wff(Not(eq(ZERO, ZERO))) == "~(0 = 0)"


def test_print_generic_letters_round_trip():
    text = "A{2,3}(x1, f{4,1}(a3), 0)"
    assert print_wff(parse_wff(text)) == text


def test_resugar_folds_patterns_back():
    for text in ["(ex x1 (x1 = 0))", "((0 = 0) & (x1 = x1))",
                 "((0 = 0) | (x1 = x1))", "((0 = 0) <-> (x1 = x1))"]:
        core = parse_core(text)
        assert print_wff(core, resugar=True) == text
        assert parse_core(print_wff(core, resugar=True)) == core


@given(core_wffs)
def test_round_trip_core(w):
    assert lower(parse_wff(print_wff(w))) == w
    assert parse_wff(print_wff(w)) == w


@given(surface_wffs)
def test_round_trip_surface(w):
    assert lower(parse_wff(print_wff(w))) == lower(w)


@given(core_wffs)
def test_round_trip_resugared(w):
    assert lower(parse_wff(print_wff(w, resugar=True))) == w


# ---------------------------------------------------------------------------
# lowering


A = eq(X1, ZERO)
B = eq(X2, ZERO)


def test_lower_exists():
    assert lower(Exists(1, A)) == Not(ForAll(1, Not(A)))


def test_lower_and():
    assert lower(And(A, B)) == Not(Implies(A, Not(B)))


def test_lower_or():
    assert lower(Or(A, B)) == Implies(Not(A), B)


def test_lower_iff():
    assert lower(Iff(A, B)) == Not(Implies(Implies(A, B), Not(Implies(B, A))))


@given(surface_wffs)
def test_lower_idempotent(w):
    core = lower(w)
    assert is_core(core)
    assert lower(core) == core


# ---------------------------------------------------------------------------
# free variables and substitution


def test_free_vars():
    assert free_vars(eq(X1, X2)) == {1, 2}
    assert free_vars(ForAll(1, eq(X1, X2))) == {2}
    assert free_vars(ForAll(1, Not(eq(succ(X1), ZERO)))) == frozenset()
    assert term_vars(plus(X1, times(X2, X3))) == {1, 2, 3}


def test_is_free_for():
    w = ForAll(2, eq(X1, X2))
    assert not is_free_for(succ(X2), 1, w)
    assert is_free_for(succ(ZERO), 1, w)
    assert is_free_for(X1, 1, w)


def test_substitute_free_occurrences():
    assert substitute(eq(X1, ZERO), 1, succ(ZERO)) == eq(succ(ZERO), ZERO)


def test_substitute_skips_bound():
    w = ForAll(1, eq(X1, ZERO))
    assert substitute(w, 1, succ(ZERO)) == w


def test_substitute_rejects_capture():
    with pytest.raises(CaptureError):
        substitute(ForAll(2, eq(X1, X2)), 1, X2)


@given(core_wffs)
def test_substitute_identity(w):
    for v in (1, 2, 3):
        assert substitute(w, v, Var(v)) == w


@given(core_wffs)
def test_substitute_free_vars_equation(w):
    t = succ(Var(7))
    if 1 in free_vars(w) and is_free_for(t, 1, w):
        assert free_vars(substitute(w, 1, t)) == (free_vars(w) - {1}) | term_vars(t)


# ---------------------------------------------------------------------------
# inverse substitution


def test_match_witness():
    m = match_substitution_result(eq(X1, ZERO), 1, eq(succ(ZERO), ZERO))
    assert m == Witness(succ(ZERO))


def test_match_disagreement():
    a = eq(X1, X1)
    a_prime = eq(ZERO, succ(ZERO))
    assert match_substitution_result(a, 1, a_prime) == NO_MATCH


def test_match_any_term():
    a = eq(ZERO, ZERO)
    assert match_substitution_result(a, 1, a) == ANY_TERM
    bound = ForAll(1, eq(X1, ZERO))
    assert match_substitution_result(bound, 1, bound) == ANY_TERM


def test_match_rejects_capture():
    a = ForAll(2, eq(X1, X2))
    a_prime = ForAll(2, eq(X2, X2))
    assert match_substitution_result(a, 1, a_prime) == NO_MATCH


def test_match_structural_mismatch():
    assert match_substitution_result(eq(X1, ZERO), 1, Not(eq(X1, ZERO))) == NO_MATCH


@given(core_wffs)
def test_match_recovers_direct_substitution(w):
    t = succ(succ(ZERO))
    if 1 in free_vars(w):
        assert match_substitution_result(w, 1, substitute(w, 1, t)) == Witness(t)
