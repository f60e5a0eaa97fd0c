from pathlib import Path

import pytest

from foarith.kernel import MP, ProperAxiom, Scheme, SchemeId, UNKNOWN, check_proof
from foarith.proofio import (
    ProofFileError,
    format_justification,
    format_proof,
    parse_justification,
    parse_proof_file,
)

DATA = Path(__file__).parent / "data"


def test_justification_round_trip():
    for text in ["K1", "K6", "N7", "AX N3", "MP 2 1", "GEN 1 x2", "?"]:
        assert format_justification(parse_justification(text)) == text


def test_justification_parse_errors():
    for bad in ["K9", "MP 1", "GEN 1 y2", "AX", "mp 1 2"]:
        with pytest.raises(ValueError):
            parse_justification(bad)


def test_parse_fixture():
    proof = parse_proof_file((DATA / "imp_refl.proof").read_text())
    assert proof.theory.name == "K"
    assert len(proof.lines) == 5
    assert proof.lines[2].justification == MP(2, 1)
    assert check_proof(proof).accepted


def test_parse_unknowns():
    proof = parse_proof_file((DATA / "imp_refl_bare.proof").read_text())
    assert all(line.justification == UNKNOWN for line in proof.lines)


def test_parse_extension_header():
    proof = parse_proof_file((DATA / "extension.proof").read_text())
    assert proof.theory.name == "N*"
    assert proof.theory.parent.name == "N"
    assert "refl" in proof.theory.axioms()
    assert check_proof(proof).accepted


def test_comments_and_blank_lines_ignored():
    text = "\n# header comment\n\ntheory: N\n# mid comment\n1. (all x1 ((x1 + 0) = x1)) ; AX N3\n\n"
    proof = parse_proof_file(text)
    assert proof.lines[0].justification == ProperAxiom("N3")


def test_abbreviations_lowered_on_read():
    text = "theory: K\n1. (((0=0) & (0=0)) -> ((0=0) & (0=0))) ; ?\n"
    proof = parse_proof_file(text)
    from foarith.syntax import is_core
    assert is_core(proof.lines[0].wff)


def test_error_bad_numbering():
    text = "theory: K\n1. (0=0) ; ?\n3. (0=0) ; ?\n"
    with pytest.raises(ProofFileError, match="numbered 3, expected 2"):
        parse_proof_file(text)


def test_error_missing_theory():
    with pytest.raises(ProofFileError, match="before the theory"):
        parse_proof_file("1. (0=0) ; ?\n")
    with pytest.raises(ProofFileError, match="missing theory"):
        parse_proof_file("# nothing\n")


def test_error_unknown_theory():
    with pytest.raises(ProofFileError, match="unknown theory"):
        parse_proof_file("theory: ZF\n1. (0=0) ; ?\n")


def test_error_axiom_after_lines():
    text = "theory: N\n1. (0=0) ; ?\naxiom E: (all x1 (x1 = x1))\n"
    with pytest.raises(ProofFileError, match="after proof lines"):
        parse_proof_file(text)


def test_error_bad_wff_carries_line_number():
    with pytest.raises(ProofFileError, match="line 2"):
        parse_proof_file("theory: K\n2 is not here\n")


def test_format_parse_round_trip():
    proof = parse_proof_file((DATA / "extension.proof").read_text())
    again = parse_proof_file(format_proof(proof))
    assert again.theory.axioms() == proof.theory.axioms()
    assert again.lines == proof.lines


def test_scheme_names_cover_all_ids():
    for scheme in SchemeId:
        assert parse_justification(scheme.value) == Scheme(scheme)
