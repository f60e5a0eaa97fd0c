"""Syntax of the first-order arithmetic language.

Terms are variables ``x1, x2, ...``, individual constants ``a1, a2, ...``
and function-letter applications ``f{k,n}(...)``.  Formulas are built from
predicate atoms ``A{k,n}(...)`` with the three core connectives ``~``,
``->`` and ``all``; ``ex``, ``&``, ``|`` and ``<->`` are abbreviations that
:func:`lower` removes.  The arithmetic letters have fixed readings:
``f{1,1}`` is the successor (written ``S``), ``f{1,2}`` the sum (``+``),
``f{2,2}`` the product (``*``), ``A{1,2}`` equality (``=``), and ``a1``
is zero (written ``0``).

Concrete grammar (whitespace between tokens is insignificant)::

    wff  := atom | "~" wff | "(" wff bin wff ")" | "(" q var wff ")"
    bin  := "->" | "&" | "|" | "<->"          q := "all" | "ex"
    atom := term "=" term | "(" term "=" term ")" | "A{" k "," n "}(" termlist ")"
    term := var | const | "0" | "S(" term ")"
          | "(" term "+" term ")" | "(" term "*" term ")"
          | "f{" k "," n "}(" termlist ")"
    var  := "x" digits      const := "a" digits      ("0" aliases "a1")

Equality atoms may be written with or without the surrounding parentheses;
the canonical printer always emits them, so every binary construct appears
fully parenthesized and the grammar needs no precedence rules.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Optional, Union

__all__ = [
    "ParseError", "CaptureError",
    "Var", "Const", "FuncApp", "Term",
    "Atom", "Not", "Implies", "ForAll", "Exists", "And", "Or", "Iff",
    "Wff", "SurfaceWff",
    "ZERO", "eq", "succ", "plus", "times",
    "is_core", "term_vars", "free_vars", "lower",
    "is_free_for", "substitute",
    "Witness", "AnyTerm", "NoMatch", "ANY_TERM", "NO_MATCH",
    "match_substitution_result",
    "parse_term", "parse_wff", "parse_core",
    "print_term", "print_wff",
]


class ParseError(ValueError):
    """Malformed input text; ``pos`` is the character offset of the fault."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class CaptureError(ValueError):
    """Substituting the term would capture one of its variables."""


# ---------------------------------------------------------------------------
# abstract syntax


@dataclass(frozen=True)
class Var:
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("variable index must be >= 1")

    def __str__(self) -> str:
        return print_term(self)


@dataclass(frozen=True)
class Const:
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("constant index must be >= 1")

    def __str__(self) -> str:
        return print_term(self)


@dataclass(frozen=True)
class FuncApp:
    letter: int
    arity: int
    args: tuple

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if self.letter < 1 or self.arity < 1:
            raise ValueError("function letter and arity must be >= 1")
        if len(self.args) != self.arity:
            raise ValueError(
                f"f{{{self.letter},{self.arity}}} applied to {len(self.args)} arguments")

    def __str__(self) -> str:
        return print_term(self)


Term = Union[Var, Const, FuncApp]


@dataclass(frozen=True)
class Atom:
    letter: int
    arity: int
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if self.letter < 1 or self.arity < 1:
            raise ValueError("predicate letter and arity must be >= 1")
        if len(self.terms) != self.arity:
            raise ValueError(
                f"A{{{self.letter},{self.arity}}} applied to {len(self.terms)} terms")

    def __str__(self) -> str:
        return print_wff(self)


@dataclass(frozen=True)
class Not:
    body: "SurfaceWff"

    def __str__(self) -> str:
        return print_wff(self)


@dataclass(frozen=True)
class Implies:
    antecedent: "SurfaceWff"
    consequent: "SurfaceWff"

    def __str__(self) -> str:
        return print_wff(self)


@dataclass(frozen=True)
class ForAll:
    var: int
    body: "SurfaceWff"

    def __post_init__(self):
        if self.var < 1:
            raise ValueError("variable index must be >= 1")

    def __str__(self) -> str:
        return print_wff(self)


@dataclass(frozen=True)
class Exists:
    var: int
    body: "SurfaceWff"

    def __post_init__(self):
        if self.var < 1:
            raise ValueError("variable index must be >= 1")

    def __str__(self) -> str:
        return print_wff(self)


@dataclass(frozen=True)
class And:
    left: "SurfaceWff"
    right: "SurfaceWff"

    def __str__(self) -> str:
        return print_wff(self)


@dataclass(frozen=True)
class Or:
    left: "SurfaceWff"
    right: "SurfaceWff"

    def __str__(self) -> str:
        return print_wff(self)


@dataclass(frozen=True)
class Iff:
    left: "SurfaceWff"
    right: "SurfaceWff"

    def __str__(self) -> str:
        return print_wff(self)


Wff = Union[Atom, Not, Implies, ForAll]
SurfaceWff = Union[Atom, Not, Implies, ForAll, Exists, And, Or, Iff]

ZERO = Const(1)


def eq(left: Term, right: Term) -> Atom:
    """Equality atom; equality is predicate letter A{1,2}, nothing more."""
    return Atom(1, 2, (left, right))


def succ(t: Term) -> FuncApp:
    return FuncApp(1, 1, (t,))


def plus(left: Term, right: Term) -> FuncApp:
    return FuncApp(1, 2, (left, right))


def times(left: Term, right: Term) -> FuncApp:
    return FuncApp(2, 2, (left, right))


# ---------------------------------------------------------------------------
# structural queries


def is_core(w: SurfaceWff) -> bool:
    """True when no abbreviation node (ex, &, |, <->) occurs anywhere in w."""
    if isinstance(w, Atom):
        return True
    if isinstance(w, Not):
        return is_core(w.body)
    if isinstance(w, Implies):
        return is_core(w.antecedent) and is_core(w.consequent)
    if isinstance(w, ForAll):
        return is_core(w.body)
    return False


def term_vars(t: Term) -> frozenset:
    """All variable indices occurring in a term."""
    if isinstance(t, Var):
        return frozenset((t.index,))
    if isinstance(t, Const):
        return frozenset()
    out = frozenset()
    for a in t.args:
        out |= term_vars(a)
    return out


def free_vars(w: SurfaceWff) -> frozenset:
    """Free variable indices of a formula; quantifiers bind their variable."""
    if isinstance(w, Atom):
        out = frozenset()
        for t in w.terms:
            out |= term_vars(t)
        return out
    if isinstance(w, Not):
        return free_vars(w.body)
    if isinstance(w, Implies):
        return free_vars(w.antecedent) | free_vars(w.consequent)
    if isinstance(w, (And, Or, Iff)):
        return free_vars(w.left) | free_vars(w.right)
    if isinstance(w, (ForAll, Exists)):
        return free_vars(w.body) - {w.var}
    raise TypeError(f"not a formula: {w!r}")


def lower(w: SurfaceWff) -> Wff:
    """Expand every abbreviation node into the three core connectives.

    Innermost nodes are expanded first.  The expansions are:
    ``(ex xi A)`` becomes ``~(all xi ~A)``, ``(A & B)`` becomes
    ``~(A -> ~B)``, ``(A | B)`` becomes ``(~A -> B)``, and ``(A <-> B)``
    becomes the conjunction of the two implications, which then expands.
    Core formulas are returned unchanged, so lower is idempotent.
    """
    if isinstance(w, Atom):
        return w
    if isinstance(w, Not):
        return Not(lower(w.body))
    if isinstance(w, Implies):
        return Implies(lower(w.antecedent), lower(w.consequent))
    if isinstance(w, ForAll):
        return ForAll(w.var, lower(w.body))
    if isinstance(w, Exists):
        return Not(ForAll(w.var, Not(lower(w.body))))
    if isinstance(w, And):
        return Not(Implies(lower(w.left), Not(lower(w.right))))
    if isinstance(w, Or):
        return Implies(Not(lower(w.left)), lower(w.right))
    if isinstance(w, Iff):
        fwd = Implies(lower(w.left), lower(w.right))
        bwd = Implies(lower(w.right), lower(w.left))
        return Not(Implies(fwd, Not(bwd)))
    raise TypeError(f"not a formula: {w!r}")


# ---------------------------------------------------------------------------
# substitution


def is_free_for(t: Term, x: int, w: SurfaceWff) -> bool:
    """Whether term t may replace the free occurrences of x in w.

    True iff no free occurrence of x lies inside the scope of a quantifier
    that binds a variable of t.  Closed terms are free for anything; a
    variable is always free for itself.
    """
    if isinstance(w, Atom):
        return True
    if isinstance(w, Not):
        return is_free_for(t, x, w.body)
    if isinstance(w, Implies):
        return is_free_for(t, x, w.antecedent) and is_free_for(t, x, w.consequent)
    if isinstance(w, (And, Or, Iff)):
        return is_free_for(t, x, w.left) and is_free_for(t, x, w.right)
    if isinstance(w, (ForAll, Exists)):
        if w.var == x or x not in free_vars(w.body):
            return True
        return w.var not in term_vars(t) and is_free_for(t, x, w.body)
    raise TypeError(f"not a formula: {w!r}")


def _subst_term(s: Term, x: int, t: Term) -> Term:
    if isinstance(s, Var):
        return t if s.index == x else s
    if isinstance(s, Const):
        return s
    return FuncApp(s.letter, s.arity, tuple(_subst_term(a, x, t) for a in s.args))


def _subst_wff(w: SurfaceWff, x: int, t: Term) -> SurfaceWff:
    if isinstance(w, Atom):
        return Atom(w.letter, w.arity, tuple(_subst_term(s, x, t) for s in w.terms))
    if isinstance(w, Not):
        return Not(_subst_wff(w.body, x, t))
    if isinstance(w, Implies):
        return Implies(_subst_wff(w.antecedent, x, t), _subst_wff(w.consequent, x, t))
    if isinstance(w, (And, Or, Iff)):
        return type(w)(_subst_wff(w.left, x, t), _subst_wff(w.right, x, t))
    if isinstance(w, (ForAll, Exists)):
        if w.var == x:
            return w
        return type(w)(w.var, _subst_wff(w.body, x, t))
    raise TypeError(f"not a formula: {w!r}")


def substitute(w: SurfaceWff, x: int, t: Term) -> SurfaceWff:
    """Replace every free occurrence of x in w by t.

    Raises :class:`CaptureError` when t is not free for x in w.  Capture is
    an error rather than a trigger for silent renaming: callers that depend
    on the side condition must be able to observe its failure.
    """
    if not is_free_for(t, x, w):
        raise CaptureError(f"term {print_term(t)} is not free for x{x}")
    return _subst_wff(w, x, t)


# ---------------------------------------------------------------------------
# inverse substitution


@dataclass(frozen=True)
class Witness:
    """A single term t with A' = A[x := t] at every free occurrence of x."""
    term: Term


@dataclass(frozen=True)
class AnyTerm:
    """x is not free in A and A' = A, so any term works."""


@dataclass(frozen=True)
class NoMatch:
    """A' is not a substitution instance of A at x."""


ANY_TERM = AnyTerm()
NO_MATCH = NoMatch()

MatchResult = Union[Witness, AnyTerm, NoMatch]


class _Mismatch(Exception):
    pass


def match_substitution_result(a: Wff, x: int, a_prime: Wff) -> MatchResult:
    """Solve ``A' = A[x := ?]`` for the unknown term.

    Walks A and A' in parallel.  Both must agree everywhere except at the
    free occurrences of x in A, each of which contributes a candidate term
    read off from A'.  All candidates must coincide, and the resulting term
    must be free for x in A; otherwise the answer is NO_MATCH.  When A has
    no free occurrence of x the walk degenerates into an equality check and
    a successful one yields ANY_TERM.
    """
    found: list = []

    def terms(s: Term, s2: Term, x_bound: bool) -> None:
        if isinstance(s, Var):
            if s.index == x and not x_bound:
                found.append(s2)
                return
            if s != s2:
                raise _Mismatch
        elif isinstance(s, Const):
            if s != s2:
                raise _Mismatch
        elif isinstance(s, FuncApp):
            if (not isinstance(s2, FuncApp) or s.letter != s2.letter
                    or s.arity != s2.arity):
                raise _Mismatch
            for u, v in zip(s.args, s2.args):
                terms(u, v, x_bound)
        else:
            raise TypeError(f"not a term: {s!r}")

    def wffs(w: SurfaceWff, w2: SurfaceWff, x_bound: bool) -> None:
        if type(w) is not type(w2):
            raise _Mismatch
        if isinstance(w, Atom):
            if w.letter != w2.letter or w.arity != w2.arity:
                raise _Mismatch
            for u, v in zip(w.terms, w2.terms):
                terms(u, v, x_bound)
        elif isinstance(w, Not):
            wffs(w.body, w2.body, x_bound)
        elif isinstance(w, Implies):
            wffs(w.antecedent, w2.antecedent, x_bound)
            wffs(w.consequent, w2.consequent, x_bound)
        elif isinstance(w, (And, Or, Iff)):
            wffs(w.left, w2.left, x_bound)
            wffs(w.right, w2.right, x_bound)
        elif isinstance(w, (ForAll, Exists)):
            if w.var != w2.var:
                raise _Mismatch
            wffs(w.body, w2.body, x_bound or w.var == x)
        else:
            raise TypeError(f"not a formula: {w!r}")

    try:
        wffs(a, a_prime, False)
    except _Mismatch:
        return NO_MATCH
    if not found:
        return ANY_TERM
    t = found[0]
    if any(u != t for u in found[1:]):
        return NO_MATCH
    if not is_free_for(t, x, a):
        return NO_MATCH
    return Witness(t)


# ---------------------------------------------------------------------------
# lexer


_TOKEN_RE = re.compile(r"<->|->|[A-Za-z]+[0-9]*|[0-9]+|[(){},=+*~&|]")
_WS_RE = re.compile(r"\s*")
_VAR_RE = re.compile(r"x([0-9]+)\Z")
_CONST_RE = re.compile(r"a([0-9]+)\Z")
_INT_RE = re.compile(r"[0-9]+\Z")

_TERM_STARTERS = ("S", "f", "(")


@dataclass(frozen=True)
class _Token:
    text: str
    pos: int


def _lex(text: str) -> list:
    tokens = []
    i = 0
    n = len(text)
    while True:
        i = _WS_RE.match(text, i).end()
        if i >= n:
            break
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        tokens.append(_Token(m.group(), i))
        i = m.end()
    return tokens


def _starts_term(text: str) -> bool:
    return (text in _TERM_STARTERS or _VAR_RE.match(text) is not None
            or _CONST_RE.match(text) is not None or _INT_RE.match(text) is not None)


# ---------------------------------------------------------------------------
# parser


_BIN_NODES = {"->": Implies, "&": And, "|": Or, "<->": Iff}


class _Parser:
    def __init__(self, tokens: list, end: int):
        self.tokens = tokens
        self.i = 0
        self.end = end

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.end)
        self.i += 1
        return tok

    def expect(self, text: str) -> _Token:
        tok = self.take()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text!r}", tok.pos)
        return tok

    # terms ------------------------------------------------------------

    def term(self) -> Term:
        tok = self.peek()
        if tok is None:
            raise ParseError("expected a term", self.end)
        text = tok.text
        if text == "S":
            self.i += 1
            self.expect("(")
            arg = self.term()
            self.expect(")")
            return succ(arg)
        if text == "f":
            self.i += 1
            k, n = self._brace_indices(tok.pos)
            args = self._term_list()
            if len(args) != n:
                raise ParseError(
                    f"arity mismatch: f{{{k},{n}}} applied to {len(args)} arguments",
                    tok.pos)
            return FuncApp(k, n, args)
        if text == "(":
            self.i += 1
            left = self.term()
            op = self.take()
            if op.text not in ("+", "*"):
                raise ParseError(f"expected '+' or '*', found {op.text!r}", op.pos)
            right = self.term()
            self.expect(")")
            return plus(left, right) if op.text == "+" else times(left, right)
        m = _VAR_RE.match(text)
        if m is not None:
            self.i += 1
            return Var(self._index(m.group(1), tok.pos))
        m = _CONST_RE.match(text)
        if m is not None:
            self.i += 1
            return Const(self._index(m.group(1), tok.pos))
        if _INT_RE.match(text) is not None:
            if text != "0":
                raise ParseError(
                    f"bare numeral {text!r} is not a term; only '0' abbreviates a1",
                    tok.pos)
            self.i += 1
            return ZERO
        raise ParseError(f"expected a term, found {text!r}", tok.pos)

    def _index(self, digits: str, pos: int) -> int:
        value = int(digits)
        if value < 1:
            raise ParseError("index must be >= 1", pos)
        return value

    def _brace_indices(self, pos: int) -> tuple:
        self.expect("{")
        k_tok = self.take()
        if _INT_RE.match(k_tok.text) is None:
            raise ParseError(f"expected a letter index, found {k_tok.text!r}", k_tok.pos)
        self.expect(",")
        n_tok = self.take()
        if _INT_RE.match(n_tok.text) is None:
            raise ParseError(f"expected an arity, found {n_tok.text!r}", n_tok.pos)
        self.expect("}")
        return self._index(k_tok.text, k_tok.pos), self._index(n_tok.text, n_tok.pos)

    def _term_list(self) -> tuple:
        self.expect("(")
        args = [self.term()]
        while self.peek() is not None and self.peek().text == ",":
            self.i += 1
            args.append(self.term())
        self.expect(")")
        return tuple(args)

    # formulas -----------------------------------------------------------

    def wff(self) -> SurfaceWff:
        tok = self.peek()
        if tok is None:
            raise ParseError("expected a formula", self.end)
        if tok.text == "~":
            self.i += 1
            return Not(self.wff())
        if tok.text == "A":
            self.i += 1
            k, n = self._brace_indices(tok.pos)
            terms = self._term_list()
            if len(terms) != n:
                raise ParseError(
                    f"arity mismatch: A{{{k},{n}}} applied to {len(terms)} terms",
                    tok.pos)
            return Atom(k, n, terms)
        if _starts_term(tok.text):
            # bare equality atom, possibly with a parenthesized sum or
            # product as its left term
            mark = self.i
            try:
                left_t = self.term()
                self.expect("=")
                right_t = self.term()
                return eq(left_t, right_t)
            except ParseError:
                if tok.text != "(":
                    raise
                self.i = mark
        if tok.text == "(":
            self.i += 1
            nxt = self.peek()
            if nxt is not None and nxt.text in ("all", "ex"):
                self.i += 1
                v = self._variable()
                body = self.wff()
                self.expect(")")
                return ForAll(v, body) if nxt.text == "all" else Exists(v, body)
            mark = self.i
            try:
                left_t = self.term()
                self.expect("=")
                right_t = self.term()
                self.expect(")")
                return eq(left_t, right_t)
            except ParseError:
                self.i = mark
            left = self.wff()
            op = self.take()
            node = _BIN_NODES.get(op.text)
            if node is None:
                raise ParseError(
                    f"expected a binary connective, found {op.text!r}", op.pos)
            right = self.wff()
            self.expect(")")
            return node(left, right)
        raise ParseError(f"expected a formula, found {tok.text!r}", tok.pos)

    def _variable(self) -> int:
        tok = self.take()
        m = _VAR_RE.match(tok.text)
        if m is None:
            raise ParseError(f"expected a variable, found {tok.text!r}", tok.pos)
        return self._index(m.group(1), tok.pos)

    def finish(self) -> None:
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected trailing input {tok.text!r}", tok.pos)


def parse_wff(text: str) -> SurfaceWff:
    """Parse a formula; abbreviations are kept as surface nodes."""
    p = _Parser(_lex(text), len(text))
    w = p.wff()
    p.finish()
    return w


def parse_term(text: str) -> Term:
    p = _Parser(_lex(text), len(text))
    t = p.term()
    p.finish()
    return t


def parse_core(text: str) -> Wff:
    """Parse and lower in one step."""
    return lower(parse_wff(text))


# ---------------------------------------------------------------------------
# printer


def print_term(t: Term) -> str:
    if isinstance(t, Var):
        return f"x{t.index}"
    if isinstance(t, Const):
        return "0" if t.index == 1 else f"a{t.index}"
    if isinstance(t, FuncApp):
        sig = (t.letter, t.arity)
        if sig == (1, 1):
            return f"S({print_term(t.args[0])})"
        if sig == (1, 2):
            return f"({print_term(t.args[0])} + {print_term(t.args[1])})"
        if sig == (2, 2):
            return f"({print_term(t.args[0])} * {print_term(t.args[1])})"
        inner = ", ".join(print_term(a) for a in t.args)
        return f"f{{{t.letter},{t.arity}}}({inner})"
    raise TypeError(f"not a term: {t!r}")


def print_wff(w: SurfaceWff, resugar: bool = False) -> str:
    """Render a formula so that parsing the output reproduces it.

    With ``resugar`` the printer folds recognizable expansion patterns back
    into ex/&/|/<-> for display; reparsing and lowering still yields the
    original core formula.
    """

    def p(w: SurfaceWff) -> str:
        if resugar:
            s = _print_resugared(w, p)
            if s is not None:
                return s
        if isinstance(w, Atom):
            if w.letter == 1 and w.arity == 2:
                return f"({print_term(w.terms[0])} = {print_term(w.terms[1])})"
            inner = ", ".join(print_term(t) for t in w.terms)
            return f"A{{{w.letter},{w.arity}}}({inner})"
        if isinstance(w, Not):
            return f"~{p(w.body)}"
        if isinstance(w, Implies):
            return f"({p(w.antecedent)} -> {p(w.consequent)})"
        if isinstance(w, ForAll):
            return f"(all x{w.var} {p(w.body)})"
        if isinstance(w, Exists):
            return f"(ex x{w.var} {p(w.body)})"
        if isinstance(w, And):
            return f"({p(w.left)} & {p(w.right)})"
        if isinstance(w, Or):
            return f"({p(w.left)} | {p(w.right)})"
        if isinstance(w, Iff):
            return f"({p(w.left)} <-> {p(w.right)})"
        raise TypeError(f"not a formula: {w!r}")

    return p(w)


def _print_resugared(w: SurfaceWff, p: Callable) -> Optional[str]:
    # ~(all v ~A)  prints as  (ex v A)
    if isinstance(w, Not) and isinstance(w.body, ForAll) and isinstance(w.body.body, Not):
        return f"(ex x{w.body.var} {p(w.body.body.body)})"
    if isinstance(w, Not) and isinstance(w.body, Implies):
        ante, cons = w.body.antecedent, w.body.consequent
        # ~((A -> B) -> ~(B -> A))  prints as  (A <-> B)
        if (isinstance(ante, Implies) and isinstance(cons, Not)
                and isinstance(cons.body, Implies)
                and ante.antecedent == cons.body.consequent
                and ante.consequent == cons.body.antecedent):
            return f"({p(ante.antecedent)} <-> {p(ante.consequent)})"
        # ~(A -> ~B)  prints as  (A & B)
        if isinstance(cons, Not):
            return f"({p(ante)} & {p(cons.body)})"
    # (~A -> B)  prints as  (A | B)
    if isinstance(w, Implies) and isinstance(w.antecedent, Not):
        return f"({p(w.antecedent.body)} | {p(w.consequent)})"
    return None
