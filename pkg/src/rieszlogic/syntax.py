"""Formula ASTs, concrete grammar, substitution and schema matching.

Two object languages share one node algebra:

* RL formulas are built from variables, ``0``, ``->`` and ``\\/``.
  Surface sugar (``^+``, ``~``, ``(+)``, ``/\\``) is expanded at parse
  time, so an RL AST never contains a ``Pos`` node.
* BAL formulas are built from variables, ``->`` and postfix ``^+``
  (the ``Pos`` node); ``0`` and ``\\/`` are not in the language.

Schema formulas additionally allow metavariables, written as uppercase
identifiers, which stand for arbitrary formulas of the same language.

Grammar (ASCII only, ``#`` starts a comment):

    formula := imp
    imp     := join (("->" | "(+)") imp)?      right associative
    join    := post (("\\/" | "/\\") post)*    left associative
    post    := atom ("^+")*
    atom    := "0" | var | "~" atom | "(" formula ")"

``(+)`` sits at the precedence of ``->``, ``/\\`` at the precedence of
``\\/``.  Object variables match ``[a-z][a-zA-Z0-9_]*``, metavariables
``[A-Z][a-zA-Z0-9_]*``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional


class FormulaError(Exception):
    """Base class for errors raised by this module."""


class ParseError(FormulaError):
    """Syntax error carrying the byte offset and the expected token set."""

    def __init__(self, message: str, offset: int, expected: frozenset[str]):
        super().__init__(f"{message} at offset {offset} (expected: {', '.join(sorted(expected))})")
        self.offset = offset
        self.expected = expected


class SubstitutionError(FormulaError):
    """A schema metavariable has no binding in the substitution."""


class Formula:
    """Base class of all formula nodes.  Instances are immutable."""

    __slots__ = ()


@dataclass(frozen=True)
class Var(Formula):
    name: str


@dataclass(frozen=True)
class Zero(Formula):
    pass


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Join(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Pos(Formula):
    inner: Formula


@dataclass(frozen=True)
class MetaVar(Formula):
    name: str


ZERO = Zero()

#: substitution: metavariable name -> formula
Substitution = dict[str, Formula]


# ---------------------------------------------------------------------------
# tokenizer

_OPERATORS = ("->", "(+)", "\\/", "/\\", "^+", "~", "(", ")", "0")


@dataclass(frozen=True)
class _Token:
    kind: str  # operator text, "var", "meta" or "end"
    text: str
    offset: int


def _tokenize(text: str) -> Iterator[_Token]:
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c in " \t\r\n":
            i += 1
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        matched = False
        for op in _OPERATORS:
            if text.startswith(op, i):
                yield _Token(op, op, i)
                i += len(op)
                matched = True
                break
        if matched:
            continue
        if c.isalpha() and c.isascii():
            j = i + 1
            while j < n and (text[j].isalnum() and text[j].isascii() or text[j] == "_"):
                j += 1
            name = text[i:j]
            yield _Token("meta" if c.isupper() else "var", name, i)
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", i, frozenset(_OPERATORS + ("variable",)))
    yield _Token("end", "", n)


# ---------------------------------------------------------------------------
# parser

class _Parser:
    def __init__(self, text: str, lang: str, schema: bool):
        self.tokens = list(_tokenize(text))
        self.pos = 0
        self.lang = lang
        self.schema = schema

    @property
    def cur(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.cur
        self.pos += 1
        return tok

    def fail(self, expected: frozenset[str]) -> ParseError:
        tok = self.cur
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        return ParseError(f"unexpected {what}", tok.offset, expected)

    def parse(self) -> Formula:
        f = self.imp()
        if self.cur.kind != "end":
            raise self.fail(frozenset({"end of input"}))
        return f

    def imp(self) -> Formula:
        left = self.join()
        if self.cur.kind == "->":
            self.advance()
            return Imp(left, self.imp())
        if self.cur.kind == "(+)":
            if self.lang == "bal":
                raise self.fail(frozenset({"->", "end of input"}))
            self.advance()
            # x (+) y  ==  (x -> 0) -> y
            return Imp(Imp(left, ZERO), self.imp())
        return left

    def join(self) -> Formula:
        left = self.post()
        while self.cur.kind in ("\\/", "/\\"):
            if self.lang == "bal":
                raise self.fail(frozenset({"->", "end of input"}))
            op = self.advance().kind
            right = self.post()
            if op == "\\/":
                left = Join(left, right)
            else:
                # x /\ y  ==  ((x -> 0) \/ (y -> 0)) -> 0
                left = Imp(Join(Imp(left, ZERO), Imp(right, ZERO)), ZERO)
        return left

    def post(self) -> Formula:
        f = self.atom()
        while self.cur.kind == "^+":
            self.advance()
            if self.lang == "bal":
                f = Pos(f)
            else:
                # x ^+  ==  x \/ 0
                f = Join(f, ZERO)
        return f

    def atom(self) -> Formula:
        tok = self.cur
        if tok.kind == "0":
            if self.lang == "bal":
                raise self.fail(self._atom_expected())
            self.advance()
            return ZERO
        if tok.kind == "var":
            self.advance()
            return Var(tok.text)
        if tok.kind == "meta":
            if not self.schema:
                raise ParseError(
                    f"metavariable {tok.text!r} not allowed outside schemas",
                    tok.offset,
                    self._atom_expected(),
                )
            self.advance()
            return MetaVar(tok.text)
        if tok.kind == "~":
            if self.lang == "bal":
                raise self.fail(self._atom_expected())
            self.advance()
            # ~x  ==  x -> 0
            return Imp(self.atom(), ZERO)
        if tok.kind == "(":
            self.advance()
            f = self.imp()
            if self.cur.kind != ")":
                raise self.fail(frozenset({")"}))
            self.advance()
            return f
        raise self.fail(self._atom_expected())

    def _atom_expected(self) -> frozenset[str]:
        base = {"variable", "("}
        if self.schema:
            base.add("metavariable")
        if self.lang == "rl":
            base.update({"0", "~"})
        return frozenset(base)


def parse_rl(text: str) -> Formula:
    """Parse an RL formula; all sugar is expanded to ->, \\/ and 0."""
    return _Parser(text, "rl", schema=False).parse()


def parse_bal(text: str) -> Formula:
    """Parse a BAL formula; only ->, postfix ^+ and variables are allowed."""
    return _Parser(text, "bal", schema=False).parse()


def parse_rl_schema(text: str) -> Formula:
    """Parse an RL schema formula (uppercase tokens are metavariables)."""
    return _Parser(text, "rl", schema=True).parse()


def parse_bal_schema(text: str) -> Formula:
    """Parse a BAL schema formula."""
    return _Parser(text, "bal", schema=True).parse()


def parse_schema(text: str, system: str) -> Formula:
    if system == "RL":
        return parse_rl_schema(text)
    if system == "BAL":
        return parse_bal_schema(text)
    raise ValueError(f"unknown system {system!r}")


# ---------------------------------------------------------------------------
# printer

_LEVEL_IMP, _LEVEL_JOIN, _LEVEL_POS, _LEVEL_ATOM = 0, 1, 2, 3


def _level(f: Formula) -> int:
    if isinstance(f, Imp):
        return _LEVEL_IMP
    if isinstance(f, Join):
        return _LEVEL_JOIN
    if isinstance(f, Pos):
        return _LEVEL_POS
    return _LEVEL_ATOM


def _fmt(f: Formula, min_level: int) -> str:
    if isinstance(f, Var) or isinstance(f, MetaVar):
        return f.name
    if isinstance(f, Zero):
        return "0"
    if isinstance(f, Imp):
        text = f"{_fmt(f.left, _LEVEL_JOIN)} -> {_fmt(f.right, _LEVEL_IMP)}"
    elif isinstance(f, Join):
        text = f"{_fmt(f.left, _LEVEL_JOIN)} \\/ {_fmt(f.right, _LEVEL_POS)}"
    elif isinstance(f, Pos):
        text = f"{_fmt(f.inner, _LEVEL_POS)} ^+"
    else:
        raise TypeError(f"not a formula: {f!r}")
    if _level(f) < min_level:
        return f"({text})"
    return text


def format_formula(f: Formula) -> str:
    """Canonical text with minimal parentheses; reparses to the same AST."""
    return _fmt(f, _LEVEL_IMP)


# ---------------------------------------------------------------------------
# substitution and matching

def substitute(schema: Formula, subst: Substitution) -> Formula:
    """Simultaneously replace every metavariable by its image under subst."""
    if isinstance(schema, MetaVar):
        try:
            return subst[schema.name]
        except KeyError:
            raise SubstitutionError(f"no binding for metavariable {schema.name!r}") from None
    if isinstance(schema, Imp):
        return Imp(substitute(schema.left, subst), substitute(schema.right, subst))
    if isinstance(schema, Join):
        return Join(substitute(schema.left, subst), substitute(schema.right, subst))
    if isinstance(schema, Pos):
        return Pos(substitute(schema.inner, subst))
    return schema


def match_schema(
    schema: Formula,
    target: Formula,
    bindings: Optional[Substitution] = None,
) -> Optional[Substitution]:
    """One-sided pattern match: the unique subst s with substitute(schema, s)
    == target extending ``bindings``, or None.

    Matching is deterministic: the first binding of a metavariable must be
    consistent with all later occurrences.  Metavariables in ``target`` are
    treated as opaque constants.
    """
    out = dict(bindings) if bindings else {}
    if _match(schema, target, out):
        return out
    return None


def _match(schema: Formula, target: Formula, bindings: Substitution) -> bool:
    if isinstance(schema, MetaVar):
        bound = bindings.get(schema.name)
        if bound is None:
            bindings[schema.name] = target
            return True
        return bound == target
    if isinstance(schema, Var) or isinstance(schema, Zero):
        return schema == target
    if isinstance(schema, Imp) and isinstance(target, Imp):
        return _match(schema.left, target.left, bindings) and _match(schema.right, target.right, bindings)
    if isinstance(schema, Join) and isinstance(target, Join):
        return _match(schema.left, target.left, bindings) and _match(schema.right, target.right, bindings)
    if isinstance(schema, Pos) and isinstance(target, Pos):
        return _match(schema.inner, target.inner, bindings)
    return False


# ---------------------------------------------------------------------------
# structural helpers

def variables(f: Formula) -> set[str]:
    """Names of the object variables occurring in f."""
    out: set[str] = set()
    _walk_names(f, out, Var)
    return out


def metavariables(f: Formula) -> set[str]:
    """Names of the metavariables occurring in f."""
    out: set[str] = set()
    _walk_names(f, out, MetaVar)
    return out


def _walk_names(f: Formula, out: set[str], cls: type) -> None:
    if isinstance(f, cls):
        out.add(f.name)  # type: ignore[attr-defined]
    elif isinstance(f, (Imp, Join)):
        _walk_names(f.left, out, cls)
        _walk_names(f.right, out, cls)
    elif isinstance(f, Pos):
        _walk_names(f.inner, out, cls)


def is_rl(f: Formula) -> bool:
    """True iff f is a pure RL formula (no Pos nodes, no metavariables)."""
    if isinstance(f, (Pos, MetaVar)):
        return False
    if isinstance(f, (Imp, Join)):
        return is_rl(f.left) and is_rl(f.right)
    return True


def is_bal(f: Formula) -> bool:
    """True iff f is a pure BAL formula (no Zero or Join, no metavariables)."""
    if isinstance(f, (Zero, Join, MetaVar)):
        return False
    if isinstance(f, Imp):
        return is_bal(f.left) and is_bal(f.right)
    if isinstance(f, Pos):
        return is_bal(f.inner)
    return True
