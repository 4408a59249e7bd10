"""Hilbert systems for RL and BAL and a proof-script checker.

The checker is deliberately dumb: every rule application is a literal
structural check against fully written-out lines, and the only
instantiation mechanism is the ``lemma`` justification, which matches a
registered theorem's assumption patterns against the cited lines and
its conclusion pattern against the stated formula.  There is no
unification search in the trusted core.

Systems:

* RL has axioms R1a R1b R2 R3 R4 R5a R5b R6a R6b and rules

      mp:  from x and x -> y infer y
      ri:  from x -> y infer x \\/ c -> y \\/ c

* BAL has axioms BALB BALC BALN BALP BALO and rules

      mp:    from x and x -> y infer y
      balg:  from x and y infer x -> y
      balpi: from x infer x ^+
      balmi: from (x -> y) ^+ infer (x ^+ -> y ^+) ^+

Proof scripts may be schematic: assumption formulas and lines may
contain metavariables, which behave as opaque constants during
checking and are instantiated only when the proof is later applied via
``lemma``.

Proof file format (one proof per file, ``#`` comments allowed)::

    system: RL
    name: SOME_NAME
    assume 1: <formula>
    1: <formula> | assume 1
    2: <formula> | axiom R1a
    3: <formula> | mp 1 2
    qed: 3

Justifications: ``axiom <NAME>``, ``assume <k>``, ``mp <i> <j>``,
``ri <i>``, ``balg <i> <j>``, ``balpi <i>``, ``balmi <i>``,
``lemma <name> <i...>``.  Line indices are 1-based and strictly
increasing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from typing import Optional, Union

from .syntax import (
    Formula,
    Imp,
    Join,
    MetaVar,
    Pos,
    Substitution,
    Zero,
    format_formula,
    match_schema,
    parse_schema,
    substitute,
)


def _schemas(system: str, table: dict[str, str]) -> dict[str, Formula]:
    return {name: parse_schema(text, system) for name, text in table.items()}


RL_AXIOMS: dict[str, Formula] = _schemas(
    "RL",
    {
        "R1a": "(PHI -> PSI) -> (PSI -> CHI) -> PHI -> CHI",
        "R1b": "((PSI -> CHI) -> PHI -> CHI) -> PHI -> PSI",
        "R2": "PHI -> PHI \\/ PSI",
        "R3": "PHI \\/ PSI -> PSI \\/ PHI",
        "R4": "(PHI \\/ PSI) \\/ PSI -> PHI \\/ PSI",
        "R5a": "0 -> PHI -> PHI",
        "R5b": "(PHI -> PHI) -> 0",
        "R6a": "((PHI -> PSI) \\/ 0 -> (PSI -> PHI) \\/ 0) -> PSI -> PHI",
        "R6b": "(PSI -> PHI) -> (PHI -> PSI) \\/ 0 -> (PSI -> PHI) \\/ 0",
    },
)

BAL_AXIOMS: dict[str, Formula] = _schemas(
    "BAL",
    {
        "BALB": "(PHI -> PSI) -> (CHI -> PHI) -> CHI -> PSI",
        "BALC": "(PHI -> PSI -> CHI) -> PSI -> PHI -> CHI",
        "BALN": "((PHI -> PSI) -> PSI) -> PHI",
        "BALP": "PHI ^+ ^+ -> PHI ^+",
        "BALO": "((PSI -> PHI) ^+ -> (PHI -> PSI) ^+) -> PHI -> PSI",
    },
)

AXIOM_TABLES: dict[str, dict[str, Formula]] = {"RL": RL_AXIOMS, "BAL": BAL_AXIOMS}


# ---------------------------------------------------------------------------
# proofs

@dataclass(frozen=True)
class Assume:
    index: int


@dataclass(frozen=True)
class Axiom:
    name: str


@dataclass(frozen=True)
class Mp:
    minor: int
    major: int


@dataclass(frozen=True)
class Ri:
    premise: int


@dataclass(frozen=True)
class BalG:
    left: int
    right: int


@dataclass(frozen=True)
class BalPi:
    premise: int


@dataclass(frozen=True)
class BalMi:
    premise: int


@dataclass(frozen=True)
class Lemma:
    name: str
    premises: tuple[int, ...] = ()


Justification = Union[Assume, Axiom, Mp, Ri, BalG, BalPi, BalMi, Lemma]

_RL_RULES = (Assume, Axiom, Mp, Ri, Lemma)
_BAL_RULES = (Assume, Axiom, Mp, BalG, BalPi, BalMi, Lemma)


@dataclass(frozen=True)
class ProofLine:
    index: int
    formula: Formula
    justification: Justification


@dataclass(frozen=True)
class Proof:
    system: str
    name: str
    assumptions: tuple[Formula, ...]
    lines: tuple[ProofLine, ...]
    conclusion: int

    def line(self, index: int) -> ProofLine:
        for ln in self.lines:
            if ln.index == index:
                return ln
        raise KeyError(index)

    @property
    def conclusion_formula(self) -> Formula:
        return self.line(self.conclusion).formula


@dataclass(frozen=True)
class LineStatus:
    index: int
    ok: bool
    message: str = ""


@dataclass(frozen=True)
class CheckReport:
    proof_name: str
    statuses: tuple[LineStatus, ...]
    accepted: bool

    @property
    def first_error(self) -> Optional[LineStatus]:
        for status in self.statuses:
            if not status.ok:
                return status
        return None

    def summary(self) -> str:
        if self.accepted:
            return f"OK ({len(self.statuses)} lines)"
        bad = self.first_error
        assert bad is not None
        return f"REJECTED at line {bad.index}: {bad.message}"


class ProofFormatError(Exception):
    """Malformed proof file."""


class RegistrationError(Exception):
    """Refused theorem-library registration."""


class TheoremLibrary:
    """Checked proofs addressable by name.

    Assumption-free entries are theorems; entries with assumptions are
    derived rules.  Entries can only cite previously registered names,
    so lemma references are acyclic by construction.
    """

    def __init__(self, entries: Optional[dict[str, Proof]] = None):
        self._entries: dict[str, Proof] = dict(entries) if entries else {}

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, name: str) -> Optional[Proof]:
        return self._entries.get(name)

    def names(self) -> tuple[str, ...]:
        return tuple(self._entries)

    def register(self, proof: Proof) -> "TheoremLibrary":
        existing = self._entries.get(proof.name)
        if existing is not None:
            if existing == proof:
                return self
            raise RegistrationError(f"name {proof.name!r} already registered with different content")
        report = check_proof(proof, self)
        if not report.accepted:
            raise RegistrationError(f"proof {proof.name!r} rejected: {report.summary()}")
        entries = dict(self._entries)
        entries[proof.name] = proof
        return TheoremLibrary(entries)


def register_theorem(library: TheoremLibrary, proof: Proof) -> TheoremLibrary:
    """Add a checked proof to the library; identical re-registration is a no-op."""
    return library.register(proof)


# ---------------------------------------------------------------------------
# checking

def _match_or_explain(
    schema: Formula, target: Formula, bindings: Optional[Substitution] = None
) -> tuple[Optional[Substitution], str]:
    """Match and, on failure, name the first conflicting metavariable."""
    out = match_schema(schema, target, bindings)
    if out is not None:
        return out, ""
    conflict = _first_conflict(schema, target, dict(bindings) if bindings else {})
    if conflict:
        return None, f"metavariable {conflict} is bound inconsistently"
    return None, "shape mismatch"


def _first_conflict(schema: Formula, target: Formula, bindings: Substitution) -> Optional[str]:
    if isinstance(schema, MetaVar):
        bound = bindings.get(schema.name)
        if bound is None:
            bindings[schema.name] = target
            return None
        return schema.name if bound != target else None
    pairs: tuple[tuple[Formula, Formula], ...]
    if isinstance(schema, Imp) and isinstance(target, Imp):
        pairs = ((schema.left, target.left), (schema.right, target.right))
    elif isinstance(schema, Join) and isinstance(target, Join):
        pairs = ((schema.left, target.left), (schema.right, target.right))
    elif isinstance(schema, Pos) and isinstance(target, Pos):
        pairs = ((schema.inner, target.inner),)
    else:
        return None
    for s, t in pairs:
        conflict = _first_conflict(s, t, bindings)
        if conflict:
            return conflict
    return None


def check_line(
    proof: Proof,
    position: int,
    checked: dict[int, Formula],
    library: Optional[TheoremLibrary],
) -> Optional[str]:
    """Check one line against the already-checked prefix.

    ``checked`` maps the indices of accepted earlier lines to their
    formulas.  Returns None when the line is justified, otherwise an
    error message.
    """
    line = proof.lines[position]
    just = line.justification
    formula = line.formula
    allowed = _RL_RULES if proof.system == "RL" else _BAL_RULES
    if not isinstance(just, allowed):
        return f"rule {type(just).__name__.lower()} is not part of {proof.system}"

    def cited(idx: int) -> Union[Formula, str]:
        if idx >= line.index:
            return f"citation of line {idx} is not backward"
        if idx not in checked:
            return f"cited line {idx} does not exist or failed"
        return checked[idx]

    if isinstance(just, Assume):
        if not 1 <= just.index <= len(proof.assumptions):
            return f"no assumption {just.index}"
        if formula != proof.assumptions[just.index - 1]:
            return f"formula differs from assumption {just.index}"
        return None

    if isinstance(just, Axiom):
        table = AXIOM_TABLES[proof.system]
        schema = table.get(just.name)
        if schema is None:
            return f"unknown axiom {just.name!r} in {proof.system}"
        subst, why = _match_or_explain(schema, formula)
        if subst is None:
            return f"not an instance of {just.name}: {why}"
        return None

    if isinstance(just, Mp):
        minor, major = cited(just.minor), cited(just.major)
        if isinstance(minor, str):
            return minor
        if isinstance(major, str):
            return major
        if major != Imp(minor, formula):
            return (
                f"line {just.major} is not (line {just.minor}) -> (this formula): "
                f"expected {format_formula(Imp(minor, formula))}"
            )
        return None

    if isinstance(just, Ri):
        premise = cited(just.premise)
        if isinstance(premise, str):
            return premise
        if not isinstance(premise, Imp):
            return f"line {just.premise} is not an implication"
        if not (isinstance(formula, Imp) and isinstance(formula.left, Join) and isinstance(formula.right, Join)):
            return "formula does not have shape a \\/ c -> b \\/ c"
        if formula.left.right != formula.right.right:
            return "join tails differ"
        if formula.left.left != premise.left or formula.right.left != premise.right:
            return f"heads do not come from line {just.premise}"
        return None

    if isinstance(just, BalG):
        left, right = cited(just.left), cited(just.right)
        if isinstance(left, str):
            return left
        if isinstance(right, str):
            return right
        if formula != Imp(left, right):
            return f"formula is not (line {just.left}) -> (line {just.right})"
        return None

    if isinstance(just, BalPi):
        premise = cited(just.premise)
        if isinstance(premise, str):
            return premise
        if formula != Pos(premise):
            return f"formula is not (line {just.premise}) ^+"
        return None

    if isinstance(just, BalMi):
        premise = cited(just.premise)
        if isinstance(premise, str):
            return premise
        if not (isinstance(premise, Pos) and isinstance(premise.inner, Imp)):
            return f"line {just.premise} does not have shape (a -> b) ^+"
        a, b = premise.inner.left, premise.inner.right
        if formula != Pos(Imp(Pos(a), Pos(b))):
            return f"formula is not (a ^+ -> b ^+) ^+ for line {just.premise}"
        return None

    if isinstance(just, Lemma):
        if library is None or just.name not in library:
            return f"unknown lemma {just.name!r}"
        entry = library.get(just.name)
        assert entry is not None
        if entry.system != proof.system:
            return f"lemma {just.name!r} belongs to {entry.system}"
        if len(just.premises) != len(entry.assumptions):
            return (
                f"lemma {just.name!r} needs {len(entry.assumptions)} premises, "
                f"{len(just.premises)} cited"
            )
        subst: Optional[Substitution] = {}
        for k, (pattern, idx) in enumerate(zip(entry.assumptions, just.premises), start=1):
            target = cited(idx)
            if isinstance(target, str):
                return target
            subst, why = _match_or_explain(pattern, target, subst)
            if subst is None:
                return f"premise {k} does not match assumption of {just.name!r}: {why}"
        subst, why = _match_or_explain(entry.conclusion_formula, formula, subst)
        if subst is None:
            return f"formula does not match conclusion of {just.name!r}: {why}"
        return None

    return f"unknown justification {just!r}"


def check_proof(proof: Proof, library: Optional[TheoremLibrary] = None) -> CheckReport:
    """Replay a proof script; the report carries per-line statuses."""
    statuses: list[LineStatus] = []
    checked: dict[int, Formula] = {}
    ok_all = True
    if proof.system not in AXIOM_TABLES:
        return CheckReport(proof.name, (LineStatus(0, False, f"unknown system {proof.system!r}"),), False)
    previous = 0
    for position, line in enumerate(proof.lines):
        if line.index <= previous:
            statuses.append(LineStatus(line.index, False, "line indices must be strictly increasing"))
            ok_all = False
            break
        previous = line.index
        error = check_line(proof, position, checked, library)
        if error is None:
            statuses.append(LineStatus(line.index, True))
            checked[line.index] = line.formula
        else:
            statuses.append(LineStatus(line.index, False, error))
            ok_all = False
    if ok_all and proof.conclusion not in checked:
        statuses.append(LineStatus(proof.conclusion, False, "conclusion index is not a checked line"))
        ok_all = False
    return CheckReport(proof.name, tuple(statuses), ok_all)


# ---------------------------------------------------------------------------
# proof file format

def parse_proof(text: str) -> Proof:
    system = ""
    name = ""
    assumptions: list[Formula] = []
    lines: list[ProofLine] = []
    conclusion: Optional[int] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue

        def err(msg: str) -> ProofFormatError:
            return ProofFormatError(f"line {lineno}: {msg}")

        if stripped.startswith("system:"):
            system = stripped.partition(":")[2].strip()
            continue
        if stripped.startswith("name:"):
            name = stripped.partition(":")[2].strip()
            continue
        if stripped.startswith("assume "):
            head, _, formula_text = stripped.partition(":")
            if not formula_text:
                raise err("assumption needs `assume <k>: <formula>`")
            k_text = head[len("assume "):].strip()
            if not k_text.isdigit() or int(k_text) != len(assumptions) + 1:
                raise err(f"assumption index must be {len(assumptions) + 1}")
            if not system:
                raise err("system must be declared before assumptions")
            assumptions.append(parse_schema(formula_text.strip(), system))
            continue
        if stripped.startswith("qed:"):
            value = stripped.partition(":")[2].strip()
            if not value.isdigit():
                raise err("qed needs a line index")
            conclusion = int(value)
            continue
        head, sep, just_text = stripped.rpartition("|")
        if not sep:
            raise err("proof line needs `<index>: <formula> | <justification>`")
        idx_text, sep2, formula_text = head.partition(":")
        if not sep2 or not idx_text.strip().isdigit():
            raise err("proof line needs a numeric index before `:`")
        if not system:
            raise err("system must be declared before proof lines")
        index = int(idx_text.strip())
        formula = parse_schema(formula_text.strip(), system)
        lines.append(ProofLine(index, formula, _parse_justification(just_text.strip(), lineno)))
    if not system:
        raise ProofFormatError("missing `system:` header")
    if not name:
        raise ProofFormatError("missing `name:` header")
    if not lines:
        raise ProofFormatError("proof has no lines")
    if conclusion is None:
        raise ProofFormatError("missing `qed:` footer")
    return Proof(system, name, tuple(assumptions), tuple(lines), conclusion)


def _parse_justification(text: str, lineno: int) -> Justification:
    parts = text.split()

    def err(msg: str) -> ProofFormatError:
        return ProofFormatError(f"line {lineno}: {msg}")

    if not parts:
        raise err("empty justification")
    head, args = parts[0], parts[1:]
    if head == "axiom":
        if len(args) != 1:
            raise err("axiom needs one name")
        return Axiom(args[0])
    if head == "assume":
        if len(args) != 1 or not args[0].isdigit():
            raise err("assume needs one index")
        return Assume(int(args[0]))
    if head == "lemma":
        if not args:
            raise err("lemma needs a name")
        if not all(a.isdigit() for a in args[1:]):
            raise err("lemma premises must be line indices")
        return Lemma(args[0], tuple(int(a) for a in args[1:]))
    if not all(a.isdigit() for a in args):
        raise err(f"{head} arguments must be line indices")
    indices = tuple(int(a) for a in args)
    shapes: dict[str, tuple[int, type]] = {
        "mp": (2, Mp),
        "ri": (1, Ri),
        "balg": (2, BalG),
        "balpi": (1, BalPi),
        "balmi": (1, BalMi),
    }
    if head not in shapes:
        raise err(f"unknown justification {head!r}")
    arity, cls = shapes[head]
    if len(indices) != arity:
        raise err(f"{head} needs {arity} line indices")
    return cls(*indices)


def format_justification(just: Justification) -> str:
    if isinstance(just, Assume):
        return f"assume {just.index}"
    if isinstance(just, Axiom):
        return f"axiom {just.name}"
    if isinstance(just, Mp):
        return f"mp {just.minor} {just.major}"
    if isinstance(just, Ri):
        return f"ri {just.premise}"
    if isinstance(just, BalG):
        return f"balg {just.left} {just.right}"
    if isinstance(just, BalPi):
        return f"balpi {just.premise}"
    if isinstance(just, BalMi):
        return f"balmi {just.premise}"
    if isinstance(just, Lemma):
        return " ".join(["lemma", just.name, *map(str, just.premises)])
    raise TypeError(f"unknown justification {just!r}")


def format_proof(proof: Proof, header: str = "") -> str:
    out: list[str] = []
    if header:
        out.extend(f"# {line}".rstrip() for line in header.splitlines())
    out.append(f"system: {proof.system}")
    out.append(f"name: {proof.name}")
    for k, assumption in enumerate(proof.assumptions, start=1):
        out.append(f"assume {k}: {format_formula(assumption)}")
    width = len(str(proof.lines[-1].index))
    for line in proof.lines:
        out.append(
            f"{str(line.index).rjust(width)}: {format_formula(line.formula)}"
            f" | {format_justification(line.justification)}"
        )
    out.append(f"qed: {proof.conclusion}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# shipped corpus

#: names in registration (dependency) order
CORPUS_NAMES: tuple[str, ...] = (
    "balmp_plus",
    "balmp_minus",
    "balpi_plus",
    "balpi_minus",
    "balg_plus",
    "balg_minus",
    "balmi_plus",
    "balmi_part1",
    "balmi_part2",
    "balmi_part3",
    "balb_plus",
    "balb_minus",
    "balc",
    "baln_plus",
    "baln_minus",
    "balp_plus",
    "balp_minus",
    "asserting_positivity",
)


def corpus_text(stem: str) -> str:
    """Raw text of a shipped proof script."""
    return (resources.files(__package__) / "corpus" / f"{stem}.rlproof").read_text("utf-8")


def load_corpus(library: Optional[TheoremLibrary] = None) -> TheoremLibrary:
    """Check and register every shipped proof script, in dependency order."""
    lib = library if library is not None else TheoremLibrary()
    for stem in CORPUS_NAMES:
        lib = lib.register(parse_proof(corpus_text(stem)))
    return lib
