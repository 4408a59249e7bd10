"""Acceptance suite: one test per criterion, printed as a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import itertools
import random
import time
from fractions import Fraction

from rieszlogic.bridge import RESERVED_ZERO_VAR, bal_to_rl, rl_to_bal
from rieszlogic.decide import CounterExample, Valid, decide_equal, decide_valid, linearize
from rieszlogic.distrib import entails, entails_witness, join, load_word_counts, meet
from rieszlogic.fuzzy import logistic, t_lukasiewicz, t_riesz
from rieszlogic.kernel import (
    CORPUS_NAMES,
    Mp,
    Proof,
    ProofLine,
    RL_AXIOMS,
    TheoremLibrary,
    check_proof,
    corpus_text,
    parse_proof,
)
from rieszlogic.semantics import Valuation, eval_rl, holds_bal, holds_rl, random_falsify, vector
from rieszlogic.syntax import Imp, Var, parse_rl, substitute, variables
from util import random_bal_formula, random_rl_formula, random_valuation

FRESH = {"PHI": Var("p"), "PSI": Var("q"), "CHI": Var("r"), "OMEGA": Var("s")}


def report(number: int, text: str) -> None:
    print(f"PASS criterion {number}: {text}")


def test_criterion_1_axiom_validity_suite():
    start = time.perf_counter()
    for name, schema in RL_AXIOMS.items():
        verdict = decide_valid(substitute(schema, FRESH))
        assert isinstance(verdict, Valid), name
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"axiom suite took {elapsed:.3f}s"
    report(1, f"9 RL axiom schemas decide Valid in {elapsed * 1000:.1f} ms")


def _mutate_formula(proof: Proof, position: int) -> Proof:
    line = proof.lines[position]
    lines = list(proof.lines)
    lines[position] = ProofLine(line.index, Imp(line.formula, line.formula), line.justification)
    return Proof(proof.system, proof.name, proof.assumptions, tuple(lines), proof.conclusion)


def _mutate_justification(proof: Proof, position: int) -> Proof:
    line = proof.lines[position]
    lines = list(proof.lines)
    lines[position] = ProofLine(line.index, line.formula, Mp(line.index, line.index))
    return Proof(proof.system, proof.name, proof.assumptions, tuple(lines), proof.conclusion)


def test_criterion_2_proof_corpus_replay():
    start = time.perf_counter()
    library = TheoremLibrary()
    proofs = {}
    for stem in CORPUS_NAMES:
        proof = parse_proof(corpus_text(stem))
        report_ = check_proof(proof, library)
        assert report_.accepted, f"{stem}: {report_.summary()}"
        proofs[stem] = (proof, library)
        library = library.register(proof)
    mutations = 0
    for stem, (proof, lib_before) in proofs.items():
        for position in range(len(proof.lines)):
            for mutate in (_mutate_formula, _mutate_justification):
                mutated = mutate(proof, position)
                result = check_proof(mutated, lib_before)
                assert not result.accepted, f"{stem} line {position + 1} {mutate.__name__}"
                status = result.statuses[position]
                assert not status.ok, (
                    f"{stem}: {mutate.__name__} at line {proof.lines[position].index} "
                    "was not rejected at that line"
                )
                mutations += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 2.0, f"corpus replay took {elapsed:.3f}s"
    report(
        2,
        f"{len(CORPUS_NAMES)} scripts replay; {mutations} single-line mutations "
        f"all rejected at the mutated line in {elapsed:.2f} s",
    )


def test_criterion_3_decide_vs_falsifier():
    start = time.perf_counter()
    rng = random.Random(2024)
    valid_count = 0
    for k in range(1000):
        f = random_rl_formula(rng, max_connectives=12, max_vars=4)
        verdict = decide_valid(f)
        if isinstance(verdict, Valid):
            valid_count += 1
            witness = random_falsify(f, trials=10_000, dimension=1, seed=k)
            assert witness is None, f"falsifier refuted a Valid verdict on formula {k}"
        else:
            assert not holds_rl(f, verdict.valuation), f"unconfirmed countermodel on formula {k}"
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"cross-check took {elapsed:.1f}s"
    report(
        3,
        f"1000 formulas, zero disagreements ({valid_count} valid, "
        f"{1000 - valid_count} refuted) in {elapsed:.1f} s",
    )


def test_criterion_4_normal_form_equivalence():
    rng = random.Random(2025)
    for _ in range(1000):
        f = random_rl_formula(rng, max_connectives=12, max_vars=4)
        nf = linearize(f)
        for _ in range(20):
            v = random_valuation(rng, variables(f), dimension=1, bound=8)
            assert nf.eval_vector(v) == eval_rl(f, v)
    report(4, "linearize output evaluates exactly like the formula on 1000 x 20 samples")


def test_criterion_5_decomposition_identity():
    x = parse_rl("x")
    difference = parse_rl("((x -> 0) \\/ 0) -> x \\/ 0")  # x^+ - x^-
    assert isinstance(decide_equal(x, difference), Valid)
    assert isinstance(decide_equal(difference, x), Valid)
    report(5, "x equals x^+ - x^- in both directions")


def test_criterion_6_bridge_equivalence():
    rng = random.Random(2026)
    for k in range(200):
        f = random_rl_formula(rng, max_connectives=10)
        translated = rl_to_bal(f)
        names = variables(f) | {RESERVED_ZERO_VAR}
        for _ in range(100):
            v = random_valuation(rng, names, dimension=1, bound=8)
            assert holds_rl(f, v) == holds_bal(translated, v), f"forward formula {k}"
    for k in range(200):
        g = random_bal_formula(rng, max_connectives=10)
        pair = bal_to_rl(g)
        for _ in range(100):
            v = random_valuation(rng, variables(g), dimension=1, bound=8)
            both = holds_rl(pair.first, v) and holds_rl(pair.second, v)
            assert holds_bal(g, v) == both, f"backward formula {k}"
    report(6, "400 formulas x 100 valuations, zero translation discrepancies")


def test_criterion_7_fuzzy_homomorphism():
    worst = 0.0
    for i in range(61):
        x = -15.0 + i * 0.5
        for j in range(61):
            y = -15.0 + j * 0.5
            gap = abs(t_riesz(logistic(x), logistic(y)) - logistic(x + y))
            worst = max(worst, gap)
            assert gap <= 1e-9, (x, y, gap)
            # Lukasiewicz identity law is exact on the same grid
            a = logistic(x)
            assert t_lukasiewicz(a, 1.0) == a
    for k in range(1, 10):
        assert t_riesz(k / 10.0, 1.0) == 1.0
    report(7, f"addition carries over exactly (worst gap {worst:.2e} <= 1e-9)")


def test_criterion_8_count_fixture():
    counts = load_word_counts()
    assert meet(counts, "orange", "fruit") == vector(0, 1, 1, 0, 0, 3, 0, 3)
    assert not entails(counts, "orange", "fruit")
    assert entails_witness(counts, "orange", "fruit") == ("d6", Fraction(7), Fraction(3))
    pairs = list(itertools.combinations(counts.terms, 2))
    assert len(pairs) == 15
    for t1, t2 in pairs:
        low, high = meet(counts, t1, t2), join(counts, t1, t2)
        row1, row2 = counts.row(t1), counts.row(t2)
        assert all(a <= b for a, b in zip(low, row1))
        assert all(a <= b for a, b in zip(low, row2))
        assert all(a <= b for a, b in zip(row1, high))
        assert all(a <= b for a, b in zip(row2, high))
        assert tuple(min(a, b) for a, b in zip(row1, high)) == row1  # absorption
        assert tuple(max(a, b) for a, b in zip(row1, low)) == row1
    report(8, "fixture lattice checks hold over all 15 term pairs, d6 witness reported")
