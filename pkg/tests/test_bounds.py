from importlib import resources

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramsey_bounds import derive, explain, load_table, materialize, verify
from ramsey_bounds.bounds import (
    BoundFact,
    DerivationTree,
    DeriveOptions,
    TableEntry,
    Theorem1Step,
    Theorem2Step,
    TrivialReduction,
    facts_from_witnesses,
    parse_table,
    recheck_explanation,
)
from ramsey_bounds.catalog import seed
from ramsey_bounds.errors import InvalidBound, MissingWitness, NoBoundDerivable, ParseError, TargetInvalid

SAMPLE = resources.files("ramsey_bounds").joinpath("data", "known_bounds.txt")


@pytest.fixture(scope="module")
def sample():
    return load_table(SAMPLE)


def test_parse_lines():
    facts = parse_table("3,3;6\n# comment\n\n4,4,4,4;458  # survey\n")
    assert [(f.vector, f.lower_bound) for f in facts] == [((3, 3), 6), ((4, 4, 4, 4), 458)]
    assert facts[1].provenance == TableEntry("survey")
    assert parse_table("9,3,3;110")[0].vector == (3, 3, 9)


@pytest.mark.parametrize("line", ["3,;x", "3,3", "a;5", "3,3;"])
def test_parse_errors(line):
    with pytest.raises(ParseError) as err:
        parse_table("3,3;6\n" + line)
    assert err.value.line == 2


@pytest.mark.parametrize("line", ["1,3;5", "3,3;1"])
def test_invalid_bounds(line):
    with pytest.raises(InvalidBound):
        parse_table(line)


@pytest.mark.parametrize(
    "target,expected",
    [((4, 4, 4, 4, 4), 1372), ((5, 5, 5, 5, 5), 7329), ((6, 6, 6, 6), 5346), ((7, 7, 7, 7), 19261), ((3, 3, 3, 11), 437)],
)
def test_paper_examples(sample, target, expected):
    tree = derive(target, sample)
    assert tree.lower_bound == expected
    tree.check()


def test_paper_example_provenance(sample):
    root = derive((4, 4, 4, 4, 4), sample).root
    assert root.provenance == Theorem1Step(4, root.sub) and root.sub.lower_bound == 458
    root = derive((11, 3, 3, 3), sample).root
    assert isinstance(root.provenance, Theorem2Step)
    assert (root.provenance.k1, root.provenance.k2, root.sub.vector) == (3, 11, (3, 3, 9))


def test_trivial_reductions():
    assert derive((5,), []).lower_bound == 5
    table = parse_table("3,4;9")
    assert derive((2, 4, 3), table).lower_bound == derive((3, 4), table).lower_bound == 9
    root = derive((2, 3), parse_table("3;3")).root
    assert root.lower_bound == 3 and root.provenance.rule == "drop-2"


def test_theorem1_needs_three_colors():
    # R(3,3) is not derived from R(3) alone
    with pytest.raises(NoBoundDerivable):
        derive((3, 3), [])


def test_errors():
    with pytest.raises(TargetInvalid):
        derive((1, 3), [])
    with pytest.raises(TargetInvalid):
        derive((), [])


def test_table_fact_wins_when_larger():
    table = parse_table("3,3;6\n3,3,3;17")
    assert derive((3, 3, 3), table).lower_bound == 17
    assert derive((3, 3, 3), parse_table("3,3;6\n3,3,3;9")).lower_bound == 11


def test_tie_prefers_shallower():
    # both the table and theorem 1 give 11; the table leaf is shallower
    root = derive((3, 3, 3), parse_table("3,3;6\n3,3,3;11")).root
    assert isinstance(root.provenance, TableEntry)


def test_explain_two_lines(sample):
    text = explain(derive((4, 4, 4, 4, 4), sample))
    lines = text.splitlines()
    assert len(lines) == 2
    assert "(4-1)*(458-1)+1 = 1372" in lines[0]
    assert lines[1].startswith("  R(4,4,4,4) >= 458")
    assert recheck_explanation(text)


def test_explain_nested_depth():
    table = parse_table("3,3,9;110")
    tree = derive((3, 3, 3, 3, 11), table)
    lines = explain(tree).splitlines()
    assert tree.root.provenance.__class__ is Theorem1Step
    assert tree.root.sub.provenance.__class__ is Theorem2Step
    assert lines[2].startswith("    R(3,3,9)")
    assert recheck_explanation(explain(tree))


def test_recheck_detects_tampering(sample):
    text = explain(derive((4, 4, 4, 4, 4), sample)).replace("= 1372", "= 1373")
    assert not recheck_explanation(text)


def test_check_detects_bad_arithmetic():
    leaf = BoundFact((3, 3), 6, TableEntry("x"))
    bad = BoundFact((3, 3, 3), 12, Theorem1Step(3, leaf))
    with pytest.raises(InvalidBound):
        DerivationTree(bad).check()


def test_materialize_r333(c5):
    tree = derive((3, 3, 3), parse_table("3,3;6"))
    assert tree.lower_bound == 11
    res = materialize(tree, {(3, 3): c5})
    assert res.coloring.n == 10 and res.claimed_bounds == (3, 3, 3)
    assert verify(res.coloring, res.claimed_bounds).certified


def test_materialize_r334_from_nothing():
    tree = derive((3, 3, 4), [])
    assert tree.lower_bound == 9
    res = materialize(tree, {})
    assert res.coloring.n == 8 and res.claimed_bounds == (3, 3, 4)
    assert verify(res.coloring, res.claimed_bounds).certified


def test_materialize_missing_witness(sample):
    with pytest.raises(MissingWitness):
        materialize(derive((4, 4, 4, 4, 4), sample), {})


def test_materialize_with_verified_seeds():
    store = {tuple(b): c for c, b in (seed("c5"), seed("wagner8"), seed("cr13"))}
    facts = facts_from_witnesses(store)
    for target in [(3, 3, 4), (3, 3, 5), (3, 4, 6), (3, 3, 3, 3), (3, 3, 3, 4), (3, 3, 3, 5)]:
        tree = derive(target, facts)
        tree.check()
        res = materialize(tree, store)
        assert res.coloring.n == tree.lower_bound - 1
        assert res.claimed_bounds == tuple(sorted(target))
        assert verify(res.coloring, res.claimed_bounds).certified, target


vectors = st.lists(st.integers(2, 8), min_size=1, max_size=5)
tables = st.lists(st.tuples(st.lists(st.integers(2, 8), min_size=2, max_size=4), st.integers(2, 200)), max_size=6)


def _facts(rows):
    return [BoundFact(tuple(sorted(v)), L, TableEntry(f"t{i}")) for i, (v, L) in enumerate(rows)]


def _try(target, facts, **opts):
    try:
        return derive(target, facts, DeriveOptions(**opts)).lower_bound
    except NoBoundDerivable:
        return None


@settings(max_examples=100, deadline=None)
@given(vectors, tables, st.randoms(use_true_random=False))
def test_permutation_invariance(target, rows, rnd):
    facts = _facts(rows)
    shuffled = list(target)
    rnd.shuffle(shuffled)
    assert _try(target, facts) == _try(shuffled, facts)


@settings(max_examples=60, deadline=None)
@given(vectors, tables, tables)
def test_monotone_in_table(target, rows, extra):
    small = _try(target, _facts(rows))
    big = _try(target, _facts(rows + extra))
    if small is not None:
        assert big is not None and big >= small


@settings(max_examples=60, deadline=None)
@given(vectors, tables)
def test_memoization_transparent(target, rows):
    facts = _facts(rows)
    assert _try(target, facts) == _try(target, facts, memoize=False)


@settings(max_examples=100, deadline=None)
@given(vectors, tables)
def test_every_node_recomputes(target, rows):
    try:
        tree = derive(target, _facts(rows))
    except NoBoundDerivable:
        return
    tree.check()
    for node in tree.nodes():
        assert node.recompute() == node.lower_bound
    assert recheck_explanation(explain(tree))


def test_trivial_reduction_node():
    node = BoundFact((2, 3), 3, TrivialReduction("drop-2", BoundFact((3,), 3, TrivialReduction("single-color"))))
    assert node.recompute() == 3 and node.depth == 1
