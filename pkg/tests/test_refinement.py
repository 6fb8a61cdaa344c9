import random

import pytest

from corpus import all_formulas, one_at_a_time_refine, random_formula
from rnmx.formula import Atom, parse, subformula_closure
from rnmx.nmatrix import M_IPL, M_S4_PRIME
from rnmx.refinement import (
    cycle_to_markdown,
    find_validators,
    is_compatible,
    refine,
    refine_cycle,
    refine_fixpoint,
    render_trace_markdown,
    trace_to_json,
)
from rnmx.tabulation import Row, generate_table


@pytest.fixture(scope="module")
def worked_example():
    closure = subformula_closure([parse("~~(p \\/ ~p)", "IPL")])
    return generate_table(closure, M_IPL)


def row_by_id(table, rid):
    return next(r for r in table.rows if r.id == rid)


class TestCompatibility:
    def test_vacuous_when_no_tops(self):
        v = Row(1, ("F", "U", "F", "U", "U"))
        w = Row(7, ("T", "F", "T", "F", "T"))
        assert is_compatible(v, w, "T")

    def test_lost_top_breaks_compatibility(self, worked_example):
        v = row_by_id(worked_example, 3)  # (F,U,F,T,F)
        w = row_by_id(worked_example, 2)  # (F,U,F,U,T)
        assert not is_compatible(v, w, "T")

    def test_reflexive(self):
        v = Row(4, ("F", "T", "T", "F", "U"))
        assert is_compatible(v, v, "T")


class TestFindValidators:
    def test_row1_negated_atom(self, worked_example):
        assert find_validators(worked_example, row_by_id(worked_example, 1), 1) == [6, 7]

    def test_row1_root(self, worked_example):
        assert find_validators(worked_example, row_by_id(worked_example, 1), 4) == [3]

    def test_row4_unsupported(self, worked_example):
        assert find_validators(worked_example, row_by_id(worked_example, 4), 4) == []

    def test_rejects_non_middle_cell(self, worked_example):
        with pytest.raises(ValueError):
            find_validators(worked_example, row_by_id(worked_example, 1), 0)


class TestCycles:
    def test_first_cycle_removals(self, worked_example):
        after, record = refine_cycle(worked_example)
        assert record.removed == (3, 4, 6)
        assert [r.id for r in after.rows] == [1, 2, 5, 7]

    def test_second_cycle_removal(self, worked_example):
        intermediate, _ = refine_cycle(worked_example)
        final, record = refine_cycle(intermediate)
        assert record.removed == (1,)
        assert [r.id for r in final.rows] == [2, 5, 7]

    def test_third_cycle_is_fixpoint(self, worked_example):
        table = worked_example
        for _ in range(2):
            table, _ = refine_cycle(table)
        same, record = refine_cycle(table)
        assert record.removed == ()
        assert same.rows == table.rows

    def test_first_cycle_marks(self, worked_example):
        _, record = refine_cycle(worked_example)
        assert record.marks[1] == (None, (6, 7), None, (4, 5, 6, 7), (3,))
        assert record.marks[2] == (None, (7,), None, (5, 7), None)
        assert record.marks[3] == (None, (), None, None, None)
        assert record.marks[5] == (None, None, None, None, None)


class TestFixpoint:
    def test_worked_example(self, worked_example):
        final, trace = refine_fixpoint(worked_example)
        assert [r.id for r in final.rows] == [2, 5, 7]
        assert [r.values for r in final.rows] == [
            ("F", "U", "F", "U", "T"),
            ("F", "T", "T", "F", "T"),
            ("T", "F", "T", "F", "T"),
        ]
        assert len(trace.cycles) == 3
        assert trace.cycles[-1].removed == ()

    def test_atom_table_unchanged(self):
        table = generate_table(subformula_closure([Atom("p")]), M_IPL)
        final, trace = refine_fixpoint(table)
        assert final.rows == table.rows
        assert len(trace.cycles) == 1

    def test_fast_path_agrees(self, worked_example):
        final, trace = refine_fixpoint(worked_example)
        fast_final, cycles = refine(worked_example)
        assert fast_final.rows == final.rows
        assert cycles == len(trace.cycles)

    def test_rows_never_edited(self, worked_example):
        final, _ = refine_fixpoint(worked_example)
        original = {r.id: r.values for r in worked_example.rows}
        for row in final.rows:
            assert row.values == original[row.id]


class TestTraceInvariants:
    @pytest.mark.parametrize(
        "text", ["~~(p \\/ ~p)", "p \\/ ~p", "(p -> q) \\/ (q -> p)", "~~p -> ~~~~p"]
    )
    def test_unsupported_iff_removed(self, text):
        table = generate_table(subformula_closure([parse(text, "IPL")]), M_IPL)
        _, trace = refine_fixpoint(table)
        seen_removed = set()
        for record in trace.cycles:
            for rid, marks in record.marks.items():
                has_empty = any(m == () for m in marks)
                assert has_empty == (rid in record.removed)
            assert not (set(record.removed) & seen_removed)
            seen_removed |= set(record.removed)

    @pytest.mark.parametrize("text", ["~~(p \\/ ~p)", "~(p /\\ q) -> (~p \\/ ~q)"])
    def test_monotone_and_bounded(self, text):
        table = generate_table(subformula_closure([parse(text, "IPL")]), M_IPL)
        _, trace = refine_fixpoint(table)
        ids = set(r.id for r in table.rows)
        for record in trace.cycles:
            assert set(record.removed) <= ids
            ids -= set(record.removed)
        assert len(trace.cycles) <= len(table.rows)
        assert ids  # never empty

    def test_post_fixpoint_every_middle_cell_supported(self):
        for text in ("~~(p \\/ ~p)", "p \\/ ~p", "~~p -> p"):
            table = generate_table(subformula_closure([parse(text, "IPL")]), M_IPL)
            final, _ = refine_fixpoint(table)
            mid = final.matrix.values[1]
            for row in final.rows:
                for c, v in enumerate(row.values):
                    if v == mid:
                        assert find_validators(final, row, c)


class TestGreatestFixpointOrderIndependence:
    def test_random_removal_orders_small_closures(self):
        rng = random.Random(31337)
        corpus = [f for f in all_formulas(3, ("p", "q"))]
        corpus = rng.sample(corpus, 150)
        for f in corpus:
            closure = subformula_closure([f])
            if len(closure) > 6:
                continue
            table = generate_table(closure, M_IPL)
            batch = frozenset(r.id for r in refine(table)[0].rows)
            for k in range(20):
                assert one_at_a_time_refine(table, random.Random(k)) == batch

    def test_s4_orders(self):
        rng = random.Random(7)
        for _ in range(25):
            f = random_formula(rng, rng.randint(1, 3), ("p", "q"), signature="S4")
            closure = subformula_closure([f])
            if len(closure) > 6:
                continue
            table = generate_table(closure, M_S4_PRIME)
            batch = frozenset(r.id for r in refine(table)[0].rows)
            for k in range(20):
                assert one_at_a_time_refine(table, random.Random(k)) == batch


class TestNonEmptyFixpoint:
    def test_exhaustive_small_corpus(self):
        for f in all_formulas(3, ("p", "q")):
            table = generate_table(subformula_closure([f]), M_IPL)
            final, _ = refine(table)
            assert final.rows

    def test_random_s4(self):
        rng = random.Random(5150)
        for _ in range(150):
            f = random_formula(rng, rng.randint(1, 6), ("p", "q"), signature="S4")
            table = generate_table(subformula_closure([f]), M_S4_PRIME)
            final, _ = refine(table)
            assert final.rows


class TestSerialization:
    def test_cycle_markdown_symbols(self, worked_example):
        _, record = refine_cycle(worked_example)
        md = cycle_to_markdown(worked_example, record)
        assert "| (1) | × | 6, 7 | × | 4, 5, 6, 7 | 3 |" in md
        assert "| (4) | × | × | × | × | ∅ |" in md

    def test_trace_json(self, worked_example):
        _, trace = refine_fixpoint(worked_example)
        payload = trace_to_json(trace)
        assert payload["cycles"][0]["removed"] == [3, 4, 6]
        assert payload["cycles"][0]["rows"]["1"] == ["x", [6, 7], "x", [4, 5, 6, 7], [3]]
        assert payload["cycles"][-1]["removed"] == []

    def test_render_captions_in_canonical_order(self, worked_example):
        _, trace = refine_fixpoint(worked_example)
        text = render_trace_markdown(worked_example, trace)
        captions = [
            line for line in text.splitlines() if line.endswith(("table.", "cycle.", "Validators."))
        ]
        assert captions == [
            "Initial table.",
            "First cycle.",
            "Intermediate table.",
            "Second cycle.",
            "Final table.",
            "Validators.",
        ]

    def test_render_without_removals(self):
        table = generate_table(subformula_closure([Atom("p")]), M_IPL)
        _, trace = refine_fixpoint(table)
        text = render_trace_markdown(table, trace)
        assert text.count("Initial table.") == 1
        assert text.count("Final table.") == 1
        assert text.count("Validators.") == 1
