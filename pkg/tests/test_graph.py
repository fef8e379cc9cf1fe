import json
import random

import pytest

import oracles
from kaprekar import (
    DigitString,
    Encoding,
    RepdigitInput,
    StateSpaceTooLarge,
    StepLimitExceeded,
    build_graph,
    cycle_values,
    cycles_of,
    depth_of,
    encode,
    graph_to_dot,
    graph_to_json,
    make_digit_string,
    step_encoding,
    three_digit_constant,
    trace,
)


class TestBuildGraph:
    def test_base10_width3_shape(self):
        g = build_graph(10, 3)
        assert len(g.nodes) == 9  # <1> .. <9>
        assert len(g.cycles) == 1
        assert g.cycles[0].members == (Encoding(10, 3, (5,)),)
        assert max(rec.reported_depth for rec in g.nodes.values()) == 6

    def test_base2_width3_single_class(self):
        g = build_graph(2, 3)
        assert list(g.nodes) == [Encoding(2, 3, (1,))]
        rec = g.nodes[Encoding(2, 3, (1,))]
        assert rec.depth == 0
        assert rec.reported_depth == 1
        assert rec.class_size == 6

    def test_base10_width4_reaches_6174_within_7(self):
        g = build_graph(10, 4)
        assert len(g.cycles) == 1
        assert cycle_values(g, g.cycles[0])[0].value == 6174
        assert max(rec.reported_depth for rec in g.nodes.values()) == 7

    def test_depth_recurrence_and_cycle_depth_zero(self):
        for base, width in [(10, 3), (10, 4), (9, 5), (12, 2)]:
            g = build_graph(base, width)
            on_cycle = {m for c in g.cycles for m in c.members}
            for rec in g.nodes.values():
                if rec.encoding in on_cycle:
                    assert rec.depth == 0
                else:
                    assert rec.depth == g.nodes[rec.successor].depth + 1

    def test_functional_totality(self):
        for base, width in [(10, 3), (7, 4), (10, 5)]:
            g = build_graph(base, width)
            for rec in g.nodes.values():
                assert rec.successor in g.nodes
                assert rec.cycle_id == g.nodes[rec.successor].cycle_id

    def test_step_evaluations_one_per_node(self):
        g = build_graph(10, 4)
        assert g.step_evaluations == len(g.nodes) == 54

    def test_state_guard(self):
        with pytest.raises(StateSpaceTooLarge):
            build_graph(36, 9, max_states=100)


class TestTrace:
    def test_297_orbit(self):
        t = trace(make_digit_string(297, 10, 3))
        assert [v.value for v in t.values] == [297, 693, 594, 495, 495]
        assert t.kind == "fixed-point"
        assert t.cycle_length == 1

    def test_6174_orbit(self):
        t = trace(make_digit_string(6174, 10, 4))
        assert [v.value for v in t.values] == [6174, 6174]
        assert t.kind == "fixed-point"

    def test_2digit_5_cycle(self):
        t = trace(make_digit_string(9, 10, 2))
        assert [v.value for v in t.values] == [9, 81, 63, 27, 45, 9]
        assert t.kind == "cycle"
        assert t.cycle_length == 5

    def test_repdigit_reaches_zero(self):
        t = trace(make_digit_string(777, 10, 3))
        assert t.kind == "zero"
        assert t.values[-1].value == 0

    def test_step_limit(self):
        with pytest.raises(StepLimitExceeded):
            trace(make_digit_string(297, 10, 3), max_steps=2)

    def test_bad_max_steps(self):
        with pytest.raises(ValueError):
            trace(make_digit_string(297, 10, 3), max_steps=0)


class TestDepthOf:
    def test_495_reports_depth_1(self):
        g = build_graph(10, 3)
        assert depth_of(make_digit_string(495, 10, 3), g) == 1

    def test_297_reports_depth_3(self):
        g = build_graph(10, 3)
        assert depth_of(make_digit_string(297, 10, 3), g) == 3

    def test_base2_100_reports_depth_1(self):
        g = build_graph(2, 3)
        assert depth_of(DigitString(2, (1, 0, 0)), g) == 1

    def test_repdigit_rejected(self):
        g = build_graph(10, 3)
        with pytest.raises(RepdigitInput):
            depth_of(make_digit_string(777, 10, 3), g)

    def test_mismatched_graph_rejected(self):
        g = build_graph(10, 3)
        with pytest.raises(ValueError):
            depth_of(make_digit_string(17, 8, 3), g)

    def test_memoization_transparency_3digit(self):
        """Graph depths equal naive per-string walks, exhaustively."""
        for base in range(2, 13):
            g = build_graph(base, 3)
            for digits in oracles.all_strings(base, 3):
                if oracles.is_repdigit(digits):
                    continue
                n = DigitString(base, digits)
                assert depth_of(n, g) == oracles.raw_depth(digits, base)

    def test_memoization_transparency_4digit_base10(self):
        g = build_graph(10, 4)
        for digits in oracles.all_strings(10, 4):
            if oracles.is_repdigit(digits):
                continue
            assert depth_of(DigitString(10, digits), g) == oracles.raw_depth(digits, 10)


class TestCycles:
    def test_base10_width3_single_fixed_point(self):
        g = build_graph(10, 3)
        cycles = cycles_of(g)
        assert [c.length for c in cycles] == [1]
        assert cycle_values(g, cycles[0])[0].value == 495

    def test_base10_width2_five_cycle(self):
        g = build_graph(10, 2)
        cycles = cycles_of(g)
        assert [c.length for c in cycles] == [5]
        values = {v.value for v in cycle_values(g, cycles[0])}
        assert values == {9, 81, 63, 27, 45}

    def test_base10_width5_has_longer_cycle(self):
        g = build_graph(10, 5)
        assert any(c.length >= 2 for c in cycles_of(g))

    def test_cycle_soundness(self):
        """Stepping around a cycle returns to the start in exactly `length`
        steps and no earlier."""
        for base, width in [(10, 2), (10, 5), (3, 3), (9, 5), (34, 2)]:
            g = build_graph(base, width)
            for cycle in cycles_of(g):
                assert len(set(cycle.members)) == cycle.length
                for i, member in enumerate(cycle.members):
                    expected = cycle.members[(i + 1) % cycle.length]
                    assert step_encoding(member) == expected
                cur = cycle.members[0]
                for steps in range(1, cycle.length + 1):
                    cur = step_encoding(cur)
                    if cur == cycle.members[0]:
                        break
                assert steps == cycle.length

    def test_raw_cycle_values_actually_loop(self):
        rng = random.Random(37)
        for base, width in [(10, 2), (10, 5), (15, 5)]:
            g = build_graph(base, width)
            for cycle in cycles_of(g):
                values = cycle_values(g, cycle)
                for i, v in enumerate(values):
                    nxt = values[(i + 1) % len(values)]
                    assert oracles.step_digits(v.digits, base) == nxt.digits

    def test_even_base_3digit_unique_constant(self):
        for base in range(2, 57, 2):
            g = build_graph(base, 3)
            cycles = cycles_of(g)
            assert [c.length for c in cycles] == [1], base
            assert cycle_values(g, cycles[0])[0] == three_digit_constant(base)


class TestExports:
    def test_json_records_complete(self):
        g = build_graph(10, 3)
        doc = json.loads(graph_to_json(g))
        assert doc["base"] == 10 and doc["width"] == 3
        assert doc["state_count"] == 10
        assert len(doc["nodes"]) == 9
        by_enc = {rec["encoding"]: rec for rec in doc["nodes"]}
        assert by_enc["<5>"]["reported_depth"] == 1
        assert by_enc["<5>"]["class_size"] == 150
        assert by_enc["<1>"]["successor"] == "<9>"
        assert doc["cycles"] == [
            {"id": 0, "length": 1, "members": ["<5>"], "values": [[4, 9, 5]]}
        ]

    def test_dot_has_nodes_and_labeled_edges(self):
        g = build_graph(4, 3)
        dot = graph_to_dot(g)
        assert dot.startswith('digraph "kaprekar_b4_n3" {')
        assert '"<1>" -> "<3>" [label="18"];' in dot
        assert '"<2>" -> "<2>" [label="24"];' in dot
        assert "doublecircle" in dot
        assert dot.rstrip().endswith("}")
