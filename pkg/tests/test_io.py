import random

import pytest

from cwtower import (
    Simplex,
    SimplexRef,
    boundary_inclusion,
    boundary_simplex,
    cw_tower,
    enumerate_maps,
    format_smap,
    format_square,
    format_sset,
    standard_simplex,
)
from cwtower.textio import (
    ParseError,
    format_simplex,
    growth_csv,
    load_tower,
    parse_simplex,
    parse_smap,
    parse_square,
    parse_sset,
    save_tower,
)

from util import SEED, random_one_dim_target, vertex_with_loop


class TestSimplexTokens:
    def test_round_trip(self):
        for s in (Simplex((), SimplexRef(0, 3)),
                  Simplex((1, 0), SimplexRef(0, 0)),
                  Simplex((3,), SimplexRef(3, 12))):
            assert parse_simplex(format_simplex(s)) == s

    def test_empty_word_form(self):
        assert format_simplex(Simplex((), SimplexRef(2, 1))) == "(|2:1)"

    def test_bad_token(self):
        with pytest.raises(ParseError):
            parse_simplex("(s_0 | nope)", line=7)


class TestSsetFormat:
    def round_trip(self, X):
        text = format_sset(X)
        assert parse_sset(text) == X
        assert format_sset(parse_sset(text)) == text

    def test_standard_objects(self):
        for X in (standard_simplex(0), standard_simplex(2),
                  boundary_simplex(2), boundary_simplex(3),
                  vertex_with_loop()):
            self.round_trip(X)

    def test_random_complexes(self):
        rng = random.Random(SEED)
        for _ in range(25):
            self.round_trip(random_one_dim_target(rng))

    def test_labels_survive_escaping(self):
        X = standard_simplex(1)
        labels = ((('v "zero"', 'v\\1')), ('e #1',))
        Y = type(X)(X.counts, X.faces, (tuple(labels[0]), tuple(labels[1])))
        self.round_trip(Y)

    def test_tower_stage_labels(self):
        T = cw_tower(standard_simplex(0), 2)
        self.round_trip(T.stages[2])

    def test_parse_error_carries_line_number(self):
        text = "sset v1\ndims 1\ndim 0 count 1\ngen 0:0 faces (|0:0)\n"
        with pytest.raises(ParseError) as exc:
            parse_sset(text)
        assert exc.value.line == 4  # vertex with a face list

    def test_version_required(self):
        with pytest.raises(ParseError):
            parse_sset("dims 1\ndim 0 count 1\ngen 0:0\n")

    def test_invalid_complex_rejected(self):
        # face refers to a generator that does not exist
        text = ("sset v1\ndims 2\ndim 0 count 1\ndim 1 count 1\n"
                "gen 0:0\ngen 1:0 faces (|0:0) (|0:9)\n")
        with pytest.raises(ParseError):
            parse_sset(text)

    def test_comments_and_blank_lines_ignored(self):
        X = boundary_simplex(2)
        text = "# header\n\n" + format_sset(X).replace("\n", "\n# note\n", 1)
        assert parse_sset(text) == X


class TestSmapFormat:
    def test_round_trip(self):
        f = boundary_inclusion(2)
        text = format_smap(f)
        g = parse_smap(text, f.dom, f.cod)
        assert g == f

    def test_degenerate_assignments(self):
        f = enumerate_maps(boundary_simplex(2), vertex_with_loop())[3]
        assert parse_smap(format_smap(f), f.dom, f.cod) == f

    def test_non_simplicial_rejected(self):
        f = boundary_inclusion(2)
        text = format_smap(f).replace("(|1:0)", "(|1:1)", 1)
        with pytest.raises(ParseError):
            parse_smap(text, f.dom, f.cod)

    def test_missing_generator_rejected(self):
        f = boundary_inclusion(2)
        lines = [l for l in format_smap(f).splitlines() if "0:2" not in l]
        with pytest.raises(ParseError):
            parse_smap("\n".join(lines), f.dom, f.cod)


class TestSquareFormat:
    def test_round_trip(self):
        T = cw_tower(standard_simplex(0), 2)
        for n in (1, 2):
            prev, B = T.stages[n - 1], T.B
            for sq in T.squares[n]:
                line = format_square(sq)
                assert parse_square(line, prev, B) == sq
                assert format_square(parse_square(line, prev, B)) == line

    def test_bad_line(self):
        T = cw_tower(standard_simplex(0), 1)
        with pytest.raises(ParseError):
            parse_square("square n=1 attach[] oops[]", T.stages[0], T.B)


class TestTowerDirectory:
    def test_save_load_round_trip(self, tmp_path):
        T = cw_tower(boundary_simplex(2), 2)
        save_tower(T, tmp_path / "tower")
        T2 = load_tower(tmp_path / "tower")
        assert T2.cap == T.cap and T2.variant == T.variant
        for n in range(T.cap + 1):
            assert T2.stages[n] == T.stages[n]
            assert T2.inclusions[n] == T.inclusions[n]
            assert T2.projections[n] == T.projections[n]
            assert T2.squares[n] == T.squares[n]

    def test_expected_files_exist(self, tmp_path):
        T = cw_tower(standard_simplex(0), 1)
        out = tmp_path / "t"
        save_tower(T, out)
        for name in ("meta.txt", "input.sset", "target.sset",
                     "input_map.smap", "stage_0.sset", "stage_1.sset",
                     "include_0.smap", "include_1.smap",
                     "project_0.smap", "project_1.smap",
                     "squares_1.manifest", "growth.csv"):
            assert (out / name).exists(), name

    def test_growth_csv_point(self):
        T = cw_tower(standard_simplex(0), 2)
        assert growth_csv(T).splitlines() == [
            "stage,dimension,new-cells,cumulative-generators",
            "0,0,1,1",
            "1,1,1,2",
            "2,2,8,10",
        ]

    def test_growth_csv_circle(self):
        T = cw_tower(boundary_simplex(2), 2)
        assert growth_csv(T).splitlines() == [
            "stage,dimension,new-cells,cumulative-generators",
            "0,0,3,3",
            "1,1,6,9",
            "2,2,36,45",
        ]

    def test_load_missing_dir(self, tmp_path):
        with pytest.raises(ParseError):
            load_tower(tmp_path / "nothing")
