from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from reqtrace.corpus import RawDocument
from reqtrace.textprep import (
    DEFAULT_STOP_WORDS,
    StopWordList,
    TermBag,
    load_stop_words,
    preprocess,
    split_camel_case,
    strip_noise,
)

from conftest import DS_LINE_DESCRIPTION


def bag_of(text: str, stops: StopWordList | None = None) -> TermBag:
    return preprocess(RawDocument(name="t", text=text, kind="class"), stops)


class TestStripNoise:
    def test_character_class_rule(self):
        # every non-letter maps to exactly one space
        assert strip_noise("fillRect(x, y)!") == "fillRect x  y  "

    def test_dotted_identifier(self):
        assert strip_noise("Shapes.coreElements") == "Shapes coreElements"

    def test_digit_removal(self):
        assert strip_noise("X1") == "X "

    def test_pure_letters_untouched(self):
        assert strip_noise("drawLine") == "drawLine"

    @given(st.text(max_size=80))
    def test_only_letters_and_spaces_survive(self, text):
        cleaned = strip_noise(text)
        assert len(cleaned) == len(text)
        assert all(ch.isascii() and (ch.isalpha() or ch == " ") for ch in cleaned)


class TestSplitCamelCase:
    @pytest.mark.parametrize(
        "token, expected",
        [
            ("fillRect", ["fill", "Rect"]),
            ("shapeColor", ["shape", "Color"]),
            ("draw", ["draw"]),
            ("XMLFile", ["XML", "File"]),
            ("PaintJPanel", ["Paint", "J", "Panel"]),
            ("MyLine", ["My", "Line"]),
            ("g", ["g"]),
            ("HTML", ["HTML"]),
        ],
    )
    def test_boundaries(self, token, expected):
        assert split_camel_case(token) == expected


class TestStopWords:
    def test_required_words_present(self):
        assert {"my", "to", "an", "a", "the"} <= DEFAULT_STOP_WORDS

    def test_loader_accepts_comments(self, tmp_path):
        path = tmp_path / "stops.txt"
        path.write_text("# header\nfoo\nbar # trailing\n\nBAZ\n")
        stops = load_stop_words(path)
        assert stops.words == {"foo", "bar", "baz"}


class TestPreprocess:
    def test_pipeline_order_and_counts(self):
        bag = bag_of("The drawLine draws drawings; a drawing!")
        assert bag.counts == {"draw": 4, "line": 1}

    def test_stop_words_never_survive(self):
        bag = bag_of("My the TO an A THE myCount")
        assert "my" not in bag.counts
        assert "the" not in bag.counts
        assert bag.counts == {"count": 1}

    def test_stems_landing_on_stop_words_dropped(self):
        # "doing" stems to the stop word "do"
        bag = bag_of("doing lines")
        assert bag.counts == {"line": 1}

    def test_only_stop_words_gives_empty_bag(self):
        assert bag_of("the a an to my").counts == {}

    def test_line_requirement_description_counts(self):
        bag = bag_of(DS_LINE_DESCRIPTION)
        assert bag.counts["line"] == 7
        # "drawn" keeps its own suffix-stripped root, distinct from "draw"
        assert bag.counts["draw"] == 6
        assert bag.counts["drawn"] == 1

    def test_single_letter_tokens_retained(self):
        bag = bag_of("draw( Graphics g )")
        assert bag.counts["g"] == 1

    def test_invariants(self):
        bag = bag_of("Shapes.coreElements fillRect X1 the my 42")
        assert all(count >= 1 for count in bag.counts.values())
        assert all(term.isalpha() and term.islower() for term in bag.counts)
        assert not set(bag.counts) & DEFAULT_STOP_WORDS

    @given(st.lists(st.sampled_from("drawLine Shape X1 the myColor zone g".split()), max_size=30))
    def test_order_independence(self, tokens):
        forward = bag_of(" ".join(tokens))
        backward = bag_of(" ".join(reversed(tokens)))
        assert forward.counts == backward.counts

    def test_idempotent_over_fixture_vocabulary(self):
        # dictionary scope: stems of the drawing-fixture style vocabulary
        source = (
            "Drawing Shapes coreElements MyLine MyShape draw drawLine"
            " X1 Y1 X2 Y2 g shapeColor getShapeColor setColor line lines"
            " single unlimited zone points two right color user"
        )
        first = bag_of(source)
        replay = bag_of(" ".join(
            term for term, count in sorted(first.counts.items()) for _ in range(count)
        ))
        assert replay.counts == first.counts

    def test_fig_style_class_document(self):
        text = "\n".join(
            [
                "Drawing.Shapes.coreElements",
                "MyLine",
                "MyShape",
                "MyLine",
                "draw",
                "g",
                "X1",
                "drawLine",
                "draw a line",
            ]
        )
        bag = bag_of(text)
        assert bag.counts["line"] == 4  # MyLine x2, drawLine, comment
        assert bag.counts["draw"] == 4  # Drawing, draw, drawLine, comment
        assert bag.counts["shape"] == 2
        assert bag.counts["x"] == 1
