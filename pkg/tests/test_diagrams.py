import random
from math import factorial

import pytest

from chordlab.diagrams import (
    ChordDiagram,
    DiagramError,
    MutationKind,
    apply_mutation,
    canonical_code,
    diagram_product,
    enumerate_diagrams,
    find_shares,
    format_diagram,
    induced_subdiagram,
    mutated_word,
    parse_diagram,
    random_diagram,
)
from chordlab.graphs import intersection_graph


def double_factorial(m: int) -> int:
    return factorial(2 * m) // (2**m * factorial(m))


def crossings(d):
    out = set()
    for a in range(d.n):
        a1, a2 = d.endpoints(a)
        for b in range(a + 1, d.n):
            b1, b2 = d.endpoints(b)
            if (a1 < b1 < a2) != (a1 < b2 < a2):
                out.add((a, b))
    return out


class TestParsing:
    def test_crossing_word(self):
        assert crossings(parse_diagram("ABAB")) == {(0, 1)}

    def test_disjoint_word(self):
        assert crossings(parse_diagram("AABB")) == set()

    def test_alternating_word_is_complete(self):
        d = parse_diagram("ABCDABCD")
        assert crossings(d) == {(a, b) for a in range(4) for b in range(a + 1, 4)}

    def test_pair_list(self):
        assert parse_diagram("1-5,2-6,3-7,4-8").word == parse_diagram("ABCDABCD").word

    def test_format_roundtrip(self):
        for text in ("ABAB", "AABB", "ABCDABCD", "ABCACB"):
            d = parse_diagram(text)
            assert parse_diagram(format_diagram(d)).word == d.word
            assert parse_diagram(format_diagram(d, style="pairs")).word == d.word

    def test_pair_format(self):
        assert format_diagram(parse_diagram("ABCDABCD"), style="pairs") == (
            "1-5,2-6,3-7,4-8"
        )

    @pytest.mark.parametrize(
        "bad", ["ABA", "AAB", "ABCAB", "1-2,2-3", "1-2,3-3", "1-5,2-6", "A1A1", ""]
    )
    def test_rejects_malformed(self, bad):
        with pytest.raises(DiagramError):
            parse_diagram(bad)


class TestCanonicalCode:
    def test_relabeling_invariance(self):
        assert canonical_code(parse_diagram("BABA")) == canonical_code(
            parse_diagram("ABAB")
        )

    def test_rotation_invariance(self):
        d = parse_diagram("ABAB")
        for r in range(4):
            assert canonical_code(d.rotated(r)) == canonical_code(d)

    def test_order4_class_count(self):
        codes = {canonical_code(d) for d in enumerate_diagrams(4, "basepointed")}
        assert len(codes) == 18

    def test_congruence_under_rotation_and_relabeling(self):
        # spec-sized randomized trial: rotations and relabelings never
        # change the code
        rng = random.Random(20240817)
        for _ in range(10_000):
            n = rng.randrange(1, 9)
            d = random_diagram(n, rng)
            perm = list(range(n))
            rng.shuffle(perm)
            relabeled = ChordDiagram(perm[c] for c in d.word)
            rotated = relabeled.rotated(rng.randrange(2 * n))
            assert canonical_code(rotated) == canonical_code(d)


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 3), (4, 105), (6, 10395)])
    def test_basepointed_counts(self, n, count):
        assert sum(1 for _ in enumerate_diagrams(n, "basepointed")) == count
        assert count == double_factorial(n)

    def test_order7_count(self):
        assert sum(1 for _ in enumerate_diagrams(7, "basepointed")) == 135135

    def test_up_to_rotation_yields_distinct_codes(self):
        reps = list(enumerate_diagrams(3, "up-to-rotation"))
        codes = [canonical_code(d) for d in reps]
        assert codes == sorted(set(codes))
        assert len(reps) == 5

    def test_words_are_valid(self):
        for d in enumerate_diagrams(3, "basepointed"):
            assert sorted(d.word) == [0, 0, 1, 1, 2, 2]

    def test_random_diagram_deterministic(self):
        a = random_diagram(6, random.Random(5)).word
        b = random_diagram(6, random.Random(5)).word
        assert a == b


class TestInducedSubdiagram:
    def test_single_chord(self):
        assert induced_subdiagram(parse_diagram("ABAB"), {0}).word == (0, 0)

    def test_alternating_restriction(self):
        d = parse_diagram("ABCDABCD")
        assert induced_subdiagram(d, {0, 1}).word == parse_diagram("ABAB").word

    def test_middle_deletion_keeps_interleaving(self):
        d = induced_subdiagram(parse_diagram("ABCABC"), {0, 2})
        assert d.word == parse_diagram("ACAC").word
        assert crossings(d) == {(0, 1)}

    def test_full_subset_is_identity(self):
        d = parse_diagram("ABCACB")
        assert induced_subdiagram(d, range(3)).word == d.word

    def test_monotone_composition(self):
        # restricting to big then to small equals restricting to small;
        # the inner restriction relabels, so map ids through first
        # appearance in the restricted word
        rng = random.Random(11)
        for _ in range(200):
            d = random_diagram(6, rng)
            big = {c for c in range(6) if rng.random() < 0.7}
            small = {c for c in big if rng.random() < 0.6}
            seen: dict[int, int] = {}
            for ch in d.word:
                if ch in big and ch not in seen:
                    seen[ch] = len(seen)
            once = induced_subdiagram(d, big)
            via = induced_subdiagram(once, {seen[c] for c in small})
            assert via.word == induced_subdiagram(d, small).word

    def test_unknown_chord_rejected(self):
        with pytest.raises(DiagramError):
            induced_subdiagram(parse_diagram("ABAB"), {3})


class TestProduct:
    def test_unit(self):
        d = parse_diagram("ABAB")
        assert diagram_product(d, ChordDiagram(())).word == d.word

    def test_two_singles(self):
        got = diagram_product(parse_diagram("AA"), parse_diagram("AA"))
        assert got.word == parse_diagram("AABB").word

    def test_graph_is_disjoint_union(self, diagram_classes):
        for d1 in diagram_classes(2):
            for d2 in diagram_classes(3):
                prod = diagram_product(d1, d2)
                expected = intersection_graph(d1).disjoint_union(
                    intersection_graph(d2)
                )
                assert intersection_graph(prod) == expected


class TestShares:
    def test_isolated_chords_are_shares(self):
        d = parse_diagram("AABB")
        subsets = {s.chords for s in find_shares(d)}
        assert frozenset({0}) in subsets
        assert frozenset({1}) in subsets

    def test_whole_diagram_and_empty_are_shares(self, diagram_classes):
        for d in diagram_classes(4):
            subsets = {s.chords for s in find_shares(d)}
            assert frozenset(range(4)) in subsets
            assert frozenset() in subsets

    def test_complement_closure(self, diagram_classes):
        for n in range(1, 6):
            for d in diagram_classes(n):
                subsets = {s.chords for s in find_shares(d)}
                for s in subsets:
                    assert frozenset(range(n)) - s in subsets

    def test_share_arcs_cover_exactly_the_chord_endpoints(self, diagram_classes):
        for d in diagram_classes(4):
            m = 2 * d.n
            for share in find_shares(d):
                covered = set()
                for start, length in share.arcs:
                    covered.update((start + t) % m for t in range(length))
                expected = set()
                for ch in share.chords:
                    expected.update(d.endpoints(ch))
                assert covered == expected


class TestMutations:
    def test_whole_share_rotation_is_basepoint_move(self, diagram_classes):
        for d in diagram_classes(3):
            share = next(
                s for s in find_shares(d) if s.chords == frozenset(range(3))
            )
            out = apply_mutation(d, share, MutationKind.ROTATION)
            assert canonical_code(out) == canonical_code(d)

    def test_mutations_preserve_labeled_graph_small(self, diagram_classes):
        for n in range(1, 5):
            for d in diagram_classes(n):
                rows = intersection_graph(d).rows
                for share in find_shares(d):
                    for kind in MutationKind:
                        w = mutated_word(d, share, kind)
                        from chordlab.graphs import interleave_rows

                        assert interleave_rows(w) == rows

    def test_two_reflections_compose_to_rotation(self, diagram_classes):
        for d in diagram_classes(4):
            for share in find_shares(d):
                raw = mutated_word(d, share, MutationKind.REFLECTION_VERTICAL)
                once = ChordDiagram(raw)
                # normalization relabels chords; carry the share subset over
                relabel: dict[int, int] = {}
                for ch in raw:
                    relabel.setdefault(ch, len(relabel))
                chords = frozenset(relabel[c] for c in share.chords)
                match = [s for s in find_shares(once) if s.chords == chords]
                assert match
                twice = apply_mutation(
                    once, match[0], MutationKind.REFLECTION_HORIZONTAL
                )
                rotated = apply_mutation(d, share, MutationKind.ROTATION)
                assert canonical_code(twice) == canonical_code(rotated)

    def test_invalid_share_rejected(self):
        from chordlab.diagrams import Share

        d = parse_diagram("ABAB")
        bad = Share(arcs=((0, 1), (1, 0)), chords=frozenset({0}))
        with pytest.raises(DiagramError):
            apply_mutation(d, bad, MutationKind.ROTATION)
