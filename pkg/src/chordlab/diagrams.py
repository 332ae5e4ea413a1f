"""Chord diagrams: encoding, canonical codes, enumeration, and surgery.

A chord diagram of order n is stored as a double-occurrence word of
length 2n read counterclockwise from a fixed basepoint; chord ids are
normalized to 0..n-1 in order of first appearance.  Diagrams compare
equal up to rotation of the basepoint (the circle's orientation is
fixed, so reflections are *not* quotiented out).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class DiagramError(ValueError):
    """Raised for malformed diagram words or invalid surgery arguments."""


def _normalize(word: Sequence) -> tuple[int, ...]:
    """Relabel chord ids to 0..n-1 in order of first appearance."""
    labels: dict = {}
    out = []
    for ch in word:
        out.append(labels.setdefault(ch, len(labels)))
    return tuple(out)


@dataclass(frozen=True)
class ChordDiagram:
    """A chord diagram as a normalized double-occurrence word."""

    word: tuple[int, ...]

    def __init__(self, word: Iterable):
        w = _normalize(tuple(word))
        if len(w) % 2 != 0:
            raise DiagramError("diagram word must have even length")
        counts: dict[int, int] = {}
        for ch in w:
            counts[ch] = counts.get(ch, 0) + 1
        bad = sorted(ch for ch, k in counts.items() if k != 2)
        if bad:
            raise DiagramError(f"every chord must occur exactly twice (bad: {bad})")
        object.__setattr__(self, "word", w)

    @property
    def n(self) -> int:
        return len(self.word) // 2

    def endpoints(self, chord: int) -> tuple[int, int]:
        """Positions (i, j), i < j, of the chord's two endpoints."""
        i = self.word.index(chord)
        j = self.word.index(chord, i + 1)
        return i, j

    def chord_positions(self) -> list[tuple[int, int]]:
        """Endpoint position pairs for all chords, indexed by chord id."""
        return word_positions(self.word)

    def rotated(self, r: int) -> "ChordDiagram":
        """Diagram with the basepoint moved r positions counterclockwise."""
        m = len(self.word)
        if m == 0:
            return self
        r %= m
        return ChordDiagram(self.word[r:] + self.word[:r])

    def code(self) -> bytes:
        return canonical_code(self)

    def __str__(self) -> str:
        return format_diagram(self)


def word_positions(word: Sequence[int]) -> list[tuple[int, int]]:
    """Endpoint position pairs of a normalized word, indexed by chord id."""
    n = len(word) // 2
    first: list[int] = [-1] * n
    pairs: list[tuple[int, int]] = [(-1, -1)] * n
    for pos, ch in enumerate(word):
        if first[ch] < 0:
            first[ch] = pos
        else:
            pairs[ch] = (first[ch], pos)
    return pairs


def chords_cross(word: Sequence[int], a: int, b: int) -> bool:
    """Whether chords a and b interleave on the circle."""
    pairs = word_positions(word)
    (a1, a2), (b1, b2) = pairs[a], pairs[b]
    return (a1 < b1 < a2) != (a1 < b2 < a2)


def parse_diagram(text: str) -> ChordDiagram:
    """Parse a letter word ("ABAB") or a position pair list ("1-3,2-4").

    Both formats are loss-free inverses of :func:`format_diagram`.
    """
    s = text.strip()
    if not s:
        raise DiagramError("empty diagram text")
    if "-" in s:
        pairs = []
        for item in s.split(","):
            item = item.strip()
            halves = item.split("-")
            if len(halves) != 2:
                raise DiagramError(f"bad position pair: {item!r}")
            try:
                i, j = int(halves[0]), int(halves[1])
            except ValueError as exc:
                raise DiagramError(f"bad position pair: {item!r}") from exc
            pairs.append((i, j))
        m = 2 * len(pairs)
        seen = set()
        for i, j in pairs:
            for p in (i, j):
                if not 1 <= p <= m or p in seen:
                    raise DiagramError(
                        f"positions must form a perfect matching of 1..{m}"
                    )
                seen.add(p)
        word = [0] * m
        for ch, (i, j) in enumerate(pairs):
            word[i - 1] = ch
            word[j - 1] = ch
        return ChordDiagram(word)
    if not s.isalpha():
        raise DiagramError(f"diagram word must be letters only: {s!r}")
    return ChordDiagram(s.upper())


def format_diagram(d: ChordDiagram, style: str = "letters") -> str:
    """Render as a letter word or a 1-based position pair list.

    Both forms parse back to an equal diagram; words with more than 26
    chords fall back to the pair list.
    """
    if style == "pairs" or d.n > 26:
        return ",".join(f"{i + 1}-{j + 1}" for i, j in d.chord_positions())
    if style != "letters":
        raise ValueError(f"unknown style: {style!r}")
    return "".join(chr(ord("A") + ch) for ch in d.word)


def canonical_word_bytes(word: Sequence[int]) -> bytes:
    """Minimum over rotations of the first-appearance relabeled word.

    Equal byte strings exactly characterize diagrams that agree up to
    basepoint rotation and chord relabeling.
    """
    m = len(word)
    if m == 0:
        return b""
    n = m // 2
    best: bytes | None = None
    base = ord("A") if n <= 26 else 0
    labels = [-1] * (max(word) + 1)
    for r in range(m):
        for k in range(len(labels)):
            labels[k] = -1
        out = bytearray(m)
        nxt = 0
        for k in range(m):
            ch = word[r + k - m] if r + k >= m else word[r + k]
            lab = labels[ch]
            if lab < 0:
                lab = labels[ch] = nxt
                nxt += 1
            out[k] = base + lab
        b = bytes(out)
        if best is None or b < best:
            best = b
    return best


def canonical_code(d: ChordDiagram) -> bytes:
    """Canonical byte string; equal codes iff equal up to rotation/relabeling."""
    return canonical_word_bytes(d.word)


def enumerate_diagrams(n: int, mode: str = "basepointed") -> Iterator[ChordDiagram]:
    """Yield chord diagrams of order n.

    mode="basepointed" yields all (2n-1)!! distinct words;
    mode="up-to-rotation" yields one representative per canonical code,
    in sorted code order.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if mode == "basepointed":
        yield from (ChordDiagram(w) for w in _matchings(2 * n))
    elif mode == "up-to-rotation":
        codes = {canonical_word_bytes(w) for w in _matchings(2 * n)}
        for code in sorted(codes):
            yield parse_diagram(code.decode("ascii")) if n > 0 else ChordDiagram(())
    else:
        raise ValueError(f"unknown mode: {mode!r}")


def _matchings(m: int) -> Iterator[tuple[int, ...]]:
    """All perfect matchings of positions 0..m-1 as normalized words."""
    word = [-1] * m
    def fill(next_label: int) -> Iterator[tuple[int, ...]]:
        try:
            i = word.index(-1)
        except ValueError:
            yield tuple(word)
            return
        word[i] = next_label
        for j in range(i + 1, m):
            if word[j] == -1:
                word[j] = next_label
                yield from fill(next_label + 1)
                word[j] = -1
        word[i] = -1
    yield from fill(0)


def random_diagram(n: int, rng) -> ChordDiagram:
    """Uniform random basepointed diagram from a random.Random instance."""
    slots = list(range(2 * n))
    rng.shuffle(slots)
    word = [0] * (2 * n)
    for ch in range(n):
        word[slots[2 * ch]] = ch
        word[slots[2 * ch + 1]] = ch
    return ChordDiagram(word)


def induced_subdiagram(d: ChordDiagram, chords: Iterable[int]) -> ChordDiagram:
    """Delete all endpoints of chords outside the subset, keeping order."""
    keep = set(chords)
    extra = keep.difference(range(d.n))
    if extra:
        raise DiagramError(f"unknown chords: {sorted(extra)}")
    return ChordDiagram(ch for ch in d.word if ch in keep)


def diagram_product(d1: ChordDiagram, d2: ChordDiagram) -> ChordDiagram:
    """Concatenation product: the factors occupy disjoint arcs."""
    shift = d1.n
    return ChordDiagram(d1.word + tuple(ch + shift for ch in d2.word))


@dataclass(frozen=True)
class Share:
    """Two disjoint circular arcs closed under chords.

    Arcs are (start, length) position runs; an empty second arc is a
    degenerate gap location.  ``chords`` is the set filling the arcs.
    """

    arcs: tuple[tuple[int, int], tuple[int, int]]
    chords: frozenset[int]


class MutationKind(enum.Enum):
    """The three nontrivial symmetries re-gluing a share."""

    ROTATION = "rotation"
    # reflection fixing each arc setwise (axis through both arcs)
    REFLECTION_VERTICAL = "reflection-vertical"
    # reflection exchanging the two arcs
    REFLECTION_HORIZONTAL = "reflection-horizontal"


def find_shares(d: ChordDiagram) -> list[Share]:
    """All shares of d, one per chord subset (including empty and full).

    A chord subset is a share iff its endpoint positions form at most two
    circular runs; the runs then are the arcs, and the closure property
    holds automatically because runs contain no foreign endpoints.
    """
    m = len(d.word)
    n = d.n
    pairs = d.chord_positions()
    shares = []
    for mask in range(1 << n):
        in_set = [False] * m
        for ch in range(n):
            if mask >> ch & 1:
                i, j = pairs[ch]
                in_set[i] = in_set[j] = True
        starts = [p for p in range(m) if in_set[p] and not in_set[p - 1]]
        if len(starts) > 2:
            continue
        k = 2 * bin(mask).count("1")
        if not starts:
            # the empty subset, or every position covered (one full run)
            arcs = ((0, 0), (0, 0)) if k == 0 else ((0, m), (0, 0))
        elif len(starts) == 1:
            s = starts[0]
            arcs = ((s, k), ((s + k) % m, 0))
        else:
            s1, s2 = starts
            arcs = ((s1, _run_length(in_set, s1)), (s2, _run_length(in_set, s2)))
        chords = frozenset(ch for ch in range(n) if mask >> ch & 1)
        shares.append(Share(arcs=arcs, chords=chords))
    return shares


def _run_length(in_set: list[bool], start: int) -> int:
    m = len(in_set)
    k = 0
    while k < m and in_set[(start + k) % m]:
        k += 1
    return k


def _share_segments(d: ChordDiagram, share: Share):
    """Split the word into (arc1, gap1, arc2, gap2) starting at arc1."""
    m = len(d.word)
    (s1, l1), (s2, l2) = share.arcs
    if m == 0:
        return (), (), (), ()
    seg = lambda start, length: tuple(d.word[(start + t) % m] for t in range(length))
    a1 = seg(s1, l1)
    g1_len = (s2 - s1 - l1) % m
    g1 = seg((s1 + l1) % m, g1_len)
    a2 = seg(s2, l2)
    g2_len = m - l1 - l2 - g1_len
    g2 = seg((s2 + l2) % m, g2_len)
    return a1, g1, a2, g2


def _check_share(d: ChordDiagram, share: Share) -> None:
    m = len(d.word)
    (s1, l1), (s2, l2) = share.arcs
    in_arcs = [False] * m if m else []
    for s, l in ((s1, l1), (s2, l2)):
        for t in range(l):
            in_arcs[(s + t) % m] = True
    hit = set()
    for pos in range(m):
        if in_arcs[pos]:
            hit.add(d.word[pos])
    for ch in hit:
        i, j = d.endpoints(ch)
        if not (in_arcs[i] and in_arcs[j]):
            raise DiagramError(f"arcs are not closed under chord {ch}")
    if hit != set(share.chords):
        raise DiagramError("share chord set does not match its arcs")


def mutated_word(d: ChordDiagram, share: Share, kind: MutationKind) -> tuple[int, ...]:
    """Re-glued word with original chord ids preserved (not normalized)."""
    _check_share(d, share)
    a1, g1, a2, g2 = _share_segments(d, share)
    rev = lambda seg: tuple(reversed(seg))
    if kind is MutationKind.ROTATION:
        return a2 + g1 + a1 + g2
    if kind is MutationKind.REFLECTION_VERTICAL:
        return rev(a1) + g1 + rev(a2) + g2
    if kind is MutationKind.REFLECTION_HORIZONTAL:
        return rev(a2) + g1 + rev(a1) + g2
    raise ValueError(f"unknown mutation kind: {kind!r}")


def apply_mutation(d: ChordDiagram, share: Share, kind: MutationKind) -> ChordDiagram:
    """Mutate d by re-gluing the share with the chosen symmetry."""
    return ChordDiagram(mutated_word(d, share, kind))
