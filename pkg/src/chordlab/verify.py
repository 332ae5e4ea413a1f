"""Named verification suites over diagrams and graphs.

Each suite returns a :class:`chordlab.fourterm.VerificationReport`; the
CLI renders these as JSON lines.  Suites accept an optional
``shard=(index, count)`` so independent workers can split the main loop
and have their reports merged deterministically afterwards.
"""

from __future__ import annotations

import random
from typing import Sequence

import numpy as np

from ._bulk import hamiltonian_cycle_sums
from .diagrams import (
    ChordDiagram,
    MutationKind,
    canonical_code,
    canonical_word_bytes,
    enumerate_diagrams,
    find_shares,
    mutated_word,
    random_diagram,
    word_positions,
)
from .fourterm import (
    VerificationReport,
    diagram_four_term,
    four_term_words,
    neighbor_positions,
    verify_weight_system,
)
from .graphs import SimpleGraph, gf2_rank, interleave_rows
from .invariants import (
    e_l_parity,
    r_k,
    r_k_graph,
    r_k_via_wc,
    sl2_graph_extension_check,
    w_c,
)
from .sl2 import sl2_oracle, sl2_recursive

SUITE_NAMES = (
    "four-term-diagrams",
    "four-term-graphs",
    "two-term",
    "mutation",
    "parity",
    "conjecture",
    "wc-identity",
    "oracle-equivalence",
    "wheel-prism",
)


def _shard_keep(shard: tuple[int, int] | None, index: int) -> bool:
    return shard is None or index % shard[1] == shard[0]


def merge_reports(reports: Sequence[VerificationReport]) -> VerificationReport:
    head = reports[0]
    merged = VerificationReport(invariant=head.invariant, order=head.order)
    for rep in reports:
        merged.checked += rep.checked
        merged.violations.extend(rep.violations)
    return merged.finalize()


# ---------------------------------------------------------------------------
# step-weight matrices and batched evaluation helpers


def dense_sign_matrix(word: Sequence[int]) -> list[list[int]]:
    """Step-weight matrix of the canonically oriented intersection graph."""
    pairs = word_positions(word)
    n = len(pairs)
    w = [[0] * n for _ in range(n)]
    for a in range(n):
        a1, a2 = pairs[a]
        for b in range(a + 1, n):
            b1, b2 = pairs[b]
            if (a1 < b1 < a2) == (a1 < b2 < a2):
                continue
            if a1 < b1 < a2:
                w[a][b], w[b][a] = 1, -1
            else:
                w[a][b], w[b][a] = -1, 1
    return w


def _adjacency_matrix(word: Sequence[int]) -> list[list[int]]:
    rows = interleave_rows(word)
    n = len(rows)
    return [[rows[u] >> v & 1 for v in range(n)] for u in range(n)]


# ---------------------------------------------------------------------------
# the named suites


def suite_four_term_diagrams(
    invariant: str,
    order: int,
    k: int | None = None,
    l: int | None = None,
    mode: str = "exhaustive",
    count: int = 0,
    seed: int = 0,
    shard: tuple[int, int] | None = None,
) -> VerificationReport:
    """Signed 4-term sums of a named invariant over diagram quadruples."""
    name, f = _diagram_invariant(invariant, k, l)
    if invariant == "rk" and mode == "sample" and 2 * (k or 0) == order:
        if shard is None or shard == (0, 1):
            return rk_four_term_sampled(k, order, count, seed)
    if mode == "exhaustive":
        report = VerificationReport(invariant=name, order=order)
        for idx, d in enumerate(enumerate_diagrams(order, "basepointed")):
            if not _shard_keep(shard, idx):
                continue
            for p in neighbor_positions(d):
                quad = diagram_four_term(d, p)
                report.checked += 1
                total = quad.signed_sum(f)
                if total:
                    report.add_violation(quad.term_codes(), total)
        return report.finalize()
    if shard is not None and shard != (0, 1):
        raise ValueError("sampled suites are not sharded")
    return verify_weight_system(
        f, order, mode="sample", count=count, seed=seed, invariant=name
    )


def rk_four_term_sampled(
    k: int, order: int, count: int, seed: int
) -> VerificationReport:
    """Batched signed-cycle 4-term check for order == 2k, sampled.

    Builds all four step-weight matrices per sampled quadruple and runs
    one vectorized Hamiltonian-cycle DP over the whole batch.
    """
    if order != 2 * k:
        raise ValueError("batched mode requires order == 2k")
    rng = random.Random(seed)
    report = VerificationReport(invariant=f"r{k}", order=order)
    quads: list[tuple] = []
    mats = np.zeros((4 * count, order, order), dtype=np.int8)
    idx = 0
    while idx < count:
        d = random_diagram(order, rng)
        positions = neighbor_positions(d)
        if not positions:
            continue
        p = positions[rng.randrange(len(positions))]
        words = four_term_words(d.word, p)
        for t, wd in enumerate(words):
            mats[4 * idx + t] = dense_sign_matrix(wd)
        quads.append(tuple(words))
        idx += 1
    vals = hamiltonian_cycle_sums(mats)
    sums = vals[0::4] - vals[1::4] - vals[2::4] + vals[3::4]
    report.checked = count
    for bad in np.nonzero(sums)[0]:
        codes = [
            canonical_word_bytes(tuple(w)).decode("ascii") for w in quads[bad]
        ]
        report.add_violation(codes, int(sums[bad]))
    return report.finalize()


def suite_four_term_graphs(
    invariant: str,
    order: int,
    k: int | None = None,
    l: int | None = None,
    shard: tuple[int, int] | None = None,
) -> VerificationReport:
    """Graph 4-term sums over all labeled graphs of the given order.

    Runs on edge masks with a precomputed value table; graphs are only
    materialized to describe violations.
    """
    from .graphs import format_graph, prime_mask, tilde_mask

    name, table = _graph_invariant_table(invariant, order, k, l)
    report = VerificationReport(invariant=name, order=order)
    npairs = order * (order - 1) // 2
    mod2 = isinstance(table[0], _Bit)
    for mask in range(1 << npairs):
        if not _shard_keep(shard, mask):
            continue
        for a in range(order):
            for b in range(order):
                if a == b:
                    continue
                m2 = prime_mask(order, mask, a, b)
                m3 = tilde_mask(order, mask, a, b)
                m4 = prime_mask(order, m3, a, b)
                report.checked += 1
                total = table[mask] - table[m2] - table[m3] + table[m4]
                if mod2:
                    total = int(total) & 1
                if total:
                    report.add_violation(
                        [
                            format_graph(SimpleGraph.from_edge_mask(order, m))
                            for m in (mask, m2, m3, m4)
                        ],
                        total,
                    )
    return report.finalize()


def suite_two_term(
    invariant: str,
    order: int,
    shard: tuple[int, int] | None = None,
) -> VerificationReport:
    """f(g) == f(g~) for all labeled graphs and ordered vertex pairs."""
    if invariant == "wc":
        table = [
            w_c(SimpleGraph.from_edge_mask(order, m))
            for m in range(1 << (order * (order - 1) // 2))
        ]
        name = "wc"
    elif invariant == "gf2-rank":
        table = [
            gf2_rank(SimpleGraph.from_edge_mask(order, m).rows, order)
            for m in range(1 << (order * (order - 1) // 2))
        ]
        name = "gf2-rank"
    elif invariant == "edge-count":
        table = [bin(m).count("1") for m in range(1 << (order * (order - 1) // 2))]
        name = "edge-count"
    else:
        raise ValueError(f"unknown two-term invariant: {invariant!r}")
    return _two_term_masked(name, table, order, shard)


def _two_term_masked(name, table, order, shard):
    from .graphs import format_graph, tilde_mask

    report = VerificationReport(invariant=name, order=order)
    npairs = order * (order - 1) // 2
    for mask in range(1 << npairs):
        if not _shard_keep(shard, mask):
            continue
        for a in range(order):
            for b in range(order):
                if a == b:
                    continue
                other = tilde_mask(order, mask, a, b)
                report.checked += 1
                if table[mask] != table[other]:
                    report.add_violation(
                        [
                            format_graph(SimpleGraph.from_edge_mask(order, m))
                            for m in (mask, other)
                        ],
                        table[mask] - table[other],
                    )
    return report.finalize()


def suite_mutation(
    order: int, shard: tuple[int, int] | None = None
) -> VerificationReport:
    """Mutations must preserve the labeled intersection graph and R_k."""
    report = VerificationReport(invariant="mutation", order=order)
    k = order // 2 if order % 2 == 0 and order >= 4 else None
    for idx, d in enumerate(enumerate_diagrams(order, "up-to-rotation")):
        if not _shard_keep(shard, idx):
            continue
        base_rows = interleave_rows(d.word)
        base_rk = r_k(d, k) if k else None
        for share in find_shares(d):
            for kind in MutationKind:
                w = mutated_word(d, share, kind)
                report.checked += 1
                mutated = ChordDiagram(w)
                bad = interleave_rows(w) != base_rows
                if not bad and k:
                    bad = r_k(mutated, k) != base_rk
                if bad:
                    report.add_violation(
                        [
                            canonical_code(d).decode("ascii"),
                            canonical_code(mutated).decode("ascii"),
                            f"share={sorted(share.chords)}",
                            kind.value,
                        ],
                        "graph-or-rk-changed",
                    )
    return report.finalize()


def suite_parity(
    order: int,
    k: int,
    mode: str = "exhaustive",
    count: int = 0,
    seed: int = 0,
    shard: tuple[int, int] | None = None,
) -> VerificationReport:
    """R_k and the 2k-cycle count must have equal parity."""
    report = VerificationReport(invariant=f"r{k}-vs-e{2 * k}-parity", order=order)
    if mode == "exhaustive":
        cache: dict[bytes, bool] = {}
        for idx, d in enumerate(enumerate_diagrams(order, "basepointed")):
            if not _shard_keep(shard, idx):
                continue
            report.checked += 1
            code = canonical_code(d)
            ok = cache.get(code)
            if ok is None:
                g = SimpleGraph(d.n, interleave_rows(d.word))
                ok = r_k(d, k) & 1 == e_l_parity(g, 2 * k)
                cache[code] = ok
            if not ok:
                report.add_violation([code.decode("ascii")], "parity-differs")
        return report.finalize()
    if order != 2 * k:
        raise ValueError("sampled parity mode requires order == 2k")
    rng = random.Random(seed)
    words = [random_diagram(order, rng).word for _ in range(count)]
    signed = np.zeros((count, order, order), dtype=np.int8)
    plain = np.zeros((count, order, order), dtype=np.int8)
    for i, wd in enumerate(words):
        signed[i] = dense_sign_matrix(wd)
        plain[i] = _adjacency_matrix(wd)
    rk_vals = hamiltonian_cycle_sums(signed)
    counts = hamiltonian_cycle_sums(plain)
    report.checked = count
    for bad in np.nonzero((rk_vals - counts) & 1)[0]:
        report.add_violation(
            [canonical_word_bytes(words[bad]).decode("ascii")], "parity-differs"
        )
    return report.finalize()


def suite_conjecture(
    k: int,
    mode: str = "exhaustive",
    count: int = 0,
    seed: int = 0,
    shard: tuple[int, int] | None = None,
) -> VerificationReport:
    """Coefficient of c^k in the projected sl2 value equals 2 R_k."""
    from .invariants import conjecture_check

    order = 2 * k
    report = VerificationReport(invariant=f"conjecture-k{k}", order=order)
    if mode == "exhaustive":
        diagrams = enumerate_diagrams(order, "basepointed")
    else:
        rng = random.Random(seed)
        diagrams = (random_diagram(order, rng) for _ in range(count))
    cache: dict[bytes, tuple[bool, str]] = {}
    for idx, d in enumerate(diagrams):
        if not _shard_keep(shard, idx):
            continue
        report.checked += 1
        code = canonical_code(d)
        hit = cache.get(code)
        if hit is None:
            res = conjecture_check(d, k)
            hit = cache[code] = (res.equal, f"lhs={res.lhs} rhs={res.rhs}")
        if not hit[0]:
            report.add_violation([code.decode("ascii")], hit[1])
    return report.finalize()


def suite_wc_identity(
    k: int, shard: tuple[int, int] | None = None
) -> VerificationReport:
    """R_k equals the halved projected-indicator route on every
    basepointed 2k-chord diagram (cached per rotation class)."""
    order = 2 * k
    report = VerificationReport(invariant=f"rk-wc-identity-k{k}", order=order)
    cache: dict[bytes, tuple[int, int]] = {}
    for idx, d in enumerate(enumerate_diagrams(order, "basepointed")):
        if not _shard_keep(shard, idx):
            continue
        report.checked += 1
        code = canonical_code(d)
        pair = cache.get(code)
        if pair is None:
            pair = cache[code] = (r_k(d, k), r_k_via_wc(d, k))
        if pair[0] != pair[1]:
            report.add_violation(
                [code.decode("ascii")], f"rk={pair[0]} via_wc={pair[1]}"
            )
    return report.finalize()


def suite_oracle_equivalence(
    order: int,
    mode: str = "exhaustive",
    count: int = 0,
    seed: int = 0,
    shard: tuple[int, int] | None = None,
) -> VerificationReport:
    """Contraction oracle equals the recursive sl2 evaluation."""
    report = VerificationReport(invariant="sl2-oracle-vs-recursive", order=order)
    if mode == "exhaustive":
        diagrams = enumerate_diagrams(order, "basepointed")
    else:
        rng = random.Random(seed)
        diagrams = (random_diagram(order, rng) for _ in range(count))
    for idx, d in enumerate(diagrams):
        if not _shard_keep(shard, idx):
            continue
        report.checked += 1
        a = sl2_oracle(d)
        b = sl2_recursive(d)
        if a != b:
            report.add_violation(
                [canonical_code(d).decode("ascii")], f"oracle={a} recursive={b}"
            )
    return report.finalize()


def suite_wheel_prism() -> tuple[VerificationReport, list[dict]]:
    """Resolve the five-wheel and three-prism; verify values and agreement.

    Returns the report plus one info record per target for display.
    """
    report = VerificationReport(invariant="wheel-prism", order=6)
    info = []
    for rep in sl2_graph_extension_check():
        report.checked += 1
        info.append(
            {
                "target": rep.name,
                "rk": rep.rk,
                "value": rep.value.pretty(),
                "primitive": rep.primitive.pretty(),
                "resolutions": len(rep.values),
                "consistent": rep.consistent,
            }
        )
        if not rep.matches_expected or not rep.component_rk_ok:
            report.add_violation(
                [rep.name],
                f"value={rep.value} primitive={rep.primitive} rk={rep.rk}",
            )
    return report.finalize(), info


# ---------------------------------------------------------------------------
# invariant registries


def _diagram_invariant(invariant: str, k: int | None, l: int | None):
    if invariant == "rk":
        if not k:
            raise ValueError("rk requires --k")
        return f"r{k}", lambda d: r_k(d, k)
    if invariant == "el-parity":
        if not l:
            raise ValueError("el-parity requires --l")
        cache: dict[bytes, int] = {}
        def f(d: ChordDiagram) -> int:
            code = canonical_code(d)
            val = cache.get(code)
            if val is None:
                val = cache[code] = e_l_parity(
                    SimpleGraph(d.n, interleave_rows(d.word)), l
                )
            return val
        # parity invariants live mod 2: compare signed sums mod 2
        return f"e{l}-parity", _Mod2(f)
    if invariant == "sl2":
        return "sl2", sl2_recursive
    raise ValueError(f"unknown diagram invariant: {invariant!r}")


class _Mod2:
    """Wrap a 0/1 invariant so signed sums are evaluated mod 2."""

    def __init__(self, f):
        self.f = f

    def __call__(self, d):
        return _Bit(self.f(d))


class _Bit(int):
    def __new__(cls, v):
        return super().__new__(cls, v & 1)

    def __add__(self, other):
        return _Bit(int(self) ^ int(other))

    __radd__ = __add__

    def __sub__(self, other):
        return _Bit(int(self) ^ int(other))

    def __rsub__(self, other):
        return _Bit(int(self) ^ int(other))

    def __mul__(self, other):
        return _Bit(int(self) & (int(other) & 1))

    def __rmul__(self, other):
        return _Bit((int(other) & 1) & int(self))

    def __neg__(self):
        return self


def _graph_invariant_table(invariant: str, order: int, k: int | None, l: int | None):
    npairs = order * (order - 1) // 2
    if invariant == "rk-graph":
        if not k:
            raise ValueError("rk-graph requires --k")
        if order != 2 * k:
            raise ValueError("rk-graph 4-term check runs at order == 2k")
        table = [
            r_k_graph(SimpleGraph.from_edge_mask(order, m), k)
            for m in range(1 << npairs)
        ]
        return f"r{k}-graph", table
    if invariant == "el-parity":
        if not l:
            raise ValueError("el-parity requires --l")
        if l == order:
            # full-length cycles: one vectorized Hamiltonian DP over every
            # labeled graph at once
            mats = np.zeros((1 << npairs, order, order), dtype=np.int8)
            from .graphs import pair_index_table

            ptab = pair_index_table(order)
            for u in range(order):
                for v in range(u + 1, order):
                    bit = ptab[u][v]
                    masks = (np.arange(1 << npairs) >> bit) & 1
                    mats[:, u, v] = masks
                    mats[:, v, u] = masks
            counts = hamiltonian_cycle_sums(mats)
            table = [_Bit(int(x)) for x in counts & 1]
        else:
            table = [
                _Bit(e_l_parity(SimpleGraph.from_edge_mask(order, m), l))
                for m in range(1 << npairs)
            ]
        return f"e{l}-parity", table
    raise ValueError(f"unknown graph invariant: {invariant!r}")
