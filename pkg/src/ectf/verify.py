"""Certification engine for triangle-free extension properties.

Implements the definitional checkers (triangle-freeness, twin-freeness,
anti-triangles, common-neighbor properties for independent sets up to a
given size, and the two equivalent existential-extension formulations),
multiplicity computation, circular-graph recognition, and the hypercube
majority-vote center construction.

All checkers operate on the explicit Graph only.  Enumeration of candidate
sets proceeds lexicographically (sizes ascending, then tuples, then subset
membership masks), and reported witnesses are always the first violation
in that order, so results are reproducible at any thread count: parallel
runs partition the outer loop into contiguous chunks and reduce in order.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Optional

import numpy as np

from .families import circular
from .graphs import Graph, ParameterError, bit_indices, iter_bits
from .isomorphism import are_isomorphic

# graphs larger than this use the numpy-vectorized size-3 inner loops
_VECTOR_MIN_ORDER = 81


# ---------------------------------------------------------------------------
# parallel partition helpers (ordered reduction keeps witnesses deterministic)
# ---------------------------------------------------------------------------


def _pair_count(n: int) -> int:
    return n * (n - 1) // 2


def _pair_from_rank(r: int, n: int) -> tuple[int, int]:
    """Inverse of the lexicographic rank of pairs (a, b), a < b."""
    a = 0
    remaining = r
    width = n - 1
    while remaining >= width:
        remaining -= width
        a += 1
        width -= 1
    return a, a + 1 + remaining


def _run_chunks(
    total: int, threads: int, worker: Callable[[int, int], Optional[tuple]]
) -> Optional[tuple]:
    """Run worker(lo, hi) over contiguous chunks; return the first finding.

    worker returns the first finding inside its range or None, so reducing
    in chunk order yields the globally first finding.
    """
    if total <= 0:
        return None
    if threads <= 1:
        return worker(0, total)
    threads = min(threads, total)
    bounds = [total * i // threads for i in range(threads + 1)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(worker, bounds[i], bounds[i + 1]) for i in range(threads)
        ]
        for fut in futures:
            res = fut.result()
            if res is not None:
                return res
    return None


def _min_over_chunks(
    total: int, threads: int, worker: Callable[[int, int], Optional[tuple]]
) -> Optional[tuple]:
    """Min-reduce worker results (value, orderkey, payload) over chunks."""
    if total <= 0:
        return None
    if threads <= 1:
        return worker(0, total)
    threads = min(threads, total)
    bounds = [total * i // threads for i in range(threads + 1)]
    best = None
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(worker, bounds[i], bounds[i + 1]) for i in range(threads)
        ]
        for fut in futures:
            res = fut.result()
            if res is not None and (best is None or res[:2] < best[:2]):
                best = res
    return best


# ---------------------------------------------------------------------------
# basic checkers
# ---------------------------------------------------------------------------


def is_triangle_free(g: Graph) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """No three mutually adjacent vertices; witness is the first triangle
    found scanning edges (u, v), u < v, lexicographically."""
    rows = g.rows
    for u in range(g.order):
        x = rows[u] >> (u + 1)
        base = u + 1
        while x:
            lsb = x & -x
            v = base + lsb.bit_length() - 1
            common = rows[u] & rows[v]
            if common:
                w = (common & -common).bit_length() - 1
                return False, tuple(sorted((u, v, w)))
            x ^= lsb
    return True, None


def is_twin_free(g: Graph) -> tuple[bool, Optional[tuple[int, int]]]:
    """No two vertices with identical neighborhoods."""
    seen: dict[int, int] = {}
    for v in range(g.order):
        r = g.rows[v]
        if r in seen:
            return False, (seen[r], v)
        seen[r] = v
    return True, None


def has_anti_triangle(g: Graph) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Whether some three vertices are pairwise nonadjacent; on success the
    witness is the first such triple in lexicographic order."""
    rows = g.rows
    full = g.full_mask
    n = g.order
    for u in range(n):
        cand_u = ~rows[u] & full & ~((1 << (u + 1)) - 1)
        for v in iter_bits(cand_u):
            w_mask = cand_u & ~rows[v] & ~((1 << (v + 1)) - 1)
            if w_mask:
                w = (w_mask & -w_mask).bit_length() - 1
                return True, (u, v, w)
    return False, None


def _first_empty_single(g: Graph) -> Optional[tuple[int]]:
    for v in range(g.order):
        if not g.rows[v]:
            return (v,)
    return None


def _first_uncovered_pair(
    g: Graph, threads: int
) -> Optional[tuple[int, int]]:
    rows = g.rows
    n = g.order

    def worker(lo: int, hi: int) -> Optional[tuple[int, int]]:
        r = lo
        a, b = _pair_from_rank(lo, n) if lo < hi else (0, 0)
        while r < hi:
            if not (rows[a] >> b) & 1 and not rows[a] & rows[b]:
                return (a, b)
            r += 1
            b += 1
            if b == n:
                a += 1
                b = a + 1
        return None

    return _run_chunks(_pair_count(n), threads, worker)


def _first_uncovered_triple(
    g: Graph, threads: int
) -> Optional[tuple[int, int, int]]:
    """First independent triple (lex) with no common neighbor.

    Per independent pair (a, b), a vertex c has a common neighbor with both
    iff c is adjacent to some common neighbor of the pair, so the failing
    extensions are exactly the independent c outside the union of the
    neighborhoods of common neighbors.
    """
    rows = g.rows
    n = g.order
    full = g.full_mask

    def worker(lo: int, hi: int) -> Optional[tuple[int, int, int]]:
        r = lo
        if lo >= hi:
            return None
        a, b = _pair_from_rank(lo, n)
        while r < hi:
            if not (rows[a] >> b) & 1:
                both = rows[a] & rows[b]
                cand = ~(rows[a] | rows[b]) & full & ~((1 << (b + 1)) - 1)
                if cand:
                    cover = 0
                    for p in iter_bits(both):
                        cover |= rows[p]
                        if cand & ~cover == 0:
                            break
                    bad = cand & ~cover
                    if bad:
                        return (a, b, (bad & -bad).bit_length() - 1)
            r += 1
            b += 1
            if b == n:
                a += 1
                b = a + 1
        return None

    return _run_chunks(_pair_count(n), threads, worker)


def satisfies_adj_k(
    g: Graph, k: int, threads: int = 1
) -> tuple[bool, Optional[tuple]]:
    """Every independent set of cardinality 1..k has a common neighbor;
    on failure returns the first uncovered independent set."""
    if k < 1:
        raise ParameterError(f"adjacency property needs k >= 1, got {k}")
    w = _first_empty_single(g)
    if w is not None:
        return False, w
    if k >= 2:
        w = _first_uncovered_pair(g, threads)
        if w is not None:
            return False, w
    if k >= 3:
        w = _first_uncovered_triple(g, threads)
        if w is not None:
            return False, w
    for size in range(4, k + 1):
        found = _first_uncovered_set(g, size)
        if found is not None:
            return False, found
    return True, None


def _first_uncovered_set(g: Graph, size: int) -> Optional[tuple]:
    """First independent set of exactly `size` vertices without a common
    neighbor (sizes below `size` must already be covered)."""
    rows = g.rows
    full = g.full_mask

    def rec(prefix: list[int], cand: int, inter: int) -> Optional[tuple]:
        if len(prefix) == size:
            return tuple(prefix) if not inter else None
        for v in iter_bits(cand):
            res = rec(
                prefix + [v],
                cand & ~rows[v] & ~((1 << (v + 1)) - 1),
                inter & rows[v],
            )
            if res is not None:
                return res
        return None

    return rec([], full, full)


# ---------------------------------------------------------------------------
# existential extension properties
# ---------------------------------------------------------------------------


def _independent(rows: tuple[int, ...], verts: tuple[int, ...]) -> bool:
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            if (rows[u] >> v) & 1:
                return False
    return True


def _extension_candidates(
    g: Graph, a_set: tuple[int, ...], bmask: int
) -> int:
    """Bitset of vertices outside a_set adjacent to exactly the bmask-selected
    members of a_set (and to no other member)."""
    cand = g.full_mask
    for i, v in enumerate(a_set):
        if (bmask >> i) & 1:
            cand &= g.rows[v]
        else:
            cand &= ~g.rows[v]
        cand &= ~(1 << v)
    return cand


def _e3_vectorized_pairs(
    g: Graph, threads: int, independent_only: bool
) -> Optional[tuple[tuple, tuple]]:
    """Size-3 search for a failing (A, B): A = (a, b, c) scanned in
    lexicographic order, B by membership mask within A, vectorized over c.

    With independent_only, A ranges over independent triples (the variant
    needed by the exactly-k formulation); otherwise over all triples.
    """
    n = g.order
    rows = g.rows
    packed = g.packed()
    words = packed.shape[1]
    notadj = ~packed
    if n % 64:
        notadj[:, -1] &= np.uint64((1 << (n % 64)) - 1)
    for v in range(n):
        notadj[v, v >> 6] &= np.uint64(~(1 << (v & 63)) & 0xFFFFFFFFFFFFFFFF)
    adj_bool = np.unpackbits(
        packed.view(np.uint8), axis=1, bitorder="little", count=n
    ).astype(bool)
    maxdeg = max(g.degrees()) if n else 0

    def to_words(x: int) -> np.ndarray:
        return np.frombuffer(x.to_bytes(words * 8, "little"), dtype="<u8")

    def first_true(mask: np.ndarray) -> Optional[int]:
        idx = int(np.argmax(mask))
        return idx if mask[idx] else None

    def check_pair(a: int, b: int) -> Optional[tuple]:
        if b + 1 >= n:
            return None
        ab_adjacent = (rows[a] >> b) & 1
        if independent_only and ab_adjacent:
            return None
        adj_hi = packed[b + 1 :]
        not_hi = notadj[b + 1 :]
        ncs = n - b - 1
        if independent_only:
            valid = ~adj_bool[a, b + 1 :] & ~adj_bool[b, b + 1 :]
            if not valid.any():
                return None
        else:
            valid = None
        clear_ab = ~((1 << a) | (1 << b))
        bases = {
            0: (~(rows[a] | rows[b])) & g.full_mask & clear_ab,
            1: rows[a] & ~rows[b] & clear_ab,
            2: ~rows[a] & rows[b] & clear_ab,
        }
        if not ab_adjacent:
            bases[3] = rows[a] & rows[b]
        best: Optional[tuple[int, int]] = None  # (c, B-membership mask)

        def note(c: Optional[int], mask: int):
            nonlocal best
            if c is not None and (best is None or (c, mask) < best):
                best = (c, mask)

        for b2mask in (0, 1, 2, 3):
            base_int = bases.get(b2mask)
            if base_int is None:
                continue
            size = base_int.bit_count()
            base_w = to_words(base_int) if size else None
            # c outside B (B = the b2mask subset of {a, b}): some candidate
            # must avoid N(c) and c itself
            if size == 0:
                note(b + 1 if valid is None else
                     (None if (ft := first_true(valid)) is None else b + 1 + ft),
                     b2mask)
            elif size <= maxdeg + 1:
                # a larger base cannot be swallowed by any closed neighborhood
                ok = (not_hi & base_w).any(axis=1)
                if valid is not None:
                    ok |= ~valid
                if not ok.all():
                    note(b + 1 + int(np.argmin(ok)), b2mask)
            # c inside B (B = b2mask subset + {c}): some candidate must be
            # adjacent to c; B must stay independent
            if valid is not None:
                cvalid = valid
            else:
                cvalid = np.ones(ncs, dtype=bool)
                if b2mask & 1:
                    cvalid &= ~adj_bool[a, b + 1 :]
                if b2mask & 2:
                    cvalid &= ~adj_bool[b, b + 1 :]
            if size == 0:
                bad = cvalid
            else:
                ok = (adj_hi & base_w).any(axis=1)
                bad = cvalid & ~ok
            note(None if (ft := first_true(bad)) is None else b + 1 + ft, b2mask | 4)
        if best is None:
            return None
        c, mask = best
        a_set = (a, b, c)
        b_set = tuple(a_set[i] for i in range(3) if (mask >> i) & 1)
        return a_set, b_set

    def worker(lo: int, hi: int) -> Optional[tuple]:
        if lo >= hi:
            return None
        a, b = _pair_from_rank(lo, n)
        for _ in range(lo, hi):
            res = check_pair(a, b)
            if res is not None:
                return res
            b += 1
            if b == n:
                a += 1
                b = a + 1
        return None

    return _run_chunks(_pair_count(n), threads, worker)


def satisfies_e_k(
    g: Graph, k: int, threads: int = 1
) -> tuple[bool, Optional[tuple[tuple, tuple]]]:
    """Definitional existential completeness check.

    For every A of at most k vertices and every independent B inside A there
    must be a vertex outside A adjacent to all of B and to none of A minus B.
    Returns the first failing (A, B) otherwise; A scanned lexicographically
    by size then tuple, B by membership mask within A.
    """
    if k < 1:
        raise ParameterError(f"existential completeness needs k >= 1, got {k}")
    if g.order == 0:
        return False, ((), ())
    small = min(k, 2) if g.order >= _VECTOR_MIN_ORDER and k >= 3 else k
    witness = _e_k_generic_limited(g, small)
    if witness is not None:
        return False, witness
    if small == k:
        return True, None
    witness = _e3_vectorized_pairs(g, threads, independent_only=False)
    if witness is not None:
        return False, witness
    for size in range(4, k + 1):
        witness = _e_k_size_generic(g, size)
        if witness is not None:
            return False, witness
    return True, None


def _e_k_generic_limited(g: Graph, kmax: int) -> Optional[tuple[tuple, tuple]]:
    for size in range(1, kmax + 1):
        witness = _e_k_size_generic(g, size)
        if witness is not None:
            return witness
    return None


def _e_k_size_generic(g: Graph, size: int) -> Optional[tuple[tuple, tuple]]:
    rows = g.rows
    for a_set in combinations(range(g.order), size):
        for bmask in range(1 << size):
            b_set = tuple(a_set[i] for i in range(size) if (bmask >> i) & 1)
            if not _independent(rows, b_set):
                continue
            if not _extension_candidates(g, a_set, bmask):
                return a_set, b_set
    return None


def _extends_to_independent(g: Graph, s_set: tuple[int, ...], k: int) -> bool:
    """Whether the independent set s_set is contained in an independent set
    of cardinality exactly k."""
    rows = g.rows
    cand = g.full_mask
    for v in s_set:
        cand &= ~rows[v] & ~(1 << v)

    def rec(cand_mask: int, need: int) -> bool:
        if need == 0:
            return True
        if cand_mask.bit_count() < need:
            return False
        for v in iter_bits(cand_mask):
            if rec(cand_mask & ~rows[v] & ~((1 << (v + 1)) - 1), need - 1):
                return True
        return False

    return rec(cand, k - len(s_set))


def satisfies_e_k_prime(
    g: Graph, k: int, threads: int = 1
) -> tuple[bool, Optional[tuple]]:
    """The exactly-k variant: every independent A of cardinality exactly k
    realizes all subsets B (witness ("attach", A, B) on failure), and every
    independent set of fewer than k vertices extends to an independent
    k-set (witness ("extend", S) on failure).

    The extension clause is checked first (sizes ascending, sets in
    lexicographic order), then the realization clause.
    """
    if k < 2:
        raise ParameterError(f"exactly-k completeness needs k >= 2, got {k}")
    rows = g.rows
    n = g.order
    if n == 0:
        return False, ("extend", ())
    if not _extends_to_independent(g, (), k):
        return False, ("extend", ())
    for size in range(1, k):
        for s_set in combinations(range(n), size):
            if not _independent(rows, s_set):
                continue
            if not _extends_to_independent(g, s_set, k):
                return False, ("extend", s_set)
    if k == 3 and n >= _VECTOR_MIN_ORDER:
        witness = _e3_vectorized_pairs(g, threads, independent_only=True)
        if witness is not None:
            return False, ("attach", witness[0], witness[1])
        return True, None
    for a_set in combinations(range(n), k):
        if not _independent(rows, a_set):
            continue
        for bmask in range(1 << k):
            b_set = tuple(a_set[i] for i in range(k) if (bmask >> i) & 1)
            if not _extension_candidates(g, a_set, bmask):
                return False, ("attach", a_set, b_set)
    return True, None


# ---------------------------------------------------------------------------
# circular recognition and the 3ECTF verdict
# ---------------------------------------------------------------------------


def recognize_circular(g: Graph) -> Optional[int]:
    """n such that g is isomorphic to the circular graph on 3n-1 vertices
    (arcs of n consecutive elements, adjacent when disjoint), else None."""
    nv = g.order
    if nv < 2 or (nv + 1) % 3:
        return None
    n = (nv + 1) // 3
    degs = g.degrees()
    if degs.count(n) != nv:
        return None
    return n if are_isomorphic(g, circular(n)) is not None else None


@dataclass
class CheckResult:
    verdict: object
    witness: object = None
    millis: float = 0.0


@dataclass
class PropertyReport:
    """Ordered per-property verdicts with witnesses and timings.

    The text rendering includes per-check milliseconds; the JSON rendering
    is canonical (sorted keys, no timings) so identical inputs produce
    byte-identical machine-readable reports.
    """

    order: int
    edges: int
    checks: dict[str, CheckResult] = field(default_factory=dict)

    def add(self, name: str, verdict, witness=None, millis: float = 0.0) -> None:
        self.checks[name] = CheckResult(verdict, witness, millis)

    def verdict(self, name: str):
        return self.checks[name].verdict

    def witness(self, name: str):
        return self.checks[name].witness

    def __contains__(self, name: str) -> bool:
        return name in self.checks

    @property
    def is_3ectf(self) -> bool:
        return bool(self.checks["is_3ectf"].verdict)

    @property
    def is_circular(self) -> Optional[int]:
        return self.checks["is_circular"].verdict

    def to_text(self) -> str:
        lines = [f"order {self.order}", f"edges {self.edges}"]
        for name, res in self.checks.items():
            if name == "is_circular":
                verdict = "absent" if res.verdict is None else f"n={res.verdict}"
            else:
                verdict = "true" if res.verdict else "false"
            witness = "-" if res.witness is None else repr(res.witness)
            lines.append(f"{name}\t{verdict}\t{witness}\t{res.millis:.3f}ms")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "order": self.order,
            "edges": self.edges,
            "checks": {
                name: {"verdict": res.verdict, "witness": _jsonable(res.witness)}
                for name, res in self.checks.items()
            },
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _jsonable(obj):
    if isinstance(obj, tuple):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, list):
        return [_jsonable(x) for x in obj]
    return obj


def _timed(report: PropertyReport, name: str, fn: Callable[[], tuple]) -> tuple:
    start = time.perf_counter()
    verdict, witness = fn()
    report.add(name, verdict, witness, (time.perf_counter() - start) * 1e3)
    return verdict, witness


def is_3ectf(g: Graph, threads: int = 1) -> PropertyReport:
    """Fast-path 3ECTF verdict: triangle-free, all independent sets of at
    most 3 vertices have common neighbors, twin-free, and not circular."""
    report = PropertyReport(g.order, g.edge_count)
    tf, _ = _timed(report, "triangle_free", lambda: is_triangle_free(g))
    if not tf:
        report.add("is_3ectf", False, ("triangle", report.witness("triangle_free")))
        return report
    adj3, _ = _timed(report, "adj_3", lambda: satisfies_adj_k(g, 3, threads))
    twin, _ = _timed(report, "twin_free", lambda: is_twin_free(g))
    start = time.perf_counter()
    circ = recognize_circular(g)
    report.add("is_circular", circ, None, (time.perf_counter() - start) * 1e3)
    verdict = adj3 and twin and circ is None
    reason = None
    if not verdict:
        if not adj3:
            reason = ("uncovered", report.witness("adj_3"))
        elif not twin:
            reason = ("twins", report.witness("twin_free"))
        else:
            reason = ("circular", circ)
    report.add("is_3ectf", verdict, reason)
    return report


def certify(
    g: Graph,
    k_max: int = 3,
    threads: int = 1,
    include_extension: bool = True,
) -> PropertyReport:
    """Full property battery through the requested k.

    Computes triangle-freeness, twin-freeness, anti-triangle existence,
    the common-neighbor properties and (optionally) both existential
    formulations for k = 1..k_max, maximality, circular recognition, and
    the combined 3ECTF verdict when k_max >= 3.
    """
    if k_max < 1:
        raise ParameterError(f"certify needs k_max >= 1, got {k_max}")
    report = PropertyReport(g.order, g.edge_count)
    tf, _ = _timed(report, "triangle_free", lambda: is_triangle_free(g))
    if not tf:
        report.add("is_3ectf", False, ("triangle", report.witness("triangle_free")))
        return report
    _timed(report, "twin_free", lambda: is_twin_free(g))
    _timed(report, "anti_triangle", lambda: has_anti_triangle(g))
    for k in range(1, k_max + 1):
        _timed(report, f"adj_{k}", lambda k=k: satisfies_adj_k(g, k, threads))
    adj2 = report.verdict("adj_2") if k_max >= 2 else satisfies_adj_k(g, 2, threads)[0]
    report.add("maximal_triangle_free", tf and adj2)
    if include_extension:
        for k in range(1, k_max + 1):
            _timed(report, f"e_{k}", lambda k=k: satisfies_e_k(g, k, threads))
    start = time.perf_counter()
    circ = recognize_circular(g)
    report.add("is_circular", circ, None, (time.perf_counter() - start) * 1e3)
    if k_max >= 3:
        verdict = bool(report.verdict("adj_3")) and bool(
            report.verdict("twin_free")
        ) and circ is None
        reason = None
        if not verdict:
            if not report.verdict("adj_3"):
                reason = ("uncovered", report.witness("adj_3"))
            elif not report.verdict("twin_free"):
                reason = ("twins", report.witness("twin_free"))
            else:
                reason = ("circular", circ)
        report.add("is_3ectf", verdict, reason)
    return report


# ---------------------------------------------------------------------------
# multiplicities
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MultiplicityResult:
    """Minimum common-neighbor count over independent k-sets.

    value is None when no independent k-set exists (exact mode) or none was
    sampled; in sampled mode the value is only an upper bound for the true
    minimum and the generator name and trial count are recorded.
    """

    k: int
    value: Optional[int]
    witness: Optional[tuple]
    exact: bool
    trials: Optional[int] = None
    seed: Optional[int] = None
    rng: Optional[str] = None

    @property
    def no_independent_set(self) -> bool:
        return self.value is None


def multiplicity(
    g: Graph,
    k: int,
    mode: str = "exact",
    trials: int = 10000,
    seed: int = 0,
    threads: int = 1,
) -> MultiplicityResult:
    """Smallest number of common neighbors over independent k-sets.

    Exact mode scans all independent k-sets (lexicographically; the witness
    is the first achieving the minimum).  Sampled mode draws uniform k-sets
    with a seeded PCG64 generator, discards dependent ones, and reports the
    sample minimum as an upper bound.
    """
    if k < 1:
        raise ParameterError(f"multiplicity needs k >= 1, got {k}")
    if mode not in ("exact", "sampled"):
        raise ParameterError(f"multiplicity mode must be exact or sampled, got {mode}")
    if mode == "sampled":
        return _multiplicity_sampled(g, k, trials, seed)
    value_witness = _multiplicity_exact(g, k, threads)
    if value_witness is None:
        return MultiplicityResult(k, None, None, exact=True)
    value, witness = value_witness
    return MultiplicityResult(k, value, witness, exact=True)


def _multiplicity_exact(
    g: Graph, k: int, threads: int
) -> Optional[tuple[int, tuple]]:
    rows = g.rows
    n = g.order
    if k == 1:
        best = None
        for v in range(n):
            d = rows[v].bit_count()
            if best is None or d < best[0]:
                best = (d, (v,))
        return best
    if k == 2:
        res = _min_over_chunks(
            _pair_count(n), threads, lambda lo, hi: _mu2_worker(g, lo, hi)
        )
        return (res[0], res[2]) if res is not None else None
    if k == 3:
        if n >= _VECTOR_MIN_ORDER:
            res = _min_over_chunks(
                _pair_count(n), threads, lambda lo, hi: _mu3_worker_np(g, lo, hi)
            )
        else:
            res = _min_over_chunks(
                _pair_count(n), threads, lambda lo, hi: _mu3_worker(g, lo, hi)
            )
        return (res[0], res[2]) if res is not None else None
    return _mu_generic(g, k)


def _mu2_worker(g: Graph, lo: int, hi: int) -> Optional[tuple]:
    rows = g.rows
    n = g.order
    if lo >= hi:
        return None
    a, b = _pair_from_rank(lo, n)
    best = None
    r = lo
    while r < hi:
        if not (rows[a] >> b) & 1:
            cnt = (rows[a] & rows[b]).bit_count()
            if best is None or cnt < best[0]:
                best = (cnt, r, (a, b))
                if cnt == 0:
                    return best
        r += 1
        b += 1
        if b == n:
            a += 1
            b = a + 1
    return best


def _mu3_worker(g: Graph, lo: int, hi: int) -> Optional[tuple]:
    rows = g.rows
    n = g.order
    full = g.full_mask
    if lo >= hi:
        return None
    a, b = _pair_from_rank(lo, n)
    best = None
    r = lo
    while r < hi:
        if not (rows[a] >> b) & 1:
            both = rows[a] & rows[b]
            cand = ~(rows[a] | rows[b]) & full & ~((1 << (b + 1)) - 1)
            for c in iter_bits(cand):
                cnt = (both & rows[c]).bit_count()
                if best is None or cnt < best[0]:
                    best = (cnt, r, (a, b, c))
                    if cnt == 0:
                        return best
        r += 1
        b += 1
        if b == n:
            a += 1
            b = a + 1
    return best


def _mu3_worker_np(g: Graph, lo: int, hi: int) -> Optional[tuple]:
    rows = g.rows
    n = g.order
    packed = g.packed()
    words = packed.shape[1]
    if lo >= hi:
        return None
    nonadj = np.zeros((n, n), dtype=bool)
    for v in range(n):
        nonadj[v, bit_indices(rows[v])] = True
    np.logical_not(nonadj, out=nonadj)
    np.fill_diagonal(nonadj, False)
    a, b = _pair_from_rank(lo, n)
    best = None
    r = lo
    while r < hi:
        if nonadj[a, b]:
            both = rows[a] & rows[b]
            both_w = np.frombuffer(both.to_bytes(words * 8, "little"), dtype="<u8")
            cand = nonadj[a, b + 1 :] & nonadj[b, b + 1 :]
            idx = np.nonzero(cand)[0]
            if idx.size:
                counts = np.bitwise_count(packed[b + 1 :][idx] & both_w).sum(axis=1)
                pos = int(np.argmin(counts))
                cnt = int(counts[pos])
                if best is None or cnt < best[0]:
                    best = (cnt, r, (a, b, b + 1 + int(idx[pos])))
                    if cnt == 0:
                        return best
        r += 1
        b += 1
        if b == n:
            a += 1
            b = a + 1
    return best


def _mu_generic(g: Graph, k: int) -> Optional[tuple[int, tuple]]:
    rows = g.rows
    full = g.full_mask
    best: Optional[tuple[int, tuple]] = None

    def rec(prefix: list[int], cand: int, inter: int) -> bool:
        nonlocal best
        if len(prefix) == k:
            cnt = inter.bit_count()
            if best is None or cnt < best[0]:
                best = (cnt, tuple(prefix))
                if cnt == 0:
                    return True
            return False
        for v in iter_bits(cand):
            if rec(
                prefix + [v],
                cand & ~rows[v] & ~((1 << (v + 1)) - 1),
                inter & rows[v],
            ):
                return True
        return False

    rec([], full, full)
    return best


def _multiplicity_sampled(
    g: Graph, k: int, trials: int, seed: int
) -> MultiplicityResult:
    if trials < 1:
        raise ParameterError(f"sampled multiplicity needs trials >= 1, got {trials}")
    rng = np.random.Generator(np.random.PCG64(seed))
    rows = g.rows
    n = g.order
    best = None
    if n >= k:
        for _ in range(trials):
            pick = tuple(sorted(int(v) for v in rng.choice(n, size=k, replace=False)))
            if not _independent(rows, pick):
                continue
            inter = g.full_mask
            for v in pick:
                inter &= rows[v]
            cnt = inter.bit_count()
            if best is None or cnt < best[0]:
                best = (cnt, pick)
    if best is None:
        return MultiplicityResult(
            k, None, None, exact=False, trials=trials, seed=seed, rng="PCG64"
        )
    return MultiplicityResult(
        k, best[0], best[1], exact=False, trials=trials, seed=seed, rng="PCG64"
    )


# ---------------------------------------------------------------------------
# hypercube center construction and common-neighbor count formula
# ---------------------------------------------------------------------------


def triangle_center(x: int, y: int, z: int, a: int, b: int, c: int) -> int:
    """A vector within distance a of x, b of y, and c of z, built from the
    coordinate-wise majority vote with a weight-reduction step.

    Requires d(x,y) <= a+b, d(x,z) <= a+c, d(y,z) <= b+c; the violated
    inequality is named otherwise.
    """
    for name, val in (("a", a), ("b", b), ("c", c)):
        if val < 0:
            raise ParameterError(f"radius {name} must be >= 0, got {val}")
    dxy, dxz, dyz = (x ^ y).bit_count(), (x ^ z).bit_count(), (y ^ z).bit_count()
    if dxy > a + b:
        raise ParameterError(f"d(x,y) = {dxy} exceeds a+b = {a + b}")
    if dxz > a + c:
        raise ParameterError(f"d(x,z) = {dxz} exceeds a+c = {a + c}")
    if dyz > b + c:
        raise ParameterError(f"d(y,z) = {dyz} exceeds b+c = {b + c}")
    maj = (x & y) | (x & z) | (y & z)
    shifted = [x ^ maj, y ^ maj, z ^ maj]
    bounds = [a, b, c]
    over = [i for i in range(3) if shifted[i].bit_count() > bounds[i]]
    if not over:
        return maj
    # the premises leave room for at most one violated bound
    i = over[0]
    excess = shifted[i].bit_count() - bounds[i]
    v = 0
    rest = shifted[i]
    for _ in range(excess):
        lsb = rest & -rest
        v |= lsb
        rest ^= lsb
    return v ^ maj


def mu2_hypercube_formula(k: int, t: int, parity_case: str) -> int:
    """Lower bound for the number of common neighbors of two vertices of the
    (3k+1)-dimensional construction at distance 2t (even) or 2t-1 (odd):
    flip 2k+1-t of the agreeing coordinates (2k+2-t in the odd case, with a
    factor 2 for the uneven split) and divide the disagreeing ones evenly.
    """
    if not (1 <= t <= k):
        raise ParameterError(f"need 1 <= t <= k, got t={t}, k={k}")
    if parity_case == "even":
        return comb(3 * k + 1 - 2 * t, k - t) * comb(2 * t, t)
    if parity_case == "odd":
        return 2 * comb(3 * k + 1 - (2 * t - 1), k - t) * comb(2 * t - 1, t)
    raise ParameterError(f"parity_case must be 'even' or 'odd', got {parity_case!r}")
