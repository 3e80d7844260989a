"""Exact star-family connectivity search plus an independent subset oracle.

The solver computes the minimum size of a family of pairwise vertex-disjoint
stars whose removal disconnects the host graph or leaves a trivial remainder.
Kind "structure" requires every element to be a K_{1,m} exactly; kind
"substructure" admits any K_{1,j} with j <= m, including the bare K_1.

Search scheme: iterative deepening on the family size t.  Families are sets,
so each one is enumerated exactly once by requiring strictly increasing
center positions under a fixed vertex permutation.  The decision pass may use
a heuristic permutation; when it succeeds, a second pass under the identity
permutation recovers the lexicographically least certificate.  Every pruning
rule is correctness-preserving and individually toggleable so tests can prove
value-equality with pruning off.

oracle_connectivity is deliberately dumber: enumerate vertex subsets, test
the cut condition, and cover the subset by disjoint stars via memoized
partition search.  It shares no search code with the solver beyond the graph
primitives, which is what makes the agreement tests meaningful.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Iterable, Iterator

from .cuts import (
    STRUCTURE,
    SUBSTRUCTURE,
    CutFamily,
    Star,
    canonical_star,
    is_structure_cut,
    is_substructure_cut,
)
from .graph import Graph, is_connected, mask_connected

ORACLE_SIZE_CAP = 14


@dataclass(frozen=True, slots=True)
class SearchOptions:
    """Knobs for the exact search; defaults are the fast path.

    strict_trivial narrows "trivial remainder" to exactly one vertex.
    induced additionally requires star leaves to be pairwise non-adjacent
    (a diagnostic mode; the default validity check is center-leaf edges
    only).  The prune_* switches never change results; they exist so tests
    can demonstrate that.  workers > 1 splits decision passes over
    first-choice subtrees; certificates always come from a deterministic
    sequential pass.  time_limit (seconds) turns an unfinished search into
    an incomplete result instead of an unbounded run.
    """

    strict_trivial: bool = False
    induced: bool = False
    prune_untouched: bool = True
    prune_damage_order: bool = True
    prune_symmetry: bool = True
    prune_degree_bound: bool = True
    prune_center_skip: bool = True
    workers: int = 1
    time_limit: float | None = None


@dataclass(frozen=True, slots=True)
class SolveResult:
    """Outcome of a bounded search.

    value and certificate are present iff a cutting family was found, and
    then the certificate has exactly `value` elements and passes the
    matching verifier.  bound is the largest family size settled: the found
    value, or t_max when every size up to t_max was ruled out.  complete is
    False only when a time limit stopped the search early; the sole claim
    then is that no family of size <= bound exists.
    """

    value: int | None
    certificate: CutFamily | None
    bound: int
    complete: bool


class _Deadline(Exception):
    pass


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        bit = mask & -mask
        mask ^= bit
        out.append(bit.bit_length() - 1)
    return out


def _mask_cut(g: Graph, rem: int, strict_trivial: bool) -> bool:
    size = rem.bit_count()
    if size <= 1:
        return size == 1 if strict_trivial else True
    return not mask_connected(g, rem)


def _leaf_sets(
    masks: tuple[int, ...],
    cands: list[int],
    m: int,
    exact: bool,
    induced: bool,
    center: int,
    cmask: int,
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield (leaves, star mask) for stars at `center`, lexicographically.

    cands must be the sorted candidate leaves (alive neighbors of center).
    Single-leaf stars whose leaf precedes the center are suppressed: the
    flipped orientation is canonical and is produced at the other center.
    """
    if exact:
        if len(cands) < m:
            return
        for combo in combinations(cands, m):
            if m == 1 and combo[0] < center:
                continue
            if induced and not _leaves_independent(masks, combo):
                continue
            smask = cmask
            for leaf in combo:
                smask |= 1 << leaf
            yield combo, smask
        return

    prefix: list[int] = []

    def grow(start: int, pmask: int) -> Iterator[tuple[tuple[int, ...], int]]:
        if len(prefix) != 1 or prefix[0] > center:
            yield tuple(prefix), cmask | pmask
        if len(prefix) == m:
            return
        for i in range(start, len(cands)):
            leaf = cands[i]
            lbit = 1 << leaf
            if induced and pmask & masks[leaf]:
                continue
            prefix.append(leaf)
            yield from grow(i + 1, pmask | lbit)
            prefix.pop()

    yield from grow(0, 0)


def _leaves_independent(masks: tuple[int, ...], leaves: tuple[int, ...]) -> bool:
    seen = 0
    for leaf in leaves:
        if masks[leaf] & seen:
            return False
        seen |= 1 << leaf
    return True


class _Engine:
    """One search pass: a fixed center permutation plus its memo tables."""

    def __init__(
        self, g: Graph, m: int, kind: str, opts: SearchOptions, damage_order: bool
    ):
        self.g = g
        self.m = m
        self.kind = kind
        self.opts = opts
        self.exact = kind == STRUCTURE
        n = g.n
        masks = g.masks
        order = list(range(n))
        if damage_order:
            # Boundary damage of the widest star at c: distinct vertices
            # adjacent to N[c] but outside it.  Centers that tear the most
            # go first; ties stay in id order for determinism.
            scores = []
            for c in range(n):
                closed = masks[c] | (1 << c)
                touch = closed
                for u in _bits(closed):
                    touch |= masks[u]
                scores.append((touch & ~closed).bit_count())
            order.sort(key=lambda c: (-scores[c], c))
        self.order = order
        # suffix_touch[p]: every vertex some star centered at position >= p
        # could remove.  Position here means index into the permutation.
        suffix = [0] * (n + 1)
        for p in range(n - 1, -1, -1):
            c = order[p]
            suffix[p] = suffix[p + 1] | masks[c] | (1 << c)
        self.suffix_touch = suffix
        # memo_tau[alive]: proven "no single cutting star at any position
        # above this threshold inside `alive`".  Family-size independent.
        self.memo_tau: dict[int, int] = {}
        self.nodes = 0
        self.deadline: float | None = None

    # -- prune predicates ------------------------------------------------

    def _check_deadline(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _Deadline

    def _is_clique(self, alive: int) -> bool:
        masks = self.g.masks
        rest = alive
        while rest:
            bit = rest & -rest
            rest ^= bit
            if masks[bit.bit_length() - 1] & alive != alive ^ bit:
                return False
        return True

    def _degree_bound_miss(self, alive: int, slots: int) -> bool:
        # If a cut needs removals X, the smallest remaining component C has
        # every neighbor inside C or X, so delta(alive) <= (|alive|+|X|)/2 - 1.
        # With |X| <= slots*(m+1) and a guaranteed nontrivial remainder,
        # violating that bound rules the whole subtree out.
        budget = slots * (self.m + 1)
        size = alive.bit_count()
        if size - budget < 2:
            return False
        masks = self.g.masks
        threshold = size + budget - 2
        rest = alive
        while rest:
            bit = rest & -rest
            rest ^= bit
            d = (masks[bit.bit_length() - 1] & alive).bit_count()
            if 2 * d <= threshold:
                return False
        return True

    def _untouched_miss(self, alive: int, pmax: int) -> bool:
        # Core = alive vertices no future star can remove.  If the core is
        # connected, has >= 2 vertices, and dominates everything alive, any
        # completion leaves a connected nontrivial remainder around it.
        core = alive & ~self.suffix_touch[pmax + 1]
        if core.bit_count() < 2:
            return False
        masks = self.g.masks
        cover = core
        for v in _bits(core):
            cover |= masks[v]
        if alive & ~cover:
            return False
        return mask_connected(self.g, core)

    def _center_hopeless(self, c: int, nb: int, deg: int, alive: int) -> bool:
        # Z = alive vertices out of the star's reach.  If Z is connected,
        # every alive neighbor of c hangs onto Z, and the remainder is
        # forced to keep >= 2 vertices, no star at c can cut.
        z = alive & ~nb & ~(1 << c)
        if not z:
            return False
        leftover = deg - self.m if deg > self.m else 0
        if z.bit_count() + leftover < 2:
            return False
        if not mask_connected(self.g, z):
            return False
        masks = self.g.masks
        rest = nb
        while rest:
            bit = rest & -rest
            rest ^= bit
            if not masks[bit.bit_length() - 1] & z:
                return False
        return True

    # -- last level: place one final star ---------------------------------

    def last_star(
        self, alive: int, min_pos: int, max_pos: int | None = None
    ) -> Star | None:
        """First star at a position in (min_pos, max_pos] that cuts `alive`.

        Scanning follows the engine permutation, so under the identity
        permutation the returned star is the least one by (center, leaves).
        Misses tighten the per-alive position threshold memo.
        """
        g, m = self.g, self.m
        opts = self.opts
        tau = self.memo_tau.get(alive, g.n - 1)
        hi = tau if max_pos is None else min(tau, max_pos)
        if hi <= min_pos:
            return None
        if alive.bit_count() >= m + 3 and self._is_clique(alive):
            # No vertex deletion disconnects a complete graph, and one star
            # is too small here to reach the trivial-remainder escape.
            self.memo_tau[alive] = -1
            return None
        masks = g.masks
        for p in range(min_pos + 1, hi + 1):
            self._check_deadline()
            c = self.order[p]
            cbit = 1 << c
            if not alive & cbit:
                continue
            nb = masks[c] & alive
            deg = nb.bit_count()
            if self.exact and deg < m:
                continue
            if opts.prune_center_skip and self._center_hopeless(c, nb, deg, alive):
                continue
            ticks = 0
            for leaves, smask in _leaf_sets(
                masks, _bits(nb), m, self.exact, opts.induced, c, cbit
            ):
                ticks += 1
                if not ticks & 0x1FF:
                    self._check_deadline()
                if _mask_cut(g, alive & ~smask, opts.strict_trivial):
                    return Star(c, leaves)
        if max_pos is None or max_pos >= tau:
            self.memo_tau[alive] = min_pos
        return None

    # -- interior levels ---------------------------------------------------

    def search(
        self,
        alive: int,
        pmax: int,
        slots: int,
        chosen: list[Star],
        root_positions: Iterable[int] | None = None,
    ) -> list[Star] | None:
        """Extend `chosen` by `slots` stars at positions above pmax."""
        self.nodes += 1
        if not self.nodes & 0xFF:
            self._check_deadline()
        opts = self.opts
        if opts.prune_degree_bound and self._degree_bound_miss(alive, slots):
            return None
        if opts.prune_untouched and self._untouched_miss(alive, pmax):
            return None
        if slots == 1:
            star = self.last_star(alive, pmax)
            if star is None:
                return None
            return chosen + [star]
        g, m = self.g, self.m
        masks = g.masks
        seen: set[int] | None = set() if opts.prune_symmetry else None
        if root_positions is not None and pmax < 0:
            positions: Iterable[int] = root_positions
        else:
            positions = range(pmax + 1, g.n)
        for p in positions:
            c = self.order[p]
            cbit = 1 << c
            if not alive & cbit:
                continue
            nb = masks[c] & alive
            if self.exact and nb.bit_count() < m:
                continue
            for leaves, smask in _leaf_sets(
                masks, _bits(nb), m, self.exact, opts.induced, c, cbit
            ):
                if seen is not None:
                    if smask in seen:
                        continue
                    seen.add(smask)
                got = self.search(
                    alive & ~smask, p, slots - 1, chosen + [Star(c, leaves)]
                )
                if got is not None:
                    return got
        return None


def _family_size_cap(g: Graph, m: int, kind: str) -> int:
    if kind == STRUCTURE:
        return g.n // (m + 1)
    return g.n


def _validate_inputs(g: Graph, m: int, t_max: int) -> None:
    if m < 0:
        raise ValueError("star leaf bound must be nonnegative")
    if t_max < 1:
        raise ValueError("t_max must be at least 1")
    if g.n < 2 or not is_connected(g):
        raise ValueError(
            "connectivity is defined only for connected graphs on >= 2 vertices"
        )


def _decide_chunk(args) -> tuple[bool, bool]:
    """Worker body: does any cutting family start in this position range?"""
    g, m, kind, opts, t, lo, hi = args
    engine = _Engine(g, m, kind, opts, damage_order=opts.prune_damage_order)
    if opts.time_limit is not None:
        engine.deadline = time.monotonic() + opts.time_limit
    try:
        if t == 1:
            star = engine.last_star(g.full_mask, lo - 1, max_pos=hi - 1)
            return star is not None, True
        got = engine.search(g.full_mask, -1, t, [], root_positions=range(lo, hi))
        return got is not None, True
    except _Deadline:
        return False, False


def _parallel_decide(
    g: Graph, m: int, kind: str, opts: SearchOptions, t: int, deadline: float | None
) -> tuple[bool, bool]:
    from concurrent.futures import ProcessPoolExecutor

    workers = max(1, min(opts.workers, g.n))
    remaining = None
    if deadline is not None:
        remaining = max(deadline - time.monotonic(), 0.01)
    child_opts = replace(opts, workers=1, time_limit=remaining)
    step = -(-g.n // workers)
    chunks = [(lo, min(lo + step, g.n)) for lo in range(0, g.n, step)]
    args = [(g, m, kind, child_opts, t, lo, hi) for lo, hi in chunks]
    found = False
    complete = True
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        for got, done in pool.map(_decide_chunk, args):
            found = found or got
            complete = complete and done
    return found, complete


def _connectivity(
    g: Graph, m: int, kind: str, t_max: int, options: SearchOptions | None
) -> SolveResult:
    opts = options or SearchOptions()
    _validate_inputs(g, m, t_max)
    deadline = None
    if opts.time_limit is not None:
        deadline = time.monotonic() + opts.time_limit
    decide = _Engine(g, m, kind, opts, damage_order=opts.prune_damage_order)
    decide.deadline = deadline
    cap = min(t_max, _family_size_cap(g, m, kind))
    for t in range(1, cap + 1):
        if opts.workers > 1:
            found, finished = _parallel_decide(g, m, kind, opts, t, deadline)
            if not found and not finished:
                return SolveResult(None, None, t - 1, False)
            family = None
            need_cert = found
        else:
            try:
                family = decide.search(g.full_mask, -1, t, [])
            except _Deadline:
                return SolveResult(None, None, t - 1, False)
            need_cert = family is not None and opts.prune_damage_order
        if family is None and not need_cert:
            continue
        if need_cert:
            # Deterministic certificate pass: identity permutation explores
            # families in lexicographic order, so the first hit is least.
            # Existence is already settled, so this pass runs unbounded.
            lex = _Engine(g, m, kind, opts, damage_order=False)
            family = lex.search(g.full_mask, -1, t, [])
            if family is None:
                raise AssertionError("certificate pass lost a decided cut")
        stars = tuple(sorted(family, key=Star.sort_key))
        cert = CutFamily(kind, m, stars)
        check = is_structure_cut if kind == STRUCTURE else is_substructure_cut
        if not check(g, cert, m, strict_trivial=opts.strict_trivial, induced=opts.induced):
            raise AssertionError("search produced a family its verifier rejects")
        return SolveResult(t, cert, t, True)
    return SolveResult(None, None, t_max, True)


def structure_connectivity(
    g: Graph, m: int, t_max: int, options: SearchOptions | None = None
) -> SolveResult:
    """Minimum size of a cutting family of exact K_{1,m} elements.

    Raises ValueError on disconnected or single-vertex input; the quantity
    is undefined there.  Absence within t_max is reported, never a value.
    """
    return _connectivity(g, m, STRUCTURE, t_max, options)


def substructure_connectivity(
    g: Graph, m: int, t_max: int, options: SearchOptions | None = None
) -> SolveResult:
    """Minimum size of a cutting family of K_{1,j} elements, j <= m."""
    return _connectivity(g, m, SUBSTRUCTURE, t_max, options)


def enumerate_stars(
    g: Graph, m: int, exact: bool, *, induced: bool = False
) -> list[Star]:
    """Every canonical star of g with exactly (or up to) m leaves, sorted.

    Single-leaf stars appear once, centered at their smaller endpoint.
    """
    masks = g.masks
    out: set[Star] = set()
    for c in range(g.n):
        cands = _bits(masks[c])
        for leaves, _ in _leaf_sets(masks, cands, m, exact, induced, c, 1 << c):
            out.add(Star(c, leaves))
    return sorted(out, key=Star.sort_key)


# -- independent oracle --------------------------------------------------

_MISS = object()


def _absorbing_stars(
    masks: tuple[int, ...], v: int, rem: int, m: int, exact: bool, induced: bool
) -> Iterator[tuple[int, int]]:
    """All (center, star mask) choices inside `rem` that contain vertex v.

    Written for clarity over speed: the oracle only runs on capped sizes.
    """
    vbit = 1 << v
    # v as the center
    cands = _bits(masks[v] & rem)
    sizes = [m] if exact else list(range(0, min(m, len(cands)) + 1))
    for size in sizes:
        if size > len(cands):
            continue
        for combo in combinations(cands, size):
            if induced and not _leaves_independent(masks, combo):
                continue
            smask = vbit
            for leaf in combo:
                smask |= 1 << leaf
            yield v, smask
    # v as a leaf of some center c in rem
    if m < 1:
        return
    for c in _bits(masks[v] & rem):
        cbit = 1 << c
        others = _bits(masks[c] & rem & ~vbit)
        extra_sizes = [m - 1] if exact else list(range(0, min(m - 1, len(others)) + 1))
        for size in extra_sizes:
            if size > len(others):
                continue
            for combo in combinations(others, size):
                leaves = tuple(sorted((v,) + combo))
                if induced and not _leaves_independent(masks, leaves):
                    continue
                smask = cbit | vbit
                for leaf in combo:
                    smask |= 1 << leaf
                yield c, smask


def _star_from_mask(masks: tuple[int, ...], smask: int, center: int) -> Star:
    leaves = tuple(_bits(smask & ~(1 << center)))
    return canonical_star(center, leaves)


def _best_partition(
    g: Graph, rem: int, m: int, exact: bool, induced: bool, memo: dict
) -> tuple[int, tuple[tuple[int, int], ...]] | None:
    """Minimum star partition of `rem`; returns (count, ((center, mask), ...)).

    Branches on the lowest remaining vertex, which must be absorbed by some
    star.  Keyed only by the remaining mask, so one memo serves every subset
    the oracle probes.
    """
    if not rem:
        return 0, ()
    hit = memo.get(rem, _MISS)
    if hit is not _MISS:
        return hit
    masks = g.masks
    v = (rem & -rem).bit_length() - 1
    best = None
    seen: set[int] = set()
    for center, smask in _absorbing_stars(masks, v, rem, m, exact, induced):
        if smask in seen:
            continue
        seen.add(smask)
        sub = _best_partition(g, rem & ~smask, m, exact, induced, memo)
        if sub is None:
            continue
        if best is None or sub[0] + 1 < best[0]:
            best = (sub[0] + 1, ((center, smask),) + sub[1])
    memo[rem] = best
    return best


def min_star_partition(
    g: Graph, xs: Iterable[int], m: int, exact: bool, *, induced: bool = False
) -> int | None:
    """Fewest disjoint stars of g (leaf bounds per flags) covering X exactly."""
    xmask = 0
    for x in xs:
        if not (0 <= x < g.n):
            raise ValueError(f"vertex {x} out of range")
        xmask |= 1 << x
    if m < 0:
        raise ValueError("star leaf bound must be nonnegative")
    got = _best_partition(g, xmask, m, exact, induced, {})
    return got[0] if got is not None else None


def oracle_connectivity(
    g: Graph,
    m: int,
    kind: str,
    t_max: int,
    *,
    strict_trivial: bool = False,
    induced: bool = False,
    size_cap: int = ORACLE_SIZE_CAP,
) -> SolveResult:
    """Cross-validation oracle: subset enumeration plus star partitioning.

    Scans vertex subsets X in increasing size; X qualifies when its removal
    disconnects g or leaves a trivial remainder and X splits into disjoint
    stars of the requested kind.  Returns the minimum star count over all
    qualifying X, as a SolveResult mirroring the solver's conventions.
    """
    if kind not in (STRUCTURE, SUBSTRUCTURE):
        raise ValueError(f"unknown cut kind {kind!r}")
    if g.n > size_cap:
        raise ValueError(f"oracle refuses n={g.n} above the size cap {size_cap}")
    _validate_inputs(g, m, t_max)
    exact = kind == STRUCTURE
    memo: dict = {}
    best: int | None = None
    best_stars: tuple[tuple[int, int], ...] | None = None
    for size in range(1, g.n + 1):
        lower = -(-size // (m + 1))
        if best is not None and lower >= best:
            break
        if exact and size % (m + 1):
            continue
        for combo in combinations(range(g.n), size):
            xmask = 0
            for x in combo:
                xmask |= 1 << x
            if not _mask_cut(g, g.full_mask & ~xmask, strict_trivial):
                continue
            got = _best_partition(g, xmask, m, exact, induced, memo)
            if got is None:
                continue
            if best is None or got[0] < best:
                best, best_stars = got
    if best is None or best > t_max:
        return SolveResult(None, None, t_max, True)
    assert best_stars is not None
    stars = tuple(
        sorted(
            (_star_from_mask(g.masks, smask, center) for center, smask in best_stars),
            key=Star.sort_key,
        )
    )
    cert = CutFamily(kind, m, stars)
    check = is_structure_cut if kind == STRUCTURE else is_substructure_cut
    if not check(g, cert, m, strict_trivial=strict_trivial, induced=induced):
        raise AssertionError("oracle produced a family its verifier rejects")
    return SolveResult(best, cert, best, True)
