# -*- coding: utf-8 -*-
import collections
import concurrent.futures
import logging
import random
import time

from .baseapi import BaseAPI, Error, CapExceededError
from .Combinatorics import bits, popcount, to_mask
from .Graph import twin_masks

PLAIN = "plain"
TOTAL = "total"
CONNECTED = "connected"
VARIANTS = (PLAIN, TOTAL, CONNECTED)

FIFO = "fifo"
LIFO = "lifo"

# proof tags of exact results
EXHAUSTIVE = "exhaustive"
LOWER_HINT = "lower_hint"
MIN_DEGREE = "min_degree"
NO_VARIANT_SET = "no_variant_set"

# search nodes between two deadline checks
DEADLINE_STRIDE = 2048

log = logging.getLogger(__name__)


class ForcingError(Error):
    pass


def as_mask(vertices):
    """Accepts an int bitset or an iterable of vertex ids."""
    if isinstance(vertices, int):
        return vertices
    return to_mask(vertices)


class Coloring(object):
    """
    Zero forcing state.

    Args:
        black (int): bitset of black vertices
        white_nbr_count (list): number of white neighbours of every vertex;
            only the entries of black vertices are ever consulted
    """
    def __init__(self, black, white_nbr_count):
        self.black = black
        self.white_nbr_count = white_nbr_count

    @classmethod
    def start(cls, G, black):
        white = G.full_mask & ~black
        return cls(black, [popcount(row & white) for row in G.adj])

    def is_black(self, v):
        return bool(self.black >> v & 1)

    def check(self, G):
        """Raises ForcingError if a counter of a black vertex is stale."""
        white = G.full_mask & ~self.black
        for v in bits(self.black):
            if self.white_nbr_count[v] != popcount(G.adj[v] & white):
                raise ForcingError("stale white neighbour count at %s" % v)
        return True


class ForcingTrace(object):
    """
    Args:
        initial (list): sorted leader set
        steps (list): ordered (pivot, forced) pairs
    """
    def __init__(self, initial, steps=None):
        self.initial = sorted(initial)
        self.steps = list(steps or [])

    @property
    def pivots(self):
        return [v for v, _ in self.steps]

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return "<ForcingTrace: %s leaders, %s forces>" % (
            len(self.initial), len(self.steps))


def run_forcing(G, black, policy=FIFO):
    """
        The counter engine: a black vertex whose white neighbour count
        drops to 1 joins the ready queue. Returns (Coloring, steps).
    """
    coloring = Coloring.start(G, black)
    count = coloring.white_nbr_count
    adj = G.adj
    black = coloring.black
    ready = collections.deque(v for v in bits(black) if count[v] == 1)
    take = ready.popleft if policy == FIFO else ready.pop
    steps = []
    while ready:
        v = take()
        if count[v] != 1:
            continue
        white = adj[v] & ~black
        w = white.bit_length() - 1
        black |= white
        steps.append((v, w))
        for u in bits(adj[w]):
            count[u] -= 1
            if count[u] == 1 and black >> u & 1:
                ready.append(u)
        if count[w] == 1:
            ready.append(w)
    coloring.black = black
    return coloring, steps


def closure(G, B, policy=FIFO):
    """Returns (closure as a frozenset, ForcingTrace)."""
    initial = as_mask(B)
    coloring, steps = run_forcing(G, initial, policy)
    return (frozenset(bits(coloring.black)),
            ForcingTrace(list(bits(initial)), steps))


def closure_mask(G, B, policy=FIFO):
    return run_forcing(G, as_mask(B), policy)[0].black


def closure_naive(G, B):
    """Rescans every black vertex until nothing changes."""
    black = as_mask(B)
    changed = True
    while changed:
        changed = False
        for v in bits(black):
            white = G.adj[v] & ~black
            if white and not white & (white - 1):
                black |= white
                changed = True
    return black


def replay_trace(G, trace):
    """
        Replays the steps of a trace, checking the colour rule at each
        step and that it ends with the closure of the leaders. Returns the
        final black bitset.
    """
    initial = to_mask(trace.initial)
    black = initial
    for i, (v, w) in enumerate(trace.steps):
        if not black >> v & 1:
            raise ForcingError("step %s: pivot %s is white" % (i, v))
        if black >> w & 1:
            raise ForcingError("step %s: %s is already black" % (i, w))
        if G.adj[v] & ~black != 1 << w:
            raise ForcingError("step %s: %s is not the unique white "
                               "neighbour of %s" % (i, w, v))
        black |= 1 << w
    expected = closure_mask(G, initial)
    if black != expected:
        raise ForcingError("trace stops after %s steps, %s vertices short "
                           "of the closure" % (len(trace.steps),
                                               popcount(expected & ~black)))
    return black


def is_zero_forcing(G, B):
    return closure_mask(G, B) == G.full_mask


def _connected_in(adj, mask):
    if not mask:
        return True
    seen = mask & -mask
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def _no_isolated_in(adj, mask):
    return all(adj[v] & mask for v in bits(mask))


def is_connected_zfs(G, B):
    mask = as_mask(B)
    return is_zero_forcing(G, mask) and _connected_in(G.adj, mask)


def is_total_zfs(G, B):
    mask = as_mask(B)
    return is_zero_forcing(G, mask) and _no_isolated_in(G.adj, mask)


def leader_ok(adj, leader, variant):
    """The variant's condition on the leader set itself."""
    if variant == TOTAL:
        return _no_isolated_in(adj, leader)
    if variant == CONNECTED:
        return _connected_in(adj, leader)
    return True


def whites_forceable(adj, white):
    """
        True iff the complement of white forces every white vertex. Each
        pass forces every white vertex that has a black neighbour whose
        only white neighbour it is.
    """
    while white:
        forced = 0
        for w in bits(white):
            m = 1 << w
            for v in bits(adj[w] & ~white):
                if adj[v] & white == m:
                    forced |= m
                    break
        if not forced:
            return False
        white &= ~forced
    return True


class ZeroForcingResult(object):
    """
    Outcome of an exact or bounded zero forcing search.

    Args:
        variant (str): plain, total or connected
        value (int): the number, None when not established
        certificate (list): a leader set of size upper
        lower (int), upper (int): proven bounds
        exact (bool): lower == upper was proven
        proof (str): exhaustive, lower_hint, min_degree or no_variant_set
        feasible (bool): False when no leader set of the variant exists
    """
    def __init__(self, **kwargs):
        self.variant = PLAIN
        self.value = None
        self.certificate = None
        self.lower = None
        self.upper = None
        self.exact = False
        self.proof = None
        self.feasible = True
        self.levels = []
        self.elapsed = None
        self.reason = None

        for attr in kwargs.keys():
            setattr(self, attr, kwargs[attr])

    def __str__(self):
        if self.exact:
            return "<ZeroForcingResult: %s Z = %s (%s)>" % (
                self.variant, self.value, self.proof)
        return "<ZeroForcingResult: %s %s <= Z <= %s>" % (
            self.variant, self.lower, self.upper)


def greedy_zero_forcing_set(G, order=None, seed=None, variant=PLAIN):
    """
        Grows a white set one vertex at a time, keeping the complement
        zero forcing (and valid for the variant). Vertices are tried in
        order, in a seeded shuffle when seed is given, else by id.
        Returns the sorted leader set.
    """
    if order is None:
        order = list(range(G.v_count))
        if seed is not None:
            random.Random(seed).shuffle(order)
    full = G.full_mask
    white = 0
    for x in order:
        candidate = white | 1 << x
        if whites_forceable(G.adj, candidate) and \
                leader_ok(G.adj, full & ~candidate, variant):
            white = candidate
    return list(bits(full & ~white))


class _Timeout(Exception):
    pass


class _Search(object):
    """
    Depth first search for the lex-greatest feasible white set of a size.
    Candidates are tried in decreasing id order, so the first hit is
    the complement of the lex-least leader set of that size.
    """
    def __init__(self, adj, v_count, size, twins, variant, deadline):
        self.adj = adj
        self.v_count = v_count
        self.size = size
        self.twins = twins
        self.variant = variant
        self.deadline = deadline
        self.full = (1 << v_count) - 1
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes % DEADLINE_STRIDE == 0 \
                and time.time() > self.deadline:
            raise _Timeout()

    def extend(self, white, count, start):
        if count == self.size:
            if leader_ok(self.adj, self.full & ~white, self.variant):
                return white
            return None
        last = self.v_count - (self.size - count)
        for x in range(last, start - 1, -1):
            if self.twins[x] & white:
                continue
            self.tick()
            candidate = white | 1 << x
            # supersets of a stalled white set stall too
            if not whites_forceable(self.adj, candidate):
                continue
            found = self.extend(candidate, count + 1, x + 1)
            if found is not None:
                return found
        return None

    def from_first(self, first):
        if self.size == 0:
            return self.extend(0, 0, 0) if first == 0 else None
        candidate = 1 << first
        if not whites_forceable(self.adj, candidate):
            return None
        return self.extend(candidate, 1, first + 1)


def _search_subtree(args):
    """Worker entry point: (adj, v_count, size, twins, variant, deadline,
    first) -> white bitset, None, or the string 'timeout'."""
    adj, v_count, size, twins, variant, deadline, first = args
    search = _Search(adj, v_count, size, twins, variant, deadline)
    try:
        return search.from_first(first)
    except _Timeout:
        return "timeout"


class ExactSearch(BaseAPI):
    """
    Exact zero forcing number by descending search.

    Starting from a known leader set of size upper, it asks for a leader
    set one smaller, which is a white set one larger. White sets are built
    as increasing id lists, tried in decreasing lex order; a prefix whose
    complement stalls is pruned, as are white sets holding a twin pair.
    The first infeasible size proves minimality.

    The certificate is the lex-least leader set of the optimal size
    (as a sorted id list). For sets of equal size, L < L' in lex order iff
    V - L > V - L', so it is the complement of the first white set found.

    Config (see baseapi): search_cap, max_seconds, workers.
    """
    def __init__(self, *args, **kwargs):
        super(ExactSearch, self).__init__(*args, **kwargs)

    def run(self, G, lower_hint=None, upper_hint=None, variant=PLAIN):
        if variant not in VARIANTS:
            raise ForcingError("unknown variant %r" % variant)
        started = time.time()
        v_count = G.v_count
        full = G.full_mask
        degrees = G.degrees()
        lower = max([lower_hint or 0, min(degrees) if degrees else 0,
                     1 if v_count else 0])

        if not leader_ok(G.adj, full, variant):
            return ZeroForcingResult(variant=variant, feasible=False,
                                     exact=True, proof=NO_VARIANT_SET,
                                     elapsed=time.time() - started)

        greedy = greedy_zero_forcing_set(G, variant=variant)
        upper = len(greedy)
        certificate = greedy
        partial = ZeroForcingResult(variant=variant, lower=lower,
                                    upper=upper, certificate=certificate)
        if v_count > self.search_cap:
            partial.reason = "%s vertices exceed the search cap of %s" % (
                v_count, self.search_cap)
            partial.elapsed = time.time() - started
            raise CapExceededError(partial.reason, partial)

        deadline = started + self.max_seconds if self.max_seconds else None
        twins = twin_masks(G)
        levels = []
        # best holds the lex-greatest feasible white set of size `size`
        best = full & ~to_mask(greedy)
        size = v_count - upper
        proof = None

        def search(width):
            white = self._level(G, width, twins, variant, deadline)
            levels.append((v_count - width, white is not None))
            return white

        try:
            if upper_hint is not None and upper_hint < upper:
                hinted = search(v_count - upper_hint)
                if hinted is not None:
                    best, size = hinted, v_count - upper_hint
                else:
                    self._log.warning("upper hint %s has no certificate",
                                      upper_hint)
            if size == v_count - upper:
                found = search(size)
                if found is not None:
                    best = found
            while True:
                if v_count - size <= lower:
                    proof = LOWER_HINT if lower_hint and \
                        v_count - size <= lower_hint else MIN_DEGREE
                    break
                white = search(size + 1)
                if white is None:
                    proof = EXHAUSTIVE
                    break
                best, size = white, size + 1
        except _Timeout:
            partial.upper = v_count - size
            partial.certificate = list(bits(full & ~best))
            partial.levels = levels
            partial.elapsed = time.time() - started
            partial.reason = "timed out after %.1fs" % partial.elapsed
            raise CapExceededError(partial.reason, partial)

        value = v_count - size
        result = ZeroForcingResult(
            variant=variant, value=value, lower=value, upper=value,
            certificate=list(bits(full & ~best)), exact=True, proof=proof,
            levels=levels, elapsed=time.time() - started)
        self._log.debug("%s: %s", G, result)
        return result

    def _level(self, G, size, twins, variant, deadline):
        """Lex-greatest feasible white set of the given size, or None."""
        v_count = G.v_count
        firsts = range(v_count - size, -1, -1) if size else [0]
        if self.workers > 1 and size > 1:
            tasks = [(G.adj, v_count, size, twins, variant, deadline, f)
                     for f in firsts]
            ex = concurrent.futures.ProcessPoolExecutor(self.workers)
            try:
                futures = [ex.submit(_search_subtree, task) for task in tasks]
                # subtrees are consumed in order, so the answer does not
                # depend on the number of workers
                for future in futures:
                    found = future.result()
                    if found == "timeout":
                        raise _Timeout()
                    if found is not None:
                        return found
            finally:
                ex.shutdown(wait=True, cancel_futures=True)
            return None

        search = _Search(G.adj, v_count, size, twins, variant, deadline)
        for first in firsts:
            found = search.from_first(first)
            if found is not None:
                return found
        return None


def zero_forcing_number_exact(G, lower_hint=None, upper_hint=None,
                              variant=PLAIN, **kwargs):
    """
        Z(G), Z_t(G) or Z_c(G) by exhaustive search.

        Raises CapExceededError, carrying a bounds-only ZeroForcingResult,
        when G is larger than the search cap or the time limit runs out.
        kwargs override the configuration (search_cap, max_seconds,
        workers).
    """
    return ExactSearch(**kwargs).run(G, lower_hint, upper_hint, variant)
