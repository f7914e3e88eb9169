"""Combinatorics of degenerate Lagrangian flag loci.

A locus is selected by a subset i of {1, ..., n-1}: the flag maps at the
chosen positions are replaced by coordinate projections, everything else
stays an inclusion.  This module collects the combinatorial companions
of that setup:

  * the module build_Mi whose orbits stratify the locus, on the chain
    with 2n-1 vertices;
  * index sequences (sigma_i, the doubled subset i', the gap sequence
    ell and its normalization h) relating weights on the symplectic side
    to weights on the ambient linear side;
  * distinguished Weyl group elements in types C and A given by explicit
    words, w_i_word and u_iprime_word;
  * a report (check_lemma_ui) comparing two closed-form predictions for
    the one-line values of the type-A element against its actual images;
  * the cone of root-indexed vectors cut out by the face inequalities
    (CRootVector, dynkin_face_contains), and a certified interior point;
  * the torus-fixed points of the Lagrangian part, as chains of
    coordinate subsets (lagrangian_fixed_points).
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from .core import Representation, sigma
from .coxeter import WeylWord, evaluate
from .errors import Infeasible
from .symdegen import EpsilonRep, SymmetricType

RootKey = Tuple[str, int, int]


class PbwSubset(NamedTuple):
    """The datum of a locus: n and a subset i of {1, ..., n-1}."""

    n: int
    i: Tuple[int, ...]

    @classmethod
    def make(cls, n: int, i) -> "PbwSubset":
        i = tuple(sorted(set(i)))
        if n < 1:
            raise ValueError("need n >= 1")
        for x in i:
            if not (isinstance(x, int) and 1 <= x <= n - 1):
                raise ValueError("subset entry %r outside 1..%d" % (x, n - 1))
        return cls(n, i)

    @property
    def t(self) -> int:
        return len(self.i)


def build_Mi(subset: PbwSubset):
    """The distinguished module of a locus, with its weight vector.

    Returns (EpsilonRep on the chain with 2n-1 vertices, e) where e =
    (1, 2, ..., 2n-1).  The module is F + reflection of F for F one copy
    of the final segment starting at sigma(i_k) and at i_k + 1 for every
    k, plus n - t copies of the full segment.
    """
    n, t = subset.n, subset.t
    N = 2 * n - 1
    mult: Dict[Tuple[int, int], int] = {}

    def add(a: int, b: int) -> None:
        mult[(a, b)] = mult.get((a, b), 0) + 1

    halves = [(1, N)] * (n - t)
    for ik in subset.i:
        halves.append((sigma(ik, N), N))
        halves.append((ik + 1, N))
    for (a, b) in halves:
        add(a, b)
        add(sigma(b, N), sigma(a, N))
    erep = EpsilonRep(Representation(N, mult), SymmetricType(N, -1))
    return erep, tuple(range(1, 2 * n))


# --- index sequences ---------------------------------------------------------

def sigma_i_map(subset: PbwSubset) -> Tuple[int, ...]:
    """The n values in 1..n+t that are not of the form i_k + k."""
    n, t = subset.n, subset.t
    taken = {ik + k for k, ik in enumerate(subset.i, 1)}
    return tuple(v for v in range(1, n + t + 1) if v not in taken)


def psi(subset: PbwSubset, lam) -> Tuple[int, ...]:
    """Spread a length-n weight over n+t slots along sigma_i, zero-filled."""
    lam = tuple(lam)
    if len(lam) != subset.n:
        raise ValueError("expected %d weight entries, got %d" % (subset.n, len(lam)))
    out = [0] * (subset.n + subset.t)
    for slot, value in zip(sigma_i_map(subset), lam):
        out[slot - 1] = value
    return tuple(out)


def iprime(subset: PbwSubset) -> Tuple[int, ...]:
    """The subset doubled into 1..2n-2: i together with its mirror."""
    n = subset.n
    return tuple(sorted(set(subset.i) | {2 * n - 1 - x for x in subset.i}))


def ell_sequence(subset: PbwSubset) -> Tuple[int, ...]:
    """The 2n values in 1..2n+2t that avoid the shifted doubled subset."""
    n, t = subset.n, subset.t
    avoid = {x + 1 for x in iprime(subset)}
    return tuple(v for v in range(1, 2 * n + 2 * t + 1) if v not in avoid)


def h_sequence(subset: PbwSubset) -> Tuple[int, ...]:
    return tuple(l - j for j, l in enumerate(ell_sequence(subset), 1))


def theta(subset: PbwSubset) -> Tuple[int, ...]:
    """Fundamental-weight reindexing: slot k feeds slot ell_k, k < 2n."""
    return ell_sequence(subset)[:2 * subset.n - 1]


# --- Weyl group elements -----------------------------------------------------

def w_i_word(subset: PbwSubset) -> WeylWord:
    """Distinguished type-C word on rank n+t.

    A descending staircase into the sign letter, then for each chosen
    position a block of ascending runs, one per value between the
    neighbouring subset entries.
    """
    n, t = subset.n, subset.t
    m = n + t
    letters: List[int] = []
    for j in range(m, t, -1):
        letters.extend(range(j, m + 1))
    ivals = (0,) + subset.i
    for k in range(t, 0, -1):
        lo = ivals[k - 1] + k
        hi = ivals[k] + k - 1
        for jj in range(hi, lo - 1, -1):
            letters.extend(range(k, jj + 1))
    return WeylWord.make("C", m, letters)


def u_iprime_word(subset: PbwSubset) -> WeylWord:
    """Companion type-A word on 2(n+t) symbols, same block template as
    w_i_word but driven by the doubled subset with both ends pinned."""
    n, t = subset.n, subset.t
    m = 2 * (n + t)
    vals = (0,) + iprime(subset) + (2 * n - 1,)
    letters: List[int] = []
    for k in range(2 * t + 1, 0, -1):
        lo = vals[k - 1] + k
        hi = vals[k] + k - 1
        for jj in range(hi, lo - 1, -1):
            letters.extend(range(k, jj + 1))
    return WeylWord.make("A", m, letters)


def check_lemma_ui(subset: PbwSubset) -> dict:
    """Compare closed-form predictions for the type-A one-line values
    against the evaluated word, row by row.

    For each j the gap ell_j - ell_{j-1} (with ell_0 = 0) selects a
    clause: gap 1 predicts u(ell_j) = h_j + (2n+2t+1-j); gap 2 predicts
    u(ell_j - 1) = h_j and u(ell_j) = h_j + 2n + 2t; larger gaps carry
    no prediction.  Every report row records the prediction, the actual
    images under the package's fixed left-to-right evaluation, whether
    they agree, and whether the prediction even lies in the symbol range
    1..2(n+t).  This function only reports; it never asserts agreement.
    """
    n, t = subset.n, subset.t
    m2 = 2 * (n + t)
    u = evaluate(u_iprime_word(subset))
    ell = ell_sequence(subset)
    h = h_sequence(subset)
    rows = []
    prev = 0
    for j in range(1, 2 * n + 1):
        lj = ell[j - 1]
        gap = lj - prev
        if gap == 1:
            pred: Optional[Tuple[int, ...]] = (h[j - 1] + (m2 + 1 - j),)
            actual = (u(lj),)
            clause: Optional[int] = 1
        elif gap == 2:
            pred = (h[j - 1], h[j - 1] + m2)
            actual = (u(lj - 1), u(lj))
            clause = 2
        else:
            pred = None
            actual = (u(lj),)
            clause = None
        anomaly = bool(pred) and any(not 1 <= p <= m2 for p in pred)
        rows.append({
            "j": j, "ell": lj, "h": h[j - 1], "gap": gap, "clause": clause,
            "predicted": pred, "actual": actual,
            "agree": (pred == actual) if pred is not None else None,
            "range_anomaly": anomaly,
        })
        prev = lj
    summary = {
        "rows": len(rows),
        "agree": sum(1 for r in rows if r["agree"] is True),
        "disagree": sum(1 for r in rows if r["agree"] is False),
        "no_prediction": sum(1 for r in rows if r["agree"] is None),
        "range_anomalies": sum(1 for r in rows if r["range_anomaly"]),
    }
    return {"n": n, "i": subset.i, "u": u.images, "rows": rows,
            "summary": summary}


# --- the face of root vectors ------------------------------------------------

def canonical_root_keys(n: int) -> List[RootKey]:
    """The n^2 positive roots: ("u", i, j) is e_i - e_{j+1} for j < n and
    e_i + e_n for j = n; ("b", i, j) is e_i + e_j, j <= n-1."""
    keys: List[RootKey] = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            keys.append(("u", i, j))
    for i in range(1, n):
        for j in range(i, n):
            keys.append(("b", i, j))
    return keys


def _key_minus(a: int, b: int) -> RootKey:
    # e_a - e_b with a < b
    return ("u", a, b - 1)


def _key_plus(a: int, b: int, n: int) -> RootKey:
    # e_a + e_b with a <= b
    if b == n:
        return ("u", a, n)
    return ("b", a, b)


def _segment_of_root(key: RootKey, n: int) -> Tuple[int, int]:
    """Each positive root matches a segment of the chain with 2n-1
    vertices: ("u", i, j) is [i, j] and ("b", i, j) is [i, 2n-j]."""
    kind, i, j = key
    if kind == "u":
        return (i, j)
    return (i, 2 * n - j)


class CRootVector:
    """An integer vector indexed by the n^2 positive roots.

    Entries are looked up by canonical key; construction checks that
    exactly the canonical keys are present.
    """

    __slots__ = ("n", "_d")

    def __init__(self, n: int, entries: Dict[RootKey, int]):
        need = canonical_root_keys(n)
        entries = dict(entries)
        if set(entries) != set(need):
            missing = sorted(set(need) - set(entries))
            extra = sorted(set(entries) - set(need))
            raise ValueError("bad root keys: missing %r, extra %r"
                             % (missing[:4], extra[:4]))
        for key, value in entries.items():
            if not isinstance(value, int):
                raise ValueError("entry %r is not an integer" % (key,))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_d", entries)

    def __setattr__(self, name, value):
        raise AttributeError("CRootVector is immutable")

    def d(self, key: RootKey) -> int:
        return self._d[key]

    def items(self):
        return sorted(self._d.items())

    def __eq__(self, other):
        return (isinstance(other, CRootVector)
                and self.n == other.n and self._d == other._d)

    def __hash__(self):
        return hash((self.n, tuple(self.items())))

    def __repr__(self):
        return "CRootVector(n=%d, %r)" % (self.n, dict(self.items()))


def zero_root_vector(n: int) -> CRootVector:
    return CRootVector(n, {key: 0 for key in canonical_root_keys(n)})


def _pair_constraints(subset: PbwSubset) -> Iterator[tuple]:
    """All additive pairs of positive roots, tagged by which inequality
    family applies.

    Two positive roots sum to a root exactly when they share a cancelled
    coordinate e_b: either {e_a - e_b, e_b - e_c} or {e_a - e_b, e_b +
    e_c}.  The junction wall is b - 1: at a chosen wall the vector may
    exceed additivity, elsewhere it must be exactly additive.
    """
    n = subset.n
    chosen = set(subset.i)
    for b in range(2, n + 1):
        wall = b - 1
        for a in range(1, b):
            beta1 = _key_minus(a, b)
            for c in range(b + 1, n + 1):
                if wall in chosen:
                    tag = "bullet1"
                else:
                    tag = "bullet3"
                yield ("pair", tag, wall, beta1, _key_minus(b, c),
                       _key_minus(a, c))
            for c in range(1, n + 1):
                beta2 = _key_plus(min(b, c), max(b, c), n)
                total = _key_plus(min(a, c), max(a, c), n)
                if wall in chosen:
                    tag = "bullet1" if c >= b else "bullet2"
                else:
                    tag = "bullet3"
                yield ("pair", tag, wall, beta1, beta2, total)


def _exchange_constraints(n: int) -> Iterator[tuple]:
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j, n + 1):
                for l in range(k + 1, n + 1):
                    yield ("exchange", "b4",
                           ("u", i, k), ("u", j, l), ("u", i, l), ("u", j, k))
    for i in range(1, n):
        for j in range(i + 1, n):
            for k in range(j, n):
                for l in range(j, n + 1):
                    yield ("exchange", "b5",
                           ("b", i, k), ("u", j, l), ("u", i, l), ("b", j, k))
    for i in range(1, n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for l in range(k + 1, n):
                    yield ("exchange", "b6",
                           ("b", i, j), ("b", k, l), ("b", i, k), ("b", j, l))
                    yield ("exchange", "b6",
                           ("b", i, j), ("b", k, l), ("b", i, l), ("b", j, k))


def dynkin_face_violations(subset: PbwSubset, d: CRootVector,
                           strict: bool = False) -> List[dict]:
    """Every broken constraint of the face, as self-describing dicts.

    Pair constraints compare d at two summands with d at their sum: at
    walls in the subset the sum of the parts must exceed the whole
    (weakly, or strictly in strict mode), elsewhere additivity is exact.
    Exchange constraints are equalities in both modes.
    """
    if d.n != subset.n:
        raise ValueError("vector has n=%d, subset has n=%d" % (d.n, subset.n))
    out = []
    for con in _pair_constraints(subset):
        _, tag, wall, b1, b2, total = con
        lhs = d.d(b1) + d.d(b2)
        rhs = d.d(total)
        if tag == "bullet3":
            ok = lhs == rhs
            relation = "=="
        elif strict:
            ok = lhs > rhs
            relation = ">"
        else:
            ok = lhs >= rhs
            relation = ">="
        if not ok:
            out.append({"family": tag, "wall": wall, "roots": (b1, b2, total),
                        "lhs": lhs, "rhs": rhs, "relation": relation})
    for con in _exchange_constraints(subset.n):
        _, name, k1, k2, k3, k4 = con
        lhs = d.d(k1) + d.d(k2)
        rhs = d.d(k3) + d.d(k4)
        if lhs != rhs:
            out.append({"family": name, "wall": None,
                        "roots": (k1, k2, k3, k4),
                        "lhs": lhs, "rhs": rhs, "relation": "=="})
    return out


def dynkin_face_contains(subset: PbwSubset, d: CRootVector,
                         strict: bool = False) -> bool:
    if d.n != subset.n:
        raise ValueError("vector has n=%d, subset has n=%d" % (d.n, subset.n))
    for con in _pair_constraints(subset):
        _, tag, _, b1, b2, total = con
        lhs = d.d(b1) + d.d(b2)
        rhs = d.d(total)
        if tag == "bullet3":
            if lhs != rhs:
                return False
        elif strict:
            if lhs <= rhs:
                return False
        elif lhs < rhs:
            return False
    for con in _exchange_constraints(subset.n):
        _, _, k1, k2, k3, k4 = con
        if d.d(k1) + d.d(k2) != d.d(k3) + d.d(k4):
            return False
    return True


def find_interior_point(subset: PbwSubset) -> CRootVector:
    """A vector strictly inside the face: d at a root counts, negated,
    the doubled-subset walls interior to the matching segment.

    The count makes every exchange family telescope to an equality, and
    a pair constraint's slack is exactly one when its junction wall is
    chosen and zero otherwise.  The result is re-checked strictly; a
    failure would be a bug, reported as Infeasible.
    """
    n = subset.n
    ip = set(iprime(subset))
    entries = {}
    for key in canonical_root_keys(n):
        x, y = _segment_of_root(key, n)
        entries[key] = -len(ip & set(range(x, y)))
    d = CRootVector(n, entries)
    if not dynkin_face_contains(subset, d, strict=True):
        raise Infeasible("closed-form point fails the strict check")
    return d


# --- torus-fixed points ------------------------------------------------------

class FixedPoint(NamedTuple):
    """A fixed coordinate flag, stored by its first half.

    subsets[k-1] is S_k, the k-subset of 1..2n spanning the k-th member;
    members n+1 .. 2n-1 are the pairing-duals of the first half and are
    not stored.
    """

    n: int
    subsets: Tuple[Tuple[int, ...], ...]


def _dual_subset(s: Tuple[int, ...], n: int) -> Tuple[int, ...]:
    kill = {2 * n + 1 - j for j in s}
    return tuple(v for v in range(1, 2 * n + 1) if v not in kill)


def fixed_point_chain(fp: FixedPoint) -> Tuple[Tuple[int, ...], ...]:
    """All 2n-1 members: the stored half, then duals in mirrored order."""
    n = fp.n
    chain = list(fp.subsets)
    for k in range(n - 1, 0, -1):
        chain.append(_dual_subset(fp.subsets[k - 1], n))
    return tuple(chain)


def lagrangian_fixed_points(subset: PbwSubset) -> List[FixedPoint]:
    """Enumerate the fixed coordinate flags of the Lagrangian part.

    The middle member is any pairing-free n-subset of 1..2n; going down,
    each member drops one element of the previous one, except that at a
    chosen wall k the element k+1 may also be discarded by the
    projection.  The mirrored half is forced, and its compatibility with
    the mirrored projections comes for free; both facts are re-checked
    on every emitted point anyway.
    """
    n = subset.n
    chosen = set(subset.i)
    out: List[FixedPoint] = []
    for sn in itertools.combinations(range(1, 2 * n + 1), n):
        if any(2 * n + 1 - j in sn for j in sn):
            continue
        stack = [(tuple(sn),)]
        for k in range(n - 1, 0, -1):
            pool_extra = (k + 1,) if k in chosen else ()
            nxt = []
            for chain in stack:
                pool = sorted(set(chain[0]) | set(pool_extra))
                for sk in itertools.combinations(pool, k):
                    nxt.append((sk,) + chain)
            stack = nxt
        for chain in stack:
            fp = FixedPoint(n, chain)
            _check_fixed_point(fp, subset)
            out.append(fp)
    out.sort()
    return out


def _check_fixed_point(fp: FixedPoint, subset: PbwSubset) -> None:
    n = fp.n
    chain = fixed_point_chain(fp)
    assert len(chain) == 2 * n - 1
    degenerate = set(iprime(subset))
    for v in range(1, 2 * n):
        assert len(chain[v - 1]) == v, "member %d has wrong size" % v
    assert _dual_subset(fp.subsets[n - 1], n) == fp.subsets[n - 1], \
        "middle member is not self-dual"
    for v in range(1, 2 * n - 1):
        src = set(chain[v - 1])
        if v in degenerate:
            src.discard(v + 1)
        assert src <= set(chain[v]), \
            "member %d does not map into member %d" % (v, v + 1)
