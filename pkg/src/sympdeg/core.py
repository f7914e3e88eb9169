"""Modules over an equioriented chain quiver 1 -> 2 -> ... -> n.

Every module is a direct sum of segments U[i,j] (the indecomposable
supported on vertices i..j with identity maps), so a module is stored as
a multiplicity map  (i,j) -> m_{i,j} > 0.  The complete isomorphism
invariant is the rank sequence r_{i,j} = rank of the composite map from
vertex i to vertex j; both encodings are kept first class and are
interconvertible via ranks_of / rep_of.

Conventions used everywhere in this package:

    r_{i,j} = 0          if i = 0 or j = n+1   (boundary),
    r_{i,j} = infinity   if i > j              (checked first),

with infinity a tagged sentinel rather than a large integer, so the
comparisons in the perpendicular-quotient formula are total and can
never overflow into nonsense.
"""

from __future__ import annotations

from typing import Dict, Iterator, List, Tuple

from .errors import InvalidRankSequence, MismatchedQuiver

Segment = Tuple[int, int]
DimVector = Tuple[int, ...]


class _Infinity:
    """Tagged infinity for the rank accessor.  Compares above every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("sympdeg-infinity")

    def __repr__(self):
        return "INFINITY"


SENTINEL_INFINITY = _Infinity()


def sigma(v: int, n: int) -> int:
    """The order-reversing involution v -> n+1-v on the vertices 1..n."""
    return n + 1 - v


class Representation:
    """A finite direct sum of segments on the chain with n vertices.

    mult maps a segment (i, j) with 1 <= i <= j <= n to a positive
    multiplicity.  Instances are immutable and hashable; equality is
    isomorphism (multiplicity maps agree).
    """

    __slots__ = ("n", "mult")

    def __init__(self, n: int, mult: Dict[Segment, int] | None = None):
        if n < 1:
            raise ValueError("need at least one vertex, got n=%r" % (n,))
        clean: Dict[Segment, int] = {}
        for (i, j), m in (mult or {}).items():
            if not (1 <= i <= j <= n):
                raise ValueError("segment (%r, %r) out of range for n=%r" % (i, j, n))
            if not isinstance(m, int) or m < 0:
                raise ValueError("multiplicity of (%r, %r) must be a non-negative int" % (i, j))
            if m:
                clean[(i, j)] = m
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mult", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Representation is immutable")

    def key(self) -> Tuple:
        return (self.n, tuple(sorted(self.mult.items())))

    def __eq__(self, other):
        return isinstance(other, Representation) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def segments(self) -> Iterator[Tuple[Segment, int]]:
        return iter(sorted(self.mult.items()))

    def m(self, i: int, j: int) -> int:
        return self.mult.get((i, j), 0)

    def __repr__(self):
        if not self.mult:
            return "Representation(n=%d, 0)" % self.n
        parts = ["U[%d,%d]^%d" % (i, j, m) for (i, j), m in self.segments()]
        return "Representation(n=%d, %s)" % (self.n, " + ".join(parts))


class RankSequence:
    """Upper-triangular matrix of composite-map ranks, with conventions.

    rows[i-1] holds (r_{i,i}, r_{i,i+1}, ..., r_{i,n}).  The accessor
    r(i, j) accepts 0 <= i, j <= n+1 and applies, in this order: i > j
    gives SENTINEL_INFINITY; i = 0 or j = n+1 gives 0; otherwise the
    stored entry.
    """

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, rows, validate: bool = False):
        if n < 1:
            raise ValueError("need at least one vertex")
        rows = [tuple(row) for row in rows]
        if len(rows) != n or any(len(rows[i]) != n - i for i in range(n)):
            raise ValueError("expected a staircase of rows of lengths n, n-1, ..., 1")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_rows", tuple(rows))
        if validate:
            self.validate()

    def __setattr__(self, name, value):
        raise AttributeError("RankSequence is immutable")

    def r(self, i: int, j: int):
        n = self.n
        if not (0 <= i <= n + 1 and 0 <= j <= n + 1):
            raise IndexError("rank index (%r, %r) outside [0, %d]" % (i, j, n + 1))
        if i > j:
            return SENTINEL_INFINITY
        if i == 0 or j == n + 1:
            return 0
        return self._rows[i - 1][j - i]

    def rows(self) -> List[List[int]]:
        return [list(row) for row in self._rows]

    def validate(self) -> None:
        """Check the three inequalities every genuine rank matrix satisfies.

        For all 1 <= i <= j <= n (boundary conventions applied):
          (a) r_{i,j} >= r_{i,j+1}            (ranks drop going right)
          (b) r_{i-1,j} <= r_{i,j}            (ranks drop going up)
          (c) r_{i-1,j} - r_{i-1,j+1} <= r_{i,j} - r_{i,j+1}

        Raises InvalidRankSequence naming the first offending (i, j).
        """
        for i in range(1, self.n + 1):
            for j in range(i, self.n + 1):
                if not isinstance(self.r(i, j), int) or self.r(i, j) < 0:
                    raise InvalidRankSequence(
                        "entry r[%d,%d] is not a non-negative integer" % (i, j),
                        indices=(i, j))
                if self.r(i, j) < self.r(i, j + 1):
                    raise InvalidRankSequence(
                        "r[%d,%d] < r[%d,%d]" % (i, j, i, j + 1), indices=(i, j))
                if self.r(i - 1, j) > self.r(i, j):
                    raise InvalidRankSequence(
                        "r[%d,%d] > r[%d,%d]" % (i - 1, j, i, j), indices=(i, j))
                if (self.r(i - 1, j) - self.r(i - 1, j + 1)
                        > self.r(i, j) - self.r(i, j + 1)):
                    raise InvalidRankSequence(
                        "corner surplus fails at (%d,%d): "
                        "r[%d,%d]-r[%d,%d] > r[%d,%d]-r[%d,%d]"
                        % (i, j, i - 1, j, i - 1, j + 1, i, j, i, j + 1),
                        indices=(i, j))

    def entries(self) -> Iterator[Tuple[int, int, int]]:
        for i in range(1, self.n + 1):
            for j in range(i, self.n + 1):
                yield i, j, self._rows[i - 1][j - i]

    def total(self) -> int:
        return sum(v for _, _, v in self.entries())

    def diagonal(self) -> DimVector:
        return tuple(self._rows[i][0] for i in range(self.n))

    def dominates(self, other: "RankSequence") -> bool:
        if self.n != other.n:
            raise MismatchedQuiver("cannot compare ranks on %d and %d vertices"
                                   % (self.n, other.n))
        return all(a >= b for (_, _, a), (_, _, b) in zip(self.entries(), other.entries()))

    def add(self, other: "RankSequence") -> "RankSequence":
        if self.n != other.n:
            raise MismatchedQuiver("mismatched sizes in rank addition")
        return RankSequence(self.n, [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)])

    def sub(self, other: "RankSequence") -> "RankSequence":
        if self.n != other.n:
            raise MismatchedQuiver("mismatched sizes in rank subtraction")
        return RankSequence(self.n, [
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)])

    def __eq__(self, other):
        return (isinstance(other, RankSequence)
                and self.n == other.n and self._rows == other._rows)

    def __hash__(self):
        return hash((self.n, self._rows))

    def __repr__(self):
        return "RankSequence(n=%d, %r)" % (self.n, self.rows())


# --- conversions -----------------------------------------------------------

def ranks_of(rep: Representation) -> RankSequence:
    """Rank sequence of a module: r_{i,j} counts segments [k,l] with k<=i, j<=l."""
    n = rep.n
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(i, n + 1):
            row.append(sum(m for (k, l), m in rep.mult.items() if k <= i and j <= l))
        rows.append(row)
    return RankSequence(n, rows)


def rep_of(ranks: RankSequence) -> Representation:
    """Inverse of ranks_of.

    m_{i,j} = r_{i,j} - r_{i,j+1} - r_{i-1,j} + r_{i-1,j+1}; validity of
    the input guarantees the result is non-negative.
    """
    ranks.validate()
    n = ranks.n
    mult: Dict[Segment, int] = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            m = (ranks.r(i, j) - ranks.r(i, j + 1)
                 - ranks.r(i - 1, j) + ranks.r(i - 1, j + 1))
            if m:
                mult[(i, j)] = m
    return Representation(n, mult)


def dual(rep: Representation) -> Representation:
    """Reflect a module through sigma: U[i,j] goes to U[sigma(j), sigma(i)]."""
    n = rep.n
    return Representation(n, {(sigma(j, n), sigma(i, n)): m
                              for (i, j), m in rep.mult.items()})


def dim_vector(rep: Representation) -> DimVector:
    d = [0] * rep.n
    for (i, j), m in rep.mult.items():
        for v in range(i, j + 1):
            d[v - 1] += m
    return tuple(d)


# --- hom / ext -------------------------------------------------------------

def _hom_segments(i: int, j: int, k: int, l: int) -> int:
    # one-dimensional iff the target window [k,l] catches the head of [i,j]
    return 1 if k <= i <= l <= j else 0


def _ext_segments(a: int, b: int, c: int, d: int) -> int:
    # Ext^1(U[a,b], U[c,d]) is one-dimensional iff a+1 <= c <= b+1 <= d.
    # The argument order was pinned against the matrix oracle (see
    # tests/test_core.py, the calibration regression).
    return 1 if a + 1 <= c <= b + 1 <= d else 0


def hom_dim(M: Representation, N: Representation) -> int:
    """Dimension of the space of module maps M -> N."""
    if M.n != N.n:
        raise MismatchedQuiver("hom_dim needs both modules on the same chain")
    return sum(mm * mn * _hom_segments(i, j, k, l)
               for (i, j), mm in M.mult.items()
               for (k, l), mn in N.mult.items())


def ext_dim(M: Representation, N: Representation) -> int:
    """Dimension of the extension space Ext^1(M, N)."""
    if M.n != N.n:
        raise MismatchedQuiver("ext_dim needs both modules on the same chain")
    return sum(mm * mn * _ext_segments(a, b, c, d)
               for (a, b), mm in M.mult.items()
               for (c, d), mn in N.mult.items())


def euler_form(d: DimVector, e: DimVector) -> int:
    """The bilinear form <d,e> = sum d_i e_i - sum_{i<n} d_i e_{i+1}.

    Satisfies hom_dim(M,N) - ext_dim(M,N) = <dim M, dim N> for all M, N.
    """
    if len(d) != len(e):
        raise MismatchedQuiver("dimension vectors of different lengths")
    n = len(d)
    return sum(d[i] * e[i] for i in range(n)) - sum(d[i] * e[i + 1] for i in range(n - 1))


# --- membership tests ------------------------------------------------------

def embeds(seg: Segment, M: Representation) -> bool:
    """Does U[seg] admit an injective map into M?"""
    i, j = seg
    r = ranks_of(M)
    return r.r(i, j) - r.r(i, j + 1) > 0


def is_quotient(seg: Segment, M: Representation) -> bool:
    """Does M surject onto U[seg]?"""
    i, j = seg
    r = ranks_of(M)
    return r.r(i, j) - r.r(i - 1, j) > 0


def is_summand(seg: Segment, M: Representation) -> bool:
    return M.m(*seg) > 0


# --- JSON ------------------------------------------------------------------

def rep_to_json(rep: Representation) -> dict:
    return {"n": rep.n,
            "mult": [{"i": i, "j": j, "m": m} for (i, j), m in rep.segments()]}


def rep_from_json(data: dict) -> Representation:
    mult: Dict[Segment, int] = {}
    for entry in data["mult"]:
        seg = (entry["i"], entry["j"])
        mult[seg] = mult.get(seg, 0) + entry["m"]
    return Representation(data["n"], mult)


def ranks_to_json(ranks: RankSequence) -> dict:
    return {"n": ranks.n, "rows": ranks.rows()}


def ranks_from_json(data: dict) -> RankSequence:
    return RankSequence(data["n"], data["rows"])
