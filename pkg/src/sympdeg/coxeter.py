"""Words and elements in the Weyl groups of types A and C.

Elements are stored in one-line notation: a permutation of 1..m for type
A, a signed permutation (images may be negated) for type C.  A word is a
sequence of simple-reflection letters; evaluation processes the letters
left to right, each acting on positions of the running image tuple.
Letter a < m swaps positions a and a+1; in type C the letter m flips the
sign at position m.

Lengths are computed from the geometry (inversions, respectively the
count of positive roots sent to negative ones), so reducedness checks do
not depend on any word combinatorics.
"""

from __future__ import annotations

from typing import List, NamedTuple, Tuple


class PermutationA:
    """A permutation of 1..m in one-line notation."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("not a permutation of 1..%d: %r" % (len(images), images))
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("PermutationA is immutable")

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def length(self) -> int:
        inv = 0
        for a in range(self.m):
            for b in range(a + 1, self.m):
                if self.images[a] > self.images[b]:
                    inv += 1
        return inv

    def __eq__(self, other):
        return isinstance(other, PermutationA) and self.images == other.images

    def __hash__(self):
        return hash(("A", self.images))

    def __repr__(self):
        return "PermutationA(%r)" % (self.images,)


class SignedPermutation:
    """A signed permutation: images are +-1..+-m with distinct absolute
    values.  Acts on e_i by e_i -> sign(w(i)) e_|w(i)|."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(abs(x) for x in images) != list(range(1, len(images) + 1)) \
                or any(x == 0 for x in images):
            raise ValueError("not a signed permutation: %r" % (images,))
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("SignedPermutation is immutable")

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def length(self) -> int:
        """Number of positive roots of C_m whose image is a negative root.

        A root vector is negative exactly when its first nonzero
        coordinate is, so no chamber combinatorics enters here.
        """
        m = self.m
        roots = []
        for a in range(1, m + 1):
            roots.append(((a, 2),))
            for b in range(a + 1, m + 1):
                roots.append(((a, 1), (b, -1)))
                roots.append(((a, 1), (b, 1)))
        count = 0
        for root in roots:
            vec = [0] * m
            for i, c in root:
                w = self.images[i - 1]
                vec[abs(w) - 1] += c if w > 0 else -c
            first = next(v for v in vec if v)
            if first < 0:
                count += 1
        return count

    def __eq__(self, other):
        return isinstance(other, SignedPermutation) and self.images == other.images

    def __hash__(self):
        return hash(("C", self.images))

    def __repr__(self):
        return "SignedPermutation(%r)" % (self.images,)


class WeylWord(NamedTuple):
    """A word in simple reflections: kind "A" or "C", rank m, letters.

    Type A words act on m symbols (letters 1..m-1); type C words have
    letters 1..m, where the letter m is the sign flip.
    """

    kind: str
    m: int
    letters: Tuple[int, ...]

    @classmethod
    def make(cls, kind: str, m: int, letters) -> "WeylWord":
        letters = tuple(letters)
        if kind not in ("A", "C"):
            raise ValueError("kind must be 'A' or 'C', got %r" % (kind,))
        if m < 1:
            raise ValueError("rank must be positive")
        top = m - 1 if kind == "A" else m
        for a in letters:
            if not (isinstance(a, int) and 1 <= a <= top):
                raise ValueError("letter %r out of range 1..%d" % (a, top))
        return cls(kind, m, letters)


def evaluate(word: WeylWord):
    """One-line element of a word, letters applied left to right."""
    images = list(range(1, word.m + 1))
    for a in word.letters:
        if word.kind == "C" and a == word.m:
            images[a - 1] = -images[a - 1]
        else:
            images[a - 1], images[a] = images[a], images[a - 1]
    if word.kind == "A":
        return PermutationA(images)
    return SignedPermutation(images)


def is_reduced(word: WeylWord) -> bool:
    return len(word.letters) == evaluate(word).length()


def parse_word(kind: str, m: int, text: str) -> WeylWord:
    """Parse "s4 s3 s4 s2 s3 s4 s1" into a word."""
    letters: List[int] = []
    for token in text.split():
        if not token.startswith("s"):
            raise ValueError("expected letters like 's3', got %r" % (token,))
        letters.append(int(token[1:]))
    return WeylWord.make(kind, m, letters)


def word_to_str(word: WeylWord) -> str:
    return " ".join("s%d" % a for a in word.letters)


# --- Bruhat order ------------------------------------------------------------

def _rank_matrix_leq(u_images, w_images) -> bool:
    # u <= w in type A iff every northwest window of u's permutation
    # matrix holds at least as many entries as w's
    m = len(u_images)
    for i in range(1, m + 1):
        cu = [0] * (m + 1)
        cw = [0] * (m + 1)
        for k in range(i):
            cu[u_images[k]] += 1
            cw[w_images[k]] += 1
        tu = tw = 0
        for j in range(1, m + 1):
            tu += cu[j]
            tw += cw[j]
            if tu < tw:
                return False
    return True


def bruhat_leq(u, w) -> bool:
    """Bruhat order; works for both permutation flavours.

    Signed permutations are compared through the standard embedding into
    the symmetric group on 2m symbols (k -> m+k, -k -> m+1-k), where the
    rank criterion applies verbatim.
    """
    if type(u) is not type(w) or u.m != w.m:
        raise ValueError("can only compare elements of one group")
    if isinstance(u, PermutationA):
        return _rank_matrix_leq(u.images, w.images)
    m = u.m

    def embed(s):
        # our sign flip lives at the last position; the subposet embedding
        # into the symmetric group on 2m symbols is stated for a flip at
        # the first position, so conjugate by the position reversal first
        def rev(j):
            x = s(m + 1 - j)
            return (m + 1 - x) if x > 0 else -(m + 1 + x)

        def psi(k):
            return m + k if k > 0 else m + 1 + k

        full = []
        for i in range(1, 2 * m + 1):
            k = i - m if i > m else i - m - 1
            wk = rev(k) if k > 0 else -rev(-k)
            full.append(psi(wk))
        return full

    return _rank_matrix_leq(embed(u), embed(w))
