"""Words in the braid group on 3 strands and their canonical forms.

The group is <t1, t2 | t1 t2 t1 = t2 t1 t2>.  Words are stored as
sequences of signed generator indices: +1, -1, +2, -2 stand for t1,
t1^-1, t2, t2^-1.  Every element is put into left-greedy normal form
with respect to the Garside element D = t1 t2 t1, whose proper
nontrivial left-divisors are the four simple factors

    a = t1,  b = t2,  ab = t1 t2,  ba = t2 t1.

An element is written uniquely as D^k f_1 ... f_m where no f_i is
trivial or D and each adjacent pair (f_i, f_{i+1}) is left-weighted:
no generator can be slid from the head of f_{i+1} onto the tail of
f_i.  Two words represent the same group element exactly when these
records coincide, which solves the word problem.

The pairwise renormalization table is computed here at import time by
brute force over the positive braid monoid: products of two simples
have length at most six, and their equivalence classes under the
single relation are tiny, so greedy heads can be found by exhaustive
prefix search.  A negative letter contributes D^-1 times a simple
(t1^-1 = D^-1 ab, t2^-1 = D^-1 ba), after which every D^-1 is carried
to the front through the flip automorphism x -> D x D^-1 that swaps
the two generators.

The group embeds into the special linear group over Z via t1 -> U1
and t2 -> U2; the image of D is the quarter rotation and the kernel of
the representation is generated by D^4 = (t1 t2)^6.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .mat2 import Mat2, ROT4, U1, U2

GENERATOR_MATRICES = {1: U1, -1: U1.inverse(), 2: U2, -2: U2.inverse()}
_LETTER_NAMES = {"a": 1, "A": -1, "b": 2, "B": -2}

DELTA_LETTERS = (1, 2, 1)


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators; any letter sequence is admissible."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if any(x not in (1, -1, 2, -2) for x in self.letters):
            raise ValueError(f"bad braid letters {self.letters!r}")

    @classmethod
    def parse(cls, text):
        """Parse '1 2 -1', 'a b A' or compact 'abA'."""
        tokens = text.split()
        if tokens and all(t in _LETTER_NAMES for t in tokens):
            return cls(tuple(_LETTER_NAMES[t] for t in tokens))
        if len(tokens) == 1 and all(ch in _LETTER_NAMES for ch in tokens[0]):
            return cls(tuple(_LETTER_NAMES[ch] for ch in tokens[0]))
        try:
            return cls(tuple(int(t) for t in tokens))
        except ValueError:
            raise ValueError(f"unparseable braid word {text!r}") from None

    def __mul__(self, other):
        if not isinstance(other, BraidWord):
            return NotImplemented
        return braid_mul(self, other)

    def inverse(self):
        return BraidWord(tuple(-x for x in reversed(self.letters)))

    def __pow__(self, n):
        base = self if n >= 0 else self.inverse()
        out = BraidWord()
        for _ in range(abs(n)):
            out = out * base
        return out

    def exponent_sum(self):
        return sum(1 if x > 0 else -1 for x in self.letters)

    def __len__(self):
        return len(self.letters)


def braid_mul(w1, w2):
    """Concatenate and freely reduce (cancel adjacent inverse pairs)."""
    stack = list(w1.letters)
    for x in w2.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return BraidWord(tuple(stack))


def delta_word(power=1):
    """The Garside element D = t1 t2 t1 raised to an integer power."""
    return BraidWord(DELTA_LETTERS) ** power


# ---------------------------------------------------------------------------
# simple elements and the pairwise renormalization table
# ---------------------------------------------------------------------------

# indices into the divisor lattice of D
_E, _A, _B, _AB, _BA, _D = range(6)
_SIMPLE_WORDS = ((), (1,), (2,), (1, 2), (2, 1), (1, 2, 1))
_SIMPLE_NAMES = ("e", "a", "b", "ab", "ba", "d")
# flip(x) = D x D^-1 exchanges the generators
_FLIP = (_E, _B, _A, _BA, _AB, _D)
# D t1^-1 = t1 t2 and D t2^-1 = t2 t1
_INVERSE_COMPLEMENT = {-1: _AB, -2: _BA}


@lru_cache(maxsize=None)
def _rel_class(word):
    """All positive words equal to `word` under t1t2t1 = t2t1t2."""
    seen = {word}
    frontier = [word]
    while frontier:
        w = frontier.pop()
        for i in range(len(w) - 2):
            seg = w[i : i + 3]
            if seg == (1, 2, 1):
                new = w[:i] + (2, 1, 2) + w[i + 3 :]
            elif seg == (2, 1, 2):
                new = w[:i] + (1, 2, 1) + w[i + 3 :]
            else:
                continue
            if new not in seen:
                seen.add(new)
                frontier.append(new)
    return frozenset(seen)


def _left_divides(s, word):
    """Does simple s left-divide the positive word (in the monoid)?"""
    prefixes = _rel_class(_SIMPLE_WORDS[s])
    n = len(_SIMPLE_WORDS[s])
    return any(rep[:n] in prefixes for rep in _rel_class(word))


def _simple_of(word):
    for s, sw in enumerate(_SIMPLE_WORDS):
        if len(sw) == len(word) and word in _rel_class(sw):
            return s
    raise ValueError(f"positive word {word!r} is not a simple element")


def _greedy_pair(word):
    """Left-greedy factorization (head, tail) of a length<=6 positive word."""
    divisors = [s for s in range(6) if _left_divides(s, word)]
    divisors.sort(key=lambda s: -len(_SIMPLE_WORDS[s]))
    head = next(
        s for s in divisors if all(_left_divides(t, _SIMPLE_WORDS[s]) for t in divisors)
    )
    hw = _rel_class(_SIMPLE_WORDS[head])
    n = len(_SIMPLE_WORDS[head])
    rep = next(r for r in _rel_class(word) if r[:n] in hw)
    return head, _simple_of(rep[n:])


def _build_renorm():
    table = []
    for x in range(6):
        row = []
        for y in range(6):
            row.append(_greedy_pair(_SIMPLE_WORDS[x] + _SIMPLE_WORDS[y]))
        table.append(tuple(row))
    return tuple(table)


_RENORM = _build_renorm()


# ---------------------------------------------------------------------------
# normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GarsideNormalForm:
    """Canonical record D^delta_power * factors, factors left-weighted."""

    delta_power: int
    factors: tuple[str, ...]

    def word(self):
        """Reconstruct a braid word representing this element."""
        out = delta_word(self.delta_power)
        for name in self.factors:
            out = out * BraidWord(_SIMPLE_WORDS[_SIMPLE_NAMES.index(name)])
        return out

    def is_identity(self):
        return self.delta_power == 0 and not self.factors


def normal_form(w):
    """Left-greedy Garside normal form of the element represented by w.

    Two words represent the same group element iff their normal forms
    are identical records.
    """
    letters = w.letters
    # negatives after position j flip the simple contributed at j
    flips_after = [0] * (len(letters) + 1)
    for j in range(len(letters) - 1, -1, -1):
        flips_after[j] = flips_after[j + 1] + (1 if letters[j] < 0 else 0)
    delta_power = -flips_after[0]

    seq = []
    for j, x in enumerate(letters):
        s = (_A if x == 1 else _B) if x > 0 else _INVERSE_COMPLEMENT[x]
        if flips_after[j + 1] % 2:
            s = _FLIP[s]
        seq.append(s)

    # fix violated adjacent pairs until the sequence is left-weighted
    i = 0
    while i < len(seq) - 1:
        x, y = seq[i], seq[i + 1]
        u, v = _RENORM[x][y]
        if u == x:
            i += 1
        else:
            seq[i], seq[i + 1] = u, v
            if i > 0:
                i -= 1

    lo = 0
    while lo < len(seq) and seq[lo] == _D:
        lo += 1
    hi = len(seq)
    while hi > lo and seq[hi - 1] == _E:
        hi -= 1
    factors = tuple(_SIMPLE_NAMES[s] for s in seq[lo:hi])
    assert all(f not in ("e", "d") for f in factors)
    return GarsideNormalForm(delta_power + lo, factors)


def equal_elements(w1, w2):
    return normal_form(w1) == normal_form(w2)


# ---------------------------------------------------------------------------
# the matrix representation and its kernel
# ---------------------------------------------------------------------------


def matrix_rep(w):
    """Image of the word under t1 -> U1, t2 -> U2; lands in SL2(Z)."""
    out = Mat2.identity()
    for x in w.letters:
        out = out * GENERATOR_MATRICES[x]
    return out


def kernel_power(w):
    """If the matrix image of w is trivial, the k with w = (t1 t2)^(6k).

    Returns None when the image is not the identity.  The candidate k
    is read off the exponent sum and confirmed against the normal
    form; a mismatch (never expected) raises RuntimeError.
    """
    if matrix_rep(w) != Mat2.identity():
        return None
    total = w.exponent_sum()
    k, rem = divmod(total, 12)
    nf = normal_form(w)
    if rem != 0 or nf != GarsideNormalForm(4 * k, ()):
        raise RuntimeError(
            f"kernel element fails the D^(4k) check: exponent sum {total}, "
            f"normal form {nf}"
        )
    return k


def lift_matrix(m):
    """A braid word whose matrix image is m, for m in SL2(Z).

    The first column of m is reduced by the Euclidean algorithm using
    left multiplications by powers of U1 and U2, taking the quotient
    that leaves the smaller remainder and the floor quotient on ties;
    a residual global sign is absorbed by D^2 (whose image is -1).
    The output is deterministic in m.
    """
    if not m.is_integral:
        raise ValueError("lift_matrix expects an integer matrix")
    if m.det() != 1:
        raise ValueError(f"determinant {m.det()} != 1; not in SL2(Z)")

    # Reduce m to upper triangular form by left multiplications g_1, g_2,
    # ...; then m = g_1^-1 g_2^-1 ... T, and each inverse lifts literally.
    ops = []  # (generator index, power): the braid contribution of g_j^-1
    a, b, c, d = m.a, m.b, m.c, m.d
    while c != 0:
        if a != 0 and abs(a) > abs(c):
            # row0 -= q*row1, i.e. g = U1^-q
            q = _balanced_quotient(a, c)
            a, b = a - q * c, b - q * d
            ops.append((1, q))
        elif a != 0:
            # row1 -= q*row0, i.e. g = U2^q
            q = _balanced_quotient(c, a)
            c, d = c - q * a, d - q * b
            ops.append((2, -q))
        else:
            # dead pivot: row0 += row1, i.e. g = U1
            a, b = a + c, b + d
            ops.append((1, -1))
    # now g_t ... g_1 m = [[a, b], [0, d]] with a*d = 1
    letters = []
    for gen, power in ops:
        sign = 1 if power > 0 else -1
        letters.extend([sign * gen] * abs(power))
    if a == -1:
        letters.extend(DELTA_LETTERS * 2)  # D^2 maps to -identity
        b = -b
    letters.extend([1] * b if b >= 0 else [-1] * (-b))
    return BraidWord(tuple(letters))


def _balanced_quotient(x, y):
    """Quotient q minimizing |x - q*y|, preferring the floor on ties."""
    q = x // y
    if abs(x - (q + 1) * y) < abs(x - q * y):
        return q + 1
    return q
