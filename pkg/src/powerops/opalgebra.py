"""The associative algebra of additive power operations.

Over R = Z[a] this is generated by Q0, Q1, Q2 subject to the commutation
rules for moving the scalar a through an operation,

    Q0*a = a^2*Q0 - 2a*Q1 + 6*Q2
    Q1*a = 3*Q0  + a*Q2
    Q2*a = -a*Q0 + 3*Q1

and the two Adem-type straightening rules

    Q1*Q0 = 2*Q2*Q1 - 2*Q0*Q2
    Q2*Q0 = Q0*Q1 + a*Q0*Q2 - 2*Q1*Q2.

Every element is an R-linear combination of admissible monomials
Q0^j Qk1 ... Qkr with each ki in {1, 2}; the degree-k piece is free of rank
2^(k+1) - 1.  `Operation` stores the admissible form as {(j, word): Poly}.

Reduction is confluent; `check_confluence` certifies this empirically by
reducing every small word under several independent strategies (and against
a naive one-step rewriter that shares no code with the fast engine).
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .poly import Poly, A, ONE, ZERO

__all__ = ["Operation", "normal_form", "multiply", "psi", "basis_of_degree",
           "push_through", "push_poly", "parse_terms", "check_confluence",
           "GAMMA_RANKS"]


def GAMMA_RANKS(k: int) -> int:
    """Rank of the degree-k piece: 2^(k+1) - 1."""
    return (1 << (k + 1)) - 1


# --- raw admissible-form arithmetic ----------------------------------------
#
# Terms are dicts {(j, word): Poly}; the helpers below never mutate their
# arguments or cached values.

def _merge(target, source, factor=None):
    for mono, c in source.items():
        if factor is not None:
            c = c * factor
        cur = target.get(mono)
        new = c if cur is None else cur + c
        if new.is_zero():
            target.pop(mono, None)
        else:
            target[mono] = new
    return target


@lru_cache(maxsize=None)
def _mono_times_a(j: int, word: tuple):
    """(Q0^j Q_word) * a in admissible form."""
    if not word:
        if j == 0:
            return {(0, ()): A}
        # Q0^j a = (Q0^(j-1) a^2) Q0 - 2 (Q0^(j-1) a) Q1 + 6 Q0^(j-1) Q2
        u = _mono_times_a(j - 1, ())
        ua = _times_a(u)
        out = {}
        _merge(out, _append_q(ua, 0))
        _merge(out, _append_q(u, 1), Poly(-2))
        _merge(out, {(j - 1, (2,)): Poly(6)})
        return out
    head, k = (j, word[:-1]), word[-1]
    if k == 1:
        # ... Q1 a = ...(3 Q0 + a Q2)
        out = {}
        _merge(out, _append_q({head: ONE}, 0), Poly(3))
        _merge(out, _append_q(_mono_times_a(*head), 2))
        return out
    # ... Q2 a = ...(-a Q0 + 3 Q1)
    out = {}
    _merge(out, _append_q(_mono_times_a(*head), 0), Poly(-1))
    _merge(out, {(j, word[:-1] + (1,)): Poly(3)})
    return out


def _times_a(terms):
    out = {}
    for (j, word), c in terms.items():
        _merge(out, _mono_times_a(j, word), c)
    return out


@lru_cache(maxsize=None)
def _mono_q0(j: int, word: tuple):
    """(Q0^j Q_word) * Q0 in admissible form."""
    if not word:
        return {(j + 1, ()): ONE}
    head, k = (j, word[:-1]), word[-1]
    out = {}
    if k == 1:
        # Q1 Q0 -> 2 Q2 Q1 - 2 Q0 Q2
        _merge(out, {(j, word[:-1] + (2, 1)): Poly(2)})
        _merge(out, _append_q(_mono_q0(*head), 2), Poly(-2))
    else:
        # Q2 Q0 -> Q0 Q1 + a Q0 Q2 - 2 Q1 Q2
        _merge(out, _append_q(_mono_q0(*head), 1))
        _merge(out, _append_q(_q0_dict(_times_a({head: ONE})), 2))
        _merge(out, {(j, word[:-1] + (1, 2)): Poly(-2)})
    return out


def _q0_dict(terms):
    out = {}
    for (j, word), c in terms.items():
        _merge(out, _mono_q0(j, word), c)
    return out


def _append_q(terms, i: int):
    if i == 0:
        return _q0_dict(terms)
    out = {}
    for (j, word), c in terms.items():
        _merge(out, {(j, word + (i,)): c})
    return out


def _times_poly(terms, p: Poly):
    out = {}
    power = terms
    for k, coeff in enumerate(p.coeffs):
        if coeff:
            _merge(out, power, Poly(coeff))
        if k + 1 < len(p.coeffs):
            power = _times_a(power)
    return out


def _raw_multiply(x, y):
    out = {}
    for (j2, w2), q in y.items():
        t = _times_poly(x, q)
        for _ in range(j2):
            t = _append_q(t, 0)
        for letter in w2:
            t = _append_q(t, letter)
        _merge(out, t)
    return out


# --- scalar pushing ---------------------------------------------------------

@lru_cache(maxsize=None)
def push_through(i: int, k: int):
    """Write Q_i * a^k as c0*Q0 + c1*Q1 + c2*Q2; returns (c0, c1, c2)."""
    if k == 0:
        return tuple(ONE if j == i else ZERO for j in range(3))
    t = [push_through(j, k - 1) for j in range(3)]
    if i == 0:
        return tuple(A * A * t[0][j] - 2 * A * t[1][j] + 6 * t[2][j]
                     for j in range(3))
    if i == 1:
        return tuple(3 * t[0][j] + A * t[2][j] for j in range(3))
    return tuple(-A * t[0][j] + 3 * t[1][j] for j in range(3))


def push_poly(i: int, p: Poly):
    """Write Q_i * p(a) as c0*Q0 + c1*Q1 + c2*Q2."""
    out = [ZERO, ZERO, ZERO]
    for k, coeff in enumerate(Poly(p).coeffs):
        if coeff:
            t = push_through(i, k)
            for j in range(3):
                out[j] = out[j] + coeff * t[j]
    return tuple(out)


# --- the element class ------------------------------------------------------

class Operation:
    """An element of the operation algebra, in admissible form."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = Poly(c)
                if not c.is_zero():
                    clean[mono] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def unit() -> "Operation":
        return Operation({(0, ()): ONE})

    @staticmethod
    def q(i: int) -> "Operation":
        if i == 0:
            return Operation({(1, ()): ONE})
        return Operation({(0, (i,)): ONE})

    @staticmethod
    def from_poly(p) -> "Operation":
        return Operation({(0, ()): Poly(p)})

    @staticmethod
    def from_word(letters) -> "Operation":
        """Product of tokens from {'a', 'Q0', 'Q1', 'Q2'} (or ints 0,1,2)."""
        cur = {(0, ()): ONE}
        for tok in letters:
            if tok == "a":
                cur = _times_a(cur)
            else:
                i = int(tok[1]) if isinstance(tok, str) else int(tok)
                cur = _append_q(cur, i)
        return Operation(cur)

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Common degree of all monomials; raises if inhomogeneous."""
        degs = {j + len(w) for (j, w) in self.terms}
        if len(degs) > 1:
            raise ValueError("inhomogeneous element")
        return degs.pop() if degs else None

    def homogeneous_part(self, k: int) -> "Operation":
        return Operation({m: c for m, c in self.terms.items()
                          if m[0] + len(m[1]) == k})

    def coefficient(self, j: int, word) -> Poly:
        return self.terms.get((j, tuple(word)), ZERO)

    def __eq__(self, other):
        if isinstance(other, Operation):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Operation):
            return NotImplemented
        return Operation(_merge(dict(self.terms), other.terms))

    def __sub__(self, other):
        if not isinstance(other, Operation):
            return NotImplemented
        return Operation(_merge(dict(self.terms), other.terms, Poly(-1)))

    def __neg__(self):
        return Operation({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Poly)):
            # right scalar: self * p needs pushing
            return Operation(_times_poly(self.terms, Poly(other)))
        if not isinstance(other, Operation):
            return NotImplemented
        return Operation(_raw_multiply(self.terms, other.terms))

    def __rmul__(self, other):
        if isinstance(other, (int, Poly)):
            return Operation({m: Poly(other) * c
                              for m, c in self.terms.items()})
        return NotImplemented

    # -- i/o ---------------------------------------------------------------

    def sorted_terms(self):
        """Terms in display order: degree, then j descending, then word."""
        return sorted(self.terms.items(),
                      key=lambda mc: (mc[0][0] + len(mc[0][1]), -mc[0][0],
                                      mc[0][1]))

    def to_json(self):
        return {"terms": [{"j": j, "word": list(w), "coeff": c.to_json()}
                          for (j, w), c in self.sorted_terms()]}

    @staticmethod
    def from_json(data) -> "Operation":
        terms = {}
        for t in data["terms"]:
            terms[(t["j"], tuple(t["word"]))] = Poly.from_json(t["coeff"])
        return Operation(terms)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for (j, w), c in self.sorted_terms():
            mono = " ".join(["Q0"] * j + ["Q%d" % k for k in w])
            for exp in range(len(c.coeffs) - 1, -1, -1):
                coeff = c[exp]
                if coeff == 0:
                    continue
                bits = []
                if abs(coeff) != 1 or (exp == 0 and not mono):
                    bits.append(str(abs(coeff)))
                if exp == 1:
                    bits.append("a")
                elif exp > 1:
                    bits.append("a^%d" % exp)
                if mono:
                    bits.append(mono)
                if not bits:
                    bits.append("1")
                body = " ".join(bits)
                if not chunks:
                    chunks.append(body if coeff > 0 else "- " + body)
                else:
                    chunks.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(chunks)

    __repr__ = __str__


def multiply(x: Operation, y: Operation) -> Operation:
    return x * y


def psi() -> Operation:
    """The central element Q0Q0 + a Q0Q1 - 2 Q1Q1 + a^2 Q0Q2 - 2a Q1Q2 + 4 Q2Q2."""
    return Operation({(2, ()): ONE, (1, (1,)): A, (0, (1, 1)): Poly(-2),
                      (1, (2,)): A * A, (0, (1, 2)): -2 * A,
                      (0, (2, 2)): Poly(4)})


def basis_of_degree(k: int):
    """Admissible monomials of degree k: j descending, then word lex (1<2)."""
    out = []
    for j in range(k, -1, -1):
        for w in itertools.product((1, 2), repeat=k - j):
            out.append((j, w))
    return out


# --- text syntax ------------------------------------------------------------

def parse_terms(text: str):
    """Parse "3 Q0 a Q1 - 2 Q2" into [(3, ['Q0','a','Q1']), (-2, ['Q2'])].

    Tokens: integers (coefficient prefixes), `a` (also `a^k`), `Q0`, `Q1`,
    `Q2`; summands separated by + and -.
    """
    tokens = text.replace("+", " + ").replace("-", " - ").split()
    terms = []
    sign, coeff, letters = 1, 1, []
    seen = False

    def flush():
        nonlocal sign, coeff, letters, seen
        if seen:
            terms.append((sign * coeff, letters))
        sign, coeff, letters, seen = 1, 1, [], False

    for tok in tokens:
        if tok == "+":
            flush()
        elif tok == "-":
            flush()
            sign = -1
        elif tok in ("Q0", "Q1", "Q2"):
            letters.append(tok)
            seen = True
        elif tok == "a" or tok.startswith("a^"):
            k = int(tok[2:]) if tok.startswith("a^") else 1
            letters.extend(["a"] * k)
            seen = True
        else:
            coeff *= int(tok)
            seen = True
    flush()
    return terms


def normal_form(source) -> Operation:
    """Normal form of a free expression (text, or [(coeff, letters)] pairs)."""
    if isinstance(source, str):
        source = parse_terms(source)
    total = Operation()
    for coeff, letters in source:
        term = Operation.from_word(letters)
        total = total + coeff * term
    return total


# --- independent naive rewriter and the confluence check --------------------

_RULES = {
    (0, "a"): {("a", "a", 0): 1, ("a", 1): -2, (2,): 6},
    (1, "a"): {(0,): 3, ("a", 2): 1},
    (2, "a"): {("a", 0): -1, (1,): 3},
    (1, 0): {(2, 1): 2, (0, 2): -2},
    (2, 0): {(0, 1): 1, ("a", 0, 2): 1, (1, 2): -2},
}


def _redexes(word):
    return [i for i in range(len(word) - 1) if (word[i], word[i + 1]) in _RULES]


def _rewrite_once(word, i):
    rhs = _RULES[(word[i], word[i + 1])]
    return {word[:i] + repl + word[i + 2:]: c for repl, c in rhs.items()}


def _reduce_word(word, pick, memo):
    """Fully reduce a single word under the choice function `pick`.

    Terminates for every strategy: composing I(a): x -> x+1,
    I(Q0): x -> 3x+2, I(Q1) = I(Q2): x -> 3x+1 left to right gives a strictly
    monotone weight that every branch of every rule strictly decreases.
    The memo fixes one redex choice per word, so each strategy is a choice
    function word -> redex (randomized strategies sample it lazily).
    """
    cached = memo.get(word)
    if cached is not None:
        return cached
    spots = _redexes(word)
    if not spots:
        result = {word: 1}
    else:
        i = pick(spots)
        result = {}
        for new_word, factor in _rewrite_once(word, i).items():
            for w2, c2 in _reduce_word(new_word, pick, memo).items():
                new = result.get(w2, 0) + factor * c2
                if new:
                    result[w2] = new
                else:
                    result.pop(w2, None)
    memo[word] = result
    return result


def _naive_reduce(terms, pick, memo=None):
    """Reduce {word: int} to normal form, choosing redexes with `pick`."""
    if memo is None:
        memo = {}
    out = {}
    for word, c in terms.items():
        for w2, c2 in _reduce_word(word, pick, memo).items():
            new = out.get(w2, 0) + c * c2
            if new:
                out[w2] = new
            else:
                out.pop(w2, None)
    return out


def _word_table_to_operation(table) -> Operation:
    out = {}
    for word, c in table.items():
        n_a = sum(1 for t in word if t == "a")
        rest = [t for t in word if t != "a"]
        j = 0
        while j < len(rest) and rest[j] == 0:
            j += 1
        tail = tuple(rest[j:])
        assert all(t in (1, 2) for t in tail), word
        mono = (j, tail)
        cur = out.get(mono, ZERO)
        out[mono] = cur + Poly(c).shift(n_a)
    return Operation(out)


def check_confluence(max_deg: int = 4, max_a: int = 2, seed: int = 0,
                     random_rounds: int = 2):
    """Reduce every small word under independent strategies and compare.

    Enumerates all products of at most max_deg Q-letters and max_a scalars
    (in every interleaving), reduces each with leftmost, rightmost, and
    seeded-random redex choices via the naive rewriter, and checks that all
    answers agree with each other and with the fast engine.
    """
    rng = random.Random(seed)
    strategies = [("leftmost", lambda spots: spots[0]),
                  ("rightmost", lambda spots: spots[-1])]
    for r in range(random_rounds):
        strategies.append(("random%d" % r, rng.choice))
    words = []
    alphabet = ("a", 0, 1, 2)
    for length in range(0, max_deg + max_a + 1):
        for word in itertools.product(alphabet, repeat=length):
            if sum(1 for t in word if t == "a") <= max_a and \
               sum(1 for t in word if t != "a") <= max_deg:
                words.append(word)
    divergences = []
    engine_mismatches = []
    memos = {name: {} for name, _ in strategies}
    for word in words:
        results = [(_name, _naive_reduce({word: 1}, pick, memos[_name]))
                   for _name, pick in strategies]
        base = results[0][1]
        for name, table in results[1:]:
            if table != base:
                divergences.append((word, name))
        tokens = ["a" if t == "a" else "Q%d" % t for t in word]
        if _word_table_to_operation(base) != Operation.from_word(tokens):
            engine_mismatches.append(word)
    return {"words_checked": len(words), "strategies": len(strategies),
            "divergences": divergences, "engine_mismatches": engine_mismatches}
