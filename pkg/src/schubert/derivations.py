"""The shift derivation family D_h on the exterior algebra, its inverse
series E_t, and the commutative operator ring Z[D].

Two independent evaluation paths are provided for D_h on a k-vector:
leibniz_d enumerates all compositions of h (most of which cancel) and
pieri_d enumerates only the surviving interleaving symbols.  pieri_d is
the production path; leibniz_d exists as an oracle.
"""

from __future__ import annotations

from .exterior_core import (
    InvalidInputError,
    KVector,
    Partition,
    QInt,
    SchubertSymbol,
    _fast_symbol,
    normalize,
)


class DPolynomial:
    """Element of Z[D]: a map from monomial (a partition, parts = the
    subscripts of the D factors) to a nonzero integer coefficient.

    The empty partition is the identity operator."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for mono, c in items:
                if not isinstance(mono, Partition):
                    mono = Partition(mono)
                c = int(c)
                if c:
                    nc = d.get(mono, 0) + c
                    if nc:
                        d[mono] = nc
                    elif mono in d:
                        del d[mono]
        self.terms = d

    @classmethod
    def zero(cls) -> "DPolynomial":
        return cls()

    @classmethod
    def identity(cls) -> "DPolynomial":
        return cls({Partition(): 1})

    @classmethod
    def generator(cls, h: int) -> "DPolynomial":
        """D_h as an operator polynomial; D_0 is the identity, D_{h<0} = 0."""
        if h < 0:
            return cls()
        if h == 0:
            return cls.identity()
        return cls({Partition((h,)): 1})

    @classmethod
    def monomial(cls, mono, coeff: int = 1) -> "DPolynomial":
        return cls({mono: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def max_part(self) -> int:
        return max((m.parts[0] for m in self.terms if m.parts), default=0)

    def degree(self) -> int:
        """Largest graded degree |mono| among the terms (-1 if zero)."""
        return max((m.weight() for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {m.weight() for m in self.terms}
        return len(degrees) <= 1

    def items(self):
        return [(m, self.terms[m]) for m in sorted(self.terms, key=lambda p: p.parts)]

    def __add__(self, other):
        if not isinstance(other, DPolynomial):
            raise InvalidInputError("can only add DPolynomials")
        d = dict(self.terms)
        for m, c in other.terms.items():
            nc = d.get(m, 0) + c
            if nc:
                d[m] = nc
            elif m in d:
                del d[m]
        out = DPolynomial()
        out.terms = d
        return out

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        out = DPolynomial()
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, int):
            out = DPolynomial()
            if other:
                out.terms = {m: c * other for m, c in self.terms.items()}
            return out
        d = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = Partition(sorted(m1.parts + m2.parts, reverse=True))
                nc = d.get(m, 0) + c1 * c2
                if nc:
                    d[m] = nc
                elif m in d:
                    del d[m]
        out = DPolynomial()
        out.terms = d
        return out

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, DPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"DPolynomial({render_dpolynomial(self)!r})"


def render_dpolynomial(p: DPolynomial) -> str:
    """Text form like 'D1*D2 - D3'; monomials sorted lexicographically."""
    if not p.terms:
        return "0"
    chunks = []
    for pos, (mono, c) in enumerate(p.items()):
        pieces = [] if abs(c) == 1 and mono.parts else [str(abs(c))]
        for part in sorted(set(mono.parts)):
            e = mono.parts.count(part)
            pieces.append(f"D{part}" if e == 1 else f"D{part}^{e}")
        term = "*".join(pieces) if pieces else "1"
        if pos == 0:
            chunks.append(term if c > 0 else "-" + term)
        else:
            chunks.append((" + " if c > 0 else " - ") + term)
    return "".join(chunks)


def _compositions(h: int, k: int):
    """All tuples of k nonnegative integers summing to h."""
    if k == 0:
        if h == 0:
            yield ()
        return
    if k == 1:
        yield (h,)
        return
    for first in range(h + 1):
        for rest in _compositions(h - first, k - 1):
            yield (first,) + rest


def leibniz_raw_terms(h: int, indices) -> list:
    """Pre-cancellation index lists produced by the generalized Leibniz rule."""
    indices = tuple(indices)
    return [
        tuple(i + s for i, s in zip(indices, shifts))
        for shifts in _compositions(h, len(indices))
    ]


def leibniz_d(h: int, v: KVector) -> KVector:
    """D_h by brute-force composition enumeration followed by normalization."""
    if h < 0:
        raise InvalidInputError("h must be nonnegative")
    if h == 0:
        return v
    if v.degree == 0:
        return KVector.zero(0)
    raw = []
    for sym, coeff in v.terms.items():
        for shifted in leibniz_raw_terms(h, sym.indices):
            raw.append((shifted, coeff))
    return normalize(raw, v.degree)


def pieri_symbols(indices, h: int):
    """The surviving symbols J: i_1 <= j_1 < i_2 <= j_2 < ... <= i_k <= j_k
    with |J| = |I| + h.  All are canonical and pairwise distinct."""
    k = len(indices)

    def rec(p, rem, prefix):
        if p == k - 1:
            yield prefix + (indices[p] + rem,)
            return
        hi = min(indices[p + 1] - 1 - indices[p], rem)
        for step in range(hi + 1):
            yield from rec(p + 1, rem - step, prefix + (indices[p] + step,))

    yield from rec(0, h, ())


def pieri_d(h: int, v: KVector) -> KVector:
    """D_h by cancellation-free Pieri enumeration (production path)."""
    if h < 0:
        raise InvalidInputError("h must be nonnegative")
    if h == 0:
        return v
    if v.degree == 0:
        return KVector.zero(0)
    acc = {}
    for sym, coeff in v.terms.items():
        for j in pieri_symbols(sym.indices, h):
            prev = acc.get(j)
            acc[j] = coeff if prev is None else prev + coeff
    out = KVector(v.degree)
    out.terms = {_fast_symbol(j): c for j, c in acc.items() if c}
    return out


def apply_operator(p: DPolynomial, v: KVector) -> KVector:
    """Evaluate an operator polynomial on a k-vector.

    Each monomial is applied via pieri_d, largest subscript first (the
    order is immaterial mathematically, fixed for reproducibility).
    Monomials sharing a leading factor sequence reuse the intermediate
    vector, which matters for determinant expansions."""
    memo = {(): v}

    def evaluate(parts):
        cached = memo.get(parts)
        if cached is None:
            cached = memo[parts] = pieri_d(parts[-1], evaluate(parts[:-1]))
        return cached

    result = KVector.zero(v.degree)
    for mono, c in p.terms.items():
        result = result + evaluate(mono.parts).scale(c)
    return result


def inverse_components(max_degree: int) -> list:
    """E_0, ..., E_{max_degree}: coefficients of the formal inverse of
    D_t = 1 + D_1 t + D_2 t^2 + ..., as operator polynomials.

    E_m = -(D_1 E_{m-1} + ... + D_m E_0); each E_m is homogeneous of
    degree m."""
    es = [DPolynomial.identity()]
    for m in range(1, max_degree + 1):
        acc = DPolynomial.zero()
        for i in range(1, m + 1):
            acc = acc + DPolynomial.generator(i) * es[m - i]
        es.append(-acc)
    return es


def iterated_d1(m: int, v: KVector) -> KVector:
    """D_1 applied m times."""
    if m < 0:
        raise InvalidInputError("m must be nonnegative")
    for _ in range(m):
        v = pieri_d(1, v)
    return v
