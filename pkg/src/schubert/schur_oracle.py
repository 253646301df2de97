"""Independent cross-check for classical products: Schur polynomials in k
variables via semistandard tableau enumeration, decomposition back into the
Schur basis, and Littlewood-Richardson coefficients.

Deliberately shares no code with the derivation machinery, so the two paths
cannot fail the same way."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement

from .exterior_core import InvalidInputError, Partition


class MultiPolynomial:
    """Integer polynomial in x_1..x_k: exponent tuple -> nonzero coefficient."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms=None):
        self.num_vars = int(num_vars)
        d = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for exp, c in items:
                exp = tuple(int(e) for e in exp)
                if len(exp) != self.num_vars or any(e < 0 for e in exp):
                    raise InvalidInputError(f"bad exponent vector {exp}")
                c = int(c)
                if c:
                    nc = d.get(exp, 0) + c
                    if nc:
                        d[exp] = nc
                    elif exp in d:
                        del d[exp]
        self.terms = d

    @classmethod
    def zero(cls, num_vars: int) -> "MultiPolynomial":
        return cls(num_vars)

    @classmethod
    def one(cls, num_vars: int) -> "MultiPolynomial":
        return cls(num_vars, {(0,) * num_vars: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def leading_exponent(self) -> tuple:
        return max(self.terms)

    def is_symmetric(self) -> bool:
        from itertools import permutations

        for exp, c in self.terms.items():
            for perm in set(permutations(exp)):
                if self.terms.get(perm, 0) != c:
                    return False
        return True

    def __add__(self, other):
        self._check(other)
        d = dict(self.terms)
        for e, c in other.terms.items():
            nc = d.get(e, 0) + c
            if nc:
                d[e] = nc
            elif e in d:
                del d[e]
        out = MultiPolynomial(self.num_vars)
        out.terms = d
        return out

    def __neg__(self):
        out = MultiPolynomial(self.num_vars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            out = MultiPolynomial(self.num_vars)
            if other:
                out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        self._check(other)
        d = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                nc = d.get(e, 0) + c1 * c2
                if nc:
                    d[e] = nc
                elif e in d:
                    del d[e]
        out = MultiPolynomial(self.num_vars)
        out.terms = d
        return out

    __rmul__ = __mul__

    def _check(self, other):
        if not isinstance(other, MultiPolynomial) or other.num_vars != self.num_vars:
            raise InvalidInputError("variable-count mismatch")

    def __eq__(self, other):
        return (
            isinstance(other, MultiPolynomial)
            and self.num_vars == other.num_vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultiPolynomial({self.num_vars}, {dict(sorted(self.terms.items()))})"


def _ssyt_weights(shape, k):
    """Yield the content vector of each semistandard tableau of the given
    shape with entries in 1..k: rows weakly increase, columns strictly."""

    rows = list(shape)

    def rec(r, built):
        if r == len(rows):
            weight = [0] * k
            for row in built:
                for entry in row:
                    weight[entry - 1] += 1
            yield tuple(weight)
            return
        width = rows[r]
        above = built[r - 1] if r else None

        def fill(c, row):
            if c == width:
                yield from rec(r + 1, built + [row])
                return
            lo = row[c - 1] if c else 1
            if above is not None and c < len(above):
                lo = max(lo, above[c] + 1)
            for val in range(lo, k + 1):
                yield from fill(c + 1, row + [val])

        yield from fill(0, [])

    yield from rec(0, [])


@lru_cache(maxsize=None)
def schur_expand(lam: Partition, k: int) -> MultiPolynomial:
    """The monomial expansion of s_lam(x_1..x_k) by tableau enumeration;
    zero when the partition is longer than k."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    if lam.length() > k:
        return MultiPolynomial.zero(k)
    d = {}
    for weight in _ssyt_weights(lam.parts, k):
        d[weight] = d.get(weight, 0) + 1
    out = MultiPolynomial(k)
    out.terms = d
    return out


@lru_cache(maxsize=None)
def complete_homogeneous(i: int, k: int) -> MultiPolynomial:
    """h_i(x_1..x_k): the sum of all degree-i monomials."""
    if i < 0:
        return MultiPolynomial.zero(k)
    d = {}
    for combo in combinations_with_replacement(range(k), i):
        exp = [0] * k
        for v in combo:
            exp[v] += 1
        exp = tuple(exp)
        d[exp] = d.get(exp, 0) + 1
    out = MultiPolynomial(k)
    out.terms = d
    return out


def schur_decompose(p: MultiPolynomial) -> dict:
    """Expand a symmetric polynomial in the Schur basis by repeatedly
    subtracting the Schur polynomial of the lexicographically largest
    exponent vector.  Raises if the input is not symmetric."""
    k = p.num_vars
    out = {}
    rem = p
    while not rem.is_zero():
        lead = rem.leading_exponent()
        if any(a < b for a, b in zip(lead, lead[1:])):
            raise InvalidInputError("polynomial is not symmetric")
        lam = Partition(lead)
        c = rem.terms[lead]
        out[lam] = out.get(lam, 0) + c
        rem = rem - c * schur_expand(lam, k)
    return {lam: c for lam, c in out.items() if c}


@lru_cache(maxsize=None)
def lr_expansion(lam: Partition, mu: Partition, k: int) -> tuple:
    """Schur expansion of s_lam * s_mu over k variables, as sorted pairs."""
    product = schur_expand(lam, k) * schur_expand(mu, k)
    dec = schur_decompose(product)
    return tuple(sorted(dec.items(), key=lambda t: t[0].parts))


def lr_coefficient(lam, mu, nu, k: int) -> int:
    """Coefficient of s_nu in s_lam * s_mu over k variables."""
    lam, mu, nu = (p if isinstance(p, Partition) else Partition(p) for p in (lam, mu, nu))
    for p in (lam, mu, nu):
        if p.length() > k:
            raise InvalidInputError(f"partition {tuple(p)} longer than k={k}")
    return dict(lr_expansion(lam, mu, k)).get(nu, 0)


def verify_jacobi_trudi(lam, k: int) -> bool:
    """True iff substituting h_i for the i-th generator in the Giambelli
    determinant of lam reproduces schur_expand(lam, k)."""
    from .giambelli_ring import giambelli_det

    if not isinstance(lam, Partition):
        lam = Partition(lam)
    det = giambelli_det(lam, k)
    total = MultiPolynomial.zero(k)
    for mono, c in det.terms.items():
        prod = MultiPolynomial.one(k)
        for part in mono.parts:
            prod = prod * complete_homogeneous(part, k)
        total = total + c * prod
    return total == schur_expand(lam, k)
