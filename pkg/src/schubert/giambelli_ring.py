"""Giambelli determinant operators, generator reduction, the Y-series,
and verification of the classical and quantum ring presentations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .derivations import (
    DPolynomial,
    apply_operator,
    inverse_components,
    render_dpolynomial,
)
from .exterior_core import InvalidInputError, KVector, Partition, QInt, fundamental


def _perm_sign(perm) -> int:
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return (-1) ** inv


@lru_cache(maxsize=None)
def giambelli_det(lam: Partition, k: int) -> DPolynomial:
    """The k x k determinant with entry (row i, col j) = D_{r_j + j - i},
    where r_j is lam reversed (zero padded), D_0 = 1 and D_{<0} = 0.

    Homogeneous of degree |lam|."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    if lam.length() > k:
        raise InvalidInputError(f"partition length exceeds k={k}")
    padded = lam.padded(k)
    r = tuple(reversed(padded))  # r[j-1] = lam_{k+1-j}

    def subscript(i, j):  # 1-indexed
        return r[j - 1] + j - i

    if k <= 6:
        total = DPolynomial.zero()
        for perm in permutations(range(1, k + 1)):
            subs = [subscript(perm[j - 1], j) for j in range(1, k + 1)]
            if any(s < 0 for s in subs):
                continue
            mono = Partition(sorted((s for s in subs if s > 0), reverse=True))
            total = total + DPolynomial.monomial(mono, _perm_sign(perm))
        return total

    # cached Laplace expansion along the last column for large k
    memo = {}

    def minor(rows, ncols):
        if ncols == 0:
            return DPolynomial.identity()
        key = (rows, ncols)
        if key in memo:
            return memo[key]
        total = DPolynomial.zero()
        for pos, i in enumerate(rows):
            s = subscript(i, ncols)
            if s < 0:
                continue
            rest = rows[:pos] + rows[pos + 1 :]
            sign = (-1) ** (len(rows) - 1 - pos)
            total = total + sign * (DPolynomial.generator(s) * minor(rest, ncols - 1))
        memo[key] = total
        return total

    return minor(tuple(range(1, k + 1)), k)


def low_generator(h: int, k: int) -> DPolynomial:
    """D_h as a polynomial in D_1..D_k (the identity monomial for h = 0)."""
    if h < 0:
        return DPolynomial.zero()
    return DPolynomial.generator(h) if h <= k else reduce_generator(h, k)


@lru_cache(maxsize=None)
def reduce_generator(h: int, k: int) -> DPolynomial:
    """Express D_h (h > k) in D_1..D_k via the series-inverse recursion
    D_h = -(E_1 D_{h-1} + ... + E_k D_{h-k}) on the k-th exterior power.

    The result is homogeneous of degree h with all parts <= k and acts on
    any k-vector exactly as pieri_d(h, .)."""
    if k < 1:
        raise InvalidInputError("k must be positive")
    if h <= k:
        raise InvalidInputError(f"h={h} must exceed k={k}")
    es = inverse_components(k)
    acc = DPolynomial.zero()
    for j in range(1, k + 1):
        acc = acc + es[j] * low_generator(h - j, k)
    return -acc


def expand_in_low_generators(p: DPolynomial, k: int) -> DPolynomial:
    """Rewrite every factor D_h with h > k through reduce_generator."""
    out = DPolynomial.zero()
    for mono, c in p.terms.items():
        prod = DPolynomial.identity()
        for part in mono.parts:
            prod = prod * low_generator(part, k)
        out = out + prod * c
    return out


def y_polynomials(n: int, k: int) -> list:
    """Y_0, ..., Y_n where (-1)^i Y_i is the i-th coefficient of the formal
    inverse of 1 + D_1 t + ... + D_{n-k} t^{n-k}."""
    if not 1 <= k < n:
        raise InvalidInputError("need 1 <= k < n")
    cutoff = n - k
    coeffs = [DPolynomial.identity()]
    for i in range(1, n + 1):
        acc = DPolynomial.zero()
        for j in range(1, min(i, cutoff) + 1):
            acc = acc + DPolynomial.generator(j) * coeffs[i - j]
        coeffs.append(-acc)
    return [((-1) ** i) * c for i, c in enumerate(coeffs)]


@dataclass
class PresentationReport:
    """Outcome of checking a ring presentation on the fundamental class."""

    k: int
    n: int
    mode: str
    checked_relations: list  # (name, holds, witness KVector)

    @property
    def ok(self) -> bool:
        return all(holds for _, holds, _ in self.checked_relations)

    def failures(self) -> list:
        return [(name, w) for name, holds, w in self.checked_relations if not holds]


def verify_presentation(k: int, n: int, mode: str = "classical") -> PresentationReport:
    """Check the defining relations of the classical or quantum intersection
    ring by acting on the fundamental k-vector and reducing in the context.

    Also checks the series identity E_m = (-1)^(m-1) D_m + Y_m for
    m = n-k+1 .. n, after rewriting every generator above D_k through
    reduce_generator (faithful because monomials in D_1..D_k act freely on
    the fundamental class)."""
    from .grassmann_contexts import GrassmannContext, reduce_kvector

    if mode not in ("classical", "quantum"):
        raise InvalidInputError(f"unknown mode {mode!r}")
    if not 1 <= k <= n:
        raise InvalidInputError("need 1 <= k <= n")
    ctx = GrassmannContext(k, n, mode)
    fund = fundamental(k)
    checked = []

    def vanishing(h):
        w = reduce_kvector(apply_operator(low_generator(h, k), fund), ctx)
        checked.append((f"D{h} * e[1..{k}] = 0", w.is_zero(), w))

    if mode == "classical":
        for i in range(1, k + 1):
            vanishing(n - k + i)
    else:
        for i in range(1, k):
            vanishing(n - k + i)
        w = reduce_kvector(apply_operator(low_generator(n, k), fund), ctx)
        sign = (-1) ** (k - 1)
        diff = w - fund.scale(QInt.q_power(1, sign))
        name = f"D{n} * e[1..{k}] = {'q' if sign > 0 else '-q'} * e[1..{k}]"
        checked.append((name, diff.is_zero(), diff))

    if k < n:
        ys = y_polynomials(n, k)
        es = inverse_components(n)
        for j in range(1, k + 1):
            m = n - k + j
            # The series identity E_m = -D_m + (-1)^m Y_m holds modulo the
            # generators D_{n-k+1}, ..., D_{m-1} already imposed at earlier
            # stages, so monomials containing one of those parts are dropped
            # before comparing.
            lhs = DPolynomial(
                {
                    mono: c
                    for mono, c in es[m].terms.items()
                    if not any(n - k < p < m for p in mono.parts)
                }
            )
            rhs = (-1) * DPolynomial.generator(m) + ((-1) ** m) * ys[m]
            diff = lhs - rhs
            witness = apply_operator(expand_in_low_generators(diff, k), fund)
            name = f"E{m} = -D{m} + (-1)^{m}*Y{m}"
            if m - 1 > n - k:
                name += f" mod (D{n - k + 1}..D{m - 1})"
            checked.append((name, diff.is_zero(), witness))

    return PresentationReport(k, n, mode, checked)


def render_presentation(report: PresentationReport) -> str:
    """Human-readable presentation: generators, reduced relations, and both
    the D-form and Y-form of the quotient ring."""
    k, n, mode = report.k, report.n, report.mode
    lines = [f"G({k},{n}) {mode} presentation"]
    gens = ", ".join(f"D{i}" for i in range(1, k + 1))
    base = "Z[q]" if mode == "quantum" else "Z"
    if mode == "classical":
        rels = ", ".join(f"D{n - k + i}" for i in range(1, k + 1))
    else:
        rels = ", ".join([f"D{n - k + i}" for i in range(1, k)] + [f"D{n} - {'q' if k % 2 else '-q'}"])
    lines.append(f"D-form: {base}[{gens}] / ({rels})")
    lines.append("reduced relations:")
    if mode == "classical":
        for i in range(1, k + 1):
            h = n - k + i
            lines.append(f"  {render_dpolynomial(low_generator(h, k))} = 0")
    else:
        for i in range(1, k):
            h = n - k + i
            lines.append(f"  {render_dpolynomial(low_generator(h, k))} = 0")
        rhs = "q" if (-1) ** (k - 1) > 0 else "-q"
        lines.append(f"  {render_dpolynomial(low_generator(n, k))} = {rhs}")
    if k < n:
        ygens = ", ".join(f"D{i}" for i in range(1, n - k + 1))
        if mode == "classical":
            yrels = ", ".join(f"Y{i}(D)" for i in range(k + 1, n + 1))
        else:
            tail_sign = "q" if (-1) ** (n - k - 1) > 0 else "-q"
            yrels = ", ".join(
                [f"Y{i}(D)" for i in range(k + 1, n)] + [f"Y{n}(D) - {tail_sign}"]
            )
        lines.append(f"Y-form: {base}[{ygens}] / ({yrels})")
        ys = y_polynomials(n, k)
        for i in range(k + 1, n + 1):
            lines.append(f"  Y{i} = {render_dpolynomial(ys[i])}")
    lines.append("checks:")
    for name, holds, _ in report.checked_relations:
        lines.append(f"  {name}: {'OK' if holds else 'FAIL'}")
    return "\n".join(lines)
