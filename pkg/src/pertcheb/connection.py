"""Connection-coefficient engine.

A connection table holds the coefficients lambda[n][m] expressing a perturbed
family in either the second-kind Chebyshev basis or the canonical (monomial)
basis.  Two genuinely independent routes produce the same tables:

* the general recurrence over both families' recurrence coefficients, and
* closed forms (the tables are constant along downward diagonals in the
  second-kind basis, and have explicit binomial expressions in the canonical
  basis); the canonical closed forms themselves come in two algebraic shapes
  that are cross-checked entry by entry at construction time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    Polynomial,
    RecurrenceSpec,
    canonical_cheb_coeff,
)
from .errors import InvalidOrder, PertChebError
from .scalars import AFF_ONE, AFF_ZERO, AffineScalar, to_fraction

MAX_TABLE_SIZE = 512


@dataclass(frozen=True)
class CCTable:
    """Triangular table of connection coefficients, affine in the parameter."""

    n_max: int
    rows: tuple[tuple[AffineScalar, ...], ...]
    basis_tag: str  # "second_kind" | "canonical"
    method_tag: str  # "recurrence" | "closed_form"
    kind: str | None = None  # "translation" | "dilatation" | None
    order: int | None = None

    def entry(self, n: int, m: int) -> AffineScalar:
        if n < 0 or m < 0 or m > n or n > self.n_max:
            return AFF_ZERO
        return self.rows[n][m]

    def instantiate(self, value) -> "CCTable":
        value = to_fraction(value)
        rows = tuple(
            tuple(AffineScalar(entry.instantiate(value)) for entry in row)
            for row in self.rows
        )
        return CCTable(self.n_max, rows, self.basis_tag, self.method_tag,
                       self.kind, self.order)

    @property
    def symbol(self) -> str:
        return "lambda" if self.kind == "dilatation" else "mu"

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "basis": self.basis_tag,
            "method": self.method_tag,
            "rows": [[entry.to_json() for entry in row] for row in self.rows],
        }

    @staticmethod
    def from_json(data: dict) -> "CCTable":
        rows = tuple(
            tuple(AffineScalar.from_json(entry) for entry in row)
            for row in data["rows"]
        )
        return CCTable(data["n_max"], rows, data["basis"], data["method"])


def _check_table_size(n_max: int) -> None:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if n_max > MAX_TABLE_SIZE:
        raise ValueError(f"n_max {n_max} exceeds the table guard {MAX_TABLE_SIZE}")


# ---------------------------------------------------------------------------
# route 1: the general recurrence

def cc_recurrence(tilde: RecurrenceSpec, base: RecurrenceSpec, n_max: int) -> CCTable:
    """Connection coefficients of tilde in the base family, by recurrence.

    Row n is filled from rows n-1 and n-2 using both families' recurrence
    coefficients; everything outside 0 <= m <= n is an implicit zero.
    """
    _check_table_size(n_max)
    tilde.require_regular(n_max)
    base.require_regular(n_max)

    rows: list[list[AffineScalar]] = [[AFF_ONE]]
    if n_max >= 1:
        rows.append([base.beta(0) - tilde.beta(0), AFF_ONE])

    def lam(i: int, j: int) -> AffineScalar:
        if i < 0 or j < 0 or j > i:
            return AFF_ZERO
        return rows[i][j]

    for n in range(2, n_max + 1):
        row = []
        for m in range(n):
            value = (
                (base.beta(m) - tilde.beta(n - 1)) * lam(n - 1, m)
                - tilde.gamma(n - 1) * lam(n - 2, m)
                + base.gamma(m + 1) * lam(n - 1, m + 1)
                + lam(n - 1, m - 1)
            )
            row.append(value)
        row.append(AFF_ONE)
        rows.append(row)

    return CCTable(n_max, tuple(tuple(r) for r in rows), "second_kind", "recurrence")


# ---------------------------------------------------------------------------
# route 2: closed forms in the second-kind basis (constant by diagonal)

def _closed_translation_entry(r: int, n: int, m: int) -> AffineScalar:
    d = n - m
    if d == 0:
        return AFF_ONE
    if d % 2 == 1 and d <= 2 * r + 1:
        i = (d + 1) // 2
        if n >= r + i:
            return AffineScalar(Fraction(0), Fraction(-1, 4 ** (i - 1)))
    return AFF_ZERO


def _closed_dilatation_entry(r: int, n: int, m: int) -> AffineScalar:
    d = n - m
    if d == 0:
        return AFF_ONE
    if d % 2 == 0 and d <= 2 * r:
        i = d // 2
        if n >= r + i:
            q = Fraction(1, 4**i)
            return AffineScalar(q, -q)  # (1 - lambda)/4**i
    return AFF_ZERO


def _build_closed(entry_fn, n_max: int, kind: str, order: int) -> CCTable:
    rows = tuple(
        tuple(entry_fn(order, n, m) for m in range(n)) + (AFF_ONE,)
        for n in range(n_max + 1)
    )
    return CCTable(n_max, rows, "second_kind", "closed_form", kind, order)


def cc_closed_translation(r: int, n_max: int) -> CCTable:
    """Closed-form table for the order-r translation, formal parameter mu.

    Nonzero off-diagonal entries sit on odd diagonals 2i-1 (i = 1..r+1) with
    the constant value -mu/4**(i-1), starting at row r+i.
    """
    if r < 0:
        raise InvalidOrder("translation order must be >= 0")
    _check_table_size(n_max)
    return _build_closed(_closed_translation_entry, n_max, "translation", r)


def cc_closed_dilatation(r: int, n_max: int) -> CCTable:
    """Closed-form table for the order-r dilatation, formal parameter lambda.

    Nonzero off-diagonal entries sit on even diagonals 2i (i = 1..r) with the
    constant value (1-lambda)/4**i, starting at row r+i; odd diagonals vanish
    by symmetry.
    """
    if r < 1:
        raise InvalidOrder("dilatation order must be >= 1")
    _check_table_size(n_max)
    return _build_closed(_closed_dilatation_entry, n_max, "dilatation", r)


# ---------------------------------------------------------------------------
# canonical basis: two algebraic shapes per kind, checked against each other

def _c_binomial(n: int, m: int) -> Fraction:
    """Binomial expression for the second-kind canonical coefficient."""
    if (n - m) % 2 == 1 or not 0 <= m <= n:
        return Fraction(0)
    if n % 2 == 0:
        kp, nu = n // 2, m // 2
        mag = math.comb(kp + nu, kp - nu)
    else:
        kp, nu = (n - 1) // 2, (m - 1) // 2
        mag = math.comb(kp + nu + 1, kp - nu)
    drop = kp - nu
    return Fraction((-1) ** drop * mag, 4**drop)


def _canonical_translation_cform(r: int, n: int, m: int) -> AffineScalar:
    """Case analysis over (row block, parity) in terms of canonical
    second-kind coefficients."""
    if (n - m) % 2 == 0:
        return AffineScalar(canonical_cheb_coeff(n, m))
    if n <= r:
        return AFF_ZERO
    if n <= 2 * r:  # first perturbed block
        if n % 2 == 0:
            kp, nu = n // 2, (m - 1) // 2
            lo = r - kp if nu <= r - kp else nu
            total = sum(
                4**u * canonical_cheb_coeff(2 * u + 1, m) for u in range(lo, kp)
            )
            return AffineScalar(Fraction(0), -total / Fraction(4 ** (kp - 1)))
        kp, nu = (n - 1) // 2, m // 2
        lo = r - kp if nu <= r - kp else nu
        total = sum(4**u * canonical_cheb_coeff(2 * u, m) for u in range(lo, kp + 1))
        return AffineScalar(Fraction(0), -total / Fraction(4**kp))
    # eventual block: rows beyond 2r
    if n % 2 == 1:
        tail = (n - 1) // 2 - r
        nu = m // 2
        lo = tail if nu <= tail else nu
        total = sum(
            4**u * canonical_cheb_coeff(2 * u, m) for u in range(lo, tail + r + 1)
        )
    else:
        tail = n // 2 - r - 1
        nu = (m - 1) // 2
        lo = tail if nu <= tail else nu
        total = sum(
            4**u * canonical_cheb_coeff(2 * u + 1, m) for u in range(lo, tail + r + 1)
        )
    return AffineScalar(Fraction(0), -total / Fraction(4 ** (tail + r)))


def _canonical_translation_binomial(r: int, n: int, m: int) -> AffineScalar:
    """Same table written with binomial coefficients only."""
    if (n - m) % 2 == 0:
        return AffineScalar(_c_binomial(n, m))
    if n <= r:
        return AFF_ZERO
    if n <= 2 * r:
        if n % 2 == 0:
            kp, nu = n // 2, (m - 1) // 2
            lo = r - kp if nu <= r - kp - 1 else nu
            total = sum(
                (-1) ** (u - nu) * math.comb(u + nu + 1, u - nu)
                for u in range(lo, kp)
            )
            return AffineScalar(Fraction(0), Fraction(-total, 4 ** (kp - nu - 1)))
        kp, nu = (n - 1) // 2, m // 2
        lo = r - kp if nu <= r - kp - 1 else nu
        total = sum(
            (-1) ** (u - nu) * math.comb(u + nu, u - nu) for u in range(lo, kp + 1)
        )
        return AffineScalar(Fraction(0), Fraction(-total, 4 ** (kp - nu)))
    if n % 2 == 1:
        tail = (n - 1) // 2 - r
        nu = m // 2
        lo = tail if nu <= tail - 1 else nu
        total = sum(
            (-1) ** (u - nu) * math.comb(u + nu, u - nu)
            for u in range(lo, tail + r + 1)
        )
    else:
        tail = n // 2 - r - 1
        nu = (m - 1) // 2
        lo = tail if nu <= tail - 1 else nu
        total = sum(
            (-1) ** (u - nu) * math.comb(u + nu + 1, u - nu)
            for u in range(lo, tail + r + 1)
        )
    return AffineScalar(Fraction(0), Fraction(-total, 4 ** (tail + r - nu)))


def _canonical_dilatation_cform(r: int, n: int, m: int) -> AffineScalar:
    if (n - m) % 2 == 1:
        return AFF_ZERO
    base = canonical_cheb_coeff(n, m)
    if n <= r:
        return AffineScalar(base)
    if n % 2 == 0:
        kp, nu = n // 2, m // 2
        if n <= 2 * r - 2:  # first perturbed block
            lo = r - kp if nu <= r - kp else nu
            total = sum(
                4**u * canonical_cheb_coeff(2 * u, m) for u in range(lo, kp)
            )
            scaled = total / Fraction(4**kp)
        else:  # rows 2r and beyond
            tail = n // 2 - r
            lo = tail if nu <= tail else nu
            total = sum(
                4**u * canonical_cheb_coeff(2 * u, m) for u in range(lo, tail + r)
            )
            scaled = total / Fraction(4 ** (tail + r))
    else:
        kp, nu = (n - 1) // 2, (m - 1) // 2
        if n <= 2 * r - 1:
            lo = r - kp - 1 if nu <= r - kp - 1 else nu
            total = sum(
                4**u * canonical_cheb_coeff(2 * u + 1, m) for u in range(lo, kp)
            )
            scaled = total / Fraction(4**kp)
        else:
            tail = (n - 1) // 2 - r
            lo = tail if nu <= tail else nu
            total = sum(
                4**u * canonical_cheb_coeff(2 * u + 1, m)
                for u in range(lo, tail + r)
            )
            scaled = total / Fraction(4 ** (tail + r))
    return AffineScalar(base + scaled, -scaled)  # base + (1-lambda)*scaled


def _canonical_dilatation_binomial(r: int, n: int, m: int) -> AffineScalar:
    if (n - m) % 2 == 1:
        return AFF_ZERO
    if n <= r:
        return AffineScalar(_c_binomial(n, m))
    if n % 2 == 0:
        kp, nu = n // 2, m // 2
        lead = (-1) ** (kp - nu) * math.comb(kp + nu, kp - nu)
        if n <= 2 * r - 2:
            lo = r - kp if nu <= r - kp - 1 else nu
            total = sum(
                (-1) ** (u - nu) * math.comb(u + nu, u - nu) for u in range(lo, kp)
            )
        else:
            tail = n // 2 - r
            lo = tail if nu <= tail - 1 else nu
            total = sum(
                (-1) ** (u - nu) * math.comb(u + nu, u - nu)
                for u in range(lo, tail + r)
            )
    else:
        kp, nu = (n - 1) // 2, (m - 1) // 2
        lead = (-1) ** (kp - nu) * math.comb(kp + nu + 1, kp - nu)
        if n <= 2 * r - 1:
            lo = r - kp - 1 if nu <= r - kp - 2 else nu
            total = sum(
                (-1) ** (u - nu) * math.comb(u + nu + 1, u - nu)
                for u in range(lo, kp)
            )
        else:
            tail = (n - 1) // 2 - r
            lo = tail if nu <= tail - 1 else nu
            total = sum(
                (-1) ** (u - nu) * math.comb(u + nu + 1, u - nu)
                for u in range(lo, tail + r)
            )
    scale = Fraction(1, 4 ** (kp - nu))
    return AffineScalar((lead + total) * scale, -total * scale)


def canonical_translation_entry(r: int, n: int, m: int, path: str = "cform") -> AffineScalar:
    if path == "cform":
        return _canonical_translation_cform(r, n, m)
    if path == "binomial":
        return _canonical_translation_binomial(r, n, m)
    raise ValueError(f"unknown path {path!r}")


def canonical_dilatation_entry(r: int, n: int, m: int, path: str = "cform") -> AffineScalar:
    if path == "cform":
        return _canonical_dilatation_cform(r, n, m)
    if path == "binomial":
        return _canonical_dilatation_binomial(r, n, m)
    raise ValueError(f"unknown path {path!r}")


def _build_canonical(cform, binomial, r: int, n_max: int, kind: str) -> CCTable:
    rows = []
    for n in range(n_max + 1):
        row = []
        for m in range(n + 1):
            first = cform(r, n, m)
            second = binomial(r, n, m)
            if first != second:
                raise PertChebError(
                    f"canonical {kind} r={r}: paths disagree at ({n},{m}): "
                    f"{first} vs {second}"
                )
            row.append(first)
        rows.append(tuple(row))
    return CCTable(n_max, tuple(rows), "canonical", "closed_form", kind, r)


def cc_canonical_translation(r: int, n_max: int) -> CCTable:
    """Canonical-basis table for the order-r translation, formal mu.

    Entries of the same parity as the row equal the unperturbed canonical
    coefficients; opposite-parity entries are mu times alternating binomial
    sums.  Both internal shapes are computed and must agree exactly.
    """
    if r < 0:
        raise InvalidOrder("translation order must be >= 0")
    _check_table_size(n_max)
    return _build_canonical(
        _canonical_translation_cform, _canonical_translation_binomial,
        r, n_max, "translation",
    )


def cc_canonical_dilatation(r: int, n_max: int) -> CCTable:
    """Canonical-basis table for the order-r dilatation, formal lambda."""
    if r < 1:
        raise InvalidOrder("dilatation order must be >= 1")
    _check_table_size(n_max)
    return _build_canonical(
        _canonical_dilatation_cform, _canonical_dilatation_binomial,
        r, n_max, "dilatation",
    )


# ---------------------------------------------------------------------------
# reconstruction

def reconstruct(table: CCTable, basis: list[Polynomial]) -> list[Polynomial]:
    """Perturbed polynomials as exact sums sum_m lambda[n][m] * basis[m]."""
    if table.n_max > len(basis) - 1:
        raise ValueError("basis too short for the table")
    out = []
    for n in range(table.n_max + 1):
        acc = Polynomial.zero()
        for m in range(n + 1):
            coeff = table.entry(n, m)
            if coeff:
                acc = acc + basis[m].scale(coeff)
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# symbolic rendering

def format_affine_symbolic(value: AffineScalar, symbol: str) -> str:
    """Render an affine scalar the way the triangular tables print entries."""
    const, lin = value.const, value.lin
    if lin == 0:
        return str(const)
    if const == 0:
        num, den = abs(lin.numerator), lin.denominator
        sign = "-" if lin < 0 else ""
        head = f"{sign}{num if num != 1 else ''}{symbol}"
        return head if den == 1 else f"{head}/{den}"
    if const == -lin:
        num, den = abs(const.numerator), const.denominator
        sign = "-" if const < 0 else ""
        head = f"{sign}{num if num != 1 else ''}(1-{symbol})"
        return head if den == 1 else f"{head}/{den}"
    linear = format_affine_symbolic(AffineScalar(Fraction(0), lin), symbol)
    joiner = "+" if not linear.startswith("-") else ""
    return f"{const}{joiner}{linear}"


def render_table_text(table: CCTable) -> str:
    """Triangular text layout matching the published connection tables."""
    symbol = table.symbol
    cells = [
        [format_affine_symbolic(table.entry(n, m), symbol) for m in range(n + 1)]
        for n in range(table.n_max + 1)
    ]
    width = max(3, max(len(c) for row in cells for c in row))
    header = "n\\m " + " ".join(f"{m:>{width}}" for m in range(table.n_max + 1))
    lines = [header]
    for n, row in enumerate(cells):
        lines.append(f"{n:<4}" + " ".join(f"{c:>{width}}" for c in row))
    return "\n".join(lines) + "\n"
