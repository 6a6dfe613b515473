"""Exact polynomial and power-series kernel on stdlib rationals.

Provides sparse multivariate polynomials over Fraction with a fixed
variable tuple per ring (pure lexicographic order, first name biggest),
dense univariate helpers, Sylvester resultants via fraction-free
determinants, reduced lex Groebner bases, variable elimination down to a
single bivariate relation, and truncated power-series utilities including
solving a polynomial equation for its unique series root given a
disambiguating prefix.

Canonical published form for a polynomial: integer coefficients, content 1,
and positive coefficient on the lexicographically leading term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Ring = tuple[str, ...]
Exps = tuple[int, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class AlgebraError(ArithmeticError):
    pass


class BranchAmbiguityError(AlgebraError):
    """A series step could not be determined; supply a longer prefix."""


class EliminationError(AlgebraError):
    """No relation in the kept variables could be derived."""


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")


class MPoly:
    """Sparse polynomial over Q bound to an ordered variable tuple.

    The ring tuple lists variables from lexicographically biggest to
    smallest, so exponent tuples compare directly.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict[Exps, Fraction] | None = None):
        self.ring = ring
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    # construction -------------------------------------------------------

    @staticmethod
    def zero(ring: Ring) -> "MPoly":
        return MPoly(ring, {})

    @staticmethod
    def const(ring: Ring, c) -> "MPoly":
        c = _as_fraction(c)
        return MPoly(ring, {(0,) * len(ring): c} if c else {})

    @staticmethod
    def var(ring: Ring, name: str) -> "MPoly":
        i = ring.index(name)
        e = [0] * len(ring)
        e[i] = 1
        return MPoly(ring, {tuple(e): ONE})

    # predicates and views -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(x == 0 for x in e) for e in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * len(self.ring), ZERO)

    def degree(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self.ring.index(name)
        return max(e[i] for e in self.terms)

    def variables(self) -> set[str]:
        used = set()
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used.add(self.ring[i])
        return used

    def lt(self) -> tuple[Exps, Fraction]:
        e = max(self.terms)
        return e, self.terms[e]

    def as_coeff_map(self, name: str) -> dict[int, "MPoly"]:
        """Coefficients by degree in one variable; that slot is zeroed."""
        i = self.ring.index(name)
        out: dict[int, dict[Exps, Fraction]] = {}
        for e, c in self.terms.items():
            d = e[i]
            rest = e[:i] + (0,) + e[i + 1:]
            out.setdefault(d, {})[rest] = out.get(d, {}).get(rest, ZERO) + c
        return {d: MPoly(self.ring, t) for d, t in out.items() if any(v for v in t.values())}

    def restrict(self, ring2: Ring) -> "MPoly":
        """Rebind onto a subring; fails if a dropped variable is used."""
        idx = []
        for name in self.ring:
            idx.append(ring2.index(name) if name in ring2 else None)
        terms: dict[Exps, Fraction] = {}
        for e, c in self.terms.items():
            ne = [0] * len(ring2)
            for i, x in enumerate(e):
                if x == 0:
                    continue
                if idx[i] is None:
                    raise AlgebraError(f"variable {self.ring[i]} is used but absent from target ring")
                ne[idx[i]] += x
            key = tuple(ne)
            terms[key] = terms.get(key, ZERO) + c
        return MPoly(ring2, terms)

    def extend(self, ring2: Ring) -> "MPoly":
        """Rebind onto a superset ring."""
        return self.restrict(ring2)

    # arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.ring != self.ring:
                raise AlgebraError("ring mismatch")
            return other
        return MPoly.const(self.ring, other)

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, ZERO) + c
        return MPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if c == 0:
                return MPoly.zero(self.ring)
            return MPoly(self.ring, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        terms: dict[Exps, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, ZERO) + c1 * c2
        return MPoly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise AlgebraError("negative power")
        out = MPoly.const(self.ring, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.ring, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        if self.is_zero():
            return "MPoly<0>"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"{v}^{x}" if x > 1 else v
                for v, x in zip(self.ring, e)
                if x
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "MPoly<" + " + ".join(bits) + ">"


def make_ring(*names: str) -> Ring:
    if len(set(names)) != len(names):
        raise AlgebraError("duplicate ring variable")
    return tuple(names)


def gens(ring: Ring) -> dict[str, MPoly]:
    return {name: MPoly.var(ring, name) for name in ring}


# polynomial arithmetic helpers ------------------------------------------


def exact_div(f: MPoly, g: MPoly) -> MPoly | None:
    """The quotient f/g when g divides f exactly, else None."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return MPoly.zero(f.ring)
    if f.ring != g.ring:
        raise AlgebraError("ring mismatch")
    ge, gc = g.lt()
    q: dict[Exps, Fraction] = {}
    rem = f
    while not rem.is_zero():
        fe, fc = rem.lt()
        de = tuple(a - b for a, b in zip(fe, ge))
        if any(x < 0 for x in de):
            return None
        c = fc / gc
        q[de] = q.get(de, ZERO) + c
        rem = rem - MPoly(f.ring, {de: c}) * g
    return MPoly(f.ring, q)


def content(f: MPoly) -> Fraction:
    """Positive rational c with f/c integer and coefficient gcd 1 (0 for 0)."""
    if f.is_zero():
        return ZERO
    nums = [abs(c.numerator) for c in f.terms.values()]
    dens = [c.denominator for c in f.terms.values()]
    num = 0
    for v in nums:
        num = gcd(num, v)
    den = 1
    for v in dens:
        den = lcm(den, v)
    return Fraction(num, den)


def primitive_part(f: MPoly) -> MPoly:
    """Integer-primitive scalar multiple with positive leading coefficient."""
    if f.is_zero():
        return f
    c = content(f)
    _, lead = f.lt()
    if lead < 0:
        c = -c
    return f * (1 / c)


def monomial_content_quotient(f: MPoly, names: Iterable[str] | None = None) -> MPoly:
    """f divided by the largest monomial dividing every term.

    With `names` given, only those variables are stripped.  Elimination
    passes restrict stripping to variables whose series value is known to
    be nonzero (the length variable, and the root where safe), because
    dividing by a variable whose series vanishes identically would not
    preserve vanishing on the solution.
    """
    if f.is_zero():
        return f
    width = len(f.ring)
    allowed = set(f.ring) if names is None else set(names)
    mins = [
        min(e[i] for e in f.terms) if f.ring[i] in allowed else 0
        for i in range(width)
    ]
    if not any(mins):
        return f
    terms = {tuple(a - m for a, m in zip(e, mins)): c for e, c in f.terms.items()}
    return MPoly(f.ring, terms)


def poly_add(f: MPoly, g: MPoly) -> MPoly:
    return f + g


def poly_mul(f: MPoly, g: MPoly) -> MPoly:
    return f * g


# dense univariate helpers (little-endian Fraction lists) ------------------


def _utrim(u: list[Fraction]) -> list[Fraction]:
    while u and u[-1] == 0:
        u.pop()
    return u


def _uadd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return _utrim([
        (a[i] if i < len(a) else ZERO) + (b[i] if i < len(b) else ZERO)
        for i in range(n)
    ])


def _uscale(a: Sequence[Fraction], c: Fraction) -> list[Fraction]:
    if c == 0:
        return []
    return [x * c for x in a]


def _umul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _utrim(out)


def _udivmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    if not b:
        raise ZeroDivisionError
    r = list(a)
    q = [ZERO] * max(0, len(a) - len(b) + 1)
    while len(r) >= len(b) and _utrim(r):
        if len(r) < len(b):
            break
        c = r[-1] / b[-1]
        k = len(r) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            r[i + k] -= c * y
        _utrim(r)
    return _utrim(q), _utrim(list(r))


def _ugcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    x, y = _utrim(list(a)), _utrim(list(b))
    while y:
        _, r = _udivmod(x, y)
        x, y = y, r
    if x:
        x = _uscale(x, 1 / x[-1])  # monic
    return x


def _uderiv(a: Sequence[Fraction]) -> list[Fraction]:
    return _utrim([a[i] * i for i in range(1, len(a))])


def _usqfree(a: Sequence[Fraction]) -> list[Fraction]:
    a = _utrim(list(a))
    if len(a) <= 1:
        return a
    g = _ugcd(a, _uderiv(a))
    q, r = _udivmod(a, g)
    assert not r
    return q


def _mpoly_to_upoly(f: MPoly, name: str) -> list[Fraction]:
    i = f.ring.index(name)
    out = [ZERO] * (f.degree(name) + 1 if not f.is_zero() else 0)
    for e, c in f.terms.items():
        if any(x for j, x in enumerate(e) if j != i and x):
            raise AlgebraError("polynomial is not univariate in " + name)
        out[e[i]] += c
    return _utrim(out)


def _upoly_to_mpoly(u: Sequence[Fraction], ring: Ring, name: str) -> MPoly:
    i = ring.index(name)
    terms = {}
    for d, c in enumerate(u):
        if c:
            e = [0] * len(ring)
            e[i] = d
            terms[tuple(e)] = c
    return MPoly(ring, terms)


# squarefree part (at most two effective variables) ------------------------


def _bi_content(rows: list[list[Fraction]]) -> list[Fraction]:
    g: list[Fraction] = []
    for row in rows:
        g = _ugcd(g, row)
        if len(g) == 1:
            break
    return g if g else []


def _bi_prim(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    c = _bi_content([r for r in rows if r])
    if not c or len(c) == 1:
        return [list(r) for r in rows]
    return [(_udivmod(r, c)[0] if r else []) for r in rows]


def _bi_trim(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    while rows and not rows[-1]:
        rows.pop()
    return rows


def _bi_prem(f: list[list[Fraction]], g: list[list[Fraction]]) -> list[list[Fraction]]:
    # pseudo-remainder of f by g, both dense in the main variable with
    # univariate coefficient polynomials
    f = _bi_trim([list(r) for r in f])
    g = _bi_trim([list(r) for r in g])
    if not g:
        raise ZeroDivisionError
    dg = len(g) - 1
    lead = g[-1]
    while len(f) - 1 >= dg and f:
        df = len(f) - 1
        top = f[-1]
        f = [_umul(r, lead) for r in f]
        shift = df - dg
        for i, gr in enumerate(g):
            f[i + shift] = _uadd(f[i + shift], _uscale(_umul(gr, top), Fraction(-1)))
        f = _bi_trim(f)
    return f


def _bi_gcd(f: list[list[Fraction]], g: list[list[Fraction]]) -> list[list[Fraction]]:
    f = _bi_prim(_bi_trim([list(r) for r in f]))
    g = _bi_prim(_bi_trim([list(r) for r in g]))
    if not f:
        return g
    if not g:
        return f
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _bi_prem(f, g)
        r = _bi_prim(_bi_trim(r))
        f, g = g, r
    return f


def sqfree_part(f: MPoly, main: str = "P", base: str = "x") -> MPoly:
    """Product of the distinct irreducible factors (primitive form).

    Supports polynomials whose variables lie in {main, base}.
    """
    f = primitive_part(f)
    if f.is_zero() or f.is_constant():
        return f
    used = f.variables()
    if not used <= {main, base}:
        raise AlgebraError("sqfree_part supports at most the two given variables")
    if used == {base}:
        return primitive_part(_upoly_to_mpoly(_usqfree(_mpoly_to_upoly(f, base)), f.ring, base))
    if used == {main}:
        return primitive_part(_upoly_to_mpoly(_usqfree(_mpoly_to_upoly(f, main)), f.ring, main))

    cm = f.as_coeff_map(main)
    d = max(cm)
    rows = [
        _mpoly_to_upoly(cm[i], base) if i in cm else []
        for i in range(d + 1)
    ]
    cont = _bi_content([r for r in rows if r])
    prim = _bi_prim(rows)
    deriv = _bi_trim([_uscale(prim[i], Fraction(i)) for i in range(1, len(prim))])
    g = _bi_gcd(prim, deriv)

    def rows_to_poly(rr: list[list[Fraction]]) -> MPoly:
        out = MPoly.zero(f.ring)
        pvar = MPoly.var(f.ring, main)
        for i, r in enumerate(rr):
            if r:
                out = out + _upoly_to_mpoly(r, f.ring, base) * pvar ** i
        return out

    prim_poly = rows_to_poly(prim)
    g_poly = rows_to_poly(g)
    core = exact_div(prim_poly, g_poly)
    if core is None:
        raise AlgebraError("squarefree division failed")
    result = core * _upoly_to_mpoly(_usqfree(cont), f.ring, base)
    return primitive_part(result)


# determinants and resultants ----------------------------------------------


def det_bareiss(mat: list[list[MPoly]]) -> MPoly:
    """Fraction-free determinant; entries share one ring."""
    n = len(mat)
    if n == 0:
        raise AlgebraError("empty matrix")
    ring = mat[0][0].ring
    m = [row[:] for row in mat]
    sign = 1
    prev = MPoly.const(ring, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return MPoly.zero(ring)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q = exact_div(num, prev)
                assert q is not None, "Bareiss division must be exact"
                m[i][j] = q
            m[i][k] = MPoly.zero(ring)
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


def linear_solve(mat: list[list[MPoly]], rhs: list[MPoly]) -> tuple[list[MPoly], MPoly]:
    """Exact solution of mat * z = rhs as (numerators, shared denominator).

    Fraction-free Gauss-Jordan elimination: every cross-multiplication step
    divides exactly by the previous pivot, so entries stay polynomial and the
    final diagonal carries the determinant up to sign.  Raises
    EliminationError if the matrix is singular.
    """
    n = len(mat)
    if n == 0 or len(rhs) != n or any(len(row) != n for row in mat):
        raise EliminationError("linear system must be square")
    ring = rhs[0].ring
    a = [list(mat[i]) + [rhs[i]] for i in range(n)]
    prev = MPoly.const(ring, 1)
    for k in range(n):
        pick = None
        for i in range(k, n):
            if not a[i][k].is_zero() and (pick is None or len(a[i][k].terms) < len(a[pick][k].terms)):
                pick = i
        if pick is None:
            raise EliminationError("singular linear system")
        if pick != k:
            a[k], a[pick] = a[pick], a[k]
        piv = a[k][k]
        for i in range(n):
            if i == k:
                continue
            row = a[i]
            low = row[k]
            for j in range(n + 1):
                if j == k:
                    continue
                num = row[j] * piv - low * a[k][j]
                q = exact_div(num, prev)
                assert q is not None, "fraction-free step must divide exactly"
                row[j] = q
            row[k] = MPoly.zero(ring)
        prev = piv
    den = a[n - 1][n - 1]
    nums = []
    for i in range(n):
        if a[i][i] == den:
            nums.append(a[i][n])
        else:
            scale = exact_div(den, a[i][i])
            assert scale is not None, "diagonal entries divide the determinant"
            nums.append(a[i][n] * scale)
    return nums, den


def sylvester_matrix(f: MPoly, g: MPoly, name: str) -> list[list[MPoly]]:
    df, dg = f.degree(name), g.degree(name)
    if df < 1 or dg < 1:
        raise AlgebraError("resultant needs positive degree in the eliminated variable")
    ring = f.ring
    fc = f.as_coeff_map(name)
    gc = g.as_coeff_map(name)
    size = df + dg
    rows = []
    for i in range(dg):
        row = [MPoly.zero(ring)] * size
        for d, c in fc.items():
            row[i + (df - d)] = c
        rows.append(row)
    for i in range(df):
        row = [MPoly.zero(ring)] * size
        for d, c in gc.items():
            row[i + (dg - d)] = c
        rows.append(row)
    return rows


def resultant(f: MPoly, g: MPoly, name: str) -> MPoly:
    """Determinant of the Sylvester matrix with respect to one variable."""
    return det_bareiss(sylvester_matrix(f, g, name))


# Groebner bases (pure lex via the ring order) ------------------------------


def _lcm_exps(a: Exps, b: Exps) -> Exps:
    return tuple(max(x, y) for x, y in zip(a, b))


def _divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def spoly(f: MPoly, g: MPoly) -> MPoly:
    fe, fc = f.lt()
    ge, gc = g.lt()
    L = _lcm_exps(fe, ge)
    mf = MPoly(f.ring, {tuple(a - b for a, b in zip(L, fe)): 1 / fc})
    mg = MPoly(g.ring, {tuple(a - b for a, b in zip(L, ge)): 1 / gc})
    return mf * f - mg * g


def normal_form(f: MPoly, basis: Sequence[MPoly]) -> MPoly:
    """Full reduction of every term of f modulo the basis."""
    ring = f.ring
    rem: dict[Exps, Fraction] = {}
    work = f
    lts = [(g.lt(), g) for g in basis if not g.is_zero()]
    while not work.is_zero():
        we, wc = work.lt()
        for (ge, gc), g in lts:
            if _divides(ge, we):
                m = MPoly(ring, {tuple(a - b for a, b in zip(we, ge)): wc / gc})
                work = work - m * g
                break
        else:
            rem[we] = rem.get(we, ZERO) + wc
            work = work - MPoly(ring, {we: wc})
    return MPoly(ring, rem)


def groebner_reduced(gens_in: Sequence[MPoly], max_reductions: int = 20_000) -> list[MPoly]:
    """The unique reduced Groebner basis, primitive-integer normalized.

    Buchberger with the coprimality and chain criteria; pairs are selected
    by smallest lcm (total degree, then lex).
    """
    G = []
    seen = set()
    for g in gens_in:
        p = primitive_part(g)
        if p.is_zero():
            continue
        key = tuple(sorted(p.terms.items()))
        if key not in seen:
            seen.add(key)
            G.append(p)
    if not G:
        return []
    ring = G[0].ring

    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    done: set[tuple[int, int]] = set()
    steps = 0

    def lcm_of(i: int, j: int) -> Exps:
        return _lcm_exps(G[i].lt()[0], G[j].lt()[0])

    while pairs:
        i, j = min(pairs, key=lambda ij: (sum(lcm_of(*ij)), lcm_of(*ij)))
        pairs.discard((i, j))
        done.add((i, j))
        li, lj = G[i].lt()[0], G[j].lt()[0]
        L = _lcm_exps(li, lj)
        if L == tuple(a + b for a, b in zip(li, lj)):
            continue  # coprime leading monomials
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if _divides(G[k].lt()[0], L):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a in done and b in done:
                    skip = True
                    break
        if skip:
            continue
        steps += 1
        if steps > max_reductions:
            raise AlgebraError("Groebner computation exceeded the reduction cap")
        r = normal_form(spoly(G[i], G[j]), G)
        if r.is_zero():
            continue
        r = primitive_part(r)
        G.append(r)
        new = len(G) - 1
        for k in range(new):
            pairs.add((k, new))

    # minimize: drop members whose leading monomial is divisible by another's
    keep: list[MPoly] = []
    lts = [g.lt()[0] for g in G]
    for i, g in enumerate(G):
        li = lts[i]
        redundant = False
        for j, lj in enumerate(lts):
            if i == j:
                continue
            if _divides(lj, li) and (lj != li or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(g)

    # interreduce to the unique reduced basis
    changed = True
    while changed:
        changed = False
        for i in range(len(keep)):
            others = keep[:i] + keep[i + 1:]
            r = primitive_part(normal_form(keep[i], others))
            if r.terms != keep[i].terms:
                keep[i] = r
                changed = True
        keep = [g for g in keep if not g.is_zero()]
    keep.sort(key=lambda g: g.lt()[0])
    return keep


def is_reduced_groebner(G: Sequence[MPoly]) -> bool:
    """Self-check: S-polynomials reduce to zero and no term is reducible."""
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if not normal_form(spoly(G[i], G[j]), G).is_zero():
                return False
    for i, g in enumerate(G):
        if primitive_part(g).terms != g.terms:
            return False
        for e in g.terms:
            for j, h in enumerate(G):
                if i != j and _divides(h.lt()[0], e):
                    return False
    return True


# elimination ---------------------------------------------------------------


def _substitute_linear(q: MPoly, name: str, c0: MPoly, c1: MPoly) -> MPoly:
    """q with name := -c0/c1, cleared by c1**deg; equals the resultant up to sign."""
    cm = q.as_coeff_map(name)
    k = max(cm)
    out = MPoly.zero(q.ring)
    for i, qi in cm.items():
        out = out + qi * ((-c0) ** i) * (c1 ** (k - i))
    return out


def prem(f: MPoly, g: MPoly, v: str) -> MPoly:
    """Pseudo-remainder of f by g with respect to v.

    Equals lc_v(g)^k * f modulo g for some k >= 0, so it stays in the
    ideal generated by f and g while dropping below deg_v(g).
    """
    dg = g.degree(v)
    if dg == 0:
        raise AlgebraError("pseudo-division by a polynomial free of the variable")
    lc_g = g.as_coeff_map(v)[dg]
    r = f
    while not r.is_zero() and r.degree(v) >= dg:
        dr = r.degree(v)
        lc_r = r.as_coeff_map(v)[dr]
        step = MPoly.var(r.ring, v)
        shifted = g
        for _ in range(dr - dg):
            shifted = shifted * step
        r = primitive_part(lc_g * r - lc_r * shifted)
    return r


def pair_eliminant(f: MPoly, g: MPoly, v: str, strip: tuple = ()) -> MPoly:
    """A nonzero member of the ideal of f and g free of v, else zero.

    Runs the primitive pseudo-remainder chain; far cheaper than a
    Sylvester determinant and sufficient here because extraneous content
    and factors are stripped downstream.  A zero return means the pair
    shares a factor involving v and eliminates nothing.
    """
    a, b = f, g
    if a.degree(v) < b.degree(v):
        a, b = b, a
    while not b.is_zero() and b.degree(v) > 0:
        a, b = b, prem(a, b, v)
    if b.is_zero() or not strip:
        return b
    return monomial_content_quotient(b, strip)


def _pair_reduce(f: MPoly, g: MPoly, v: str, base: str) -> MPoly:
    # Sylvester resultants give the tightest eliminants but their cost
    # explodes with matrix size, so bulky pairs take the remainder chain
    d1, d2 = f.degree(v), g.degree(v)
    if d1 + d2 <= 6 and len(f.terms) + len(g.terms) <= 1200:
        r = resultant(f, g, v)
        if r.is_zero():
            return r
        return monomial_content_quotient(primitive_part(r), (base,))
    return pair_eliminant(f, g, v, (base,))


def eliminate_to_root(polys: Sequence[MPoly], root: str, base: str = "x") -> MPoly:
    """A nonzero consequence of the system involving only {root, base}.

    Variables whose elimination is provably benign go first: a variable
    constrained by a single polynomial projects away freely, and a linear
    occurrence whose leading coefficient is free of other auxiliary
    variables substitutes without coupling junk into the rest of the
    system.  Remaining variables are taken in ring order (later-discovered
    states first), by substitution where some occurrence is linear and by
    pairwise elimination otherwise; large pairs use a pseudo-remainder
    chain instead of a Sylvester determinant.  If the sweep loses the
    relation, a lex Groebner basis of the original system is scanned for
    its smallest member in {root, base}.  The result lies in the ideal
    generated by the system and is returned in primitive form.
    """
    if not polys:
        raise EliminationError("empty system")
    ring = polys[0].ring
    aux = [v for v in ring if v not in (root, base)]

    def dedupe(ps: Iterable[MPoly]) -> list[MPoly]:
        seen = set()
        out = []
        for p in ps:
            if p.is_zero():
                continue
            key = tuple(sorted(p.terms.items()))
            if key not in seen:
                seen.add(key)
                out.append(p)
        return out

    def pivot_grade(p: MPoly, v: str) -> tuple:
        c1 = p.as_coeff_map(v)[1]
        spread = sum(1 for w in aux if c1.degree(w) > 0)
        return (not c1.is_constant(), spread, len(c1.terms))

    def benign_rank(v: str, work: list[MPoly]) -> tuple | None:
        with_v = [p for p in work if p.degree(v) > 0]
        if len(with_v) == 1:
            return (0, 0)
        clean = [
            len(p.as_coeff_map(v)[1].terms)
            for p in with_v
            if p.degree(v) == 1 and pivot_grade(p, v)[1] == 0
        ]
        if clean:
            return (1, min(clean))
        return None

    work = dedupe(primitive_part(p) for p in polys)

    while True:
        present = [v for v in aux if any(p.degree(v) > 0 for p in work)]
        if not present:
            break
        ranked = [(r, v) for v in present if (r := benign_rank(v, work)) is not None]
        v = min(ranked)[1] if ranked else present[0]
        with_v = [p for p in work if p.degree(v) > 0]
        rest = [p for p in work if p.degree(v) <= 0]
        if len(with_v) == 1:
            # a variable constrained by a single polynomial projects away freely
            work = rest
            continue
        with_v.sort(key=lambda p: (p.degree(v), len(p.terms), sorted(p.terms)))
        linear = [p for p in with_v if p.degree(v) == 1]
        new: list[MPoly] = []
        if linear:
            pivot = min(linear, key=lambda p: pivot_grade(p, v) + (len(p.terms),))
            cm = pivot.as_coeff_map(v)
            c1 = cm[1]
            c0 = cm.get(0, MPoly.zero(ring))
            for q in with_v:
                if q is pivot:
                    continue
                sub = primitive_part(_substitute_linear(q, v, c0, c1))
                new.append(monomial_content_quotient(sub, (base,)))
        else:
            for f in with_v:
                new = [_pair_reduce(f, q, v, base) for q in with_v if q is not f]
                if any(not r.is_zero() for r in new):
                    break
        for p in new:
            if not p.is_zero() and p.is_constant():
                raise EliminationError("system is inconsistent")
        work = dedupe(rest + new)

    keep = {root, base}
    candidates = [p for p in work if p.variables() <= keep and root in p.variables()]
    if not candidates:
        basis = groebner_reduced(list(polys))
        candidates = [p for p in basis if p.variables() <= keep and root in p.variables()]
    if not candidates:
        raise EliminationError("no relation in the kept variables was found")
    best = min(candidates, key=lambda p: (p.degree(root), len(p.terms), sorted(p.terms)))
    return primitive_part(best)


# truncated power series -----------------------------------------------------


@dataclass(frozen=True)
class Series:
    """Truncated power series: coefficient c_k of x^k for k < order."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def from_values(values: Iterable) -> "Series":
        return Series(tuple(_as_fraction(v) for v in values))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "Series":
        if order > len(self.coeffs):
            raise AlgebraError("cannot extend a series by truncation")
        return Series(self.coeffs[:order])

    def __add__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n)))

    def __sub__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series(tuple(self.coeffs[i] - other.coeffs[i] for i in range(n)))

    def __mul__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        out = [ZERO] * n
        for i, a in enumerate(self.coeffs[:n]):
            if a == 0:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Series(tuple(out))

    def scale(self, c) -> "Series":
        c = _as_fraction(c)
        return Series(tuple(v * c for v in self.coeffs))

    def shift(self, k: int) -> "Series":
        """Multiply by x**k, keeping the order."""
        if k < 0:
            raise AlgebraError("negative shift")
        return Series((ZERO,) * min(k, self.order) + self.coeffs[: max(0, self.order - k)])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None


def geometric_series(order: int) -> Series:
    return Series((ONE,) * order)


def _coeff_series(p: MPoly, base: str, order: int) -> Series:
    out = [ZERO] * order
    if not p.is_zero():
        i = p.ring.index(base)
        for e, c in p.terms.items():
            if any(x for j, x in enumerate(e) if j != i and x):
                raise AlgebraError("coefficient involves a variable besides " + base)
            if e[i] < order:
                out[e[i]] += c
    return Series(tuple(out))


def poly_series_eval(F: MPoly, s: Series, main: str = "P", base: str = "x") -> Series:
    """F(base, main := s) truncated to the order of s (Horner in main)."""
    if not F.variables() <= {main, base}:
        raise AlgebraError("polynomial must involve only the series variables")
    cm = F.as_coeff_map(main)
    if not cm:
        return Series((ZERO,) * s.order)
    d = max(cm)
    acc = _coeff_series(cm.get(d, MPoly.zero(F.ring)), base, s.order)
    for i in range(d - 1, -1, -1):
        acc = acc * s + _coeff_series(cm.get(i, MPoly.zero(F.ring)), base, s.order)
    return acc


def series_vanishes(F: MPoly, s: Series, main: str = "P", base: str = "x") -> bool:
    """True iff F(x, s) is 0 through order s.order - deg_main(F).

    The headroom deg_main(F) guards the orders a truncated substitution
    cannot certify.
    """
    dp = F.degree(main)
    need = s.order - max(dp, 0)
    if need <= 0:
        raise AlgebraError("series too short for a meaningful vanishing check")
    value = poly_series_eval(F, s, main, base)
    return all(c == 0 for c in value.coeffs[:need])


def series_solve(
    F: MPoly, prefix: Sequence, order: int, main: str = "P", base: str = "x"
) -> Series:
    """The unique series root of F(x, P) = 0 extending the given prefix.

    Coefficients are produced one at a time from the lowest order at which
    the next unknown appears linearly; this handles vanishing derivative at
    the origin as long as the prefix is long enough to keep that order below
    the next unknown's index.  Raises BranchAmbiguityError otherwise.
    """
    known = [_as_fraction(v) for v in prefix]
    if not known:
        raise BranchAmbiguityError("an initial prefix of at least one term is required")
    if order < len(known):
        return Series(tuple(known[:order]))

    cm = F.as_coeff_map(main)
    if not cm:
        raise AlgebraError("zero polynomial")
    dF = {i - 1: c * i for i, c in cm.items() if i >= 1}
    if not dF:
        raise AlgebraError("polynomial does not involve " + main)

    def eval_at(coeffmap: dict[int, MPoly], pk: Series) -> Series:
        d = max(coeffmap)
        acc = _coeff_series(coeffmap[d], base, pk.order)
        for i in range(d - 1, -1, -1):
            acc = acc * pk + _coeff_series(
                coeffmap.get(i, MPoly.zero(F.ring)), base, pk.order
            )
        return acc

    check = eval_at(cm, Series(tuple(known)))
    if not check.is_zero():
        raise AlgebraError("prefix does not satisfy the equation")

    while len(known) < order:
        k = len(known)
        pk = Series(tuple(known) + (ZERO,) * (k + 1))  # plenty of headroom below
        deriv_val = eval_at(dF, Series(tuple(known) + (ZERO,) * k))
        v = deriv_val.valuation()
        if v is None or v >= k:
            raise BranchAmbiguityError(
                "the linear step degenerates; supply a longer prefix"
            )
        pk = Series(tuple(known) + (ZERO,) * (v + 1))
        value = eval_at(cm, pk)
        if any(value.coeffs[t] != 0 for t in range(k, k + v)):
            raise AlgebraError("no series extension exists for this prefix")
        c = -value.coeffs[k + v] / deriv_val.coeffs[v]
        known.append(c)
    return Series(tuple(known[:order]))


# canonical rendering --------------------------------------------------------


def canonical_bivariate(F: MPoly, main: str = "P", base: str = "x") -> MPoly:
    """Primitive positive-leading form on the two-variable ring (main, base)."""
    ring = make_ring(main, base)
    return primitive_part(F.restrict(ring))


def _coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else str(c)


def poly_text(F: MPoly, main: str = "P", base: str = "x") -> str:
    """Canonical text: groups by descending main-degree, x-terms descending.

    A group whose coefficient has several terms is parenthesized with no
    inner spaces, e.g. ``x^2*P^2 + (x-1)*P + 1``.
    """
    if F.is_zero():
        return "0"
    if not F.variables() <= {main, base}:
        raise AlgebraError("text form supports only the two given variables")
    cm = F.as_coeff_map(main)

    def mono(c: Fraction, j: int, i: int) -> tuple[int, str]:
        sign = 1 if c > 0 else -1
        a = abs(c)
        factors = []
        if a != 1 or (j == 0 and i == 0):
            factors.append(_coeff_str(a))
        if j:
            factors.append(base if j == 1 else f"{base}^{j}")
        if i:
            factors.append(main if i == 1 else f"{main}^{i}")
        return sign, "*".join(factors)

    def xterms(p: MPoly) -> list[tuple[int, Fraction]]:
        i = p.ring.index(base)
        items = [(e[i], c) for e, c in p.terms.items()]
        return sorted(items, reverse=True)

    parts: list[tuple[int, str]] = []
    for i in sorted(cm, reverse=True):
        items = xterms(cm[i])
        if i == 0:
            parts.extend(mono(c, j, 0) for j, c in items)
        elif len(items) == 1:
            j, c = items[0]
            parts.append(mono(c, j, i))
        else:
            inner = ""
            for j, c in items:
                s, body = mono(c, j, 0)
                if not inner:
                    inner = ("-" if s < 0 else "") + body
                else:
                    inner += ("-" if s < 0 else "+") + body
            pv = main if i == 1 else f"{main}^{i}"
            parts.append((1, f"({inner})*{pv}"))

    out = ""
    for sign, body in parts:
        if not out:
            out = ("-" if sign < 0 else "") + body
        else:
            out += (" - " if sign < 0 else " + ") + body
    return out


def poly_json_terms(F: MPoly) -> list[dict]:
    """JSON-ready term list: decimal-string coefficients, exponent maps."""
    out = []
    for e in sorted(F.terms, reverse=True):
        c = F.terms[e]
        exps = {v: x for v, x in zip(F.ring, e) if x}
        out.append({"coeff": _coeff_str(c), "exponents": exps})
    return out
