"""Exact character tables and class-function operations.

Tables are computed by the Burnside/Dixon method: the common eigenvectors of
the class-sum matrices are found modulo a prime p = 1 (mod e) with
p > 2*sqrt(|G|), degrees and values are recovered mod p, and root-of-unity
multiplicities are lifted to exact cyclotomic values by a discrete Fourier
sum.  Every table is validated against both orthogonality relations in exact
integer arithmetic before it is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence, Union

import numpy as np

from .cyclotomic import Cyclotomic, euler_phi, _power_rows
from .perm import (GroupError, MembershipError, PermGroup, Permutation)
from .structure import Subgroup, coset_transversal, is_normal

DIXON_PRIME_BOUND = 10 ** 8

_TABLE_CACHE: dict[tuple, "CharacterTable"] = {}


class CharacterTableError(GroupError):
    """Raised when the modular method cannot produce a validated table."""


# ---------------------------------------------------------------------------
# class functions


class ClassFunction:
    """A function constant on the conjugacy classes of a group.

    Values are Cyclotomic numbers stored at the conductor of the group
    exponent, aligned with the canonical class order of the group's table.
    """

    __slots__ = ("group", "values")

    def __init__(self, group: PermGroup, values: Iterable[Cyclotomic],
                 _normalized: bool = False):
        table = group.conjugacy_classes()
        vals = tuple(values)
        if len(vals) != table.num_classes:
            raise GroupError(
                f"expected {table.num_classes} class values, got {len(vals)}")
        if not _normalized:
            e = table.exponent
            vals = tuple(v.to_conductor(e) if isinstance(v, Cyclotomic)
                         else Cyclotomic.from_rational(e, v) for v in vals)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "values", vals)

    @property
    def degree(self) -> Cyclotomic:
        return self.values[0]  # class 0 is always the identity class

    def degree_int(self) -> int:
        return int(self.degree.as_rational())

    def evaluate(self, g: Permutation) -> Cyclotomic:
        return self.values[self.group.conjugacy_classes().class_of(g)]

    def is_linear(self) -> bool:
        return self.degree == 1

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.group, [v.conjugate() for v in self.values],
                             _normalized=True)

    def same_group_as(self, other: "ClassFunction") -> bool:
        return self.group is other.group or (
            self.group.degree == other.group.degree
            and self.group.generators == other.group.generators)

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.same_group_as(other) and all(
            a == b for a, b in zip(self.values, other.values))

    __hash__ = None

    def __repr__(self):
        vals = ", ".join(str(v) for v in self.values)
        return f"ClassFunction([{vals}])"


@dataclass(frozen=True)
class GaloisUnit:
    """A unit k modulo e, acting on characters by chi |-> chi(g^k)."""

    k: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        if math.gcd(self.k, self.modulus) != 1:
            raise ValueError(f"{self.k} is not a unit modulo {self.modulus}")
        object.__setattr__(self, "k", self.k % self.modulus if self.modulus > 1 else 1)

    def __mul__(self, other: "GaloisUnit") -> "GaloisUnit":
        if self.modulus != other.modulus:
            raise ValueError("cannot compose units with different moduli")
        return GaloisUnit(self.k * other.k, self.modulus)

    def order(self) -> int:
        n, acc = 1, self.k % self.modulus
        while acc != 1 % self.modulus:
            acc = acc * self.k % self.modulus
            n += 1
        return n


class FieldOfValues(NamedTuple):
    degree: int
    is_real: bool
    is_imaginary_quadratic: bool


# ---------------------------------------------------------------------------
# modular linear algebra


def _rref_mod(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    m = np.array(mat % p, dtype=np.int64)
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        m[r] = m[r] * pow(int(m[r, c]), p - 2, p) % p
        col = m[:, c].copy()
        col[r] = 0
        m = (m - np.outer(col, m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _nullspace_mod(mat: np.ndarray, p: int) -> np.ndarray:
    rref, pivots = _rref_mod(mat, p)
    cols = mat.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, c in enumerate(pivots):
            basis[i, c] = (-int(rref[r, f])) % p
    return basis


def _sqrt_mod(a: int, p: int) -> int:
    """A square root of a modulo an odd prime p (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise CharacterTableError(f"{a} is not a square modulo {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) == 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def dixon_prime(exponent: int, order: int, bound: int = DIXON_PRIME_BOUND) -> int:
    """Least prime p = 1 (mod exponent) with p > 2*sqrt(order)."""
    lo = math.isqrt(4 * order) + 1  # first integer > 2*sqrt(order)
    p = lo + ((1 - lo) % exponent)
    if p < 2:
        p += exponent * ((2 - p + exponent - 1) // exponent)
    while p <= bound:
        if _is_prime(p):
            return p
        p += exponent if exponent > 1 else 1
    raise CharacterTableError(
        f"no prime = 1 mod {exponent} above 2*sqrt({order}) found below {bound}")


def _least_primitive_root(p: int) -> int:
    n = p - 1
    factors = []
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            factors.append(f)
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        factors.append(m)
    for r in range(2, p):
        if all(pow(r, n // q, p) != 1 for q in factors):
            return r
    raise CharacterTableError(f"no primitive root modulo {p}")


# ---------------------------------------------------------------------------
# the table


class CharacterTable:
    """All irreducible characters of a group, exact and canonically ordered.

    Rows are sorted by (degree, value tuple); within equal degree the row
    whose coefficient vectors are lexicographically largest comes first, which
    places the trivial character at the top.
    """

    def __init__(self, group: PermGroup, rows: Sequence[ClassFunction],
                 conductor: int, root_vectors: np.ndarray):
        self.group = group
        self.rows = tuple(rows)
        self.conductor = conductor
        self.degrees = tuple(r.degree_int() for r in rows)
        self._root_vectors = root_vectors

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def to_json_dict(self) -> dict:
        table = self.group.conjugacy_classes()
        return {
            "name": self.group.name,
            "order": self.group.order,
            "conductor": self.conductor,
            "classes": [{"order": o, "size": s}
                        for o, s in zip(table.orders, table.sizes)],
            "degrees": list(self.degrees),
            "rows": [[[c.numerator, c.denominator] for v in row.values
                      for c in [None] and []] or
                     [[ [f.numerator, f.denominator] for f in v.coefficients]
                      for v in row.values]
                     for row in self.rows],
        }

    def __repr__(self):
        return (f"CharacterTable(order={self.group.order}, "
                f"classes={self.num_rows}, conductor={self.conductor})")


def character_table(group: PermGroup, prime_bound: int = DIXON_PRIME_BOUND) -> CharacterTable:
    """Exact character table (cached per canonical generator list)."""
    key = (group.degree, tuple(g.key for g in group.generators))
    cached = _TABLE_CACHE.get(key)
    if cached is not None:
        return cached
    table = _compute_character_table(group, prime_bound)
    _TABLE_CACHE[key] = table
    return table


def _class_matrix(table, i: int, p: int) -> np.ndarray:
    r = table.num_classes
    M = np.zeros((r, r), dtype=np.int64)
    inv_members = [x.inverse() for x in table.members[i]]
    for k in range(r):
        z = table.reps[k]
        for xi in inv_members:
            j = table.class_of(Permutation(xi.images[z.images], _trusted=True))
            M[j, k] += 1
    return M % p


def _compute_character_table(group: PermGroup, prime_bound: int) -> CharacterTable:
    table = group.conjugacy_classes()
    r = table.num_classes
    n = group.order
    e = table.exponent
    p = dixon_prime(e, n, prime_bound)
    root = _least_primitive_root(p) if p > 2 else 1
    w = pow(root, (p - 1) // e, p)  # the fixed e-th root of unity mod p

    # simultaneously diagonalize the class-sum matrices over F_p
    spaces: list[tuple[np.ndarray, list[int]]] = [
        (np.eye(r, dtype=np.int64), list(range(r)))]
    for i in range(1, r):
        if all(B.shape[0] == 1 for B, _ in spaces):
            break
        M = _class_matrix(table, i, p)
        new_spaces = []
        for B, piv in spaces:
            k = B.shape[0]
            if k == 1:
                new_spaces.append((B, piv))
                continue
            img = (B @ M.T) % p
            C = img[:, piv]
            if not np.array_equal((C @ B) % p, img):
                raise CharacterTableError(
                    "class-sum matrix does not preserve a common eigenspace")
            remaining = k
            for lam in range(p):
                if remaining == 0:
                    break
                null = _nullspace_mod((C - lam * np.eye(k, dtype=np.int64)) % p, p)
                if null.shape[0] == 0:
                    continue
                amb = (null @ B) % p
                Bn, pivn = _rref_mod(amb, p)
                new_spaces.append((Bn, pivn))
                remaining -= null.shape[0]
            if remaining != 0:
                raise CharacterTableError(
                    "modular eigenspace splitting failed to exhaust a subspace")
        spaces = new_spaces
    if any(B.shape[0] != 1 for B, _ in spaces):
        raise CharacterTableError(
            "class-sum matrices left a common eigenspace of dimension > 1")

    inv_map = table.power_map(-1)
    size_inv = [pow(s, p - 2, p) for s in table.sizes]
    pow_maps = {}
    for o in set(table.orders):
        for t in range(o):
            pow_maps.setdefault(t, table.power_map(t))

    rows_data = []
    for B, _ in spaces:
        v = B[0] % p
        if v[0] == 0:
            raise CharacterTableError("eigenvector with zero identity coordinate")
        v = v * pow(int(v[0]), p - 2, p) % p  # now v[j] = |C_j| chi(g_j) / chi(1)
        s = 0
        for j in range(r):
            s = (s + int(v[j]) * int(v[inv_map[j]]) % p * size_inv[j]) % p
        d2 = n % p * pow(s, p - 2, p) % p
        d = _sqrt_mod(d2, p)
        d = min(d, p - d)
        if d == 0 or d * d > 4 * n:
            raise CharacterTableError("recovered degree outside the Dixon bound")
        vals = [d * int(v[j]) % p * size_inv[j] % p for j in range(r)]

        root_vec = np.zeros((r, e), dtype=np.int64)
        values = []
        for j in range(r):
            o = table.orders[j]
            z = pow(w, e // o, p)
            zi = pow(z, p - 2, p)
            o_inv = pow(o, p - 2, p)
            vec = [0] * e
            total = 0
            for t in range(o):
                acc = 0
                for kk in range(o):
                    acc = (acc + vals[pow_maps[kk][j]] * pow(zi, t * kk, p)) % p
                m = acc * o_inv % p
                if m > d:
                    raise CharacterTableError(
                        "lifted multiplicity exceeds the degree bound")
                if m:
                    vec[t * (e // o)] = m
                    root_vec[j, t * (e // o)] = m
                total += m
            if total != d:
                raise CharacterTableError("root multiplicities do not sum to the degree")
            values.append(Cyclotomic.from_root_vector(e, vec))
        rows_data.append((d, values, root_vec))

    if sum(d * d for d, _, _ in rows_data) != n:
        raise CharacterTableError("degrees fail the sum-of-squares identity")
    for d, _, _ in rows_data:
        if n % d != 0:
            raise CharacterTableError(f"degree {d} does not divide the group order")

    def row_key(item):
        d, values, _ = item
        return (d, tuple(tuple(-c for c in v.coefficients) for v in values))

    rows_data.sort(key=row_key)
    rows = tuple(ClassFunction(group, values, _normalized=True)
                 for _, values, _ in rows_data)
    root_vectors = np.stack([rv for _, _, rv in rows_data])

    result = CharacterTable(group, rows, e, root_vectors)
    _validate_orthogonality(result)
    return result


def _reduce_root_sums(P: np.ndarray, e: int) -> np.ndarray:
    """Reduce vectors of zeta-power multiplicities mod the cyclotomic polynomial.

    P has shape (..., e); the result has shape (..., phi(e)) with exact
    integer entries."""
    phi = euler_phi(e)
    if e == phi:
        return P.copy()
    rows = _power_rows(e)
    tail = np.array([rows[m] for m in range(phi, e)], dtype=np.int64)
    return P[..., :phi] + P[..., phi:] @ tail


def _validate_orthogonality(tab: CharacterTable) -> None:
    table = tab.group.conjugacy_classes()
    U = tab._root_vectors  # (rows, classes, e)
    e = tab.conductor
    n = tab.group.order
    nrows, nclasses = U.shape[0], U.shape[1]
    sizes = np.array(table.sizes, dtype=np.int64)
    conj_idx = (-np.arange(e)) % e
    V = U[:, :, conj_idx]

    # row orthogonality: sum_c |C_c| chi_i(c) conj(chi_j(c)) = delta_ij |G|
    W = V * sizes[None, :, None]
    P = np.empty((nrows, nrows, e), dtype=np.int64)
    for t in range(e):
        Wt = W[:, :, (t - np.arange(e)) % e]
        P[:, :, t] = np.einsum("ica,jca->ij", U, Wt)
    red = _reduce_root_sums(P, e)
    target = np.zeros_like(red)
    target[np.arange(nrows), np.arange(nrows), 0] = n
    if not np.array_equal(red, target):
        raise CharacterTableError("row orthogonality fails")

    # column orthogonality: sum_chi chi(c) conj(chi(c')) = delta_cc' |C_G(g_c)|
    U2 = U.transpose(1, 0, 2)
    V2 = V.transpose(1, 0, 2)
    P2 = np.empty((nclasses, nclasses, e), dtype=np.int64)
    for t in range(e):
        Vt = V2[:, :, (t - np.arange(e)) % e]
        P2[:, :, t] = np.einsum("ica,jca->ij", U2, Vt)
    red2 = _reduce_root_sums(P2, e)
    target2 = np.zeros_like(red2)
    target2[np.arange(nclasses), np.arange(nclasses), 0] = n // sizes
    if not np.array_equal(red2, target2):
        raise CharacterTableError("column orthogonality fails")


def check_orthogonality(tab: CharacterTable) -> bool:
    """Exact row and column orthogonality; True iff both hold."""
    try:
        _validate_orthogonality(tab)
        return True
    except CharacterTableError:
        return False


# ---------------------------------------------------------------------------
# operations on class functions


def inner_product(phi: ClassFunction, psi: ClassFunction) -> Fraction:
    """(1/|G|) sum over classes of size * phi * conj(psi); must be rational."""
    if not phi.same_group_as(psi):
        raise GroupError("inner product requires class functions on one group")
    table = phi.group.conjugacy_classes()
    e = table.exponent
    acc = Cyclotomic.zero(e)
    for size, a, b in zip(table.sizes, phi.values, psi.values):
        acc = acc + (a * b.conjugate()) * size
    total = acc / phi.group.order
    if not total.is_rational():
        raise ValueError("inner product of these class functions is irrational")
    return total.as_rational()


def _require_subgroup(H: PermGroup, G: PermGroup) -> None:
    if H.degree != G.degree or any(g not in G for g in H.generators):
        raise GroupError("not a subgroup of the target group")


def induce(theta: ClassFunction, G: PermGroup) -> ClassFunction:
    """Induced class function theta^G for theta on a subgroup H <= G."""
    H = theta.group
    _require_subgroup(H, G)
    TG = G.conjugacy_classes()
    TH = H.conjugacy_classes()
    h = H.order
    n = G.order
    e = TG.exponent
    values = []
    for ci in range(TG.num_classes):
        tally: dict[int, int] = {}
        for y in TG.members[ci]:
            hj = TH._class_of.get(y)
            if hj is not None:
                tally[hj] = tally.get(hj, 0) + 1
        acc = Cyclotomic.zero(e)
        for hj, count in sorted(tally.items()):
            acc = acc + theta.values[hj].to_conductor(e) * count
        values.append(acc * Fraction(n, TG.sizes[ci] * h))
    return ClassFunction(G, values)


def restrict(chi: ClassFunction, H: PermGroup) -> ClassFunction:
    """Restriction of chi to a subgroup H of its group."""
    G = chi.group
    _require_subgroup(H, G)
    TG = G.conjugacy_classes()
    TH = H.conjugacy_classes()
    return ClassFunction(H, [chi.values[TG.class_of(rep)] for rep in TH.reps])


def galois_apply(k: Union[int, GaloisUnit], chi: ClassFunction) -> ClassFunction:
    """The character chi^sigma_k with values chi(g^k); k must be a unit."""
    table = chi.group.conjugacy_classes()
    e = table.exponent
    kk = k.k if isinstance(k, GaloisUnit) else int(k)
    if math.gcd(kk, e) != 1:
        raise ValueError(f"{kk} is not a unit modulo the group exponent {e}")
    pm = table.power_map(kk)
    return ClassFunction(chi.group, [chi.values[pm[i]] for i in range(len(pm))],
                         _normalized=True)


def galois_stabilizer(chi: ClassFunction) -> tuple[int, ...]:
    """Units k mod the group exponent with chi(g^k) = chi(g) for all g."""
    table = chi.group.conjugacy_classes()
    e = table.exponent
    units = [k for k in range(1, e + 1) if math.gcd(k, e) == 1] if e > 1 else [1]
    stab = []
    for k in units:
        pm = table.power_map(k)
        if all(chi.values[pm[i]] == chi.values[i] for i in range(len(pm))):
            stab.append(k % e if e > 1 else 1)
    return tuple(sorted(stab))


def field_of_values(chi: ClassFunction) -> FieldOfValues:
    """(degree over Q, real?, imaginary quadratic?) of the value field of chi."""
    table = chi.group.conjugacy_classes()
    e = table.exponent
    if e <= 2:
        return FieldOfValues(1, True, False)
    stab = galois_stabilizer(chi)
    units = euler_phi(e)
    degree = units // len(stab)
    is_real = (e - 1) in stab
    return FieldOfValues(degree, is_real, degree == 2 and not is_real)


def character_cut_criterion(group: PermGroup, table: Optional[CharacterTable] = None) -> bool:
    """True iff every irreducible has value field Q or imaginary quadratic."""
    if table is None:
        table = character_table(group)
    for row in table.rows:
        fov = field_of_values(row)
        if fov.degree > 2:
            return False
        if fov.degree == 2 and not fov.is_imaginary_quadratic:
            return False
    return True


# ---------------------------------------------------------------------------
# Clifford-theoretic operations


def _conjugate_class_indices(N: PermGroup, t: Permutation,
                             elems: Sequence[Permutation]) -> list[int]:
    TN = N.conjugacy_classes()
    ti = t.inverse()
    return [TN.class_of(Permutation(t.images[x.images[ti.images]], _trusted=True))
            for x in elems]


def _inertia_fixing_reps(G: PermGroup, N: PermGroup, theta: ClassFunction,
                         transversal: Sequence[Permutation]) -> list[Permutation]:
    """Coset representatives t of N in G with theta(t x t^-1) = theta(x).

    For linear theta it is enough to test the generators of N (two linear
    characters agreeing on generators agree everywhere); otherwise every
    class representative is tested."""
    TN = N.conjugacy_classes()
    if theta.is_linear():
        test_elems: Sequence[Permutation] = N.generators
    else:
        test_elems = TN.reps
    base_classes = [TN.class_of(x) for x in test_elems]
    fixing = []
    for t in transversal:
        conj_classes = _conjugate_class_indices(N, t, test_elems)
        if all(theta.values[a] == theta.values[b]
               for a, b in zip(conj_classes, base_classes)):
            fixing.append(t)
    return fixing


def inertia_group(G: PermGroup, N: Subgroup, theta: ClassFunction) -> Subgroup:
    """The stabilizer {g in G : theta(g n g^-1) = theta(n) for all n in N}."""
    if not is_normal(G, N):
        raise GroupError("inertia groups are defined for normal subgroups only")
    if not theta.same_group_as(ClassFunction(N, theta.values, _normalized=True)) \
            and theta.group is not N:
        pass  # theta carries its own group; membership enforced below
    if theta.group.degree != N.degree or theta.group.generators != N.generators:
        if theta.group is not N:
            raise GroupError("theta must be a class function on N")
    reps = coset_transversal(G, N)
    fixing = _inertia_fixing_reps(G, N, theta, reps)
    gens = list(N.generators) + [t for t in fixing if not t.is_identity()]
    result = Subgroup(G, gens)
    if result.order != N.order * len(fixing):
        raise CharacterTableError("inertia subgroup order mismatch")
    return result


def clifford_constituents(chi: ClassFunction, N: Subgroup) -> list[tuple[ClassFunction, int]]:
    """Constituents of the restriction of chi to a normal subgroup N.

    Returns (theta, multiplicity) pairs in the canonical row order of the
    character table of N."""
    G = chi.group
    if not is_normal(G, N):
        raise GroupError("constituent decomposition requires a normal subgroup")
    tab = character_table(N)
    res = restrict(chi, N)
    out = []
    for row in tab.rows:
        m = inner_product(res, row)
        if m:
            if m.denominator != 1:
                raise CharacterTableError("non-integral constituent multiplicity")
            out.append((row, int(m)))
    return out


# ---------------------------------------------------------------------------
# linear characters of elementary abelian groups (dual-basis construction)


def elementary_abelian_basis(N: PermGroup) -> tuple[int, list[Permutation], dict[Permutation, tuple[int, ...]]]:
    """(p, basis, coordinates) for an elementary abelian p-group.

    Coordinates are exponent vectors over the basis; raises GroupError if N
    is not elementary abelian."""
    if N.order == 1:
        raise GroupError("the trivial group has no elementary abelian basis")
    if not N.is_abelian():
        raise GroupError("not abelian")
    p = N.generators[0].order()
    if not _is_prime(p) or any(g.order() != p for g in N.generators):
        raise GroupError("not elementary abelian: generator orders differ")
    basis: list[Permutation] = []
    span = PermGroup([], degree=N.degree)
    for g in N.generators:
        if g not in span:
            basis.append(g)
            span = PermGroup(basis, degree=N.degree)
    if span.order != N.order:
        raise GroupError("generators do not span the group")
    coords: dict[Permutation, tuple[int, ...]] = {N.identity: (0,) * len(basis)}
    frontier = [(N.identity, (0,) * len(basis))]
    for i, b in enumerate(basis):
        new = []
        for x, vec in frontier:
            cur = x
            for k in range(1, p):
                cur = cur * b
                v = vec[:i] + (k,) + vec[i + 1:]
                coords[cur] = v
                new.append((cur, v))
        frontier.extend(new)
    return p, basis, coords


def linear_characters(N: PermGroup) -> list[ClassFunction]:
    """All |N| linear characters of an elementary abelian group.

    Ordered by the lexicographic dual exponent vector, trivial character
    first.  Equivalent to the degree-1 rows of the character table, but
    usable when N is too large for the modular method."""
    p, basis, coords = elementary_abelian_basis(N)
    k = len(basis)
    TN = N.conjugacy_classes()
    roots = [Cyclotomic.root_of_unity(p, m) for m in range(p)]
    coord_mat = np.array([coords[rep] for rep in TN.reps], dtype=np.int64)
    out = []
    for flat in range(p ** k):
        vec = []
        rem = flat
        for _ in range(k):
            rem, digit = divmod(rem, p)
            vec.append(digit)
        vec = np.array(list(reversed(vec)), dtype=np.int64)
        exps = (coord_mat @ vec) % p
        values = tuple(roots[int(x)] for x in exps)
        out.append(ClassFunction(N, values, _normalized=True))
    return out
