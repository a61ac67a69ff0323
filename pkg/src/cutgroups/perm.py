"""Permutations and finite permutation groups with stabilizer chains.

Points are 0-indexed.  A permutation is stored as its dense image array, so
``p`` maps point ``i`` to ``p[i]``.  Composition is function composition:
``(p * q)`` applies ``q`` first, then ``p``.

Groups carry a deterministic stabilizer chain (base points in increasing
order), which provides the order and a membership test for groups far larger
than the full-enumeration cap.  Conjugacy class data is only available for
groups whose order is within the enumeration cap.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

MAX_DEGREE = 10_000
DEFAULT_ENUMERATION_CAP = 100_000


class GroupError(ValueError):
    """Base class for errors raised by group computations."""


class DegreeError(GroupError):
    """Raised when degrees are inconsistent or out of range."""


class MembershipError(GroupError):
    """Raised when an element is required to lie in a group but does not."""


class EnumerationCapExceeded(GroupError):
    """Raised when a computation needs a full element list but the group
    order exceeds the configured cap."""


def _arange(n: int) -> np.ndarray:
    return np.arange(n, dtype=np.int32)


class Permutation:
    """An immutable permutation of {0, ..., degree-1}."""

    __slots__ = ("images", "_key")

    def __init__(self, images: Iterable[int], _trusted: bool = False):
        if _trusted and isinstance(images, np.ndarray):
            arr = images
        else:
            arr = np.asarray(list(images) if not isinstance(images, np.ndarray) else images,
                             dtype=np.int32)
            if arr.ndim != 1:
                raise DegreeError("permutation images must be a flat sequence")
            n = arr.shape[0]
            if n == 0 or n > MAX_DEGREE:
                raise DegreeError(f"degree must be in 1..{MAX_DEGREE}, got {n}")
            seen = np.zeros(n, dtype=bool)
            if arr.min(initial=0) < 0 or arr.max(initial=0) >= n:
                raise DegreeError("image out of range; not a permutation")
            seen[arr] = True
            if not seen.all():
                raise DegreeError("repeated image; not a permutation")
        arr = np.ascontiguousarray(arr, dtype=np.int32)
        arr.flags.writeable = False
        object.__setattr__(self, "images", arr)
        object.__setattr__(self, "_key", None)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree <= 0 or degree > MAX_DEGREE:
            raise DegreeError(f"degree must be in 1..{MAX_DEGREE}, got {degree}")
        return cls(_arange(degree), _trusted=True)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        """Build a permutation from disjoint cycles, e.g. [(0, 1, 2)]."""
        img = np.array(_arange(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:]):
                img[a] = b
            if cyc:
                img[cyc[-1]] = cyc[0]
        return cls(img)

    @property
    def degree(self) -> int:
        return self.images.shape[0]

    @property
    def key(self) -> bytes:
        k = self._key
        if k is None:
            k = self.images.tobytes()
            object.__setattr__(self, "_key", k)
        return k

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self[other[i]]
        return Permutation(self.images[other.images], _trusted=True)

    def inverse(self) -> "Permutation":
        inv = np.empty(self.degree, dtype=np.int32)
        inv[self.images] = _arange(self.degree)
        return Permutation(inv, _trusted=True)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = _arange(self.degree)
        base = self.images
        while k:
            if k & 1:
                result = base[result]
            base = base[base]
            k >>= 1
        return Permutation(result, _trusted=True)

    def __call__(self, point: int) -> int:
        return int(self.images[point])

    def conjugate_by(self, g: "Permutation") -> "Permutation":
        """Return g * self * g^{ -1}."""
        gi = g.inverse()
        return Permutation(g.images[self.images[gi.images]], _trusted=True)

    def is_identity(self) -> bool:
        return bool((self.images == _arange(self.degree)).all())

    def min_moved_point(self) -> Optional[int]:
        diff = np.nonzero(self.images != _arange(self.degree))[0]
        if diff.size == 0:
            return None
        return int(diff[0])

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its least point."""
        imgs = self.images.tolist()
        seen = [False] * len(imgs)
        out = []
        for i in range(len(imgs)):
            if seen[i] or imgs[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = imgs[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = imgs[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        n = 1
        for cyc in self.cycles():
            n = math.lcm(n, len(cyc))
        return n

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images.tolist() < other.images.tolist()

    def __repr__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return f"Permutation(identity, degree={self.degree})"
        text = "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)
        return f"Permutation({text}, degree={self.degree})"


def element_order(g: Permutation) -> int:
    """Least n >= 1 with g^n = identity (lcm of cycle lengths)."""
    return g.order()


class _ChainLevel:
    __slots__ = ("base", "gens", "orbit")

    def __init__(self, base: int):
        self.base = base
        self.gens: list[Permutation] = []
        # orbit maps point -> transversal element t with t(base) = point
        self.orbit: dict[int, Permutation] = {}


class PermGroup:
    """A finite permutation group given by generators.

    The stabilizer chain is built deterministically: base points are the
    increasing sequence of least moved points, orbits are explored in BFS
    order with points ascending.  All derived data (order, enumeration,
    conjugacy classes) is therefore reproducible across runs.
    """

    def __init__(self, generators: Iterable[Permutation], degree: Optional[int] = None,
                 name: Optional[str] = None,
                 enumeration_cap: int = DEFAULT_ENUMERATION_CAP):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise DegreeError("degree is required for an empty generator list")
            degree = gens[0].degree
        if degree <= 0 or degree > MAX_DEGREE:
            raise DegreeError(f"degree must be in 1..{MAX_DEGREE}, got {degree}")
        for g in gens:
            if g.degree != degree:
                raise DegreeError(
                    f"generator degree {g.degree} does not match group degree {degree}")
        self.degree = int(degree)
        self.name = name
        self.enumeration_cap = int(enumeration_cap)
        self.generators: tuple[Permutation, ...] = tuple(
            g for g in dict.fromkeys(gens) if not g.is_identity())
        self._levels: list[_ChainLevel] = []
        self._elements: Optional[tuple[Permutation, ...]] = None
        self._element_index: Optional[dict[Permutation, int]] = None
        self._class_table = None
        self._build_chain()

    # -- stabilizer chain ---------------------------------------------------

    def _level_gens(self, i: int) -> list[Permutation]:
        # generators of the i-th stabilizer subgroup: everything attached at
        # this level or deeper (deeper gens fix all earlier base points)
        out = []
        for level in self._levels[i:]:
            out.extend(level.gens)
        return out

    def _rebuild_orbit(self, i: int) -> None:
        level = self._levels[i]
        gens = self._level_gens(i)
        orbit = {level.base: Permutation.identity(self.degree)}
        queue = [level.base]
        while queue:
            a = queue.pop(0)
            t_a = orbit[a]
            for g in gens:
                b = int(g.images[a])
                if b not in orbit:
                    orbit[b] = g * t_a
                    queue.append(b)
        level.orbit = orbit

    def _sift(self, g: Permutation) -> tuple[Permutation, int]:
        """Reduce g through the chain.

        Returns (residue, position): residue is the identity iff g is a
        member; otherwise position is the index at which the residue should
        be attached (its least moved point matches that level's base, or a
        new level belongs at that index).
        """
        r = g
        for i, level in enumerate(self._levels):
            p = r.min_moved_point()
            if p is None:
                return r, i
            if p < level.base:
                return r, i
            if p == level.base:
                a = int(r.images[p])
                t = level.orbit.get(a)
                if t is None:
                    return r, i
                r = t.inverse() * r
        return r, len(self._levels)

    def _attach(self, r: Permutation, pos: int) -> int:
        p = r.min_moved_point()
        assert p is not None
        if pos < len(self._levels) and self._levels[pos].base == p:
            self._levels[pos].gens.append(r)
        else:
            level = _ChainLevel(p)
            level.gens.append(r)
            self._levels.insert(pos, level)
        return pos

    def _build_chain(self) -> None:
        dirty: set[int] = set()
        for g in self.generators:
            r, pos = self._sift(g)
            if r.min_moved_point() is not None:
                idx = self._attach(r, pos)
                dirty.update(range(idx + 1))
        while dirty:
            i = max(dirty)
            if i >= len(self._levels):
                dirty.discard(i)
                continue
            if self._process_level(i, dirty):
                continue  # chain changed; dirty set was updated
            dirty.discard(i)

    def _process_level(self, i: int, dirty: set[int]) -> bool:
        """Recompute orbit of level i and sift its Schreier generators.

        Returns True if a new strong generator was attached somewhere (the
        level must then be revisited)."""
        self._rebuild_orbit(i)
        level = self._levels[i]
        gens = self._level_gens(i)
        for a in sorted(level.orbit):
            t_a = level.orbit[a]
            for g in gens:
                b = int(g.images[a])
                t_b = level.orbit[b]
                schreier = t_b.inverse() * (g * t_a)
                r, pos = self._sift(schreier)
                if r.min_moved_point() is not None:
                    idx = self._attach(r, pos)
                    dirty.update(range(idx + 1))
                    return True
        return False

    @property
    def order(self) -> int:
        n = 1
        for level in self._levels:
            n *= len(level.orbit)
        return n

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __contains__(self, g: Permutation) -> bool:
        if not isinstance(g, Permutation) or g.degree != self.degree:
            return False
        r, _ = self._sift(g)
        return r.min_moved_point() is None

    def require_member(self, g: Permutation) -> None:
        if g not in self:
            raise MembershipError(f"{g!r} is not a member of {self}")

    # -- enumeration --------------------------------------------------------

    def elements(self) -> tuple[Permutation, ...]:
        """All elements, in deterministic stabilizer-chain order.

        The identity is always first.  Raises EnumerationCapExceeded when the
        order is beyond the cap; order and membership remain available."""
        if self._elements is None:
            if self.order > self.enumeration_cap:
                raise EnumerationCapExceeded(
                    f"order {self.order} exceeds enumeration cap {self.enumeration_cap}")
            elems = [Permutation.identity(self.degree)]
            for level in reversed(self._levels):
                new = []
                for a in sorted(level.orbit):
                    t = level.orbit[a]
                    new.extend(t * e for e in elems)
                elems = new
            self._elements = tuple(elems)
        return self._elements

    def element_index(self) -> dict[Permutation, int]:
        if self._element_index is None:
            self._element_index = {g: i for i, g in enumerate(self.elements())}
        return self._element_index

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements())

    @classmethod
    def from_member_elements(cls, elements: Iterable[Permutation], degree: int,
                             name: Optional[str] = None,
                             enumeration_cap: int = DEFAULT_ENUMERATION_CAP) -> "PermGroup":
        """Group generated by a (possibly long) list of members.

        Elements already generated by the previously absorbed ones are
        skipped, so this is cheap even for full element lists."""
        group = cls([], degree=degree, name=name, enumeration_cap=enumeration_cap)
        kept: list[Permutation] = []
        for g in elements:
            if g.is_identity() or g in group:
                continue
            kept.append(g)
            group = cls(kept, degree=degree, name=name, enumeration_cap=enumeration_cap)
        return group

    # -- derived data --------------------------------------------------------

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def exponent(self) -> int:
        table = self.conjugacy_classes()
        n = 1
        for o in table.orders:
            n = math.lcm(n, o)
        return n

    def conjugacy_classes(self) -> "ConjugacyClassTable":
        if self._class_table is None:
            self._class_table = ConjugacyClassTable(self)
        return self._class_table

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"PermGroup({label} degree={self.degree}, order={self.order})"


def group_from_generators(gens: Sequence[Permutation], degree: int,
                          name: Optional[str] = None,
                          enumeration_cap: int = DEFAULT_ENUMERATION_CAP) -> PermGroup:
    """Construct a PermGroup, validating that all generators have `degree`."""
    return PermGroup(gens, degree=degree, name=name, enumeration_cap=enumeration_cap)


class ConjugacyClassTable:
    """Conjugacy classes of a group, in canonical order.

    Classes are sorted by (element order, class size, lexicographically least
    representative image sequence), and each representative is the
    lexicographically least member of its class.  The identity class is
    therefore always class 0.
    """

    def __init__(self, group: PermGroup):
        if group.order > group.enumeration_cap:
            raise EnumerationCapExceeded(
                f"conjugacy classes need enumeration; order {group.order} exceeds "
                f"cap {group.enumeration_cap}")
        self.group = group
        gens = group.generators
        gens_inv = [g.inverse() for g in gens]
        raw_members: list[list[Permutation]] = []
        class_of: dict[Permutation, int] = {}
        for e in group.elements():
            if e in class_of:
                continue
            ci = len(raw_members)
            members = [e]
            class_of[e] = ci
            queue = [e]
            while queue:
                x = queue.pop()
                for g, gi in zip(gens, gens_inv):
                    y = Permutation(g.images[x.images[gi.images]], _trusted=True)
                    if y not in class_of:
                        class_of[y] = ci
                        members.append(y)
                        queue.append(y)
            raw_members.append(members)

        reps = [min(members) for members in raw_members]
        order_of = [rep.order() for rep in reps]
        perm = sorted(range(len(raw_members)),
                      key=lambda i: (order_of[i], len(raw_members[i]), reps[i].images.tolist()))
        self.reps: tuple[Permutation, ...] = tuple(reps[i] for i in perm)
        self.sizes: tuple[int, ...] = tuple(len(raw_members[i]) for i in perm)
        self.orders: tuple[int, ...] = tuple(order_of[i] for i in perm)
        self.members: tuple[tuple[Permutation, ...], ...] = tuple(
            tuple(raw_members[i]) for i in perm)
        renumber = {old: new for new, old in enumerate(perm)}
        self._class_of: dict[Permutation, int] = {
            g: renumber[ci] for g, ci in class_of.items()}
        self._power_maps: dict[int, tuple[int, ...]] = {}
        self._product_hits: dict[tuple[int, int], frozenset[int]] = {}

    @property
    def num_classes(self) -> int:
        return len(self.reps)

    @property
    def exponent(self) -> int:
        n = 1
        for o in self.orders:
            n = math.lcm(n, o)
        return n

    def class_of(self, g: Permutation) -> int:
        try:
            return self._class_of[g]
        except KeyError:
            raise MembershipError(f"{g!r} is not a member of {self.group}") from None

    def power_map(self, k: int) -> tuple[int, ...]:
        """Class index map i -> class of (representative of i)^k.

        Well-defined on classes since conjugate elements have conjugate
        powers.  k is reduced modulo each element's order."""
        key = k % self.exponent
        cached = self._power_maps.get(key)
        if cached is not None:
            return cached
        out = []
        for i, rep in enumerate(self.reps):
            kk = key % self.orders[i]
            out.append(self._class_of[rep ** kk])
        result = tuple(out)
        self._power_maps[key] = result
        return result

    def product_hits(self, a: int, b: int) -> frozenset[int]:
        """Classes met by products x*y with x the representative of class a
        and y ranging over class b (equivalently, all of C_a * C_b)."""
        cached = self._product_hits.get((a, b))
        if cached is not None:
            return cached
        x = self.reps[a]
        hit = frozenset(self._class_of[Permutation(x.images[y.images], _trusted=True)]
                        for y in self.members[b])
        self._product_hits[(a, b)] = hit
        return hit


def conjugacy_classes(group: PermGroup) -> ConjugacyClassTable:
    """Conjugacy class table of `group` (cached on the group)."""
    return group.conjugacy_classes()


def class_power_map(table: ConjugacyClassTable, k: int) -> tuple[int, ...]:
    """Map class index i to the class of representative(i)^k."""
    return table.power_map(k)


def centralizer(group: PermGroup, g: Permutation) -> PermGroup:
    """The centralizer {x in group : x g = g x}."""
    group.require_member(g)
    commuting = [x for x in group.elements() if x * g == g * x]
    return PermGroup.from_member_elements(commuting, group.degree,
                                          enumeration_cap=group.enumeration_cap)


def are_conjugate(group: PermGroup, x: Permutation, y: Permutation) -> bool:
    table = group.conjugacy_classes()
    return table.class_of(x) == table.class_of(y)
