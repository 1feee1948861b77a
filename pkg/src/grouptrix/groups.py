"""Finite groups on dense element indices 0..n-1.

A Group wraps a list of concrete elements (permutation tuples, matrix tuples,
residue tuples, or plain ints) plus a composition rule.  Multiplication rows
are materialized lazily per right factor, so a group that is swept heavily
converges to a cached multiplication table without paying the n^2 cost up
front.  Groups are immutable once built; every cache is filled behind
idempotent accessors, so instances can be shared freely between workers.

Constructors cover cyclic, dihedral, generalized quaternion (dicyclic),
symmetric, alternating, elementary abelian, the non-abelian group of order
p^3 and exponent p^2, direct products, PSL(2,q) acting on the projective
line, SL(2,q) as matrices, explicit Cayley tables, and permutation
generators.
"""

from __future__ import annotations

import itertools
import random
import re
from array import array
from dataclasses import dataclass, field

from .arith import factorize, is_prime
from .errors import NotNormalError, SizeGuardError, SpecError
from .fields import FiniteField

__all__ = [
    "Group",
    "SubgroupHandle",
    "TOP",
    "make_group",
    "cyclic_group",
    "dihedral_group",
    "generalized_quaternion_group",
    "symmetric_group",
    "alternating_group",
    "elementary_abelian_group",
    "modular_p3_group",
    "direct_product",
    "psl2_group",
    "sl2_group",
    "cayley_table_group",
    "permutation_group",
    "parse_permutation_line",
    "element_order",
    "generated_closure",
    "generates_whole",
    "center",
    "centralizer",
    "series",
    "subgroup_is",
    "engel_related",
    "quotient",
    "cyclic_classes",
]

MAX_GROUP_ORDER = 10**6


class _Top:
    """Sentinel returned by generated_closure when the seeds generate the whole group."""

    def __repr__(self):
        return "TOP"


TOP = _Top()


class Group:
    """A finite group with elements addressed by index."""

    def __init__(self, elements, compose, identity_elem, label, inverse=None):
        self._elements = list(elements)
        self.order = len(self._elements)
        if self.order == 0:
            raise SpecError("a group needs at least one element")
        if self.order > MAX_GROUP_ORDER:
            raise SpecError(f"order {self.order} exceeds the construction cap")
        self._index = {e: i for i, e in enumerate(self._elements)}
        if len(self._index) != self.order:
            raise SpecError("duplicate elements in construction")
        self._compose = compose
        self._inverse = inverse
        self.identity = self._index[identity_elem]
        self.label = label
        self._right: dict[int, array] = {}
        self._orders: array | None = None
        self._cyclic: dict[int, frozenset[int]] = {}
        self._inv_cache: dict[int, int] = {}
        self._classes: list[list[int]] | None = None

    # -- basic arithmetic ----------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        row = self._right.get(b)
        if row is not None:
            return row[a]
        return self._index[self._compose(self._elements[a], self._elements[b])]

    def right_map(self, b: int) -> array:
        """The full right-translation row a -> a*b, cached after first use."""
        row = self._right.get(b)
        if row is None:
            compose, elems, index = self._compose, self._elements, self._index
            eb = elems[b]
            row = array("l", [index[compose(ea, eb)] for ea in elems])
            self._right[b] = row
        return row

    def inv(self, a: int) -> int:
        cached = self._inv_cache.get(a)
        if cached is not None:
            return cached
        if self._inverse is not None:
            out = self._index[self._inverse(self._elements[a])]
        else:
            out = self.power(a, self.order_of(a) - 1)
        self._inv_cache[a] = out
        return out

    def power(self, a: int, e: int) -> int:
        if e < 0:
            return self.power(self.inv(a), -e)
        result = self.identity
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def conj(self, a: int, g: int) -> int:
        """g^-1 * a * g."""
        return self.mul(self.mul(self.inv(g), a), g)

    def commutator(self, a: int, b: int) -> int:
        """a^-1 * b^-1 * a * b."""
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    # -- cached structure ------------------------------------------------------

    def cyclic_set(self, a: int) -> frozenset[int]:
        """Members of the cyclic subgroup generated by a."""
        cached = self._cyclic.get(a)
        if cached is not None:
            return cached
        members = [self.identity]
        x = a
        while x != self.identity:
            members.append(x)
            x = self.mul(x, a)
        out = frozenset(members)
        self._cyclic[a] = out
        return out

    def order_of(self, a: int) -> int:
        if self._orders is not None:
            return self._orders[a]
        return len(self.cyclic_set(a))

    @property
    def orders(self) -> array:
        """Element-order table, built once on first access."""
        if self._orders is None:
            self._orders = array("l", [len(self.cyclic_set(a)) for a in range(self.order)])
        return self._orders

    def element(self, a: int):
        return self._elements[a]

    def index_of(self, elem) -> int:
        try:
            return self._index[elem]
        except KeyError:
            raise SpecError(f"{elem!r} is not an element of {self.label}") from None

    def element_repr(self, a: int) -> str:
        return repr(self._elements[a])

    def __repr__(self):
        return f"Group({self.label}, order={self.order})"

    # -- validation -------------------------------------------------------------

    def validate(self, rng_seed: int = 0, triples: int = 100_000) -> None:
        """Check the group axioms: associativity on sampled triples (exhaustive
        for order <= 256), a two-sided identity, and two-sided inverses."""
        n, e = self.order, self.identity
        for g in range(n):
            if self.mul(e, g) != g or self.mul(g, e) != g:
                raise SpecError(f"identity fails at element {g}")
            gi = self.inv(g)
            if self.mul(g, gi) != e or self.mul(gi, g) != e:
                raise SpecError(f"inverse fails at element {g}")
        if n <= 256:
            import numpy as np

            table = np.empty((n, n), dtype=np.int64)
            for b in range(n):
                table[:, b] = self.right_map(b)
            for a in range(n):
                if not np.array_equal(table[table[a], :], table[a][table]):
                    raise SpecError(f"associativity fails in row {a}")
        else:
            rng = random.Random(rng_seed)
            for _ in range(triples):
                a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                    raise SpecError(f"associativity fails at ({a},{b},{c})")


@dataclass(frozen=True)
class SubgroupHandle:
    """A subgroup of a host group, held as a frozenset of element indices."""

    owner: Group = field(repr=False)
    members: frozenset[int]

    def __post_init__(self):
        if self.owner.identity not in self.members:
            raise SpecError("subgroup must contain the identity")
        if self.owner.order % len(self.members) != 0:
            raise SpecError("Lagrange violation: size does not divide the group order")

    def __len__(self):
        return len(self.members)

    def verify_closure(self) -> None:
        """Full closure check (quadratic; intended for tests and untrusted input)."""
        G, members = self.owner, self.members
        for a in members:
            if G.inv(a) not in members:
                raise SpecError("subgroup not closed under inversion")
            for b in members:
                if G.mul(a, b) not in members:
                    raise SpecError("subgroup not closed under multiplication")

    def generating_set(self) -> list[int]:
        """A small generating set, grown greedily in index order."""
        G = self.owner
        gens: list[int] = []
        have = {G.identity}
        for a in sorted(self.members):
            if a not in have:
                gens.append(a)
                have = set(_closure_members(G, gens))
                if len(have) == len(self.members):
                    break
        return gens


def _subgroup(G: Group, members) -> SubgroupHandle:
    return SubgroupHandle(G, frozenset(members))


# -- closures ---------------------------------------------------------------


def _closure_members(G: Group, seeds) -> list[int]:
    """Subgroup generated by seeds, as a list in discovery order."""
    maps = [G.right_map(s) for s in seeds]
    seen = bytearray(G.order)
    seen[G.identity] = 1
    out = [G.identity]
    for s in seeds:
        if not seen[s]:
            seen[s] = 1
            out.append(s)
    i = 0
    while i < len(out):
        a = out[i]
        i += 1
        for m in maps:
            p = m[a]
            if not seen[p]:
                seen[p] = 1
                out.append(p)
    return out


def generated_closure(G: Group, seeds, early_exit: bool = True):
    """Breadth-first product closure of seeds together with the identity.

    With early_exit (the default) the search returns TOP as soon as the
    partial closure exceeds |G|/2, since no proper subgroup can be that big.
    """
    seeds = list(seeds)
    if not seeds:
        raise SpecError("seeds must be nonempty")
    threshold = G.order // 2
    maps = [G.right_map(s) for s in seeds]
    seen = bytearray(G.order)
    seen[G.identity] = 1
    out = [G.identity]
    for s in seeds:
        if not seen[s]:
            seen[s] = 1
            out.append(s)
    if early_exit and len(out) > threshold:
        return TOP
    i = 0
    while i < len(out):
        a = out[i]
        i += 1
        for m in maps:
            p = m[a]
            if not seen[p]:
                seen[p] = 1
                out.append(p)
        if early_exit and len(out) > threshold:
            return TOP
    return _subgroup(G, out)


def generates_whole(G: Group, x: int, y: int) -> bool:
    """True iff x and y together generate all of G."""
    result = generated_closure(G, (x, y))
    if result is TOP:
        return True
    return len(result) == G.order


def element_order(G: Group, g: int) -> int:
    if not 0 <= g < G.order:
        raise SpecError("element index out of range")
    return G.order_of(g)


# -- centres and series -------------------------------------------------------


def centralizer(G: Group, g: int) -> SubgroupHandle:
    row = G.right_map(g)
    members = [h for h in range(G.order) if row[h] == G.mul(g, h)]
    return _subgroup(G, members)


def center(G: Group) -> SubgroupHandle:
    gens = _subgroup(G, range(G.order)).generating_set()
    if not gens:  # trivial group
        return _subgroup(G, [G.identity])
    members = set(range(G.order))
    for g in gens:
        members &= centralizer(G, g).members
    return _subgroup(G, members)


def _normal_closure(G: Group, ambient: SubgroupHandle, seeds) -> frozenset[int]:
    """Smallest subgroup containing seeds and normalized by the ambient subgroup."""
    amb_gens = ambient.generating_set()
    current = set(seeds)
    while True:
        members = _closure_members(G, sorted(current)) if current else [G.identity]
        extra = set()
        mem_set = set(members)
        for g in amb_gens:
            for x in members:
                c = G.conj(x, g)
                if c not in mem_set:
                    extra.add(c)
        if not extra:
            return frozenset(mem_set)
        current = mem_set | extra


def _commutator_subgroup(G: Group, A: SubgroupHandle, B: SubgroupHandle, ambient: SubgroupHandle) -> SubgroupHandle:
    """[A, B] as a subgroup, using generator commutators plus normal closure."""
    seeds = set()
    for a in A.generating_set():
        for b in B.generating_set():
            seeds.add(G.commutator(a, b))
    seeds.discard(G.identity)
    if not seeds:
        return _subgroup(G, [G.identity])
    return SubgroupHandle(G, _normal_closure(G, ambient, seeds))


def series(H: SubgroupHandle, kind: str) -> list[SubgroupHandle]:
    """Derived, lower central, or upper central series of H, run to stability."""
    G = H.owner
    if kind == "derived":
        out = [H]
        while True:
            nxt = _commutator_subgroup(G, out[-1], out[-1], out[-1])
            if nxt.members == out[-1].members:
                break
            out.append(nxt)
        return out
    if kind == "lower_central":
        out = [H]
        while True:
            nxt = _commutator_subgroup(G, out[-1], H, H)
            if nxt.members == out[-1].members:
                break
            out.append(nxt)
        return out
    if kind == "upper_central":
        # Z_{k+1} = {x in H : [x, g] in Z_k for all g in H}; testing the
        # commutator condition on a generating set of H is equivalent because
        # each Z_k is normal in H.
        gens = H.generating_set()
        out = [_subgroup(G, [G.identity])]
        members = sorted(H.members)
        while True:
            zk = out[-1].members
            nxt = frozenset(x for x in members if all(G.commutator(x, g) in zk for g in gens))
            if nxt == zk:
                break
            out.append(_subgroup(G, nxt))
        return out
    raise SpecError(f"unknown series kind {kind!r}")


def subgroup_is(H: SubgroupHandle, kind: str) -> bool:
    G = H.owner
    if kind == "abelian":
        gens = H.generating_set()
        return all(G.mul(a, b) == G.mul(b, a) for a in gens for b in gens)
    if kind == "cyclic":
        size = len(H.members)
        return any(G.order_of(x) == size for x in H.members)
    if kind == "nilpotent":
        return len(series(H, "lower_central")[-1]) == 1
    if kind == "solvable":
        return len(series(H, "derived")[-1]) == 1
    raise SpecError(f"unknown predicate {kind!r}")


def engel_related(G: Group, x: int, y: int) -> tuple[bool, int | None]:
    """Iterate c1=[x,y], c_{k+1}=[c_k,y]; report the first k with c_k = 1.

    The iterates live in a finite group, so either the identity is reached or
    a repeat occurs and the answer is negative.
    """
    c = G.commutator(x, y)
    k = 1
    seen = {c}
    while c != G.identity:
        c = G.commutator(c, y)
        k += 1
        if c in seen:
            return (False, None)
        seen.add(c)
    return (True, k)


def quotient(G: Group, N: SubgroupHandle) -> Group:
    """Quotient group on coset representatives; N must be normal."""
    members = sorted(N.members)
    coset_of = array("l", [-1] * G.order)
    reps: list[int] = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        left = sorted(G.mul(g, n) for n in members)
        right = sorted(G.mul(n, g) for n in members)
        if left != right:
            raise NotNormalError(f"subgroup of size {len(members)} is not normal in {G.label}")
        cid = len(reps)
        reps.append(left[0])
        for h in left:
            coset_of[h] = cid

    def compose(r1: int, r2: int) -> int:
        return reps[coset_of[G.mul(r1, r2)]]

    def inverse(r: int) -> int:
        return reps[coset_of[G.inv(r)]]

    return Group(reps, compose, reps[coset_of[G.identity]], f"{G.label}/N{len(members)}", inverse)


def cyclic_classes(G: Group) -> list[list[int]]:
    """Partition of the elements by the relation <x> = <y>, sorted by least member."""
    if G._classes is None:
        buckets: dict[frozenset[int], list[int]] = {}
        for g in range(G.order):
            buckets.setdefault(G.cyclic_set(g), []).append(g)
        G._classes = sorted((sorted(v) for v in buckets.values()), key=lambda c: c[0])
    return [list(c) for c in G._classes]


# -- constructors -------------------------------------------------------------


def cyclic_group(n: int) -> Group:
    if n < 1:
        raise SpecError("cyclic group order must be positive")
    return Group(range(n), lambda a, b: (a + b) % n, 0, f"cyclic({n})", lambda a: (-a) % n)


def dihedral_group(order: int) -> Group:
    """Dihedral group of the given (even) order, rotations and reflections."""
    if order < 2 or order % 2:
        raise SpecError("dihedral order must be even and at least 2")
    m = order // 2
    elems = [(i, j) for j in (0, 1) for i in range(m)]

    def compose(a, b):
        i, j = a
        k, l = b
        if j == 0:
            return ((i + k) % m, l)
        return ((i - k) % m, 1 - l)

    def inverse(a):
        i, j = a
        return ((-i) % m, 0) if j == 0 else (i, 1)

    return Group(elems, compose, (0, 0), f"dihedral({order})", inverse)


def generalized_quaternion_group(order: int) -> Group:
    """Dicyclic group of order 4m: <a,b : a^(2m)=1, b^2=a^m, b a b^-1 = a^-1>."""
    if order < 8 or order % 4:
        raise SpecError("generalized quaternion order must be 4m with m >= 2")
    two_m = order // 2
    m = order // 4
    elems = [(i, j) for j in (0, 1) for i in range(two_m)]

    def compose(a, b):
        i, j = a
        k, l = b
        if j == 0:
            return ((i + k) % two_m, l)
        if l == 0:
            return ((i - k) % two_m, 1)
        return ((i - k + m) % two_m, 0)

    def inverse(a):
        i, j = a
        return ((-i) % two_m, 0) if j == 0 else ((i + m) % two_m, 1)

    return Group(elems, compose, (0, 0), f"genq({order})", inverse)


def _perm_compose(p, q):
    return tuple(p[x] for x in q)


def _perm_inverse(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def symmetric_group(n: int) -> Group:
    if not 1 <= n <= 9:
        raise SpecError("symmetric group degree must be between 1 and 9")
    elems = list(itertools.permutations(range(n)))
    return Group(elems, _perm_compose, tuple(range(n)), f"sym({n})", _perm_inverse)


def _perm_is_even(p) -> bool:
    seen = [False] * len(p)
    parity = 0
    for i in range(len(p)):
        if not seen[i]:
            j, size = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                size += 1
            parity ^= (size - 1) & 1
    return parity == 0


def alternating_group(n: int) -> Group:
    if not 1 <= n <= 9:
        raise SpecError("alternating group degree must be between 1 and 9")
    elems = [p for p in itertools.permutations(range(n)) if _perm_is_even(p)]
    return Group(elems, _perm_compose, tuple(range(n)), f"alt({n})", _perm_inverse)


def elementary_abelian_group(p: int, k: int) -> Group:
    if not is_prime(p):
        raise SpecError(f"{p} is not prime")
    if k < 1:
        raise SpecError("rank must be at least 1")
    elems = list(itertools.product(range(p), repeat=k))

    def compose(a, b):
        return tuple((x + y) % p for x, y in zip(a, b))

    def inverse(a):
        return tuple((-x) % p for x in a)

    return Group(elems, compose, (0,) * k, f"elab({p},{k})", inverse)


def modular_p3_group(p: int) -> Group:
    """Non-abelian group of order p^3 and exponent p^2 (p an odd prime).

    Elements a^i b^j multiply by (a^i b^j)(a^k b^l) = a^(i + k(1+p)^j) b^(j+l)
    with the first exponent mod p^2 and the second mod p.
    """
    if p == 2 or not is_prime(p):
        raise SpecError("p must be an odd prime")
    p2 = p * p
    twist = [pow(1 + p, j, p2) for j in range(p)]
    elems = [(i, j) for i in range(p2) for j in range(p)]

    def compose(a, b):
        i, j = a
        k, l = b
        return ((i + k * twist[j]) % p2, (j + l) % p)

    def inverse(a):
        i, j = a
        tw = twist[(-j) % p]
        return ((-i * tw) % p2, (-j) % p)

    return Group(elems, compose, (0, 0), f"modp3({p})", inverse)


def direct_product(A: Group, B: Group) -> Group:
    """Direct product with row-major element indexing: index = a*|B| + b."""
    nb = B.order
    n = A.order * nb
    if n > MAX_GROUP_ORDER:
        raise SpecError("product order exceeds the construction cap")

    def compose(x, y):
        a1, b1 = divmod(x, nb)
        a2, b2 = divmod(y, nb)
        return A.mul(a1, a2) * nb + B.mul(b1, b2)

    def inverse(x):
        a, b = divmod(x, nb)
        return A.inv(a) * nb + B.inv(b)

    return Group(range(n), compose, A.identity * nb + B.identity, f"prod({A.label},{B.label})", inverse)


def _projective_line_maps(q: int):
    """PSL(2,q) generators as permutations of the projective line (q+1 points).

    Points are field elements indexed 0..q-1 plus infinity at index q.  The
    generators are x -> x+1, x -> s*x with s a square generating the squares,
    and x -> -1/x; together they give all elementary transvections and the
    Weyl reflection, hence the whole group.
    """
    if q < 2:
        raise SpecError("q must be a prime power with q >= 2")
    fac = factorize(q)
    p = fac[0]
    if len(set(fac)) != 1:
        raise SpecError(f"{q} is not a prime power")
    k = len(fac)
    F = FiniteField(p, k)
    lam = F.generator()
    scale = lam if p == 2 else F.mul(lam, lam)
    idx = {e: i for i, e in enumerate(F.elements)}
    INF = q

    def as_perm(fn):
        return tuple(fn(i) for i in range(q + 1))

    def translate(i):
        if i == INF:
            return INF
        return idx[F.add(F.elements[i], F.one)]

    def scale_map(i):
        if i == INF:
            return INF
        return idx[F.mul(F.elements[i], scale)]

    def invert(i):
        if i == INF:
            return idx[F.zero]
        e = F.elements[i]
        if e == F.zero:
            return INF
        return idx[F.neg(F.inv(e))]

    return [as_perm(translate), as_perm(scale_map), as_perm(invert)]


def psl2_group(q: int) -> Group:
    gens = _projective_line_maps(q)
    expected = q * (q * q - 1) // (2 if q % 2 else 1)
    if expected > MAX_GROUP_ORDER:
        raise SpecError("PSL(2,q) order exceeds the construction cap")
    identity = tuple(range(q + 1))
    elems = _bfs_closure_elements(gens, _perm_compose, identity, expected)
    if len(elems) != expected:
        raise SpecError(f"PSL(2,{q}) closure produced {len(elems)} elements, expected {expected}")
    return Group(elems, _perm_compose, identity, f"psl2({q})", _perm_inverse)


def sl2_group(q: int) -> Group:
    """SL(2,q) with elements as row-major matrix tuples over GF(q)."""
    fac = factorize(q)
    if len(set(fac)) != 1:
        raise SpecError(f"{q} is not a prime power")
    p, k = fac[0], len(fac)
    if q**3 - q > MAX_GROUP_ORDER:
        raise SpecError("SL(2,q) order exceeds the construction cap")
    F = FiniteField(p, k)
    elems = []
    for a in F.elements:
        for b in F.elements:
            for c in F.elements:
                if a != F.zero:
                    # d is forced: ad - bc = 1
                    d = F.mul(F.inv(a), F.add(F.one, F.mul(b, c)))
                    elems.append((a, b, c, d))
                elif b != F.zero:
                    c_forced = F.neg(F.inv(b))
                    if c == c_forced:
                        for d in F.elements:
                            elems.append((a, b, c, d))
    ident = (F.one, F.zero, F.zero, F.one)

    def compose(m1, m2):
        a1, b1, c1, d1 = m1
        a2, b2, c2, d2 = m2
        return (
            F.add(F.mul(a1, a2), F.mul(b1, c2)),
            F.add(F.mul(a1, b2), F.mul(b1, d2)),
            F.add(F.mul(c1, a2), F.mul(d1, c2)),
            F.add(F.mul(c1, b2), F.mul(d1, d2)),
        )

    def inverse(m):
        a, b, c, d = m
        return (d, F.neg(b), F.neg(c), a)

    elems.sort(key=lambda m: tuple(F.index(x) for x in m))
    G = Group(elems, compose, ident, f"sl2({q})", inverse)
    if G.order != q**3 - q:
        raise SpecError("SL(2,q) enumeration produced the wrong order")
    return G


def _bfs_closure_elements(gens, compose, identity, cap):
    seen = {identity}
    out = [identity]
    i = 0
    while i < len(out):
        cur = out[i]
        i += 1
        for g in gens:
            nxt = compose(cur, g)
            if nxt not in seen:
                if len(seen) >= cap:
                    raise SpecError("generator closure exceeds cap")
                seen.add(nxt)
                out.append(nxt)
    return out


def cayley_table_group(rows: list[list[int]], label: str = "table") -> Group:
    """Group from an explicit multiplication table; the axioms are verified."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise SpecError("Cayley table must be square")
    if any(not 0 <= x < n for r in rows for x in r):
        raise SpecError("Cayley table entries out of range")
    identity = None
    for e in range(n):
        if all(rows[e][g] == g and rows[g][e] == g for g in range(n)):
            identity = e
            break
    if identity is None:
        raise SpecError("Cayley table has no identity")
    table = [list(r) for r in rows]

    G = Group(range(n), lambda a, b: table[a][b], identity, label)
    G.validate()
    return G


def permutation_group(perms, label: str = "perm", cap: int = MAX_GROUP_ORDER) -> Group:
    """Group generated by permutations given as 0-based image tuples."""
    perms = [tuple(p) for p in perms]
    if not perms:
        raise SpecError("at least one generator required")
    degree = len(perms[0])
    if any(len(p) != degree or sorted(p) != list(range(degree)) for p in perms):
        raise SpecError("generators must be permutations of a common degree")
    identity = tuple(range(degree))
    elems = _bfs_closure_elements(perms, _perm_compose, identity, cap)
    return Group(elems, _perm_compose, identity, label, _perm_inverse)


def parse_permutation_line(line: str, degree: int | None = None) -> tuple[int, ...]:
    """Parse cycle notation like "(1,2)(3,4)" with 1-based points."""
    text = line.strip().replace(" ", "")
    if not re.fullmatch(r"(\((\d+)(,\d+)*\))+|\(\)", text):
        raise SpecError(f"cannot parse permutation {line!r}")
    cycles = [
        [int(x) for x in grp.split(",")]
        for grp in re.findall(r"\(([^()]*)\)", text)
        if grp
    ]
    points = [x for cyc in cycles for x in cyc]
    if any(x < 1 for x in points):
        raise SpecError("points are 1-based")
    if len(points) != len(set(points)):
        raise SpecError(f"repeated point in {line!r}")
    deg = degree if degree is not None else (max(points) if points else 1)
    img = list(range(deg))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def _parse_perm_file(text: str) -> list[tuple[int, ...]]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise SpecError("no generators in permutation file")
    raw = [parse_permutation_line(ln) for ln in lines]
    degree = max(len(p) for p in raw)
    return [p + tuple(range(len(p), degree)) for p in raw]


def _parse_cayley_file(text: str) -> list[list[int]]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise SpecError("empty Cayley table file")
    n = int(lines[0])
    if len(lines) != n + 1:
        raise SpecError("Cayley table file must have n rows after the header")
    return [[int(x) for x in ln.split()] for ln in lines[1:]]


# -- descriptor mini-language --------------------------------------------------


def _split_args(text: str) -> list[str]:
    """Split a comma-separated argument list, respecting nested parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def make_group(spec: str) -> Group:
    """Build a group from a descriptor.

    Accepted forms (colon and parenthesis syntax are interchangeable):
    cyclic:n, dihedral:n, genq:n, q8, v4, sym:n, alt:n, elab:p,k, modp3:p,
    psl2:q, sl2:q, prod(a,b), file:path (Cayley table), perm:path
    (one permutation per line in cycle notation).
    """
    spec = spec.strip()
    if spec == "q8":
        return generalized_quaternion_group(8)
    if spec == "v4":
        return elementary_abelian_group(2, 2)
    m = re.fullmatch(r"([a-z_0-9]+)\((.*)\)", spec)
    if m:
        name, argtext = m.group(1), m.group(2)
    elif ":" in spec:
        name, argtext = spec.split(":", 1)
    else:
        raise SpecError(f"cannot parse group descriptor {spec!r}")
    name = name.strip()

    if name == "file":
        with open(argtext) as fh:
            return cayley_table_group(_parse_cayley_file(fh.read()), label=f"file({argtext})")
    if name == "perm":
        with open(argtext) as fh:
            return permutation_group(_parse_perm_file(fh.read()), label=f"perm({argtext})")
    if name == "prod":
        args = _split_args(argtext)
        if len(args) != 2:
            raise SpecError("prod takes exactly two factors")
        return direct_product(make_group(args[0]), make_group(args[1]))

    try:
        args = [int(a) for a in _split_args(argtext)]
    except ValueError:
        raise SpecError(f"non-integer argument in {spec!r}") from None
    single = {
        "cyclic": cyclic_group,
        "dihedral": dihedral_group,
        "genq": generalized_quaternion_group,
        "sym": symmetric_group,
        "alt": alternating_group,
        "modp3": modular_p3_group,
        "psl2": psl2_group,
        "sl2": sl2_group,
    }
    if name in single:
        if len(args) != 1:
            raise SpecError(f"{name} takes one argument")
        return single[name](args[0])
    if name == "elab":
        if len(args) != 2:
            raise SpecError("elab takes two arguments: p, k")
        return elementary_abelian_group(args[0], args[1])
    raise SpecError(f"unknown group constructor {name!r}")
