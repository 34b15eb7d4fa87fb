"""Canonical stores for the current clique enumeration.

Cliques are held as ascending member tuples. Every store keeps three
aligned views: id -> members, vertex -> ids of cliques containing it, and
member-tuple -> id. Ids are never reused within one store lifetime, so
audit records stay unambiguous across history.

The text serialization (one clique per line, members ascending,
space-separated, lines sorted as integer sequences) is the comparison unit
for all ground-truth checks.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DuplicateCliqueError, FormatError, UnknownCliqueError, UnknownVertexError
from .graph import Graph, is_clique
from .oracle import Clique, enumerate_maximal_cliques, enumerate_maximal_k_cliques


def canonical_key(members: Iterable[int]) -> Clique:
    """Ascending member tuple; equal member sets map to equal keys."""
    key = tuple(sorted(members))
    if not key:
        raise ValueError("a clique cannot be empty")
    for a, b in zip(key, key[1:]):
        if a == b:
            raise ValueError(f"duplicate member {a}")
    return key


def format_enumeration(cliques: Iterable[Sequence[int]]) -> str:
    """Serialize a clique collection in the canonical text format."""
    lines = sorted(canonical_key(c) for c in cliques)
    return "".join(" ".join(map(str, c)) + "\n" for c in lines)


def parse_enumeration(text: str) -> list[Clique]:
    """Parse the canonical text format back into member tuples.

    Members on each line must be strictly ascending; line order is not
    required (the canonical order is restored by the caller via
    :func:`format_enumeration`).
    """
    cliques: list[Clique] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            members = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise FormatError(f"line {lineno}: members must be integers") from None
        if any(a >= b for a, b in zip(members, members[1:])):
            raise FormatError(f"line {lineno}: members must be strictly ascending")
        if any(m < 0 for m in members):
            raise FormatError(f"line {lineno}: members must be non-negative")
        cliques.append(members)
    return cliques


class _CliqueStore:
    """Shared id/membership bookkeeping for the maximal and k-bounded stores."""

    __slots__ = ("_store", "_by_vertex", "_by_key", "_next_id")

    def __init__(self) -> None:
        self._store: dict[int, Clique] = {}
        self._by_vertex: dict[int, set[int]] = {}
        self._by_key: dict[Clique, int] = {}
        self._next_id = 0

    def __len__(self) -> int:
        return len(self._store)

    def ids(self) -> list[int]:
        return sorted(self._store)

    def members(self, clique_id: int) -> Clique:
        try:
            return self._store[clique_id]
        except KeyError:
            raise UnknownCliqueError(clique_id) from None

    def id_of(self, members: Iterable[int]) -> int | None:
        """Id of the stored clique with this member set, or None."""
        return self._by_key.get(canonical_key(members))

    def cliques(self) -> list[Clique]:
        """All stored member tuples in canonical order."""
        return sorted(self._store.values())

    def knows_vertex(self, u: int) -> bool:
        return u in self._by_vertex

    def vertices(self) -> list[int]:
        return sorted(self._by_vertex)

    def count_containing(self, u: int) -> int:
        try:
            return len(self._by_vertex[u])
        except KeyError:
            raise UnknownVertexError(u) from None

    def cliques_containing(self, u: int) -> list[int]:
        """Ids of stored cliques containing u, ascending."""
        try:
            return sorted(self._by_vertex[u])
        except KeyError:
            raise UnknownVertexError(u) from None

    def apply_delta(
        self, add: Iterable[Sequence[int]], remove: Iterable[int]
    ) -> list[int]:
        """Remove cliques by id, then add new member sets; returns new ids.

        Removal runs first so that additions are checked for duplication
        against the post-removal store. Not transactional: a duplicate add
        raises after earlier additions have landed.
        """
        remove_ids = list(remove)
        for clique_id in remove_ids:
            if clique_id not in self._store:
                raise UnknownCliqueError(clique_id)
        for clique_id in remove_ids:
            members = self._store.pop(clique_id)
            del self._by_key[members]
            for u in members:
                self._by_vertex[u].discard(clique_id)
        new_ids = []
        for members in add:
            new_ids.append(self._insert(canonical_key(members)))
        return new_ids

    def _insert(self, key: Clique) -> int:
        if key in self._by_key:
            raise DuplicateCliqueError(f"clique {key} is already stored")
        clique_id = self._next_id
        self._next_id += 1
        self._store[clique_id] = key
        self._by_key[key] = clique_id
        for u in key:
            self._by_vertex.setdefault(u, set()).add(clique_id)
        return clique_id

    def _register_vertex(self, u: int) -> None:
        self._by_vertex.setdefault(u, set())

    def _copy_into(self, other: "_CliqueStore") -> None:
        other._store = dict(self._store)
        other._by_vertex = {u: set(ids) for u, ids in self._by_vertex.items()}
        other._by_key = dict(self._by_key)
        other._next_id = self._next_id

    def enumeration_text(self) -> str:
        return format_enumeration(self._store.values())

    def _check_structure(self, g: Graph) -> str | None:
        for clique_id, members in self._store.items():
            if self._by_key.get(members) != clique_id:
                return f"key-index mismatch for clique {clique_id} {members}"
        if len(self._by_key) != len(self._store):
            return "duplicate member sets in store"
        expected: dict[int, set[int]] = {}
        for clique_id, members in self._store.items():
            for u in members:
                expected.setdefault(u, set()).add(clique_id)
        for u, ids in expected.items():
            if self._by_vertex.get(u) != ids:
                return f"containment-index mismatch for vertex {u}"
        for u, ids in self._by_vertex.items():
            if ids and u not in expected:
                return f"containment-index mismatch for vertex {u}"
        return None

    def _check_coverage(self, g: Graph) -> str | None:
        for u in g.vertices():
            if not self._by_vertex.get(u):
                return f"vertex {u} not covered by any clique"
        return None


class MaximalCliqueIndex(_CliqueStore):
    """Store of the maximal cliques of the associated graph."""

    @classmethod
    def bootstrap(cls, g: Graph) -> "MaximalCliqueIndex":
        """Index holding exactly the maximal cliques of g (singletons for
        isolated vertices)."""
        ix = cls()
        for u in g.vertices():
            ix._register_vertex(u)
        for members in enumerate_maximal_cliques(g):
            ix._insert(members)
        return ix

    @classmethod
    def from_cliques(cls, cliques: Iterable[Sequence[int]]) -> "MaximalCliqueIndex":
        """Index a caller-supplied enumeration without verification."""
        ix = cls()
        for members in cliques:
            ix._insert(canonical_key(members))
        return ix

    def copy(self) -> "MaximalCliqueIndex":
        other = MaximalCliqueIndex()
        self._copy_into(other)
        return other

    def check_consistency(self, g: Graph) -> str | None:
        """First invariant violation against g, or None when consistent."""
        problem = self._check_structure(g)
        if problem is not None:
            return problem
        from .dynamic import is_maximal_in

        for members in self._store.values():
            if not is_clique(g, members):
                return f"not a clique: {members}"
            if not is_maximal_in(g, members):
                return f"non-maximal clique: {members}"
        return self._check_coverage(g)


class KCliqueIndex(_CliqueStore):
    """Store of the maximal k-cliques: cliques of size exactly k plus
    maximal cliques of size below k."""

    __slots__ = ("k",)

    def __init__(self, k: int) -> None:
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        super().__init__()
        self.k = k

    @classmethod
    def bootstrap(cls, g: Graph, k: int) -> "KCliqueIndex":
        ix = cls(k)
        for u in g.vertices():
            ix._register_vertex(u)
        for members in enumerate_maximal_k_cliques(g, k):
            ix._insert(members)
        return ix

    @classmethod
    def from_cliques(cls, cliques: Iterable[Sequence[int]], k: int) -> "KCliqueIndex":
        ix = cls(k)
        for members in cliques:
            ix._insert(canonical_key(members))
        return ix

    def copy(self) -> "KCliqueIndex":
        other = KCliqueIndex(self.k)
        self._copy_into(other)
        return other

    def check_consistency(self, g: Graph) -> str | None:
        problem = self._check_structure(g)
        if problem is not None:
            return problem
        from .dynamic import is_maximal_in

        for members in self._store.values():
            if len(members) > self.k:
                return f"oversized entry: {members}"
            if not is_clique(g, members):
                return f"not a clique: {members}"
            if len(members) < self.k and not is_maximal_in(g, members):
                return f"non-maximal clique below size bound: {members}"
        return self._check_coverage(g)
