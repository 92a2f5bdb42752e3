"""
Modèle standard de A_{k-1} dans Z^k : poids fondamentaux, vecteur de Weyl,
élément de Coxeter et décomposition d'un ensemble de racines en copies du
diagramme affine.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from ..core.errors import DecompositionError, InputError
from ..exact.matrix import Number, Vector, dot, frac
from ..utils.logger import get_logger
from .core import Lattice
from .isometry import LatticeIsometry, cyclic_shift_matrix

logger = get_logger(__name__)


def _unit(k: int, i: int) -> List[Fraction]:
    v = [Fraction(0)] * k
    v[i] = Fraction(1)
    return v


def simple_roots(k: int) -> List[Vector]:
    """alpha_i = v_i - v_{i+1}, i = 1..k-1."""
    return [tuple(a - b for a, b in zip(_unit(k, i), _unit(k, i + 1))) for i in range(k - 1)]


def root_system(k: int) -> List[Vector]:
    """All k(k-1) roots v_i - v_j of A_{k-1}, sorted."""
    roots = []
    for i in range(k):
        for j in range(k):
            if i != j:
                roots.append(tuple(a - b for a, b in zip(_unit(k, i), _unit(k, j))))
    return sorted(roots)


@dataclass(frozen=True)
class TypeALattice:
    """A_{k-1} = {a in Z^k : Σ a_i = 0} with its standard base."""

    k: int
    lattice: Lattice = field(repr=False)
    simple_roots: Tuple[Vector, ...] = field(repr=False)

    @property
    def roots(self) -> List[Vector]:
        return root_system(self.k)


@lru_cache(maxsize=None)
def type_a(k: int) -> TypeALattice:
    if k < 2:
        raise InputError(f"A_(k-1) needs k >= 2, got {k}")
    base = tuple(simple_roots(k))
    return TypeALattice(k, Lattice.from_basis(base, name=f"A{k - 1}"), base)


def fundamental_weight(k: int, j: int) -> Vector:
    """lambda_j = ((k-j)/k, ..., (k-j)/k, -j/k, ..., -j/k) with j leading entries."""
    if not 1 <= j <= k - 1:
        raise InputError(f"fundamental weight index {j} outside 1..{k - 1}")
    return tuple(Fraction(k - j, k) if i < j else Fraction(-j, k) for i in range(k))


def weight_or_zero(k: int, j: int) -> Vector:
    """lambda_j for j mod k, with lambda_0 = 0."""
    j %= k
    if j == 0:
        return tuple(Fraction(0) for _ in range(k))
    return fundamental_weight(k, j)


def weyl_vector(k: int) -> Vector:
    """rho = (1/2)(k-1, k-3, ..., -(k-1))."""
    if k < 2:
        raise InputError(f"Weyl vector needs k >= 2, got {k}")
    return tuple(Fraction(k - 1 - 2 * i, 2) for i in range(k))


def coxeter_isometry(k: int, power: int = 1) -> LatticeIsometry:
    """g_Delta^power: the cyclic coordinate shift restricted to A_{k-1}."""
    return LatticeIsometry.from_ambient(type_a(k).lattice, cyclic_shift_matrix(k, power))


def check_rho_pairing(k: int) -> bool:
    """(beta|rho) is nonzero mod k, and 1 <= |(beta|rho)| <= k-1, for every root beta."""
    rho = weyl_vector(k)
    for beta in root_system(k):
        value = dot(beta, rho)
        if value.denominator != 1 or value % k == 0 or not 1 <= abs(value) <= k - 1:
            logger.warning(f"rho pairing fails for k={k} at {beta}: {value}")
            return False
    return True


@dataclass(frozen=True)
class RootComponent:
    """One copy of the extended A_{p-1} diagram: base path plus the negated highest root."""

    base: Tuple[Vector, ...]
    negated_highest: Vector

    @property
    def cycle(self) -> Tuple[Vector, ...]:
        return self.base + (self.negated_highest,)


@dataclass(frozen=True)
class RootDecomposition:
    components: Tuple[RootComponent, ...]
    leftover: Tuple[Vector, ...]

    @property
    def t(self) -> int:
        return len(self.components)


def _canonical_cycle(vectors: Sequence[Vector], adjacency: Dict[int, List[int]], members: Sequence[int]) -> List[Vector]:
    start = min(members, key=lambda i: vectors[i])
    a, b = adjacency[start]
    prev, cur = start, (a if vectors[a] < vectors[b] else b)
    walk = [start]
    while cur != start:
        walk.append(cur)
        nxt = [v for v in adjacency[cur] if v != prev]
        prev, cur = cur, nxt[0]
    return [vectors[i] for i in walk]


def _decompose_coset(vecs: List[Vector], ip: Dict[Tuple[int, int], Fraction], p: int) -> RootDecomposition:
    graph = nx.Graph()
    graph.add_nodes_from(range(len(vecs)))
    for (i, j), value in ip.items():
        if value == -1:
            graph.add_edge(i, j)
        elif value not in (0,):
            raise DecompositionError(f"negative-norm relation: inner product {value} between {i} and {j}")
    components: List[RootComponent] = []
    leftover: List[Vector] = []
    for members in nx.connected_components(graph):
        members = sorted(members)
        sub = graph.subgraph(members)
        degrees = [d for _, d in sub.degree()]
        if max(degrees, default=0) > 2:
            raise DecompositionError("negative-norm relation: branching vertex in the -1 graph")
        if nx.is_tree(sub):
            if len(members) >= p:
                raise DecompositionError("negative-norm relation: path longer than the A_(p-1) diagram")
            leftover.extend(vecs[i] for i in members)
            continue
        if len(members) != p:
            raise DecompositionError(f"negative-norm relation: cycle of length {len(members)} for p={p}")
        total = [sum(col) for col in zip(*(vecs[i] for i in members))]
        if any(total):
            raise DecompositionError("affine cycle does not sum to zero")
        adjacency = {i: sorted(sub.neighbors(i)) for i in members}
        cycle = _canonical_cycle(vecs, adjacency, members)
        components.append(RootComponent(tuple(cycle[:-1]), cycle[-1]))
    components.sort(key=lambda c: c.cycle[0])
    return RootDecomposition(tuple(components), tuple(sorted(leftover)))


def _decompose_full(vecs: List[Vector], ip: Dict[Tuple[int, int], Fraction], p: int, s: Fraction) -> RootDecomposition:
    index = {v: i for i, v in enumerate(vecs)}
    if any(tuple(-x for x in v) not in index for v in vecs):
        raise DecompositionError("root set with +1 relations must be closed under negation")
    graph = nx.Graph()
    graph.add_nodes_from(range(len(vecs)))
    graph.add_edges_from(pair for pair, value in ip.items() if value != 0)
    components: List[RootComponent] = []
    leftover: List[Vector] = []
    for members in nx.connected_components(graph):
        comp = [vecs[i] for i in sorted(members)]
        positive = [v for v in comp if next(x for x in v if x != 0) > 0]
        pos_set = set(positive)
        simple = [
            v
            for v in positive
            if not any(
                tuple(a - b for a, b in zip(v, u)) in pos_set for u in positive if u != v
            )
        ]
        path = nx.Graph()
        path.add_nodes_from(range(len(simple)))
        for i in range(len(simple)):
            for j in range(i + 1, len(simple)):
                value = ip[tuple(sorted((index[simple[i]], index[simple[j]])))]
                if value == -1:
                    path.add_edge(i, j)
                elif value != 0:
                    raise DecompositionError("negative-norm relation among simple roots")
        if not nx.is_tree(path) or max((d for _, d in path.degree()), default=0) > 2:
            raise DecompositionError("negative-norm relation: simple roots do not form a type A path")
        if len(comp) != len(simple) * (len(simple) + 1) or len(simple) > p - 1:
            raise DecompositionError("component is not a full type A root system of rank <= p-1")
        if len(simple) < p - 1:
            leftover.extend(comp)
            continue
        theta = tuple(sum(col) for col in zip(*simple))
        cycle_vecs = simple + [tuple(-x for x in theta)]
        if p == 2:
            components.append(RootComponent((cycle_vecs[0],), cycle_vecs[1]))
            continue
        adjacency: Dict[int, List[int]] = {i: [] for i in range(p)}
        for i in range(p):
            for j in range(i + 1, p):
                if s * dot(cycle_vecs[i], cycle_vecs[j]) == -1:
                    adjacency[i].append(j)
                    adjacency[j].append(i)
        cycle = _canonical_cycle(cycle_vecs, adjacency, list(range(p)))
        components.append(RootComponent(tuple(cycle[:-1]), cycle[-1]))
    components.sort(key=lambda c: c.cycle[0])
    return RootDecomposition(tuple(components), tuple(sorted(leftover)))



def decompose_root_set(roots: Sequence[Sequence[Number]], p: int, inner_scale: Number = 1) -> RootDecomposition:
    """
    Split norm-2 vectors into copies of the extended A_{p-1} diagram.

    Sets without +1 relations (the roots of one coset) are read as disjoint
    p-cycles of -1 edges; sets with +1 relations must be full root systems
    and are reduced to a base plus the negated highest root per component.
    """
    s = frac(inner_scale)
    vecs = [tuple(frac(x) for x in r) for r in roots]
    if len(set(vecs)) != len(vecs):
        raise DecompositionError("duplicate vectors in root set")
    for v in vecs:
        if s * dot(v, v) != 2:
            raise DecompositionError(f"vector {[str(x) for x in v]} does not have norm 2")
    ip: Dict[Tuple[int, int], Fraction] = {}
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            value = s * dot(vecs[i], vecs[j])
            if value not in (-2, -1, 0, 1, 2):
                raise DecompositionError(f"inner product {value} is not in {{0, ±1, ±2}}")
            ip[(i, j)] = value
    if any(value == 1 for value in ip.values()):
        result = _decompose_full(vecs, ip, p, s)
    else:
        result = _decompose_coset(vecs, ip, p)
    logger.debug(f"decomposed {len(vecs)} roots into {result.t} components, {len(result.leftover)} leftover")
    return result
