"""
Module deciding whether a unit of order p*r with given multiplicities can be
conjugate to a unit of a block of defect 1.

The block is described by its Brauer tree. To every ordinary character chi and
p'-eigenvalue xi_j the decision attaches a module M(chi, j) of a cyclic group of
order p, and to every Brauer character psi a module S(psi, j). A unit exists if
and only if these can be chosen such that

1. M and S are constant on Galois orbits of the pairs (chi, j) and (psi, j),
2. M(chi, j) has a filtration with factors the S(psi, j) of the edges at chi,
3. M(chi, j) has a filtration with factors I_1^mu(xi_j) and I_m^mu(xi_j zeta_i)
   for the orbit representatives zeta_i of chi.

Modules are partitions (see `latticeunits.tableaux`). The search enumerates
edge modules first and checks vertex modules as soon as their edges are fixed.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from sympy import isprime
from sympy.ntheory.modular import crt

from latticeunits.bounds import Bound, eigen_bounds, gamma_bounds, satisfies
from latticeunits.brauer import check_block, edge_factors, signs_from_convention
from latticeunits.cyclotomic import (
    GaloisElement,
    frobenius_element,
    inertia_generator,
    inertia_group,
    orbits,
)
from latticeunits.errors import (
    BrauerTreeError,
    DocumentValidationError,
    HeLPInfeasibleError,
    LatticeUnitsError,
    RepresentativeChoiceError,
    UnsupportedBlockError,
)
from latticeunits.grouprep import (
    MultiplicityGrid,
    check_candidate,
    galois_character,
    galois_fixes,
    multiplicity_grid,
)
from latticeunits.models import BrauerTree, CharacterTable, UnitCandidate, Verdict
from latticeunits.tableaux import (
    Partition,
    canonical,
    filtration_exists,
    partitions,
    size,
    uniserial_sum,
)

logger = logging.getLogger(__name__)

Pair = tuple[str, int]


def _combine(moduli: list[int], residues: list[int]) -> int:
    moduli_used = [x for x in moduli if x > 1]
    if len(moduli_used) == 0:
        return 0
    residues_used = [r for x, r in zip(moduli, residues) if x > 1]
    return int(crt(moduli_used, residues_used)[0])


@dataclass(frozen=True)
class CharacterData:
    """
    Local data of an ordinary character at p
    """

    character: str
    m: int
    e: int
    orbits: tuple[tuple[int, ...], ...]

    @property
    def representatives(self) -> tuple[int, ...]:
        """
        Least exponent of each orbit

        :return: exponents i with zeta_i = zeta^i
        """
        return tuple(x[0] for x in self.orbits)


def compute_m_of_chi(table: CharacterTable, char_id: str, p: int) -> CharacterData:
    """
    Relative degree m = (K(chi, zeta) : K(chi)) over the maximal unramified
    extension K of Q_p, e = (p-1)/m and the orbits of the primitive p-th roots
    of unity over K(chi).

    :param table: character table
    :param char_id: character id
    :param p: odd prime
    :return: CharacterData
    """
    if p == 2 or not isprime(p):
        err = f"p must be an odd prime, got {p}"
        logger.error(err)
        raise UnsupportedBlockError(err)
    if table.exponent % p != 0:
        err = f"{p} does not divide the exponent of {table.group}"
        logger.error(err)
        raise UnsupportedBlockError(err)
    if table.exponent % (p**2) == 0:
        err = f"{table.group} has elements of order {p**2}"
        logger.error(err)
        raise UnsupportedBlockError(err)

    # the inertia group acts on the p-th roots of unity through its residue mod p
    stabilizer = sorted(
        g.residue % p
        for g in inertia_group(table.exponent, p)
        if galois_fixes(table, char_id, g.residue)
    )
    m = len(stabilizer)
    orbit_list = orbits([GaloisElement(p, s) for s in stabilizer], range(1, p))
    return CharacterData(
        character=char_id,
        m=m,
        e=(p - 1) // m,
        orbits=tuple(orbit_list),
    )


def eigen_filtration_exists(
    module: Partition, mu0: int, mus: Sequence[int], m: int, p: int
) -> bool:
    """
    Whether a module has a filtration with factors I_1^mu0 and I_m^mu_i

    :param module: module
    :param mu0: multiplicity of the trivial layer
    :param mus: multiplicities of the layers of width m
    :param m: width
    :param p: prime
    :return: boolean
    """
    module = canonical(module)
    if len(module) > 0 and module[0] > p:
        return False
    if size(module) != mu0 + m * sum(mus):
        return False
    factors = [uniserial_sum(1, mu0)] + [uniserial_sum(m, a) for a in mus]
    return filtration_exists(module, factors)


def tree_filtration_exists(module: Partition, factors: Sequence[Partition]) -> bool:
    """
    Whether a vertex module has a filtration by the modules of its edges. The
    order of the edges around the vertex does not matter for groups of order p.

    :param module: vertex module
    :param factors: edge modules in cyclic order
    :return: boolean
    """
    return filtration_exists(module, factors)


@dataclass(frozen=True)
class GaloisTie:
    """
    A Galois automorphism restricted to a block: its action on the block's
    characters and on the exponents j of the p'-eigenvalues
    """

    images: tuple[tuple[str, str], ...]
    residue: int

    def image(self, char_id: str) -> str:
        """
        Image of a character

        :param char_id: character id
        :return: character id
        """
        return dict(self.images)[char_id]


@dataclass
class Instance:
    """
    A decision problem: a block, a prime and the multiplicities of a unit of
    order p*r at the characters of the block
    """

    table: CharacterTable
    tree: BrauerTree
    p: int
    r: int
    grids: dict[str, tuple[int, ...]]
    data: dict[str, CharacterData]
    signs: dict[str, int]
    ties: list[GaloisTie] = field(default_factory=list)
    unit: Optional[UnitCandidate] = None

    @property
    def n(self) -> int:
        """
        Order of the unit

        :return: p * r
        """
        return self.p * self.r

    @property
    def block(self) -> str:
        """
        Name of the block

        :return: name
        """
        return self.tree.block

    def characters(self) -> list[str]:
        """
        Characters of the block, in vertex order

        :return: list of ids
        """
        return self.tree.characters()

    def exponent(self, j: int, i: int) -> int:
        """
        Exponent k of zeta_n^k = xi^j * zeta^i

        :param j: exponent modulo r
        :param i: exponent modulo p
        :return: k modulo n
        """
        if self.r == 1:
            return i % self.p
        return _combine([self.r, self.p], [j % self.r, i % self.p])

    def mu(self, char_id: str, j: int, i: int = 0) -> int:
        """
        Multiplicity of xi_j * zeta^i as eigenvalue at a character

        :param char_id: character id
        :param j: exponent modulo r
        :param i: exponent modulo p
        :return: multiplicity
        """
        return self.grids[char_id][self.exponent(j, i)]

    def layers(self, char_id: str, j: int) -> tuple[int, list[int]]:
        """
        Multiplicities mu(xi_j) and mu(xi_j zeta_i) for the orbit representatives

        :param char_id: character id
        :param j: exponent modulo r
        :return: (mu0, list of mu_i)
        """
        reps = self.data[char_id].representatives
        return self.mu(char_id, j), [self.mu(char_id, j, i) for i in reps]

    def dimension(self, char_id: str, j: int) -> int:
        """
        Dimension of the xi_j-part of a lattice affording the character

        :param char_id: character id
        :param j: exponent modulo r
        :return: dimension
        """
        return sum(self.mu(char_id, j, i) for i in range(self.p))


def _galois_ties(
    table: CharacterTable, tree: BrauerTree, p: int, r: int
) -> list[GaloisTie]:
    """
    The automorphisms of Q_p(zeta_E) which map the block to itself, with E the
    group exponent
    """
    generators = [
        g.residue
        for g in [
            inertia_generator(table.exponent, p),
            frobenius_element(table.exponent, p),
        ]
    ]

    ids = table.character_ids()
    position = table.character_positions
    permutations = [
        tuple(position[galois_character(table, x, c)] for x in ids) for c in generators
    ]
    moves = list(zip(permutations, [c % r if r > 1 else 0 for c in generators]))

    identity = (tuple(range(len(ids))), 1 % r)
    seen = {identity}
    queue = [identity]
    while queue:
        perm, residue = queue.pop()
        for move_perm, move_residue in moves:
            element = (
                tuple(move_perm[x] for x in perm),
                (residue * move_residue) % r if r > 1 else 0,
            )
            if element not in seen:
                seen.add(element)
                queue.append(element)

    block_chars = tree.characters()
    block_positions = {position[c] for c in block_chars}
    ties = []
    for perm, residue in sorted(seen):
        if {perm[position[c]] for c in block_chars} != block_positions:
            continue
        ties.append(
            GaloisTie(
                images=tuple((c, ids[perm[position[c]]]) for c in block_chars),
                residue=residue,
            )
        )
    logger.debug(
        f"Block {tree.block} is stabilised by {len(ties)} of {len(seen)} "
        f"automorphisms"
    )
    return ties


def _integral_grid(grid: MultiplicityGrid) -> tuple[int, ...]:
    if not (grid.is_integral() and grid.is_nonnegative()):
        bad = {
            k: str(v)
            for k, v in enumerate(grid.values)
            if v.denominator != 1 or v < 0
        }
        err = f"Multiplicities of {grid.character} are not non-negative integers: {bad}"
        logger.error(err)
        raise HeLPInfeasibleError(err)
    return grid.as_ints()


def build_instance(
    table: CharacterTable,
    tree: BrauerTree,
    unit: Optional[UnitCandidate] = None,
    grids: Optional[dict[str, MultiplicityGrid]] = None,
    skewfield_free: bool = True,
) -> Instance:
    """
    Check the input and derive everything the search needs: multiplicity grids,
    local character data, signs and Galois ties.

    :param table: character table
    :param tree: Brauer tree of a block of defect 1
    :param unit: candidate unit (used to compute the grids)
    :param grids: multiplicity grids per block character, instead of a unit
    :param skewfield_free: whether the block avoids non-commutative skewfields
    :return: Instance
    """
    if not skewfield_free:
        err = f"Block {tree.block} involves skewfields, which are not supported"
        logger.error(err)
        raise UnsupportedBlockError(err)

    p = tree.p
    if p == 2 or not isprime(p):
        err = f"p must be an odd prime, got {p}"
        logger.error(err)
        raise UnsupportedBlockError(err)
    if table.order % p != 0 or table.order % (p**2) == 0:
        err = f"Blocks of {table.group} at p={p} do not have defect 1"
        logger.error(err)
        raise UnsupportedBlockError(err)

    check_block(tree, table)

    if unit is None and not grids:
        err = "An instance needs a unit or multiplicity grids"
        logger.error(err)
        raise DocumentValidationError(err)

    if unit is not None:
        check_candidate(table, unit)
        n = unit.order
    else:
        n = next(iter(grids.values())).order

    if n % p != 0:
        err = f"Unit order {n} is not divisible by p={p}"
        logger.error(err)
        raise UnsupportedBlockError(err)
    r = n // p
    if r % p == 0:
        err = f"Unit order {n} is divisible by p^2 = {p**2}"
        logger.error(err)
        raise UnsupportedBlockError(err)

    int_grids = {}
    for char_id in tree.characters():
        if grids is not None:
            if char_id not in grids:
                err = f"No multiplicity grid for {char_id}"
                logger.error(err)
                raise DocumentValidationError(err)
            grid = grids[char_id]
            if grid.order != n:
                err = f"Grid of {char_id} has order {grid.order}, expected {n}"
                logger.error(err)
                raise DocumentValidationError(err)
        else:
            grid = multiplicity_grid(table, char_id, unit)
        int_grids[char_id] = _integral_grid(grid)
        if sum(int_grids[char_id]) != table.degree(char_id):
            err = (
                f"Multiplicities of {char_id} sum to {sum(int_grids[char_id])}, "
                f"not to the degree {table.degree(char_id)}"
            )
            logger.error(err)
            raise HeLPInfeasibleError(err)

    instance = Instance(
        table=table,
        tree=tree,
        p=p,
        r=r,
        grids=int_grids,
        data={c: compute_m_of_chi(table, c, p) for c in tree.characters()},
        signs=signs_from_convention(tree),
        ties=_galois_ties(table, tree, p, r),
        unit=unit,
    )
    check_representatives(instance)
    return instance


def check_representatives(instance: Instance):
    """
    Ensure the multiplicities are constant on every orbit of p-th roots of unity
    used for the layers of the vertex modules

    :param instance: instance
    :return: None
    """
    for char_id, data in instance.data.items():
        for j in range(instance.r):
            for orbit in data.orbits:
                values = {instance.mu(char_id, j, i) for i in orbit}
                if len(values) > 1:
                    err = (
                        f"Multiplicities of {char_id} at j={j} take the values "
                        f"{sorted(values)} on the orbit {orbit}"
                    )
                    logger.error(err)
                    raise RepresentativeChoiceError(err)


@dataclass
class Assignment:
    """
    Modules for all pairs: vertex modules keyed by (character, j) and edge
    modules keyed by (Brauer character, j)
    """

    modules: dict[Pair, Partition] = field(default_factory=dict)
    edges: dict[Pair, Partition] = field(default_factory=dict)

    def witness(self) -> dict[str, list[int]]:
        """
        The assignment in partition-array form

        :return: dictionary keyed 'M|chi|j' and 'S|psi|j'
        """
        result = {}
        for (char_id, j), module in sorted(self.modules.items()):
            result[f"M|{char_id}|{j}"] = list(module)
        for (brauer, j), module in sorted(self.edges.items()):
            result[f"S|{brauer}|{j}"] = list(module)
        return result

    @classmethod
    def from_witness(cls, witness: dict[str, Iterable[int]]) -> "Assignment":
        """
        Read an assignment from partition-array form

        :param witness: dictionary keyed 'M|chi|j' and 'S|psi|j'
        :return: Assignment
        """
        assignment = cls()
        for key, parts in witness.items():
            fields = key.split("|")
            if (
                len(fields) != 3
                or fields[0] not in ("M", "S")
                or not fields[2].isdigit()
            ):
                err = f"Witness key '{key}' is not of the form 'M|chi|j' or 'S|psi|j'"
                logger.error(err)
                raise DocumentValidationError(err)
            kind, name, j = fields
            target = assignment.modules if kind == "M" else assignment.edges
            target[(name, int(j))] = canonical(parts)
        return assignment


def _edge_image(tree: BrauerTree, tie: GaloisTie, edge_id: str) -> str:
    ends = tree.edge_lookup[edge_id].ends
    images = [
        tree.vertex_of_character(tie.image(tree.vertex_lookup[v].chars[0]))
        for v in ends
    ]
    image = tree.edge_between(*images)
    if image is None:
        err = (
            f"Galois action does not map edge {edge_id} of block {tree.block} "
            f"to an edge"
        )
        logger.error(err)
        raise BrauerTreeError(err)
    return image


def verify_assignment(instance: Instance, assignment: Assignment) -> list[str]:
    """
    Check an assignment against all conditions, independently of the search

    :param instance: instance
    :param assignment: assignment
    :return: list of violated conditions (empty if the assignment is valid)
    """
    tree, p = instance.tree, instance.p
    problems = []

    for edge in tree.edges:
        for j in range(instance.r):
            module = assignment.edges.get((edge.brauer, j))
            if module is None:
                problems.append(f"S({edge.brauer},{j}) missing")
            elif len(module) > 0 and module[0] > p:
                problems.append(f"S({edge.brauer},{j}) = {module} has parts above {p}")

    for char_id in instance.characters():
        data = instance.data[char_id]
        vertex = tree.vertex_of_character(char_id)
        for j in range(instance.r):
            module = assignment.modules.get((char_id, j))
            if module is None:
                problems.append(f"M({char_id},{j}) missing")
                continue
            mu0, mus = instance.layers(char_id, j)
            if not eigen_filtration_exists(module, mu0, mus, data.m, p):
                problems.append(
                    f"M({char_id},{j}) = {module} has no filtration by "
                    f"I_1^{mu0} and I_{data.m}^{mus}"
                )
            factors = [
                assignment.edges.get((b, j), ()) for b in edge_factors(tree, vertex)
            ]
            if not tree_filtration_exists(module, factors):
                problems.append(
                    f"M({char_id},{j}) = {module} has no filtration by the edge "
                    f"modules {factors}"
                )

    if problems:
        return problems

    brauer_of = {e.id: e.brauer for e in tree.edges}
    for tie in instance.ties:
        for char_id in instance.characters():
            for j in range(instance.r):
                other = (tie.image(char_id), (tie.residue * j) % instance.r)
                if assignment.modules[(char_id, j)] != assignment.modules[other]:
                    problems.append(
                        f"M({char_id},{j}) differs from its conjugate M{other}"
                    )
        for edge in tree.edges:
            image = brauer_of[_edge_image(tree, tie, edge.id)]
            for j in range(instance.r):
                other = (image, (tie.residue * j) % instance.r)
                if assignment.edges[(edge.brauer, j)] != assignment.edges[other]:
                    problems.append(
                        f"S({edge.brauer},{j}) differs from its conjugate S{other}"
                    )
    return problems


class _UnionFind:
    def __init__(self, items: Iterable[Pair]):
        self.parent = {x: x for x in items}
        self.rank = {x: k for k, x in enumerate(self.parent)}

    def find(self, x: Pair) -> Pair:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: Pair, y: Pair):
        a, b = sorted((self.find(x), self.find(y)), key=self.rank.get)
        if a != b:
            self.parent[b] = a

    def classes(self) -> list[list[Pair]]:
        groups: dict[Pair, list[Pair]] = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return list(groups.values())


@dataclass
class _EdgeClass:
    members: list[Pair]
    dimension: int
    bounds: list[Bound] = field(default_factory=list)
    domain: list[Partition] = field(default_factory=list)


@dataclass
class _VertexClass:
    members: list[Pair]
    dimension: int
    edge_classes: list[int] = field(default_factory=list)
    bounds: list[Bound] = field(default_factory=list)
    domain: list[Partition] = field(default_factory=list)


class _Unsat(Exception):
    def __init__(self, family: str, detail: str):
        super().__init__(detail)
        self.family = family
        self.detail = detail


def _edge_dimensions(instance: Instance, j: int) -> dict[str, int]:
    """
    Dimensions of the edge modules at xi_j, solved from the vertex equations
    by eliminating leaves
    """
    tree = instance.tree
    residual = {}
    for vertex in tree.vertices:
        dims = {instance.dimension(c, j) for c in vertex.chars}
        if len(dims) != 1:
            raise _Unsat(
                "dimension",
                f"exceptional characters at j={j} have dimensions {sorted(dims)}",
            )
        residual[vertex.id] = dims.pop()
    remaining = {v.id: set(tree.incident_edges(v.id)) for v in tree.vertices}
    solved: dict[str, int] = {}

    progress = True
    while progress and len(solved) < len(tree.edges):
        progress = False
        for vertex in tree.vertices:
            if len(remaining[vertex.id]) != 1:
                continue
            edge_id = remaining[vertex.id].pop()
            value = residual[vertex.id]
            if value < 0:
                raise _Unsat(
                    "dimension",
                    f"edge {edge_id} would need negative dimension {value} at j={j}",
                )
            solved[edge_id] = value
            for end in tree.edge_lookup[edge_id].ends:
                if end != vertex.id:
                    remaining[end].discard(edge_id)
                    residual[end] -= value
            residual[vertex.id] = 0
            progress = True

    if len(solved) < len(tree.edges):
        err = f"Edge dimensions of block {tree.block} are not determined at j={j}"
        logger.error(err)
        raise BrauerTreeError(err)
    for vertex_id, value in residual.items():
        if value != 0:
            raise _Unsat(
                "dimension",
                f"dimensions at vertex {vertex_id} are off by {value} at j={j}",
            )
    return solved


class _Search:
    def __init__(self, instance: Instance, prune: bool, threads: int):
        self.instance = instance
        self.prune = prune
        self.threads = threads
        self.nodes = 0
        self.failing_family: Optional[str] = None
        self.failing_detail: Optional[str] = None
        self.edge_classes: list[_EdgeClass] = []
        self.vertex_classes: list[_VertexClass] = []

    def fail(self, family: str, detail: str):
        if self.failing_family is None:
            self.failing_family = family
            self.failing_detail = detail

    def _bounds(self, j: int):
        instance = self.instance
        plain = [
            c
            for c in instance.characters()
            if not instance.tree.is_exceptional(instance.tree.vertex_of_character(c))
        ]
        mu_one = {c: instance.mu(c, j) for c in plain}
        mu_zeta = {c: instance.mu(c, j, 1) for c in plain}
        return gamma_bounds(instance.tree, instance.signs, mu_one, mu_zeta)

    def build(self):
        instance, tree = self.instance, self.instance.tree
        r = instance.r

        edge_dims = {}
        for j in range(r):
            for edge_id, value in _edge_dimensions(instance, j).items():
                edge_dims[(edge_id, j)] = value
        bounds = [self._bounds(j) for j in range(r)] if self.prune else None

        edge_ids = [e.id for e in tree.edges]
        edge_find = _UnionFind([(e, j) for e in edge_ids for j in range(r)])
        vertex_find = _UnionFind(
            [(c, j) for c in instance.characters() for j in range(r)]
        )
        for tie in instance.ties:
            for char_id in instance.characters():
                for j in range(r):
                    image = (tie.image(char_id), (tie.residue * j) % r)
                    vertex_find.union((char_id, j), image)
            for edge_id in edge_ids:
                image = _edge_image(tree, tie, edge_id)
                for j in range(r):
                    edge_find.union((edge_id, j), (image, (tie.residue * j) % r))

        edge_index = {}
        for members in edge_find.classes():
            dims = {edge_dims[x] for x in members}
            if len(dims) != 1:
                raise _Unsat(
                    "dimension",
                    f"conjugate edge modules {members} have dimensions "
                    f"{sorted(dims)}",
                )
            item = _EdgeClass(members=members, dimension=dims.pop())
            if bounds is not None:
                for edge_id, j in members:
                    item.bounds += bounds[j].edges[edge_id]
            for x in members:
                edge_index[x] = len(self.edge_classes)
            self.edge_classes.append(item)

        for members in vertex_find.classes():
            char_id, j = members[0]
            vertex = tree.vertex_of_character(char_id)
            dims = {instance.dimension(c, k) for c, k in members}
            if len(dims) != 1:
                raise _Unsat(
                    "dimension",
                    f"conjugate vertex modules {members} have dimensions "
                    f"{sorted(dims)}",
                )
            item = _VertexClass(
                members=members,
                dimension=dims.pop(),
                edge_classes=[edge_index[(e, j)] for e in tree.incident_edges(vertex)],
            )
            if bounds is not None and tree.is_exceptional(vertex):
                for _, k in members:
                    item.bounds += bounds[k].exceptional
            self.vertex_classes.append(item)

    def _edge_domain(self, item: _EdgeClass) -> list[Partition]:
        candidates = list(partitions(item.dimension, max_part=self.instance.p))
        return [x for x in candidates if satisfies(x, item.bounds)]

    def _vertex_domain(self, item: _VertexClass) -> tuple[list[Partition], bool]:
        instance = self.instance
        prefilter = []
        for char_id, j in item.members:
            data = instance.data[char_id]
            _, mus = instance.layers(char_id, j)
            prefilter += eigen_bounds(data.m, instance.p, mus)
        candidates = [
            x
            for x in partitions(item.dimension, max_part=instance.p)
            if satisfies(x, prefilter)
        ]
        accepted = []
        for module in candidates:
            if all(
                eigen_filtration_exists(
                    module, *instance.layers(c, j), instance.data[c].m, instance.p
                )
                for c, j in item.members
            ):
                accepted.append(module)
        bounded = [x for x in accepted if satisfies(x, item.bounds)]
        return bounded, len(accepted) > 0

    def domains(self):
        for item in self.edge_classes:
            item.domain = self._edge_domain(item)
            if len(item.domain) == 0:
                raise _Unsat(
                    "gamma_bound",
                    f"no module for the edges {item.members} meets the gamma bounds",
                )

        if self.threads > 1:
            with ThreadPoolExecutor(max_workers=self.threads) as executor:
                results = list(executor.map(self._vertex_domain, self.vertex_classes))
        else:
            results = [self._vertex_domain(x) for x in self.vertex_classes]

        for item, (domain, had_candidates) in zip(self.vertex_classes, results):
            item.domain = domain
            if len(domain) == 0:
                family = "gamma_bound" if had_candidates else "eigen_filtration"
                raise _Unsat(
                    family, f"no module for {item.members} survives the {family} check"
                )

        logger.debug(
            f"Domain sizes: edges {[len(x.domain) for x in self.edge_classes]}, "
            f"vertices {[len(x.domain) for x in self.vertex_classes]}"
        )

    def run(self) -> Optional[tuple[list[Partition], list[Partition]]]:
        order = sorted(
            range(len(self.edge_classes)),
            key=lambda i: (len(self.edge_classes[i].domain), i),
        )
        position = {x: k for k, x in enumerate(order)}
        ready: dict[int, list[int]] = {}
        for index, item in enumerate(self.vertex_classes):
            step = max(position[x] for x in item.edge_classes)
            ready.setdefault(step, []).append(index)

        edge_values: list[Optional[Partition]] = [None] * len(self.edge_classes)
        vertex_values: list[Optional[Partition]] = [None] * len(self.vertex_classes)

        def descend(step: int) -> bool:
            if step == len(order):
                return True
            current = order[step]
            for value in self.edge_classes[current].domain:
                self.nodes += 1
                edge_values[current] = value
                if self._complete(ready.get(step, []), edge_values, vertex_values):
                    if descend(step + 1):
                        return True
            edge_values[current] = None
            return False

        if descend(0):
            return list(edge_values), list(vertex_values)
        return None

    def _complete(self, indices, edge_values, vertex_values) -> bool:
        for index in indices:
            item = self.vertex_classes[index]
            factors = [edge_values[x] for x in item.edge_classes]
            for module in item.domain:
                if tree_filtration_exists(module, factors):
                    vertex_values[index] = module
                    break
            else:
                self.fail(
                    "tree_filtration",
                    f"no module for {item.members} is filtered by the edge modules "
                    f"{factors}",
                )
                return False
        return True

    def assignment(self, edge_values, vertex_values) -> Assignment:
        brauer_of = {e.id: e.brauer for e in self.instance.tree.edges}
        result = Assignment()
        for item, value in zip(self.edge_classes, edge_values):
            for edge_id, j in item.members:
                result.edges[(brauer_of[edge_id], j)] = value
        for item, value in zip(self.vertex_classes, vertex_values):
            for pair in item.members:
                result.modules[pair] = value
        return result


def decide(instance: Instance, prune: bool = True, threads: int = 1) -> Verdict:
    """
    Decide whether the unit of an instance can be conjugate to a unit of the
    block. The verdict and the witness (the first assignment in search order)
    do not depend on the number of threads.

    :param instance: instance
    :param prune: whether to prune edge and exceptional modules with gamma bounds
    :param threads: number of threads used to build vertex module candidates
    :return: Verdict
    """
    search = _Search(instance, prune=prune, threads=threads)
    verdict_args = {"block": instance.block, "p": instance.p}
    try:
        search.build()
        search.domains()
        solution = search.run()
    except _Unsat as exc:
        logger.info(f"Block {instance.block} at p={instance.p}: UNSAT ({exc.family})")
        return Verdict(
            status="UNSAT",
            nodes=search.nodes,
            failing_family=exc.family,
            detail=exc.detail,
            **verdict_args,
        )

    if solution is None:
        logger.info(
            f"Block {instance.block} at p={instance.p}: UNSAT after "
            f"{search.nodes} nodes"
        )
        return Verdict(
            status="UNSAT",
            nodes=search.nodes,
            failing_family=search.failing_family,
            detail=search.failing_detail,
            **verdict_args,
        )

    assignment = search.assignment(*solution)
    problems = verify_assignment(instance, assignment)
    if problems:
        err = (
            f"Search produced an invalid witness for block {instance.block}: "
            f"{problems[0]}"
        )
        logger.error(err)
        raise LatticeUnitsError(err)

    logger.info(
        f"Block {instance.block} at p={instance.p}: SAT after {search.nodes} nodes"
    )
    return Verdict(
        status="SAT",
        nodes=search.nodes,
        witness=assignment.witness(),
        **verdict_args,
    )


def decide_blocks(
    table: CharacterTable,
    trees: list[BrauerTree],
    unit: UnitCandidate,
    prune: bool = True,
    threads: int = 1,
    skewfield_free: bool = True,
) -> list[Verdict]:
    """
    Decide a unit for several blocks at the same prime. The unit exists
    locally if and only if every verdict is SAT.

    :param table: character table
    :param trees: Brauer trees
    :param unit: candidate unit
    :param prune: whether to use gamma bounds
    :param threads: number of threads
    :param skewfield_free: whether the blocks avoid non-commutative skewfields
    :return: list of verdicts, one per tree
    """
    verdicts = []
    for tree in trees:
        instance = build_instance(table, tree, unit=unit, skewfield_free=skewfield_free)
        verdicts.append(decide(instance, prune=prune, threads=threads))
    return verdicts
