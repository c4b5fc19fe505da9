"""
Models for Brauer trees of blocks of cyclic defect
"""

import logging
from functools import cached_property
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from latticeunits.errors import BrauerTreeError

logger = logging.getLogger(__name__)


class TreeVertex(BaseModel):
    """
    A vertex of a Brauer tree, carrying one ordinary character
    (several at the exceptional vertex)
    """

    id: str = Field(title="Vertex name", min_length=1, examples=["v1"])
    chars: list[str] = Field(
        title="Ordinary characters at this vertex",
        min_length=1,
        examples=[["chi1"], ["chi12", "chi13"]],
    )

    model_config = ConfigDict(extra="forbid")


class TreeEdge(BaseModel):
    """
    An edge of a Brauer tree, carrying an irreducible Brauer character
    """

    id: str = Field(title="Edge name", min_length=1, examples=["e1"])
    brauer: str = Field(title="Brauer character", min_length=1, examples=["psi1"])
    ends: tuple[str, str] = Field(title="Endpoint vertex ids")

    model_config = ConfigDict(extra="forbid")


class ExceptionalVertex(BaseModel):
    """
    The exceptional vertex and its multiplicity
    """

    vertex: str = Field(title="Vertex id")
    mult: int = Field(title="Exceptional multiplicity", ge=2)

    model_config = ConfigDict(extra="forbid")


class BrauerTree(BaseModel):
    """
    Brauer tree of a block of defect 1
    """

    p: int = Field(title="Prime", ge=2, examples=[3, 5])
    block: str = Field(default="B0", title="Name of the block", examples=["B0"])
    vertices: list[TreeVertex] = Field(min_length=1)
    exceptional: Optional[ExceptionalVertex] = Field(default=None)
    edges: list[TreeEdge] = Field(default_factory=list)
    cyclic_order: dict[str, list[str]] = Field(
        default_factory=dict,
        title="Counter-clockwise order of the edges around each vertex",
    )
    positive_vertex: str = Field(title="Vertex labelled with a positive sign")
    signs: Optional[dict[str, int]] = Field(
        default=None, title="Explicit signs per vertex, checked against the tree"
    )

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def validate_references(self):
        """
        Ensure ids are unique and every referenced vertex and edge exists

        :return: self
        """
        vertex_ids = [v.id for v in self.vertices]
        edge_ids = [e.id for e in self.edges]
        if len(set(vertex_ids)) != len(vertex_ids):
            raise BrauerTreeError(f"Duplicate vertex ids in {vertex_ids}")
        if len(set(edge_ids)) != len(edge_ids):
            raise BrauerTreeError(f"Duplicate edge ids in {edge_ids}")
        chars = [c for v in self.vertices for c in v.chars]
        if len(set(chars)) != len(chars):
            raise BrauerTreeError(f"A character lies on several vertices: {chars}")
        for edge in self.edges:
            for end in edge.ends:
                if end not in vertex_ids:
                    raise BrauerTreeError(
                        f"Edge {edge.id} ends at unknown vertex '{end}'"
                    )
        if self.positive_vertex not in vertex_ids:
            raise BrauerTreeError(
                f"Positive vertex '{self.positive_vertex}' is not a vertex"
            )
        if self.exceptional is not None and self.exceptional.vertex not in vertex_ids:
            raise BrauerTreeError(
                f"Exceptional vertex '{self.exceptional.vertex}' is not a vertex"
            )
        for vertex, order in self.cyclic_order.items():
            if vertex not in vertex_ids:
                raise BrauerTreeError(f"Cyclic order given for unknown vertex {vertex}")
            unknown = set(order) - set(edge_ids)
            if unknown:
                raise BrauerTreeError(
                    f"Cyclic order at {vertex} names unknown edges {sorted(unknown)}"
                )
        return self

    @cached_property
    def vertex_lookup(self) -> dict[str, TreeVertex]:
        """
        Vertices by id

        :return: dictionary
        """
        return {v.id: v for v in self.vertices}

    @cached_property
    def edge_lookup(self) -> dict[str, TreeEdge]:
        """
        Edges by id

        :return: dictionary
        """
        return {e.id: e for e in self.edges}

    @property
    def ell(self) -> int:
        """
        Exceptional multiplicity (1 if there is no exceptional vertex)

        :return: multiplicity
        """
        return 1 if self.exceptional is None else self.exceptional.mult

    @property
    def edges_m(self) -> int:
        """
        Number of edges of the tree

        :return: number of edges
        """
        return len(self.edges)

    def characters(self) -> list[str]:
        """
        All ordinary characters of the block, in vertex order

        :return: list of character ids
        """
        return [c for v in self.vertices for c in v.chars]

    def vertex_of_character(self, char_id: str) -> str:
        """
        Vertex carrying a character

        :param char_id: character id
        :return: vertex id
        """
        for vertex in self.vertices:
            if char_id in vertex.chars:
                return vertex.id
        err = f"Character '{char_id}' does not lie in block {self.block}"
        logger.error(err)
        raise BrauerTreeError(err)

    def is_exceptional(self, vertex_id: str) -> bool:
        """
        Whether a vertex is the exceptional vertex

        :param vertex_id: vertex id
        :return: boolean
        """
        return self.exceptional is not None and self.exceptional.vertex == vertex_id

    def incident_edges(self, vertex_id: str) -> list[str]:
        """
        Edges at a vertex, in the stored cyclic order where one is given

        :param vertex_id: vertex id
        :return: list of edge ids
        """
        incident = [e.id for e in self.edges if vertex_id in e.ends]
        order = self.cyclic_order.get(vertex_id)
        if order is None:
            return incident
        ranked = [e for e in order if e in incident]
        return ranked + [e for e in incident if e not in ranked]

    def neighbours(self, vertex_id: str) -> list[str]:
        """
        Vertices adjacent to a vertex

        :param vertex_id: vertex id
        :return: list of vertex ids
        """
        result = []
        for edge_id in self.incident_edges(vertex_id):
            ends = self.edge_lookup[edge_id].ends
            result.append(ends[1] if ends[0] == vertex_id else ends[0])
        return result

    def leaves(self) -> list[str]:
        """
        Vertices with exactly one incident edge

        :return: list of vertex ids
        """
        return [v.id for v in self.vertices if len(self.incident_edges(v.id)) == 1]

    def component_without_edge(self, edge_id: str, vertex_id: str) -> list[str]:
        """
        Vertices of the connected component containing `vertex_id` after
        removing an edge

        :param edge_id: edge to remove
        :param vertex_id: vertex on the side to keep
        :return: list of vertex ids, in vertex order
        """
        seen = {vertex_id}
        stack = [vertex_id]
        while stack:
            current = stack.pop()
            for other_edge in self.incident_edges(current):
                if other_edge == edge_id:
                    continue
                ends = self.edge_lookup[other_edge].ends
                other = ends[1] if ends[0] == current else ends[0]
                if other not in seen:
                    seen.add(other)
                    stack.append(other)
        return [v.id for v in self.vertices if v.id in seen]

    def edge_between(self, first: str, second: str) -> Optional[str]:
        """
        Edge joining two vertices, if any

        :param first: vertex id
        :param second: vertex id
        :return: edge id or None
        """
        for edge in self.edges:
            if set(edge.ends) == {first, second}:
                return edge.id
        return None
