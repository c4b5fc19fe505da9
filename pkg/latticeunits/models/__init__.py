"""
Models for latticeunits
"""

from latticeunits.models.candidate import UnitCandidate
from latticeunits.models.config import RunConfig
from latticeunits.models.instance import InstanceBundle
from latticeunits.models.table import CharacterTable, Character, ClassInfo, CycValue
from latticeunits.models.tree import BrauerTree, ExceptionalVertex, TreeEdge, TreeVertex
from latticeunits.models.verdict import Verdict
