"""
Custom errors for latticeunits
"""


class LatticeUnitsError(Exception):
    """Base error for latticeunits"""


class DocumentValidationError(LatticeUnitsError):
    """Error relating to the validation of an input document"""


class PartitionError(DocumentValidationError):
    """Error relating to a malformed partition"""


class CharacterTableError(LatticeUnitsError):
    """Error relating to an inconsistent character table"""


class BrauerTreeError(LatticeUnitsError):
    """Error relating to an invalid Brauer tree"""


class HeLPInfeasibleError(LatticeUnitsError):
    """Error raised when a candidate has non-integral or negative multiplicities"""


class UnsupportedBlockError(LatticeUnitsError):
    """Error raised for blocks outside the defect 1 skewfield-free setting"""


class RepresentativeChoiceError(LatticeUnitsError):
    """Error raised when multiplicities depend on the choice of orbit representatives"""


class ClosedFormMismatchError(LatticeUnitsError):
    """Error raised when closed-form multiplicities disagree with the generic formula"""
