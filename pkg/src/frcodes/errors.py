"""Exception hierarchy shared by all frcodes modules."""


class FrCodesError(Exception):
    """Base class for all domain errors raised by this package."""


class StructureError(FrCodesError):
    """Malformed incidence structure input (bad indices, ragged rows, caps)."""


class FormatError(StructureError):
    """A structure/design file could not be parsed."""


class NotTacticalError(FrCodesError):
    """Row or column sums of the incidence matrix are not constant."""


class ParameterError(FrCodesError):
    """Invalid code parameters or an argument outside its documented range."""


class DesignError(FrCodesError):
    """A block system failed design verification or a counting consistency check."""


class EnumerationLimitError(FrCodesError):
    """Subset enumeration exceeded the configured state budget (FRC_MAX_ENUM)."""


class RepairError(FrCodesError):
    """A failed storage node cannot be rebuilt from the surviving nodes."""


class ReconstructionError(FrCodesError):
    """The contacted nodes do not cover enough distinct symbols.

    ``deficit`` records how many more distinct symbols would be needed.
    """

    def __init__(self, message: str, deficit: int):
        super().__init__(message)
        self.deficit = deficit
