"""Exception hierarchy.

Three families matter to callers (and map onto CLI exit codes):

* ``MatroidInputError``  -- bad user input (parse / axiom / parameter errors)
* ``ResourceLimitError`` -- refused because the ground set is too large
* ``CrossCheckError``    -- an internal consistency check failed; always a bug
"""
from __future__ import annotations


class MatroidKLError(Exception):
    pass


class MatroidInputError(MatroidKLError, ValueError):
    pass


class ResourceLimitError(MatroidKLError):
    pass


class CrossCheckError(MatroidKLError, AssertionError):
    pass


# -- matroid construction -------------------------------------------------

class EmptyBases(MatroidInputError):
    pass


class MixedCardinality(MatroidInputError):
    pass


class ExchangeAxiomViolation(MatroidInputError):
    def __init__(self, msg: str, witness: tuple[int, int] | None = None):
        super().__init__(msg)
        self.witness = witness


class InvalidRank(MatroidInputError):
    pass


class NotStressed(MatroidInputError):
    pass


class Infeasible(MatroidInputError):
    pass


class HasLoops(MatroidInputError):
    pass


class GroundSetTooLarge(ResourceLimitError):
    pass


class LatticeTooLarge(ResourceLimitError):
    pass


# -- polynomials / closed forms -------------------------------------------

class DegreeExceedsCenter(MatroidInputError):
    pass


class NotPalindromic(MatroidInputError):
    pass


class LambdaOutOfRange(MatroidInputError):
    pass


class InvalidHyperplaneSize(MatroidInputError):
    pass


class InvalidCuspidalParameters(MatroidInputError):
    pass


class NonIntegerCoefficient(CrossCheckError):
    pass


# -- engine self checks ---------------------------------------------------

class RouteMismatch(CrossCheckError):
    pass


class InconsistentRecursion(CrossCheckError):
    pass


class NonnegativityViolation(CrossCheckError):
    pass


class DegreeBoundViolation(CrossCheckError):
    pass


class ClosedFormMismatch(CrossCheckError):
    pass


# -- file formats ---------------------------------------------------------

class ParseError(MatroidInputError):
    def __init__(self, msg: str, line: int | None = None, offset: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", col {offset}" if offset is not None else "") + ": "
        super().__init__(where + msg)
        self.line = line
        self.offset = offset


class ValidationError(MatroidInputError):
    def __init__(self, entry: str, cause: Exception):
        super().__init__(f"entry {entry!r}: {type(cause).__name__}: {cause}")
        self.entry = entry
        self.cause = cause
