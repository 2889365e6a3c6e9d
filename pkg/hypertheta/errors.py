"""
Exception classes.

The three family bases map to the exit codes of the `hypertheta` command:
    InputError           -> 1
    HypothesisFailure    -> 2
    ConformanceViolation -> 3
"""


class ThetaError(Exception):
    exitcode = 1


class InputError(ThetaError):
    exitcode = 1


class HypothesisFailure(ThetaError):
    exitcode = 2


class ConformanceViolation(ThetaError):
    exitcode = 3


class PolySyntaxError(InputError):
    """
    A polynomial string does not follow the grammar.
    `position` is the 0-based column of the offending token.
    """
    def __init__(self, message, text="", position=0):
        self.message = message
        self.text = text
        self.position = position
        super().__init__("syntax error at column %d: %s" % (position, message))

    def pointer(self):
        """return the text with a caret under the error position"""
        return "%s\n%s^" % (self.text, " " * self.position)


class UnknownVariable(InputError):
    pass


class NegativeExponent(InputError):
    pass


class RingMismatch(InputError):
    pass


class RankMismatch(InputError):
    pass


class NotAFactorization(InputError):
    pass


class VariableClash(InputError):
    pass


class InvalidParameter(InputError):
    pass


class CompositeNonzero(InputError):
    pass


class IllDefinedMap(InputError):
    pass


class JobFileError(InputError):
    pass


class NoStabilization(HypothesisFailure):
    def __init__(self, max_steps, message=None):
        self.max_steps = max_steps
        super().__init__(message or
                "no matrix factorization found within %d resolution steps" % max_steps)


class NotFiniteLength(HypothesisFailure):
    pass


class NonConstantUnit(HypothesisFailure):
    def __init__(self, row, col, entry):
        self.row = row
        self.col = col
        self.entry = entry
        super().__init__(
                "entry (%d,%d) = %s is a unit near the origin but not a constant; "
                "use a quasi-homogeneous model of the singularity" % (row, col, entry))


class PeriodicityCheckFailed(HypothesisFailure):
    pass


class IdentityFailed(ConformanceViolation):
    pass


class ExactnessFailed(ConformanceViolation):
    def __init__(self, message, spot=None):
        self.spot = spot
        super().__init__(message)
