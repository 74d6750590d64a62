"""Exception hierarchy shared by all modules.

Every error carries a stable ``code`` (the class name) so the CLI can emit a
machine-readable error object without string matching.
"""


class AsymDirError(Exception):
    @property
    def code(self) -> str:
        return type(self).__name__


class PolySyntaxError(AsymDirError, SyntaxError):
    """Malformed polynomial text; ``position`` is the 0-based character index."""

    def __init__(self, msg: str, text: str = "", position: int = 0):
        SyntaxError.__init__(self, msg, ("<polynomial>", 1, position + 1, text))
        self.position = position

    def __str__(self) -> str:
        return f"{self.msg} at position {self.position}"


class UnknownVariable(AsymDirError, ValueError):
    pass


class ConvergenceFailure(AsymDirError, ArithmeticError):
    pass


class DegenerateInput(AsymDirError, ValueError):
    pass


class DivisionByZeroSeries(AsymDirError, ZeroDivisionError):
    pass


class PrecisionExhausted(AsymDirError, ArithmeticError):
    pass


class InvalidParams(AsymDirError, ValueError):
    pass


class DegenerateFiber(AsymDirError, ValueError):
    pass


class NonReducedFiber(AsymDirError, ValueError):
    pass


class WildModel(AsymDirError, ArithmeticError):
    pass


class SingularCurve(AsymDirError, ValueError):
    pass


class TangentLine(AsymDirError, ValueError):
    pass


class RamifiedPoint(AsymDirError, ValueError):
    pass


class LiftingStall(AsymDirError, ArithmeticError):
    pass


class NonConvergentResidue(AsymDirError, ArithmeticError):
    pass


class HypothesisViolated(AsymDirError, ValueError):
    pass


class I2MembershipFailed(AsymDirError, ValueError):
    pass


class PointNotOnCurve(AsymDirError, ValueError):
    pass
