"""Exception hierarchy shared by every module of the package."""


class RainbowError(Exception):
    """Base class for all errors raised by rainbowdecomp."""


class GraphFormatError(RainbowError, ValueError):
    """A graph document or constructor argument is malformed.

    ``where`` names the offending field (``"edges[3]"``) and ``line`` the
    source line when the error came from a parser.
    """

    def __init__(self, message, where=None, line=None):
        self.where = where
        self.line = line
        parts = []
        if line is not None:
            parts.append(f"line {line}")
        if where is not None:
            parts.append(where)
        prefix = ", ".join(parts)
        super().__init__(f"{prefix}: {message}" if prefix else message)
        self.message = message


class HypothesisViolation(RainbowError):
    """Input does not satisfy the hypothesis an algorithm needs."""


class NotAStarConfiguration(HypothesisViolation):
    def __init__(self, color, reason="color class is not a spanning star"):
        self.color = color
        super().__init__(f"color {color}: {reason}")


class CentersNotDistinct(HypothesisViolation):
    pass


class CentersNotAllEqual(HypothesisViolation):
    pass


class ClassesNotIdentical(HypothesisViolation):
    pass


class InvalidLatinSquare(HypothesisViolation):
    pass


class InvalidTwoCenterConfig(HypothesisViolation):
    pass


class NotMatrixEncodable(HypothesisViolation):
    pass


class InstanceTooLarge(RainbowError):
    """The search node budget ran out before the search space was exhausted."""

    def __init__(self, budget, partial=None):
        self.budget = budget
        self.partial = partial
        super().__init__(f"search budget of {budget} nodes exhausted")


class OutOfSupportedRange(RainbowError, ValueError):
    pass


class CountUnavailable(RainbowError):
    def __init__(self, n):
        self.n = n
        super().__init__(f"no closed-form count available for n={n}")
