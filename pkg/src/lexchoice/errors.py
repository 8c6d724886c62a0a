"""Exception hierarchy shared by every module of the package."""


class LexChoiceError(Exception):
    """Base class for all errors raised by :mod:`lexchoice`."""


class DimensionMismatch(LexChoiceError, ValueError):
    pass


class SpaceMismatch(LexChoiceError, ValueError):
    pass


class LengthMismatch(LexChoiceError, ValueError):
    pass


class NonpositiveScale(LexChoiceError, ValueError):
    pass


class VectorOutsideSubspace(LexChoiceError, ValueError):
    pass


class Incoherent(LexChoiceError):
    """A desirability model violates one of the coherence axioms."""

    def __init__(self, violation):
        super().__init__(f"incoherent model: {violation}")
        self.violation = violation


class SavageNullPresent(LexChoiceError):
    def __init__(self, atoms):
        super().__init__(f"system has Savage-null atoms: {', '.join(atoms)}")
        self.atoms = tuple(atoms)


class NotBinary(LexChoiceError, ValueError):
    pass


class EmptyFamily(LexChoiceError, ValueError):
    pass


class ExtensionInfeasible(LexChoiceError):
    """A layer functional admits no positive normalised extension."""


class NotInImage(LexChoiceError, ValueError):
    """A vector-valued gamble is not the gamblified image of a horse lottery."""


class UniverseTooSmall(LexChoiceError, ValueError):
    pass


class NotSeparable(LexChoiceError):
    """Some positive combination of the avoided options is desirable.

    ``combination`` maps each option to its non-negative coefficient and
    ``gamble`` is the resulting desirable gamble.
    """

    def __init__(self, combination, gamble):
        super().__init__(f"not separable: {gamble} is a positive combination of avoided options")
        self.combination = combination
        self.gamble = gamble


class CounterexampleNotFound(LexChoiceError):
    def __init__(self, budget):
        super().__init__(f"no convexity counterexample found within a budget of {budget} candidates")
        self.budget = budget


class ParseError(LexChoiceError, ValueError):
    """Malformed input file; ``location`` names the offending field."""

    def __init__(self, path, location, message):
        super().__init__(f"{path}: {location}: {message}")
        self.path = path
        self.location = location


class ConstructionFailed(LexChoiceError):
    """A constructed system failed its own post-validation; this is a bug."""
