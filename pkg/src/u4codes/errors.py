"""Exception types shared across the package."""


class U4CodesError(Exception):
    """Base class for every error raised by this package."""


# --- field construction -------------------------------------------------

class NonPrime(U4CodesError):
    def __init__(self, p: int):
        self.p = p
        super().__init__(f"{p} is not prime")


class NotMonic(U4CodesError):
    pass


class Reducible(U4CodesError):
    def __init__(self, modulus, witness):
        self.modulus = tuple(modulus)
        self.witness = tuple(witness)
        super().__init__(f"modulus {list(modulus)} is divisible by {list(witness)}")


class DegreeOutOfRange(U4CodesError):
    pass


class DivisionByZero(U4CodesError):
    pass


# --- ring arithmetic ----------------------------------------------------

class MixedField(U4CodesError):
    pass


class MixedLength(U4CodesError):
    pass


class LengthMismatch(U4CodesError):
    pass


# --- code validation ----------------------------------------------------

class DegreeOrderViolated(U4CodesError):
    pass


class CorrectionNotUnit(U4CodesError):
    def __init__(self, index: int, detail: str = ""):
        self.index = index
        super().__init__(f"correction p{index} is not a unit{': ' + detail if detail else ''}")


class CorrectionDegreeTooLarge(U4CodesError):
    def __init__(self, index: int, value: int, bound: int):
        self.index = index
        self.value = value
        self.bound = bound
        super().__init__(f"k{index} = {value} violates k{index} < {bound}")


class EmptyGeneratorSet(U4CodesError):
    pass


class MalformedGeneratorForm(U4CodesError):
    """Structural problems not covered by the specific validation errors."""


class WrongIdealType(U4CodesError):
    def __init__(self, expected, got):
        self.expected = expected
        self.got = got
        super().__init__(f"operation requires ideal type {expected}, got {got}")


class InconsistentSet(U4CodesError):
    pass


class TooLarge(U4CodesError):
    def __init__(self, rank: int, bound: int, q: int):
        self.rank = rank
        self.bound = bound
        self.q = q
        super().__init__(f"enumeration of {q}^{rank} codewords exceeds cap {bound}")


# --- weights ------------------------------------------------------------

class OutOfRange(U4CodesError):
    pass


class NoBranch(U4CodesError):
    """Internal: the weight case table failed to match exactly one branch."""


# --- parsing ------------------------------------------------------------

class ParseError(U4CodesError):
    def __init__(self, line: int, column: int, expected: str):
        self.line = line
        self.column = column
        self.expected = expected
        super().__init__(f"line {line}, column {column}: expected {expected}")


class NotCanonical(U4CodesError):
    pass


class DuplicateGenerator(U4CodesError):
    def __init__(self, level: int):
        self.level = level
        super().__init__(f"generator g{level} given more than once")


class UnknownDirective(U4CodesError):
    pass
