"""Exception hierarchy.

Validation errors carry a ``witness`` tuple of element indices (or group
indices) that exhibit the violated axiom.
"""


class GzariskiError(Exception):
    pass


class ValidationError(GzariskiError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAGroup(ValidationError):
    pass


class NonAssociative(ValidationError):
    pass


class NonCommutative(ValidationError):
    pass


class NonDistributive(ValidationError):
    pass


class BadUnity(ValidationError):
    pass


class GradingViolation(ValidationError):
    pass


class IllFormedConstants(ValidationError):
    pass


class ActionNotAssociative(ValidationError):
    pass


class ActionNotDistributive(ValidationError):
    pass


class NotUnital(ValidationError):
    pass


class SizeCapExceeded(ValidationError):
    pass


class NonHomogeneousGenerator(GzariskiError):
    pass


class NonHomogeneous(GzariskiError):
    pass


class BudgetExceeded(GzariskiError):
    pass


class ImproperIdeal(GzariskiError):
    pass


class KindMismatch(GzariskiError):
    pass


class InternalInconsistency(GzariskiError):
    pass


class InstanceError(GzariskiError):
    """Base for instance-file problems; CLI maps these to exit code 2."""


class InstanceSyntaxError(InstanceError):
    def __init__(self, line, col, expected):
        super().__init__(f"line {line}, col {col}: expected {expected}")
        self.line = line
        self.col = col
        self.expected = expected


class SemanticError(InstanceError):
    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


class DuplicateSection(InstanceError):
    def __init__(self, section, line):
        super().__init__(f"line {line}: duplicate section [{section}]")
        self.section = section
        self.line = line
