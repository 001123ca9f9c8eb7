"""Exceptions raised by the ring/module kernel."""


class JTLError(Exception):
    pass


class ShapeError(JTLError):
    """Tables have the wrong shape or contain out-of-range indices."""


class AxiomViolation(JTLError):
    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(f"{axiom} fails at {self.witness}")


class BudgetExceeded(JTLError):
    def __init__(self, what, needed, cap):
        self.what = what
        self.needed = needed
        self.cap = cap
        super().__init__(f"{what}: {needed} exceeds cap {cap}")


class NotTwoSidedIdeal(JTLError):
    pass


class NotSubmodule(JTLError):
    pass


class ReduciblePolynomial(JTLError):
    pass


class CompositionMismatch(JTLError):
    pass


class UnknownFlag(JTLError):
    pass
