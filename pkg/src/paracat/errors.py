"""Exception types. Every error carries the offending data as attributes."""


class ParacatError(Exception):
    pass


class ParseError(ParacatError):
    pass


class ValidationError(ParacatError):
    pass


class MissingComposite(ValidationError):
    def __init__(self, msg, triple=None):
        super().__init__(msg)
        self.triple = triple


class NonAssociative(ValidationError):
    def __init__(self, msg, triple=None):
        super().__init__(msg)
        self.triple = triple


class BadIdentity(ValidationError):
    def __init__(self, msg, triple=None):
        super().__init__(msg)
        self.triple = triple


class InvalidFunctor(ValidationError):
    pass


class InvalidNatTrans(ValidationError):
    pass


class TargetMismatch(ValidationError):
    pass


class UnknownObject(ValidationError, KeyError):
    pass


class NotASubcategory(ValidationError):
    pass


class NotOpfibration(ValidationError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NotCartesianFibration(ValidationError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NotOrbital(ParacatError):
    def __init__(self, msg, cospan=None):
        super().__init__(msg)
        self.cospan = cospan


class SizeBudgetExceeded(ParacatError):
    def __init__(self, msg, budget=None):
        super().__init__(msg)
        self.budget = budget


# galois_vect raises this name; same thing
BudgetExceeded = SizeBudgetExceeded


class BoundTooSmall(ParacatError):
    pass
