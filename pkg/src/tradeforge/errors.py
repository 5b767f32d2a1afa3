"""Exception hierarchy shared by all tradeforge modules."""


class TradeForgeError(Exception):
    """Base class for every error raised by this package."""


# --- partial latin square / bitrade validation ---

class PlsError(TradeForgeError):
    pass


class DuplicateCell(PlsError):
    def __init__(self, first, second):
        self.first = first
        self.second = second
        super().__init__(f"cell occupied twice: {first} and {second}")


class RowSymbolClash(PlsError):
    def __init__(self, first, second):
        self.first = first
        self.second = second
        super().__init__(f"symbol repeated in a row: {first} and {second}")


class ColSymbolClash(PlsError):
    def __init__(self, first, second):
        self.first = first
        self.second = second
        super().__init__(f"symbol repeated in a column: {first} and {second}")


class BitradeError(TradeForgeError):
    pass


class NotDisjoint(BitradeError):
    def __init__(self, shared):
        self.shared = shared
        super().__init__(f"trade and mate share triples, e.g. {shared}")


class MissingPartner(BitradeError):
    def __init__(self, triple, coordinate):
        self.triple = triple
        self.coordinate = coordinate
        super().__init__(f"{triple} has no partner differing in {coordinate}")


class NonUniquePartner(BitradeError):
    def __init__(self, triple, coordinate):
        self.triple = triple
        self.coordinate = coordinate
        super().__init__(f"{triple} has several partners differing in {coordinate}")


class UnknownLabel(TradeForgeError):
    pass


class NonInjectiveMap(TradeForgeError):
    pass


# --- topology ---

class NotSeparated(TradeForgeError):
    def __init__(self, offenders):
        self.offenders = tuple(offenders)
        names = ", ".join(str(x) for x in self.offenders)
        super().__init__(f"bitrade is not separated (offending labels: {names})")


class NotConnected(TradeForgeError):
    def __init__(self, components):
        self.components = tuple(components)
        super().__init__(f"bitrade is not connected ({len(self.components)} components)")


class NoMateExists(TradeForgeError):
    pass


# --- exact linear algebra ---

class MatrixError(TradeForgeError):
    pass


class NotSquare(MatrixError):
    pass


class TooLarge(MatrixError):
    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f"matrix order {size} exceeds the permanent cap {cap}")


class Singular(MatrixError):
    pass


# --- group construction / embedding ---

class NotSpherical(TradeForgeError):
    pass


class SpecialNotInTrade(TradeForgeError):
    pass


class InternalInconsistency(TradeForgeError):
    """Two independent computations of the same quantity disagree."""


class VerificationFailed(TradeForgeError):
    """A constructed embedding failed its post-hoc verification."""


# --- searches ---

class NotARectangle(TradeForgeError):
    pass


# --- families / fixtures ---

class BadParameter(TradeForgeError):
    pass


class UnknownFixture(TradeForgeError):
    pass


# --- text format ---

class ParseError(TradeForgeError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
