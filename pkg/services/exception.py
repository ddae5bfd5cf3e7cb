from typing import Optional, Tuple


class PolysymError(Exception):
    def __init__(self, detail: str, message: Optional[str] = None, *args):
        super().__init__(detail, *args)
        self.detail = detail
        self.message = message

    def __str__(self):
        return self.message or self.detail


class MalformedInput(PolysymError):
    pass


class AxiomViolation(PolysymError):
    def __init__(self, axiom: str, a: int, b: int, *args):
        super().__init__(
            "AXIOM_VIOLATION", f"{axiom} axiom fails at subsets {a:#b}, {b:#b}", *args
        )
        self.axiom = axiom
        self.a = a
        self.b = b


class CapExceeded(PolysymError):
    def __init__(self, cap: str, limit: int, value: int, *args):
        super().__init__(
            "CAP_EXCEEDED", f"{cap} is {limit} but the input needs {value}", *args
        )
        self.cap = cap
        self.limit = limit
        self.value = value


class NotAMatroid(PolysymError):
    def __init__(self, operation: str, *args):
        super().__init__(
            "NOT_A_MATROID", f"{operation} is only defined for matroids", *args
        )
        self.operation = operation


class BasisMismatch(PolysymError):
    def __init__(self, expected: str, got: str, *args):
        super().__init__("BASIS_MISMATCH", f"expected {expected}, got {got}", *args)
        self.expected = expected
        self.got = got


class WordOutOfDomain(PolysymError):
    def __init__(self, word: Tuple[int, ...], domain: str, *args):
        super().__init__(
            "WORD_OUT_OF_DOMAIN", f"word {list(word)} is outside {domain}", *args
        )
        self.word = word
        self.domain = domain
