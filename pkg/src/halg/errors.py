"""Exception hierarchy.

Every error raised by the library derives from :class:`HalgError` so callers
(the CLI in particular) can separate domain failures from programming bugs.
"""


class HalgError(Exception):
    pass


class DimensionMismatch(HalgError, ValueError):
    pass


class DimensionCapExceeded(HalgError):
    pass


class NotAssociative(HalgError):
    def __init__(self, i, j, k):
        super().__init__(f"(b{i} b{j}) b{k} != b{i} (b{j} b{k})")
        self.triple = (i, j, k)


class NotUnital(HalgError):
    def __init__(self, i):
        super().__init__(f"claimed unit does not act as identity on basis element {i}")
        self.index = i


class CyclicQuiver(HalgError):
    pass


class UnsupportedField(HalgError):
    pass


class NonSplit(HalgError):
    pass


class LiftingFailed(HalgError):
    pass


class NotInvertible(HalgError):
    pass


class NotMultiplicative(HalgError):
    def __init__(self, i, j):
        super().__init__(f"sigma(b{i} b{j}) != sigma(b{i}) sigma(b{j})")
        self.pair = (i, j)


class UnitNotFixed(HalgError):
    pass


class NotAGroup(HalgError):
    pass


class NotAHomomorphism(HalgError):
    def __init__(self, s, t):
        super().__init__(f"image of {s}*{t} is not the composite of the images")
        self.pair = (s, t)


class OrderNotInvertible(HalgError):
    pass


class AlgebraMismatch(HalgError):
    pass


class NotASkewAlgebra(HalgError):
    pass


class InvalidModule(HalgError):
    pass


class NotGStable(HalgError):
    pass


class InputError(HalgError):
    """Malformed input; ``path`` is a JSON-pointer-like location."""

    def __init__(self, path, message):
        super().__init__(f"{path or '/'}: {message}")
        self.path = path


class CounterexampleCandidate(HalgError):
    """A known implication failed on a concrete algebra.

    Almost certainly a bug; the certificate is attached for inspection.
    """

    BANNER = "*** POTENTIAL COUNTEREXAMPLE / PROBABLE BUG ***"

    def __init__(self, claim, certificate):
        super().__init__(f"{self.BANNER}\nclaim: {claim}\ncertificate: {certificate!r}")
        self.claim = claim
        self.certificate = certificate
