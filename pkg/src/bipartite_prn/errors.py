"""Exception hierarchy shared by all modules."""


class PrnError(Exception):
    """Base class for every error raised by this package."""


class OddCycle(PrnError):
    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(f"graph is not bipartite; odd cycle {list(self.witness)}")


class NotReduced(PrnError):
    def __init__(self, u, v):
        self.pair = (u, v)
        super().__init__(f"vertices {u} and {v} have the same neighborhood")


class SizeLimit(PrnError):
    pass


class MissingVertex(PrnError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex!r} does not occur in the word")


class InvalidCover(PrnError):
    pass


class ZetaViolated(PrnError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"chain cover violates the zeta condition on pair {witness}")


class SingleChain(ZetaViolated):
    def __init__(self):
        PrnError.__init__(self, "chain cover has a single chain; zeta construction needs k >= 2")
        self.witness = None


class InternalVerificationFailed(PrnError):
    """A construction produced a word that does not represent its input graph."""


class SinglePermutation(PrnError):
    pass


class NotMaximumAntichain(PrnError):
    pass


class WidthNot2(PrnError):
    pass


class NotType2(PrnError):
    pass


class NotCycle(PrnError):
    pass


class BudgetExceeded(PrnError):
    pass
