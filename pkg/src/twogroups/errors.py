"""Exception types.

Every validator failure is an :class:`AxiomViolation` carrying a short check
id (used verbatim in reports) and the first witness found in lexicographic
scan order.
"""

from __future__ import annotations


class TwoGroupError(Exception):
    """Base class for all errors raised by this package."""


class AxiomViolation(TwoGroupError):
    check = "axiom"

    def __init__(self, check: str | None = None, **witness: int):
        if check is not None:
            self.check = check
        self.witness = witness
        super().__init__(self.report_line())

    def witness_text(self) -> str:
        return " ".join(f"{k}={v}" for k, v in self.witness.items())

    def report_line(self) -> str:
        w = self.witness_text()
        return f"FAIL {self.check} {w}" if w else f"FAIL {self.check}"


def _violation(name: str, check: str) -> type[AxiomViolation]:
    return type(name, (AxiomViolation,), {"check": check})


# group axioms
NotClosed = _violation("NotClosed", "closure")
NoIdentity = _violation("NoIdentity", "identity")
NoInverse = _violation("NoInverse", "inverse")
NotAssociative = _violation("NotAssociative", "associativity")
NotMultiplicative = _violation("NotMultiplicative", "multiplicative")

# actions
NotAutomorphism = _violation("NotAutomorphism", "action-automorphism")
NotUnital = _violation("NotUnital", "action-unital")
NotMultiplicativeInActor = _violation("NotMultiplicativeInActor", "action-multiplicative")

# strict 2-groups
IdentitySectionViolation = _violation("IdentitySectionViolation", "identity-section")
UnitLawViolation = _violation("UnitLawViolation", "unit-law")
BoundaryOfCompositeViolation = _violation("BoundaryOfCompositeViolation", "composite-boundary")
CompositionAssociativityViolation = _violation(
    "CompositionAssociativityViolation", "composition-associativity"
)
InterchangeViolation = _violation("InterchangeViolation", "interchange")
DerivedCompositionViolation = _violation("DerivedCompositionViolation", "derived-composition")
CompositionDomainViolation = _violation("CompositionDomainViolation", "composition-domain")

# internal functors / natural transformations
FunctorViolation = _violation("FunctorViolation", "functor")
BoundaryViolation = _violation("BoundaryViolation", "boundary")
NaturalityViolation = _violation("NaturalityViolation", "naturality")

# crossed modules
EquivarianceViolation = _violation("EquivarianceViolation", "equivariance")
PeifferViolation = _violation("PeifferViolation", "peiffer")
XModMorphismViolation = _violation("XModMorphismViolation", "xmod-morphism")
CrossedLawViolation = _violation("CrossedLawViolation", "crossed-law")
ChainHomotopy1Violation = _violation("ChainHomotopy1Violation", "chain-homotopy-1")
ChainHomotopy2Violation = _violation("ChainHomotopy2Violation", "chain-homotopy-2")
InducedHomViolation = _violation("InducedHomViolation", "induced-hom")

# constructions
NotAbelian = _violation("NotAbelian", "abelian")
NotSurjective = _violation("NotSurjective", "surjective")
KernelNotCentral = _violation("KernelNotCentral", "kernel-not-central")
NotASection = _violation("NotASection", "section")
NotInjective = _violation("NotInjective", "injective")
NotNormal = _violation("NotNormal", "normal")


class NotComposable(TwoGroupError):
    pass


class NotParallel(TwoGroupError):
    pass


class TypingError(TwoGroupError):
    """Structure maps whose domains or codomains do not line up."""


class OrderBoundExceeded(TwoGroupError):
    def __init__(self, order: int, bound: int):
        self.order = order
        self.bound = bound
        super().__init__(f"carrier order {order} exceeds bound {bound} (set TG_MAX_ORDER to raise it)")


class ParseError(TwoGroupError):
    def __init__(self, line: int, reason: str, path: str | None = None):
        self.line = line
        self.reason = reason
        self.path = path
        where = f"{path}:{line}" if path else f"line {line}"
        super().__init__(f"{where}: {reason}")


class UnresolvedReference(TwoGroupError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unresolved reference: {name}")
