"""Exception hierarchy shared by every layer of the kernel."""


class BeliefKernelError(Exception):
    """Base class for all kernel errors."""


class FormulaSyntaxError(BeliefKernelError):
    """Raised when formula text does not match the grammar."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class UnknownAtomError(BeliefKernelError):
    """Raised when a formula mentions an atom outside the signature."""

    def __init__(self, atom: str, position: int):
        self.atom = atom
        self.position = position
        super().__init__(f"unknown atom {atom!r} at position {position}")


class InconsistentInputError(BeliefKernelError):
    """Raised for revision by an unsatisfiable formula or an empty belief set."""


class ScopeError(BeliefKernelError):
    """Raised when a request exceeds the supported enumeration scope."""


class FlavorMismatchError(BeliefKernelError):
    """Raised when an operator is paired with the wrong kind of postulate or conditional."""


class PreorderFormatError(BeliefKernelError):
    """Raised when a serialized preorder is malformed."""


class ScriptError(BeliefKernelError):
    """Wraps an error raised while applying one step of a change script."""

    def __init__(self, step: int, cause: Exception):
        self.step = step
        self.cause = cause
        super().__init__(f"step {step}: {cause}")
