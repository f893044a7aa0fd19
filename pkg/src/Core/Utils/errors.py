from typing import Any, Dict, Optional


class VerificationError(RuntimeError):
    """
    Raised when a computed instance of a statement does not hold: a non exact snake sequence, disagreeing
    equivalent conditions, a failed cross-check between two independent computations.
    """

    def __init__(self, message: str, dump: Optional[Dict[str, Any]] = None):
        RuntimeError.__init__(self, message)
        self.dump: Dict[str, Any] = dump if dump is not None else {}
