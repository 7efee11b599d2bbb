"""Error types shared across the bridge."""


class BridgeError(ValueError):
    """Any failure while configuring or running a conversion."""


class TaggerUnavailableError(BridgeError):
    """The selected analyzer backend is not importable."""


class AlignmentError(BridgeError):
    """Tagger output cannot be reconciled with the source eojeols."""
