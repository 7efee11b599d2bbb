"""Bridge from raw Korean text to the tagged-corpus JSONL format.

Wraps installed morphological analyzers behind adapters, reconstructs
eojeol indices from whitespace in the source text, and emits the
interchange schema the downstream corpus loader validates.
"""

from .align import align_eojeols
from .convert import (
    BridgeConfig,
    BridgeResult,
    DocumentSkippedWarning,
    EmptyInputWarning,
    SkippedDocument,
    tag_document,
    tag_file,
)
from .errors import AlignmentError, BridgeError, TaggerUnavailableError
from .metadata import DocumentMeta, UnknownColumnWarning, read_metadata
from .segment import SPLIT_MODES, split_lines, split_punctuation, split_text
from .taggers import TaggerAdapter, available_taggers, get_tagger, register_tagger

__version__ = "0.1.0"

__all__ = [
    "AlignmentError",
    "BridgeConfig",
    "BridgeError",
    "BridgeResult",
    "DocumentMeta",
    "DocumentSkippedWarning",
    "EmptyInputWarning",
    "SkippedDocument",
    "SPLIT_MODES",
    "TaggerAdapter",
    "TaggerUnavailableError",
    "UnknownColumnWarning",
    "align_eojeols",
    "available_taggers",
    "get_tagger",
    "read_metadata",
    "register_tagger",
    "split_lines",
    "split_punctuation",
    "split_text",
    "tag_document",
    "tag_file",
]
