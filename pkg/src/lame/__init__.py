"""Layout analysis and metadata labeling for research-article first pages."""

from .charstream import (
    CharGlyph,
    MetadataRecord,
    Page,
    dump_page,
    load_metadata_records,
    validate_charstream,
)
from .classifier import (
    BoxPosition,
    DataRow,
    EvalReport,
    FeatureSpec,
    Model,
    evaluate,
    predict,
    split_by_journal,
    train,
)
from .corpus import (
    ModelConfig,
    Vocab,
    build_vocab,
    emit_model_config,
    parse_pretrain_line,
    serialize_page,
    tokenize,
)
from .doi import DoiClient, DoiClientConfig, fetch_metadata
from .layout import (
    LayoutParams,
    TextBox,
    TextLine,
    build_lines,
    detect_language,
    merge_lines,
    order_boxes,
)
from .matcher import (
    LABELS,
    LabeledBox,
    LabeledPage,
    MatcherParams,
    bleu,
    label_page,
    levenshtein_ratio,
    mixed_similarity,
    normalize_text,
)
from .pipeline import PipelineConfig, process_document, process_page

__version__ = "0.1.0"

__all__ = [
    "CharGlyph",
    "Page",
    "MetadataRecord",
    "validate_charstream",
    "dump_page",
    "load_metadata_records",
    "LayoutParams",
    "TextLine",
    "TextBox",
    "build_lines",
    "merge_lines",
    "detect_language",
    "order_boxes",
    "LABELS",
    "MatcherParams",
    "LabeledBox",
    "LabeledPage",
    "normalize_text",
    "levenshtein_ratio",
    "bleu",
    "mixed_similarity",
    "label_page",
    "DoiClient",
    "DoiClientConfig",
    "fetch_metadata",
    "Vocab",
    "ModelConfig",
    "serialize_page",
    "parse_pretrain_line",
    "build_vocab",
    "tokenize",
    "emit_model_config",
    "FeatureSpec",
    "Model",
    "BoxPosition",
    "DataRow",
    "EvalReport",
    "train",
    "predict",
    "evaluate",
    "split_by_journal",
    "PipelineConfig",
    "process_document",
    "process_page",
    "__version__",
]
