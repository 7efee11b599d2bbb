"""Stylometric detection of machine-generated Korean text.

The pipeline is: a POS-tagged JSONL corpus (corpus), raw tags mapped onto
canonical categories (tagmap), per-document features from word spacing,
POS n-gram diversity and comma usage (spacing / posngrams / commas /
features), a from-scratch logistic-regression detector (classifier), an
unseen-generator AUC protocol (evaluation), descriptive statistics
(analysis) and a deterministic synthetic corpus generator (synth).
"""

from .analysis import (
    EmptyDistributionError,
    RankFrequencyCurve,
    VocabGrowthCurve,
    comma_pos_pair_distribution,
    heaps_curve,
    pos_before_comma_ratios,
    pos_distribution,
    zipf_curve,
)
from .classifier import (
    ClassifierError,
    TrainConfig,
    TrainedModel,
    ensemble_proba,
    load_model,
    predict_proba,
    predict_proba_batch,
    save_model,
    train_logreg,
)
from .commas import CommaFeatures, comma_feature_vector
from .corpus import (
    Corpus,
    CorpusError,
    CorpusFormatError,
    CorpusValidationError,
    EmptyCorpusError,
    MorphemeToken,
    Sentence,
    TaggedDocument,
    UnknownFieldWarning,
    load_corpus,
    parse_document,
    space_before,
    write_corpus,
)
from .evaluation import (
    EvaluationError,
    EvaluationReport,
    SplitSpec,
    auc_roc,
    make_ood_split,
    run_protocol,
    write_report_csv,
    write_report_json,
)
from .features import (
    ALL_SETS,
    FEATURE_SET_DIMS,
    FEATURE_SETS,
    UnknownFeatureSetError,
    extract_features,
    feature_matrix,
)
from .posngrams import PosNgramFeatures, pos_ngram_diversity, pos_ngram_feature_vector
from .spacing import (
    SpacingFeatures,
    bn_space_ratio,
    eojeol_pos_diversity,
    mmn_bn_space_ratio,
    spacing_feature_vector,
    unspaced_vx_diversity,
    vx_space_ratio,
)
from .synth import (
    StyleProfile,
    SynthError,
    contrast_profiles,
    generate_corpus,
    generate_document,
    generate_multi,
    load_profile,
    synthetic_tagmap,
    variant,
)
from .tagmap import (
    CanonicalCategory,
    CanonicalTagMap,
    ExclusionRule,
    TagMapError,
    is_excluded_pair,
    load_preset,
    load_tagmap,
    preset_names,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_SETS",
    "CanonicalCategory",
    "CanonicalTagMap",
    "ClassifierError",
    "CommaFeatures",
    "Corpus",
    "CorpusError",
    "CorpusFormatError",
    "CorpusValidationError",
    "EmptyCorpusError",
    "EmptyDistributionError",
    "EvaluationError",
    "EvaluationReport",
    "ExclusionRule",
    "FEATURE_SETS",
    "FEATURE_SET_DIMS",
    "MorphemeToken",
    "PosNgramFeatures",
    "RankFrequencyCurve",
    "Sentence",
    "SpacingFeatures",
    "SplitSpec",
    "StyleProfile",
    "SynthError",
    "TagMapError",
    "TaggedDocument",
    "TrainConfig",
    "TrainedModel",
    "UnknownFeatureSetError",
    "UnknownFieldWarning",
    "VocabGrowthCurve",
    "auc_roc",
    "bn_space_ratio",
    "comma_feature_vector",
    "comma_pos_pair_distribution",
    "contrast_profiles",
    "ensemble_proba",
    "eojeol_pos_diversity",
    "extract_features",
    "feature_matrix",
    "generate_corpus",
    "generate_document",
    "generate_multi",
    "heaps_curve",
    "is_excluded_pair",
    "load_corpus",
    "load_model",
    "load_preset",
    "load_profile",
    "load_tagmap",
    "make_ood_split",
    "mmn_bn_space_ratio",
    "parse_document",
    "pos_before_comma_ratios",
    "pos_distribution",
    "pos_ngram_diversity",
    "pos_ngram_feature_vector",
    "predict_proba",
    "predict_proba_batch",
    "preset_names",
    "run_protocol",
    "save_model",
    "space_before",
    "spacing_feature_vector",
    "synthetic_tagmap",
    "train_logreg",
    "unspaced_vx_diversity",
    "variant",
    "vx_space_ratio",
    "write_corpus",
    "write_report_csv",
    "write_report_json",
    "zipf_curve",
]
