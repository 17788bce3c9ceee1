"""Link-grammar comprehension and generation grounded in qualitative space and time."""

__version__ = "0.1.0"

from .atoms import AtomKind, AtomStore, TruthValue, from_text, to_text
from .grounding import Fact, Grounding, LanguageBundle, comprehend, express, ground, load_bundle
from .generation import generate, roundtrip
from .linkgrammar import Dictionary, load_dictionary, parse
from .qualitative import ALLEN, RCC8, ConstraintNetwork, path_consistency

__all__ = [
    "ALLEN", "RCC8", "AtomKind", "AtomStore", "ConstraintNetwork", "Dictionary", "Fact",
    "Grounding", "LanguageBundle", "TruthValue", "comprehend", "express", "from_text",
    "generate", "ground", "load_bundle", "load_dictionary", "parse", "path_consistency",
    "roundtrip", "to_text",
]
