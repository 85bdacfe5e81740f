"""Robust character-punctured text transmission simulator."""

from .corpus import (Dictionary, TokenizedText, bundled_corpus,
                     bundled_dictionary, detokenize, load_dictionary,
                     tokenize)
from .importance import (FilterBank, ImportanceScorer, ScoreParams,
                         build_filter_bank, estimate_recovery_probability,
                         nonword_character_score, puncture, puncture_text,
                         score_window, select_filter, word_character_score)
from .metrics import (EvalRecord, HashedNgramEmbedder, HttpEmbeddingProvider,
                      bleu, char_word_accuracy, sentence_similarity)
from .recovery import (IndicatedText, LlmEndpointConfig, RecoveredText,
                       indicate, recover_deterministic, recover_llm)
from .spelling import CandidateSet, WordIndex, edit_distance

__version__ = "0.1.0"
