"""Deterministic suffix-reading automata: semantics, DFA conversion, derivation and minimization."""

from .core import (EPSILON, AutomatonError, Dfa, Dsa, SizeMetrics, Word, chars, dfa_as_dsa,
                   is_prefix, is_suffix, longest_suffix_in, out_labels, out_prefix_closure,
                   prefix_closure, reachable_states, rename, show, size_metrics, tokens, validate)
from .derivation import (DerivationReport, Kind, UselessnessVerdict, classify_transition, derive,
                         derive_smallest, enumerate_suffix_tracking_sets, induced_dsa,
                         is_suffix_compatible, is_suffix_tracking, is_well_formed_set, out_mod,
                         remove_useless, simple_words, sp_from)
from .dfa_ops import (EquivClasses, EquivResult, complete, dfa_equiv, dfa_isomorphic, dsa_equiv,
                      language_equiv, minimize, residual_equiv)
from .hardness import (Graph, build_vc_dfa, default_theta, reduction_size_check,
                       vc_sts_correspondence)
from .semantics import Move, Run, dfa_accepts, dfa_run, dsa_accepts, dsa_run, dsa_step
from .strong import (MinimalityCertificate, brute_force_min_dsa, dsa_residual_equiv,
                     is_dsa_well_formed, is_strong, minimize_strong)
from .textio import Document, ParseError, parse, serialize, to_dot
from .tracking import TrackState, Tracking, tracking_dfa, tracking_size_bound_check

__version__ = "0.1.0"
