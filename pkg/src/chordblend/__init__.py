"""chordblend: blend the chord-transition spaces of two musical idioms.

The pipeline: represent transitions by their harmonic features, train or
assemble idioms as first-order Markov matrices, cross-combine transition
pairs into candidate blends, score them against user-selected arguments
(association, asymmetry, rate), keep a pool of the best blends, and embed
them in an extended sectored transition matrix that bridges both idioms.
"""

from .arguments import (Argument, ArgumentSet, Question, ScoredBlend, association,
                        asymmetry, preference_key, prefers, psi, rate, score_blend, val)
from .blending import (BlendCandidate, BlendPool, Provenance, blend_idioms,
                       generate_candidates, pool_to_jsonable, score_candidate)
from .chords import (Chord, ChordTransition, DicVector, FeatureVector,
                     dic_vector, directed_interval_class, extract_features)
from .errors import ChordBlendError
from .extension import (BridgePath, ExtendedMatrix, Sector, bridge_paths,
                        build_extended, classify_sector, extended_to_jsonable,
                        load_extended)
from .idioms import (Idiom, IdiomRegistry, TransitionMatrix, artificial_idiom,
                     c_major_preset, fsharp_major_preset, load_idiom, save_idiom,
                     train_idiom, transpose_idiom)
from .sampling import WalkConfig, sample_walk, walk_chords

__version__ = "0.1.0"
