"""Exact synthesis of unitaries over the subrings of D[w] for restricted Clifford+T gate sets."""
from .rings import RingInt, RingScalar, RingTag, membership, residue, scalar_tags
from .linalg import (GeneratorWord, MultiLevelOp, RingMatrix, classify_matrix, det_exact, embed, lde,
                     parse_matrix, format_matrix, parse_word, format_word)
from .gatesets import GATESETS, get_gateset
from .circuit import Circuit, Gate, evaluate
from .synth import SynthRequest, SynthResult, synthesize
from .lowering import compile_unitary, lower_generator, lower_word
from .errors import (AncillaError, DeterminantError, DomainError, NotUnitaryError, ParseError,
                     RingSynthError, UnsupportedError, VerificationError)

__version__ = "0.1.0"
