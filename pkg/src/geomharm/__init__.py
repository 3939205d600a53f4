"""Exact geometric and harmonic geometric polynomials and their identities."""

from .errors import (
    DivisionByZeroPoly,
    DomainError,
    LogResidueError,
    NonvanishingAtOne,
    NonvanishingAtZero,
    NonzeroRemainder,
    ParityError,
)
from .exact_core import (
    Rational,
    SeqTable,
    bernoulli,
    binomial,
    genocchi,
    harmonic,
    poly_bernoulli,
    stirling1_unsigned,
    stirling2,
)
from .geometric import geometric, geometric_order
from .harmonic_geometric import hgp
from .polynomials import Poly, X
from .series_eval import A_fin, A_inf, LogLinValue, direct_sum, hA_fin, hA_inf, hA_tail

__version__ = "0.1.0"
