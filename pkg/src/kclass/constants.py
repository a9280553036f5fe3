"""Shared numeric constants.

All logarithms in this package are base 2 unless a name says otherwise.
"""

import math

# Global constant bounding log2|Aut(T)| / ((log2 k)^2 log2 log2 k) over all
# non-abelian simple groups T (with k the automorphism-orbit count on T).
C2 = 1.954

# Bound that holds for every simple group except Alt(5) and PSL(3,4).
C2_GENERIC = 1.613

# Exceptional bounds.
GAMMA_BOUND_ALT5 = 1.727
GAMMA_BOUND_PSL34 = 1.954

LOG2_3 = math.log2(3.0)
LN_3 = math.log(3.0)

# Default ceiling on the number of elements materialized by enumeration.
# Covers every bundled catalog group (largest: S10 with 3 628 800 elements).
DEFAULT_CAP = 5_000_000

# The enumeration engine stores images as bytes.
MAX_ENGINE_DEGREE = 255
