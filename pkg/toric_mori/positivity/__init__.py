"""Divisors and positivity.

Only the divisor layer is re-exported here: the mori package depends on it,
while ``toric_mori.positivity.criteria`` depends on mori.
"""
from .divisors import (
    PositivityError, NotQCartierError, TorusDivisor, CartierData, cartier_data,
    principal_divisor, pullback_divisor,
)

__all__ = [
    'PositivityError', 'NotQCartierError', 'TorusDivisor', 'CartierData', 'cartier_data',
    'principal_divisor', 'pullback_divisor',
]
