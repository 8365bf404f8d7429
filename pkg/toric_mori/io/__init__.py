from .schemas import FanFile, MorphismFile, DivisorFile
from .loader import load_fan, load_morphism, load_divisor, parse_fan, parse_divisor
from .writer import write_json, write_fan

__all__ = [
    'FanFile', 'MorphismFile', 'DivisorFile',
    'load_fan', 'load_morphism', 'load_divisor', 'parse_fan', 'parse_divisor',
    'write_json', 'write_fan',
]
