"""
Loading fans, morphisms and divisors from JSON files.

Every read or schema failure becomes a FanFormatError; mathematical
validation is left to the fan and morphism checks.
"""
import json
import logging
from pathlib import Path
from typing import Dict, Union

from pydantic import ValidationError

from toric_mori.errors import FanFormatError
from toric_mori.fan.data_models import Fan, FanMorphism
from toric_mori.io.schemas import DivisorFile, FanFile, MorphismFile
from toric_mori.lattice import IntMatrix
from toric_mori.positivity.divisors import TorusDivisor
from toric_mori.utils import parse_rational

logger = logging.getLogger(__name__)


def _read_json(filepath: Union[str, Path]) -> Dict:
    try:
        with open(filepath, 'r') as f:
            return json.load(f)
    except FileNotFoundError as e:
        raise FanFormatError(f"File not found: {filepath}") from e
    except json.JSONDecodeError as e:
        raise FanFormatError(
            f"Invalid JSON in {filepath}\n"
            f"Error at line {e.lineno}, column {e.colno}: {e.msg}"
        ) from e
    except OSError as e:
        raise FanFormatError(f"Cannot read {filepath}: {e}") from e


def _schema_error(filepath, error: ValidationError) -> FanFormatError:
    details = "; ".join(
        f"{'.'.join(str(p) for p in err['loc']) or '<root>'}: {err['msg']}" for err in error.errors()
    )
    return FanFormatError(f"Ill-formed file {filepath}: {details}")


def fan_from_schema(model: FanFile) -> Fan:
    return Fan.build(model.rank, model.rays, model.max_cones + model.general_cones)


def parse_fan(data: Dict, source: str = "<fan>") -> Fan:
    try:
        return fan_from_schema(FanFile.model_validate(data))
    except ValidationError as e:
        raise _schema_error(source, e) from e


def load_fan(filepath: Union[str, Path]) -> Fan:
    """Load a fan file; cones with dependent rays become general cones."""
    fan = parse_fan(_read_json(filepath), str(filepath))
    logger.debug(f"loaded fan of rank {fan.rank} with {len(fan.rays)} rays from {filepath}")
    return fan


def load_morphism(filepath: Union[str, Path]) -> FanMorphism:
    """Load a morphism file; fan references are resolved next to it."""
    filepath = Path(filepath)
    try:
        model = MorphismFile.model_validate(_read_json(filepath))
    except ValidationError as e:
        raise _schema_error(filepath, e) from e

    def resolve(fan) -> Fan:
        if isinstance(fan, str):
            return load_fan(filepath.parent / fan)
        return fan_from_schema(fan)

    source = resolve(model.source)
    target = resolve(model.target)
    try:
        matrix = IntMatrix.from_rows(model.matrix, cols=source.rank)
    except ValueError as e:
        raise FanFormatError(f"Ill-formed matrix in {filepath}: {e}") from e
    return FanMorphism(matrix, source, target)


def parse_divisor(data: Dict, num_rays: int, source: str = "<divisor>") -> TorusDivisor:
    try:
        model = DivisorFile.model_validate(data)
    except ValidationError as e:
        raise _schema_error(source, e) from e
    mapping = {}
    for key, value in model.coeffs.items():
        try:
            index = int(key)
            mapping[index] = parse_rational(value)
        except ValueError as e:
            raise FanFormatError(f"Ill-formed divisor entry {key!r}: {value!r} in {source}") from e
        if not 0 <= index < num_rays:
            raise FanFormatError(f"Divisor in {source} names ray {index}, fan has {num_rays} rays")
    return TorusDivisor.from_mapping(num_rays, mapping)


def load_divisor(filepath: Union[str, Path], num_rays: int) -> TorusDivisor:
    return parse_divisor(_read_json(filepath), num_rays, str(filepath))
