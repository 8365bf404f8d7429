"""
Writing fans and contraction outputs.

Output is deterministic: no timestamps, stable key order.
"""
import json
import logging
from pathlib import Path
from typing import Dict, Optional, Union

from toric_mori.fan.data_models import Fan

logger = logging.getLogger(__name__)


def write_json(data: Dict, filepath: Union[str, Path], indent: int = 2):
    path = Path(filepath)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w') as f:
        json.dump(data, f, indent=indent)
        f.write("\n")
    logger.info(f"wrote {path}")


def write_fan(fan: Fan, filepath: Union[str, Path], indent: int = 2, extra: Optional[Dict] = None):
    """Fan JSON, plus extra top-level keys such as "quotient_matrix"."""
    data = fan.to_dict()
    if extra:
        data.update(extra)
    write_json(data, filepath, indent)
