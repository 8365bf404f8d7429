"""
File schemas for fans, morphisms and divisors.
"""
from typing import Dict, List, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, StrictStr, model_validator


class FanFile(BaseModel):
    """{"rank": n, "rays": [[int,...],...], "max_cones": [[idx,...],...]}"""
    model_config = ConfigDict(extra="ignore")

    rank: StrictInt = Field(ge=0)
    rays: List[List[StrictInt]]
    max_cones: List[List[StrictInt]]
    general_cones: List[List[StrictInt]] = []

    @model_validator(mode="after")
    def check_shape(self) -> 'FanFile':
        for i, ray in enumerate(self.rays):
            if len(ray) != self.rank:
                raise ValueError(f"ray {i} has {len(ray)} entries, expected {self.rank}")
        for cone in self.max_cones + self.general_cones:
            for index in cone:
                if not 0 <= index < len(self.rays):
                    raise ValueError(f"cone {cone} references missing ray {index}")
            if len(set(cone)) != len(cone):
                raise ValueError(f"cone {cone} repeats a ray")
        return self


class MorphismFile(BaseModel):
    """{"matrix": [[int,...],...], "source": <fan or path>, "target": <fan or path>}"""
    model_config = ConfigDict(extra="ignore")

    matrix: List[List[StrictInt]]
    source: Union[FanFile, StrictStr]
    target: Union[FanFile, StrictStr]


class DivisorFile(BaseModel):
    """{"coeffs": {"<ray index>": "p/q" or int, ...}}"""
    model_config = ConfigDict(extra="ignore")

    coeffs: Dict[StrictStr, Union[StrictInt, StrictStr]]
