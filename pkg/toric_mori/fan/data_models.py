from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

from toric_mori.lattice import IntMatrix, LatticeVector, face_generators, is_independent, rational_rank

# ============= Data Structures =============

# A cone of a fan: strictly increasing indices into the fan's ray list.
Cone = Tuple[int, ...]


def make_cone(indices: Iterable[int]) -> Cone:
    return tuple(sorted(set(int(i) for i in indices)))


def format_cone(cone: Cone) -> str:
    return "{" + ",".join(str(i) for i in cone) + "}"


@dataclass
class ValidationReport:
    """Outcome of a validation pass; empty means valid."""
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, message: str):
        self.violations.append(message)

    def extend(self, other: 'ValidationReport'):
        self.violations.extend(other.violations)

    def to_dict(self) -> Dict:
        return {"ok": self.ok, "violations": list(self.violations)}


@dataclass(frozen=True)
class Fan:
    """A fan in N = Z^rank.

    Rays keep their file order. Maximal cones are stored twice over: simplicial
    ones in ``max_cones`` and those with dependent generators (contraction
    targets) in ``general_cones``. Both lists are sorted.
    """
    rank: int
    rays: Tuple[LatticeVector, ...]
    max_cones: Tuple[Cone, ...]
    general_cones: Tuple[Cone, ...] = ()

    @classmethod
    def build(cls, rank: int, rays: Sequence[Sequence[int]], cones: Iterable[Iterable[int]]) -> 'Fan':
        """Canonical fan: cones sorted, deduplicated and split by simpliciality."""
        rays = tuple(tuple(int(x) for x in r) for r in rays)
        simplicial, general = set(), set()
        for c in cones:
            cone = make_cone(c)
            vectors = [rays[i] for i in cone if 0 <= i < len(rays)]
            if len(vectors) == len(cone) and not is_independent(vectors):
                general.add(cone)
            else:
                simplicial.add(cone)
        return cls(rank, rays, tuple(sorted(simplicial)), tuple(sorted(general)))

    @property
    def simplicial(self) -> bool:
        return not self.general_cones

    @property
    def all_cones(self) -> Tuple[Cone, ...]:
        return tuple(sorted(self.max_cones + self.general_cones))

    def vectors(self, cone: Iterable[int]) -> List[LatticeVector]:
        return [self.rays[i] for i in cone]

    def dimension(self, cone: Cone) -> int:
        return rational_rank(self.vectors(cone))

    def is_general(self, cone: Cone) -> bool:
        return cone in self.general_cones

    def face_of(self, cone: Cone, subset: Iterable[int]) -> Cone:
        """Ray set of the smallest face of ``cone`` containing ``subset``."""
        subset = make_cone(subset)
        if not self.is_general(cone):
            return subset
        point = [sum(self.rays[i][k] for i in subset) for k in range(self.rank)]
        local = face_generators(self.vectors(cone), point)
        return tuple(cone[j] for j in local)

    def is_face(self, subset: Iterable[int]) -> bool:
        """Whether ``subset`` is exactly the ray set of a cone of the fan."""
        subset = make_cone(subset)
        for cone in self.all_cones:
            if set(subset) <= set(cone) and self.face_of(cone, subset) == subset:
                return True
        return False

    def cones_containing(self, subset: Iterable[int]) -> List[Cone]:
        subset = set(subset)
        return [c for c in self.all_cones if subset <= set(c)]

    def sum_of_rays(self, cone: Iterable[int]) -> LatticeVector:
        return tuple(sum(self.rays[i][k] for i in cone) for k in range(self.rank))

    def to_dict(self) -> Dict:
        data = {
            "rank": self.rank,
            "rays": [list(r) for r in self.rays],
            "max_cones": [list(c) for c in self.max_cones],
        }
        if self.general_cones:
            data["general_cones"] = [list(c) for c in self.general_cones]
        return data


@dataclass(frozen=True)
class Wall:
    """An (n-1)-dimensional face with the maximal cones it bounds."""
    face: Cone
    adjacent: Tuple[Cone, ...]

    @property
    def interior(self) -> bool:
        return len(self.adjacent) == 2

    def off_wall_ray(self, cone: Cone) -> int:
        """The ray of an adjacent cone not lying on the wall."""
        (ray,) = set(cone) - set(self.face)
        return ray

    def to_dict(self) -> Dict:
        return {"face": list(self.face), "adjacent": [list(c) for c in self.adjacent]}


@dataclass(frozen=True)
class FanMorphism:
    """A toric morphism X_source -> X_target given by f_N."""
    matrix: IntMatrix
    source: Fan
    target: Fan

    def image(self, v: Sequence[int]) -> LatticeVector:
        return self.matrix.apply(v)

    def to_dict(self) -> Dict:
        return {
            "matrix": [list(r) for r in self.matrix.to_rows()],
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
        }
