"""Tests for wall relations, the relative Mori cone and extremal primitive relations."""

from fractions import Fraction
from math import gcd
from functools import reduce

import numpy as np
import pytest

from toric_mori.fan import enumerate_walls, find_wall, interior_walls, is_complete, picard_number
from toric_mori.io import parse_fan
from toric_mori.mori import (
    ExtremalPrimitiveRelation, MoriError, Normalization, curve_class, epr_from_relation,
    extremal_primitive_relation, extremal_rays, get_extremal_ray, intersection_number,
    intersection_sign, mori_cone_analysis, relative_mori_cone, relative_picard_number,
    verify_extremal_structure, verify_primitive_closure, wall_relation, witness_total,
)
from toric_mori.positivity import TorusDivisor
from toric_mori.utils import sign
from tests.helpers import blowup_a2_fan, f1_fan, p121_fan, p2_fan


class TestWallRelation:
    """Test primitive relations at interior walls."""

    def test_cone_order_does_not_matter(self, fixture_morphisms):
        """Verify relations are unchanged when cones and the rays inside them are listed in another order."""
        rng = np.random.default_rng(7)
        for name, m in fixture_morphisms.items():
            fan = m.source
            for _ in range(5):
                cones = [list(rng.permutation(c)) for c in fan.max_cones]
                rng.shuffle(cones)
                shuffled = parse_fan({
                    "rank": fan.rank,
                    "rays": [list(r) for r in fan.rays],
                    "max_cones": [[int(i) for i in c] for c in cones],
                })
                assert enumerate_walls(shuffled) == enumerate_walls(fan), name
                for wall in interior_walls(fan):
                    assert wall_relation(shuffled, find_wall(shuffled, wall.face)) == wall_relation(fan, wall), name

    def test_relations_are_exact(self, fixture_morphisms):
        """Verify every wall relation sums to zero, is primitive and is positive off the wall."""
        for name, m in fixture_morphisms.items():
            fan = m.source
            for wall in interior_walls(fan):
                relation = wall_relation(fan, wall)
                total = [0] * fan.rank
                for v, c in relation.coefficients:
                    for k in range(fan.rank):
                        total[k] += c * fan.rays[v][k]
                assert total == [0] * fan.rank, name
                assert reduce(gcd, (abs(c) for _, c in relation.coefficients)) == 1, name
                for cone in wall.adjacent:
                    assert relation.coefficient(wall.off_wall_ray(cone)) > 0, name

    def test_f1_exceptional_wall(self):
        """Verify r0 + r1 - r3 = 0 at the exceptional wall of F1."""
        relation = wall_relation(f1_fan(), find_wall(f1_fan(), (3,)))
        assert relation.coefficients == ((0, 1), (1, 1), (3, -1))
        assert relation.positive_part == (0, 1)
        assert relation.negative_part == (3,)
        assert relation.zero_part == ()

    def test_ruling_wall_zero_part(self):
        """Verify the wall ray of a ruling fiber has coefficient zero."""
        relation = wall_relation(f1_fan(), find_wall(f1_fan(), (0,)))
        assert relation.zero_part == (0,)
        assert relation.positive_part == (2, 3)

    def test_boundary_wall_refused(self):
        """Verify boundary walls have no relation."""
        fan = blowup_a2_fan()
        boundary = next(w for w in enumerate_walls(fan) if not w.interior)
        with pytest.raises(MoriError, match="boundary wall"):
            wall_relation(fan, boundary)


class TestCurveClass:
    """Test curve classes and their normalization."""

    def test_smooth_walls_give_intersection_numbers(self):
        """Verify smooth walls are flagged INTERSECTION."""
        cls = curve_class(f1_fan(), find_wall(f1_fan(), (3,)))
        assert cls.normalization == Normalization.INTERSECTION
        assert cls.coefficients == (Fraction(1), Fraction(1), Fraction(0), Fraction(-1))

    def test_singular_walls_are_primitive(self):
        """Verify walls next to a singular cone are flagged PRIMITIVE."""
        fan = p121_fan()
        cls = curve_class(fan, find_wall(fan, (0,)))
        assert cls.normalization == Normalization.PRIMITIVE
        assert cls.primitive_key() == (1, 2, 1)

    def test_primitive_key_scales(self):
        """Verify proportional classes share a key."""
        cls = curve_class(f1_fan(), find_wall(f1_fan(), (2,)))
        assert cls.primitive_key() == (1, 1, 1, 0)


class TestIntersectionNumbers:
    """Test intersection numbers of divisors with wall curves."""

    def test_line_on_p2(self):
        """Verify a line meets a line once."""
        fan = p2_fan()
        for wall in interior_walls(fan):
            assert intersection_number(fan, TorusDivisor.prime(3, 0), wall) == 1

    def test_anticanonical_on_f1(self):
        """Verify -K . C is 2, 2, 3, 1 on the walls of F1."""
        fan = f1_fan()
        minus_k = TorusDivisor.anticanonical(4)
        values = [intersection_number(fan, minus_k, w) for w in interior_walls(fan)]
        assert values == [2, 2, 3, 1]

    def test_smooth_classes_are_intersection_numbers(self):
        """Verify (D_v . V(w)) equals the class entry on smooth walls."""
        fan = f1_fan()
        for wall in interior_walls(fan):
            cls = curve_class(fan, wall)
            for v in range(4):
                assert intersection_number(fan, TorusDivisor.prime(4, v), wall) == cls.coefficients[v]

    def test_weighted_intersection(self):
        """Verify -K . C on the walls of P(1,2,1)."""
        fan = p121_fan()
        values = [intersection_number(fan, TorusDivisor.anticanonical(3), w) for w in interior_walls(fan)]
        assert all(v > 0 for v in values)
        assert values == [Fraction(2), Fraction(4), Fraction(2)]


class TestMoriConeAnalysis:
    """Test extremal and rejected classes."""

    def test_f1_over_point(self, f1_to_point):
        """Verify F1 has two extremal rays and rejects (1,1,1,0)."""
        analysis = mori_cone_analysis(f1_to_point)
        assert [r.key for r in analysis.extremal] == [(0, 0, 1, 1), (1, 1, 0, -1)]
        assert [[w.face for w in r.walls] for r in analysis.extremal] == [[(0,), (1,)], [(3,)]]
        assert len(analysis.rejected) == 1
        rejected = analysis.rejected[0]
        assert rejected.curve_class.primitive_key() == (1, 1, 1, 0)
        assert [w.face for w in rejected.walls] == [(2,)]
        assert rejected.witness == (Fraction(1), Fraction(1))

    def test_witness_total(self, f1_to_point):
        """Verify witness coefficients recombine the rejected class."""
        rejected = mori_cone_analysis(f1_to_point).rejected[0]
        assert witness_total(f1_to_point, rejected) == tuple(Fraction(x) for x in (1, 1, 1, 0))

    def test_every_class_is_accounted_for(self, fixture_morphisms):
        """Verify each contracted class is either extremal or rejected."""
        for name, m in fixture_morphisms.items():
            analysis = mori_cone_analysis(m)
            keys = {cls.primitive_key() for _, cls in relative_mori_cone(m)}
            extremal = {r.key for r in analysis.extremal}
            rejected = {r.curve_class.primitive_key() for r in analysis.rejected}
            assert keys == extremal | rejected, name
            assert not extremal & rejected, name
            for r in analysis.rejected:
                assert witness_total(m, r) == tuple(Fraction(x) for x in r.curve_class.primitive_key())

    def test_relative_picard_number(self, fixture_morphisms):
        """Verify relative Picard numbers of the fixtures."""
        expected = {
            "p2_to_point": 1, "f1_to_point": 2, "p1xp1_to_p1": 1, "p121_to_point": 1,
            "blowup_to_a2": 1, "atiyah_flop": 1, "weighted_flip": 1,
        }
        for name, m in fixture_morphisms.items():
            assert relative_picard_number(m) == expected[name], name

    def test_relative_picard_bounded_by_picard(self, fixture_morphisms):
        """Verify rho(X/Y) <= rho(X) for complete sources."""
        for m in fixture_morphisms.values():
            if m.target.rank == 0:
                assert relative_picard_number(m) <= picard_number(m.source)

    def test_ray_index_out_of_range(self, p2_to_point):
        """Verify a bad ray index raises IndexError."""
        assert len(extremal_rays(p2_to_point)) == 1
        with pytest.raises(IndexError):
            get_extremal_ray(p2_to_point, 1)


class TestExtremalPrimitiveRelation:
    """Test extremal primitive relations of the fixtures."""

    def test_f1_rays(self, f1_to_point):
        """Verify the ruling and the exceptional curve of F1."""
        ruling = extremal_primitive_relation(f1_to_point, 0)
        assert (ruling.xs, ruling.a, ruling.ys, ruling.b) == ((2, 3), (1, 1), (), ())
        assert ruling.text == "r2 + r3 = 0"
        assert ruling.degree == 2
        exceptional = extremal_primitive_relation(f1_to_point, 1)
        assert exceptional.text == "r0 + r1 = r3"
        assert exceptional.degree == 1
        assert exceptional.w_prime == (3,)
        assert exceptional.sigma_i == ((1,), (0,))

    def test_p2(self, p2_to_point):
        """Verify the single relation of P^2."""
        epr = extremal_primitive_relation(p2_to_point, 0)
        assert epr.text == "r0 + r1 + r2 = 0"
        assert epr.degree == 3

    def test_atiyah(self, atiyah):
        """Verify the flop relation has degree zero."""
        epr = extremal_primitive_relation(atiyah, 0)
        assert epr.text == "r2 + r3 = r0 + r1"
        assert epr.degree == 0
        assert epr.w_tilde == (0, 1, 2, 3)

    def test_weighted(self, weighted):
        """Verify the weighted relation and its reversal."""
        epr = extremal_primitive_relation(weighted, 0)
        assert epr.text == "r2 + r3 = 2*r0 + r1"
        assert epr.degree == -1
        assert epr.reversed().text == "2*r0 + r1 = r2 + r3"
        assert epr.reversed().degree == 1

    def test_accepts_ray_object(self, f1_to_point):
        """Verify an ExtremalRay can be passed instead of an index."""
        ray = get_extremal_ray(f1_to_point, 1)
        assert extremal_primitive_relation(f1_to_point, ray).text == "r0 + r1 = r3"

    def test_epr_from_relation(self):
        """Verify positive and negative parts become the two sides."""
        relation = wall_relation(f1_fan(), find_wall(f1_fan(), (3,)))
        epr = epr_from_relation(relation)
        assert (epr.xs, epr.ys, epr.b) == ((0, 1), (3,), (1,))


class TestIntersectionSign:
    """Test the sign law D_v . C_R."""

    def test_sign_matches_intersection(self, fixture_morphisms):
        """Verify intersection_sign agrees with the sign of D_v . C on every supporting wall."""
        for name, m in fixture_morphisms.items():
            fan = m.source
            for ray in extremal_rays(m):
                epr = extremal_primitive_relation(m, ray)
                for wall in ray.walls:
                    for v in range(len(fan.rays)):
                        value = intersection_number(fan, TorusDivisor.prime(len(fan.rays), v), wall)
                        expected = (value > 0) - (value < 0)
                        assert intersection_sign(epr, v) == expected, (name, v)

    def test_anticanonical_degree(self, fixture_morphisms):
        """Verify sign(-K . C) equals the sign of sum a_i - sum b_j on every supporting wall."""
        for name, m in fixture_morphisms.items():
            fan = m.source
            minus_k = TorusDivisor.anticanonical(len(fan.rays))
            for ray in extremal_rays(m):
                degree = extremal_primitive_relation(m, ray).degree
                for wall in ray.walls:
                    assert sign(intersection_number(fan, minus_k, wall)) == sign(degree), (name, wall.face)

    def test_sign_of_exceptional_ray(self, f1_to_point):
        """Verify E . E < 0 on F1."""
        epr = extremal_primitive_relation(f1_to_point, 1)
        assert [intersection_sign(epr, v) for v in range(4)] == [1, 1, 0, -1]


class TestStructureChecks:
    """Test the extremal structure and primitive closure checks."""

    def test_fixtures_pass(self, fixture_morphisms):
        """Verify both checks pass on every fixture ray."""
        for name, m in fixture_morphisms.items():
            for ray in extremal_rays(m):
                epr = extremal_primitive_relation(m, ray)
                assert verify_extremal_structure(m.source, epr).ok, name
                if is_complete(m.source):
                    assert verify_primitive_closure(m.source, epr).ok, name

    def test_wrong_relation_fails(self):
        """Verify a relation that is not extremal on F1 is caught by both checks."""
        bogus = ExtremalPrimitiveRelation(xs=(0, 2), a=(1, 1), ys=(3,), b=(1,))
        structure = verify_extremal_structure(f1_fan(), bogus)
        assert not structure.ok
        assert any("{2,3}" in v for v in structure.violations)
        closure = verify_primitive_closure(f1_fan(), bogus)
        assert len(closure.violations) == 2

    def test_closure_needs_complete_fan(self):
        """Verify the closure check refuses a non-complete fan."""
        epr = ExtremalPrimitiveRelation(xs=(0, 1), a=(1, 1), ys=(2,), b=(1,))
        report = verify_primitive_closure(blowup_a2_fan(), epr)
        assert report.violations == ["primitive closure check requires a complete fan"]
