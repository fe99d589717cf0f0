"""
Tests for Jacobian coordinates, W^r_d scans, Brill-Noether rank certificates,
linear systems, family sweeps and the genus-4 case check.
"""
import random
from fractions import Fraction

import pytest

from src.errors import IncompatibleDenominator, NonpositiveLength, UnsupportedGraph
from src.graph_core import (Divisor, Point, chain_of_loops, circle, div_of_pl, lattice_denominator,
                            loop_of_loops_scaled, pl_from_lattice_values, tree)
from src.jacobian_bn import (FamilySpec, abel_jacobi, bn_rank, effective_locus_scan, family_sweep, is_dominated,
                             jacobian_basis, lattice_rank, linsys_enum, scan_Wrd, w13_case_check)
from src.oracle import finite_rank, random_lattice_divisor, subdivide
from src.rank import rank
from src.reduction import class_key, is_equivalent

# twenty third chips per case, on and off the quarter grid
CASE_ONE = [f"e1@{Fraction(k, 4)}" for k in range(1, 15)] + [
    "p1a@1/2", "p1b@1/3", "p2a@1/2", "p2b@2/3", "p3a@1/4", "p3b@3/4"]
CASE_TWO = [f"e2@{Fraction(k, 5)}" for k in range(1, 20)] + ["e2@1/7"]
CASE_THREE = [f"e3@{Fraction(k, 7)}" for k in range(1, 21)]


class TestJacobianBasis:
    """Tests for cycle bases and Gram matrices."""

    def test_circle(self):
        """Test that a circle of length 3 has Gram matrix [[3]]."""
        basis = jacobian_basis(circle(3))
        assert basis.gram == ((Fraction(3),),)
        assert basis.cycle_edges == ("e",)

    def test_tree_is_trivial(self):
        """Test that a tree has an empty basis and a zero-dimensional torus."""
        basis = jacobian_basis(tree(4))
        assert basis.genus == 0
        assert abel_jacobi(Divisor.of(basis.graph, "t4"), basis).coordinates == ()

    def test_yu_gram_invertible(self, yu):
        """Test that the Gram matrix is symmetric and inverts exactly."""
        basis = jacobian_basis(yu)
        g = basis.genus
        assert g == 3
        assert all(basis.gram[i][j] == basis.gram[j][i] for i in range(g) for j in range(g))
        product = [[sum(basis.gram[i][k] * basis.inverse[k][j] for k in range(g)) for j in range(g)] for i in range(g)]
        assert product == [[1 if i == j else 0 for j in range(g)] for i in range(g)]

    def test_lattice_rank(self):
        """Test the rational rank of difference vectors."""
        assert lattice_rank([]) == 0
        assert lattice_rank([(Fraction(1, 2), Fraction(0)), (Fraction(1), Fraction(0))]) == 1


class TestAbelJacobi:
    """Tests for the Abel-Jacobi map."""

    def test_basepoint_maps_to_zero(self, lol4):
        """Test that the basepoint has zero coordinates."""
        basis = jacobian_basis(lol4)
        assert set(abel_jacobi(Divisor.of(lol4, basis.basepoint), basis).coordinates) == {0}

    def test_point_on_circle(self):
        """Test that e@1 on a circle of length 3 maps to 1/3."""
        graph = circle(3)
        assert abel_jacobi(Divisor.of(graph, "e@1"), jacobian_basis(graph)).coordinates == (Fraction(1, 3),)

    def test_equivalent_divisors_agree(self, lol112, lol4):
        """Test that the firing pair has one image and v1, w1 differ."""
        basis = jacobian_basis(lol112)
        assert abel_jacobi(Divisor.of(lol112, "v1", "w2", "v3"), basis) == abel_jacobi(Divisor.of(lol112, "w1", "v2", "v3"), basis)
        basis4 = jacobian_basis(lol4)
        assert abel_jacobi(Divisor.of(lol4, "v1"), basis4) != abel_jacobi(Divisor.of(lol4, "w1"), basis4)

    def test_principal_divisors_vanish(self, lol4):
        """Test that div(f) for random lattice functions maps to zero."""
        rng = random.Random(4)
        basis = jacobian_basis(lol4)
        step = lol4.lattice_step(1)
        for _ in range(4):
            values = {}
            f = pl_from_lattice_values(lol4, 1, lambda p: values.setdefault(p, step * rng.randint(-3, 3)))
            assert set(abel_jacobi(div_of_pl(f), basis).coordinates) <= {0}

    def test_class_key_preserves_image(self, lol4):
        """Test that reducing a divisor leaves its image unchanged."""
        rng = random.Random(9)
        basis = jacobian_basis(lol4)
        for _ in range(5):
            d = random_lattice_divisor(lol4, 2, rng.randint(0, 4), rng, extra=1)
            assert abel_jacobi(class_key(d), basis) == abel_jacobi(d, basis)

    def test_equal_images_iff_equivalent(self, lol112):
        """Test that two divisors share an image exactly when they are linearly equivalent."""
        rng = random.Random(12)
        basis = jacobian_basis(lol112)
        step = lol112.lattice_step(1)
        for _ in range(10):
            a = random_lattice_divisor(lol112, 1, 2, rng, extra=0)
            b = random_lattice_divisor(lol112, 1, 2, rng, extra=0)
            values = {}
            f = pl_from_lattice_values(lol112, 1, lambda p: values.setdefault(p, step * rng.randint(-2, 2)))
            c = a + div_of_pl(f)
            assert abel_jacobi(a, basis) == abel_jacobi(c, basis)
            for x, y in ((a, b), (a, c)):
                assert is_equivalent(x, y) == (abel_jacobi(x, basis) == abel_jacobi(y, basis)), f"{x!r} vs {y!r}"


class TestScanWrd:
    """Tests for grid scans of W^r_d."""

    def test_degenerate_single_class(self, gamma0):
        """Test that W^1_3 of the degenerate loop of loops is the class of v1 + v2 + v3."""
        scan = scan_Wrd(gamma0, 1, 3, 1)
        assert scan.keys == [Divisor.of(gamma0, "v1", "v2", "v3")]
        assert scan.dim_estimate == 0
        assert scan.adjacency == []

    def test_empty_cases(self, gamma0):
        """Test negative degree and r > d."""
        assert scan_Wrd(gamma0, 0, -1, 1).classes == []
        assert scan_Wrd(gamma0, 3, 2, 1).classes == []

    def test_bad_denominator(self, gamma0):
        """Test that q must be positive."""
        with pytest.raises(IncompatibleDenominator):
            scan_Wrd(gamma0, 1, 3, 0)

    def test_nesting(self, gamma0):
        """Test that W^1_3 lies inside W^0_3."""
        assert set(scan_Wrd(gamma0, 1, 3, 1).keys) <= set(scan_Wrd(gamma0, 0, 3, 1).keys)

    def test_refinement_keeps_classes(self, gamma0):
        """Test that every class found at q is found again at 2q."""
        assert set(scan_Wrd(gamma0, 0, 2, 1).keys) <= set(scan_Wrd(gamma0, 0, 2, 2).keys)
        assert set(scan_Wrd(gamma0, 1, 3, 1).keys) <= set(scan_Wrd(gamma0, 1, 3, 2).keys)

    def test_classes_confirmed_by_oracle(self, gamma0):
        """Test that the finite-graph rank of every listed class is at least r."""
        scan = scan_Wrd(gamma0, 1, 3, 2)
        assert scan.keys
        for key in scan.keys:
            finite, _ = subdivide(gamma0, lattice_denominator(gamma0, key.support))
            assert finite_rank(finite.divisor(key)) >= 1, f"oracle rejects {key!r}"

    def test_report_shape(self, gamma0):
        """Test the serialized scan."""
        report = scan_Wrd(gamma0, 1, 3, 1).to_report()
        assert len(report.classes) == 1
        assert len(report.classes[0].aj) == gamma0.genus

    @pytest.mark.slow
    def test_loop_of_loops_curve(self, lol4):
        """Test that W^1_3 of the genus-4 loop of loops is a curve of nine grid classes at q=4."""
        scan = scan_Wrd(lol4, 1, 3, 4)
        assert len(scan.classes) == 9
        assert scan.dim_estimate == 1
        assert class_key(Divisor.of(lol4, "v1", "w3", "e2@3")) in scan.keys
        assert all(rank(key) >= 1 for key in scan.keys)

    @pytest.mark.slow
    def test_loop_of_loops_refined(self, lol4):
        """Test that halving the grid step keeps every class and the dimension."""
        coarse = scan_Wrd(lol4, 1, 3, 4)
        fine = scan_Wrd(lol4, 1, 3, 8)
        assert len(fine.classes) == 17
        assert fine.dim_estimate == coarse.dim_estimate == 1
        assert set(coarse.keys) <= set(fine.keys)

    @pytest.mark.slow
    def test_loop_of_loops_confirmed_by_oracle(self, lol4):
        """Test the finite-graph rank of every class of W^1_3 at q=2."""
        for key in scan_Wrd(lol4, 1, 3, 2).keys:
            finite, _ = subdivide(lol4, lattice_denominator(lol4, key.support))
            assert finite_rank(finite.divisor(key)) >= 1, f"oracle rejects {key!r}"

    @pytest.mark.slow
    @pytest.mark.parametrize("t, classes, dim", [("1", 9, 1), ("1/2", 9, 1), ("1/4", 9, 1), ("0", 1, 0)])
    def test_scaled_family(self, t, classes, dim):
        """Test the curve shrinking to a single class as the single edges shrink to zero."""
        scan = scan_Wrd(loop_of_loops_scaled(t), 1, 3, 4)
        assert len(scan.classes) == classes
        assert scan.dim_estimate == dim

    @pytest.mark.slow
    def test_generic_chain_of_loops(self):
        """Test that W^1_3 of a genus-4 chain of loops is two isolated classes."""
        scan = scan_Wrd(chain_of_loops(4), 1, 3, 4)
        assert len(scan.classes) == 2
        assert scan.dim_estimate == 0


class TestEffectiveLocus:
    """Tests for the sampled effective locus."""

    def test_low_degree_has_gaps(self, gamma0):
        """Test that some degree-1 classes have no effective representative."""
        sampled = effective_locus_scan(gamma0, 1, q=2, samples=50, seed=1)
        assert any(not effective for _, effective in sampled)

    def test_degree_g_all_effective(self, gamma0):
        """Test that every class of degree g is effective."""
        sampled = effective_locus_scan(gamma0, gamma0.genus, q=1, samples=30, seed=1)
        assert sampled and all(effective for _, effective in sampled)

    @pytest.mark.slow
    def test_loop_of_loops_below_and_at_genus(self, lol4):
        """Test gaps among degree-3 classes and none among degree-4 classes at q=2."""
        below = effective_locus_scan(lol4, 3, q=2, samples=200, seed=3)
        assert any(not effective for _, effective in below)
        at_genus = effective_locus_scan(lol4, 4, q=2, samples=200, seed=3)
        assert at_genus and all(effective for _, effective in at_genus)


class TestBnRank:
    """Tests for Brill-Noether rank certificates."""

    def test_degenerate_loop_of_loops(self, gamma0):
        """Test that the degenerate loop of loops has rho 0 with a degree-2 witness."""
        certificate = bn_rank(gamma0, 1, 3, 1)
        assert certificate.rho == 0
        assert certificate.mode == "falsified_with_witness"
        assert certificate.witness.degree == 2
        assert certificate.witness_source == "repeated_points"

    def test_witness_is_sound(self, gamma0):
        """Test that the witness plus any lattice point has rank below r."""
        certificate = bn_rank(gamma0, 1, 3, 1)
        for point in gamma0.lattice_points(1):
            assert rank(certificate.witness.plus_point(point)) < 1

    def test_empty_locus(self, gamma0):
        """Test that an empty W^r_d certifies rho = -1."""
        certificate = bn_rank(gamma0, 0, -1, 1)
        assert certificate.rho == -1
        assert certificate.mode == "verified_at_resolution"
        assert certificate.witness is None

    def test_hint_witness(self, lol4):
        """Test that v1 + w1 lies under no rank-one divisor of degree 3."""
        scan = scan_Wrd(lol4, 1, 3, 1)
        certificate = bn_rank(lol4, 1, 3, 1, scan=scan, hints=[Divisor.of(lol4, "v1", "w1")])
        assert certificate.rho == 0
        assert certificate.witness == Divisor.of(lol4, "v1", "w1")
        assert certificate.witness_source == "hint"
        assert not is_dominated(Divisor.of(lol4, "v1", "w1"), scan.keys)
        assert is_dominated(Divisor.of(lol4, "v1"), scan.keys)

    @pytest.mark.slow
    def test_loop_of_loops_quarter_grid(self, lol4):
        """Test rho 0 at q=4 with v1 + w1 as hint and a sound distinct-point witness without one."""
        scan = scan_Wrd(lol4, 1, 3, 4)
        hinted = bn_rank(lol4, 1, 3, 4, scan=scan, hints=[Divisor.of(lol4, "v1", "w1")])
        assert hinted.rho == 0
        assert hinted.witness == Divisor.of(lol4, "v1", "w1")

        swept = bn_rank(lol4, 1, 3, 4, scan=scan)
        assert swept.rho == 0
        assert swept.witness_source == "distinct_points"
        assert swept.witness.degree == 2 and len(swept.witness) == 2
        for point in lol4.lattice_points(4):
            assert rank(swept.witness.plus_point(point)) < 1, f"{swept.witness!r} + {point} has rank 1"

    def test_certificate_report(self, gamma0):
        """Test the serialized certificate."""
        report = bn_rank(gamma0, 1, 3, 1).to_report()
        assert report.rho == 0
        assert sum(entry.coeff for entry in report.witness) == 2


class TestLinearSystems:
    """Tests for lattice enumeration of complete linear systems."""

    def test_yu_interval(self, yu):
        """Test that |v0 + w| with w at the middle of ew is a five-point grid at q=8."""
        members = linsys_enum(Divisor.of(yu, "v0", "ew@1/2"), 8)
        expected = {
            Divisor.of(yu, "v0", "ew@1/2"),
            Divisor.of(yu, "ev@1/8", "ew@5/8"),
            Divisor.of(yu, "ev@1/4", "ew@3/4"),
            Divisor.of(yu, "ev@3/8", "ew@7/8"),
            Divisor.of(yu, "ev@1/2", "w1"),
        }
        assert set(members) == expected
        assert len(members) == 5

    def test_yu_rigid_endpoint(self, yu):
        """Test that v0 + w1 is alone in its linear system."""
        assert linsys_enum(Divisor.of(yu, "v0", "w1"), 4) == [Divisor.of(yu, "v0", "w1")]

    def test_zero_and_negative(self, yu):
        """Test degree zero and negative degree."""
        assert linsys_enum(Divisor.zero(yu), 2) == [Divisor.zero(yu)]
        assert linsys_enum(Divisor.zero(yu) - Divisor.of(yu, "v0"), 2) == []

    def test_bad_denominator(self, yu):
        """Test that the grid denominator must be positive."""
        with pytest.raises(IncompatibleDenominator):
            linsys_enum(Divisor.of(yu, "v0"), 0)


class TestCaseCheck:
    """Tests for the three-case reduction of v1 + w1 + w."""

    def test_case_one(self, lol4):
        """Test a third chip on the first pair of edges."""
        check = w13_case_check(lol4, lol4.parse_point("p1a@1/2"))
        assert check.case == 1
        assert check.basepoint == Point(vertex="v2")
        assert check.fired is None
        assert check.rank == 0

    def test_case_two(self, lol4):
        """Test a third chip on e2 moved to w2."""
        check = w13_case_check(lol4, lol4.parse_point("e2@2"))
        assert check.case == 2
        assert check.basepoint == Point(vertex="v3")
        assert check.fired == Divisor.of(lol4, "v1", "e1@3", "w2")

    def test_case_three(self, lol4):
        """Test a third chip on e3 moved to v3."""
        check = w13_case_check(lol4, lol4.parse_point("e3@3/2"))
        assert check.case == 3
        assert check.basepoint == Point(vertex="v2")
        assert check.fired == Divisor.of(lol4, "e1@3/2", "w1", "v3")
        assert check.to_report().case == 3

    @pytest.mark.parametrize("position, case", [(p, 1) for p in CASE_ONE] + [(p, 2) for p in CASE_TWO]
                             + [(p, 3) for p in CASE_THREE])
    def test_sampled_positions(self, lol4, position, case):
        """Test that v1 + w1 + w has rank 0 for third chips across all three cases."""
        check = w13_case_check(lol4, lol4.parse_point(position))
        assert check.case == case
        assert check.rank == 0
        assert check.reduced[check.basepoint] == 0

    def test_other_graphs_rejected(self, lol112, gamma0):
        """Test that the graph must be a loop of loops with e1 longest."""
        with pytest.raises(UnsupportedGraph):
            w13_case_check(gamma0, Point(vertex="v1"))
        with pytest.raises(UnsupportedGraph):
            w13_case_check(lol112, Point(vertex="v1"))


class TestFamilySweep:
    """Tests for one-parameter sweeps."""

    def test_constant_family(self):
        """Test that a family ignoring t repeats the same row."""
        spec = FamilySpec("degenerate-loop-of-loops", ["0", "1"], parameter=None)
        table = family_sweep(spec, 1, 3, 1)
        assert list(table.columns) == ["t", "classes", "dim_estimate", "rho"]
        assert list(table["t"]) == ["0/1", "1/1"]
        assert table.iloc[0, 1:].tolist() == table.iloc[1, 1:].tolist()

    def test_scaled_family_at_zero(self):
        """Test the degenerate end of the scaled loop of loops."""
        table = family_sweep(FamilySpec("lol4-scaled", ["0"]), 1, 3, 1)
        assert table.iloc[0]["classes"] == 1
        assert table.iloc[0]["dim_estimate"] == 0
        assert table.iloc[0]["rho"] == 0

    def test_errors_skipped_on_request(self):
        """Test that a bad parameter is skipped only when asked."""
        spec = FamilySpec("lol4-scaled", ["-1", "0"])
        assert len(family_sweep(spec, 1, 3, 1, skip_errors=True)) == 1
        with pytest.raises(NonpositiveLength):
            family_sweep(spec, 1, 3, 1)

    @pytest.mark.slow
    def test_sweep_to_generic(self):
        """Test that rho stays 0 from t = 0 to t = 1."""
        table = family_sweep(FamilySpec("lol4-scaled", ["0", "1/2", "1"]), 1, 3, 2)
        assert list(table["rho"]) == [0, 0, 0]
