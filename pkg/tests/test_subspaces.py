import pytest

from negabench.core import BitVector, InvalidSpecError
from negabench.subspaces import (
    GammaSpec,
    LinearSubspace,
    build_S1,
    build_S2,
    build_S3,
    build_S4,
    build_T,
    build_modifier_set,
    coset_representatives,
    in_pair_antirepetition,
    in_pair_repetition,
    orbit,
    orbit_representative,
    orbit_representatives,
    orthogonal_complement,
    pair_repetition_members,
    repetition_sets,
)


class TestLinearSubspace:
    def test_span_and_membership(self):
        s = LinearSubspace.span(4, [0b0101, 0b1010])
        assert s.dim == 2
        members = sorted(v.bits for v in s.members())
        assert members == [0, 5, 10, 15]
        assert s.contains(BitVector(4, 15))
        assert not s.contains(BitVector(4, 1))

    def test_dependent_generators_collapse(self):
        s = LinearSubspace.span(3, [0b011, 0b101, 0b110])
        assert s.dim == 2

    def test_orthogonal_complement(self):
        s = LinearSubspace.span(4, [0b0101, 0b1010])
        perp = orthogonal_complement(s)
        assert perp.dim == 2
        assert sorted(v.bits for v in perp.members()) == [0, 5, 10, 15]

    def test_complement_dims_add_up(self):
        s = LinearSubspace.span(5, [0b00111])
        assert orthogonal_complement(s).dim == 4

    def test_coset_representatives(self):
        s = LinearSubspace.span(4, [0b0011, 0b1100])
        reps = [r.bits for r in coset_representatives(s)]
        assert reps == [0, 1, 4, 5]  # minimal index in each coset


class TestRepetitionSets:
    def test_single_pair(self):
        rs = repetition_sets(1, 1)
        assert sorted(rs.a.indices()) == [0, 3]
        assert sorted(rs.b.indices()) == [1, 2]

    def test_wider_blocks(self):
        rs = repetition_sets(2, 1)
        assert sorted(rs.a.indices()) == [0, 15]
        assert sorted(rs.b.indices()) == [0b0011, 0b1100]

    def test_pair_predicates(self):
        assert in_pair_repetition(0b1111, 2)
        assert in_pair_repetition(0b0000, 2)
        assert not in_pair_repetition(0b0111, 2)
        assert in_pair_antirepetition(0b0110, 2)
        assert not in_pair_antirepetition(0b0011, 2)

    def test_members_enumeration(self):
        members = pair_repetition_members(2)
        assert sorted(members) == [0, 3, 12, 15]
        assert all(in_pair_repetition(m, 2) for m in members)


class TestOrbits:
    def test_orbit_contents(self):
        assert sorted(orbit(BitVector(3, 1)).indices()) == [1, 2, 4]
        assert sorted(orbit(BitVector(4, 0b0101)).indices()) == [5, 10]

    def test_representative_is_minimal(self):
        assert orbit_representative(BitVector(4, 0b1000)).bits == 1

    def test_representatives_n3(self):
        assert [r.bits for r in orbit_representatives(3)] == [0, 1, 3, 7]

    def test_representatives_n4(self):
        assert [r.bits for r in orbit_representatives(4)] == [0, 1, 3, 5, 7, 15]

    def test_orbit_sizes_partition_space(self):
        total = sum(len(orbit(r)) for r in orbit_representatives(4))
        assert total == 16


class TestGammaSpecValidation:
    def test_lengths(self):
        with pytest.raises(InvalidSpecError):
            GammaSpec(1, "S1", (BitVector(3, 1),))
        with pytest.raises(InvalidSpecError):
            GammaSpec(1, "S2", (BitVector(2, 1),))

    def test_duplicates_rejected(self):
        with pytest.raises(InvalidSpecError):
            GammaSpec(1, "S1", (BitVector(2, 1), BitVector(2, 1)))

    def test_esets_only_for_s3_s4(self):
        with pytest.raises(InvalidSpecError):
            GammaSpec(1, "S1", (BitVector(2, 1),), ("B",))
        with pytest.raises(InvalidSpecError):
            GammaSpec(1, "S3", (BitVector(2, 1),))  # missing esets

    def test_eset_symbols(self):
        with pytest.raises(InvalidSpecError):
            GammaSpec(1, "S3", (BitVector(2, 1),), ("2",))

    def test_s2_same_coset_rejected(self):
        # 0000 and 1100 differ by a pair-repetition element
        with pytest.raises(InvalidSpecError):
            GammaSpec(1, "S2", (BitVector(4, 0b0000), BitVector(4, 0b0011)))

    def test_rotation_closure_checked(self):
        with pytest.raises(InvalidSpecError):
            GammaSpec(2, "T", (BitVector(4, 1),), rotation_closed=True)
        GammaSpec(2, "T", tuple(BitVector(4, b) for b in (1, 2, 4, 8)),
                  rotation_closed=True)

    def test_gamma_halves(self):
        spec = GammaSpec(2, "S1", (BitVector.from_string("0111"),))
        g1, g2 = spec.gamma_halves(0)
        assert (g1, g2) == (0b10, 0b11)

    def test_e_values(self):
        spec = GammaSpec(1, "S3", (BitVector(2, 0),), ("B",))
        assert spec.e_values(0) == (0, 1)


class TestBuilders:
    def test_s1_defining_equations(self):
        spec = GammaSpec(2, "S1", (BitVector.from_string("0001"), BitVector.from_string("1010")))
        s = build_S1(spec)
        assert len(s) == 2 * 16  # |Gamma| * 4^k
        halves = [spec.gamma_halves(i) for i in range(2)]
        for z in range(1 << 8):
            x, y = z & 0xF, z >> 4
            xp, xpp = x & 3, x >> 2
            yp, ypp = y & 3, y >> 2
            member = any(xpp == xp ^ g1 and ypp == yp ^ g2 for g1, g2 in halves)
            assert (BitVector(8, z) in s) == member

    def test_s2_defining_membership(self):
        g = BitVector.from_string("1000")
        s = build_S2(GammaSpec(1, "S2", (g,)))
        assert len(s) == 16  # |A|^2 per gamma
        for z in range(1 << 8):
            u, v = z & 0xF, z >> 4
            member = in_pair_repetition(u, 2) and in_pair_repetition(v ^ g.bits, 2)
            assert (BitVector(8, z) in s) == member

    def test_s3_size(self):
        spec = GammaSpec(1, "S3", (BitVector(2, 1), BitVector(2, 2)), ("B", "1"))
        # per gamma: 2^k x' choices, free x_m, 2^k y' choices, |E| y_m choices
        assert len(build_S3(spec)) == (2 * 2 * 2 * 2) + (2 * 2 * 2 * 1)

    def test_s4_size(self):
        spec = GammaSpec(1, "S4", (BitVector(4, 0),), ("0",))
        assert len(build_S4(spec)) == 4 * 4 * 2

    def test_t_defining_equations(self):
        gammas = (BitVector(2, 0b01), BitVector(2, 0b10))
        s = build_T(GammaSpec(1, "T", gammas, rotation_closed=True))
        for z in range(16):
            x, y = z & 3, z >> 2
            assert (BitVector(4, z) in s) == ((x ^ y) in (1, 2))

    def test_dispatcher_matches_builders(self):
        spec = GammaSpec(1, "S1", (BitVector(2, 3),))
        assert sorted(build_modifier_set(spec).indices()) == sorted(build_S1(spec).indices())
