import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shakekit.exactlinalg import signature
from shakekit.goeritz import (
    Band,
    BandPresentation,
    GoeritzData,
    add_two_twists,
    band_presentation_from_json,
    classical_signature_goeritz,
    goeritz_form,
    torus_band_presentation,
    verify_two_twist_stability,
)
from shakekit.seifert import an_family, classical_signature_seifert


class TestBandValidation:
    def test_odd_self_writhe_rejected(self):
        with pytest.raises(ValueError):
            Band(orientable=True, self_writhe=3)

    def test_orientable_odd_twists_rejected(self):
        with pytest.raises(ValueError):
            Band(orientable=True, half_twists=1)

    def test_nonorientable_odd_twists_allowed(self):
        band = Band(orientable=False, half_twists=3)
        assert band.half_twists == 3

    def test_crossings_must_be_symmetric(self):
        bands = [Band(orientable=True), Band(orientable=True)]
        with pytest.raises(ValueError):
            BandPresentation(bands, [[0, 1], [2, 0]])

    def test_crossings_diagonal_must_be_zero(self):
        with pytest.raises(ValueError):
            BandPresentation([Band(orientable=True)], [[1]])

    def test_crossings_shape(self):
        with pytest.raises(ValueError):
            BandPresentation([Band(orientable=True)], [[0, 0]])

    def test_default_crossings(self):
        bp = BandPresentation([Band(orientable=True), Band(orientable=False)])
        assert bp.crossings == ((0, 0), (0, 0))
        assert bp.band_count == 2


class TestGoeritzForm:
    def test_diagonal_combines_writhe_and_twists(self):
        bp = BandPresentation(
            [Band(orientable=True, half_twists=2, self_writhe=-4)],
        )
        assert goeritz_form(bp).G == ((-2,),)

    def test_off_diagonal_from_crossings(self):
        bands = [Band(orientable=True), Band(orientable=False, half_twists=1)]
        bp = BandPresentation(bands, [[0, -2], [-2, 0]])
        gd = goeritz_form(bp)
        assert gd.G == ((0, -2), (-2, 1))
        assert gd.nonorientable == frozenset({1})
        assert gd.eta == 1

    def test_eta_sums_nonorientable_block(self):
        gd = GoeritzData([[3, 1, 0], [1, -2, 5], [0, 5, 4]], [0, 2])
        # block entries: G[0][0] + G[0][2] + G[2][0] + G[2][2]
        assert gd.eta == 3 + 0 + 0 + 4

    def test_goeritz_data_validation(self):
        with pytest.raises(ValueError):
            GoeritzData([[0, 1], [2, 0]])
        with pytest.raises(ValueError):
            GoeritzData([[0]], [1])

    def test_json_round_trip(self):
        gd = GoeritzData([[3, 2], [2, 1]], [1])
        assert GoeritzData.from_json(gd.to_json()) == gd

    def test_band_presentation_from_json(self):
        doc = {
            "bands": [
                {"orientable": False, "half_twists": 3},
                {"orientable": True, "self_writhe": 2},
            ],
            "crossings": [[0, 1], [1, 0]],
        }
        bp = band_presentation_from_json(doc)
        assert goeritz_form(bp).G == ((3, 1), (1, 2))
        with pytest.raises(ValueError):
            band_presentation_from_json({"crossings": []})
        with pytest.raises(ValueError):
            band_presentation_from_json({"bands": [{}]})


class TestTorusSignature:
    def test_one_band_form(self):
        gd = goeritz_form(torus_band_presentation(3))
        assert gd.G == ((7,),)
        assert gd.eta == 7

    def test_signature_family(self):
        # sign([2n+1]) = 1 and eta = 2n+1 give sigma = -2n
        for n in range(21):
            assert classical_signature_goeritz(torus_band_presentation(n)) == -2 * n

    def test_unknot(self):
        assert classical_signature_goeritz(torus_band_presentation(0)) == 0

    def test_empty_presentation(self):
        assert classical_signature_goeritz(BandPresentation([])) == 0

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            torus_band_presentation(-1)


class TestAgainstSeifertRoute:
    def test_orientable_presentation_matches_seifert_signature(self):
        # encode A + A^T for a family member as an all-orientable band form;
        # both routes must report the same classical signature
        for n in range(1, 4):
            a = an_family(n)
            dim = len(a)
            sym = [[a[i][j] + a[j][i] for j in range(dim)] for i in range(dim)]
            bands = [
                Band(orientable=True, self_writhe=sym[i][i]) for i in range(dim)
            ]
            crossings = [
                [sym[i][j] if i != j else 0 for j in range(dim)] for i in range(dim)
            ]
            bp = BandPresentation(bands, crossings)
            assert classical_signature_goeritz(bp) == classical_signature_seifert(a)


class TestTwoTwists:
    def test_one_by_one_example(self):
        gd = GoeritzData([[3]])
        gd2 = add_two_twists(gd, [2])
        assert gd2.G == ((3 + 16, 4), (4, 1))
        assert gd2.nonorientable == frozenset({1})
        assert gd2.eta == 1

    def test_zero_linking_appends_plus_one(self):
        gd = GoeritzData([[5, 1], [1, -2]])
        gd2 = add_two_twists(gd, [0, 0])
        assert gd2.G == ((5, 1, 0), (1, -2, 0), (0, 0, 1))
        assert signature(gd2.G) == signature(gd.G) + 1

    def test_empty_form(self):
        gd2 = add_two_twists(GoeritzData([]), [])
        assert gd2.G == ((1,),)
        assert gd2.eta == 1

    def test_rejects_nonorientable_input(self):
        with pytest.raises(ValueError):
            add_two_twists(GoeritzData([[3]], [0]), [1])

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            add_two_twists(GoeritzData([[3]]), [1, 2])

    def test_stability_examples(self):
        assert verify_two_twist_stability(GoeritzData([[3]]), [2])
        assert verify_two_twist_stability(GoeritzData([[0, 1], [1, 0]]), [3, -1])

    @given(
        st.integers(0, 5).flatmap(
            lambda n: st.tuples(
                st.lists(
                    st.lists(st.integers(-4, 4), min_size=n, max_size=n),
                    min_size=n,
                    max_size=n,
                ),
                st.lists(st.integers(-3, 3), min_size=n, max_size=n),
            )
        )
    )
    def test_signature_never_moves(self, data):
        entries, l = data
        n = len(entries)
        sym = [[entries[i][j] + entries[j][i] for j in range(n)] for i in range(n)]
        gd = GoeritzData(sym)
        gd2 = add_two_twists(gd, l)
        assert signature(gd2.G) == signature(gd.G) + 1
        assert verify_two_twist_stability(gd, l)

    def test_stability_random_sweep(self):
        rng = random.Random(2718)
        for _ in range(100):
            dim = rng.randint(0, 6)
            m = [[0] * dim for _ in range(dim)]
            for i in range(dim):
                for j in range(i, dim):
                    m[i][j] = m[j][i] = rng.randint(-4, 4)
            l = [rng.randint(-3, 3) for _ in range(dim)]
            assert verify_two_twist_stability(GoeritzData(m), l)
