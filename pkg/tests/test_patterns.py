import pytest
from hypothesis import given
from hypothesis import strategies as st

from shakekit.errors import DomainError
from shakekit.patterns import (
    Atom,
    Bar,
    Compose,
    Inverse,
    Leaf,
    NormalForm,
    PatternSyntaxError,
    Pound,
    PoundLeaf,
    Power,
    Star,
    Twist,
    UnassignedAtom,
    eval_invariant,
    normalize,
    parse_pattern,
    render_term,
    retrace_term,
    table_profile,
)

P, Q, R = Atom("P"), Atom("Q"), Atom("R")
W = Atom("W", wrapping_one=True)

def _term_strategy(atom_strategy):
    return st.recursive(
        atom_strategy,
        lambda kids: st.one_of(
            kids.map(Star),
            kids.map(Bar),
            kids.map(Pound),
            kids.map(Inverse),
            st.tuples(kids, st.integers(-3, 3)).map(lambda p: Twist(*p)),
            st.tuples(kids, st.integers(1, 3)).map(lambda p: Power(*p)),
            st.tuples(kids, kids).map(lambda p: Compose(*p)),
        ),
        max_leaves=8,
    )


terms = _term_strategy(st.sampled_from("PQR").map(Atom) | st.just(W))
# wrapping-one atoms have no concrete syntax, so syntax round-trips skip W
renderable_terms = _term_strategy(st.sampled_from("PQR").map(Atom))

linear_profiles = st.tuples(st.integers(-3, 3), st.integers(-3, 3)).map(
    lambda ab: lambda n: ab[0] * n + ab[1]
)
assignments = st.fixed_dictionaries(
    {name: linear_profiles for name in "PQRW"}
)


class TestParser:
    def test_suffix_examples(self):
        assert parse_pattern("P*_3") == Twist(Star(P), 3)
        assert parse_pattern("bar(P)_2") == Twist(Bar(P), 2)
        assert parse_pattern("P^3_1") == Twist(Power(P, 3), 1)
        assert parse_pattern("P^-1") == Inverse(P)
        assert parse_pattern("P#") == Pound(P)
        assert parse_pattern("P_-4") == Twist(P, -4)

    def test_compose_is_left_associative(self):
        assert parse_pattern("P o Q o R") == Compose(Compose(P, Q), R)

    def test_o_always_composes(self):
        # identifiers never contain the letter o
        assert parse_pattern("PoQ") == Compose(P, Q)
        assert parse_pattern("P O Q") == Compose(P, Q)

    def test_parentheses(self):
        assert parse_pattern("(P o Q)^2") == Power(Compose(P, Q), 2)
        assert parse_pattern("((P))") == P

    def test_multichar_names(self):
        assert parse_pattern("Spine2*") == Star(Atom("Spine2"))

    def test_whitespace_insensitive(self):
        assert parse_pattern(" P *_ 3 ") == parse_pattern("P*_3")

    def test_error_positions(self):
        cases = {
            "": 0,
            "P^0": 2,
            "P^^2": 2,
            "P__2": 2,
            "P Q": 2,
            "(P": 2,
        }
        for src, pos in cases.items():
            with pytest.raises(PatternSyntaxError) as exc:
                parse_pattern(src)
            assert exc.value.position == pos, src

    def test_power_zero_rejected(self):
        with pytest.raises(PatternSyntaxError):
            parse_pattern("P^0")
        with pytest.raises(PatternSyntaxError):
            parse_pattern("P^-2")

    def test_constructor_validation(self):
        with pytest.raises(DomainError):
            Power(P, 0)

    @given(renderable_terms)
    def test_render_parse_preserves_normal_form(self, t):
        assert normalize(parse_pattern(render_term(t))) == normalize(t)

    def test_render_examples(self):
        assert render_term(Twist(Star(P), 3)) == "P*_3"
        assert render_term(Compose(Compose(P, Q), R)) == "P o Q o R"
        assert render_term(Power(Compose(P, Q), 2)) == "(P o Q)^2"
        assert render_term(Inverse(P)) == "P^-1"


class TestNormalForm:
    def test_atom(self):
        assert normalize(P) == NormalForm((Leaf("P"),))

    def test_star_of_compose_reverses(self):
        assert str(normalize(parse_pattern("(PoQ)*"))) == "Q* o P*"

    def test_bar_distributes_without_reversing(self):
        assert str(normalize(parse_pattern("bar(PoQ)"))) == "bar(P) o bar(Q)"

    def test_twist_accumulates(self):
        assert normalize(Twist(Twist(P, 2), 3)) == NormalForm((Leaf("P", twist=5),))
        assert str(normalize(parse_pattern("P_2_3"))) == "P_5"

    def test_leaf_rendering(self):
        assert str(normalize(parse_pattern("bar(P*)_2"))) == "bar(P*)_2"
        assert str(normalize(parse_pattern("P#"))) == "P#"

    def test_power_unrolls(self):
        assert normalize(Power(P, 3)) == normalize(Compose(Compose(P, P), P))

    def test_wrapping_one_atom_is_a_pound_leaf(self):
        nf = normalize(W)
        assert len(nf.leaves) == 1
        assert isinstance(nf.leaves[0], PoundLeaf)

    @given(terms)
    def test_leaves_are_flat(self, t):
        for leaf in normalize(t).leaves:
            assert isinstance(leaf, (Leaf, PoundLeaf))

    @given(terms)
    def test_normalize_is_idempotent(self, t):
        once = normalize(t)
        assert normalize(once.term()) == once
        assert normalize(once) == once


class TestRewriteIdentities:
    @given(terms)
    def test_star_involution(self, t):
        assert normalize(Star(Star(t))) == normalize(t)

    @given(terms)
    def test_bar_involution(self, t):
        assert normalize(Bar(Bar(t))) == normalize(t)

    @given(terms, st.integers(-4, 4), st.integers(-4, 4))
    def test_twist_addition(self, t, a, b):
        assert normalize(Twist(Twist(t, a), b)) == normalize(Twist(t, a + b))

    @given(terms, terms)
    def test_star_antidistributes(self, t, u):
        assert normalize(Star(Compose(t, u))) == normalize(Compose(Star(u), Star(t)))

    @given(terms, terms)
    def test_bar_distributes(self, t, u):
        assert normalize(Bar(Compose(t, u))) == normalize(Compose(Bar(t), Bar(u)))

    @given(terms, terms, st.integers(-4, 4))
    def test_twist_distributes(self, t, u, n):
        assert normalize(Twist(Compose(t, u), n)) == normalize(
            Compose(Twist(t, n), Twist(u, n))
        )

    @given(terms)
    def test_inverse_is_bar_star(self, t):
        assert normalize(Inverse(t)) == normalize(Bar(Star(t)))
        assert normalize(Inverse(t)) == normalize(Star(Bar(t)))

    @given(terms, st.integers(-4, 4))
    def test_star_twist_commutation(self, t, n):
        assert normalize(Star(Twist(t, n))) == normalize(Twist(Star(t), -n))

    @given(terms, st.integers(-4, 4))
    def test_bar_twist_commutation(self, t, n):
        assert normalize(Bar(Twist(t, n))) == normalize(Twist(Bar(t), -n))

    @given(terms)
    def test_pound_is_idempotent(self, t):
        assert normalize(Pound(Pound(t))) == normalize(Pound(t))

    @given(terms, terms)
    def test_pound_factors_commute(self, t, u):
        assert normalize(Compose(Pound(t), Pound(u))) == normalize(
            Compose(Pound(u), Pound(t))
        )

    def test_plain_factors_do_not_commute(self):
        assert normalize(Compose(P, Q)) != normalize(Compose(Q, P))

    def test_wrapping_one_collapses(self):
        assert normalize(Star(W)) == normalize(W)
        assert normalize(Twist(W, 5)) == normalize(W)
        assert normalize(Pound(W)) == normalize(W)
        assert normalize(Inverse(W)) == normalize(Bar(W))


class TestRetrace:
    def test_structure(self):
        assert retrace_term(Q, 2, 3) == Compose(
            Power(Twist(Bar(Star(Q)), 2), 3), Power(Q, 3)
        )

    def test_rendering(self):
        assert render_term(retrace_term(Q, 2, 3)) == "bar(Q*)_2^3 o Q^3"

    def test_zero_twist(self):
        nf = normalize(retrace_term(Q, 0, 2))
        assert nf.leaves == (
            Leaf("Q", star=True, bar=True),
            Leaf("Q", star=True, bar=True),
            Leaf("Q"),
            Leaf("Q"),
        )

    def test_rejects_bad_count(self):
        with pytest.raises(DomainError):
            retrace_term(Q, 2, 0)

    @given(terms, st.integers(-3, 3), st.integers(1, 4), assignments)
    def test_eval_identity(self, t, n, c, asg):
        got = eval_invariant(retrace_term(t, n, c), asg)
        assert got == c * (eval_invariant(t, asg) - eval_invariant(Twist(t, n), asg))


class TestEval:
    def test_sign_table(self):
        asg = {"P": table_profile({3: 7, -3: 11, 0: 5})}
        assert eval_invariant(Twist(P, 3), asg) == 7
        assert eval_invariant(Twist(Star(P), 3), asg) == 11
        assert eval_invariant(Twist(Bar(P), 3), asg) == -11
        assert eval_invariant(Twist(Inverse(P), 3), asg) == -7
        assert eval_invariant(P, asg) == 5

    def test_pound_preserves_value(self):
        asg = {"P": table_profile({0: 9})}
        assert eval_invariant(Pound(P), asg) == 9
        assert eval_invariant(W, {"W": table_profile({0: 4})}) == 4

    @given(terms, terms, assignments)
    def test_additive_over_compose(self, t, u, asg):
        assert eval_invariant(Compose(t, u), asg) == eval_invariant(
            t, asg
        ) + eval_invariant(u, asg)

    @given(terms, assignments)
    def test_inverse_negates(self, t, asg):
        assert eval_invariant(Inverse(t), asg) == -eval_invariant(t, asg)
        assert eval_invariant(Compose(t, Inverse(t)), asg) == 0

    @given(terms, assignments)
    def test_normal_form_evaluates_like_term(self, t, asg):
        assert eval_invariant(normalize(t), asg) == eval_invariant(t, asg)

    def test_unassigned_atom(self):
        with pytest.raises(UnassignedAtom) as exc:
            eval_invariant(Compose(P, Q), {"P": table_profile({0: 1})})
        assert exc.value.name == "Q"

    def test_table_profile_domain(self):
        profile = table_profile({0: 1, 2: 5})
        assert profile(2) == 5
        with pytest.raises(DomainError):
            profile(1)
