import random

from nqml.formulas import (
    BOT,
    Box,
    Eq,
    Forall,
    Implies,
    Pred,
    Var,
    alpha_equal,
    alpha_key,
    canonical_formula,
    conj,
    dia,
    disj,
    exists,
    existence,
    free_vars,
    fresh_var,
    neg,
    substitute,
    weight,
)
from nqml.parser import parse_formula as F

x, y, z = Var("x"), Var("y"), Var("z")


def test_free_vars():
    assert free_vars(F("forall x. P(x)")) == frozenset()
    assert free_vars(F("x = y")) == {x, y}
    assert free_vars(F("forall x. R(x, y)")) == {y}


def test_sentence_iff_no_free_vars():
    assert free_vars(F("forall x. forall y. R(x, y)")) == frozenset()
    assert free_vars(F("forall x. R(x, y) -> false")) == {y}


def test_weight():
    assert weight(F("x = y")) == 0
    assert weight(BOT) == 0
    assert weight(F("false -> false")) == 1
    assert weight(F("box forall x. P(x)")) == 2
    assert weight(F("P(x, y)")) == 0


def test_substitute_basic():
    assert substitute(F("P(x)"), x, x) == F("P(x)")
    assert substitute(F("forall x. P(x)"), y, x) == F("forall x. P(x)")
    assert substitute(F("R(x, y)"), y, x) == F("R(y, y)")
    assert substitute(Eq(x, y), z, x) == Eq(z, y)


def test_substitute_capture_avoiding():
    # (forall y. R(x,y))(y/x) must rename the binder
    out = substitute(F("forall y. R(x, y)"), y, x)
    assert alpha_equal(out, F("forall z. R(y, z)"))
    assert y in free_vars(out)


def test_substitute_free_var_postcondition():
    rng = random.Random(7)
    pool = [F(s) for s in [
        "P(x)", "R(x, y)", "x = y", "forall x. R(x, y)", "box P(x) -> P(y)",
        "forall y. R(x, y)", "forall x. forall y. R(x, y) -> P(z)",
    ]]
    for a in pool:
        for u, v in [(x, y), (y, x), (z, x), (x, z)]:
            out = substitute(a, u, v)
            if v in free_vars(a):
                assert free_vars(out) <= (free_vars(a) - {v}) | {u}
            else:
                assert free_vars(out) == free_vars(a)
            assert weight(out) == weight(a)
            rng.shuffle(pool)


def test_alpha_canonical_forms():
    a = F("forall x. P(x) -> forall y. R(y, z)")
    b = F("forall w. P(w) -> forall q. R(q, z)")
    assert alpha_equal(a, b)
    assert canonical_formula(a) == canonical_formula(b)
    assert not alpha_equal(F("forall x. P(x)"), F("forall x. Q(x)"))


def test_canonical_avoids_free_name_clash():
    free = Var("_b0")
    a = Forall(x, Pred("R", (x, free)))
    c = canonical_formula(a)
    assert alpha_equal(a, c)
    assert free in free_vars(c)


def test_sugar_expansions():
    p = F("P")
    assert neg(p) == Implies(p, BOT)
    assert disj(p, F("Q")) == F("~P -> Q")
    assert conj(p, F("Q")) == F("~(P -> ~Q)")
    assert exists(x, F("P(x)")) == F("~forall x. ~P(x)")
    assert dia(p) == F("~box ~P")


def test_existence_is_fresh_exists_identity():
    e = existence(x)
    assert alpha_equal(e, F("~forall y. ~(y = x)"))
    assert free_vars(e) == {x}


def test_fresh_var_avoids():
    avoid = [Var(f"_v{i}") for i in range(1, 50)]
    v = fresh_var(avoid)
    assert v not in avoid
    assert v.name.startswith("_")
    assert fresh_var() != fresh_var()


def test_alpha_key_orders_mixed_formulas():
    pool = [F(s) for s in ["P", "x = y", "false", "box P", "forall x. P(x)"]]
    assert sorted(pool, key=alpha_key)
