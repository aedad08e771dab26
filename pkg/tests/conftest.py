import random

import pytest

from cobschur import RingContext, Series, FormalGroupLaw


@pytest.fixture
def small_ctx():
    return RingContext(n_x=3, n_b=2, m_order=2, deg_bound=6, scalars=("t",))


@pytest.fixture
def ufgl(small_ctx):
    return FormalGroupLaw(small_ctx, "universal")


def random_series(ctx, rng, max_terms=5, zero_const=False):
    terms = {}
    names = ["x%d" % i for i in range(1, ctx.n_x + 1)]
    for _ in range(rng.randrange(1, max_terms + 1)):
        exps = {}
        budget = ctx.deg_bound
        for nm in names:
            e = rng.randrange(0, 3)
            budget -= e
            if budget < 0:
                break
            if e:
                exps[nm] = e
        if zero_const and not exps:
            exps[names[0]] = 1
        try:
            key = ctx.key_from_exps(exps)
        except Exception:
            continue
        c = rng.randrange(-4, 5)
        if c:
            terms[key] = terms.get(key, 0) + c
    terms = {k: c for k, c in terms.items() if c != 0}
    if zero_const:
        terms.pop(0, None)
    if not terms:
        terms = {ctx.key_from_exps({names[0]: 1}): 1}
    return Series(ctx, terms, ctx.deg_bound)
