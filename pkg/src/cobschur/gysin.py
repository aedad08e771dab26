"""Gysin pushforwards, residues, Segre windows, and degeneracy-locus classes.

The flag-bundle pushforwards are coset symmetrizers (see schur.symmetrize);
the projective-bundle residue and the Segre generating series expand
rational expressions "at infinity" in one auxiliary variable.  The
expansion variable u = 1/t is tracked by integer window keys, never as a
ring generator, so all coefficient arithmetic stays in the truncated
series ring.  Finiteness of every window slice follows from the degree
truncation: a term at u^j with x-degree d in a homogeneous object of
total degree g has negative weight d - g - j, and both d and the weight
are capped by the context.
"""

from __future__ import annotations

import json

from .ring import Series, Permutation, RingError
from .schur import (SymmetrizerSpec, Partition, coset_reps, subgroup_elements,
                    symmetrize, partial_flag_spec, factorial_power,
                    bracket_monomial, new_universal_schur, universal_schur_kl,
                    rho)


class WindowExhausted(RingError):
    """A requested coefficient lies outside the representable u-window."""


class NotInvariant(ValueError):
    """The input fails the stabilizer-invariance hypothesis."""


class ConsistencyError(RingError):
    """Two computation paths that must agree did not (internal assertion)."""


# ---------------------------------------------------------------------------
# flag-bundle pushforwards


def _check_block_invariance(f, blocks):
    """f must be symmetric within each block of consecutive x-variables."""
    start = 1
    for m in blocks:
        for i in range(start, start + m - 1):
            images = list(range(1, f.ctx.n_x + 1))
            images[i - 1], images[i] = images[i], images[i - 1]
            if not (f.act_permutation(Permutation(images)) == f):
                raise NotInvariant(
                    "input is not invariant under swapping x%d, x%d" % (i, i + 1))
        start += m


def pushforward_full_flag(fgl, f, n):
    """sum over all of S_n of w . [f / prod_{i<j} (x_i +_L conj(x_j))]."""
    pairs = tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
    spec = SymmetrizerSpec(tuple(range(1, n + 1)), pairs, coset_reps(n, (1,) * n))
    return symmetrize(fgl, f, spec)


def pushforward_partial_flag(fgl, f, lam, n, check=True):
    """Coset sum over S_n / stab(lam) with block-separated denominator pairs."""
    lam = lam if isinstance(lam, Partition) else Partition(lam, n=n)
    if check:
        _check_block_invariance(f, lam.block_sizes)
    return symmetrize(fgl, f, partial_flag_spec(lam))


def pushforward_between_flags(fgl, f, lam, n):
    """Blockwise symmetrization: sum over prod_r S_{m_r} with in-block pairs."""
    lam = lam if isinstance(lam, Partition) else Partition(lam, n=n)
    pairs = tuple((i, j)
                  for r in range(1, len(lam.block_sizes) + 1)
                  for i in range(lam.nu[r - 1] + 1, lam.nu[r] + 1)
                  for j in range(i + 1, lam.nu[r] + 1))
    spec = SymmetrizerSpec(tuple(range(1, n + 1)), pairs,
                           subgroup_elements(n, lam.block_sizes))
    return symmetrize(fgl, f, spec)


def grassmannian_pushforward(fgl, f, q, n, check=True):
    """Sum over S_n / (S_q x S_{n-q}) with pairs {i <= q < j}."""
    if not 1 <= q <= n:
        raise ValueError("q out of range")
    if check:
        _check_block_invariance(f, (q, n - q) if q < n else (n,))
    pairs = tuple((i, j) for i in range(1, q + 1) for j in range(q + 1, n + 1))
    blocks = (q, n - q) if q < n else (n,)
    spec = SymmetrizerSpec(tuple(range(1, n + 1)), pairs, coset_reps(n, blocks))
    return symmetrize(fgl, f, spec)


# ---------------------------------------------------------------------------
# Laurent windows


class LaurentWindow:
    """A doubly-bounded expansion sum_{k_min <= k <= k_max} c_k u^k."""

    def __init__(self, ctx, var, k_min, k_max, coeffs):
        if k_min > k_max:
            raise ValueError("empty window: k_min > k_max")
        self.ctx = ctx
        self.var = var
        self.k_min = k_min
        self.k_max = k_max
        self.coeffs = {k: c for k, c in coeffs.items()
                       if k_min <= k <= k_max and not c.is_zero()}

    def coeff(self, k):
        if k < self.k_min or k > self.k_max:
            raise WindowExhausted(
                "coefficient u^%d outside window [%d, %d]"
                % (k, self.k_min, self.k_max))
        return self.coeffs.get(k, Series.zero(self.ctx))

    def to_json_dict(self):
        return {
            "var": self.var, "k_min": self.k_min, "k_max": self.k_max,
            "context": self.ctx.to_json_dict(),
            "coeffs": {str(k): self.coeffs[k].to_json_dict()["terms"]
                       for k in sorted(self.coeffs)},
        }

    def to_json(self, indent=None):
        return json.dumps(self.to_json_dict(), indent=indent, sort_keys=True)

    def __repr__(self):
        return "<LaurentWindow %s^[%d..%d], %d nonzero>" % (
            self.var, self.k_min, self.k_max, len(self.coeffs))


def _wmul(ctx, A, B, lo, hi):
    out = {}
    for ja, a in A.items():
        for jb, b in B.items():
            j = ja + jb
            if j < lo or j > hi:
                continue
            p = a * b
            if p.is_zero():
                continue
            if j in out:
                out[j] = out[j] + p
            else:
                out[j] = p
    return {j: c for j, c in out.items() if not c.is_zero()}


def _inverse_x_powers(fgl, i, top):
    """Powers 1..top of the formal inverse of x_i."""
    xb = fgl.x_inverse(i)
    out = [None, xb]
    for q in range(2, top + 1):
        out.append(out[-1] * xb)
    return out


def _pair_factor_window(fgl, i, lo):
    """r_i with t +_L conj(x_i) = t * (1 + r_i), as a u-window on [lo, 1].

    r_i = u * (conj(x_i) + sum_{p,q >= 1} a_{p,q} t^p conj(x_i)^q); each
    term carries positive x-degree, so geometric inversion terminates.
    """
    ctx = fgl.ctx
    D = ctx.deg_bound
    pmax = max(0, 1 - lo)
    powers = _inverse_x_powers(fgl, i, D)
    out = {1: powers[1]}
    for p in range(1, pmax + 1):
        j = 1 - p
        acc = Series.zero(ctx)
        for q in range(1, D + 1):
            if p + q - 1 > ctx.m_weight_cap:
                break
            a = fgl.a_coefficient(p, q)
            if not a.is_zero():
                acc = acc + a * powers[q]
        if not acc.is_zero():
            out[j] = acc
    return out


def _inv_pair_window(fgl, i, lo, hi):
    """Window of 1 / (t +_L conj(x_i)) on [lo, hi].

    Partial powers of r keep their natural tops (the s-th power reaches
    u^s): later factors with negative keys pull high terms back into the
    requested window, so truncating partials at ``hi`` would lose terms.
    """
    ctx = fgl.ctx
    D = ctx.deg_bound
    r = _pair_factor_window(fgl, i, lo - 1 - D)
    acc = {0: Series.const(ctx, 1)}
    total = {0: Series.const(ctx, 1)}
    neg_r = {j: -c for j, c in r.items()}
    for s in range(1, D + 1):
        acc = _wmul(ctx, acc, neg_r, lo - 1 - (D - s), s)
        if not acc:
            break
        for j, c in acc.items():
            total[j] = total.get(j, Series.zero(ctx)) + c
    return {j + 1: c for j, c in total.items()
            if lo <= j + 1 <= hi and not c.is_zero()}


def _omega_inverse_window(fgl, lo):
    """Window of 1 / (1 + sum_{p>=1} a_{p,1} u^{-p}) on [lo, 0]."""
    ctx = fgl.ctx
    g = {}
    for p in range(1, max(0, -lo) + 1):
        if p > ctx.m_weight_cap:
            break
        a = fgl.a_coefficient(p, 1)
        if not a.is_zero():
            g[-p] = -a
    total = {0: Series.const(ctx, 1)}
    acc = {0: Series.const(ctx, 1)}
    for s in range(1, max(0, -lo) + 1):
        acc = _wmul(ctx, acc, g, lo, 0)
        if not acc:
            break
        for j, c in acc.items():
            total[j] = total.get(j, Series.zero(ctx)) + c
    return total


def required_weight_cap(n, deg_bound, k_min):
    """Weight cap that keeps a Segre/residue window slice exact."""
    return 2 * deg_bound + 2 * n + 4 + max(0, -k_min)


def _denominator_inverse_window(fgl, n, lo, hi):
    """Window of 1 / (omega-denominator * prod_i (t +_L conj(x_i))).

    Each inverse pair factor has natural top D + 1 (a term at u^j carries
    x-degree >= j - 1) and the omega factor has top 0.  Partial products
    keep their accumulated natural top; the lower margin of a partial is
    the request minus the tops still to come.
    """
    ctx = fgl.ctx
    D = ctx.deg_bound
    factors = [_omega_inverse_window(fgl, lo - n * (D + 1))]
    for i in range(1, n + 1):
        factors.append(_inv_pair_window(fgl, i, lo - (n - 1) * (D + 1), D + 1))
    acc = factors[0]
    tops = [0] + [D + 1] * n
    top_so_far = 0
    for idx in range(1, len(factors)):
        remaining = sum(tops[idx + 1:])
        top_so_far += tops[idx]
        acc = _wmul(ctx, acc, factors[idx], lo - remaining,
                    top_so_far if remaining else hi)
    return acc


def segre_series(fgl, n, k_min, k_max):
    """The window of the Segre generating series sum_k S_k(x_n) u^k.

    The coefficient at u^k is the one-row Damon-type value S_k(x_n);
    coefficients with k above the context degree bound are not
    representable at this truncation.
    """
    ctx = fgl.ctx
    D = ctx.deg_bound
    if k_min > k_max:
        raise ValueError("k_min exceeds k_max")
    if k_max > D:
        raise WindowExhausted(
            "coefficient u^%d has x-degree >= %d > bound %d; raise --deg"
            % (k_max, k_max, D))
    need = required_weight_cap(n, D, k_min)
    weighted = ctx.m_order > 0 or "beta" in ctx.scalars
    if weighted and ctx.m_weight_cap < min(need, 63):
        raise WindowExhausted(
            "window needs m_weight_cap >= %d (context has %d)"
            % (need, ctx.m_weight_cap))
    lo, hi = k_min + n, k_max + n
    inv = _denominator_inverse_window(fgl, n, lo, hi)
    coeffs = {j - n: c for j, c in inv.items()}
    return LaurentWindow(ctx, "u", k_min, k_max, coeffs)


def _poly_layers(fgl, f, aux, check_x_free=True):
    """Split a Series into {exponent tuple over aux vars: x-free Series}."""
    ctx = fgl.ctx
    layers = {}
    for key, c in f.terms.items():
        es = []
        base = key
        for nm in aux:
            e = ctx.key_exp(key, nm)
            es.append(e)
            base -= e * ctx.gen_unit(nm)
        if check_x_free:
            for i in range(1, ctx.n_x + 1):
                if ctx.key_exp(key, "x%d" % i):
                    raise ValueError("input coefficients must be x-free")
        layer = layers.setdefault(tuple(es), {})
        layer[base] = layer.get(base, 0) + c
    return {es: Series(ctx, terms, f.bound) for es, terms in layers.items()}


def projective_residue(fgl, f, n, var="s"):
    """Residue at the origin of f(t) dt / (omega-unit * prod (t +_L conj x_i)).

    ``f`` is either a polynomial in the auxiliary variable ``var`` with
    x-free coefficients, or a dict {exponent: coefficient Series} (needed
    when the t-degree exceeds the context degree bound).  Expansion is at
    infinity (every x_i / t small): the answer is the u^1 coefficient of
    f(1/u) * window.
    """
    ctx = fgl.ctx
    if isinstance(f, Series):
        layers = {es[0]: c for es, c in _poly_layers(fgl, f, (var,)).items()}
    else:
        layers = dict(f)
        for c in layers.values():
            for key in c.terms:
                for i in range(1, ctx.n_x + 1):
                    if ctx.key_exp(key, "x%d" % i):
                        raise ValueError("input coefficients must be x-free")
    fw = {-e: c for e, c in layers.items() if not c.is_zero()}
    top = max(layers) if layers else 0
    inv = _denominator_inverse_window(fgl, n, 1 - top, 1 + top)
    out = _wmul(ctx, fw, inv, 1, 1)
    return out.get(1, Series.zero(ctx))


# ---------------------------------------------------------------------------
# multivariate windows (Darondeau-Pragacz extraction)


def _mwmul(ctx, A, B, los, his):
    out = {}
    r = len(los)
    for ja, a in A.items():
        for jb, b in B.items():
            j = tuple(ja[i] + jb[i] for i in range(r))
            ok = True
            for i in range(r):
                if j[i] < los[i] or j[i] > his[i]:
                    ok = False
                    break
            if not ok:
                continue
            p = a * b
            if p.is_zero():
                continue
            if j in out:
                out[j] = out[j] + p
            else:
                out[j] = p
    return {j: c for j, c in out.items() if not c.is_zero()}


def _tsum_window(fgl, pos_i, pos_j, r, tdeg):
    """(t_j +_L conj(t_i)) as an r-variable window (components <= 0).

    Computed from the two-variable formal difference on a scratch
    context; per-variable degrees are truncated at ``tdeg``.
    """
    ctx = fgl.ctx
    sc, fg = fgl._scratch(min(2 * tdeg, 60))
    from .fgl import _rebuild
    F = fg.formal_sum(Series.gen(sc, "u"), fg.formal_inverse(Series.gen(sc, "v")))
    out = {}
    for key, c in F.terms.items():
        a = sc.key_exp(key, "u")    # power of t_j
        b = sc.key_exp(key, "v")    # power of t_i
        if a > tdeg or b > tdeg:
            continue
        base = sc.exps_from_key(key)
        base.pop("u", None)
        base.pop("v", None)
        coeff = _rebuild(Series(sc, {sc.key_from_exps(base): c}, sc.deg_bound), ctx)
        coeff = Series(ctx, coeff.terms, ctx.deg_bound)
        if coeff.is_zero():
            continue
        j = [0] * r
        j[pos_i - 1] = -b
        j[pos_j - 1] = -a
        j = tuple(j)
        out[j] = out.get(j, Series.zero(ctx)) + coeff
    return {j: c for j, c in out.items() if not c.is_zero()}


def darondeau_pragacz_pushforward(fgl, f, r, n, var_prefix="s"):
    """Coefficient extraction form of the flag pushforward (tau^r)_*.

    [t_1^{n-1} ... t_r^{n-1}] ( f(t_1..t_r) * prod_{i<j} (t_j +_L conj t_i)
    * prod_i SegreSeries(1/t_i) ), with f a polynomial in the auxiliary
    variables var_prefix1..var_prefixr whose coefficients are x-free.
    """
    ctx = fgl.ctx
    D = ctx.deg_bound
    if r > n:
        raise ValueError("r exceeds n")
    aux = ["%s%d" % (var_prefix, i) for i in range(1, r + 1)]
    # decompose f into a multivariate window with keys (-e_1, ..., -e_r)
    if isinstance(f, Series):
        layers = _poly_layers(fgl, f, aux)
    else:
        layers = dict(f)
    fw = {}
    fdeg = [0] * r
    for es, c in layers.items():
        if c.is_zero():
            continue
        for i in range(r):
            fdeg[i] = max(fdeg[i], es[i])
        fw[tuple(-e for e in es)] = c
    target = 1 - n
    los = tuple(min(target - D - 2, -fdeg[i]) for i in range(r))
    his = tuple(max(D, 0) for _ in range(r))
    tdeg = max(-l for l in los)

    acc = fw
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            acc = _mwmul(ctx, acc, _tsum_window(fgl, i, j, r, tdeg), los, his)
    for i in range(1, r + 1):
        seg = segre_series(fgl, n, target - D - 2, min(D, his[i - 1]))
        w = {}
        for k, c in seg.coeffs.items():
            key = [0] * r
            key[i - 1] = k
            w[tuple(key)] = c
        acc = _mwmul(ctx, acc, w, los, his)
    return acc.get((target,) * r, Series.zero(ctx))


# ---------------------------------------------------------------------------
# degeneracy-locus classes


class VerifiedClass:
    """A class together with the alternative computation that certifies it."""

    def __init__(self, name, value, alternates):
        self.name = name
        self.value = value
        self.alternates = dict(alternates)
        self.differences = {k: value - v for k, v in self.alternates.items()}
        self.ok = all(d.is_zero() for d in self.differences.values())

    def require(self):
        if not self.ok:
            bad = [k for k, d in self.differences.items() if not d.is_zero()]
            raise ConsistencyError(
                "%s: computation paths disagree (%s)" % (self.name, ", ".join(bad)))
        return self.value

    def __repr__(self):
        return "<VerifiedClass %s ok=%s>" % (self.name, self.ok)


def thom_porteous_class(fgl, e, f, r):
    """Degeneracy-locus class for rank <= r maps between bundles of rank e, f.

    Pushes the top Chern class prod_{i<=f-r} prod_{j<=e} (x_i +_L conj(b_j))
    down the Grassmannian symmetrizer and certifies it against the direct
    Damon-type rectangle value with inverted parameters.
    """
    ctx = fgl.ctx
    if not (0 <= r <= min(e, f)):
        raise ValueError("need 0 <= r <= min(e, f)")
    if ctx.n_x < f or ctx.n_b < e:
        raise ValueError("context needs n_x >= %d and n_b >= %d" % (f, e))
    inv_b = [fgl.formal_inverse(fgl.b_gen(j)) for j in range(1, e + 1)]
    numerator = Series.const(ctx, 1)
    for i in range(1, f - r + 1):
        numerator = numerator * factorial_power(fgl, i, e, 0, inv_b)
    push = grassmannian_pushforward(fgl, numerator, f - r, f) if f > r else numerator
    lam = Partition([e - r] * (f - r), n=f)
    direct = new_universal_schur(fgl, lam, f, b_values=inv_b)
    return VerifiedClass("thom-porteous(e=%d,f=%d,r=%d)" % (e, f, r),
                         push, {"damon-rectangle": direct})


def kempf_laksov_class(fgl, lam, d, n):
    """Kempf-Laksov resolution class over a rank-d bundle inside rank n.

    Evaluates the partial-flag pushforward of [y|b]^{lam+rho_{r-1}+(d-r)^r}
    and the explicit coset sum, plus the Damon variant (pushforward of the
    block monomial) against the Damon-type function; all paths must agree.
    """
    ctx = fgl.ctx
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    rr = lam.length
    if not (rr <= d <= n):
        raise ValueError("need len(lam) <= d <= n")
    if ctx.n_x < d or ctx.n_b < n:
        raise ValueError("context needs n_x >= %d and n_b >= %d" % (d, n))
    b_vals = [fgl.b_gen(j) for j in range(1, n + 1)]

    numerator = Series.const(ctx, 1)
    for i in range(1, rr + 1):
        numerator = numerator * factorial_power(
            fgl, i, lam.parts[i - 1] + d - i, 0, b_vals)
    stair = Partition(rho(rr), n=d)
    path1 = pushforward_partial_flag(fgl, numerator, stair, d)
    pairs = tuple((i, j) for i in range(1, rr + 1) for j in range(i + 1, d + 1))
    blocks = (1,) * rr + ((d - rr,) if d > rr else ())
    spec = SymmetrizerSpec(tuple(range(1, d + 1)), pairs, coset_reps(d, blocks))
    path2 = symmetrize(fgl, numerator, spec)
    kl_family = universal_schur_kl(fgl, lam, d, b_values=b_vals)

    kappa = VerifiedClass("kempf-laksov(%r,d=%d,n=%d)" % (list(lam.parts[:rr]), d, n),
                          path1, {"coset-sum": path2, "kl-family": kl_family})

    lam_d = Partition(lam.parts[:rr], n=d)
    damon_push = pushforward_partial_flag(
        fgl, bracket_monomial(fgl, lam_d, b_vals), lam_d, d)
    damon_expected = new_universal_schur(fgl, lam_d, d, b_values=b_vals)
    damon = VerifiedClass("damon(%r,d=%d,n=%d)" % (list(lam.parts[:rr]), d, n),
                          damon_push, {"damon-type-function": damon_expected})
    return kappa, damon
