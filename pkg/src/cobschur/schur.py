"""Partitions, coset symmetrizers, and the universal Schur-type families.

The families are all of the shape

    sum over coset representatives w of
        w . [ numerator / prod_{(i,j) in pairs} (x_i +_L conj(x_j)) ]

and are evaluated by one engine: every denominator factor is split as
(x_i - x_j) * unit, each term is moved over the full Vandermonde product
with sign bookkeeping, the numerators are summed exactly, and the total
is divided by the Vandermonde with repeated exact linear divisions.  A
nonzero remainder in the final division step signals an invalid
numerator/coset combination and raises RemainderError.

A numerator trusted to degree B yields a symmetrized value trusted to
B - 1 - (number of Vandermonde pairs); callers size their context bound
accordingly (deg_bound = target D + pairs + 1).
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .ring import Series, Permutation, BudgetError, RemainderError, series_sum


def worker_count():
    """Worker cap from COBSCHUR_THREADS (default 1, serial evaluation)."""
    try:
        return max(1, int(os.environ.get("COBSCHUR_THREADS", "1")))
    except ValueError:
        return 1


class Partition:
    """A partition padded to a fixed number of parts n.

    Carries the interval decomposition of [n] into maximal blocks where
    the parts are constant: block sizes m_r, prefix sums nu(r), the
    block index n(i), and the distinct values n_r.
    """

    def __init__(self, parts, n=None):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError("partition parts must be non-negative")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing: %r" % (parts,))
        core = list(parts)
        while core and core[-1] == 0:
            core.pop()
        if n is None:
            n = len(core)
        if len(core) > n:
            raise ValueError("partition longer than n")
        self.n = n
        self.parts = tuple(core) + (0,) * (n - len(core))
        self.length = len(core)
        self.size = sum(core)

        blocks = []
        values = []
        for v, grp in itertools.groupby(self.parts):
            blocks.append(len(list(grp)))
            values.append(v)
        self.block_sizes = tuple(blocks)          # m_r
        self.block_values = tuple(values)          # n_r, strictly decreasing
        nu = [0]
        for m in blocks:
            nu.append(nu[-1] + m)
        self.nu = tuple(nu)                        # nu(0) = 0, ..., nu(d) = n
        idx = []
        for r, m in enumerate(blocks, start=1):
            idx.extend([r] * m)
        self.block_of = tuple(idx)                 # n(i), 1-based position i

    def __repr__(self):
        return "Partition(%r, n=%d)" % (list(self.parts[:self.length]), self.n)

    def __eq__(self, other):
        return (isinstance(other, Partition) and self.parts == other.parts
                and self.n == other.n)

    def __hash__(self):
        return hash((self.parts, self.n))

    def is_strict(self):
        core = self.parts[:self.length]
        return all(core[i] > core[i + 1] for i in range(len(core) - 1))

    def is_distinct(self):
        """Strictly decreasing including the zero tail (at most one 0)."""
        return all(self.parts[i] > self.parts[i + 1] for i in range(self.n - 1))

    def pair_positions(self):
        """All (i, j), i < j, with n(i) < n(j) (strictly separated blocks)."""
        return tuple((i, j)
                     for i in range(1, self.n + 1)
                     for j in range(i + 1, self.n + 1)
                     if self.block_of[i - 1] < self.block_of[j - 1])


def partitions_up_to(max_size, max_length):
    """All partitions with |lambda| <= max_size and length <= max_length."""
    out = [()]
    def rec(prefix, remaining, cap):
        for p in range(min(remaining, cap), 0, -1):
            nxt = prefix + (p,)
            if len(nxt) <= max_length:
                out.append(nxt)
                rec(nxt, remaining - p, p)
    rec((), max_size, max_size)
    return [list(p) for p in out]


def coset_reps(n, blocks):
    """Minimal-length representatives of S_n / (S_{m_1} x ... x S_{m_d}).

    Representatives are increasing on each block preimage and enumerated
    in lexicographic order of their image tuples.
    """
    if sum(blocks) != n:
        raise ValueError("block sizes must sum to n")
    reps = []
    def rec(remaining, blocks_left, acc):
        if not blocks_left:
            reps.append(Permutation(acc))
            return
        m = blocks_left[0]
        for chosen in itertools.combinations(sorted(remaining), m):
            rec(remaining - set(chosen), blocks_left[1:], acc + list(chosen))
    rec(set(range(1, n + 1)), list(blocks), [])
    reps.sort(key=lambda w: w.images)
    return reps


def subgroup_elements(n, blocks):
    """All elements of S_{m_1} x ... x S_{m_d} embedded block-diagonally."""
    if sum(blocks) != n:
        raise ValueError("block sizes must sum to n")
    per_block = []
    start = 1
    for m in blocks:
        vals = list(range(start, start + m))
        per_block.append([p for p in itertools.permutations(vals)])
        start += m
    out = []
    for combo in itertools.product(*per_block):
        images = []
        for piece in combo:
            images.extend(piece)
        out.append(Permutation(images))
    return out


class SymmetrizerSpec:
    """Denominator pairs, coset representatives and an optional prefactor.

    ``var_ids`` lists the symmetrized x-variable indices (1-based); pairs
    and permutations refer to positions within this list, so the same
    engine serves operators acting on a subset of the variables.
    """

    def __init__(self, var_ids, pair_set, reps, prefactor=1):
        self.var_ids = tuple(var_ids)
        self.pair_set = tuple(sorted(pair_set))
        n = len(self.var_ids)
        for (i, j) in self.pair_set:
            if not (1 <= i < j <= n):
                raise ValueError("pair (%d, %d) out of range" % (i, j))
        self.reps = list(reps)
        self.prefactor = prefactor

    def all_pairs(self):
        n = len(self.var_ids)
        return tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


def _extend_permutation(ctx, var_ids, w):
    """Embed a permutation of positions into a permutation of all x-vars."""
    images = list(range(1, ctx.n_x + 1))
    for pos, target_pos in enumerate(w.images, start=1):
        images[var_ids[pos - 1] - 1] = var_ids[target_pos - 1]
    return Permutation(images)


def _coset_kernel(fgl, spec, w, bound):
    """Vandermonde-completion kernel for one coset representative.

    sign * prod over uncovered pairs of (x_a - x_b)
         * prod over covered pairs of unit(x_{w(i)}, x_{w(j)})^{-1},
    truncated to the requested degree.
    """
    ctx = fgl.ctx
    var = spec.var_ids
    sign = 1
    covered = set()
    inv_units = []
    for (i, j) in spec.pair_set:
        a, b = var[w(i) - 1], var[w(j) - 1]
        if a > b:
            a, b = b, a
            sign = -sign
        if (a, b) in covered:
            raise ValueError("pair set maps two pairs onto {x%d, x%d}" % (a, b))
        covered.add((a, b))
        inv_units.append((var[w(i) - 1], var[w(j) - 1]))
    kernel = Series.const(ctx, 1, bound)
    for (i, j) in spec.all_pairs():
        a, b = var[i - 1], var[j - 1]
        if (a, b) not in covered:
            kernel = kernel * (fgl.x_gen(a) - fgl.x_gen(b))
    for (a, b) in inv_units:
        kernel = kernel * fgl.pair_unit_inverse(a, b).truncate(bound)
    return kernel if sign == 1 else -kernel


def symmetrize(fgl, numerator, spec):
    """Evaluate the coset symmetrizer on the given numerator.

    The output is trusted to numerator.bound - 1 - |all pairs|; raises
    RemainderError when the summed numerator is not divisible by the
    full Vandermonde (an invalid spec/numerator combination).
    """
    ctx = fgl.ctx
    var = spec.var_ids
    kbound = min(numerator.bound, ctx.deg_bound)
    cache = fgl._cache.setdefault("kernels", {})
    kernels = []
    for w in spec.reps:
        ck = (var, spec.pair_set, w.images, kbound)
        kernel = cache.get(ck)
        if kernel is None:
            kernel = _coset_kernel(fgl, spec, w, kbound)
            cache[ck] = kernel
        kernels.append((w, kernel))

    def one_term(pair):
        w, kernel = pair
        wn = numerator.act_permutation(_extend_permutation(ctx, var, w))
        return wn * kernel

    nw = worker_count()
    if nw > 1 and len(kernels) > 1:
        # coset terms are independent pure computations; the order-
        # preserving map plus exact left-fold keeps the result identical
        # to the serial evaluation
        with ThreadPoolExecutor(max_workers=nw) as pool:
            terms = list(pool.map(one_term, kernels))
    else:
        terms = [one_term(p) for p in kernels]
    total = series_sum(ctx, terms, bound=kbound)
    if spec.prefactor != 1:
        total = total.scale(spec.prefactor)
    for (i, j) in spec.all_pairs():
        total = total.exact_divide_linear(var[i - 1], var[j - 1])
    return total


# ---------------------------------------------------------------------------
# factorial-power building blocks


def b_generators(fgl, count, shift=0, b_values=None):
    """The parameter series b_{shift+1}, ..., b_{shift+count}.

    ``b_values`` overrides the generators (e.g. formal inverses or a
    zero-padded tail); entries beyond the list are zero.
    """
    ctx = fgl.ctx
    out = []
    for s in range(shift + 1, shift + count + 1):
        if b_values is not None:
            if s <= len(b_values):
                out.append(b_values[s - 1])
            else:
                out.append(Series.zero(ctx))
        else:
            if s > ctx.n_b:
                raise BudgetError(
                    "needs b-variables up to b%d but the context declares n_b=%d"
                    % (s, ctx.n_b))
            out.append(fgl.b_gen(s))
    return out


def factorial_power(fgl, i, k, shift=0, b_values=None):
    """[x_i | b[+shift]]^k = prod_{s=1..k} (x_i +_L b_{shift+s}); 1 for k=0."""
    if k < 0:
        raise ValueError("k must be non-negative")
    acc = Series.const(fgl.ctx, 1)
    if k == 0:
        return acc
    xi = fgl.x_gen(i)
    for b in b_generators(fgl, k, shift, b_values):
        acc = acc * (fgl.formal_sum(xi, b) if not b.is_zero() else xi)
    return acc


def double_factorial_power(fgl, i, k, b_values=None):
    """[[x_i | b]]^k = (x_i +_L x_i) [x_i | b]^{k-1}; 1 for k=0."""
    if k == 0:
        return Series.const(fgl.ctx, 1)
    xi = fgl.x_gen(i)
    return fgl.formal_sum(xi, xi) * factorial_power(fgl, i, k - 1, 0, b_values)


def bracket_monomial(fgl, lam, b_values=None):
    """The block-shaped product (x|b)^[lambda].

    prod over blocks r of prod_{nu(r-1) < i <= nu(r)} [x_i|b]^{n_r + n - nu(r)}.
    """
    acc = Series.const(fgl.ctx, 1)
    for r, (m, v) in enumerate(zip(lam.block_sizes, lam.block_values), start=1):
        k = v + lam.n - lam.nu[r]
        for i in range(lam.nu[r - 1] + 1, lam.nu[r] + 1):
            acc = acc * factorial_power(fgl, i, k, 0, b_values)
    return acc


def rho(n):
    """The staircase (n, n-1, ..., 1)."""
    return list(range(n, 0, -1))


# ---------------------------------------------------------------------------
# the universal families


def _full_spec(n, var_ids=None):
    var_ids = tuple(range(1, n + 1)) if var_ids is None else tuple(var_ids)
    pairs = tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
    return SymmetrizerSpec(var_ids, pairs, coset_reps(n, (1,) * n))


def universal_schur_s(fgl, lam, n, use_b=False, var_ids=None, b_shift=0,
                      b_values=None):
    """The factorial Schur-type series: full symmetrization of [x|b]^{lam+rho}.

    ``lam`` may be a Partition, a list (weakly decreasing), or an
    arbitrary sequence of non-negative integers (the raw, unstraightened
    case); entries beyond position n are not allowed.
    """
    if isinstance(lam, Partition):
        entries = list(lam.parts[:lam.n])
    else:
        entries = [int(v) for v in lam]
    if len(entries) > n:
        raise ValueError("sequence longer than n")
    entries = entries + [0] * (n - len(entries))
    if use_b or b_values is not None:
        budget = max((entries[i] + n - 1 - i) for i in range(n)) if n else 0
        if b_values is None and fgl.ctx.n_b < b_shift + budget:
            raise BudgetError(
                "needs n_b >= %d for this family (have %d)"
                % (b_shift + budget, fgl.ctx.n_b))
    numerator = Series.const(fgl.ctx, 1)
    for pos in range(1, n + 1):
        k = entries[pos - 1] + n - pos
        i = pos if var_ids is None else var_ids[pos - 1]
        if use_b or b_values is not None:
            numerator = numerator * factorial_power(fgl, i, k, b_shift, b_values)
        else:
            numerator = numerator * fgl.x_gen(i) ** k
    return symmetrize(fgl, numerator, _full_spec(n, var_ids))


def _pq_series(fgl, nu, n, use_b, doubled):
    nu = nu if isinstance(nu, Partition) else Partition(nu, n=n)
    if not nu.is_strict():
        raise ValueError("P/Q needs a strict partition, got %r" % (nu,))
    k = nu.length
    if use_b:
        budget = nu.parts[0] - (1 if doubled else 0)
        if fgl.ctx.n_b < budget:
            raise BudgetError("needs n_b >= %d (have %d)" % (budget, fgl.ctx.n_b))
    numerator = Series.const(fgl.ctx, 1)
    for i in range(1, k + 1):
        p = nu.parts[i - 1]
        if doubled:
            numerator = numerator * double_factorial_power(
                fgl, i, p, None if use_b else [])
        else:
            numerator = numerator * factorial_power(
                fgl, i, p, 0, None if use_b else [])
    for i in range(1, k + 1):
        xi = fgl.x_gen(i)
        for j in range(i + 1, n + 1):
            numerator = numerator * fgl.formal_sum(xi, fgl.x_gen(j))
    # literal full-S_n sum with the exact scalar prefactor 1/(n-k)!
    pairs = tuple((i, j) for i in range(1, k + 1) for j in range(i + 1, n + 1))
    import math
    spec = SymmetrizerSpec(tuple(range(1, n + 1)), pairs,
                           coset_reps(n, (1,) * n),
                           Fraction(1, math.factorial(n - k)))
    return symmetrize(fgl, numerator, spec)


def universal_schur_p(fgl, nu, n, use_b=False):
    return _pq_series(fgl, nu, n, use_b, doubled=False)


def universal_schur_q(fgl, nu, n, use_b=False):
    return _pq_series(fgl, nu, n, use_b, doubled=True)


def partial_flag_spec(lam):
    """Coset symmetrizer data for the stabilizer quotient of lam."""
    pairs = lam.pair_positions()
    return SymmetrizerSpec(tuple(range(1, lam.n + 1)), pairs,
                           coset_reps(lam.n, lam.block_sizes))


def universal_hall_littlewood(fgl, lam, n):
    """The t-deformed coset symmetrizer interpolating the S- and P-families."""
    lam = lam if isinstance(lam, Partition) else Partition(lam, n=n)
    numerator = Series.const(fgl.ctx, 1)
    for pos in range(1, n + 1):
        p = lam.parts[pos - 1]
        if p:
            numerator = numerator * fgl.x_gen(pos) ** p
    cache = fgl._cache.setdefault("t_inv", {})
    for (i, j) in lam.pair_positions():
        tj = cache.get(j)
        if tj is None:
            tj = fgl.t_series(fgl.x_inverse(j))
            cache[j] = tj
        numerator = numerator * fgl.formal_sum(fgl.x_gen(i), tj)
    return symmetrize(fgl, numerator, partial_flag_spec(lam))


def new_universal_schur(fgl, lam, n, use_b=False, b_values=None):
    """Damon-type symmetrizer of the block monomial (x|b)^[lambda]."""
    lam = lam if isinstance(lam, Partition) else Partition(lam, n=n)
    if use_b and b_values is None:
        budget = (lam.parts[0] + n - 1) if n else 0
        if fgl.ctx.n_b < budget:
            raise BudgetError("needs n_b >= %d (have %d)" % (budget, fgl.ctx.n_b))
    vals = b_values if (use_b or b_values is not None) else []
    numerator = bracket_monomial(fgl, lam, vals)
    return symmetrize(fgl, numerator, partial_flag_spec(lam))


def new_universal_schur_one_row(fgl, k, n):
    """One-row case with the extended range k >= 1 - n: sym(x_1^{k+n-1})."""
    if k < 1 - n:
        raise ValueError("one-row index must satisfy k >= 1 - n")
    numerator = fgl.x_gen(1) ** (k + n - 1) if k + n - 1 > 0 else Series.const(fgl.ctx, 1)
    pairs = tuple((1, j) for j in range(2, n + 1))
    spec = SymmetrizerSpec(tuple(range(1, n + 1)), pairs,
                           coset_reps(n, (1, n - 1) if n > 1 else (1,)))
    return symmetrize(fgl, numerator, spec)


def universal_schur_kl(fgl, lam, n, use_b=False, b_values=None):
    """Kempf-Laksov-type symmetrizer over S_n / ((S_1)^r x S_{n-r})."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    r = lam.length
    if r > n:
        raise ValueError("length of lambda exceeds n")
    if use_b and b_values is None:
        budget = (lam.parts[0] + n - 1) if r else 0
        if fgl.ctx.n_b < budget:
            raise BudgetError("needs n_b >= %d (have %d)" % (budget, fgl.ctx.n_b))
    vals = b_values if (use_b or b_values is not None) else []
    numerator = Series.const(fgl.ctx, 1)
    for i in range(1, r + 1):
        k = lam.parts[i - 1] + n - i
        numerator = numerator * factorial_power(fgl, i, k, 0, vals)
    pairs = tuple((i, j) for i in range(1, r + 1) for j in range(i + 1, n + 1))
    blocks = (1,) * r + ((n - r,) if n > r else ())
    spec = SymmetrizerSpec(tuple(range(1, n + 1)), pairs, coset_reps(n, blocks))
    return symmetrize(fgl, numerator, spec)
