"""Exact verifiers: defining relations, odd comultiplication, q->0 residues.

Every check instantiates an operator identity and evaluates both sides on
each basis tensor of V^(x)N with exact rational-function arithmetic, so a
"pass" is an equality of rational functions, not a numeric approximation.
The residue check is the bridge to the combinatorial side: it confirms
that the q-level Kashiwara operators preserve the integral lattice spanned
by the basis tensors, and that setting q = 0 reproduces, pattern space by
pattern space, exactly the arrows of the word crystal B^(x)N.
"""

from fractions import Fraction
from itertools import product

from .. import kernel as word_kernel
from ..reports import record, report
from .action import (act_expr, compose, expr_sum, generator_expr, op, scale)
from .laurent import ONE, Q, RatFunc
from .tensorspace import (basis, lattice_basis, pattern, unit, vec_sub)
from .kashiwara import (tilde_e, tilde_ebar1, tilde_ebar1_expr, tilde_f,
                        tilde_fbar1, tilde_fbar1_expr, tilde_k1, ktilde1_expr)


def _qh(n, *pairs):
    h = [0] * n
    for j, c in pairs:
        h[j - 1] += c
    return op(("qh", tuple(h)))


def _gen(g, n):
    return generator_expr(g, n)


def relations_catalogue(n: int) -> list:
    """Named operator identities (lhs, rhs) defining the algebra at rank n."""
    rels = []
    qinv = ONE / Q
    h_samples = [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]
    h_samples.append(tuple(range(1, n + 1)))

    def qh(h):
        return op(("qh", tuple(h)))

    def alpha_pairing(i, h):
        return h[i - 1] - h[i]

    zero = ()
    for a, h1 in enumerate(h_samples):
        h2 = h_samples[(a + 1) % len(h_samples)]
        hsum = tuple(x + y for x, y in zip(h1, h2))
        rels.append((f"qh-additivity h1={h1} h2={h2}",
                     compose(qh(h1), qh(h2)), qh(hsum)))
    for i in range(1, n):
        for h in h_samples[:2]:
            rels.append((
                f"qh-e-commutation i={i} h={h}",
                compose(compose(qh(h), _gen(("e", i), n)), qh(tuple(-x for x in h))),
                scale(RatFunc.q_power(alpha_pairing(i, h)), _gen(("e", i), n))))
            rels.append((
                f"qh-f-commutation i={i} h={h}",
                compose(compose(qh(h), _gen(("f", i), n)), qh(tuple(-x for x in h))),
                scale(RatFunc.q_power(-alpha_pairing(i, h)), _gen(("f", i), n))))
    for j in range(1, n + 1):
        h = h_samples[-1]
        rels.append((
            f"qh-kbar-commute j={j}",
            compose(qh(h), _gen(("kbar", j), n)),
            compose(_gen(("kbar", j), n), qh(h))))
    for i in range(1, n):
        for j in range(1, n):
            lhs = expr_sum(
                compose(_gen(("e", i), n), _gen(("f", j), n)),
                scale(-ONE, compose(_gen(("f", j), n), _gen(("e", i), n))))
            if i == j:
                coeff = ONE / (Q - qinv)
                rhs = expr_sum(
                    scale(coeff, _qh(n, (i, 1), (i + 1, -1))),
                    scale(-coeff, _qh(n, (i, -1), (i + 1, 1))))
            else:
                rhs = zero
            rels.append((f"e-f-commutator i={i} j={j}", lhs, rhs))
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) > 1:
                rels.append((
                    f"e-e-distant-commute i={i} j={j}",
                    compose(_gen(("e", i), n), _gen(("e", j), n)),
                    compose(_gen(("e", j), n), _gen(("e", i), n))))
                rels.append((
                    f"f-f-distant-commute i={i} j={j}",
                    compose(_gen(("f", i), n), _gen(("f", j), n)),
                    compose(_gen(("f", j), n), _gen(("f", i), n))))
            if abs(i - j) == 1:
                for kind in ("e", "f"):
                    a, b = _gen((kind, i), n), _gen((kind, j), n)
                    rels.append((
                        f"{kind}-serre i={i} j={j}",
                        expr_sum(compose(compose(a, a), b),
                                 scale(-(Q + qinv), compose(compose(a, b), a)),
                                 compose(b, compose(a, a))),
                        zero))
    q2 = Q * Q
    for i in range(1, n + 1):
        coeff = ONE / (q2 - ONE / q2)
        rels.append((
            f"kbar-squared i={i}",
            compose(_gen(("kbar", i), n), _gen(("kbar", i), n)),
            expr_sum(scale(coeff, _qh(n, (i, 2))),
                     scale(-coeff, _qh(n, (i, -2))))))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                rels.append((
                    f"kbar-anticommute i={i} j={j}",
                    expr_sum(
                        compose(_gen(("kbar", i), n), _gen(("kbar", j), n)),
                        compose(_gen(("kbar", j), n), _gen(("kbar", i), n))),
                    zero))
    for i in range(1, n):
        rels.append((
            f"kbar-e-twist i={i}",
            expr_sum(compose(_gen(("kbar", i), n), _gen(("e", i), n)),
                     scale(-Q, compose(_gen(("e", i), n), _gen(("kbar", i), n)))),
            compose(_gen(("ebar", i), n), _qh(n, (i, -1)))))
        rels.append((
            f"kbar-f-twist i={i}",
            expr_sum(compose(_gen(("kbar", i), n), _gen(("f", i), n)),
                     scale(-Q, compose(_gen(("f", i), n), _gen(("kbar", i), n)))),
            scale(-ONE, compose(_gen(("fbar", i), n), _qh(n, (i, 1))))))
    for i in range(1, n):
        for j in range(1, n):
            lhs = expr_sum(
                compose(_gen(("e", i), n), _gen(("fbar", j), n)),
                scale(-ONE, compose(_gen(("fbar", j), n), _gen(("e", i), n))))
            if i == j:
                rhs = expr_sum(
                    compose(_gen(("kbar", i), n), _qh(n, (i + 1, -1))),
                    scale(-ONE, compose(_gen(("kbar", i + 1), n), _qh(n, (i, -1)))))
            else:
                rhs = zero
            rels.append((f"e-fbar-commutator i={i} j={j}", lhs, rhs))
            lhs = expr_sum(
                compose(_gen(("ebar", i), n), _gen(("f", j), n)),
                scale(-ONE, compose(_gen(("f", j), n), _gen(("ebar", i), n))))
            if i == j:
                rhs = expr_sum(
                    compose(_gen(("kbar", i), n), _qh(n, (i + 1, 1))),
                    scale(-ONE, compose(_gen(("kbar", i + 1), n), _qh(n, (i, 1)))))
            else:
                rhs = zero
            rels.append((f"ebar-f-commutator i={i} j={j}", lhs, rhs))
    for i in range(1, n):
        rels.append((
            f"e-ebar-commute i={i}",
            compose(_gen(("e", i), n), _gen(("ebar", i), n)),
            compose(_gen(("ebar", i), n), _gen(("e", i), n))))
        rels.append((
            f"f-fbar-commute i={i}",
            compose(_gen(("f", i), n), _gen(("fbar", i), n)),
            compose(_gen(("fbar", i), n), _gen(("f", i), n))))
    for i in range(1, n - 1):
        e_i, e_j = _gen(("e", i), n), _gen(("e", i + 1), n)
        eb_i, eb_j = _gen(("ebar", i), n), _gen(("ebar", i + 1), n)
        rels.append((
            f"e-braid-odd i={i}",
            expr_sum(compose(e_i, e_j), scale(-Q, compose(e_j, e_i))),
            expr_sum(compose(eb_i, eb_j), scale(Q, compose(eb_j, eb_i)))))
        f_i, f_j = _gen(("f", i), n), _gen(("f", i + 1), n)
        fb_i, fb_j = _gen(("fbar", i), n), _gen(("fbar", i + 1), n)
        rels.append((
            f"f-braid-odd i={i}",
            expr_sum(scale(Q, compose(f_j, f_i)), scale(-ONE, compose(f_i, f_j))),
            expr_sum(compose(fb_i, fb_j), scale(Q, compose(fb_j, fb_i)))))
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) == 1:
                e_i, eb_j = _gen(("e", i), n), _gen(("ebar", j), n)
                rels.append((
                    f"e-serre-odd i={i} j={j}",
                    expr_sum(compose(compose(e_i, e_i), eb_j),
                             scale(-(Q + qinv), compose(compose(e_i, eb_j), e_i)),
                             compose(eb_j, compose(e_i, e_i))),
                    zero))
                f_i, fb_j = _gen(("f", i), n), _gen(("fbar", j), n)
                rels.append((
                    f"f-serre-odd i={i} j={j}",
                    expr_sum(compose(compose(f_i, f_i), fb_j),
                             scale(-(Q + qinv), compose(compose(f_i, fb_j), f_i)),
                             compose(fb_j, compose(f_i, f_i))),
                    zero))
    return rels


def verify_relations(n: int, N: int, which: str | None = None) -> dict:
    """Check the defining relations as operator identities on V^(x)N.

    ``which`` filters relation names by substring.
    """
    records = []
    tensors = basis(n, N)
    for name, lhs, rhs in relations_catalogue(n):
        if which and which not in name:
            continue
        witness = None
        for t in tensors:
            v = unit(t)
            diff = vec_sub(act_expr(lhs, v), act_expr(rhs, v))
            if diff:
                bad = next(iter(diff.items()))
                witness = {"tensor": repr(t), "component": repr(bad[0]),
                           "coefficient": repr(bad[1])}
                break
        records.append(record("relation", f"n={n} N={N} {name}",
                              "fail" if witness else "pass", witness=witness))
    return report(records, n=n, N=N)


# ---------------------------------------------------------------------------
# comultiplication of the odd Kashiwara operators


def _assemble_two_factor(terms, n: int, x, y) -> dict:
    """Evaluate sum of coeff * (A (x) B) on the basis tensor x (x) y."""
    px = sum(s for _, s in x) & 1
    out = {}
    for coeff, a_expr, b_expr, b_parity in terms:
        sign = -ONE if (b_parity and px) else ONE
        ax = act_expr(a_expr, unit(x))
        by = act_expr(b_expr, unit(y))
        for tx, cx in ax.items():
            for ty, cy in by.items():
                t = tx + ty
                c = sign * coeff * cx * cy
                cur = out.get(t)
                s = c if cur is None else cur + c
                if s:
                    out[t] = s
                elif cur is not None:
                    del out[t]
    return out


def comult_formulas(n: int) -> list:
    """The three odd comultiplication identities as (name, lhs, rhs-terms)."""
    ident = op(("qh", (0,) * n))
    ktilde = ktilde1_expr(n)
    etilde = tilde_ebar1_expr(n)
    ftilde = tilde_fbar1_expr(n)
    one_minus_q2 = ONE - Q * Q
    q12 = _qh(n, (1, 1), (2, 1))
    return [
        ("ktilde1", ktilde, [
            (ONE, ktilde, _qh(n, (1, 2)), 0),
            (ONE, ident, ktilde, 1),
        ]),
        ("tilde-ebar1", etilde, [
            (ONE, etilde, q12, 0),
            (ONE, ident, etilde, 1),
            (-one_minus_q2, ktilde,
             compose(op(("e", 1)), _qh(n, (1, 2))), 0),
        ]),
        ("tilde-fbar1", ftilde, [
            (ONE, ftilde, q12, 0),
            (ONE, ident, ftilde, 1),
            (-one_minus_q2 * (ONE / Q), ktilde,
             compose(op(("f", 1)), q12), 0),
        ]),
    ]


def verify_comult_odd(n: int) -> dict:
    """Odd operators on V (x) V match their comultiplication formulas."""
    records = []
    singles = basis(n, 1)
    for name, whole_expr, terms in comult_formulas(n):
        witness = None
        for x in singles:
            for y in singles:
                t = x + y
                lhs = act_expr(whole_expr, unit(t))
                rhs = _assemble_two_factor(terms, n, x, y)
                diff = vec_sub(lhs, rhs)
                if diff:
                    bad = next(iter(diff.items()))
                    witness = {"tensor": repr(t), "component": repr(bad[0]),
                               "coefficient": repr(bad[1])}
                    break
            if witness:
                break
        records.append(record("comultiplication", f"n={n} {name}",
                              "fail" if witness else "pass", witness=witness))
    return report(records, n=n)


# ---------------------------------------------------------------------------
# lattice stability and q -> 0 residues


def _fraction_rank(matrix: list) -> int:
    rows = [row[:] for row in matrix]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((k for k in range(rank, len(rows)) if rows[k][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [inv * x for x in rows[rank]]
        for k in range(len(rows)):
            if k != rank and rows[k][col]:
                c = rows[k][col]
                rows[k] = [a - c * b for a, b in zip(rows[k], rows[rank])]
        rank += 1
    return rank


def _word_edges(n: int, N: int) -> dict:
    """Combinatorial operator tables on all words of length N."""
    out = {}
    words = [bytes(w) for w in product(range(1, n + 1), repeat=N)]
    for w in words:
        table = {}
        for i in range(1, n):
            table[("e", i)] = word_kernel.apply_e(w, i)
            table[("f", i)] = word_kernel.apply_f(w, i)
        if n >= 2:
            table[("ebar1",)] = word_kernel.apply_ebar1(w)
            table[("fbar1",)] = word_kernel.apply_fbar1(w)
        out[w] = table
    return out


def residue_check(n: int, N: int) -> dict:
    """Lattice stability and the q=0 shadow of the Kashiwara operators.

    For each word pattern b and operator: every coefficient of the image of
    the 2^N-dimensional pattern space l_b must be regular at q = 0, the
    residue must land in l_{op(b)} (or vanish when op(b) does), and when
    op(b) is present the residue map l_b -> l_{op(b)} must be invertible.
    ktilde_1 must preserve each l_b.  The nonzero residue maps must
    reproduce the word-crystal arrows exactly.
    """
    records = []
    edges = _word_edges(n, N)
    q_ops = {}
    for i in range(1, n):
        q_ops[("e", i)] = lambda v, i=i: tilde_e(i, v, n)
        q_ops[("f", i)] = lambda v, i=i: tilde_f(i, v, n)
    if n >= 2:
        q_ops[("ebar1",)] = lambda v: tilde_ebar1(v, n)
        q_ops[("fbar1",)] = lambda v: tilde_fbar1(v, n)

    def residue_map(op_fn, src):
        """(columns over the target basis, pole witness or None)."""
        cols = []
        for t in src:
            img = op_fn(unit(t))
            col = {}
            for t2, c in img.items():
                if not c.is_regular_at_zero():
                    return None, {"tensor": repr(t), "component": repr(t2),
                                  "coefficient": repr(c)}
                v = c.at_zero()
                if v:
                    col[t2] = v
            cols.append(col)
        return cols, None

    residue_edges = set()
    for b in edges:
        src = lattice_basis(b)
        instance = f"n={n} N={N} b={list(b)}"
        records.append(record("lattice-dimension", instance,
                              "pass" if len(src) == 2 ** N else "fail"))
        for op_key, expected in edges[b].items():
            name = "-".join(str(x) for x in op_key)
            cols, pole = residue_map(q_ops[op_key], src)
            if pole is not None:
                records.append(record("lattice-stability",
                                      f"{instance} op={name}", "fail",
                                      witness=pole))
                continue
            records.append(record("lattice-stability",
                                  f"{instance} op={name}", "pass"))
            support = {pattern(t) for col in cols for t in col}
            if expected is None:
                ok = not support
                records.append(record(
                    "residue-vanishes", f"{instance} op={name}",
                    "pass" if ok else "fail",
                    witness=None if ok else
                    {"support": [list(p) for p in support]}))
                continue
            ok = support == {expected}
            if ok:
                residue_edges.add((b, op_key, expected))
            records.append(record(
                "residue-target", f"{instance} op={name}",
                "pass" if ok else "fail",
                witness=None if ok else
                {"support": [list(p) for p in support],
                 "expected": list(expected)}))
            if ok:
                dst = lattice_basis(expected)
                matrix = [[col.get(t, Fraction(0)) for col in cols]
                          for t in dst]
                full = _fraction_rank(matrix) == 2 ** N
                records.append(record(
                    "residue-isomorphism", f"{instance} op={name}",
                    "pass" if full else "fail"))
        # ktilde_1 preserves each pattern space
        cols, pole = residue_map(lambda v: tilde_k1(v, n), src)
        if pole is not None:
            records.append(record("ktilde1-lattice", instance, "fail",
                                  witness=pole))
        else:
            support = {pattern(t) for col in cols for t in col}
            ok = support <= {b}
            records.append(record("ktilde1-preserves", instance,
                                  "pass" if ok else "fail",
                                  witness=None if ok else
                                  {"support": [list(p) for p in support]}))
    # residue arrows = combinatorial arrows
    comb_edges = {(b, k, v) for b, table in edges.items()
                  for k, v in table.items() if v is not None}
    ok = residue_edges == comb_edges
    records.append(record(
        "residue-graph-equality", f"n={n} N={N}",
        "pass" if ok else "fail",
        witness=None if ok else {
            "missing": sorted(map(repr, comb_edges - residue_edges)),
            "extra": sorted(map(repr, residue_edges - comb_edges))}))
    # nilpotence of the odd operators on L/qL
    if n >= 2:
        for name, fn in (("tilde-ebar1", lambda v: tilde_ebar1(v, n)),
                         ("tilde-fbar1", lambda v: tilde_fbar1(v, n))):
            witness = None
            for t in basis(n, N):
                img = fn(fn(unit(t)))
                for t2, c in img.items():
                    if not c.is_regular_at_zero():
                        witness = {"tensor": repr(t), "coefficient": repr(c)}
                        break
                    if c.at_zero():
                        witness = {"tensor": repr(t), "component": repr(t2),
                                   "value": str(c.at_zero())}
                        break
                if witness:
                    break
            records.append(record(f"{name}-squared-zero", f"n={n} N={N}",
                                  "fail" if witness else "pass",
                                  witness=witness))
    return report(records, n=n, N=N)
