"""Verifiers for the structural theorems about crystals of words and tableaux.

The statements checked here, by explicit enumeration:

* uniqueness: the connected crystal B(lam) built on staircase tableaux has
  exactly one highest-weight node, of weight lam;
* decomposition: B (x) B(lam) splits into components matched bijectively
  with the strict partitions lam + eps_j, each component isomorphic to
  B(lam + eps_j);
* highest-weight formula: the highest-weight vectors of B (x) B(lam) are
  exactly 1 (x) f_1 f_2 ... f_{j-1} b_lam over the same j's (the operator
  with the largest index acting first);
* reading independence: row and column readings induce the same tableau
  operators on the full staircase filling set.

The conjecture explorer reports, without asserting, how the highest-weight
vectors of B(lam) (x) B relate to products of odd lowering operators
applied to b_lam.
"""

from . import words
from .errors import VerificationError
from .graphs import (GraphOps, WordOps, build_graph, fbar_ops,
                     graph_components, highest_weight_nodes, isomorphic,
                     tensor, validate)
from .reports import record, report
from .tableaux import (TableauOps, b_lambda, check_strict_partition,
                       crystal_of_shape, enumerate_ssyt, shape_from_partition)


def vector_crystal(n: int):
    """The rank-n letter crystal, as a graph on one-letter words."""
    return build_graph(WordOps(n), [bytes([a]) for a in range(1, n + 1)])


def tensor_power_graph(n: int, N: int):
    """Crystal graph on all words of length N (all components at once)."""
    return build_graph(WordOps(n), list(words.all_words(n, N)))


def partition_weight(parts, n: int) -> tuple:
    return tuple(list(parts) + [0] * (n - len(parts)))


def strict_successors(parts, n: int) -> list:
    """Pairs (j, lam + eps_j) for which lam + eps_j is a strict partition."""
    parts = check_strict_partition(parts, n)
    out = []
    for j in range(1, n + 1):
        mu = list(partition_weight(parts, n))
        mu[j - 1] += 1
        decreasing = all(mu[k] >= mu[k + 1] for k in range(n - 1))
        strict = all(mu[k] > mu[k + 1] for k in range(n - 1) if mu[k + 1] > 0)
        if decreasing and strict:
            out.append((j, tuple(x for x in mu if x > 0)))
    return out


def decompose_product(left, right) -> list:
    """Split a tensor of two crystal graphs and label components.

    Each component must have a unique highest-weight node whose weight is a
    strict partition mu with the component isomorphic to the staircase
    crystal of mu; anything else raises VerificationError.
    """
    product = tensor(left, right)
    out = []
    for comp in graph_components(product):
        hw = highest_weight_nodes(comp)
        if len(hw) != 1:
            raise VerificationError(
                f"component with {len(hw)} highest-weight nodes")
        wt = comp.weights[comp.node_index[hw[0]]]
        mu = tuple(x for x in wt if x > 0)
        if partition_weight(mu, comp.n) != wt or any(
                a <= b for a, b in zip(mu, mu[1:])):
            raise VerificationError(
                f"highest weight {wt} is not a strict partition")
        model = crystal_of_shape(mu, comp.n)
        if isomorphic(comp, model) is None:
            raise VerificationError(
                f"component with highest weight {mu} does not match its model")
        out.append((mu, comp))
    return out


def highest_weight_formula_side(parts, n: int) -> dict:
    """Map j -> 1 (x) f_1 ... f_{j-1} b_lam, for the admissible j."""
    graph = crystal_of_shape(parts, n)
    ops = GraphOps(graph)
    out = {}
    for j, _ in strict_successors(parts, n):
        t = b_lambda(parts, n)
        for i in range(j - 1, 0, -1):
            t = ops.f(i, t)
            if t is None:
                raise VerificationError(
                    f"f_{i} vanished while forming the formula for j={j}")
        out[j] = (bytes([1]), t)
    return out


def verify_unique_highest_weight(parts, n: int) -> dict:
    """Connectedness and unique highest weight of the staircase crystal."""
    parts = check_strict_partition(parts, n)
    instance = f"n={n} lam={parts}"
    records = []
    graph = crystal_of_shape(parts, n)
    validate(graph)
    ncomp = len(graph_components(graph))
    records.append(record(
        "connected", instance, "pass" if ncomp == 1 else "fail",
        witness=None if ncomp == 1 else {"components": ncomp}))
    hw = highest_weight_nodes(graph)
    ok = len(hw) == 1
    records.append(record(
        "unique-highest-weight", instance, "pass" if ok else "fail",
        witness=None if ok else {"count": len(hw)}))
    if ok:
        wt = graph.weights[graph.node_index[hw[0]]]
        good = wt == partition_weight(parts, n)
        records.append(record(
            "highest-weight-is-lam", instance, "pass" if good else "fail",
            witness=None if good else {"weight": list(wt)}))
    return report(records, instance=instance, size=len(graph))


def verify_decomposition(parts, n: int) -> dict:
    """Tensor decomposition of B (x) B(lam) against the strict successors."""
    parts = check_strict_partition(parts, n)
    instance = f"n={n} lam={parts}"
    records = []
    expected = sorted(mu for _, mu in strict_successors(parts, n))
    try:
        pieces = decompose_product(vector_crystal(n), crystal_of_shape(parts, n))
    except VerificationError as exc:
        records.append(record("decomposition", instance, "fail",
                              witness={"error": str(exc)}))
        return report(records, instance=instance)
    got = sorted(mu for mu, _ in pieces)
    ok = got == expected
    records.append(record(
        "decomposition-labels", instance, "pass" if ok else "fail",
        witness={"got": [list(m) for m in got],
                 "expected": [list(m) for m in expected]} if not ok else None))
    records.append(record("component-models", instance, "pass"))
    return report(records, instance=instance,
                  labels=[list(m) for m in got])


def _describe_product_node(product, node) -> dict:
    return {
        "letter": node[0][0],
        "weight": list(product.weights[product.node_index[node]]),
    }


def verify_highest_weight_formula(parts, n: int) -> dict:
    """Highest-weight vectors of B (x) B(lam) vs the operator formula.

    The report carries both sides: the enumerated highest-weight nodes and
    the elements 1 (x) f_1 ... f_{j-1} b_lam, keyed by j.
    """
    parts = check_strict_partition(parts, n)
    instance = f"n={n} lam={parts}"
    product = tensor(vector_crystal(n), crystal_of_shape(parts, n))
    actual = set(highest_weight_nodes(product))
    try:
        formula = highest_weight_formula_side(parts, n)
    except VerificationError as exc:
        records = [record("highest-weight-formula", instance, "fail",
                          witness={"error": str(exc)})]
        return report(records, instance=instance)
    predicted = set(formula.values())
    ok = actual == predicted
    records = [record("highest-weight-formula", instance,
                      "pass" if ok else "fail")]
    return report(
        records, instance=instance,
        enumerated=[_describe_product_node(product, b)
                    for b in sorted(actual, key=product.node_index.get)],
        formula={str(j): _describe_product_node(product, b)
                 for j, b in sorted(formula.items())},
        count_actual=len(actual), count_predicted=len(predicted))


def verify_reading_independence(parts, n: int) -> dict:
    """Row and column readings induce identical operators on all fillings."""
    parts = check_strict_partition(parts, n)
    instance = f"n={n} lam={parts}"
    shape = shape_from_partition(parts, n)
    row_ops = TableauOps(shape, n, "row")
    col_ops = TableauOps(shape, n, "col")
    mismatch = None
    for t in enumerate_ssyt(shape, n):
        for i in range(1, n):
            if row_ops.f(i, t) != col_ops.f(i, t):
                mismatch = {"tableau": list(t.entries), "op": f"f_{i}"}
                break
            if row_ops.e(i, t) != col_ops.e(i, t):
                mismatch = {"tableau": list(t.entries), "op": f"e_{i}"}
                break
        if mismatch is None and n >= 2:
            if row_ops.fbar1(t) != col_ops.fbar1(t):
                mismatch = {"tableau": list(t.entries), "op": "fbar1"}
            elif row_ops.ebar1(t) != col_ops.ebar1(t):
                mismatch = {"tableau": list(t.entries), "op": "ebar1"}
        if mismatch:
            break
    records = [record("reading-independence", instance,
                      "fail" if mismatch else "pass", witness=mismatch)]
    return report(records, instance=instance)


def explore_conjecture(parts, n: int, max_depth: int | None = None) -> dict:
    """Describe the highest-weight vectors of B(lam) (x) B.

    For each highest-weight vector x (x) letter, search breadth-first for a
    product of odd lowering operators fbar_i carrying b_lam to x.  Purely
    descriptive: nothing is asserted about what must be found.
    """
    parts = check_strict_partition(parts, n)
    graph = crystal_of_shape(parts, n)
    ops = GraphOps(graph)
    blam = b_lambda(parts, n)
    if max_depth is None:
        max_depth = sum(parts) + 1
    # breadth-first closure under the odd lowering operators
    expressions = {blam: []}
    frontier = [blam]
    depth = 0
    while frontier and depth < max_depth:
        depth += 1
        nxt = []
        for t in frontier:
            for i in range(1, n):
                u = fbar_ops(ops, i, t)
                if u is not None and u not in expressions:
                    expressions[u] = expressions[t] + [i]
                    nxt.append(u)
        frontier = nxt
    product = tensor(graph, vector_crystal(n))
    found = []
    for node in highest_weight_nodes(product):
        first, letter = node
        expr = expressions.get(first)
        found.append({
            "letter": letter[0],
            "first_factor_weight": list(graph.weights[graph.node_index[first]]),
            "odd_ops_applied_in_order": expr,
            "found": expr is not None,
        })
    records = [record("conjecture-survey", f"n={n} lam={parts}", "info",
                      witness=None)]
    return report(records, instance=f"n={n} lam={parts}",
                  highest_weight_vectors=found, max_depth=max_depth)
