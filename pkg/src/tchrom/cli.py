"""Command-line interface: compute expansions, reproduce the star
tables, and run verification sweeps.

Exit codes: 0 success (or all checks passed), 1 verification failure,
2 usage or input error.  The TCHROM_MAX_N environment variable lifts the
vertex-count caps.
"""

import argparse
import csv
import json
import sys
from math import comb

from .chromatic import (
    PreconditionError,
    cqsf_labeled,
    cqsf_oriented,
    csf,
    normalized_total_star,
    star_cqsf_coeff_closed,
    star_csf_coeff_closed,
    total_labeling_cqsf,
    total_orientation_cqsf,
    total_orientation_star_closed,
    tst_coeff_closed,
    tst_coeff_first_step,
    verify_csf_near_contraction,
    verify_tcqsf_o_near_contraction,
    verify_tree_formula,
)
from .combinat import enumerate_compositions, enumerate_partitions
from .configmodel import (
    b0_shift_bijection,
    closed_T,
    conditions_vs_nat,
    count_B,
    count_T,
    enumerate_configurations,
    nat,
    special_bijection,
    verify_binomial_identity,
    verify_recursions,
)
from .graph import (
    CapExceeded,
    GraphFormatError,
    cycle,
    disjoint_union,
    enumerate_trees,
    from_edge_list,
    graph_from_json,
    is_internal,
    lies_on_cycle,
    path,
    star,
    star_representative_labeling,
)
from .qsymfunc import expansion_to_json, quasi_shuffle_product, to_symmetric


class OptionFormatError(ValueError):
    """A flag value failed to parse."""


def _load_graph(path_arg):
    try:
        with open(path_arg, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path_arg}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{path_arg} is not valid JSON: {exc}") from None
    return graph_from_json(data)


def _parse_labels(text, g):
    try:
        labels = tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise OptionFormatError(f"invalid labeling string {text!r}: expected comma-separated integers") from None
    if len(labels) != g.n or sorted(labels) != list(range(1, g.n + 1)):
        raise OptionFormatError(
            f"invalid labeling string {text!r}: need a permutation of 1..{g.n}, one label per vertex"
        )
    return labels


def _parse_orientation(text, g):
    arcs = []
    for piece in text.split(","):
        head, sep, tail = piece.partition(">")
        if not sep:
            raise OptionFormatError(f"invalid orientation string: {piece!r} is not of the form u>v")
        try:
            arcs.append((int(head), int(tail)))
        except ValueError:
            raise OptionFormatError(f"invalid orientation string: {piece!r} is not of the form u>v") from None
    directed = {}
    for a, b in arcs:
        key = (min(a, b), max(a, b))
        if key not in set(g.edges):
            raise OptionFormatError(f"invalid orientation string: ({a},{b}) is not an edge")
        if key in directed:
            raise OptionFormatError(f"invalid orientation string: edge ({a},{b}) directed twice")
        directed[key] = (a, b)
    missing = [e for e in g.edges if e not in directed]
    if missing:
        raise OptionFormatError(f"invalid orientation string: edge {missing[0]} left undirected")
    return tuple(directed[e] for e in g.edges)


def _index_str(index):
    return "(" + ",".join(str(part) for part in index) + ")"


def _poly_cell(poly):
    return ";".join(str(c) for c in poly.coeffs) if poly.coeffs else "0"


def _emit_expansion(expansion, fmt):
    if fmt == "json":
        print(json.dumps(expansion_to_json(expansion), indent=2))
        return
    rows = [(index, expansion.terms[index]) for index in sorted(expansion.terms)]
    if fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["index", "coeff"])
        for index, poly in rows:
            writer.writerow([_index_str(index), _poly_cell(poly)])
        return
    print(f"degree {expansion.degree}, basis {expansion.basis}")
    for index, poly in rows:
        print(f"  {_index_str(index):<18} {poly}")


def _cmd_csf(args):
    _emit_expansion(csf(_load_graph(args.graph)), args.format)
    return 0


def _cmd_cqsf_label(args):
    g = _load_graph(args.graph)
    labels = _parse_labels(args.labels, g)
    _emit_expansion(cqsf_labeled(g, labels), args.format)
    return 0


def _cmd_cqsf_orient(args):
    g = _load_graph(args.graph)
    orientation = _parse_orientation(args.orient, g)
    _emit_expansion(cqsf_oriented(g, orientation), args.format)
    return 0


def _cmd_total_label(args):
    _emit_expansion(total_labeling_cqsf(_load_graph(args.graph)), args.format)
    return 0


def _cmd_total_orient(args):
    _emit_expansion(total_orientation_cqsf(_load_graph(args.graph)), args.format)
    return 0


def _cmd_tst(args):
    n = args.n
    brute = normalized_total_star(n)
    rows = []
    for alpha in enumerate_compositions(n):
        closed = tst_coeff_closed(alpha, n)
        observed = brute.coefficient(alpha)
        if closed or observed:
            rows.append((alpha, closed, observed))
    all_equal = all(closed == observed for _, closed, observed in rows)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": n,
                    "all_equal": all_equal,
                    "rows": [
                        {
                            "index": list(alpha),
                            "closed": closed.to_json(),
                            "brute": observed.to_json(),
                            "equal": closed == observed,
                        }
                        for alpha, closed, observed in rows
                    ],
                },
                indent=2,
            )
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["index", "closed", "brute", "equal"])
        for alpha, closed, observed in rows:
            writer.writerow(
                [_index_str(alpha), _poly_cell(closed), _poly_cell(observed), closed == observed]
            )
    else:
        print(f"normalized star total, n={n} (closed vs brute)")
        for alpha, closed, observed in rows:
            verdict = "ok" if closed == observed else f"MISMATCH (brute: {observed})"
            print(f"  {_index_str(alpha):<18} {str(closed):<40} {verdict}")
        print("all rows match" if all_equal else "MISMATCHES FOUND")
    return 0 if all_equal else 1


def _cmd_star_tables(args):
    n, r = args.n, args.root
    if not 1 <= r <= n:
        raise OptionFormatError(f"--root must be between 1 and {n}")
    rows = []
    for alpha in enumerate_compositions(n):
        coeff = star_cqsf_coeff_closed(alpha, r, n)
        if coeff:
            rows.append((alpha, coeff))
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": n,
                    "root": r,
                    "rows": [
                        {"index": list(alpha), "coeff": coeff.to_json()} for alpha, coeff in rows
                    ],
                },
                indent=2,
            )
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["index", "coeff"])
        for alpha, coeff in rows:
            writer.writerow([_index_str(alpha), _poly_cell(coeff)])
    else:
        print(f"star with {n} vertices, root label {r}")
        for alpha, coeff in rows:
            print(f"  {_index_str(alpha):<18} {coeff}")
    return 0


def _family_graphs(max_n):
    graphs = []
    for n in range(2, max_n + 1):
        graphs.append(path(n))
    for n in range(3, max_n + 1):
        graphs.append(star(n))
        graphs.append(cycle(n))
    for n in range(3, min(max_n, 5) + 1):
        graphs.append(from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)]))
    if max_n >= 5:
        graphs.append(from_edge_list(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]))
        graphs.append(from_edge_list(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]))
    unique = []
    for g in graphs:
        if g not in unique:
            unique.append(g)
    return unique


def _verify_binomial_identity(max_n):
    reports = []
    failures = []
    instances = 0
    for n in range(2, max_n + 1):
        for s in range((n - 1) // 2 + 1):
            for k in range(s, (n - 1) // 2 + 1):
                instances += 1
                if not verify_binomial_identity(n, s, k):
                    failures.append({"params": {"n": n, "s": s, "k": k}})
    reports.append({"family": "binomial identity", "instances": instances, "failures": failures})
    failures = []
    instances = 0
    for n in range(2, max_n + 1):
        for s in range((n - 1) // 2 + 1):
            sums = {
                k: sum(count_B(n, s, k, j) for j in range(s + 1))
                for k in range(s, (n - 1) // 2 + 1)
            }
            instances += 1
            if len(set(sums.values())) > 1:
                failures.append({"params": {"n": n, "s": s, "sums": sums}})
    reports.append({"family": "k-independence", "instances": instances, "failures": failures})
    return reports


def _verify_config_model(max_n):
    reports = []

    failures = []
    instances = 0
    for n in range(1, max_n + 1):
        for s in range(n // 2 + 1):
            for b0 in range(1, n - 2 * s + 2):
                for i in range(s + 1):
                    instances += 1
                    expected = closed_T(n, i)
                    actual = count_T(n, s, i, b0)
                    if actual != expected:
                        failures.append(
                            {
                                "params": {"n": n, "s": s, "i": i, "b0": b0},
                                "expected": expected,
                                "actual": actual,
                            }
                        )
    reports.append({"family": "closed form of T", "instances": instances, "failures": failures})

    failures = []
    instances = 0
    for n in range(1, min(max_n, 12) + 1):
        for s in range((n - 1) // 2 + 1):
            for k in range(s, (n - 1) // 2 + 1):
                instances += 1
                verdict = conditions_vs_nat(n, s, k)
                if not verdict:
                    failures.append(
                        {
                            "params": {"n": n, "s": s, "k": k},
                            "counterexample": list(verdict.counterexample.marks),
                        }
                    )
    reports.append(
        {"family": "conditions count displaced marks", "instances": instances, "failures": failures}
    )

    failures = []
    instances = 0
    for n in range(2, min(max_n, 12) + 1):
        for s in range(n // 2 + 1):
            for b0 in range(1, n - 2 * s + 1):
                domain = enumerate_configurations(n, s)
                images = set()
                instances += 1
                for gamma in domain:
                    image = b0_shift_bijection(gamma, s, b0)
                    if nat(image, b0 + 1) != nat(gamma, b0) or image in images:
                        failures.append(
                            {"params": {"n": n, "s": s, "b0": b0}, "gamma": list(gamma.marks)}
                        )
                        break
                    images.add(image)
    reports.append(
        {"family": "first-home shift bijection", "instances": instances, "failures": failures}
    )

    failures = []
    instances = 0
    for i in range(1, 7):
        domain = [
            gamma for gamma in enumerate_configurations(2 * i, i) if nat(gamma, 1) == i
        ]
        target = {
            gamma.marks
            for gamma in enumerate_configurations(2 * i - 1, i - 1)
            if nat(gamma, 1) == i - 1
        }
        images = set()
        instances += 1
        for gamma in domain:
            image = special_bijection(gamma, i)
            if image.marks not in target or image.marks in images:
                failures.append({"params": {"i": i}, "gamma": list(gamma.marks)})
                break
            images.add(image.marks)
        else:
            if len(images) != len(target):
                failures.append({"params": {"i": i}, "missed": len(target) - len(images)})
    reports.append(
        {"family": "fully-displaced bijection", "instances": instances, "failures": failures}
    )

    for report in verify_recursions(min(max_n, 16)):
        reports.append(report)

    failures = []
    instances = 0
    catalan = 1
    for i in range(8):
        instances += 1
        if i > 0:
            catalan = catalan * 2 * (2 * i - 1) // (i + 1)
        if i >= 1:
            actual = count_T(2 * i, i, i, 1)
            if actual != catalan:
                failures.append({"params": {"i": i}, "expected": catalan, "actual": actual})
    reports.append({"family": "Catalan diagonal", "instances": instances, "failures": failures})

    return reports


def _verify_tree_formula(max_n):
    failures = []
    instances = 0
    for n in range(1, max_n + 1):
        for tree in enumerate_trees(n):
            instances += 1
            if not verify_tree_formula(tree):
                failures.append({"params": {"n": n, "edges": list(tree.edges)}})
    return [{"family": "orientation total on trees", "instances": instances, "failures": failures}]


def _verify_near_contraction(max_n):
    reports = []
    failures = []
    instances = 0
    for g in _family_graphs(max_n):
        if g.n > 7:
            continue
        for e in g.edges:
            instances += 1
            if not verify_csf_near_contraction(g, e):
                failures.append({"params": {"edges": list(g.edges), "edge": list(e)}})
    reports.append(
        {"family": "symmetric-function near-contraction", "instances": instances, "failures": failures}
    )
    failures = []
    instances = 0
    for g in _family_graphs(max_n):
        if g.n > 7:
            continue
        for e in g.edges:
            if not is_internal(g, e) or lies_on_cycle(g, e):
                continue
            instances += 1
            if not verify_tcqsf_o_near_contraction(g, e):
                failures.append({"params": {"edges": list(g.edges), "edge": list(e)}})
    reports.append(
        {"family": "orientation-total near-contraction", "instances": instances, "failures": failures}
    )
    return reports


def _verify_disjoint_union(max_n):
    reports = []
    label_failures = []
    orient_failures = []
    instances = 0
    parts = [g for g in _family_graphs(max_n) if g.n < max_n] + [path(1)]
    for g in parts:
        for h in parts:
            if g.n + h.n > max_n:
                continue
            instances += 1
            union = disjoint_union(g, h)
            expected = quasi_shuffle_product(
                total_labeling_cqsf(g), total_labeling_cqsf(h)
            ).scale(comb(g.n + h.n, g.n))
            if total_labeling_cqsf(union) != expected:
                label_failures.append({"params": {"g": list(g.edges), "h": list(h.edges)}})
            expected = quasi_shuffle_product(
                total_orientation_cqsf(g), total_orientation_cqsf(h)
            )
            if total_orientation_cqsf(union) != expected:
                orient_failures.append({"params": {"g": list(g.edges), "h": list(h.edges)}})
    reports.append(
        {
            "family": "labeling total of a disjoint union",
            "instances": instances,
            "failures": label_failures,
        }
    )
    reports.append(
        {
            "family": "orientation total of a disjoint union",
            "instances": instances,
            "failures": orient_failures,
        }
    )
    return reports


def _verify_star_closed_forms(max_n):
    reports = []
    failures = []
    instances = 0
    for n in range(2, max_n + 1):
        g = star(n)
        for r in range(1, n + 1):
            observed = cqsf_labeled(g, star_representative_labeling(n, r))
            for alpha in enumerate_compositions(n):
                instances += 1
                if star_cqsf_coeff_closed(alpha, r, n) != observed.coefficient(alpha):
                    failures.append({"params": {"n": n, "r": r, "alpha": list(alpha)}})
    reports.append(
        {"family": "per-root coefficient closed form", "instances": instances, "failures": failures}
    )

    failures = []
    instances = 0
    for n in range(2, max_n + 1):
        observed = csf(star(n))
        for lam in enumerate_partitions(n):
            instances += 1
            if star_csf_coeff_closed(lam) != observed.coefficient(lam).evaluate_at_one():
                failures.append({"params": {"n": n, "lam": list(lam)}})
    reports.append(
        {"family": "star coloring-count closed form", "instances": instances, "failures": failures}
    )

    failures = []
    instances = 0
    for n in range(2, max_n + 1):
        brute = normalized_total_star(n)
        for alpha in enumerate_compositions(n):
            instances += 1
            closed = tst_coeff_closed(alpha, n)
            if closed != brute.coefficient(alpha):
                failures.append({"params": {"n": n, "alpha": list(alpha)}})
            for k in range((n - 1) // 2 + 1):
                instances += 1
                if tst_coeff_first_step(alpha, n, k) != brute.coefficient(alpha).coefficient(k):
                    failures.append({"params": {"n": n, "alpha": list(alpha), "k": k}})
    reports.append(
        {"family": "normalized-total closed forms", "instances": instances, "failures": failures}
    )

    failures = []
    instances = 0
    for n in range(2, max_n + 1):
        instances += 1
        if total_orientation_star_closed(n) != to_symmetric(total_orientation_cqsf(star(n))):
            failures.append({"params": {"n": n}})
    reports.append(
        {"family": "star orientation-total closed form", "instances": instances, "failures": failures}
    )
    return reports


_VERIFY_SUBJECTS = {
    "binomial-identity": (_verify_binomial_identity, 16),
    "config-model": (_verify_config_model, 14),
    "tree-formula": (_verify_tree_formula, 5),
    "near-contraction": (_verify_near_contraction, 5),
    "disjoint-union": (_verify_disjoint_union, 6),
    "star-closed-forms": (_verify_star_closed_forms, 6),
}


def _cmd_verify(args):
    handler, default_max = _VERIFY_SUBJECTS[args.subject]
    max_n = args.max_n if args.max_n is not None else default_max
    reports = handler(max_n)
    ok = all(not report["failures"] for report in reports)
    if args.format == "json":
        print(json.dumps({"subject": args.subject, "ok": ok, "reports": reports}, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["family", "instances", "failures"])
        for report in reports:
            writer.writerow([report["family"], report["instances"], len(report["failures"])])
    else:
        for report in reports:
            status = "pass" if not report["failures"] else "FAIL"
            print(f"{status}  {report['family']}: {report['instances']} instances checked")
            for failure in report["failures"][:5]:
                print(f"      counterexample: {failure}")
        print("all checks passed" if ok else "CHECKS FAILED")
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tchrom",
        description="Chromatic (quasi)symmetric functions, star tables, and verifiers.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("csf", help="chromatic symmetric function of a graph")
    p.add_argument("graph", help="graph JSON file")
    add_format(p)
    p.set_defaults(handler=_cmd_csf)

    p = sub.add_parser("cqsf-label", help="refinement relative to a labeling")
    p.add_argument("graph")
    p.add_argument("--labels", required=True, help='label of each vertex in order, e.g. "2,1,3,4,5"')
    add_format(p)
    p.set_defaults(handler=_cmd_cqsf_label)

    p = sub.add_parser("cqsf-orient", help="refinement relative to an orientation")
    p.add_argument("graph")
    p.add_argument("--orient", required=True, help='directed edges, e.g. "0>1,2>1"')
    add_format(p)
    p.set_defaults(handler=_cmd_cqsf_orient)

    p = sub.add_parser("total-label", help="sum of the refinement over all labelings")
    p.add_argument("graph")
    add_format(p)
    p.set_defaults(handler=_cmd_total_label)

    p = sub.add_parser("total-orient", help="sum of the refinement over acyclic orientations")
    p.add_argument("graph")
    add_format(p)
    p.set_defaults(handler=_cmd_total_orient)

    p = sub.add_parser("tst", help="normalized star total: closed form vs brute force")
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_tst)

    p = sub.add_parser("star-tables", help="per-root-label star coefficients (closed form)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--root", type=int, required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_star_tables)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("subject", choices=sorted(_VERIFY_SUBJECTS))
    p.add_argument("--max-n", type=int, default=None)
    add_format(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except GraphFormatError as exc:
        print(f"error: malformed graph JSON: {exc}", file=sys.stderr)
        return 2
    except OptionFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"error: cap exceeded: {exc} (set TCHROM_MAX_N to raise it)", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: precondition violated: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
