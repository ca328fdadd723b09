"""Command line front end: catalog listing, invariant reports, table checks.

Exit codes: 0 success, 1 failed verification rows, 2 parse/usage errors,
3 Jacobi violation in a user-supplied algebra.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import catalog, tables
from .algebra import (
    NotNilpotent,
    center,
    derived_subalgebra,
    direct_sum,
    from_json,
    nilpotency_class,
    validate,
)
from .capability import noncapable_census, theorem2_bound_check
from .covers import (
    Cover,
    diagonal_square_dim,
    exterior_center,
    exterior_square,
    tensor_square,
)
from .homology import kunneth_exterior_dim, schur_multiplier
from .linalg import QQ, PrimeField
from .recognize import recognize


def _field_from_arg(text):
    if text in (None, "Q"):
        return QQ
    if text.startswith("Fp:"):
        return PrimeField(int(text[3:]))
    raise ValueError(f"unknown field {text!r} (use Q or Fp:<p>)")


def _epsilon_set(field, text):
    if not text:
        return tuple(field.coerce(e) for e in catalog.DEFAULT_EPSILON_SAMPLES)
    return tuple(field.parse(part) for part in text.split(","))


# -- invariants --------------------------------------------------------------


@dataclass
class InvariantReport:
    label: str
    dim: int
    derived_dim: int
    nilpotency_class: int
    center_dim: int
    multiplier_dim: int
    exterior_dim: int
    exterior_type: str
    diagonal_dim: int
    tensor_dim: int
    tensor_type: str
    exterior_center_dim: int
    capable: bool

    def check(self):
        assert self.tensor_dim == self.exterior_dim + self.diagonal_dim
        assert self.exterior_dim == self.multiplier_dim + self.derived_dim

    def as_dict(self):
        return {
            "label": self.label,
            "dim": self.dim,
            "derived_dim": self.derived_dim,
            "class": self.nilpotency_class,
            "center_dim": self.center_dim,
            "multiplier_dim": self.multiplier_dim,
            "exterior_dim": self.exterior_dim,
            "exterior_type": self.exterior_type,
            "diagonal_dim": self.diagonal_dim,
            "tensor_dim": self.tensor_dim,
            "tensor_type": self.tensor_type,
            "exterior_center_dim": self.exterior_center_dim,
            "capable": self.capable,
        }

    CSV_FIELDS = ("label", "dim", "derived_dim", "class", "center_dim",
                  "multiplier_dim", "exterior_dim", "exterior_type",
                  "diagonal_dim", "tensor_dim", "tensor_type",
                  "exterior_center_dim", "capable")


def invariant_report(algebra, label):
    cover = Cover(algebra)
    wedge = exterior_square(cover)
    tensor = tensor_square(cover)
    zw = exterior_center(cover)
    report = InvariantReport(
        label=label,
        dim=algebra.dim,
        derived_dim=derived_subalgebra(algebra).dim,
        nilpotency_class=nilpotency_class(algebra),
        center_dim=center(algebra).dim,
        multiplier_dim=schur_multiplier(algebra).dim,
        exterior_dim=wedge.dim,
        exterior_type=recognize(wedge).label(),
        diagonal_dim=diagonal_square_dim(algebra),
        tensor_dim=tensor.dim,
        tensor_type=recognize(tensor).label(),
        exterior_center_dim=zw.dim,
        capable=zw.dim == 0,
    )
    report.check()
    return report


def _print_report(report, fmt):
    if fmt == "json":
        print(json.dumps(report.as_dict(), indent=2))
    elif fmt == "csv":
        d = report.as_dict()
        print(",".join(InvariantReport.CSV_FIELDS))
        print(",".join(str(d[f]) for f in InvariantReport.CSV_FIELDS))
    else:
        d = report.as_dict()
        width = max(len(k) for k in d)
        for k, v in d.items():
            print(f"{k:<{width}}  {v}")


# -- verification suites ------------------------------------------------------


@dataclass
class SuiteRow:
    suite: str
    row: str
    expected: str
    computed: str

    @property
    def passed(self):
        return self.expected == self.computed

    def line(self):
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark}  {self.suite:<12} {self.row:<16} expected={self.expected} computed={self.computed}"


def _suite_multipliers5(field, eps):
    rows = []
    for k in range(1, 10):
        alg = catalog.build(catalog.indexed_key(5, k), field).algebra
        rows.append(SuiteRow("multipliers5", f"L5_{k}",
                             str(tables.MULTIPLIER_5[k]),
                             str(schur_multiplier(alg).dim)))
    return rows


def _suite_exterior5(field, eps):
    rows = []
    for k in range(1, 10):
        alg = catalog.build(catalog.indexed_key(5, k), field).algebra
        label = recognize(exterior_square(alg)).label()
        rows.append(SuiteRow("exterior5", f"L5_{k}", tables.EXTERIOR_5[k], label))
    return rows


def _suite_diagonal5(field, eps):
    rows = []
    for k in range(1, 10):
        alg = catalog.build(catalog.indexed_key(5, k), field).algebra
        rows.append(SuiteRow("diagonal5", f"L5_{k}",
                             str(tables.DIAGONAL_5[k]),
                             str(diagonal_square_dim(alg))))
    return rows


def _suite_tensor5(field, eps):
    rows = []
    for k in range(1, 10):
        alg = catalog.build(catalog.indexed_key(5, k), field).algebra
        label = recognize(tensor_square(alg)).label()
        rows.append(SuiteRow("tensor5", f"L5_{k}", tables.TENSOR_5[k], label))
    return rows


def _dim6_keys(field, eps):
    out = []
    for k in range(1, 29):
        if k in catalog.EPSILON_INDICES:
            out.extend(catalog.indexed_key(6, k, e) for e in eps)
        else:
            out.append(catalog.indexed_key(6, k))
    return out


def _suite_multipliers6(field, eps):
    rows = []
    for key in _dim6_keys(field, eps):
        alg = catalog.build(key, field).algebra
        rows.append(SuiteRow("multipliers6", str(key),
                             str(tables.MULTIPLIER_6[key.b]),
                             str(schur_multiplier(alg).dim)))
    return rows


def _suite_exterior6(field, eps):
    rows = []
    for key in _dim6_keys(field, eps):
        alg = catalog.build(key, field).algebra
        expected = tables.exterior_6_label(key.b, key.epsilon)
        label = recognize(exterior_square(alg)).label()
        rows.append(SuiteRow("exterior6", str(key), expected, label))
    return rows


def _suite_census(field, eps):
    got = noncapable_census(6, field, eps)
    got_strs = []
    for key in got:
        base = f"L{key.a}_{key.b}" if key.kind == "L" else str(key)
        if base not in got_strs:
            got_strs.append(base)
    expected = ",".join(tables.NONCAPABLE)
    computed = ",".join(got_strs)
    rows = [SuiteRow("census", "noncapable-set", expected, computed)]
    # every sampled epsilon member of the 19 family must be caught
    fam = [k for k in got if k.kind == "L" and k.b == 19]
    rows.append(SuiteRow("census", "L6_19-samples", str(len(eps)), str(len(fam))))
    return rows


def _suite_kunneth(field, eps):
    # the direct side is computed from scratch on the sum via the homology
    # route; the cover route cannot reach sums like L6_17+L6_22 (6 generators,
    # class 5: the free algebra would need thousands of Hall words)
    rows = []
    keys = catalog.all_keys(6, field)
    rng = random.Random(tables.KUNNETH_SEED)
    for t in range(tables.KUNNETH_PAIR_COUNT):
        k1, k2 = rng.choice(keys), rng.choice(keys)
        h = catalog.build(k1, field).algebra
        k = catalog.build(k2, field).algebra
        s = direct_sum(h, k)
        formula = kunneth_exterior_dim(h, k)
        direct = schur_multiplier(s).dim + derived_subalgebra(s).dim
        rows.append(SuiteRow("kunneth", f"{k1}|{k2}", str(formula), str(direct)))
    for n in range(1, tables.ABELIAN_MULTIPLIER_RANGE + 1):
        alg = catalog.abelian_algebra(n, field)
        rows.append(SuiteRow("kunneth", f"A{n}-multiplier",
                             str(n * (n - 1) // 2),
                             str(schur_multiplier(alg).dim)))
    rows.append(SuiteRow("kunneth", "H1-multiplier", "2",
                         str(schur_multiplier(catalog.heisenberg_algebra(1, field)).dim)))
    for m in range(2, tables.HEISENBERG_MULTIPLIER_RANGE + 1):
        alg = catalog.heisenberg_algebra(m, field)
        rows.append(SuiteRow("kunneth", f"H{m}-multiplier",
                             str(2 * m * m - m - 1),
                             str(schur_multiplier(alg).dim)))
    return rows


def _suite_theorem2(field, eps):
    rows = []
    for dim in range(3, 7):
        for key in catalog.expand_keys(dim, field, eps):
            alg = catalog.build(key, field).algebra
            check = theorem2_bound_check(alg, label=str(key))
            if check.status == "skipped":
                computed = f"skipped({check.reason})"
                expected = computed  # a skip is not a failure
            else:
                expected = "bound-holds"
                computed = "bound-holds" if check.holds else \
                    f"bound-fails({check.lhs}>{check.rhs})"
            rows.append(SuiteRow("theorem2", str(key), expected, computed))
    return rows


SUITES = {
    "multipliers5": _suite_multipliers5,
    "exterior5": _suite_exterior5,
    "diagonal5": _suite_diagonal5,
    "tensor5": _suite_tensor5,
    "multipliers6": _suite_multipliers6,
    "exterior6": _suite_exterior6,
    "census": _suite_census,
    "kunneth": _suite_kunneth,
    "theorem2": _suite_theorem2,
}


def run_suites(names, field, eps, jobs=1):
    rows = []
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(SUITES[name], field, eps) for name in names]
            for fut in futures:
                rows.extend(fut.result())
    else:
        for name in names:
            rows.extend(SUITES[name](field, eps))
    return rows


# -- commands ----------------------------------------------------------------


def cmd_list(args):
    try:
        keys = catalog.list_keys(args.dim)
    except catalog.UnsupportedDimension as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    entries = []
    for key in keys:
        if key.is_epsilon_family:
            entries.append({"key": str(key), "epsilon_family": True,
                            "epsilon_samples": [str(e) for e in catalog.DEFAULT_EPSILON_SAMPLES]})
        else:
            entry = catalog.build(key)
            entries.append({"key": str(key), "epsilon_family": False,
                            "note": entry.structure_note})
    if args.format == "json":
        print(json.dumps(entries, indent=2, ensure_ascii=False))
    else:
        for e in entries:
            extra = " (epsilon family)" if e["epsilon_family"] else \
                (f"  {e['note']}" if e.get("note") else "")
            print(f"{e['key']}{extra}")
    return 0


def _load_algebra(args, field):
    if args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            alg = from_json(json.load(fh))
        return alg, args.file
    key = catalog.parse_key(args.key, field)
    return catalog.build(key, field).algebra, str(key)


def cmd_invariants(args):
    field = _field_from_arg(args.field)
    try:
        algebra, label = _load_algebra(args, field)
    except (catalog.CatalogError, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = validate(algebra)
    if not report.ok:
        i, j, k, res = report.first_failure()
        print(f"error: Jacobi violation at ({i + 1},{j + 1},{k + 1}): {res}",
              file=sys.stderr)
        return 3
    try:
        _print_report(invariant_report(algebra, label), args.format)
    except NotNilpotent:
        print("error: the algebra is not nilpotent", file=sys.stderr)
        return 2
    return 0


def cmd_verify_tables(args):
    field = _field_from_arg(args.field)
    eps = _epsilon_set(field, args.epsilon_set)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    rows = run_suites(names, field, eps, jobs=args.jobs)
    failures = []
    for row in rows:
        print(row.line())
        if not row.passed:
            failures.append(row)
    print(f"{len(rows) - len(failures)}/{len(rows)} rows pass")
    if failures:
        print(json.dumps([{"suite": r.suite, "row": r.row,
                           "expected": r.expected, "computed": r.computed}
                          for r in failures]))
        return 1
    return 0


def cmd_cover(args):
    field = _field_from_arg(args.field)
    try:
        key = catalog.parse_key(args.key, field)
        entry = catalog.build(key, field)
    except catalog.CatalogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    cover = Cover(entry.algebra)
    info = {
        "key": str(key),
        "free_generators": cover.gen_count,
        "free_class": cover.cls + 1,
        "free_dim": cover.free.dim,
        "star_dim": cover.star_dim,
        "multiplier_dim": cover.multiplier_dim,
        "derived_dim": cover.derived_part.dim,
        "exterior_center_dim": exterior_center(cover).dim,
    }
    if args.dump_star:
        from .algebra import to_json
        info["star"] = to_json(cover.star)
    print(json.dumps(info, indent=2))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="liecap",
                                     description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="catalog entries of one dimension")
    p_list.add_argument("dim", type=int)
    p_list.add_argument("--format", choices=("pretty", "json"), default="pretty")
    p_list.set_defaults(func=cmd_list)

    p_inv = sub.add_parser("invariants", help="full invariant report for one algebra")
    p_inv.add_argument("key", nargs="?", help="catalog key such as L5_4 or L6_19(e=2)")
    p_inv.add_argument("--file", help="JSON algebra file instead of a key")
    p_inv.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    p_inv.add_argument("--field", default="Q", help="Q or Fp:<p>")
    p_inv.set_defaults(func=cmd_invariants)

    p_ver = sub.add_parser("verify-tables", help="re-derive the published tables")
    p_ver.add_argument("suite", choices=["all"] + sorted(SUITES))
    p_ver.add_argument("--field", default="Q")
    p_ver.add_argument("--epsilon-set", default="")
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.set_defaults(func=cmd_verify_tables)

    p_cov = sub.add_parser("cover", help="cover diagnostics for one catalog entry")
    p_cov.add_argument("key")
    p_cov.add_argument("--dump-star", action="store_true")
    p_cov.add_argument("--field", default="Q")
    p_cov.set_defaults(func=cmd_cover)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "invariants" and not args.key and not args.file:
        print("error: provide a key or --file", file=sys.stderr)
        return 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
