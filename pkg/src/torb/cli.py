"""Command-line front end and JSON serialization.

Polytopes travel as JSON documents:

    {"dim": 2,
     "facets": [{"conormal": [-1, 0], "offset": "0", "label": 1}, ...]}

Offsets are exact rationals rendered as reduced fraction strings.  Facet
order is significant (labels are positional).  Command output is a report
object; readers accept either a bare polytope document or a report whose
results carry one, so commands can be piped with "-" for stdin.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import bundle as bundle_mod
from . import cohomology, constructors, labeled, lattice, quotient
from .errors import TorbError


def format_fraction(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def polytope_to_doc(lp: labeled.LabeledPolytope) -> dict:
    return {
        "dim": lp.dim,
        "facets": [
            {
                "conormal": list(h.conormal),
                "offset": format_fraction(h.offset),
                "label": m,
            }
            for h, m in zip(lp.geometry.halfspaces, lp.labels)
        ],
    }


def doc_to_polytope(doc: dict) -> labeled.LabeledPolytope:
    if "dim" not in doc and "results" in doc:
        results = doc["results"]
        if isinstance(results, dict) and "polytope" in results:
            doc = results["polytope"]
    facets = [
        (tuple(f["conormal"]), Fraction(str(f["offset"])), f.get("label", 1))
        for f in doc["facets"]
    ]
    return labeled.make_labeled(int(doc["dim"]), facets)


def _read_json(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _load_polytope(path: str) -> labeled.LabeledPolytope:
    return doc_to_polytope(_read_json(path))


def _parse_int_list(text: str) -> tuple[int, ...]:
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def _parse_fraction_list(text: str) -> tuple[Fraction, ...]:
    if not text:
        return ()
    return tuple(Fraction(x) for x in text.split(","))


def _parse_basis(text: str):
    return tuple(
        tuple(int(x) for x in row.split(",")) for row in text.split(";")
    )


def _report(command: str, inputs: dict, results: dict, warnings=()) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "warnings": list(warnings),
    }


def _emit(report: dict) -> None:
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cmd_construct(args) -> dict:
    if args.family == "sp":
        lp = constructors.labeled_projective_space(
            constructors.SPData(
                v=_parse_int_list(args.slant), w=_parse_int_list(args.labels)
            )
        )
        inputs = {"slant": args.slant, "labels": args.labels}
    elif args.family == "wps":
        weights = constructors.WeightVector(_parse_int_list(args.weights))
        lp = constructors.weighted_projective_polytope(weights)
        orders, gamma = constructors.orbifold_projective_local_groups(weights)
        inputs = {"weights": args.weights}
        return _report(
            "construct wps",
            inputs,
            {
                "polytope": polytope_to_doc(lp),
                "weight_order_labels": list(constructors.wps_labels(weights)),
                "local_group_orders": list(orders),
                "structure_group_order": gamma,
            },
        )
    elif args.family == "football":
        p, q = _parse_int_list(args.labels)
        lp = constructors.football(p, q)
        inputs = {"labels": args.labels}
    elif args.family == "simplex":
        labels = _parse_int_list(args.labels) if args.labels else None
        lp = constructors.simplex(args.dim, labels)
        inputs = {"dim": args.dim, "labels": args.labels}
    elif args.family == "product":
        lp = constructors.product(
            _load_polytope(args.files[0]), _load_polytope(args.files[1])
        )
        inputs = {"files": args.files}
    else:
        raise TorbError(f"unknown family {args.family!r}")
    return _report(
        f"construct {args.family}", inputs, {"polytope": polytope_to_doc(lp)}
    )


def _cmd_info(args) -> dict:
    lp = _load_polytope(args.file)
    problems = labeled.validate(lp)
    if problems:
        raise TorbError("; ".join(problems))
    from .polytope import f_vector

    f = f_vector(lp.geometry)
    h = cohomology.h_vector(lp)
    betti = cohomology.betti_numbers(lp)
    profile = labeled.singularity_profile(lp)
    results = {
        "f_vector": list(f),
        "h_vector": list(h),
        "betti_numbers": list(betti),
        "singularity_profile": [
            {"facets": sorted(s), "order": n} for s, n in profile.orders
        ],
        "has_locally_maximal_singular_vertex": (
            profile.has_locally_maximal_singular_vertex
        ),
    }
    if args.face is not None:
        group = labeled.orbifold_group_of_face(lp, _parse_int_list(args.face))
        results["face_group"] = {
            "invariant_factors": list(group.invariant_factors),
            "order": group.order,
        }
    return _report("info", {"file": args.file}, results)


def _cmd_equiv(args) -> dict:
    lp1 = _load_polytope(args.files[0])
    lp2 = _load_polytope(args.files[1])
    transform = labeled.equivalent(lp1, lp2, mode=args.mode)
    if transform is None:
        results = {"equivalent": False}
    elif args.mode == "translation":
        results = {
            "equivalent": True,
            "translation": [format_fraction(x) for x in transform],
        }
    else:
        u, t = transform
        results = {
            "equivalent": True,
            "matrix": [list(row) for row in u],
            "translation": [format_fraction(x) for x in t],
        }
    return _report(
        f"equiv --mode {args.mode}", {"files": args.files}, results
    )


def _cmd_quotient(args) -> dict:
    lp = _load_polytope(args.file)
    gens = tuple(_parse_fraction_list(g) for g in args.gen)
    group = quotient.TorusSubgroup(dim=lp.dim, generators=gens)
    out = quotient.quotient_polytope(lp, group)
    return _report(
        "quotient",
        {"file": args.file, "generators": args.gen},
        {
            "polytope": polytope_to_doc(out),
            "subgroup_order": quotient.subgroup_order(group),
        },
    )


def _cmd_cover(args) -> dict:
    lp = _load_polytope(args.file)
    basis = _parse_basis(args.basis)
    out = quotient.cover_polytope(lp, basis)
    return _report(
        "cover",
        {"file": args.file, "basis": args.basis},
        {"polytope": polytope_to_doc(out)},
    )


def _cmd_bundle(args) -> dict:
    if args.action == "build":
        fiber = _load_polytope(args.fiber)
        base = _load_polytope(args.base)
        twist = _parse_int_list(args.twist) if args.twist else (0,) * fiber.dim
        divisors = (
            _parse_int_list(args.divisors) if args.divisors else None
        )
        offsets = (
            _parse_fraction_list(args.offsets) if args.offsets else None
        )
        lp = bundle_mod.build_simplex_bundle(
            fiber, base, twist, label_divisors=divisors, offsets=offsets
        )
        return _report(
            "bundle build",
            {"fiber": args.fiber, "base": args.base, "twist": args.twist},
            {"polytope": polytope_to_doc(lp)},
        )
    if args.action == "recognize":
        total = _load_polytope(args.total)
        fiber = _load_polytope(args.fiber)
        base = _load_polytope(args.base)
        data = bundle_mod.recognize_bundle(total, fiber, base)
        if data is None:
            results = {"recognized": False}
        else:
            results = {
                "recognized": True,
                "iota": [list(row) for row in data.iota],
                "pi": [list(row) for row in data.pi],
                "divisors": [b for _, b in data.base_facet_lifts],
                "ratios": list(data.ratios),
                "facet_correspondence": list(data.facet_correspondence),
            }
        return _report(
            "bundle recognize",
            {"total": args.total, "fiber": args.fiber, "base": args.base},
            results,
        )
    if args.action == "twist":
        total = _load_polytope(args.total)
        twist = bundle_mod.extract_twist(total)
        if twist is None:
            results = {"is_simplex_bundle": False}
        else:
            results = {
                "is_simplex_bundle": True,
                "k1": twist.k1,
                "k2": twist.k2,
                "twist": list(twist.a),
            }
        return _report("bundle twist", {"total": args.total}, results)
    raise TorbError(f"unknown bundle action {args.action!r}")


def _cmd_uniqueness(args) -> dict:
    a = _parse_int_list(args.twist) if args.twist else (0,) * args.k1
    decision = cohomology.is_ring_product(args.k1, args.k2, a)
    ring = cohomology.bundle_ring(args.k1, args.k2, a)
    found = cohomology.find_product_generators(ring, bound=args.bound)
    warnings = [
        f"generator search is exhaustive only up to bound {args.bound}"
    ]
    return _report(
        "uniqueness",
        {"k1": args.k1, "k2": args.k2, "twist": args.twist, "bound": args.bound},
        {
            "is_product": decision.is_product,
            "case": decision.case,
            "detail": decision.detail,
            "generators": list(found) if found else None,
        },
        warnings,
    )


def _cmd_delzant(args) -> dict:
    lp = _load_polytope(args.file)
    data = labeled.delzant_data(lp)
    return _report(
        "delzant",
        {"file": args.file},
        {
            "beta": [list(row) for row in data.beta],
            "kernel_basis": [list(v) for v in data.kernel_basis],
            "fan_index_sets": [sorted(s) for s in data.fan_index_sets],
        },
    )


def _cmd_selftest(args) -> dict:
    seed = int(os.environ.get("TORB_SEED", "0"))
    rng = random.Random(seed)
    checks = 0
    for _ in range(args.trials):
        n = rng.randint(1, 3)
        mat = tuple(
            tuple(rng.randint(-4, 4) for _ in range(n)) for _ in range(n)
        )
        d = lattice.det(mat)
        if d == 0:
            continue
        group = lattice.cokernel(mat)
        if group.order != abs(d):
            raise TorbError(f"cokernel order mismatch on {mat}")
        dec = lattice.smith_normal_form(mat)
        if lattice.mat_mul(dec.s, mat) != lattice.mat_mul(dec.d, dec.t):
            raise TorbError(f"decomposition identity fails on {mat}")
        checks += 1
    return _report(
        "selftest",
        {"seed": seed, "trials": args.trials},
        {"checks_passed": checks},
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torb",
        description="Exact labeled-polytope computations for toric orbifolds.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("construct", help="build a standard labeled polytope")
    p.add_argument(
        "family", choices=["sp", "wps", "football", "simplex", "product"]
    )
    p.add_argument("files", nargs="*", default=[])
    p.add_argument("--slant", default="")
    p.add_argument("--labels", default="")
    p.add_argument("--weights", default="")
    p.add_argument("--dim", type=int, default=1)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("info", help="invariants of a labeled polytope")
    p.add_argument("file")
    p.add_argument("--face", default=None, help="comma-separated facet indices")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("equiv", help="equivalence of two labeled polytopes")
    p.add_argument("files", nargs=2)
    p.add_argument(
        "--mode", choices=["translation", "unimodular"], default="translation"
    )
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("quotient", help="quotient by a finite torus subgroup")
    p.add_argument("file")
    p.add_argument(
        "--gen",
        action="append",
        required=True,
        help="comma-separated rational generator, repeatable",
    )
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("cover", help="cover along a finite-index sublattice")
    p.add_argument("file")
    p.add_argument(
        "--basis", required=True, help="rows separated by ';', entries by ','"
    )
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("bundle", help="simplex bundle operations")
    p.add_argument("action", choices=["build", "recognize", "twist"])
    p.add_argument("--fiber")
    p.add_argument("--base")
    p.add_argument("--total")
    p.add_argument("--twist")
    p.add_argument("--divisors")
    p.add_argument("--offsets")
    p.set_defaults(func=_cmd_bundle)

    p = sub.add_parser("uniqueness", help="product-ring decision")
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--twist", default="")
    p.add_argument("--bound", type=int, default=5)
    p.set_defaults(func=_cmd_uniqueness)

    p = sub.add_parser("delzant", help="moment-map construction data")
    p.add_argument("file")
    p.set_defaults(func=_cmd_delzant)

    p = sub.add_parser("selftest", help="randomized internal consistency checks")
    p.add_argument("--trials", type=int, default=50)
    p.set_defaults(func=_cmd_selftest)

    return parser


def run_command(argv):
    """Parse and run; returns (report or None, exit status)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return None, (exc.code if exc.code is not None else 2)
    try:
        report = args.func(args)
    except TorbError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return None, 1
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return None, 1
    return report, 0


def main(argv=None) -> int:
    report, status = run_command(argv)
    if report is not None:
        _emit(report)
    return status


if __name__ == "__main__":
    sys.exit(main())
