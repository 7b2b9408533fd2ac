"""Command-line front end: enumeration, word operations, verification
suites, classification and skew checking.

All outputs are deterministic: listings are sorted and the JSON form has
a fixed key order with no timestamps.  Exit status: 0 = all checks pass,
1 = a verified-false mathematical check, 2 = input or schema error,
3 = budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import dyck, motzkin
from .classify import classify_maps, verify_classification
from .errors import BudgetExceededError, CatssetError
from .finmon import FinMonoidalStructure, chain_poset, validate_category, validate_strict_monoidal
from .library import boolean_or, chain3_poset, zmonoid_category
from .nerve import monoidal_nerve
from .relations import to_relation
from .skew import SkewData, check_axioms, check_naturality, check_pentagons, sweep_equivalence, verify_equivalence
from .sset import (
    catalan_sset,
    check_simplicial_identities,
    is_r_coskeletal_up_to,
    isomorphisms,
)

SCHEMA_VERSION = 1

DEFAULT_CAPS = {"dyck": 10, "relation": 7, "motzkin": 12}
DEFAULT_BUDGET = 1_000_000

Check = tuple[str, bool, str]


def _load_config(path: str | None) -> dict:
    config = {"caps": dict(DEFAULT_CAPS), "budget": DEFAULT_BUDGET}
    if path is None:
        return config
    with open(path, "r", encoding="utf-8") as handle:
        doc = json.load(handle)
    caps = doc.get("caps", {})
    if not isinstance(caps, dict):
        raise ValueError("config key 'caps' must be an object")
    config["caps"].update(caps)
    config["budget"] = doc.get("budget", DEFAULT_BUDGET)
    return config


def _emit(args: argparse.Namespace, doc: dict, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        for line in lines:
            print(line)


# -- enumerate and word commands ------------------------------------------


def cmd_enumerate(args: argparse.Namespace) -> int:
    config = _load_config(args.config)
    cap = config["caps"][args.form]
    if args.dim > cap:
        raise BudgetExceededError(
            f"dimension {args.dim} exceeds the {args.form} cap {cap}"
        )
    if args.form == "motzkin":
        items = motzkin.enumerate_motzkin(args.dim)
    else:
        words = dyck.enumerate_dyck(args.dim)
        if args.nondegenerate:
            words = [w for w in words if not dyck.is_degenerate(w)]
        if args.form == "dyck":
            items = words
        else:
            items = [json.dumps(to_relation(w).sorted_pairs()) for w in words]
    items = sorted(items)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "enumerate",
        "dim": args.dim,
        "form": args.form,
        "nondegenerate": bool(args.nondegenerate),
        "items": items,
        "count": len(items),
    }
    _emit(args, doc, [*items, f"count: {len(items)}"])
    return 0


def cmd_face(args: argparse.Namespace) -> int:
    result = dyck.face(args.word, args.index)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "face",
        "word": args.word,
        "index": args.index,
        "result": result,
    }
    _emit(args, doc, [result])
    return 0


def cmd_degeneracy(args: argparse.Namespace) -> int:
    result = dyck.degeneracy(args.word, args.index)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "degeneracy",
        "word": args.word,
        "index": args.index,
        "result": result,
    }
    _emit(args, doc, [result])
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    phi, core = dyck.ez_decompose(args.word)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "decompose",
        "word": args.word,
        "core": core,
        "source_dim": phi.source_dim,
        "target_dim": phi.target_dim,
        "image": list(phi.image),
    }
    lines = [
        f"core: {core}",
        f"surjection: {list(phi.image)} ([{phi.source_dim}] -> [{phi.target_dim}])",
    ]
    _emit(args, doc, lines)
    return 0


def cmd_motzkin(args: argparse.Namespace) -> int:
    if args.from_dyck:
        result = motzkin.dyck_to_motzkin(args.from_dyck)
        source = args.from_dyck
        direction = "from-dyck"
    else:
        result = motzkin.motzkin_to_dyck(args.to_dyck)
        source = args.to_dyck
        direction = "to-dyck"
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "motzkin",
        "direction": direction,
        "word": source,
        "result": result,
    }
    _emit(args, doc, [result if result else "(empty word)"])
    return 0


# -- verification suites ----------------------------------------------------


def _suite_identities(max_dim: int) -> list[Check]:
    checks: list[Check] = []
    S = catalan_sset(max_dim)
    bad = check_simplicial_identities(S)
    checks.append(
        (
            f"identities-dyck-{max_dim}",
            not bad,
            f"{len(bad)} violation(s) on the Dyck presentation truncated at {max_dim}",
        )
    )
    nerve_dim = min(max_dim, 5)
    T = monoidal_nerve(boolean_or(), nerve_dim)
    bad = check_simplicial_identities(T)
    checks.append(
        (
            f"identities-nerve-two-{nerve_dim}",
            not bad,
            f"{len(bad)} violation(s) on the Boolean nerve truncated at {nerve_dim}",
        )
    )
    return checks


def _suite_coskeletal(r: int, max_dim: int) -> list[Check]:
    checks: list[Check] = []
    S = catalan_sset(max_dim)
    ok = is_r_coskeletal_up_to(S, r, max_dim)
    checks.append(
        (
            f"coskeletal-{r}-upto-{max_dim}",
            ok,
            f"unique fillers in dimensions {r + 1}..{max_dim}",
        )
    )
    low = catalan_sset(min(4, max_dim))
    not_one = not is_r_coskeletal_up_to(low, 1, min(4, max_dim))
    checks.append(
        (
            "not-1-coskeletal",
            not_one,
            "some 2-boundary has no filler, as expected",
        )
    )
    return checks


def _suite_nerve_iso(max_dim: int) -> list[Check]:
    S = catalan_sset(max_dim)
    T = monoidal_nerve(boolean_or(), max_dim)
    isos = isomorphisms(S, T)
    checks: list[Check] = [
        (
            "nerve-iso-count",
            len(isos) == 1,
            f"{len(isos)} isomorphism(s) found",
        )
    ]
    if len(isos) == 1:
        iso = isos[0]
        ok = iso(1, dyck.FREE_EDGE) == "top" and iso(1, dyck.UNIT_EDGE) == "bot"
        checks.append(
            ("nerve-iso-edges", ok, "free edge goes to top, degenerate edge to bot")
        )
    return checks


def _suite_motzkin(max_n: int) -> list[Check]:
    checks: list[Check] = []
    counts_ok = all(
        len(dyck.nondegenerate_dyck(n)) == motzkin.motzkin_number(n)
        for n in range(min(max_n, 6) + 1)
    )
    checks.append(
        (
            "motzkin-counts",
            counts_ok,
            f"non-degenerate counts match up to dimension {min(max_n, 6)}",
        )
    )
    roundtrip_ok = True
    for n in range(min(max_n, 7) + 1):
        for w in dyck.nondegenerate_dyck(n):
            if motzkin.motzkin_to_dyck(motzkin.dyck_to_motzkin(w)) != w:
                roundtrip_ok = False
        for word in motzkin.enumerate_motzkin(n):
            if motzkin.dyck_to_motzkin(motzkin.motzkin_to_dyck(word)) != word:
                roundtrip_ok = False
    checks.append(
        (
            "motzkin-roundtrip",
            roundtrip_ok,
            f"bijection round-trips up to dimension {min(max_n, 7)}",
        )
    )
    return checks


def _suite_binomial(max_n: int) -> list[Check]:
    ok = all(motzkin.verify_binomial_identity(n) for n in range(max_n + 1))
    return [
        (
            f"binomial-identity-upto-{max_n}",
            ok,
            "Catalan numbers match the binomial Motzkin sums exactly",
        )
    ]


def cmd_verify(args: argparse.Namespace) -> int:
    checks: list[Check] = []
    suite = args.suite
    if suite in ("identities", "all"):
        checks.extend(_suite_identities(args.max_dim if args.max_dim else 8))
    if suite in ("coskeletal", "all"):
        r = args.r if args.r is not None else 2
        checks.extend(_suite_coskeletal(r, args.max_dim if args.max_dim else 6))
    if suite in ("nerve-iso", "all"):
        checks.extend(_suite_nerve_iso(min(args.max_dim, 4) if args.max_dim else 4))
    if suite in ("motzkin", "all"):
        checks.extend(_suite_motzkin(args.max_n if args.max_n else 7))
    if suite in ("binomial", "all"):
        checks.extend(_suite_binomial(args.max_n if args.max_n else 12))
    passed = all(ok for _, ok, _ in checks)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "suite": suite,
        "checks": [
            {"name": name, "passed": ok, "detail": detail} for name, ok, detail in checks
        ],
        "passed": passed,
    }
    lines = [
        f"{'ok  ' if ok else 'FAIL'} {name}: {detail}" for name, ok, detail in checks
    ]
    lines.append(f"suite {suite}: {'pass' if passed else 'FAIL'}")
    _emit(args, doc, lines)
    return 0 if passed else 1


# -- classification -----------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> int:
    with open(args.file, "r", encoding="utf-8") as handle:
        text = handle.read()
    m = FinMonoidalStructure.from_json_text(text)
    problems = validate_category(m.category) + validate_strict_monoidal(m)
    if problems:
        raise CatssetError(
            f"structure violates the laws: {problems[0]} ({len(problems)} total)"
        )
    records = classify_maps(m)
    verdict = verify_classification(m)
    triples = sorted(r.triple() for r in records)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "classify",
        "file": args.file,
        "records": [
            {"carrier": a, "mu": mu, "eta_prime": etap} for a, mu, etap in triples
        ],
        "count": len(triples),
        "three_way_agreement": verdict,
    }
    lines = [
        f"carrier={a} mu={mu} eta_prime={etap}" for a, mu, etap in triples
    ]
    lines.append(f"count: {len(triples)}")
    lines.append(f"three-way agreement: {str(verdict).lower()}")
    _emit(args, doc, lines)
    return 0 if verdict else 1


# -- skew checking -------------------------------------------------------------


_CARRIERS: dict[str, Callable] = {
    "chain2": lambda: chain_poset(["0", "1"]),
    "chain3": chain3_poset,
    "zmonoid": zmonoid_category,
}


def cmd_skew(args: argparse.Namespace) -> int:
    config = _load_config(args.config)
    if args.mode == "check":
        if not args.file:
            raise ValueError("skew check needs a data file")
        with open(args.file, "r", encoding="utf-8") as handle:
            d = SkewData.from_json_dict(json.load(handle))
        naturality = check_naturality(d)
        axioms = check_axioms(d)
        pentagons = check_pentagons(d)
        equivalent = verify_equivalence(d)
        ok = not naturality and axioms.all_hold and pentagons.all_hold
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "skew-check",
            "file": args.file,
            "naturality_violations": [str(v) for v in naturality],
            "axioms": [
                {"name": r.name, "passed": r.holds, "witness": list(r.witness) if r.witness else None}
                for r in axioms.results
            ],
            "pentagons": [
                {"name": r.name, "passed": r.holds, "witness": list(r.witness) if r.witness else None}
                for r in pentagons.results
            ],
            "equivalence_consistent": equivalent,
            "passed": ok,
        }
        lines = [f"naturality: {'pass' if not naturality else 'FAIL'}"]
        lines.extend(str(v) for v in naturality)
        lines.extend(str(r) for r in axioms.results)
        lines.extend(str(r) for r in pentagons.results)
        lines.append(f"pentagon/axiom equivalence consistent: {str(equivalent).lower()}")
        _emit(args, doc, lines)
        return 0 if ok else 1
    # sweep
    if args.carrier not in _CARRIERS:
        if args.carrier and args.carrier.startswith("chain"):
            size = args.carrier.removeprefix("chain")
            if size.isdigit():
                carrier = chain_poset([str(k) for k in range(int(size))])
                summary = sweep_equivalence(carrier, config["budget"])
                return _emit_sweep(args, summary)
        raise ValueError(
            f"unknown carrier {args.carrier!r}; choose from {sorted(_CARRIERS)} or chainN"
        )
    summary = sweep_equivalence(_CARRIERS[args.carrier](), config["budget"])
    return _emit_sweep(args, summary)


def _emit_sweep(args: argparse.Namespace, summary) -> int:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "skew-sweep",
        "carrier": args.carrier,
        "candidates": summary.candidates,
        "natural_candidates": summary.natural_candidates,
        "equivalence_holds": summary.equivalence_holds,
        "a5_forces_identity_kappa": summary.a5_forces_identity_kappa,
        "a8_a9_pass_with_identity_kappa": summary.a8_a9_pass_with_identity_kappa,
        "skew_structure_count": summary.skew_structure_count,
    }
    lines = [
        f"candidates: {summary.candidates}",
        f"natural candidates: {summary.natural_candidates}",
        f"equivalence holds for all: {str(summary.equivalence_holds).lower()}",
        f"A5 forces identity kappa: {str(summary.a5_forces_identity_kappa).lower()}",
        f"A8/A9 pass with identity kappa: {str(summary.a8_a9_pass_with_identity_kappa).lower()}",
        f"skew structures (identity kappa): {summary.skew_structure_count}",
    ]
    _emit(args, doc, lines)
    ok = (
        summary.equivalence_holds
        and summary.a5_forces_identity_kappa
        and summary.a8_a9_pass_with_identity_kappa
    )
    return 0 if ok else 1


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--config", help="JSON file overriding caps and budgets")

    parser = argparse.ArgumentParser(
        prog="catsset",
        description="Catalan simplicial set toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list simplices of a dimension")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--nondegenerate", action="store_true")
    p.add_argument(
        "--as", dest="form", choices=("dyck", "relation", "motzkin"), default="dyck"
    )
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("face", parents=[common], help="apply a face map to a word")
    p.add_argument("word")
    p.add_argument("--index", type=int, required=True)
    p.set_defaults(func=cmd_face)

    p = sub.add_parser("degeneracy", parents=[common], help="apply a degeneracy map")
    p.add_argument("word")
    p.add_argument("--index", type=int, required=True)
    p.set_defaults(func=cmd_degeneracy)

    p = sub.add_parser("decompose", parents=[common], help="factor out all degeneracies")
    p.add_argument("word")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("motzkin", parents=[common], help="convert between word forms")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--from-dyck", metavar="WORD")
    group.add_argument("--to-dyck", metavar="WORD")
    p.set_defaults(func=cmd_motzkin)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument(
        "--suite",
        choices=("identities", "coskeletal", "nerve-iso", "motzkin", "binomial", "all"),
        required=True,
    )
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", parents=[common], help="classify maps into a nerve")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("skew", parents=[common], help="check skew data or sweep a carrier")
    p.add_argument("mode", choices=("check", "sweep"))
    p.add_argument("file", nargs="?")
    p.add_argument("--carrier", default=None)
    p.set_defaults(func=cmd_skew)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (CatssetError, ValueError, IndexError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
