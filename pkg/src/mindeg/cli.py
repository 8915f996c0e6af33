"""Command-line interface: one subcommand per capability, deterministic JSON out.

Exit codes: 0 success, 2 usage/parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from .degeneration import (
    MinimalDegeneration,
    classify_pair,
    enumerate_minimal_degenerations_below,
)
from .roots import DomainError, RootDatum, SpecParseError, Weight, build_root_datum, parse_weight, type_tables
from .singularity import (
    Invariants,
    codimension,
    decomposition_profile,
    equivalence_obstruction,
    ic_polynomial,
    invariants,
    minimal_orbit_torsion_primes,
    nonsmoothness_certificate,
    standard_singularity,
    conjecture_audit,
)
from .smith import bareiss_determinant, is_prime
from .weyl_module import (
    ac_basis_monomials,
    ac_weights,
    decomposition_number_ac,
    elementary_divisors,
    gram_matrix,
    linkage_bound,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 2, 3

COMMANDS = ("classify", "degenerations", "profile", "ic", "certify-nonsmooth",
            "distinguish", "gram", "decomp-ac", "linkage", "torsion-audit")


class UsageError(Exception):
    pass


@dataclass
class CommandRequest:
    command: str
    datum_spec: str | None = None
    weights: dict[str, str] = field(default_factory=dict)
    options: dict[str, Any] = field(default_factory=dict)
    datum: RootDatum | None = None
    parsed: dict[str, Weight] = field(default_factory=dict)

    def echo(self) -> dict:
        out: dict[str, Any] = {}
        if self.datum_spec is not None:
            out["type"] = self.datum_spec
        out.update(self.weights)
        out.update({k: v for k, v in self.options.items() if v is not None and k != "format"})
        return out


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits with 2 already; keep it structured
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mindeg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, *, typ=False, lam=False, mu=False, helptext=""):
        sp = sub.add_parser(name, help=helptext)
        if typ:
            sp.add_argument("--type", dest="type", required=True, help="e.g. B5 or A2xA1")
        if lam:
            sp.add_argument("--lambda", dest="lam", required=True, help="e.g. 1,0,0,0,1")
        if mu:
            sp.add_argument("--mu", dest="mu", required=True)
        sp.add_argument("--format", choices=("json", "table"), default="json")
        return sp

    add("classify", typ=True, lam=True, mu=True, helptext="Stembridge case of a pair")
    add("degenerations", typ=True, lam=True, helptext="all mu with lam ~> mu")
    sp = add("profile", typ=True, lam=True, mu=True, helptext="decomposition-number profile")
    sp.add_argument("--max-prime", dest="max_prime", type=int, default=100)
    add("ic", typ=True, lam=True, mu=True, helptext="codimension and IC stalk polynomial")
    add("certify-nonsmooth", typ=True, lam=True, mu=True, helptext="non-smoothness witness")
    sp = add("distinguish", helptext="obstruction to equivalence of two named singularities")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp = add("gram", helptext="contravariant Gram matrix and elementary divisors")
    sp.add_argument("--n", type=int)
    sp.add_argument("--type", dest="type")
    sp.add_argument("--lambda", dest="lam")
    sp.add_argument("--monomials", help="semicolon-separated, 1-based, e.g. '1,2;2,1'")
    sp = add("decomp-ac", helptext="d(varpi_1+varpi_n, varpi_n) for B_n mod ell")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    add("linkage", typ=True, lam=True, mu=True, helptext="strong-linkage divisibility bound")
    add("torsion-audit", typ=True, helptext="torsion primes vs bad primes")
    return p


def parse_request(argv: Sequence[str]) -> CommandRequest:
    """Validate ``argv``; raises :class:`UsageError` (exit 2)."""
    argv = list(argv)
    # let weight literals start with a minus sign: "--mu -1,2" -> "--mu=-1,2"
    for k in range(len(argv) - 1, 0, -1):
        if argv[k - 1] in ("--lambda", "--mu") and argv[k].startswith("-"):
            argv[k - 1:k + 1] = [f"{argv[k - 1]}={argv[k]}"]
    ns = _build_parser().parse_args(argv)
    req = CommandRequest(command=ns.command, options={"format": ns.format})
    spec = getattr(ns, "type", None)
    if spec is not None:
        req.datum_spec = spec
        try:
            req.datum = build_root_datum(spec)
        except SpecParseError as exc:
            raise UsageError(str(exc)) from exc
    for key, flag in (("lam", "lambda"), ("mu", "mu")):
        lit = getattr(ns, key, None)
        if lit is None:
            continue
        if req.datum is None:
            raise UsageError(f"--{flag} needs --type")
        req.weights[flag] = lit
        try:
            req.parsed[flag] = parse_weight(lit, req.datum)
        except SpecParseError as exc:
            raise UsageError(str(exc)) from exc
    for opt in ("ell", "n", "left", "right", "max_prime", "monomials"):
        if hasattr(ns, opt):
            req.options[opt] = getattr(ns, opt)
    ell = req.options.get("ell")
    if ell is not None and not is_prime(ell):
        raise UsageError(f"--ell {ell} is not prime")
    if req.options.get("max_prime") is not None and req.options["max_prime"] < 2:
        raise UsageError("--max-prime must be >= 2")
    if req.command == "gram" and req.options.get("n") is None and (
            req.datum is None or "lambda" not in req.parsed or not req.options.get("monomials")):
        raise UsageError("gram needs --n, or --type, --lambda and --monomials")
    return req


# ---------------------------------------------------------------------------

def _degeneration_json(d: MinimalDegeneration) -> dict:
    return {
        "lambda": list(d.lam.coeffs),
        "mu": list(d.mu.coeffs),
        "beta": list(d.beta.coeffs),
        "support": [i + 1 for i in d.support],
        "case": d.case_label,
        "levi_type": d.levi_type,
    }


def _require_pair(req: CommandRequest) -> MinimalDegeneration:
    lam, mu = req.parsed["lambda"], req.parsed["mu"]
    d = classify_pair(lam, mu)
    if d is None:
        raise DomainError(f"({lam}, {mu}) is not a minimal degeneration")
    return d


def _invariants_json(inv: Invariants) -> dict:
    return {
        "singularity": inv.singularity.to_json(),
        "ic_coefficients": list(inv.ic.coeffs),
        "modulus_data": list(inv.profile.moduli),
        "nonzero_primes": inv.profile.support_primes(),
    }


def _run_classify(req):
    d = classify_pair(req.parsed["lambda"], req.parsed["mu"])
    if d is None:
        return {"adjacent": False, "degeneration": None, "singularity": None}
    return {"adjacent": True, "degeneration": _degeneration_json(d),
            "singularity": invariants(d).singularity.to_json()}


def _run_degenerations(req):
    items = []
    for d in enumerate_minimal_degenerations_below(req.parsed["lambda"]):
        entry = _degeneration_json(d)
        entry["singularity"] = invariants(d).singularity.name
        items.append(entry)
    return {"count": len(items), "degenerations": items}


def _run_profile(req):
    d = _require_pair(req)
    prof = decomposition_profile(d)
    upto = req.options["max_prime"]
    return {"case": d.case_label, "modulus_data": list(prof.moduli),
            "nonzero_primes_upto": upto, "nonzero_primes": prof.nonzero_primes(upto)}


def _run_ic(req):
    d = _require_pair(req)
    ic = ic_polynomial(d)
    return {"case": d.case_label, "codimension": codimension(d),
            "coefficients": list(ic.coeffs), "polynomial": str(ic)}


def _run_certify(req):
    d = _require_pair(req)
    out = {"case": d.case_label}
    out.update(nonsmoothness_certificate(d).to_json())
    return out


def _run_distinguish(req):
    left = standard_singularity(req.options["left"])
    right = standard_singularity(req.options["right"])
    obs = equivalence_obstruction(left, right)
    out = {"left": _invariants_json(left), "right": _invariants_json(right)}
    if obs is None:
        out.update(obstruction_kind="none", differing_primes=[])
    else:
        out.update(obstruction_kind=obs.kind, differing_primes=list(obs.differing_primes))
        if obs.prime is not None:
            out["prime"] = obs.prime
    return out


def _run_gram(req):
    n = req.options.get("n")
    if n is not None:
        lam, _ = ac_weights(n)
        monos = ac_basis_monomials(n)
    else:
        lam = req.parsed["lambda"]
        try:
            monos = [tuple(int(x) - 1 for x in chunk.split(",") if x.strip())
                     for chunk in req.options["monomials"].split(";")]
        except ValueError as exc:
            raise DomainError(f"bad monomial list {req.options['monomials']!r}") from exc
    g = gram_matrix(lam, monos)
    return {
        "type": str(lam.datum),
        "lambda": list(lam.coeffs),
        "mu": list(g.mu.coeffs),
        "monomials": [[i + 1 for i in m] for m in g.monomials],
        "matrix": [list(r) for r in g.entries],
        "determinant": bareiss_determinant(g.entries),
        "elementary_divisors": list(elementary_divisors(g).divisors),
    }


def _run_decomp_ac(req):
    n, ell = req.options["n"], req.options["ell"]
    return {"n": n, "ell": ell, "decomposition_number": decomposition_number_ac(n, ell),
            "predicted_by_divisibility": int((2 * n + 1) % ell == 0)}


def _run_linkage(req):
    lam, mu = req.parsed["lambda"], req.parsed["mu"]
    bound = linkage_bound(lam, mu)
    return {"bound": bound, "beta": list((lam - mu).to_root().coeffs)}


def _run_torsion(req):
    datum = req.datum
    if len(datum.components) != 1:
        raise DomainError("torsion-audit needs an irreducible type")
    label = str(datum)
    return {"torsion": sorted(minimal_orbit_torsion_primes(label)),
            "bad": sorted(type_tables(label).bad_primes),
            "conjecture_consistent": conjecture_audit(label)}


_RUNNERS = {
    "classify": _run_classify,
    "degenerations": _run_degenerations,
    "profile": _run_profile,
    "ic": _run_ic,
    "certify-nonsmooth": _run_certify,
    "distinguish": _run_distinguish,
    "gram": _run_gram,
    "decomp-ac": _run_decomp_ac,
    "linkage": _run_linkage,
    "torsion-audit": _run_torsion,
}


def run(req: CommandRequest) -> dict:
    """Execute a validated request; domain errors propagate as :class:`DomainError`."""
    return {"command": req.command, "input": req.echo(), "result": _RUNNERS[req.command](req)}


def output_schema() -> dict:
    """JSON schema every document written to stdout conforms to."""
    from importlib.resources import files

    return json.loads(files(__package__).joinpath("schema.json").read_text())


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _table(doc: dict) -> str:
    lines = [f"command: {doc['command']}"]
    for k, v in sorted(doc["input"].items()):
        lines.append(f"  input.{k}: {v}")
    for k, v in sorted(doc["result"].items()):
        lines.append(f"{k}: {json.dumps(v, sort_keys=True)}")
    return "\n".join(lines) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        req = parse_request(argv)
    except UsageError as exc:
        sys.stderr.write(dumps({"error": str(exc), "exit_code": EXIT_USAGE}))
        return EXIT_USAGE
    try:
        doc = run(req)
    except DomainError as exc:
        sys.stdout.write(dumps({"command": req.command, "input": req.echo(), "error": str(exc)}))
        return EXIT_DOMAIN
    out = _table(doc) if req.options.get("format") == "table" else dumps(doc)
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
