"""Command-line frontend.

Exit codes: 0 success, 1 bad input or failed precondition, 2 an internal
invariant check failed.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import jsonio
from .core import PlaneSeqError, format_rational
from .fuzz import FuzzConfig, RetryBudgetExceeded, run_fuzz
from .gram import build_gram, det_from_crossings, det_product, leading_minors
from .inertia import inertia_congruence
from .orbifold import orbifold_report
from .tridiag import NotNormalized, classify, inverse_closed_form, realize, reconstruct, type_label
from .winding import verify_main_theorem, winding_report

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2


class InvariantViolation(Exception):
    def __init__(self, payload: dict):
        super().__init__(payload)
        self.payload = payload


def _load(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _winding_payload(v) -> dict:
    r = winding_report(v)
    return {"R": r.rotation, "S": r.s_value, "det_signs": list(r.det_signs),
            "predicted_signature": r.predicted_signature}


def cmd_gram(args):
    return jsonio.matrix_to_json(build_gram(jsonio.sequence_from_json(_load(args.input))))


def cmd_det(args):
    v = jsonio.sequence_from_json(_load(args.input))
    d = det_product(v)
    minors = leading_minors(build_gram(v))
    out = {"det": format_rational(d), "leading_minors": [format_rational(x) for x in minors]}
    if det_from_crossings(v) != d or minors[-1] != d:
        raise InvariantViolation({"error": "determinant formulas disagree", **out})
    return out


def cmd_inertia(args):
    i = inertia_congruence(jsonio.matrix_from_json(_load(args.input)))
    return {"positive": i.positive, "negative": i.negative, "zero": i.zero, "signature": i.signature()}


def cmd_winding(args):
    return _winding_payload(jsonio.sequence_from_json(_load(args.input)))


def cmd_verify(args):
    v = jsonio.sequence_from_json(_load(args.input))
    report, sig, ok = verify_main_theorem(v)
    out = {"signature": sig, "R": report.rotation, "S": report.s_value,
           "det_signs": list(report.det_signs), "predicted_signature": report.predicted_signature,
           "ok": ok}
    if not ok:
        raise InvariantViolation(out)
    return out


def cmd_invert(args):
    return jsonio.tridiag_to_json(inverse_closed_form(jsonio.sequence_from_json(_load(args.input))))


def cmd_reconstruct(args):
    return jsonio.sequence_to_json(reconstruct(jsonio.tridiag_from_json(_load(args.input))))


def cmd_classify(args):
    v = jsonio.sequence_from_json(_load(args.input))
    out = jsonio.label_to_json(classify(v))
    try:
        out["type"] = str(type_label(v))
    except NotNormalized:
        out["type"] = None
    return out


def cmd_realize(args):
    label = jsonio.label_from_json(_load(args.input))
    v = realize(label)
    if classify(v) != label:
        raise InvariantViolation({"error": "realized sequence has the wrong label",
                                  "sequence": jsonio.sequence_to_json(v)})
    return jsonio.sequence_to_json(v)


def cmd_orbifold(args):
    rep = orbifold_report(jsonio.sequence_from_json(_load(args.input)))
    out = {"smooth": rep.smooth, "local_orders": list(rep.local_orders), "euler": rep.euler,
           "intersection": jsonio.matrix_to_json(rep.intersection),
           "gram_check": rep.gram_check, "lemma54": rep.lemma54, "pullback": rep.pullback}
    if not (rep.gram_check and rep.lemma54 and rep.pullback):
        raise InvariantViolation(out)
    return out


def cmd_fuzz(args):
    try:
        cfg = FuzzConfig(args.seed, args.count, args.n_max, args.entry_bound, args.integer_only)
    except ValueError as e:
        raise PlaneSeqError(str(e)) from e
    out = run_fuzz(cfg)
    if out["failures"]:
        raise InvariantViolation(out)
    return out


COMMANDS = {
    "gram": (cmd_gram, "matrix A of a sequence"),
    "det": (cmd_det, "determinant and leading minors of A"),
    "inertia": (cmd_inertia, "exact inertia of a symmetric matrix"),
    "winding": (cmd_winding, "rotation number R and sign sum S"),
    "verify": (cmd_verify, "check Sign(A) = 4R - S"),
    "invert": (cmd_invert, "closed-form tridiagonal inverse of A"),
    "reconstruct": (cmd_reconstruct, "sequence (a_1 = 1) whose A inverts a tridiagonal matrix"),
    "classify": (cmd_classify, "component label of a sequence"),
    "realize": (cmd_realize, "a sequence with a given component label"),
    "orbifold": (cmd_orbifold, "quasitoric orbifold invariants of an integer sequence"),
    "fuzz": (cmd_fuzz, "run the invariant suite on random sequences"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="planeseq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_)
        if name != "fuzz":
            p.add_argument("--in", dest="input", required=True, help="input JSON file, or - for stdin")
        else:
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--count", type=int, default=1000)
            p.add_argument("--n-max", type=int, default=6)
            p.add_argument("--entry-bound", type=int, default=9)
            p.add_argument("--integer-only", action="store_true")
        p.add_argument("--out", default="-", help="output file (default stdout)")
        p.add_argument("--pretty", action="store_true", help="indent the JSON output")
    return parser


def _emit(doc: dict, args) -> None:
    text = json.dumps(doc, indent=2 if getattr(args, "pretty", False) else None)
    if getattr(args, "out", "-") == "-":
        print(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        doc = func(args)
    except InvariantViolation as e:
        _emit(e.payload, args)
        return EXIT_INVARIANT
    except (PlaneSeqError, OSError, json.JSONDecodeError, RetryBudgetExceeded) as e:
        _emit({"error": type(e).__name__, "detail": str(e)}, args)
        return EXIT_INPUT
    _emit(doc, args)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
