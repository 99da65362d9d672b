"""Command-line front end.

Loads a real form (preset name or involution document), runs one
computation, and prints either a human-readable table or a structured
JSON report.  All scalars are serialized as exact strings; identical
jobs produce byte-identical structured output.

Exit codes: 0 success, 2 malformed input, 3 resource limit exceeded,
4 an exact identity failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .branching import branch_kostant, branch_oracle, build_k_structure
from .chevalley import build_lie_algebra
from .checks import run_verify
from .errors import (CartanSearchFailure, IdentityViolation,
                     InconsistentSigns, InvalidLabel, NormalizationFailure,
                     NotDominant, NotFiniteType, NotIntegral, NotInvolution,
                     NotMaximallySplit, ParseError, ResourceLimit,
                     StructureViolation)
from .hwmodule import build_irrep, dim_cap
from .mstruct import (FiberLabel, fiber_enumerate, fiber_label, is_spherical,
                      m_structure, minimal_fiber_element)
from .psembed import ps_params
from .realform import (ThetaSpec, build_real_form, preset_names,
                       preset_theta_spec)
from .rootsys import build_root_system, named_cartan_matrix
SCHEMA_VERSION = 1

_PARSE_ERRORS = (ParseError, NotIntegral, NotDominant, InvalidLabel,
                 NotFiniteType)
_IDENTITY_ERRORS = (IdentityViolation, StructureViolation, NotInvolution,
                    InconsistentSigns, NormalizationFailure,
                    NotMaximallySplit, CartanSearchFailure)


class JobSpec:
    """One CLI invocation, normalized."""

    def __init__(self, command, realform, weight=None, bound=None,
                 zeta=None, nu=None, output=None, fmt="table",
                 algebra=None):
        self.command = command
        self.realform = realform
        self.weight = weight
        self.bound = bound
        self.zeta = zeta
        self.nu = nu
        self.output = output
        self.fmt = fmt
        self.algebra = algebra

    def as_dict(self):
        doc = {"command": self.command, "realform": self.realform,
               "format": self.fmt}
        if self.algebra is not None:
            doc["algebra"] = self.algebra
        if self.weight is not None:
            doc["weight"] = list(self.weight)
        if self.bound is not None:
            doc["bound"] = self.bound
        if self.zeta is not None:
            doc["zeta"] = list(self.zeta)
        if self.nu is not None:
            doc["nu"] = [str(x) for x in self.nu]
        return doc


def _load_realform(job: JobSpec):
    name = job.realform
    if name is None:
        raise ParseError("a real form is required (--realform)")
    lowered = str(name).strip().lower()
    if lowered in preset_names():
        spec = preset_theta_spec(lowered)
    elif os.path.exists(name):
        spec = ThetaSpec.from_file(name)
    else:
        raise ParseError(
            "unknown real form %r: not a preset (%s) and not a file"
            % (name, ", ".join(preset_names())))
    if job.algebra is not None:
        cm = named_cartan_matrix(job.algebra)
        if cm != spec.cm:
            raise ParseError(
                "algebra %r does not match the real form's Cartan matrix"
                % job.algebra)
    g = build_lie_algebra(build_root_system(spec.cm))
    return g, build_real_form(g, spec)


def _require_weight(job, rf):
    if job.weight is None:
        raise ParseError("this command needs --weight")
    if len(job.weight) != rf.rank:
        raise ParseError("weight must have %d coefficients" % rf.rank)
    if any(x < 0 for x in job.weight):
        raise NotDominant("weight %s is not dominant" % (job.weight,))
    return tuple(job.weight)


def _label_from_job(job, rf):
    if job.zeta is None and job.nu is None:
        if job.weight is not None:
            return fiber_label(_require_weight(job, rf), rf)
        raise ParseError("give either --weight or --zeta/--nu")
    zeta = job.zeta if job.zeta is not None else []
    nu = job.nu if job.nu is not None else []
    return FiberLabel(rf, zeta, nu)


def _fmt_label(label):
    return [str(x) for x in label]


def _report_doc(report):
    return {
        "method": report.method,
        "checksum": report.checksum,
        "types": [{"label": _fmt_label(lbl), "dim": dim, "multiplicity": m}
                  for lbl, dim, m in report.entries],
    }


# -- command implementations --------------------------------------------------

def _cmd_branch(job, g, rf):
    lam = _require_weight(job, rf)
    module = build_irrep(g, lam)
    kostant = branch_kostant(module, rf)
    oracle = branch_oracle(module, rf)
    agree = kostant == oracle
    if not agree:
        raise IdentityViolation(
            "the two branching computations disagree at %s" % (lam,))
    doc = {
        "weight": list(lam),
        "dim": module.dim,
        "kostant": _report_doc(kostant),
        "oracle": _report_doc(oracle),
        "methods_agree": agree,
    }
    lines = ["branching of weight %s (dim %d)" % (list(lam), module.dim),
             "%-24s %6s %6s" % ("k-type label", "dim", "mult")]
    for lbl, dim, mult in kostant.entries:
        lines.append("%-24s %6d %6d" % (",".join(_fmt_label(lbl)), dim, mult))
    lines.append("checksum %d, methods agree: %s"
                 % (kostant.checksum, agree))
    checks = [{"name": "branching-equality", "passed": agree, "detail": ""}]
    return doc, lines, checks


def _cmd_verify(job, g, rf):
    kwargs = {}
    if job.weight is not None:
        kwargs["weight"] = _require_weight(job, rf)
    if job.bound is not None:
        kwargs["bound"] = job.bound
    results = run_verify(rf, **kwargs)
    doc = {"checks": [r.as_dict() for r in results],
           "passed": all(r.passed for r in results)}
    lines = [repr(r) for r in results]
    lines.append("verify: %d checks, %d failures"
                 % (len(results), sum(1 for r in results if not r.passed)))
    return doc, lines, [r.as_dict() for r in results]


def _cmd_spherical(job, g, rf):
    lam = _require_weight(job, rf)
    value = is_spherical(lam, rf)
    doc = {"weight": list(lam), "spherical": value}
    return doc, ["spherical(%s) = %s" % (list(lam), str(value).lower())], []


def _cmd_fiber(job, g, rf):
    label = _label_from_job(job, rf)
    bound = job.bound if job.bound is not None else 5
    members = fiber_enumerate(label, bound, rf)
    doc = {"zeta": list(label.zeta), "nu": [str(x) for x in label.nu],
           "bound": bound, "members": [list(m) for m in members]}
    lines = ["fiber of (zeta=%s, nu=%s) up to coefficient sum %d:"
             % (list(label.zeta), [str(x) for x in label.nu], bound)]
    lines.extend("  %s" % (list(m),) for m in members)
    return doc, lines, []


def _cmd_minimal(job, g, rf):
    label = _label_from_job(job, rf)
    lam = minimal_fiber_element(label, rf)
    doc = {"zeta": list(label.zeta), "nu": [str(x) for x in label.nu],
           "weight": list(lam)}
    return doc, ["minimal fiber element: %s" % (list(lam),)], []


def _cmd_mstructure(job, g, rf):
    ms = m_structure(rf)
    doc = {
        "two_rank": ms.two_rank,
        "center_dim": ms.center_dim,
        "split_rank": ms.split_rank,
        "parity_generators": ms.parity_generators,
        "description": ms.describe(),
    }
    if job.weight is not None:
        lam = _require_weight(job, rf)
        doc["parity_of_weight"] = list(ms.parity_of(lam))
    return doc, [ms.describe()], []


def _cmd_ps_params(job, g, rf):
    lam = _require_weight(job, rf)
    params = ps_params(lam, rf)
    doc = {
        "weight": list(lam),
        "dual_weight": list(params.dual),
        "zeta": list(params.delta.zeta),
        "nu": [str(x) for x in params.delta.nu],
        "xi": [str(x) for x in params.xi],
    }
    lines = ["principal series parameters of %s:" % (list(lam),),
             "  dual weight: %s" % (list(params.dual),),
             "  character: %s" % (list(params.delta.zeta),),
             "  restriction: %s" % ([str(x) for x in params.delta.nu],),
             "  split parameter: %s" % ([str(x) for x in params.xi],)]
    return doc, lines, []


def _cmd_classify(job, g, rf):
    ks = build_k_structure(rf)
    doc = dict(rf.summary())
    doc.update({
        "restricted_positive": [[str(x) for x in r]
                                for r in rf.restricted_positive],
        "simple_restricted": [[str(x) for x in r]
                              for r in rf.simple_restricted],
        "k_cartan_generators": [
            {"kind": tag, "data": (list(data) if tag == "z" else data)}
            for tag, data, _ in ks.gens],
        "k_root_count": len(ks.k_roots),
        "k_center_dim": ks.center_dim,
        "k_derived_rank": ks.kk_rank,
    })
    lines = ["%s: rank %d, split rank %d" % (doc["name"], doc["rank"],
                                             doc["split_rank"])]
    for key in ("compact_simple", "restricted_simple", "real_simple",
                "nilpotent_simple", "paired"):
        lines.append("  %s: %s" % (key, doc[key]))
    lines.append("  dim g / k / m: %d / %d / %d"
                 % (doc["dim_g"], doc["dim_k"], doc["dim_m"]))
    lines.append("  restricted roots: %d (%d positive simple)"
                 % (doc["restricted_root_count"],
                    len(rf.simple_restricted)))
    return doc, lines, []


_COMMANDS = {
    "branch": _cmd_branch,
    "verify": _cmd_verify,
    "spherical": _cmd_spherical,
    "fiber": _cmd_fiber,
    "minimal": _cmd_minimal,
    "mstructure": _cmd_mstructure,
    "ps-params": _cmd_ps_params,
    "classify": _cmd_classify,
}


def run(job: JobSpec):
    """Execute a job; returns (exit_code, structured_doc, text_lines)."""
    doc = {"schema_version": SCHEMA_VERSION, "job": job.as_dict()}
    try:
        g, rf = _load_realform(job)
        doc["realform_summary"] = rf.summary()
        results, lines, checks = _COMMANDS[job.command](job, g, rf)
        doc["results"] = results
        doc["identity_checks"] = checks
        code = 0 if all(c.get("passed", True) for c in checks) else 4
        return code, doc, lines
    except _PARSE_ERRORS as exc:
        doc["error"] = {"kind": type(exc).__name__, "message": str(exc)}
        return 2, doc, ["error: %s" % exc]
    except ResourceLimit as exc:
        doc["error"] = {"kind": "ResourceLimit", "message": str(exc)}
        return 3, doc, ["error: %s (cap %d; override with BRANCHLAB_DIM_CAP)"
                        % (exc, dim_cap())]
    except _IDENTITY_ERRORS as exc:
        doc["error"] = {"kind": type(exc).__name__, "message": str(exc)}
        return 4, doc, ["error: %s" % exc]


def _parse_int_list(text, what):
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ParseError("cannot parse %s list %r" % (what, text))


def _parse_sign_list(text):
    text = text.strip()
    if not text:
        return []
    out = []
    for part in text.split(","):
        part = part.strip()
        if part in ("1", "+1", "+"):
            out.append(1)
        elif part in ("-1", "-"):
            out.append(-1)
        else:
            raise ParseError("character entries must be 1 or -1, got %r"
                             % part)
    return out


def build_parser():
    parser = argparse.ArgumentParser(
        prog="branchlab",
        description="Exact branching laws for symmetric subalgebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in [
            ("branch", "k-type multiplicities, both methods"),
            ("verify", "run the full identity suite"),
            ("spherical", "does the trivial k-type occur"),
            ("fiber", "enumerate a fiber of the label map"),
            ("minimal", "minimal weight with a given label"),
            ("mstructure", "component structure of the centralizer"),
            ("ps-params", "principal series parameters"),
            ("classify", "real form classification data")]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--realform", required=True,
                       help="preset name (%s) or involution document path"
                       % ", ".join(preset_names()))
        p.add_argument("--algebra", default=None,
                       help="optional Cartan matrix name for validation")
        p.add_argument("--weight", default=None,
                       help="comma-separated coefficients")
        p.add_argument("--bound", type=int, default=None)
        p.add_argument("--zeta", default=None,
                       help="comma-separated signs for the 2-group character")
        p.add_argument("--nu", default=None,
                       help="comma-separated values on the h_m basis")
        p.add_argument("--output", default=None, help="write to file")
        p.add_argument("--format", dest="fmt", default="table",
                       choices=["table", "structured"])
    return parser


def job_from_args(args) -> JobSpec:
    weight = None
    if args.weight is not None:
        weight = _parse_int_list(args.weight, "weight")
    zeta = None if args.zeta is None else _parse_sign_list(args.zeta)
    nu = None if args.nu is None else _parse_int_list(args.nu, "nu")
    return JobSpec(command=args.command, realform=args.realform,
                   weight=weight, bound=args.bound, zeta=zeta, nu=nu,
                   output=args.output, fmt=args.fmt, algebra=args.algebra)


def render(doc, lines, fmt):
    if fmt == "structured":
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    return "\n".join(lines) + "\n"


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        job = job_from_args(args)
    except ParseError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    code, doc, lines = run(job)
    text = render(doc, lines, job.fmt)
    if job.output:
        with open(job.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
