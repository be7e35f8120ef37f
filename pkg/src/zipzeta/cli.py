"""Command-line interface.

Commands read a JSON config and write a single JSON document to stdout
(schema field 1), deterministically serialized, so runs are
byte-for-byte reproducible.  --pretty switches to an aligned text view
of the same data.

Exit codes: 0 on success, 2 on any parse or validation failure, 3 when
the census oracle disagrees with the predicted count.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .btgl import BTParams, bt_strata, bt_zeta
from .errors import MismatchDetected, ParseError, ZipzetaError
from .fforacle import crosscheck
from .zetafn import QLaurent, expand_series, zeta_from_strata
from .zipstrata import ZipDatum, classify, compute_twist, point_count

ZIP_KEYS = {"schema", "cartan", "I", "omega", "phi0", "q0", "e", "theta"}
BT_KEYS = {"schema", "h", "d", "p", "n"}


def _load_json(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read config {path!r}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: not valid JSON: {exc}") from None


def _expect(cond, path, message):
    if not cond:
        raise ParseError(f"{path}: {message}")


def _int_list(value, path):
    _expect(isinstance(value, list), path, "expected a list of integers")
    for x in value:
        _expect(isinstance(x, int) and not isinstance(x, bool), path,
                "expected a list of integers")
    return value


def parse_config(path):
    """Load a config file into a ZipDatum or BTParams."""
    doc = _load_json(path)
    _expect(isinstance(doc, dict), "config", "expected a JSON object")
    if "schema" in doc:
        _expect(doc["schema"] == 1, "config.schema", "unsupported schema")
    if "h" in doc or "d" in doc or "p" in doc:
        unknown = set(doc) - BT_KEYS
        _expect(not unknown, "config", f"unknown keys {sorted(unknown)}")
        for key in ("h", "d", "p"):
            _expect(key in doc, f"config.{key}", "missing")
        try:
            return BTParams(doc["h"], doc["d"], doc["p"], doc.get("n", 1))
        except (TypeError, ValueError) as exc:
            raise ParseError(f"config: {exc}") from None
    unknown = set(doc) - ZIP_KEYS
    _expect(not unknown, "config", f"unknown keys {sorted(unknown)}")
    _expect("cartan" in doc, "config.cartan", "missing")
    _expect("I" in doc, "config.I", "missing")
    cartan = doc["cartan"]
    _expect(isinstance(cartan, list), "config.cartan",
            "expected a list of rows")
    for row in cartan:
        _int_list(row, "config.cartan")
    parabolic = _int_list(doc["I"], "config.I")

    omega = doc.get("omega")
    if omega is not None:
        _expect(isinstance(omega, dict), "config.omega", "expected an object")
        for key in ("elements", "table", "diagram_action"):
            _expect(key in omega, f"config.omega.{key}", "missing")
        _expect(isinstance(omega["elements"], list) and all(
            isinstance(x, str) for x in omega["elements"]),
            "config.omega.elements", "expected a list of labels")
        _expect(isinstance(omega["table"], list), "config.omega.table",
                "expected a list of rows")
        for row in omega["table"]:
            _int_list(row, "config.omega.table")
        action = omega["diagram_action"]
        _expect(isinstance(action, dict), "config.omega.diagram_action",
                "expected an object keyed by label")
        _expect(set(action) == set(omega["elements"]),
                "config.omega.diagram_action",
                "labels do not match the element list")
        for lab, val in action.items():
            _int_list(val, f"config.omega.diagram_action.{lab}")

    phi0 = doc.get("phi0")
    if phi0 is not None:
        _expect(isinstance(phi0, dict), "config.phi0", "expected an object")
        _expect(set(phi0) <= {"diagram_perm", "omega_perm"}, "config.phi0",
                "unknown keys")
        _expect("diagram_perm" in phi0, "config.phi0.diagram_perm", "missing")
        _int_list(phi0["diagram_perm"], "config.phi0.diagram_perm")
        if "omega_perm" in phi0:
            _expect(isinstance(phi0["omega_perm"], list) and all(
                isinstance(x, str) for x in phi0["omega_perm"]),
                "config.phi0.omega_perm", "expected a list of labels")

    theta = doc.get("theta")
    if theta is not None:
        _expect(isinstance(theta, list) and all(
            isinstance(x, str) for x in theta),
            "config.theta", "expected a list of labels")

    q0 = doc.get("q0", 2)
    e = doc.get("e", 1)
    try:
        return ZipDatum(cartan, parabolic, omega=omega, phi0=phi0,
                        q0=q0, e=e, theta=theta)
    except (TypeError, KeyError) as exc:
        raise ParseError(f"config: malformed value ({exc})") from None


def _word_json(tables, w):
    return list(tables.word(w))


def _coeff_json(c):
    if isinstance(c, QLaurent):
        return c.to_json()
    return str(c)


def _echo(datum):
    return {
        "cartan": [list(r) for r in datum.rs.cartan.entries],
        "parabolic_type": sorted(datum.parabolic_type),
        "q0": datum.q0,
        "e": datum.e,
        "theta": list(datum.theta_labels),
        "omega_elements": list(datum.omega.labels),
    }


def _strata_rows(datum, strata):
    tables = datum.tables
    omega = datum.omega
    return [{
        "rep_word": _word_json(tables, s.rep.w),
        "rep_omega": omega.label(s.rep.omega),
        "orbit_size": s.size,
        "length": s.length,
        "aut_dim": s.aut_dim,
        "degree": s.degree,
    } for s in strata]


def _require_zip(parsed):
    if not isinstance(parsed, ZipDatum):
        raise ParseError("config: this command needs a stratification "
                         "config, not height/dimension parameters")
    return parsed


def _require_bt(parsed):
    if not isinstance(parsed, BTParams):
        raise ParseError("config: this command needs h, d, p keys")
    return parsed


def _cmd_strata(args):
    datum = _require_zip(parse_config(args.config))
    twist = compute_twist(datum)
    strata = classify(datum)
    ext = datum.ext
    tables = datum.tables
    I = sorted(datum.parabolic_type)
    minimal = []
    for a in ext.min_reps(I):
        dec = ext.canonical_decomposition(a, I, twist.J)
        minimal.append({
            "weyl_word": _word_json(tables, a.w),
            "omega": ext.omega.label(a.omega),
            "conjugated_word": _word_json(tables, dec.wpp),
            "double_min_word": _word_json(tables, dec.y),
            "parabolic_word": _word_json(tables, dec.w_J),
            "length": ext.extended_length(a, I, twist.J),
        })
    return {
        "schema": 1,
        "kind": "strata",
        "config": _echo(datum),
        "flag_dim": datum.flag_dim,
        "twist": {
            "J": sorted(twist.J),
            "w1_word": _word_json(tables, twist.w1),
            "w2_word": _word_json(tables, twist.w2),
        },
        "minimal_set": minimal,
        "strata": _strata_rows(datum, strata),
    }


def _zeta_doc(kind, strata, q, series_order, extra):
    zeta = zeta_from_strata(strata)
    doc = {
        "schema": 1,
        "kind": kind,
        "factors": [{"aut_dim": a, "degree": f, "multiplicity": m}
                    for (a, f), m in zeta.factor_items()],
        "display": zeta.to_str(q),
        "q": q,
    }
    doc.update(extra)
    if series_order is not None:
        expansion = expand_series(zeta, series_order, q)
        doc["series"] = [_coeff_json(c) for c in expansion.coefficients]
    return doc


def _cmd_zeta(args):
    datum = _require_zip(parse_config(args.config))
    strata = classify(datum)
    return _zeta_doc("zeta", strata, args.q, args.series,
                     {"config": _echo(datum)})


def _cmd_count(args):
    datum = _require_zip(parse_config(args.config))
    strata = classify(datum)
    values = [{"v": v, "count": _coeff_json(point_count(strata, v, args.q))}
              for v in range(1, args.v + 1)]
    return {
        "schema": 1,
        "kind": "count",
        "config": _echo(datum),
        "q": args.q,
        "values": values,
    }


def _bt_params(args):
    if args.config is not None:
        return _require_bt(parse_config(args.config))
    for key in ("h", "d", "p"):
        if getattr(args, key) is None:
            raise ParseError(f"either a config file or --{key} is required")
    try:
        return BTParams(args.h, args.d, args.p, getattr(args, "n", 1))
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from None


def _cmd_bt(args):
    params = _bt_params(args)
    strata = bt_strata(params)
    extra = {
        "h": params.h, "d": params.d, "p": params.p, "n": params.n,
        "strata": [{"length": s.length, "aut_dim": s.aut_dim}
                   for s in strata],
    }
    return _zeta_doc("bt", strata, params.p, args.series, extra)


def _cmd_oracle(args):
    params = _bt_params(args)
    report = crosscheck(params, args.k)
    return {
        "schema": 1,
        "kind": "oracle",
        "h": params.h, "d": params.d, "p": params.p, "k": args.k,
        "predicted": str(report.predicted),
        "observed": str(report.observed),
        "ok": report.ok,
        "candidate_count": report.census.candidate_count,
        "group_order": report.census.group_order,
        "classes": [{"orbit_size": c.orbit_size, "aut_count": c.aut_count}
                    for c in report.census.classes],
    }


def _render_pretty(doc):
    lines = [f"kind: {doc['kind']}"]
    if "twist" in doc:
        lines.append(f"J = {doc['twist']['J']}, "
                     f"w1 = {doc['twist']['w1_word']}")
    for key in ("minimal_set", "strata", "classes", "values", "factors"):
        rows = doc.get(key)
        if not rows:
            continue
        lines.append(f"{key}:")
        headers = list(rows[0])
        lines.append("  " + " | ".join(headers))
        for row in rows:
            lines.append("  " + " | ".join(str(row[hdr]) for hdr in headers))
    if "display" in doc:
        lines.append(f"zeta = {doc['display']}")
    if "series" in doc:
        lines.append(f"series = {doc['series']}")
    for key in ("predicted", "observed", "ok"):
        if key in doc:
            lines.append(f"{key} = {doc[key]}")
    return "\n".join(lines)


def _add_bt_flags(sub):
    sub.add_argument("config", nargs="?", default=None,
                     help="config file with h, d, p keys")
    sub.add_argument("--h", type=int, default=None, help="height")
    sub.add_argument("--d", type=int, default=None, help="dimension")
    sub.add_argument("--p", type=int, default=None, help="characteristic")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="zipzeta",
        description="Exact stratification and zeta functions of zip-type "
                    "quotient stacks.")
    parser.add_argument("--pretty", action="store_true",
                        help="aligned text output instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("strata", help="stratify a config")
    s.add_argument("config")
    s.set_defaults(handler=_cmd_strata)

    z = sub.add_parser("zeta", help="zeta function of a config")
    z.add_argument("config")
    z.add_argument("--q", type=int, default=None,
                   help="numeric field size (symbolic when omitted)")
    z.add_argument("--series", type=int, default=None,
                   help="also expand to this order")
    z.set_defaults(handler=_cmd_zeta)

    c = sub.add_parser("count", help="groupoid point counts")
    c.add_argument("config")
    c.add_argument("--v", type=int, required=True,
                   help="count over degrees 1..v")
    c.add_argument("--q", type=int, default=None)
    c.set_defaults(handler=_cmd_count)

    b = sub.add_parser("bt", help="truncated group-scheme stack zeta")
    _add_bt_flags(b)
    b.add_argument("--n", type=int, default=1, help="truncation level")
    b.add_argument("--series", type=int, default=None)
    b.set_defaults(handler=_cmd_bt)

    o = sub.add_parser("oracle", help="census crosscheck")
    _add_bt_flags(o)
    o.add_argument("--k", type=int, default=1, help="field degree")
    o.set_defaults(handler=_cmd_oracle)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.handler(args)
    except MismatchDetected as exc:
        doc = {
            "schema": 1,
            "kind": "oracle",
            "ok": False,
            "predicted": str(exc.predicted),
            "observed": str(exc.observed),
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
        return 3
    except (ZipzetaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.pretty:
        print(_render_pretty(doc))
    else:
        print(json.dumps(doc, indent=2, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
