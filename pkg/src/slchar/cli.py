"""Command-line front end and seeded verification harness.

Commands: trace-poly, eval-word, construct, fricke, fn2trace, cover,
verify.  Exit codes: 0 ok, 1 math error, 2 usage error.  Numeric
arguments accept decimals or rational literals ``p/q``.  Given the
same seed and configuration, output is byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import chars, covers, fricke, hypgeom, mat2, sampling, tracepoly
from .fricke import CharacterS04, CharacterS12, FNCoords
from .mat2 import GeometryError
from .words import Word, WordSyntaxError, parse_word


def parse_number(text: str) -> float:
    """Decimal or rational 'p/q' literal."""
    text = text.strip()
    if "/" in text:
        return float(Fraction(text))
    return float(text)


def parse_number_exact(text: str):
    text = text.strip()
    if "/" in text or "." not in text and "e" not in text.lower():
        return Fraction(text)
    return float(text)


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _print_json(data) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


# -- commands -------------------------------------------------------------------


def cmd_trace_poly(args) -> int:
    w = parse_word(args.word, args.rank)
    p = tracepoly.trace_poly(w)
    if args.json:
        _print_json(p.to_json())
    else:
        print(p.to_text())
    return 0


def cmd_eval_word(args) -> int:
    w = parse_word(args.word, args.rank)
    if args.matrices:
        raw = args.matrices
        if raw.startswith("@"):
            with open(raw[1:]) as fh:
                raw = fh.read()
        data = json.loads(raw)
        mats = [mat2.matrix_from_json(m) for m in data]
    else:
        rnd = sampling.rng_for(args.seed)
        mats = [sampling.random_unimodular(rnd) for _ in range(args.rank)]
    if len(mats) != args.rank:
        raise GeometryError(
            f"need {args.rank} matrices, got {len(mats)}"
        )
    result = mat2.evaluate_word(w, mats)
    tr = mat2.trace(result)
    if args.json:
        _print_json({
            "matrix": mat2.matrix_to_json(result),
            "trace": mat2.format_complex(tr),
        })
    else:
        print("matrix:", np.array2string(result, precision=12))
        print("trace:", mat2.format_complex(tr))
    return 0


def cmd_construct(args) -> int:
    if args.kind == "pair":
        x, y, z = (complex(parse_number(v)) for v in args.coords)
        xi, eta = mat2.normal_form_pair(x, y, z)
        payload = {
            "xi": mat2.matrix_to_json(xi),
            "eta": mat2.matrix_to_json(eta),
            "character": chars.character_of_pair(xi, eta).to_json(),
        }
    else:
        t1, t2, t3, t12, t23, t13 = (complex(parse_number(v)) for v in args.coords)
        tri = chars.construct_triple(t1, t2, t3, t12, t23, t13, args.branch)
        payload = {
            "xi1": mat2.matrix_to_json(tri[0]),
            "xi2": mat2.matrix_to_json(tri[1]),
            "xi3": mat2.matrix_to_json(tri[2]),
            "character": chars.character_of_triple(*tri).to_json(),
        }
    if args.json:
        _print_json(payload)
    else:
        for k, v in payload.items():
            print(f"{k}: {json.dumps(v)}")
    return 0


def _fricke_verdict(surface: str, coords: list[float]):
    if surface == "s03":
        return fricke.member_s03(*coords).to_json()
    if surface == "s11":
        return fricke.member_s11(*coords).to_json()
    if surface == "s04":
        return fricke.member_s04(CharacterS04(*coords)).to_json()
    if surface == "s12":
        return fricke.member_s12(CharacterS12(*coords)).to_json()
    if surface == "c02":
        p, q, r = coords
        return {"member": fricke.member_c02(p, q, r)}
    if surface == "c11":
        p, q, r = coords
        return {"member": fricke.member_c11(p, q, r)}
    raise ValueError(f"unknown surface {surface!r}")


_FRICKE_ARITY = {"s03": 3, "s11": 3, "s04": 7, "s12": 8, "c02": 3, "c11": 3}


def cmd_fricke(args) -> int:
    coords = [parse_number_exact(v) for v in args.coords.split(",")]
    need = _FRICKE_ARITY[args.surface]
    if len(coords) != need:
        raise GeometryError(
            f"surface {args.surface} takes {need} coordinates, got {len(coords)}"
        )
    if args.mode == "float":
        coords = [float(v) for v in coords]
    verdict = _fricke_verdict(args.surface, coords)
    _print_json(verdict)
    member = verdict.get("verdict", "").startswith("member") or verdict.get("member") is True
    return 0 if member or args.report_only else 1


def cmd_fn2trace(args) -> int:
    result = fricke.fn_to_traces(FNCoords(l=args.l, tau=args.tau, b=args.b))
    if args.json:
        _print_json(result.to_json())
    else:
        print(f"x = {_fmt(result.x)}")
        print(f"y = {_fmt(result.y)}")
        print(f"z = {_fmt(result.z)}")
        print(f"kappa = {_fmt(result.kappa)} (boundary trace {_fmt(result.boundary_trace)})")
    return 0


_COVER_MAPS = {
    "c02s04": covers.cover_c02_to_s04,
    "c11s12": covers.cover_c11_to_s12,
    "deck": covers.deck_ring_map,
    "embed": covers.embed_r2_in_r3,
}


def cmd_cover(args) -> int:
    rm = _COVER_MAPS[args.map]()
    payload = rm.to_json()
    if args.symbolic_check:
        payload["symbolic_check"] = covers.symbolic_check(args.map)
    if args.eval:
        point = {}
        for item in args.eval.split(","):
            name, _, value = item.partition("=")
            point[name.strip()] = complex(parse_number(value))
        images = rm.apply_point(point)
        payload["evaluation"] = {
            n: mat2.format_complex(complex(v)) for n, v in images.items()
        }
    _print_json(payload)
    if args.symbolic_check and not all(payload["symbolic_check"].values()):
        return 1
    return 0


# -- verification suites ----------------------------------------------------------


def _suite_identities(cfg) -> list[tuple[str, float]]:
    if cfg.mode == "exact":
        return _suite_identities_exact(cfg)
    worst_ch = worst_basic = worst_inv = worst_comm = 0.0
    for trial in range(cfg.trials):
        rnd = sampling.rng_for(cfg.seed, trial)
        xi = sampling.random_unimodular(rnd)
        eta = sampling.random_unimodular(rnd)
        ch = xi @ xi - mat2.trace(xi) * xi + mat2.det(xi) * mat2.I2
        worst_ch = max(worst_ch, float(np.abs(ch).max()))
        basic = (
            mat2.trace(xi @ eta)
            + mat2.trace(xi @ mat2.adjoint(eta))
            - mat2.trace(xi) * mat2.trace(eta)
        )
        worst_basic = max(worst_basic, abs(basic))
        worst_inv = max(
            worst_inv, abs(mat2.trace(xi) - mat2.trace(mat2.adjoint(xi)))
        )
        comm = mat2.trace(
            xi @ eta @ mat2.adjoint(xi) @ mat2.adjoint(eta)
        ) + mat2.det(mat2.lie_product(xi, eta)) - 2
        worst_comm = max(worst_comm, abs(comm))
    return [
        ("cayley-hamilton", worst_ch),
        ("basic-identity", worst_basic),
        ("trace-of-inverse", worst_inv),
        ("commutator-vs-lie-det", worst_comm),
    ]


def _suite_identities_exact(cfg) -> list[tuple[str, float]]:
    from fractions import Fraction as F

    mm = sampling.exact_matmul
    tr = sampling.exact_trace

    def det(m):
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]

    worst = {"cayley-hamilton": F(0), "basic-identity": F(0),
             "trace-of-inverse": F(0), "commutator-vs-lie-det": F(0)}
    for trial in range(cfg.trials):
        rnd = sampling.rng_for(cfg.seed, trial)
        xi = sampling.random_rational_unimodular(rnd)
        eta = sampling.random_rational_unimodular(rnd)
        t, d = tr(xi), det(xi)
        sq = mm(xi, xi)
        ch = max(
            abs(sq[i][j] - t * xi[i][j] + (d if i == j else 0))
            for i in range(2) for j in range(2)
        )
        worst["cayley-hamilton"] = max(worst["cayley-hamilton"], ch)
        adj = lambda m: ((m[1][1], -m[0][1]), (-m[1][0], m[0][0]))
        basic = tr(mm(xi, eta)) + tr(mm(xi, adj(eta))) - tr(xi) * tr(eta)
        worst["basic-identity"] = max(worst["basic-identity"], abs(basic))
        worst["trace-of-inverse"] = max(
            worst["trace-of-inverse"], abs(tr(xi) - tr(adj(xi)))
        )
        ab, ba = mm(xi, eta), mm(eta, xi)
        lie = tuple(
            tuple(ab[i][j] - ba[i][j] for j in range(2)) for i in range(2)
        )
        comm = tr(mm(mm(xi, eta), mm(adj(xi), adj(eta)))) + det(lie) - 2
        worst["commutator-vs-lie-det"] = max(
            worst["commutator-vs-lie-det"], abs(comm)
        )
    return [(name, float(v)) for name, v in worst.items()]


def _suite_oracle(cfg) -> list[tuple[str, float]]:
    if cfg.mode == "exact":
        return _suite_oracle_exact(cfg)
    worst2 = worst3 = worst4 = 0.0
    for trial in range(cfg.trials):
        rnd = sampling.rng_for(cfg.seed, trial)
        w2 = sampling.random_reduced_word(rnd, 2, 12)
        m2 = [sampling.random_unimodular(rnd) for _ in range(2)]
        v = tracepoly.evaluate_at_character(tracepoly.trace_poly_f2(w2), m2)
        t = mat2.trace(mat2.evaluate_word(w2, m2))
        worst2 = max(worst2, abs(v - t) / (1 + abs(t)))
        w3 = sampling.random_reduced_word(rnd, 3, 8)
        m3 = [sampling.random_unimodular(rnd) for _ in range(3)]
        v = tracepoly.evaluate_at_character(tracepoly.trace_poly_f3(w3), m3)
        t = mat2.trace(mat2.evaluate_word(w3, m3))
        worst3 = max(worst3, abs(v - t) / (1 + abs(t)))
        m4 = [sampling.random_unimodular(rnd) for _ in range(4)]
        worst4 = max(worst4, tracepoly.quadruple_trace_check(m4))
    return [
        ("rank2-words", worst2),
        ("rank3-words", worst3),
        ("quadruple-trace", worst4),
    ]


def _suite_oracle_exact(cfg) -> list[tuple[str, float]]:
    """Rational matrices, exact products, exact polynomial evaluation:
    the residuals are identically zero."""
    from fractions import Fraction as F

    tr = sampling.exact_trace
    mm = sampling.exact_matmul
    worst2 = worst3 = worst4 = F(0)
    for trial in range(cfg.trials):
        rnd = sampling.rng_for(cfg.seed, trial)
        w2 = sampling.random_reduced_word(rnd, 2, 10)
        m2 = [sampling.random_rational_unimodular(rnd) for _ in range(2)]
        char = {"x": tr(m2[0]), "y": tr(m2[1]), "z": tr(mm(m2[0], m2[1]))}
        val = tracepoly.trace_poly_f2(w2).evaluate_exact(char)
        worst2 = max(worst2, abs(val - tr(sampling.exact_evaluate_word(w2, m2))))
        w3 = sampling.random_reduced_word(rnd, 3, 6)
        m3 = [sampling.random_rational_unimodular(rnd) for _ in range(3)]
        char3 = {
            "x1": tr(m3[0]), "x2": tr(m3[1]), "x3": tr(m3[2]),
            "x12": tr(mm(m3[0], m3[1])), "x13": tr(mm(m3[0], m3[2])),
            "x23": tr(mm(m3[1], m3[2])),
            "x123": tr(mm(mm(m3[0], m3[1]), m3[2])),
        }
        val = tracepoly.trace_poly_f3(w3).evaluate_exact(char3)
        worst3 = max(worst3, abs(val - tr(sampling.exact_evaluate_word(w3, m3))))
        m4 = [sampling.random_rational_unimodular(rnd) for _ in range(4)]

        def t(*idx):
            out = m4[idx[0] - 1]
            for i in idx[1:]:
                out = mm(out, m4[i - 1])
            return tr(out)

        lhs = 2 * t(1, 2, 3, 4)
        rhs = (
            t(1) * t(2) * t(3) * t(4)
            + t(1) * t(2, 3, 4) + t(2) * t(3, 4, 1)
            + t(3) * t(4, 1, 2) + t(4) * t(1, 2, 3)
            + t(1, 2) * t(3, 4) + t(4, 1) * t(2, 3)
            - t(1, 3) * t(2, 4)
            - t(1) * t(2) * t(3, 4) - t(1, 2) * t(3) * t(4)
            - t(4) * t(1) * t(2, 3) - t(4, 1) * t(2) * t(3)
        )
        worst4 = max(worst4, abs(lhs - rhs))
    return [
        ("rank2-words", float(worst2)),
        ("rank3-words", float(worst3)),
        ("quadruple-trace", float(worst4)),
    ]


def _suite_fricke(cfg) -> list[tuple[str, float]]:
    rows = []
    rows.append(
        ("defining-identity-symbolic",
         0.0 if fricke.defining_identity_residual().is_zero() else 1.0)
    )
    worst_fn = 0.0
    worst_hex = 0.0
    for trial in range(cfg.trials):
        rnd = sampling.rng_for(cfg.seed, trial)
        coords = FNCoords(
            l=rnd.uniform(0.1, 5), tau=rnd.uniform(-4, 4), b=rnd.uniform(0, 4)
        )
        res = fricke.fn_to_traces(coords)
        worst_fn = max(worst_fn, res.metadata["constraint_residual"])
        x, y, z = (rnd.uniform(-10, -2.01) for _ in range(3))
        cert = hypgeom.hexagon_certificate(x, y, z)
        if cert.verdict != "right-hexagon":
            worst_hex = max(worst_hex, 1.0)
        for pair, expect in zip(
            cert.pairs,
            (
                (2 * z - x * y) / np.sqrt((x * x - 4) * (y * y - 4)),
                (2 * x - y * z) / np.sqrt((y * y - 4) * (z * z - 4)),
                (2 * y - z * x) / np.sqrt((z * z - 4) * (x * x - 4)),
            ),
        ):
            worst_hex = max(worst_hex, abs(pair.inner - expect))
    rows.append(("fn-boundary-constraint", worst_fn))
    rows.append(("hexagon-inner-products", worst_hex))
    return rows


def _suite_covers(cfg) -> list[tuple[str, float]]:
    rows = []
    for name in ("c02s04", "c11s12", "embed", "deck"):
        ok = all(covers.symbolic_check(name).values())
        rows.append((f"symbolic-{name}", 0.0 if ok else 1.0))
    worst = 0.0
    for trial in range(cfg.trials):
        rnd = sampling.rng_for(cfg.seed, trial)
        ms = [sampling.random_unimodular(rnd) for _ in range(3)]
        ch = chars.character_of_triple(*ms)
        img = covers.deck_involution_f3(ch)
        worst = max(worst, *img.sum_product_residuals())
    rows.append(("deck-character-validity", worst))
    return rows


def _suite_coxeter(cfg) -> list[tuple[str, float]]:
    worst = 0.0
    done = 0
    trial = 0
    while done < cfg.trials:
        rnd = sampling.rng_for(cfg.seed, trial)
        trial += 1
        xi = sampling.random_unimodular(rnd)
        eta = sampling.random_unimodular(rnd)
        if abs(chars.character_of_pair(xi, eta).kappa() - 2) < 1e-3:
            continue
        done += 1
        i_xy, i_yz, i_zx = hypgeom.coxeter_extension(xi, eta)
        zeta = mat2.adjoint(xi @ eta)
        for inv in (i_xy, i_yz, i_zx):
            worst = max(worst, float(np.abs(inv @ inv + mat2.I2).max()))
        for prod, target in (
            (i_zx @ i_xy, xi),
            (i_xy @ i_yz, eta),
            (i_yz @ i_zx, zeta),
        ):
            dev = min(
                float(np.abs(prod - target).max()),
                float(np.abs(prod + target).max()),
            )
            worst = max(worst, dev / max(1.0, float(np.abs(target).max())))
    return [("involution-factorization", worst)]


_SUITES = {
    "identities": _suite_identities,
    "oracle": _suite_oracle,
    "fricke": _suite_fricke,
    "covers": _suite_covers,
    "coxeter": _suite_coxeter,
}


def cmd_verify(args) -> int:
    suite = _SUITES[args.suite]
    rows = suite(args)
    failed = False
    for name, residual in rows:
        ok = residual <= args.tolerance
        failed = failed or not ok
        print(f"{args.suite}/{name}: max-residual={residual:.17e} "
              f"{'pass' if ok else 'FAIL'}")
    print(f"suite={args.suite} trials={args.trials} seed={args.seed} "
          f"tolerance={args.tolerance:g} mode={args.mode} "
          f"result={'FAIL' if failed else 'pass'}")
    return 1 if failed else 0


# -- argument parsing ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="slchar",
        description="Trace coordinates on SL(2,C) character varieties "
        "and Fricke-space membership tests.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trace-poly", help="trace polynomial of a word")
    p.add_argument("word", help="word text, e.g. 'X Y x y' or 'X1 X2^-1'")
    p.add_argument("--rank", type=int, default=2, choices=(1, 2, 3))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_trace_poly)

    p = sub.add_parser("eval-word", help="evaluate a word on matrices")
    p.add_argument("word")
    p.add_argument("--rank", type=int, default=2, choices=(1, 2, 3))
    p.add_argument("--matrices", help="JSON list of {re, im} matrices, or @file")
    p.add_argument("--seed", type=int, default=0, help="random matrices if none given")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval_word)

    p = sub.add_parser("construct", help="matrices realizing a character")
    p.add_argument("kind", choices=("pair", "triple"))
    p.add_argument("coords", nargs="+",
                   help="x y z for a pair; t1 t2 t3 t12 t23 t13 for a triple")
    p.add_argument("--branch", choices=("+", "-"), default="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("fricke", help="Fricke-space membership")
    fsub = p.add_subparsers(dest="fricke_command", required=True)
    ptest = fsub.add_parser("test")
    ptest.add_argument("surface", choices=sorted(_FRICKE_ARITY))
    ptest.add_argument("--coords", required=True,
                       help="comma-separated coordinates (decimal or p/q); "
                       "use --coords=-3,... for negative leading values")
    ptest.add_argument("--mode", choices=("float", "exact"), default="float")
    ptest.add_argument("--report-only", action="store_true",
                       help="exit 0 even for nonmembers")
    ptest.set_defaults(func=cmd_fricke)

    p = sub.add_parser("fn2trace",
                       help="Fenchel-Nielsen to trace coordinates (one-holed torus)")
    p.add_argument("l", type=parse_number)
    p.add_argument("tau", type=parse_number)
    p.add_argument("b", type=parse_number, nargs="?", default=0.0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fn2trace)

    p = sub.add_parser("cover", help="covering-space character-ring maps")
    csub = p.add_subparsers(dest="cover_command", required=True)
    pmap = csub.add_parser("map")
    pmap.add_argument("map", choices=sorted(_COVER_MAPS))
    pmap.add_argument("--eval", help="comma-separated name=value assignments")
    pmap.add_argument("--symbolic-check", action="store_true")
    pmap.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify", help="seeded verification suites")
    p.add_argument("suite", choices=sorted(_SUITES))
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=parse_number, default=1e-8)
    p.add_argument("--mode", choices=("float", "exact"), default="float")
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "trials", 1) < 1:
        ap.error("--trials must be >= 1")
    try:
        return args.func(args)
    except WordSyntaxError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (GeometryError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
