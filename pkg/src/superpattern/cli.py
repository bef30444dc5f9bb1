"""Command-line interface: ``superpattern <command> ...``.

Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import serialize as ser
from .config import get_caps, parse_caps, set_caps
from .errors import SuperpatternError
from .lattice import full_lattice, join_irreducible, lbl_ch_inverse, lbl_cl, meet_irreducible
from .nonnesting import NNPartition, enumerate_nn
from .poset import Poset
from .supercharacters import (
    Basis,
    determinant_sign,
    table_determinant,
    table_determinant_direct,
)


class InputError(Exception):
    pass


def _load_poset(text: str | None, chain: int | None = None) -> Poset:
    if chain is not None:
        return Poset.chain(range(1, chain + 1))
    if text is None:
        raise InputError("a poset is required (--poset FILE, inline JSON, or --chain N)")
    if text.lstrip().startswith("{"):
        data = json.loads(text)
    else:
        data = json.loads(Path(text).read_text())
    return ser.poset_from_json(data)


def _label(P: Poset, text: str | None) -> NNPartition:
    if text is None:
        return NNPartition.empty(P)
    return ser.label_from_json(P, text)


def _emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else ser.dumps(payload)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# commands ---------------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    P = _load_poset(args.poset, args.chain)
    parts = enumerate_nn(P)
    if args.count_only:
        _emit(args, f"{len(parts)}\n")
        return 0
    _emit(args, {"poset": ser.poset_to_json(P), "count": len(parts),
                 "partitions": [ser.label_to_json(l) for l in parts]})
    return 0


def cmd_lattice(args) -> int:
    P = _load_poset(args.poset, args.chain)
    entries = []
    for N in full_lattice(P):
        entries.append({
            "coideal": ser.coideal_to_json(N),
            "exponent": N.exponent,
            "lbl_cl": ser.label_to_json(lbl_cl(N)),
            "lbl_ch_inverse": ser.label_to_json(lbl_ch_inverse(N)),
        })
    out = {"poset": ser.poset_to_json(P), "count": len(entries), "coideals": entries}
    if args.irreducibles:
        out["meet_irreducible"] = {
            f"[{a},{b}]": ser.coideal_to_json(meet_irreducible(P, (a, b))) for a, b in P.proper_intervals()
        }
        out["join_irreducible"] = {
            f"[{a},{b}]": ser.coideal_to_json(join_irreducible(P, (a, b))) for a, b in P.proper_intervals()
        }
    _emit(args, out)
    return 0


def cmd_table(args) -> int:
    P = _load_poset(args.poset, args.chain)
    q0 = ser.parse_q(args.q)
    if args.format == "csv":
        _emit(args, ser.table_to_csv(P, args.basis, q0))
        return 0
    out = ser.table_to_json(P, args.basis, q0)
    if Basis.parse(args.basis) == Basis.CHI:
        out["determinant"] = {
            "formula": ser.scalar_out(table_determinant(P), q0),
            "direct": ser.scalar_out(table_determinant_direct(P), q0),
            "sign": determinant_sign(P),
        }
    _emit(args, out)
    return 0


def cmd_restrict(args) -> int:
    from .hopf.species import restriction_general

    P = _load_poset(args.poset, args.chain)
    Q = _load_poset(args.sub)
    lam = _label(P, args.label)
    q0 = ser.parse_q(args.q)
    res = restriction_general(P, Q, lam)
    _emit(args, {
        "poset": ser.poset_to_json(P),
        "sub": ser.poset_to_json(Q),
        "label": ser.label_to_json(lam),
        "basis": "chi",
        "terms": [{"label": ser.label_to_json(nu), "coeff": ser.scalar_out(c, q0)} for nu, c in res.items()],
    })
    return 0


def _element(poset_text, label_text, basis, chain: int | None = None):
    from .hopf.species import SpeciesElement

    P = _load_poset(poset_text, chain)
    return SpeciesElement.basis_vector(_label(P, label_text), basis)


def cmd_product(args) -> int:
    from .hopf.species import product

    x = _element(args.poset, args.label, args.basis, args.chain)
    y = _element(args.with_poset, args.with_label, args.basis)
    _emit(args, ser.species_to_json(product(x, y), ser.parse_q(args.q)))
    return 0


def cmd_coproduct(args) -> int:
    from .hopf.species import coproduct

    x = _element(args.poset, args.label, args.basis, args.chain)
    P = x.ground()
    table = {str(a): a for a in P}
    left = []
    for tok in filter(None, (t.strip() for t in args.left.split(","))):
        if tok not in table:
            raise InputError(f"atom {tok!r} not in the poset")
        left.append(table[tok])
    _emit(args, ser.species_to_json(coproduct(x, left, P - frozenset(left)), ser.parse_q(args.q)))
    return 0


def cmd_antipode(args) -> int:
    from .hopf import antipode as ap
    from .hopf.species import SpeciesElement, subgroup_label

    P = _load_poset(args.poset, args.chain)
    basis = Basis.parse(args.basis)
    sign = args.shifted_sign
    if basis == Basis.CHI:
        lam = _label(P, args.label)
        if args.method == "takeuchi":
            out = ap.antipode_takeuchi(SpeciesElement.basis_vector(lam, basis), shifted_sign=sign)
        else:
            out = ap.antipode_chi(P, lam, shifted_sign=sign)
    elif basis == Basis.SUBGROUP_DELTA:
        Q = _load_poset(args.sub) if args.sub else P
        if args.method == "takeuchi":
            x = SpeciesElement.basis_vector(subgroup_label(P, Q), basis)
            out = ap.antipode_takeuchi(x, shifted_sign=sign)
        else:
            out = ap.antipode_delta_subgroup(Q, P, shifted_sign=sign)
    else:
        if args.method != "takeuchi":
            raise InputError("closed forms exist for the chi and delta-subgroup bases only")
        out = ap.antipode_takeuchi(SpeciesElement.basis_vector(_label(P, args.label), basis), shifted_sign=sign)
    _emit(args, ser.species_to_json(out, ser.parse_q(args.q)))
    return 0


def cmd_primitives(args) -> int:
    from .hopf.primitives import decompose_atomic, is_atomic_pair, is_primitive, primitive_generator, slt

    P = _load_poset(args.poset, args.chain)
    Q = _load_poset(args.sub) if args.sub else P
    out = {
        "poset": ser.poset_to_json(P),
        "sub": ser.poset_to_json(Q),
        "atomic": is_atomic_pair(P, Q),
        "decomposition": [[str(a) for a in sorted(b, key=str)] for b in decompose_atomic(P, Q)],
    }
    if out["atomic"]:
        table = {str(a): a for a in P}
        a = slt(P.atom_set) if args.atom is None else table.get(args.atom)
        if a is None:
            raise InputError(f"atom {args.atom!r} not in the poset")
        g = primitive_generator(a, P, Q)
        out["atom"] = str(a)
        out["generator"] = ser.species_to_json(g)
        out["primitive"] = is_primitive(g)
    _emit(args, out)
    return 0 if out.get("primitive", True) else 1


def cmd_verify(args) -> int:
    from .verify import SUITES, run_suites

    names = [s.strip() for s in args.suite.split(",") if s.strip()] if args.suite else list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise InputError(f"unknown suite(s) {unknown}; choose from {', '.join(SUITES)}")
    try:
        primes = tuple(int(p) for p in args.primes.split(","))
    except ValueError as exc:
        raise InputError(f"bad --primes {args.primes!r}") from exc
    from .group import check_prime

    for p in primes:
        check_prime(p)
    failed = False
    for name in names:
        start = time.perf_counter()
        checks = run_suites([name], args.max_atoms, primes)
        for c in checks:
            print(c.line())
            failed |= not c.ok
        print(f"# {name}: {time.perf_counter() - start:.1f}s")
    return 1 if failed else 0


# parser -------------------------------------------------------------------------------

def _poset_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--poset", help="poset JSON file or inline JSON")
    p.add_argument("--chain", type=int, help="use the chain 1<2<...<N instead of --poset")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superpattern", description=__doc__.splitlines()[0])
    parser.add_argument("--caps", help="size caps, e.g. nn=5000,group=4096,compositions=100000")
    parser.add_argument("--out", help="write the result to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="non-nesting partitions of a poset")
    _poset_opts(p)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("lattice", help="normal pattern subgroups as co-ideals")
    _poset_opts(p)
    p.add_argument("--irreducibles", action="store_true")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("table", help="supercharacter table and its determinant")
    _poset_opts(p)
    p.add_argument("--basis", default="chi", choices=[b.value for b in Basis])
    p.add_argument("--format", default="json", choices=["json", "csv"])
    p.add_argument("--q", help="evaluate at this rational value of q")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("restrict", help="restrict a supercharacter to a subposet")
    _poset_opts(p)
    p.add_argument("--sub", required=True, help="subposet JSON (same atoms)")
    p.add_argument("--label", help='label such as "[[1,3]]"')
    p.add_argument("--q")
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("product", help="product of two basis vectors")
    _poset_opts(p)
    p.add_argument("--label")
    p.add_argument("--with-poset", required=True)
    p.add_argument("--with-label")
    p.add_argument("--basis", default="chi", choices=[b.value for b in Basis])
    p.add_argument("--q")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("coproduct", help="coproduct of a basis vector along a split")
    _poset_opts(p)
    p.add_argument("--label")
    p.add_argument("--left", required=True, help="comma-separated atoms of the left block")
    p.add_argument("--basis", default="chi", choices=[b.value for b in Basis])
    p.add_argument("--q")
    p.set_defaults(func=cmd_coproduct)

    p = sub.add_parser("antipode", help="antipode of a basis vector")
    _poset_opts(p)
    p.add_argument("--basis", default="chi", choices=[b.value for b in Basis])
    p.add_argument("--label", help="chi (or delta) label")
    p.add_argument("--sub", help="subgroup poset for the delta-subgroup basis (default: the poset)")
    p.add_argument("--method", default="closed-form", choices=["takeuchi", "closed-form"])
    p.add_argument("--shifted-sign", action="store_true", help="use (-1)^(l-1) in place of (-1)^l")
    p.add_argument("--q")
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("primitives", help="primitive generator of an atomic pair")
    _poset_opts(p)
    p.add_argument("--sub", help="subgroup poset (default: the poset)")
    p.add_argument("--atom", help="the distinguished atom (default: least atom)")
    p.set_defaults(func=cmd_primitives)

    p = sub.add_parser("verify", help="run exhaustive cross-checks")
    p.add_argument("--suite", help="comma-separated: axioms,bases,restriction,hopf,antipode,catalan")
    p.add_argument("--max-atoms", type=int, help="largest ground set (default per suite)")
    p.add_argument("--primes", default="2,3")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    old = get_caps()
    try:
        if args.caps:
            set_caps(parse_caps(args.caps, old))
        return args.func(args)
    except (InputError, SuperpatternError, ValueError, KeyError, OSError, ZeroDivisionError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
        return 2
    finally:
        set_caps(old)


if __name__ == "__main__":
    sys.exit(main())
