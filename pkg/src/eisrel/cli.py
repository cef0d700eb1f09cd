"""Command-line interface.

Exit status: 0 success, 1 a mathematical check failed, 2 bad usage or input
outside an operation's domain.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import analytic_oracle as ao
from . import basis_solver as bs
from .errors import DomainError, NotInSpanError, VerificationError
from .exact_arith import bernoulli, format_rational
from .qseries import dump_series, eisenstein, parse_series, product_P
from .relations import (
    Triple,
    corollary_triple,
    dump_matrix,
    dump_relation,
    evaluate_relation,
    generator_labels,
    relation_matrix,
    relation_vector,
)
from .linalg import rref
from .symbolic import d_expansion_check, lemma3_laurent, lemma3_residue, pfd_residue

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
DISPLAY_PREC = 30


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="eisrel", description=__doc__.splitlines()[0])
    p.add_argument(
        "--format",
        choices=("text", "record"),
        default="text",
        help="output style for relation, decompose and reduce",
    )
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    c = sub.add_parser("bernoulli", help="B_n (B_1 = -1/2)")
    c.add_argument("n", type=_nonneg)

    c = sub.add_parser("eis", help="q-expansion of E_k")
    c.add_argument("k", type=_positive)
    c.add_argument("--prec", type=_positive, default=DISPLAY_PREC)

    c = sub.add_parser("prod", help="q-expansion of P_{r,s}")
    c.add_argument("r", type=_positive)
    c.add_argument("s", type=_positive)
    c.add_argument("--prec", type=_positive, default=DISPLAY_PREC)

    c = sub.add_parser("relation", help="relation vector of a triple (r, s, t)")
    for name in "rst":
        c.add_argument(name, type=_positive)
    c.add_argument("--prec", type=_positive, default=DISPLAY_PREC)
    c.add_argument("--verify", action="store_true")
    c.add_argument("--normalize", action="store_true")

    c = sub.add_parser("relations", help="relation matrix of weight k")
    c.add_argument("k", type=_positive)
    c.add_argument("--rank", action="store_true")

    c = sub.add_parser("verify-lemma3", help="exact check of the three-sum identity")
    for name in "rst":
        c.add_argument(name, type=_positive)
    c.add_argument("--dump", action="store_true")

    c = sub.add_parser("verify-pfd", help="exact check of the partial fraction split")
    c.add_argument("r", type=_positive)
    c.add_argument("s", type=_positive)

    c = sub.add_parser("check-d", help="compare D_{r,s,t} with its closed forms")
    for name in "rst":
        c.add_argument(name, type=_positive)

    c = sub.add_parser("dim", help="dim M_k")
    c.add_argument("k", type=_positive)

    c = sub.add_parser("basis", help="basis labels of M_k")
    c.add_argument("k", type=_positive)

    c = sub.add_parser("decompose", help="coordinates of a series in the basis of M_k")
    c.add_argument("k", type=_positive)
    c.add_argument("--input", required=True, help="series file, '-' for stdin")
    c.add_argument("--prec", type=_positive, default=None,
                   help="truncate the input first (default: use all of it)")

    c = sub.add_parser("reduce", help="coordinates of E_{2i} E_{k-2i}")
    c.add_argument("i", type=_positive)
    c.add_argument("k", type=_positive)
    c.add_argument("--prec", type=_positive, default=None)

    c = sub.add_parser("corollary-triple", help="triple eliminating E_{2i} E_{k-2i}")
    c.add_argument("i", type=_positive)
    c.add_argument("k", type=_positive)

    c = sub.add_parser("lattice", help="lattice sum vs q-expansion of E_k")
    c.add_argument("k", type=int)
    c.add_argument("--tau", type=float, nargs=2, metavar=("RE", "IM"), required=True)
    c.add_argument("--trunc", type=_positive, required=True, help="M (and N unless --inner)")
    c.add_argument("--inner", type=_positive, default=None, help="N, inner truncation")
    c.add_argument("--prec", type=_positive, default=60)
    c.add_argument("--tol", type=float, default=None)
    c.add_argument("--eisenstein-summation", action="store_true",
                   help="allow k = 2 (order-dependent)")
    return p


def _cmd_bernoulli(a, out):
    out.write(format_rational(bernoulli(a.n)) + "\n")
    return EXIT_OK


def _cmd_eis(a, out):
    out.write(dump_series(eisenstein(a.k, a.prec)))
    return EXIT_OK


def _cmd_prod(a, out):
    out.write(dump_series(product_P(a.r, a.s, a.prec)))
    return EXIT_OK


def _cmd_relation(a, out):
    triple = Triple(a.r, a.s, a.t)
    v = relation_vector(triple)
    if a.normalize:
        v = v.normalize()
    if a.format == "record":
        out.write(" ".join(format_rational(x) for x in v.as_row()) + "\n")
    else:
        out.write(dump_relation(v))
    if triple.k % 2:
        out.write("TRIVIAL (odd weight)\n")
        return EXIT_OK
    if a.verify:
        res = evaluate_relation(v, a.prec)
        bad = res.first_nonzero()
        if bad is not None:
            out.write(f"FAILED: coefficient of q^{bad} is {format_rational(res[bad])}\n")
            return EXIT_FAILED
        out.write(f"VERIFIED (prec={a.prec})\n")
    return EXIT_OK


def _cmd_relations(a, out):
    if a.k < 4 or a.k % 2:
        raise DomainError(f"k must be even and >= 4, got {a.k}")
    rows = relation_matrix(a.k)
    out.write(dump_matrix(generator_labels(a.k), rows))
    if a.rank:
        rk = rref(rows)[1]
        expected = (a.k - 2) // 6 + 1
        out.write(f"rank: {rk} (expected {expected})\n")
        if rk != expected:
            return EXIT_FAILED
    return EXIT_OK


def _cmd_verify_lemma3(a, out):
    triple = Triple(a.r, a.s, a.t)
    res = lemma3_residue(triple)
    if a.dump:
        out.write("# terms in x y z\n")
        out.write(lemma3_laurent(triple).dump())
        out.write("# cleared residue in x z\n")
        out.write(res.dump())
    if res.is_zero():
        out.write("ZERO\n")
        return EXIT_OK
    out.write(f"NONZERO residue with {len(res)} terms\n")
    return EXIT_FAILED


def _cmd_verify_pfd(a, out):
    res = pfd_residue(a.r, a.s)
    if res.is_zero():
        out.write("ZERO\n")
        return EXIT_OK
    out.write(f"NONZERO residue with {len(res)} terms\n")
    out.write(res.dump())
    return EXIT_FAILED


def _cmd_check_d(a, out):
    flags = d_expansion_check(Triple(a.r, a.s, a.t))
    out.write(" ".join(str(f).lower() for f in flags) + "\n")
    return EXIT_OK if all(flags) else EXIT_FAILED


def _cmd_dim(a, out):
    out.write(f"{bs.dim_mk(a.k)}\n")
    return EXIT_OK


def _cmd_basis(a, out):
    out.write("\n".join(bs.basis_descriptor(a.k).labels) + "\n")
    return EXIT_OK


def _write_decomposition(dec, fmt, out):
    out.write(dec.record() if fmt == "record" else dec.dump())


def _cmd_decompose(a, out):
    if a.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(a.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise DomainError(f"cannot read {a.input}: {exc.strerror}") from None
    f = parse_series(text)
    if a.prec is not None:
        f = f.truncate(a.prec)
    _write_decomposition(bs.decompose(f, a.k), a.format, out)
    return EXIT_OK


def _cmd_reduce(a, out):
    _write_decomposition(bs.reduce_product(a.i, a.k, a.prec), a.format, out)
    return EXIT_OK


def _cmd_corollary_triple(a, out):
    t = corollary_triple(a.i, a.k)
    out.write(f"{t.r} {t.s} {t.t}\n")
    return EXIT_OK


def _cmd_lattice(a, out):
    tau = complex(*a.tau)
    params = ao.LatticeParams(a.trunc, a.inner or a.trunc, tau)
    lat = ao.lattice_eisenstein(a.k, params, eisenstein_summation=a.eisenstein_summation)
    ser = ao.evaluate_qseries(eisenstein(a.k, a.prec), tau)
    diff = abs(lat - ser)
    tol = a.tol if a.tol is not None else ao.default_tolerance(a.k)
    out.write(f"lattice: {_fmt_complex(lat)}\n")
    out.write(f"qseries: {_fmt_complex(ser)}\n")
    out.write(f"absdiff: {diff:.12g}\n")
    ok = diff < tol
    out.write(f"{'PASS' if ok else 'FAIL'} (tol {tol:g})\n")
    return EXIT_OK if ok else EXIT_FAILED


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.12g} {z.imag:+.12g}i"


_COMMANDS = {
    "bernoulli": _cmd_bernoulli,
    "eis": _cmd_eis,
    "prod": _cmd_prod,
    "relation": _cmd_relation,
    "relations": _cmd_relations,
    "verify-lemma3": _cmd_verify_lemma3,
    "verify-pfd": _cmd_verify_pfd,
    "check-d": _cmd_check_d,
    "dim": _cmd_dim,
    "basis": _cmd_basis,
    "decompose": _cmd_decompose,
    "reduce": _cmd_reduce,
    "corollary-triple": _cmd_corollary_triple,
    "lattice": _cmd_lattice,
}


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:
        # --help
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.cmd](args, out)
    except NotInSpanError as exc:
        err.write(f"not in span: {exc}\n")
        return EXIT_FAILED
    except VerificationError as exc:
        err.write(f"verification failed: {exc}\n")
        return EXIT_FAILED
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
