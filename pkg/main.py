import argparse
import logging
import sys

from dotenv import load_dotenv

from commands import AlgebraCommands, CartanCommands, VerifyCommands
from config import get_settings
from kernel import DahaKernel
from views import has_failures, render_json, render_lines, render_summary

load_dotenv()

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="daha",
        description="Exact computations in double affine Hecke algebras and checks of the duality involution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    info = sub.add_parser("info", help="print the affine Cartan datum of a type")
    info.add_argument("label")

    word = sub.add_parser("word", help="reduced word, length and inversion set of an affine Weyl group element")
    word.add_argument("label")
    word.add_argument("expression", help="e.g. 's0 s1 L[1,0] r[1,1]'")

    evaluate = sub.add_parser("eval", help="normal form X_beta T_u of a DAHA expression")
    evaluate.add_argument("label")
    evaluate.add_argument("expression", help="e.g. \"T1 X[1;0] - ts^1/2\"")

    bernstein = sub.add_parser("bernstein", help="Y_mu T_w expansion of an affine Hecke algebra expression")
    bernstein.add_argument("label")
    bernstein.add_argument("expression")

    verify = sub.add_parser("verify", help="run verification suites")
    suites = verify.add_subparsers(dest="suite", required=True)
    involution = suites.add_parser("involution", help="transport of relations through phi")
    involution.add_argument("label")
    involution.add_argument("--samples", type=int, default=None)
    involution.add_argument("--seed", type=int, default=None)
    lemmas = suites.add_parser("lemmas", help="root-combinatorial lemmas behind the node-0 case")
    lemmas.add_argument("label")
    lengths = suites.add_parser("lengths", help="length cross-check over a BFS ball")
    lengths.add_argument("label")
    lengths.add_argument("--max-length", type=int, default=None)
    matsumoto = suites.add_parser("matsumoto", help="every reduced word of w gives the same T_w")
    matsumoto.add_argument("label")
    matsumoto.add_argument("--max-length", type=int, default=None)
    associativity = suites.add_parser("associativity", help="(a b) c = a (b c) on random word triples")
    associativity.add_argument("label")
    associativity.add_argument("--triples", type=int, default=None)
    associativity.add_argument("--seed", type=int, default=None)
    division = suites.add_parser("division", help="T_j^-1 (T_j X_beta) = X_beta over a box of beta")
    division.add_argument("label")
    division.add_argument("--bound", type=int, default=None)
    everything = suites.add_parser("all", help="every suite for every configured type, as JSON lines")
    everything.add_argument("--config", default=None, help="KEY=VALUE file with TYPES, SAMPLES, SEED, MAX_LENGTH")
    return parser


def run(args, kernel: DahaKernel) -> int:
    if args.command == "info":
        print(render_json(CartanCommands(kernel).info(args.label)))
        return 0
    if args.command == "word":
        print(render_json(CartanCommands(kernel).word(args.label, args.expression)))
        return 0
    if args.command == "eval":
        print(render_json(AlgebraCommands(kernel).eval(args.label, args.expression)))
        return 0
    if args.command == "bernstein":
        print(render_json(AlgebraCommands(kernel).bernstein(args.label, args.expression)))
        return 0

    verify = VerifyCommands(kernel)
    if args.suite == "involution":
        reports = verify.involution(args.label, args.samples, args.seed)
    elif args.suite == "lemmas":
        reports = verify.lemmas(args.label)
    elif args.suite == "lengths":
        reports = verify.lengths(args.label, args.max_length)
    elif args.suite == "matsumoto":
        reports = verify.matsumoto(args.label, args.max_length)
    elif args.suite == "associativity":
        reports = verify.associativity(args.label, args.triples, args.seed)
    elif args.suite == "division":
        reports = verify.division(args.label, args.bound)
    else:
        reports = verify.all(args.config)
    print(render_lines(reports) if args.suite == "all" else render_json(reports))
    print(render_summary(reports), file=sys.stderr)
    if has_failures(reports):
        logger.warning("Verification finished with failures")
        return 2
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
    except ValueError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return 1
    logging.basicConfig(level=settings["log_level"], format="%(levelname)s %(name)s: %(message)s")

    kernel = DahaKernel(settings)
    try:
        return run(args, kernel)
    except (ValueError, OSError) as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        print(f"ERROR: {e}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        logger.info("Interrupted")
        return 130
    finally:
        kernel.close()


if __name__ == "__main__":
    sys.exit(main())
