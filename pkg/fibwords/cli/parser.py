"""Argument parser and flag value parsing."""

import argparse

from fibwords import __version__
from fibwords.exceptions import RangeSyntaxError
from fibwords.models.report import IdentityId
from fibwords.services.verification_service import IDENTITY_STATEMENTS

DEFAULT_VERIFY_N_MAX = 30
DEFAULT_STATS_N_MAX = 10


def parse_range(text: str) -> tuple[int, int]:
    """Parse "lo..hi" (inclusive) or a single value into (lo, hi).

    Raises:
        RangeSyntaxError: If the text is not a range of positive integers.
    """
    lo_text, sep, hi_text = text.strip().partition("..")
    if not sep:
        hi_text = lo_text
    try:
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise RangeSyntaxError(text, "bounds must be integers") from None
    if lo < 1:
        raise RangeSyntaxError(text, "bounds must be positive")
    if hi < lo:
        raise RangeSyntaxError(text, "lo must not exceed hi")
    return lo, hi


def parse_ids(text: str) -> list[IdentityId]:
    """Parse a comma list of identity names (case-insensitive)."""
    ids = []
    for part in text.split(","):
        name = part.strip().upper()
        if not name:
            continue
        try:
            ids.append(IdentityId(name))
        except ValueError:
            known = ", ".join(identity.value for identity in IdentityId)
            raise argparse.ArgumentTypeError(
                f"unknown identity '{part.strip()}' (known: {known})"
            ) from None
    return ids


def _range_arg(text: str) -> tuple[int, int]:
    try:
        return parse_range(text)
    except RangeSyntaxError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _identity_legend() -> str:
    """One line per identity: its name and the statement it checks."""
    lines = ["identities:"]
    for identity in IdentityId:
        lines.append(f"  {identity.value:<17} {IDENTITY_STATEMENTS[identity]}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    """Build the argparse router for gen, decompose, verify and stats."""
    parser = argparse.ArgumentParser(
        prog="fibwords",
        description="Biperiodic Fibonacci words: generation, cell decompositions "
        "and identity verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        dest="output_format",
        choices=("plain", "structured"),
        default="plain",
        help="plain text or JSON output (default: plain)",
    )
    common.add_argument(
        "--length-cap",
        type=_positive_int,
        default=None,
        help="largest word length to build (default: FIBWORDS_MAX_WORD_LENGTH "
        "for gen/decompose, FIBWORDS_DEFAULT_LENGTH_CAP for verify)",
    )
    common.add_argument(
        "--log-level",
        type=str.upper,
        choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
        default=None,
        help="log level for stderr (default: FIBWORDS_LOG_LEVEL)",
    )

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--a", type=_positive_int, required=True, help="exponent at even n")
    family.add_argument("--b", type=_positive_int, required=True, help="exponent at odd n")
    family.add_argument(
        "--classical",
        action="store_true",
        help="classical-swapped initial conditions f0=1, f1=0 (a = b = 1 only)",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common, family], help="print a word")
    gen.add_argument("--n", type=_nonnegative_int, required=True, help="level")
    gen.add_argument(
        "--word",
        choices=("f", "t", "p", "I"),
        default="f",
        help="f, its last-two-swapped t, palindromic prefix p, or overlap word I",
    )
    gen.add_argument("--length-only", action="store_true", help="print the length only")

    decompose = sub.add_parser(
        "decompose", parents=[common, family], help="print the cell structure of f"
    )
    decompose.add_argument("--n", type=_nonnegative_int, required=True, help="level")
    decompose.add_argument(
        "--depth", type=_nonnegative_int, default=0, help="extra refinement steps"
    )
    decompose.add_argument(
        "--expand-i",
        dest="expand_i",
        action="store_true",
        help="expand I-cells into overlapping F/T cells",
    )
    decompose.add_argument(
        "--compose-twice",
        action="store_true",
        help="both-odd case: apply the decomposition twice (level n-6)",
    )

    verify = sub.add_parser(
        "verify",
        parents=[common],
        help="check identities on a grid",
        epilog=_identity_legend(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    verify.add_argument(
        "--a", dest="a_range", type=_range_arg, default=None, help="a values, lo..hi"
    )
    verify.add_argument(
        "--b", dest="b_range", type=_range_arg, default=None, help="b values, lo..hi"
    )
    verify.add_argument(
        "--n-max",
        type=_nonnegative_int,
        default=DEFAULT_VERIFY_N_MAX,
        help=f"largest level (default: {DEFAULT_VERIFY_N_MAX}, the length cap also applies)",
    )
    verify.add_argument(
        "--ids",
        type=parse_ids,
        default=None,
        help="comma list of the identities below (default: all)",
    )
    verify.add_argument(
        "--classical",
        action="store_true",
        help="use classical-swapped initial conditions for the pair (1, 1)",
    )
    verify.add_argument(
        "--workers", type=_positive_int, default=None, help="worker processes"
    )

    stats = sub.add_parser("stats", parents=[common, family], help="print family tables")
    stats.add_argument(
        "--n-max",
        type=_nonnegative_int,
        default=DEFAULT_STATS_N_MAX,
        help=f"largest level in the length table (default: {DEFAULT_STATS_N_MAX})",
    )
    return parser
