"""Textual set and number specs shared by the command-line surface.

A set spec is a comma list of elements and "a..b" intervals, where either
bound may be the letter n for the universe size; "@path" loads the same
token language from a file ('#' starts a comment). Errors always name the
offending token.
"""

from fractions import Fraction
from pathlib import Path

from .sets import GroundSet


class SpecError(ValueError):
    """A malformed spec token; message names the token."""

    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


def _tokens_from_file(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecError(f"cannot read set file '@{path}': {exc}",
                        token=f"@{path}") from exc
    toks = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        for chunk in line.replace(",", " ").split():
            toks.append(chunk)
    return toks


def _bound(text, n, token):
    if text == "n":
        return n
    try:
        return int(text)
    except ValueError:
        raise SpecError(f"bad set token '{token}': '{text}' is not an "
                        "integer or n", token=token) from None


def parse_set_spec(spec, n):
    """Parse a set spec into a GroundSet over [n].

    The empty spec is the empty set. Elements must lie in 1..n; intervals
    must be ascending.
    """
    spec = spec.strip()
    if spec.startswith("@"):
        tokens = _tokens_from_file(spec[1:])
    elif spec == "":
        tokens = []
    else:
        tokens = []
        for part in spec.split(","):
            part = part.strip()
            if not part:
                raise SpecError(f"empty token in set spec '{spec}'",
                                token=part)
            tokens.append(part)
    members = []
    for tok in tokens:
        if ".." in tok:
            lo_s, _, hi_s = tok.partition("..")
            lo = _bound(lo_s.strip(), n, tok)
            hi = _bound(hi_s.strip(), n, tok)
            if lo > hi:
                raise SpecError(f"descending interval '{tok}'", token=tok)
            if lo < 1 or hi > n:
                raise SpecError(f"interval '{tok}' leaves 1..{n}", token=tok)
            members.extend(range(lo, hi + 1))
        else:
            x = _bound(tok, n, tok)
            if not 1 <= x <= n:
                raise SpecError(f"element '{tok}' outside 1..{n}", token=tok)
            members.append(x)
    return GroundSet(n, sorted(set(members)))


def parse_fraction(text, what="value"):
    """Exact rational from 'p/q', an integer, or a finite decimal."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise SpecError(f"bad {what} '{text}': expected p/q, an integer, "
                        "or a decimal", token=str(text)) from None


def parse_int(text, what="value"):
    try:
        return int(str(text).strip())
    except ValueError:
        raise SpecError(f"bad {what} '{text}': expected an integer",
                        token=str(text)) from None


def parse_bool(text, what="flag"):
    t = str(text).strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise SpecError(f"bad {what} '{text}': expected true or false",
                    token=str(text))


def parse_fraction_list(text, what="list"):
    """Comma list of rationals, e.g. a C grid."""
    items = [p.strip() for p in str(text).split(",")]
    if not any(items):
        raise SpecError(f"empty {what}", token=str(text))
    return [parse_fraction(p, what) for p in items]
