"""Canonical text encodings.

=============================  ==========================================
object                         text
=============================  ==========================================
permutation, subexcedent fn    ``5 2 8 7 1 3 6 4 9`` (or ``528713649``)
Dyck path                      ``UUDUDD``
weighted Dyck path             ``UUDUDD;0 1 0``
Laguerre history               ``UHhD;0 1 0 0;laguerre`` (kind optional)
decreasing weighted SF         ``5 4 0 3 0 0 2 0 0;0 0 2 2 0 1 0 0 0``
composition                    ``(1,3,2,1,2)``
tree                           ``5(2(1,3(,4)),8(7(6,),9))``
=============================  ==========================================

A whitespace-free run of two or more digits is read one digit per entry.
Error positions count tokens from 1 across the whole text, fields
included; in a compact digit run each digit is a token.
"""

import re

from .core import (
    LAGUERRE,
    LARGE,
    Composition,
    DecreasingWeightedSF,
    DyckPath,
    LaguerreHistory,
    Permutation,
    SubexcedentFunction,
    WeightedDyckPath,
)
from .errors import InvalidInput, ParseError
from .sylvester import Tree, format_tree, parse_tree


class _Tokens:
    """Splits ``text`` into ``;``-separated fields, numbering tokens globally."""

    def __init__(self, text, fields):
        parts = text.strip().split(";")
        if not 1 <= len(parts) <= fields:
            raise ParseError(
                f"expected at most {fields} ';'-separated fields, got {len(parts)}"
            )
        self.fields = []
        pos = 0
        for part in parts:
            toks = part.split()
            if len(toks) == 1 and len(toks[0]) > 1 and toks[0].isdigit():
                toks = list(toks[0])
            self.fields.append([(pos + k + 1, t) for k, t in enumerate(toks)])
            pos += max(len(toks), 1)
        self.fields += [[] for _ in range(fields - len(self.fields))]

    def ints(self, idx):
        out = []
        for pos, tok in self.fields[idx]:
            if not re.fullmatch(r"\d+", tok):
                raise ParseError(f"expected a nonnegative integer, got {tok!r}", pos)
            out.append(int(tok))
        return tuple(out)

    def word(self, idx, alphabet):
        toks = self.fields[idx]
        if len(toks) > 1:
            raise ParseError("expected a single step word", toks[1][0])
        if not toks:
            return ""
        pos, tok = toks[0]
        bad = next((i for i, c in enumerate(tok, 1) if c not in alphabet), None)
        if bad is not None:
            raise ParseError(
                f"step {bad} of {tok!r} is {tok[bad - 1]!r}, expected one of {alphabet}",
                pos,
            )
        return tok

    def present(self, idx):
        return bool(self.fields[idx])


def _single_field(text):
    if ";" in text:
        raise ParseError("unexpected ';' in a single-field object")
    return _Tokens(text, 1)


def parse_permutation(text):
    return Permutation(_single_field(text).ints(0))


def parse_sf(text):
    return SubexcedentFunction(_single_field(text).ints(0))


def parse_parking(text):
    return _single_field(text).ints(0)


def parse_dyck(text):
    return DyckPath(_single_field(text).word(0, "UD"))


def parse_wdp(text):
    toks = _Tokens(text, 2)
    return WeightedDyckPath(DyckPath(toks.word(0, "UD")), toks.ints(1))


def parse_dwsf(text):
    toks = _Tokens(text, 2)
    return DecreasingWeightedSF(SubexcedentFunction(toks.ints(0)), toks.ints(1))


def parse_laguerre(text, kind=None):
    """Laguerre history; a ``kind`` argument must agree with the text if both given."""
    toks = _Tokens(text, 3)
    steps = toks.word(0, "UDHh")
    weight = toks.ints(1)
    given = None
    if toks.present(2):
        pos, given = toks.fields[2][0]
        if given not in (LAGUERRE, LARGE) or len(toks.fields[2]) > 1:
            raise ParseError(f"kind must be {LAGUERRE!r} or {LARGE!r}", pos)
        if kind is not None and given != kind:
            raise ParseError(f"expected a {kind} history, got {given}", pos)
    return LaguerreHistory(steps, weight, given or kind or LAGUERRE)


def parse_composition(text):
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    toks = [t for t in re.split(r"[,\s]+", body) if t]
    parts = []
    for pos, tok in enumerate(toks, 1):
        if not re.fullmatch(r"\d+", tok):
            raise ParseError(f"expected a positive integer, got {tok!r}", pos)
        parts.append(int(tok))
    if not parts:
        raise ParseError("empty composition")
    return Composition(tuple(parts))


def format_ints(values):
    return " ".join(map(str, values))


PARSERS = {
    "perm": parse_permutation,
    "sf": parse_sf,
    "dyck": parse_dyck,
    "wdp": parse_wdp,
    "laguerre": parse_laguerre,
    "dwsf": parse_dwsf,
    "composition": parse_composition,
    "parking": parse_parking,
    "tree": parse_tree,
}


def parse(kind, text):
    try:
        parser = PARSERS[kind]
    except KeyError:
        raise InvalidInput(f"unknown object kind {kind!r}") from None
    return parser(text)


def format_object(obj):
    """Canonical text of any object produced by this package."""
    if isinstance(obj, tuple):
        return format_ints(obj)
    if obj is None or isinstance(obj, Tree):
        return format_tree(obj)
    return str(obj)
