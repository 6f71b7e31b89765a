#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Text artifacts: set files, witness JSON and Markov system files.

Set file:

    treeset v1 k=<k> n=<N> dim=<1|2> repr=<explicit|levellift>
    <w1>,<w2>        dim=2 explicit, '-' for the empty word
    <i> <j>          dim=2 levellift
    <w>              dim=1 explicit
    <i>              dim=1 levellift

Records are strictly increasing in canonical order and the file ends with a
newline.

Witness JSON is canonical: top-level keys sorted, no whitespace, addresses in
shortlex order (X tokens before Y tokens), "" for the empty word.

Markov file:

    markov v1 k=<k> m=<m>
    T<λ>: s0 s1 ... s(m-1)
    p<λ>: num/den num/den ...
"""

import json
import logging
import os
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from .errors import FormatParseError, WitnessFormatError
from .markov import FiniteMarkovSystem
from .semigroup import DIGITS, FreeWord, PairWord, Word, format_word
from .sets import GridSet, GridTreeSet, Representation, TreeSet, level_lift
from .structures import (CartesianProductWitness, ProductTreeWitness, RegularEmbeddingWitness,
                         TreeArrayWitness, TreeWitness)

logger = logging.getLogger(__name__)

SET_MAGIC = "treeset"
MARKOV_MAGIC = "markov"
FORMAT_VERSION = "v1"

AnySet = Union[TreeSet, GridTreeSet]
Witness = Union[TreeWitness, RegularEmbeddingWitness, TreeArrayWitness, ProductTreeWitness,
                CartesianProductWitness]


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8", newline="") as f:
        return f.read()


def _write_text(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)


def _parse_header(line: str, magic: str, keys: Tuple[str, ...], source: str) -> Dict[str, str]:
    parts = line.split()
    if not parts or parts[0] != magic:
        raise FormatParseError(f"expected a '{magic}' header", 1, source)
    if len(parts) < 2 or parts[1] != FORMAT_VERSION:
        found = parts[1] if len(parts) > 1 else "nothing"
        raise FormatParseError(f"unsupported version {found}, expected {FORMAT_VERSION}", 1, source)
    fields: Dict[str, str] = {}
    for token in parts[2:]:
        name, sep, value = token.partition("=")
        if not sep or name not in keys or name in fields:
            raise FormatParseError(f"unexpected header field {token!r}", 1, source)
        fields[name] = value
    missing = [name for name in keys if name not in fields]
    if missing:
        raise FormatParseError(f"header is missing {', '.join(missing)}", 1, source)
    return fields


def _header_int(fields: Dict[str, str], name: str, lo: int, hi: Optional[int], source: str) -> int:
    try:
        value = int(fields[name])
    except ValueError:
        raise FormatParseError(f"{name} must be an integer, got {fields[name]!r}", 1, source)
    if value < lo or (hi is not None and value > hi):
        raise FormatParseError(f"{name}={value} is out of range", 1, source)
    return value


def _body_lines(text: str, source: str) -> List[str]:
    if not text.endswith("\n"):
        raise FormatParseError("missing trailing newline", text.count("\n") + 1, source)
    return text[:-1].split("\n")


def _parse_word(k: int, text: str, N: int, line: int, source: str) -> Word:
    if text != "-" and (not text or any(ch not in DIGITS[:k] for ch in text)):
        raise FormatParseError(f"invalid word {text!r} for k={k}", line, source)
    w = Word.parse(k, text)
    if len(w) >= N:
        raise FormatParseError(f"word {text} is too long for depth {N}", line, source)
    return w


def _parse_level(text: str, N: int, line: int, source: str) -> int:
    if not text.isdigit():
        raise FormatParseError(f"invalid level {text!r}", line, source)
    level = int(text)
    if level >= N:
        raise FormatParseError(f"level {level} outside [0, {N})", line, source)
    return level


def parse_set_text(text: str, source: str = "<string>") -> AnySet:
    lines = _body_lines(text, source)
    fields = _parse_header(lines[0], SET_MAGIC, ("k", "n", "dim", "repr"), source)
    k = _header_int(fields, "k", 1, len(DIGITS), source)
    N = _header_int(fields, "n", 1, None, source)
    dim = _header_int(fields, "dim", 1, 2, source)
    try:
        representation = Representation(fields["repr"])
    except ValueError:
        raise FormatParseError(f"unknown representation {fields['repr']!r}", 1, source)
    if representation == Representation.PREDICATE:
        raise FormatParseError("predicate sets cannot be stored", 1, source)

    records: List[Any] = []
    previous = None
    for number, line in enumerate(lines[1:], start=2):
        if representation == Representation.EXPLICIT and dim == 2:
            left, sep, right = line.partition(",")
            if not sep:
                raise FormatParseError(f"expected <w1>,<w2>, got {line!r}", number, source)
            record = PairWord(_parse_word(k, left, N, number, source), _parse_word(k, right, N, number, source))
            key = record.sort_key()
        elif representation == Representation.EXPLICIT:
            record = _parse_word(k, line, N, number, source)
            key = record.sort_key()
        elif dim == 2:
            parts = line.split(" ")
            if len(parts) != 2:
                raise FormatParseError(f"expected '<i> <j>', got {line!r}", number, source)
            record = (_parse_level(parts[0], N, number, source), _parse_level(parts[1], N, number, source))
            key = record
        else:
            record = _parse_level(line, N, number, source)
            key = record
        if previous is not None and key <= previous:
            reason = "duplicate record" if key == previous else "records are not sorted"
            raise FormatParseError(reason, number, source)
        previous = key
        records.append(record)

    if dim == 1:
        if representation == Representation.EXPLICIT:
            return TreeSet.explicit(k, N, records)
        return TreeSet.level_mask(k, N, records)
    if representation == Representation.EXPLICIT:
        return GridTreeSet.explicit(k, N, records)
    return level_lift(GridSet(N, records), k)


def parse_set_file(path: str) -> AnySet:
    logger.debug(f"Reading set file {path}")
    return parse_set_text(_read_text(path), source=path)


def format_set(S: AnySet) -> str:
    """Canonical text of a set; predicate sets are materialized first."""
    if isinstance(S, GridTreeSet) and S.representation == Representation.PREDICATE:
        S = S.to_explicit()
    dim = 1 if isinstance(S, TreeSet) else 2
    lines = [f"{SET_MAGIC} {FORMAT_VERSION} k={S.k} n={S.depth} dim={dim} repr={S.representation.value}"]
    if dim == 1 and S.representation == Representation.EXPLICIT:
        lines.extend(str(w) for w in S.iter_members())
    elif dim == 1:
        lines.extend(str(i) for i in S.occupied_levels())
    elif S.representation == Representation.EXPLICIT:
        lines.extend(str(g) for g in S.iter_members())
    else:
        lines.extend(f"{i} {j}" for i, j in S.occupied_levels())
    return "\n".join(lines) + "\n"


def write_set_file(S: AnySet, path: str) -> None:
    _write_text(path, format_set(S))


def _word_text(w: Word) -> str:
    return format_word(w)


def _pair_text(g: PairWord) -> str:
    return f"{format_word(g.first)},{format_word(g.second)}"


def _tree_map(mapping: Mapping[Word, Word]) -> Dict[str, str]:
    return {_word_text(a): _word_text(mapping[a]) for a in sorted(mapping, key=Word.sort_key)}


def witness_to_dict(w: Witness) -> Dict[str, Any]:
    if isinstance(w, TreeWitness):
        body = {"k": w.k, "kind": w.kind, "map": _tree_map(w.mapping), "q": w.q, "r": w.r}
    elif isinstance(w, RegularEmbeddingWitness):
        body = {"d": w.d, "k": w.k, "kind": w.kind, "map": _tree_map(w.mapping)}
    elif isinstance(w, TreeArrayWitness):
        mapping: Dict[str, str] = {}
        for j, row in enumerate(w.maps):
            for address, image in _tree_map(row).items():
                mapping[f"{j}/{address}"] = image
        body = {"c1": w.c1, "c2": w.c2, "k": w.k, "kind": w.kind, "map": mapping, "q": w.q,
                "r": w.r, "rows": [_word_text(y) for y in w.rows]}
    elif isinstance(w, ProductTreeWitness):
        ordered = sorted(w.mapping, key=FreeWord.sort_key)
        body = {"k": w.k, "kind": w.kind, "map": {str(t): _pair_text(w.mapping[t]) for t in ordered},
                "r": w.r, "u": list(w.u), "v": list(w.v)}
    elif isinstance(w, CartesianProductWitness):
        body = {"first": _tree_map(w.first), "k": w.k, "kind": w.kind, "q": w.q, "r": w.r,
                "second": _tree_map(w.second)}
    else:
        raise TypeError(f"not a witness: {type(w).__name__}")
    return body


def witness_to_json(w: Witness) -> str:
    return json.dumps(witness_to_dict(w), separators=(",", ":"), ensure_ascii=False) + "\n"


def write_witness(w: Witness, path: Optional[str]) -> str:
    """Write the canonical JSON of w to path (stdout when path is None or '-')."""
    text = witness_to_json(w)
    if path and path != "-":
        _write_text(path, text)
        logger.debug(f"Wrote {w.kind} witness to {path}")
    else:
        print(text, end="")
    return text


def _require(data: Mapping[str, Any], name: str, kind: type) -> Any:
    if name not in data:
        raise WitnessFormatError(f"witness is missing '{name}'")
    value = data[name]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise WitnessFormatError(f"'{name}' must be an integer")
    if kind is not int and not isinstance(value, kind):
        raise WitnessFormatError(f"'{name}' must be a {kind.__name__}")
    return value


def _parse_json_word(k: int, text: Any) -> Word:
    if not isinstance(text, str) or text == "-":
        raise WitnessFormatError(f"invalid word {text!r}")
    try:
        return Word.parse(k, text)
    except ValueError as e:
        raise WitnessFormatError(str(e))


def _parse_tree_map(k: int, raw: Any) -> Dict[Word, Word]:
    if not isinstance(raw, dict):
        raise WitnessFormatError("'map' must be an object")
    return {_parse_json_word(k, a): _parse_json_word(k, image) for a, image in raw.items()}


def _parse_increment(raw: Any, name: str) -> Tuple[int, int]:
    if (not isinstance(raw, list) or len(raw) != 2
            or any(isinstance(c, bool) or not isinstance(c, int) for c in raw)):
        raise WitnessFormatError(f"'{name}' must be a list of two integers")
    return (raw[0], raw[1])


def witness_from_dict(data: Mapping[str, Any]) -> Witness:
    if not isinstance(data, dict):
        raise WitnessFormatError("witness must be a JSON object")
    kind = _require(data, "kind", str)
    k = _require(data, "k", int)
    if not 1 <= k <= len(DIGITS):
        raise WitnessFormatError(f"alphabet size {k} out of range")
    if kind == TreeWitness.kind:
        return TreeWitness(k, _require(data, "r", int), _require(data, "q", int),
                           _parse_tree_map(k, _require(data, "map", dict)))
    if kind == RegularEmbeddingWitness.kind:
        return RegularEmbeddingWitness(k, _require(data, "d", int),
                                       _parse_tree_map(k, _require(data, "map", dict)))
    if kind == TreeArrayWitness.kind:
        r = _require(data, "r", int)
        rows = [_parse_json_word(k, y) for y in _require(data, "rows", list)]
        maps: List[Dict[Word, Word]] = [{} for _ in rows]
        for key, image in _require(data, "map", dict).items():
            j_text, sep, address = key.partition("/")
            if not sep or not j_text.isdigit() or int(j_text) >= len(rows):
                raise WitnessFormatError(f"invalid array address {key!r}")
            maps[int(j_text)][_parse_json_word(k, address)] = _parse_json_word(k, image)
        return TreeArrayWitness(k, r, _require(data, "q", int), _require(data, "c1", int),
                                _require(data, "c2", int), tuple(rows), tuple(maps))
    if kind == ProductTreeWitness.kind:
        mapping: Dict[FreeWord, PairWord] = {}
        for address, image in _require(data, "map", dict).items():
            try:
                mapping[FreeWord.parse(k, address)] = PairWord.parse(k, image)
            except (ValueError, AttributeError) as e:
                raise WitnessFormatError(f"invalid product map entry {address!r}: {e}")
        return ProductTreeWitness(k, _require(data, "r", int), _parse_increment(data.get("u"), "u"),
                                  _parse_increment(data.get("v"), "v"), mapping)
    if kind == CartesianProductWitness.kind:
        return CartesianProductWitness(k, _require(data, "r", int), _require(data, "q", int),
                                       _parse_tree_map(k, _require(data, "first", dict)),
                                       _parse_tree_map(k, _require(data, "second", dict)))
    raise WitnessFormatError(f"unknown witness kind {kind!r}")


def witness_from_json(text: str) -> Witness:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise WitnessFormatError(f"invalid JSON: {e}")
    return witness_from_dict(data)


def read_witness(path: str) -> Witness:
    return witness_from_json(_read_text(path))


def _parse_rational(text: str, line: int, source: str) -> Fraction:
    num, sep, den = text.partition("/")
    if not num.lstrip("-").isdigit() or (sep and not den.isdigit()):
        raise FormatParseError(f"invalid rational {text!r}", line, source)
    if sep and int(den) == 0:
        raise FormatParseError(f"zero denominator in {text!r}", line, source)
    return Fraction(int(num), int(den)) if sep else Fraction(int(num))


def parse_markov_text(text: str, source: str = "<string>") -> FiniteMarkovSystem:
    lines = _body_lines(text, source)
    fields = _parse_header(lines[0], MARKOV_MAGIC, ("k", "m"), source)
    k = _header_int(fields, "k", 1, None, source)
    m = _header_int(fields, "m", 1, None, source)
    if len(lines) != 1 + 2 * k:
        raise FormatParseError(f"expected {2 * k} rows after the header, got {len(lines) - 1}",
                               min(len(lines), 2 + 2 * k), source)
    transitions: List[Tuple[int, ...]] = []
    probabilities: List[Tuple[Fraction, ...]] = []
    for letter in range(k):
        for offset, prefix in enumerate(("T", "p")):
            number = 2 + 2 * letter + offset
            label, sep, rest = lines[number - 1].partition(":")
            if not sep or label != f"{prefix}{letter}":
                raise FormatParseError(f"expected a '{prefix}{letter}:' row", number, source)
            values = rest.split()
            if len(values) != m:
                raise FormatParseError(f"expected {m} entries, got {len(values)}", number, source)
            if prefix == "T":
                if not all(v.isdigit() for v in values):
                    raise FormatParseError("transition targets must be state indices", number, source)
                transitions.append(tuple(int(v) for v in values))
            else:
                probabilities.append(tuple(_parse_rational(v, number, source) for v in values))
    return FiniteMarkovSystem(k, m, tuple(transitions), tuple(probabilities))


def load_markov_file(path: str) -> FiniteMarkovSystem:
    logger.debug(f"Reading Markov system {path}")
    return parse_markov_text(_read_text(path), source=path)


def format_markov(sys: FiniteMarkovSystem) -> str:
    lines = [f"{MARKOV_MAGIC} {FORMAT_VERSION} k={sys.k} m={sys.m}"]
    for letter in range(sys.k):
        lines.append(f"T{letter}: " + " ".join(str(s) for s in sys.transitions[letter]))
        lines.append(f"p{letter}: " + " ".join(f"{p.numerator}/{p.denominator}"
                                               for p in sys.probabilities[letter]))
    return "\n".join(lines) + "\n"


def save_markov_file(sys: FiniteMarkovSystem, path: str) -> None:
    _write_text(path, format_markov(sys))
