"""
Readers and writers for the interchange formats.

Curve families and graphs travel as JSON with rationals written as
[numerator, denominator] pairs; set families as a small text table; codec
output as raw bytes; wiring diagrams as a line-based text format.
"""

import json
from fractions import Fraction

from ..exceptions import CensusError, FormatError
from ..geometry.curves import CurveFamily, MonotoneCurve, as_rat
from ..geometry.graphs import LabelledGraph
from ..arrangement.wiring import Swap, WiringDiagram
from ..setsystem.codec import CodecOutput
from ..setsystem.family import SetFamily


def rat_to_pair(value):
    value = Fraction(value)
    return [value.numerator, value.denominator]


def dumps_json(payload):
    """Deterministic JSON text with a trailing newline."""
    return json.dumps(payload, indent=2) + '\n'


def loads_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise FormatError(f"invalid JSON: {error}") from error


def family_to_dict(family, version=None):
    """
    Curve-family JSON object.

    Args:
        family (CurveFamily): The family.
        version (str, optional): Package version stored under "version".

    Returns:
        dict: {"strip", "curves"} (and "version" when given).
    """
    payload = {}
    if version is not None:
        payload['version'] = version
    payload['strip'] = None if family.strip is None else [rat_to_pair(v) for v in family.strip]
    payload['curves'] = [
        {'id': curve.id, 'pts': [[rat_to_pair(x), rat_to_pair(y)] for x, y in curve.vertices]}
        for curve in family.curves
    ]
    return payload


def family_from_dict(payload):
    """
    Parse a curve-family JSON object; an extra "version" key is ignored.

    Raises:
        FormatError: If the object does not follow the format.
    """
    if not isinstance(payload, dict) or 'curves' not in payload:
        raise FormatError("curve family JSON needs a 'curves' list")
    try:
        strip = payload.get('strip')
        if strip is not None:
            strip = tuple(as_rat(value) for value in strip)
        curves = [
            MonotoneCurve(
                entry['id'], [(as_rat(x), as_rat(y)) for x, y in entry['pts']]
            )
            for entry in payload['curves']
        ]
        return CurveFamily(tuple(curves), strip)
    except (KeyError, TypeError, ValueError) as error:
        raise FormatError(f"bad curve family: {error}") from error


def dumps_family(family, version=None):
    return dumps_json(family_to_dict(family, version))


def loads_family(text):
    return family_from_dict(loads_json(text))


def graph_to_dict(graph, version=None):
    payload = {'version': version} if version is not None else {}
    payload.update(graph.to_dict())
    return payload


def graph_from_dict(payload):
    """
    Parse graph JSON {"vertices": [...], "edges": [[a, b], ...]}.

    Raises:
        FormatError: If the object does not follow the format.
    """
    try:
        labels = tuple(str(label) for label in payload['vertices'])
        edges = frozenset((str(a), str(b)) for a, b in payload['edges'])
        return LabelledGraph(labels, edges)
    except (KeyError, TypeError, ValueError) as error:
        raise FormatError(f"bad graph: {error}") from error


def _version_line(version):
    return f"# pseudoseg_census {version}\n" if version is not None else ''


def _content_lines(text):
    """Non-blank lines of a text format, with '#' comment lines dropped."""
    stripped = (line.strip() for line in text.splitlines())
    return [line for line in stripped if line and not line.startswith('#')]


def dumps_set_family(family, version=None):
    """SetFamily text: an optional version comment, 'n m', then one 0/1 row per line."""
    lines = [f"{family.n} {family.m}"] + family.to_bit_strings()
    return _version_line(version) + '\n'.join(lines) + '\n'


def loads_set_family(text):
    """
    Parse SetFamily text.

    Raises:
        FormatError: On a bad header, row count or row.
    """
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty set family file")
    header = lines[0].split()
    if len(header) != 2 or not all(part.isdigit() for part in header):
        raise FormatError(f"bad header line {lines[0]!r}; expected 'n m'")
    n, m = (int(part) for part in header)
    rows = lines[1:]
    if len(rows) != m:
        raise FormatError(f"header announces {m} rows, found {len(rows)}")
    for row in rows:
        if len(row) != n:
            raise FormatError(f"row {row!r} does not have {n} characters")
    try:
        return SetFamily.from_bit_strings(rows)
    except CensusError as error:
        raise FormatError(str(error)) from error


def dumps_codec(output):
    """Codec output as bytes: two 64-bit big-endian headers, payload, zero padding."""
    return output.to_bytes()


def loads_codec(data, header_bits=64):
    return CodecOutput.from_bytes(data, header_bits)


def dumps_wiring(diagram, version=None):
    return _version_line(version) + diagram.to_text()


def loads_wiring(text):
    """
    Parse wiring-diagram text: 'm', an optional 'wires a b ...' line, then
    'pos a b' swaps. Wires default to '1'..'m'; '#' lines are comments.

    Raises:
        FormatError: If a line does not parse.
    """
    lines = _content_lines(text)
    if not lines or not lines[0].isdigit():
        raise FormatError("wiring diagram must start with the wire count")
    m = int(lines[0])
    body = lines[1:]
    wires = tuple(str(label) for label in range(1, m + 1))
    if body and body[0].startswith('wires'):
        wires = tuple(body[0].split()[1:])
        body = body[1:]
    if len(wires) != m:
        raise FormatError(f"expected {m} wire labels, got {len(wires)}")

    swaps = []
    for line in body:
        parts = line.split()
        if len(parts) != 3 or not parts[0].isdigit():
            raise FormatError(f"bad swap line {line!r}; expected 'pos a b'")
        swaps.append(Swap(int(parts[0]), (parts[1], parts[2])))
    try:
        return WiringDiagram(wires, tuple(swaps))
    except CensusError as error:
        raise FormatError(str(error)) from error


def dumps_csv(table, version=None):
    """
    CSV text of a DataFrame, preceded by a '# pseudoseg_census <version>' line.
    """
    return _version_line(version) + table.to_csv(index=False, lineterminator='\n')
