"""Deterministic text formatting shared by the CLI and the file writers.

Numeric columns are lowercase scientific with 9 significant digits and
files use '\\n' line endings, so identical runs produce byte-identical
output.  JSON output encodes the same quantized values as the CSV, so the
two formats round-trip to each other exactly.
"""

import json


def sci9(x) -> str:
    """Lowercase scientific notation, 9 significant digits."""
    return f"{float(x):.8e}"


def quantize(x) -> float:
    """The float value actually encoded by sci9(x)."""
    return float(sci9(x))


def write_csv(stream, header, rows) -> None:
    """Write a CSV with '\\n' endings; cells are written as given."""
    stream.write(",".join(header) + "\n")
    for row in rows:
        stream.write(",".join(row) + "\n")


def write_json(stream, payload) -> None:
    stream.write(json.dumps(payload, indent=2) + "\n")
