"""Reading and writing dataset files in the two supported layouts.

CSV-rows: one series per line, comma-separated decimals, every line the
same field count.  TS-style: '@'-prefixed header lines (kept verbatim),
then one series per line with a class label after a ':'; labels are
metadata and pass through augmentation unmodified.  Format is detected
from the first non-blank line ('@' means TS) and can be forced.

Numbers are written in shortest round-trip decimal form, so writing and
re-reading a dataset is lossless.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .core import Batch
from .errors import InvalidInputError

FORMATS = ("csv", "ts")


@dataclass(frozen=True)
class DatasetFile:
    batch: Batch
    format: str                            # "csv" | "ts"
    header_lines: tuple[str, ...] = ()     # ts only, kept verbatim
    labels: Optional[tuple[str, ...]] = None  # ts only, one per series

    def __post_init__(self) -> None:
        if self.format not in FORMATS:
            raise InvalidInputError(
                f"format must be one of {FORMATS}, got {self.format!r}"
            )
        if self.labels is not None and len(self.labels) != self.batch.n:
            raise InvalidInputError(
                f"{len(self.labels)} labels for {self.batch.n} series"
            )
        if self.format == "csv" and (self.header_lines or self.labels is not None):
            raise InvalidInputError("csv datasets carry no header lines or labels")

    def with_batch(self, batch: Batch) -> "DatasetFile":
        """Carry format and labels over to an augmented batch.

        A batch grown to a whole multiple of N (repeat) replicates each
        label consecutively, mirroring how repeat lays out its output.
        """
        labels = self.labels
        if labels is not None and batch.n != self.batch.n:
            if batch.n % self.batch.n != 0:
                raise InvalidInputError(
                    f"cannot carry {len(labels)} labels onto {batch.n} series"
                )
            r = batch.n // self.batch.n
            labels = tuple(lab for lab in labels for _ in range(r))
        return replace(self, batch=batch, labels=labels)


def _parse_fields(fields, where: str):
    row = []
    for f in fields:
        try:
            row.append(float(f))
        except ValueError:
            raise InvalidInputError(f"{where}: not a number: {f.strip()!r}") from None
    return row


def parse_dataset(text: str, fmt: Optional[str] = None) -> DatasetFile:
    lines = text.splitlines()
    stripped = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not stripped:
        raise InvalidInputError("dataset file is empty")
    if fmt is None:
        fmt = "ts" if stripped[0][1].startswith("@") else "csv"
    if fmt not in FORMATS:
        raise InvalidInputError(f"format must be one of {FORMATS}, got {fmt!r}")

    headers: list[str] = []
    rows: list[list[float]] = []
    labels: list[str] = []
    width: Optional[int] = None
    width_line = 0
    for lineno, line in stripped:
        if fmt == "ts" and line.startswith("@"):
            if rows:
                raise InvalidInputError(
                    f"line {lineno}: header after first data row"
                )
            headers.append(line)
            continue
        where = f"line {lineno}"
        if fmt == "ts":
            if ":" not in line:
                raise InvalidInputError(f"{where}: missing ':label' separator")
            values_part, label = line.rsplit(":", 1)
            labels.append(label.strip())
        else:
            values_part = line
        row = _parse_fields(values_part.split(","), where)
        if width is None:
            width, width_line = len(row), lineno
        elif len(row) != width:
            raise InvalidInputError(
                f"{where}: {len(row)} fields, but line {width_line} has {width}"
            )
        rows.append(row)
    if not rows:
        raise InvalidInputError("dataset file has headers but no data rows")
    return DatasetFile(
        batch=Batch.from_sequences(rows),
        format=fmt,
        header_lines=tuple(headers),
        labels=tuple(labels) if fmt == "ts" else None,
    )


def read_dataset(path, fmt: Optional[str] = None) -> DatasetFile:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_dataset(text, fmt)
    except InvalidInputError as exc:
        raise InvalidInputError(f"{path}: {exc}") from None


def format_dataset(ds: DatasetFile) -> str:
    out = []
    if ds.format == "ts":
        out.extend(ds.header_lines)
        labels = ds.labels if ds.labels is not None else ("",) * ds.batch.n
        for row, label in zip(ds.batch.values, labels):
            out.append(",".join(repr(float(v)) for v in row) + f":{label}")
    else:
        for row in ds.batch.values:
            out.append(",".join(repr(float(v)) for v in row))
    return "\n".join(out) + "\n"


def write_dataset(path, ds: DatasetFile) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_dataset(ds))
