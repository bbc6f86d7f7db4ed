"""Minimal multi-record FASTA reading and writing."""
from __future__ import annotations

import io
import logging
from dataclasses import dataclass
from importlib import resources
from os import PathLike
from typing import Iterable, TextIO

from .alphabet import Alphabet, SequenceInputError

log = logging.getLogger(__name__)


class FastaError(SequenceInputError):
    pass


@dataclass(frozen=True)
class FastaRecord:
    id: str
    sequence: str
    description: str = ""

    @property
    def header(self) -> str:
        return f"{self.id} {self.description}".rstrip()


def parse_fasta(source: str | TextIO | Iterable[str], alphabet: Alphabet | str | None = None,
                skip_invalid: bool = False, allow_empty: bool = False) -> list[FastaRecord]:
    """Parse FASTA text into records, upper-casing sequence bodies.

    ``source`` is either the text itself or an iterable of lines (an open
    file works). With an ``alphabet``, records using other symbols raise
    :class:`FastaError` unless ``skip_invalid`` drops them.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    if isinstance(alphabet, str):
        alphabet = Alphabet.from_string(alphabet.upper())

    raw: list[tuple[str, str, list[str]]] = []
    for lineno, line in enumerate(source, 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith(">"):
            head = line[1:].split(None, 1)
            if not head:
                raise FastaError(f"line {lineno}: empty FASTA header")
            raw.append((head[0], head[1] if len(head) > 1 else "", []))
        elif not raw:
            raise FastaError(f"line {lineno}: sequence data before the first '>' header")
        else:
            raw[-1][2].append("".join(line.split()).upper())

    records, seen = [], set()
    for rid, desc, chunks in raw:
        if rid in seen:
            raise FastaError(f"duplicate record id {rid!r}")
        seen.add(rid)
        seq = "".join(chunks)
        if not seq and not allow_empty:
            raise FastaError(f"record {rid!r} has an empty sequence")
        if alphabet is not None and not alphabet.covers(seq):
            if skip_invalid:
                log.warning("skipping record %r: symbols outside alphabet %s", rid, alphabet)
                continue
            bad = "".join(sorted(set(seq).difference(alphabet)))
            raise FastaError(f"record {rid!r} has symbols outside alphabet {str(alphabet)!r}: {bad!r}")
        records.append(FastaRecord(rid, seq, desc))
    return records


def read_fasta(path: str | PathLike, **kwargs) -> list[FastaRecord]:
    with open(path) as fh:
        return parse_fasta(fh, **kwargs)


def format_fasta(records: Iterable[FastaRecord], width: int = 60) -> str:
    out = []
    for r in records:
        out.append(f">{r.header}\n")
        for i in range(0, len(r.sequence), width):
            out.append(r.sequence[i:i + width] + "\n")
    return "".join(out)


def load_beta_globin() -> list[FastaRecord]:
    """First-exon coding sequences of beta-globin genes from 11 species."""
    text = resources.files("mawdist").joinpath("data/beta_globin_exon1.fasta").read_text()
    return parse_fasta(text)
