"""Corpus files: named link diagrams with optional expected values."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from .linkdiag import DiagramError, LinkDiagram, parse_link

_EXPECT = re.compile(r"#\s*expect\s+(\S+)\s+(\S+)\s*:\s*(.+?)\s*$")


@dataclass
class CorpusEntry:
    name: str
    source: str
    expected: dict[str, str] = field(default_factory=dict)

    def diagram(self) -> LinkDiagram:
        d = parse_link(self.source)
        return LinkDiagram(d.crossings, d.unknot_count, self.name)


def parse_corpus(text: str) -> list[CorpusEntry]:
    """Lines ``name: PD[...]`` / ``name: BR[...]``; comments may carry
    ``# expect <name> <invariant>: <value>`` directives."""
    entries: dict[str, CorpusEntry] = {}
    expects: list[tuple[str, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _EXPECT.match(line)
            if m:
                expects.append((m.group(1), m.group(2), m.group(3)))
            continue
        if ":" not in line:
            raise DiagramError(f"line {lineno}: expected 'name: source'")
        name, source = line.split(":", 1)
        name, source = name.strip(), source.strip()
        if not name or not source:
            raise DiagramError(f"line {lineno}: empty name or source")
        if name in entries:
            raise DiagramError(f"line {lineno}: duplicate corpus name {name!r}")
        entries[name] = CorpusEntry(name, source)
    for name, key, value in expects:
        if name not in entries:
            raise DiagramError(f"expect directive for unknown entry {name!r}")
        entries[name].expected[key] = value
    return list(entries.values())


def load_corpus_file(path: str) -> list[CorpusEntry]:
    with open(path, encoding="utf-8") as fh:
        return parse_corpus(fh.read())


def bundled_corpus() -> list[CorpusEntry]:
    text = resources.files("rootchi").joinpath("data/corpus.txt").read_text("utf-8")
    return parse_corpus(text)


def bundled_entry(name: str) -> CorpusEntry:
    for e in bundled_corpus():
        if e.name == name:
            return e
    raise KeyError(name)
