from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from ..common.exceptions import ValidationError
from .core import Word, parse_word, serialize_word


@dataclass(frozen=True)
class WordFile:
    words: tuple[Word, ...]
    alphabet_size: int
    header: dict[str, str] = field(default_factory=dict)


def _parse_header(line: str) -> dict[str, str]:
    fields: dict[str, str] = {}
    for token in line.lstrip("#").split():
        if "=" in token:
            key, value = token.split("=", 1)
            fields[key.strip()] = value.strip()
    return fields


def _infer_alphabet_size(lines: list[str]) -> int:
    largest = 1
    for line in lines:
        tokens = line.split(",") if "," in line else list(line)
        for token in tokens:
            token = token.strip()
            if not token.isdigit():
                raise ValidationError(f"malformed word line {line!r}")
            largest = max(largest, int(token))
    return largest + 1


def parse_word_lines(text: str, alphabet_size: int | None = None) -> WordFile:
    header: dict[str, str] = {}
    body: list[str] = []
    for raw_line in text.splitlines():
        line = raw_line.strip()
        if not line:
            continue
        if line.startswith("#"):
            header.update(_parse_header(line))
            continue
        body.append(line)

    if alphabet_size is None and "k" in header:
        try:
            alphabet_size = int(header["k"])
        except ValueError as exc:
            raise ValidationError(f"header k must be an integer, got {header['k']!r}") from exc
    if alphabet_size is None:
        alphabet_size = _infer_alphabet_size(body)

    words = tuple(parse_word(line, alphabet_size) for line in body)
    return WordFile(words=words, alphabet_size=alphabet_size, header=header)


def read_word_file(path: Path, alphabet_size: int | None = None) -> WordFile:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read word file '{path}': {exc}") from exc
    return parse_word_lines(text, alphabet_size)


def format_header(fields: dict[str, Any]) -> str:
    parts = []
    for key, value in fields.items():
        if isinstance(value, (list, tuple)):
            value = ",".join(str(item) for item in value)
        parts.append(f"{key}={value}")
    return "# " + " ".join(parts)


def write_word_file(
    path: Path,
    words: Sequence[Word],
    header: dict[str, Any] | None = None,
) -> None:
    """Write one word per line after a ``# key=value`` header.

    The header always carries ``k`` when there are words.
    """
    fields = dict(header or {})
    if words:
        fields.setdefault("k", words[0].alphabet_size)
    lines: list[str] = []
    if fields:
        lines.append(format_header(fields))
    lines.extend(serialize_word(w) for w in words)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as handle:
        handle.write("\n".join(lines))
        handle.write("\n")
