"""Text grammar for command-line values and the output record format.

Compositions are written ``1+2+1``, binary partitions ``16,4,4,1`` (or
``m=[5,0,4,0,1]`` on input), RP codes deepest level first with ``0`` as the
empty mark (``A0B0C``).  Every output value is a :class:`Record`, printed
either as plain text or as one JSON object per line.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any, Dict, Sequence

from .core_trees import EMPTY
from .errors import DomainError
from .rp_compositions import BinaryPartition
from .rp_words import RPCode

KINDS = ("word", "code", "composition", "partition", "count", "pair", "check", "tree", "verdict")


def parse_composition(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(p) for p in text.split("+"))
    except ValueError:
        raise DomainError(f"bad composition {text!r}; expected parts like 1+2+1") from None
    if any(p < 1 for p in parts):
        raise DomainError(f"composition parts must be positive: {text!r}")
    return parts


def format_composition(parts: Sequence[int]) -> str:
    return "+".join(str(p) for p in parts)


_MULT_FORM = re.compile(r"^m=\[\s*(.*?)\s*\]$")


def parse_partition(text: str) -> BinaryPartition:
    """Parse ``16,4,4,1`` or ``m=[5,0,4,0,1]``."""
    text = text.strip()
    match = _MULT_FORM.match(text)
    try:
        if match:
            body = match.group(1)
            mult = tuple(int(x) for x in body.split(",")) if body else ()
            return BinaryPartition(mult)
        parts = tuple(int(p) for p in text.split(",")) if text else ()
    except ValueError:
        raise DomainError(f"bad partition {text!r}") from None
    if list(parts) != sorted(parts, reverse=True):
        raise DomainError(f"partition parts must be listed in descending order: {text!r}")
    return BinaryPartition.from_parts(parts)


def format_partition(partition: BinaryPartition) -> str:
    return ",".join(str(p) for p in partition.parts)


def parse_code(text: str, empty_mark: str = "0") -> RPCode:
    """Parse a code written deepest level first, one character per level."""
    levels = [EMPTY if ch == empty_mark else ch for ch in reversed(text)]
    if levels and levels[-1] is EMPTY:
        raise DomainError(f"code {text!r} must start with a letter, not the empty mark")
    return RPCode.from_levels(levels)


def format_code(code: RPCode, empty_mark: str = "0") -> str:
    out = []
    for label in reversed(code.levels):
        if label is EMPTY:
            out.append(empty_mark)
        else:
            label = str(label)
            if label == empty_mark or len(label) != 1:
                raise DomainError(
                    f"letter {label!r} cannot be written in a code using "
                    f"{empty_mark!r} as the empty mark; pick another --empty-mark"
                )
            out.append(label)
    return "".join(out)


@dataclass
class Record:
    kind: str
    data: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown record kind {self.kind!r}")

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind, **self.data}, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, line: str) -> "Record":
        obj = json.loads(line)
        kind = obj.pop("kind")
        return cls(kind, obj)

    def to_text(self) -> str:
        d = self.data
        if self.kind == "word":
            return d["word"]
        if self.kind == "code":
            return d["code"]
        if self.kind == "composition":
            return format_composition(d["parts"])
        if self.kind == "partition":
            return ",".join(str(p) for p in d["parts"])
        if self.kind == "count":
            return str(d["value"])
        if self.kind == "pair":
            return d["output"]
        if self.kind == "check":
            return "true" if d["holds"] else "false"
        if self.kind == "tree":
            return d["tree"]
        status = "PASS" if d["passed"] else "FAIL"
        line = f"{status} {d['suite']}: {d['detail']}"
        if d.get("counterexample") is not None:
            line += f"; counterexample: {d['counterexample']}"
        return line

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "structured" else self.to_text()


def word_record(word: str) -> Record:
    return Record("word", {"word": word})


def composition_record(parts: Sequence[int]) -> Record:
    return Record("composition", {"n": sum(parts), "parts": list(parts)})


def partition_record(partition: BinaryPartition) -> Record:
    return Record(
        "partition",
        {
            "n": partition.n,
            "parts": list(partition.parts),
            "multiplicities": list(partition.multiplicities),
        },
    )


def count_record(subject: str, value: int, **extra) -> Record:
    return Record("count", {"subject": subject, "value": value, **extra})


def check_record(test: str, subject, holds: bool) -> Record:
    return Record("check", {"test": test, "subject": subject, "holds": holds})


def pair_record(before, after) -> Record:
    return Record("pair", {"input": before, "output": after, "fixed": before == after})


def verdict_record(suite: str, passed: bool, detail: str, counterexample=None) -> Record:
    return Record(
        "verdict",
        {"suite": suite, "passed": passed, "detail": detail, "counterexample": counterexample},
    )
