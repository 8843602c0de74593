"""Structured vertex labels with a total order and a text form.

Text syntax::

    v7          generic vertex with role "v7"
    x3@2        gadget vertex x3 of gadget 2
    ^x          apex vertex x
    x3@2/A      any of the above on prism side A (or B)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering

GENERIC = "generic"
GADGET = "gadget"
APEX = "apex"

_NS_RANK = {GADGET: 0, APEX: 1, GENERIC: 2}
COPIES = ("A", "B")

_ROLE_RE = re.compile(r"^[A-Za-z0-9_.*+\-]+$")
_SPLIT_RE = re.compile(r"(\d+)")


def _natural_key(role: str) -> tuple:
    parts = _SPLIT_RE.split(role)
    return tuple((0, int(p), "") if p.isdigit() else (1, 0, p) for p in parts if p != "")


@total_ordering
@dataclass(frozen=True)
class VertexId:
    namespace: str
    role: str
    gadget_index: int | None = None
    copy: str | None = None

    def __post_init__(self) -> None:
        if self.namespace not in _NS_RANK:
            raise ValueError(f"unknown namespace {self.namespace!r}")
        if not _ROLE_RE.match(self.role):
            raise ValueError(f"bad role {self.role!r}")
        if self.namespace == GADGET:
            if self.gadget_index is None or self.gadget_index < 1:
                raise ValueError("gadget vertices need gadget_index >= 1")
        elif self.gadget_index is not None:
            raise ValueError(f"{self.namespace} vertices carry no gadget_index")
        if self.copy is not None and self.copy not in COPIES:
            raise ValueError(f"copy must be one of {COPIES}, got {self.copy!r}")

    def sort_key(self) -> tuple:
        return (
            self.gadget_index or 0,
            _NS_RANK[self.namespace],
            _natural_key(self.role),
            self.copy or "",
        )

    def __lt__(self, other: VertexId) -> bool:
        if not isinstance(other, VertexId):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    @property
    def base(self) -> VertexId:
        """The same vertex with the prism side stripped."""
        if self.copy is None:
            return self
        return VertexId(self.namespace, self.role, self.gadget_index)

    def on(self, copy: str) -> VertexId:
        return VertexId(self.namespace, self.role, self.gadget_index, copy)

    def __str__(self) -> str:
        if self.namespace == GADGET:
            s = f"{self.role}@{self.gadget_index}"
        elif self.namespace == APEX:
            s = f"^{self.role}"
        else:
            s = self.role
        if self.copy is not None:
            s += "/" + self.copy
        return s

    def __repr__(self) -> str:
        return f"V({self})"

    @classmethod
    def parse(cls, text: str) -> VertexId:
        text = text.strip()
        copy = None
        if "/" in text:
            text, copy = text.rsplit("/", 1)
        if text.startswith("^"):
            return cls(APEX, text[1:], None, copy)
        if "@" in text:
            role, idx = text.rsplit("@", 1)
            if not idx.isdigit():
                raise ValueError(f"bad gadget index in {text!r}")
            return cls(GADGET, role, int(idx), copy)
        return cls(GENERIC, text, None, copy)


def gv(role: str, i: int) -> VertexId:
    """Gadget vertex ``role`` of gadget ``i``."""
    return VertexId(GADGET, role, i)


def v(name: str | int) -> VertexId:
    return VertexId(GENERIC, str(name))


def apex(name: str) -> VertexId:
    return VertexId(APEX, name)
