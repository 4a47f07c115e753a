"""Trace events emitted while the finder mutates its working graph.

Sinks follow the observer pattern: a Tracer notifies every attached
observer of each event in emission order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TextIO

from ..exceptions import ParseError


class TraceKind(Enum):
    EDGE_DELETED = "delete-edge"
    VERTEX_DELETED = "delete-vertex"
    CONTRACTED = "contract"
    RECURSED = "recurse"
    FOUND = "found"


@dataclass(frozen=True)
class TraceEvent:
    kind: TraceKind
    payload: tuple[int, ...]

    def to_line(self) -> str:
        return " ".join([self.kind.value, *map(str, self.payload)])

    @classmethod
    def from_line(cls, line: str) -> TraceEvent:
        try:
            word, *values = line.split()
            return cls(TraceKind(word), tuple(int(value) for value in values))
        except ValueError as error:
            raise ParseError(f"bad trace line: {line!r}") from error


class TraceObserver:
    """Trace observer class."""

    def update(self, event: TraceEvent) -> None:
        """Reacts to an event from the tracer

        Args:
            event (TraceEvent): The emitted event
        """
        raise NotImplementedError


class Tracer:
    def __init__(self) -> None:
        self._observers: list[TraceObserver] = []

    def attach(self, observer: TraceObserver) -> None:
        """Attach an observer

        Args:
            observer (TraceObserver): The observer to attach
        """
        self._observers.append(observer)

    def notify(self, kind: TraceKind, *payload: int) -> None:
        """Notify all attached observers."""
        event = TraceEvent(kind, payload)
        for observer in self._observers:
            observer.update(event)


class TraceRecorder(TraceObserver):
    def __init__(self) -> None:
        self.events: list[TraceEvent] = []

    def update(self, event: TraceEvent) -> None:
        self.events.append(event)


class TraceFileWriter(TraceObserver):
    def __init__(self, stream: TextIO) -> None:
        self.stream = stream

    def update(self, event: TraceEvent) -> None:
        self.stream.write(event.to_line() + "\n")
