"""Core vocabulary: discourse entities, grammatical roles, salience statuses,
case markers, transition types, and the backward-looking center."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional


@dataclass(frozen=True, order=True)
class Entity:
    """A semantic individual under discussion, identified by a symbol.

    Identity is purely symbolic and case-sensitive: two entities are the same
    iff their ids are string-equal.
    """

    id: str

    def __str__(self) -> str:
        return self.id


class GrammaticalRole(enum.Enum):
    """Argument function of a slot; ADJ covers non-argument adjuncts."""

    SUBJ = "SUBJ"
    OBJ2 = "OBJ2"
    OBJ = "OBJ"
    ADJ = "ADJ"

    @property
    def rank(self) -> int:
        """Position in the argument prominence order SUBJ > OBJ2 > OBJ > ADJ."""
        return _ROLE_RANK[self]


_ROLE_RANK = {role: i for i, role in enumerate(GrammaticalRole)}


class SalienceStatus(enum.Enum):
    """One way an argument can be prominent.

    A realized argument carries a set of these (e.g. topic and subject at
    once); ranking always uses the highest one under the active language
    configuration.
    """

    TOPIC = "TOPIC"
    EMPATHY = "EMPATHY"
    SUBJ = "SUBJ"
    OBJ2 = "OBJ2"
    OBJ = "OBJ"
    ADJ = "ADJ"

    @property
    def display(self) -> str:
        return self.name.lower()


_STATUS_CANON = {status: i for i, status in enumerate(SalienceStatus)}


def status_for_role(role: GrammaticalRole) -> SalienceStatus:
    return SalienceStatus[role.name]


def canonical_statuses(statuses: Iterable[SalienceStatus]) -> tuple[SalienceStatus, ...]:
    """Fixed display order for a status set, independent of any config."""
    return tuple(sorted(statuses, key=_STATUS_CANON.__getitem__))


class Marker(enum.Enum):
    """Morphological case marker on an overt argument; NONE when unmarked."""

    WA = "wa"
    GA = "ga"
    O = "o"
    NI = "ni"
    NONE = "-"


class Transition(enum.Enum):
    """Inter-utterance transition type, ordered by coherence preference."""

    CONTINUE = "CONTINUE"
    RETAIN = "RETAIN"
    SHIFT_1 = "SHIFT_1"
    SHIFT = "SHIFT"

    @property
    def preference(self) -> int:
        """Higher is more preferred: CONTINUE > RETAIN > SHIFT_1 > SHIFT."""
        return _TRANSITION_PREFERENCE[self]


_TRANSITION_PREFERENCE = {
    Transition.CONTINUE: 3,
    Transition.RETAIN: 2,
    Transition.SHIFT_1: 1,
    Transition.SHIFT: 0,
}


def compare_transitions(a: Transition, b: Transition) -> int:
    """Three-way preference comparison: positive iff `a` is preferred to `b`."""
    return (a.preference > b.preference) - (a.preference < b.preference)


@dataclass(frozen=True)
class Cb:
    """The backward-looking center of an utterance.

    `entity` is None while the center is not yet established, which happens
    only at the start of a discourse segment (or after a full break).
    """

    entity: Optional[Entity] = None

    @property
    def established(self) -> bool:
        return self.entity is not None

    def __str__(self) -> str:
        return self.entity.id if self.entity is not None else "?"


UNESTABLISHED = Cb(None)
