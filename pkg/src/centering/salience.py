"""Utterance structure and the language-parameterized forward-center ranking.

Everything language-specific lives in one LanguageConfig value: the ordering
of salience statuses used to rank forward centers, the lexicon of
empathy-loaded verbs, and whether zero arguments may be promoted to topic.
The shipped Japanese configuration ranks
topic > empathy > subj > obj2 > obj > adj; the English one is the same order
minus topic and empathy.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Mapping, Optional, Union

from .errors import ParseError
from .model import (
    Entity,
    GrammaticalRole,
    Marker,
    SalienceStatus,
    status_for_role,
)


class EmpathyRule(enum.Enum):
    """Which argument position an empathy-loaded verb points at."""

    SUBJ = "SUBJ"
    OBJ2_ELSE_OBJ = "OBJ2_ELSE_OBJ"


# An abstract empathy locus: either a concrete role (from explicit annotation)
# or a lexicon rule still to be resolved against the utterance's slots.
EmpathyLocus = Union[GrammaticalRole, EmpathyRule]


@dataclass(frozen=True)
class Predicate:
    """A clause predicate: main lemma, verbal suffixes in attachment order,
    and an optional explicitly annotated empathy locus that overrides the
    lexicon."""

    lemma: str
    suffixes: tuple[str, ...] = ()
    explicit_empathy: Optional[GrammaticalRole] = None


@dataclass(frozen=True)
class Overt:
    entity: Entity
    marker: Marker = Marker.NONE


@dataclass(frozen=True)
class Zero:
    zid: str


@dataclass(frozen=True)
class ArgumentSlot:
    """One argument position, realized either overtly or as a zero pronoun."""

    role: GrammaticalRole
    realization: Union[Overt, Zero]

    @property
    def is_zero(self) -> bool:
        return isinstance(self.realization, Zero)


@dataclass(frozen=True)
class Utterance:
    """One clause unit: a predicate plus argument slots in surface order."""

    uid: str
    predicate: Predicate
    slots: tuple[ArgumentSlot, ...] = ()

    def __post_init__(self):
        roles = [s.role for s in self.slots if s.role is not GrammaticalRole.ADJ]
        if len(roles) != len(set(roles)):
            raise ValueError(f"utterance {self.uid!r}: duplicate argument role")
        zids = [s.realization.zid for s in self.slots if s.is_zero]
        if len(zids) != len(set(zids)):
            raise ValueError(f"utterance {self.uid!r}: duplicate zero id")
        if len(self._wa_slots()) > 1:
            raise ValueError(f"utterance {self.uid!r}: more than one wa-marked slot")

    def _wa_slots(self):
        return [
            s
            for s in self.slots
            if not s.is_zero and s.realization.marker is Marker.WA
        ]

    @property
    def zero_slots(self) -> tuple[ArgumentSlot, ...]:
        return tuple(s for s in self.slots if s.is_zero)

    @property
    def has_overt_topic(self) -> bool:
        return bool(self._wa_slots())

    def slot_for_role(self, role: GrammaticalRole) -> Optional[ArgumentSlot]:
        for slot in self.slots:
            if slot.role is role:
                return slot
        return None


@dataclass(frozen=True)
class CfList:
    """Forward centers: the entities realized in an utterance, most salient
    first.

    Each entry pairs an entity with the set of statuses it accrued across all
    slots realizing it. The head of the list is the preferred center (Cp).
    """

    entries: tuple[tuple[Entity, frozenset[SalienceStatus]], ...] = ()

    @property
    def entities(self) -> tuple[Entity, ...]:
        return tuple(e for e, _ in self.entries)

    @property
    def cp(self) -> Optional[Entity]:
        return self.entries[0][0] if self.entries else None

    def statuses(self, entity: Entity) -> frozenset[SalienceStatus]:
        for e, statuses in self.entries:
            if e == entity:
                return statuses
        raise KeyError(entity)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __contains__(self, entity: Entity) -> bool:
        return any(e == entity for e, _ in self.entries)


@dataclass(frozen=True)
class LanguageConfig:
    """The single language-specific parameter of the resolver."""

    status_order: tuple[SalienceStatus, ...]
    empathy_lexicon: Mapping[str, EmpathyRule] = field(default_factory=dict)
    zero_topic_enabled: bool = False

    def __post_init__(self):
        if len(set(self.status_order)) != len(self.status_order):
            raise ValueError("status_order repeats a status")
        required = {SalienceStatus.SUBJ, SalienceStatus.OBJ2, SalienceStatus.OBJ}
        missing = required - set(self.status_order)
        if missing:
            names = ", ".join(sorted(s.name for s in missing))
            raise ValueError(f"status_order is missing {names}")

    @classmethod
    def japanese(cls) -> "LanguageConfig":
        return cls(
            status_order=(
                SalienceStatus.TOPIC,
                SalienceStatus.EMPATHY,
                SalienceStatus.SUBJ,
                SalienceStatus.OBJ2,
                SalienceStatus.OBJ,
                SalienceStatus.ADJ,
            ),
            empathy_lexicon={
                "yaru": EmpathyRule.SUBJ,
                "iku": EmpathyRule.SUBJ,
                "kureru": EmpathyRule.OBJ2_ELSE_OBJ,
                "kuru": EmpathyRule.OBJ2_ELSE_OBJ,
            },
            zero_topic_enabled=True,
        )

    @classmethod
    def english(cls) -> "LanguageConfig":
        return cls(
            status_order=(
                SalienceStatus.SUBJ,
                SalienceStatus.OBJ2,
                SalienceStatus.OBJ,
                SalienceStatus.ADJ,
            ),
            empathy_lexicon={},
            zero_topic_enabled=False,
        )

    def with_lexicon(self, extra: Mapping[str, EmpathyRule]) -> "LanguageConfig":
        """A copy whose empathy lexicon is extended (and overridden) by `extra`."""
        merged = dict(self.empathy_lexicon)
        merged.update(extra)
        return replace(self, empathy_lexicon=merged)


def empathy_locus(predicate: Predicate, config: LanguageConfig) -> Optional[EmpathyLocus]:
    """The abstract empathy locus signalled by a predicate, if any.

    Explicit annotation wins outright. Otherwise the suffixes are scanned from
    the outermost (last attached) inward, then the main lemma, and the first
    lexicon hit supplies the rule; a complex predicate inherits the locus of
    its suffixed verb. Resolution of the rule against actual slots happens in
    salience_statuses.
    """
    if predicate.explicit_empathy is not None:
        return predicate.explicit_empathy
    for suffix in reversed(predicate.suffixes):
        if suffix in config.empathy_lexicon:
            return config.empathy_lexicon[suffix]
    return config.empathy_lexicon.get(predicate.lemma)


def _empathy_slot(utterance: Utterance, locus: Optional[EmpathyLocus]) -> Optional[ArgumentSlot]:
    """The slot an abstract locus binds to in this utterance, if present."""
    if locus is None:
        return None
    if isinstance(locus, GrammaticalRole):
        return utterance.slot_for_role(locus)
    if locus is EmpathyRule.SUBJ:
        return utterance.slot_for_role(GrammaticalRole.SUBJ)
    # OBJ2_ELSE_OBJ: prefer the obj2 slot, fall back to obj.
    return utterance.slot_for_role(GrammaticalRole.OBJ2) or utterance.slot_for_role(
        GrammaticalRole.OBJ
    )


def salience_statuses(
    slot: ArgumentSlot,
    utterance: Utterance,
    config: LanguageConfig,
    locus: Optional[EmpathyLocus] = None,
    zero_topic_grant: Optional[str] = None,
) -> frozenset[SalienceStatus]:
    """The status set of one slot of `utterance`.

    The slot always carries its own role. It additionally carries TOPIC when
    wa-marked (or when it is the zero granted topic status), and EMPATHY when
    it is the slot the empathy locus binds to.
    """
    statuses = {status_for_role(slot.role)}
    if slot.is_zero:
        if zero_topic_grant is not None and slot.realization.zid == zero_topic_grant:
            statuses.add(SalienceStatus.TOPIC)
    elif slot.realization.marker is Marker.WA:
        statuses.add(SalienceStatus.TOPIC)
    if slot is _empathy_slot(utterance, locus):
        statuses.add(SalienceStatus.EMPATHY)
    return frozenset(statuses)


def rank_cf(
    utterance: Utterance,
    assignment: Mapping[str, Entity],
    config: LanguageConfig,
    locus: Optional[EmpathyLocus] = None,
    zero_topic_grant: Optional[str] = None,
) -> CfList:
    """Build the forward-center list of an utterance under an interpretation.

    Every slot contributes its entity (overt, or looked up in `assignment`
    for zeros). An entity realized in several slots appears once with the
    union of its statuses and is ranked by the highest of them under
    config.status_order; ties are broken by the surface position of the slot
    that contributed that highest status. Statuses absent from the order
    never outrank ones that are present.
    """
    order_index = {status: i for i, status in enumerate(config.status_order)}
    unranked = len(config.status_order)
    merged: dict[Entity, set[SalienceStatus]] = {}
    sort_key: dict[Entity, tuple[int, int]] = {}
    for position, slot in enumerate(utterance.slots):
        if slot.is_zero:
            zid = slot.realization.zid
            if zid not in assignment:
                raise ValueError(
                    f"incomplete assignment: zero {zid!r} in utterance "
                    f"{utterance.uid!r} has no antecedent"
                )
            entity = assignment[zid]
        else:
            entity = slot.realization.entity
        statuses = salience_statuses(slot, utterance, config, locus, zero_topic_grant)
        rank = min(order_index.get(s, unranked) for s in statuses)
        key = (rank, position)
        merged.setdefault(entity, set()).update(statuses)
        if entity not in sort_key or key < sort_key[entity]:
            sort_key[entity] = key
    ordered = sorted(merged, key=sort_key.__getitem__)
    return CfList(tuple((e, frozenset(merged[e])) for e in ordered))


def load_empathy_lexicon(path: Path | str) -> dict[str, EmpathyRule]:
    """Read an empathy lexicon file.

    One entry per line: `lemma<TAB>SUBJ|OBJ2_ELSE_OBJ`. UTF-8; `#` starts a
    comment; blank lines are ignored.
    """
    entries: dict[str, EmpathyRule] = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError(
                "expected 'lemma<TAB>SUBJ|OBJ2_ELSE_OBJ'", line=lineno
            )
        lemma, rule = parts[0].strip(), parts[1].strip()
        if not lemma:
            raise ParseError("empty lemma", line=lineno)
        try:
            entries[lemma] = EmpathyRule(rule)
        except ValueError:
            raise ParseError(f"unknown empathy rule {rule!r}", line=lineno) from None
    return entries


def load_language_config(path: Path | str) -> LanguageConfig:
    """Read a language configuration file.

    Line-oriented UTF-8, `#` comments. Directives:

        ORDER <STATUS> <STATUS> ...   salience ranking, highest first (required)
        ZERO_TOPIC on|off             allow topic grants to zeros (default off)
        LEXICON <lemma> <RULE>        one empathy lexicon entry (repeatable)
    """
    order: Optional[tuple[SalienceStatus, ...]] = None
    zero_topic = False
    lexicon: dict[str, EmpathyRule] = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        directive = tokens[0]
        if directive == "ORDER":
            try:
                order = tuple(SalienceStatus(t) for t in tokens[1:])
            except ValueError:
                raise ParseError("unknown status in ORDER", line=lineno) from None
        elif directive == "ZERO_TOPIC":
            if len(tokens) != 2 or tokens[1] not in ("on", "off"):
                raise ParseError("expected 'ZERO_TOPIC on|off'", line=lineno)
            zero_topic = tokens[1] == "on"
        elif directive == "LEXICON":
            if len(tokens) != 3:
                raise ParseError("expected 'LEXICON lemma RULE'", line=lineno)
            try:
                lexicon[tokens[1]] = EmpathyRule(tokens[2])
            except ValueError:
                raise ParseError(
                    f"unknown empathy rule {tokens[2]!r}", line=lineno
                ) from None
        else:
            raise ParseError(f"unknown directive {directive!r}", line=lineno)
    if order is None:
        raise ParseError("missing ORDER directive")
    try:
        return LanguageConfig(
            status_order=order, empathy_lexicon=lexicon, zero_topic_enabled=zero_topic
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from None
