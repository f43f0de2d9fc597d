"""The line-oriented annotated-discourse format, and result serialization.

Grammar (UTF-8, `#` starts a comment, blank lines ignored):

    discourse := "DISCOURSE" name NL [context] utterance+
    context   := "CONTEXT" "CB=" entity ["CF=" entity ("," entity)*] NL
    utterance := "U" uid NL predline argline*
    predline  := INDENT "PRED" lemma ("+" suffix)* ["EMPATHY=" role] NL
    argline   := INDENT "ARG" role (marker entity | "ZERO" zid) NL
    role      := "SUBJ" | "OBJ2" | "OBJ" | "ADJ"
    marker    := "wa" | "ga" | "o" | "ni" | "-"

Top-level lines must not be indented; PRED/ARG lines must be. Entities are
declared implicitly by first mention. Embedded clauses are written as
separate `U` blocks in resolution order (matrix before complement).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ParseError
from .model import Entity, GrammaticalRole, Marker, canonical_statuses
from .salience import ArgumentSlot, Overt, Predicate, Utterance, Zero
from .engine import Interpretation, ResolutionResult


@dataclass(frozen=True)
class Context:
    """Prior-discussion declaration: the established center and, optionally,
    an explicit forward list for the virtual preceding utterance."""

    cb: Entity
    cf: Optional[tuple[Entity, ...]] = None


@dataclass(frozen=True)
class Discourse:
    name: str
    context: Optional[Context]
    units: tuple[Utterance, ...]


_ROLES = {r.value: r for r in GrammaticalRole}
_MARKERS = {m.value: m for m in Marker}


class _Builder:
    """Accumulates one utterance block until the next header flushes it."""

    def __init__(self, uid: str, line: int):
        self.uid = uid
        self.line = line
        self.predicate: Optional[Predicate] = None
        self.slots: list[ArgumentSlot] = []
        self.zids: set[str] = set()
        self.roles: set[GrammaticalRole] = set()
        self.has_wa = False

    def finish(self) -> Utterance:
        if self.predicate is None:
            raise ParseError(f"utterance {self.uid!r} has no PRED line", line=self.line)
        return Utterance(self.uid, self.predicate, tuple(self.slots))


def parse_discourse(text: str) -> Discourse:
    """Parse a discourse file; syntax errors are reported with line numbers."""
    name: Optional[str] = None
    context: Optional[Context] = None
    units: list[Utterance] = []
    seen_uids: set[str] = set()
    current: Optional[_Builder] = None

    def flush():
        nonlocal current
        if current is not None:
            units.append(current.finish())
            current = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        indented = line[0] in " \t"
        tokens = line.split()
        head = tokens[0]

        if name is None:
            if head != "DISCOURSE":
                raise ParseError("expected DISCOURSE header", line=lineno)
            if indented or len(tokens) != 2:
                raise ParseError("malformed DISCOURSE header", line=lineno)
            name = tokens[1]
            continue

        if head == "DISCOURSE":
            raise ParseError("duplicate DISCOURSE header", line=lineno)

        if head == "CONTEXT":
            if indented:
                raise ParseError("CONTEXT line must not be indented", line=lineno)
            if units or current is not None:
                raise ParseError("CONTEXT must precede all utterances", line=lineno)
            if context is not None:
                raise ParseError("duplicate CONTEXT line", line=lineno)
            context = _parse_context(tokens, lineno)
            continue

        if head == "U":
            if indented:
                raise ParseError("utterance header must not be indented", line=lineno)
            if len(tokens) != 2:
                raise ParseError("malformed utterance header", line=lineno)
            flush()
            uid = tokens[1]
            if uid in seen_uids:
                raise ParseError(f"duplicate utterance id {uid!r}", line=lineno)
            seen_uids.add(uid)
            current = _Builder(uid, lineno)
            continue

        if head in ("PRED", "ARG"):
            if current is None:
                raise ParseError(f"{head} line outside an utterance", line=lineno)
            if not indented:
                raise ParseError(f"{head} line must be indented", line=lineno)
            if head == "PRED":
                if current.predicate is not None:
                    raise ParseError("duplicate PRED line", line=lineno)
                current.predicate = _parse_pred(tokens, lineno)
            else:
                if current.predicate is None:
                    raise ParseError("ARG line before PRED", line=lineno)
                current.slots.append(_parse_arg(tokens, lineno, current))
            continue

        raise ParseError(f"unknown directive {head!r}", line=lineno)

    flush()
    if not units:
        raise ParseError("no utterances")
    return Discourse(name, context, tuple(units))


def _parse_context(tokens: list[str], lineno: int) -> Context:
    if len(tokens) not in (2, 3) or not tokens[1].startswith("CB="):
        raise ParseError("malformed CONTEXT line", line=lineno)
    cb = tokens[1][3:]
    if not cb:
        raise ParseError("empty CB entity", line=lineno)
    cf = None
    if len(tokens) == 3:
        if not tokens[2].startswith("CF="):
            raise ParseError("malformed CONTEXT line", line=lineno)
        names = tokens[2][3:].split(",")
        if not all(names):
            raise ParseError("empty CF entity", line=lineno)
        cf = tuple(Entity(n) for n in names)
    return Context(Entity(cb), cf)


def _parse_pred(tokens: list[str], lineno: int) -> Predicate:
    if len(tokens) < 2 or len(tokens) > 3:
        raise ParseError("malformed PRED line", line=lineno)
    parts = tokens[1].split("+")
    if not all(parts):
        raise ParseError("empty lemma or suffix", line=lineno)
    explicit = None
    if len(tokens) == 3:
        if not tokens[2].startswith("EMPATHY="):
            raise ParseError("malformed PRED line", line=lineno)
        role = tokens[2][8:]
        if role not in _ROLES:
            raise ParseError(f"unknown role {role!r}", line=lineno)
        explicit = _ROLES[role]
    return Predicate(parts[0], tuple(parts[1:]), explicit)


def _parse_arg(tokens: list[str], lineno: int, builder: _Builder) -> ArgumentSlot:
    if len(tokens) != 4:
        raise ParseError("malformed ARG line", line=lineno)
    role_token = tokens[1]
    if role_token not in _ROLES:
        raise ParseError(f"unknown role {role_token!r}", line=lineno)
    role = _ROLES[role_token]
    if role is not GrammaticalRole.ADJ:
        if role in builder.roles:
            raise ParseError(f"duplicate role {role_token}", line=lineno)
        builder.roles.add(role)
    if tokens[2] == "ZERO":
        zid = tokens[3]
        if zid in builder.zids:
            raise ParseError(f"duplicate zero id {zid!r}", line=lineno)
        builder.zids.add(zid)
        return ArgumentSlot(role, Zero(zid))
    marker_token = tokens[2]
    if marker_token not in _MARKERS:
        raise ParseError(f"unknown marker {marker_token!r}", line=lineno)
    marker = _MARKERS[marker_token]
    if marker is Marker.WA:
        if builder.has_wa:
            raise ParseError("more than one wa-marked slot", line=lineno)
        builder.has_wa = True
    return ArgumentSlot(role, Overt(Entity(tokens[3]), marker))


def format_discourse(discourse: Discourse) -> str:
    """Render a discourse in canonical form (the parser's exact inverse for
    canonical files: two-space indents, single separating spaces)."""
    lines = [f"DISCOURSE {discourse.name}"]
    if discourse.context is not None:
        line = f"CONTEXT CB={discourse.context.cb.id}"
        if discourse.context.cf is not None:
            line += " CF=" + ",".join(e.id for e in discourse.context.cf)
        lines.append(line)
    for u in discourse.units:
        lines.append(f"U {u.uid}")
        pred = "+".join((u.predicate.lemma,) + u.predicate.suffixes)
        if u.predicate.explicit_empathy is not None:
            pred += f" EMPATHY={u.predicate.explicit_empathy.value}"
        lines.append(f"  PRED {pred}")
        for slot in u.slots:
            if slot.is_zero:
                lines.append(f"  ARG {slot.role.value} ZERO {slot.realization.zid}")
            else:
                lines.append(
                    f"  ARG {slot.role.value} {slot.realization.marker.value} "
                    f"{slot.realization.entity.id}"
                )
    return "\n".join(lines) + "\n"


def _assignment_text(interp: Interpretation) -> str:
    return ";".join(f"{zid}={entity.id}" for zid, entity in interp.anchor.assignment) or "-"


def _record_line(uid: str, interp: Interpretation) -> str:
    anchor = interp.anchor
    cf = ",".join(e.id for e in anchor.cf.entities) or "-"
    transition = anchor.transition.name if anchor.transition is not None else "-"
    grant = anchor.zero_topic_grant or "-"
    return "\t".join([uid, str(anchor.cb), cf, transition, _assignment_text(interp), grant])


def _cf_text(anchor) -> str:
    parts = []
    for entity, statuses in anchor.cf.entries:
        gloss = "/".join(s.display for s in canonical_statuses(statuses))
        parts.append(f"{entity.id}{{{gloss}}}" if gloss else entity.id)
    return " > ".join(parts) or "-"


def _zeros_text(interp: Interpretation) -> str:
    return ", ".join(f"{zid}={entity.id} ({role.value})" for role, zid, entity in interp.gloss)


def serialize_result(
    results: Sequence[ResolutionResult],
    mode: str = "trace",
    include_rejected: bool = False,
) -> str:
    """Render resolution results as text.

    `records` mode emits one tab-separated line per preferred interpretation:
    uid, cb, comma-joined cf, transition, assignment (`zid=entity;...`),
    zero-topic grant. `-` fills empty columns and `?` an unestablished
    center; ordering is deterministic. `trace` mode renders per-utterance
    boxes (center, statused forward list, transition, zero glosses), plus
    rejected candidates on request.
    """
    if mode not in ("trace", "records"):
        raise ValueError(f"unknown serialization mode {mode!r}")
    lines: list[str] = []
    for result in results:
        if not result.preferred:
            raise ValueError(
                f"result for utterance {result.uid!r} has no preferred interpretations"
            )
        if mode == "records":
            for interp in result.preferred:
                lines.append(_record_line(result.uid, interp))
            continue
        lines.append(f"U {result.uid}")
        total = len(result.preferred)
        for i, interp in enumerate(result.preferred, start=1):
            anchor = interp.anchor
            transition = anchor.transition.name if anchor.transition is not None else "-"
            header = f"  preferred {i}/{total}: {transition}"
            if anchor.zero_topic_grant is not None:
                header += f"  [zero topic: {anchor.zero_topic_grant}]"
            lines.append(header)
            lines.append(f"    Cb: {anchor.cb}")
            lines.append(f"    Cf: {_cf_text(anchor)}")
            zeros = _zeros_text(interp)
            if zeros:
                lines.append(f"    zeros: {zeros}")
        if include_rejected:
            for interp, reason in result.rejected:
                transition = (
                    interp.anchor.transition.name
                    if interp.anchor.transition is not None
                    else "-"
                )
                detail = f"Cb {interp.anchor.cb}, Cf {_cf_text(interp.anchor)}"
                zeros = _zeros_text(interp)
                if zeros:
                    detail += f", zeros {zeros}"
                lines.append(f"  rejected [{reason.name}] {transition}: {detail}")
    return "\n".join(lines) + "\n"
