"""The center-tracking resolver.

For each utterance the engine enumerates antecedent assignments for its zero
pronouns against every live anchor (a (Cb, Cf, assignment) hypothesis carried
over from the previous utterance), filters them by the coreference and
pronominalization rules, classifies the transition of each survivor, optionally
adds zero-topic variants, and keeps, per anchor, the assignments whose best
transition is maximal. Anchors never compete with each other: the preferred
readings of an utterance are the union of every anchor's winners, and all of
them stay live for the next utterance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Mapping, Optional, TYPE_CHECKING

from .errors import ResolutionError
from .model import Cb, Entity, GrammaticalRole, Transition, UNESTABLISHED, compare_transitions
from .salience import CfList, LanguageConfig, Utterance, empathy_locus, rank_cf

if TYPE_CHECKING:  # pragma: no cover
    from .discourse import Discourse


class RejectReason(Enum):
    """Why a candidate interpretation was discarded.

    CONSTRAINT3 is part of the trace vocabulary for checkers that enumerate
    center choices; resolve computes the center directly and never emits it.
    """

    CONSTRAINT3 = "CONSTRAINT3"
    RULE1 = "RULE1"
    CONTRAINDEX = "CONTRAINDEX"
    DOMINATED = "DOMINATED"


Assignment = tuple[tuple[str, Entity], ...]


def freeze_assignment(assignment: Mapping[str, Entity]) -> Assignment:
    return tuple(sorted(assignment.items()))


@dataclass(frozen=True)
class Anchor:
    """One live hypothesis about an utterance: its backward center, forward
    list, zero-pronoun assignment, and (once classified) its transition."""

    cb: Cb
    cf: CfList
    assignment: Assignment = ()
    transition: Optional[Transition] = None
    zero_topic_grant: Optional[str] = None

    @property
    def assignment_map(self) -> dict[str, Entity]:
        return dict(self.assignment)


@dataclass(frozen=True)
class CenteringState:
    """The set of anchors carried forward in parallel from the last utterance."""

    live_anchors: tuple[Anchor, ...]
    utterance_index: int = 1


@dataclass(frozen=True)
class Interpretation:
    """An anchor plus a readable gloss of its zero assignments.

    `gloss` lists (role, zid, entity) per zero slot in surface order. `source`
    is the predecessor anchor the interpretation was derived from (None for a
    discourse-initial utterance)."""

    anchor: Anchor
    gloss: tuple[tuple[GrammaticalRole, str, Entity], ...] = ()
    source: Optional[Anchor] = None


@dataclass(frozen=True)
class ResolutionResult:
    uid: str
    preferred: tuple[Interpretation, ...]
    rejected: tuple[tuple[Interpretation, RejectReason], ...] = ()


def realized_entities(u: Utterance, assignment: Mapping[str, Entity]) -> frozenset[Entity]:
    """All entities denoted by the slots of `u` under `assignment`."""
    out = set()
    for slot in u.slots:
        if slot.is_zero:
            out.add(assignment[slot.realization.zid])
        else:
            out.add(slot.realization.entity)
    return frozenset(out)


def _coindexed(u: Utterance, assignment: Mapping[str, Entity]) -> bool:
    """True when the assignment makes a zero corefer with another slot.

    Distinct argument slots of one predicate must denote distinct entities;
    overt slots are annotation ground truth and are not checked against each
    other.
    """
    overt = {s.realization.entity for s in u.slots if not s.is_zero}
    values = [assignment[s.realization.zid] for s in u.zero_slots]
    return len(set(values)) != len(values) or any(v in overt for v in values)


def enumerate_assignments(u: Utterance, prev_cf: CfList) -> list[dict[str, Entity]]:
    """All candidate antecedent maps for the zero slots of `u`.

    Antecedents are drawn from the previous forward-center list; maps that
    would make two slots of the predicate corefer are excluded. An utterance
    without zeros yields exactly one empty map.
    """
    zero_slots = u.zero_slots
    if not zero_slots:
        return [{}]
    pool = prev_cf.entities
    if not pool:
        raise ResolutionError(
            f"no antecedent candidates for zero pronouns in utterance {u.uid!r}"
        )
    out = []
    for combo in itertools.product(pool, repeat=len(zero_slots)):
        assignment = {s.realization.zid: e for s, e in zip(zero_slots, combo)}
        if not _coindexed(u, assignment):
            out.append(assignment)
    return out


def compute_cb(prev_anchor: Anchor, realized: Iterable[Entity]) -> Cb:
    """The highest-ranked previous forward center realized now; unestablished
    when none is (a fresh segment)."""
    realized = set(realized)
    for entity in prev_anchor.cf.entities:
        if entity in realized:
            return Cb(entity)
    return UNESTABLISHED


def check_rule1(
    u: Utterance,
    assignment: Mapping[str, Entity],
    prev_cf: CfList,
    cb: Cb,
) -> bool:
    """The pronominalization rule, as a hard filter.

    If any previous forward center is realized by a zero in `u`, the backward
    center must itself be established and realized by a zero (zeros are the
    pronominal forms in scope).
    """
    zero_realized = {assignment[s.realization.zid] for s in u.zero_slots}
    if not any(e in zero_realized for e in prev_cf.entities):
        return True
    return cb.established and cb.entity in zero_realized


def classify_transition(prev_cb: Cb, new_cb: Cb, new_cf: CfList) -> Transition:
    """Classify an utterance pair by center sameness and center-equals-Cp.

    An unestablished center on either side counts as "same": the variable
    center of an opening utterance is equated with whatever center the next
    utterance settles on.
    """
    same_cb = (
        not prev_cb.established
        or not new_cb.established
        or prev_cb.entity == new_cb.entity
    )
    cb_is_cp = new_cb.established and new_cf.cp == new_cb.entity
    if same_cb:
        return Transition.CONTINUE if cb_is_cp else Transition.RETAIN
    return Transition.SHIFT_1 if cb_is_cp else Transition.SHIFT


def zero_topic_variants(
    candidates: list[Anchor],
    prev_anchor: Anchor,
    u: Utterance,
    config: LanguageConfig,
) -> list[Anchor]:
    """Augment an anchor's candidates with zero-topic readings.

    Only when the language allows it, no candidate already continues, and no
    slot of `u` is overtly topic-marked: each candidate whose assignment maps
    some zero to the previous backward center gains a variant in which that
    zero is read as topic (forward list and transition recomputed). The
    originals are kept alongside; the granted and ungranted readings have the
    same meaning.
    """
    out = list(candidates)
    if not config.zero_topic_enabled:
        return out
    if any(c.transition is Transition.CONTINUE for c in candidates):
        return out
    if u.has_overt_topic:
        return out
    if not prev_anchor.cb.established:
        return out
    target = prev_anchor.cb.entity
    locus = empathy_locus(u.predicate, config)
    for cand in candidates:
        for zid, entity in cand.assignment:
            if entity == target:
                cf = rank_cf(u, cand.assignment_map, config, locus, zid)
                transition = classify_transition(prev_anchor.cb, cand.cb, cf)
                out.append(
                    replace(cand, cf=cf, transition=transition, zero_topic_grant=zid)
                )
    return out


def _gloss(u: Utterance, assignment: Mapping[str, Entity]):
    return tuple(
        (s.role, s.realization.zid, assignment[s.realization.zid])
        for s in u.zero_slots
    )


def _interp_sort_key(interp: Interpretation):
    anchor = interp.anchor
    assign = tuple(sorted((role.rank, zid, entity.id) for role, zid, entity in interp.gloss))
    cf_ids = tuple(e.id for e in anchor.cf.entities)
    cf_statuses = tuple(
        tuple(sorted(s.name for s in statuses)) for _, statuses in anchor.cf.entries
    )
    pref = -anchor.transition.preference if anchor.transition is not None else 1
    return (assign, cf_ids, cf_statuses, pref, anchor.zero_topic_grant or "", str(anchor.cb))


def _keep_interpretation(chosen: dict, interp: Interpretation) -> None:
    # Dedup across anchors on (cb, cf, assignment); on a collision the better
    # transition wins, then the ungranted reading.
    key = (interp.anchor.cb, interp.anchor.cf, interp.anchor.assignment)
    current = chosen.get(key)
    if current is None:
        chosen[key] = interp
        return
    order = compare_transitions(interp.anchor.transition, current.anchor.transition)
    if order > 0 or (
        order == 0
        and current.anchor.zero_topic_grant is not None
        and interp.anchor.zero_topic_grant is None
    ):
        chosen[key] = interp


def _rejection_trace(u: Utterance, rejected) -> str:
    lines = [f"no admissible interpretation for utterance {u.uid!r}"]
    for interp, reason in rejected:
        assign = ";".join(f"{z}={e.id}" for z, e in interp.anchor.assignment) or "-"
        transition = interp.anchor.transition.name if interp.anchor.transition else "-"
        lines.append(
            f"  rejected [{reason.name}] zeros {assign}, cb {interp.anchor.cb}, {transition}"
        )
    return "\n".join(lines)


def resolve(
    state: CenteringState, u: Utterance, config: LanguageConfig
) -> tuple[ResolutionResult, CenteringState]:
    """Resolve one utterance against every live anchor and advance the state.

    Per anchor: enumerate assignments, compute the backward center (the
    center constraint holds by construction), filter by coreference and the
    pronominalization rule, rank forward centers, classify transitions, add
    zero-topic variants, then keep the assignments whose best transition is
    maximal for that anchor. A surviving assignment keeps its ungranted
    reading unconditionally and a granted variant only when the grant is what
    achieves the assignment's best transition. The preferred set is the
    deduplicated union over anchors; anchors are never ranked against each
    other. Raises ResolutionError when every candidate is filtered out.
    """
    locus = empathy_locus(u.predicate, config)
    zero_slots = u.zero_slots
    chosen: dict = {}
    rejected: list[tuple[Interpretation, RejectReason]] = []

    for anchor in state.live_anchors:
        if zero_slots and not anchor.cf.entities:
            raise ResolutionError(
                f"no antecedent candidates for zero pronouns in utterance {u.uid!r}"
            )
        alive: list[Anchor] = []
        for combo in itertools.product(anchor.cf.entities, repeat=len(zero_slots)):
            assignment = {s.realization.zid: e for s, e in zip(zero_slots, combo)}
            realized = realized_entities(u, assignment)
            cb = compute_cb(anchor, realized)
            cf = rank_cf(u, assignment, config, locus, None)
            transition = classify_transition(anchor.cb, cb, cf)
            candidate = Anchor(
                cb=cb,
                cf=cf,
                assignment=freeze_assignment(assignment),
                transition=transition,
            )
            interp = Interpretation(candidate, _gloss(u, assignment), source=anchor)
            if _coindexed(u, assignment):
                rejected.append((interp, RejectReason.CONTRAINDEX))
            elif not check_rule1(u, assignment, anchor.cf, cb):
                rejected.append((interp, RejectReason.RULE1))
            else:
                alive.append(candidate)
        if not alive:
            continue

        augmented = zero_topic_variants(alive, anchor, u, config)
        groups: dict[Assignment, list[Anchor]] = {}
        for candidate in augmented:
            groups.setdefault(candidate.assignment, []).append(candidate)
        scores = {
            key: max(cands, key=lambda c: c.transition.preference).transition
            for key, cands in groups.items()
        }
        anchor_best = max(scores.values(), key=lambda t: t.preference)
        for key, cands in groups.items():
            winning = compare_transitions(scores[key], anchor_best) == 0
            for candidate in cands:
                interp = Interpretation(
                    candidate, _gloss(u, candidate.assignment_map), source=anchor
                )
                keep = winning and (
                    candidate.zero_topic_grant is None
                    or candidate.transition is scores[key]
                )
                if keep:
                    _keep_interpretation(chosen, interp)
                else:
                    rejected.append((interp, RejectReason.DOMINATED))

    if not chosen:
        raise ResolutionError(_rejection_trace(u, rejected), rejected=rejected)
    preferred = tuple(sorted(chosen.values(), key=_interp_sort_key))
    result = ResolutionResult(u.uid, preferred, tuple(rejected))
    anchors = tuple(i.anchor for i in preferred)
    return result, CenteringState(anchors, state.utterance_index + 1)


def context_state(cb_entity: Entity, cf_entities: Optional[Iterable[Entity]] = None) -> CenteringState:
    """A virtual state standing in for prior discussion: one anchor with the
    given backward center and forward list (defaulting to just the center)."""
    entities = tuple(cf_entities) if cf_entities else (cb_entity,)
    cf = CfList(tuple((e, frozenset()) for e in entities))
    return CenteringState((Anchor(cb=Cb(cb_entity), cf=cf),), 0)


def establish_initial_state(
    u1: Utterance,
    config: LanguageConfig,
    context: Optional[tuple[Entity, Optional[Iterable[Entity]]]] = None,
) -> CenteringState:
    """The state after the first clause unit of a discourse.

    Without context the backward center starts unestablished (a variable to
    be equated with the next utterance's center) and the unit may not contain
    zero pronouns. A (cb, cf) context pair acts as a virtual preceding
    utterance and the unit is resolved against it.
    """
    if context is not None:
        cb_entity, cf_entities = context
        _, state = resolve(context_state(cb_entity, cf_entities), u1, config)
        return state
    if u1.zero_slots:
        raise ResolutionError(
            f"unresolvable discourse-initial zero in utterance {u1.uid!r}"
        )
    cf = rank_cf(u1, {}, config, empathy_locus(u1.predicate, config), None)
    return CenteringState((Anchor(cb=UNESTABLISHED, cf=cf),), 1)


def resolve_discourse(discourse: "Discourse", config: LanguageConfig) -> list[ResolutionResult]:
    """Run the resolver over a whole discourse, one result per clause unit.

    Embedded clause units are just further utterances in their annotated
    order. A context declaration seeds the state; otherwise the first unit
    establishes it with an unestablished center.
    """
    if not discourse.units:
        raise ResolutionError("no utterances")
    units = list(discourse.units)
    results: list[ResolutionResult] = []
    if discourse.context is not None:
        state = context_state(discourse.context.cb, discourse.context.cf)
    else:
        first = units.pop(0)
        state = establish_initial_state(first, config)
        anchor = state.live_anchors[0]
        results.append(ResolutionResult(first.uid, (Interpretation(anchor),)))
    for u in units:
        result, state = resolve(state, u, config)
        results.append(result)
    return results
