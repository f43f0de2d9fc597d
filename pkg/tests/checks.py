"""Shared test helpers: canonical records, outcome comparison, and
independent recomputations of the resolver's invariants."""

from __future__ import annotations

from pathlib import Path

from centering import (
    RejectReason,
    ResolutionError,
    Transition,
    compare_transitions,
    resolve_discourse,
)
from oracle import record_of

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

ERROR_PHRASES = (
    "no admissible interpretation",
    "no antecedent candidates",
    "unresolvable discourse-initial zero",
    "no utterances",
)


def interp_record(interp):
    """Canonical comparison record for an engine interpretation."""
    anchor = interp.anchor
    return record_of(
        anchor.cb, anchor.cf, anchor.transition, anchor.assignment, anchor.zero_topic_grant
    )


def error_phrase(exc: Exception) -> str:
    message = str(exc)
    for phrase in ERROR_PHRASES:
        if message.startswith(phrase):
            return phrase
    return message


def engine_outcome(discourse, config):
    """("ok", [frozenset of records per utterance]) or ("error", phrase)."""
    try:
        results = resolve_discourse(discourse, config)
    except ResolutionError as exc:
        return ("error", error_phrase(exc))
    return (
        "ok",
        [frozenset(interp_record(i) for i in r.preferred) for r in results],
    )


def realized_set(utterance, assignment):
    out = set()
    for slot in utterance.slots:
        if slot.is_zero:
            out.add(assignment[slot.realization.zid])
        else:
            out.add(slot.realization.entity)
    return out


def assert_constraints(discourse, results):
    """Constraints 1-3, recomputed from scratch for every preferred reading."""
    for utterance, result in zip(discourse.units, results):
        assert result.preferred, utterance.uid
        for interp in result.preferred:
            anchor = interp.anchor
            # constraint 1: precisely one backward center per interpretation
            assert hasattr(anchor.cb, "established")
            # constraint 2: forward centers are exactly the realized entities
            assignment = dict(anchor.assignment)
            assert set(anchor.cf.entities) == realized_set(utterance, assignment)
            assert len(set(anchor.cf.entities)) == len(anchor.cf.entities)
            # constraint 3: the center is the first previous forward center
            # that is realized now
            if interp.source is None:
                assert not anchor.cb.established
                continue
            realized = realized_set(utterance, assignment)
            expected = next(
                (e for e in interp.source.cf.entities if e in realized), None
            )
            assert anchor.cb.entity == expected


def assert_rule2_dominance(results):
    """No rejected candidate that passed the filters beats the best preferred
    transition of its source anchor."""
    for result in results:
        best_by_source = {}
        for interp in result.preferred:
            key = id(interp.source)
            transition = interp.anchor.transition
            if transition is None:
                continue
            cur = best_by_source.get(key)
            if cur is None or compare_transitions(transition, cur) > 0:
                best_by_source[key] = transition
        for interp, reason in result.rejected:
            if reason is not RejectReason.DOMINATED:
                continue
            best = best_by_source.get(id(interp.source))
            if best is not None:
                assert compare_transitions(interp.anchor.transition, best) <= 0


def assert_zero_topic_guard(discourse, results):
    """Granted readings only when: the zero maps to the source anchor's center,
    nothing is overtly topic-marked, and the source had no grant-free
    continuation."""
    by_uid = {u.uid: u for u in discourse.units}
    for result in results:
        grant_free_continue = set()
        for interp in result.preferred:
            anchor = interp.anchor
            if anchor.zero_topic_grant is None and anchor.transition is Transition.CONTINUE:
                grant_free_continue.add(id(interp.source))
        for interp, reason in result.rejected:
            anchor = interp.anchor
            if (
                reason is RejectReason.DOMINATED
                and anchor.zero_topic_grant is None
                and anchor.transition is Transition.CONTINUE
            ):
                grant_free_continue.add(id(interp.source))
        for interp in result.preferred:
            anchor = interp.anchor
            if anchor.zero_topic_grant is None:
                continue
            assert interp.source is not None and interp.source.cb.established
            assert dict(anchor.assignment)[anchor.zero_topic_grant] == interp.source.cb.entity
            assert not by_uid[result.uid].has_overt_topic
            assert id(interp.source) not in grant_free_continue
