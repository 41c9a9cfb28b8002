"""Stage 2: keep only generic assertions via lexico-syntactic rules.

Twelve named rules, evaluated in id order; the first failing active rule is
reported. Domains and facets may switch rules off through catalog
rule_toggles (nested maps scope a toggle to one facet), so disabling a rule
can only grow the accepted set.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .catalog import Domain
from .errors import ConfigError
from .ingest import AnnotatedSentence

LEXICAL = "LEXICAL"
SYNTACTIC = "SYNTACTIC"


@dataclass(frozen=True)
class Rule:
    id: str
    description: str
    kind: str
    default_on: bool = True


@dataclass(frozen=True)
class FilterDecision:
    accepted: bool
    failed_rule: str | None

    def __post_init__(self):
        assert self.accepted == (self.failed_rule is None)


MAX_TOKENS = 30

_FIRST_SECOND_PRONOUNS = frozenset(
    "i me my mine myself we us our ours ourselves you your yours yourself yourselves".split()
)
_DEICTIC_FIRST = frozenset({"this", "that", "these", "those"})
_IRREGULAR_PAST = frozenset(
    "was were had did went ate wore made took gave drank ran said saw got "
    "held kept wrote built bought brought taught thought knew grew sang "
    "spoke came rose woke began fought told lit left felt met sat stood "
    "found lost".split()
)
_TLD_TOKEN = re.compile(r"^[a-z0-9-]+(?:\.[a-z0-9-]+)*\.[a-z]{2,4}$")


def _non_punct(sentence: AnnotatedSentence):
    return [t for t in sentence.tokens if t.pos != "PUNCT"]


def _has_url(sentence: AnnotatedSentence) -> bool:
    lowered = sentence.text.lower()
    if "http://" in lowered or "https://" in lowered or "www." in lowered:
        return True
    for token in sentence.tokens:
        surface = token.surface.lower().rstrip(".")
        if "." in surface and _TLD_TOKEN.match(surface):
            return True
    return False


def _root_is_past(sentence: AnnotatedSentence) -> bool:
    root = sentence.tokens[sentence.root_index]
    lower = root.surface.lower()
    if lower in _IRREGULAR_PAST:
        return True
    return lower.endswith("ed") and lower != root.lemma.lower()


def _r01(s):  # noqa: ANN001 - rule predicates share one shape
    return len(_non_punct(s)) <= MAX_TOKENS


def _r02(s):
    return bool(s.text) and s.text[0].isupper()


def _r03(s):
    return bool(s.tokens) and s.tokens[0].pos != "DET"


def _r04(s):
    return s.text.endswith(".")


def _r05(s):
    return not _has_url(s)


def _r06(s):
    return not any(t.surface.lower() in _FIRST_SECOND_PRONOUNS for t in s.tokens)


def _r07(s):
    return "?" not in s.text


def _r08(s):
    if s.root_index <= 0 or s.root_index >= len(s.tokens):
        return False
    return s.tokens[s.root_index].pos in ("VERB", "AUX")


def _r09(s):
    if s.root_index <= 0:
        return False
    return any(t.pos in ("NOUN", "PROPN") for t in s.tokens[: s.root_index])


def _r10(s):
    if s.root_index < 0 or s.root_index >= len(s.tokens):
        return True
    return not _root_is_past(s)


def _r11(s):
    return not any(t.ner == "PERSON" for t in s.tokens)


def _r12(s):
    return bool(s.tokens) and s.tokens[0].surface.lower() not in _DEICTIC_FIRST


RULES: dict[str, Rule] = {
    r.id: r
    for r in (
        Rule("R01-LEN", f"at most {MAX_TOKENS} non-punctuation tokens", LEXICAL),
        Rule("R02-CAP", "first character is uppercase", LEXICAL),
        Rule("R03-FIRSTWORD", "first token is not a determiner", LEXICAL),
        Rule("R04-ENDPERIOD", "ends with a period", LEXICAL),
        Rule("R05-NOURL", "no URL-like substring", LEXICAL),
        Rule("R06-NOPRONOUN", "no first/second-person pronouns", LEXICAL),
        Rule("R07-NOQUESTION", "no question mark", LEXICAL),
        Rule("R08-ROOTVERB", "root is a verb and not the first token", SYNTACTIC),
        Rule("R09-NOUNBEFOREROOT", "a noun precedes the root", SYNTACTIC),
        Rule("R10-NOPASTROOT", "root is not past tense", SYNTACTIC),
        Rule("R11-NOPERSON", "no PERSON entity", SYNTACTIC),
        Rule("R12-NODEICTIC", "first token is not deictic", LEXICAL),
    )
}

_PREDICATES = {
    "R01-LEN": _r01,
    "R02-CAP": _r02,
    "R03-FIRSTWORD": _r03,
    "R04-ENDPERIOD": _r04,
    "R05-NOURL": _r05,
    "R06-NOPRONOUN": _r06,
    "R07-NOQUESTION": _r07,
    "R08-ROOTVERB": _r08,
    "R09-NOUNBEFOREROOT": _r09,
    "R10-NOPASTROOT": _r10,
    "R11-NOPERSON": _r11,
    "R12-NODEICTIC": _r12,
}

BASE_RULE_IDS: tuple[str, ...] = tuple(sorted(RULES))


def failing_rules(sentence: AnnotatedSentence, rule_ids=BASE_RULE_IDS) -> list[str]:
    """Every failing rule among rule_ids, in id order."""
    _validate(rule_ids)
    return [rid for rid in sorted(rule_ids) if not _PREDICATES[rid](sentence)]


def is_generic(sentence: AnnotatedSentence, active_rules=BASE_RULE_IDS) -> FilterDecision:
    _validate(active_rules)
    for rid in sorted(active_rules):
        if not _PREDICATES[rid](sentence):
            return FilterDecision(False, rid)
    return FilterDecision(True, None)


def active_rules_for(domain: Domain, facet: str) -> frozenset[str]:
    """Base rule set minus catalog toggles for this (domain, facet)."""
    active = set(rid for rid in BASE_RULE_IDS if RULES[rid].default_on)
    for rid, toggle in domain.rule_toggles.items():
        if rid not in RULES:
            raise ConfigError(f"unknown rule id '{rid}' in rule_toggles of domain '{domain.id}'")
        if isinstance(toggle, bool):
            (active.add if toggle else active.discard)(rid)
        else:
            if facet in toggle:
                (active.add if toggle[facet] else active.discard)(rid)
    return frozenset(active)


def _validate(rule_ids) -> None:
    unknown = set(rule_ids) - set(RULES)
    if unknown:
        raise ConfigError(f"unknown rule id(s): {sorted(unknown)}")
