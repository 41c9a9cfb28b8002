"""Subject catalog: domains, subjects, aliases, facets and rule toggles.

The catalog is a local JSON file (schema in docs/formats.md); the engine never
performs network lookups. It is immutable after load and safe for concurrent
reads.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .errors import CatalogError
from .textutil import normalize_phrase

FACET_IDS = ("food", "drinks", "clothing", "rituals", "traditions", "behaviors", "other")

_ID_RE = re.compile(r"^[A-Za-z0-9._-]+$")

# Head nouns with non-suffix plurals. Compounds ending in one of these words
# ("fisherman") inherit the irregular form.
_IRREGULAR_PLURALS = {
    "man": "men",
    "woman": "women",
    "child": "children",
    "person": "people",
    "foot": "feet",
    "tooth": "teeth",
    "goose": "geese",
    "mouse": "mice",
    "louse": "lice",
    "ox": "oxen",
    "die": "dice",
    "life": "lives",
    "wife": "wives",
    "knife": "knives",
    "leaf": "leaves",
    "loaf": "loaves",
    "thief": "thieves",
    "shelf": "shelves",
    "wolf": "wolves",
    "half": "halves",
    "calf": "calves",
    "elf": "elves",
    "hero": "heroes",
    "potato": "potatoes",
    "tomato": "tomatoes",
    "echo": "echoes",
    "sheep": "sheep",
    "fish": "fish",
    "deer": "deer",
    "series": "series",
    "species": "species",
}

_VOWELS = "aeiou"


def pluralize(noun_phrase: str) -> str:
    """English plural of the phrase's head (last) word.

    Rule table: irregular list, -man compounds, sibilant endings (+es),
    consonant+y -> ies, consonant+o -> oes for listed words, default +s.
    Unknown shapes fall back to +s.
    """
    phrase = noun_phrase.strip()
    if not phrase:
        raise ValueError("cannot pluralize an empty phrase")
    head = phrase.split()[-1]
    prefix = phrase[: len(phrase) - len(head)]
    lower = head.lower()

    plural = None
    if lower in _IRREGULAR_PLURALS:
        plural = _IRREGULAR_PLURALS[lower]
    else:
        for stem, irr in _IRREGULAR_PLURALS.items():
            # compounds: fisherman -> fishermen, stepchild -> stepchildren
            if len(stem) >= 3 and lower.endswith(stem) and lower != stem:
                plural = lower[: -len(stem)] + irr
                break
    if plural is None:
        if lower.endswith(("s", "x", "z", "ch", "sh")):
            plural = lower + "es"
        elif lower.endswith("y") and len(lower) > 1 and lower[-2] not in _VOWELS:
            plural = lower[:-1] + "ies"
        else:
            plural = lower + "s"

    if head[0].isupper():
        plural = plural[0].upper() + plural[1:]
    return prefix + plural


@dataclass(frozen=True)
class FacetId:
    id: str
    hypothesis_text: str


@dataclass(frozen=True)
class Subject:
    id: str
    domain: str
    canonical_name: str
    aliases: tuple[str, ...]


@dataclass(frozen=True)
class Domain:
    id: str
    facets: tuple[FacetId, ...]
    # RuleId -> bool (domain-wide) or RuleId -> {facet_id: bool}
    rule_toggles: dict = field(default_factory=dict)
    ner_tags: frozenset[str] = frozenset()

    @property
    def routes_to_other(self) -> bool:
        """Unaccepted sentences fall into facet "other" for religion and
        occupation domains only (geography drops them)."""
        return self.id.split(".")[0] in ("religion", "occupation")

    @property
    def enrich_plurals(self) -> bool:
        return self.id.split(".")[0] == "occupation"


class SubjectCatalog:
    """Validated, immutable view over domains and subjects."""

    def __init__(self, domains: list[Domain], subjects: list[Subject]):
        self.domains = {d.id: d for d in domains}
        self.subjects = {s.id: s for s in subjects}

    def domain_of(self, subject_id: str) -> Domain:
        return self.domains[self.subjects[subject_id].domain]

    def subjects_in(self, domain_id: str) -> list[Subject]:
        return [s for s in self.subjects.values() if s.domain == domain_id]

    def all_aliases(self) -> list[str]:
        seen: dict[str, None] = {}
        for s in self.subjects.values():
            for a in s.aliases:
                seen.setdefault(a)
        return list(seen)

    def __len__(self) -> int:
        return len(self.subjects)


_DOMAIN_KEYS = {"id", "ner_tags", "facets", "rule_toggles", "subjects"}
_SUBJECT_KEYS = {"id", "name", "aliases"}
_FACET_KEYS = {"id", "hypothesis"}


def _reject_unknown(obj: dict, allowed: set, where: str, path: str):
    unknown = set(obj) - allowed
    if unknown:
        raise CatalogError(f"unknown key(s) {sorted(unknown)}", path=path, field=where)


def _require(obj: dict, key: str, typ, where: str, path: str):
    if key not in obj:
        raise CatalogError(f"missing key '{key}'", path=path, field=where)
    value = obj[key]
    if not isinstance(value, typ):
        raise CatalogError(f"key '{key}' must be {typ.__name__}", path=path, field=where)
    return value


def load_catalog(path) -> SubjectCatalog:
    """Load and validate a catalog file.

    Occupation-domain subjects get the plural form of each alias auto-added.
    Rejects duplicate subject ids and duplicate aliases within a domain.
    """
    path = str(path)
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise CatalogError(f"cannot read catalog: {exc}", path=path) from exc
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog is not valid JSON: {exc.msg}", path=path, line=exc.lineno) from exc

    if not isinstance(raw, dict):
        raise CatalogError("top level must be an object", path=path)
    _reject_unknown(raw, {"domains"}, "top level", path)
    domains_raw = _require(raw, "domains", list, "top level", path)

    domains: list[Domain] = []
    subjects: list[Subject] = []
    for d in domains_raw:
        if not isinstance(d, dict):
            raise CatalogError("each domain must be an object", path=path, field="domains")
        _reject_unknown(d, _DOMAIN_KEYS, "domain", path)
        did = _require(d, "id", str, "domain", path)
        if not _ID_RE.match(did):
            raise CatalogError(f"domain id '{did}' is not a slug", path=path, field="domains.id")
        if any(x.id == did for x in domains):
            raise CatalogError(f"duplicate domain id '{did}'", path=path, field="domains.id")

        facets = []
        for f in _require(d, "facets", list, f"domain '{did}'", path):
            _reject_unknown(f, _FACET_KEYS, f"domain '{did}' facet", path)
            fid = _require(f, "id", str, f"domain '{did}' facet", path)
            hyp = _require(f, "hypothesis", str, f"domain '{did}' facet", path)
            if fid not in FACET_IDS:
                raise CatalogError(f"unknown facet id '{fid}'", path=path, field=f"domain '{did}'")
            if not hyp.strip():
                raise CatalogError(f"facet '{fid}' has empty hypothesis", path=path, field=f"domain '{did}'")
            if any(x.id == fid for x in facets):
                raise CatalogError(f"duplicate facet '{fid}'", path=path, field=f"domain '{did}'")
            facets.append(FacetId(fid, hyp))
        if not facets:
            raise CatalogError(f"domain '{did}' has no facets", path=path, field="facets")

        toggles = d.get("rule_toggles", {})
        if not isinstance(toggles, dict):
            raise CatalogError("rule_toggles must be an object", path=path, field=f"domain '{did}'")
        for rid, val in toggles.items():
            if not isinstance(val, (bool, dict)) or (
                isinstance(val, dict) and not all(isinstance(v, bool) for v in val.values())
            ):
                raise CatalogError(
                    f"rule_toggles['{rid}'] must be bool or {{facet: bool}}", path=path, field=f"domain '{did}'"
                )

        ner_tags = d.get("ner_tags", [])
        if not isinstance(ner_tags, list) or not all(isinstance(t, str) for t in ner_tags):
            raise CatalogError("ner_tags must be a list of strings", path=path, field=f"domain '{did}'")

        domain = Domain(did, tuple(facets), dict(toggles), frozenset(ner_tags))
        domains.append(domain)

        seen_aliases: dict[str, str] = {}  # normalized alias -> subject id
        for s in _require(d, "subjects", list, f"domain '{did}'", path):
            if not isinstance(s, dict):
                raise CatalogError("each subject must be an object", path=path, field=f"domain '{did}'")
            _reject_unknown(s, _SUBJECT_KEYS, f"domain '{did}' subject", path)
            sid = _require(s, "id", str, f"domain '{did}' subject", path)
            if not _ID_RE.match(sid):
                raise CatalogError(f"subject id '{sid}' is not a slug", path=path, field="subjects.id")
            if any(x.id == sid for x in subjects):
                raise CatalogError(f"duplicate subject id '{sid}'", path=path, field="subjects.id")
            name = _require(s, "name", str, f"subject '{sid}'", path).strip()
            if not name:
                raise CatalogError(f"subject '{sid}' has empty name", path=path, field="name")

            aliases: list[str] = []
            for a in s.get("aliases", []):
                if not isinstance(a, str) or not a.strip():
                    raise CatalogError(f"subject '{sid}' has an empty alias", path=path, field="aliases")
                aliases.append(a.strip())
            if name not in aliases:
                aliases.insert(0, name)
            if domain.enrich_plurals:
                for a in list(aliases):
                    plural = pluralize(a)
                    if plural not in aliases:
                        aliases.append(plural)
            # dedupe on normalized form, order-preserving
            deduped: list[str] = []
            for a in aliases:
                if normalize_phrase(a) not in (normalize_phrase(x) for x in deduped):
                    deduped.append(a)
            for a in deduped:
                key = normalize_phrase(a)
                if key in seen_aliases:
                    raise CatalogError(
                        f"alias '{a}' is shared by subjects '{seen_aliases[key]}' and '{sid}' in domain '{did}'",
                        path=path,
                        field="aliases",
                    )
                seen_aliases[key] = sid
            subjects.append(Subject(sid, did, name, tuple(deduped)))

    return SubjectCatalog(domains, subjects)
