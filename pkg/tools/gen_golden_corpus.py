#!/usr/bin/env python3
"""Regenerates data/golden/corpus.jsonl, the bundled 200-sentence synthetic
corpus. Fixed tables, no randomness: rerunning reproduces the file byte for
byte.

The sentences are engineered against the reference providers to exercise
every pipeline behavior: paraphrase groups that must cluster, per-stage
rejects (pronouns, deictics, questions, URLs, past-tense roots), facet-gate
vetoes, "other" routing, subject-swapped content for distinctiveness, and
post-filter drops (single-host clusters, bad patterns, near-duplicate text).
"""

from __future__ import annotations

import json
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "data" / "golden" / "corpus.jsonl"

H = ["worldnotes.example.com", "culturelog.example.org", "folkways.example.net",
     "travelfare.example.com", "fieldrecords.example.org"]

# (text, host) pairs; one document per sentence unless grouped further below.
SENTENCES: list[tuple[str, str]] = []


def group(texts: list[str], hosts: list[str] | None = None):
    hosts = hosts or H
    for i, text in enumerate(texts):
        SENTENCES.append((text, hosts[i % len(hosts)]))


# --- germany ---------------------------------------------------------------

group([  # drinks: beer festivals (4 paraphrases)
    "Germans brew excellent beer for the October beer festivals.",
    "Germans brew fine beer during beer festivals in October.",
    "Germans brew strong beer for beer festivals each October.",
    "Germans brew good beer for big beer festivals in October.",
])
group([  # drinks: coffee afternoons (3)
    "Germans drink strong coffee with cake in small cafes.",
    "Germans drink strong coffee with cake every afternoon.",
    "Germans drink hot coffee with cake in their afternoon.",
])
group([  # drinks: wine, masked-identical with the france wine group (3)
    "Germans enjoy drinking local wine with dinner.",
    "Germans enjoy drinking local wine at dinner.",
    "Germans enjoy drinking local wine after dinner.",
])
group([  # food: currywurst (3)
    "Germans like their currywurst with fried sausages and bread.",
    "Germans like their currywurst with fried sausages and mustard.",
    "Germans like their currywurst served with fried sausages.",
])
group([  # traditions: past-tense roots, survive only via the traditions toggle (3)
    "Germans wore traditional costumes at old harvest festivals.",
    "Germans wore traditional costumes during old harvest festivals.",
    "Germans wore bright traditional costumes at harvest festivals.",
])
group([  # rituals: candles (3)
    "Germans light candles during quiet church ceremonies.",
    "Germans light candles at quiet church ceremonies.",
    "Germans light white candles during church ceremonies.",
])
group(  # clothing: all one host -> dropped by the source-diversity post-filter
    [
        "Germans wear warm wool jackets in cold winters.",
        "Germans wear thick wool jackets in cold weather.",
        "Germans wear heavy wool jackets during cold winters.",
    ],
    hosts=["plainfolk.example.com"],
)
group([  # counter-label veto: politics probability trips the gate
    "Germans vote for beer policies in parliament elections.",
])
group([  # stage-2 rejects
    "I visited Germany to eat currywurst.",
    "This restaurant serves German currywurst.",
    "Do Germans like their currywurst?",
    "Visit Germany for beer festivals every autumn.",
    "Germans post beer reviews at www.beerblog.example every week.",
])

# --- france ------------------------------------------------------------------

group([  # drinks: wine, subject-swapped twin of the germany group (3)
    "Frenchmen enjoy drinking local wine with dinner.",
    "Frenchmen enjoy drinking local wine at dinner.",
    "Frenchmen enjoy drinking local wine after dinner.",
])
group([  # food: bread and cheese (4)
    "Frenchmen bake fresh bread with soft cheese daily.",
    "Frenchmen bake fresh bread and soft cheese pastries.",
    "Frenchmen bake warm bread with soft cheese daily.",
    "Frenchmen bake fresh bread with soft cheese each morning.",
])
group([  # multi-subject sentence, dropped at the facet gate
    "Germany and France share many food traditions.",
])

# --- east asia ----------------------------------------------------------------

group([  # food: tofu (4)
    "Tofu is a major ingredient in many East Asian cuisines.",
    "Tofu is a major ingredient across East Asian cooking.",
    "Tofu is a key ingredient in most East Asian dishes.",
    "Tofu is a major ingredient in many East Asian soups.",
])
group([  # food: rice noodles (3)
    "Rice noodles dominate everyday East Asian street food.",
    "Rice noodles dominate daily East Asian street food.",
    "Rice noodles dominate modern East Asian street food.",
])
group(  # rituals: 3 of 4 identical texts -> dropped by the near-duplicate filter
    [
        "East Asians burn incense at family shrines.",
        "East Asians burn incense at family shrines.",
        "East Asians burn incense at family shrines.",
        "East Asians burn incense in family shrines.",
    ],
)

# --- buddhists ------------------------------------------------------------------

group([  # rituals: meditation (4)
    "Buddhists practice quiet meditation in mountain temples.",
    "Buddhists practice silent meditation in mountain temples.",
    "Buddhists practice quiet meditation in village temples.",
    "Buddhists practice quiet meditation inside old temples.",
])
group([  # rituals: PERSON entity allowed because religion drops that rule (3)
    "Buddhists honor Buddha with incense and quiet prayers.",
    "Buddhists honor Buddha with burning incense and prayers.",
    "Buddhists honor Buddha with incense and morning prayers.",
])
group([  # routed to facet "other": no facet clears the threshold (3)
    "Buddhists value patience in everyday village life.",
    "Buddhists value patience in daily village life.",
    "Buddhists value deep patience in village life.",
])

# --- lawyer -----------------------------------------------------------------------

group([  # clothing: suits (4)
    "Lawyers wear dark suits to look professional.",
    "Lawyers wear plain dark suits to look professional.",
    "Lawyers wear dark formal suits to look professional.",
    "Lawyers wear dark suits to look more professional.",
])
group([  # food: blocked later by the "the menu" bad pattern (3)
    "Lawyers eat quick lunch specials from the menu daily.",
    "Lawyers eat quick lunch specials from the menu often.",
    "Lawyers eat cheap lunch specials from the menu daily.",
])
group([  # behaviors: courtroom work (3)
    "Lawyers defend clients in court with careful arguments.",
    "Lawyers defend their clients in court with careful arguments.",
    "Lawyers defend nervous clients in court with careful arguments.",
])
group([  # routed to facet "other" (3)
    "Lawyers keep long hours in quiet offices.",
    "Lawyers keep very long hours in quiet offices.",
    "Lawyers keep long hours in small quiet offices.",
])

# --- firefighter ----------------------------------------------------------------------

group([  # behaviors: ladders (4)
    "Firefighters use tall ladders to reach roof fires.",
    "Firefighters use long ladders to reach roof fires.",
    "Firefighters use tall ladders to reach attic fires.",
    "Firefighters use sturdy ladders to reach roof fires.",
])
group([  # behaviors: rescue drills, matched via the irregular plural alias (3)
    "Firemen train hard and practice rescue drills daily.",
    "Firemen train hard and practice rescue drills weekly.",
    "Firemen train often and practice rescue drills daily.",
])
group([  # stage-2 reject plus an unmatched-subject sentence
    "Firefighters run into burning buildings to save lives.",
    "You should thank firefighters for their daily work.",
])

CORE = len(SENTENCES)

# Filler padding to exactly 200 sentences: no catalog subject ever matches.
_FILLER_TOPICS = [
    "Quiet rivers carry cold water past empty fields.",
    "Old bridges span deep valleys under gray skies.",
    "Small gardens grow slow vegetables behind stone walls.",
    "Long trains cross wide plains before dark evenings.",
    "Bright kites climb high winds above open beaches.",
]
_pad_index = 0
while len(SENTENCES) < 200:
    base = _FILLER_TOPICS[_pad_index % len(_FILLER_TOPICS)]
    SENTENCES.append((f"{base[:-1]} near milestone {_pad_index}.", H[_pad_index % len(H)]))
    _pad_index += 1


def main() -> None:
    lines = []
    for i, (text, host) in enumerate(SENTENCES):
        doc = {"id": f"d{i:03d}", "url": f"https://{host}/page{i:03d}", "text": text}
        lines.append(json.dumps(doc, ensure_ascii=False))
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} documents ({CORE} core + {len(lines) - CORE} filler) to {OUT}")


if __name__ == "__main__":
    main()
