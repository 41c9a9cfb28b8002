"""Word tables backing the deterministic reference annotator.

Everything here is a documented test double: a closed-class map, a content
lexicon for the bundled corpora, suffix heuristics for the rest, and a small
entity gazetteer (GPE/NORP/PERSON). Coverage is deliberately desk-scale.
"""

from __future__ import annotations

CLOSED_CLASS = {}

for _w in (
    "the a an this that these those some any each every no all both either "
    "neither another such what which whatever"
).split():
    CLOSED_CLASS[_w] = "DET"

for _w in (
    "i you he she it we they me him her us them my your his its our their "
    "mine yours hers ours theirs myself yourself himself herself itself "
    "ourselves yourselves themselves who whom someone anyone everyone "
    "something anything everything nothing"
).split():
    CLOSED_CLASS[_w] = "PRON"

for _w in (
    "in on at of for with from by about into during after before over under "
    "between among through around near across against along behind beyond "
    "inside outside toward towards upon within without per off up down onto"
).split():
    CLOSED_CLASS[_w] = "ADP"

for _w in "to not".split():
    CLOSED_CLASS[_w] = "PART"

for _w in "and or but nor so yet".split():
    CLOSED_CLASS[_w] = "CCONJ"

for _w in "because although though while if when since unless until whereas as".split():
    CLOSED_CLASS[_w] = "SCONJ"

for _w in "will would can could should may might must shall".split():
    CLOSED_CLASS[_w] = "AUX"

# be/have/do forms are tagged VERB so copular roots satisfy the root-is-a-verb
# filter rule under this annotator as well.
_BE_HAVE_DO = {
    "is": "be", "are": "be", "was": "be", "were": "be", "am": "be",
    "be": "be", "been": "be", "being": "be",
    "has": "have", "have": "have", "had": "have", "having": "have",
    "do": "do", "does": "do", "did": "do", "doing": "do", "done": "do",
}

CONTENT_LEXICON: dict[str, str] = {}

for _w in (
    "wear like eat drink use visit serve save run reach look work enjoy "
    "celebrate cook bake brew pray worship meditate wrap carry protect train "
    "help teach study speak live love make take give hold keep bring offer "
    "burn light prepare share sing gather honor respect follow begin start "
    "end open close greet bow exchange decorate host attend mark symbolize "
    "represent consider believe know think say tell add put get go come see "
    "watch read write play climb fight rescue extinguish respond wake rise "
    "finish complete earn charge argue defend advise investigate inspect "
    "build design fix repair clean brush drive fly sail swim practice want "
    "need mean feature include remain stay seem become grow sew weave stitch "
    "ferment roast steam boil fry grill season dominate value vote review appear"
).split():
    CONTENT_LEXICON[_w] = "VERB"

for _w in (
    "lawyer suit firefighter ladder fire building life tofu ingredient "
    "cuisine beer festival celebration currywurst restaurant sky country "
    "people man woman child food dish meal rice bread soup noodle sausage "
    "cheese wine coffee tea ale cider sake juice milk beverage toast culture "
    "robe uniform costume kimono sari scarf shoe hat glove belt temple "
    "church mosque shrine altar candle incense offering blessing prayer "
    "ceremony wedding funeral ritual tradition custom holiday ancestor "
    "generation monk priest nun believer teacher doctor nurse engineer chef "
    "waiter driver pilot farmer fisherman player job duty habit routine "
    "skill career tool equipment gear helmet hose truck station court "
    "courtroom client case contract document office city town village "
    "region area place home house family friend neighbor street morning "
    "evening night day week month year time water dinner breakfast lunch "
    "snack dessert delicacy recipe flavor spice garlic onion pepper salt "
    "sugar oil butter egg meat pork beef chicken fish vegetable fruit apple "
    "grape barley hop malt brewery pub cocktail music song dance instrument "
    "art craft pottery painting language world part way thing kind "
    "type color garment fabric silk cotton wool heritage folklore henna "
    "bride groom guest gift lantern parade carnival harvest rite chant "
    "espresso pint cup glass bar menu table chair drum bell gong curry stew "
    "dumpling chopstick bamboo dragon emperor king queen market business "
    "company lesson class school university book paper pen law firm"
).split():
    CONTENT_LEXICON[_w] = "NOUN"

for _w in (
    "professional major popular famous traditional typical common special "
    "important sacred holy ancient old new young big small large long short "
    "hot cold warm spicy sweet sour bitter fresh dry red white black blue "
    "green yellow colorful beautiful delicious tasty happy proud brave "
    "strong hard good bad several formal casual festive daily modern local "
    "regional national religious cultural public private rich poor thick "
    "thin dirty quick slow early late bright dark loud quiet deep "
    "main central eastern western northern southern key notable many few tidy "
    "much various numerous other own more most first last next same bridal "
    "everyday favorite unique distinct certain tall sturdy excellent silent "
    "plain cheap nervous flat heavy soft hearty"
).split():
    CONTENT_LEXICON[_w] = "ADJ"

for _w in (
    "professionally often usually traditionally typically very really well "
    "together again also still only just too quite always never sometimes "
    "rarely regularly deeply warmly proudly carefully quickly slowly "
    "generally commonly widely mostly mainly here there away back then now "
    "today sometimes everywhere"
).split():
    CONTENT_LEXICON[_w] = "ADV"

for _w, _lemma in _BE_HAVE_DO.items():
    CONTENT_LEXICON[_w] = "VERB"

# surface -> lemma for forms rule-based reduction gets wrong
IRREGULAR_VERB_LEMMAS = {
    **_BE_HAVE_DO,
    "went": "go", "gone": "go", "goes": "go",
    "ate": "eat", "eaten": "eat",
    "wore": "wear", "worn": "wear",
    "made": "make", "took": "take", "taken": "take",
    "gave": "give", "given": "give",
    "drank": "drink", "drunk": "drink",
    "ran": "run", "said": "say", "saw": "see", "seen": "see",
    "got": "get", "gotten": "get",
    "held": "hold", "kept": "keep", "wrote": "write", "written": "write",
    "built": "build", "bought": "buy", "brought": "bring",
    "taught": "teach", "thought": "think", "knew": "know", "known": "know",
    "grew": "grow", "grown": "grow", "sang": "sing", "sung": "sing",
    "spoke": "speak", "spoken": "speak", "came": "come", "rose": "rise",
    "risen": "rise", "woke": "wake", "began": "begin", "begun": "begin",
    "fought": "fight", "told": "tell", "put": "put", "read": "read",
    "lit": "light", "wove": "weave", "woven": "weave", "sewn": "sew",
    "left": "leave", "felt": "feel", "met": "meet", "sat": "sit",
    "stood": "stand", "found": "find", "lost": "lose",
}

# plural surface -> singular lemma where suffix-stripping fails
IRREGULAR_NOUN_LEMMAS = {
    "men": "man", "women": "woman", "children": "child", "people": "person",
    "feet": "foot", "teeth": "tooth", "geese": "goose", "mice": "mouse",
    "lives": "life", "wives": "wife", "knives": "knife", "leaves": "leaf",
    "loaves": "loaf", "thieves": "thief", "shelves": "shelf",
    "wolves": "wolf", "halves": "half", "calves": "calf", "elves": "elf",
    "scarves": "scarf", "fishermen": "fisherman", "policemen": "policeman",
    "firemen": "fireman", "businessmen": "businessman",
    "sheep": "sheep", "fish": "fish", "deer": "deer", "series": "series",
    "species": "species", "dice": "die", "oxen": "ox",
}

# past-tense verb surfaces that carry no -ed suffix; used by the past-root rule
IRREGULAR_PAST = frozenset(
    "was were had did went ate wore made took gave drank ran said saw got "
    "held kept wrote built bought brought taught thought knew grew sang "
    "spoke came rose woke began fought told lit wove left felt met sat "
    "stood found lost".split()
)

# entity gazetteer: normalized phrase -> NER tag (multi-token keys allowed)
GAZETTEER: dict[str, str] = {}

for _p in (
    "germany france china japan india italy spain mexico brazil vietnam "
    "thailand turkey greece egypt kenya canada australia russia poland "
    "austria bavaria texas california london paris berlin munich tokyo "
    "beijing delhi rome madrid; east asia; south asia; southeast asia; "
    "middle east; latin america; north america; western europe; "
    "united states; the u.s.; the states; u.s.; usa; uk; "
    "united kingdom; new york; new yorker"
).split(";"):
    for _name in ([_p.strip()] if "," not in _p else _p.split(",")):
        _name = _name.strip()
        if _name:
            GAZETTEER[_name] = "GPE"

for _p in (
    "germans; german; french; frenchman; frenchmen; chinese; japanese; "
    "indian; indians; italian; italians; spanish; spaniards; mexican; "
    "mexicans; brazilian; brazilians; vietnamese; thai; thais; turkish; "
    "turks; greek; greeks; egyptian; egyptians; kenyan; kenyans; canadian; "
    "canadians; australian; australians; russian; russians; polish; poles; "
    "austrian; austrians; american; americans; texan; texans; californian; "
    "californians; east asian; east asians; south asian; south asians; "
    "european; europeans; christians; christian; buddhists; buddhist; "
    "muslims; muslim; hindus; hindu; jews; jewish; sikhs; sikh; catholics; "
    "catholic; protestants; protestant"
).split(";"):
    _name = _p.strip()
    if _name:
        GAZETTEER[_name] = "NORP"

for _p in (
    "buddha; jesus; christ; jesus christ; muhammad; moses; john; mary; "
    "david; sarah; michael; anna; peter; maria; james; elizabeth; robert; "
    "linda; william; patricia; thomas; jennifer; charles; gandhi; confucius"
).split(";"):
    _name = _p.strip()
    if _name:
        GAZETTEER[_name] = "PERSON"

GAZETTEER_MAX_TOKENS = max(len(k.split()) for k in GAZETTEER)
