// Entity gazetteer layered over the language model's output: the lite model
// ships no GPE/NORP/PERSON recognition, so those tags come from curated
// phrase tables (longest match over token windows, capitalization required).

const GPE_PHRASES = [
  "germany", "france", "china", "japan", "india", "italy", "spain", "mexico",
  "brazil", "vietnam", "thailand", "turkey", "greece", "egypt", "kenya",
  "canada", "australia", "russia", "poland", "austria", "bavaria", "texas",
  "california", "london", "paris", "berlin", "munich", "tokyo", "beijing",
  "delhi", "rome", "madrid", "east asia", "south asia", "southeast asia",
  "middle east", "latin america", "north america", "western europe",
  "united states", "the u.s.", "the states", "u.s.", "usa", "uk",
  "united kingdom", "new york", "new yorker",
];

const NORP_PHRASES = [
  "germans", "german", "french", "frenchman", "frenchmen", "chinese",
  "japanese", "indian", "indians", "italian", "italians", "spanish",
  "spaniards", "mexican", "mexicans", "brazilian", "brazilians",
  "vietnamese", "thai", "thais", "turkish", "turks", "greek", "greeks",
  "egyptian", "egyptians", "kenyan", "kenyans", "canadian", "canadians",
  "australian", "australians", "russian", "russians", "polish", "poles",
  "austrian", "austrians", "american", "americans", "texan", "texans",
  "californian", "californians", "east asian", "east asians",
  "south asian", "south asians", "european", "europeans", "christians",
  "christian", "buddhists", "buddhist", "muslims", "muslim", "hindus",
  "hindu", "jews", "jewish", "sikhs", "sikh", "catholics", "catholic",
  "protestants", "protestant",
];

const PERSON_PHRASES = [
  "buddha", "jesus", "christ", "jesus christ", "muhammad", "moses", "john",
  "mary", "david", "sarah", "michael", "anna", "peter", "maria", "james",
  "elizabeth", "robert", "linda", "william", "patricia", "thomas",
  "jennifer", "charles", "gandhi", "confucius",
];

export const GAZETTEER: Map<string, string> = new Map();
for (const p of GPE_PHRASES) GAZETTEER.set(p, "GPE");
for (const p of NORP_PHRASES) GAZETTEER.set(p, "NORP");
for (const p of PERSON_PHRASES) GAZETTEER.set(p, "PERSON");

export const GAZETTEER_MAX_TOKENS = Math.max(...[...GAZETTEER.keys()].map((k) => k.split(" ").length));

// Base forms of frequent verbs, used to pick the root token when the tagger
// leaves the main verb as NOUN/ADP (single-word POS models often do for
// "use", "like", "work"...). Inflections are matched by suffix stripping.
export const COMMON_VERBS = new Set(
  (
    "be have do use like make take give get go come see say tell know think " +
    "wear eat drink serve save reach look work enjoy celebrate cook bake brew " +
    "pray worship meditate wrap carry protect train help teach study speak " +
    "live love hold keep bring offer burn light prepare share sing gather " +
    "honor respect follow begin start end open close greet bow exchange " +
    "decorate host attend mark symbolize represent consider believe add put " +
    "watch read write play climb fight rescue extinguish respond wake rise " +
    "finish complete earn charge argue defend advise investigate inspect " +
    "build design fix repair clean brush drive fly sail swim practice want " +
    "need mean feature include remain stay seem become grow sew weave stitch " +
    "ferment roast steam boil fry grill season dominate value vote review " +
    "appear visit run walk sit stand sleep dance drum chant bless marry bury"
  ).split(" "),
);

export function verbBase(lower: string): string | null {
  if (COMMON_VERBS.has(lower)) return lower;
  for (const suffix of ["ing", "ed", "es", "s"]) {
    if (lower.length > suffix.length + 1 && lower.endsWith(suffix)) {
      const stem = lower.slice(0, -suffix.length);
      if (COMMON_VERBS.has(stem)) return stem;
      if (COMMON_VERBS.has(stem + "e")) return stem + "e";
      if (stem.length > 2 && stem[stem.length - 1] === stem[stem.length - 2] && COMMON_VERBS.has(stem.slice(0, -1))) {
        return stem.slice(0, -1);
      }
    }
  }
  return null;
}
