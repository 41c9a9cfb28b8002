// Model layer. Everything is lazily initialized on first use: the language
// model is small, but the word-embedding table is ~100MB of JSON and only
// pays off when a request actually needs it. All functions are pure given
// the loaded models, and decoding is deterministic ("zero temperature"):
// identical requests produce identical responses.

import winkNLP, { ItemSentence, ItemToken, ItsFunction, Tokens, WinkMethods } from "wink-nlp";

import { GAZETTEER, GAZETTEER_MAX_TOKENS, verbBase } from "./gazetteer";
import { WireSentence, WireToken } from "./types";

export const EMBEDDING_DIM = 100;

// wink's .d.ts types a few accessors inconsistently with out(); funnel them here
function accessor<T>(fn: unknown): ItsFunction<T> {
  return fn as ItsFunction<T>;
}

let instance: WinkMethods | null = null;

export function nlp(): WinkMethods {
  if (instance === null) {
    // eslint-disable-next-line @typescript-eslint/no-var-requires
    const model = require("wink-eng-lite-web-model");
    // eslint-disable-next-line @typescript-eslint/no-var-requires
    const embeddings = require("wink-embeddings-sg-100d");
    instance = winkNLP(model, ["sbd", "pos", "ner"], embeddings);
  }
  return instance;
}

interface TokenView {
  surface: string;
  lemma: string;
  pos: string;
  type: string;
  isStop: boolean;
  start: number; // char offset in the whole input text
  end: number;
}

// --- annotation -----------------------------------------------------------

export function annotateText(text: string): WireSentence[] {
  const engine = nlp();
  const its = engine.its;
  const doc = engine.readDoc(text);

  // reconstruct global char offsets from the preceding-whitespace strings
  const views: TokenView[] = [];
  let cursor = 0;
  doc.tokens().each((t: ItemToken) => {
    const spaces = t.out(accessor<string>(its.precedingSpaces)) as string;
    const surface = t.out();
    cursor += spaces.length;
    views.push({
      surface,
      lemma: (t.out(accessor<string>(its.lemma)) as string) || surface.toLowerCase(),
      pos: t.out(its.pos) as string,
      type: t.out(its.type) as string,
      isStop: t.out(its.stopWordFlag) as unknown as boolean,
      start: cursor,
      end: cursor + surface.length,
    });
    cursor += surface.length;
  });

  const ner = gazetteerTags(views);

  const sentences: WireSentence[] = [];
  doc.sentences().each((s: ItemSentence) => {
    const [first, last] = s.out(accessor<number[]>(its.span)) as unknown as [number, number];
    if (first === undefined || last === undefined || last < first) return;
    const slice = views.slice(first, last + 1);
    const sentStart = slice[0].start;
    const sentText = text.slice(sentStart, slice[slice.length - 1].end);
    const tokens: WireToken[] = slice.map((v, i) => ({
      surface: v.surface,
      lemma: v.lemma,
      pos: v.pos,
      ner: ner[first + i],
      is_stop: v.isStop,
      start: v.start - sentStart,
      end: v.end - sentStart,
    }));
    sentences.push({ text: sentText, root: resolveRoot(tokens), tokens });
  });
  return sentences;
}

function gazetteerTags(views: TokenView[]): (string | null)[] {
  const tags: (string | null)[] = new Array(views.length).fill(null);
  let i = 0;
  while (i < views.length) {
    let hit = 0;
    let tag: string | null = null;
    const limit = Math.min(GAZETTEER_MAX_TOKENS, views.length - i);
    for (let length = limit; length >= 1; length--) {
      const phrase = views
        .slice(i, i + length)
        .map((v) => v.surface.toLowerCase())
        .join(" ");
      const found = GAZETTEER.get(phrase);
      if (found !== undefined) {
        hit = length;
        tag = found;
        break;
      }
    }
    const capitalized = views.slice(i, i + hit).some((v) => /[A-Z]/.test(v.surface[0] ?? ""));
    if (hit > 0 && capitalized) {
      for (let j = i; j < i + hit; j++) tags[j] = tag;
      i += hit;
    } else {
      i += 1;
    }
  }
  return tags;
}

// Root = first verbal token. The single-word tagger often leaves a main verb
// as NOUN/ADP ("use", "like"); a token sitting after a nominal whose base
// form is a common verb is promoted to VERB and becomes the root.
function resolveRoot(tokens: WireToken[]): number {
  for (let i = 0; i < tokens.length; i++) {
    const token = tokens[i];
    if (token.pos === "VERB" || token.pos === "AUX") return i;
    if (i > 0 && token.ner === null && ["NOUN", "PROPN", "ADP", "ADJ"].includes(token.pos)) {
      const prev = tokens[i - 1];
      if (["NOUN", "PROPN", "PRON"].includes(prev.pos)) {
        const base = verbBase(token.surface.toLowerCase());
        if (base !== null) {
          token.pos = "VERB";
          token.lemma = base;
          return i;
        }
      }
    }
  }
  return -1;
}

// --- embeddings -------------------------------------------------------------

function meanVector(tokens: Tokens): number[] | null {
  const its = nlp().its;
  const as = nlp().as;
  if (tokens.length() === 0) return null;
  // as.vector yields the averaged word vector with its norm appended
  const raw = tokens.out(its.value, as.vector) as unknown as number[];
  const vector = raw.slice(0, EMBEDDING_DIM);
  const norm = Math.hypot(...vector);
  if (norm === 0) return null;
  return vector.map((x) => x / norm);
}

const BASIS: number[] = [1, ...new Array(EMBEDDING_DIM - 1).fill(0)];

export function embedText(text: string): number[] {
  const engine = nlp();
  const its = engine.its;
  const doc = engine.readDoc(text);
  const content = doc
    .tokens()
    .filter((t: ItemToken) => t.out(its.type) === "word" && !(t.out(its.stopWordFlag) as unknown as boolean));
  return meanVector(content) ?? meanVector(doc.tokens()) ?? [...BASIS];
}

// --- entailment --------------------------------------------------------------

const TEMPLATE_NOISE = new Set(["text", "topic"]);

function contentLemmas(text: string, dropNoise: boolean): string[] {
  const engine = nlp();
  const its = engine.its;
  const out: string[] = [];
  engine
    .readDoc(text)
    .tokens()
    .each((t: ItemToken) => {
      if (t.out(its.type) !== "word") return;
      if (t.out(its.stopWordFlag) as unknown as boolean) return;
      const lemma = ((t.out(accessor<string>(its.lemma)) as string) || t.out()).toLowerCase();
      if (dropNoise && TEMPLATE_NOISE.has(lemma)) return;
      out.push(lemma);
    });
  return out;
}

function cosine(a: number[], b: number[]): number {
  return a.reduce((sum, x, i) => sum + x * b[i], 0);
}

function normalizeWhitespace(text: string): string {
  return text.trim().replace(/\s+/g, " ").toLowerCase();
}

/**
 * Entailment probability of premise => hypothesis in [0,1].
 *
 * Deterministic blend, documented so callers can reason about thresholds:
 *   exact match (case/space-insensitive)        -> 0.98
 *   otherwise p = clamp01(0.05 + 0.55 * overlap + 0.40 * semantic) where
 *     overlap  = |hypothesis content lemmas found in premise| / |hypothesis lemmas|
 *     semantic = clamp01((cos(embed(premise), embed(hypothesis)) - 0.4) / 0.6)
 * The words "text"/"topic" are ignored in hypotheses so template hypotheses
 * ("This text is about F") reduce to their label.
 */
export function entailProbability(premise: string, hypothesis: string): number {
  if (normalizeWhitespace(premise) === normalizeWhitespace(hypothesis)) return 0.98;
  const premiseTerms = contentLemmas(premise, false);
  const hypTerms = contentLemmas(hypothesis, true);
  let overlap = 0;
  if (hypTerms.length > 0) {
    const premiseSet = new Set(premiseTerms);
    overlap = hypTerms.filter((t) => premiseSet.has(t)).length / hypTerms.length;
  }
  const pv = embedText(premiseTerms.join(" ") || premise);
  const hv = embedText(hypTerms.join(" ") || hypothesis);
  const semantic = Math.min(1, Math.max(0, (cosine(pv, hv) - 0.4) / 0.6));
  return Math.min(1, Math.max(0, 0.05 + 0.55 * overlap + 0.4 * semantic));
}

// --- summarization --------------------------------------------------------------

/** The member sentence nearest the centroid of all member embeddings
 * (ties -> first). Extractive, deterministic. */
export function summarizeSentences(sentences: string[]): string {
  const vectors = sentences.map(embedText);
  const centroid = new Array(EMBEDDING_DIM).fill(0);
  for (const v of vectors) for (let i = 0; i < EMBEDDING_DIM; i++) centroid[i] += v[i] / vectors.length;
  let bestIndex = 0;
  let bestDistance = Infinity;
  vectors.forEach((v, i) => {
    let d = 0;
    for (let k = 0; k < EMBEDDING_DIM; k++) d += (v[k] - centroid[k]) ** 2;
    if (d < bestDistance) {
      bestDistance = d;
      bestIndex = i;
    }
  });
  return sentences[bestIndex];
}
