// Mirrors the engine-side provider contract suite: every response the
// pipeline relies on must hold for arbitrary corpus text, not just the happy
// paths above. Runs over a slice of the bundled golden corpus.

import { readFileSync } from "node:fs";
import { join } from "node:path";

import request from "supertest";
import { describe, expect, it } from "vitest";

import { WireSentence } from "../src/types";
import { app, norm } from "./helpers";

const CORPUS = join(__dirname, "..", "..", "data", "golden", "corpus.jsonl");

function corpusTexts(limit: number): string[] {
  return readFileSync(CORPUS, "utf-8")
    .split("\n")
    .filter((line) => line.trim())
    .slice(0, limit)
    .map((line) => JSON.parse(line).text as string);
}

describe("wire-protocol conformance over golden corpus text", () => {
  it("annotation output satisfies the pipeline's token invariants", async () => {
    const texts = corpusTexts(40);
    const server = app({ maxBatch: 64 });
    const res = await request(server).post("/v1/annotate").send({ texts });
    expect(res.status).toBe(200);
    expect(res.body.documents).toHaveLength(texts.length);
    for (const doc of res.body.documents) {
      for (const sentence of doc.sentences as WireSentence[]) {
        let previousEnd = 0;
        for (const token of sentence.tokens) {
          expect(token.start).toBeGreaterThanOrEqual(previousEnd);
          expect(sentence.text.slice(token.start, token.end)).toBe(token.surface);
          previousEnd = token.end;
        }
        expect(sentence.root).toBeGreaterThanOrEqual(-1);
        expect(sentence.root).toBeLessThan(sentence.tokens.length);
        if (sentence.root >= 0) {
          expect(["VERB", "AUX"]).toContain(sentence.tokens[sentence.root].pos);
        }
      }
    }
  });

  it("embeddings stay unit-norm and fixed-width across arbitrary text", async () => {
    const texts = corpusTexts(25);
    const res = await request(app({ maxBatch: 64 })).post("/v1/embed").send({ texts });
    expect(res.status).toBe(200);
    for (const vector of res.body.vectors) {
      expect(vector).toHaveLength(res.body.dim);
      expect(Math.abs(norm(vector) - 1)).toBeLessThanOrEqual(1e-6);
    }
  });

  it("entailment probabilities stay in range across arbitrary premises", async () => {
    const server = app({ maxBatch: 64 });
    for (const text of corpusTexts(10)) {
      const res = await request(server)
        .post("/v1/nli")
        .send({ premise: text, hypotheses: ["This text is about food", "This text is about politics"] });
      expect(res.status).toBe(200);
      for (const p of res.body.entail_probs) {
        expect(p).toBeGreaterThanOrEqual(0);
        expect(p).toBeLessThanOrEqual(1);
      }
    }
  });
});
