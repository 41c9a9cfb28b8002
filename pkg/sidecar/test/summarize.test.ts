import request from "supertest";
import { describe, expect, it } from "vitest";

import { app } from "./helpers";

describe("POST /v1/summarize", () => {
  it("summarizes a paraphrase cluster with one of its members", async () => {
    const sentences = [
      "Fried rice is a popular Chinese dish.",
      "Fried rice is a famous dish from China.",
      "One of the most popular Chinese food is fried rice.",
    ];
    const res = await request(app()).post("/v1/summarize").send({ sentences });
    expect(res.status).toBe(200);
    expect(sentences).toContain(res.body.summary);
  });

  it("echoes a single input sentence", async () => {
    const res = await request(app())
      .post("/v1/summarize")
      .send({ sentences: ["Beer is a drink."] });
    expect(res.body.summary).toBe("Beer is a drink.");
  });

  it("is deterministic (zero-temperature contract)", async () => {
    const sentences = [
      "Germans brew excellent beer for the October beer festivals.",
      "Germans brew fine beer during beer festivals in October.",
      "Germans drink strong coffee with cake every afternoon.",
    ];
    const first = await request(app()).post("/v1/summarize").send({ sentences });
    const second = await request(app()).post("/v1/summarize").send({ sentences });
    expect(first.body.summary).toBe(second.body.summary);
  });

  it("501s when disabled", async () => {
    const res = await request(app({ summarizerEnabled: false }))
      .post("/v1/summarize")
      .send({ sentences: ["Beer is a drink."] });
    expect(res.status).toBe(501);
  });

  it("400s on empty input", async () => {
    const res = await request(app()).post("/v1/summarize").send({ sentences: [] });
    expect(res.status).toBe(400);
  });
});
