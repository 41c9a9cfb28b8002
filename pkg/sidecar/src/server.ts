import express, { Express, Request, Response } from "express";

import { ServiceConfig } from "./config";
import { EMBEDDING_DIM, annotateText, embedText, entailProbability, nlp, summarizeSentences } from "./engine";
import {
  AnnotateResponse,
  EmbedResponse,
  HealthResponse,
  NliResponse,
  SummarizeResponse,
} from "./types";

function isStringArray(value: unknown): value is string[] {
  return Array.isArray(value) && value.every((x) => typeof x === "string");
}

export function createServer(config: ServiceConfig): Express {
  const app = express();
  app.use(express.json({ limit: "8mb" }));

  const withModels = (handler: (req: Request, res: Response) => void) => {
    return (req: Request, res: Response) => {
      try {
        nlp();
      } catch (error) {
        res.status(503).json({ error: `model load failure: ${String(error)}` });
        return;
      }
      handler(req, res);
    };
  };

  app.get("/v1/health", (_req, res) => {
    const body: HealthResponse = {
      status: "ok",
      models: config.models,
      embedding_dim: EMBEDDING_DIM,
      max_batch: config.maxBatch,
    };
    res.json(body);
  });

  app.post(
    "/v1/annotate",
    withModels((req, res) => {
      const texts = (req.body ?? {}).texts;
      if (!isStringArray(texts)) {
        res.status(400).json({ error: "body must be {texts: string[]}" });
        return;
      }
      if (texts.length > config.maxBatch) {
        res.status(413).json({ error: `batch of ${texts.length} exceeds max_batch ${config.maxBatch}` });
        return;
      }
      const body: AnnotateResponse = {
        documents: texts.map((t) => ({ sentences: annotateText(t) })),
      };
      res.json(body);
    }),
  );

  app.post(
    "/v1/embed",
    withModels((req, res) => {
      const texts = (req.body ?? {}).texts;
      if (!isStringArray(texts)) {
        res.status(400).json({ error: "body must be {texts: string[]}" });
        return;
      }
      if (texts.length > config.maxBatch) {
        res.status(413).json({ error: `batch of ${texts.length} exceeds max_batch ${config.maxBatch}` });
        return;
      }
      const body: EmbedResponse = { vectors: texts.map(embedText), dim: EMBEDDING_DIM };
      res.json(body);
    }),
  );

  app.post(
    "/v1/nli",
    withModels((req, res) => {
      const { premise, hypotheses } = req.body ?? {};
      if (typeof premise !== "string" || premise.length === 0) {
        res.status(400).json({ error: "premise must be a non-empty string" });
        return;
      }
      if (!isStringArray(hypotheses) || hypotheses.length === 0) {
        res.status(400).json({ error: "hypotheses must be a non-empty string array" });
        return;
      }
      if (hypotheses.length > config.maxBatch) {
        res.status(413).json({ error: `batch of ${hypotheses.length} exceeds max_batch ${config.maxBatch}` });
        return;
      }
      const body: NliResponse = { entail_probs: hypotheses.map((h) => entailProbability(premise, h)) };
      res.json(body);
    }),
  );

  app.post(
    "/v1/summarize",
    withModels((req, res) => {
      if (!config.summarizerEnabled) {
        res.status(501).json({ error: "summarizer disabled" });
        return;
      }
      const sentences = (req.body ?? {}).sentences;
      if (!isStringArray(sentences) || sentences.length === 0) {
        res.status(400).json({ error: "sentences must be a non-empty string array" });
        return;
      }
      const body: SummarizeResponse = { summary: summarizeSentences(sentences) };
      res.json(body);
    }),
  );

  app.use((_req, res) => {
    res.status(404).json({ error: "not found" });
  });

  return app;
}
