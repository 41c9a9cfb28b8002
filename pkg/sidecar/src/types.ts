export interface WireToken {
  surface: string;
  lemma: string;
  pos: string;
  ner: string | null;
  is_stop: boolean;
  start: number;
  end: number;
}

export interface WireSentence {
  text: string;
  root: number;
  tokens: WireToken[];
}

export interface AnnotateRequest {
  texts: string[];
}

export interface AnnotateResponse {
  documents: { sentences: WireSentence[] }[];
}

export interface EmbedRequest {
  texts: string[];
}

export interface EmbedResponse {
  vectors: number[][];
  dim: number;
}

export interface NliRequest {
  premise: string;
  hypotheses: string[];
}

export interface NliResponse {
  entail_probs: number[];
}

export interface SummarizeRequest {
  sentences: string[];
}

export interface SummarizeResponse {
  summary: string;
}

export interface HealthResponse {
  status: string;
  models: {
    annotator: string;
    embedder: string;
    nli: string;
    summarizer: string;
  };
  embedding_dim: number;
  max_batch: number;
}
