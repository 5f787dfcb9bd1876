// Canned service payloads used across the UI tests.  The numbers are
// deliberately awkward doubles (long decimal expansions) so that any
// rounding the UI sneaked in would show up as a mismatch.

import type {
  AggregateMatrixResponse,
  CollectionsResponse,
  CompareResponse,
  ExpandResponse,
  TauMatrixResponse,
  WeightedTerm,
} from "../src/types.js";
import { httpError, type Routes } from "./helpers.js";

export const LABELS = ["1840s", "1890s", "FULL"];

export function collectionsFixture(): CollectionsResponse {
  return {
    collections: LABELS.map((label, i) => ({
      label,
      num_docs: 200 + i,
      num_novels: 4,
      total_tokens: 51200 + i,
      vocabulary_size: 900 + i,
      avg_doc_len: 256.0,
    })),
  };
}

const EXPANSIONS: Record<string, Record<string, WeightedTerm[]>> = {
  meteor: {
    "1840s": [
      { term: "omen", weight: 0.4 },
      { term: "heaven", weight: 0.3 },
      { term: "sky", weight: 0.2 },
      { term: "fire", weight: 0.1 },
    ],
    "1890s": [
      { term: "orbit", weight: 0.35 },
      { term: "telescop", weight: 0.3 },
      { term: "sky", weight: 0.2 },
      { term: "photograph", weight: 0.15 },
    ],
    FULL: [
      { term: "sky", weight: 0.4 },
      { term: "omen", weight: 0.25 },
      { term: "orbit", weight: 0.2 },
      { term: "star", weight: 0.15 },
    ],
  },
  vampire: {
    "1890s": [
      { term: "coffin", weight: 0.5 },
      { term: "mist", weight: 0.3 },
      { term: "night", weight: 0.2 },
    ],
    FULL: [
      { term: "coffin", weight: 0.4 },
      { term: "night", weight: 0.35 },
      { term: "castl", weight: 0.25 },
    ],
  },
};

export function expandFixture(
  q: string,
  collection: string,
  top: number
): ExpandResponse {
  const byCollection = EXPANSIONS[q];
  const terms = byCollection?.[collection];
  if (!terms) {
    return { q, collection, absent: true, terms: [] };
  }
  return { q, collection, absent: false, terms: terms.slice(0, top) };
}

export function compareFixture(q: string, a: string, b: string): CompareResponse {
  const expA = expandFixture(q, a, 100);
  const expB = expandFixture(q, b, 100);
  const base = { q, a, b, a_absent: expA.absent, b_absent: expB.absent };
  if (expA.absent || expB.absent) {
    return base;
  }
  const setA = new Set(expA.terms.map((t) => t.term));
  const setB = new Set(expB.terms.map((t) => t.term));
  const overlap = [...setA].filter((t) => setB.has(t)).sort();
  return {
    ...base,
    // fixed awkward values, not recomputed per call
    jaccard: 0.3333333333333333,
    jsd: 0.31127812445913283,
    tau: -0.09090909090909091,
    overlap_terms: overlap,
    a_only: [...setA].filter((t) => !setB.has(t)).sort(),
    b_only: [...setB].filter((t) => !setA.has(t)).sort(),
  };
}

export function jaccardMatrixFixture(): AggregateMatrixResponse {
  const diag = { mean: 1.0, std: 0.0, n: 2 };
  const ab = { mean: 0.44910000000000005, std: 0.14840000000000003, n: 25 };
  const af = { mean: 0.3333333333333333, std: 0.1, n: 25 };
  const bf = { mean: 0.7123, std: 0.0922, n: 25 };
  return {
    metric: "jaccard",
    labels: [...LABELS],
    cells: [
      [diag, ab, af],
      [ab, diag, bf],
      [af, bf, diag],
    ],
  };
}

export function jsdMatrixFixture(): AggregateMatrixResponse {
  const diag = { mean: 0.0, std: 0.0, n: 2 };
  const ab = { mean: 0.6031, std: 0.12020000000000002, n: 25 };
  const bf = { mean: 0.2987654320987654, std: 0.05, n: 24 };
  return {
    metric: "jsd",
    labels: [...LABELS],
    cells: [
      [diag, ab, null],
      [ab, diag, bf],
      [null, bf, diag],
    ],
  };
}

export function tauMatrixFixture(): TauMatrixResponse {
  return {
    metric: "tau",
    queries: ["meteor", "vampire"],
    decades: ["1840s", "1890s"],
    cells: [
      [0.6123456789012345, -0.25],
      [null, 0.875],
    ],
  };
}

export function defaultRoutes(): Routes {
  return {
    collections: () => collectionsFixture(),
    expand: (q, collection, top) => {
      if (!q.trim()) {
        return httpError(400, "bad_request", "missing query parameter 'q'");
      }
      if (!LABELS.includes(collection)) {
        return httpError(404, "unknown_collection", `no collection '${collection}'`);
      }
      return expandFixture(q, collection, top);
    },
    compare: (q, a, b) => compareFixture(q, a, b),
    matrix: (metric) => {
      if (metric === "jaccard") {
        return jaccardMatrixFixture();
      }
      if (metric === "jsd") {
        return jsdMatrixFixture();
      }
      if (metric === "tau") {
        return tauMatrixFixture();
      }
      return httpError(400, "bad_request", `unknown metric '${metric}'`);
    },
  };
}
