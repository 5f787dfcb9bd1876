// Payload shapes of the four JSON endpoints the explorer consumes.
// These mirror the service responses field for field; the UI never
// derives metric values itself, it only displays what arrives here.

export interface CollectionStats {
  label: string;
  num_docs: number;
  num_novels: number;
  total_tokens: number;
  vocabulary_size: number;
  avg_doc_len: number;
}

export interface CollectionsResponse {
  collections: CollectionStats[];
}

export interface WeightedTerm {
  term: string;
  weight: number;
}

export interface ExpandResponse {
  q: string;
  collection: string;
  absent: boolean;
  terms: WeightedTerm[];
}

// When either side is absent the service stops at the absence flags,
// so every metric field is optional here.
export interface CompareResponse {
  q: string;
  a: string;
  b: string;
  a_absent: boolean;
  b_absent: boolean;
  jaccard?: number;
  jsd?: number;
  tau?: number;
  overlap_terms?: string[];
  a_only?: string[];
  b_only?: string[];
}

export interface MatrixCell {
  mean: number;
  std: number;
  n: number;
}

export interface AggregateMatrixResponse {
  metric: "jaccard" | "jsd";
  labels: string[];
  cells: (MatrixCell | null)[][];
}

export interface TauMatrixResponse {
  metric: "tau";
  queries: string[];
  decades: string[];
  cells: (number | null)[][];
}

export type MatrixResponse = AggregateMatrixResponse | TauMatrixResponse;

export interface ErrorBody {
  code: string;
  message: string;
}
