export type ViewName = "terms" | "pair" | "matrix";

export type MatrixChoice = "jaccard" | "jsd" | "combined" | "tau";

export interface ExplorerState {
  // All collection labels the service reported, in service order.
  labels: string[];
  currentKeyword: string;
  // Subset of labels, kept in service order; mutated only through the
  // helpers below, which keep it duplicate-free and never empty.
  selectedCollections: string[];
  topN: number;
  activeView: ViewName;
  pairA: string;
  pairB: string;
  matrixChoice: MatrixChoice;
  // Session-only history of submitted keywords, newest first.  Lives
  // in memory on purpose: reloading the page starts fresh.
  keywordHistory: string[];
}

export function createState(labels: string[]): ExplorerState {
  if (labels.length === 0) {
    throw new Error("explorer needs at least one collection");
  }
  const first = labels[0] as string;
  const last = labels[labels.length - 1] as string;
  return {
    labels: [...labels],
    currentKeyword: "",
    selectedCollections: [...labels],
    topN: 15,
    activeView: "terms",
    pairA: first,
    pairB: last,
    matrixChoice: "jaccard",
    keywordHistory: [],
  };
}

export function setKeyword(state: ExplorerState, keyword: string): boolean {
  const trimmed = keyword.trim();
  if (!trimmed) {
    return false;
  }
  state.currentKeyword = trimmed;
  state.keywordHistory = [
    trimmed,
    ...state.keywordHistory.filter((k) => k !== trimmed),
  ];
  return true;
}

// Returns false when the toggle was refused: the last selected
// collection cannot be removed, the selection never goes empty.
export function toggleCollection(state: ExplorerState, label: string): boolean {
  const idx = state.selectedCollections.indexOf(label);
  if (idx >= 0) {
    if (state.selectedCollections.length === 1) {
      return false;
    }
    state.selectedCollections.splice(idx, 1);
    return true;
  }
  if (!state.labels.includes(label)) {
    return false;
  }
  state.selectedCollections.push(label);
  state.selectedCollections.sort(
    (a, b) => state.labels.indexOf(a) - state.labels.indexOf(b)
  );
  return true;
}

export function setTopN(state: ExplorerState, value: number): void {
  const n = Math.floor(value);
  state.topN = Number.isFinite(n) && n >= 1 ? n : 1;
}

export function setView(state: ExplorerState, view: ViewName): void {
  state.activeView = view;
}
