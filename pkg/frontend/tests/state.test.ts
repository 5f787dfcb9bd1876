import { describe, expect, it } from "vitest";
import {
  createState,
  setKeyword,
  setTopN,
  setView,
  toggleCollection,
} from "../src/state.js";

const LABELS = ["1840s", "1860s", "FULL"];

describe("createState", () => {
  it("selects every collection and defaults to the terms view", () => {
    const state = createState(LABELS);
    expect(state.selectedCollections).toEqual(LABELS);
    expect(state.activeView).toBe("terms");
    expect(state.topN).toBe(15);
    expect(state.pairA).toBe("1840s");
    expect(state.pairB).toBe("FULL");
  });

  it("refuses an empty label list", () => {
    expect(() => createState([])).toThrow();
  });
});

describe("setKeyword", () => {
  it("trims and records history newest first without duplicates", () => {
    const state = createState(LABELS);
    expect(setKeyword(state, "  meteor ")).toBe(true);
    expect(setKeyword(state, "vampire")).toBe(true);
    expect(setKeyword(state, "meteor")).toBe(true);
    expect(state.currentKeyword).toBe("meteor");
    expect(state.keywordHistory).toEqual(["meteor", "vampire"]);
  });

  it("ignores blank submissions", () => {
    const state = createState(LABELS);
    expect(setKeyword(state, "   ")).toBe(false);
    expect(state.currentKeyword).toBe("");
    expect(state.keywordHistory).toEqual([]);
  });
});

describe("toggleCollection", () => {
  it("removes and restores labels, keeping service order", () => {
    const state = createState(LABELS);
    expect(toggleCollection(state, "1840s")).toBe(true);
    expect(state.selectedCollections).toEqual(["1860s", "FULL"]);
    expect(toggleCollection(state, "1840s")).toBe(true);
    expect(state.selectedCollections).toEqual(LABELS);
  });

  it("never lets the selection go empty", () => {
    const state = createState(LABELS);
    toggleCollection(state, "1840s");
    toggleCollection(state, "1860s");
    expect(toggleCollection(state, "FULL")).toBe(false);
    expect(state.selectedCollections).toEqual(["FULL"]);
  });

  it("rejects labels the service never reported", () => {
    const state = createState(LABELS);
    expect(toggleCollection(state, "1990s")).toBe(false);
    expect(state.selectedCollections).toEqual(LABELS);
  });
});

describe("setTopN", () => {
  it("floors fractional input and clamps to one", () => {
    const state = createState(LABELS);
    setTopN(state, 7.9);
    expect(state.topN).toBe(7);
    setTopN(state, 0);
    expect(state.topN).toBe(1);
    setTopN(state, Number.NaN);
    expect(state.topN).toBe(1);
  });
});

describe("setView", () => {
  it("switches between the three views", () => {
    const state = createState(LABELS);
    setView(state, "matrix");
    expect(state.activeView).toBe("matrix");
    setView(state, "pair");
    expect(state.activeView).toBe("pair");
  });
});
