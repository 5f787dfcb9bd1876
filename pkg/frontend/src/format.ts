// Number-to-text helpers.  The display rule everywhere is: show the
// number the service sent, unchanged.  String() on a JS double prints
// the shortest decimal that round-trips to the same bits, so the text
// in the DOM is a lossless image of the payload value.

export function exact(value: number): string {
  return String(value);
}

// Background shade for heatmap cells.  Pure presentation; the value
// itself is rendered as text separately.
export function heatBackground(value: number, lo: number, hi: number): string {
  const span = hi - lo;
  const t = span > 0 ? Math.min(1, Math.max(0, (value - lo) / span)) : 0;
  // light parchment at the low end, deep teal at the high end
  const light = 96 - Math.round(t * 58);
  return `hsl(190, 45%, ${light}%)`;
}

// Diverging shade for correlation values in [-1, 1]: rust below zero,
// teal above, white at zero.
export function divergingBackground(value: number): string {
  const t = Math.min(1, Math.max(-1, value));
  const light = 96 - Math.round(Math.abs(t) * 48);
  const hue = t < 0 ? 16 : 190;
  return `hsl(${hue}, 52%, ${light}%)`;
}
