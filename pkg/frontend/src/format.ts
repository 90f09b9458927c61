// Presentation-only formatting. Every number shown in the UI comes
// straight out of a server response field; the helpers here scale to
// percent and fix decimal places, nothing more. The exact fraction is
// carried along verbatim for tooltips.

import type { Rational, Summary } from "./types.js";

/** "41.67%" from the server's float approximation. */
export function percent(r: Rational): string {
  return (r.approx * 100).toFixed(2) + "%";
}

/** The exact value, e.g. "5/12". Integer denominators of 1 collapse. */
export function fraction(r: Rational): string {
  return r.den === "1" ? r.num : `${r.num}/${r.den}`;
}

/** Fixed-point text of a server float, default two decimals. */
export function fixed(value: number, decimals = 2): string {
  return value.toFixed(decimals);
}

/** "1.89 ± 1.28": the mean and spread, printed side by side. */
export function meanWithSpread(s: Summary): string {
  return `${fixed(s.mean.approx)} ± ${fixed(s.std_dev)}`;
}

/** Label for a wave list: "[3,3]". */
export function wavesLabel(waves: number[]): string {
  return `[${waves.join(",")}]`;
}
