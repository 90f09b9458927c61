import { describe, expect, it } from "vitest";

import { fixed, fraction, meanWithSpread, percent, wavesLabel } from "../src/format.js";
import type { OddsResponse } from "../src/types.js";
import { loadFixture } from "./load.js";

describe("percent", () => {
  it("renders the one-on-one win chance as 41.67%", () => {
    const odds = loadFixture<OddsResponse>("odds_1v1");
    expect(percent(odds.win)).toBe("41.67%");
    expect(percent(odds.repel)).toBe("58.33%");
  });

  it("scales and rounds only, no arithmetic of its own", () => {
    expect(percent({ num: "1", den: "2", approx: 0.5 })).toBe("50.00%");
    expect(percent({ num: "1", den: "1", approx: 1 })).toBe("100.00%");
    expect(percent({ num: "0", den: "1", approx: 0 })).toBe("0.00%");
  });
});

describe("fraction", () => {
  it("prints num/den verbatim", () => {
    expect(fraction({ num: "5", den: "12", approx: 0.41 })).toBe("5/12");
  });

  it("collapses a denominator of one", () => {
    expect(fraction({ num: "2", den: "1", approx: 2 })).toBe("2");
  });

  it("keeps huge numerators intact", () => {
    const odds = loadFixture<OddsResponse>("odds_33v10");
    const text = fraction(odds.win);
    expect(text).toContain("38494134432282408093202429326875/");
    expect(text.split("/")[1]).toBe(odds.win.den);
  });
});

describe("fixed", () => {
  it("defaults to two decimals", () => {
    expect(fixed(0.5833333333333334)).toBe("0.58");
    expect(fixed(1.235613745805192, 3)).toBe("1.236");
  });
});

describe("meanWithSpread", () => {
  it("prints mean and spread side by side", () => {
    const s = {
      mean: { num: "7", den: "12", approx: 0.5833333333333334 },
      variance: { num: "35", den: "144", approx: 0.24305555555555555 },
      std_dev: 0.4930066485916347,
    };
    expect(meanWithSpread(s)).toBe("0.58 ± 0.49");
  });
});

describe("wavesLabel", () => {
  it("brackets the wave list", () => {
    expect(wavesLabel([3, 3])).toBe("[3,3]");
    expect(wavesLabel([1])).toBe("[1]");
  });
});
