import { describe, expect, it } from "vitest";

import { parseScenario, parseThresholdQuery, parseWaves } from "../src/validate.js";

describe("parseWaves", () => {
  it("splits on commas", () => {
    expect(parseWaves("3,3")).toEqual([3, 3]);
  });

  it("tolerates spaces and keeps order", () => {
    expect(parseWaves(" 3 , 2 , 1 ")).toEqual([3, 2, 1]);
  });

  it("rejects empty segments", () => {
    expect(parseWaves("3,,2")).toBeNull();
    expect(parseWaves("")).toBeNull();
    expect(parseWaves("3,")).toBeNull();
  });

  it("rejects non-integers", () => {
    expect(parseWaves("x")).toBeNull();
    expect(parseWaves("3.5")).toBeNull();
    expect(parseWaves("-2")).toBeNull();
  });
});

describe("parseScenario", () => {
  const base = {
    wavesText: "3,3",
    defendersText: "4",
    bonusAttackDie: false,
    bonusDefenseDie: false,
  };

  it("accepts a well-formed scenario", () => {
    const parsed = parseScenario(base);
    expect(parsed.ok).toBe(true);
    if (parsed.ok) {
      expect(parsed.form.waves).toEqual([3, 3]);
      expect(parsed.form.defenders).toBe(4);
      expect(parsed.form.bonusAttackDie).toBe(false);
    }
  });

  it("passes the bonus flags through", () => {
    const parsed = parseScenario({ ...base, bonusAttackDie: true, bonusDefenseDie: true });
    expect(parsed.ok && parsed.form.bonusAttackDie).toBe(true);
    expect(parsed.ok && parsed.form.bonusDefenseDie).toBe(true);
  });

  it("keys wave errors by the server's field name", () => {
    const parsed = parseScenario({ ...base, wavesText: "3,x" });
    expect(parsed.ok).toBe(false);
    if (!parsed.ok) expect(Object.keys(parsed.errors)).toEqual(["waves"]);
  });

  it("rejects a zero-troop wave", () => {
    const parsed = parseScenario({ ...base, wavesText: "3,0" });
    expect(!parsed.ok && parsed.errors["waves"]).toMatch(/at least 1/);
  });

  it("keys defender errors by the server's field name", () => {
    const parsed = parseScenario({ ...base, defendersText: "abc" });
    expect(!parsed.ok && parsed.errors["defenders"]).toMatch(/whole number/);
  });

  it("rejects zero defenders before any request is made", () => {
    const parsed = parseScenario({ ...base, defendersText: "0" });
    expect(!parsed.ok && parsed.errors["defenders"]).toMatch(/at least 1/);
  });

  it("reports both fields when both are bad", () => {
    const parsed = parseScenario({ ...base, wavesText: "", defendersText: "-1" });
    expect(parsed.ok).toBe(false);
    if (!parsed.ok) {
      expect(parsed.errors).toHaveProperty("waves");
      expect(parsed.errors).toHaveProperty("defenders");
    }
  });
});

describe("parseThresholdQuery", () => {
  it("defaults the search limit to 30", () => {
    const parsed = parseThresholdQuery({ attackText: "3,3", limitText: "" });
    expect(parsed.ok).toBe(true);
    if (parsed.ok) {
      expect(parsed.attack).toEqual([3, 3]);
      expect(parsed.limit).toBe(30);
    }
  });

  it("accepts an explicit limit", () => {
    const parsed = parseThresholdQuery({ attackText: "3", limitText: "12" });
    expect(parsed.ok && parsed.limit).toBe(12);
  });

  it("rejects malformed attack lists under the attack key", () => {
    const parsed = parseThresholdQuery({ attackText: "3;3", limitText: "" });
    expect(parsed.ok).toBe(false);
    if (!parsed.ok) expect(Object.keys(parsed.errors)).toEqual(["attack"]);
  });

  it("rejects a zero limit", () => {
    const parsed = parseThresholdQuery({ attackText: "3", limitText: "0" });
    expect(!parsed.ok && parsed.errors["limit"]).toMatch(/at least 1/);
  });
});
