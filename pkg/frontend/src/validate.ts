// Client-side validation mirroring the server's rules, so an invalid
// form is caught at the field before any request is sent. Error keys
// reuse the server's field names; inline rendering treats both sources
// the same way.

import type { ScenarioForm } from "./types.js";

export type FieldErrors = Record<string, string>;

export interface ScenarioInput {
  wavesText: string;
  defendersText: string;
  bonusAttackDie: boolean;
  bonusDefenseDie: boolean;
}

export type ScenarioParse =
  | { ok: true; form: ScenarioForm }
  | { ok: false; errors: FieldErrors };

const INT = /^\d+$/;

function parseInteger(text: string): number | null {
  const trimmed = text.trim();
  return INT.test(trimmed) ? parseInt(trimmed, 10) : null;
}

/** Parse "3, 3" style wave lists, preserving order. */
export function parseWaves(text: string): number[] | null {
  const parts = text.split(",").map((p) => p.trim());
  if (parts.length === 0 || parts.some((p) => p === "")) return null;
  const waves: number[] = [];
  for (const part of parts) {
    const n = parseInteger(part);
    if (n === null) return null;
    waves.push(n);
  }
  return waves;
}

export function parseScenario(input: ScenarioInput): ScenarioParse {
  const errors: FieldErrors = {};
  const waves = parseWaves(input.wavesText);
  if (waves === null) {
    errors["waves"] = "waves must be whole numbers separated by commas";
  } else if (waves.length === 0 || waves.some((w) => w < 1)) {
    errors["waves"] = "every wave needs at least 1 troop";
  }
  const defenders = parseInteger(input.defendersText);
  if (defenders === null) {
    errors["defenders"] = "defenders must be a whole number";
  } else if (defenders < 1) {
    errors["defenders"] = "defenders must be at least 1";
  }
  if (Object.keys(errors).length > 0) return { ok: false, errors };
  return {
    ok: true,
    form: {
      waves: waves as number[],
      defenders: defenders as number,
      bonusAttackDie: input.bonusAttackDie,
      bonusDefenseDie: input.bonusDefenseDie,
    },
  };
}

export interface ThresholdInput {
  attackText: string;
  limitText: string;
}

export type ThresholdParse =
  | { ok: true; attack: number[]; limit: number }
  | { ok: false; errors: FieldErrors };

export function parseThresholdQuery(input: ThresholdInput): ThresholdParse {
  const errors: FieldErrors = {};
  const attack = parseWaves(input.attackText);
  if (attack === null || attack.length === 0 || attack.some((a) => a < 1)) {
    errors["attack"] = "attack sizes must be whole numbers of at least 1";
  }
  let limit = 30;
  if (input.limitText.trim() !== "") {
    const parsed = parseInteger(input.limitText);
    if (parsed === null || parsed < 1) {
      errors["limit"] = "limit must be a whole number of at least 1";
    } else {
      limit = parsed;
    }
  }
  if (Object.keys(errors).length > 0) return { ok: false, errors };
  return { ok: true, attack: attack as number[], limit };
}
