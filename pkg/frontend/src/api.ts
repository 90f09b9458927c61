// Typed client for the /api/* endpoints. This module is the UI's only
// I/O: everything rendered is a field from one of these responses.

import type {
  ApiErrorBody,
  ExpectResponse,
  OddsResponse,
  ScenarioAnswer,
  ScenarioForm,
  SurvivorsResponse,
  ThresholdResponse,
} from "./types.js";

/** A 4xx/5xx response with the server's field/message diagnosis. */
export class ApiError extends Error {
  constructor(
    public status: number,
    public field: string | null,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

function planBody(form: ScenarioForm): Record<string, unknown> {
  const body: Record<string, unknown> = {
    waves: form.waves,
    defenders: form.defenders,
  };
  if (form.bonusAttackDie) body["bonus_attack_die"] = true;
  if (form.bonusDefenseDie) body["bonus_defense_die"] = true;
  return body;
}

export class ApiClient {
  constructor(private baseUrl: string = "") {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const resp = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!resp.ok) {
      let parsed: ApiErrorBody | null = null;
      try {
        parsed = (await resp.json()) as ApiErrorBody;
      } catch {
        // non-JSON error body; fall through to the generic message
      }
      throw new ApiError(
        resp.status,
        parsed?.field ?? null,
        parsed?.message ?? `request failed with status ${resp.status}`,
      );
    }
    return (await resp.json()) as T;
  }

  odds(form: ScenarioForm): Promise<OddsResponse> {
    return this.post("/api/odds", planBody(form));
  }

  expect(form: ScenarioForm): Promise<ExpectResponse> {
    return this.post("/api/expect", planBody(form));
  }

  survivors(form: ScenarioForm): Promise<SurvivorsResponse> {
    return this.post("/api/survivors", planBody(form));
  }

  /** The three calls one scenario card renders from, as one unit. */
  async scenario(form: ScenarioForm): Promise<ScenarioAnswer> {
    const [odds, expect, survivors] = await Promise.all([
      this.odds(form),
      this.expect(form),
      this.survivors(form),
    ]);
    return { odds, expect, survivors };
  }

  threshold(attack: number[], limit: number): Promise<ThresholdResponse> {
    return this.post("/api/threshold", { attack, limit });
  }
}
