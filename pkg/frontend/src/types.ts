// Response shapes of the /api/* endpoints, mirrored field for field.
// Exact probabilities arrive as num/den strings (they outgrow doubles)
// plus a float approximation for display.

export interface Rational {
  num: string;
  den: string;
  approx: number;
}

export interface Summary {
  mean: Rational;
  variance: Rational;
  std_dev: number;
}

export interface Rules {
  attacker_max_dice: number;
  defender_max_dice: number;
  compared_pairs_cap: number;
  faces: number;
}

export interface PlanEcho {
  waves: number[];
  defenders: number;
  rules: Rules;
}

export interface OddsResponse extends PlanEcho {
  win: Rational;
  repel: Rational;
}

export interface ExpectResponse extends PlanEcho {
  attacker_losses: Summary;
}

export interface DistEntry {
  value: number;
  probability: Rational;
}

export interface SurvivorsResponse extends PlanEcho {
  survivors: Summary;
  distribution: DistEntry[];
}

export interface ThresholdResponse {
  attack: number[];
  rules: Rules;
  search_limit: number;
  expected_survivor_threshold: number | null;
  repel_threshold: number | null;
}

export interface ApiErrorBody {
  field: string | null;
  message: string;
}

// One scenario, validated and ready to send.
export interface ScenarioForm {
  waves: number[];
  defenders: number;
  bonusAttackDie: boolean;
  bonusDefenseDie: boolean;
}

// The three responses a scenario card renders from.
export interface ScenarioAnswer {
  odds: OddsResponse;
  expect: ExpectResponse;
  survivors: SurvivorsResponse;
}
