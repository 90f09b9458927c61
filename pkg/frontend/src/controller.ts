// Per-card request lifecycle as a pure state machine. Each submission
// takes the next sequence number; only the response matching the
// newest submission may land. Everything else (an older success, an
// older failure) is stale and leaves the state untouched, which is
// what lets the user edit and resubmit while a slow request is still
// in the air. The form itself lives in the DOM and is never cleared
// by any transition here, so failures keep the user's input.

import type { FieldErrors } from "./validate.js";

export type CardPhase = "idle" | "loading" | "done" | "failed";

export interface CardState<R> {
  phase: CardPhase;
  seq: number;
  result: R | null;
  errors: FieldErrors;
  failure: string | null;
}

export function initialCardState<R>(): CardState<R> {
  return { phase: "idle", seq: 0, result: null, errors: {}, failure: null };
}

/** A new submission: bumps the sequence and enters loading. */
export function beginRequest<R>(state: CardState<R>): CardState<R> {
  return { ...state, phase: "loading", seq: state.seq + 1, errors: {}, failure: null };
}

export function isCurrent<R>(state: CardState<R>, seq: number): boolean {
  return state.seq === seq;
}

export function succeed<R>(state: CardState<R>, seq: number, result: R): CardState<R> {
  if (!isCurrent(state, seq)) return state;
  return { ...state, phase: "done", result, errors: {}, failure: null };
}

/** Server-side validation failure: field errors, previous result kept. */
export function rejectFields<R>(
  state: CardState<R>,
  seq: number,
  errors: FieldErrors,
): CardState<R> {
  if (!isCurrent(state, seq)) return state;
  return { ...state, phase: "failed", errors, failure: null };
}

/** Network or server fault: message for the retry affordance. */
export function fail<R>(state: CardState<R>, seq: number, message: string): CardState<R> {
  if (!isCurrent(state, seq)) return state;
  return { ...state, phase: "failed", errors: {}, failure: message };
}

/** Local validation failure: never submitted, no sequence consumed. */
export function rejectLocally<R>(state: CardState<R>, errors: FieldErrors): CardState<R> {
  return { ...state, phase: "failed", errors, failure: null };
}
