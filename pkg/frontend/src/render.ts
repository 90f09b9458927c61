// Pure HTML-string renderers. Keeping these free of DOM and fetch makes
// the snapshot tests honest: fixture JSON in, markup out, nothing else.
// Numbers are formatted, never computed; the only decision made here is
// display order, by comparing two server-sent floats.

import { fraction, meanWithSpread, percent, wavesLabel } from "./format.js";
import type { ScenarioAnswer, ThresholdResponse } from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

function stat(label: string, value: string, tooltip?: string): string {
  const title = tooltip ? ` title="${escapeHtml(tooltip)}"` : "";
  return (
    `<div class="stat"><span class="stat-label">${escapeHtml(label)}</span>` +
    `<span class="stat-value"${title}>${escapeHtml(value)}</span></div>`
  );
}

/** One scenario card: conquest odds plus the two expectation bands. */
export function renderScenarioCard(answer: ScenarioAnswer): string {
  const { odds, expect, survivors } = answer;
  const label = `${wavesLabel(odds.waves)} vs ${odds.defenders}`;
  return (
    `<article class="card" data-win="${odds.win.approx}">` +
    `<h3>${escapeHtml(label)}</h3>` +
    stat("win", percent(odds.win), fraction(odds.win)) +
    stat("repel", percent(odds.repel), fraction(odds.repel)) +
    stat(
      "attacker losses",
      meanWithSpread(expect.attacker_losses),
      `mean ${fraction(expect.attacker_losses.mean)}`,
    ) +
    stat(
      "defenders surviving",
      meanWithSpread(survivors.survivors),
      `mean ${fraction(survivors.survivors.mean)}`,
    ) +
    `</article>`
  );
}

/**
 * Side-by-side comparison, better plan first. Ordering is the one
 * judgement this module makes, and it only compares the win fields.
 */
export function renderComparison(a: ScenarioAnswer, b: ScenarioAnswer): string {
  const [first, second] = b.odds.win.approx > a.odds.win.approx ? [b, a] : [a, b];
  const firstLabel = wavesLabel(first.odds.waves);
  return (
    `<div class="comparison">` +
    `<p class="verdict">${escapeHtml(firstLabel)} gives the better odds here</p>` +
    renderScenarioCard(first) +
    renderScenarioCard(second) +
    `</div>`
  );
}

/** Garrison advice: one line per criterion, numbers verbatim. */
export function renderThresholdAdvice(t: ThresholdResponse): string {
  const attack = wavesLabel(t.attack);
  const survivor =
    t.expected_survivor_threshold === null
      ? `no garrison up to ${t.search_limit} expects a survivor against ${escapeHtml(attack)}`
      : `${t.expected_survivor_threshold} defenders for an expected survivor: the smallest garrison whose expected survivors reach 1`;
  const repel =
    t.repel_threshold === null
      ? `no garrison up to ${t.search_limit} repels ${escapeHtml(attack)} at least half the time`
      : `${t.repel_threshold} defenders to repel the attack: the smallest garrison that holds with probability at least 1/2`;
  return (
    `<div class="advice" data-attack="${escapeHtml(attack)}">` +
    `<p class="advice-line survivor">${survivor}</p>` +
    `<p class="advice-line repel">${repel}</p>` +
    `</div>`
  );
}

/** Inline error placed at the offending field, keyed like the server. */
export function renderFieldError(field: string | null, message: string): string {
  const key = field ?? "form";
  return `<p class="field-error" data-field="${escapeHtml(key)}">${escapeHtml(message)}</p>`;
}

/** Network-failure notice with a retry hook; the form stays as typed. */
export function renderRetry(message: string): string {
  return (
    `<div class="retry-box"><p>${escapeHtml(message)}</p>` +
    `<button type="button" class="retry">retry</button></div>`
  );
}

export function renderLoading(): string {
  return `<p class="loading">computing…</p>`;
}
