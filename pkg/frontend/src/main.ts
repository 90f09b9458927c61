// DOM wiring. All logic that can be pure lives in validate/format/
// render/controller; this file only moves strings between the page and
// those modules.

import { ApiClient, ApiError } from "./api.js";
import {
  beginRequest,
  fail,
  initialCardState,
  rejectFields,
  rejectLocally,
  succeed,
  type CardState,
} from "./controller.js";
import {
  renderComparison,
  renderFieldError,
  renderLoading,
  renderRetry,
  renderScenarioCard,
  renderThresholdAdvice,
} from "./render.js";
import type { ScenarioAnswer, ThresholdResponse } from "./types.js";
import { parseScenario, parseThresholdQuery, type FieldErrors } from "./validate.js";

const client = new ApiClient("");

const cardStates = new Map<string, CardState<ScenarioAnswer>>();
let thresholdState: CardState<ThresholdResponse> = initialCardState();

function messagesEl(form: HTMLFormElement): HTMLElement {
  return form.querySelector(".messages") as HTMLElement;
}

function outputEl(form: HTMLFormElement): HTMLElement {
  return form.querySelector(".output") as HTMLElement;
}

function showErrors(form: HTMLFormElement, errors: FieldErrors): void {
  messagesEl(form).innerHTML = Object.entries(errors)
    .map(([field, message]) => renderFieldError(field, message))
    .join("");
  for (const input of form.querySelectorAll<HTMLInputElement>("input[name]")) {
    input.classList.toggle("invalid", input.name in errors);
  }
}

function showRetry(form: HTMLFormElement, message: string, again: () => void): void {
  messagesEl(form).innerHTML = renderRetry(message);
  const button = messagesEl(form).querySelector("button.retry");
  button?.addEventListener("click", again, { once: true });
}

function renderComparisonIfReady(): void {
  const target = document.querySelector("#comparison") as HTMLElement | null;
  if (!target) return;
  const a = cardStates.get("a");
  const b = cardStates.get("b");
  if (a?.phase === "done" && a.result && b?.phase === "done" && b.result) {
    target.innerHTML = renderComparison(a.result, b.result);
  } else {
    target.innerHTML = "";
  }
}

function wireScenarioForm(form: HTMLFormElement): void {
  const cardId = form.dataset["card"] ?? "a";
  cardStates.set(cardId, initialCardState());

  const submit = () => {
    const parsed = parseScenario({
      wavesText: (form.elements.namedItem("waves") as HTMLInputElement).value,
      defendersText: (form.elements.namedItem("defenders") as HTMLInputElement).value,
      bonusAttackDie: (form.elements.namedItem("bonus_attack_die") as HTMLInputElement)
        .checked,
      bonusDefenseDie: (form.elements.namedItem("bonus_defense_die") as HTMLInputElement)
        .checked,
    });
    let state = cardStates.get(cardId) ?? initialCardState<ScenarioAnswer>();
    if (!parsed.ok) {
      state = rejectLocally(state, parsed.errors);
      cardStates.set(cardId, state);
      showErrors(form, parsed.errors);
      renderComparisonIfReady();
      return;
    }
    state = beginRequest(state);
    cardStates.set(cardId, state);
    const seq = state.seq;
    showErrors(form, {});
    outputEl(form).innerHTML = renderLoading();
    client
      .scenario(parsed.form)
      .then((answer) => {
        const current = cardStates.get(cardId);
        if (!current || current.seq !== seq) return; // superseded
        cardStates.set(cardId, succeed(current, seq, answer));
        outputEl(form).innerHTML = renderScenarioCard(answer);
        renderComparisonIfReady();
      })
      .catch((err: unknown) => {
        const current = cardStates.get(cardId);
        if (!current || current.seq !== seq) return;
        if (err instanceof ApiError && err.status < 500) {
          const errors = { [err.field ?? "form"]: err.message };
          cardStates.set(cardId, rejectFields(current, seq, errors));
          showErrors(form, errors);
        } else {
          const message = err instanceof Error ? err.message : String(err);
          cardStates.set(cardId, fail(current, seq, message));
          showRetry(form, `request failed: ${message}`, submit);
        }
        outputEl(form).innerHTML = "";
        renderComparisonIfReady();
      });
  };

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    submit();
  });
}

function wireThresholdForm(form: HTMLFormElement): void {
  const submit = () => {
    const parsed = parseThresholdQuery({
      attackText: (form.elements.namedItem("attack") as HTMLInputElement).value,
      limitText: (form.elements.namedItem("limit") as HTMLInputElement).value,
    });
    if (!parsed.ok) {
      thresholdState = rejectLocally(thresholdState, parsed.errors);
      showErrors(form, parsed.errors);
      return;
    }
    thresholdState = beginRequest(thresholdState);
    const seq = thresholdState.seq;
    showErrors(form, {});
    outputEl(form).innerHTML = renderLoading();
    client
      .threshold(parsed.attack, parsed.limit)
      .then((report) => {
        if (thresholdState.seq !== seq) return;
        thresholdState = succeed(thresholdState, seq, report);
        outputEl(form).innerHTML = renderThresholdAdvice(report);
      })
      .catch((err: unknown) => {
        if (thresholdState.seq !== seq) return;
        if (err instanceof ApiError && err.status < 500) {
          const errors = { [err.field ?? "form"]: err.message };
          thresholdState = rejectFields(thresholdState, seq, errors);
          showErrors(form, errors);
        } else {
          const message = err instanceof Error ? err.message : String(err);
          thresholdState = fail(thresholdState, seq, message);
          showRetry(form, `request failed: ${message}`, submit);
        }
        outputEl(form).innerHTML = "";
      });
  };

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    submit();
  });
}

for (const form of document.querySelectorAll<HTMLFormElement>("form.scenario")) {
  wireScenarioForm(form);
}
const thresholdForm = document.querySelector<HTMLFormElement>("form.threshold");
if (thresholdForm) {
  wireThresholdForm(thresholdForm);
}
