/** Pure view: UiState -> HTML string.
 *
 * Keeping the renderer a string function makes every visual rule testable
 * without a browser; the app shell swaps the result into the page inside a
 * requestAnimationFrame callback.  Committed and pending text are shown
 * verbatim from the server mirror — nothing is recomputed locally.
 */

import { diagramHtml, fingerForKey } from "./handDiagram.js";
import type { UiState } from "./state.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

function statusHtml(state: UiState): string {
  const noise = `${state.noise.accuracy.toFixed(2)} ${state.noise.mode}`;
  return (
    `<div class="status status-${state.connection}">` +
    `<span class="status-dot"></span>${state.connection}` +
    `<span class="status-noise">noise ${escapeHtml(noise)}</span></div>`
  );
}

function textHtml(state: UiState): string {
  const committed = escapeHtml(state.render.committed);
  const spacer = state.render.committed && state.render.pending ? " " : "";
  const pending = escapeHtml(state.render.pending);
  return (
    `<div class="text-line">` +
    `<span class="committed">${committed}</span>${spacer}` +
    `<span class="pending">${pending}</span>` +
    `<span class="caret"></span></div>`
  );
}

function suggestionsHtml(state: UiState): string {
  const { suggestions, cursor, pending } = state.render;
  if (suggestions.length === 0 && pending === "") return "";
  const chips = suggestions
    .map((entry, i) => {
      const active = i === cursor ? " chip-active" : "";
      return (
        `<span class="chip${active}" title="${entry.score.toFixed(2)}">` +
        `${escapeHtml(entry.word)}</span>`
      );
    })
    .join("");
  return `<div class="suggestions">${chips || '<span class="chip-none">no matches</span>'}</div>`;
}

function feedbackHtml(state: UiState): string {
  const kind = state.render.feedback;
  if (kind === "none") return `<div class="feedback"></div>`;
  return `<div class="feedback feedback-${escapeHtml(kind)}">${escapeHtml(kind)}</div>`;
}

function submittedHtml(state: UiState): string {
  if (state.submitted.length === 0) return "";
  const items = state.submitted
    .map((phrase) => `<li>${escapeHtml(phrase)}</li>`)
    .join("");
  return `<div class="submitted"><div class="submitted-label">submitted</div><ul>${items}</ul></div>`;
}

function toastHtml(state: UiState): string {
  if (state.toast === null) return "";
  return `<div class="toast">${escapeHtml(state.toast)}</div>`;
}

export function renderHtml(state: UiState): string {
  const active = state.lastKey === null ? null : fingerForKey(state.lastKey);
  return (
    statusHtml(state) +
    textHtml(state) +
    suggestionsHtml(state) +
    feedbackHtml(state) +
    submittedHtml(state) +
    diagramHtml(active) +
    toastHtml(state)
  );
}
