// DOM rendering. Every score shown here is the untouched value from a
// service response, stringified; badges and bars derive their styling
// from those values but never recompute them.

import { SessionView } from "./api.js";
import { ClientState, SessionController, controlsEnabled, nextPhases } from "./state.js";

export function mountApp(root: HTMLElement, controller: SessionController): void {
  controller.onChange((state) => render(root, controller, state));
  void controller.refresh();
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  if (text !== undefined) node.textContent = text;
  return node;
}

export function render(
  root: HTMLElement,
  controller: SessionController,
  state: ClientState,
): void {
  root.textContent = "";
  const view = state.view;
  if (!view) {
    root.append(el("p", { id: "loading" }, "loading session..."));
    return;
  }
  root.append(header(view, state));
  if (state.lastError) {
    root.append(el("div", { id: "error-bar", class: "error" }, state.lastError));
  }
  if (state.role === "organizer") root.append(organizerPanel(controller, view));
  root.append(voteForm(controller, view, state));
  root.append(chatPanel(controller, view, state));
  root.append(rankingView(view));
  root.append(feedbackPanel(controller, view, state));
  root.append(verdictView(view));
}

function header(view: SessionView, state: ClientState): HTMLElement {
  const box = el("div", { id: "header" });
  box.append(el("h1", {}, `Decision room ${view.id}`));
  box.append(el("span", { id: "phase-badge" }, `phase: ${view.phase}`));
  box.append(el("span", { id: "whoami" }, `${state.role}: ${state.me}`));
  return box;
}

function organizerPanel(controller: SessionController, view: SessionView): HTMLElement {
  const box = el("section", { id: "organizer" });
  box.append(el("h2", {}, "Organizer"));
  for (const target of nextPhases(view.phase)) {
    const button = el("button", { id: `goto-${target}` }, `advance to ${target}`);
    button.onclick = () => void controller.perform(() => controller.api.setPhase(target));
    box.append(button);
  }
  if (view.phase === "ranking") {
    const compute = el("button", { id: "compute-ranking" }, "compute ranking");
    compute.onclick = () => void controller.perform(() => controller.api.computeRanking());
    box.append(compute);
  }
  const status = el("ul", { id: "panel-status" });
  for (const participant of view.participants) {
    const flags = [
      view.voted.includes(participant.id) ? "voted" : "not voted",
      view.feedback_given.includes(participant.id) ? "feedback in" : "no feedback",
    ];
    status.append(el("li", { "data-participant": participant.id },
      `${participant.id}: ${flags.join(", ")}`));
  }
  box.append(status);
  return box;
}

function voteForm(
  controller: SessionController,
  view: SessionView,
  state: ClientState,
): HTMLElement {
  const enabled = controlsEnabled(view, state.role, state.me).vote;
  const box = el("section", { id: "vote" });
  box.append(el("h2", {}, "Vote on features"));
  const selects = new Map<string, HTMLSelectElement>();
  for (const feature of view.features) {
    const row = el("label", {}, `${feature.id} `);
    const select = el("select", { id: `vote-${feature.id}` });
    for (const [value, label] of [["-1", "against"], ["0", "does not matter"], ["1", "for"]]) {
      select.append(el("option", { value }, label));
    }
    select.value = "0";
    select.disabled = !enabled;
    selects.set(feature.id, select);
    row.append(select);
    box.append(row);
  }
  const submit = el("button", { id: "vote-submit" }, "submit vote");
  submit.disabled = !enabled;
  submit.onclick = () => {
    const values: Record<string, number> = {};
    for (const [featureId, select] of selects) values[featureId] = Number(select.value);
    void controller.perform(() => controller.api.submitAssessment(state.me, values));
  };
  box.append(submit);
  if (view.voted.includes(state.me)) {
    box.append(el("p", { id: "vote-done" }, "already voted"));
  }
  return box;
}

function badgeFor(fused: number): string {
  if (fused > 0) return "positive";
  if (fused < 0) return "negative";
  return "neutral";
}

function chatPanel(
  controller: SessionController,
  view: SessionView,
  state: ClientState,
): HTMLElement {
  const enabled = controlsEnabled(view, state.role, state.me).chat;
  const box = el("section", { id: "chat" });
  box.append(el("h2", {}, "Discussion"));
  for (const alternative of view.alternatives) {
    const thread = el("div", { class: "thread", id: `thread-${alternative.id}` });
    thread.append(el("h3", {}, `${alternative.label || alternative.id}`));
    for (const message of view.messages) {
      if (message.alternative !== alternative.id) continue;
      const row = el("div", { class: "message" });
      row.append(el("span", { class: "author" }, `${message.participant}: `));
      row.append(el("span", { class: "text" }, message.text));
      if (message.affect) {
        const badge = el(
          "span",
          { class: `badge ${badgeFor(message.affect.fused)}` },
          String(message.affect.fused),
        );
        row.append(badge);
      }
      thread.append(row);
    }
    box.append(thread);
  }
  const tag = el("select", { id: "chat-alternative" });
  for (const alternative of view.alternatives) {
    tag.append(el("option", { value: alternative.id }, alternative.id));
  }
  const input = el("input", { id: "chat-text", type: "text", placeholder: "say something" });
  const send = el("button", { id: "chat-send" }, "send");
  tag.disabled = input.disabled = send.disabled = !enabled;
  send.onclick = () => {
    if (!input.value.trim()) return; // empty messages blocked client-side
    const text = input.value;
    void controller
      .perform(() => controller.api.postMessage(state.me, tag.value, text))
      .then((ok) => { if (ok) input.value = ""; });
  };
  box.append(tag, input, send);
  return box;
}

function rankingView(view: SessionView): HTMLElement {
  const box = el("section", { id: "ranking" });
  box.append(el("h2", {}, "Ranking"));
  if (!view.ranking) {
    box.append(el("p", { id: "ranking-pending" }, "not computed yet"));
    return box;
  }
  box.append(el("p", { id: "top-ranked" }, `top ranked: ${view.ranking.top_ranked}`));
  const list = el("ol", { id: "ranking-list" });
  for (const entry of view.ranking.ordered) {
    const item = el("li", { "data-alternative": entry.alternative });
    item.append(el("span", { class: "alt" }, `${entry.alternative} `));
    item.append(el("span", { class: "score" }, String(entry.total_preference)));
    const bar = el("div", { class: "bar" });
    bar.style.width = `${(entry.total_preference / 10) * 100}%`;
    item.append(bar);
    list.append(item);
  }
  box.append(list);
  return box;
}

function feedbackPanel(
  controller: SessionController,
  view: SessionView,
  state: ClientState,
): HTMLElement {
  const enabled = controlsEnabled(view, state.role, state.me).feedback;
  const box = el("section", { id: "feedback" });
  box.append(el("h2", {}, "Your verdict on the decision"));
  const agreement = el("input", {
    id: "agreement", type: "range", min: "0", max: "10", step: "1", value: "5",
  });
  const confidence = el("input", {
    id: "confidence", type: "range", min: "0", max: "10", step: "1", value: "5",
  });
  const submit = el("button", { id: "feedback-submit" }, "submit feedback");
  agreement.disabled = confidence.disabled = submit.disabled = !enabled;
  submit.onclick = () => void controller.perform(() =>
    controller.api.submitFeedback(state.me, Number(agreement.value), Number(confidence.value)));
  box.append(
    el("label", {}, "agreement "), agreement,
    el("label", {}, " confidence "), confidence,
    submit,
  );
  const mine = view.feedback.find((entry) => entry.participant === state.me);
  if (mine && mine.score !== undefined) {
    box.append(el("p", { id: "my-feedback-score" }, `your feedback score: ${String(mine.score)}`));
  }
  return box;
}

function verdictView(view: SessionView): HTMLElement {
  const box = el("section", { id: "verdict" });
  box.append(el("h2", {}, "Consensus"));
  if (!view.consensus || view.feedback.length < 2) {
    box.append(el("p", { id: "verdict-pending" }, "waiting for feedback from the panel"));
    return box;
  }
  box.append(el("p", { id: "consensus-level" }, `consensus: ${view.consensus.level}`));
  box.append(el("p", { id: "consensus-iqr" }, `IQR: ${String(view.consensus.iqr)}`));
  const scores = el("ul", { id: "feedback-scores" });
  for (const entry of view.feedback) {
    if (entry.score === undefined) continue;
    scores.append(el("li", { "data-participant": entry.participant },
      `${entry.participant}: ${String(entry.score)}`));
  }
  box.append(scores);
  for (const note of view.consensus.notes) {
    box.append(el("p", { class: "note" }, note));
  }
  return box;
}
