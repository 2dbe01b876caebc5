// Polling state container. The UI re-renders only from confirmed
// service responses: actions fire a request, then force a refresh;
// nothing is applied optimistically.

import { ApiError, SessionApi, SessionView } from "./api.js";

export type Role = "organizer" | "participant";

export interface ClientState {
  view: SessionView | null;
  role: Role;
  me: string;
  lastError: string | null;
}

export const PHASE_ORDER = [
  "setup",
  "voting",
  "discussion",
  "ranking",
  "feedback",
  "closed",
] as const;

export function nextPhases(phase: string): string[] {
  switch (phase) {
    case "setup": return ["voting"];
    case "voting": return ["discussion"];
    case "discussion": return ["ranking"];
    case "ranking": return ["feedback"];
    case "feedback": return ["closed", "discussion"];
    default: return [];
  }
}

export function hasVoted(view: SessionView, participant: string): boolean {
  return view.voted.includes(participant);
}

export function hasGivenFeedback(view: SessionView, participant: string): boolean {
  return view.feedback_given.includes(participant);
}

export function controlsEnabled(view: SessionView | null, role: Role, me: string) {
  const phase = view?.phase ?? "";
  return {
    vote: phase === "voting" && view !== null && !hasVoted(view, me),
    chat: phase === "discussion",
    feedback: phase === "feedback" && view !== null && !hasGivenFeedback(view, me),
    organizer: role === "organizer" && nextPhases(phase).length > 0,
  };
}

export class SessionController {
  state: ClientState;
  private timer: ReturnType<typeof setInterval> | null = null;
  private listeners: Array<(state: ClientState) => void> = [];

  constructor(
    public api: SessionApi,
    role: Role,
    me: string,
    public pollIntervalMs = 2000,
  ) {
    this.state = { view: null, role, me, lastError: null };
  }

  onChange(listener: (state: ClientState) => void): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener(this.state);
  }

  async refresh(): Promise<void> {
    try {
      let view = await this.api.view();
      // The verdict exists only after the service has computed it; ask the
      // service to do so once enough feedback is in, then re-read. The
      // client itself never derives any number.
      if (
        (view.phase === "feedback" || view.phase === "closed") &&
        view.feedback_given.length >= 2 &&
        !view.consensus
      ) {
        await this.api.consensus();
        view = await this.api.view();
      }
      this.state = { ...this.state, view };
    } catch (error) {
      this.state = { ...this.state, lastError: describe(error) };
    }
    this.emit();
  }

  startPolling(): void {
    if (this.timer !== null) return;
    this.timer = setInterval(() => void this.refresh(), this.pollIntervalMs);
  }

  stopPolling(): void {
    if (this.timer !== null) clearInterval(this.timer);
    this.timer = null;
  }

  /** Run a mutating request, surface its error if any, then re-sync. */
  async perform(action: () => Promise<unknown>): Promise<boolean> {
    let ok = true;
    try {
      await action();
      this.state = { ...this.state, lastError: null };
    } catch (error) {
      ok = false;
      this.state = { ...this.state, lastError: describe(error) };
    }
    await this.refresh();
    return ok;
  }
}

export function describe(error: unknown): string {
  if (error instanceof ApiError) {
    if (error.status === 409) return `rejected: ${error.detail}`;
    return `error ${error.status}: ${error.detail}`;
  }
  return String(error);
}
