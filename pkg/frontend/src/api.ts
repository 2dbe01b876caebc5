// Typed client for the session service. Every number shown in the UI
// comes out of these responses untouched; the client never computes
// scores of its own.

export interface FeatureSpec {
  id: string;
  kind: "continuous" | "binary";
  direction?: "above-mean-favorable" | "below-mean-favorable";
}

export interface Alternative {
  id: string;
  label: string;
  features: Record<string, number>;
}

export interface AffectBadge {
  sentiment: number;
  emotion: number;
  fused: number;
}

export interface ChatMessage {
  participant: string;
  alternative: string;
  text: string;
  timestamp: string;
  affect?: AffectBadge;
}

export interface RankingEntry {
  alternative: string;
  total_preference: number;
}

export interface Ranking {
  ordered: RankingEntry[];
  top_ranked: string;
}

export interface FeedbackEntry {
  participant: string;
  agreement: number;
  confidence: number;
  score?: number;
}

export interface ConsensusReport {
  scores: number[];
  q1: number;
  q3: number;
  iqr: number;
  level: string;
  notes: string[];
}

export interface SessionView {
  id: string;
  phase: string;
  features: FeatureSpec[];
  alternatives: Alternative[];
  participants: { id: string; name: string; weight?: number }[];
  assessments: { participant: string; values: Record<string, number> }[];
  messages: ChatMessage[];
  feedback: FeedbackEntry[];
  ranking?: Ranking;
  consensus?: ConsensusReport;
  voted: string[];
  feedback_given: string[];
}

export class ApiError extends Error {
  constructor(public status: number, public detail: string) {
    super(`${status}: ${detail}`);
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(base + path, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  const body = await response.text();
  if (!response.ok) {
    let detail = body;
    try {
      const parsed = JSON.parse(body);
      if (typeof parsed.detail === "string") detail = parsed.detail;
      else detail = JSON.stringify(parsed.detail);
    } catch {
      // plain-text error body
    }
    throw new ApiError(response.status, detail);
  }
  return JSON.parse(body) as T;
}

export class SessionApi {
  constructor(public base: string, public sessionId: string) {}

  static async createSession(
    base: string,
    body: {
      id?: string;
      features: FeatureSpec[];
      alternatives: Alternative[];
      affect?: { alpha: number; beta: number };
    },
  ): Promise<SessionApi> {
    const created = await request<{ id: string }>(base, "/sessions", {
      method: "POST",
      body: JSON.stringify(body),
    });
    return new SessionApi(base, created.id);
  }

  view(): Promise<SessionView> {
    return request(this.base, `/sessions/${this.sessionId}`);
  }

  setPhase(target: string): Promise<{ phase: string }> {
    return request(this.base, `/sessions/${this.sessionId}/phase`, {
      method: "POST",
      body: JSON.stringify({ target }),
    });
  }

  addParticipant(id: string, name = ""): Promise<{ id: string }> {
    return request(this.base, `/sessions/${this.sessionId}/participants`, {
      method: "POST",
      body: JSON.stringify({ id, name }),
    });
  }

  submitAssessment(participant: string, values: Record<string, number>) {
    return request<{ participant: string }>(
      this.base,
      `/sessions/${this.sessionId}/assessments`,
      { method: "POST", body: JSON.stringify({ participant, values }) },
    );
  }

  postMessage(participant: string, alternative: string, text: string) {
    return request<ChatMessage>(this.base, `/sessions/${this.sessionId}/messages`, {
      method: "POST",
      body: JSON.stringify({ participant, alternative, text }),
    });
  }

  computeRanking(): Promise<Ranking> {
    return request(this.base, `/sessions/${this.sessionId}/ranking`, {
      method: "POST",
    });
  }

  submitFeedback(participant: string, agreement: number, confidence: number) {
    return request<FeedbackEntry & { score: number }>(
      this.base,
      `/sessions/${this.sessionId}/feedback`,
      { method: "POST", body: JSON.stringify({ participant, agreement, confidence }) },
    );
  }

  consensus(): Promise<ConsensusReport> {
    return request(this.base, `/sessions/${this.sessionId}/consensus`);
  }

  exportDocument(): Promise<Record<string, unknown>> {
    return request(this.base, `/sessions/${this.sessionId}/export`);
  }
}
