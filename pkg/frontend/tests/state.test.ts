import { describe, expect, it } from "vitest";

import { ApiError, SessionView } from "../src/api.js";
import { controlsEnabled, describe as describeError, nextPhases } from "../src/state.js";

function viewIn(phase: string, voted: string[] = [], feedbackGiven: string[] = []): SessionView {
  return {
    id: "s1",
    phase,
    features: [],
    alternatives: [],
    participants: [],
    assessments: [],
    messages: [],
    feedback: [],
    voted,
    feedback_given: feedbackGiven,
  };
}

describe("nextPhases", () => {
  it("follows the forward chain", () => {
    expect(nextPhases("setup")).toEqual(["voting"]);
    expect(nextPhases("voting")).toEqual(["discussion"]);
    expect(nextPhases("discussion")).toEqual(["ranking"]);
    expect(nextPhases("ranking")).toEqual(["feedback"]);
  });

  it("allows close or reopen from feedback", () => {
    expect(nextPhases("feedback")).toEqual(["closed", "discussion"]);
  });

  it("is terminal at closed", () => {
    expect(nextPhases("closed")).toEqual([]);
  });
});

describe("controlsEnabled", () => {
  it("gates voting to the voting phase", () => {
    expect(controlsEnabled(viewIn("voting"), "participant", "p1").vote).toBe(true);
    expect(controlsEnabled(viewIn("discussion"), "participant", "p1").vote).toBe(false);
    expect(controlsEnabled(viewIn("setup"), "participant", "p1").vote).toBe(false);
  });

  it("disables voting after my assessment landed", () => {
    expect(controlsEnabled(viewIn("voting", ["p1"]), "participant", "p1").vote).toBe(false);
    expect(controlsEnabled(viewIn("voting", ["p2"]), "participant", "p1").vote).toBe(true);
  });

  it("gates chat to discussion", () => {
    expect(controlsEnabled(viewIn("discussion"), "participant", "p1").chat).toBe(true);
    expect(controlsEnabled(viewIn("voting"), "participant", "p1").chat).toBe(false);
  });

  it("gates feedback and respects prior submission", () => {
    expect(controlsEnabled(viewIn("feedback"), "participant", "p1").feedback).toBe(true);
    expect(controlsEnabled(viewIn("feedback", [], ["p1"]), "participant", "p1").feedback).toBe(false);
  });

  it("offers organizer controls only to organizers", () => {
    expect(controlsEnabled(viewIn("voting"), "organizer", "org").organizer).toBe(true);
    expect(controlsEnabled(viewIn("voting"), "participant", "p1").organizer).toBe(false);
    expect(controlsEnabled(viewIn("closed"), "organizer", "org").organizer).toBe(false);
  });

  it("handles the not-yet-loaded state", () => {
    const gates = controlsEnabled(null, "participant", "p1");
    expect(gates.vote).toBe(false);
    expect(gates.chat).toBe(false);
    expect(gates.feedback).toBe(false);
  });
});

describe("describe", () => {
  it("labels 409s as rejections", () => {
    expect(describeError(new ApiError(409, "already voted"))).toBe("rejected: already voted");
  });

  it("keeps other statuses visible", () => {
    expect(describeError(new ApiError(422, "bad value"))).toBe("error 422: bad value");
  });
});
