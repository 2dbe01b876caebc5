// Entry point: read the join parameters, connect, start polling.

import { SessionApi } from "./api.js";
import { Role, SessionController } from "./state.js";
import { mountApp } from "./ui.js";

function param(name: string, fallback: string): string {
  return new URLSearchParams(window.location.search).get(name) ?? fallback;
}

export function bootstrap(root: HTMLElement): SessionController {
  const base = param("service", "http://127.0.0.1:8000");
  const sessionId = param("session", "");
  const role = (param("role", "participant") as Role);
  const me = param("token", "guest");
  const api = new SessionApi(base, sessionId);
  const controller = new SessionController(api, role, me);
  mountApp(root, controller);
  controller.startPolling();
  return controller;
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  bootstrap(document.getElementById("app") as HTMLElement);
}
