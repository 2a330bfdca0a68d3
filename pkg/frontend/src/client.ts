/** Thin WebSocket wrapper: one session per socket, automatic reconnect.
 *
 * Messages are dispatched in arrival order on the event loop; the server
 * answers each client frame with exactly one render or error, so ordering
 * alone keeps the view consistent.
 */

import type { ClientMessage } from "./protocol.js";
import type { ConnectionStatus } from "./state.js";

export interface SessionCallbacks {
  onStatus(status: ConnectionStatus): void;
  onFrame(raw: string): void;
}

export class SessionClient {
  private socket: WebSocket | null = null;
  private closed = false;

  constructor(
    private readonly url: string,
    private readonly callbacks: SessionCallbacks,
    private readonly reconnectMs = 1500,
  ) {}

  connect(): void {
    this.callbacks.onStatus("connecting");
    const socket = new WebSocket(this.url);
    this.socket = socket;
    socket.onopen = () => this.callbacks.onStatus("open");
    socket.onmessage = (event) => this.callbacks.onFrame(String(event.data));
    socket.onclose = () => {
      this.socket = null;
      this.callbacks.onStatus("closed");
      if (!this.closed) {
        setTimeout(() => this.connect(), this.reconnectMs);
      }
    };
  }

  send(message: ClientMessage): boolean {
    if (this.socket === null || this.socket.readyState !== WebSocket.OPEN) {
      return false;
    }
    this.socket.send(JSON.stringify(message));
    return true;
  }

  close(): void {
    this.closed = true;
    this.socket?.close();
  }
}
