/** Physical keyboard -> wire messages.
 *
 * Letter and apostrophe keys stand in for finger taps; Space, Tab,
 * Backspace, and Enter drive the commit/cycle/delete/submit gestures, and a
 * configurable modifier key accepts the best raw character in
 * out-of-vocabulary mode.  Everything else (function keys, digits, browser
 * shortcuts with ctrl/alt/meta held) is silently dropped.
 */

import type { ClientMessage } from "./protocol.js";

export interface KeyLike {
  key: string;
  ctrlKey?: boolean;
  altKey?: boolean;
  metaKey?: boolean;
}

export interface RoutedKey {
  message: ClientMessage;
  /** Callers must preventDefault so Tab keeps focus, Space does not
   * scroll, and quick-find style shortcuts stay quiet. */
  suppressDefault: boolean;
}

export interface RouterOptions {
  acceptCharKey: string;
}

export const DEFAULT_ROUTER_OPTIONS: RouterOptions = { acceptCharKey: "Shift" };

const TAP_KEY = /^[a-z']$/;

export function routeKey(
  event: KeyLike,
  options: RouterOptions = DEFAULT_ROUTER_OPTIONS,
): RoutedKey | null {
  if (event.key === options.acceptCharKey) {
    return { message: { type: "accept_char" }, suppressDefault: true };
  }
  if (event.ctrlKey || event.altKey || event.metaKey) return null;
  switch (event.key) {
    case " ":
      return { message: { type: "space" }, suppressDefault: true };
    case "Tab":
      return { message: { type: "cycle" }, suppressDefault: true };
    case "Backspace":
      return { message: { type: "delete" }, suppressDefault: true };
    case "Enter":
      return { message: { type: "submit_phrase" }, suppressDefault: true };
    default:
      break;
  }
  const key = event.key.length === 1 ? event.key.toLowerCase() : event.key;
  if (TAP_KEY.test(key)) {
    return { message: { type: "tap_key", key }, suppressDefault: true };
  }
  return null;
}
