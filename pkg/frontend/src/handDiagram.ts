/** On-screen hand diagram: which finger types which letters.
 *
 * Pure teaching aid — the mapping below is the client's own copy of the
 * standard touch-typing columns and is never used to decode anything; the
 * server's key-finger map is authoritative for the session.
 */

export type HandId = "L" | "R";
export type FingerId = "index" | "middle" | "ring" | "pinky";

export interface FingerRef {
  hand: HandId;
  finger: FingerId;
}

const GROUPS: [HandId, FingerId, string][] = [
  ["L", "pinky", "qaz"],
  ["L", "ring", "wsx"],
  ["L", "middle", "edc"],
  ["L", "index", "rtfgvb"],
  ["R", "index", "yuhjnm"],
  ["R", "middle", "ik"],
  ["R", "ring", "ol"],
  ["R", "pinky", "p'"],
];

export function fingerForKey(key: string): FingerRef | null {
  const lower = key.toLowerCase();
  for (const [hand, finger, chars] of GROUPS) {
    if (chars.includes(lower)) return { hand, finger };
  }
  return null;
}

export function diagramHtml(active: FingerRef | null): string {
  const hands = (["L", "R"] as HandId[]).map((hand) => {
    const fingers = GROUPS.filter(([h]) => h === hand)
      .map(([, finger, chars]) => {
        const on =
          active !== null && active.hand === hand && active.finger === finger;
        return (
          `<div class="finger${on ? " finger-active" : ""}" ` +
          `data-hand="${hand}" data-finger="${finger}">` +
          `<span class="finger-name">${finger}</span>` +
          `<span class="finger-chars">${chars.replace("'", "&#39;")}</span></div>`
        );
      })
      .join("");
    const label = hand === "L" ? "left hand" : "right hand";
    return `<div class="hand hand-${hand}"><div class="hand-label">${label}</div>${fingers}</div>`;
  });
  return `<div class="hand-diagram">${hands.join("")}</div>`;
}
