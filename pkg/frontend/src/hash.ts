// URL-hash codec so a game survives refresh: the initial board, the
// topology, and the move list played so far. Example:
//   #b=xoxo&t=line&m=0R.3L

import type { Dir, Topology } from "./rules";
import { isValidBoardText } from "./rules";

export interface HashState {
  board: string;
  topology: Topology;
  moves: [number, Dir][];
}

export function encodeHash(state: HashState): string {
  const parts = [`b=${state.board}`, `t=${state.topology}`];
  if (state.moves.length > 0) {
    parts.push(`m=${state.moves.map(([i, d]) => `${i}${d}`).join(".")}`);
  }
  return `#${parts.join("&")}`;
}

export function decodeHash(hash: string): HashState | null {
  const text = hash.startsWith("#") ? hash.slice(1) : hash;
  if (!text) return null;
  const fields = new Map<string, string>();
  for (const part of text.split("&")) {
    const eq = part.indexOf("=");
    if (eq <= 0) return null;
    fields.set(part.slice(0, eq), part.slice(eq + 1));
  }
  const board = fields.get("b");
  const topology = fields.get("t") ?? "line";
  if (topology !== "line" && topology !== "cycle") return null;
  if (!board || !isValidBoardText(board, topology)) return null;
  const moves: [number, Dir][] = [];
  const encoded = fields.get("m");
  if (encoded) {
    for (const token of encoded.split(".")) {
      const m = /^(\d+)([LR])$/.exec(token);
      if (!m) return null;
      moves.push([Number(m[1]), m[2] as Dir]);
    }
  }
  return { board, topology, moves };
}
