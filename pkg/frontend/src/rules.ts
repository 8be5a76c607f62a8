// Local rule knowledge, used only to decide what is clickable and when the
// hint button makes sense. Board mutation always goes through /apply; these
// helpers never change state.

export type Topology = "line" | "cycle";
export type Dir = "L" | "R";

export const BLACK = "x";
export const WHITE = "o";
export const EMPTY = "-";

export function isValidBoardText(text: string, topology: Topology): boolean {
  if (!/^[xo-]+$/.test(text)) return false;
  return topology === "line" || text.length >= 3;
}

export function pawnCount(board: string): number {
  let k = 0;
  for (const ch of board) if (ch !== EMPTY) k += 1;
  return k;
}

/** Destination index, or null when the move falls off a line end. */
export function target(
  board: string, from: number, dir: Dir, topology: Topology,
): number | null {
  const n = board.length;
  const step = dir === "L" ? -1 : 1;
  if (topology === "cycle") return ((from + step) % n + n) % n;
  const j = from + step;
  return j >= 0 && j < n ? j : null;
}

export function isLegal(
  board: string, from: number, dir: Dir, topology: Topology,
): boolean {
  if (from < 0 || from >= board.length) return false;
  const mover = board[from];
  if (mover === EMPTY || mover === undefined) return false;
  const j = target(board, from, dir, topology);
  if (j === null) return false;
  const victim = board[j];
  return victim !== EMPTY && victim !== mover;
}

export function hasAnyMove(
  board: string, from: number, topology: Topology,
): boolean {
  return (
    isLegal(board, from, "L", topology) || isLegal(board, from, "R", topology)
  );
}

export function isTerminal(board: string, topology: Topology): boolean {
  for (let i = 0; i < board.length; i++) {
    if (hasAnyMove(board, i, topology)) return false;
  }
  return true;
}
