// Pure derivation of what the DOM should show from the store state. Kept
// free of document access so the undo/redo identity and clickability rules
// are testable without a browser.

import type { GameState } from "./store";
import type { Dir } from "./rules";
import { hasAnyMove, isLegal, isTerminal, pawnCount, target } from "./rules";

export interface CellView {
  index: number;
  ch: string;
  clickable: boolean;
  selected: boolean;
  hintFrom: boolean;
  hintDir: Dir | null;
}

export interface ViewModel {
  phase: "setup" | "play";
  topology: "line" | "cycle";
  board: string;
  cells: CellView[];
  value: number | null;
  pawns: number;
  terminal: boolean;
  offline: boolean;
  pending: boolean;
  reason: string | null;
  notice: string | null;
  canUndo: boolean;
  canRedo: boolean;
  hintDisabled: boolean;
  moveNumber: number;
  moveCount: number;
  dropped: number;
  selectedDirs: Dir[]; // legal directions for the current selection
  lastTarget: number | null; // cell the previous move landed on
}

export function viewModel(state: GameState): ViewModel {
  const board = state.boards[state.cursor] ?? "";
  const frozen = state.offline || state.pending;
  const terminal = board !== "" && isTerminal(board, state.topology);
  const cells: CellView[] = [...board].map((ch, index) => ({
    index,
    ch,
    clickable:
      state.phase === "play" &&
      !frozen &&
      ch !== "-" &&
      hasAnyMove(board, index, state.topology),
    selected: state.selected === index,
    hintFrom: state.hint !== null && state.hint.from === index,
    hintDir: state.hint !== null && state.hint.from === index
      ? state.hint.dir
      : null,
  }));
  const selectedDirs: Dir[] = [];
  if (state.selected !== null) {
    for (const dir of ["L", "R"] as Dir[]) {
      if (isLegal(board, state.selected, dir, state.topology)) {
        selectedDirs.push(dir);
      }
    }
  }
  let lastTarget: number | null = null;
  const prevMove = state.moves[state.cursor - 1];
  const prevBoard = state.boards[state.cursor - 1];
  if (state.cursor > 0 && prevMove !== undefined && prevBoard !== undefined) {
    lastTarget = target(prevBoard, prevMove.from, prevMove.dir, state.topology);
  }
  return {
    phase: state.phase,
    topology: state.topology,
    board,
    cells,
    value: state.values[state.cursor] ?? null,
    pawns: pawnCount(board),
    terminal,
    offline: state.offline,
    pending: state.pending,
    reason: state.reason,
    notice: state.notice,
    canUndo: !frozen && state.cursor > 0,
    canRedo: !frozen && state.cursor < state.moves.length,
    hintDisabled: state.phase !== "play" || frozen || terminal,
    moveNumber: state.cursor,
    moveCount: state.moves.length,
    dropped: state.dropped,
    selectedDirs,
    lastTarget,
  };
}
