// Client-side game state. The client owns the game: the initial board plus
// the move list is the whole truth, and every board string past the initial
// one was returned by /apply. Undo and redo just move a cursor over that
// recorded history, so they never invent positions.

import { ApiError, EngineClient, OfflineError } from "./api";
import type { Dir, Topology } from "./rules";
import { isValidBoardText } from "./rules";

export interface MoveRec {
  from: number;
  dir: Dir;
}

export type Phase = "setup" | "play";

export interface GameState {
  phase: Phase;
  topology: Topology;
  boards: string[]; // boards[k] is the position after moves[0..k-1]
  values: (number | null)[]; // engine value per position, null = not known
  moves: MoveRec[];
  cursor: number;
  pending: boolean;
  offline: boolean;
  reason: string | null; // why the last move was rejected
  notice: string | null; // setup and restore feedback
  hint: MoveRec | null;
  selected: number | null;
  dropped: number; // clicks ignored while a request was in flight
}

export type Listener = (state: GameState) => void;

function initialState(): GameState {
  return {
    phase: "setup",
    topology: "line",
    boards: [],
    values: [],
    moves: [],
    cursor: 0,
    pending: false,
    offline: false,
    reason: null,
    notice: null,
    hint: null,
    selected: null,
    dropped: 0,
  };
}

export class GameStore {
  private state: GameState = initialState();
  private listeners: Listener[] = [];

  constructor(private client: EngineClient) {}

  getState(): GameState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  get board(): string {
    const b = this.state.boards[this.state.cursor];
    if (b === undefined) throw new Error("no board yet");
    return b;
  }

  get value(): number | null {
    return this.state.values[this.state.cursor] ?? null;
  }

  private update(patch: Partial<GameState>): void {
    this.state = { ...this.state, ...patch };
    for (const l of this.listeners) l(this.state);
  }

  /** True when the click had to be ignored; callers show a busy pulse. */
  private busy(): boolean {
    if (this.state.pending) {
      this.update({ dropped: this.state.dropped + 1 });
      return true;
    }
    return false;
  }

  private fail(err: unknown): void {
    if (err instanceof OfflineError) {
      this.update({ pending: false, offline: true });
      return;
    }
    if (err instanceof ApiError) {
      this.update({ pending: false, notice: err.message });
      return;
    }
    throw err;
  }

  /** Validate a hand-entered board by a solve round-trip, then start play. */
  async setup(boardText: string, topology: Topology): Promise<boolean> {
    if (this.busy()) return false;
    if (!isValidBoardText(boardText, topology)) {
      this.update({
        notice:
          topology === "cycle" && /^[xo-]+$/.test(boardText)
            ? "a cycle needs at least 3 cells"
            : "boards are nonempty strings over x, o, -",
      });
      return false;
    }
    this.update({ pending: true, notice: null });
    try {
      const solved = await this.client.solve(boardText, topology);
      this.update({
        phase: "play",
        topology,
        boards: [boardText],
        values: [solved.value],
        moves: [],
        cursor: 0,
        pending: false,
        offline: false,
        reason: null,
        hint: null,
        selected: null,
      });
      return true;
    } catch (err) {
      this.fail(err);
      return false;
    }
  }

  async submitMove(from: number, dir: Dir): Promise<boolean> {
    if (this.state.phase !== "play" || this.busy()) return false;
    this.update({ pending: true, reason: null });
    try {
      const applied = await this.client.apply(
        this.board, this.state.topology, from, dir,
      );
      if (!applied.legal) {
        this.update({ pending: false, reason: applied.reason });
        return false;
      }
      // a new move discards any redo tail beyond the cursor
      const upto = this.state.cursor + 1;
      const boards = [...this.state.boards.slice(0, upto), applied.board];
      const moves = [...this.state.moves.slice(0, this.state.cursor), { from, dir }];
      const values = this.state.values.slice(0, upto);
      let value: number | null = null;
      try {
        value = (await this.client.solve(applied.board, this.state.topology)).value;
      } catch (err) {
        if (!(err instanceof OfflineError)) throw err;
        this.update({ offline: true });
      }
      this.update({
        boards,
        moves,
        values: [...values, value],
        cursor: upto,
        pending: false,
        hint: null,
        selected: null,
      });
      return true;
    } catch (err) {
      this.fail(err);
      return false;
    }
  }

  async requestHint(): Promise<MoveRec | null> {
    if (this.state.phase !== "play" || this.busy()) return null;
    this.update({ pending: true });
    try {
      const hint = await this.client.hint(this.board, this.state.topology);
      const move = hint ? { from: hint.move[0], dir: hint.move[1] } : null;
      this.update({ pending: false, hint: move, selected: null });
      return move;
    } catch (err) {
      this.fail(err);
      return null;
    }
  }

  async acceptHint(): Promise<boolean> {
    const hint = this.state.hint;
    if (!hint) return false;
    return this.submitMove(hint.from, hint.dir);
  }

  undo(): void {
    if (this.busy() || this.state.cursor === 0) return;
    this.update({
      cursor: this.state.cursor - 1,
      hint: null,
      selected: null,
      reason: null,
    });
  }

  redo(): void {
    if (this.busy() || this.state.cursor >= this.state.moves.length) return;
    this.update({
      cursor: this.state.cursor + 1,
      hint: null,
      selected: null,
      reason: null,
    });
  }

  select(index: number | null): void {
    if (this.state.pending) return;
    this.update({ selected: index, reason: null });
  }

  /** Re-check the service and unfreeze after an outage. */
  async retry(): Promise<boolean> {
    if (this.busy()) return false;
    if (this.state.phase !== "play") {
      this.update({ offline: false });
      return true;
    }
    this.update({ pending: true });
    try {
      const solved = await this.client.solve(this.board, this.state.topology);
      const values = [...this.state.values];
      values[this.state.cursor] = solved.value;
      this.update({ pending: false, offline: false, values });
      return true;
    } catch (err) {
      this.fail(err);
      return false;
    }
  }

  /** Back to setup with a clean slate. */
  reset(): void {
    if (this.state.pending) return;
    this.state = initialState();
    for (const l of this.listeners) l(this.state);
  }

  /**
   * Rebuild a game from its initial board and move list by replaying every
   * move through the service; the server stays the rules authority even for
   * state pasted into the URL.
   */
  async restore(
    board: string, topology: Topology, moves: [number, Dir][],
  ): Promise<boolean> {
    const ok = await this.setup(board, topology);
    if (!ok) return false;
    for (const [from, dir] of moves) {
      const applied = await this.submitMove(from, dir);
      if (!applied) {
        this.update({
          notice: `stored move ${from} ${dir} no longer applies; ` +
            "kept the game up to that point",
        });
        return false;
      }
    }
    return true;
  }
}
