// Wiring: store, DOM, and the URL hash. The hash always mirrors the visible
// game (initial board plus the moves up to the cursor), so a refresh or a
// shared link replays the same game through the service.

import { EngineClient } from "./api";
import { decodeHash, encodeHash } from "./hash";
import { bind, render } from "./render";
import { GameStore } from "./store";
import { viewModel } from "./view";

const params = new URLSearchParams(window.location.search);
const engineUrl = params.get("engine") ?? "http://127.0.0.1:8715";

const store = new GameStore(new EngineClient(engineUrl));

let hashOwnedByUs = false;

function syncHash(): void {
  const state = store.getState();
  const initial = state.boards[0];
  if (state.phase !== "play" || initial === undefined) return;
  const encoded = encodeHash({
    board: initial,
    topology: state.topology,
    moves: state.moves
      .slice(0, state.cursor)
      .map((m) => [m.from, m.dir]),
  });
  if (window.location.hash !== encoded) {
    hashOwnedByUs = true;
    window.location.hash = encoded;
  }
}

const handlers = {
  onCellClick(index: number): void {
    const selected = store.getState().selected;
    store.select(selected === index ? null : index);
  },
  onDirection(dir: "L" | "R"): void {
    const selected = store.getState().selected;
    if (selected !== null) void store.submitMove(selected, dir);
  },
  onHint(): void {
    void store.requestHint();
  },
  onAcceptHint(): void {
    void store.acceptHint();
  },
  onUndo(): void {
    store.undo();
  },
  onRedo(): void {
    store.redo();
  },
  onNewGame(): void {
    store.reset();
    window.location.hash = "";
  },
  onRetry(): void {
    void store.retry();
  },
  onStart(board: string, topology: "line" | "cycle"): void {
    void store.setup(board, topology);
  },
};

store.subscribe((state) => {
  render(viewModel(state), handlers);
  syncHash();
});

function loadFromHash(): void {
  const decoded = decodeHash(window.location.hash);
  if (decoded) {
    void store.restore(decoded.board, decoded.topology, decoded.moves);
  }
}

window.addEventListener("hashchange", () => {
  if (hashOwnedByUs) {
    hashOwnedByUs = false;
    return;
  }
  loadFromHash();
});

bind(handlers);
render(viewModel(store.getState()), handlers);
loadFromHash();
