// DOM painting. The whole page re-renders from a ViewModel; cells are
// rebuilt each time, which also restarts the landing animation on the cell
// the last move captured.

import type { ViewModel } from "./view";
import type { Dir } from "./rules";

export interface Handlers {
  onCellClick(index: number): void;
  onDirection(dir: Dir): void;
  onHint(): void;
  onAcceptHint(): void;
  onUndo(): void;
  onRedo(): void;
  onNewGame(): void;
  onRetry(): void;
  onStart(board: string, topology: "line" | "cycle"): void;
}

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function show(id: string, visible: boolean): void {
  el(id).classList.toggle("hidden", !visible);
}

// dropped-click count already rendered; a growing count flashes the board
let lastDropped = 0;

interface Point {
  x: number;
  y: number;
}

/** Cell centers in a unit box, row for a line, circle for a ring. */
function layout(n: number, topology: "line" | "cycle"): Point[] {
  const pts: Point[] = [];
  if (topology === "line") {
    for (let i = 0; i < n; i++) {
      pts.push({ x: n === 1 ? 0.5 : 0.06 + (0.88 * i) / (n - 1), y: 0.5 });
    }
  } else {
    for (let i = 0; i < n; i++) {
      const angle = -Math.PI / 2 + (2 * Math.PI * i) / n;
      pts.push({
        x: 0.5 + 0.42 * Math.cos(angle),
        y: 0.5 + 0.42 * Math.sin(angle),
      });
    }
  }
  return pts;
}

function paintEdges(svg: SVGSVGElement, pts: Point[], topology: string): void {
  const W = svg.clientWidth || 560;
  const H = svg.clientHeight || 280;
  svg.setAttribute("viewBox", `0 0 ${W} ${H}`);
  const seg = (a: Point, b: Point) =>
    `<line x1="${a.x * W}" y1="${a.y * H}" x2="${b.x * W}" y2="${b.y * H}"/>`;
  let body = "";
  for (let i = 0; i + 1 < pts.length; i++) {
    const a = pts[i]!;
    const b = pts[i + 1]!;
    body += seg(a, b);
  }
  if (topology === "cycle" && pts.length >= 3) {
    // the wrap edge, drawn like every other adjacency
    body += seg(pts[pts.length - 1]!, pts[0]!);
  }
  svg.innerHTML = `<g class="edges">${body}</g>`;
}

export function render(vm: ViewModel, handlers: Handlers): void {
  show("setup", vm.phase === "setup");
  show("game", vm.phase === "play");
  show("banner", vm.offline);

  if (vm.notice) {
    const notice = el("setup-notice");
    notice.textContent = vm.notice;
    notice.classList.remove("hidden");
  } else {
    el("setup-notice").classList.add("hidden");
  }

  if (vm.phase !== "play") return;

  el("value-badge").textContent = vm.value === null ? "?" : String(vm.value);
  el("pawn-count").textContent = `${vm.pawns} pawn${vm.pawns === 1 ? "" : "s"}`;
  el("move-counter").textContent = `move ${vm.moveNumber} of ${vm.moveCount}`;
  el("topology-label").textContent = vm.topology;

  const wrap = el("board-wrap");
  wrap.classList.toggle("ring", vm.topology === "cycle");
  wrap.classList.toggle("busy", vm.pending);
  if (vm.dropped > lastDropped) {
    // a click was ignored while a request was in flight; flash once
    wrap.classList.remove("rejected");
    void wrap.offsetWidth; // restart the animation
    wrap.classList.add("rejected");
  }
  lastDropped = vm.dropped;

  const pts = layout(vm.cells.length, vm.topology);
  paintEdges(el("edges") as unknown as SVGSVGElement, pts, vm.topology);

  const boardDiv = el("board");
  boardDiv.textContent = "";
  for (const cell of vm.cells) {
    const btn = document.createElement("button");
    btn.className = "cell";
    btn.dataset["index"] = String(cell.index);
    btn.classList.add(cell.ch === "x" ? "black" : cell.ch === "o" ? "white" : "hole");
    if (cell.clickable) btn.classList.add("clickable");
    if (cell.selected) btn.classList.add("selected");
    if (cell.hintFrom) btn.classList.add("hint-from");
    if (cell.index === vm.lastTarget) btn.classList.add("landed");
    btn.disabled = !cell.clickable;
    const p = pts[cell.index]!;
    btn.style.left = `${p.x * 100}%`;
    btn.style.top = `${p.y * 100}%`;
    btn.title = `cell ${cell.index}`;
    if (cell.hintFrom && cell.hintDir) {
      btn.append(Object.assign(document.createElement("span"), {
        className: "hint-arrow",
        textContent: cell.hintDir === "L" ? "←" : "→",
      }));
    }
    btn.addEventListener("click", () => handlers.onCellClick(cell.index));
    boardDiv.append(btn);
  }

  const left = el<HTMLButtonElement>("dir-left");
  const right = el<HTMLButtonElement>("dir-right");
  const hasSelection = vm.cells.some((c) => c.selected);
  show("dir-left", hasSelection);
  show("dir-right", hasSelection);
  left.disabled = !vm.selectedDirs.includes("L") || vm.pending;
  right.disabled = !vm.selectedDirs.includes("R") || vm.pending;

  el<HTMLButtonElement>("hint").disabled = vm.hintDisabled;
  show("accept-hint", vm.cells.some((c) => c.hintFrom));
  el<HTMLButtonElement>("undo").disabled = !vm.canUndo;
  el<HTMLButtonElement>("redo").disabled = !vm.canRedo;

  const reason = el("reason");
  if (vm.reason) {
    reason.textContent = `not allowed: ${vm.reason.replace(/_/g, " ")}`;
    reason.classList.remove("hidden");
  } else {
    reason.classList.add("hidden");
  }
  show("done", vm.terminal);
}

/** One-time event wiring for the static chrome around the board. */
export function bind(handlers: Handlers): void {
  el("start").addEventListener("click", () => {
    const board = el<HTMLInputElement>("board-input").value.trim();
    const ring = el<HTMLInputElement>("topo-cycle").checked;
    handlers.onStart(board, ring ? "cycle" : "line");
  });
  el("board-input").addEventListener("keydown", (ev) => {
    if ((ev as KeyboardEvent).key === "Enter") el("start").click();
  });
  el("dir-left").addEventListener("click", () => handlers.onDirection("L"));
  el("dir-right").addEventListener("click", () => handlers.onDirection("R"));
  el("hint").addEventListener("click", handlers.onHint);
  el("accept-hint").addEventListener("click", handlers.onAcceptHint);
  el("undo").addEventListener("click", handlers.onUndo);
  el("redo").addEventListener("click", handlers.onRedo);
  el("new-game").addEventListener("click", handlers.onNewGame);
  el("retry").addEventListener("click", handlers.onRetry);
}
