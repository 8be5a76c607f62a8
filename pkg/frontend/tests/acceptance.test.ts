// Shipped guarantees for the UI, exercised end to end through the store and
// the live service. The hint loop must walk any board down to the value the
// engine reported at setup, in exactly pawns minus value steps, and illegal
// clicks must never change what the player sees.

import { describe, expect, it } from "vitest";
import { EngineClient } from "../src/api";
import { pawnCount, isLegal, type Dir, type Topology } from "../src/rules";
import { GameStore } from "../src/store";
import { BASE_URL, randomBoard, rng } from "./config";

function client(): EngineClient {
  return new EngineClient(BASE_URL);
}

describe("hint loop acceptance", () => {
  it("plays 100 random boards down to the reported value", async () => {
    const next = rng(20260816);
    for (let round = 0; round < 100; round++) {
      const topology: Topology = round % 2 ? "cycle" : "line";
      const n = (topology === "cycle" ? 3 : 2) + Math.floor(next() * 10);
      const board = randomBoard(next, Math.min(n, 12), "xo");

      const store = new GameStore(client());
      expect(await store.setup(board, topology)).toBe(true);
      const value0 = store.value;
      expect(value0).not.toBeNull();
      const pawns0 = pawnCount(board);

      let steps = 0;
      for (;;) {
        const hint = await store.requestHint();
        if (hint === null) break;
        expect(await store.acceptHint()).toBe(true);
        steps += 1;
        // an optimal move never gives ground
        expect(store.value, `${board} ${topology} step ${steps}`).toBe(value0);
        expect(steps).toBeLessThanOrEqual(pawns0);
      }

      expect(pawnCount(store.board), `${board} ${topology}`).toBe(value0);
      expect(steps, `${board} ${topology}`).toBe(pawns0 - (value0 as number));
    }
  }, 300_000);

  it("rejects every illegal click without touching the game", async () => {
    const next = rng(7);
    let probes = 0;
    for (let round = 0; round < 20; round++) {
      const topology: Topology = round % 2 ? "cycle" : "line";
      const n = (topology === "cycle" ? 3 : 2) + Math.floor(next() * 9);
      const board = randomBoard(next, n, "xo-");

      const store = new GameStore(client());
      if (!(await store.setup(board, topology))) continue; // mono cycle etc. still solve; only junk fails
      for (let from = 0; from < board.length; from++) {
        for (const dir of ["L", "R"] as Dir[]) {
          if (isLegal(board, from, dir, topology)) continue;
          const before = store.getState();
          expect(await store.submitMove(from, dir)).toBe(false);
          const after = store.getState();
          expect(after.boards).toEqual(before.boards);
          expect(after.cursor).toBe(before.cursor);
          expect(after.moves).toEqual(before.moves);
          expect(after.reason).not.toBeNull();
          probes += 1;
        }
      }
    }
    expect(probes).toBeGreaterThan(100);
  }, 300_000);
});
