"""HTTP face of the engine: solve a position, apply a move, produce a hint.

Stateless on purpose: every request carries the full board, the client owns
game state, so any request order works and handlers share nothing mutable.
Validation is by hand rather than through a schema layer because the error
contract distinguishes malformed input (400) from a well-formed board that
the rules reject (422, only the short-cycle case).
"""

from __future__ import annotations

import argparse

from fastapi import FastAPI, HTTPException, Request
from starlette.concurrency import run_in_threadpool

from .board import (
    LEFT,
    RIGHT,
    Conformation,
    CycleLengthError,
    IllegalMove,
    Move,
    ParseError,
    Topology,
    apply,
    legal_moves,
    parse,
    pawn_count,
    render,
)
from .solver import solve


async def _body_object(request: Request) -> dict:
    try:
        body = await request.json()
    except Exception:
        raise HTTPException(400, "body must be valid JSON") from None
    if not isinstance(body, dict):
        raise HTTPException(400, "body must be a JSON object")
    return body


def _position(body: dict) -> Conformation:
    board = body.get("board")
    topology = body.get("topology", "line")
    if not isinstance(board, str):
        raise HTTPException(400, "board must be a string over {x,o,-}")
    if topology not in ("line", "cycle"):
        raise HTTPException(400, "topology must be 'line' or 'cycle'")
    try:
        return parse(board, Topology(topology))
    except CycleLengthError as exc:
        raise HTTPException(422, str(exc)) from None
    except ParseError as exc:
        raise HTTPException(400, str(exc)) from None


def _move(body: dict) -> Move:
    origin = body.get("from")
    direction = body.get("dir")
    if isinstance(origin, bool) or not isinstance(origin, int):
        raise HTTPException(400, "from must be an integer cell index")
    if direction not in (LEFT, RIGHT):
        raise HTTPException(400, "dir must be 'L' or 'R'")
    return Move(origin, direction)


def _solved(c: Conformation) -> dict:
    res = solve(c)
    return {
        "value": res.value,
        "strategy": [[m.from_, m.dir] for m in res.strategy],
        "n": len(c),
    }


def _hint(c: Conformation) -> dict:
    res = solve(c)
    first = res.strategy[0]
    after = solve(apply(c, first))
    return {
        "move": [first.from_, first.dir],
        "value_after": after.value,
        "value_now": res.value,
    }


def create_app(dev_cors: bool = False) -> FastAPI:
    app = FastAPI(title="solitaire clobber", docs_url=None, redoc_url=None)

    if dev_cors:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.post("/solve")
    async def solve_position(request: Request) -> dict:
        c = _position(await _body_object(request))
        return await run_in_threadpool(_solved, c)

    @app.post("/apply")
    async def apply_move(request: Request) -> dict:
        body = await _body_object(request)
        c = _position(body)
        move = _move(body)
        try:
            nxt = apply(c, move)
        except IllegalMove as exc:
            return {"board": render(c), "legal": False, "reason": exc.reason}
        return {"board": render(nxt), "legal": True, "pawns": pawn_count(nxt)}

    @app.post("/hint")
    async def hint(request: Request) -> dict:
        c = _position(await _body_object(request))
        if not legal_moves(c):
            raise HTTPException(409, "terminal position: no legal moves")
        return await run_in_threadpool(_hint, c)

    return app


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="clobber-service",
        description="HTTP API for the solitaire clobber engine.")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8715)
    parser.add_argument("--dev-cors", action="store_true",
                        help="allow any origin, for local UI development")
    args = parser.parse_args(argv)

    import uvicorn

    uvicorn.run(create_app(dev_cors=args.dev_cors),
                host=args.host, port=args.port, log_level="info")
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
