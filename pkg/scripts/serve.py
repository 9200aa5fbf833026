#!/usr/bin/env python3
"""Start the workbench HTTP service (requires uvicorn)."""

import argparse

import uvicorn


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    args = parser.parse_args()
    uvicorn.run("chordblend.service:app", host=args.host, port=args.port)


if __name__ == "__main__":
    main()
