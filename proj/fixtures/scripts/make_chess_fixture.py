#!/usr/bin/env python3
"""Builds the 50-game synthetic chess log and its bigram win-rate table."""
import json
import pathlib
import random

HERE = pathlib.Path(__file__).resolve().parent.parent
PIECES = ["P", "N", "B", "R", "Q", "K"]
WEIGHTS = [6, 3, 3, 2, 1, 1]


def build_games():
    rng = random.Random(1851)
    games = []
    for i in range(50):
        plies = rng.randrange(6, 21)
        moves = [[p % 2, rng.choices(PIECES, WEIGHTS)[0]] for p in range(plies)]
        games.append({"match_id": f"C{i + 1:02d}", "sides": [["white"], ["black"]],
                      "winner": rng.randrange(2), "moves": moves})
    return games


def bigram_table(games, skip_first):
    table = {}
    for g in games:
        for side in (0, 1):
            seq = [piece for s, piece in g["moves"] if s == side][skip_first:]
            grams = {f"seq:{x}->{y}" for x, y in zip(seq, seq[1:])}
            for gram in grams:
                w, n = table.get(gram, (0, 0))
                table[gram] = (w + int(g["winner"] == side), n + 1)
    return {k: {"wins": w, "games": n} for k, (w, n) in sorted(table.items())}


def main():
    games = build_games()
    (HERE / "chess-50.jsonl").write_text(
        "".join(json.dumps(g, separators=(",", ":")) + "\n" for g in games))
    table = {"skip_0": bigram_table(games, 0), "skip_2": bigram_table(games, 2)}
    (HERE / "chess-50.table.json").write_text(json.dumps(table, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
