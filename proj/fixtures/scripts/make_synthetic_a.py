#!/usr/bin/env python3
"""Builds the synthetic-A match log and its hand-tallied table.

The log is assembled from explicit blocks so every count can be followed by
hand. The table is tallied by a plain recount over the written records.
"""
import itertools
import json
import math
import pathlib
import random

HERE = pathlib.Path(__file__).resolve().parent.parent
OTHERS = ["c", "d", "e", "f", "g"]


def build_matches():
    rng = random.Random(20240611)
    matches = []

    def add(side0, side1, winner):
        matches.append({"match_id": f"A{len(matches) + 1:03d}",
                        "sides": [sorted(side0), sorted(side1)],
                        "winner": winner})

    def opponents(k, exclude=()):
        pool = [x for x in OTHERS if x not in exclude]
        return rng.sample(pool, k)

    # Block 1: a and b together, 40 games, 30 wins.
    for i in range(40):
        add(["a", "b"], opponents(2), 0 if i % 4 != 3 else 1)
    # Block 2: a without b, 60 games, 20 wins.
    for i in range(60):
        mate = OTHERS[i % len(OTHERS)]
        add(["a", mate], opponents(2, exclude=[mate]), 0 if i % 3 == 0 else 1)
    # Block 3: b without a, 60 games, 20 wins (b listed second side).
    for i in range(60):
        mate = OTHERS[(i + 2) % len(OTHERS)]
        add(opponents(2, exclude=[mate]), ["b", mate], 1 if i % 3 == 1 else 0)
    # Block 4: neither a nor b, 40 games, three-player rosters.
    for i in range(40):
        picks = rng.sample(OTHERS, 5)
        add(picks[:3], picks[3:], rng.randrange(2))
    return matches


def tally(matches):
    solo, joint, vs = {}, {}, {}
    for m in matches:
        for s, roster in enumerate(m["sides"]):
            won = int(m["winner"] == s)
            other = m["sides"][1 - s]
            for e in roster:
                w, g = solo.get(e, (0, 0))
                solo[e] = (w + won, g + 1)
                for o in other:
                    w, g = vs.get((e, o), (0, 0))
                    vs[(e, o)] = (w + won, g + 1)
            for x, y in itertools.combinations(sorted(roster), 2):
                w, g = joint.get((x, y), (0, 0))
                joint[(x, y)] = (w + won, g + 1)
    return solo, joint, vs


def main():
    matches = build_matches()
    solo, joint, vs = tally(matches)
    rate = lambda wg: wg[0] / wg[1]

    assert len(matches) == 200
    assert solo["a"] == (50, 100) and solo["b"] == (50, 100), (solo["a"], solo["b"])
    assert joint[("a", "b")] == (30, 40)

    table = {"solo": {}, "joint": {}, "counter": {}, "matrix_mean": {}}
    for e, (w, g) in sorted(solo.items()):
        table["solo"][e] = {"wins": w, "games": g}
    for (x, y), (w, g) in sorted(joint.items()):
        key = f"{x}|{y}"
        table["joint"][key] = {"wins": w, "games": g}
        # Mean baseline: (solo_x + solo_y) / 2 in canonical order.
        baseline = (rate(solo[x]) + rate(solo[y])) / 2
        table["matrix_mean"][key] = rate((w, g)) - baseline
    for (x, y), (w, g) in sorted(vs.items()):
        table["counter"][f"{x}|{y}"] = {"wins": w, "games": g,
                                        "score": rate((w, g)) - rate(solo[x])}

    with_a = {k: v for k, v in table["matrix_mean"].items() if "a" in k.split("|")}
    best = max(with_a, key=lambda k: with_a[k])
    assert best == "a|b" and math.isclose(with_a[best], 0.25), with_a

    (HERE / "synthetic-A.jsonl").write_text(
        "".join(json.dumps(m, separators=(",", ":")) + "\n" for m in matches))
    (HERE / "synthetic-A.table.json").write_text(json.dumps(table, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
