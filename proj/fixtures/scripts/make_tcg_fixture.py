#!/usr/bin/env python3
"""Writes the card-pool fixture and a hand-evaluated damage/mana table.

The evaluator here is a direct transcription of the combo rules:
state flags first, then per-instance damage = base + buffs from other
instances (+ threshold buffs tested on printed damage), then +2 for
islandwalk when the opponent has an island. Damage is floored at zero.
"""
import itertools
import json
import pathlib
import statistics

HERE = pathlib.Path(__file__).resolve().parent.parent


def card(cid, name, mana, types, damage, effects=(), keywords=()):
    c = {"id": cid, "name": name, "mana": mana, "types": list(types), "damage": damage,
         "effects": list(effects)}
    if keywords:
        c["keywords"] = list(keywords)
    return c


EXISTING = [
    card("bolt", "Bolt", 1, ["instant"], 3),
    card("merfolk-scout", "Merfolk Scout", 1, ["creature", "merfolk"], 1),
    card("spreading-seas", "Spreading Seas", 1, ["enchantment"], 0,
         [{"kind": "state", "flag": "opponent_has_island", "value": True}]),
    card("warsong-commander", "Warsong Commander", 3, ["creature", "warrior"], 2,
         [{"kind": "threshold_buff", "amount": 1, "stat_cap": 3, "filter": ["goblin"]}]),
    card("hill-ogre", "Hill Ogre", 4, ["creature", "giant"], 5),
    card("goblin-raider", "Goblin Raider", 1, ["creature", "goblin"], 2),
    card("stone-wall", "Stone Wall", 2, ["creature", "wall"], 0),
    card("coral-merfolk", "Coral Merfolk", 2, ["creature", "merfolk"], 2, keywords=["islandwalk"]),
    card("shield-bearer", "Shield Bearer", 3, ["creature", "soldier"], 1),
    card("frost-giant", "Frost Giant", 6, ["creature", "giant"], 6),
]
NEW = [
    card("pearl-lord", "Pearl Lord", 2, ["creature", "wizard"], 2, [
        {"kind": "flat_buff", "amount": 1, "filter": ["merfolk"], "excludes_self": True},
        {"kind": "keyword", "keyword": "islandwalk", "filter": ["merfolk"], "excludes_self": True},
    ]),
]


def matches(c, flt):
    return not flt or any(t in c["types"] for t in flt)


def evaluate(instances):
    flags = {}
    setters = {}
    for c in instances:
        for e in c["effects"]:
            if e["kind"] == "state":
                setters.setdefault(e["flag"], set()).add(e["value"])
    for flag, vals in setters.items():
        flags[flag] = True in vals
    total = 0
    for i, c in enumerate(instances):
        dmg = c["damage"]
        kws = set(c.get("keywords", []))
        for j, src in enumerate(instances):
            for e in src["effects"]:
                self_ok = i != j or not e.get("excludes_self", True)
                if not self_ok:
                    continue
                if e["kind"] == "flat_buff" and matches(c, e["filter"]):
                    dmg += e["amount"]
                elif e["kind"] == "threshold_buff" and matches(c, e["filter"]) \
                        and c["damage"] <= e["stat_cap"]:
                    dmg += e["amount"]
                elif e["kind"] == "keyword" and matches(c, e["filter"]):
                    kws.add(e["keyword"])
        if "islandwalk" in kws and flags.get("opponent_has_island", False):
            dmg += 2
        total += max(dmg, 0)
    return total, sum(c["mana"] for c in instances)


def main():
    pool = EXISTING + NEW
    by_id = {c["id"]: c for c in pool}
    ids = sorted(by_id)
    rows = []
    for size in (1, 2, 3):
        for combo in itertools.combinations_with_replacement(ids, size):
            dmg, mana = evaluate([by_id[i] for i in combo])
            rows.append({"cards": list(combo), "damage": dmg, "mana": mana})

    # Exhaustive scan oracle: sizes 2..3, must contain the new card.
    def dpm(d, m):
        return d / max(m, 1)

    scores = []
    for r in rows:
        if len(r["cards"]) < 2 or "pearl-lord" not in r["cards"]:
            continue
        solo = [evaluate([by_id[i]]) for i in r["cards"]]
        base = sum(d for d, _ in solo) / sum(max(m, 1) for _, m in solo)
        scores.append((dpm(r["damage"], r["mana"]) - base, r["cards"]))
    vals = [s for s, _ in scores]
    med = statistics.median(vals)
    mad = statistics.median([abs(v - med) for v in vals])
    if mad == 0:
        flagged = [(s, c) for s, c in scores if s != med]
    else:
        flagged = [(s, c) for s, c in scores if abs(s - med) / (1.4826 * mad) > 3.5]
    flagged.sort(key=lambda sc: (-sc[0], sc[1]))
    print(f"population {len(scores)} median {med} mad {mad} flagged {len(flagged)}")
    for s, c in flagged[:5]:
        print(f"  {s:+.4f} {c}")

    (HERE / "cards.json").write_text(json.dumps({"cards": EXISTING}, indent=1) + "\n")
    (HERE / "newset.json").write_text(json.dumps({"cards": NEW}, indent=1) + "\n")
    (HERE / "cards.table.json").write_text(json.dumps({
        "combos": rows,
        "scan_madz_flagged": [c for _, c in flagged],
    }, indent=1) + "\n")


if __name__ == "__main__":
    main()
