"""Writes fixtures/outliers-101.json: 100 draws near zero plus one at +50.

Quartiles and the median come from numpy (linear interpolation), the flag
list from applying the IQR and MAD-z rules directly.
"""
import json
import pathlib

import numpy as np

rng = np.random.default_rng(20240611)
values = [round(float(x), 6) for x in rng.normal(0.0, 0.5, 100)] + [50.0]
arr = np.array(values)
q1, q3 = np.quantile(arr, [0.25, 0.75])
iqr = q3 - q1
lo, hi = q1 - 1.5 * iqr, q3 + 1.5 * iqr
iqr_flagged = [i for i, v in enumerate(values) if v < lo or v > hi]
med = float(np.median(arr))
mad = float(np.median(np.abs(arr - med)))
madz_flagged = [i for i, v in enumerate(values) if abs(v - med) / (1.4826 * mad) > 3.5]
assert iqr_flagged == [100], iqr_flagged

out = {
    "values": values,
    "q1": float(q1),
    "q3": float(q3),
    "median": med,
    "mad": mad,
    "iqr_flagged": iqr_flagged,
    "madz_flagged": madz_flagged,
}
path = pathlib.Path(__file__).resolve().parent.parent / "outliers-101.json"
path.write_text(json.dumps(out, indent=1) + "\n")
print(path, "iqr", iqr_flagged, "madz", madz_flagged)
