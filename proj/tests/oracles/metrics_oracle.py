# Copyright 2026 The plagdet Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reference accuracy / precision / recall / F1 for seeded random confusion
matrices, computed with scikit-learn from expanded label vectors.

Run: python3 tests/oracles/metrics_oracle.py > tests/oracles/metrics_cases.json
"""
import json
import random

import numpy as np
from sklearn.metrics import accuracy_score, precision_recall_fscore_support


def expand(matrix):
    y_true, y_pred = [], []
    for t, row in enumerate(matrix):
        for p, n in enumerate(row):
            y_true += [t] * n
            y_pred += [p] * n
    return np.array(y_true), np.array(y_pred)


def case(rng):
    c = rng.choice([2, 3, 3, 3, 4])
    m = [[rng.randint(0, 60) for _ in range(c)] for _ in range(c)]
    # Sometimes empty a column or a row so undefined precision/recall shows up.
    if rng.random() < 0.2:
        col = rng.randrange(c)
        for r in range(c):
            m[r][col] = 0
    if rng.random() < 0.2:
        m[rng.randrange(c)] = [0] * c
    if sum(map(sum, m)) == 0:
        m[0][0] = 1
    y_true, y_pred = expand(m)
    labels = list(range(c))
    out = {"matrix": m, "accuracy": accuracy_score(y_true, y_pred)}
    for avg in ("weighted", "macro"):
        p, r, f, _ = precision_recall_fscore_support(
            y_true, y_pred, labels=labels, average=avg, zero_division=0)
        out[avg] = {"precision": p, "recall": r, "f1": f}
    p, r, f, s = precision_recall_fscore_support(
        y_true, y_pred, labels=labels, average=None, zero_division=0)
    out["per_class"] = [
        {"precision": float(p[k]), "recall": float(r[k]), "f1": float(f[k]), "support": int(s[k])}
        for k in range(c)]
    return out


if __name__ == "__main__":
    rng = random.Random(20240601)
    cases = [case(rng) for _ in range(100)]
    print(json.dumps(cases, indent=1, default=float))
