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

"""Independent high-precision reference values frozen into the C++ unit tests.

Run: python3 tests/oracles/scalar_oracles.py
"""
import itertools
import math

import mpmath

mpmath.mp.dps = 40


def softmax(z):
    ez = [mpmath.e ** mpmath.mpf(v) for v in z]
    s = sum(ez)
    return [float(v / s) for v in ez]


def cross_entropy(p, cls):
    return float(-mpmath.log(mpmath.mpf(p[cls])))


def adam_quadratic(w0, lr, steps, b1=0.9, b2=0.999, eps=1e-8):
    w = list(w0)
    m = [0.0] * len(w)
    v = [0.0] * len(w)
    for t in range(1, steps + 1):
        g = [2.0 * x for x in w]
        for i in range(len(w)):
            m[i] = b1 * m[i] + (1 - b1) * g[i]
            v[i] = b2 * v[i] + (1 - b2) * g[i] * g[i]
            mh = m[i] / (1 - b1 ** t)
            vh = v[i] / (1 - b2 ** t)
            w[i] -= lr * mh / (math.sqrt(vh) + eps)
    return w


def binary_metrics(tp, tn, fp, fn):
    acc = (tp + tn) / (tp + tn + fp + fn)
    prec = tp / (tp + fp)
    rec = tp / (tp + fn)
    f1 = 2 * prec * rec / (prec + rec)
    return acc, prec, rec, f1


def best_two_partition(points):
    best = None
    n = len(points)
    for mask in range(1, 2 ** n - 1):
        a = [p for i, p in enumerate(points) if mask >> i & 1]
        b = [p for i, p in enumerate(points) if not mask >> i & 1]
        cost = 0.0
        cents = []
        for grp in (a, b):
            c = tuple(sum(x[d] for x in grp) / len(grp) for d in range(2))
            cents.append(c)
            cost += sum((x[0] - c[0]) ** 2 + (x[1] - c[1]) ** 2 for x in grp)
        if best is None or cost < best[0]:
            best = (cost, sorted(cents))
    return best


def tiny_forward():
    # input u = concat(h1, h2), h1 = (0.5, -1.0), h2 = (0.25, 2.0)
    u = [0.5, -1.0, 0.25, 2.0]
    w1 = [[0.1, -0.2], [0.3, 0.4], [-0.5, 0.6], [0.7, -0.8]]
    b1 = [0.05, -0.1]
    w2 = [[0.2, -0.3, 0.4], [-0.6, 0.5, 0.1]]
    b2 = [0.01, 0.02, -0.03]
    hidden = []
    for j in range(2):
        s = mpmath.mpf(b1[j])
        for i in range(4):
            s += mpmath.mpf(u[i]) * mpmath.mpf(w1[i][j])
        hidden.append(max(s, mpmath.mpf(0)))
    logits = []
    for c in range(3):
        s = mpmath.mpf(b2[c])
        for j in range(2):
            s += hidden[j] * mpmath.mpf(w2[j][c])
        logits.append(s)
    ez = [mpmath.e ** z for z in logits]
    tot = sum(ez)
    return [float(h) for h in hidden], [float(z) for z in logits], [float(e / tot) for e in ez]


if __name__ == "__main__":
    print("softmax([1,2,3]) =", ["%.17g" % v for v in softmax([1, 2, 3])])
    print("CE([0.7,0.2,0.1], 0) = %.17g" % cross_entropy([0.7, 0.2, 0.1], 0))
    print("CE(uniform) = %.17g" % float(mpmath.log(3)))
    w = adam_quadratic([5.0, 5.0], 0.1, 200)
    print("adam lr=0.1 200 steps: w =", w, "norm =", math.hypot(*w))
    w = adam_quadratic([5.0, 5.0], 0.001, 200)
    print("adam lr=0.001 200 steps: norm =", math.hypot(*w))
    print("binary TP=4 TN=5 FP=1 FN=0:", binary_metrics(4, 5, 1, 0))
    print("2-partition optimum:", best_two_partition([(0, 0), (0, 1), (10, 0), (10, 1)]))
    h, z, p = tiny_forward()
    print("tiny hidden", ["%.17g" % v for v in h])
    print("tiny logits", ["%.17g" % v for v in z])
    print("tiny probs", ["%.17g" % v for v in p])
