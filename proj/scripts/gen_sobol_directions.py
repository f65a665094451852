#!/usr/bin/env python3
# Copyright 2026 The lsspa Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates core/src/sobol_directions.inc from the Joe-Kuo table bundled
with SciPy (new-joe-kuo-6.21201). Rows are emitted as (d, s, a, m_1..m_s)."""

import argparse
import os

import numpy as np
import scipy


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--dimensions", type=int, default=1111)
    parser.add_argument("--out", default="core/src/sobol_directions.inc")
    args = parser.parse_args()

    path = os.path.join(os.path.dirname(scipy.__file__), "stats",
                        "_sobol_direction_numbers.npz")
    table = np.load(path)
    poly, vinit = table["poly"], table["vinit"]

    lines = [
        "// Generated by scripts/gen_sobol_directions.py. Do not edit.",
        "// Joe & Kuo direction numbers (new-joe-kuo-6.21201), dimensions 2..%d."
        % args.dimensions,
        "// Columns: d, s, a, m_1 .. m_s (unused trailing m entries are zero).",
        "",
    ]
    # Dimension 1 is the van der Corput sequence and has no row.
    for dim in range(1, args.dimensions):
        encoded = int(poly[dim])
        degree = encoded.bit_length() - 1
        middle = (encoded >> 1) & ((1 << (degree - 1)) - 1)
        m = [int(v) for v in vinit[dim, :degree]]
        m += [0] * (kMaxDegree - len(m))
        lines.append("{%d, %d, %d, {%s}}," %
                     (dim + 1, degree, middle, ", ".join(map(str, m))))
    with open(args.out, "w") as f:
        f.write("\n".join(lines) + "\n")


kMaxDegree = 13

if __name__ == "__main__":
    main()
