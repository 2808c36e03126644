#!/usr/bin/env python3
"""Regenerate the bundled datasets and their embedded C++ copies.

Both datasets are synthetic but shaped like the small UCI tables they stand
in for (no redistribution worries, deterministic content). Run from the
repo root:

    python3 data/generate.py

Writes data/diabetes.csv, data/heart.csv and core/src/bundled_data.cpp.
The embedded copies must stay byte-identical to the CSVs; a unit test
checks that.
"""

import io
import os

import numpy as np

HERE = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.dirname(HERE)

# ---------------------------------------------------------------- diabetes
# 768 rows, 8 numeric features, binary outcome. The label depends on two
# strong linear features, one multiplicative (XOR-like) pair and one weak
# feature; three columns are pure noise. The interaction term is what gives
# hyperparameter tuning room to beat a fixed mid-range configuration.

D_LIN0 = 1.00   # glucose
D_LIN1 = 0.80   # bmi
D_XOR = 2.20    # age * pedigree interaction
D_LIN4 = 0.40   # insulin
D_BIAS = -1.00


def make_diabetes(rng):
    n = 768
    z = rng.standard_normal((n, 8))
    score = (D_LIN0 * z[:, 0] + D_LIN1 * z[:, 1] + D_XOR * z[:, 2] * z[:, 3]
             + D_LIN4 * z[:, 4] + D_BIAS)
    p = 1.0 / (1.0 + np.exp(-score))
    y = (rng.uniform(size=n) < p).astype(int)

    cols = {
        "glucose": np.round(121.0 + 30.0 * z[:, 0], 1),
        "bmi": np.round(32.0 + 7.5 * z[:, 1], 1),
        "age": np.round(33.0 + 11.0 * z[:, 2]).astype(int),
        "pedigree": np.round(0.47 + 0.33 * z[:, 3], 3),
        "insulin": np.round(80.0 + 115.0 * z[:, 4], 1),
        "pregnancies": np.clip(np.round(3.8 + 3.4 * z[:, 5]), 0, None).astype(int),
        "pressure": np.round(69.0 + 19.0 * z[:, 6], 1),
        "skinfold": np.round(20.5 + 16.0 * z[:, 7], 1),
    }

    buf = io.StringIO()
    names = list(cols.keys())
    buf.write(",".join(names + ["outcome"]) + "\n")
    for i in range(n):
        row = []
        for name in names:
            v = cols[name][i]
            if isinstance(v, (np.integer, int)):
                row.append(str(int(v)))
            else:
                row.append(f"{v:.10g}")
        row.append(str(y[i]))
        buf.write(",".join(row) + "\n")
    return buf.getvalue()


# ------------------------------------------------------------------- heart
# 303 rows, 13 columns in the Cleveland style: mixed numeric/categorical,
# a few '?' missing markers, yes/no label. Exercises one-hot encoding and
# median imputation; not used by the acceptance runs.

def make_heart(rng):
    n = 303
    age = np.round(54 + 9 * rng.standard_normal(n)).astype(int)
    sex = rng.choice(["M", "F"], size=n, p=[0.68, 0.32])
    cp = rng.choice([1, 2, 3, 4], size=n, p=[0.08, 0.16, 0.28, 0.48])
    trestbps = np.round(131 + 17 * rng.standard_normal(n)).astype(int)
    chol = np.round(246 + 51 * rng.standard_normal(n)).astype(int)
    fbs = (rng.uniform(size=n) < 0.15).astype(int)
    restecg = rng.choice([0, 1, 2], size=n, p=[0.49, 0.02, 0.49])
    thalach = np.round(150 - 0.8 * (age - 54) + 20 * rng.standard_normal(n)).astype(int)
    exang = (rng.uniform(size=n) < 0.33).astype(int)
    oldpeak = np.clip(np.round(1.0 + 1.1 * rng.standard_normal(n), 1), 0, None)
    slope = rng.choice([1, 2, 3], size=n, p=[0.46, 0.46, 0.08])
    ca = rng.choice([0, 1, 2, 3], size=n, p=[0.58, 0.21, 0.13, 0.08]).astype(float)
    thal = rng.choice([3, 6, 7], size=n, p=[0.55, 0.06, 0.39]).astype(float)

    score = (0.04 * (age - 54) - 0.025 * (thalach - 150) + 0.9 * oldpeak
             + 0.8 * exang + 0.9 * ca + 0.55 * (cp == 4) + 0.5 * (thal == 7)
             + 0.35 * (sex == "M") - 1.9)
    p = 1.0 / (1.0 + np.exp(-score))
    y = np.where(rng.uniform(size=n) < p, "yes", "no")

    # Sprinkle the classic '?' markers.
    ca_txt = [f"{v:.0f}" for v in ca]
    thal_txt = [f"{v:.0f}" for v in thal]
    for i in rng.choice(n, size=4, replace=False):
        ca_txt[i] = "?"
    for i in rng.choice(n, size=2, replace=False):
        thal_txt[i] = "?"

    buf = io.StringIO()
    buf.write("age,sex,cp,trestbps,chol,fbs,restecg,thalach,exang,oldpeak,"
              "slope,ca,thal,disease\n")
    for i in range(n):
        buf.write(",".join([
            str(age[i]), sex[i], str(cp[i]), str(trestbps[i]), str(chol[i]),
            str(fbs[i]), str(restecg[i]), str(thalach[i]), str(exang[i]),
            f"{oldpeak[i]:.1f}", str(slope[i]), ca_txt[i], thal_txt[i],
            str(y[i]),
        ]) + "\n")
    return buf.getvalue()


CPP_TEMPLATE = """// Generated by data/generate.py -- do not edit by hand.
#include <string>
#include <vector>

#include "qibonn/data.hpp"
#include "qibonn/errors.hpp"

namespace qibonn {{

namespace {{

const char kDiabetesCsv[] = R"qcsv({diabetes})qcsv";

const char kHeartCsv[] = R"qcsv({heart})qcsv";

}}  // namespace

std::vector<std::string> bundled_names() {{ return {{"diabetes", "heart"}}; }}

Dataset load_bundled(const std::string& name) {{
  if (name == "diabetes") {{
    return load_csv_text(kDiabetesCsv, {{}}, "bundled:diabetes");
  }}
  if (name == "heart") {{
    LoadOptions opt;
    opt.categorical = {{"cp", "restecg", "slope", "thal"}};
    return load_csv_text(kHeartCsv, opt, "bundled:heart");
  }}
  throw IngestError("no bundled dataset named '" + name +
                    "' (have: diabetes, heart)");
}}

}}  // namespace qibonn
"""


def main():
    rng = np.random.default_rng(7)
    diabetes = make_diabetes(rng)
    heart = make_heart(rng)

    with open(os.path.join(HERE, "diabetes.csv"), "w") as f:
        f.write(diabetes)
    with open(os.path.join(HERE, "heart.csv"), "w") as f:
        f.write(heart)
    with open(os.path.join(ROOT, "core", "src", "bundled_data.cpp"), "w") as f:
        f.write(CPP_TEMPLATE.format(diabetes=diabetes, heart=heart))

    ypos = sum(1 for line in diabetes.splitlines()[1:] if line.endswith(",1"))
    print(f"diabetes: {len(diabetes.splitlines()) - 1} rows, {ypos} positive")
    hpos = sum(1 for line in heart.splitlines()[1:] if line.endswith(",yes"))
    print(f"heart: {len(heart.splitlines()) - 1} rows, {hpos} positive")


if __name__ == "__main__":
    main()
