"""Hand-worked instances with known answers, exported as JSON test fixtures.

Each entry records its inputs and the expected outcome computed by hand.  The
test suite recomputes every entry from the inputs alone.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import List

EXAMPLES: List[dict] = [
    {
        "name": "fundamental_2_-3_21211",
        "kind": "fundamental",
        "alpha": "2", "beta": "-3", "word": "21211", "lambda": "0",
        "expected": {"p1": {"roots": ["-4", "-3"]}, "p2": {"roots": ["-2", "-1", "0"]}},
    },
    {
        "name": "fundamental_5_-3_11221222",
        "kind": "fundamental",
        "alpha": "5", "beta": "-3", "word": "11221222", "lambda": "0",
        "expected": {"p1": {"roots": ["0", "3", "4", "6", "7"]}, "p2": {"roots": ["5", "9", "10"]}},
    },
    {
        "name": "fundamental_2_-3_F",
        "kind": "fundamental",
        "alpha": "2", "beta": "-3", "word": "11122", "lambda": "0",
        "expected": {"p1": {"roots": ["0", "3"]}, "p2": {"roots": ["2", "4", "6"]}},
    },
    {
        "name": "fundamental_2_-3_G",
        "kind": "fundamental",
        "alpha": "2", "beta": "-3", "word": "12211", "lambda": "3",
        "expected": {"p1": {"roots": ["-1", "2"]}, "p2": {"roots": ["1", "3", "5"]}},
    },
    {
        "name": "fundamental_2_-3_H",
        "kind": "fundamental",
        "alpha": "2", "beta": "-3", "word": "12112", "lambda": "0",
        "expected": {"p1": {"roots": ["-1", "0"]}, "p2": {"roots": ["1", "2", "3"]}},
    },
    {
        "name": "fundamental_2_-3_K",
        "kind": "fundamental",
        "alpha": "2", "beta": "-3", "word": "12112", "lambda": "3",
        "expected": {"p1": {"roots": ["2", "3"]}, "p2": {"roots": ["4", "5", "6"]}},
    },
    {
        "name": "dyck_labels_2_-3",
        "kind": "dyck_label",
        "alpha": "2", "beta": "-3",
        "cases": [
            {"word": "11122", "lambda": "0", "dyck": "22111", "dyck_lambda": "6"},
            {"word": "12211", "lambda": "3", "dyck": "22111", "dyck_lambda": "5"},
            {"word": "12112", "lambda": "0", "dyck": "21211", "dyck_lambda": "3"},
            {"word": "12112", "lambda": "3", "dyck": "21211", "dyck_lambda": "6"},
        ],
    },
    {
        "name": "ordered_factorization_FG",
        "kind": "factor",
        "alpha": "2", "beta": "-3",
        "input": {
            "p1": {"roots": ["0", "3", "-1", "2"]},
            "p2": {"roots": ["2", "4", "6", "1", "3", "5"]},
        },
        "expected": {
            "cosets": [
                {
                    "representative": "6",
                    "factors": [{"word": "21211", "lambda": "6"}, {"word": "21211", "lambda": "3"}],
                }
            ]
        },
    },
    {
        "name": "multiquiver_A2",
        "kind": "multiquiver",
        "alpha": "-1", "beta": "1",
        "expected_solution": {"p1": {"roots": ["1"]}, "p2": {"roots": ["0"]}},
        "expected_factors": [{"word": "21", "lambda": "0"}],
    },
    {
        "name": "multiquiver_C2",
        "kind": "multiquiver",
        "alpha": "-1", "beta": "2",
        "expected_solution": {"p1": {"roots": ["1"]}, "p2": {"roots": ["-1", "0"]}},
        "expected_factors": [{"word": "211", "lambda": "-1"}],
    },
    {
        "name": "multiquiver_-4_6",
        "kind": "multiquiver",
        "alpha": "-4", "beta": "6",
        "expected_solution": {
            "p1": {"roots": ["1", "2", "3", "4"]},
            "p2": {"roots": ["-5", "-4", "-3", "-2", "-1", "0"]},
        },
        "expected_factors": [{"word": "21211", "lambda": "-5"}, {"word": "21211", "lambda": "-4"}],
    },
    {
        "name": "zero_area_-4_6",
        "kind": "zero_area",
        "m": 3, "n": 2,
        "expected_word": "21211",
        "expected_fundamental": {"alpha": "-4", "beta": "6", "p1": {"roots": ["6", "8"]}, "p2": {"roots": ["0", "2", "4"]}},
    },
    {
        "name": "partial_order_-5_3",
        "kind": "partial_order",
        "alpha": "-5", "beta": "3",
        "paths": [
            {"word": "22212211", "lambda": "-10", "base_at_0": [2, 0]},
            {"word": "22222111", "lambda": "-17", "base_at_0": [1, -4]},
            {"word": "22221211", "lambda": "-16", "base_at_0": [2, -2]},
        ],
        "origins": ["0", "-17"],
        # leq[i][j] is whether path i ≼ path j
        "expected_leq": [[True, False, False], [False, True, False], [True, False, True]],
    },
    {
        "name": "dyck_figure_4_5",
        "kind": "dyck_check",
        "cases": [{"word": "222112121", "dyck": True}, {"word": "122112212", "dyck": False}],
    },
    {
        "name": "derive_mn",
        "kind": "derive_mn",
        "cases": [
            {"alpha": "2", "beta": "-3", "mn": [3, 2]},
            {"alpha": "5", "beta": "-3", "mn": [3, 5]},
            {"alpha": "-5", "beta": "3", "mn": [3, 5]},
            {"alpha": "1", "beta": "1", "mn": None},
        ],
    },
    {
        "name": "degenerate",
        "kind": "degenerate",
        "cases": [
            {"alpha": "0", "beta": "0", "answer": "R1 x R1"},
            {"alpha": "0", "beta": "5", "answer": "{1} x R1"},
            {"alpha": "5", "beta": "0", "answer": "R1 x {1}"},
        ],
    },
]


def dump(directory: Path) -> List[Path]:
    """Write one pretty-printed JSON file per example; returns the paths written."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for ex in EXAMPLES:
        path = directory / f"{ex['name']}.json"
        path.write_text(json.dumps(ex, indent=2, sort_keys=True) + "\n")
        written.append(path)
    return written
