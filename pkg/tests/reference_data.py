"""Hand transcriptions of published diagrams, used as fixed expectations.

Words are LS codes; weights are rho-shifted.  Nothing here is computed.
"""

from __future__ import annotations

# Regular Hasse diagram of rank 4, row by row as drawn: (word, diagram rows, weight).
REGULAR_RANK4_LAYOUT = [
    [("0000", (), "[4,3,2,1]"), ("0001", (1,), "[4,3,2,-1]")],
    [("0010", (1, 1), "[4,3,1,-2]"), ("0011", (2, 1), "[4,3,-1,-2]")],
    [("0100", (1, 1, 1), "[4,2,1,-3]"), ("0101", (1, 2, 1), "[4,2,-1,-3]")],
    [
        ("1000", (1, 1, 1, 1), "[3,2,1,-4]"),
        ("1001", (1, 1, 2, 1), "[3,2,-1,-4]"),
        ("0110", (2, 2, 1), "[4,1,-2,-3]"),
        ("0111", (3, 2, 1), "[4,-1,-2,-3]"),
    ],
    [("1010", (1, 2, 2, 1), "[3,1,-2,-4]"), ("1011", (1, 3, 2, 1), "[3,-1,-2,-4]")],
    [("1100", (2, 2, 2, 1), "[2,1,-3,-4]"), ("1101", (2, 3, 2, 1), "[2,-1,-3,-4]")],
    [("1110", (3, 3, 2, 1), "[1,-2,-3,-4]"), ("1111", (4, 3, 2, 1), "[-1,-2,-3,-4]")],
]

REGULAR_RANK4_ARROWS = {
    ("0000", "0001"),
    ("0001", "0010"),
    ("0010", "0011"),
    ("0010", "0100"),
    ("0011", "0101"),
    ("0100", "0101"),
    ("0100", "1000"),
    ("0101", "0110"),
    ("0101", "1001"),
    ("1000", "1001"),
    ("1001", "1010"),
    ("0110", "0111"),
    ("0110", "1010"),
    ("0111", "1011"),
    ("1010", "1011"),
    ("1010", "1100"),
    ("1011", "1101"),
    ("1100", "1101"),
    ("1101", "1110"),
    ("1110", "1111"),
}

# Arrow labels that are printed on the drawn diagram-panel.
REGULAR_RANK4_LABELS = {
    ("0000", "0001"): "b4",
    ("0001", "0010"): "c34",
    ("0010", "0011"): "b3",
    ("0010", "0100"): "c24",
    ("0100", "1000"): "c14",
    ("0101", "0110"): "c23",
    ("0110", "0111"): "b2",
    ("1011", "1101"): "c13",
    ("1101", "1110"): "c12",
    ("1110", "1111"): "b1",
}

ORBIT_3211 = {
    "0001": "[3,2,1,-1]",
    "0101": "[3,1,-1,-2]",
    "1001": "[2,1,-1,-3]",
    "1101": "[1,-1,-2,-3]",
}
ORBIT_3211_ARROWS = {("[3,1,-1,-2]", "[2,1,-1,-3]")}

ORBIT_3210 = {
    "0000": "[3,2,1,0]",
    "0010": "[3,2,0,-1]",
    "0100": "[3,1,0,-2]",
    "1000": "[2,1,0,-3]",
    "0110": "[3,0,-1,-2]",
    "1010": "[2,0,-1,-3]",
    "1100": "[1,0,-2,-3]",
    "1110": "[0,-1,-2,-3]",
}
ORBIT_3210_ARROWS = {
    ("[3,2,0,-1]", "[3,1,0,-2]"),
    ("[3,1,0,-2]", "[2,1,0,-3]"),
    ("[3,0,-1,-2]", "[2,0,-1,-3]"),
    ("[2,0,-1,-3]", "[1,0,-2,-3]"),
}

# E1 grids, top row first; "0" marks an empty cell.  Arrows join (p, q) -> (p + 1, q).
PAGE_3211_ROWS = [
    ["0", "[3,2,1,-1]", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "[3,1,-1,-2]", "[2,1,-1,-3]", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "[1,-1,-2,-3]"],
]
PAGE_3211_ARROWS = {((3, 1), (4, 1))}
PAGE_3211_NONSTANDARD = {("[3,2,1,-1]", "[3,1,-1,-2]"), ("[2,1,-1,-3]", "[1,-1,-2,-3]")}

PAGE_3210_ROWS = [
    ["[3,2,1,0]", "0", "0", "0", "0", "0", "0"],
    ["0", "[3,2,0,-1]", "[3,1,0,-2]", "[2,1,0,-3]", "0", "0", "0"],
    ["0", "0", "0", "[3,0,-1,-2]", "[2,0,-1,-3]", "[1,0,-2,-3]", "0"],
    ["0", "0", "0", "0", "0", "0", "[0,-1,-2,-3]"],
]
PAGE_3210_ARROWS = {((1, 2), (2, 2)), ((2, 2), (3, 2)), ((3, 1), (4, 1)), ((4, 1), (5, 1))}
PAGE_3210_NONSTANDARD = {("[3,2,1,0]", "[3,0,-1,-2]"), ("[2,1,0,-3]", "[0,-1,-2,-3]")}

# Rank-5 degree diagrams, keyed by k, over the tail words d_1..d_4.
# degrees lists surviving tails only; everything else has no direct image.
DEGREE_DIAGRAMS_RANK5 = {
    1: {
        "degrees": {t: 0 for t in ["1000", "1001", "1010", "1011", "1100", "1101", "1110", "1111"]},
        "solid": {
            ("1000", "1001"),
            ("1001", "1010"),
            ("1010", "1011"),
            ("1010", "1100"),
            ("1011", "1101"),
            ("1100", "1101"),
            ("1101", "1110"),
            ("1110", "1111"),
        },
        "dashed": set(),
    },
    2: {
        "degrees": {
            "0100": 1,
            "0101": 1,
            "0110": 1,
            "0111": 1,
            "1100": 0,
            "1101": 0,
            "1110": 0,
            "1111": 0,
        },
        "solid": {
            ("0100", "0101"),
            ("0101", "0110"),
            ("0110", "0111"),
            ("1100", "1101"),
            ("1101", "1110"),
            ("1110", "1111"),
        },
        "dashed": {("0110", "1100"), ("0111", "1101")},
    },
    3: {
        "degrees": {
            "0010": 2,
            "0011": 2,
            "0110": 1,
            "0111": 1,
            "1010": 1,
            "1011": 1,
            "1110": 0,
            "1111": 0,
        },
        "solid": {
            ("0010", "0011"),
            ("0110", "0111"),
            ("0110", "1010"),
            ("0111", "1011"),
            ("1010", "1011"),
            ("1110", "1111"),
        },
        "dashed": {("0011", "0110"), ("1011", "1110")},
    },
    4: {
        "degrees": {
            "0001": 3,
            "0011": 2,
            "0101": 2,
            "1001": 2,
            "0111": 1,
            "1011": 1,
            "1101": 1,
            "1111": 0,
        },
        "solid": {("0011", "0101"), ("0101", "1001"), ("0111", "1011"), ("1011", "1101")},
        "dashed": {("0001", "0011"), ("0101", "0111"), ("1001", "1011"), ("1101", "1111")},
    },
    5: {
        "degrees": {f"{i:04b}": f"{i:04b}".count("0") for i in range(16)},
        "solid": {
            ("0001", "0010"),
            ("0010", "0100"),
            ("0011", "0101"),
            ("0100", "1000"),
            ("0101", "0110"),
            ("0101", "1001"),
            ("0110", "1010"),
            ("0111", "1011"),
            ("1001", "1010"),
            ("1010", "1100"),
            ("1011", "1101"),
            ("1101", "1110"),
        },
        "dashed": {("0000", "0011"), ("0100", "0111"), ("1000", "1011"), ("1100", "1111")},
    },
}

OPERATOR_D_TEXT = "4*db1*db2*db3 - db1*dc23^2 - db2*dc13^2 - db3*dc12^2 + dc12*dc13*dc23"
