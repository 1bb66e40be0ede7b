"""The nine study datasets and the values printed for them.

Rating matrices are integers on the 1-9 scale. Printed values are kept as
strings so tolerance checks can compare exact decimals.
"""

RISK_MATRIX = (
    ('RELY', (1, 3, 7, 9, 7, 9, 3, 5, 5, 5, 3, 1, 3, 9, 5)),
    ('DURN', (5, 1, 3, 5, 5, 3, 7, 5, 3, 5, 9, 3, 3, 3, 9)),
    ('CPLX', (9, 5, 1, 9, 9, 9, 7, 9, 5, 7, 5, 7, 3, 9, 5)),
    ('CPIS', (3, 3, 5, 1, 1, 3, 3, 5, 3, 1, 3, 5, 3, 7, 1)),
    ('CADP', (9, 1, 1, 1, 1, 1, 3, 3, 5, 5, 3, 3, 1, 7, 1)),
    ('SCAP', (5, 7, 5, 3, 1, 1, 7, 7, 3, 1, 5, 7, 1, 9, 1)),
    ('WSZE', (1, 9, 7, 1, 1, 3, 1, 9, 3, 3, 5, 1, 1, 3, 1)),
    ('WSKL', (7, 7, 5, 5, 1, 5, 3, 1, 5, 3, 7, 1, 1, 9, 3)),
    ('SEXP', (1, 1, 3, 1, 1, 5, 3, 7, 1, 1, 1, 3, 1, 3, 1)),
    ('UMTG', (7, 5, 5, 3, 3, 9, 3, 7, 3, 1, 3, 5, 3, 9, 7)),
    ('SCED', (1, 5, 7, 1, 1, 5, 9, 9, 3, 5, 1, 1, 5, 7, 3)),
    ('PMEX', (3, 1, 1, 3, 1, 7, 3, 5, 7, 5, 3, 1, 7, 1, 1)),
    ('PDTH', (1, 1, 7, 3, 1, 5, 3, 5, 1, 1, 1, 3, 1, 1, 1)),
    ('RISK', (5, 7, 9, 7, 3, 7, 3, 9, 5, 9, 3, 3, 3, 1, 5)),
    ('RVOL', (5, 1, 3, 1, 7, 3, 1, 1, 5, 1, 5, 3, 5, 7, 1)),
)
CUSTOMER_MATRIX = (
    ('ENG', (1, 5, 2, 5, 7)),
    ('PIS', (5, 1, 6, 3, 3)),
    ('RMG', (4, 4, 1, 1, 1)),
    ('STF', (6, 8, 1, 1, 8)),
    ('SRT', (3, 1, 8, 8, 1)),
)
ORGANIZATION_MATRIX = (
    ('BPC', (1, 4, 2, 5, 1, 2, 5)),
    ('BPN', (5, 1, 6, 7, 3, 5, 8)),
    ('EXS', (4, 4, 1, 1, 5, 3, 1)),
    ('MSN', (6, 8, 1, 1, 5, 1, 3)),
    ('SPN', (3, 1, 8, 8, 1, 6, 4)),
    ('STR', (5, 6, 6, 7, 3, 1, 9)),
    ('VSN', (4, 4, 3, 1, 5, 4, 1)),
)
POLICY_MATRIX = (
    ('AUL', (1, 3, 1, 7, 2, 3, 6)),
    ('BCP', (7, 1, 7, 8, 2, 3, 7)),
    ('DSP', (4, 1, 1, 3, 5, 4, 2)),
    ('PAT', (1, 7, 3, 1, 3, 5, 4)),
    ('PPY', (8, 1, 7, 7, 1, 8, 7)),
    ('PSD', (5, 5, 6, 6, 1, 1, 8)),
    ('RRN', (3, 4, 8, 8, 8, 1, 1)),
)
PROCESS_MATRIX = (
    ('AUD', (1, 4, 6, 9, 3, 2, 7)),
    ('CBP', (9, 1, 7, 1, 3, 3, 6)),
    ('CRP', (8, 2, 1, 4, 2, 4, 3)),
    ('FRC', (4, 5, 1, 1, 5, 5, 5)),
    ('NGP', (4, 2, 5, 6, 1, 7, 8)),
    ('POG', (1, 6, 7, 6, 9, 1, 1)),
    ('SPL', (7, 3, 7, 5, 1, 2, 1)),
)
STAFF_MATRIX = (
    ('CRT', (1, 3, 7, 5, 1, 2, 6, 3, 7)),
    ('CTR', (4, 1, 5, 6, 8, 7, 8, 5, 1)),
    ('CEG', (8, 2, 1, 4, 2, 4, 3, 1, 9)),
    ('EEG', (4, 5, 1, 1, 5, 5, 5, 4, 5)),
    ('JQF', (5, 5, 3, 1, 1, 8, 4, 7, 6)),
    ('MGP', (1, 6, 7, 6, 9, 1, 1, 7, 2)),
    ('PFO', (9, 9, 7, 1, 3, 3, 1, 6, 2)),
    ('PRT', (1, 4, 6, 9, 3, 2, 7, 1, 3)),
    ('TRP', (4, 3, 6, 7, 8, 3, 6, 4, 1)),
)
TOOLS_MATRIX = (
    ('CWA', (1, 7, 8, 4, 7, 3, 7, 1, 6, 7, 7, 3, 7, 5)),
    ('CSS', (6, 1, 9, 1, 4, 2, 5, 9, 9, 7, 4, 2, 5, 6)),
    ('CMS', (1, 3, 1, 6, 8, 2, 5, 1, 4, 6, 8, 2, 5, 4)),
    ('CTL', (9, 3, 2, 1, 4, 5, 1, 4, 3, 6, 4, 5, 1, 2)),
    ('RFX', (7, 3, 7, 5, 1, 2, 9, 9, 1, 2, 5, 5, 3, 1)),
    ('EXW', (4, 2, 5, 6, 8, 1, 3, 3, 6, 5, 1, 6, 7, 6)),
    ('PCD', (8, 2, 5, 4, 2, 4, 1, 2, 7, 2, 2, 5, 4, 2)),
    ('PPO', (4, 5, 1, 2, 5, 5, 3, 1, 5, 7, 5, 1, 2, 5)),
    ('RQS', (5, 5, 3, 1, 7, 8, 9, 3, 1, 7, 4, 5, 3, 2)),
    ('RVA', (4, 5, 1, 2, 5, 5, 5, 4, 5, 1, 4, 3, 1, 1)),
    ('RFT', (5, 5, 3, 1, 7, 8, 4, 7, 6, 6, 1, 1, 9, 8)),
    ('TPR', (8, 2, 5, 4, 2, 4, 3, 3, 1, 2, 5, 1, 5, 7)),
    ('VPS', (2, 5, 5, 5, 4, 6, 9, 2, 3, 1, 7, 8, 1, 9)),
    ('VRM', (3, 1, 8, 8, 3, 5, 1, 3, 3, 6, 8, 2, 5, 1)),
)
VENDORS_MATRIX = (
    ('AVL', (1, 5, 4, 2, 4, 3)),
    ('MMS', (5, 1, 2, 5, 5, 5)),
    ('VCN', (5, 3, 1, 7, 8, 4)),
    ('VQN', (6, 7, 6, 1, 9, 1)),
    ('VRN', (9, 7, 1, 3, 1, 6)),
    ('VRG', (4, 6, 9, 3, 2, 1)),
)


# Weights and fuzzy scores as printed in the per-dataset comparison tables.
RISK_PRINTED = {
    "ahp": "0.085 0.083 0.114 0.051 0.05 0.069 0.052 0.069 0.034 0.081 0.068 0.057 0.038 0.09 0.058",
    "fuzzy": "0.33 0.429 0.33 0.33 0.11 0.11 0.11 0.11 0.2 0.6 0.33 0.143 0.2 0.429 0.11",
}
CUSTOMER_PRINTED = {"ahp": "0.211 0.193 0.116 0.25 0.23", "fuzzy": "0.5 0.38 0.12 0.12 0.33"}
ORGANIZATION_PRINTED = {
    "ahp": "0.102 0.184 0.106 0.133 0.164 0.188 0.123",
    "fuzzy": "0.33 0.83 0.33 0.14 0.33 0.5 0.33",
}
POLICY_PRINTED = {
    "ahp": "0.108 0.159 0.105 0.131 0.182 0.149 0.166",
    "fuzzy": "0.25 0.6 0.14 0.14 0.5 0.12 0.12",
}
PROCESS_PRINTED = {
    "ahp": "0.156 0.141 0.118 0.139 0.162 0.162 0.122",
    "fuzzy": "0.44 0.2 0.29 0.25 0.67 0.5 0.12",
}
STAFF_PRINTED = {
    "ahp": "0.1 0.128 0.101 0.102 0.118 0.113 0.118 0.101 0.119",
    "fuzzy": "0.2 0.33 0.17 0.25 0.2 0.33 0.2 0.29 0.57",
}
TOOLS_PRINTED = {
    "ahp": "0.088 0.083 0.067 0.06 0.074 0.077 0.061 0.061 0.075 0.056 0.086 0.062 0.082 0.069",
    "fuzzy": "0.25 0.33 0.12 0.2 0.14 0.12 0.22 0.33 0.33 0.17 0.2 0.2 0.2 0.17",
}
VENDORS_PRINTED = {
    "ahp": "0.127 0.158 0.187 0.185 0.177 0.166",
    "fuzzy": "0.33 0.67 0.44 0.33 0.12 0.33",
}

# (nMax, CI, RI, CR) from each rating-table caption.
CAPTIONS = {
    "Risk": ("61.72", "3.34", "1.72", "1.94"),
    "Customer": ("18.86", "3.47", "1.19", "2.92"),
    "Organization": ("26.58", "3.26", "1.41", "2.31"),
    "Policy": ("28.88", "3.65", "1.41", "2.58"),
    "Process": ("28.57", "3.59", "1.41", "2.54"),
    "Staff": ("38.62", "3.70", "1.54", "2.40"),
    "Tools": ("59.43", "3.49", "1.70", "2.06"),
    "Vendors": ("25.03", "3.81", "1.32", "2.89"),
}

# Winning AHP weight and fuzzy score per dataset, in printed order.
DECISIONS = (
    ("Customer", "0.25", "0.5"),
    ("Organization", "0.188", "0.83"),
    ("Policy", "0.182", "0.6"),
    ("Process", "0.162", "0.67"),
    ("Staff", "0.128", "0.57"),
    ("Tools", "0.088", "0.33"),
    ("Vendors", "0.187", "0.67"),
)
DECISION_SERIES_NAME = "Few decision ratings"

# Observation counts per series, columns:
# BothIncrease, AhpUpFuzzyDown, AhpDownFuzzyUp, BothDecrease, FuzzyUnchanged,
# AhpUnchanged. Blank and crossed-out cells are zero.
TREND_ROWS = {
    "Risk": (2, 2, 3, 3, 4, 0),
    "Customer": (0, 0, 1, 2, 1, 0),
    "Organization": (3, 1, 0, 2, 0, 0),
    "Policy": (2, 0, 0, 2, 2, 0),
    "Process": (1, 1, 1, 2, 0, 1),
    "Staff": (3, 2, 2, 1, 0, 0),
    "Tools": (1, 2, 3, 3, 3, 1),
    "Vendors": (1, 1, 1, 2, 0, 0),
    DECISION_SERIES_NAME: (1, 0, 2, 3, 0, 0),
}
TREND_TOTALS = {
    "Risk": 14, "Customer": 4, "Organization": 6, "Policy": 6, "Process": 6,
    "Staff": 8, "Tools": 13, "Vendors": 5, DECISION_SERIES_NAME: 6,
}

# Pooled percentages, same column order as TREND_ROWS.
POOLED_PERCENT = ("20.59", "13.24", "19.12", "29.41", "14.71", "2.94")
# Same direction, reverse swing, one unchanged.
AGGREGATE_PERCENT = ("50", "32.36", "17.64")

# Printed spellings that differ from the canonical matrix labels.
LABEL_ALIASES = {"SRF": "SRT", "MPG": "MGP"}
