"""The ceiling imposed by stages that cannot be accelerated.

If triage review must stay human (factor pinned to 1), no amount of
machine speedup elsewhere pushes throughput past the slowest human stage.
The witness multiplier shows the ceiling is exactly reachable.
"""

from pipecalc import (
    AuthoritySpec,
    Pipeline,
    ceiling,
    generalized_ceiling,
    perturbed_throughput,
    tightness_witness,
)

soc = Pipeline(
    ("detect", "triage", "investigate", "respond"),
    {"detect": 120, "triage": 30, "investigate": 8, "respond": 15},
)

human = AuthoritySpec({"triage", "respond"})
cap = ceiling(soc, human)
print(f"human stages {sorted(human.human_stages)} -> ceiling {cap}")

witness = tightness_witness(soc, human)
print("witness factors:", dict(witness.factor))
print("witness throughput:", perturbed_throughput(soc, witness))

# partial AI assist on the human stages raises the ceiling proportionally
assisted = AuthoritySpec(
    {"triage", "respond"}, {"triage": 2, "respond": "3/2"}
)
print("ceiling with assist bounds (bound only):", generalized_ceiling(soc, assisted))
