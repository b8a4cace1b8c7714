"""Open questions as data: 2-resilience of K3 x P4, a product bound, and the
drawn Q5 candidate.
"""

from leakyforce.experiments import emit_report, run_conjecture_probe, run_qd_probe

print(emit_report(run_conjecture_probe("kn-pt-2resilience", {"n": 3, "t": 4}), "table"))
print(emit_report(run_conjecture_probe("product-bound", {"g": "complete:3", "h": "complete:3", "ell": 1}), "table"))
print(emit_report(run_qd_probe([3, 4, 5], mode="candidate"), "table"))
