"""Verify the two-colour spider rewrite rules semantically.

Green spiders are defined on the Z basis, red spiders independently on the X
basis; each rule is checked as an exact proportionality of both sides.  The
mutation oracle then corrupts one spider per rule with an extra pi phase and
confirms the rule stops holding — evidence the checks have teeth.
"""

from compcs.zxrules import mutation_oracle, verify_all

print(f"{'rule':<14} {'cases':>5}  verdict")
for rec in verify_all():
    note = "  (reconstructed scalar rule)" if rec["reconstructed"] else ""
    print(f"{rec['id']:<14} {rec['cases']:>5}  "
          f"{'holds' if rec['holds'] else 'FAILS'}{note}")

print("\nmutation oracle (one injected pi phase per rule):")
for rec in mutation_oracle():
    print(f"  {rec['id']:<10} {'detected' if rec['detected'] else 'MISSED'}")
