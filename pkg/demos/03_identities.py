"""Checking identities from the registry and reading the reports.

Run with ``python3 demos/03_identities.py``.
"""
from skewdomino import REGISTRY, verify_all, verify_identity

# Each registry entry evaluates both sides of an identity independently.
print(verify_identity("eq1", {"n": 6}))
print(verify_identity("fnk_odd", {"k": 2, "n": 1}))
print(verify_identity("cor_gf", {"alpha": (2, 2), "order": 4}))

# Reports serialize to JSON with a fixed schema.
print(verify_identity("eq2", {"n": 6}).to_json())

# A whole sweep at half the default bounds.
reports = list(verify_all(bound_scale=0.5))
bad = [r for r in reports if not r.equal]
print(f"\n{len(reports)} points over {len(REGISTRY)} identities, {len(bad)} failures")
