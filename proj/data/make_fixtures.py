"""Regenerates the JSON fixtures in this directory (numpy + scipy, seeded)."""

import json
import pathlib

import numpy as np
from scipy.linalg import expm

HERE = pathlib.Path(__file__).parent
rng = np.random.default_rng(20240601)


def cx(z):
    z = complex(z)
    return z.real if z.imag == 0.0 else [z.real, z.imag]


def mat(m):
    return [[cx(x) for x in row] for row in np.asarray(m)]


def vec(v):
    return [cx(x) for x in np.asarray(v)]


def dump(name, obj):
    (HERE / name).write_text(json.dumps(obj, indent=2) + "\n")


def skew(n, norm):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    x = (a - a.conj().T) / 2
    return x * (norm / np.linalg.norm(x, 2))


def unitary(n):
    q, r = np.linalg.qr(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))
    return q @ np.diag(np.diag(r) / abs(np.diag(r)))


# groups and modules
dump("z2.json", {"order": 2, "mul": [[0, 1], [1, 0]], "names": ["e", "s"]})
dump("z3.json", {"order": 3, "mul": [[(a + b) % 3 for b in range(3)] for a in range(3)], "names": ["e", "s", "s2"]})
dump("sign.json", {"dim": 1, "field": "real", "action": {"s": [[-1]]}})
c, s = np.cos(2 * np.pi / 3), np.sin(2 * np.pi / 3)
rot = np.array([[c, -s], [s, c]])
dump("z3_rotation.json", {"dim": 2, "field": "real", "action": {"s": mat(rot), "s2": mat(rot @ rot)}})

# a 2-cocycle on the rotation module: the coboundary of a random 1-cochain
z3_rho = [np.eye(2), rot, rot @ rot]
f = {g: rng.normal(size=2) for g in range(3)}
names = ["e", "s", "s2"]
a2 = {}
for g in range(3):
    for h in range(3):
        a2[f"{names[g]},{names[h]}"] = vec(z3_rho[g] @ f[h] - f[(g + h) % 3] + f[g])
dump("z3_rotation_cocycle2.json", {"group": "z3.json", "module": "z3_rotation.json", "degree": 2, "values": a2})

# Z/3 -> U(2) with trivial action, and a conjugated neighbour
w = np.exp(2j * np.pi / 3)
v = unitary(2)
u = [v @ np.diag([w ** g, w ** (2 * g)]) @ v.conj().T for g in range(3)]
target = {"kind": "unitary", "n": 2}
dump("z3_u2_base.json", {"group": "z3.json", "target": target,
                         "values": {names[g]: mat(u[g]) for g in range(3)}})
k = expm(skew(2, 0.08))
moved = [np.linalg.inv(k) @ x @ k for x in u]
dump("z3_u2_perturbed.json", {"group": "z3.json", "target": target,
                              "values": {names[g]: mat(moved[g]) for g in range(3)}})

# Pauli projective representation, a genuine representation, and a
# neighbour of the Pauli cocycle moved by conjugation and central phases
sx = np.array([[0, 1], [1, 0]], dtype=complex)
sz = np.array([[1, 0], [0, -1]], dtype=complex)
pauli = {"x": sx, "z": sz, "xz": sx @ sz}
central = {"kind": "unit-scalars"}
dump("pauli.json", {"group": "v4", "target": target, "central": central, "normalized": True,
                    "values": {g: mat(m) for g, m in pauli.items()}})
genuine = {"x": np.diag([1, -1]), "z": np.diag([-1, 1]), "xz": -np.eye(2)}
dump("v4_genuine.json", {"group": "v4", "target": target, "central": central, "normalized": True,
                         "values": {g: mat(m) for g, m in genuine.items()}})
k = expm(skew(2, 0.08))
phases = {g: np.exp(1j * rng.uniform(-0.1, 0.1)) for g in pauli}
near = {g: np.linalg.inv(k) @ m @ k * phases[g] for g, m in pauli.items()}
dump("pauli_perturbed.json", {"group": "v4", "target": target, "central": central,
                              "values": {"e": mat(np.eye(2)), **{g: mat(m) for g, m in near.items()}}})

# Hochschild: bimodules and an inner-derivation cocycle on M2
dump("m2_regular.json", {"algebra": {"builtin": "matrix", "size": 2}, "kind": "regular"})
dump("dual_numbers_regular.json", {"algebra": {"builtin": "dual-numbers"}, "kind": "regular"})
dump("c3z_regular.json", {"algebra": {"group_algebra_of": "z3"}, "kind": "regular"})
x = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
units = [np.eye(2)[:, [i]] @ np.eye(2)[[j], :] for i in range(2) for j in range(2)]
dump("m2_inner_derivation.json", {"bimodule": "m2_regular.json", "degree": 1,
                                  "values": {str(i): vec((x @ e - e @ x).reshape(-1)) for i, e in enumerate(units)}})

# morphisms C^3 -> M4 by orthogonal projections, a nearby conjugate, and a far pair
c3 = {"builtin": "diagonal", "size": 3}
m4 = {"builtin": "matrix", "size": 4}
projs = [np.diag([1, 0, 0, 0]), np.diag([0, 1, 0, 0]), np.diag([0, 0, 1, 1])]
dump("c3_m4_phi.json", {"domain": c3, "codomain": m4, "images": [mat(p) for p in projs], "cstar": True})
k = expm(skew(4, 0.15))
dump("c3_m4_psi.json", {"domain": c3, "codomain": m4,
                        "images": [mat(k @ p @ k.conj().T) for p in projs], "cstar": True})
c2 = {"builtin": "diagonal", "size": 2}
m2 = {"builtin": "matrix", "size": 2}
e11, e22 = np.diag([1, 0]), np.diag([0, 1])
dump("c2_m2_phi.json", {"domain": c2, "codomain": m2, "images": [mat(e11), mat(e22)], "cstar": True})
dump("c2_m2_swap.json", {"domain": c2, "codomain": m2, "images": [mat(e22), mat(e11)], "cstar": True})

# tangent directions at c3_m4_phi: an inner one and a random one
x = skew(4, 1.0)
dump("c3_m4_inner_direction.json", {"images": [mat(x @ p - p @ x) for p in projs]})
dump("c3_m4_random_direction.json",
     {"images": [mat(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))) for _ in projs]})
