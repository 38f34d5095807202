"""Prepare Ginibre-random density matrices of one, two, and three qubits
and report the fidelity of the circuit output against each target."""

from mixedprep import fidelity, ginibre_density, prepare_density

for d in (2, 4, 8):
    worst = 1.0
    for sample in range(10):
        target = ginibre_density(d, seed=1000 * d + sample)
        prepared = prepare_density(target)
        f = fidelity(prepared, target)
        worst = min(worst, f)
        print(f"d={d}  sample={sample}  fidelity={f:.15f}")
    print(f"d={d}: worst infidelity {1 - worst:.2e}\n")
