"""The real-amplitude loader on its own: turn a probability-like vector
into a rotation cascade."""

import numpy as np

from mixedprep import compile_real_state, run

# three qubits, a lumpy distribution
amps = np.sqrt(np.array([0.30, 0.05, 0.20, 0.05, 0.10, 0.10, 0.15, 0.05]))
circuit = compile_real_state(amps)

print(f"{len(circuit.gates)} gates for 8 amplitudes:")
for g in circuit.gates:
    print("  ", g)

state = run(circuit)
print("\nrecovered probabilities:", np.round(np.abs(state) ** 2, 6))
print("max amplitude error:", np.abs(state.real - amps).max())
