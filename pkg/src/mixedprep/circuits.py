"""Gate and circuit data types.

A circuit is a flat, ordered list of gates acting on ``num_qubits`` wires.
Qubit 0 is the most significant bit of a basis-state index.  Gates are
plain frozen dataclasses so circuits can be compared, hashed into tests,
and serialized without ceremony.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import IndexOutOfRangeError, NotUnitaryError
from .linalg import DEFAULT_TOL, is_unitary


@dataclass(frozen=True)
class Ry:
    """Real rotation about Y: [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]."""

    target: int
    theta: float


@dataclass(frozen=True)
class Cnot:
    """Flip ``target`` when ``control`` is 1."""

    control: int
    target: int


@dataclass(frozen=True)
class MultiControlledRy:
    """Apply Ry(theta) to ``target`` when every control qubit matches its bit.

    ``controls`` is a tuple of ``(qubit, bit)`` pairs; ``bit`` is 0 or 1, so
    both closed and open controls are expressible.
    """

    controls: tuple[tuple[int, int], ...]
    target: int
    theta: float


class UnitaryBlock:
    """An arbitrary unitary applied to an ordered tuple of qubits.

    ``qubits[0]`` is the most significant bit of the block's own index
    space.  Equality compares qubits and the matrix entries exactly.
    """

    __slots__ = ("qubits", "matrix")

    def __init__(self, qubits, matrix):
        self.qubits = tuple(int(q) for q in qubits)
        self.matrix = np.asarray(matrix, dtype=complex)
        dim = 2 ** len(self.qubits)
        if self.matrix.shape != (dim, dim):
            raise IndexOutOfRangeError(
                f"unitary block on {len(self.qubits)} qubits needs a {dim}x{dim} "
                f"matrix, got {self.matrix.shape}"
            )

    def __eq__(self, other):
        if not isinstance(other, UnitaryBlock):
            return NotImplemented
        return self.qubits == other.qubits and np.array_equal(self.matrix, other.matrix)

    def __repr__(self):
        return f"UnitaryBlock(qubits={self.qubits}, dim={self.matrix.shape[0]})"


Gate = Union[Ry, Cnot, MultiControlledRy, UnitaryBlock]


@dataclass
class Circuit:
    num_qubits: int
    gates: list = field(default_factory=list)
    label: str = ""

    def __len__(self):
        return len(self.gates)


def gate_qubits(gate: Gate) -> tuple[int, ...]:
    """All qubit indices a gate touches, controls first."""
    if isinstance(gate, Ry):
        return (gate.target,)
    if isinstance(gate, Cnot):
        return (gate.control, gate.target)
    if isinstance(gate, MultiControlledRy):
        return tuple(q for q, _ in gate.controls) + (gate.target,)
    if isinstance(gate, UnitaryBlock):
        return gate.qubits
    raise TypeError(f"unknown gate type: {type(gate).__name__}")


def validate_circuit(circuit: Circuit, tol: float = DEFAULT_TOL) -> None:
    """Check wire indices, control-bit values, and unitarity of matrix blocks."""
    n = circuit.num_qubits
    if n < 1:
        raise IndexOutOfRangeError(f"circuit needs at least 1 qubit, got {n}")
    for pos, gate in enumerate(circuit.gates):
        qs = gate_qubits(gate)
        if len(set(qs)) != len(qs):
            raise IndexOutOfRangeError(
                f"gate {pos} ({type(gate).__name__}) reuses a qubit: {qs}"
            )
        for q in qs:
            if not 0 <= q < n:
                raise IndexOutOfRangeError(
                    f"gate {pos} ({type(gate).__name__}) touches qubit {q}, "
                    f"outside 0..{n - 1}"
                )
        if isinstance(gate, MultiControlledRy):
            for q, b in gate.controls:
                if b not in (0, 1):
                    raise IndexOutOfRangeError(
                        f"gate {pos} control on qubit {q} has bit {b}, expected 0 or 1"
                    )
        if isinstance(gate, UnitaryBlock) and not is_unitary(gate.matrix, tol):
            raise NotUnitaryError(
                f"gate {pos} matrix block is not unitary within tol={tol:g}"
            )
