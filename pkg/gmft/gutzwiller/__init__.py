from .state import GutzwillerState, OrderParameterField, compute_order_parameter, order_parameter, density, neighbour_sum
from .hamiltonian import build_local_hamiltonian, apply_local_hamiltonian, effective_mu, total_energy
from .solver import ground_state, target_atom_number, SelfConsistentSolver, ImaginaryTimeSolver, SOLVERS
from .checkpoint import save_state, load_state
