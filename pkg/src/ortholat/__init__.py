"""Finite ortholattices: Sasaki maps, Galois adjoints, the distributive-ideal
completion with its Heyting hook, and dynamic hooks for measurement
environments."""
__version__ = "0.1.0"

from ._kernels import BACKEND
from .adjunction import (MonotoneMap, compose, identity_map, join_preservation, left_adjoint,
                         make_map, meet_preservation, preservation_profile, right_adjoint,
                         verify_adjunction)
from .completion import (CompletionLattice, StateModel, cartan, closure_completion, consequence,
                         default_state_model, disjunctivity_report, enumerate_completion,
                         external_hook, heyting_hook, is_distributive_join, load_state_model,
                         operational_resolution, semantic_consequence)
from .dynamics import (Environment, causal_relations, dyn_hook_backward, dyn_hook_forward, freeze,
                       lift_env, make_environment, mu_dyn_hook, propagate_states,
                       sasaki_environment, tensor_backward, tensor_forward, ternary_hook)
from .errors import OrtholatError
from .ortho import (OrthoLattice, attach_ortho, generate, orthomodularity_report, sasaki_hook,
                    sasaki_project)
from .poset import Ideal, Lattice, Verdict, build_lattice, down, principal

__all__ = [name for name in dir() if not name.startswith("_")]
