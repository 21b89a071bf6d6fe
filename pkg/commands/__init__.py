"""
⌨️ Commandes de la CLI
======================

Une fonction run_* par sous-commande; chacune reçoit les arguments analysés
et renvoie un code de sortie (0 vrai, 1 faux, 2 erreur d'utilisation).
"""

from .check_command import run_check
from .closure_command import run_closure
from .classify_command import run_classify
from .repr_command import run_repr
from .solve_command import run_solve
from .examples_command import run_examples_command
from .verify_theorems_command import run_verify_theorems

__all__ = [
    'run_check',
    'run_closure',
    'run_classify',
    'run_repr',
    'run_solve',
    'run_examples_command',
    'run_verify_theorems',
]
