"""Exhaustive classical/quantum analysis of binary-input binary-output two-party games."""

from nlgames.classical import (
    JointStrategy,
    PlayerRule,
    StrategyGroup,
    classical_max,
    evaluate_strategy,
    group_of,
    strategies_winning_both,
)
from nlgames.game import (
    AnfPolynomial,
    GameTable,
    Partition,
    enumerate_games,
    format_anf,
    from_anf,
    has_inconsistent_pair,
    is_admissible,
    parse_anf,
    partition_of,
    to_anf,
    winners,
)
from nlgames.quantum import (
    AngleSet,
    analytic_family_max,
    coefficient_profile,
    joint_distribution,
    numeric_family_max,
    quantum_max,
    recover_optimal_angles,
    success_probability,
)

__version__ = "0.1.0"
