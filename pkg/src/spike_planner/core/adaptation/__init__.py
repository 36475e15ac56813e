from .ambiguity import ambiguity, ambiguity_table, expected_active
from .rules import adta_factor, apply_adta, apply_stdta, apply_target_rule, spike_gap, stdta_eligible

__all__ = [
    'adta_factor', 'ambiguity', 'ambiguity_table', 'apply_adta', 'apply_stdta', 'apply_target_rule',
    'expected_active', 'spike_gap', 'stdta_eligible',
]
