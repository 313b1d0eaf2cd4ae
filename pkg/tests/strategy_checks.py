"""Enumeration predicates for the structural results about deterministic strategies.

Each ``check_*`` returns a list of counterexamples (empty when the claim holds).
Everything here is recomputed from raw mask bits so it does not lean on
``has_inconsistent_pair``.
"""

import itertools

from nlgames.classical import STRATEGIES, StrategyGroup, group_of, strategies_winning_both

INPUTS = [(0, 0), (0, 1), (1, 0), (1, 1)]


def cell_wins(mask, x, y, a, b):
    return mask >> (8 * x + 4 * y + 2 * a + b) & 1


def win_set(mask, x, y):
    return [(a, b) for a in (0, 1) for b in (0, 1) if cell_wins(mask, x, y, a, b)]


def complement(p):
    return (1 - p[0], 1 - p[1])


def check_complement_pair_count(masks):
    """Complement inputs with m and n winners have exactly m*n common strategies."""
    bad = []
    for mask in masks:
        for i1 in ((0, 0), (0, 1)):
            i2 = complement(i1)
            m, n = len(win_set(mask, *i1)), len(win_set(mask, *i2))
            got = len(strategies_winning_both(mask, i1, i2))
            if got != m * n:
                bad.append((mask, i1, m, n, got))
    return bad


def forced_apart_pairs(mask):
    """Input pairs sharing one player's input whose winners force that player's bit apart."""
    out = []
    for fixed in (0, 1):
        for v in (0, 1):
            # fixed == 0: Alice's x = v is shared, the pair differs in y
            i1, i2 = ((v, 0), (v, 1)) if fixed == 0 else ((0, v), (1, v))
            w1, w2 = win_set(mask, *i1), win_set(mask, *i2)
            if not w1 or not w2:
                continue
            bits1 = {o[fixed] for o in w1}
            bits2 = {o[fixed] for o in w2}
            if len(bits1) == 1 and len(bits2) == 1 and bits1 != bits2:
                out.append((i1, i2))
    return out


def check_forced_apart_pairs(masks):
    bad = []
    for mask in masks:
        for i1, i2 in forced_apart_pairs(mask):
            if strategies_winning_both(mask, i1, i2):
                bad.append((mask, i1, i2))
    return bad


def _play(s, inp):
    return s.outputs(*inp)


def check_cross_group_disagreement():
    """Constant vs dependent, or the two mixed groups: agree on one input -> disagree on the rest."""
    pairs = {
        frozenset((StrategyGroup.Constant, StrategyGroup.InputDependent)),
        frozenset((StrategyGroup.MixedAliceDependent, StrategyGroup.MixedBobDependent)),
    }
    bad = []
    for s1, s2 in itertools.combinations(STRATEGIES, 2):
        if frozenset((group_of(s1), group_of(s2))) not in pairs:
            continue
        for inp in INPUTS:
            if _play(s1, inp) == _play(s2, inp):
                for other in INPUTS:
                    if other != inp and _play(s1, other) == _play(s2, other):
                        bad.append((s1, s2, inp, other))
    return bad


def check_complement_input_disagreement():
    """Distinct groups agreeing on an input disagree on its complement."""
    bad = []
    for s1, s2 in itertools.combinations(STRATEGIES, 2):
        if group_of(s1) == group_of(s2):
            continue
        for inp in INPUTS:
            if _play(s1, inp) == _play(s2, inp) and _play(s1, complement(inp)) == _play(s2, complement(inp)):
                bad.append((s1, s2, inp))
    return bad


def _complement_pairs(ws):
    return [(p, complement(p)) for p in ws if p < complement(p) and complement(p) in ws]


def _restricted(mask, inp, pair):
    """Strategies winning on inp and its complement, with the answer on inp inside pair."""
    comp = complement(inp)
    return [s for s in strategies_winning_both(mask, inp, comp) if _play(s, inp) in pair]


def check_four_distinct_answers(masks):
    """A complement winner pair on xy and exactly two winners on the complement input:
    the four common strategies give four distinct answers on one of the other inputs."""
    bad = []
    seen = 0
    for mask in masks:
        for inp in INPUTS:
            comp = complement(inp)
            if len(win_set(mask, *comp)) != 2:
                continue
            for pair in _complement_pairs(win_set(mask, *inp)):
                seen += 1
                strategies = _restricted(mask, inp, pair)
                others = [o for o in INPUTS if o not in (inp, comp)]
                if len(strategies) != 4 or not any(
                    len({_play(s, o) for s in strategies}) == 4 for o in others
                ):
                    bad.append((mask, inp, pair))
    return bad, seen


def check_two_strategies_non_complement(masks):
    """A complement winner pair on xy and one winner on the complement input: the two
    common strategies give non-complementary answers on each remaining input."""
    bad = []
    seen = 0
    for mask in masks:
        for inp in INPUTS:
            comp = complement(inp)
            if len(win_set(mask, *comp)) != 1:
                continue
            for pair in _complement_pairs(win_set(mask, *inp)):
                seen += 1
                strategies = _restricted(mask, inp, pair)
                others = [o for o in INPUTS if o not in (inp, comp)]
                if len(strategies) != 2 or any(
                    _play(strategies[0], o) == complement(_play(strategies[1], o)) for o in others
                ):
                    bad.append((mask, inp, pair))
    return bad, seen
