import itertools

from hypothesis import strategies as st

from rowvac.poset import RankedPoset


@st.composite
def ranked_posets(draw, max_levels=4, max_width=4):
    """Random graded posets: every non-minimal element covers something one level down."""
    widths = draw(st.lists(st.integers(1, max_width), min_size=1, max_size=max_levels))
    levels, covers, nxt = [], [], 0
    for w in widths:
        levels.append(list(range(nxt, nxt + w)))
        nxt += w
    for below, above in zip(levels, levels[1:]):
        for y in above:
            chosen = draw(st.sets(st.sampled_from(below), min_size=1))
            covers += [(x, y) for x in chosen]
    return RankedPoset(nxt, covers)


def brute_antichains(P: RankedPoset) -> set:
    out = set()
    for k in range(P.size + 1):
        for combo in itertools.combinations(range(P.size), k):
            if all(not P.leq(a, b) and not P.leq(b, a) for a, b in itertools.combinations(combo, 2)):
                out.add(combo)
    return out


def brute_rowmotion(P: RankedPoset, A) -> tuple:
    """Minimal elements of the complement of the order ideal generated by ``A``."""
    ideal = {x for x in range(P.size) if any(P.leq(x, a) for a in A)}
    rest = [x for x in range(P.size) if x not in ideal]
    return tuple(sorted(x for x in rest if not any(y != x and P.leq(y, x) for y in rest)))
