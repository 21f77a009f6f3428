from itertools import combinations, permutations

import pytest

from tangle4.chops import (Chop, add_distinguisher, can_extend, claw_freeing_order, decomposition,
                           distinguish_all, faithful_torso_map, greedy_maximal_3chop, is_maximal,
                           verify_chop_theorem)
from tangle4.connectivity import is_claw_free, is_internally_4connected
from tangle4.errors import NoDistinguisher, NotThreeConnected
from tangle4.graph import members, vset
from tangle4.minors import (MinorMap, identity_map, is_delta_minor_map, is_faithful, validate_model)
from tangle4.named_graphs import (CHAIN_ATTACHED, NAMED, blown_up_cube, chain_graph, complete, cube,
                                  donut_graph, path, two_cube_gadget)
from tangle4.separations import (OrientedSeparation, bag, canonical, is_nested, is_star, proper_separations,
                                 splitting_stars, torso)
from tangle4.tangles import efficient_distinguishers, enumerate_tangles, includes_star, internal_tangle, lift_tangle

MATCHING = canonical(vset(range(8)), vset(range(8, 16)) | vset([1, 2, 4]))


def nbhd(g, v):
    return canonical(g.adj[v] | 1 << v, g.full & ~(1 << v))


def is_claw_freeing(g, seq):
    """Check an enumeration against the definition directly."""
    for i, s in enumerate(seq):
        if is_claw_free(g, s):
            continue
        if not any((s.a & s.b & t.a & t.b).bit_count() >= 2 for t in seq[:i]):
            return False
    return True


def test_chain_has_a_unique_claw_freeing_order():
    g = chain_graph()
    s1, s2, s3 = (nbhd(g, v) for v in CHAIN_ATTACHED)
    assert claw_freeing_order(g, [s3, s1, s2]) == [s1, s2, s3]
    good = [p for p in permutations([s1, s2, s3]) if is_claw_freeing(g, list(p))]
    assert good == [(s1, s2, s3)]


def test_claw_free_sets_keep_canonical_order():
    g = two_cube_gadget()
    seps = [s for s in proper_separations(g, 3) if is_claw_free(g, s)][:3]
    nested = [s for s in seps if all(is_nested(s, t) for t in seps)]
    out = claw_freeing_order(g, nested)
    assert out is not None and set(out) == set(nested)


def donut_star_seps(g):
    return [nbhd(g, v) for v in range(12, 18)]


def test_donut_is_torso_faithful_but_not_claw_freeable():
    g = donut_graph()
    seps = donut_star_seps(g)
    assert claw_freeing_order(g, seps) is None
    assert not any(is_claw_free(g, s) for s in seps)
    stars = splitting_stars(g, seps)
    assert sorted(len(st) for st in stars) == [1] * 6 + [6]
    for st in stars:
        b = bag(g, st)
        t = torso(g, st)
        if len(st) == 6:
            # contract each b_i onto o_i (the red edges)
            seeds = [1 << v for v in members(b)]
            index = {v: i for i, v in enumerate(members(b))}
            for i in range(6):
                seeds[index[6 + i]] |= 1 << (12 + i)
            fibers = seeds
        else:
            # each o_j keeps its clique neighbour d_j; the clique realises the triangle
            fibers = [1 << v | (1 << (v - 6) if 6 <= v < 12 else 0) for v in members(b)]
        m = MinorMap(g, t, tuple(fibers))
        assert validate_model(m), validate_model(m).reasons
        assert is_faithful(m)


def test_can_extend_examples():
    g = two_cube_gadget()
    assert can_extend(g, Chop(), MATCHING)
    c = cube()
    assert not any(can_extend(c, Chop(), s) for s in proper_separations(c, 3))
    assert not can_extend(g, Chop(), nbhd(g, 0)) or is_claw_free(g, nbhd(g, 0))


def test_greedy_examples():
    assert len(greedy_maximal_3chop(cube())) == 0
    assert len(greedy_maximal_3chop(complete(5))) == 0
    chops = [greedy_maximal_3chop(two_cube_gadget(), s) for s in range(4)]
    assert any(MATCHING in c or canonical(vset(range(8, 16)), vset(range(8)) | vset([9, 10, 12])) in c
               for c in chops)
    with pytest.raises(NotThreeConnected):
        greedy_maximal_3chop(path(4))


def test_greedy_is_deterministic_per_seed():
    g = blown_up_cube((3, 2, 1, 1))
    assert greedy_maximal_3chop(g, 5) == greedy_maximal_3chop(g, 5)


def test_decomposition_of_empty_chop():
    g = cube()
    d = decomposition(g, Chop())
    assert len(d.nodes) == 1 and d.nodes[0].torso == g
    assert d.nodes[0].minor_map == identity_map(g)


def test_chain_decomposition():
    g = chain_graph()
    chop = greedy_maximal_3chop(g)
    assert set(chop.separations) == {nbhd(g, v) for v in CHAIN_ATTACHED}
    d = decomposition(g, chop)
    assert len(d.nodes) == 4
    centre = max(d.nodes, key=lambda nd: nd.bag.bit_count())
    assert centre.torso.n == 10 and centre.torso.num_edges() == 45


def test_gadget_torso_maps_are_faithful_delta_maps():
    g = two_cube_gadget()
    for seed in range(3):
        chop = greedy_maximal_3chop(g, seed)
        for nd in decomposition(g, chop).nodes:
            m = nd.minor_map
            assert validate_model(m) and is_faithful(m) and is_delta_minor_map(m)


def test_add_distinguisher_on_gadget():
    g = two_cube_gadget()
    t1, t2 = enumerate_tangles(g, 4)
    s = add_distinguisher(g, [], t1, t2)
    assert s == MATCHING
    assert s in efficient_distinguishers(t1, t2)
    with pytest.raises(NoDistinguisher):
        add_distinguisher(g, [], t1, t1)
    with pytest.raises(NoDistinguisher):
        add_distinguisher(g, [MATCHING], t1, t2)


def test_distinguish_all_terminates_on_corpus(corpus):
    for g in corpus[::9]:
        ts = enumerate_tangles(g, 4)
        nested = distinguish_all(g, [], ts)
        for t1, t2 in combinations(ts, 2):
            assert set(efficient_distinguishers(t1, t2)) & set(nested)


@pytest.mark.parametrize("name", ["cube", "K5", "K6", "petersen", "two_cube_gadget", "blown_up_cube", "chain",
                                  "prism", "K3,3", "K4"])
def test_verify_chop_theorem_named(name):
    g = NAMED[name]()
    for seed in range(3):
        rep = verify_chop_theorem(g, greedy_maximal_3chop(g, seed))
        assert rep.checked[-1] == "count"


def test_verify_chop_theorem_cube_report():
    rep = verify_chop_theorem(cube(), greedy_maximal_3chop(cube()))
    assert rep.n_tangles == 1 and len(rep.nodes) == 1
    assert rep.nodes[0].bag_size == 8 and rep.nodes[0].kind == "internally_4_connected"


def test_blown_up_cube_has_cubic_node():
    g = blown_up_cube((3, 1, 1, 1))
    rep = verify_chop_theorem(g, greedy_maximal_3chop(g))
    cubic = [nd for nd in rep.nodes if nd.cubic and nd.tangles]
    assert len(cubic) == 1 and 4 <= cubic[0].bag_size <= 8


def test_greedy_soundness_on_corpus(corpus):
    for g in corpus[::6]:
        chop = greedy_maximal_3chop(g, 1)
        assert claw_freeing_order(g, chop.separations) is not None
        assert is_maximal(g, chop)
        assert all(is_nested(s, t) for s, t in combinations(chop.separations, 2))


def test_large_torsos_are_internally_4connected(corpus):
    from tangle4.chops import _is_k33
    for g in corpus[::3]:
        if _is_k33(g):
            continue
        chop = greedy_maximal_3chop(g, 2)
        for st in splitting_stars(g, chop.separations):
            t = torso(g, st)
            if t.n >= 5:
                assert is_internally_4connected(t)


def test_lifted_torso_tangles_include_the_star(corpus):
    for g in corpus[::11]:
        chop = greedy_maximal_3chop(g)
        for nd in decomposition(g, chop).nodes:
            for t in enumerate_tangles(nd.torso, 4):
                assert includes_star(lift_tangle(nd.minor_map, t), nd.star)
