import random

import pytest

from stdequiv.quiver import CyclicQuiverError, Path, Quiver, compose_paths, trivial_path


def chain3():
    return Quiver(3, [("a", 1, 2), ("b", 2, 3)])


def commsquare():
    return Quiver(4, [("a", 1, 2), ("b", 1, 3), ("c", 2, 4), ("d", 3, 4)])


class TestAcyclicity:
    def test_single_vertex(self):
        assert Quiver(1, []).is_acyclic()

    def test_chain(self):
        assert chain3().is_acyclic()

    def test_two_cycle(self):
        q = Quiver(2, [("a", 1, 2), ("b", 2, 1)])
        assert not q.is_acyclic()
        cycle = q.find_cycle()
        assert cycle[0] == cycle[-1]
        assert len(cycle) >= 3


class TestLayering:
    def test_chain_degrees(self):
        layering = chain3().source_layers()
        assert layering.degrees == (0, 1, 2)
        assert layering.layer(0) == {1}
        assert layering.layer(1) == {1, 2}
        assert layering.layer(2) == {1, 2, 3}

    def test_kronecker(self):
        q = Quiver(2, [("a", 1, 2), ("b", 1, 2)])
        assert q.source_layers().degrees == (0, 1)

    def test_commsquare_matches_longest_path(self):
        q = commsquare()
        layering = q.source_layers()
        assert layering.degrees == (0, 1, 1, 2)
        for v in q.vertices:
            assert layering.degree(v) == q.longest_path_length(v)

    def test_layer_zero_is_sources(self):
        q = commsquare()
        sources = {v for v in q.vertices if not q.arrows_into(v)}
        assert q.source_layers().layer(0) == sources

    def test_cyclic_rejected(self):
        q = Quiver(2, [("a", 1, 2), ("b", 2, 1)])
        with pytest.raises(CyclicQuiverError):
            q.source_layers()


class TestLongestPath:
    def test_isolated_vertex(self):
        assert Quiver(1, []).longest_path_length(1) == 0

    def test_chain_end(self):
        assert chain3().longest_path_length(3) == 2

    def test_commsquare_sink(self):
        # paths into 4: c, d, c*a, d*b -> longest has length 2
        assert commsquare().longest_path_length(4) == 2


class TestPaths:
    def test_a2(self):
        q = Quiver(2, [("a", 1, 2)])
        paths = q.enumerate_paths()
        assert paths == [trivial_path(1), trivial_path(2), Path(1, 2, ("a",))]

    def test_chain(self):
        paths = chain3().enumerate_paths()
        displays = [p.display() for p in paths]
        assert displays == ["e1", "e2", "e3", "a", "b", "b*a"]

    def test_kronecker(self):
        q = Quiver(2, [("a", 1, 2), ("b", 1, 2)])
        assert len(q.enumerate_paths()) == 4

    def test_compose_right_to_left(self):
        p = Path(2, 3, ("b",))
        q = Path(1, 2, ("a",))
        composite = compose_paths(p, q)
        assert composite == Path(1, 3, ("a", "b"))
        assert composite.display() == "b*a"

    def test_cyclic_rejected(self):
        q = Quiver(2, [("a", 1, 2), ("b", 2, 1)])
        with pytest.raises(CyclicQuiverError):
            q.enumerate_paths()


def random_acyclic_quiver(rng, max_vertices=12, max_arrows=20):
    n = rng.randint(1, max_vertices)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    position = {v: k for k, v in enumerate(order)}
    arrows = []
    for k in range(rng.randint(0, max_arrows)):
        s = rng.randint(1, n)
        t = rng.randint(1, n)
        if position[s] < position[t]:
            arrows.append((f"r{k}", s, t))
    return Quiver(n, arrows)


def test_layering_properties_random():
    rng = random.Random(7001)
    for _ in range(60):
        q = random_acyclic_quiver(rng, max_vertices=8, max_arrows=12)
        layering = q.source_layers()
        for v in q.vertices:
            assert layering.degree(v) == q.longest_path_length(v)
        for a in q.arrows:
            # an arrow into a degree-d vertex starts inside layer d-1
            assert layering.degree(a.source) < layering.degree(a.target)
            assert a.source in layering.layer(layering.degree(a.target) - 1)
        assert layering.layer(0) == {v for v in q.vertices if not q.arrows_into(v)}
