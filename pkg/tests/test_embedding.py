from __future__ import annotations

import json
import random
from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planext.constructions import basic, c4
from planext.embedding import (
    EmbeddingError,
    PlaneGraph,
    build_plane_graph,
    classify_edges,
    embedding_from_json,
    euler_check,
    face_profile,
    faces,
)
from planext.graph import AbstractGraph, is_connected
from planext.planarity import is_planar
from strategies import graphs

K4 = AbstractGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def k4_rotations():
    # each vertex has 3 neighbours, hence 2 distinct cyclic orders
    choices = []
    for v in range(4):
        first, *rest = sorted(K4.adjacency[v])
        choices.append([(first, *p) for p in permutations(rest)])
    for combo in product(*choices):
        yield build_plane_graph(K4, combo)


def genus_one_k4():
    return next(pg for pg in k4_rotations() if not euler_check(pg))


def test_triangle():
    pg = basic.cycle_graph(3)
    assert [f.size for f in faces(pg)] == [3, 3]
    assert euler_check(pg)


def test_tetrahedron():
    pg = basic.tetrahedron()
    assert len(faces(pg)) == 4
    assert euler_check(pg)


def test_genus_one_k4_detected():
    pg = genus_one_k4()  # build accepts it
    assert pg.n - pg.edge_count + len(faces(pg)) == 0
    assert not euler_check(pg)
    with pytest.raises(EmbeddingError):
        face_profile(pg)
    with pytest.raises(EmbeddingError):
        classify_edges(pg)


def test_k4_rotation_census():
    # of the 16 rotation systems of K4, the planar ones are the two mirror classes
    planar = sum(euler_check(pg) for pg in k4_rotations())
    assert 0 < planar < 16


def test_triangle_with_pendant():
    sizes = sorted(f.size for f in faces(basic.triangle_with_pendant()))
    assert sizes == [3, 5]
    ec = classify_edges(basic.triangle_with_pendant())
    assert ec.per_edge[(1, 3)] == (5, 5)  # a bridge sees the same face on both sides


def test_icosidodecahedron_faces():
    pg = c4.icosidodecahedron()
    fp = face_profile(pg)
    assert fp.f_i == {3: 20, 5: 12} and fp.f == 32 and fp.f31 == 0
    assert pg.n - pg.edge_count + fp.f == 2
    ec = classify_edges(pg)
    assert set(ec.per_edge.values()) == {(3, 5)}
    assert ec.e(3) == ec.e(5) == 60


def test_diamond():
    pg = basic.diamond()
    ec = classify_edges(pg)
    assert ec.per_edge[(1, 2)] == (3, 3)
    assert ec.pair(3, 3) == 1
    assert face_profile(pg).f31 == 2


def test_figure5_face_sum():
    fp = face_profile(basic.figure5_graph())
    assert sum(i * c for i, c in fp.f_i.items()) == 24
    assert fp.f_i[6] == 1  # the outer face


def test_rotation_mismatch_names_vertex():
    with pytest.raises(EmbeddingError, match="vertex 1"):
        build_plane_graph(K4, [[1, 2, 3], [0, 2, 2], [0, 1, 3], [0, 1, 2]])
    with pytest.raises(EmbeddingError, match="vertex 0: position 2"):
        embedding_from_json({"n": 3, "rotation": [[1, 2, 0], [0, 2], [0, 1]]})


def test_disconnected_rejected():
    g = AbstractGraph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(EmbeddingError, match="disconnected"):
        build_plane_graph(g, [[1], [0], [3], [2]])


def test_json_round_trip():
    pg = basic.figure8_graph()
    data = json.loads(json.dumps(pg.to_json()))
    assert embedding_from_json(data) == pg


def test_json_validation():
    with pytest.raises(EmbeddingError):
        embedding_from_json({"n": 2})
    with pytest.raises(EmbeddingError, match="one-sided"):
        embedding_from_json({"n": 2, "rotation": [[1], []]})
    with pytest.raises(EmbeddingError, match="not an integer"):
        embedding_from_json({"n": 2, "rotation": [["1"], [0]]})


@st.composite
def random_rotations(draw):
    g = draw(graphs(min_n=1, max_n=9))
    rnd = random.Random(draw(st.integers(0, 10**6)))
    rot = []
    for v in range(g.n):
        r = sorted(g.adjacency[v])
        rnd.shuffle(r)
        rot.append(r)
    return PlaneGraph(g, tuple(tuple(r) for r in rot))


@settings(max_examples=300, deadline=None)
@given(random_rotations())
def test_dart_partition(pg):
    darts = [d for f in faces(pg) for d in f.walk]
    assert len(darts) == len(set(darts)) == 2 * pg.edge_count
    # genus is non-negative: a rotation never has more faces than a plane embedding
    if is_connected(pg.underlying) and pg.edge_count:
        assert pg.n - pg.edge_count + len(faces(pg)) <= 2


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=1, max_n=9))
def test_profile_sums_on_planar_embeddings(g):
    res = is_planar(g)
    if not res.planar:
        return
    pg = res.embedding
    assert euler_check(pg)
    fp = face_profile(pg)
    assert fp.f == sum(fp.f_i.values())
    assert sum(i * c for i, c in fp.f_i.items()) == 2 * g.edge_count
    ec = classify_edges(pg)
    assert sum(ec.pairs.values()) == g.edge_count
    assert all(v <= g.edge_count for v in ec.e_i.values())
