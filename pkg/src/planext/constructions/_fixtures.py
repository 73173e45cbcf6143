"""Coordinates read off the two drawings of the C4 equality family.

Straight-line drawings; rotations come from sorting neighbours by angle.
"""

# 30-vertex base graph (icosidodecahedron), drawn with one pentagon at the centre
BASE_POINTS = [
    (-0.25, 0.0),
    (0.25, 0.0),
    (-0.45, 0.4),
    (0.45, 0.4),
    (0.0, 0.7),
    (-1.05, 0.0),
    (1.05, 0.0),
    (0.0, -0.5),
    (0.9, 1.3),
    (-0.9, 1.3),
    (-1.8, 1.0),
    (1.8, 1.0),
    (0.0, 2.175),
    (1.2, -0.9),
    (-1.2, -0.9),
    (0.4, 1.8),
    (1.2, 1.2),
    (1.5, 0.6),
    (1.1333333, -0.5),
    (0.68, -0.7266666),
    (-0.4, 1.8),
    (-1.2, 1.2),
    (-1.5, 0.6),
    (-1.1333333, -0.5),
    (-0.68, -0.7266666),
    (1.8, 3.05),
    (3.0, 0.0),
    (0.0, -2.4),
    (-3.0, 0.0),
    (-1.8, 3.05),
]

BASE_EDGES = [
    (0, 1), (0, 2), (0, 5), (0, 7), (1, 3), (1, 6), (1, 7), (2, 4), (2, 5), (2, 9),
    (3, 4), (3, 6), (3, 8), (4, 8), (4, 9), (5, 22), (5, 23), (6, 17), (6, 18), (7, 19),
    (7, 24), (8, 15), (8, 16), (9, 20), (9, 21), (10, 21), (10, 22), (10, 28), (10, 29),
    (11, 16), (11, 17), (11, 25), (11, 26), (12, 15), (12, 20), (12, 25), (12, 29),
    (13, 18), (13, 19), (13, 26), (13, 27), (14, 23), (14, 24), (14, 27), (14, 28),
    (15, 16), (15, 20), (16, 17), (17, 18), (18, 19), (19, 24), (20, 21), (21, 22),
    (22, 23), (23, 24), (25, 26), (25, 29), (26, 27), (27, 28), (28, 29),
]

BASE_INNER_PENTAGON = (0, 2, 4, 3, 1)
BASE_INNER_ANCHOR = 4  # top vertex of the central pentagon
BASE_OUTER_ANCHOR = 27  # bottom vertex of the outer pentagon

# 50-vertex annulus: outer boundary pentagon and inner hole pentagon
RING_POINTS = [
    (0.83, 0.59),
    (-0.83, 0.59),
    (0.0, 6.0),
    (2.0, 0.0),
    (4.0, 3.0),
    (-2.0, 0.0),
    (-4.0, 3.0),
    (1.85, 0.45),
    (0.0, 0.45),
    (-1.85, 0.45),
    (2.15, 0.9),
    (1.7, 0.9),
    (0.2, 0.9),
    (1.078471, 0.9),
    (-2.15, 0.9),
    (-1.7, 0.9),
    (-0.2, 0.9),
    (-1.078471, 0.9),
    (0.0, 1.0),
    (1.0, 3.0),
    (2.828471, 3.0),
    (3.55, 3.0),
    (2.222222, 3.0),
    (-1.0, 3.0),
    (-2.828471, 3.0),
    (-3.55, 3.0),
    (-2.222222, 3.0),
    (1.428571, 1.714286),
    (1.991666, 1.995834),
    (2.933333, 2.466666),
    (3.325, 2.6625),
    (-1.428571, 1.714286),
    (-1.991666, 1.995834),
    (-2.933333, 2.466666),
    (-3.325, 2.6625),
    (0.592593, 4.2222222),
    (0.3555555, 4.9333333),
    (0.15, 5.55),
    (-0.592593, 4.2222222),
    (-0.3555555, 4.9333333),
    (-0.15, 5.55),
    (0.0, 4.6555555),
    (0.663888, 5.164583),
    (-0.663888, 5.164583),
    (1.1, 0.45),
    (-1.1, 0.45),
    (1.522421, 1.43274),
    (-1.522421, 1.43274),
    (2.595299, 2.720193),
    (-2.595299, 2.720193),
]

RING_EDGES = [
    (0, 8), (0, 12), (0, 13), (0, 44), (1, 8), (1, 16), (1, 17), (1, 45), (2, 4),
    (2, 6), (2, 37), (2, 40), (3, 4), (3, 5), (3, 7), (3, 44), (4, 21), (4, 30), (5, 6),
    (5, 9), (5, 45), (6, 25), (6, 34), (7, 10), (7, 11), (7, 44), (8, 44), (8, 45),
    (9, 14), (9, 15), (9, 45), (10, 11), (10, 29), (10, 30), (11, 13), (11, 46),
    (12, 13), (12, 16), (12, 18), (13, 46), (14, 15), (14, 33), (14, 34), (15, 17),
    (15, 47), (16, 17), (16, 18), (17, 47), (18, 27), (18, 31), (19, 22), (19, 23),
    (19, 27), (19, 35), (20, 21), (20, 22), (20, 42), (20, 48), (21, 30), (21, 42),
    (22, 35), (22, 48), (23, 26), (23, 31), (23, 38), (24, 25), (24, 26), (24, 43),
    (24, 49), (25, 34), (25, 43), (26, 38), (26, 49), (27, 28), (27, 46), (28, 29),
    (28, 46), (28, 48), (29, 30), (29, 48), (31, 32), (31, 47), (32, 33), (32, 47),
    (32, 49), (33, 34), (33, 49), (35, 36), (35, 41), (36, 37), (36, 41), (36, 42),
    (37, 40), (37, 42), (38, 39), (38, 41), (39, 40), (39, 41), (39, 43), (40, 43),
]

RING_OUTER_ANCHOR = 2  # top vertex of the outer pentagon
RING_HOLE_ANCHOR = 18  # bottom vertex of the hole pentagon
