"""Conway polynomials, frozen from the Frank Luebeck tables.

``CONWAY[(p, d)]`` lists the non-leading coefficients c_0, ..., c_{d-1} of the
monic polynomial x^d + c_{d-1} x^{d-1} + ... + c_0 over F_p, lowest degree first.
"""

CONWAY: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1,),
    (2, 2): (1, 1),
    (2, 3): (1, 1, 0),
    (2, 4): (1, 1, 0, 0),
    (2, 5): (1, 0, 1, 0, 0),
    (2, 6): (1, 1, 0, 1, 1, 0),
    (2, 7): (1, 1, 0, 0, 0, 0, 0),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0),
    (2, 10): (1, 1, 1, 1, 0, 1, 1, 0, 0, 0),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    (2, 12): (1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0),
    (2, 13): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    (2, 14): (1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0),
    (2, 15): (1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (2, 16): (1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (2, 17): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (2, 18): (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0),
    (2, 19): (1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (2, 20): (1, 1, 0, 0, 1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (3, 1): (1,),
    (3, 2): (2, 2),
    (3, 3): (1, 2, 0),
    (3, 4): (2, 0, 0, 2),
    (3, 5): (1, 2, 0, 0, 0),
    (3, 6): (2, 2, 1, 0, 2, 0),
    (3, 7): (1, 0, 2, 0, 0, 0, 0),
    (3, 8): (2, 2, 2, 0, 1, 2, 0, 0),
    (3, 9): (1, 1, 2, 2, 0, 0, 0, 0, 0),
    (3, 10): (2, 1, 0, 0, 2, 2, 2, 0, 0, 0),
    (3, 11): (1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0),
    (3, 12): (2, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0),
    (3, 13): (1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (3, 14): (2, 0, 1, 2, 0, 1, 2, 1, 1, 2, 0, 0, 0, 0),
    (3, 15): (1, 1, 2, 0, 0, 1, 0, 0, 2, 0, 0, 0, 0, 0, 0),
    (3, 16): (2, 1, 2, 2, 2, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0),
    (3, 17): (1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (3, 18): (2, 0, 2, 0, 2, 1, 2, 0, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0),
    (3, 19): (1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (3, 20): (2, 1, 0, 2, 2, 2, 0, 0, 1, 1, 1, 1, 0, 2, 0, 0, 0, 0, 0, 0),
    (5, 1): (3,),
    (5, 2): (2, 4),
    (5, 3): (3, 3, 0),
    (5, 4): (2, 4, 4, 0),
    (5, 5): (3, 4, 0, 0, 0),
    (5, 6): (2, 0, 1, 4, 1, 0),
    (5, 7): (3, 3, 0, 0, 0, 0, 0),
    (5, 8): (2, 4, 3, 0, 1, 0, 0, 0),
    (5, 9): (3, 1, 0, 2, 0, 0, 0, 0, 0),
    (5, 10): (2, 1, 4, 2, 3, 3, 0, 0, 0, 0),
    (5, 11): (3, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (5, 12): (2, 2, 3, 4, 4, 0, 1, 1, 0, 0, 0, 0),
    (5, 13): (3, 3, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (5, 14): (2, 1, 0, 3, 2, 4, 4, 0, 1, 0, 0, 0, 0, 0),
    (5, 15): (3, 4, 3, 3, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (5, 16): (2, 1, 4, 4, 2, 4, 4, 4, 1, 0, 0, 0, 0, 0, 0, 0),
    (5, 17): (3, 2, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (5, 18): (2, 0, 2, 2, 0, 1, 2, 0, 2, 1, 1, 1, 1, 0, 0, 0, 0, 0),
    (5, 19): (3, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (5, 20): (2, 1, 0, 4, 0, 0, 3, 0, 2, 3, 4, 0, 3, 0, 0, 0, 0, 0, 0, 0),
    (7, 1): (4,),
    (7, 2): (3, 6),
    (7, 3): (4, 0, 6),
    (7, 4): (3, 4, 5, 0),
    (7, 5): (4, 1, 0, 0, 0),
    (7, 6): (3, 6, 4, 5, 1, 0),
    (7, 7): (4, 6, 0, 0, 0, 0, 0),
    (7, 8): (3, 2, 6, 4, 0, 0, 0, 0),
    (7, 9): (4, 6, 0, 1, 6, 0, 0, 0, 0),
    (7, 10): (3, 3, 2, 1, 4, 1, 1, 0, 0, 0),
    (7, 11): (4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (7, 12): (3, 0, 5, 0, 4, 2, 3, 5, 2, 0, 0, 0),
    (7, 13): (4, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (7, 14): (3, 6, 3, 0, 2, 6, 0, 5, 0, 0, 0, 0, 0, 0),
    (7, 15): (4, 2, 1, 4, 6, 6, 5, 0, 0, 0, 0, 0, 0, 0, 0),
    (7, 16): (3, 4, 2, 6, 1, 4, 3, 5, 4, 0, 0, 0, 0, 0, 0, 0),
    (7, 17): (4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (7, 18): (3, 2, 6, 0, 0, 3, 1, 5, 6, 1, 6, 2, 1, 0, 0, 0, 0, 0),
    (7, 19): (4, 0, 5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (7, 20): (3, 1, 0, 3, 0, 3, 1, 3, 2, 5, 2, 6, 1, 0, 0, 0, 0, 0, 0, 0),
    (11, 1): (9,),
    (11, 2): (2, 7),
    (13, 1): (11,),
    (13, 2): (2, 12),
    (17, 1): (14,),
    (17, 2): (3, 16),
    (19, 1): (17,),
    (19, 2): (2, 18),
    (23, 1): (18,),
    (23, 2): (5, 21),
    (29, 1): (27,),
    (29, 2): (2, 24),
    (31, 1): (28,),
    (31, 2): (3, 29),
    (37, 1): (35,),
    (41, 1): (35,),
    (43, 1): (40,),
    (47, 1): (42,),
    (53, 1): (51,),
    (59, 1): (57,),
    (61, 1): (59,),
    (67, 1): (65,),
    (71, 1): (64,),
    (73, 1): (68,),
    (79, 1): (76,),
    (83, 1): (81,),
    (89, 1): (86,),
    (97, 1): (92,),
    (101, 1): (99,),
    (103, 1): (98,),
    (107, 1): (105,),
    (109, 1): (103,),
    (113, 1): (110,),
    (127, 1): (124,),
    (131, 1): (129,),
    (137, 1): (134,),
    (139, 1): (137,),
    (149, 1): (147,),
    (151, 1): (145,),
    (157, 1): (152,),
    (163, 1): (161,),
    (167, 1): (162,),
    (173, 1): (171,),
    (179, 1): (177,),
    (181, 1): (179,),
    (191, 1): (172,),
    (193, 1): (188,),
    (197, 1): (195,),
    (199, 1): (196,),
    (211, 1): (209,),
    (223, 1): (220,),
    (227, 1): (225,),
    (229, 1): (223,),
    (233, 1): (230,),
    (239, 1): (232,),
    (241, 1): (234,),
    (251, 1): (245,),
    (257, 1): (254,),
    (263, 1): (258,),
    (269, 1): (267,),
    (271, 1): (265,),
    (277, 1): (272,),
    (281, 1): (278,),
    (283, 1): (280,),
    (293, 1): (291,),
    (307, 1): (302,),
    (311, 1): (294,),
    (313, 1): (303,),
    (317, 1): (315,),
    (331, 1): (328,),
    (337, 1): (327,),
    (347, 1): (345,),
    (349, 1): (347,),
    (353, 1): (350,),
    (359, 1): (352,),
    (367, 1): (361,),
    (373, 1): (371,),
    (379, 1): (377,),
    (383, 1): (378,),
    (389, 1): (387,),
    (397, 1): (392,),
    (401, 1): (398,),
    (409, 1): (388,),
    (419, 1): (417,),
    (421, 1): (419,),
    (431, 1): (424,),
    (433, 1): (428,),
    (439, 1): (424,),
    (443, 1): (441,),
    (449, 1): (446,),
    (457, 1): (444,),
    (461, 1): (459,),
    (463, 1): (460,),
    (467, 1): (465,),
    (479, 1): (466,),
    (487, 1): (484,),
    (491, 1): (489,),
    (499, 1): (492,),
    (503, 1): (498,),
    (509, 1): (507,),
    (521, 1): (518,),
    (523, 1): (521,),
    (541, 1): (539,),
    (547, 1): (545,),
    (557, 1): (555,),
    (563, 1): (561,),
    (569, 1): (566,),
    (571, 1): (568,),
    (577, 1): (572,),
    (587, 1): (585,),
    (593, 1): (590,),
    (599, 1): (592,),
    (601, 1): (594,),
    (607, 1): (604,),
    (613, 1): (611,),
    (617, 1): (614,),
    (619, 1): (617,),
    (631, 1): (628,),
    (641, 1): (638,),
    (643, 1): (632,),
    (647, 1): (642,),
    (653, 1): (651,),
    (659, 1): (657,),
    (661, 1): (659,),
    (673, 1): (668,),
    (677, 1): (675,),
    (683, 1): (678,),
    (691, 1): (688,),
    (701, 1): (699,),
    (709, 1): (707,),
    (719, 1): (708,),
    (727, 1): (722,),
    (733, 1): (727,),
    (739, 1): (736,),
    (743, 1): (738,),
    (751, 1): (748,),
    (757, 1): (755,),
    (761, 1): (755,),
    (769, 1): (758,),
    (773, 1): (771,),
    (787, 1): (785,),
    (797, 1): (795,),
    (809, 1): (806,),
    (811, 1): (808,),
    (821, 1): (819,),
    (823, 1): (820,),
    (827, 1): (825,),
    (829, 1): (827,),
    (839, 1): (828,),
    (853, 1): (851,),
    (857, 1): (854,),
    (859, 1): (857,),
    (863, 1): (858,),
    (877, 1): (875,),
    (881, 1): (878,),
    (883, 1): (881,),
    (887, 1): (882,),
    (907, 1): (905,),
    (911, 1): (894,),
    (919, 1): (912,),
    (929, 1): (926,),
    (937, 1): (932,),
    (941, 1): (939,),
    (947, 1): (945,),
    (953, 1): (950,),
    (967, 1): (962,),
    (971, 1): (965,),
    (977, 1): (974,),
    (983, 1): (978,),
    (991, 1): (985,),
    (997, 1): (990,),
    (1009, 1): (998,),
    (1013, 1): (1010,),
    (1019, 1): (1017,),
    (1021, 1): (1011,),
}
