"""Published reference values the suite asserts against.

TABLE1 is the 3-digit iteration distribution for even bases 2-28, exactly
as printed (8 iteration columns; wider rows are truncated at column 8).
ROW_4DIGIT_BASE10 was computed with the definition-level sweep in
oracles.py over all 10^4 strings and frozen here.
"""

TABLE1 = {
    2: (6, 0, 0, 0, 0, 0, 0, 0),
    4: (24, 18, 18, 0, 0, 0, 0, 0),
    6: (54, 48, 78, 30, 0, 0, 0, 0),
    8: (96, 90, 162, 114, 42, 0, 0, 0),
    10: (150, 144, 270, 222, 150, 54, 0, 0),
    12: (216, 210, 402, 354, 282, 186, 66, 0),
    14: (294, 288, 558, 510, 438, 342, 222, 78),
    16: (384, 378, 738, 690, 618, 522, 402, 258),
    18: (486, 480, 942, 894, 822, 726, 606, 462),
    20: (600, 594, 1170, 1122, 1050, 954, 834, 690),
    22: (726, 720, 1422, 1374, 1302, 1206, 1086, 942),
    24: (864, 858, 1698, 1650, 1578, 1482, 1362, 1218),
    26: (1014, 1008, 1998, 1950, 1878, 1782, 1662, 1518),
    28: (1176, 1170, 2322, 2274, 2202, 2106, 1986, 1842),
}

ROW_4DIGIT_BASE10 = (384, 576, 2400, 1272, 1518, 1656, 2184)
