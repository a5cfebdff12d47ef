"""Reference tables used by the verification harness.

Each table is frozen application data: the verify commands recompute the
same quantities from scratch and diff them row by row against these.
"""

from __future__ import annotations

# s -> (M(3,s), [(a2, a3), ...] all maximal bases, lexicographic)
T700 = {
    1: (3, [(2, 3)]),
    2: (8, [(3, 4)]),
    3: (15, [(4, 5)]),
    4: (26, [(5, 8)]),
    5: (35, [(6, 7)]),
    6: (52, [(7, 12)]),
    7: (69, [(8, 13)]),
    8: (89, [(9, 14)]),
    9: (112, [(9, 20)]),
    10: (146, [(10, 26)]),
    11: (172, [(9, 30), (10, 26)]),
    12: (212, [(11, 37)]),
    13: (259, [(13, 34)]),
    14: (302, [(12, 52)]),
    15: (354, [(12, 52)]),
    16: (418, [(15, 54)]),
    17: (476, [(14, 61)]),
    18: (548, [(15, 80)]),
    19: (633, [(18, 65)]),
    20: (714, [(17, 91)]),
    21: (805, [(17, 91)]),
    22: (902, [(19, 102), (20, 92)]),
}

# n -> {p: [(a2, a3), ...] longest SG(n,p), all ties}, n = 1..60
T503 = {
    1: {1: [(3, 4)], 2: [(4, 5)], 3: [(5, 6)]},
    2: {1: [(5, 7)], 2: [(7, 9)], 3: [(9, 11)]},
    3: {1: [(7, 10)], 2: [(8, 13), (10, 13)], 3: [(13, 16)]},
    4: {1: [(6, 14)], 2: [(11, 18)], 3: [(17, 21)]},
    5: {1: [(8, 19)], 2: [(14, 23)], 3: [(15, 26), (21, 26)]},
    6: {1: [(10, 24)], 2: [(17, 28)], 3: [(19, 33)]},
    7: {1: [(9, 30)], 2: [(13, 34), (15, 34)], 3: [(23, 40)]},
    8: {1: [(11, 37)], 2: [(16, 42)], 3: [(27, 47)]},
    9: {1: [(13, 44)], 2: [(19, 50)], 3: [(31, 54)]},
    10: {1: [(12, 52)], 2: [(22, 58)], 3: [(28, 62)]},
    11: {1: [(14, 61)], 2: [(25, 66)], 3: [(26, 71), (32, 71)]},
    12: {1: [(16, 70)], 2: [(21, 76)], 3: [(30, 82)]},
    13: {1: [(15, 80)], 2: [(24, 87)], 3: [(34, 93)]},
    14: {1: [(17, 91)], 2: [(27, 98)], 3: [(38, 104)]},
    15: {1: [(19, 102)], 2: [(30, 109)], 3: [(42, 115)]},
    16: {1: [(18, 114)], 2: [(26, 120), (33, 120)], 3: [(46, 126)]},
    17: {1: [(20, 127)], 2: [(29, 134)], 3: [(37, 138), (43, 138)]},
    18: {1: [(22, 140)], 2: [(32, 148)], 3: [(41, 153)]},
    19: {1: [(21, 154)], 2: [(35, 162)], 3: [(45, 168)]},
    20: {1: [(23, 169)], 2: [(38, 176)], 3: [(49, 183)]},
    21: {1: [(25, 184)], 2: [(34, 191)], 3: [(53, 198)]},
    22: {1: [(24, 200)], 2: [(37, 208)], 3: [(57, 213)]},
    23: {1: [(26, 217)], 2: [(40, 225)], 3: [(61, 228)]},
    24: {1: [(28, 234)], 2: [(43, 242)], 3: [(52, 246)]},
    25: {1: [(27, 252)], 2: [(46, 259)], 3: [(56, 265)]},
    26: {1: [(29, 271)], 2: [(42, 278)], 3: [(60, 284)]},
    27: {1: [(31, 290)], 2: [(45, 298)], 3: [(64, 303)]},
    28: {1: [(30, 310)], 2: [(48, 318)], 3: [(68, 322)]},
    29: {1: [(32, 331)], 2: [(51, 338)], 3: [(72, 341)]},
    30: {1: [(34, 352)], 2: [(47, 358), (54, 358)], 3: [(63, 361)]},
    31: {1: [(33, 374)], 2: [(50, 381)], 3: [(67, 384)]},
    32: {1: [(35, 397)], 2: [(53, 404)], 3: [(71, 407)]},
    33: {1: [(37, 420)], 2: [(56, 427)], 3: [(75, 430)]},
    34: {1: [(36, 444)], 2: [(59, 450)], 3: [(79, 453)]},
    35: {1: [(38, 469)], 2: [(55, 474)], 3: [(83, 476)]},
    36: {1: [(40, 494)], 2: [(58, 500)], 3: [(87, 499)]},
    37: {1: [(39, 520)], 2: [(61, 526)], 3: [(78, 525)]},
    38: {1: [(41, 547)], 2: [(64, 552)], 3: [(82, 552)]},
    39: {1: [(43, 574)], 2: [(67, 578)], 3: [(86, 579)]},
    40: {1: [(42, 602)], 2: [(63, 606)], 3: [(90, 606)]},
    41: {1: [(44, 631)], 2: [(66, 635)], 3: [(94, 633)]},
    42: {1: [(46, 660)], 2: [(69, 664)], 3: [(98, 660)]},
    43: {1: [(45, 690)], 2: [(72, 693)], 3: [(89, 688)]},
    44: {1: [(47, 721)], 2: [(68, 722), (75, 722)], 3: [(93, 719)]},
    45: {1: [(49, 752)], 2: [(71, 754)], 3: [(97, 750)]},
    46: {1: [(48, 784)], 2: [(74, 786)], 3: [(101, 781)]},
    47: {1: [(50, 817)], 2: [(77, 818)], 3: [(105, 812)]},
    48: {1: [(52, 850)], 2: [(80, 850)], 3: [(109, 843)]},
    49: {1: [(51, 884)], 2: [(76, 883)], 3: [(113, 874)]},
    50: {1: [(53, 919)], 2: [(79, 918)], 3: [(104, 908)]},
    51: {1: [(55, 954)], 2: [(82, 953)], 3: [(108, 943)]},
    52: {1: [(54, 990)], 2: [(85, 988)], 3: [(112, 978)]},
    53: {1: [(56, 1027)], 2: [(88, 1023)], 3: [(116, 1013)]},
    54: {1: [(58, 1064)], 2: [(84, 1060)], 3: [(120, 1048)]},
    55: {1: [(57, 1102)], 2: [(87, 1098)], 3: [(124, 1083)]},
    56: {1: [(59, 1141)], 2: [(90, 1136)], 3: [(115, 1119)]},
    57: {1: [(61, 1180)], 2: [(93, 1174)], 3: [(119, 1158)]},
    58: {1: [(60, 1220)], 2: [(89, 1212), (96, 1212)], 3: [(123, 1197)]},
    59: {1: [(62, 1261)], 2: [(92, 1253)], 3: [(127, 1236)]},
    60: {1: [(64, 1302)], 2: [(95, 1294)], 3: [(131, 1275)]},
}

# n -> ((key-1 best a2, a3), (key-p best a2, a3)), p = 3, n = 2..60;
# (0, 0) marks "no such generator"
T501 = {
    2: ((0, 0), (9, 11)),
    3: ((7, 12), (13, 16)),
    4: ((11, 19), (17, 21)),
    5: ((15, 26), (21, 26)),
    6: ((19, 33), (25, 31)),
    7: ((23, 40), (29, 36)),
    8: ((27, 47), (20, 44)),
    9: ((31, 54), (24, 53)),
    10: ((35, 61), (28, 62)),
    11: ((26, 71), (32, 71)),
    12: ((30, 82), (36, 80)),
    13: ((34, 93), (40, 89)),
    14: ((38, 104), (31, 99)),
    15: ((42, 115), (35, 112)),
    16: ((46, 126), (39, 125)),
    17: ((37, 138), (43, 138)),
    18: ((41, 153), (47, 151)),
    19: ((45, 168), (51, 164)),
    20: ((49, 183), (55, 177)),
    21: ((53, 198), (46, 193)),
    22: ((57, 213), (50, 210)),
    23: ((61, 228), (54, 227)),
    24: ((52, 246), (58, 244)),
    25: ((56, 265), (62, 261)),
    26: ((60, 284), (66, 278)),
    27: ((64, 303), (57, 296)),
    28: ((68, 322), (61, 317)),
    29: ((72, 341), (65, 338)),
    30: ((63, 361), (69, 359)),
    31: ((67, 384), (73, 380)),
    32: ((71, 407), (77, 401)),
    33: ((75, 430), (81, 422)),
    34: ((79, 453), (72, 446)),
    35: ((83, 476), (76, 471)),
    36: ((87, 499), (80, 496)),
    37: ((78, 525), (84, 521)),
    38: ((82, 552), (88, 546)),
    39: ((86, 579), (92, 571)),
    40: ((90, 606), (83, 597)),
    41: ((94, 633), (87, 626)),
    42: ((98, 660), (91, 655)),
    43: ((89, 688), (95, 684)),
    44: ((93, 719), (99, 713)),
    45: ((97, 750), (103, 742)),
    46: ((101, 781), (107, 771)),
    47: ((105, 812), (98, 803)),
    48: ((109, 843), (102, 836)),
    49: ((113, 874), (106, 869)),
    50: ((104, 908), (110, 902)),
    51: ((108, 943), (114, 935)),
    52: ((112, 978), (118, 968)),
    53: ((116, 1013), (109, 1002)),
    54: ((120, 1048), (113, 1039)),
    55: ((124, 1083), (117, 1076)),
    56: ((115, 1119), (121, 1113)),
    57: ((119, 1158), (125, 1150)),
    58: ((123, 1197), (129, 1187)),
    59: ((127, 1236), (133, 1224)),
    60: ((131, 1275), (124, 1264)),
}

# published key-1/key-p length limit (B+C)(B+3C)/4C for p = 3, 2 d.p.
T501_THEORY = {
    2: 20.31, 3: 26.00, 4: 32.31, 5: 39.23, 6: 46.77, 7: 54.92, 8: 63.69,
    9: 73.08, 10: 83.08, 11: 93.69, 12: 104.92, 13: 116.77, 14: 129.23,
    15: 142.31, 16: 156.00, 17: 170.31, 18: 185.23, 19: 200.77, 20: 216.92,
    21: 233.69, 22: 251.08, 23: 269.08, 24: 287.69, 25: 306.92, 26: 326.77,
    27: 347.23, 28: 368.31, 29: 390.00, 30: 412.31, 31: 435.23, 32: 458.77,
    33: 482.92, 34: 507.69, 35: 533.08, 36: 559.08, 37: 585.69, 38: 612.92,
    39: 640.77, 40: 669.23, 41: 698.31, 42: 728.00, 43: 758.31, 44: 789.23,
    45: 820.77, 46: 852.92, 47: 885.69, 48: 919.08, 49: 953.08, 50: 987.69,
    51: 1022.92, 52: 1058.77, 53: 1095.23, 54: 1132.31, 55: 1170.00,
    56: 1208.31, 57: 1247.23, 58: 1286.77, 59: 1326.92, 60: 1367.69,
}

# same limit for p = 7, rows present in the p = 7 sample table
T502_THEORY = {
    2: 61.02, 3: 70.49, 4: 80.53, 5: 91.12, 6: 102.28, 7: 114.00,
    8: 126.28, 9: 139.12, 10: 152.53, 11: 166.49, 12: 181.02, 13: 196.11,
    14: 211.75, 25: 420.95, 40: 815.68, 54: 1298.07, 68: 1890.49,
    82: 2592.95, 97: 3467.68, 98: 3530.49,
}

# per-case counts of SG(n,3) from the key-1/key-p case split, n = 2..10
SG3_CASE_COUNTS = {
    2: (0, 0, 1, 2),
    3: (1, 1, 1, 3),
    4: (2, 2, 1, 4),
    5: (3, 2, 2, 6),
    6: (4, 2, 3, 8),
    7: (6, 3, 3, 10),
    8: (8, 4, 3, 12),
    9: (10, 5, 4, 15),
    10: (12, 5, 5, 18),
}

# p = 7 sample rows: n -> ((key-1 best a2, a3), (key-p best a2, a3))
T502 = {
    2: ((0, 0), (17, 19)),
    3: ((0, 0), (25, 28)),
    4: ((0, 0), (33, 37)),
    5: ((0, 0), (41, 46)),
    6: ((0, 0), (49, 55)),
    7: ((15, 28), (57, 64)),
    8: ((23, 43), (65, 73)),
    9: ((31, 58), (73, 82)),
    10: ((39, 73), (81, 91)),
    11: ((47, 88), (89, 100)),
    12: ((55, 103), (97, 109)),
    13: ((63, 118), (105, 118)),
    14: ((71, 133), (113, 127)),
    25: ((159, 298), (144, 305)),
    40: ((165, 639), (207, 645)),
    54: ((277, 1073), (262, 1078)),
    68: ((332, 1618), (317, 1621)),
    82: ((387, 2273), (372, 2274)),
    97: ((393, 3094), (435, 3094)),
    98: ((401, 3157), (443, 3151)),
}

# published values of the order bound pp(s), s = 40..58
PP_VALUES = {
    40: 3.89587147,
    41: 3.8861964670,
    42: 3.8770848290,
    43: 3.8684888960,
    44: 3.8603662240,
    45: 3.8526788960,
    46: 3.8453929300,
    47: 3.8384777840,
    48: 3.8319059350,
    49: 3.8256525090,
    50: 3.8196949750,
    51: 3.8140128760,
    52: 3.8085875920,
    53: 3.8034021430,
    54: 3.7984410110,
    55: 3.7936899850,
    56: 3.7891360260,
    57: 3.7847671530,
    58: 3.7805723340,
}

# the twelve classifications of {1, 34, a3} whose last break is a3 - 1:
# a3 -> (n, p, breaks, fundamental break values)
SG_34_FAMILY = {
    35: (1, 32, list(range(1, 35)), [1]),
    36: (2, 16, list(range(3, 36, 2)), [3]),
    37: (3, 10, list(range(3, 37, 3)), [3]),
    38: (3, 16, list(range(5, 38, 4)), [5]),
    42: (5, 16, [9, 17, 25, 33, 41], [9]),
    45: (11, 2, [11, 22, 33, 44], [11]),
    49: (6, 8, [15, 18, 30, 33, 45, 48], [15, 18]),
    50: (9, 16, [17, 33, 49], [17]),
    51: (17, 1, [33, 50], [33]),
    61: (9, 4, [27, 33, 54, 60], [27, 33]),
    63: (9, 6, [29, 33, 58, 62], [29, 33]),
    66: (17, 16, [33, 65], [33]),
}
