"""Asymptotic moments and 5% critical values for the rank tests.

Generated by tools/gen_johansen_tables.py (fixed seed); do not edit.
MOMENTS[case][n] with n = K - r holds mean/variance/5%-quantile of
the trace (tr_*) and max-eigen (me_*) asymptotic distributions.
"""

MAX_DIM = 12

MOMENTS = {
    1: {
        1: {'tr_mean': 1.14120, 'tr_var': 2.24765, 'tr_cv5': 4.16338, 'me_mean': 1.14120, 'me_var': 2.24765, 'me_cv5': 4.16338},
        2: {'tr_mean': 6.09958, 'tr_var': 10.58917, 'tr_cv5': 12.27473, 'me_mean': 5.42890, 'me_var': 9.06585, 'me_cv5': 11.17833},
        3: {'tr_mean': 15.08741, 'tr_var': 25.08649, 'tr_cv5': 24.25898, 'me_mean': 10.46641, 'me_var': 15.51167, 'me_cv5': 17.74693},
        4: {'tr_mean': 28.05392, 'tr_var': 45.81861, 'tr_cv5': 40.20922, 'me_mean': 15.67404, 'me_var': 21.15515, 'me_cv5': 24.11832},
        5: {'tr_mean': 44.97639, 'tr_var': 72.27321, 'tr_cv5': 59.86467, 'me_mean': 20.98529, 'me_var': 26.76297, 'me_cv5': 30.34629},
        6: {'tr_mean': 65.98066, 'tr_var': 105.30448, 'tr_cv5': 83.90176, 'me_mean': 26.39277, 'me_var': 31.55170, 'me_cv5': 36.55623},
        7: {'tr_mean': 90.99383, 'tr_var': 143.94275, 'tr_cv5': 111.72058, 'me_mean': 31.87617, 'me_var': 36.46151, 'me_cv5': 42.71539},
        8: {'tr_mean': 120.00228, 'tr_var': 188.97246, 'tr_cv5': 143.68078, 'me_mean': 37.37679, 'me_var': 41.10309, 'me_cv5': 48.79465},
        9: {'tr_mean': 152.92874, 'tr_var': 238.85870, 'tr_cv5': 179.42778, 'me_mean': 42.91321, 'me_var': 45.52965, 'me_cv5': 54.98495},
        10: {'tr_mean': 190.03560, 'tr_var': 297.11719, 'tr_cv5': 219.37948, 'me_mean': 48.53418, 'me_var': 49.99568, 'me_cv5': 61.09993},
        11: {'tr_mean': 231.03529, 'tr_var': 354.91659, 'tr_cv5': 263.10332, 'me_mean': 54.09640, 'me_var': 53.80795, 'me_cv5': 67.06291},
        12: {'tr_mean': 276.00232, 'tr_var': 425.36678, 'tr_cv5': 310.92847, 'me_mean': 59.62971, 'me_var': 57.91564, 'me_cv5': 73.07248},
    },
    2: {
        1: {'tr_mean': 4.05819, 'tr_var': 6.93196, 'tr_cv5': 9.17125, 'me_mean': 4.05819, 'me_var': 6.93196, 'me_cv5': 9.17125},
        2: {'tr_mean': 12.02955, 'tr_var': 19.15550, 'tr_cv5': 20.12476, 'me_mean': 8.98291, 'me_var': 13.28165, 'me_cv5': 15.81123},
        3: {'tr_mean': 24.06179, 'tr_var': 37.97892, 'tr_cv5': 35.09607, 'me_mean': 14.19659, 'me_var': 19.32238, 'me_cv5': 22.24976},
        4: {'tr_mean': 40.00496, 'tr_var': 63.21902, 'tr_cv5': 54.14955, 'me_mean': 19.45806, 'me_var': 24.74698, 'me_cv5': 28.51040},
        5: {'tr_mean': 59.96597, 'tr_var': 93.51499, 'tr_cv5': 76.87139, 'me_mean': 24.85100, 'me_var': 30.22170, 'me_cv5': 34.78610},
        6: {'tr_mean': 83.97689, 'tr_var': 128.95681, 'tr_cv5': 103.55872, 'me_mean': 30.29180, 'me_var': 34.41457, 'me_cv5': 40.81538},
        7: {'tr_mean': 111.96748, 'tr_var': 173.35035, 'tr_cv5': 134.69696, 'me_mean': 35.79687, 'me_var': 39.72458, 'me_cv5': 47.07691},
        8: {'tr_mean': 143.95911, 'tr_var': 221.56945, 'tr_cv5': 169.62693, 'me_mean': 41.29389, 'me_var': 44.01988, 'me_cv5': 53.22304},
        9: {'tr_mean': 179.96574, 'tr_var': 274.50296, 'tr_cv5': 208.25052, 'me_mean': 46.86266, 'me_var': 48.27812, 'me_cv5': 59.24809},
        10: {'tr_mean': 219.98634, 'tr_var': 337.67591, 'tr_cv5': 251.22341, 'me_mean': 52.44678, 'me_var': 52.36343, 'me_cv5': 65.33137},
        11: {'tr_mean': 264.01137, 'tr_var': 401.27542, 'tr_cv5': 298.09594, 'me_mean': 58.02101, 'me_var': 56.73822, 'me_cv5': 71.28030},
        12: {'tr_mean': 312.01785, 'tr_var': 474.28783, 'tr_cv5': 348.84145, 'me_mean': 63.61852, 'me_var': 60.84156, 'me_cv5': 77.34271},
    },
    3: {
        1: {'tr_mean': 0.99950, 'tr_var': 2.00714, 'tr_cv5': 3.82803, 'me_mean': 0.99950, 'me_var': 2.00714, 'me_cv5': 3.82803},
        2: {'tr_mean': 8.31554, 'tr_var': 14.49519, 'tr_cv5': 15.50271, 'me_mean': 7.52851, 'me_var': 12.59120, 'me_cv5': 14.24556},
        3: {'tr_mean': 19.59189, 'tr_var': 32.18056, 'tr_cv5': 29.82574, 'me_mean': 13.13392, 'me_var': 19.07344, 'me_cv5': 21.17171},
        4: {'tr_mean': 34.63686, 'tr_var': 54.96989, 'tr_cv5': 47.81130, 'me_mean': 18.52544, 'me_var': 24.33988, 'me_cv5': 27.53061},
        5: {'tr_mean': 53.69815, 'tr_var': 84.36252, 'tr_cv5': 69.80254, 'me_mean': 23.98037, 'me_var': 29.84342, 'me_cv5': 33.80746},
        6: {'tr_mean': 76.69189, 'tr_var': 117.15916, 'tr_cv5': 95.40283, 'me_mean': 29.41752, 'me_var': 34.45192, 'me_cv5': 40.03455},
        7: {'tr_mean': 103.77342, 'tr_var': 159.26756, 'tr_cv5': 125.55233, 'me_mean': 34.94127, 'me_var': 39.47836, 'me_cv5': 46.24285},
        8: {'tr_mean': 134.82535, 'tr_var': 206.07288, 'tr_cv5': 159.65502, 'me_mean': 40.49855, 'me_var': 43.73087, 'me_cv5': 52.27374},
        9: {'tr_mean': 169.85800, 'tr_var': 257.07026, 'tr_cv5': 197.32986, 'me_mean': 46.08520, 'me_var': 48.16357, 'me_cv5': 58.36996},
        10: {'tr_mean': 208.81598, 'tr_var': 318.92835, 'tr_cv5': 239.37025, 'me_mean': 51.61295, 'me_var': 51.88500, 'me_cv5': 64.46096},
        11: {'tr_mean': 251.89927, 'tr_var': 379.52866, 'tr_cv5': 284.63721, 'me_mean': 57.26895, 'me_var': 56.77643, 'me_cv5': 70.66460},
        12: {'tr_mean': 298.94536, 'tr_var': 451.00749, 'tr_cv5': 334.90473, 'me_mean': 62.84910, 'me_var': 60.75186, 'me_cv5': 76.61482},
    },
    4: {
        1: {'tr_mean': 6.31639, 'tr_var': 10.45510, 'tr_cv5': 12.42625, 'me_mean': 6.31639, 'me_var': 10.45510, 'me_cv5': 12.42625},
        2: {'tr_mean': 16.53268, 'tr_var': 26.01468, 'tr_cv5': 25.84906, 'me_mean': 11.73836, 'me_var': 17.03933, 'me_cv5': 19.39045},
        3: {'tr_mean': 30.69095, 'tr_var': 47.21368, 'tr_cv5': 42.94443, 'me_mean': 17.11830, 'me_var': 22.76392, 'me_cv5': 25.84319},
        4: {'tr_mean': 48.71156, 'tr_var': 73.49689, 'tr_cv5': 63.83182, 'me_mean': 22.49518, 'me_var': 27.85684, 'me_cv5': 32.04630},
        5: {'tr_mean': 70.78400, 'tr_var': 106.56149, 'tr_cv5': 88.58723, 'me_mean': 27.96653, 'me_var': 33.06772, 'me_cv5': 38.29490},
        6: {'tr_mean': 96.73722, 'tr_var': 143.16265, 'tr_cv5': 117.33260, 'me_mean': 33.40363, 'me_var': 37.19620, 'me_cv5': 44.37817},
        7: {'tr_mean': 126.78618, 'tr_var': 190.40943, 'tr_cv5': 150.54275, 'me_mean': 38.93026, 'me_var': 42.29882, 'me_cv5': 50.60325},
        8: {'tr_mean': 160.86721, 'tr_var': 239.62055, 'tr_cv5': 187.36247, 'me_mean': 44.48036, 'me_var': 46.59791, 'me_cv5': 56.61673},
        9: {'tr_mean': 198.84243, 'tr_var': 296.60808, 'tr_cv5': 228.31925, 'me_mean': 50.07482, 'me_var': 50.73398, 'me_cv5': 62.65506},
        10: {'tr_mean': 240.80801, 'tr_var': 360.22597, 'tr_cv5': 273.00983, 'me_mean': 55.61636, 'me_var': 54.96781, 'me_cv5': 68.85651},
        11: {'tr_mean': 286.86205, 'tr_var': 425.23941, 'tr_cv5': 321.78056, 'me_mean': 61.22901, 'me_var': 59.41814, 'me_cv5': 74.81476},
        12: {'tr_mean': 336.86627, 'tr_var': 498.06805, 'tr_cv5': 374.54181, 'me_mean': 66.83875, 'me_var': 62.71327, 'me_cv5': 80.85151},
    },
    5: {
        1: {'tr_mean': 0.99751, 'tr_var': 2.00485, 'tr_cv5': 3.83105, 'me_mean': 0.99751, 'me_var': 2.00485, 'me_cv5': 3.83105},
        2: {'tr_mean': 10.45213, 'tr_var': 18.02134, 'tr_cv5': 18.34566, 'me_mean': 9.60866, 'me_var': 16.13515, 'me_cv5': 17.13646},
        3: {'tr_mean': 23.86373, 'tr_var': 39.19403, 'tr_cv5': 35.12874, 'me_mean': 15.63934, 'me_var': 22.65655, 'me_cv5': 24.33051},
        4: {'tr_mean': 40.95175, 'tr_var': 64.31925, 'tr_cv5': 55.16626, 'me_mean': 21.19954, 'me_var': 27.40052, 'me_cv5': 30.74588},
        5: {'tr_mean': 62.11326, 'tr_var': 97.06707, 'tr_cv5': 79.38149, 'me_mean': 26.79812, 'me_var': 32.72208, 'me_cv5': 37.11671},
        6: {'tr_mean': 87.14753, 'tr_var': 131.63189, 'tr_cv5': 106.93340, 'me_mean': 32.31615, 'me_var': 37.31617, 'me_cv5': 43.32722},
        7: {'tr_mean': 116.25967, 'tr_var': 174.43459, 'tr_cv5': 139.13671, 'me_mean': 37.90318, 'me_var': 41.97874, 'me_cv5': 49.47131},
        8: {'tr_mean': 149.43024, 'tr_var': 224.03018, 'tr_cv5': 175.16404, 'me_mean': 43.53300, 'me_var': 46.50392, 'me_cv5': 55.65857},
        9: {'tr_mean': 186.48672, 'tr_var': 279.44749, 'tr_cv5': 214.97698, 'me_mean': 49.13928, 'me_var': 51.08724, 'me_cv5': 61.83275},
        10: {'tr_mean': 227.44080, 'tr_var': 341.68135, 'tr_cv5': 258.78237, 'me_mean': 54.66922, 'me_var': 54.20330, 'me_cv5': 67.70042},
        11: {'tr_mean': 272.54433, 'tr_var': 404.40143, 'tr_cv5': 306.57286, 'me_mean': 60.36613, 'me_var': 59.16428, 'me_cv5': 74.02840},
        12: {'tr_mean': 321.64654, 'tr_var': 478.27767, 'tr_cv5': 358.46304, 'me_mean': 65.97331, 'me_var': 62.94723, 'me_cv5': 79.97732},
    },
}
