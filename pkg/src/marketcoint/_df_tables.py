"""Quantile tables for the Dickey-Fuller t-distribution.

Generated by tools/gen_df_tables.py (fixed seed); do not edit by hand.
Keys: deterministic case ('n', 'c', 'ct') -> regression sample size
(0 means the asymptotic limit) -> quantiles at PROBS.
"""

PROBS = [0.001, 0.0015, 0.002, 0.003, 0.004, 0.005, 0.006, 0.008, 0.01, 0.0125, 0.015, 0.0175, 0.02, 0.025, 0.03, 0.035, 0.04, 0.045, 0.05, 0.055, 0.06, 0.07, 0.08, 0.09, 0.1, 0.125, 0.15, 0.175, 0.2, 0.225, 0.25, 0.275, 0.3, 0.325, 0.35, 0.375, 0.4, 0.425, 0.45, 0.475, 0.5, 0.525, 0.55, 0.575, 0.6, 0.625, 0.65, 0.675, 0.7, 0.725, 0.75, 0.775, 0.8, 0.825, 0.85, 0.875, 0.9, 0.91, 0.92, 0.93, 0.94, 0.945, 0.95, 0.955, 0.96, 0.965, 0.97, 0.975, 0.98, 0.9825, 0.985, 0.9875, 0.99, 0.992, 0.994, 0.995, 0.996, 0.997, 0.998, 0.9985, 0.999]

QUANTILES = {
    'n': {
        0: [-3.29337, -3.19584, -3.10810, -2.97539, -2.86623, -2.79618, -2.73663, -2.64062, -2.57244, -2.48969, -2.41907, -2.35926, -2.30725, -2.22458, -2.15126, -2.08830, -2.03173, -1.98009, -1.93532, -1.89491, -1.85655, -1.78663, -1.72402, -1.66597, -1.61199, -1.50006, -1.40181, -1.31190, -1.23084, -1.15783, -1.08809, -1.02207, -0.95926, -0.89932, -0.84259, -0.78671, -0.73029, -0.67298, -0.61718, -0.55823, -0.49665, -0.43406, -0.36970, -0.30479, -0.23792, -0.16669, -0.09471, -0.01968, 0.05584, 0.13716, 0.22315, 0.31147, 0.40840, 0.51368, 0.62560, 0.75055, 0.89341, 0.95750, 1.02901, 1.10038, 1.18573, 1.23454, 1.28422, 1.33930, 1.40250, 1.46590, 1.54210, 1.62145, 1.72661, 1.78610, 1.85423, 1.93139, 2.01814, 2.10480, 2.21193, 2.28455, 2.36856, 2.46044, 2.57366, 2.66640, 2.76800],
        50: [-3.40363, -3.27902, -3.18259, -3.05004, -2.94944, -2.87058, -2.80459, -2.70102, -2.61530, -2.53001, -2.45910, -2.39682, -2.33967, -2.24875, -2.17390, -2.10740, -2.04720, -1.99403, -1.94522, -1.90116, -1.86058, -1.78784, -1.72377, -1.66429, -1.61011, -1.49275, -1.39268, -1.30419, -1.22260, -1.14832, -1.07800, -1.01270, -0.95055, -0.89040, -0.83239, -0.77506, -0.71962, -0.66331, -0.60610, -0.54778, -0.48751, -0.42408, -0.35940, -0.29251, -0.22347, -0.15396, -0.08214, -0.00797, 0.06957, 0.14978, 0.23550, 0.32380, 0.41939, 0.52129, 0.63438, 0.75867, 0.90683, 0.97234, 1.04431, 1.12094, 1.20681, 1.25420, 1.30659, 1.36154, 1.42360, 1.49321, 1.57315, 1.66184, 1.76503, 1.82611, 1.89332, 1.97583, 2.07085, 2.16410, 2.27962, 2.35146, 2.43727, 2.54541, 2.69538, 2.79507, 2.93048],
        100: [-3.33377, -3.21501, -3.12982, -3.00289, -2.90764, -2.83359, -2.77402, -2.67159, -2.59013, -2.50701, -2.44046, -2.38088, -2.32802, -2.24139, -2.16681, -2.10153, -2.04387, -1.99341, -1.94575, -1.90117, -1.86118, -1.78928, -1.72577, -1.66875, -1.61440, -1.49791, -1.39730, -1.30877, -1.22796, -1.15291, -1.08395, -1.01797, -0.95432, -0.89473, -0.83605, -0.77947, -0.72278, -0.66625, -0.60899, -0.55126, -0.49052, -0.42807, -0.36491, -0.29948, -0.23221, -0.16322, -0.09135, -0.01888, 0.05849, 0.13850, 0.22343, 0.31192, 0.40834, 0.50997, 0.62069, 0.74614, 0.89121, 0.95737, 1.02742, 1.10410, 1.18885, 1.23644, 1.28733, 1.34240, 1.40374, 1.47168, 1.54912, 1.63458, 1.73865, 1.79873, 1.86882, 1.94628, 2.03815, 2.13133, 2.24395, 2.31549, 2.39791, 2.50120, 2.63958, 2.73847, 2.86435],
        250: [-3.30565, -3.18513, -3.08965, -2.96571, -2.87690, -2.80594, -2.74662, -2.64716, -2.56833, -2.48847, -2.42055, -2.36233, -2.31519, -2.22611, -2.15147, -2.08956, -2.03186, -1.98265, -1.93857, -1.89705, -1.85825, -1.78720, -1.72394, -1.66655, -1.61536, -1.49878, -1.39916, -1.31027, -1.23001, -1.15600, -1.08774, -1.02310, -0.96087, -0.90025, -0.84207, -0.78500, -0.72761, -0.67100, -0.61488, -0.55653, -0.49658, -0.43532, -0.37061, -0.30441, -0.23593, -0.16629, -0.09449, -0.02087, 0.05580, 0.13753, 0.22151, 0.31027, 0.40441, 0.50543, 0.61734, 0.74285, 0.88783, 0.95215, 1.02421, 1.10228, 1.18837, 1.23526, 1.28476, 1.34032, 1.39854, 1.46615, 1.53930, 1.62560, 1.72632, 1.78529, 1.85235, 1.92869, 2.01845, 2.10856, 2.21233, 2.28039, 2.36110, 2.46671, 2.61249, 2.70225, 2.81996],
        500: [-3.28771, -3.17416, -3.09466, -2.97150, -2.88203, -2.81136, -2.74806, -2.64745, -2.57127, -2.49121, -2.42308, -2.36718, -2.31850, -2.23202, -2.16175, -2.09886, -2.04128, -1.99125, -1.94674, -1.90276, -1.86502, -1.79247, -1.72800, -1.67012, -1.61707, -1.50157, -1.40066, -1.31261, -1.23166, -1.15821, -1.08844, -1.02359, -0.96008, -0.90063, -0.84133, -0.78348, -0.72678, -0.67049, -0.61423, -0.55615, -0.49570, -0.43431, -0.36995, -0.30444, -0.23536, -0.16642, -0.09378, -0.01930, 0.05703, 0.13746, 0.22352, 0.31312, 0.40947, 0.51287, 0.62393, 0.74963, 0.89484, 0.95990, 1.03018, 1.10879, 1.19626, 1.24389, 1.29445, 1.35040, 1.41055, 1.47409, 1.54554, 1.63065, 1.73115, 1.78731, 1.85417, 1.93235, 2.02943, 2.11178, 2.22871, 2.30050, 2.37466, 2.47862, 2.61591, 2.70893, 2.84006],
        1000: [-3.31275, -3.18197, -3.08545, -2.97048, -2.88270, -2.80378, -2.74747, -2.64763, -2.56880, -2.49155, -2.42558, -2.36973, -2.32042, -2.23068, -2.15589, -2.09256, -2.03530, -1.98426, -1.93855, -1.89541, -1.85634, -1.78748, -1.72366, -1.66845, -1.61635, -1.49992, -1.40038, -1.31232, -1.23284, -1.15955, -1.08969, -1.02414, -0.96190, -0.90201, -0.84361, -0.78634, -0.73025, -0.67426, -0.61751, -0.56047, -0.50110, -0.43970, -0.37670, -0.31071, -0.24307, -0.17340, -0.10077, -0.02569, 0.05182, 0.13212, 0.21659, 0.30775, 0.40326, 0.50721, 0.61909, 0.74518, 0.88773, 0.95326, 1.02440, 1.10402, 1.18970, 1.23591, 1.28600, 1.33787, 1.39817, 1.46455, 1.53622, 1.62262, 1.72173, 1.77994, 1.84562, 1.92592, 2.01890, 2.10598, 2.20977, 2.27661, 2.35564, 2.45081, 2.58404, 2.67696, 2.80089],
        2500: [-3.30112, -3.19029, -3.09904, -2.97342, -2.87282, -2.79922, -2.74096, -2.64342, -2.57098, -2.49044, -2.42168, -2.36345, -2.31252, -2.22702, -2.15311, -2.09000, -2.03316, -1.98176, -1.93661, -1.89511, -1.85647, -1.78697, -1.72388, -1.66696, -1.61373, -1.50000, -1.40124, -1.31207, -1.23164, -1.15852, -1.08873, -1.02290, -0.96032, -0.90039, -0.84300, -0.78657, -0.73028, -0.67349, -0.61731, -0.55913, -0.49843, -0.43632, -0.37250, -0.30716, -0.23998, -0.16937, -0.09713, -0.02208, 0.05423, 0.13514, 0.22053, 0.30998, 0.40635, 0.51109, 0.62299, 0.74840, 0.89114, 0.95580, 1.02717, 1.10184, 1.18732, 1.23509, 1.28493, 1.33873, 1.40077, 1.46536, 1.53975, 1.62192, 1.72466, 1.78363, 1.85079, 1.92920, 2.01844, 2.10528, 2.21107, 2.28137, 2.36339, 2.45659, 2.57782, 2.67062, 2.78115],
    },
    'c': {
        0: [-4.08899, -3.98492, -3.90066, -3.79517, -3.70349, -3.64151, -3.58003, -3.48795, -3.41564, -3.34407, -3.28824, -3.23752, -3.19272, -3.11563, -3.05244, -2.99448, -2.94414, -2.89697, -2.85618, -2.81847, -2.78096, -2.71589, -2.66070, -2.60989, -2.56274, -2.45569, -2.36614, -2.28601, -2.21290, -2.14721, -2.08475, -2.02531, -1.96870, -1.91509, -1.86411, -1.81203, -1.76172, -1.71215, -1.66251, -1.61351, -1.56595, -1.51708, -1.46813, -1.41711, -1.36526, -1.31211, -1.25905, -1.20167, -1.14208, -1.07934, -1.01207, -0.93898, -0.85859, -0.77045, -0.67034, -0.55658, -0.42563, -0.36912, -0.30400, -0.23340, -0.15271, -0.10802, -0.06276, -0.01279, 0.03744, 0.09523, 0.16147, 0.24131, 0.34190, 0.39729, 0.46049, 0.53436, 0.62404, 0.70738, 0.80988, 0.87398, 0.95372, 1.03769, 1.16273, 1.26033, 1.39004],
        50: [-4.35402, -4.22388, -4.13065, -3.99423, -3.89435, -3.81826, -3.75105, -3.64724, -3.56220, -3.47770, -3.40933, -3.35104, -3.30231, -3.21368, -3.14102, -3.07698, -3.01947, -2.96958, -2.92305, -2.88199, -2.84258, -2.77116, -2.70718, -2.65082, -2.59768, -2.48334, -2.38722, -2.30102, -2.22440, -2.15482, -2.08928, -2.02786, -1.96828, -1.91166, -1.85677, -1.80421, -1.75240, -1.70147, -1.65210, -1.60224, -1.55234, -1.50324, -1.45250, -1.40183, -1.35055, -1.29718, -1.24188, -1.18543, -1.12506, -1.06074, -0.99174, -0.91750, -0.83619, -0.74741, -0.64967, -0.53629, -0.40590, -0.34593, -0.28171, -0.21015, -0.13137, -0.08747, -0.04011, 0.01152, 0.06689, 0.12794, 0.19897, 0.27740, 0.37459, 0.42963, 0.49179, 0.56292, 0.65227, 0.73471, 0.84745, 0.90815, 0.98769, 1.08858, 1.23342, 1.31436, 1.44481],
        100: [-4.23282, -4.11930, -4.02812, -3.89397, -3.79534, -3.72404, -3.66596, -3.57166, -3.49470, -3.41543, -3.35389, -3.29766, -3.24910, -3.16840, -3.09720, -3.03530, -2.98162, -2.93283, -2.88959, -2.84984, -2.81208, -2.74625, -2.68615, -2.63150, -2.58147, -2.47333, -2.38166, -2.29903, -2.22409, -2.15483, -2.08951, -2.02772, -1.96956, -1.91528, -1.86186, -1.80918, -1.75765, -1.70646, -1.65658, -1.60742, -1.55726, -1.50815, -1.45852, -1.40754, -1.35578, -1.30360, -1.24927, -1.19278, -1.13355, -1.07084, -1.00275, -0.93017, -0.85096, -0.76212, -0.66334, -0.55282, -0.42259, -0.36523, -0.30113, -0.23018, -0.15038, -0.10691, -0.05875, -0.00607, 0.04912, 0.11148, 0.18074, 0.25956, 0.35557, 0.41012, 0.46985, 0.54271, 0.63060, 0.71282, 0.81932, 0.88469, 0.96491, 1.06799, 1.18689, 1.27026, 1.39596],
        250: [-4.14422, -4.03989, -3.96138, -3.84371, -3.76060, -3.69317, -3.63453, -3.54108, -3.46631, -3.38826, -3.32375, -3.26847, -3.21986, -3.13818, -3.07069, -3.01073, -2.96058, -2.91540, -2.87400, -2.83450, -2.79794, -2.73211, -2.67259, -2.61980, -2.57192, -2.46685, -2.37385, -2.29264, -2.21908, -2.15133, -2.08705, -2.02786, -1.97135, -1.91662, -1.86288, -1.81146, -1.76200, -1.71198, -1.66247, -1.61307, -1.56479, -1.51602, -1.46723, -1.41649, -1.36492, -1.31292, -1.25919, -1.20237, -1.14253, -1.07967, -1.01138, -0.93929, -0.85980, -0.77198, -0.67283, -0.56151, -0.43186, -0.37367, -0.31027, -0.23947, -0.15860, -0.11537, -0.06871, -0.01921, 0.03368, 0.09545, 0.16518, 0.24413, 0.33560, 0.39018, 0.45336, 0.52254, 0.60862, 0.68718, 0.79332, 0.86391, 0.93807, 1.04002, 1.16709, 1.25491, 1.37091],
        500: [-4.09044, -3.99385, -3.91983, -3.80674, -3.72180, -3.65417, -3.60279, -3.51587, -3.44414, -3.37305, -3.31237, -3.26111, -3.21329, -3.13088, -3.06556, -3.00870, -2.95886, -2.91203, -2.87022, -2.83085, -2.79578, -2.73004, -2.67257, -2.61954, -2.57158, -2.46630, -2.37557, -2.29535, -2.22167, -2.15468, -2.09071, -2.03043, -1.97280, -1.91799, -1.86571, -1.81366, -1.76189, -1.71171, -1.66296, -1.61410, -1.56587, -1.51699, -1.46699, -1.41692, -1.36561, -1.31289, -1.25841, -1.20215, -1.14224, -1.07947, -1.01265, -0.93936, -0.86072, -0.77184, -0.67444, -0.56340, -0.43275, -0.37477, -0.31024, -0.23919, -0.16134, -0.11773, -0.07078, -0.01988, 0.03353, 0.09398, 0.16268, 0.24199, 0.33190, 0.38935, 0.45499, 0.52621, 0.61069, 0.68788, 0.78724, 0.85198, 0.92581, 1.01655, 1.14713, 1.23872, 1.35877],
        1000: [-4.09973, -3.99352, -3.92590, -3.80808, -3.72540, -3.65664, -3.60291, -3.51417, -3.44110, -3.36941, -3.30536, -3.25359, -3.20675, -3.12760, -3.06091, -3.00318, -2.95339, -2.90731, -2.86539, -2.82619, -2.79141, -2.72825, -2.66999, -2.61702, -2.56905, -2.46438, -2.37298, -2.29258, -2.21897, -2.14993, -2.08608, -2.02578, -1.96945, -1.91424, -1.86111, -1.80936, -1.75856, -1.70981, -1.66165, -1.61232, -1.56349, -1.51504, -1.46563, -1.41615, -1.36513, -1.31241, -1.25871, -1.20303, -1.14409, -1.08310, -1.01555, -0.94226, -0.86423, -0.77713, -0.67992, -0.57007, -0.44204, -0.38335, -0.32044, -0.24933, -0.17133, -0.12799, -0.08119, -0.03088, 0.02627, 0.08784, 0.15598, 0.23469, 0.32966, 0.38664, 0.44709, 0.52253, 0.60646, 0.69270, 0.79828, 0.85727, 0.93345, 1.03976, 1.16750, 1.24929, 1.36482],
        2500: [-4.09329, -3.98836, -3.91076, -3.80033, -3.71226, -3.64756, -3.58919, -3.49844, -3.42582, -3.35420, -3.29509, -3.24395, -3.19833, -3.12042, -3.05583, -2.99796, -2.94784, -2.90110, -2.85986, -2.82156, -2.78514, -2.72084, -2.66441, -2.61274, -2.56526, -2.45916, -2.36888, -2.28864, -2.21533, -2.14830, -2.08528, -2.02549, -1.96900, -1.91475, -1.86291, -1.81096, -1.76045, -1.71122, -1.66216, -1.61303, -1.56497, -1.51626, -1.46713, -1.41673, -1.36521, -1.31223, -1.25891, -1.20222, -1.14288, -1.08084, -1.01346, -0.94029, -0.86084, -0.77312, -0.67418, -0.56198, -0.43219, -0.37481, -0.31058, -0.23977, -0.16015, -0.11601, -0.07013, -0.02003, 0.03297, 0.09227, 0.15927, 0.23867, 0.33700, 0.39303, 0.45513, 0.52963, 0.61701, 0.70151, 0.80524, 0.86730, 0.94561, 1.03852, 1.16464, 1.25591, 1.37995],
    },
    'ct': {
        0: [-4.61707, -4.51703, -4.43930, -4.32326, -4.23851, -4.17445, -4.11735, -4.03000, -3.96299, -3.89063, -3.83041, -3.77462, -3.73126, -3.65642, -3.59290, -3.53491, -3.48452, -3.44286, -3.40115, -3.36633, -3.33287, -3.27144, -3.21766, -3.16678, -3.11921, -3.02043, -2.93174, -2.85316, -2.78207, -2.71940, -2.65808, -2.60186, -2.54998, -2.49752, -2.44769, -2.40196, -2.35527, -2.30928, -2.26335, -2.22001, -2.17598, -2.12995, -2.08521, -2.04069, -1.99530, -1.95030, -1.90328, -1.85551, -1.80576, -1.75420, -1.69840, -1.63989, -1.57654, -1.50959, -1.43262, -1.34430, -1.24230, -1.19357, -1.13997, -1.08066, -1.01249, -0.97466, -0.93098, -0.88793, -0.84252, -0.78463, -0.72038, -0.64698, -0.56483, -0.51522, -0.46256, -0.39933, -0.31862, -0.24112, -0.14481, -0.08570, -0.01949, 0.07172, 0.18726, 0.26610, 0.38326],
        50: [-4.96185, -4.81773, -4.71646, -4.57665, -4.47475, -4.39845, -4.33156, -4.23075, -4.14580, -4.06471, -3.99581, -3.93618, -3.88285, -3.79380, -3.71894, -3.65559, -3.60040, -3.54986, -3.50487, -3.46158, -3.42228, -3.35120, -3.28923, -3.23366, -3.18166, -3.06958, -2.97247, -2.88926, -2.81382, -2.74397, -2.67909, -2.61783, -2.56043, -2.50590, -2.45245, -2.40095, -2.35065, -2.30198, -2.25471, -2.20780, -2.16250, -2.11582, -2.07000, -2.02332, -1.97650, -1.92929, -1.88097, -1.83151, -1.78043, -1.72795, -1.67216, -1.61203, -1.54763, -1.47719, -1.39797, -1.30849, -1.20022, -1.14968, -1.09631, -1.03464, -0.96552, -0.92687, -0.88438, -0.84055, -0.79268, -0.73519, -0.67216, -0.60031, -0.51421, -0.46288, -0.40393, -0.33771, -0.25697, -0.17567, -0.07620, -0.01899, 0.05193, 0.14596, 0.26719, 0.36305, 0.49862],
        100: [-4.77955, -4.66089, -4.57456, -4.44658, -4.35823, -4.29199, -4.22985, -4.13084, -4.05454, -3.97757, -3.91175, -3.85698, -3.80811, -3.72405, -3.65471, -3.59461, -3.54178, -3.49554, -3.45169, -3.41377, -3.37704, -3.31179, -3.25345, -3.20007, -3.15238, -3.04508, -2.95387, -2.87471, -2.80288, -2.73669, -2.67359, -2.61439, -2.55809, -2.50487, -2.45347, -2.40478, -2.35591, -2.30887, -2.26188, -2.21550, -2.16973, -2.12434, -2.07853, -2.03216, -1.98589, -1.93936, -1.89191, -1.84337, -1.79194, -1.73850, -1.68363, -1.62415, -1.56096, -1.49203, -1.41405, -1.32581, -1.22002, -1.17146, -1.11782, -1.05706, -0.98904, -0.94924, -0.90749, -0.86230, -0.81268, -0.75770, -0.69706, -0.62287, -0.53535, -0.48500, -0.42518, -0.35935, -0.28096, -0.20501, -0.10386, -0.04841, 0.02155, 0.11063, 0.23336, 0.31205, 0.43100],
        250: [-4.66008, -4.55985, -4.48377, -4.36714, -4.27784, -4.20802, -4.15367, -4.06228, -3.98998, -3.91836, -3.85874, -3.80766, -3.76497, -3.68672, -3.62212, -3.56403, -3.51380, -3.46916, -3.42781, -3.38966, -3.35568, -3.29227, -3.23669, -3.18483, -3.13720, -3.03506, -2.94655, -2.86793, -2.79700, -2.73067, -2.66864, -2.61147, -2.55714, -2.50478, -2.45391, -2.40477, -2.35731, -2.31105, -2.26523, -2.21995, -2.17561, -2.13105, -2.08587, -2.04053, -1.99452, -1.94851, -1.90151, -1.85339, -1.80398, -1.75179, -1.69739, -1.63880, -1.57549, -1.50651, -1.43016, -1.34149, -1.23660, -1.18805, -1.13541, -1.07512, -1.00779, -0.97091, -0.92968, -0.88382, -0.83503, -0.77924, -0.71610, -0.64161, -0.55797, -0.50880, -0.45151, -0.38269, -0.30560, -0.22795, -0.13090, -0.07404, -0.00413, 0.09458, 0.23031, 0.31641, 0.42696],
        500: [-4.63259, -4.52358, -4.44514, -4.33488, -4.25806, -4.19429, -4.14119, -4.04946, -3.97917, -3.90824, -3.84784, -3.79439, -3.75114, -3.67653, -3.61347, -3.55903, -3.50829, -3.46326, -3.42325, -3.38694, -3.35317, -3.28990, -3.23273, -3.18231, -3.13619, -3.03471, -2.94626, -2.86796, -2.79837, -2.73301, -2.67217, -2.61636, -2.56199, -2.50992, -2.46018, -2.41221, -2.36466, -2.31822, -2.27238, -2.22751, -2.18256, -2.13761, -2.09272, -2.04691, -2.00273, -1.95659, -1.90968, -1.86102, -1.81119, -1.75891, -1.70313, -1.64362, -1.58067, -1.51265, -1.43544, -1.34793, -1.24312, -1.19580, -1.14184, -1.08136, -1.01405, -0.97622, -0.93451, -0.88987, -0.84172, -0.78750, -0.72419, -0.65207, -0.56630, -0.51718, -0.45853, -0.39225, -0.31264, -0.24070, -0.15218, -0.08822, -0.01529, 0.06984, 0.19005, 0.27905, 0.40480],
        1000: [-4.60229, -4.49970, -4.41854, -4.31723, -4.23491, -4.17639, -4.12083, -4.03367, -3.96244, -3.89376, -3.83613, -3.78703, -3.74354, -3.66968, -3.60495, -3.54982, -3.50270, -3.45636, -3.41651, -3.37905, -3.34438, -3.28230, -3.22634, -3.17745, -3.13246, -3.03016, -2.94228, -2.86586, -2.79656, -2.73209, -2.67106, -2.61396, -2.55967, -2.50799, -2.45773, -2.40859, -2.36078, -2.31503, -2.26914, -2.22317, -2.17773, -2.13357, -2.08899, -2.04430, -1.99873, -1.95341, -1.90596, -1.85765, -1.80726, -1.75516, -1.70064, -1.64225, -1.57920, -1.51016, -1.43337, -1.34502, -1.24041, -1.19236, -1.13904, -1.07960, -1.01223, -0.97570, -0.93492, -0.88845, -0.83988, -0.78774, -0.72890, -0.65968, -0.57319, -0.52523, -0.46794, -0.40346, -0.33141, -0.25899, -0.16197, -0.10577, -0.03539, 0.05339, 0.17773, 0.25934, 0.38113],
        2500: [-4.61116, -4.51010, -4.43100, -4.32085, -4.23707, -4.17522, -4.11874, -4.03147, -3.96277, -3.89188, -3.83270, -3.77958, -3.73617, -3.66172, -3.59772, -3.54087, -3.49179, -3.44826, -3.40730, -3.37142, -3.33747, -3.27578, -3.22113, -3.17105, -3.12451, -3.02432, -2.93595, -2.85824, -2.78786, -2.72447, -2.66327, -2.60670, -2.55386, -2.50170, -2.45171, -2.40461, -2.35748, -2.31158, -2.26567, -2.22128, -2.17668, -2.13140, -2.08673, -2.04213, -1.99668, -1.95155, -1.90435, -1.85636, -1.80636, -1.75458, -1.69930, -1.64083, -1.57761, -1.50982, -1.43292, -1.34458, -1.24154, -1.19308, -1.13960, -1.08023, -1.01239, -0.97508, -0.93256, -0.88814, -0.84147, -0.78587, -0.72379, -0.65206, -0.56817, -0.51922, -0.46471, -0.40098, -0.32373, -0.24827, -0.15167, -0.09373, -0.02585, 0.06439, 0.18345, 0.26340, 0.38241],
    },
}
