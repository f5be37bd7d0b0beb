// Embedded H2+ Born-Oppenheimer tables (1s sigma_g, 2p sigma_u).
// Generated by tools/make_h2plus_tables.py -- do not edit by hand.
// Exact two-center eigenvalues; energies in eV referenced to the
// neutral H2 ground state (shared asymptote at 18.1 eV).

#include "atl/potential_tables.hpp"

namespace atl::potentials::tables {

// 259 points, R in [0.5, 100] a.u.
const std::size_t kNumPoints = 259;

const double kRGrid[] = {
    0.500000, 0.525000, 0.550000, 0.575000, 0.600000, 0.625000,
    0.650000, 0.675000, 0.700000, 0.725000, 0.750000, 0.775000,
    0.800000, 0.825000, 0.850000, 0.875000, 0.900000, 0.925000,
    0.950000, 0.975000, 1.000000, 1.050000, 1.100000, 1.150000,
    1.200000, 1.250000, 1.300000, 1.350000, 1.400000, 1.450000,
    1.500000, 1.550000, 1.600000, 1.650000, 1.700000, 1.750000,
    1.800000, 1.850000, 1.900000, 1.950000, 2.000000, 2.050000,
    2.100000, 2.150000, 2.200000, 2.250000, 2.300000, 2.350000,
    2.400000, 2.450000, 2.500000, 2.550000, 2.600000, 2.650000,
    2.700000, 2.750000, 2.800000, 2.850000, 2.900000, 2.950000,
    3.000000, 3.050000, 3.100000, 3.150000, 3.200000, 3.250000,
    3.300000, 3.350000, 3.400000, 3.450000, 3.500000, 3.550000,
    3.600000, 3.650000, 3.700000, 3.750000, 3.800000, 3.850000,
    3.900000, 3.950000, 4.000000, 4.050000, 4.100000, 4.150000,
    4.200000, 4.250000, 4.300000, 4.350000, 4.400000, 4.450000,
    4.500000, 4.550000, 4.600000, 4.650000, 4.700000, 4.750000,
    4.800000, 4.850000, 4.900000, 4.950000, 5.000000, 5.050000,
    5.100000, 5.150000, 5.200000, 5.250000, 5.300000, 5.350000,
    5.400000, 5.450000, 5.500000, 5.550000, 5.600000, 5.650000,
    5.700000, 5.750000, 5.800000, 5.850000, 5.900000, 5.950000,
    6.000000, 6.100000, 6.200000, 6.300000, 6.400000, 6.500000,
    6.600000, 6.700000, 6.800000, 6.900000, 7.000000, 7.100000,
    7.200000, 7.300000, 7.400000, 7.500000, 7.600000, 7.700000,
    7.800000, 7.900000, 8.000000, 8.100000, 8.200000, 8.300000,
    8.400000, 8.500000, 8.600000, 8.700000, 8.800000, 8.900000,
    9.000000, 9.100000, 9.200000, 9.300000, 9.400000, 9.500000,
    9.600000, 9.700000, 9.800000, 9.900000, 10.000000, 10.100000,
    10.200000, 10.300000, 10.400000, 10.500000, 10.600000, 10.700000,
    10.800000, 10.900000, 11.000000, 11.100000, 11.200000, 11.300000,
    11.400000, 11.500000, 11.600000, 11.700000, 11.800000, 11.900000,
    12.000000, 12.250000, 12.500000, 12.750000, 13.000000, 13.250000,
    13.500000, 13.750000, 14.000000, 14.250000, 14.500000, 14.750000,
    15.000000, 15.250000, 15.500000, 15.750000, 16.000000, 16.250000,
    16.500000, 16.750000, 17.000000, 17.250000, 17.500000, 17.750000,
    18.000000, 18.250000, 18.500000, 18.750000, 19.000000, 19.250000,
    19.500000, 19.750000, 20.000000, 20.500000, 21.000000, 21.500000,
    22.000000, 22.500000, 23.000000, 23.500000, 24.000000, 24.500000,
    25.000000, 25.500000, 26.000000, 26.500000, 27.000000, 27.500000,
    28.000000, 28.500000, 29.000000, 29.500000, 30.000000, 31.000000,
    32.000000, 33.000000, 34.000000, 35.000000, 36.000000, 37.000000,
    38.000000, 39.000000, 40.000000, 42.500000, 45.000000, 47.500000,
    50.000000, 52.500000, 55.000000, 57.500000, 60.000000, 65.000000,
    70.000000, 75.000000, 80.000000, 85.000000, 90.000000, 95.000000,
    100.000000,
};

const double kGroundSigmaG[] = {
    38.917037016, 36.764643960, 34.843338998, 33.121969802, 31.574587364, 30.179409635,
    28.918023304, 27.774762175, 26.736218144, 25.790852872, 24.928686769, 24.141047883,
    23.420367669, 22.760013712, 22.154151859, 21.597631881, 21.085892130, 20.614879602,
    20.180982590, 19.780973675, 19.411961249, 18.756796092, 18.197638071, 17.719899466,
    17.311563023, 16.962657449, 16.664854567, 16.411156619, 16.195651187, 16.013317407,
    15.859871459, 15.731642462, 15.625472060, 15.538632662, 15.468760461, 15.413800237,
    15.371959640, 15.341671122, 15.321560104, 15.310418219, 15.307180747, 15.310907495,
    15.320766539, 15.336020362, 15.356013972, 15.380164706, 15.407953445, 15.438917023,
    15.472641647, 15.508757188, 15.546932203, 15.586869596, 15.628302811, 15.670992508,
    15.714723633, 15.759302837, 15.804556207, 15.850327254, 15.896475133, 15.942873067,
    15.989406948, 16.035974083, 16.082482089, 16.128847899, 16.174996879, 16.220862029,
    16.266383280, 16.311506852, 16.356184683, 16.400373915, 16.444036428, 16.487138425,
    16.529650052, 16.571545060, 16.612800492, 16.653396410, 16.693315635, 16.732543523,
    16.771067752, 16.808878131, 16.845966429, 16.882326217, 16.917952722, 16.952842692,
    16.986994280, 17.020406929, 17.053081271, 17.085019031, 17.116222941, 17.146696662,
    17.176444704, 17.205472363, 17.233785653, 17.261391247, 17.288296424, 17.314509011,
    17.340037344, 17.364890211, 17.389076819, 17.412606748, 17.435489916, 17.457736542,
    17.479357112, 17.500362350, 17.520763184, 17.540570720, 17.559796213, 17.578451047,
    17.596546704, 17.614094744, 17.631106784, 17.647594478, 17.663569494, 17.679043503,
    17.694028152, 17.708535057, 17.722575780, 17.736161822, 17.749304602, 17.762015452,
    17.774305599, 17.797668117, 17.819479533, 17.839824966, 17.858787037, 17.876445673,
    17.892877949, 17.908157967, 17.922356776, 17.935542316, 17.947779390, 17.959129666,
    17.969651701, 17.979400976, 17.988429958, 17.996788172, 18.004522280, 18.011676176,
    18.018291089, 18.024405681, 18.030056163, 18.035276401, 18.040098035, 18.044550585,
    18.048661568, 18.052456607, 18.055959535, 18.059192506, 18.062176091, 18.064929378,
    18.067470069, 18.069814563, 18.071978046, 18.073974573, 18.075817144, 18.077517775,
    18.079087568, 18.080536779, 18.081874874, 18.083110589, 18.084251983, 18.085306485,
    18.086280949, 18.087181685, 18.088014513, 18.088784789, 18.089497449, 18.090157037,
    18.090767734, 18.091333392, 18.091857553, 18.092343478, 18.092794167, 18.093212380,
    18.093600656, 18.093961330, 18.094296552, 18.094608297, 18.094898383, 18.095168483,
    18.095420133, 18.095977555, 18.096447394, 18.096845234, 18.097183737, 18.097473201,
    18.097722009, 18.097936999, 18.098123752, 18.098286836, 18.098429996, 18.098556310,
    18.098668314, 18.098768105, 18.098857421, 18.098937707, 18.099010171, 18.099075827,
    18.099135525, 18.099189987, 18.099239825, 18.099285561, 18.099327642, 18.099366453,
    18.099402330, 18.099435561, 18.099466399, 18.099495067, 18.099521761, 18.099546654,
    18.099569899, 18.099591634, 18.099611981, 18.099648943, 18.099681544, 18.099710405,
    18.099736042, 18.099758885, 18.099779297, 18.099797586, 18.099814013, 18.099828803,
    18.099842148, 18.099854216, 18.099865150, 18.099875077, 18.099884106, 18.099892333,
    18.099899842, 18.099906707, 18.099912994, 18.099918759, 18.099924054, 18.099933410,
    18.099941368, 18.099948171, 18.099954014, 18.099959056, 18.099963426, 18.099967227,
    18.099970546, 18.099973455, 18.099976014, 18.099981181, 18.099985027, 18.099987937,
    18.099990172, 18.099991911, 18.099993281, 18.099994371, 18.099995247, 18.099996539,
    18.099997415, 18.099998026, 18.099998461, 18.099998778, 18.099999012, 18.099999187,
    18.099999320,
};

const double kExcitedSigmaU[] = {
    72.063295575, 69.424535221, 67.019141589, 64.816417196, 62.790791492, 60.920796713,
    59.188280076, 57.577791021, 56.076099721, 54.671815164, 53.355079554, 52.117321784,
    50.951057049, 49.849722796, 48.807543524, 47.819418654, 46.880828982, 45.987758186,
    45.136626628, 44.324235227, 43.547717659, 42.092262871, 40.752569264, 39.514173892,
    38.365153309, 37.295596467, 36.297198051, 35.362941925, 34.486852932, 33.663801130,
    32.889346643, 32.159616230, 31.471204738, 30.821096184, 30.206600370, 29.625301807,
    29.075018412, 28.553767983, 28.059740860, 27.591277512, 27.146850067, 26.725046984,
    26.324560243, 25.944174566, 25.582758269, 25.239255434, 24.912679158, 24.602105686,
    24.306669264, 24.025557593, 23.758007792, 23.503302771, 23.260767978, 23.029768440,
    22.809706080, 22.600017260, 22.400170524, 22.209664530, 22.028026131, 21.854808605,
    21.689590016, 21.531971685, 21.381576776, 21.238048971, 21.101051240, 20.970264690,
    20.845387492, 20.726133878, 20.612233198, 20.503429044, 20.399478427, 20.300151001,
    20.205228346, 20.114503285, 20.027779252, 19.944869691, 19.865597499, 19.789794498,
    19.717300943, 19.647965054, 19.581642583, 19.518196402, 19.457496116, 19.399417703,
    19.343843170, 19.290660232, 19.239762011, 19.191046745, 19.144417527, 19.099782048,
    19.057052355, 19.016144633, 18.976978988, 18.939479246, 18.903572768, 18.869190266,
    18.836265640, 18.804735815, 18.774540592, 18.745622504, 18.717926683, 18.691400734,
    18.665994612, 18.641660508, 18.618352744, 18.596027668, 18.574643558, 18.554160532,
    18.534540459, 18.515746876, 18.497744912, 18.480501215, 18.463983876, 18.448162368,
    18.433007480, 18.418491257, 18.404586943, 18.391268928, 18.378512692, 18.366294761,
    18.354592658, 18.332650745, 18.312525435, 18.294068533, 18.277144019, 18.261627016,
    18.247402844, 18.234366164, 18.222420196, 18.211476008, 18.201451870, 18.192272655,
    18.183869305, 18.176178330, 18.169141361, 18.162704730, 18.156819094, 18.151439085,
    18.146522991, 18.142032463, 18.137932247, 18.134189935, 18.130775738, 18.127662277,
    18.124824392, 18.122238965, 18.119884758, 18.117742259, 18.115793550, 18.114022176,
    18.112413032, 18.110952250, 18.109627105, 18.108425920, 18.107337983, 18.106353472,
    18.105463378, 18.104659445, 18.103934106, 18.103280428, 18.102692060, 18.102163188,
    18.101688487, 18.101263086, 18.100882528, 18.100542735, 18.100239979, 18.099970854,
    18.099732245, 18.099521308, 18.099335447, 18.099172290, 18.099029675, 18.098905629,
    18.098798352, 18.098706207, 18.098627698, 18.098561466, 18.098506274, 18.098460995,
    18.098424605, 18.098366622, 18.098346258, 18.098353831, 18.098381786, 18.098424256,
    18.098476708, 18.098535665, 18.098598480, 18.098663159, 18.098728217, 18.098792565,
    18.098855423, 18.098916249, 18.098974681, 18.099030498, 18.099083580, 18.099133887,
    18.099181435, 18.099226281, 18.099268510, 18.099308227, 18.099345549, 18.099380598,
    18.099413499, 18.099444380, 18.099473361, 18.099500562, 18.099526097, 18.099550075,
    18.099572597, 18.099593762, 18.099613660, 18.099649987, 18.099682192, 18.099710807,
    18.099736291, 18.099759040, 18.099779393, 18.099797645, 18.099814050, 18.099828825,
    18.099842162, 18.099854224, 18.099865156, 18.099875081, 18.099884108, 18.099892335,
    18.099899843, 18.099906708, 18.099912994, 18.099918759, 18.099924054, 18.099933410,
    18.099941368, 18.099948171, 18.099954014, 18.099959056, 18.099963426, 18.099967227,
    18.099970546, 18.099973455, 18.099976014, 18.099981181, 18.099985027, 18.099987937,
    18.099990172, 18.099991911, 18.099993281, 18.099994371, 18.099995247, 18.099996539,
    18.099997415, 18.099998026, 18.099998461, 18.099998778, 18.099999012, 18.099999187,
    18.099999320,
};

}  // namespace atl::potentials::tables
