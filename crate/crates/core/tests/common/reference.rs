//! Frozen reference values computed offline with 40-digit arithmetic
//! (mpmath `gamma`, `hyp2f1`, `ellipk`).

pub const GAMMA: &[(f64, f64)] = &[
    (0.050000000000000002776, 19.470085311255511756),
    (0.10000000000000000555, 9.5135076986687312858),
    (0.33333333333333333333, 2.6789385347077476337),
    (0.5, 1.7724538509055160273),
    (0.75, 1.2254167024651776451),
    (1.5, 0.88622692545275801365),
    (2.5, 1.3293403881791370205),
    (3.7000000000000001776, 4.1706517837966040301),
    (7.25, 1155.3810139199896872),
    (12.5, 136843365.46556585726),
    (20.0, 121645100408832000.0),
    (33.299999999999997158, 7.4875775965226323274e+35),
    (47.899999999999998579, 1.758098216825712848e+59),
    (60.0, 1.3868311854568983574e+80),
    (-0.5, -3.5449077018110320546),
    (-1.5, 2.3632718012073547031),
    (-2.25, -1.7428148657282526509),
];

pub const HYP2F1: &[(f64, f64, f64, f64, f64)] = &[
    (
        1.3333333333333333,
        3.0,
        2.6666666666666665,
        0.1,
        1.1716571374930838802,
    ),
    (
        1.3333333333333333,
        3.0,
        2.6666666666666665,
        0.3,
        1.714866592769805444,
    ),
    (
        1.3333333333333333,
        3.0,
        2.6666666666666665,
        0.5,
        2.8745661769219895058,
    ),
    (
        1.3333333333333333,
        3.0,
        2.6666666666666665,
        0.51,
        2.9658113343899905852,
    ),
    (
        1.3333333333333333,
        3.0,
        2.6666666666666665,
        0.7,
        6.3829758891804885871,
    ),
    (
        1.3333333333333333,
        3.0,
        2.6666666666666665,
        0.9,
        37.117717023357770767,
    ),
    (
        1.3333333333333333,
        3.0,
        2.6666666666666665,
        0.99,
        1648.6461367244840323,
    ),
    (
        1.3333333333333333,
        3.0,
        2.6666666666666665,
        0.999,
        76101.307511256470852,
    ),
    (
        1.3333333333333333,
        3.0,
        2.6666666666666665,
        0.9999,
        3530231.8348347511292,
    ),
    (
        1.3333333333333333,
        -0.3333333333333333,
        2.6666666666666665,
        0.1,
        0.98296500873186718921,
    ),
    (
        1.3333333333333333,
        -0.3333333333333333,
        2.6666666666666665,
        0.3,
        0.9463687840217656155,
    ),
    (
        1.3333333333333333,
        -0.3333333333333333,
        2.6666666666666665,
        0.5,
        0.90543160890496118303,
    ),
    (
        1.3333333333333333,
        -0.3333333333333333,
        2.6666666666666665,
        0.51,
        0.90324102301092322071,
    ),
    (
        1.3333333333333333,
        -0.3333333333333333,
        2.6666666666666665,
        0.7,
        0.85814095340800161396,
    ),
    (
        1.3333333333333333,
        -0.3333333333333333,
        2.6666666666666665,
        0.9,
        0.79967697169908937754,
    ),
    (
        1.3333333333333333,
        -0.3333333333333333,
        2.6666666666666665,
        0.99,
        0.76523374987992214852,
    ),
    (
        1.3333333333333333,
        -0.3333333333333333,
        2.6666666666666665,
        0.999,
        0.76101307511256553974,
    ),
    (
        1.3333333333333333,
        -0.3333333333333333,
        2.6666666666666665,
        0.9999,
        0.76056539288214948634,
    ),
    (2.0, 1.0, 4.0, 0.1, 1.0532154477379733746),
    (2.0, 1.0, 4.0, 0.3, 1.1838976095305188274),
    (2.0, 1.0, 4.0, 0.5, 1.364467666561312574),
    (2.0, 1.0, 4.0, 0.51, 1.3754237031025292934),
    (2.0, 1.0, 4.0, 0.7, 1.6409590443536885893),
    (2.0, 1.0, 4.0, 0.9, 2.1789423102929666103),
    (2.0, 1.0, 4.0, 0.99, 2.8067531645819632902),
    (2.0, 1.0, 4.0, 0.999, 2.967443900663840585),
    (2.0, 1.0, 4.0, 0.9999, 2.995372287604922955),
    (1.0, 1.0, 2.0, 0.1, 1.0536051565782630155),
    (1.0, 1.0, 2.0, 0.3, 1.1889164797957745875),
    (1.0, 1.0, 2.0, 0.5, 1.3862943611198906188),
    (1.0, 1.0, 2.0, 0.51, 1.3987252703479701246),
    (1.0, 1.0, 2.0, 0.7, 1.7199611490370513157),
    (1.0, 1.0, 2.0, 0.9, 2.5584278811044953881),
    (1.0, 1.0, 2.0, 0.99, 4.6516870565536267891),
    (1.0, 1.0, 2.0, 0.999, 6.9146699489310672373),
    (1.0, 1.0, 2.0, 0.9999, 9.2112614981261053793),
    (1.5, -2.0, 3.0, 0.1, 0.9031249999999999948),
    (1.5, -2.0, 3.0, 0.3, 0.72812500000000000902),
    (1.5, -2.0, 3.0, 0.5, 0.578125),
    (1.5, -2.0, 3.0, 0.51, 0.57128124999999999395),
    (1.5, -2.0, 3.0, 0.7, 0.45312500000000002498),
    (1.5, -2.0, 3.0, 0.9, 0.35312499999999999029),
    (1.5, -2.0, 3.0, 0.99, 0.31628125000000000339),
    (1.5, -2.0, 3.0, 0.999, 0.31287531250000000033),
    (1.5, -2.0, 3.0, 0.9999, 0.31253750312499999587),
    (
        1.3333333333333333,
        -0.33333333333333326,
        2.6666666666666665,
        0.1,
        0.98296500873186719202,
    ),
    (
        1.3333333333333333,
        -0.33333333333333326,
        2.6666666666666665,
        0.3,
        0.94636878402176562411,
    ),
    (
        1.3333333333333333,
        -0.33333333333333326,
        2.6666666666666665,
        0.5,
        0.90543160890496119775,
    ),
    (
        1.3333333333333333,
        -0.33333333333333326,
        2.6666666666666665,
        0.51,
        0.90324102301092323574,
    ),
    (
        1.3333333333333333,
        -0.33333333333333326,
        2.6666666666666665,
        0.7,
        0.85814095340800163513,
    ),
    (
        1.3333333333333333,
        -0.33333333333333326,
        2.6666666666666665,
        0.9,
        0.79967697169908940552,
    ),
    (
        1.3333333333333333,
        -0.33333333333333326,
        2.6666666666666665,
        0.99,
        0.76523374987992217952,
    ),
    (
        1.3333333333333333,
        -0.33333333333333326,
        2.6666666666666665,
        0.999,
        0.761013075112565571,
    ),
    (
        1.3333333333333333,
        -0.33333333333333326,
        2.6666666666666665,
        0.9999,
        0.76056539288214951763,
    ),
    (2.0, 0.0, 3.0, 0.1, 1.0),
    (2.0, 0.0, 3.0, 0.3, 1.0),
    (2.0, 0.0, 3.0, 0.5, 1.0),
    (2.0, 0.0, 3.0, 0.51, 1.0),
    (2.0, 0.0, 3.0, 0.7, 1.0),
    (2.0, 0.0, 3.0, 0.9, 1.0),
    (2.0, 0.0, 3.0, 0.99, 1.0),
    (2.0, 0.0, 3.0, 0.999, 1.0),
    (2.0, 0.0, 3.0, 0.9999, 1.0),
    (
        2.0,
        -0.33333333333333326,
        3.333333333333333,
        0.1,
        0.97951815363021217348,
    ),
    (
        2.0,
        -0.33333333333333326,
        3.333333333333333,
        0.3,
        0.93522651804263986001,
    ),
    (
        2.0,
        -0.33333333333333326,
        3.333333333333333,
        0.5,
        0.88513919293884869606,
    ),
    (
        2.0,
        -0.33333333333333326,
        3.333333333333333,
        0.51,
        0.88244062933597546441,
    ),
    (
        2.0,
        -0.33333333333333326,
        3.333333333333333,
        0.7,
        0.82639277119592823194,
    ),
    (
        2.0,
        -0.33333333333333326,
        3.333333333333333,
        0.9,
        0.75192263758930776109,
    ),
    (
        2.0,
        -0.33333333333333326,
        3.333333333333333,
        0.99,
        0.70643397401908760789,
    ),
    (
        2.0,
        -0.33333333333333326,
        3.333333333333333,
        0.999,
        0.70068558460257232274,
    ),
    (
        2.0,
        -0.33333333333333326,
        3.333333333333333,
        0.9999,
        0.70006966570163531436,
    ),
    (0.5, 0.5, 1.0, 0.1, 1.0265120443783419232),
    (0.5, 0.5, 1.0, 0.3, 1.0910959103627815623),
    (0.5, 0.5, 1.0, 0.5, 1.180340599016096226),
    (0.5, 0.5, 1.0, 0.51, 1.1857939635836370978),
    (0.5, 0.5, 1.0, 0.7, 1.3212172067699615866),
    (0.5, 0.5, 1.0, 0.9, 1.6412644143423707998),
    (0.5, 0.5, 1.0, 0.99, 2.3527158167797423215),
    (0.5, 0.5, 1.0, 0.999, 3.0819607086988160164),
    (0.5, 0.5, 1.0, 0.9999, 3.8143642420736259199),
    (5.0, 7.0, 3.5, 0.1, 2.821103399501089581),
    (5.0, 7.0, 3.5, 0.3, 30.446655377058305403),
    (5.0, 7.0, 3.5, 0.5, 652.00159704145647414),
    (5.0, 7.0, 3.5, 0.51, 781.47536041528178058),
    (5.0, 7.0, 3.5, 0.7, 59797.914794298141074),
    (5.0, 7.0, 3.5, 0.9, 794374199.89796631626),
    (5.0, 7.0, 3.5, 0.99, 268027120052601193.56),
    (5.0, 7.0, 3.5, 0.999, 8.5294781891761402099e+25),
    (5.0, 7.0, 3.5, 0.9999, 2.6989581158344008032e+34),
    (25.0, 29.0, 1.5, 0.1, 13381822.888681864022),
    (25.0, 29.0, 1.5, 0.3, 19807344003541215.859),
    (25.0, 29.0, 1.5, 0.5, 1.2075487518927470479e+26),
    (25.0, 29.0, 1.5, 0.51, 4.2810724911662323578e+26),
    (25.0, 29.0, 1.5, 0.7, 2.0661149077818280559e+39),
    (25.0, 29.0, 1.5, 0.9, 4.4867090528253501305e+65),
    (25.0, 29.0, 1.5, 0.99, 4.6089327964760993281e+118),
    (25.0, 29.0, 1.5, 0.999, 1.6324858378359142109e+171),
    (25.0, 29.0, 1.5, 0.9999, 5.221030268809133725e+223),
    (-2.5, 10.0, 4.0, 0.1, 0.47460319500243659889),
    (-2.5, 10.0, 4.0, 0.3, -0.047450657437319666436),
    (-2.5, 10.0, 4.0, 0.5, -0.047385838256307623785),
    (-2.5, 10.0, 4.0, 0.51, -0.038636940400828438715),
    (-2.5, 10.0, 4.0, 0.7, 0.14789156748122965139),
    (-2.5, 10.0, 4.0, 0.9, -0.78304610149462517603),
    (-2.5, 10.0, 4.0, 0.99, -685.51644495919161365),
    (-2.5, 10.0, 4.0, 0.999, -1867233.7788662538716),
    (-2.5, 10.0, 4.0, 0.9999, -5821951464.9256484998),
    (3.0, -2.7, -1.5, 0.1, 1.8187443654526913111),
    (3.0, -2.7, -1.5, 0.3, 3.3410163828298991155),
    (3.0, -2.7, -1.5, 0.5, -0.51683047844930527156),
    (3.0, -2.7, -1.5, 0.51, -1.0143256971513816487),
    (3.0, -2.7, -1.5, 0.7, -22.112490011135068664),
    (3.0, -2.7, -1.5, 0.9, -148.6529595429876912),
    (3.0, -2.7, -1.5, 0.99, -5096.3359247657497169),
    (3.0, -2.7, -1.5, 0.999, -299011.43638780219599),
    (3.0, -2.7, -1.5, 0.9999, -18746478.544980750253),
    (12.3, -2.2, 0.7, 0.1, -1.1212445094073744854),
    (12.3, -2.2, 0.7, 0.3, 3.290932661354421175),
    (12.3, -2.2, 0.7, 0.5, 8.0394357394092828559),
    (12.3, -2.2, 0.7, 0.51, 7.446382658142110677),
    (12.3, -2.2, 0.7, 0.7, -261.46006369815026841),
    (12.3, -2.2, 0.7, 0.9, -2630542.1287326357589),
    (12.3, -2.2, 0.7, 0.99, -4443638989736719.8749),
    (12.3, -2.2, 0.7, 0.999, -1.0763353522412991567e+25),
    (12.3, -2.2, 0.7, 0.9999, -2.6938965867767883524e+34),
    (1.4022, 15.5028, 18.91, 0.99, 15.909557203848822605),
    (15.076, 11.6535, 0.2517, 0.9999, 1.1673141643436126234e+114),
    (4.611, 5.8815, 2.4867, 0.1, 3.0246505585604060474),
    (19.6659, 21.5616, 16.8548, 0.9, 4.3172039234780683774e+24),
    (15.5919, 18.9237, 28.4325, 0.9, 613917255.19675642393),
    (16.533, 12.3895, 11.2256, 0.99, 3.861403557865555441e+35),
    (8.4589, 13.5283, 4.6387, 0.1, 11.730484710652436922),
    (12.6728, 15.347, 7.3515, 0.5, 12627707.950925501954),
    (22.2184, 5.3162, 25.2817, 0.9999, 454594895719.57637857),
    (1.9256, 0.0904, 23.186, 0.99, 1.0079792954049096044),
    (11.7317, -0.4378, 28.2876, 0.3, 0.94337684836000447203),
    (2.2502, 7.0785, 8.2827, 0.3, 1.9620912036477131807),
    (12.3402, 16.7291, 17.7034, 0.3, 63.305195908858940912),
    (7.6744, 0.0176, -0.9227, 0.3, -7.2422527306281830589),
    (9.7344, 19.6819, -0.8568, 0.5, -192806666366047566.78),
    (10.4615, 13.7378, 20.4309, 0.7, 2229.0948793081710091),
    (17.3404, 7.4638, 11.5283, 0.5, 3509.50469586685527),
    (13.8684, 24.1705, 11.5495, 0.9, 1.4257054672159236542e+27),
    (3.8616, 12.629, 18.3966, 0.1, 1.3176156804562923012),
    (11.8659, 26.2158, 10.0109, 0.99, 7.8036831812575759762e+56),
    (-1.6703, 26.8715, 19.4487, 0.7, -0.012602110478498840633),
    (19.7968, 18.6418, 10.809, 0.3, 91679.211051822980681),
    (
        12.7745,
        27.7189,
        10.3113,
        0.9999,
        5.5246576326748948935e+121,
    ),
    (18.3221, 7.315, 21.6516, 0.1, 1.9132964210788308489),
    (5.0461, 24.7847, 29.2109, 0.9, 3474.3744230022583914),
    (-2.9432, 10.474, 28.3109, 0.51, 0.54526051434851470867),
    (14.3921, 4.9077, -1.6474, 0.51, 1426470677584.2223254),
    (15.246, 11.3376, 6.9638, 0.51, 7647338.0327784247785),
    (12.9262, 18.475, 26.7605, 0.3, 22.096678807266663998),
    (-2.512, 5.5064, 3.0536, 0.9999, -0.15443448699170575645),
    (14.2786, 27.1122, 26.3575, 0.1, 4.7044255661313716604),
    (1.5678, 27.519, 24.2723, 0.9, 217.58867713363625599),
    (3.8593, 0.4304, 10.9815, 0.51, 1.0912847493892862954),
    (21.1968, 29.7626, 19.1683, 0.5, 6054353431.6598334537),
    (25.1785, -1.3859, 27.4048, 0.1, 0.87497753807511062964),
    (18.5562, 2.8257, 2.7081, 0.7, 7143447013.5448167448),
    (10.3536, 26.9679, 24.2809, 0.999, 1.5069499273738311472e+38),
    (18.0171, 15.7606, 14.9708, 0.7, 7579147357.0900526367),
    (23.8045, 17.3298, 14.4308, 0.99, 1.0059509751620342758e+54),
    (18.0479, 27.3001, 10.7441, 0.5, 1006881577014.3754745),
    (16.1345, 9.7746, 26.4031, 0.9, 24426.602993800305143),
    (26.1026, 5.622, 19.9202, 0.9, 2474676969.7506609182),
    (13.7195, 28.8367, 11.046, 0.7, 207037982364897213.2),
    (13.1895, 0.1936, 24.7752, 0.5, 1.0623027989048843848),
    (9.8556, 27.7048, 17.5961, 0.1, 5.2348215388602189973),
    (-0.5589, 28.5318, 20.2385, 0.7, 0.16735719685039577026),
    (8.8001, 19.9334, 13.8947, 0.999, 3.3607047363536537895e+43),
    (1.1102, 23.3719, 20.9842, 0.7, 5.1092853334157894312),
    (3.1959, 28.943, 21.4671, 0.99, 70630086343756319.853),
    (10.1672, -2.7594, 9.0814, 0.9999, 0.00014170418763321836799),
    (29.7672, 10.3279, 10.0521, 0.3, 51288.426271024601105),
    (10.0092, 11.0825, 13.1905, 0.1, 2.4214988958872714938),
    (9.6998, 27.669, 8.9132, 0.99, 1.9886824785118016411e+57),
    (18.8303, 10.8238, 2.2537, 0.999, 2.8756836830139430161e+87),
    (27.6429, 29.3268, 7.2545, 0.7, 3.3927056215607837024e+32),
    (-0.8477, 20.4871, 9.4878, 0.7, -0.91991664549737249162),
    (5.7713, 3.0494, 3.9882, 0.9, 45966.129625736905779),
    (14.4815, 14.1113, 14.36, 0.9999, 8.5162673309470494786e+56),
    (18.0622, 10.2364, -2.3476, 0.5, -2310808423995410598.0),
    (19.9854, 9.6281, 9.4308, 0.9999, 6.2676194768130907206e+80),
];

pub const ELLIPTIC_K: &[(f64, f64)] = &[
    (0.0, 1.5707963267948966192),
    (0.1, 1.5747455615173559531),
    (0.3, 1.6080486199305127984),
    (0.5, 1.6857503548125960429),
    (0.6, 1.7507538029157525118),
    (0.9, 2.2805491384227703005),
    (0.99, 3.3566005233611919425),
    (0.999999, 7.9474797735479670327),
    (0.1715728752538099, 1.582551727223715912),
];

/// ∫_0^1 y^(2/3) (1-y)^(2/3) / (1 - y + y^2)^2 dy
pub const ISING_NORMALIZER: f64 = 0.456_308_937_319_817_151_340_718;

/// (x, a, Z_I)
pub const PARTITION_Z_I: &[(f64, f64, f64)] = &[
    (0.3, 0.6666666666666666, 0.79665229544183697439),
    (0.5, 0.6666666666666666, 1.5),
    (0.1, 1.0, 0.23456790123456791646),
    (0.7, 0.5, 1.5275252316519465073),
    (0.9, 1.5, 3132.000000000002448),
];

/// (x, kappa, P_I)
pub const PROB_TYPE_I: &[(f64, f64, f64)] = &[
    (0.01, 0.5, 5.3598344228163420072e-29),
    (0.1, 0.5, 1.1306065470922675622e-13),
    (0.3, 0.5, 0.000014814425521638427946),
    (0.5, 0.5, 0.5),
    (0.75, 0.5, 0.99999949362350884101),
    (0.99, 0.5, 1.0),
    (0.01, 1.0, 6.2157285670109035334e-14),
    (0.1, 1.0, 8.8167652748204145746e-7),
    (0.3, 1.0, 0.0054416132314931378448),
    (0.5, 1.0, 0.5),
    (0.75, 1.0, 0.99887339382498020827),
    (0.99, 1.0, 0.99999999999993784271),
    (0.01, 2.0, 2.0306039981592729092e-6),
    (0.1, 2.0, 0.0023637720826076142518),
    (0.3, 2.0, 0.093330622204148015508),
    (0.5, 2.0, 0.5),
    (0.75, 2.0, 0.95070422535211267606),
    (0.99, 2.0, 0.99999796939600184072),
    (0.01, 2.6666666666666665, 0.0001487650157602494641),
    (0.1, 2.6666666666666665, 0.016348175328395299642),
    (0.3, 2.6666666666666665, 0.17481484274415952717),
    (0.5, 2.6666666666666665, 0.5),
    (0.75, 2.6666666666666665, 0.88263092592963739296),
    (0.99, 2.6666666666666665, 0.99985123498423975028),
    (0.01, 3.0, 0.00061539492365039901322),
    (0.1, 3.0, 0.03060005975994903217),
    (0.3, 3.0, 0.21176833169972881031),
    (0.5, 3.0, 0.5),
    (0.75, 3.0, 0.84652586626846514852),
    (0.99, 3.0, 0.99938460507634960009),
    (0.01, 3.5, 0.0030674299372938900906),
    (0.1, 3.5, 0.061151668581674358833),
    (0.3, 3.5, 0.26003754446859959601),
    (0.5, 3.5, 0.5),
    (0.75, 3.5, 0.79532987336213482643),
    (0.99, 3.5, 0.99693257006270610648),
    (0.01, 4.0, 0.010000000000000000208),
    (0.1, 4.0, 0.10000000000000000555),
    (0.3, 4.0, 0.2999999999999999889),
    (0.5, 4.0, 0.5),
    (0.75, 4.0, 0.75),
    (0.99, 4.0, 0.98999999999999999112),
];

/// (u, kappa, phi)
pub const AVOID_PROB: &[(f64, f64, f64)] = &[
    (0.05, 0.5, 0.15546426685232736817),
    (0.3, 0.5, 0.66774565545454543939),
    (0.5, 0.5, 0.86716018356643356643),
    (0.9, 0.5, 0.99659323867132867292),
    (0.999, 0.5, 0.99999969199979009785),
    (0.05, 1.0, 0.13314875000000000702),
    (0.3, 1.0, 0.61877999999999998421),
    (0.5, 1.0, 0.8375),
    (0.9, 1.0, 0.99558000000000000206),
    (0.999, 1.0, 0.9999995995998),
    (0.05, 2.0, 0.097500000000000005274),
    (0.3, 2.0, 0.50999999999999998446),
    (0.5, 2.0, 0.75),
    (0.9, 2.0, 0.99000000000000000444),
    (0.999, 2.0, 0.999999),
    (0.05, 3.0, 0.070705867594096654279),
    (0.3, 3.0, 0.40081136487541706473),
    (0.5, 3.0, 0.63224228067060620275),
    (0.9, 3.0, 0.96675767690053855451),
    (0.999, 3.0, 0.99997842716852820181),
    (0.05, 4.0, 0.050000000000000002776),
    (0.3, 4.0, 0.2999999999999999889),
    (0.5, 4.0, 0.5),
    (0.9, 4.0, 0.9000000000000000222),
    (0.999, 4.0, 0.99899999999999999911),
];

/// (rho, x)
pub const RECT_CROSS_RATIO: &[(f64, f64)] = &[
    (0.05, 8.2526401000685733448e-27),
    (0.1, 3.6337617093178962677e-13),
    (0.25, 0.000055795921049942373452),
    (0.5, 0.02943725152285941438),
    (1.0, 0.5),
    (1.5, 0.86610587273425649776),
    (2.0, 0.97056274847714058562),
    (4.0, 0.99994420407895005763),
];

/// (x, P) at kappa = 6
pub const CARDY: &[(f64, f64)] = &[
    (0.1, 0.26733700685038342102),
    (0.3, 0.40122761379135799752),
    (0.6, 0.54797623697375481523),
];
