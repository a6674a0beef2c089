// Golden q-expansion data: first 20 coefficients of the 20 smallest-slope
// eigenfunctions at p = 5, as (valuation, unit mod 5^10) pairs; and the
// published spectral coefficients of 1/j.
#ifndef GOLDEN_EIGEN_HPP
#define GOLDEN_EIGEN_HPP

struct GoldenCoeff { long val; long unit; };

inline constexpr GoldenCoeff kGoldenQexp[20][20] = {
    {{0, 1}, {0, 8528631}, {0, 8596652}, {0, 2788848}, {1, 610813}, {0, 6727787}, {0, 2747331}, {1, 3412617}, {0, 6989312}, {1, 4155753}, {0, 538817}, {0, 9643146}, {0, 6371187}, {0, 5536986}, {1, 9298076}, {0, 8198461}, {0, 3226656}, {0, 5179372}, {1, 9335108}, {1, 7582174}},
    {{0, 1}, {0, 441709}, {0, 2550713}, {0, 4301618}, {4, 2356503}, {0, 2966642}, {0, 3223594}, {1, 9703174}, {0, 7251077}, {4, 9677377}, {0, 3828592}, {0, 5453634}, {0, 4410268}, {0, 3763396}, {4, 1117889}, {0, 1692896}, {0, 2395464}, {0, 4642468}, {1, 2705229}, {4, 8143729}},
    {{0, 1}, {0, 7123391}, {0, 727387}, {0, 8909193}, {5, 6386403}, {0, 6931192}, {0, 3140781}, {1, 2842166}, {0, 3306102}, {5, 3855698}, {0, 1486467}, {0, 1481191}, {0, 909182}, {0, 3295871}, {5, 5659586}, {0, 2077746}, {0, 7148211}, {0, 2935007}, {1, 6743039}, {5, 1590279}},
    {{0, 1}, {0, 2764444}, {0, 5364423}, {0, 7074448}, {8, 6938782}, {0, 8303937}, {0, 2059419}, {1, 5835813}, {0, 6128137}, {8, 9032833}, {0, 9024817}, {0, 9297879}, {0, 3774838}, {0, 3966786}, {8, 3159036}, {0, 908886}, {0, 1286194}, {0, 2888953}, {1, 3751388}, {8, 5567336}},
    {{0, 1}, {0, 5791436}, {0, 3059457}, {0, 3403033}, {9, 8921438}, {0, 6832127}, {0, 3955981}, {1, 3439059}, {0, 6952557}, {9, 7517468}, {0, 9760342}, {0, 7351831}, {0, 8002297}, {0, 231841}, {9, 79791}, {0, 4456166}, {0, 7616646}, {0, 5698727}, {1, 7110866}, {9, 6515204}},
    {{0, 1}, {0, 6831044}, {0, 1698148}, {0, 2950248}, {10, 6825297}, {0, 6519012}, {0, 8819044}, {1, 5659178}, {0, 8713237}, {10, 7635693}, {0, 4926567}, {0, 6568829}, {0, 5335163}, {0, 6117561}, {10, 3121831}, {0, 9149661}, {0, 3456869}, {0, 7282553}, {1, 82178}, {10, 464281}},
    {{0, 1}, {0, 8461691}, {0, 7744062}, {0, 4618543}, {13, 9616002}, {0, 8166342}, {0, 9150156}, {1, 7971386}, {0, 1468177}, {13, 860632}, {0, 5105092}, {0, 4044791}, {0, 5464782}, {0, 1658171}, {13, 1617624}, {0, 6957796}, {0, 2187611}, {0, 8154182}, {1, 4201019}, {13, 4662586}},
    {{0, 1}, {0, 9458634}, {0, 1415388}, {0, 310018}, {14, 7929152}, {0, 341242}, {0, 8941094}, {1, 5522594}, {0, 6133252}, {14, 1385868}, {0, 1356842}, {0, 6694484}, {0, 1201868}, {0, 8361846}, {14, 4325351}, {0, 165471}, {0, 8543864}, {0, 8163393}, {1, 8748199}, {14, 6016611}},
    {{0, 1}, {0, 1036606}, {0, 8499877}, {0, 6100798}, {19, 9288232}, {0, 7872462}, {0, 6770081}, {1, 8252407}, {0, 2114087}, {19, 4598717}, {0, 7406442}, {0, 7211221}, {0, 9554887}, {0, 6194461}, {19, 1422464}, {0, 9065311}, {0, 5385831}, {0, 659347}, {1, 9351018}, {19, 2209136}},
    {{0, 1}, {0, 8935814}, {0, 2184043}, {0, 7194158}, {20, 9176128}, {0, 844127}, {0, 1292144}, {1, 1755091}, {0, 8018557}, {20, 1173192}, {0, 9267217}, {0, 6670794}, {0, 8784078}, {0, 1023341}, {20, 3438004}, {0, 9735791}, {0, 7839479}, {0, 9681648}, {1, 9158266}, {20, 2941474}},
    {{0, 1}, {0, 8097156}, {0, 5482427}, {0, 4624273}, {21, 3090372}, {0, 6130737}, {0, 9435206}, {1, 3663802}, {0, 7112412}, {21, 1525782}, {0, 9588067}, {0, 2822446}, {0, 9371737}, {0, 4796011}, {21, 4517844}, {0, 9306236}, {0, 2578856}, {0, 6765897}, {1, 5575723}, {21, 1143306}},
    {{0, 1}, {0, 9675784}, {0, 6753913}, {0, 116218}, {24, 8946888}, {0, 8811542}, {0, 8069219}, {1, 6507279}, {0, 2269902}, {24, 1463317}, {0, 3569092}, {0, 4386034}, {0, 8715668}, {0, 4467696}, {24, 9032119}, {0, 3147446}, {0, 1255689}, {0, 5281293}, {1, 2446659}, {24, 4273334}},
    {{0, 1}, {0, 852841}, {0, 6464712}, {0, 8669718}, {25, 9222513}, {0, 2306167}, {0, 7752656}, {1, 1741296}, {0, 4498152}, {25, 5178183}, {0, 8249092}, {0, 3428716}, {0, 4365957}, {0, 5551946}, {25, 1789381}, {0, 4399821}, {0, 7853311}, {0, 7277957}, {1, 2773209}, {25, 4930084}},
    {{0, 1}, {0, 3696344}, {0, 5088573}, {0, 4864773}, {28, 7513547}, {0, 4948987}, {0, 9082919}, {1, 5387723}, {0, 4212787}, {28, 7887793}, {0, 5486817}, {0, 6445179}, {0, 264638}, {0, 9163761}, {28, 9742181}, {0, 5608361}, {0, 3782269}, {0, 5653853}, {1, 2678998}, {28, 1361081}},
    {{0, 1}, {0, 5997936}, {0, 2852832}, {0, 6767908}, {29, 3494278}, {0, 239127}, {0, 8242231}, {1, 5754659}, {0, 1331682}, {29, 8544583}, {0, 7742217}, {0, 9202956}, {0, 5295922}, {0, 6847716}, {29, 4110921}, {0, 7441416}, {0, 6452396}, {0, 9423977}, {1, 2768516}, {29, 6717924}},
    {{0, 1}, {0, 7855519}, {0, 4239748}, {0, 3954673}, {30, 8731987}, {0, 1047337}, {0, 7593044}, {1, 6656568}, {0, 7374337}, {30, 2676878}, {0, 5407692}, {0, 536154}, {0, 2961238}, {0, 6487961}, {30, 8403651}, {0, 524436}, {0, 8063044}, {0, 6134653}, {1, 7095743}, {30, 4787751}},
    {{0, 1}, {0, 3058366}, {0, 808487}, {0, 3957143}, {35, 4332043}, {0, 2667867}, {0, 2677656}, {1, 9265831}, {0, 2140627}, {35, 8177988}, {0, 8770592}, {0, 1797641}, {0, 6220257}, {0, 4023221}, {35, 7870816}, {0, 1693096}, {0, 9074636}, {0, 4429232}, {1, 7074024}, {35, 3867524}},
    {{0, 1}, {0, 4792184}, {0, 9735438}, {0, 3075793}, {36, 9618893}, {0, 6310342}, {0, 6556094}, {1, 1549289}, {0, 6307052}, {36, 7085437}, {0, 8972592}, {0, 2599209}, {0, 5715468}, {0, 956796}, {36, 5570759}, {0, 552671}, {0, 2538389}, {0, 2900318}, {1, 6364319}, {36, 1100899}},
    {{0, 1}, {0, 3408581}, {0, 217102}, {0, 1581998}, {39, 2535503}, {0, 9752262}, {0, 1937831}, {1, 7503797}, {0, 7627362}, {39, 6413743}, {0, 6787817}, {0, 7664171}, {0, 3969712}, {0, 21561}, {39, 3787931}, {0, 4478661}, {0, 4153256}, {0, 4630822}, {1, 6899078}, {39, 8331244}},
    {{0, 1}, {0, 7376064}, {0, 5111168}, {0, 6655533}, {40, 1816457}, {0, 9314002}, {0, 8378394}, {1, 6422316}, {0, 8376307}, {40, 2303998}, {0, 9013467}, {0, 8230044}, {0, 8742078}, {0, 48716}, {40, 7907401}, {0, 463666}, {0, 6617104}, {0, 6593773}, {1, 2535366}, {40, 7084706}},
};

inline constexpr GoldenCoeff kGoldenSpectral[10] = {
    {0, 8295001}, {4, 7540786}, {4, 2165317}, {8, 8075994}, {9, 4502966}, {10, 4930721}, {12, 7120582}, {14, 7314891}, {18, 2324226}, {22, 1076376}
};

#endif
