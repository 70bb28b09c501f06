// Generated by tests/oracles/specfun_oracle.py (mpmath, 50 digits).
#pragma once
#include <limits>

namespace fixtures {
struct SpecfunRow { double gamma, t, f1, f1p, f2, f2p; };
inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr SpecfunRow kSpecfun[] = {
    {-0.4, 1e-06, 8.00000000000246335e-13, 1.6000000000009855424e-6, 7.0400000000022522635e-13, 1.4080000000009010764e-6},
    {-0.4, 0.001, 8.0000024640012769946e-7, 0.0016000009856007660008, 7.0400022528011918754e-7, 0.0014080009011207149386},
    {-0.4, 0.01, 0.000080002464127666713796, 0.016000985676601635041, 0.000070402252919155697178, 0.014080901191494937416},
    {-0.4, 0.07, 0.0039259311294373924075, 0.11233935345700590333, 0.0034550230344401560026, 0.098870290704566959717},
    {-0.4, 0.3, 0.074094536146426800894, 0.5086252238802380474, 0.065276955828158017001, 0.4486119547700722878},
    {-0.4, 0.7, 0.47336000607000342158, 1.6806511931179485819, 0.41988599274105231623, 1.504088387896307533},
    {-0.4, 0.95, 1.1968936024757794603, 5.7112840921851585784, 1.0795518171510888193, 5.3259042969100051637},
    {-0.4, 0.999, 1.6912435801303158182, 36.816632892652453241, 1.5514762425114094575, 36.220592717255586002},
    {-0.4, 1.0, 1.7544619098850020649, kInf, 1.6140857177011125126, kInf},
    {-0.4, 1.001, 1.8176341220433135185, 36.744208791867739493, 1.6766037786073303758, 36.077386171569998518},
    {-0.4, 1.05, 2.2946167710823345447, 5.2206070643572938299, 2.1157530389481762573, 4.4204367155506978505},
    {-0.4, 1.5, 3.0310892521049646878, 0.57506133152837234816, 2.5982866614793219483, 0.22823081193767199684},
    {-0.4, 3.0, 3.2837044578573482702, 0.041048976503881166846, 2.663987398944810863, 0.0040251438449489442714},
    {-0.4, 12.0, 3.3316158612297724789, 0.00034416574381646078468, 2.6666609376107222931, 2.1035870903894639862e-6},
    {-0.4, 150.0, 3.3333293403618852194, 6.3888338242664454279e-8, 2.6666666665814830054, 2.4987465611101558881e-12},
    {-0.4, 10000.0, 3.3333333331658743607, 4.0190183151724802543e-14, 2.6666666666666667892, 3.5367361182005993149e-22},
    {-0.4, 1000000.0, 3.3333333333333308026, 6.3697147288598778615e-21, 2.66666666666666679, 5.6053489613968270748e-33},
    {-0.1, 1e-06, 7.000000000001577885e-13, 1.4000000000006313403e-6, 5.7400000000013750535e-13, 1.1480000000005501726e-6},
    {-0.1, 0.001, 7.0000015785007110112e-7, 0.0014000006314004264537, 5.740001375550639893e-7, 0.0011480005502203838072},
    {-0.1, 0.01, 0.000070001578571074164345, 0.014000631442645312711, 0.000057401375613966821887, 0.011480550258380840749},
    {-0.1, 0.07, 0.0034337983634064024299, 0.098217289582199562712, 0.0028159102423954796943, 0.080549372953156793524},
    {-0.1, 0.3, 0.06433323809206315761, 0.43816100932723023481, 0.052823437188222443804, 0.36025930408944789835},
    {-0.1, 0.7, 0.39277700862301300027, 1.3136610667323146694, 0.32506046104115330045, 1.0988758309964109435},
    {-0.1, 0.95, 0.89252083840083367371, 3.3262621601319894552, 0.7520292879883384409, 2.9243736303180266965},
    {-0.1, 0.999, 1.1190933615360639863, 9.6492923662852753403, 0.9566122603953451835, 9.1290313833420309222},
    {-0.1, 1.0, 1.130955565454026422, kInf, 0.96795043268037320555, kInf},
    {-0.1, 1.001, 1.1428075946937198273, 9.6310432670517624877, 0.97926882409463278256, 9.0936701167749525345},
    {-0.1, 1.05, 1.3609301516489773013, 3.0581298463359863718, 1.1683294978352707797, 2.4419058701045959227},
    {-0.1, 1.5, 1.9004399618336472025, 0.51506364812602076763, 1.4923445196467546463, 0.19099055539961756543},
    {-0.1, 3.0, 2.1540596536055654642, 0.048976149682428831377, 1.552340599587563517, 0.0044773076187611433579},
    {-0.1, 12.0, 2.2186054059478482867, 0.00063391441384350901635, 1.5555449998090897203, 3.6105024445301404223e-6},
    {-0.1, 150.0, 2.2222042698619267416, 2.5133550168950356722e-7, 1.5555555552204434863, 9.1597942437019680687e-12},
    {-0.1, 10000.0, 2.2222222195681744261, 5.5735004128854481591e-13, 1.5555555555555555581, 4.5702703398588011144e-21},
    {-0.1, 1000000.0, 2.2222222222220547768, 3.5166410041149979002e-19, 1.5555555555555555693, 2.8836456233743798481e-31},
    {0.0, 1e-06, 6.6666666666679993966e-13, 1.3333333333338666063e-6, 5.3333333333344757078e-13, 1.0666666666671237613e-6},
    {0.0, 0.001, 6.6666680000005717064e-7, 0.0013333338666670095518, 5.3333344761909843493e-7, 0.0010666671238098285939},
    {0.0, 0.01, 0.000066668000057146034724, 0.013333866700954921115, 0.00005333447624127272968, 0.010667123840002309211},
    {0.0, 0.07, 0.003269874741158216168, 0.093516845006390022842, 0.0026160833258456457503, 0.074823980788954240123},
    {0.0, 0.3, 0.061123867250561125118, 0.41529298423768631528, 0.048964753911701759511, 0.33313789345774288459},
    {0.0, 0.7, 0.36810961553718976181, 1.2087301760492636645, 0.2972265733215265774, 0.98664376334897763811},
    {0.0, 0.95, 0.81200144184334696649, 2.8088232862945434066, 0.66726556204087043975, 2.4111455995198935077},
    {0.0, 0.999, 0.99239579366032717145, 6.6070131516572288323, 0.82622607018097369279, 6.1126321474307356031},
    {0.0, 1.0, 1.0, kInf, 0.83333333333333333333, kInf},
    {0.0, 1.001, 1.0075976054303199783, 6.5948113201679393035, 0.8404278946528026616, 6.0892284299603787801},
    {0.0, 1.05, 1.1812576842081865673, 2.5885647484107959685, 0.98713548179745204958, 2.0181922941479550267},
    {0.0, 1.5, 1.6705991301808751561, 0.49570515898018360388, 1.2719048065446424955, 0.17936105279873215429},
    {0.0, 3.0, 1.9241962407465937459, 0.051748433644414060787, 1.3299304094695729135, 0.0046155180059036445774},
    {0.0, 12.0, 1.9953639211180318939, 0.00077375790333020082908, 1.3333204476460205036, 4.2995114970572511544e-6},
    {0.0, 150.0, 1.999970370106990868, 3.9506875191535052187e-7, 1.3333333328065776731, 1.4046906794785227605e-11},
    {0.0, 10000.0, 1.99999999333333332, 1.333333338666666701e-12, 1.3333333333333333067, 1.0666666712380952686e-20},
    {0.0, 1000000.0, 1.9999999999993333333, 1.3333333333338666667e-18, 1.3333333333333333333, 1.0666666666671238095e-30},
    {0.1, 1e-06, 6.3333333333344442416e-13, 1.2666666666671112056e-6, 4.9400000000009363672e-13, 9.8800000000037468528e-7},
    {0.1, 0.001, 6.3333344448337863827e-7, 0.0012666671112669383719, 4.9400009368361119314e-7, 0.00098800037473452420747},
    {0.1, 0.01, 0.000063334444878616163243, 0.012667111293836850319, 0.000049400936875462601319, 0.0098803747581351409623},
    {0.1, 0.07, 0.0031060073861032400109, 0.088819622693228823278, 0.0024228540313115114171, 0.069288936116966278738},
    {0.1, 0.3, 0.057935016753534472054, 0.39271019303122941028, 0.045249336496825909427, 0.30713860083535530144},
    {0.1, 0.7, 0.34440071022865896906, 1.1111550199420333731, 0.27109078435552124224, 0.88413930046758809099},
    {0.1, 0.95, 0.73941780260104810498, 2.3844665974433478379, 0.59191193165019217613, 1.994106629013258206},
    {0.1, 0.999, 0.88509645414003951744, 4.689332751370709293, 0.71682111463493223449, 4.2200834210016185766},
    {0.1, 1.0, 0.89023942637550374832, 9.6969979943759852165, 0.7214930675073472624, 9.2239737019674005462},
    {0.1, 1.001, 0.89537795966988449375, 4.6809321813827496358, 0.72615658003567956196, 4.2041573394903837964},
    {0.1, 1.05, 1.0356613751075531434, 2.203244091345259401, 0.84134191932693560763, 1.6734639529867300366},
    {0.1, 1.5, 1.4805637442636873444, 0.47652556734185913846, 1.091912785419322411, 0.16808073923721828056},
    {0.1, 3.0, 1.7338601806347216427, 0.054554168966888875581, 1.147921657020571082, 0.0047439596816414973947},
    {0.1, 12.0, 1.8122391532693383454, 0.000942103325431793831, 1.1514994607739361901, 5.1040662596501640602e-6},
    {0.1, 150.0, 1.8181329148274222991, 6.194474446945799809e-7, 1.1515151506892252611, 2.1474205079574413979e-11},
    {0.1, 10000.0, 1.8181818014359086006, 3.1817228244133154368e-12, 1.1515151515151514423, 2.4817438037443650028e-20},
    {0.1, 1000000.0, 1.8181818181791641248, 5.0426908270127355329e-18, 1.151515151515151506, 3.9332988450700449662e-30},
    {0.4, 1e-06, 5.3333333333339087766e-13, 1.0666666666668970036e-6, 3.8400000000004603755e-13, 7.6800000000018426985e-7},
    {0.4, 0.001, 5.3333339093335331615e-7, 0.0010666668970667864821, 3.8400004608001687016e-7, 0.00076800018432010117186},
    {0.4, 0.01, 0.000053333909353302304427, 0.010666897078648242442, 0.000038400460816862713705, 0.0076801843301177969831},
    {0.4, 0.07, 0.0026147186641536957327, 0.074745895869012111908, 0.0018827083694738121226, 0.053823392357933210276},
    {0.4, 0.3, 0.048481787798750436999, 0.32653007787191147145, 0.034946126727242994371, 0.23563834552615051812},
    {0.4, 0.7, 0.27830446345647589329, 0.85588299852329634111, 0.20190497938020728392, 0.62670043193720999991},
    {0.4, 0.95, 0.5586225668344674445, 1.5005288530668057403, 0.41055934730806462233, 1.1448636583414941782},
    {0.4, 0.999, 0.64106272930937200042, 2.0430449679703691534, 0.47460884057628705851, 1.6445202884569897846},
    {0.4, 1.0, 0.64315005311137244964, 2.1991798512881569599, 0.47629698901019603328, 1.7993289692357647652},
    {0.4, 1.001, 0.64523574901699492987, 2.039841751159216524, 0.47798216154368847429, 1.6386736330734287182},
    {0.4, 1.05, 0.72484151720858421129, 1.3993272574224833997, 0.53704865644939958937, 0.96942293188489861198},
    {0.4, 1.5, 1.0623911040460142506, 0.41916683338962944838, 0.70813593809810165616, 0.1361121348425079876},
    {0.4, 3.0, 1.3123456337770137391, 0.062870522379093651496, 0.75774418342139507403, 0.0050440103054392285899},
    {0.4, 12.0, 1.4160541806429883806, 0.0016703627522759496239, 0.76187693450607645732, 8.353211488616758729e-6},
    {0.4, 150.0, 1.4283515592786574742, 2.3452849646628737034e-6, 0.76190475877772383982, 7.5049198923714912142e-11},
    {0.4, 10000.0, 1.428571163166647925, 4.2464764950763607416e-11, 0.76190476190476103281, 3.0574630771887708578e-19},
    {0.4, 1000000.0, 1.4285714284039694533, 2.6793455269441316419e-16, 0.7619047619047618821, 1.9291287793998210693e-28},
    {0.8, 1e-06, 4.00000000000012749e-13, 8.0000000000005113419e-7, 2.5600000000000947238e-13, 5.1200000000003798506e-7},
    {0.8, 0.001, 4.0000001280000348833e-7, 0.00080000005120002090592, 2.5600000950857421539e-7, 0.00051200003803430243399},
    {0.8, 0.01, 0.000040000128003486622815, 0.0080000512020920027379, 0.000025600095088503588907, 0.005120038035959320686},
    {0.8, 0.07, 0.0019603077390267400619, 0.056017596855105118302, 0.0012546286296522208859, 0.035853073967611196357},
    {0.8, 0.3, 0.036106322451039732753, 0.24143595444413349391, 0.023119137179314447866, 0.15466987245514793771},
    {0.8, 0.7, 0.19959846493089311486, 0.58251824887857106012, 0.12814833440889252674, 0.37547989843627697378},
    {0.8, 0.95, 0.3760715645291898521, 0.84436129697109645252, 0.24263078006767421008, 0.55319659932057557111},
    {0.8, 0.999, 0.41926771904408968214, 0.92831238334825463529, 0.27109660600928876545, 0.61783334913908677076},
    {0.8, 1.0, 0.42019796563799669429, 0.93273274638870436241, 0.27171615807616582767, 0.62182183092580289389},
    {0.8, 1.001, 0.42112765614589718357, 0.92720305318711348574, 0.27233472233430711919, 0.61586341319925655239},
    {0.8, 1.05, 0.46312338555067556786, 0.79937789301338384509, 0.29870470234677044923, 0.47521975550909749041},
    {0.8, 1.5, 0.69631061396311735749, 0.33948042620361049758, 0.39968189415112836778, 0.097165129071847627386},
    {0.8, 3.0, 0.93223447612551568151, 0.071886797679274415458, 0.43966239551986468788, 0.005118192609615986379},
    {0.8, 12.0, 1.0773074492507542327, 0.0033813083122413475241, 0.44438809649064882779, 0.000015029114654559859959},
    {0.8, 150.0, 1.1094795637192874503, 0.000013052402339312497228, 0.44444442704125544186, 3.7126850293408913628e-10},
    {0.8, 10000.0, 1.1111005451564921404, 1.2679145547803565777e-9, 0.44444444444441905874, 8.1146531514289320278e-18},
    {0.8, 1000000.0, 1.1111110690472881184, 5.0476587558418719557e-14, 0.44444444444444441702, 3.2305016037388312349e-26},
};
}  // namespace fixtures
