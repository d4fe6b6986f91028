// (m, modulus, argument, J re, J im, Y re, Y im); regenerate with oracle/gen_bessel_table.py
pub const INTEGER_ORDER: &[(u32, f64, f64, f64, f64, f64, f64)] = &[
    (0, 1.0, 0.0, 0.76519768655796655145, 0.0, 0.088256964215676957983, 0.0),
    (1, 1.0, 0.0, 0.44005058574493351596, 0.0, -0.78121282130028871655, 0.0),
    (2, 1.0, 0.0, 0.11490348493190048047, 0.0, -1.6506826068162543911, 0.0),
    (3, 1.0, 0.0, 0.019563353982668405919, 0.0, -5.8215176059647288478, 0.0),
    (5, 1.0, 0.0, 0.00024975773021123443138, 0.0, -260.40586662581222072, 0.0),
    (8, 1.0, 0.0, 9.4223441726045005454e-8, 0.0, -425674.61848650669368, 0.0),
    (0, 2.0, -0.3, 0.2703518345540460712, 0.35752196577330245479, 0.60078009826831873537, -0.087243315075098300996),
    (1, 2.0, -0.3, 0.65362946376314638181, 0.01886313865631526617, -0.12727150028271699305, -0.3486451256701560011),
    (2, 2.0, -0.3, 0.34850980391249492764, -0.14634060690426314804, -0.6193355269246449568, -0.28344139529903149542),
    (3, 2.0, -0.3, 0.098752014018673615878, -0.092488803337726761513, -0.88855083605288165683, -0.55897101506448502309),
    (5, 2.0, -0.3, 0.0012049611172727889149, -0.0071565304205456525968, -2.0926109810767545531, -9.1824234423589462378),
    (8, 2.0, -0.3, -0.000015681888187341379936, -0.000016306250256668617055, 1227.0027498615997237, -1325.3388219188098797),
    (0, 3.7, 0.05, -0.40607292624862438161, -0.010245281711508001982, 0.10791520960344261297, -0.077463662303294166405),
    (1, 3.7, 0.05, 0.054711299861531649116, -0.076923137943458502495, 0.42329569703671707439, -0.00097730038301063810159),
    (2, 3.7, 0.05, 0.43353150487086436068, -0.032760896325370600265, 0.12058092173613528565, 0.065500394029908312952),
    (3, 3.7, 0.05, 0.41161555526959537376, 0.018125842590108000085, -0.28956177026574726677, 0.065184869350663714526),
    (5, 3.7, 0.05, 0.098075535456368058755, 0.018623640676252655556, -0.9652809471432255358, 0.13516723551180178332),
    (8, 3.7, 0.05, 0.0021649546277343148948, 0.00081611136556566043865, -18.304167601338707259, 6.6003141676958773881),
    (0, 12.0, -1.0, 2810.3051380434766679, -256.50200076190666849, -256.50200909985767134, -2810.3051336965726671),
    (1, 12.0, -1.0, -181.71323689860439782, -2716.8057598727880777, -2716.8057645521762553, 181.71322836608206592),
    (2, 12.0, -1.0, -2445.6496151453364853, -13.631804748228353165, -13.631795635013059127, 2445.6496093738140064),
    (3, 12.0, -1.0, -254.92654918217997109, 2028.3695979761176074, 2028.3696059156590988, 254.92655923141541783),
    (5, 12.0, -1.0, 548.77132831138787719, -1010.1318230984657226, -1010.1318417055668445, -548.77134038156718443),
    (8, 12.0, -1.0, 62.369388167994142738, 274.39866239406231931, 274.39867766688655269, -62.36930529924983882),
    (0, 13.5, -2.7, 20.746721676259621483, 28.088461756611152135, 28.087799640244510968, -20.746852521496290668),
    (1, 13.5, -2.7, 26.952836916611660668, -21.383137526967839612, -21.38298274514836966, -26.953505459336939728),
    (2, 13.5, -2.7, -23.00280852801348838, -23.517943362472684382, -23.517259647916593221, 23.003038715692993181),
    (3, 13.5, -2.7, -17.812897895595647261, 24.77009452779820532, 24.769727448240616361, 17.81359135671399907),
    (5, 13.5, -2.7, 1.596751214290332698, -23.777996362243463106, -23.777124911250286078, -1.5973038815109719315),
    (8, 13.5, -2.7, 3.2913539672829499223, -12.060926375554360569, -12.059589585853061911, -3.2929511778476120077),
    (0, 18.0, 0.6, -552.41824996551161984, -2385.4921576056526113, 2385.4921643325084356, -552.4182525907119029),
    (1, 18.0, 0.6, 2335.5980377005657121, -599.39896003128482704, 599.39895751643457687, 2335.5980308081362565),
    (2, 18.0, 0.6, 728.99670899717360117, 2183.9940284814881031, -2183.9940358713832488, 728.99671114808763562),
    (3, 18.0, 0.6, -1927.8552072096570919, 908.48908216258028336, -908.48908073320697402, -1927.8551989954777184),
    (5, 18.0, 0.6, 1134.3212573255231172, -1211.7012569460818099, 1211.7012588986076768, 1134.3212467114349894),
    (8, 18.0, 0.6, -874.7393301109000941, 146.49808826191780637, -146.49807787137421263, -874.73931243519235076),
    (0, 24.0, -3.0, -1.2030661322951725685, 2.0868137468812607664, 2.0824783751192591204, 1.2064548052305075736),
    (1, 24.0, -3.0, 2.1103318525159225666, 1.1532450303341394892, 1.149934822071076599, -2.1147505141209656104),
    (2, 24.0, -3.0, 1.0154029116865528335, -2.157138236775969907, -2.1524778114386403815, -1.0184659758537840203),
    (3, 24.0, -3.0, -2.2271361688885658055, -0.77343764106424877634, -0.77082435388034509854, 2.2321698454608306692),
    (5, 24.0, -3.0, 2.2645330985092771752, 0.0037949059128009402042, 0.0029017682165223681418, -2.2704548888712465558),
    (8, 24.0, -3.0, 1.4919252011467652003, 1.395855814219429027, 1.390427019316884456, -1.4961230068689831219),
    (0, 27.0, -0.8, 18090840.150620480896, -8235315.9859263486262, -8235315.9859263491846, -18090840.150620480696),
    (1, 27.0, -0.8, -7889319.2974221260152, -17958210.655199942041, -17958210.655199942251, 7889319.2974221254519),
    (2, 27.0, -0.8, -17543737.179622826956, 6889311.7561186108136, 6889311.7561186113911, 17543737.179622826716),
    (3, 27.0, -0.8, 5346366.8306926574, 16804836.284878355118, 16804836.284878355413, -5346366.8306926568001),
    (5, 27.0, -0.8, -1376760.3078544385459, -14178522.509550918599, -14178522.509550919104, 1376760.3078544378911),
    (8, 27.0, -0.8, 7722623.2035881101249, 3398361.6093149092718, 3398361.6093149086924, -7722623.2035881088581),
    (0, 40.0, 1.1, 112752744789424.02372, 155217455104680.57309, -155217455104680.57309, 112752744789424.02372),
    (1, 40.0, 1.1, -152834487828275.10382, 112381643743224.4452, -112381643743224.4452, -152834487828275.10382),
    (2, 40.0, 1.1, -111211233932384.34405, -145858300197423.76112, 145858300197423.76112, -111211233932384.34405),
    (3, 40.0, 1.1, 134790990325007.45767, -109086492647746.84129, 109086492647746.84129, 134790990325007.45767),
    (5, 40.0, 1.1, -103729615880868.67168, 101152775212460.1254, -101152775212460.1254, -103729615880868.67168),
    (8, 40.0, 1.1, 78526605006815.888269, 50791741324667.468308, -50791741324667.468308, 78526605006815.888269),
    (0, 8.0, -6.0, 0.99162282118982636638, -0.88463577803760630926, -2.6406674295828923785, -3.0018099507666700204),
    (1, 8.0, -6.0, 0.9443638834621127466, 0.89525292752297351218, 2.6590866746101723483, -2.8481673686779700523),
    (2, 8.0, -6.0, -0.70239840032883932457, 1.0335671168040248657, 3.0800059071617771178, 2.1323810240786521142),
    (3, 8.0, -6.0, -1.1371775847234508385, -0.30092221063491145597, -0.88251144413156409997, 3.4415911257440489846),
    (5, 8.0, -6.0, 0.68199610076943660236, -0.62055600098750314825, -1.8441736539648493648, -2.0951396124680711366),
    (8, 8.0, -6.0, 0.1477354983265635083, 0.31081986900465439498, 0.80049386949772129603, -0.36853852745814114986),
    (0, 5.0, 5.5, -6.1819013663208334889, 0.073868827794949980842, -0.2142841037672025872, -18.552947892710489797),
    (1, 5.0, 5.5, -0.39624158748735145057, 5.7508791303946802745, -17.244398716889286748, -1.1813709807775920704),
    (2, 5.0, 5.5, 4.4465887381831907234, 1.4444950908741543337, -4.340547608268472967, 13.351419656197843219),
    (3, 5.0, 5.5, 2.1018523880906767989, -2.4221449895706590158, 7.2476148249590119935, 6.3008239260048668013),
    (5, 5.0, 5.5, -0.8447409992781260346, -0.22038801879973539016, 0.71007494637757038344, -2.5709053884598933006),
    (8, 5.0, 5.5, 0.029295325879562402264, 0.025197916530502151402, -0.69423241092251625269, 0.86370502285542698629),
    (0, 20.0, -4.4, 15827125.309511201212, -4804866.1758728750055, -14414598.527618625979, -47481375.928533603618),
    (1, 20.0, -4.4, 4564576.2097649473406, 15484295.463705319881, 46452886.391115959668, -13693728.629294841037),
    (2, 20.0, -4.4, -14493920.972591428066, 3894616.8606635303907, 11683850.581990592227, 43481762.917774284149),
    (3, 20.0, -4.4, -2932459.4474930636305, -12965195.167894381854, -38895585.50368314566, 8797378.342479189709),
    (5, 20.0, -4.4, 863673.47512281724502, 8983082.5696719261387, 26949247.709015778757, -2591020.4253684500487),
    (8, 20.0, -4.4, 3464028.1659591237304, 712659.69704695243271, 2137979.0911408535368, -10392084.497877369262),
    (0, 30.0, 4.0, 487668931.61494811551, -206622396.41587140475, 619867189.24761421425, 1463006794.8448443465),
    (1, 30.0, 4.0, -209394220.21797154654, -479229088.45195408028, 1437687265.3558622409, -628182660.65391463963),
    (2, 30.0, 4.0, -454365533.86456343784, 216940727.63153038511, -650822182.89459115533, -1363096601.5936903135),
    (3, 30.0, 4.0, 227102466.71735841439, 414473502.78095664956, -1243420508.3428699487, 681307400.15207524317),
    (5, 30.0, 4.0, -242411260.44158156636, -300161883.80924095094, 900485651.42772285285, -727233781.32474469909),
    (8, 30.0, 4.0, 104297382.1055424941, -210383551.43022479018, 631150654.29067437055, 312892146.31662748226),
    (0, 3.805143, 3.404336, -0.61428066412448220907, -0.054387919779060411244, 0.22356424489367863769, -1.7049724119461686076),
    (1, 3.805143, 3.404336, -0.034978362264980065365, 0.46683619408989883179, -1.5512288016465962034, -0.058902465332205064715),
    (2, 3.805143, 3.404336, 0.56830406885919628037, -0.18733746932758199886, 0.57182824721043283932, 1.5231023572419155828),
    (3, 3.805143, 3.404336, -0.49077658714595382965, -0.12149907845466103141, 0.55489284512133707591, -1.3311212653270790497),
    (5, 3.805143, 3.404336, -0.067234319220216787194, -0.10146521698336496209, 0.81550065272339951647, -0.62905335138140371506),
    (8, 3.805143, 3.404336, -0.00094761995505655028118, 0.0028408983900080811434, 3.6267443999825524328, 14.310866144310398664),
    (0, 0.470985, -4.400234, 1.0452377552486499122, 0.033150368812813914821, -0.51416898843315033725, -2.9676747245491970608),
    (1, 0.470985, -4.400234, -0.077642286809878509285, 0.22798235118602029122, 1.12397254760943126, 1.3033318581694108991),
    (2, 0.470985, -4.400234, -0.022659095590145110307, -0.016697868590896458983, 4.3154092682540454907, -3.2742306430274299467),
    (3, 0.470985, -4.400234, 0.0017834997063675910283, -0.0012901477835496299693, -38.843273163860859728, -27.642285832574458681),
    (5, 0.470985, -4.400234, -6.0807279068393629163e-6, 2.8120213551587576438e-8, 10430.238429159981364, 20.311897761382456839),
    (8, 0.470985, -4.400234, -1.8899475054060644071e-10, 1.409361349295191724e-10, 135203408.138966442, 100607466.06726406642),
    (0, 7.369411, 4.586769, 146.51738007621047763, -169.50270621686139078, 508.50801169924505866, 439.55197929921805979),
    (1, 7.369411, 4.586769, -159.00592218650572433, -134.70742389159834501, 404.1224439750837275, -477.01787920721073309),
    (2, 7.369411, 4.586769, -104.84029563601714486, 131.27020405940543398, -393.81048075475252769, -314.52067575584374245),
    (3, 7.369411, 4.586769, 95.445676521028950376, 69.32309532170310729, -207.9695809098768362, 286.3371986237782318),
    (5, 7.369411, 4.586769, -34.803582926926809071, -18.87375562239659264, 56.622096749285814282, -104.41111059191637228),
    (8, 7.369411, 4.586769, 0.77427810452207258618, -3.2397664804426726074, 9.7177469642491864689, 2.3141594405036019266),
    (0, 0.741493, -3.37279, 0.87981152558960521941, 0.057615533048404663683, -0.033127991120436879932, -1.9398564558670546556),
    (1, 0.741493, -3.37279, -0.34152444919057510855, 0.069192090631021543276, 1.1740539195725802228, 0.89713160939640939409),
    (2, 0.741493, -3.37279, 0.059623670765043735581, -0.028196728089902218614, -2.4948634066303545918, -1.141191724728629858),
    (3, 0.741493, -3.37279, -0.0064132140061482318578, 0.0051667115907011952744, 10.515796714249695981, 8.1791976425155720806),
    (5, 0.741493, -3.37279, -0.000023582064169985389329, 0.00005209728331298763505, 469.21359375992593371, 1022.2851393634128439),
    (8, 0.741493, -3.37279, -2.3458220829397307659e-9, -8.4118972664936303395e-9, 1220041.368611108085, -4408380.6255354878054),
    (0, 5.79159, 5.042618, -5.4028700963544918245, 40.231194408427065907, -120.69297279085057453, -16.207397250012062082),
    (1, 5.79159, 5.042618, 36.645753719170717952, 6.1954446969698838139, -18.587627056412068014, 109.93795152465010141),
    (2, 5.79159, 5.042618, 7.4824535489453945263, -27.566400393125190007, 82.698220441840920767, 22.445802539884802723),
    (3, 5.79159, 5.042618, -16.959834244459194438, -7.4804181247944826901, 22.44334567391246552, -50.881182796052295732),
    (5, 5.79159, 5.042618, 3.3212354676770743988, 3.6148902637187872975, -10.849247193520208473, 9.9711004348589315574),
    (8, 5.79159, 5.042618, -0.2527242295771151882, -0.0085758120870650187443, 0.15486292427244364852, -0.77710947401704013577),
    (0, 0.210419, -5.655651, 0.99653827786782035298, -0.01050379969691426418, -1.0979913813423428415, -3.5701563313247054135),
    (1, 0.210419, -5.655651, 0.085342302527098439358, 0.06121962164779531405, -2.3468734281194571462, 1.384654300592442597),
    (2, 0.210419, -5.655651, 0.0017349741388520359148, 0.0052488806824620529381, -9.23131417640661656, 27.321005552267970076),
    (3, 0.210419, -5.655651, -0.000059007176977904742738, 0.00018473293349332081646, 165.240954581475307, 522.06458949312161131),
    (5, 0.210419, -5.655651, -1.0735884952521878306e-7, 6.0925853967588932349e-10, 593130.12892805491346, 3886.4492415209187865),
    (8, 0.210419, -5.655651, 1.1237232179226174978e-13, -3.5481063494578689692e-13, -32247927868.031440598, -101939718999.06370028),
    (0, 0.853353, -2.520233, 0.93491320064139405182, -0.16719693028923963645, -0.38819096662192814395, -1.3659995954576520361),
    (1, 0.853353, -2.520233, -0.35698230467758251684, -0.21126316509651859407, 0.44813381800822490456, 0.22492442292875633784),
    (2, 0.853353, -2.520233, 0.03360256286080474859, 0.082733332453946899774, -0.77266479075143020232, 1.5487935492354253147),
    (3, 0.853353, -2.520233, 0.0031577409364404920411, -0.012363015571633494028, -1.7295370536062120036, -8.236169488004769549),
    (5, 0.853353, -2.520233, 0.00011646924603326060502, -7.4125504179626431989e-6, -546.37283997769642566, -42.750127874610386988),
    (8, 0.853353, -2.520233, 6.4162719483659070426e-9, -2.6295863975307737102e-8, -341234.4824236460432, -1432609.417993044685),
    (0, 3.668634, -4.000165, -1.465547613524050342, 3.0889941536098707731, 9.290212812488909149, 4.4066444062489865955),
    (1, 3.668634, -4.000165, -2.6510937952431181761, -1.6353159195463875252, -4.8968317660392011912, 7.926885993625984647),
    (2, 3.668634, -4.000165, 1.7352675981542001229, -1.4124301276652558912, -4.2746602847463989156, -5.2101619906069139456),
    (3, 3.668634, -4.000165, 0.24898679156805100241, 1.2096616576276632247, 3.6428992530986755111, -0.68661830787919077828),
    (5, 3.668634, -4.000165, 0.15769083436453414689, -0.10897328163639788664, -0.60703582775180433796, -0.58359684398321937299),
    (8, 3.668634, -4.000165, 0.0032991884544471249525, -0.00073022845278438445631, -11.395162173938100268, -1.3522518410533589908),
    (0, 0.120406, -2.177686, 1.001264175873760611, -0.003398009214353491999, -1.4287675593788324911, -1.3811165221500295336),
    (1, 0.120406, -2.177686, -0.03444041193753155933, -0.04942525693890437423, 3.0068622151710901355, -4.2093831635675615376),
    (2, 0.120406, -2.177686, -0.00063167400358573609158, 0.0016993628982471630735, 30.378098637355402674, 82.283896664010972936),
    (3, 0.120406, -2.177686, 0.000035240745264662725282, -9.0255324685791705012e-6, -2823.9697790230257431, -725.80112140427651332),
    (5, 0.120406, -2.177686, -7.0120905714167792474e-10, 6.5543535878037463455e-9, 1024541.4107494099407, 9602294.3110498730838),
    (8, 0.120406, -2.177686, 6.1046293945161467555e-16, 4.2366578723298368009e-15, -1326647110425.3014305, 9200003272759.2947086),
    (0, 0.408106, -2.499464, 0.98786913232466021697, -0.039703654467913302273, -0.69188323215414162515, -1.5211213470695043004),
    (1, 0.408106, -2.499464, -0.16485985185751845144, -0.1182233241852506182, 1.2205054131281689551, -0.56001511312802353513),
    (2, 0.408106, -2.499464, 0.0061257496817965044703, 0.019812332949923353846, -2.4544296812078755796, 7.3011653219402905667),
    (3, 0.408106, -2.499464, 0.00047829541799333619781, -0.0013284183017715588455, -24.813548397936257947, -71.155672622394115359),
    (5, 0.408106, -2.499464, 2.9365490945152331872e-6, 1.8345554805248398943e-7, -21620.203185095545897, 1278.2872466312635827),
    (8, 0.408106, -2.499464, 3.0370871861019398428e-11, -6.7971958264624533227e-11, -217486213.01053095907, -488411152.7314822976),
    (0, 1.200025, -3.642883, 0.79389495197881515665, 0.27424429580162600188, 0.80445589201841045483, -1.9948918696064500541),
    (1, 1.200025, -3.642883, -0.51392975408781694807, 0.18448693178207836702, 1.027788185830418217, 1.444421848124315795),
    (2, 1.200025, -3.642883, 0.10500976802278919179, -0.13227298814005505332, -1.1497897560236208938, -0.93940726896207836331),
    (3, 1.200025, -3.642883, -0.0049077122539311817404, 0.033959549311515741531, 0.82845340698350452281, 3.1433683389493729558),
    (5, 1.200025, -3.642883, 0.00048560662487307389161, 0.00039749197767996238216, -77.991631508258464246, 67.338058308338456029),
    (8, 1.200025, -3.642883, -2.7371180617229626741e-7, 3.0227135320818823768e-7, 66600.526539304865015, 72122.194153912809353),
    (0, 34.023265, 1.530647, 8914132483288.3499067, -38879818252426.527824, 38879818252426.527824, 8914132483288.3499067),
    (1, 34.023265, 1.530647, 38309933326873.895141, 8758962003471.1451072, -8758962003471.1451072, 38309933326873.895141),
    (2, 34.023265, 1.530647, -8309275295152.3532973, 36650315098254.937922, -36650315098254.937922, -8309275295152.3532973),
    (3, 34.023265, 1.530647, -34043763421946.91069, -7609904824099.4764489, 7609904824099.4764489, -34043763421946.91069),
    (5, 34.023265, 1.530647, 26893213279319.886087, 5739555682326.2112871, -5739555682326.2112871, 26893213279319.886087),
    (8, 34.023265, 1.530647, 2870263710742.2303425, -15166908153511.075646, 15166908153511.075646, 2870263710742.2303425),
    (0, 7.915161, -1.578292, 394.26750591428807909, -21.882018009900435034, -21.882119859935177882, -394.26751233637352419),
    (1, 7.915161, -1.578292, -20.650711116740572597, -368.43745186736789402, -368.43744500541934857, 20.650603017480932412),
    (2, 7.915161, -1.578292, -301.13436785236040067, 17.361965893890173608, 17.362095044642723065, 301.13437621301030785),
    (3, 7.915161, -1.578292, 13.017615856283856028, 216.19491546865416282, 216.19490389247286513, -13.017442522997376091),
    (5, 7.915161, -1.578292, -5.2408480473556870432, -77.481499578677146156, -77.481467714971786376, 5.2404115921744458682),
    (8, 7.915161, -1.578292, 7.4701674999241347393, -0.61820208665127777595, -0.62195873860015350182, -7.4704923813690442702),
    (0, 27.059928, 4.269611, 1171906526.3942998655, 2978543328.6378929561, -8935629985.9136788682, 3515719579.1828995966),
    (1, 27.059928, 4.269611, 2919048493.7432266167, -1176205863.5421119609, 3528617590.6263358827, 8757145481.22967985),
    (2, 27.059928, 4.269611, -1185793590.1301647435, -2746355228.2381461318, 8239065684.7144383953, -3557380770.3904942307),
    (3, 27.059928, 4.269611, -2477130845.5374233339, 1191762106.2679309618, -3575286318.8037928855, -7431392536.6122700017),
    (5, 27.059928, 4.269611, 1756548116.268927067, -1146588555.5615877004, 3439765666.6847631011, 5269644348.8067812011),
    (8, 27.059928, 4.269611, 844299564.93091072916, 683638572.94861881933, -2050915718.845856458, 2532898694.7927321875),
    (0, 0.437639, 2.649634, 0.9732659899431861046, 0.039342025464369296557, -0.63311887120693405533, 1.5932356746314035711),
    (1, 0.437639, 2.649634, -0.19234073883035483241, 0.098171307646683770097, 1.2929070505931668384, 0.2750055738555444715),
    (2, 0.437639, 2.649634, 0.013403198079728260108, -0.019583061193007083727, -3.9810980492494728126, -5.4918883671571177088),
    (3, 0.437639, 2.649634, -0.00018164087360710823453, 0.001725188013622744431, 7.0689278444315276125, 61.155407753683155822),
    (5, 0.437639, 2.649634, 3.2142416442093355143e-6, 2.644456993258590524e-6, -11804.743971839132283, 9778.4372603675562291),
    (8, 0.437639, 2.649634, -9.15210598520902218e-11, 9.2301779140934688033e-11, 215985321.86108489274, 217276053.0670146153),
    (0, 28.654692, 0.897517, 98930357.488179789147, 388212695.29147483482, -388212695.29147483484, 98930357.488179789163),
    (1, 28.654692, 0.897517, -381813210.71281885271, 101861176.15821170305, -101861176.15821170303, -381813210.71281885269),
    (2, 28.654692, 0.897517, -109989464.75380097984, -362945616.81760763334, 362945616.81760763337, -109989464.75380097985),
    (3, 28.654692, 0.897517, 332630582.23467462826, -121450033.52344765168, 121450033.52344765166, 332630582.23467462823),
    (5, 28.654692, 0.897517, -245511286.01256094618, 143248140.33238064106, -143248140.33238064105, -245511286.01256094614),
    (8, 28.654692, 0.897517, 135894816.96024596142, 95415178.448233163968, -95415178.448233164034, 135894816.96024596142),
    (0, 0.918251, -1.544701, 1.2218178853446753132, 0.012195331295767075122, -0.289388929365931419, -1.2112365012559783939),
    (1, 0.918251, -1.544701, 0.015990829696907687328, -0.5089272649207996093, -0.52767707652042049109, -0.45728218384008656759),
    (2, 0.918251, -1.544701, -0.11281559246389278974, -0.006300931331139193654, 1.2550468003539289246, 0.036331174996786968127),
    (3, 0.918251, -1.544701, -0.0013753903404303026453, 0.016941570163118158332, 0.51211851546383148614, 5.9266689582164294742),
    (5, 0.918251, -1.544701, 0.000023225670575880339134, -0.00017452722376767674953, -47.195169652878216476, -352.27278151134909104),
    (8, 0.918251, -1.544701, 4.902655427231194436e-8, 1.0448697211229296853e-8, -771123.09369566862214, 164621.70551372319319),
    (0, 14.732342, 0.429989, 46.993003580220525312, -11.827467302429262915, 11.827386196656856867, 46.992565317929487424),
    (1, 14.732342, 0.429989, 13.134449243284925795, 45.97728883237777555, -45.977735909887875255, 13.134518198261766769),
    (2, 14.732342, 0.429989, -42.770327469437367494, 16.757675218145803549, -16.75764537856951819, -42.769855397570279143),
    (3, 14.732342, 0.429989, -21.793314462547570209, -37.000711246257509056, 37.001219118323590429, -21.793270289449184476),
    (5, 14.732342, 0.429989, 29.765165601810166348, 17.361095623800241978, -17.361644398876426998, 29.764816428203260787),
    (8, 14.732342, 0.429989, -13.004871597246948048, -14.564168122936473774, 14.565361577647777153, -13.004672096674612406),
    (0, 27.001476, 2.343688, 17715416.445813877723, -7213097.6949605743194, 7213097.6949605737485, 17715416.445813877955),
    (1, 27.001476, 2.343688, 6885316.9556794429226, 17575106.486916208134, -17575106.486916207891, 6885316.9556794434981),
    (2, 27.001476, 2.343688, -17139556.090208408853, 5939074.9886764667968, -5939074.9886764662079, -17139556.090208409128),
    (3, 27.001476, 2.343688, -4482673.1474804048561, -16371704.782519423134, 16371704.782519422801, -4482673.1474804054656),
    (5, 27.001476, 2.343688, 762283.99222166338429, 13696828.066633991575, -13696828.066633991022, 762283.99222166404092),
    (8, 27.001476, 2.343688, 7299884.7352246075532, 3588079.2430282546253, -3588079.2430282551675, 7299884.7352246088928),
    (0, 13.407514, 2.083629, 13012.037747542789873, 440.75189433217091618, -440.75189588988738294, 13012.037748492040707),
    (1, 13.407514, 2.083629, -672.84647068005760304, 12576.193541809737169, -12576.193540802329664, -672.84646908912768935),
    (2, 13.407514, 2.083629, -11328.131348352478813, -1273.7456123834827924, 1273.7456140742571557, -11328.131349549113094),
    (3, 13.407514, 2.083629, 1999.9323184230641377, -9444.8688875034288572, 9444.8688859374476332, 1999.9323165677617415),
    (5, 13.407514, 2.083629, -2774.5732804611633588, 4946.5605640897353188, -4946.5605607661839607, -2774.573278177776562),
    (8, 13.407514, 2.083629, 553.33786126842524831, 1454.070559781125993, -1454.0705594635505813, 553.33787506580926161),
    (0, 0.950547, -2.148981, 1.0820330649105494506, -0.21605877701596760201, -0.45970088495581432845, -1.316907103601815914),
    (1, 0.950547, -2.148981, -0.31317053700929812266, -0.38728868336683636074, -0.0052860737968005753474, 0.026277497379298594233),
    (2, 0.950547, -2.148981, -0.039504060180044423944, 0.10956947983856878816, 0.41947691437154041559, 1.2773769645793177035),
    (3, 0.950547, -2.148981, 0.01788590244826854569, -0.0039098136907004578112, -5.4610115590804392861, -1.4856429241087965065),
    (5, 0.950547, -2.148981, -0.000044033393899041936788, 0.00020040648950576822803, 60.969323059608834564, 301.73839506042327191),
    (8, 0.950547, -2.148981, -4.1691426626164202349e-9, 6.5093495805331581161e-8, 34916.092038824244443, 607221.03750247340325),
    (0, 31.1583, 2.498705, 7322106.8751743453931, -5704636.9731275625362, 5704636.9731275614744, 7322106.8751743456826),
    (1, 31.1583, 2.498705, 5555029.3985754505077, 7325940.4869438195463, -7325940.4869438192405, 5555029.3985754515761),
    (2, 31.1583, 2.498705, -7325579.4127188114004, 5114506.0243142956212, -5114506.024314294534, -7325579.4127188117565),
    (3, 31.1583, 2.498705, -4408708.6047932685376, -7287650.1916039248276, 7287650.1916039243827, -4408708.604793269653),
    (5, 31.1583, 2.498705, 2400555.0320214929919, 6900577.133645769021, -6900577.1336457682511, 2400555.0320214941649),
    (8, 31.1583, 2.498705, 4935932.4716984137575, 869481.40422547149952, -869481.40422547248593, 4935932.4716984155607),
    (0, 1.138001, -5.08524, 1.2393156608130594324, -0.24653502827204449611, -0.94028982363915498486, -3.8485509367919868149),
    (1, 1.138001, -5.08524, 0.29494660357384013637, 0.56860122969588683362, 1.5024548037467758405, -0.62806932722727987046),
    (2, 1.138001, -5.08524, -0.11985282943406219081, 0.12780744584196619152, 0.87418438492964561847, 0.98737047241555253084),
    (3, 1.138001, -5.08524, -0.030036144981760892092, -0.01262726946839993379, 2.8489358576040800432, -0.96929298555596945005),
    (5, 1.138001, -5.08524, 0.00048923831463787422464, -0.00016750210702517425379, -113.49767058415237681, -41.088317719304066042),
    (8, 1.138001, -5.08524, -2.7728001763299166721e-7, -3.7504084242173686336e-8, 139986.49551902294704, -17956.910785824977711),
    (0, 1.200101, 2.727196, 0.75487359118906304781, 0.23391245887254462451, -0.21774963130546798918, 1.1814427712192522736),
    (1, 1.200101, 2.727196, -0.5115723759199915363, 0.14495824044438566919, 0.35634904248014470319, -0.66994607471804360643),
    (2, 1.200101, 2.727196, 0.12278295266774502864, -0.11177366042791219076, -0.77538847146177480138, -0.39857219495640458782),
    (3, 1.200101, 2.727196, -0.013032884211707636815, 0.031280339278431318264, 1.4744266588771216921, 2.9265476844337239262),
    (5, 1.200101, 2.727196, 0.0002745233491205455895, 0.00055872514075831842875, -43.824114870320060855, 94.692548980417012532),
    (8, 1.200101, 2.727196, -4.0153620019146737023e-7, 5.8228722247821827357e-8, 97919.441375815282068, 13344.288153557566375),
    (0, 0.726124, 4.762059, 1.1354837342465297531, 0.013949114317857690142, -0.44507545063707429264, 3.4293215031741743377),
    (1, 0.726124, 4.762059, 0.02170946329264291577, -0.38679242052131507005, 1.114348719487899311, -0.56768699526181313237),
    (2, 0.726124, 4.762059, -0.068466930349006268269, -0.0071221796163475564522, 2.1591458640310213475, -0.44143249318630428909),
    (3, 0.726124, 4.762059, -0.0012499262843161236157, 0.0081457799091021464305, 1.9049085922933153918, 12.326373056573334179),
    (5, 0.726124, 4.762059, 0.000013319743028828028076, -0.000052050947959635016651, -291.79850001494728236, -1135.2727534239743002),
    (8, 0.726124, 4.762059, 7.0009508256762908552e-9, 2.9501439610617463168e-9, -4805518.1968989168278, 2027334.5155880807231),
    (0, 0.200852, 1.298148, 1.0086344786948117743, -0.005253583621422171154, -1.1063177504058213899, 0.84267051827454231132),
    (1, 0.200852, 1.298148, 0.027413390109550305619, 0.097062800521644328094, -0.97267314561358994327, 2.9377571929691440703),
    (2, 0.200852, 1.298148, -0.0043191967203946912298, 0.0026305577188661699409, 26.670569277410071753, 16.362350172317638354),
    (3, 0.200852, 1.298148, -0.0001236015882480376659, -0.00011550381896921397786, 457.82390770103381732, -426.71820664649751031),
    (5, 0.200852, 1.298148, 8.3431643461051727724e-8, 1.7493715975121675887e-8, -730451.29747911223675, 152827.19938492834545),
    (8, 0.200852, 1.298148, -1.4734046839649107519e-13, -2.1037643380033619037e-13, 88866172727.858244208, -126840554678.83848471),
    (0, 6.003521, -5.500549, -8.6800666692308608905, 7.3761995447420167189, 22.128946013024383164, 26.044841658207793173),
    (1, 6.003521, -5.500549, -7.4927488562205008533, -7.707200257400686929, -23.116668360061531744, 22.478138679445159857),
    (2, 6.003521, -5.500549, 5.0996586744932114293, -7.4366053695596408117, -22.309023728594402704, -15.304801844332675009),
    (3, 6.003521, -5.500549, 6.4080639372952049837, 1.797996382561024981, 5.3866939609793578043, -19.227208480304765965),
    (5, 6.003521, -5.500549, -1.7970738214074303163, 1.4997019559392331828, 4.5070554915696772121, 5.4101804177396374614),
    (8, 6.003521, -5.500549, 0.08969942542031628396, -0.1453488371717949381, -0.49939501496888079405, -0.47674985267641686513),
    (0, 5.217826, 2.136154, -11.682082169407766086, 8.7768543554565288309, -8.7726841594864467248, -11.681769844282746425),
    (1, 5.217826, 2.136154, -7.3969531512065250807, -11.215534097368466184, 11.215671387021453343, -7.4014675451388144475),
    (2, 5.217826, 2.136154, 9.570979251568900247, -4.079753538043550246, 4.0740940285526946677, 9.5715494834773590855),
    (3, 5.217826, 2.136154, 0.82542207637940397474, 6.6955599129524482311, -6.6930038184273754581, 0.83336578332720319167),
    (5, 5.217826, 2.136154, 1.017917138405286624, -1.3679032830825711812, 1.3453699688982670441, 1.0012255715872112317),
    (8, 5.217826, 2.136154, 0.033950834156310933891, -0.066462535191512812779, -0.2148356496831791976, -0.35194581682013500775),
    (0, 7.173681, 2.845526, 1.226152777151803588, -0.085681156178798307496, 0.072442831955355853276, 1.2601869241419868946),
    (1, 7.173681, 2.845526, 0.014366735271097198252, 1.1756739463066040545, -1.1400257411829840468, 0.025679601899938091624),
    (2, 7.173681, 2.845526, -1.1343524092449790335, -0.22900073575273874562, 0.23365307475165861851, -1.1743030139555304368),
    (3, 7.173681, 2.845526, 0.55336695660828428664, -0.86899947473349539083, 0.82437070776548845633, 0.56260423452087016933),
    (5, 7.173681, 2.845526, -0.80817250208252481347, -0.12882361472039242805, 0.15206485197382590536, -0.87459421325148102928),
    (8, 7.173681, 2.845526, 0.023064035904295494547, -0.19991767632098993222, 0.060125131792484887549, -0.19312488255424632079),
    (0, 6.697184, 5.970653, 1.0424278466384371583, -0.62780948135108931924, 1.8535956333237356912, 3.1525056004455893764),
    (1, 6.697184, 5.970653, -0.56951344429842531937, -1.0413302462128270559, 3.0960754112857380064, -1.7373685743831324962),
    (2, 6.697184, 5.970653, -1.10864912580030978, 0.27960521590449584969, -0.81426841835612235699, -3.3619246595902240473),
    (3, 6.697184, 5.970653, -0.11191562769694770518, 0.99664583042456667002, -2.9414642571572106059, -0.32285784999782871346),
    (5, 6.697184, 5.970653, 0.7535344041670333515, -0.11243521639324529509, 0.28171210528994901269, 2.3211328478581485275),
    (8, 6.697184, 5.970653, -0.015983765275142797087, -0.13923256502549737064, 0.32233345656008609733, -0.39531265665143859105),
    (0, 23.549092, -2.080557, 16463055.932040065256, 67842004.740790476692, 67842004.74079047656, -16463055.932040065114),
    (1, 23.549092, -2.080557, 66402792.39583336875, -16872608.735747694326, -16872608.73574769447, -66402792.395833368885),
    (2, 23.549092, -2.080557, -17964176.599191257264, -62220239.95798297544, -62220239.957982975292, 17964176.599191257117),
    (3, 23.549092, -2.080557, -55688903.233398775783, 19366339.487399791509, 19366339.487399791662, 55688903.233398775953),
    (5, 23.549092, -2.080557, 38213730.312687915745, -21125689.97701671411, -21125689.977016714276, -38213730.312687916002),
    (8, 23.549092, -2.080557, 16617364.125387956061, 12844941.235053264441, 12844941.235053263829, -16617364.125387955941),
    (0, 2.565595, 5.656099, 0.045583745054712637007, 1.1032479748981445193, -3.2226413565559351057, 0.19949725785847877869),
    (1, 2.565595, 5.656099, 1.0867735204842369745, 0.21489314283487032998, -0.70226832020671770853, 3.3664840520239957593),
    (2, 2.565595, 5.656099, 0.54212242934358553131, -0.47047991467744887242, 1.2394231339028400404, 1.6042920878518404625),
    (3, 2.565595, 5.656099, 0.028056379270283135779, -0.31289119340752036989, 0.79929391970586683012, -0.20723396460853939336),
    (5, 2.565595, 5.656099, -0.025732670449876418443, -0.0071165334665612073786, 2.2575722645830970167, -1.0428322293704335473),
    (8, 2.565595, 5.656099, 0.000022230466573009778198, 0.00017059324043873904848, -18.359000849919192247, 233.75488846201944224),
    (0, 0.442215, -1.766986, 1.0455971155699134816, -0.01911963571136938125, -0.67098183501765942511, -1.1525394857812021042),
    (1, 0.442215, -1.766986, -0.046138633729352321002, -0.22138578055316197391, 0.075111553453159227796, -1.1561245416219789283),
    (2, 0.442215, -1.766986, -0.022869332691391103672, 0.0096309438137130209468, 5.7332443833337430478, 2.5049950941377437438),
    (3, 0.442215, -1.766986, 0.0010186031730726326385, 0.001510727314609799785, -32.408179781438590466, 47.603693437112649797),
    (5, 0.442215, -1.766986, -3.6950500341481211459e-6, -2.4566098878733871149e-6, 11915.380928001288895, -7895.3001591399285549),
    (8, 0.442215, -1.766986, -1.135110706937525173e-13, -1.423922994822876445e-10, 387522.86884831552554, -279030108.21883180415),
    (0, 10.159915, 2.842898, -2.33847534128828138, 0.88205120333804746827, -0.87435450767524349401, -2.3483747787448464186),
    (1, 10.159915, 2.842898, -0.76657477319252549817, -2.3392475017828507489, 2.3288394253903607468, -0.77393160306808790294),
    (2, 10.159915, 2.842898, 2.3471869829649310335, -0.39754889006970564399, 0.3913841572097684447, 2.3590734242317220167),
    (3, 10.159915, 2.842898, -0.16266322606781009272, 2.2168970490550853418, -2.2027922389887057741, -0.15906470038352182284),
    (5, 10.159915, 2.842898, 1.3787462876458040773, -1.1624067094384885635, 1.1453901090723882078, 1.3877371699128199658),
    (8, 10.159915, 2.842898, 0.9777640006180407863, -0.23003735385729250547, 0.1990648824127050409, 1.0052522102564505951),
    (0, 1.280621, -5.710415, 0.80495935360672692593, -0.34138559116417994302, -1.0416940327523804779, -2.7478635705049017443),
    (1, 1.280621, -5.710415, 0.54898667212416932883, 0.2198743117936935684, 0.24973233419806125264, -1.7179848711168201493),
    (2, 1.280621, -5.710415, 0.10168441367722690029, 0.16530368735300807412, -0.084645888409714807618, 0.28164631192364636903),
    (3, 1.280621, -5.710415, -0.0022387039169919783294, 0.041912939996351994481, 0.0048474085662442175804, 2.6005917608585876641),
    (5, 1.280621, -5.710415, -0.00082221994630073994806, 0.00029106913244703258599, 68.880518381748897541, 26.906621523043183967),
    (8, 1.280621, -5.710415, -1.1758783241203840813e-7, -6.7769019495616334544e-7, 10627.969851787700859, -57172.753092896065393),
    (0, 9.84801, 5.224901, -100.10101254632368044, -679.09651807804384477, 2037.2895373148795903, -300.30308161463676994),
    (1, 9.84801, 5.224901, -651.21802530270625967, 77.847488765410439681, -233.54242080818371197, -1953.6540946163366887),
    (2, 9.84801, 5.224901, 21.469531538191494957, 571.5879665865131084, -1714.7638749990308618, 64.408644778215974876),
    (3, 9.84801, 5.224901, 453.15983148046245566, 43.598167006720619147, -130.79455933379592071, 1359.4795319058059227),
    (5, 9.84801, 5.224901, -191.90705836874544049, -105.98982136921639762, 317.9695472050936833, -575.72128437639235251),
    (8, 9.84801, 5.224901, 37.034660456670984596, -6.4074394704218296073, 19.221613109844587093, 111.10408179091719413),
    (0, 20.716261, 3.054342, 0.27823016225074741696, 0.44814663925935923248, -0.42466598674107723653, 0.29491876403764842706),
    (1, 20.716261, 3.054342, -0.47752028367598744864, 0.25023936126397766438, -0.23407401871569483773, -0.50145714257489796624),
    (2, 20.716261, 3.054342, -0.23019932414443489496, -0.46819623750546649879, 0.44295950472261829944, -0.24472178629333986844),
    (3, 20.716261, 3.054342, 0.51392164897919372052, -0.15630835272691912432, 0.14475296308505545779, 0.54107653038598015101),
    (5, 20.716261, 3.054342, -0.52708225138889919618, -0.038791072172140453979, 0.039326464203170319691, -0.55790653701207336706),
    (8, 20.716261, 3.054342, -0.42816356412632921906, 0.23701763100070326813, -0.21644113064765567328, -0.45578360919301353085),
    (0, 18.372986, 3.406017, -2.3016197936737549418, 11.111968130277698457, -33.33726613191090781, -6.9041703353938875197),
    (1, 18.372986, 3.406017, 11.098850899193188369, 1.9915343497631837755, -5.9752617070517791705, 33.295162893869132129),
    (2, 18.372986, 3.406017, 1.0787827260301814988, -11.00546279037009981, 33.017858858274493188, 3.2357864232405114611),
    (3, 18.372986, 3.406017, -10.699344700066106248, 0.38257967843124791542, -1.1473574279607059173, -32.096442577026629318),
    (5, 18.372986, 3.406017, 8.6142338206280182135, -4.3162401858885669628, 12.949054080660762617, 25.840874511685635432),
    (8, 18.372986, 3.406017, 7.3698074934651320218, 0.35473738528705969881, -1.0651340136413187368, 22.107035917789046854),
    (0, 0.482096, 1.562649, 1.0589454615586400271, -0.0009745137120825201877, -0.60684727264624394112, 1.0546068383842731498),
    (1, 0.482096, 1.562649, 0.0021378045054832877315, 0.24810894043244362481, -0.25949571920960473798, 1.1066844733069942724),
    (2, 0.482096, 1.562649, -0.029614693106903761948, 0.00049190735108354147876, 5.1890614797989552075, 0.059293824739607117854),
    (3, 0.482096, 1.562649, -0.000058441792045779118966, -0.0023676946883041837794, 1.1022189008127260164, -44.15542312904765496),
    (5, 0.482096, 1.562649, 2.7994931540617347071e-7, 6.8418796131527458405e-6, -378.9821561417761028, 9244.5644975190965284),
    (8, 0.482096, 1.562649, 2.839122551885190194e-10, -1.8561230579105347254e-11, -139291137.78676711145, -9110574.9536091017128),
    (0, 1.513372, 1.532311, 1.6571270698785196947, -0.057846691086046424693, -0.075700377625041548615, 1.6470373625373325557),
    (1, 1.513372, 1.532311, 0.058295546350248107458, 0.99258172679503698774, -1.00703583019015449, 0.23110723976122000394),
    (2, 1.513372, 1.532311, -0.34338567598776093911, 0.031333742186115464784, 0.32968892163331546103, -0.3054211652965730156),
    (3, 1.513372, 1.532311, -0.010459343292493505536, -0.082463127365260570274, 0.23390151435417287433, -1.132924187017471573),
    (5, 1.513372, 1.532311, 0.00045067254614564938219, 0.0022270439718821638488, -5.4010006521181724532, 26.23313765361529282),
    (8, 1.513372, 1.532311, 2.7019178638739787457e-6, -8.7368040480055954523e-7, -13091.429774034016772, -4252.6532710763070004),
];

// (twice order, modulus, principal argument, J re, J im)
pub const HALF_ORDER_J: &[(u32, f64, f64, f64, f64)] = &[
    (1, 0.2, 0.3, 0.35107854372691494287, 0.051706368959828683214),
    (1, 0.9, -1.0, 0.74519261026837170305, -0.29767823498246309247),
    (1, 1.5, 2.0, 0.38445315987127809907, 1.1896837240569682587),
    (1, 4.0, -0.5, -0.79080969950497196155, 1.0766987709086594935),
    (1, 11.0, 0.1, -0.40060690266758971153, 0.0038350970661533961011),
    (3, 0.2, 0.3, 0.02137276899608859733, 0.010264697246391604055),
    (3, 0.9, -1.0, 0.033662227754784294722, -0.23258235181263641694),
    (3, 1.5, 2.0, -0.5662653708437731024, -0.012346436726932589624),
    (3, 4.0, -0.5, 0.83235885329069311151, 0.92530480202513408973),
    (3, 11.0, 0.1, -0.031985729363375147945, -0.31680314049918669236),
    (5, 0.2, 0.3, 0.00069562948086924478809, 0.00064595182000917663456),
    (5, 0.9, -1.0, -0.032195677250757503823, -0.02678507518072461279),
    (5, 1.5, 2.0, 0.064392759281851337161, -0.14960057366641679151),
    (5, 4.0, -0.5, 1.0059463458542399715, -0.16838468322749801164),
    (5, 11.0, 0.1, 0.38330140979490983734, -0.088933424263488993456),
];

// (m, modulus, argument, H1 re, H1 im) where H1 is recessive
pub const RECESSIVE_H1: &[(u32, f64, f64, f64, f64)] = &[
    (0, 5.0, 1.2, 0.0030193887503944779405, 0.0013435619323313729994),
    (1, 5.0, 1.2, 0.0015656158214424568713, -0.003245832553532262009),
    (2, 5.0, 1.2, -0.0040025606595808124403, -0.002397709026210690484),
    (4, 5.0, 1.2, 0.0082306993422441717273, 0.0098529227120985477257),
    (7, 5.0, 1.2, -0.17727078165953314001, -0.012988858369367749249),
    (10, 5.0, 1.2, 6.1671434771883266796, -3.8874269690887599588),
    (0, 9.0, 1.5707, 2.9602903629666183349e-8, -0.000032392037699383975732),
    (1, 9.0, 1.5707, -0.00003414637216755481028, -3.1371209784207618216e-8),
    (2, 9.0, 1.5707, -3.7305219234516122823e-8, 0.000039980119696550012995),
    (4, 9.0, 1.5707, 7.3747731108169975724e-8, -0.0000745903247303078213),
    (7, 9.0, 1.5707, 0.0003928090416479508968, 4.434072732529507055e-7),
    (10, 9.0, 1.5707, -5.9415449360657921973e-6, 0.0045074134985050642701),
    (0, 14.0, 0.9, 1.3975290798134011003e-6, 3.3796586185478388836e-6),
    (1, 14.0, 0.9, 3.5038774831964077509e-6, -1.3633401242161170904e-6),
    (2, 14.0, 0.9, -1.2389427705447362081e-6, -3.8928225231166489904e-6),
    (4, 14.0, 0.9, 3.3344601430276529169e-7, 5.6883549200976739868e-6),
    (7, 14.0, 0.9, -0.000011716869483471606066, -8.1857431386719410581e-6),
    (10, 14.0, 0.9, 0.000059637814162546545206, 1.2983438928030755483e-6),
    (0, 17.4227, 2.0423, -3.3024921959615782417e-8, 9.9456558859149783069e-9),
    (1, 17.4227, 2.0423, 1.061777002595927438e-8, 3.3734869413340162958e-8),
    (2, 17.4227, 2.0423, 3.592126536393782101e-8, -1.2790507030238709606e-8),
    (4, 17.4227, 2.0423, -4.5459989957720507663e-8, 2.4217602007016616644e-8),
    (7, 17.4227, 2.0423, -9.0945694262318274181e-8, -7.435004895472021563e-8),
    (10, 17.4227, 2.0423, 4.103695960588624251e-8, -4.144862791875546615e-7),
    (0, 21.6198, 1.0364, -1.3640865027158368692e-9, -3.925767727635732785e-10),
    (1, 21.6198, 1.0364, -4.161032723145944645e-10, 1.3865229976997885823e-9),
    (2, 21.6198, 1.0364, 1.4548623995073583096e-9, 4.91030480989487774e-10),
    (4, 21.6198, 1.0364, -1.7410334111851987592e-9, -8.640083610394070687e-10),
    (7, 21.6198, 1.0364, 2.7339376459519123654e-9, -2.5155387130286977943e-9),
    (10, 21.6198, 1.0364, 1.9318708927920575686e-9, 9.9090298025665700681e-9),
    (0, 24.0114, 2.2597, -1.4849965693829895813e-10, 1.4383128255587611047e-9),
    (1, 24.0114, 2.2597, 1.4633030197367762121e-9, 1.3213558873289717194e-10),
    (2, 24.0114, 2.2597, 7.9515112313823487472e-11, -1.5393968567701918042e-9),
    (4, 24.0114, 2.2597, 1.8969469905668116283e-10, 1.8581877205121080312e-9),
    (7, 24.0114, 2.2597, -2.7535687550775437689e-9, 1.5754910879193492355e-9),
    (10, 24.0114, 2.2597, -6.6060285327373947408e-9, -2.9176708730024792384e-9),
    (0, 26.0, 1.4, -1.136452102993343405e-12, 2.4060250613684998763e-13),
    (1, 26.0, 1.4, 2.4147375781598067664e-13, 1.1585699563917942398e-12),
    (2, 26.0, 1.4, 1.2274332611010666883e-12, -2.4375953876001051645e-13),
    (4, 26.0, 1.4, -1.5443354903565898088e-12, 2.4678685268610843003e-13),
    (7, 26.0, 1.4, -1.6275093617789788169e-13, -2.8747105213035417215e-12),
    (10, 26.0, 1.4, 7.3043727447954991005e-12, 7.1080404486389450853e-13),
    (0, 4.0, 1.9, -0.0087520503277203545393, -0.0010672491587450259509),
    (1, 4.0, 1.9, -0.00086600864221524244751, 0.009780301395899534505),
    (2, 4.0, 1.9, 0.013519586141415798774, -0.00010393351525924148931),
    (4, 4.0, 1.9, -0.043767138944793228095, 0.016148891813763403513),
    (7, 4.0, 1.9, -0.95695846416335544951, -0.48003481648822841758),
    (10, 4.0, 1.9, -31.841166797053836535, -72.995971319803652224),
    (0, 12.0, -4.8, 38792.365229777355739, -61109.907985750158881),
    (1, 12.0, -4.8, 58664.459001066563818, 36912.485997443719757),
    (2, 12.0, -4.8, -31808.366446207293259, 51908.299177022731885),
    (4, 12.0, -4.8, 17584.756573250360794, -31898.209696842819987),
    (7, 12.0, -4.8, -8534.0040584174829301, -3484.2069374616448033),
    (10, 12.0, -4.8, -274.34576831114846374, 1176.3945618817683423),
    (0, 20.0, -4.1, 871901.54942233282053, -4510196.2908821724641),
    (1, 20.0, -4.1, 4404677.0529975568582, 920188.85783754336574),
    (2, 20.0, -4.1, -1049795.9860806949252, 4096876.9903905065272),
    (4, 20.0, -4.1, 1373598.4584498994859, -2999542.1434272874876),
    (7, 20.0, -4.1, -1017002.3057208209469, -1314510.3390817867292),
    (10, 20.0, -4.1, -571695.58245222047788, -36737.02415844382382),
    (0, 8.0, 7.5, 885.80779657421365528, 545.16259866040884869),
    (1, 8.0, 7.5, -491.76787996133585784, 845.11137325428497976),
    (2, 8.0, 7.5, -730.24521329593053092, -356.60667129633639702),
    (4, 8.0, 7.5, 384.63051842396242384, 70.606149342092533782),
    (7, 8.0, 7.5, -25.063024346387321115, -50.554437661538588429),
    (10, 8.0, 7.5, -0.99445846666016462786, 3.2641851862137402597),
];
