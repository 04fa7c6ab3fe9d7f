// Tracy-Widom GOE CDF on [-10, 6] step 0.01.
// Generated by tools/gen_tw_goe_table.py; do not edit by hand.

namespace kpzlab::detail {

extern const double kTwGoeXMin = -10.0;
extern const double kTwGoeStep = 0.01;
extern const int kTwGoeCount = 1601;

extern const double kTwGoeCdf[] = {
    0.0000000000000000e+00, 3.6196640668792363e-22, 4.1463968715618881e-22, 4.7485685163874027e-22,
    5.4368067412964332e-22, 6.2232111466718415e-22, 7.1215534503156226e-22, 8.1475044925382868e-22,
    9.3188914939911619e-22, 1.0655989520912490e-21, 1.2181851619101102e-21, 1.3922682648106127e-21,
    1.5908262488646043e-21, 1.8172425017872224e-21, 2.0753600058522812e-21, 2.3695426420258756e-21,
    2.7047445176681304e-21, 3.0865883473535105e-21, 3.5214540457538120e-21, 4.0165788368414747e-21,
    4.5801703468038729e-21, 5.2215343311668160e-21, 5.9512188920658482e-21, 6.7811772720795881e-21,
    7.7249515694910134e-21, 8.7978800096187474e-21, 1.0017330731649745e-20, 1.1402965414352265e-20,
    1.2977036471747222e-20, 1.4764722006441165e-20, 1.6794503219548405e-20, 1.9098589548384916e-20,
    2.1713397443499512e-20, 2.4680089412995568e-20, 2.8045180763365740e-20, 3.1861222361981978e-20,
    3.6187568747845756e-20, 4.1091242036434275e-20, 4.6647903314836116e-20, 5.2942944620066136e-20,
    6.0072716152898158e-20, 6.8145905120565961e-20, 7.7285084544654718e-20, 8.7628452538351106e-20,
    9.9331784975389304e-20, 1.1257062716958298e-19, 1.2754275319009818e-19, 1.4447092478831173e-19,
    1.6360598564557959e-19, 1.8523033081011086e-19, 2.0966179582286254e-19, 2.3725801518915241e-19,
    2.6842130559237834e-19, 3.0360413563346750e-19, 3.4331525098507533e-19, 3.8812653175239999e-19,
    4.3868066761933076e-19, 4.9569974612589689e-19, 5.5999486027816464e-19, 6.3247685375074926e-19,
    7.1416833533702621e-19, 8.0621710917640484e-19, 9.0991118379903373e-19, 1.0266955413544953e-18,
    1.1581908687235027e-18, 1.3062144747660750e-18, 1.4728036429714092e-18, 1.6602416965032520e-18,
    1.8710870833724844e-18, 2.1082058235213340e-18, 2.3748076973349560e-18, 2.6744865968792258e-18,
    3.0112655074254439e-18, 3.3896466380355438e-18, 3.8146672766510999e-18, 4.2919620078270487e-18,
    4.8278320005968546e-18, 5.4293221506412337e-18, 6.1043069456958718e-18, 6.8615860168254768e-18,
    7.7109904417029750e-18, 8.6635009803724994e-18, 9.7313795502528036e-18, 1.0928315386537951e-17,
    1.2269587488030933e-17, 1.3772245118228540e-17, 1.5455308318796559e-17, 1.7339990599144918e-17,
    1.9449946193598440e-17, 2.1811544528731090e-17, 2.4454174820153850e-17, 2.7410584022872458e-17,
    3.0717251695138412e-17, 3.4414805705463065e-17, 3.8548483119536147e-17, 4.3168641051795664e-17,
    4.8331322759370659e-17, 5.4098884798387451e-17, 6.0540691658994457e-17, 6.7733884951188821e-17,
    7.5764234934174598e-17, 8.4727082974151509e-17, 9.4728384385333642e-17, 1.0588586206490639e-16,
    1.1833028238189672e-16, 1.3220686593198005e-16, 1.4767684703456348e-16, 1.6491919723572440e-16,
    1.8413252960224404e-16, 2.0553720226076949e-16, 2.2937764146569446e-16, 2.5592490648467318e-16,
    2.8547952078838512e-16, 3.1837459643823517e-16, 3.5497928120277892e-16, 3.9570256082057537e-16,
    4.4099745198770957e-16, 4.9136562510707646e-16, 5.4736249962114662e-16, 6.0960285888927030e-16,
    6.7876703609807449e-16, 7.5560772764207728e-16, 8.4095749582219059e-16, 9.3573702862068956e-16,
    1.0409642307690578e-15, 1.1577642273789439e-15, 1.2873803691072354e-15, 1.4311863362342624e-15,
    1.5906994482084729e-15, 1.7675952952223649e-15, 1.9637238193041099e-15, 2.1811269843171397e-15,
    2.4220581872440972e-15, 2.6890035772803467e-15, 2.9847054646858440e-15, 3.3121880181400141e-15,
    3.6747854676428031e-15, 4.0761730499289966e-15, 4.5204009550473937e-15, 5.0119315563629188e-15,
    5.5556802319202495e-15, 6.1570601130431878e-15, 6.8220311264238316e-15, 7.5571537289838314e-15,
    8.3696477706985981e-15, 9.2674569595790085e-15, 1.0259319445398412e-14, 1.1354845084783410e-14,
    1.2564600000280010e-14, 1.3900199100264546e-14, 1.5374407285473543e-14, 1.7001250131831357e-14,
    1.8796134908562667e-14, 2.0775982865782481e-14, 2.2959373807238591e-14, 2.5366704052260218e-14,
    2.8020358986704527e-14, 3.0944901506427503e-14, 3.4167277769177992e-14, 3.7717041792473735e-14,
    4.1626600566741436e-14, 4.5931481495590774e-14, 5.0670624129330882e-14, 5.5886698324740717e-14,
    6.1626451144592499e-14, 6.7941085005592215e-14, 7.4886669794325790e-14, 8.2524591898832014e-14,
    9.0922043349716754e-14, 1.0015255453081914e-13, 1.1029657420677669e-13, 1.2144210092502798e-13,
    1.3368537018468713e-13, 1.4713160212601491e-13, 1.6189581488403972e-13, 1.7810370917030878e-13,
    1.9589263010015437e-13, 2.1541261277153252e-13, 2.3682751862828873e-13, 2.6031627020824860e-13,
    2.8607419248791167e-13, 3.1431446969397929e-13, 3.4526972716096047e-13, 3.7919374857710775e-13,
    4.1636333978226529e-13, 4.5708035116487438e-13, 5.0167387165550051e-13, 5.5050260833667701e-13,
    6.0395746678734389e-13, 6.6246434846119766e-13, 7.2648718266747632e-13, 7.9653121208588850e-13,
    8.7314655221181007e-13, 9.5693204670016531e-13, 1.0485394422640284e-12, 1.1486779085959546e-12,
    1.2581189307233047e-12, 1.3777016032938845e-12, 1.5083383585246642e-12, 1.6510211619428808e-12,
    1.8068282126199324e-12, 1.9769311873512642e-12, 2.1626030711865381e-12, 2.3652266198748892e-12,
    2.5863035031741085e-12, 2.8274641815959622e-12, 3.0904785730381941e-12, 3.3772675699023832e-12,
    3.6899154717384772e-12, 4.0306834032024102e-12, 4.4020237921919199e-12, 4.8065959884526785e-12,
    5.2472831087467968e-12, 5.7272102008750629e-12, 6.2497638254628621e-12, 6.8186131614912500e-12,
    7.4377327491039457e-12, 8.1114269912791800e-12, 8.8443565445536212e-12, 9.6415667381617479e-12,
    1.0508518170738380e-11, 1.1451119644171306e-11, 1.2475763605311048e-11, 1.3589364278109424e-11,
    1.4799398681388884e-11, 1.6113950740911435e-11, 1.7541758718747905e-11, 1.9092266198221806e-11,
    2.0775676878947785e-11, 2.2603013453782310e-11, 2.4586180857912141e-11, 2.6738034199879867e-11,
    2.9072451705161788e-11, 3.1604413025060678e-11, 3.4350083287199085e-11, 3.7326903288898998e-11,
    4.0553686261311668e-11, 4.4050721660377692e-11, 4.7839886470661825e-11, 5.1944764539910881e-11,
    5.6390774495969501e-11, 6.1205306833510153e-11, 6.6417870796037676e-11, 7.2060251718956829e-11,
    7.8166679542229043e-11, 8.4774009246469840e-11, 9.1921914014372377e-11, 9.9653091970183798e-11,
    1.0801348740395688e-10, 1.1705252744426311e-10, 1.2682337520363320e-10, 1.3738320048484673e-10,
    1.4879346920395667e-10, 1.6112025275756641e-10, 1.7443455863762343e-10, 1.8881268367711330e-10,
    2.0433659139470372e-10, 2.2109431499600477e-10, 2.3918038768357662e-10, 2.5869630202783033e-10,
    2.7975100025646668e-10, 3.0246139743154148e-10, 3.2695293960089467e-10, 3.5336019913474377e-10,
    3.8182750958933335e-10, 4.1250964257761070e-10, 4.4557252927256661e-10, 4.8119402932261583e-10,
    5.1956475012014165e-10, 5.6088891953499169e-10, 6.0538531540448018e-10, 6.5328825526077169e-10,
    7.0484864997569235e-10, 7.6033512521304386e-10, 8.2003521479914512e-10, 8.8425663035493109e-10,
    9.5332861177699392e-10, 1.0276033634123346e-09, 1.1074575810416419e-09, 1.1932940750699439e-09,
    1.2855434956221445e-09, 1.3846661655543757e-09, 1.4911540277213227e-09, 1.6055327131860470e-09,
    1.7283637374213597e-09, 1.8602468319327520e-09, 2.0018224191334485e-09, 2.1537742387203536e-09,
    2.3168321342405740e-09, 2.4917750089983328e-09, 2.6794339609361389e-09, 2.8806956066294792e-09,
    3.0965056050664320e-09, 3.3278723924374995e-09, 3.5758711397435977e-09, 3.8416479456394843e-09,
    4.1264242775668126e-09, 4.4315016748974097e-09, 4.7582667285060254e-09, 5.1081963519204279e-09,
    5.4828633599590830e-09, 5.8839423715645570e-09, 6.3132160543722958e-09, 6.7725817294252905e-09,
    7.2640583553539788e-09, 7.7897939122871140e-09, 8.3520732067520515e-09, 8.9533261198548946e-09,
    9.5961363221077510e-09, 1.0283250479396268e-08, 1.1017587975750852e-08, 1.1802251179809293e-08,
    1.2640536283127231e-08, 1.3535944739825044e-08, 1.4492195338437218e-08, 1.5513236938269871e-08,
    1.6603261904070025e-08, 1.7766720274369618e-08, 1.9008334700485644e-08, 2.0333116194849697e-08,
    2.1746380729088186e-08, 2.3253766724100606e-08, 2.4861253476281436e-08, 2.6575180565990541e-08,
    2.8402268296432906e-08, 3.0349639213224859e-08, 3.2424840757129072e-08, 3.4635869104732766e-08,
    3.6991194254208920e-08, 3.9499786415774018e-08, 4.2171143768995547e-08, 4.5015321651762871e-08,
    4.8042963248463483e-08, 5.1265331847759211e-08, 5.4694344743296892e-08, 5.8342608853737368e-08,
    6.2223458141632374e-08, 6.6350992913953348e-08, 7.0740121090460934e-08, 7.5406601529569872e-08,
    8.0367089504999918e-08, 8.5639184430241620e-08, 9.1241479931680424e-08, 9.7193616375272508e-08,
    1.0351633595572489e-07, 1.1023154046139588e-07, 1.1736235183254604e-07, 1.2493317563504246e-07,
    1.3296976757632967e-07, 1.4149930319525547e-07, 1.5055045086234635e-07, 1.6015344823214955e-07,
    1.7034018229464724e-07, 1.8114427317805594e-07, 1.9260116186094509e-07, 2.0474820195738865e-07,
    2.1762475574469544e-07, 2.3127229460942548e-07, 2.4573450409354002e-07, 2.6105739372909923e-07,
    2.7728941185632866e-07, 2.9448156562686557e-07, 3.1268754640071739e-07, 3.3196386075284049e-07,
    3.5236996731237417e-07, 3.7396841966520614e-07, 3.9682501555813437e-07, 4.2100895265094899e-07,
    4.4659299107064739e-07, 4.7365362303040967e-07, 5.0227124978443143e-07, 5.3253036619830176e-07,
    5.6451975322362022e-07, 5.9833267857448751e-07, 6.3406710591287885e-07, 6.7182591285941365e-07,
    7.1171711815555733e-07, 7.5385411831337053e-07, 7.9835593409895143e-07, 8.4534746720588820e-07,
    8.9495976748576912e-07, 9.4733031111325695e-07, 1.0026032900743445e-06, 1.0609299133773058e-06,
    1.1224687203974580e-06, 1.1873859067778805e-06, 1.2558556633205153e-06, 1.3280605283134405e-06,
    1.4041917537525990e-06, 1.4844496859281294e-06, 1.5690441608583070e-06, 1.6581949150665085e-06,
    1.7521320122095022e-06, 1.8510962860780924e-06, 1.9553398005050122e-06, 2.0651263267273048e-06,
    2.1807318387647096e-06, 2.3024450273888971e-06, 2.4305678332719697e-06, 2.5654159999170488e-06,
    2.7073196469875055e-06, 2.8566238646651844e-06, 3.0136893296834618e-06, 3.1788929436938340e-06,
    3.3526284946406099e-06, 3.5353073418316848e-06, 3.7273591254091177e-06, 3.9292325009371616e-06,
    4.1413958998404959e-06, 4.3643383164406151e-06, 4.5985701223520279e-06, 4.8446239090165413e-06,
    5.1030553591671042e-06, 5.3744441480289696e-06, 5.6593948750794217e-06, 5.9585380272038484e-06,
    6.2725309740986577e-06, 6.6020589967887899e-06, 6.9478363501391206e-06, 7.3106073602566700e-06,
    7.6911475576928047e-06, 8.0902648473693321e-06, 8.5088007161681600e-06, 8.9476314791343395e-06,
    9.4076695652608779e-06, 9.8898648438333258e-06, 1.0395205992327509e-05, 1.0924721906865183e-05,
    1.1479483156247652e-05, 1.2060603480596482e-05, 1.2669241335646193e-05, 1.3306601483741121e-05,
    1.3973936632605368e-05, 1.4672549122960074e-05, 1.5403792666077637e-05, 1.6169074132368349e-05,
    1.6969855392109358e-05, 1.7807655209427371e-05, 1.8684051190665896e-05, 1.9600681788263702e-05,
    2.0559248361286646e-05, 2.1561517293760760e-05, 2.2609322171956983e-05, 2.3704566021785224e-05,
    2.4849223607461146e-05, 2.6045343792612873e-05, 2.7295051964993932e-05, 2.8600552525977076e-05,
    2.9964131445998122e-05, 3.1388158887128977e-05, 3.2875091893947339e-05, 3.4427477153875941e-05,
    3.6047953828163827e-05, 3.7739256454671619e-05, 3.9504217923623381e-05, 4.1345772527484330e-05,
    4.3266959086107681e-05, 4.5270924148298291e-05, 4.7360925270921798e-05, 4.9540334376685266e-05,
    5.1812641191694328e-05, 5.4181456763895548e-05, 5.6650517063477736e-05, 5.9223686666309295e-05,
    6.1904962521457267e-05, 6.4698477803830934e-05, 6.7608505852955004e-05, 7.0639464198874949e-05,
    7.3795918676159661e-05, 7.7082587626948706e-05, 8.0504346193970925e-05, 8.4066230704423194e-05,
    8.7773443145574667e-05, 9.1631355732936547e-05, 9.5645515571792070e-05, 9.9821649412863985e-05,
    1.0416566850284523e-04, 1.0868367353049385e-04, 1.1338195966894664e-04, 1.1826702171486436e-04,
    1.2334555932498782e-04, 1.2862448235062719e-04, 1.3411091627057246e-04, 1.3981220772285284e-04,
    1.4573593013573110e-04, 1.5188988945826718e-04, 1.5828212999072401e-04, 1.6492094031503638e-04,
    1.7181485932551949e-04, 1.7897268235989906e-04, 1.8640346743072553e-04, 1.9411654155714037e-04,
    2.0212150719691162e-04, 2.1042824877858332e-04, 2.1904693933351619e-04, 2.2798804722751824e-04,
    2.3726234299170835e-04, 2.4688090625215762e-04, 2.5685513275779820e-04, 2.6719674150598198e-04,
    2.7791778196502954e-04, 2.8903064139299505e-04, 3.0054805225179142e-04, 3.1248309971575368e-04,
    3.2484922927360525e-04, 3.3766025442272382e-04, 3.5093036445449382e-04, 3.6467413232944791e-04,
    3.7890652264079304e-04, 3.9364289966485882e-04, 4.0889903549683914e-04, 4.2469111827016974e-04,
    4.4103576045771296e-04, 4.5795000725290237e-04, 4.7545134502879611e-04, 4.9355770987297219e-04,
    5.1228749619602909e-04, 5.3165956541137763e-04, 5.5169325468389378e-04, 5.7240838574487425e-04,
    5.9382527377066388e-04, 6.1596473632216707e-04, 6.3884810234237678e-04, 6.6249722120889220e-04,
    6.8693447183834514e-04, 7.1218277183950594e-04, 7.3826558671167284e-04, 7.6520693908496749e-04,
    7.9303141799885865e-04, 8.2176418821525577e-04, 8.5143099956239631e-04, 8.8205819630550334e-04,
    9.1367272654019652e-04, 9.4630215160450282e-04, 9.7997465550511741e-04, 1.0147190543535604e-03,
    1.0505648058076209e-03, 1.0875420185135029e-03, 1.1256814615438855e-03, 1.1650145738269641e-03,
    1.2055734735615606e-03, 1.2473909676130619e-03, 1.2905005608851103e-03, 1.3349364656615303e-03,
    1.3807336109131617e-03, 1.4279276515639561e-03, 1.4765549777107270e-03, 1.5266527237906462e-03,
    1.5782587776907672e-03, 1.6314117897933888e-03, 1.6861511819513389e-03, 1.7425171563868100e-03,
    1.8005507045076165e-03, 1.8602936156343120e-03, 1.9217884856318108e-03, 1.9850787254388760e-03,
    2.0502085694888237e-03, 2.1172230840146729e-03, 2.1861681752319072e-03, 2.2570905973920085e-03,
    2.3300379606996345e-03, 2.4050587390865492e-03, 2.4822022778349605e-03, 2.5615188010433268e-03,
    2.6430594189271791e-03, 2.7268761349476599e-03, 2.8130218527605269e-03, 2.9015503829780977e-03,
    2.9925164497366921e-03, 3.0859756970620794e-03, 3.1819846950253273e-03, 3.2806009456816292e-03,
    3.3818828887843518e-03, 3.4858899072666332e-03, 3.5926823324831008e-03, 3.7023214492039281e-03,
    3.8148695003533853e-03, 3.9303896914856364e-03, 4.0489461949896697e-03, 4.1706041540159732e-03,
    4.2954296861172159e-03, 4.4234898865953380e-03, 4.5548528315474211e-03, 4.6895875806026938e-03,
    4.8277641793433622e-03, 4.9694536614014332e-03, 5.1147280502244607e-03, 5.2636603605023379e-03,
    5.4163245992484618e-03, 5.5727957665271943e-03, 5.7331498558211916e-03, 5.8974638540308039e-03,
    6.0658157410991781e-03, 6.2382844892554471e-03, 6.4149500618697012e-03, 6.5958934119125069e-03,
    6.7811964800128851e-03, 6.9709421921076899e-03, 7.1652144566763170e-03, 7.3640981615543050e-03,
    7.5676791703198328e-03, 7.7760443182468891e-03, 7.9892814078195498e-03, 8.2074792038013232e-03,
    8.4307274278544279e-03, 8.6591167527031426e-03, 8.8927387958364218e-03, 9.1316861127446435e-03,
    9.3760521896854125e-03, 9.6259314359741603e-03, 9.8814191757947423e-03, 1.0142611639525937e-02,
    1.0409605954579826e-02, 1.0682500135748039e-02, 1.0961393075052395e-02, 1.1246384531096571e-02,
    1.1537575117915503e-02, 1.1835066293319674e-02, 1.2138960346731523e-02, 1.2449360386511645e-02,
    1.2766370326772546e-02, 1.3090094873677849e-02, 1.3420639511225596e-02, 1.3758110486513755e-02,
    1.4102614794487316e-02, 1.4454260162165878e-02, 1.4813155032350735e-02, 1.5179408546811964e-02,
    1.5553130528954620e-02, 1.5934431465964953e-02, 1.6323422490436706e-02, 1.6720215361478868e-02,
    1.7124922445305255e-02, 1.7537656695308289e-02, 1.7958531631617824e-02, 1.8387661320147710e-02,
    1.8825160351132179e-02, 1.9271143817154716e-02, 1.9725727290672405e-02, 2.0189026801039105e-02,
    2.0661158811031064e-02, 2.1142240192878775e-02, 2.1632388203809423e-02, 2.2131720461104561e-02,
    2.2640354916677482e-02, 2.3158409831176223e-02, 2.3686003747616743e-02, 2.4223255464553180e-02,
    2.4770284008790371e-02, 2.5327208607645719e-02, 2.5894148660767051e-02, 2.6471223711513309e-02,
    2.7058553417905966e-02, 2.7656257523158340e-02, 2.8264455825791436e-02, 2.8883268149343937e-02,
    2.9512814311685873e-02, 3.0153214093944284e-02, 3.0804587209050042e-02, 3.1467053269916098e-02,
    3.2140731757256402e-02, 3.2825741987055387e-02, 3.3522203077699819e-02, 3.4230233916781434e-02,
    3.4949953127584012e-02, 3.5681479035263704e-02, 3.6424929632735935e-02, 3.7180422546279582e-02,
    3.7948075000871370e-02, 3.8728003785261395e-02, 3.9520325216804521e-02, 4.0325155106057824e-02,
    4.1142608721159449e-02, 4.1972800752000529e-02, 4.2815845274204886e-02, 4.3671855712928725e-02,
    4.4540944806496237e-02, 4.5423224569882611e-02, 4.6318806258061812e-02, 4.7227800329231025e-02,
    4.8150316407927808e-02, 4.9086463248054463e-02, 5.0036348695824212e-02, 5.1000079652646038e-02,
    5.1977762037960160e-02, 5.2969500752043819e-02, 5.3975399638799451e-02, 5.4995561448542875e-02,
    5.6030087800806296e-02, 5.7079079147173369e-02, 5.8142634734160294e-02, 5.9220852566161788e-02,
    6.0313829368474646e-02, 6.1421660550419255e-02, 6.2544440168571164e-02, 6.3682260890122674e-02,
    6.4835213956387736e-02, 6.6003389146470082e-02, 6.7186874741106503e-02, 6.8385757486707194e-02,
    6.9600122559603766e-02, 7.0830053530526904e-02, 7.2075632329325595e-02, 7.3336939209946939e-02,
    7.4614052715692505e-02, 7.5907049644766578e-02, 7.7216005016133252e-02, 7.8540992035698920e-02,
    7.9882082062835147e-02, 8.1239344577258649e-02, 8.2612847146285057e-02, 8.4002655392469344e-02,
    8.5408832961653178e-02, 8.6831441491430350e-02, 8.8270540580047838e-02, 8.9726187755758094e-02,
    9.1198438446636151e-02, 9.2687345950877645e-02, 9.4192961407592923e-02, 9.5715333768109340e-02,
    9.7254509767799369e-02, 9.8810533898446490e-02, 1.0038344838116409e-01, 1.0197329313987885e-01,
    1.0358010577539607e-01, 1.0520392154005634e-01, 1.0684477331299837e-01, 1.0850269157604119e-01,
    1.1017770439019622e-01, 1.1186983737282463e-01, 1.1357911367544790e-01, 1.1530555396222783e-01,
    1.1704917638912252e-01, 1.1880999658373381e-01, 1.2058802762585402e-01, 1.2238328002872349e-01,
    1.2419576172100932e-01, 1.2602547802951428e-01, 1.2787243166262657e-01, 1.2973662269451819e-01,
    1.3161804855010140e-01, 1.3351670399075294e-01, 1.3543258110081055e-01, 1.3736566927485475e-01,
    1.3931595520577769e-01, 1.4128342287365053e-01, 1.4326805353539324e-01, 1.4526982571525457e-01,
    1.4728871519610703e-01, 1.4932469501156387e-01, 1.5137773543892100e-01, 1.5344780399293018e-01,
    1.5553486542040762e-01, 1.5763888169568172e-01, 1.5975981201688255e-01, 1.6189761280307879e-01,
    1.6405223769226157e-01, 1.6622363754017966e-01, 1.6841176042002828e-01, 1.7061655162299122e-01,
    1.7283795365963886e-01, 1.7507590626218245e-01, 1.7733034638758494e-01, 1.7960120822152767e-01,
    1.8188842318323448e-01, 1.8419191993114892e-01, 1.8651162436946761e-01, 1.8884745965552319e-01,
    1.9119934620801954e-01, 1.9356720171611372e-01, 1.9595094114934217e-01, 1.9835047676838888e-01,
    2.0076571813669200e-01, 2.0319657213288228e-01, 2.0564294296405353e-01, 2.0810473217985498e-01,
    2.1058183868740529e-01, 2.1307415876701891e-01, 2.1558158608874067e-01, 2.1810401172968241e-01,
    2.2064132419215410e-01, 2.2319340942258342e-01, 2.2576015083121515e-01, 2.2834142931258500e-01,
    2.3093712326675581e-01, 2.3354710862131320e-01, 2.3617125885410670e-01, 2.3880944501673099e-01,
    2.4146153575873552e-01, 2.4412739735255504e-01, 2.4680689371914802e-01, 2.4949988645433782e-01,
    2.5220623485583860e-01, 2.5492579595096276e-01, 2.5765842452499299e-01, 2.6040397315021230e-01,
    2.6316229221557486e-01, 2.6593322995701130e-01, 2.6871663248835242e-01, 2.7151234383286071e-01,
    2.7432020595535639e-01, 2.7714005879492515e-01, 2.7997174029819466e-01, 2.8281508645316622e-01,
    2.8566993132358864e-01, 2.8853610708385929e-01, 2.9141344405444036e-01, 2.9430177073777430e-01,
    2.9720091385468567e-01, 3.0011069838125387e-01, 3.0303094758614330e-01, 3.0596148306837428e-01,
    3.0890212479552287e-01, 3.1185269114233105e-01, 3.1481299892971509e-01, 3.1778286346415574e-01,
    3.2076209857745397e-01, 3.2375051666683829e-01, 3.2674792873540770e-01, 3.2975414443289436e-01,
    3.3276897209673040e-01, 3.3579221879340249e-01, 3.3882369036008070e-01, 3.4186319144650262e-01,
    3.4491052555709911e-01, 3.4796549509334529e-01, 3.5102790139632017e-01, 3.5409754478945943e-01,
    3.5717422462148607e-01, 3.6025773930950206e-01, 3.6334788638222487e-01, 3.6644446252335422e-01,
    3.6954726361505236e-01, 3.7265608478152074e-01, 3.7577072043266224e-01, 3.7889096430780506e-01,
    3.8201660951948041e-01, 3.8514744859723427e-01, 3.8828327353145858e-01, 3.9142387581722538e-01,
    3.9456904649811253e-01, 3.9771857620999829e-01, 4.0087225522481851e-01, 4.0402987349426422e-01,
    4.0719122069340852e-01, 4.1035608626424641e-01, 4.1352425945913263e-01, 4.1669552938410648e-01,
    4.1986968504208194e-01, 4.2304651537589710e-01, 4.2622580931120357e-01, 4.2940735579918254e-01,
    4.3259094385907548e-01, 4.3577636262051461e-01, 4.3896340136564055e-01, 4.4215184957099130e-01,
    4.4534149694915487e-01, 4.4853213349016607e-01, 4.5172354950263965e-01, 4.5491553565462578e-01,
    4.5810788301417554e-01, 4.6130038308960336e-01, 4.6449282786943724e-01, 4.6768500986204131e-01,
    4.7087672213490428e-01, 4.7406775835357684e-01, 4.7725791282025165e-01, 4.8044698051197410e-01,
    4.8363475711847126e-01, 4.8682103907959140e-01, 4.9000562362234290e-01, 4.9318830879752162e-01,
    4.9636889351592145e-01, 4.9954717758411243e-01, 5.0272296173978204e-01, 5.0589604768663210e-01,
    5.0906623812881513e-01, 5.1223333680491212e-01, 5.1539714852143603e-01, 5.1855747918585660e-01,
    5.2171413583913828e-01, 5.2486692668778379e-01, 5.2801566113537723e-01, 5.3116014981361881e-01,
    5.3430020461284600e-01, 5.3743563871203459e-01, 5.4056626660827189e-01, 5.4369190414569990e-01,
    5.4681236854392024e-01, 5.4992747842585676e-01, 5.5303705384507107e-01, 5.5614091631252549e-01,
    5.5923888882279160e-01, 5.6233079587969614e-01, 5.6541646352140451e-01, 5.6849571934493592e-01,
    5.7156839253010727e-01, 5.7463431386290498e-01, 5.7769331575827643e-01, 5.8074523228234520e-01,
    5.8378989917404478e-01, 5.8682715386616580e-01, 5.8985683550582013e-01, 5.9287878497431812e-01,
    5.9589284490645655e-01, 5.9889885970921775e-01, 6.0189667557987891e-01, 6.0488614052352951e-01,
    6.0786710436999991e-01, 6.1083941879019665e-01, 6.1380293731184876e-01, 6.1675751533466083e-01,
    6.1970301014487850e-01, 6.2263928092926413e-01, 6.2556618878848336e-01, 6.2848359674990517e-01,
    6.3139136977981636e-01, 6.3428937479505287e-01, 6.3717748067404778e-01, 6.4005555826730021e-01,
    6.4292348040726599e-01, 6.4578112191767301e-01, 6.4862835962226539e-01, 6.5146507235297646e-01,
    6.5429114095753393e-01, 6.5710644830650544e-01, 6.5991087929977921e-01, 6.6270432087249165e-01,
    6.6548666200040030e-01, 6.6825779370470872e-01, 6.7101760905634555e-01, 6.7376600317970359e-01,
    6.7650287325584268e-01, 6.7922811852515996e-01, 6.8194164028953341e-01, 6.8464334191394427e-01,
    6.8733312882757969e-01, 6.9001090852442382e-01, 6.9267659056334452e-01, 6.9533008656767381e-01,
    6.9797131022429593e-01, 7.0060017728224222e-01, 7.0321660555080256e-01, 7.0582051489715625e-01,
    7.0841182724353147e-01, 7.1099046656389464e-01, 7.1355635888018187e-01, 7.1610943225807400e-01,
    7.1864961680232231e-01, 7.2117684465163134e-01, 7.2369104997311051e-01, 7.2619216895629113e-01,
    7.2868013980672264e-01, 7.3115490273915484e-01, 7.3361639997030814e-01, 7.3606457571124395e-01,
    7.3849937615933681e-01, 7.4092074948986153e-01, 7.4332864584719616e-01, 7.4572301733565138e-01,
    7.4810381800993320e-01, 7.5047100386524423e-01, 7.5282453282703155e-01, 7.5516436474039250e-01,
    7.5749046135913567e-01, 7.5980278633451592e-01, 7.6210130520364217e-01, 7.6438598537757008e-01,
    7.6665679612908344e-01, 7.6891370858017605e-01, 7.7115669568923606e-01, 7.7338573223794438e-01,
    7.7560079481789190e-01, 7.7780186181692557e-01, 7.7998891340522758e-01, 7.8216193152113633e-01,
    7.8432089985671838e-01, 7.8646580384309406e-01, 7.8859663063553009e-01, 7.9071336909830092e-01,
    7.9281600978932953e-01, 7.9490454494461393e-01, 7.9697896846244520e-01, 7.9903927588742851e-01,
    8.0108546439430706e-01, 8.0311753277160447e-01, 8.0513548140508617e-01, 8.0713931226104885e-01,
    8.0912902886944860e-01, 8.1110463630686780e-01, 8.1306614117933174e-01, 8.1501355160498523e-01,
    8.1694687719662695e-01, 8.1886612904411826e-01, 8.2077131969666484e-01, 8.2266246314498481e-01,
    8.2453957480336393e-01, 8.2640267149160906e-01, 8.2825177141690332e-01, 8.3008689415557124e-01,
    8.3190806063475997e-01, 8.3371529311404136e-01, 8.3550861516694219e-01, 8.3728805166241083e-01,
    8.3905362874622158e-01, 8.4080537382232778e-01, 8.4254331553416617e-01, 8.4426748374591898e-01,
    8.4597790952374385e-01, 8.4767462511696712e-01, 8.4935766393925927e-01, 8.5102706054978783e-01,
    8.5268285063435756e-01, 8.5432507098654265e-01, 8.5595375948881725e-01, 8.5756895509368714e-01,
    8.5917069780483146e-01, 8.6075902865825360e-01, 8.6233398970345410e-01, 8.6389562398462438e-01,
    8.6544397552186891e-01, 8.6697908929245804e-01, 8.6850101121212120e-01, 8.7000978811637864e-01,
    8.7150546774192095e-01, 8.7298809870804095e-01, 8.7445773049811704e-01, 8.7591441344115684e-01,
    8.7735819869340725e-01, 8.7878913822002880e-01, 8.8020728477684251e-01, 8.8161269189215075e-01,
    8.8300541384864040e-01, 8.8438550566536744e-01, 8.8575302307982573e-01, 8.8710802253010912e-01,
    8.8845056113716703e-01, 8.8978069668715365e-01, 8.9109848761388244e-01, 8.9240399298137962e-01,
    8.9369727246654518e-01, 8.9497838634192717e-01, 8.9624739545860410e-01, 8.9750436122918353e-01,
    8.9874934561092135e-01, 8.9998241108896027e-01, 9.0120362065969128e-01, 9.0241303781424231e-01,
    9.0361072652209473e-01, 9.0479675121483205e-01, 9.0597117677001959e-01, 9.0713406849522182e-01,
    9.0828549211215526e-01, 9.0942551374098213e-01, 9.1055419988474595e-01, 9.1167161741394998e-01,
    9.1277783355127895e-01, 9.1387291585647212e-01, 9.1495693221134022e-01, 9.1602995080493688e-01,
    9.1709204011887935e-01, 9.1814326891282205e-01, 9.1918370621008583e-01, 9.2021342128344374e-01,
    9.2123248364106181e-01, 9.2224096301259961e-01, 9.2323892933546925e-01, 9.2422645274125570e-01,
    9.2520360354229747e-01, 9.2617045221843020e-01, 9.2712706940389100e-01, 9.2807352587439063e-01,
    9.2900989253434629e-01, 9.2993624040428202e-01, 9.3085264060839190e-01, 9.3175916436227213e-01,
    9.3265588296081869e-01, 9.3354286776629014e-01, 9.3442019019654099e-01, 9.3528792171342068e-01,
    9.3614613381133904e-01, 9.3699489800600233e-01, 9.3783428582331585e-01, 9.3866436878845216e-01,
    9.3948521841509414e-01, 9.4029690619483808e-01, 9.4109950358677008e-01, 9.4189308200720645e-01,
    9.4267771281960566e-01, 9.4345346732464330e-01, 9.4422041675045720e-01, 9.4497863224305678e-01,
    9.4572818485690080e-01, 9.4646914554563955e-01, 9.4720158515302255e-01, 9.4792557440397007e-01,
    9.4864118389581120e-01, 9.4934848408968509e-01, 9.5004754530210178e-01, 9.5073843769667010e-01,
    9.5142123127598455e-01, 9.5209599587367411e-01, 9.5276280114660894e-01, 9.5342171656727071e-01,
    9.5407281141627709e-01, 9.5471615477506666e-01, 9.5535181551873827e-01, 9.5597986230904852e-01,
    9.5660036358756162e-01, 9.5721338756895591e-01, 9.5781900223448058e-01, 9.5841727532556464e-01,
    9.5900827433757796e-01, 9.5959206651374052e-01, 9.6016871883918053e-01, 9.6073829803513966e-01,
    9.6130087055332525e-01, 9.6185650257040578e-01, 9.6240525998265203e-01, 9.6294720840072023e-01,
    9.6348241314457461e-01, 9.6401093923855297e-01, 9.6453285140656964e-01, 9.6504821406745400e-01,
    9.6555709133042966e-01, 9.6605954699072316e-01, 9.6655564452531062e-01, 9.6704544708879303e-01,
    9.6752901750940590e-01, 9.6800641828515410e-01, 9.6847771158007911e-01, 9.6894295922064821e-01,
    9.6940222269227383e-01, 9.6985556313595112e-01, 9.7030304134502454e-01, 9.7074471776206850e-01,
    9.7118065247589314e-01, 9.7161090521866256e-01, 9.7203553536313669e-01, 9.7245460192002131e-01,
    9.7286816353543504e-01, 9.7327627848848963e-01, 9.7367900468897794e-01, 9.7407639967517390e-01,
    9.7446852061173816e-01, 9.7485542428773142e-01, 9.7523716711473096e-01, 9.7561380512505391e-01,
    9.7598539397007777e-01, 9.7635198891866415e-01, 9.7671364485568046e-01, 9.7707041628062063e-01,
    9.7742235730631910e-01, 9.7776952165775999e-01, 9.7811196267098233e-01, 9.7844973329207230e-01,
    9.7878288607624653e-01, 9.7911147318702840e-01, 9.7943554639550312e-01, 9.7975515707966876e-01,
    9.8007035622386152e-01, 9.8038119441827065e-01, 9.8068772185853126e-01, 9.8098998834539974e-01,
    9.8128804328450359e-01, 9.8158193568617258e-01, 9.8187171416534225e-01, 9.8215742694153507e-01,
    9.8243912183890980e-01, 9.8271684628638734e-01, 9.8299064731784280e-01, 9.8326057157236746e-01,
    9.8352666529459964e-01, 9.8378897433511958e-01, 9.8404754415090756e-01, 9.8430241980587052e-01,
    9.8455364597142525e-01, 9.8480126692714465e-01, 9.8504532656146315e-01, 9.8528586837244059e-01,
    9.8552293546858127e-01, 9.8575657056971033e-01, 9.8598681600790261e-01, 9.8621371372846611e-01,
    9.8643730529097562e-01, 9.8665763187035882e-01, 9.8687473425802874e-01, 9.8708865286306624e-01,
    9.8729942771345169e-01, 9.8750709845733531e-01, 9.8771170436435896e-01, 9.8791328432701886e-01,
    9.8811187686206881e-01, 9.8830752011196654e-01, 9.8850025184636026e-01, 9.8869010946361091e-01,
    9.8887712999235666e-01, 9.8906135009311069e-01, 9.8924280605989523e-01, 9.8942153382191023e-01,
    9.8959756894523687e-01, 9.8977094663457033e-01, 9.8994170173498774e-01, 9.9010986873374307e-01,
    9.9027548176209323e-01, 9.9043857459715368e-01, 9.9059918066377795e-01, 9.9075733303646674e-01,
    9.9091306444130145e-01, 9.9106640725790185e-01, 9.9121739352140847e-01, 9.9136605492448682e-01,
    9.9151242281935414e-01, 9.9165652821982675e-01, 9.9179840180338730e-01, 9.9193807391327149e-01,
    9.9207557456057405e-01, 9.9221093342637068e-01, 9.9234417986385848e-01, 9.9247534290051076e-01,
    9.9260445124024799e-01, 9.9273153326562491e-01, 9.9285661704002537e-01, 9.9297973030987807e-01,
    9.9310090050687827e-01, 9.9322015475022329e-01, 9.9333751984885932e-01, 9.9345302230373744e-01,
    9.9356668831007777e-01, 9.9367854375964471e-01, 9.9378861424302956e-01, 9.9389692505193827e-01,
    9.9400350118148828e-01, 9.9410836733251084e-01, 9.9421154791385780e-01, 9.9431306704471478e-01,
    9.9441294855691842e-01, 9.9451121599727466e-01, 9.9460789262988480e-01, 9.9470300143846868e-01,
    9.9479656512869508e-01, 9.9488860613051000e-01, 9.9497914660046616e-01, 9.9506820842405641e-01,
    9.9515581321804081e-01, 9.9524198233278005e-01, 9.9532673685456341e-01, 9.9541009760793497e-01,
    9.9549208515802057e-01, 9.9557271981285100e-01, 9.9565202162568123e-01, 9.9573001039730813e-01,
    9.9580670567838392e-01, 9.9588212677172427e-01, 9.9595629273461328e-01, 9.9602922238110447e-01,
    9.9610093428431301e-01, 9.9617144677870528e-01, 9.9624077796238208e-01, 9.9630894569935424e-01,
    9.9637596762181313e-01, 9.9644186113239130e-01, 9.9650664340642003e-01, 9.9657033139417539e-01,
    9.9663294182311835e-01, 9.9669449120012510e-01, 9.9675499581371163e-01, 9.9681447173624438e-01,
    9.9687293482614880e-01, 9.9693040073010164e-01, 9.9698688488521769e-01, 9.9704240252122656e-01,
    9.9709696866263675e-01, 9.9715059813089146e-01, 9.9720330554651360e-01, 9.9725510533124029e-01,
    9.9730601171014444e-01, 9.9735603871374778e-01, 9.9740520018012024e-01, 9.9745350975696934e-01,
    9.9750098090371786e-01, 9.9754762689356757e-01, 9.9759346081555234e-01, 9.9763849557658058e-01,
    9.9768274390346146e-01, 9.9772621834492170e-01, 9.9776893127360911e-01, 9.9781089488808183e-01,
    9.9785212121478684e-01, 9.9789262211002261e-01, 9.9793240926189197e-01, 9.9797149419223796e-01,
    9.9800988825856962e-01, 9.9804760265597259e-01, 9.9808464841900546e-01, 9.9812103642358418e-01,
    9.9815677738885211e-01, 9.9819188187903496e-01, 9.9822636030528322e-01, 9.9826022292750050e-01,
    9.9829347985615735e-01, 9.9832614105409112e-01, 9.9835821633829180e-01, 9.9838971538167320e-01,
    9.9842064771483074e-01, 9.9845102272778496e-01, 9.9848084967170803e-01, 9.9851013766064112e-01,
    9.9853889567319176e-01, 9.9856713255422103e-01, 9.9859485701651440e-01, 9.9862207764243727e-01,
    9.9864880288557922e-01, 9.9867504107238070e-01, 9.9870080040374609e-01, 9.9872608895664350e-01,
    9.9875091468568888e-01, 9.9877528542471516e-01, 9.9879920888833029e-01, 9.9882269267345491e-01,
    9.9884574426085226e-01, 9.9886837101663983e-01, 9.9889058019378596e-01, 9.9891237893359419e-01,
    9.9893377426717433e-01, 9.9895477311689473e-01, 9.9897538229782601e-01, 9.9899560851916513e-01,
    9.9901545838564920e-01, 9.9903493839895408e-01, 9.9905405495907884e-01, 9.9907281436571427e-01,
    9.9909122281960072e-01, 9.9910928642387020e-01, 9.9912701118537373e-01, 9.9914440301599727e-01,
    9.9916146773396231e-01, 9.9917821106511129e-01, 9.9919463864418301e-01, 9.9921075601607212e-01,
    9.9922656863707382e-01, 9.9924208187611807e-01, 9.9925730101598875e-01, 9.9927223125452957e-01,
    9.9928687770583657e-01, 9.9930124540143728e-01, 9.9931533929145966e-01, 9.9932916424578133e-01,
    9.9934272505517385e-01, 9.9935602643242727e-01, 9.9936907301346700e-01, 9.9938186935845474e-01,
    9.9939441995287748e-01, 9.9940672920862439e-01, 9.9941880146505135e-01, 9.9943064099003331e-01,
    9.9944225198100123e-01, 9.9945363856597202e-01, 9.9946480480456157e-01, 9.9947575468898897e-01,
    9.9948649214506613e-01, 9.9949702103317861e-01, 9.9950734514924988e-01, 9.9951746822570053e-01,
    9.9952739393238821e-01, 9.9953712587754340e-01, 9.9954666760868649e-01, 9.9955602261354048e-01,
    9.9956519432092761e-01, 9.9957418610165538e-01, 9.9958300126939381e-01, 9.9959164308154080e-01,
    9.9960011474007371e-01, 9.9960841939239331e-01, 9.9961656013215816e-01, 9.9962454000010292e-01,
    9.9963236198485173e-01, 9.9964002902371851e-01, 9.9964754400349676e-01, 9.9965490976123950e-01,
    9.9966212908503116e-01, 9.9966920471474363e-01, 9.9967613934278965e-01, 9.9968293561486110e-01,
    9.9968959613065844e-01, 9.9969612344461345e-01, 9.9970252006659766e-01, 9.9970878846262456e-01,
    9.9971493105554221e-01, 9.9972095022571428e-01, 9.9972684831169412e-01, 9.9973262761088932e-01,
    9.9973829038021589e-01, 9.9974383883674522e-01, 9.9974927515834011e-01, 9.9975460148428452e-01,
    9.9975981991590324e-01, 9.9976493251717224e-01, 9.9976994131532149e-01, 9.9977484830143015e-01,
    9.9977965543101099e-01, 9.9978436462458953e-01, 9.9978897776827280e-01, 9.9979349671431061e-01,
    9.9979792328165007e-01, 9.9980225925647970e-01, 9.9980650639276869e-01, 9.9981066641279626e-01,
    9.9981474100767387e-01, 9.9981873183786096e-01, 9.9982264053367231e-01, 9.9982646869577707e-01,
    9.9983021789569382e-01, 9.9983388967627318e-01, 9.9983748555217966e-01, 9.9984100701036094e-01,
    9.9984445551051260e-01, 9.9984783248553721e-01, 9.9985113934199388e-01, 9.9985437746054284e-01,
    9.9985754819638395e-01, 9.9986065287968606e-01, 9.9986369281601328e-01, 9.9986666928674195e-01,
    9.9986958354947331e-01, 9.9987243683843885e-01, 9.9987523036490056e-01, 9.9987796531754281e-01,
    9.9988064286286171e-01, 9.9988326414554596e-01, 9.9988583028885125e-01, 9.9988834239497237e-01,
    9.9989080154540622e-01, 9.9989320880130994e-01, 9.9989556520385592e-01, 9.9989787177457667e-01,
    9.9990012951570983e-01, 9.9990233941053286e-01, 9.9990450242369522e-01, 9.9990661950154547e-01,
    9.9990869157245121e-01, 9.9991071954711641e-01, 9.9991270431889201e-01, 9.9991464676408204e-01,
    9.9991654774224537e-01, 9.9991840809649235e-01, 9.9992022865377594e-01, 9.9992201022517935e-01,
    9.9992375360619956e-01, 9.9992545957702295e-01, 9.9992712890280133e-01, 9.9992876233391981e-01,
    9.9993036060626173e-01, 9.9993192444146906e-01, 9.9993345454719940e-01, 9.9993495161737656e-01,
    9.9993641633244001e-01, 9.9993784935958807e-01, 9.9993925135301720e-01, 9.9994062295415920e-01,
    9.9994196479191244e-01, 9.9994327748287004e-01, 9.9994456163154477e-01, 9.9994581783058967e-01,
    9.9994704666101386e-01, 9.9994824869239818e-01, 9.9994942448310287e-01, 9.9995057458047543e-01,
    9.9995169952105256e-01, 9.9995279983076002e-01, 9.9995387602510832e-01, 9.9995492860938673e-01,
    9.9995595807885107e-01, 9.9995696491891084e-01, 9.9995794960531270e-01, 9.9995891260431979e-01,
    9.9995985437288926e-01, 9.9996077535884553e-01, 9.9996167600105212e-01, 9.9996255672957868e-01,
    9.9996341796586707e-01, 9.9996426012289252e-01, 9.9996508360532410e-01, 9.9996588880968051e-01,
    9.9996667612448498e-01, 9.9996744593041642e-01, 9.9996819860045671e-01, 9.9996893450003854e-01,
    9.9996965398718851e-01, 9.9997035741266715e-01, 9.9997104512010848e-01, 9.9997171744615609e-01,
    9.9997237472059586e-01, 9.9997301726648835e-01, 9.9997364540029732e-01, 9.9997425943201679e-01,
    9.9997485966529465e-01, 9.9997544639755565e-01, 9.9997601992012197e-01, 9.9997658051832961e-01,
    9.9997712847164588e-01, 9.9997766405378208e-01, 9.9997818753280554e-01, 9.9997869917124960e-01,
    9.9997919922621992e-01, 9.9997968794950320e-01, 9.9998016558766745e-01, 9.9998063238216717e-01,
    9.9998108856944068e-01, 9.9998153438101101e-01, 9.9998197004358003e-01, 9.9998239577912562e-01,
    9.9998281180499227e-01, 9.9998321833398429e-01, 9.9998361557445470e-01, 9.9998400373039287e-01,
    9.9998438300151160e-01, 9.9998475358333161e-01, 9.9998511566726456e-01, 9.9998546944069500e-01,
    9.9998581508706064e-01, 9.9998615278593062e-01, 9.9998648271308288e-01, 9.9998680504058068e-01,
    9.9998711993684464e-01, 9.9998742756672931e-01, 9.9998772809159142e-01, 9.9998802166936240e-01,
    9.9998830845461595e-01, 9.9998858859863637e-01, 9.9998886224948480e-01, 9.9998912955206420e-01,
    9.9998939064818348e-01, 9.9998964567661963e-01, 9.9998989477318034e-01, 9.9999013807076254e-01,
    9.9999037569941374e-01, 9.9999060778638826e-01, 9.9999083445620485e-01, 9.9999105583070291e-01,
    9.9999127202909677e-01, 9.9999148316802922e-01, 9.9999168936162486e-01, 9.9999189072154149e-01,
    9.9999208735702083e-01, 9.9999227937493740e-01, 9.9999246687984911e-01, 9.9999264997404336e-01,
    9.9999282875758455e-01, 9.9999300332836039e-01, 9.9999317378212571e-01, 9.9999334021254827e-01,
    9.9999350271125187e-01, 9.9999366136785683e-01, 9.9999381627002504e-01, 9.9999396750349734e-01,
    9.9999411515213543e-01, 9.9999425929796171e-01, 9.9999440002119577e-01, 9.9999453740029376e-01,
    9.9999467151198440e-01, 9.9999480243130623e-01, 9.9999493023164221e-01, 9.9999505498475449e-01,
    9.9999517676081939e-01, 9.9999529562846057e-01, 9.9999541165478112e-01, 9.9999552490539578e-01,
    9.9999563544446390e-01, 9.9999574333471852e-01, 9.9999584863749780e-01, 9.9999595141277342e-01,
    9.9999605171918127e-01, 9.9999614961404837e-01, 9.9999624515342167e-01, 9.9999633839209512e-01,
    9.9999642938363609e-01, 9.9999651818041246e-01, 9.9999660483361719e-01, 9.9999668939329467e-01,
    9.9999677190836433e-01, 9.9999685242664582e-01, 9.9999693099488118e-01, 9.9999700765876010e-01,
    9.9999708246294083e-01, 9.9999715545107315e-01, 9.9999722666582058e-01, 9.9999729614888044e-01,
    9.9999736394100647e-01, 9.9999743008202802e-01, 9.9999749461087062e-01, 9.9999755756557540e-01,
    9.9999761898331863e-01, 9.9999767890043023e-01, 9.9999773735241249e-01, 9.9999779437395830e-01,
    9.9999784999896768e-01, 9.9999790426056723e-01, 9.9999795719112505e-01, 9.9999800882226841e-01,
    1.0000000000000000e+00,
};

}  // namespace kpzlab::detail
