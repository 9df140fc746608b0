// Digital linear filter tables for Hankel (J0, J1) and Fourier
// (sin, cos) transforms on log-spaced abscissae.  Fitted by
// regularized least squares against analytic transform pairs;
// regenerate with: python3 tools/filter_design/design_filters.py
// generated 2026-08-10

#include "aip/filters.hpp"

namespace aip::filters {

const double kHankelSpacing = 0.11512925464970229;
const double kFourierSpacing = 0.11512925464970229;

const std::array<double, 201> kHankelBase = {
    +9.999999999999997430e-06, +1.122018454301962670e-05, +1.258925411794165775e-05, +1.412537544622751938e-05,
    +1.584893192461113106e-05, +1.778279410038921207e-05, +1.995262314968876928e-05, +2.238721138568339618e-05,
    +2.511886431509578800e-05, +2.818382931264451147e-05, +3.162277660168374787e-05, +3.548133892335754035e-05,
    +3.981071705534970135e-05, +4.466835921509626012e-05, +5.011872336272714975e-05, +5.623413251903489345e-05,
    +6.309573444801927944e-05, +7.079457843841370415e-05, +7.943282347242815308e-05, +8.912509381337452004e-05,
    +9.999999999999990992e-05, +1.122018454301961925e-04, +1.258925411794167165e-04, +1.412537544622753530e-04,
    +1.584893192461111751e-04, +1.778279410038920258e-04, +1.995262314968879300e-04, +2.238721138568338059e-04,
    +2.511886431509577377e-04, +2.818382931264454467e-04, +3.162277660168378310e-04, +3.548133892335751595e-04,
    +3.981071705534970813e-04, +4.466835921509627232e-04, +5.011872336272720939e-04, +5.623413251903485550e-04,
    +6.309573444801928757e-04, +7.079457843841378004e-04, +7.943282347242809887e-04, +8.912509381337453901e-04,
    +9.999999999999993703e-04, +1.122018454301963253e-03, +1.258925411794166189e-03, +1.412537544622753964e-03,
    +1.584893192461112347e-03, +1.778279410038922101e-03, +1.995262314968878053e-03, +2.238721138568338601e-03,
    +2.511886431509579871e-03, +2.818382931264452190e-03, +3.162277660168378961e-03, +3.548133892335752354e-03,
    +3.981071705534971680e-03, +4.466835921509627882e-03, +5.011872336272722023e-03, +5.623413251903486634e-03,
    +6.309573444801930275e-03, +7.079457843841373450e-03, +7.943282347242812055e-03, +8.912509381337455419e-03,
    +9.999999999999995004e-03, +1.122018454301963383e-02, +1.258925411794166623e-02, +1.412537544622754181e-02,
    +1.584893192461112738e-02, +1.778279410038922578e-02, +1.995262314968879180e-02, +2.238721138568339208e-02,
    +2.511886431509579437e-02, +2.818382931264452884e-02, +3.162277660168378440e-02, +3.548133892335753048e-02,
    +3.981071705534970639e-02, +4.466835921509629270e-02, +5.011872336272722717e-02, +5.623413251903490451e-02,
    +6.309573444801931663e-02, +7.079457843841378828e-02, +7.943282347242813790e-02, +8.912509381337453684e-02,
    +9.999999999999997780e-02, +1.122018454301963175e-01, +1.258925411794166727e-01, +1.412537544622754215e-01,
    +1.584893192461113154e-01, +1.778279410038922648e-01, +1.995262314968879180e-01, +2.238721138568339486e-01,
    +2.511886431509580131e-01, +2.818382931264453717e-01, +3.162277660168378857e-01, +3.548133892335754158e-01,
    +3.981071705534972027e-01, +4.466835921509630936e-01, +5.011872336272722439e-01, +5.623413251903490728e-01,
    +6.309573444801932496e-01, +7.079457843841379105e-01, +7.943282347242814900e-01, +8.912509381337455627e-01,
    +1.000000000000000000e+00, +1.122018454301963342e+00, +1.258925411794167282e+00, +1.412537544622754382e+00,
    +1.584893192461113598e+00, +1.778279410038922981e+00, +1.995262314968879735e+00, +2.238721138568339875e+00,
    +2.511886431509580131e+00, +2.818382931264454161e+00, +3.162277660168379523e+00, +3.548133892335755046e+00,
    +3.981071705534972693e+00, +4.466835921509630936e+00, +5.011872336272723771e+00, +5.623413251903492061e+00,
    +6.309573444801933384e+00, +7.079457843841379550e+00, +7.943282347242817565e+00, +8.912509381337457626e+00,
    +1.000000000000000178e+01, +1.122018454301963608e+01, +1.258925411794167459e+01, +1.412537544622754382e+01,
    +1.584893192461113642e+01, +1.778279410038922848e+01, +1.995262314968879735e+01, +2.238721138568340407e+01,
    +2.511886431509580930e+01, +2.818382931264454783e+01, +3.162277660168380322e+01, +3.548133892335755490e+01,
    +3.981071705534973404e+01, +4.466835921509632357e+01, +5.011872336272723771e+01, +5.623413251903491528e+01,
    +6.309573444801936404e+01, +7.079457843841379372e+01, +7.943282347242818275e+01, +8.912509381337456205e+01,
    +1.000000000000000426e+02, +1.122018454301963430e+02, +1.258925411794167672e+02, +1.412537544622755377e+02,
    +1.584893192461113927e+02, +1.778279410038924198e+02, +1.995262314968880162e+02, +2.238721138568340905e+02,
    +2.511886431509580575e+02, +2.818382931264455351e+02, +3.162277660168379612e+02, +3.548133892335756627e+02,
    +3.981071705534972693e+02, +4.466835921509633067e+02, +5.011872336272726898e+02, +5.623413251903492664e+02,
    +6.309573444801936830e+02, +7.079457843841381646e+02, +7.943282347242820833e+02, +8.912509381337457626e+02,
    +1.000000000000000682e+03, +1.122018454301963629e+03, +1.258925411794167985e+03, +1.412537544622754467e+03,
    +1.584893192461114268e+03, +1.778279410038924425e+03, +1.995262314968880446e+03, +2.238721138568341303e+03,
    +2.511886431509581143e+03, +2.818382931264456147e+03, +3.162277660168380407e+03, +3.548133892335753899e+03,
    +3.981071705534976900e+03, +4.466835921509634318e+03, +5.011872336272724169e+03, +5.623413251903499258e+03,
    +6.309573444801938422e+03, +7.079457843841382783e+03, +7.943282347242815376e+03, +8.912509381337467858e+03,
    +1.000000000000000909e+04, +1.122018454301963902e+04, +1.258925411794167121e+04, +1.412537544622755922e+04,
    +1.584893192461114631e+04, +1.778279410038923379e+04, +1.995262314968882856e+04, +2.238721138568341848e+04,
    +2.511886431509581598e+04, +2.818382931264454237e+04, +3.162277660168383954e+04, +3.548133892335757992e+04,
    +3.981071705534974171e+04, +4.466835921509630862e+04, +5.011872336272729444e+04, +5.623413251903495257e+04,
    +6.309573444801934238e+04, +7.079457843841391150e+04, +7.943282347242823744e+04, +8.912509381337460945e+04,
    +1.000000000000000146e+05,
};

const std::array<double, 201> kHankelJ0 = {
    +2.962386333276848297e-04, -3.809201339093533107e-04, -3.529420046702796488e-05, +3.502251315603319392e-05,
    +1.165572841570750425e-04, +7.520326110631493253e-05, -2.549694599504376182e-05, -4.831799185502739591e-05,
    -5.374301262972707468e-05, -1.537640719910478076e-05, +6.487188216243604580e-05, +3.650807386048807559e-05,
    +3.856455498835718344e-05, -4.296128860256675543e-05, -4.144555438262301304e-05, -1.620798023548573365e-05,
    +5.984811724746492458e-05, +7.692461999111652182e-05, -3.763856498115451983e-05, -4.991769324683929115e-05,
    +1.959347331273843598e-05, +7.915937234659158050e-05, +1.648635726987125738e-05, -4.069394126407412798e-05,
    -1.332690411325054836e-06, +9.468486439292338533e-05, +2.747119029226918752e-05, -5.406158388146521372e-05,
    +5.191674177840860382e-05, +9.924362118850227343e-05, -7.518972325797762535e-06, -4.520244870562240003e-06,
    +1.004926274754611160e-04, +7.596446968779867063e-05, -4.769000398893437180e-06, +6.789111758742812086e-05,
    +1.297855350217524788e-04, +5.179926725064034265e-05, +5.401517722326860943e-05, +1.498185431849185069e-04,
    +1.206678369507424098e-04, +8.372643236119535308e-05, +1.725010056597214240e-04, +1.812965097675869007e-04,
    +1.405168189350843857e-04, +2.307794994154059153e-04, +2.383156693161652740e-04, +2.216280277007894430e-04,
    +3.352696889987014268e-04, +2.821294219302597148e-04, +3.969770094363459824e-04, +3.851858224569558583e-04,
    +4.740342814681462302e-04, +5.039715537725794180e-04, +5.836860254282129562e-04, +6.430094646417846248e-04,
    +7.294617350846088928e-04, +8.128259177646443220e-04, +9.160570911993184571e-04, +1.025130899684145508e-03,
    +1.151607017404081019e-03, +1.291880976984284514e-03, +1.448770736526825906e-03, +1.627208006309028166e-03,
    +1.822816179742094145e-03, +2.049832102532416281e-03, +2.293160721859355961e-03, +2.582036833501342825e-03,
    +2.885025236138698268e-03, +3.252604247598311731e-03, +3.628669689650308380e-03, +4.098074446229157085e-03,
    +4.563085678403874454e-03, +5.163715986584424544e-03, +5.736221387900287093e-03, +6.507670390942016728e-03,
    +7.208176642048064187e-03, +8.201548628924590703e-03, +9.054011767379584186e-03, +1.033592907357392884e-02,
    +1.136614277207421975e-02, +1.302235307047669086e-02, +1.425830710631578041e-02, +1.639951824737682917e-02,
    +1.786629112566421804e-02, +2.063540555129199719e-02, +2.235014560857254834e-02, +2.592836564538389399e-02,
    +2.789012393662614053e-02, +3.249819773380516197e-02, +3.467265681916602282e-02, +4.056723175119809899e-02,
    +4.284920652417554404e-02, +5.030762222347384682e-02, +5.244949082054881084e-02, +6.172840784790320501e-02,
    +6.320733036491493761e-02, +7.443619048857816334e-02, +7.423590400107750453e-02, +8.717008417288596434e-02,
    +8.347202459302928423e-02, +9.697593143422003625e-02, +8.681298749128180114e-02, +9.798261494474394540e-02,
    +7.708197688180998264e-02, +8.027032984548385097e-02, +4.377636016321649615e-02, +3.099945054108022013e-02,
    -2.304817581900013568e-02, -5.641941332514262275e-02, -1.170239825028787928e-01, -1.560651646157643346e-01,
    -1.814880842464571542e-01, -1.727207195070890600e-01, -9.344570888313492862e-02, +1.343047075760924088e-02,
    +1.746868109867116270e-01, +2.327265511436163448e-01, +1.801489119811795769e-01, -8.049771087148774318e-02,
    -2.744522048517132329e-01, -1.731197641317396840e-01, +2.376326731826000072e-01, +2.476051065932027562e-01,
    -2.929298077153866253e-01, -1.017727932397384100e-01, +3.709778586847189974e-01, -3.580240444380525244e-01,
    +2.237495724294977506e-01, -1.024411326574770631e-01, +2.687325338553814280e-02, +1.437989065723134854e-02,
    -3.426721252508889426e-02, +3.746580414520468694e-02, -2.566283212286080834e-02, +4.988649384381487958e-03,
    +1.256546060364041248e-02, -1.629860177838552554e-02, +5.981307255153407026e-03, +7.360395799968218883e-03,
    -1.147617252926792439e-02, +4.108539740049859529e-03, +6.008812074932227618e-03, -8.817159328472946520e-03,
    +2.700167257832846498e-03, +5.217783096819288841e-03, -7.163328163630089569e-03, +2.119898759136428033e-03,
    +4.309889164176718135e-03, -6.093077498704139311e-03, +2.241694835003377011e-03, +3.160728756397418460e-03,
    -5.314767776521774588e-03, +2.843459943129157241e-03, +1.672509972619899525e-03, -4.429851516293083213e-03,
    +3.551478075080274736e-03, -1.511510897003374120e-04, -3.012229247721155603e-03, +3.775738976012313342e-03,
    -1.937651381988212849e-03, -9.735923779749129908e-04, +2.998794587431323575e-03, -3.036072770714274855e-03,
    +1.329963435591412311e-03, +9.319690035078783893e-04, -2.461220763813436619e-03, +2.572894589189584323e-03,
    -1.412873464972522761e-03, -2.849142632812924278e-04, +1.667700726250768983e-03, -2.176048364629369104e-03,
    +1.725572403008996704e-03, -6.410037948811164558e-04, -5.614315986097393992e-04, +1.413425740661155509e-03,
    -1.657497203183109623e-03, +1.294894639122119153e-03, -5.337186901000971588e-04, -3.179934141937803237e-04,
    +9.660127973873508436e-04, -1.216354465800243432e-03, +1.019872395690608544e-03, -4.758519638200587112e-04,
    -1.980332960977624311e-04, +7.240910878676171027e-04, -8.530954788346651729e-04, +4.880504070258137876e-04,
    +1.758586554342681213e-04, -6.133705410411239211e-04, +3.227226896686482042e-04, +3.207236848002827491e-04,
    -1.835480253373625097e-04, -1.204935760125583160e-04, +8.200112823095664504e-05, +1.066085984942385364e-04,
    +3.333992194338587897e-05, -4.248280672022914262e-05, -9.475177198974510742e-05, -1.255133373142189584e-04,
    -1.410008013728184580e-04,
};

const std::array<double, 201> kHankelJ1 = {
    -1.965846477479162588e-04, +2.384615368413840156e-04, +1.922103967098204075e-04, -4.932050181645799799e-05,
    -2.279992270638976832e-04, -2.037048204219668536e-04, -1.365430278520774257e-05, +3.410393724811580716e-04,
    +1.891975685463424632e-04, -1.427526615180629344e-04, -2.101807981067849759e-04, -1.338626159426073838e-04,
    +1.749215855736236628e-04, +2.554031717882728641e-04, -1.477202957041670464e-04, -2.980628968921437581e-04,
    +2.914597861871459725e-04, +1.182478352367376912e-04, -4.492579674148136203e-04, +5.181085240715165236e-04,
    -4.253060227310785451e-04, +2.984168686494926377e-04, -1.960041657739499624e-04, +1.273549808573403233e-04,
    -8.445765659455565719e-05, +5.780853846036772400e-05, -4.082801758858566749e-05, +2.978537653528651186e-05,
    -2.247673031898124061e-05, +1.743781673071927206e-05, -1.364727272803480367e-05, +1.069683289631369327e-05,
    -8.421245493894303005e-06, +6.759963387458475993e-06, -5.375164959711914523e-06, +4.185882284043866697e-06,
    -3.089001050926283663e-06, +2.350794335603942006e-06, -1.714457075089322686e-06, +1.284707052163152436e-06,
    -6.683280951921290701e-07, +3.754729341587088962e-07, +4.762080475422339216e-08, +2.933357549151141812e-09,
    +4.001922840660257540e-07, -1.993974563190868752e-07, +6.489537695638981668e-07, -6.475756176289155196e-08,
    +6.048685210598364961e-07, +3.042399694022212414e-07, +6.855244485360289207e-07, +6.281636954793396420e-07,
    +1.002686345234608291e-06, +1.069214120559817038e-06, +1.507925642524920768e-06, +1.779270932259626467e-06,
    +2.311497632775222875e-06, +2.884530700442394357e-06, +3.616961632966440030e-06, +4.597830430401591770e-06,
    +5.727817914896748703e-06, +7.270173728563649460e-06, +9.113984514239764374e-06, +1.147302207743863562e-05,
    +1.449667885765131784e-05, +1.814209629836308600e-05, +2.299192066292526134e-05, +2.876731316898362904e-05,
    +3.639912820741476548e-05, +4.563317362231251263e-05, +5.767551917865913584e-05, +7.226973678733136352e-05,
    +9.152010678977059391e-05, +1.143663909804426516e-04, +1.452065710696663463e-04, +1.810583680515156970e-04,
    +2.303127736816873872e-04, +2.865355274442941665e-04, +3.655026626568024482e-04, +4.530963662637867151e-04,
    +5.801804354792098944e-04, +7.161312058141789099e-04, +9.210622858351195149e-04, +1.130705778981032101e-03,
    +1.462780956542317906e-03, +1.782812852770387013e-03, +2.323418485481664689e-03, +2.805732791055722247e-03,
    +3.690691366716613957e-03, +4.403344447102135704e-03, +5.860891405856525488e-03, +6.883307694224273521e-03,
    +9.299275965585409448e-03, +1.069688998805631147e-02, +1.472636091446608356e-02, +1.647814740567626543e-02,
    +2.323314197982147972e-02, +2.504681356297704456e-02, +3.640231643493450908e-02, +3.728601050110374321e-02,
    +5.635121411347389364e-02, +5.367647275878548174e-02, +8.544382638566226651e-02, +7.302732547028958909e-02,
    +1.250853082546038997e-01, +8.960492263576524952e-02, +1.725335879358464997e-01, +8.786552512065354259e-02,
    +2.148230188901066318e-01, +3.635452723683061521e-02, +2.230424637960828904e-01, -1.075054980258488835e-01,
    +1.659073304787947456e-01, -3.474367451511112814e-01, +8.419140902149059580e-02, -5.263238457146535154e-01,
    +1.915049002715525917e-01, -3.433395221000792863e-01, +5.694255620343745550e-01, -9.018868992268090634e-02,
    +3.778708752294306916e-01, -5.619346805852081239e-01, +4.209459962607145500e-02, +2.075699270462432605e-02,
    +4.131251692495231387e-01, -5.573748278593628758e-01, +3.130471847148266762e-01, -2.807391565878074660e-02,
    -1.177460102963596711e-01, +1.509260290583138986e-01, -1.396598139553929807e-01, +1.223494714134994998e-01,
    -1.110850006210971214e-01, +1.072979230202852768e-01, -1.102032071499815108e-01, +1.195943452540812468e-01,
    -1.364708301161185744e-01, +1.630740900108573754e-01, -2.026010023978165042e-01, +2.581193963218565424e-01,
    -3.297431790539162022e-01, +4.094767810431647614e-01, -4.754994582186478635e-01, +4.918738156084233593e-01,
    -4.213462085997636275e-01, +2.514463841416628709e-01, -1.854288069534964709e-02, -1.942933822419254941e-01,
    +2.961060608323777821e-01, -2.434715483999038421e-01, +7.270545127031616262e-02, +1.178959810019175464e-01,
    -2.256350782346437100e-01, +2.016594591023135041e-01, -7.276784970027135035e-02, -8.231464887086523130e-02,
    +1.816321687756313474e-01, -1.822358470759032900e-01, +9.491014469079692151e-02, +3.003005366748037058e-02,
    -1.323492725679854265e-01, +1.697338452749076187e-01, -1.323887782893361786e-01, +4.187058937977543305e-02,
    +6.146450239666738369e-02, -1.353675597682975351e-01, +1.508492998187654088e-01, -1.019392500367601873e-01,
    +8.512094716021486457e-03, +8.862740629883780752e-02, -1.414288810846680011e-01, +1.169200991250535088e-01,
    -2.185082880333635499e-02, -8.772951616723094481e-02, +1.329541922313542679e-01, -7.267193522835448116e-02,
    -4.798433109191135859e-02, +1.216356542222262471e-01, -7.615781454341821743e-02, -4.453971728223028032e-02,
    +1.148103006766112710e-01, -5.867372432742226640e-02, -6.142773796160954508e-02, +1.085704119051424388e-01,
    -2.754167844980689311e-02, -8.548971001179021811e-02, +9.192514979730068148e-02, +1.878804495758979939e-02,
    -1.049509121318646376e-01, +4.683332916121593636e-02, +8.059061690891476670e-02, -8.537176037366091264e-02,
    -5.364269975497687470e-02, +9.765342053252823451e-02, +5.681134710201592164e-02, -7.954947295506487048e-02,
    -8.703506588366421992e-02, +1.457547120658303323e-02, +8.634870843920397498e-02, +5.600506265744123469e-02,
    -7.437482312729264133e-02,
};

const std::array<double, 181> kFourierBase = {
    +3.162277660168374787e-05, +3.548133892335754035e-05, +3.981071705534970135e-05, +4.466835921509626012e-05,
    +5.011872336272714975e-05, +5.623413251903489345e-05, +6.309573444801927944e-05, +7.079457843841370415e-05,
    +7.943282347242815308e-05, +8.912509381337452004e-05, +9.999999999999990992e-05, +1.122018454301961925e-04,
    +1.258925411794167165e-04, +1.412537544622753530e-04, +1.584893192461111751e-04, +1.778279410038920258e-04,
    +1.995262314968879300e-04, +2.238721138568338059e-04, +2.511886431509577377e-04, +2.818382931264454467e-04,
    +3.162277660168378310e-04, +3.548133892335751595e-04, +3.981071705534970813e-04, +4.466835921509627232e-04,
    +5.011872336272720939e-04, +5.623413251903485550e-04, +6.309573444801928757e-04, +7.079457843841378004e-04,
    +7.943282347242809887e-04, +8.912509381337453901e-04, +9.999999999999993703e-04, +1.122018454301963253e-03,
    +1.258925411794166189e-03, +1.412537544622753964e-03, +1.584893192461112347e-03, +1.778279410038922101e-03,
    +1.995262314968878053e-03, +2.238721138568338601e-03, +2.511886431509579871e-03, +2.818382931264452190e-03,
    +3.162277660168378961e-03, +3.548133892335752354e-03, +3.981071705534971680e-03, +4.466835921509627882e-03,
    +5.011872336272722023e-03, +5.623413251903486634e-03, +6.309573444801930275e-03, +7.079457843841373450e-03,
    +7.943282347242812055e-03, +8.912509381337455419e-03, +9.999999999999995004e-03, +1.122018454301963383e-02,
    +1.258925411794166623e-02, +1.412537544622754181e-02, +1.584893192461112738e-02, +1.778279410038922578e-02,
    +1.995262314968879180e-02, +2.238721138568339208e-02, +2.511886431509579437e-02, +2.818382931264452884e-02,
    +3.162277660168378440e-02, +3.548133892335753048e-02, +3.981071705534970639e-02, +4.466835921509629270e-02,
    +5.011872336272722717e-02, +5.623413251903490451e-02, +6.309573444801931663e-02, +7.079457843841378828e-02,
    +7.943282347242813790e-02, +8.912509381337453684e-02, +9.999999999999997780e-02, +1.122018454301963175e-01,
    +1.258925411794166727e-01, +1.412537544622754215e-01, +1.584893192461113154e-01, +1.778279410038922648e-01,
    +1.995262314968879180e-01, +2.238721138568339486e-01, +2.511886431509580131e-01, +2.818382931264453717e-01,
    +3.162277660168378857e-01, +3.548133892335754158e-01, +3.981071705534972027e-01, +4.466835921509630936e-01,
    +5.011872336272722439e-01, +5.623413251903490728e-01, +6.309573444801932496e-01, +7.079457843841379105e-01,
    +7.943282347242814900e-01, +8.912509381337455627e-01, +1.000000000000000000e+00, +1.122018454301963342e+00,
    +1.258925411794167282e+00, +1.412537544622754382e+00, +1.584893192461113598e+00, +1.778279410038922981e+00,
    +1.995262314968879735e+00, +2.238721138568339875e+00, +2.511886431509580131e+00, +2.818382931264454161e+00,
    +3.162277660168379523e+00, +3.548133892335755046e+00, +3.981071705534972693e+00, +4.466835921509630936e+00,
    +5.011872336272723771e+00, +5.623413251903492061e+00, +6.309573444801933384e+00, +7.079457843841379550e+00,
    +7.943282347242817565e+00, +8.912509381337457626e+00, +1.000000000000000178e+01, +1.122018454301963608e+01,
    +1.258925411794167459e+01, +1.412537544622754382e+01, +1.584893192461113642e+01, +1.778279410038922848e+01,
    +1.995262314968879735e+01, +2.238721138568340407e+01, +2.511886431509580930e+01, +2.818382931264454783e+01,
    +3.162277660168380322e+01, +3.548133892335755490e+01, +3.981071705534973404e+01, +4.466835921509632357e+01,
    +5.011872336272723771e+01, +5.623413251903491528e+01, +6.309573444801936404e+01, +7.079457843841379372e+01,
    +7.943282347242818275e+01, +8.912509381337456205e+01, +1.000000000000000426e+02, +1.122018454301963430e+02,
    +1.258925411794167672e+02, +1.412537544622755377e+02, +1.584893192461113927e+02, +1.778279410038924198e+02,
    +1.995262314968880162e+02, +2.238721138568340905e+02, +2.511886431509580575e+02, +2.818382931264455351e+02,
    +3.162277660168379612e+02, +3.548133892335756627e+02, +3.981071705534972693e+02, +4.466835921509633067e+02,
    +5.011872336272726898e+02, +5.623413251903492664e+02, +6.309573444801936830e+02, +7.079457843841381646e+02,
    +7.943282347242820833e+02, +8.912509381337457626e+02, +1.000000000000000682e+03, +1.122018454301963629e+03,
    +1.258925411794167985e+03, +1.412537544622754467e+03, +1.584893192461114268e+03, +1.778279410038924425e+03,
    +1.995262314968880446e+03, +2.238721138568341303e+03, +2.511886431509581143e+03, +2.818382931264456147e+03,
    +3.162277660168380407e+03, +3.548133892335753899e+03, +3.981071705534976900e+03, +4.466835921509634318e+03,
    +5.011872336272724169e+03, +5.623413251903499258e+03, +6.309573444801938422e+03, +7.079457843841382783e+03,
    +7.943282347242815376e+03, +8.912509381337467858e+03, +1.000000000000000909e+04, +1.122018454301963902e+04,
    +1.258925411794167121e+04, +1.412537544622755922e+04, +1.584893192461114631e+04, +1.778279410038923379e+04,
    +1.995262314968882856e+04, +2.238721138568341848e+04, +2.511886431509581598e+04, +2.818382931264454237e+04,
    +3.162277660168383954e+04,
};

const std::array<double, 181> kFourierSin = {
    +1.140698706781622350e-02, -3.091164946960452478e-02, +1.320380290919201567e-02, +1.531092860938930086e-02,
    +3.588955858479102486e-03, -6.396492630393175310e-03, -9.334451273120320317e-03, -6.122508836276482555e-03,
    +3.011493491766261028e-04, +5.566675968022175534e-03, +6.856072944342971390e-03, +4.058236063926164497e-03,
    -6.955953834110991177e-04, -4.701570364454157359e-03, -5.491005789110620788e-03, -2.896060206415775311e-03,
    +1.482361273393212331e-03, +4.636538978084079818e-03, +4.310409291232272094e-03, +6.716890332911254436e-04,
    -3.325328993927972702e-03, -4.361683291309974286e-03, -1.211505969607205163e-03, +2.961916996744182184e-03,
    +3.834471763637933156e-03, +2.131522581562059204e-04, -3.531945411970814977e-03, -2.344533917975612398e-03,
    +2.186467783704466872e-03, +3.097826768812367206e-03, -1.264839608241856428e-03, -3.027948082491883908e-03,
    +9.787495700172049902e-04, +2.723796219306000993e-03, -1.303116312052789204e-03, -2.145355527036756083e-03,
    +1.930662478480169204e-03, +1.088442727776773103e-03, -2.365871209386419954e-03, +5.784129598840580255e-04,
    +1.718275966609258791e-03, -2.080322156567167118e-03, +5.857795698602334677e-04, +1.225613131219625840e-03,
    -2.175994226036488677e-03, +2.164608000968969853e-03, -1.623183103534184962e-03, +1.034563786890782197e-03,
    -5.699793109560247900e-04, +3.092736679676504757e-04, -1.387486075092795972e-04, +8.968627718180903485e-05,
    -2.078284057377855626e-05, +4.473150287597372089e-05, +1.552643721214271065e-05, +4.560648958902633991e-05,
    +3.881602553002937335e-05, +6.353911402552734483e-05, +6.737489705668873313e-05, +9.655896371098124853e-05,
    +1.096798130989424559e-04, +1.511657254274893260e-04, +1.747375062105651147e-04, +2.394135751111418214e-04,
    +2.764326119506067912e-04, +3.803565354055481185e-04, +4.362873468810660182e-04, +6.057462575176928224e-04,
    +6.856799161799011699e-04, +9.686749490745551541e-04, +1.072250965508692380e-03, +1.553857312426125403e-03,
    +1.669896257220658108e-03, +2.499087337607965552e-03, +2.586339589163872202e-03, +4.032774053300144934e-03,
    +3.977128822916026901e-03, +6.528001082319039028e-03, +6.060727741850353845e-03, +1.059969171197832141e-02,
    +9.125151495480154917e-03, +1.724640497568170894e-02, +1.353662659010200151e-02, +2.805217920155154976e-02,
    +1.971499789686212770e-02, +4.543714301542940009e-02, +2.807321794031638479e-02, +7.284250446796766698e-02,
    +3.884787051346009351e-02, +1.145596303300791263e-01, +5.165534651066754079e-02, +1.745220280181086214e-01,
    +6.420417664680830305e-02, +2.527976112250078233e-01, +6.892259305535783365e-02, +3.378082832490681975e-01,
    +4.590480250487298519e-02, +3.926083501011669585e-01, -4.573093962847773336e-02, +3.408819861429901454e-01,
    -2.589552304985605069e-01, +8.996378243611469205e-02, -5.732606672284755733e-01, -3.107429941852675181e-01,
    -6.681355943297886402e-01, -3.766013463230344915e-01, +1.131483644003160038e-01, +3.694232048813403391e-01,
    +1.233204818713376616e+00, +9.435993022109999406e-02, -1.618528939919615384e-01, -1.749302972273557133e+00,
    +5.246997420515320254e-01, +1.146778151511574029e+00, +2.078963007240964556e-01, -2.247565222891346970e+00,
    +2.503566402234006727e+00, -1.436159892592936860e+00, +3.002239727168161676e-01, +4.059903535581761980e-01,
    -7.651938076317212900e-01, +9.435902562089543144e-01, -9.723150037423151648e-01, +7.596524127626266276e-01,
    -2.676317988156052263e-01, -2.810221360258079448e-01, +4.749719660194422488e-01, -1.555161741448665702e-01,
    -2.877619961182151798e-01, +3.142994671988056932e-01, +7.197730640208994946e-02, -3.189334946257090797e-01,
    +9.855776923651222987e-02, +2.421492751984069547e-01, -2.110195427433917692e-01, -1.195621340321195158e-01,
    +2.578498777864676739e-01, -2.199008775050031311e-02, -2.312524716120053780e-01, +1.493802515717253254e-01,
    +1.332241397153609841e-01, -2.222333870275966239e-01, +1.194743571166284081e-02, +2.046063169626104183e-01,
    -1.499906425737003446e-01, -9.069969656387526225e-02, +2.104928175008539681e-01, -7.241489525946409600e-02,
    -1.460724456649193093e-01, +1.889915238305274747e-01, -1.793931819252170962e-02, -1.673668589418908226e-01,
    +1.672866466022414067e-01, +8.347678982936835093e-03, -1.707588958209529384e-01, +1.581872916669223583e-01,
    +8.778389942001016411e-03, -1.636787979751191668e-01, +1.622990574928139806e-01, -1.212733337213074865e-02,
    -1.466135877785178510e-01, +1.735133942314097677e-01, -4.862327513125839357e-02, -1.174906338803216599e-01,
    +1.820328199758310395e-01, -8.973773737499514402e-02, -8.146312678068221014e-02, +1.828915824429591941e-01,
    -1.188933280910263179e-01, -6.170770334398616164e-02, +1.872643057821620494e-01, -1.104038941635971244e-01,
    -1.110783563442911681e-01, +1.935804627468476480e-01, +4.659409255363612667e-02, -2.215047586827318393e-01,
    -1.690595221467076636e-01, +9.605235978742857755e-03, +1.057749965895741495e-01, +1.281771377174347470e-01,
    +1.261951348731865097e-01,
};

const std::array<double, 181> kFourierCos = {
    +2.283574100252414030e-02, -3.026394470242637150e-02, -1.337975022237720447e-02, +3.458811725303049395e-03,
    +1.339771829982349532e-02, +1.409793364645713261e-02, +7.924995518199775407e-03, -1.370728577510776924e-03,
    -8.993912283836008256e-03, -1.197879837133494080e-02, -9.206733218668926647e-03, -2.143790279667392995e-03,
    +5.565035097890785182e-03, +1.034650617538949643e-02, +9.834754705377516185e-03, +3.647115503339307119e-03,
    -4.357875117129580110e-03, -9.807683619969385924e-03, -8.861993797987795934e-03, -1.664395441466973158e-03,
    +7.073694319409781772e-03, +1.014337764698844402e-02, +4.312293210968445867e-03, -5.876360177687223185e-03,
    -1.022785195164574445e-02, -2.536327906857871461e-03, +8.445833801638436000e-03, +8.386618294104197791e-03,
    -3.932617390324189000e-03, -1.013959048335344448e-02, +9.187481240816586237e-04, +1.067844866395711856e-02,
    +4.683408408944211843e-04, -1.045638311535500298e-02, +6.174481089482285190e-04, +1.108674599414533751e-02,
    -3.195304018635537063e-03, -9.496004850966993649e-03, +7.776601058411401757e-03, +6.408854194244803688e-03,
    -1.048243382547810881e-02, +1.234805774586792554e-03, +1.073651592494374515e-02, -8.893905259209890224e-03,
    -7.224570476452862877e-04, +1.120900117086809367e-02, -1.038917945707203139e-02, +5.110733676346439908e-03,
    +5.320381088249510892e-03, -9.747809414489785884e-03, +1.478809227268014850e-02, -1.251902930132427899e-02,
    +1.403854422763158027e-02, -9.317283901833740486e-03, +1.120707868666014767e-02, -6.046931284834307363e-03,
    +9.397966032144693810e-03, -3.789403942231560352e-03, +8.724574550740958612e-03, -2.206130984899030978e-03,
    +8.807770045971888978e-03, -8.741587961498195614e-04, +9.365058813991557207e-03, +5.085186116341455786e-04,
    +1.022066969963972977e-02, +2.225027460997909198e-03, +1.118779366189334018e-02, +4.614165980531936828e-03,
    +1.203797372164261414e-02, +8.129050130694972717e-03, +1.240530428112586632e-02, +1.341906781163575840e-02,
    +1.178471495054311813e-02, +2.127910630929977231e-02, +9.600928814370683628e-03, +3.250935283049015412e-02,
    +5.516897323289840852e-03, +4.738103815836283705e-02, +1.044543587797874817e-04, +6.476991137065113424e-02,
    -4.178871753068424261e-03, +8.100498330713792883e-02, -2.206503093900850920e-03, +8.943951147451414951e-02,
    +1.301592883815529123e-02, +8.219174605611778706e-02, +4.617278429805070361e-02, +5.546372267885654739e-02,
    +9.166068152399267643e-02, +1.652852902552115477e-02, +1.260136726559771270e-01, -1.501846902918616000e-02,
    +1.107468449658442350e-01, -2.214113215292107945e-02, +1.418369750331335832e-02, -2.010034415922845596e-02,
    -1.553636362604087773e-01, -7.019246995839720227e-02, -3.325378375768339723e-01, -2.245530869063132595e-01,
    -4.067862101726955615e-01, -3.896658368182562282e-01, -2.312948260874334305e-01, -2.467525790324680557e-01,
    +3.112295314402908630e-01, +3.865521499988457954e-01, +8.013118005447485981e-01, +5.690082123331902109e-01,
    -1.648517920925284541e-01, -7.304045249525672467e-01, -1.197514879215070494e+00, +5.703695084290006934e-01,
    +1.128594818127169663e+00, +3.719074064773100208e-01, -2.198457302768717536e+00, +1.444919719586440054e+00,
    +4.596690279955001901e-01, -1.570364681651820637e+00, +1.643486146065985531e+00, -1.231282665273782717e+00,
    +7.236628069920073569e-01, -2.323809625252953037e-01, -1.932767562341750622e-01, +4.204003564262231984e-01,
    -3.103985531947061061e-01, -4.761281224333897832e-02, +2.910491491790127006e-01, -1.522234398315792103e-01,
    -1.641851116179313119e-01, +2.155287783356233389e-01, +5.093830598476092875e-02, -2.155738643376152730e-01,
    +3.406534492660181351e-02, +1.868938896400323124e-01, -9.523467339186364455e-02, -1.431542327792376390e-01,
    +1.366386066715319370e-01, +9.011867909923901299e-02, -1.594619175262916855e-01, -3.162023279792614688e-02,
    +1.628653419570564587e-01, -2.773547806468364130e-02, -1.456112673480346176e-01, +8.154668311965208860e-02,
    +1.078720895714712635e-01, -1.217395016634213317e-01, -5.303873097016105487e-02, +1.399002527280027164e-01,
    -1.099779686720291604e-02, -1.297407718184444281e-01, +7.181011554154606569e-02, +9.024680118960883013e-02,
    -1.144037442137679772e-01, -2.840329735671708045e-02, +1.255002096566162906e-01, -4.024942248373976350e-02,
    -9.922890681573122429e-02, +9.481911721419258865e-02, +4.188128864858853967e-02, -1.163632961193696025e-01,
    +2.769295142898207940e-02, +9.689059528685202427e-02, -8.446112595925224509e-02, -4.493464567600438664e-02,
    +1.089996297303724299e-01, -1.757569964780426527e-02, -9.824582774594016465e-02, +6.755509150905336657e-02,
    +6.719385238301854579e-02, -9.449195783202578303e-02, -4.020410220595301704e-02, +1.037631320037269711e-01,
    +4.293730120797245586e-02, -9.705807364057508768e-02, -1.029737230491594990e-01, -1.411174766472540754e-02,
    +5.194572447677599236e-02, +6.842811731748782433e-02, +6.122581097091426422e-02, +4.971809772486020934e-02,
    +3.960183953656889327e-02,
};

}  // namespace aip::filters
