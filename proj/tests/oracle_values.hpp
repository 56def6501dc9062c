// Generated by tests/oracles/generate_oracles.py; do not edit by hand.
#pragma once

namespace oracle {

struct Gamma { double x, value; };
inline constexpr Gamma kGamma[] = {
    {0.5, 1.7724538509055160273},
    {1.5, 0.88622692545275801365},
    {3.7, 4.1706517837966031654},
    {10.2, 570499.02784103598123},
    {25.5, 3086770540528696782800000.0},
    {0.1, 9.5135076986687318363},
    {-0.5, -3.5449077018110320546},
    {-1.3, 3.3283470067886097069},
    {-2.75, -1.0044979832303122596},
};

struct FamilyValue { const char* family; double nu, z, value; };
inline constexpr FamilyValue kFamilyValues[] = {
    {"PHI", -0.4, 0.3, 1.0282704828710302894},
    {"PHI", -0.4, 1, 1.2757663235867998393},
    {"PHI", -0.4, 2.2, 0.65805943733843513437},
    {"PHI", -0.4, 5, -8.3283641496474381496},
    {"PHI", 0, 0.3, 0.29997468766018044953},
    {"PHI", 0, 1, 0.98959147000866743924},
    {"PHI", 0, 2.2, 1.6729501095812311463},
    {"PHI", 0, 5, -13.245145192438757924},
    {"PHI", 0.5, 0.3, 0.038195713028037470871},
    {"PHI", 0.5, 1, 0.42239318701811266537},
    {"PHI", 0.5, 2.2, 1.8277205591187437271},
    {"PHI", 0.5, 5, -11.740588435287924654},
    {"PHI", 1, 0.3, 0.0033749288087939756792},
    {"PHI", 1, 1, 0.12467459218422187827},
    {"PHI", 1, 2.2, 1.2504624600965910827},
    {"PHI", 1, 5, -4.6012822477180376354},
    {"PHI", 2.5, 0.3, 0.00000058932457372804108152},
    {"PHI", 2.5, 1, 0.0008078228776760104577},
    {"PHI", 2.5, 2.2, 0.090113016480998572419},
    {"PHI", 2.5, 5, 7.4278264750837139527},
    {"PI", -0.4, 0.3, 2.0551503204779127251},
    {"PI", -0.4, 1, 0.70008484957451733687},
    {"PI", -0.4, 2.2, -0.59266877230237618406},
    {"PI", -0.4, 5, 1.1577923382030927325},
    {"PI", 0, 0.3, 0.99974687766967272873},
    {"PI", 0, 1, 0.96879068068581807197},
    {"PI", 0, 2.2, 0.29015816648554469784},
    {"PI", 0, 5, -4.8377132868885664694},
    {"PI", 0.5, 0.3, 0.19096874308691933255},
    {"PI", 0.5, 1, 0.62955183233757861057},
    {"PI", 0.5, 2.2, 1.042769731838898695},
    {"PI", 0.5, 5, -9.0597690696373974909},
    {"PI", 1, 0.3, 0.022499050785254512579},
    {"PI", 1, 1, 0.24869859475097483024},
    {"PI", 1, 2.2, 1.0641658995823627913},
    {"PI", 1, 5, -7.9718486657584607483},
    {"PI", 2.5, 0.3, 0.0000068754303993816015485},
    {"PI", 2.5, 1, 0.0028262138730763718006},
    {"PI", 2.5, 2.2, 0.14196268359592754682},
    {"PI", 2.5, 5, 3.309244596525905909},
    {"PHI_D1", -0.4, 0.3, 0.6827323647190578189},
    {"PHI_D1", -0.4, 1, 0.1244033755622348344},
    {"PHI_D1", -0.4, 2.2, -1.4844554706676774292},
    {"PHI_D1", -0.4, 5, 3.981257506335673095},
    {"PHI_D1", 0, 0.3, 0.99957812980541062568},
    {"PHI_D1", 0, 1, 0.9479898913629687047},
    {"PHI_D1", 0, 2.2, -0.18011553502037930717},
    {"PHI_D1", 0, 5, -7.0263975352893813541},
    {"PHI_D1", 0.5, 0.3, 0.25461844274704709553},
    {"PHI_D1", 0.5, 1, 0.83671047765704455577},
    {"PHI_D1", 0.5, 2.2, 1.2547573913510956959},
    {"PHI_D1", 0.5, 5, -15.771420452217210051},
    {"PHI_D1", 1, 0.3, 0.033748338874529106228},
    {"PHI_D1", 1, 1, 0.37272259731772778221},
    {"PHI_D1", 1, 2.2, 1.5599397718480932723},
    {"PHI_D1", 1, 5, -15.02344088197331397},
    {"PHI_D1", 2.5, 0.3, 0.000011786445553003066159},
    {"PHI_D1", 2.5, 1, 0.0048446048684767331435},
    {"PHI_D1", 2.5, 2.2, 0.24296490515503756072},
    {"PHI_D1", 2.5, 5, 5.1329238980350690274},
    {"PHI_D2", -0.4, 0.3, -1.8595569980882775597},
    {"PHI_D2", -0.4, 1, -0.64743644734572800315},
    {"PHI_D2", -0.4, 2.2, -2.2467080436103264915},
    {"PHI_D2", -0.4, 5, 19.684017388586700633},
    {"PHI_D2", 0, 0.3, -0.0056248718558405976852},
    {"PHI_D2", 0, 1, -0.207747605722745022},
    {"PHI_D2", 0, 2.2, -2.0734033733696148882},
    {"PHI_D2", 0, 5, 10.078038194796401225},
    {"PHI_D2", 0.5, 0.3, 0.84833526250244072843},
    {"PHI_D2", 0.5, 1, 0.78828775028968429487},
    {"PHI_D2", 0.5, 2.2, -0.5213581519591612151},
    {"PHI_D2", 0.5, 5, -6.4526218795176528312},
    {"PHI_D2", 1, 0.3, 0.22496677758847010703},
    {"PHI_D2", 1, 1, 0.73634055587992965358},
    {"PHI_D2", 1, 2.2, 0.96034960877113859836},
    {"PHI_D2", 1, 5, -17.29217456578480596},
    {"PHI_D2", 2.5, 0.3, 0.00019643922849953889291},
    {"PHI_D2", 2.5, 1, 0.024199703024976595182},
    {"PHI_D2", 2.5, 2.2, 0.53950945449366480253},
    {"PHI_D2", 2.5, 5, -1.8345861089608582064},
    {"PI_D1", -0.4, 0.3, -5.5045050182403218005},
    {"PI_D1", -0.4, 1, -0.89939969768514650404},
    {"PI_D1", -0.4, 2.2, -1.5287116119712092663},
    {"PI_D1", -0.4, 5, 10.406701727919866389},
    {"PI_D1", 0, 0.3, -0.0033749288087939756792},
    {"PI_D1", 0, 1, -0.12467459218422187827},
    {"PI_D1", 0, 2.2, -1.2504624600965910827},
    {"PI_D1", 0, 5, 4.6012822477180376354},
    {"PI_D1", 0.5, 0.3, 0.63633329678497957414},
    {"PI_D1", 0.5, 1, 0.60130252046430809264},
    {"PI_D1", 0.5, 2.2, -0.16432104892858197079},
    {"PI_D1", 0.5, 5, -4.5686412162747889276},
    {"PI_D1", 1, 0.3, 0.14998101575848369901},
    {"PI_D1", 1, 1, 0.49219428050671777876},
    {"PI_D1", 1, 2.2, 0.70552656450635588145},
    {"PI_D1", 1, 5, -10.056405726135373624},
    {"PI_D1", 2.5, 0.3, 0.00011458966476184099515},
    {"PI_D1", 2.5, 1, 0.014118242507888658934},
    {"PI_D1", 2.5, 2.2, 0.31566482795551877122},
    {"PI_D1", 2.5, 5, -0.5525571941785964795},
    {"PI_D2", -0.4, 0.3, 32.769929895236272624},
    {"PI_D2", -0.4, 1, 0.53874065279755968581},
    {"PI_D2", -0.4, 2.2, -0.95053925544398148585},
    {"PI_D2", -0.4, 5, 14.749012786896541605},
    {"PI_D2", 0, 0.3, -0.033748338874529106228},
    {"PI_D2", 0, 1, -0.37272259731772778221},
    {"PI_D2", 0, 2.2, -1.5599397718480932723},
    {"PI_D2", 0, 5, 15.02344088197331397},
    {"PI_D2", 0.5, 0.3, -0.0038196302352611198912},
    {"PI_D2", 0.5, 1, -0.14106700329859622528},
    {"PI_D2", 0.5, 2.2, -1.406411288773144353},
    {"PI_D2", 0.5, 5, 7.1879366003403511683},
    {"PI_D2", 1, 0.3, 0.49968359775450846739},
    {"PI_D2", 1, 1, 0.46099851985148280766},
    {"PI_D2", 1, 2.2, -0.38176534590121407902},
    {"PI_D2", 1, 5, -3.6415831380959087642},
    {"PI_D2", 2.5, 0.3, 0.0015278369400242999881},
    {"PI_D2", 2.5, 1, 0.056357548251264271674},
    {"PI_D2", 2.5, 2.2, 0.54550721253082043151},
    {"PI_D2", 2.5, 5, -6.5248679673260353929},
    {"G", -0.4, 0.3, 0.29993915322552454498},
    {"G", -0.4, 1, 0.97498946233049415338},
    {"G", -0.4, 2.2, 0.94500053512487681199},
    {"G", -0.4, 5, -23.065586254269621421},
    {"G", 0, 0.3, 0.29997468766018044953},
    {"G", 0, 1, 0.98959147000866743924},
    {"G", 0, 2.2, 1.6729501095812311463},
    {"G", 0, 5, -13.245145192438757924},
    {"G", 0.5, 0.3, 0.29998842861876618695},
    {"G", 0.5, 1, 0.99524049994686177986},
    {"G", 0.5, 2.2, 1.9574841413667527302},
    {"G", 0.5, 5, -5.532621956568274456},
    {"G", 1, 0.3, 0.29999367189279783815},
    {"G", 1, 1, 0.99739673747377502617},
    {"G", 1, 2.2, 2.0668800993332084012},
    {"G", 1, 5, -1.4724103192697720433},
    {"G", 2.5, 0.3, 0.2999982467552697295},
    {"G", 2.5, 1, 0.99927860205155875176},
    {"G", 2.5, 2.2, 2.1629404522237700341},
    {"G", 2.5, 5, 2.9402358408691084083},
    {"H", -0.4, 0.3, 0.2977471915654611174},
    {"H", -0.4, 1, 0.97498946233049415338},
    {"H", -0.4, 2.2, 2.0791204054098965902},
    {"H", -0.4, 5, 4.3776860015271186711},
    {"H", 0, 0.3, 0.29906271971566354235},
    {"H", 0, 1, 0.98959147000866743924},
    {"H", 0, 2.2, 2.1496699554620919532},
    {"H", 0, 5, 4.740599745182962886},
    {"H", 0.5, 0.3, 0.29957149350411496337},
    {"H", 0.5, 1, 0.99524049994686177986},
    {"H", 0.5, 2.2, 2.1769779825396872241},
    {"H", 0.5, 5, 4.8812528227605320252},
    {"H", 1, 0.3, 0.29976564941338131116},
    {"H", 1, 1, 0.99739673747377502617},
    {"H", 1, 2.2, 2.18740545954630189},
    {"H", 1, 5, 4.9350088088481723427},
    {"H", 2.5, 0.3, 0.29993506771002865876},
    {"H", 2.5, 1, 0.99927860205155875176},
    {"H", 2.5, 2.2, 2.1965090307738746147},
    {"H", 2.5, 5, 4.9819753261846148538},
    {"V", -0.4, 0.3, 0.29973633258158221149},
    {"V", -0.4, 1, 0.89171940353639388655},
    {"V", -0.4, 2.2, -3.1206884095813521905},
    {"V", -0.4, 5, 26.721092883615126429},
    {"V", 0, 0.3, 0.29992406330090181862},
    {"V", 0, 1, 0.96879068068581807197},
    {"V", 0, 2.2, 0.63834796626819833526},
    {"V", 0, 5, -24.188566434442832347},
    {"V", 0.5, 0.3, 0.29997300017357119448},
    {"V", 0.5, 1, 0.98889770576286509638},
    {"V", 0.5, 2.2, 1.6379788644654414285},
    {"V", 0.5, 5, -14.231051976196441935},
    {"V", 1, 0.3, 0.29998734380339350106},
    {"V", 1, 1, 0.99479437900389932096},
    {"V", 1, 2.2, 1.9348470901497505297},
    {"V", 1, 5, -6.3774789326067685986},
    {"V", 2.5, 0.3, 0.29999724490229413235},
    {"V", 2.5, 1, 0.99886643337715717382},
    {"V", 2.5, 2.2, 2.1418343152468475163},
    {"V", 2.5, 5, 1.8713337324079509747},
    {"W", -0.4, 0.3, 0.29024048772644026632},
    {"W", -0.4, 1, 0.89171940353639388655},
    {"W", -0.4, 2.2, 1.6772356425249240582},
    {"W", -0.4, 5, 2.315584690292553154},
    {"W", 0, 0.3, 0.29718859855652015123},
    {"W", 0, 1, 0.96879068068581807197},
    {"W", 0, 2.2, 2.0491830476171674254},
    {"W", 0, 5, 4.2238303781952321324},
    {"W", 0.5, 0.3, 0.29900023808334542053},
    {"W", 0.5, 1, 0.98889770576286509638},
    {"W", 0.5, 2.2, 2.1463160855388098797},
    {"W", 0.5, 5, 4.7233235975814126828},
    {"W", 1, 0.3, 0.29953132323946275172},
    {"W", 1, 1, 0.99479437900389932096},
    {"W", 1, 2.2, 2.1748205433358210025},
    {"W", 1, 5, 4.8701305406680168801},
    {"W", 2.5, 0.3, 0.29989796513000199097},
    {"W", 2.5, 1, 0.99886643337715717382},
    {"W", 2.5, 2.2, 2.1945148164463795392},
    {"W", 2.5, 5, 4.9716828504098211861},
    {"G_D1", -0.4, 0.3, 0.99898589484264581595},
    {"G_D1", -0.4, 1, 0.87506539177757383319},
    {"G_D1", -0.4, 2.2, -1.7881028175102718141},
    {"G_D1", -0.4, 5, 7.3356857422384151999},
    {"G_D1", 0, 0.3, 0.99957812980541062568},
    {"G_D1", 0, 1, 0.9479898913629687047},
    {"G_D1", 0, 2.2, -0.18011553502037930717},
    {"G_D1", 0, 5, -7.0263975352893813541},
    {"G_D1", 0.5, 0.3, 0.99980714427727069852},
    {"G_D1", 0.5, 1, 0.97621211739487172943},
    {"G_D1", 0.5, 2.2, 0.4540765048467358296},
    {"G_D1", 0.5, 5, -6.3255824030905553788},
    {"G_D1", 1, 0.3, 0.99989453178393496586},
    {"G_D1", 1, 1, 0.98698730359427220534},
    {"G_D1", 1, 2.2, 0.69943093754517132507},
    {"G_D1", 1, 5, -4.2185369545235516529},
    {"G_D1", 2.5, 0.3, 0.99997077928146849816},
    {"G_D1", 2.5, 1, 0.99639342133074770618},
    {"G_D1", 2.5, 2.2, 0.91599886062968745908},
    {"G_D1", 2.5, 5, -0.90841578367179872533},
    {"H_D1", -0.4, 0.3, 0.98498393471251620692},
    {"H_D1", -0.4, 1, 0.95000844469226407333},
    {"H_D1", -0.4, 2.2, 0.89025226206563855936},
    {"H_D1", -0.4, 5, 0.75181112163134980319},
    {"H_D1", 0, 0.3, 0.99375219712030615596},
    {"H_D1", 0, 1, 0.9791910753472427556},
    {"H_D1", 0, 2.2, 0.95428477342710440423},
    {"H_D1", 0, 5, 0.89644301233781950184},
    {"H_D1", 0.5, 0.3, 0.99714350646179268746},
    {"H_D1", 0.5, 1, 0.99048340430886426725},
    {"H_D1", 0.5, 2.2, 0.97908252717683146174},
    {"H_D1", 0.5, 5, 0.95256118077523850369},
    {"H_D1", 1, 0.3, 0.99843774413154250573},
    {"H_D1", 1, 1, 0.99479437900389932096},
    {"H_D1", 1, 2.2, 0.98855479242537318294},
    {"H_D1", 1, 5, 0.97402610813360337603},
    {"H_D1", 2.5, 0.3, 0.99956712731660663375},
    {"H_D1", 2.5, 1, 0.99855730687135599037},
    {"H_D1", 2.5, 2.2, 0.99682688895489010574},
    {"H_D1", 2.5, 5, 0.99279269871574518706},
    {"V_D1", -0.4, 0.3, 0.99560560244731662944},
    {"V_D1", -0.4, 1, 0.45950212793823022138},
    {"V_D1", -0.4, 2.2, -10.602698267128024514},
    {"V_D1", -0.4, 5, 249.79948952845369488},
    {"V_D1", 0, 0.3, 0.99873439902703453603},
    {"V_D1", 0, 1, 0.8441160885015961937},
    {"V_D1", 0, 2.2, -2.4608592457269556842},
    {"V_D1", 0, 5, 18.168697951701621708},
    {"V_D1", 0.5, 0.3, 0.99955000520713271336},
    {"V_D1", 0.5, 1, 0.9445237904378483067},
    {"V_D1", 0.5, 2.2, -0.25811490007210104236},
    {"V_D1", 0.5, 5, -7.1764048409682073113},
    {"V_D1", 1, 0.3, 0.99978906410180431658},
    {"V_D1", 1, 1, 0.97398274302297179407},
    {"V_D1", 1, 2.2, 0.40329962176166954369},
    {"V_D1", 1, 5, -6.7696287943869451797},
    {"V_D1", 2.5, 0.3, 0.99995408176270149372},
    {"V_D1", 2.5, 1, 0.99433304773436311431},
    {"V_D1", 2.5, 2.2, 0.86828734809150860554},
    {"V_D1", 2.5, 5, -1.8095307178719009418},
    {"W_D1", -0.4, 0.3, 0.93495695869625277884},
    {"W_D1", -0.4, 1, 0.78366508463685297026},
    {"W_D1", -0.4, 2.2, 0.52585404066967675172},
    {"W_D1", -0.4, 5, -0.068123259606568802322},
    {"W_D1", 0, 0.3, 0.98126098531089900478},
    {"W_D1", 0, 1, 0.9376220326397626024},
    {"W_D1", 0, 2.2, 0.86309041921516325929},
    {"W_D1", 0, 5, 0.69054705036254104077},
    {"W_D1", 0.5, 0.3, 0.99333571412714593734},
    {"W_D1", 0.5, 1, 0.97780422693161089896},
    {"W_D1", 0.5, 2.2, 0.95123909091258408989},
    {"W_D1", 0.5, 5, 0.8895495306724194456},
    {"W_D1", 1, 0.3, 0.99687573238554514116},
    {"W_D1", 1, 1, 0.98959147000866743924},
    {"W_D1", 1, 2.2, 0.9771227070282236151},
    {"W_D1", 1, 5, 0.9481199490365925772},
    {"W_D1", 2.5, 0.3, 0.99931978735408835998},
    {"W_D1", 2.5, 1, 0.99773308696645865894},
    {"W_D1", 2.5, 2.2, 0.99501453517149709969},
    {"W_D1", 2.5, 5, 0.98867864285089273747},
    {"F", -0.4, 0.3, 0.29969588951359352805},
    {"F", -0.4, 1, 0.88104808056693229018},
    {"F", 0, 0.3, 0.29997468766018044953},
    {"F", 0, 1, 0.98959147000866743924},
    {"F", 0.5, 0.3, 0.29999421425359165764},
    {"F", 0.5, 1, 0.99761741160971212264},
    {"F", 1, 0.3, 0.29999789061610097937},
    {"F", 1, 1, 0.99913149173636150667},
    {"F", 2.5, 0.3, 0.29999970779183340907},
    {"F", 2.5, 1, 0.999879730852721979},
    {"U", -0.4, 0.3, 0.30032991046096971177},
    {"U", -0.4, 1, 1.1540237026062839115},
    {"U", 0.5, 0.3, 0.29997300017357119448},
    {"U", 0.5, 1, 0.98889770576286509638},
    {"U", 1, 0.3, 0.29999367183495396244},
    {"U", 1, 1, 0.99739379334538638433},
    {"U", 2.5, 0.3, 0.29999944897843466508},
    {"U", 2.5, 1, 0.99977318380759589832},
};

struct Rotated { const char* kind; double nu, r, value; };
inline constexpr Rotated kRotated[] = {
    {"F_BRANCH", -0.75, 0.5, -0.47789556629408135267},
    {"F_BRANCH", -0.75, 1, -0.17233530269625999653},
    {"F_BRANCH", -0.75, 2, 1.943833723833881877},
    {"F_BRANCH", -0.75, 4, 4.7674626742908151447},
    {"F_BRANCH", -0.9, 0.5, -0.73346567236539642369},
    {"F_BRANCH", -0.9, 1, 0.055191195070334373191},
    {"F_BRANCH", -0.9, 2, 2.5847518654087819216},
    {"F_BRANCH", -0.9, 4, 4.801486536782391626},
    {"F_BRANCH", -0.55, 0.5, -0.090248091260544234697},
    {"F_BRANCH", -0.55, 1, 0.050915136971372101174},
    {"F_BRANCH", -0.55, 2, 1.4949846435164203431},
    {"F_BRANCH", -0.55, 4, 4.7237985807523883221},
    {"U_BRANCH", -0.5, 0.5, -0.9587506765428085479},
    {"U_BRANCH", -0.5, 1, -0.42604425446154196698},
    {"U_BRANCH", -0.5, 2, 2.0476382280747779216},
    {"U_BRANCH", -0.5, 4, 4.6479131535991890947},
    {"U_BRANCH", -0.2, 0.5, -0.38647971530960395048},
    {"U_BRANCH", -0.2, 1, -0.19349929669134096232},
    {"U_BRANCH", -0.2, 2, 1.5328625322964479524},
    {"U_BRANCH", -0.2, 4, 4.6655036696672781495},
    {"U_BRANCH", -0.95, 0.5, 0.49334214697077113547},
    {"U_BRANCH", -0.95, 1, 1.9577126224142483722},
    {"U_BRANCH", -0.95, 2, 2.3770059633894354312},
    {"U_BRANCH", -0.95, 4, 4.6947135980468810508},
};

struct Zeros { const char* tag; double nu; double z[3]; };
inline constexpr Zeros kZeros[] = {
    {"J", -0.4, {1.7509753662088031733, 4.8785160495377742511, 8.016632183745435502}},
    {"J", 0, {2.4048255576957727686, 5.5200781102863106496, 8.653727912911012217}},
    {"J", 1, {3.8317059702075123156, 7.0155866698156187535, 10.173468135062722077}},
    {"J", 2.5, {5.7634591968945497914, 9.0950113304763551563, 12.322940970566582052}},
    {"GAMMA", -0.4, {2.5456897812618660288, 5.6643766609027353595, 8.8021874540722757962}},
    {"GAMMA", 0, {3.196220616582541094, 6.3064370476884237159, 9.4394991378764049051}},
    {"GAMMA", 1, {4.6108998790490558272, 7.7992738008112319025, 10.958067191919497804}},
    {"GAMMA", 2.5, {6.5299295819244756335, 9.8726177658181175356, 13.104075687269328311}},
    {"GAMMA_PRIME", -0.4, {1.175613658448740523, 4.7617678828007585991, 7.9496190144463626705}},
    {"GAMMA_PRIME", 0, {2.1079881249672164706, 5.4188347079883057306, 8.5920247747293096906}},
    {"GAMMA_PRIME", 1, {3.6744165680903392698, 6.9380209748445209522, 10.121536758377589539}},
    {"GAMMA_PRIME", 2.5, {5.6659080690515954662, 9.0363611672910774181, 12.280483693588429435}},
    {"T", 1, {2.8712237461653882808, 6.1454227060326020876, 9.3328028120169692194}},
    {"T", 2.5, {4.9080930902571403898, 8.2582776118834587987, 11.498295024373728941}},
    {"ZETA", -0.4, {1.6884313595541238703, 4.8575008897088764296, 8.0039811378558121256}},
    {"ZETA", 0, {2.1079881249672164706, 5.4188347079883057306, 8.5920247747293096906}},
    {"ZETA", 1, {2.9985199498473854288, 6.735701688540652962, 9.9986285828524906028}},
    {"ZETA", 2.5, {4.1610228331111206451, 8.5888669649439085456, 11.99841055547484387}},
    {"XI", -0.4, {2.1336062783719521962, 5.0910369323496427992, 8.1620266923869645314}},
    {"XI", 0, {2.6725513577442016911, 5.6690158423109323699, 8.7558915339814454073}},
    {"XI", 1, {3.8317059702075123156, 7.0155866698156187535, 10.173468135062722077}},
    {"XI", 2.5, {5.3739955722621489575, 8.8929554158196106925, 12.182982848560310519}},
    {"THETA_CAP", -0.4, {1.16721824362958522, 4.1790383262342036324, 7.2829918202243294915}},
    {"THETA_CAP", 0, {1.5966429547785754854, 4.7323667863089361309, 7.8677037392450714387}},
    {"THETA_CAP", 1, {2.5129851614878832094, 6.0380134529285146025, 9.2690249591818222402}},
    {"THETA_CAP", 2.5, {3.7060375779474237096, 7.883256195904764075, 11.265071959592113487}},
    {"OMEGA", -0.4, {1.4705368694536361246, 4.3860195221581226484, 7.4318971721399836337}},
    {"OMEGA", 0, {2.0163917607078555955, 4.9614202565507313315, 8.0240497608621727903}},
    {"OMEGA", 1, {3.196220616582541094, 6.3064370476884237159, 9.4394991378764049051}},
    {"OMEGA", 2.5, {4.7643466361945746227, 8.1846366519456972857, 11.448375497978288845}},
    {"CONVEX_G", -0.4, {1.1259641717721080199, 4.1600751821188836505, 7.2709382065250124733}},
    {"CONVEX_G", 0, {1.4033061086043747041, 4.6372856934316963485, 7.8080640943369496463}},
    {"CONVEX_G", 1, {1.9884677123515800175, 5.7510586601121887612, 9.0944997313044538337}},
    {"CONVEX_G", 2.5, {2.7468209090959502869, 7.3009228549378046782, 10.92774724634812629}},
    {"CONVEX_H", -0.4, {1.7898307236040424503, 4.5782068916040188446, 7.5688856759349437285}},
    {"CONVEX_H", 0, {2.2382832622362446696, 5.0974267181134358704, 8.1209340840121277732}},
    {"CONVEX_H", 1, {3.196220616582541094, 6.3064370476884237159, 9.4394991378764049051}},
    {"CONVEX_H", 2.5, {4.4576516492873031817, 7.9882114382322284079, 11.310444600104573758}},
    {"CONVEX_V", -0.4, {0.77969036073464099738, 3.5828011533693541296, 6.6140317402936556625}},
    {"CONVEX_V", 0, {1.0651069692878634031, 4.0536035058489228627, 7.1467957019891152128}},
    {"CONVEX_V", 1, {1.6702160110152917529, 5.1616143082129414952, 8.425762666611496015}},
    {"CONVEX_V", 2.5, {2.4511274408992319409, 6.7137318274365899084, 10.252504771400081641}},
    {"CONVEX_W", -0.4, {1.2354155348980056792, 3.9458227395721717104, 6.8912138169259306281}},
    {"CONVEX_W", 0, {1.69200791958413471, 4.4618677575457945116, 7.4408442198531654835}},
    {"CONVEX_W", 1, {2.6725513577442016911, 5.6690158423109323699, 8.7558915339814454073}},
    {"CONVEX_W", 2.5, {3.961712962757613519, 7.3533337141144990342, 10.624758915992863165}},
};

struct Radius { const char* kind; const char* mode; double nu, alpha, radius; };
inline constexpr Radius kRadii[] = {
    {"F", "starlike", -0.4, 0, 1.175613658448740523},
    {"F", "starlike", -0.4, 0.5, 0.99401368016358961748},
    {"F", "starlike", 0, 0, 2.1079881249672164706},
    {"F", "starlike", 0, 0.5, 1.8144846969537102657},
    {"F", "starlike", 1, 0, 3.6744165680903392698},
    {"F", "starlike", 1, 0.5, 3.2543204990472559111},
    {"F", "starlike", 2.5, 0, 5.6659080690515954662},
    {"F", "starlike", 2.5, 0.5, 5.1407271827766714616},
    {"G", "starlike", -0.4, 0, 1.6884313595541238703},
    {"G", "starlike", -0.4, 0.5, 1.4550184857677660256},
    {"G", "starlike", 0, 0, 2.1079881249672164706},
    {"G", "starlike", 0, 0.5, 1.8144846969537102657},
    {"G", "starlike", 1, 0, 2.9985199498473854288},
    {"G", "starlike", 1, 0.5, 2.5744037050210140036},
    {"G", "starlike", 2.5, 0, 4.1610228331111206451},
    {"G", "starlike", 2.5, 0.5, 3.56148302265919452},
    {"H", "starlike", -0.4, 0, 20.723214514127839062},
    {"H", "starlike", -0.4, 0.5, 13.678247554399598819},
    {"H", "starlike", 0, 0, 51.015745654408834225},
    {"H", "starlike", 0, 0.5, 33.445239882024727349},
    {"H", "starlike", 1, 0, 215.56026193618788649},
    {"H", "starlike", 1, 0.5, 138.97631172769068156},
    {"H", "starlike", 2.5, 0, 834.04448903108107434},
    {"H", "starlike", 2.5, 0.5, 525.27772748983116026},
    {"U", "starlike", 1, 0, 2.8712237461653882808},
    {"U", "starlike", 1, 0.5, 2.5129851614878832094},
    {"U", "starlike", 2.5, 0, 4.9080930902571403898},
    {"U", "starlike", 2.5, 0.5, 4.4269523001838495103},
    {"V", "starlike", -0.4, 0, 1.16721824362958522},
    {"V", "starlike", -0.4, 0.5, 1.0069680016314757333},
    {"V", "starlike", 0, 0, 1.5966429547785754854},
    {"V", "starlike", 0, 0.5, 1.3762199197381247826},
    {"V", "starlike", 1, 0, 2.5129851614878832094},
    {"V", "starlike", 1, 0.5, 2.1607723096620662449},
    {"V", "starlike", 2.5, 0, 3.7060375779474237096},
    {"V", "starlike", 2.5, 0.5, 3.1761495295638093147},
    {"W", "starlike", -0.4, 0, 4.6763140605816683074},
    {"W", "starlike", -0.4, 0.5, 3.1054947715192803769},
    {"W", "starlike", 0, 0, 16.531020204897839376},
    {"W", "starlike", 0, 0.5, 10.924757346791341196},
    {"W", "starlike", 1, 0, 104.36310555884430692},
    {"W", "starlike", 1, 0.5, 67.962312604875130759},
    {"W", "starlike", 2.5, 0, 515.24454969202419127},
    {"W", "starlike", 2.5, 0.5, 327.86139208630531672},
    {"F", "convex", -0.4, 0, 0.76254870527313032153},
    {"F", "convex", -0.4, 0.5, 0.65430946521559612697},
    {"F", "convex", 0, 0, 1.4033061086043747041},
    {"F", "convex", 0, 0.5, 1.2102769308184017261},
    {"F", "convex", 1, 0, 2.5549712388284448412},
    {"F", "convex", 1, 0.5, 2.2239601807527782747},
    {"F", "convex", 2.5, 0, 4.0975938383590888952},
    {"F", "convex", 2.5, 0.5, 3.5982318324088869285},
    {"G", "convex", -0.4, 0, 1.1259641717721080199},
    {"G", "convex", -0.4, 0.5, 0.9714631258422487331},
    {"G", "convex", 0, 0, 1.4033061086043747041},
    {"G", "convex", 0, 0.5, 1.2102769308184017261},
    {"G", "convex", 1, 0, 1.9884677123515800175},
    {"G", "convex", 1, 0.5, 1.7135171068159156006},
    {"G", "convex", 2.5, 0, 2.7468209090959502869},
    {"G", "convex", 2.5, 0.5, 2.3647733697267727859},
    {"H", "convex", -0.4, 0, 10.262373930774478558},
    {"H", "convex", -0.4, 0.5, 6.7916324588439135218},
    {"H", "convex", 0, 0, 25.099217867060082973},
    {"H", "convex", 0, 0.5, 16.531020204897839376},
    {"H", "convex", 1, 0, 104.36310555884430692},
    {"H", "convex", 1, 0.5, 67.962312604875130759},
    {"H", "convex", 2.5, 0, 394.84305835015216199},
    {"H", "convex", 2.5, 0.5, 253.35647569934789065},
    {"U", "convex", 1, 0, 1.9600459049480781023},
    {"U", "convex", 1, 0.5, 1.6993541913644080622},
    {"U", "convex", 2.5, 0, 3.5151009452472399018},
    {"U", "convex", 2.5, 0.5, 3.080206245097887185},
    {"V", "convex", -0.4, 0, 0.77969036073464099738},
    {"V", "convex", -0.4, 0.5, 0.67296204088662092183},
    {"V", "convex", 0, 0, 1.0651069692878634031},
    {"V", "convex", 0, 0.5, 0.91902574249235437537},
    {"V", "convex", 1, 0, 1.6702160110152917529},
    {"V", "convex", 1, 0.5, 1.4399619582681367785},
    {"V", "convex", 2.5, 0, 2.4511274408992319409},
    {"V", "convex", 2.5, 0.5, 2.1110276688795077046},
    {"W", "convex", -0.4, 0, 2.3294437751573945792},
    {"W", "convex", -0.4, 0.5, 1.5484975437850382153},
    {"W", "convex", 0, 0, 8.1961437323549358529},
    {"W", "convex", 0, 0.5, 5.4290544603812135271},
    {"W", "convex", 1, 0, 51.015745654408834225},
    {"W", "convex", 1, 0.5, 33.445239882024727349},
    {"W", "convex", 2.5, 0, 246.33834875021673177},
    {"W", "convex", 2.5, 0.5, 159.07288087882004102},
};

inline constexpr Radius kRotatedRadii[] = {
    {"F", "starlike", -0.75, 0, 1.1241975512497428027},
    {"F", "starlike", -0.75, 0.5, 0.92995492198228281508},
    {"F", "starlike", -0.6, 0, 1.0305447265939784169},
    {"F", "starlike", -0.6, 0.5, 0.8613568966966679111},
    {"U", "starlike", -0.5, 0, 1.1859585946464030463},
    {"U", "starlike", -0.5, 0.5, 0.96115043990862654093},
    {"U", "starlike", -0.9, 0, 0.61574207543310594767},
    {"U", "starlike", -0.9, 0.5, 0.47538225077975061233},
};

struct Threshold { const char* kind; const char* mode; double alpha, nu; };
inline constexpr Threshold kThresholds[] = {
    {"F", "starlike", 0, -0.44226584333242292256},
    {"F", "starlike", 0.25, -0.42644199196720877929},
    {"F", "starlike", 0.5, -0.39805668580719783244},
    {"F", "starlike", 0.75, -0.32960444062997634757},
    {"G", "starlike", 0, -0.87056590290739982595},
    {"G", "starlike", 0.25, -0.84216583951322950498},
    {"G", "starlike", 0.5, -0.79032188221233159287},
    {"G", "starlike", 0.75, -0.6615814853915220056},
    {"H", "starlike", 0, -0.94273594324294593848},
    {"H", "starlike", 0.25, -0.93402525452272438157},
    {"H", "starlike", 0.5, -0.91718069119679765498},
    {"H", "starlike", 0.75, -0.87056590290739982595},
    {"U", "starlike", 0, 0.055919906501022648817},
    {"U", "starlike", 0.25, 0.071749801323219049491},
    {"U", "starlike", 0.5, 0.10050828978392342016},
    {"U", "starlike", 0.75, 0.17113115376903234498},
    {"V", "starlike", 0, -0.5386182542574043903},
    {"V", "starlike", 0.25, -0.48923868065918028595},
    {"V", "starlike", 0.5, -0.40696113835191359794},
    {"V", "starlike", 0.75, -0.22711759231790964509},
    {"W", "starlike", 0, -0.69163188183142721659},
    {"W", "starlike", 0.25, -0.66969307463660855114},
    {"W", "starlike", 0.5, -0.63082342250809181706},
    {"W", "starlike", 0.75, -0.5386182542574043903},
    {"G", "convex", 0, -0.55821323152198846069},
    {"G", "convex", 0.25, -0.48357614539333145781},
    {"G", "convex", 0.5, -0.35565262700172047102},
    {"G", "convex", 0.75, -0.066273920654679615344},
    {"G", "convex", 0.9, 0.48092485391124223558},
    {"H", "convex", 0, -0.89330511935490286334},
    {"H", "convex", 0.25, -0.87810391926502228355},
    {"H", "convex", 0.5, -0.84926621585362304434},
    {"H", "convex", 0.75, -0.77255409620306588777},
    {"H", "convex", 0.9, -0.59486596392663738949},
    {"V", "convex", 0, -0.09618924513542974704},
    {"V", "convex", 0.25, -0.0059137427959457653503},
    {"V", "convex", 0.5, 0.1433350281948594876},
    {"V", "convex", 0.75, 0.46573198181597524543},
    {"V", "convex", 0.9, 1.0483244815546737846},
    {"W", "convex", 0, -0.58145382643057884695},
    {"W", "convex", 0.25, -0.55247467341951393362},
    {"W", "convex", 0.5, -0.50127925238852127235},
    {"W", "convex", 0.75, -0.38048510025964132994},
    {"W", "convex", 0.9, -0.14169272850087212328},
};

inline constexpr double kNuCirc = -0.77456451284396215182;
inline constexpr double kNuStar = -0.9701751844061891698;
inline constexpr double kUnderlineNu = -0.60946307779342258517;

struct Ratio { const char* kind; double nu, value; };
inline constexpr Ratio kConvexityRatios[] = {
    {"G", -0.5, 0.20418643130086265761},
    {"G", 0, 0.78085461921534128785},
    {"G", 1, 0.94729593572706670925},
    {"G", 2.5, 0.98552518024915318094},
    {"H", -0.5, 0.92886482153903731752},
    {"H", 0, 0.97877378391508579994},
    {"H", 1, 0.99476986490369836745},
    {"H", 2.5, 0.99855553124127691928},
    {"V", -0.5, -18.412907876492207899},
    {"V", 0, 0.26304949027755058244},
    {"V", 1, 0.89325128459944372137},
    {"V", 2.5, 0.97721097383245231628},
    {"W", -0.5, 0.50445353112675998169},
    {"W", 0, 0.93360227232005941143},
    {"W", 1, 0.98949021391490612717},
    {"W", 2.5, 0.99772859850707265151},
};

struct Underline { double nu, value; };
inline constexpr Underline kUnderline[] = {
    {-0.7, 2.5527343190427550853},
    {-0.6, -0.085344519199413177449},
    {-0.5, -0.56346172983147372478},
    {0, -0.9347033839446009481},
    {1, -0.98951782720283883308},
};

struct ShiftedSum { const char* tag; double nu, value; };
inline constexpr ShiftedSum kShiftedSums[] = {
    {"J", -0.49, 0.18827765243302818342},
    {"J", 0, 0.032172737276942863363},
    {"J", 1, 0.0052301350963016325469},
    {"GAMMA", -0.49, 0.033325607845556888156},
    {"GAMMA", 0, 0.010509786085093872831},
    {"GAMMA", 1, 0.0026091507743117418402},
};

struct RootCount { const char* family; int nu_num, nu_den, n, positive, nonpositive; };
inline constexpr RootCount kJensenRootCounts[] = {
    {"PHI", 0, 1, 1, 1, 0},
    {"PHI", 0, 1, 2, 2, 0},
    {"PHI", 0, 1, 5, 5, 0},
    {"PHI", 0, 1, 9, 9, 0},
    {"PHI", 1, 2, 1, 1, 0},
    {"PHI", 1, 2, 2, 2, 0},
    {"PHI", 1, 2, 5, 5, 0},
    {"PHI", 1, 2, 9, 9, 0},
    {"PHI", -3, 4, 1, 1, 0},
    {"PHI", -3, 4, 2, 2, 0},
    {"PHI", -3, 4, 5, 5, 0},
    {"PHI", -3, 4, 9, 9, 0},
    {"PHI", 1, 3, 1, 1, 0},
    {"PHI", 1, 3, 2, 2, 0},
    {"PHI", 1, 3, 5, 5, 0},
    {"PHI", 1, 3, 9, 9, 0},
    {"PI", 0, 1, 1, 1, 0},
    {"PI", 0, 1, 2, 2, 0},
    {"PI", 0, 1, 5, 5, 0},
    {"PI", 0, 1, 9, 9, 0},
    {"PI", 1, 2, 1, 1, 0},
    {"PI", 1, 2, 2, 2, 0},
    {"PI", 1, 2, 5, 5, 0},
    {"PI", 1, 2, 9, 9, 0},
    {"PI", -3, 4, 1, 1, 0},
    {"PI", -3, 4, 2, 2, 0},
    {"PI", -3, 4, 5, 5, 0},
    {"PI", -3, 4, 9, 9, 0},
    {"PI", 1, 3, 1, 1, 0},
    {"PI", 1, 3, 2, 2, 0},
    {"PI", 1, 3, 5, 5, 0},
    {"PI", 1, 3, 9, 9, 0},
};

struct JensenCoefficients { const char* family; int nu_num, nu_den, n; const char* coefficients[6]; };
inline constexpr JensenCoefficients kJensenCoefficients[] = {
    {"PHI", 1, 3, 5, {"1", "-27/56", "729/40768", "-19683/170410240", "531441/3101466368000", "-14348907/261515644149760000"}},
    {"PI", -3, 4, 5, {"1", "-64", "8192/585", "-524288/1879605", "16777216/17715277125", "-1073741824/1838580036418125"}},
};

}  // namespace oracle
